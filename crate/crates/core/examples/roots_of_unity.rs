//! Searches for primes p = 1 mod d at which S(zeta_d, Y) stays irreducible.

use ntrace::irred::{certify_root_of_unity_specialization, DEFAULT_PRIME_BUDGET};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let s = FixtureRegistry::new().poly("S")?;
    for d in [3, 5, 7, 9, 11, 13] {
        let c = certify_root_of_unity_specialization(&s, "S", d, DEFAULT_PRIME_BUDGET)?;
        println!("{}", c.line());
    }
    Ok(())
}
