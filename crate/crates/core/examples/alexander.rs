//! Alexander polynomials of the cyclic branched covers along the unknotted
//! component.

use ntrace::alexander::{cover_table, torres_check};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let delta = FixtureRegistry::new().poly("alexander")?;
    for c in cover_table(&delta, &[2, 3, 5, 7, 9])? {
        println!("{}", c.line());
        println!("  {}", c.poly);
    }
    let t = torres_check(&delta)?;
    println!("Delta(1, v) = {}", t.at_one);
    Ok(())
}
