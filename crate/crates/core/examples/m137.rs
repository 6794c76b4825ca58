//! The relator of m137 under exact matrices over the Gaussian rationals, and the
//! polynomial identities behind its trace component.

use ntrace::certify::m137_checks;
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    print!("{}", m137_checks(&FixtureRegistry::new())?);
    Ok(())
}
