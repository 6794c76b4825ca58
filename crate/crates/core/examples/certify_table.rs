//! Re-derives the specialization certificates for S(X^m, Y), m = 1..24,
//! and upgrades each to absolute irreducibility through its Newton polygon.

use ntrace::irred::{dzannier_driver, IrreducibilityTable};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let reg = FixtureRegistry::new();
    let table = IrreducibilityTable::parse(reg.text("table")?)?;
    let report = dzannier_driver(&reg.poly("S")?, "S", 24, Some(&table))?;
    print!("{report}");
    Ok(())
}
