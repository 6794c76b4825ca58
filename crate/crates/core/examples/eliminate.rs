//! Eliminates X from the character curve P and the meridian condition Q,
//! then strips the known factor R.

use ntrace::elim::{divides, resultant};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let reg = FixtureRegistry::new();
    let res = resultant(&reg.poly("P")?, &reg.poly("Q")?, "X")?;
    println!(
        "resultant: {} terms in [{}]",
        res.len(),
        res.vars().join(" ")
    );
    match divides(&reg.poly("R")?, &res)?.quotient() {
        Some(c) => println!("R divides it, cofactor {c}"),
        None => println!("R does not divide it"),
    }
    Ok(())
}
