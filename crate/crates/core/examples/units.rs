//! Which shifts of 2cos(2pi/d) are units, and what that says about m137.

use ntrace::cyclo::{cyclotomic, m137_unit_report, unit_2cos_shift};

fn main() -> ntrace::Result<()> {
    println!("Phi_15 = {}", cyclotomic(15)?);
    for d in [7, 9, 15, 21, 25] {
        let u = unit_2cos_shift(d, 2)?;
        println!("{}: norm {} unit {}", u.expression, u.norm, u.is_unit);
    }
    for d in [9, 10, 14] {
        println!("{}", m137_unit_report(d)?.line());
    }
    Ok(())
}
