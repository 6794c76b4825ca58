//! Minimal polynomials and certifying primes of elements of Q(sqrt(-7)).
//!
//! ```text
//! cargo run --example integrality -- "(17+3*sqrt(-7))/8" "(1+sqrt(-7))/2"
//! ```

use ntrace::arith::{parse_elem, QuadraticField};
use ntrace::certify::integrality;

fn main() -> ntrace::Result<()> {
    let k = QuadraticField::new(-7)?;
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["(17+3*sqrt(-7))/8".into(), "(1+sqrt(-7))/2".into()];
    }
    for a in &args {
        println!("{}", integrality(&k, &parse_elem(a, &k)?).line());
    }
    Ok(())
}
