//! Rewrites a polynomial fixture in canonical term-line form.
//!
//! ```text
//! cargo run --example canonicalize -- fixtures/eliminant_R.poly
//! ```

use ntrace::arith::{parse_fixture, print_fixture, Integers};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for path in std::env::args().skip(1) {
        let text = std::fs::read_to_string(&path)?;
        let p = parse_fixture(&text, Integers)?;
        std::fs::write(&path, print_fixture(&p))?;
        println!("{path}: {} terms", p.len());
    }
    Ok(())
}
