//! Trace polynomials of words, and the meridian trace Q derived from the
//! bundled presentation.

use ntrace::arith::print_fixture;
use ntrace::words::{derive_meridian_trace, parse_word, trace_poly_with_budget};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    for w in ["ab", "abAB", "aabb", "abbbaBAbaabAB"] {
        println!("tr({w}) = {}", trace_poly_with_budget(&parse_word(w)?, 16)?);
    }
    let reg = FixtureRegistry::new();
    let pres = reg.presentation("L11n106")?;
    let q = derive_meridian_trace(pres.word("m0")?)?;
    let same = print_fixture(&q) == print_fixture(&reg.poly("Q")?);
    println!("Q has {} terms, fixture match: {same}", q.len());
    Ok(())
}
