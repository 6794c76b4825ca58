//! Newton polygons of S(X^m, Y): stretching X scales the polygon, so the
//! vertex (0,1) and the vertex gcd survive for every m.

use ntrace::arith::stretch;
use ntrace::irred::newton_polygon;
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let s = FixtureRegistry::new().poly("S")?;
    for m in [1, 2, 7, 24] {
        let np = newton_polygon(&stretch(&s, "X", m)?)?;
        println!(
            "m={m:>2} gcd={} vertices={:?}",
            np.vertex_gcd(),
            np.vertices()
        );
    }
    Ok(())
}
