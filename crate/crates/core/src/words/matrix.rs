use crate::arith::{Integers, LaurentPoly, MultiPoly, Ring};
use crate::error::{Error, Result};

use super::symmetrize::symmetrize;
use super::GroupWord;

/// A 2x2 matrix with polynomial entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<R: Ring> {
    pub e: [[MultiPoly<R>; 2]; 2],
}

/// The parametrized image of a word: Laurent entries in `(x, y)`.
pub type ParamMatrix = Mat2<Integers>;

impl<R: Ring> Mat2<R> {
    pub fn new(a: MultiPoly<R>, b: MultiPoly<R>, c: MultiPoly<R>, d: MultiPoly<R>) -> Self {
        Mat2 {
            e: [[a, b], [c, d]],
        }
    }

    pub fn identity_like(template: &MultiPoly<R>) -> Self {
        let one = template.constant_like(template.ring().one());
        let zero = template.zero_like();
        Mat2::new(one.clone(), zero.clone(), zero, one)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [[a, b], [c, d]] = &self.e;
        let [[p, q], [r, s]] = &o.e;
        Mat2::new(
            &(a * p) + &(b * r),
            &(a * q) + &(b * s),
            &(c * p) + &(d * r),
            &(c * q) + &(d * s),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let f = |i: usize, j: usize| &self.e[i][j] - &o.e[i][j];
        Mat2::new(f(0, 0), f(0, 1), f(1, 0), f(1, 1))
    }

    pub fn det(&self) -> MultiPoly<R> {
        let [[a, b], [c, d]] = &self.e;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> MultiPoly<R> {
        &self.e[0][0] + &self.e[1][1]
    }

    /// The adjugate, which is the inverse for determinant one.
    pub fn adjugate(&self) -> Self {
        let [[a, b], [c, d]] = &self.e;
        Mat2::new(d.clone(), -b, -c, a.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity_like(&self.e[0][0])
    }

    /// True for `I` or `-I`.
    pub fn is_plus_minus_identity(&self) -> bool {
        let id = Self::identity_like(&self.e[0][0]);
        let neg = Mat2::new(
            -&id.e[0][0],
            id.e[0][1].clone(),
            id.e[1][0].clone(),
            -&id.e[1][1],
        );
        *self == id || *self == neg
    }
}

/// Multiplies generator images along the freely reduced word, left to
/// right. Inverses are adjugates, so each image must have determinant one.
pub fn eval_word<R: Ring>(w: &GroupWord, images: &[(char, Mat2<R>)]) -> Result<Mat2<R>> {
    let template = images
        .first()
        .map(|(_, m)| m.e[0][0].clone())
        .ok_or_else(|| Error::InvalidArgument("no generator images".into()))?;
    let mut inverses = Vec::with_capacity(images.len());
    for (g, m) in images {
        if !m.det().is_one_poly() {
            return Err(Error::Precondition(format!(
                "image of `{g}` does not have determinant 1"
            )));
        }
        inverses.push((g.to_ascii_uppercase(), m.adjugate()));
    }
    let mut acc = Mat2::identity_like(&template);
    for &c in w.free_reduce().letters() {
        let m = images
            .iter()
            .chain(inverses.iter())
            .find(|(g, _)| *g == c)
            .map(|(_, m)| m)
            .ok_or(Error::UndeclaredLetter(c))?;
        acc = acc.mul(m);
    }
    Ok(acc)
}

trait IsOnePoly {
    fn is_one_poly(&self) -> bool;
}

impl<R: Ring> IsOnePoly for MultiPoly<R> {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.ring().is_one(&self.constant_term())
    }
}

fn laurent(text: &str) -> LaurentPoly<Integers> {
    crate::arith::parse_laurent(text, &["x", "y"], Integers).expect("generator entry")
}

/// Images of `a` and `b`: `a = [[x, 1], [0, 1/x]]`,
/// `b = [[y, 0], [-x*y - 2 - 1/(x*y), 1/y]]`. With these, `ba` has trace -2.
pub fn generator_images() -> [(char, ParamMatrix); 2] {
    [
        (
            'a',
            Mat2::new(laurent("x"), laurent("1"), laurent("0"), laurent("x^-1")),
        ),
        (
            'b',
            Mat2::new(
                laurent("y"),
                laurent("0"),
                laurent("-x*y - 2 - x^-1*y^-1"),
                laurent("y^-1"),
            ),
        ),
    ]
}

/// Parametrized image of a word over `{a, b}`.
pub fn rep_matrix(w: &GroupWord) -> Result<ParamMatrix> {
    eval_word(w, &generator_images())
}

/// Trace of the parametrized image, a Laurent polynomial in `(x, y)`.
pub fn word_trace(w: &GroupWord) -> Result<LaurentPoly<Integers>> {
    Ok(rep_matrix(w)?.trace())
}

/// `symmetrize(trace(rep_matrix(w))) - t` over `(t, X, Y)`.
pub fn derive_meridian_trace(w: &GroupWord) -> Result<MultiPoly<Integers>> {
    let g = symmetrize(&word_trace(w)?)?;
    let g = g.with_vars(&["t", "X", "Y"])?;
    let t = MultiPoly::var(Integers, &["t", "X", "Y"], "t")?;
    Ok(&g - &t)
}

/// Entries of `rep(w1 w2) - rep(w3 w4)^-1`, each multiplied by the
/// monomial that clears its negative exponents.
pub fn relation_entries(parts: [&GroupWord; 4]) -> Result<[MultiPoly<Integers>; 4]> {
    let lhs = rep_matrix(&parts[0].concat(parts[1]))?;
    let rhs = rep_matrix(&parts[2].concat(parts[3]))?.adjugate();
    let d = lhs.sub(&rhs);
    let [[a, b], [c, e]] = d.e;
    Ok([a, b, c, e].map(|p| p.clear_denominators().1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    #[test]
    fn empty_word_is_identity() {
        assert!(rep_matrix(&GroupWord::empty()).unwrap().is_identity());
    }

    #[test]
    fn ba_is_parabolic() {
        let t = word_trace(&parse_word("ba").unwrap()).unwrap();
        assert_eq!(t.to_string(), "-2");
    }

    #[test]
    fn determinant_is_one() {
        let w = parse_word("abbbaBAbaabAB").unwrap();
        assert!(rep_matrix(&w).unwrap().det().is_one_poly());
    }

    #[test]
    fn meridian_of_generator() {
        let q = derive_meridian_trace(&parse_word("a").unwrap()).unwrap();
        assert_eq!(q.to_string(), "-t + X");
        let q = derive_meridian_trace(&parse_word("ba").unwrap()).unwrap();
        assert_eq!(q.to_string(), "-t - 2");
    }
}
