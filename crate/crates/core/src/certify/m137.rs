use std::fmt;

use crate::arith::{
    parse_elem, parse_poly, CoefficientDomain, Integers, MultiPoly, QuadraticField,
};
use crate::error::{Error, Result};
use crate::fixtures::FixtureRegistry;
use crate::words::{eval_word, Mat2};

/// Exact generator images over a quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFixture {
    pub field: QuadraticField,
    pub images: Vec<(char, Mat2<QuadraticField>)>,
}

/// Reads `matrices v1` text: a `domain: Quad:D` line, then one line per
/// generator, `a: e11 ; e12 ; e21 ; e22`.
pub fn parse_matrices(text: &str) -> Result<MatrixFixture> {
    let bad = |m: String| Error::fixture("matrices", m);
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    if lines.next() != Some("matrices v1") {
        return Err(bad("first line must be `matrices v1`".into()));
    }
    let domain: CoefficientDomain = lines
        .next()
        .and_then(|l| l.strip_prefix("domain:"))
        .ok_or_else(|| bad("expected a `domain:` line".into()))?
        .parse()?;
    let CoefficientDomain::QuadraticField(d) = domain else {
        return Err(bad(format!(
            "matrices need a quadratic field, got {domain}"
        )));
    };
    let field = QuadraticField::new(d)?;
    let none: [&str; 0] = [];
    let mut images = Vec::new();
    for line in lines {
        let (name, body) = line
            .split_once(':')
            .ok_or_else(|| bad(format!("expected `g: e11 ; e12 ; e21 ; e22`, got `{line}`")))?;
        let mut chars = name.trim().chars();
        let (Some(g), None) = (chars.next(), chars.next()) else {
            return Err(bad(format!("generator name `{name}` must be one letter")));
        };
        let entries: Vec<MultiPoly<QuadraticField>> = body
            .split(';')
            .map(|e| {
                let c = parse_elem(e.trim(), &field)?;
                Ok(MultiPoly::constant(field, &none, c))
            })
            .collect::<Result<_>>()?;
        let [a, b, c, e]: [MultiPoly<QuadraticField>; 4] = entries
            .try_into()
            .map_err(|_| bad(format!("generator `{g}` needs four entries")))?;
        images.push((g, Mat2::new(a, b, c, e)));
    }
    Ok(MatrixFixture { field, images })
}

/// The exact identities behind the census-manifold discussion.
#[derive(Clone, Debug, PartialEq)]
pub struct M137Report {
    /// `(s+1)^2 (s-2) = -2 - 3s + s^3`.
    pub first_factorization: bool,
    /// `(s+1)(s+2)(s-2) = sign * (4 + 4s - s^2 - s^3)`, if either sign works.
    pub second_sign: Option<i32>,
    /// The bundled component equals `(-2-3s+s^3) t^4 + (4+4s-s^2-s^3) t^2 - 1`.
    pub component_matches: bool,
    pub relator: String,
    /// `Some(1)` for `I`, `Some(-1)` for `-I`, `None` otherwise.
    pub relator_sign: Option<i32>,
}

impl M137Report {
    pub fn passed(&self) -> bool {
        self.first_factorization
            && self.second_sign.is_some()
            && self.component_matches
            && self.relator_sign.is_some()
    }

    pub fn lines(&self) -> Vec<String> {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let sign = |s: Option<i32>| s.map_or("none".to_string(), |s| s.to_string());
        vec![
            format!(
                "M137 (s+1)^2*(s-2) = s^3 - 3*s - 2: {}",
                yn(self.first_factorization)
            ),
            format!(
                "M137 (s+1)*(s+2)*(s-2) = sign * (4 + 4*s - s^2 - s^3): sign={}",
                sign(self.second_sign)
            ),
            format!(
                "M137 component fixture matches display: {}",
                yn(self.component_matches)
            ),
            format!(
                "M137 relator {} = sign * I: sign={}",
                self.relator,
                sign(self.relator_sign)
            ),
        ]
    }
}

impl fmt::Display for M137Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.lines() {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn m137_checks(registry: &FixtureRegistry) -> Result<M137Report> {
    let s = |t: &str| parse_poly(t, &["s"], Integers);
    let first_factorization = s("(s + 1)^2*(s - 2)")? == s("-2 - 3*s + s^3")?;
    let lhs = s("(s + 1)*(s + 2)*(s - 2)")?;
    let rhs = s("4 + 4*s - s^2 - s^3")?;
    let second_sign = if lhs == rhs {
        Some(1)
    } else if lhs == -&rhs {
        Some(-1)
    } else {
        None
    };
    let display = parse_poly(
        "(-2 - 3*s + s^3)*t^4 + (4 + 4*s - s^2 - s^3)*t^2 - 1",
        &["s", "t"],
        Integers,
    )?;
    let component_matches = registry.poly("m137_P")? == display;
    let pres = registry.presentation("m137")?;
    let relator = pres
        .relators
        .first()
        .ok_or_else(|| Error::fixture("m137", "no relator"))?
        .clone();
    let mats = parse_matrices(registry.text("m137_matrices")?)
        .map_err(|e| Error::fixture("m137_matrices", e.to_string()))?;
    let image = eval_word(&relator, &mats.images)?;
    let relator_sign = if image.is_identity() {
        Some(1)
    } else if image.is_plus_minus_identity() {
        Some(-1)
    } else {
        None
    };
    Ok(M137Report {
        first_factorization,
        second_sign,
        component_matches,
        relator: relator.to_string(),
        relator_sign,
    })
}
