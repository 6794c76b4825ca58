//! Bundled golden data, addressable by name, with optional overrides.

use std::collections::BTreeMap;
use std::path::Path;

use crate::arith::{parse_fixture, print_fixture, Integers, MultiPoly};
use crate::error::{Error, Result};
use crate::words::{parse_presentation, Presentation};

/// What a bundled fixture holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Poly,
    Presentation,
    Matrices,
    Table,
    Knots,
}

#[derive(Clone, Copy, Debug)]
pub struct FixtureInfo {
    pub name: &'static str,
    pub file: &'static str,
    pub kind: FixtureKind,
    pub description: &'static str,
    text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $file:literal, $kind:ident, $desc:literal) => {
        FixtureInfo {
            name: $name,
            file: $file,
            kind: FixtureKind::$kind,
            description: $desc,
            text: include_str!(concat!("../fixtures/", $file)),
        }
    };
}

pub const BUNDLED: &[FixtureInfo] = &[
    fixture!("L11n106", "L11n106.pres", Presentation,
        "two-generator presentation of the link group with meridian words and the relator split w1..w4"),
    fixture!("P", "character_curve_P.poly", Poly,
        "component of the character curve with ba parabolic, in X = tr a, Y = tr b"),
    fixture!("Q", "meridian_trace_Q.poly", Poly,
        "trace of the knotted component's meridian, as Q(t, X, Y) = 0"),
    fixture!("R", "eliminant_R.poly", Poly,
        "eliminant of X from P and Q"),
    fixture!("S", "reciprocal_S.poly", Poly,
        "reciprocal lift X^8 R(X + 1/X, Y)"),
    fixture!("R1", "eliminant_R1.poly", Poly,
        "eliminant for the companion link, leading Y-term t^3 Y^18"),
    fixture!("alexander", "alexander_L11n106.poly", Poly,
        "two-variable Alexander polynomial of the link"),
    fixture!("m137", "m137.pres", Presentation,
        "presentation and peripheral words of the census manifold m137"),
    fixture!("m137_matrices", "m137_matrices.txt", Matrices,
        "exact generator images for m137 over Q(i)"),
    fixture!("m137_P", "m137_canonical.poly", Poly,
        "canonical component of m137 in s = tr lambda, t = tr b"),
    fixture!("table", "irreducibility_table.txt", Table,
        "primes p with S(X^m, Y) irreducible modulo (X - 2, p), m = 1..24"),
    fixture!("knots", "knot_certificates.txt", Knots,
        "knots with certified non-integral trace and their certifying primes"),
];

/// Named fixtures with per-name replacement text.
#[derive(Clone, Debug, Default)]
pub struct FixtureRegistry {
    overrides: BTreeMap<String, String>,
}

impl FixtureRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn info(name: &str) -> Result<&'static FixtureInfo> {
        BUNDLED
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::fixture(name, "no such fixture"))
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        BUNDLED.iter().map(|f| f.name)
    }

    /// Replaces a bundled fixture's text.
    pub fn with_override(mut self, name: &str, text: impl Into<String>) -> Result<Self> {
        Self::info(name)?;
        self.overrides.insert(name.to_string(), text.into());
        Ok(self)
    }

    pub fn with_override_file(self, name: &str, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::fixture(name, format!("{}: {e}", path.display())))?;
        self.with_override(name, text)
    }

    pub fn is_overridden(&self, name: &str) -> bool {
        self.overrides.contains_key(name)
    }

    pub fn text(&self, name: &str) -> Result<&str> {
        let info = Self::info(name)?;
        Ok(self
            .overrides
            .get(name)
            .map(String::as_str)
            .unwrap_or(info.text))
    }

    pub fn poly(&self, name: &str) -> Result<MultiPoly<Integers>> {
        let text = self.text(name)?;
        parse_fixture(text, Integers).map_err(|e| Error::fixture(name, e.to_string()))
    }

    pub fn presentation(&self, name: &str) -> Result<Presentation> {
        parse_presentation(self.text(name)?).map_err(|e| Error::fixture(name, e.to_string()))
    }

    /// True when the polynomial fixture reprints to exactly its own text.
    pub fn round_trips(&self, name: &str) -> Result<bool> {
        let p = self.poly(name)?;
        Ok(print_fixture(&p) == self.text(name)?)
    }
}
