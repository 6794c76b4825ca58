use std::fmt;

use crate::arith::modp::is_prime_u64;
use crate::error::{Error, Result};

/// Expected numbers of knots certified by 2 alone, by 3 alone, and otherwise.
pub const KNOT_COUNTS: (usize, usize, usize) = (129, 24, 17);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRow {
    pub name: String,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotTable {
    pub rows: Vec<KnotRow>,
}

/// `9_29`, `11a38`, `12n242` and the like.
fn well_formed(name: &str) -> bool {
    let digits_end = name
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(name.len());
    if digits_end == 0 || digits_end == name.len() {
        return false;
    }
    let rest = &name[digits_end + 1..];
    matches!(&name[digits_end..=digits_end], "_" | "a" | "n")
        && !rest.is_empty()
        && rest.chars().all(|c| c.is_ascii_digit())
}

impl KnotTable {
    /// Reads `knots v1` text: a knot name and comma-separated primes per
    /// line. Names must be well formed and every listed number prime.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("knots v1") {
            return Err(Error::fixture("knots", "first line must be `knots v1`"));
        }
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |m: String| Error::fixture("knots", format!("line {}: {m}", k + 2));
            let mut it = line.split_whitespace();
            let (Some(name), Some(list), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(format!("expected `name primes`, got `{line}`")));
            };
            if !well_formed(name) {
                return Err(bad(format!("malformed knot name `{name}`")));
            }
            let primes = list
                .split(',')
                .map(|p| match p.parse::<u64>() {
                    Ok(p) if is_prime_u64(p) => Ok(p),
                    _ => Err(bad(format!("`{p}` is not a prime"))),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(KnotRow {
                name: name.to_string(),
                primes,
            });
        }
        let mut names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        names.sort_unstable();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::fixture(
                "knots",
                format!("knot `{}` is listed twice", w[0]),
            ));
        }
        Ok(KnotTable { rows })
    }

    /// Rows certified by 2 alone, by 3 alone, and all others.
    pub fn counts(&self) -> (usize, usize, usize) {
        let only = |p: u64| self.rows.iter().filter(|r| r.primes == [p]).count();
        let (two, three) = (only(2), only(3));
        (two, three, self.rows.len() - two - three)
    }
}

impl fmt::Display for KnotTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knots v1")?;
        for r in &self.rows {
            let p: Vec<String> = r.primes.iter().map(u64::to_string).collect();
            writeln!(f, "{} {}", r.name, p.join(","))?;
        }
        Ok(())
    }
}
