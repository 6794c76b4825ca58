use std::fmt;

use rayon::prelude::*;

use crate::arith::modp::odd_primes_between;
use crate::arith::{stretch, Integers, MultiPoly};
use crate::error::{Error, Result};

use super::cert::{IrreducibilityCertificate, Verdict};
use super::newton::absolute_irreducibility;
use super::search::find_certificate_in;

/// Specialization points tried after any table hint, in order.
pub const SWEEP_POINTS: &[i64] = &[2, 3, -1, 1, 0];
/// Largest prime tried per point by the sweep.
pub const SWEEP_PRIME_LIMIT: u64 = 1000;

/// Rows `(m, p)`: the stretched polynomial is irreducible modulo `(X - 2, p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IrreducibilityTable {
    pub rows: Vec<(u32, u64)>,
}

impl IrreducibilityTable {
    /// Reads `table v1` text: one `m p` pair per line, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("table v1") {
            return Err(Error::fixture("table", "first line must be `table v1`"));
        }
        let mut rows = Vec::new();
        for (k, line) in lines.enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || {
                Error::fixture(
                    "table",
                    format!("line {}: expected `m p`, got `{line}`", k + 2),
                )
            };
            let mut it = line.split_whitespace();
            let m = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let p = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            rows.push((m, p));
        }
        Ok(IrreducibilityTable { rows })
    }

    pub fn prime_for(&self, m: u32) -> Option<u64> {
        self.rows.iter().find(|r| r.0 == m).map(|r| r.1)
    }
}

impl fmt::Display for IrreducibilityTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table v1")?;
        for (m, p) in &self.rows {
            writeln!(f, "{m} {p}")?;
        }
        Ok(())
    }
}

/// Result of the sweep for one stretch factor.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub m: u32,
    pub over_q: Option<IrreducibilityCertificate>,
    pub absolute: Option<IrreducibilityCertificate>,
    /// Why the row failed, when it did.
    pub failure: Option<String>,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.absolute.as_ref().is_some_and(|c| c.is_certified())
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub name: String,
    pub m_max: u32,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn failing(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.m)
            .collect()
    }

    /// `None` for an empty sweep.
    pub fn conclusion(&self) -> Option<String> {
        if self.rows.is_empty() {
            return None;
        }
        let failing = self.failing();
        Some(if failing.is_empty() {
            format!("hypotheses verified for all m ≤ {}", self.m_max)
        } else {
            let list: Vec<String> = failing.iter().map(u32::to_string).collect();
            format!("failing m: {}", list.join(", "))
        })
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for cert in [&row.over_q, &row.absolute].into_iter().flatten() {
                writeln!(f, "{}", cert.line())?;
            }
            if let Some(why) = &row.failure {
                writeln!(f, "FAIL m={} {why}", row.m)?;
            }
        }
        if let Some(c) = self.conclusion() {
            writeln!(f, "CONCLUSION {c}")?;
        }
        Ok(())
    }
}

fn candidates(hint: Option<u64>) -> Vec<(i64, u64)> {
    let primes: Vec<u64> = odd_primes_between(3, SWEEP_PRIME_LIMIT).collect();
    let mut out: Vec<(i64, u64)> = hint.map(|p| (2, p)).into_iter().collect();
    for &a in SWEEP_POINTS {
        out.extend(primes.iter().map(|&p| (a, p)));
    }
    out
}

fn sweep_one(f: &MultiPoly<Integers>, name: &str, m: u32, hint: Option<u64>) -> SweepRow {
    let mut row = SweepRow {
        m,
        over_q: None,
        absolute: None,
        failure: None,
    };
    let x = &f.vars()[0];
    let label = format!("{name}({x}^{m},{})", f.vars()[1]);
    let g = match stretch(f, x, m) {
        Ok(g) => g,
        Err(e) => {
            row.failure = Some(e.to_string());
            return row;
        }
    };
    let cert = match find_certificate_in(&g, &label, x, &candidates(hint)) {
        Ok(c) => c,
        Err(e) => {
            row.failure = Some(e.to_string());
            return row;
        }
    };
    if !cert.is_certified() {
        row.failure = Some(match cert.verdict {
            Verdict::Refuted => format!("reducible: {}", cert.trail.join("; ")),
            _ => "no specialization certificate found".into(),
        });
        row.over_q = Some(cert);
        return row;
    }
    match absolute_irreducibility(&g, &cert) {
        Ok(abs) => {
            if !abs.is_certified() {
                row.failure = Some("Newton polygon vertex gcd is not 1".into());
            }
            row.absolute = Some(abs);
        }
        Err(e) => row.failure = Some(e.to_string()),
    }
    row.over_q = Some(cert);
    row
}

/// For each `m = 1..=m_max`, certifies `f(X^m, Y)` irreducible over the
/// rationals and, through its Newton polygon, over the algebraic closure.
/// Table rows are tried first for their `m`.
pub fn dzannier_driver(
    f: &MultiPoly<Integers>,
    name: &str,
    m_max: u32,
    hints: Option<&IrreducibilityTable>,
) -> Result<SweepReport> {
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "expected a polynomial in two variables, got [{}]",
            f.vars().join(" ")
        )));
    }
    let rows = (1..=m_max)
        .into_par_iter()
        .map(|m| sweep_one(f, name, m, hints.and_then(|t| t.prime_for(m))))
        .collect();
    Ok(SweepReport {
        name: name.to_string(),
        m_max,
        rows,
    })
}
