use std::fmt;

use sha2::{Digest, Sha256};

use crate::arith::modp::is_prime_u64;
use crate::arith::{print_fixture, MultiPoly, Ring};
use crate::error::{Error, Result};

/// The ideal `(var - point, prime)` of `Z[X, Y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpecializationIdeal {
    var: String,
    point: i64,
    prime: u64,
}

impl SpecializationIdeal {
    pub fn new(var: impl Into<String>, point: i64, prime: u64) -> Result<Self> {
        if !is_prime_u64(prime) {
            return Err(Error::InvalidArgument(format!("{prime} is not prime")));
        }
        Ok(SpecializationIdeal {
            var: var.into(),
            point,
            prime,
        })
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn point(&self) -> i64 {
        self.point
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }
}

impl fmt::Display for SpecializationIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.point {
            0 => write!(f, "({},{})", self.var, self.prime),
            a if a < 0 => write!(f, "({}+{},{})", self.var, a.unsigned_abs(), self.prime),
            a => write!(f, "({}-{},{})", self.var, a, self.prime),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Specialization,
    NewtonGcd,
    RootOfUnity(u64),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Specialization => f.write_str("specialization"),
            Method::NewtonGcd => f.write_str("newton-gcd"),
            Method::RootOfUnity(d) => write!(f, "root-of-unity({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Ideal(SpecializationIdeal),
    Vertices(Vec<(i64, i64)>),
    /// `c` has multiplicative order exactly `d` in `F_p`.
    RootOfUnity {
        d: u64,
        p: u64,
        c: u64,
    },
    None,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Ideal(i) => i.fmt(f),
            Witness::Vertices(v) => {
                f.write_str("[")?;
                for (k, (i, j)) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "({i},{j})")?;
                }
                f.write_str("]")
            }
            Witness::RootOfUnity { d, p, c } => write!(f, "d={d},p={p},c={c}"),
            Witness::None => f.write_str("none"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Hex SHA-256 of the canonical fixture text of `f`.
pub fn poly_digest<R: Ring>(f: &MultiPoly<R>) -> String {
    let hash = Sha256::digest(print_fixture(f).as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityCertificate {
    pub name: String,
    pub digest: String,
    pub method: Method,
    pub witness: Witness,
    pub verdict: Verdict,
    /// Candidates tried before the final one, with what happened to each.
    pub trail: Vec<String>,
}

impl IrreducibilityCertificate {
    pub(crate) fn new<R: Ring>(f: &MultiPoly<R>, name: &str, method: Method) -> Self {
        IrreducibilityCertificate {
            name: name.to_string(),
            digest: poly_digest(f),
            method,
            witness: Witness::None,
            verdict: Verdict::Inconclusive,
            trail: Vec::new(),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    /// True when this certificate was issued for exactly `f`.
    pub fn is_about<R: Ring>(&self, f: &MultiPoly<R>) -> bool {
        self.digest == poly_digest(f)
    }

    pub fn line(&self) -> String {
        format!(
            "CERT {} method={} witness={} verdict={}",
            self.name, self.method, self.witness, self.verdict
        )
    }
}

impl fmt::Display for IrreducibilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}
