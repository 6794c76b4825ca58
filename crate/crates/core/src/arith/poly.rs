//! Sparse multivariate (and Laurent) polynomials over an exact domain.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::ring::Ring;
use crate::error::{Error, Result};

/// An exponent vector indexed by the ambient variable order.
///
/// Ordered graded-lexicographically: higher total degree first, ties broken
/// by comparing exponents of the earlier variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn new(exps: impl Into<Box<[i32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when the quotient has no negative exponents.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let exps: Box<[i32]> = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a - b)
            .collect();
        exps.iter().all(|&e| e >= 0).then_some(Monomial(exps))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The three ring operations exposed as a single entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial with a declared variable order. Exponents may be
/// negative (Laurent polynomials); operations that need genuine polynomials
/// check this with [`MultiPoly::require_polynomial`].
#[derive(Clone, PartialEq)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, R::Elem>,
}

/// Laurent polynomials share the representation; the alias marks intent.
pub type LaurentPoly<R> = MultiPoly<R>;

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

pub(crate) fn vars_arc<S: AsRef<str>>(vars: &[S]) -> Arc<[String]> {
    vars.iter().map(|v| v.as_ref().to_string()).collect()
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero<S: AsRef<str>>(ring: R, vars: &[S]) -> Self {
        MultiPoly {
            ring,
            vars: vars_arc(vars),
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn zero_arc(ring: R, vars: Arc<[String]>) -> Self {
        MultiPoly {
            ring,
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(ring: R, vars: &[S], c: R::Elem) -> Self {
        let mut p = Self::zero(ring, vars);
        p.add_term(Monomial::one(p.nvars()), c);
        p
    }

    pub fn one<S: AsRef<str>>(ring: R, vars: &[S]) -> Self {
        let one = ring.one();
        Self::constant(ring, vars, one)
    }

    pub fn var<S: AsRef<str>>(ring: R, vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(ring, vars);
        let i = p.var_index(name)?;
        let mut e = vec![0; p.nvars()];
        e[i] = 1;
        let one = p.ring.one();
        p.add_term(Monomial::new(e), one);
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<S: AsRef<str>>(
        ring: R,
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<i32>, R::Elem)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ring, vars);
        for (e, c) in terms {
            if e.len() != p.nvars() {
                return Err(Error::InvalidArgument(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    p.nvars()
                )));
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    /// Same ring and variables, no terms.
    pub fn zero_like(&self) -> Self {
        Self::zero_arc(self.ring.clone(), self.vars.clone())
    }

    pub fn constant_like(&self, c: R::Elem) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    pub fn monomial_like(&self, exps: Vec<i32>, c: R::Elem) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::new(exps), c);
        p
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Adds `c * m` in place, dropping a coefficient that cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        debug_assert_eq!(m.0.len(), self.vars.len());
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Terms in canonical order (graded-lex descending).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> + '_ {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> R::Elem {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&vec![0; self.nvars()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Leading term in canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Highest exponent of variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn min_degree_in(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[i]).min()
    }

    pub fn degree_of(&self, var: &str) -> Result<Option<i32>> {
        Ok(self.degree_in(self.var_index(var)?))
    }

    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    pub fn require_polynomial(&self) -> Result<()> {
        for m in self.terms.keys() {
            if let Some(i) = m.0.iter().position(|&e| e < 0) {
                return Err(Error::NegativeExponent(self.vars[i].clone()));
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::DomainMismatch(
                self.ring.domain().to_string(),
                other.ring.domain().to_string(),
            ));
        }
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(
                self.vars.join(" "),
                other.vars.join(" "),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.zero_like();
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), self.ring.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, other: &Self, op: PolyOp) -> Result<Self> {
        match op {
            PolyOp::Add => self.try_add(other),
            PolyOp::Sub => self.try_sub(other),
            PolyOp::Mul => self.try_mul(other),
        }
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = self.zero_like();
        if self.ring.is_zero(c) {
            return out;
        }
        for (m, a) in &self.terms {
            let v = self.ring.mul(a, c);
            if !self.ring.is_zero(&v) {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shift(&self, exps: &[i32]) -> Self {
        let s = Monomial::new(exps.to_vec());
        MultiPoly {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&s), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.constant_like(self.ring.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exponent-wise minimum over all terms.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins = vec![0; self.nvars()];
        for (k, m) in self.terms.keys().enumerate() {
            for (i, &e) in m.0.iter().enumerate() {
                mins[i] = if k == 0 { e } else { mins[i].min(e) };
            }
        }
        mins
    }

    /// Multiplies by the monomial that makes every minimal exponent zero.
    /// Returns the applied shift and the cleared polynomial.
    pub fn clear_denominators(&self) -> (Vec<i32>, Self) {
        let shift: Vec<i32> = self.min_exponents().iter().map(|e| -e).collect();
        let cleared = self.shift(&shift);
        (shift, cleared)
    }

    /// Maps coefficients into another domain, dropping zeros.
    pub fn map_coeffs<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> MultiPoly<S> {
        let mut out = MultiPoly::zero_arc(target, self.vars.clone());
        for (m, c) in &self.terms {
            let v = f(c);
            if !out.ring.is_zero(&v) {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    /// Re-expresses the polynomial over a new variable list. Variables that
    /// actually occur must be present in `new_vars`.
    pub fn with_vars<S: AsRef<str>>(&self, new_vars: &[S]) -> Result<Self> {
        let new_vars = vars_arc(new_vars);
        let mut map = Vec::with_capacity(self.nvars());
        for (i, v) in self.vars.iter().enumerate() {
            let pos = new_vars.iter().position(|w| w == v);
            if pos.is_none() && self.terms.keys().any(|m| m.0[i] != 0) {
                return Err(Error::UnknownVariable(v.clone()));
            }
            map.push(pos);
        }
        let mut out = MultiPoly::zero_arc(self.ring.clone(), new_vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; new_vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Drops the variable at index `i`, which must not occur.
    pub fn drop_var(&self, i: usize) -> Self {
        let vars: Arc<[String]> = self
            .vars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = MultiPoly::zero_arc(self.ring.clone(), vars);
        for (m, c) in &self.terms {
            debug_assert_eq!(m.0[i], 0);
            let e: Vec<i32> =
                m.0.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x)
                    .collect();
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }

    /// Coefficients with respect to variable `i`: entry `k` is the
    /// coefficient of `var^k`, expressed over the same variable list.
    pub fn coeffs_in(&self, i: usize) -> Result<Vec<Self>> {
        self.require_polynomial()?;
        let deg = self.degree_in(i).unwrap_or(0).max(0) as usize;
        let mut out = vec![self.zero_like(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.to_vec();
            e[i] = 0;
            out[k].terms.insert(Monomial::new(e), c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(template: &Self, i: usize, coeffs: &[Self]) -> Self {
        let mut out = template.zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.to_vec();
                e[i] += k as i32;
                out.add_term(Monomial::new(e), a.clone());
            }
        }
        out
    }

    pub fn leading_coeff_in(&self, i: usize) -> Result<Self> {
        Ok(self.coeffs_in(i)?.pop().unwrap_or_else(|| self.zero_like()))
    }

    /// Evaluates at a full assignment in the coefficient domain itself.
    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem> {
        let ring = self.ring.clone();
        self.evaluate_in(&ring, |c| c.clone(), point)
    }

    /// Evaluates with variables bound by name.
    pub fn evaluate_named(&self, assignment: &HashMap<String, R::Elem>) -> Result<R::Elem> {
        let point = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::MissingBinding(v.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&point)
    }

    /// Evaluates in a target domain reached through the coefficient
    /// embedding `embed`. Negative exponents need invertible values.
    pub fn evaluate_in<K: Ring>(
        &self,
        target: &K,
        embed: impl Fn(&R::Elem) -> K::Elem,
        point: &[K::Elem],
    ) -> Result<K::Elem> {
        if point.len() != self.nvars() {
            let missing = self.vars.get(point.len()).cloned().unwrap_or_default();
            return Err(Error::MissingBinding(missing));
        }
        let powers = self.power_table(target, point)?;
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = embed(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    t = target.mul(&t, &powers[i][&e]);
                }
            }
            acc = target.add(&acc, &t);
        }
        Ok(acc)
    }

    fn power_table<K: Ring>(
        &self,
        target: &K,
        point: &[K::Elem],
    ) -> Result<Vec<HashMap<i32, K::Elem>>> {
        let mut table = Vec::with_capacity(self.nvars());
        for (i, x) in point.iter().enumerate() {
            let mut h = HashMap::new();
            let lo = self.min_degree_in(i).unwrap_or(0);
            let hi = self.degree_in(i).unwrap_or(0);
            if hi > 0 {
                let mut acc = target.one();
                for e in 1..=hi {
                    acc = target.mul(&acc, x);
                    h.insert(e, acc.clone());
                }
            }
            if lo < 0 {
                let xi = target.inv(x).ok_or(Error::NotInvertible)?;
                let mut acc = target.one();
                for e in 1..=(-lo) {
                    acc = target.mul(&acc, &xi);
                    h.insert(-e, acc.clone());
                }
            }
            table.push(h);
        }
        Ok(table)
    }

    /// Substitutes a value for one variable and removes it.
    pub fn substitute(&self, var: &str, value: &R::Elem) -> Result<Self> {
        let i = self.var_index(var)?;
        let lo = self.min_degree_in(i).unwrap_or(0);
        let hi = self.degree_in(i).unwrap_or(0);
        let mut pw: HashMap<i32, R::Elem> = HashMap::new();
        pw.insert(0, self.ring.one());
        for e in 1..=hi.max(0) {
            let prev = pw[&(e - 1)].clone();
            pw.insert(e, self.ring.mul(&prev, value));
        }
        if lo < 0 {
            let vi = self.ring.inv(value).ok_or(Error::NotInvertible)?;
            for e in 1..=(-lo) {
                let prev = pw[&(1 - e)].clone();
                pw.insert(-e, self.ring.mul(&prev, &vi));
            }
        }
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            let k = e[i];
            e[i] = 0;
            out.add_term(Monomial::new(e), self.ring.mul(c, &pw[&k]));
        }
        Ok(out.drop_var(i))
    }

    /// Substitutes a polynomial (over the same variables) for variable `i`.
    /// Only non-negative exponents of that variable are supported.
    pub fn compose_var(&self, i: usize, value: &Self) -> Result<Self> {
        self.check_compatible(value)?;
        let coeffs = self.coeffs_in(i)?;
        // Horner in `value`.
        let mut acc = self.zero_like();
        for c in coeffs.into_iter().rev() {
            acc = &(&acc * value) + &c;
        }
        Ok(acc)
    }

    /// Exact division: `Some(q)` with `self = q * divisor`, `None` when the
    /// divisor does not divide (a refusal, not an error).
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        self.require_polynomial()?;
        divisor.require_polynomial()?;
        let (lm, lc) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        let mut rem = self.clone();
        let mut quot = self.zero_like();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(qm) = m.div(&lm) else {
                return Ok(None);
            };
            let Some(qc) = self.ring.div_exact(&c, &lc) else {
                return Ok(None);
            };
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), self.ring.neg(&self.ring.mul(dc, &qc)));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Variables that occur with a nonzero exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] != 0))
            .collect()
    }
}

impl<R: Ring> Add for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: Self) -> MultiPoly<R> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Sub for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: Self) -> MultiPoly<R> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Mul for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: Self) -> MultiPoly<R> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<R: Ring> Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly {
            ring: self.ring.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        -&self
    }
}
