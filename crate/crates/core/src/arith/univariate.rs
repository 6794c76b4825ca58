//! Dense univariate polynomials, used by the finite-field kernels.

use super::poly::{Monomial, MultiPoly};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Coefficients stored low degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        UniPoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn x(ring: R) -> Self {
        let c = vec![ring.zero(), ring.one()];
        UniPoly { ring, coeffs: c }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> R::Elem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let r = &self.ring;
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| self.ring.add(&self.coeff(i), &o.coeff(i)))
            .collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| self.ring.sub(&self.coeff(i), &o.coeff(i)))
            .collect();
        Self::new(self.ring.clone(), c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let r = &self.ring;
        let mut c = vec![r.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = r.add(&c[i + j], &r.mul(a, b));
            }
        }
        Self::new(r.clone(), c)
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        let c = self.coeffs.iter().map(|a| self.ring.mul(a, k)).collect();
        Self::new(self.ring.clone(), c)
    }

    /// Converts from a polynomial in exactly one variable.
    pub fn from_multi(f: &MultiPoly<R>) -> Result<Self> {
        if f.nvars() != 1 {
            return Err(Error::InvalidArgument(format!(
                "expected a univariate polynomial, got variables [{}]",
                f.vars().join(" ")
            )));
        }
        f.require_polynomial()?;
        let deg = f.degree_in(0).unwrap_or(0) as usize;
        let mut c = vec![f.ring().zero(); deg + 1];
        for (m, a) in f.terms() {
            c[m.exps()[0] as usize] = a.clone();
        }
        Ok(Self::new(f.ring().clone(), c))
    }

    pub fn to_multi(&self, var: &str) -> MultiPoly<R> {
        let mut out = MultiPoly::zero(self.ring.clone(), &[var]);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_term(Monomial::new(vec![i as i32]), c.clone());
        }
        out
    }
}

impl<F: Field> UniPoly<F> {
    pub fn monic(&self) -> Self {
        match self.ring.inv(&self.lc()) {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let r = &self.ring;
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = r.inv(&d.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(r.clone()), self.clone());
        }
        let mut q = vec![r.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = r.mul(&rem[k], &lc_inv);
            if r.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = r.sub(&rem[idx], &r.mul(&c, dc));
            }
            q[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(r.clone(), q), Self::new(r.clone(), rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut acc = Self::constant(self.ring.clone(), self.ring.one()).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }
}

/// Resultant of `f` and `g` regarded as having formal degrees `m` and `n`
/// (the Sylvester determinant of that size), by the Euclidean algorithm.
/// Coefficient slices are low degree first and may contain leading zeros.
pub fn resultant_formal<F: Field>(
    ring: &F,
    f: &[F::Elem],
    m: usize,
    g: &[F::Elem],
    n: usize,
) -> F::Elem {
    let get = |v: &[F::Elem], i: usize| v.get(i).cloned().unwrap_or_else(|| ring.zero());
    let mut f: Vec<F::Elem> = (0..=m).map(|i| get(f, i)).collect();
    let mut g: Vec<F::Elem> = (0..=n).map(|i| get(g, i)).collect();
    let (mut m, mut n) = (m, n);
    let mut acc = ring.one();
    loop {
        if m == 0 {
            return ring.mul(&acc, &ring.pow(&f[0], n as u64));
        }
        if n == 0 {
            return ring.mul(&acc, &ring.pow(&g[0], m as u64));
        }
        if ring.is_zero(&f[m]) {
            // Expand along the first column.
            let mut t = g[n].clone();
            if n % 2 == 1 {
                t = ring.neg(&t);
            }
            acc = ring.mul(&acc, &t);
            f.pop();
            m -= 1;
            continue;
        }
        if ring.is_zero(&g[n]) {
            acc = ring.mul(&acc, &f[m]);
            g.pop();
            n -= 1;
            continue;
        }
        if ring.is_zero(&acc) {
            return acc;
        }
        if m < n {
            if (m * n) % 2 == 1 {
                acc = ring.neg(&acc);
            }
            std::mem::swap(&mut f, &mut g);
            std::mem::swap(&mut m, &mut n);
            continue;
        }
        // m >= n >= 1, both leading coefficients nonzero:
        // Res_{m,n}(f,g) = (-1)^{mn} lc(g)^{m-n+1} Res_{n,n-1}(g, f mod g).
        let fp = UniPoly::new(ring.clone(), f);
        let gp = UniPoly::new(ring.clone(), g.clone());
        let r = fp.rem(&gp);
        if (m * n) % 2 == 1 {
            acc = ring.neg(&acc);
        }
        acc = ring.mul(&acc, &ring.pow(&g[n], (m - n + 1) as u64));
        f = g;
        m = n;
        g = (0..n).map(|i| r.coeff(i)).collect();
        n -= 1;
    }
}

/// Resultant over a field with the actual degrees as formal degrees.
pub fn resultant<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> F::Elem {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    resultant_formal(f.ring(), f.coeffs(), m, g.coeffs(), n)
}
