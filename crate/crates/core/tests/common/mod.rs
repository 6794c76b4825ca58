//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's arithmetic beyond reading terms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use ntrace::arith::{Integers, MultiPoly};

pub const P_LARGE: u64 = 1_000_003;

// ---- integers mod p --------------------------------------------------------

pub fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    powm(a, p - 2, p)
}

pub fn red(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn is_prime_power(n: u64) -> bool {
    let Some(q) = (2..=n).find(|q| n % q == 0) else {
        return false;
    };
    let mut m = n;
    while m % q == 0 {
        m /= q;
    }
    m == 1
}

/// Terms of an integer polynomial as `(exponents, coefficient)`.
pub fn terms(f: &MultiPoly<Integers>) -> Vec<(Vec<i32>, BigInt)> {
    f.terms()
        .map(|(m, c)| (m.exps().to_vec(), c.clone()))
        .collect()
}

/// Value of `f` at a point mod `p`; negative exponents use inverses.
pub fn eval_mod(f: &MultiPoly<Integers>, point: &[u64], p: u64) -> u64 {
    let mut acc = 0;
    for (e, c) in terms(f) {
        let mut t = red(&c, p);
        for (x, &k) in point.iter().zip(&e) {
            let base = if k < 0 { invm(*x, p) } else { *x };
            t = mulm(t, powm(base, k.unsigned_abs() as u64, p), p);
        }
        acc = (acc + t) % p;
    }
    acc
}

/// Value of `f` at an integer point; exponents must be non-negative.
pub fn eval_int(f: &MultiPoly<Integers>, point: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (e, c) in terms(f) {
        let mut t = c;
        for (x, &k) in point.iter().zip(&e) {
            assert!(k >= 0);
            t *= num_traits::pow(x.clone(), k as usize);
        }
        acc += t;
    }
    acc
}

// ---- dense polynomials over F_p, low degree first --------------------------

pub type Fpx = Vec<u64>;

pub fn trim(mut a: Fpx) -> Fpx {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn fpx_sub(a: &Fpx, b: &Fpx, p: u64) -> Fpx {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn fpx_mul(a: &Fpx, b: &Fpx, p: u64) -> Fpx {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn fpx_rem(a: &Fpx, b: &Fpx, p: u64) -> Fpx {
    let b = trim(b.clone());
    let mut r = trim(a.clone());
    let lead_inv = invm(*b.last().expect("division by zero"), p);
    while r.len() >= b.len() {
        let q = mulm(*r.last().unwrap(), lead_inv, p);
        let shift = r.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulm(q, c, p)) % p;
        }
        r = trim(r);
    }
    r
}

pub fn fpx_gcd(a: &Fpx, b: &Fpx, p: u64) -> Fpx {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = fpx_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn fpx_powmod(base: &Fpx, mut e: u64, m: &Fpx, p: u64) -> Fpx {
    let mut r = vec![1];
    let mut b = fpx_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = fpx_rem(&fpx_mul(&r, &b, p), m, p);
        }
        b = fpx_rem(&fpx_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

/// `x^(p^k) mod f` by `k` successive `p`-th powers.
fn frobenius_iter(f: &Fpx, k: usize, p: u64) -> Fpx {
    let mut x = vec![0, 1];
    for _ in 0..k {
        x = fpx_powmod(&x, p, f, p);
    }
    x
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f`
/// and `gcd(x^(p^(n/q)) - x, f) = 1` for every prime `q | n`.
pub fn rabin_irreducible(f: &Fpx, p: u64) -> bool {
    let f = trim(f.clone());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    let x = fpx_rem(&vec![0, 1], &f, p);
    if fpx_sub(&frobenius_iter(&f, n, p), &x, p) != Vec::<u64>::new() {
        return false;
    }
    for q in (2..=n).filter(|&q| n % q == 0 && is_prime(q as u64)) {
        let h = fpx_sub(&frobenius_iter(&f, n / q, p), &x, p);
        if fpx_gcd(&h, &f, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Irreducibility by trying every monic divisor of degree up to `n/2`.
pub fn brute_irreducible(f: &Fpx, p: u64) -> bool {
    let f = trim(f.clone());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return false;
    }
    for k in 1..=n / 2 {
        for code in 0..p.pow(k as u32) {
            let mut g: Fpx = (0..k).map(|i| (code / p.pow(i as u32)) % p).collect();
            g.push(1);
            if fpx_rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

// ---- dense integer polynomials ----------------------------------------------

pub type Zx = Vec<BigInt>;

pub fn zx_trim(mut a: Zx) -> Zx {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn zx_mul(a: &Zx, b: &Zx) -> Zx {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zx_trim(out)
}

/// Exact quotient by a monic divisor.
pub fn zx_div_monic(a: &Zx, b: &Zx) -> Zx {
    let mut r = a.clone();
    let db = b.len() - 1;
    assert!(b[db].is_one());
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].clone();
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    assert!(r.iter().all(Zero::is_zero), "inexact division");
    q
}

pub fn zx_eval(a: &Zx, x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut mu = 1;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            n /= q;
            if n % q == 0 {
                return 0;
            }
            mu = -mu;
        }
        q += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// `Phi_d` from the Moebius product of `x^e - 1` over `e | d`.
pub fn cyclotomic_mobius(d: u64) -> Zx {
    let binom = |e: u64| {
        let mut v = vec![BigInt::zero(); e as usize + 1];
        v[0] = BigInt::from(-1);
        v[e as usize] = BigInt::one();
        v
    };
    let mut num: Zx = vec![BigInt::one()];
    let mut den: Zx = vec![BigInt::one()];
    for e in (1..=d).filter(|e| d % e == 0) {
        match mobius(d / e) {
            1 => num = zx_mul(&num, &binom(e)),
            -1 => den = zx_mul(&den, &binom(e)),
            _ => {}
        }
    }
    // the denominator is monic up to sign
    if den.last().unwrap().is_negative() {
        den = den.iter().map(|c| -c).collect();
        num = num.iter().map(|c| -c).collect();
    }
    zx_div_monic(&num, &den)
}

/// Coefficient vector of a univariate library polynomial.
pub fn dense(f: &MultiPoly<Integers>) -> Zx {
    let mut out = Vec::new();
    for (e, c) in terms(f) {
        let k = e.first().copied().unwrap_or(0) as usize;
        if out.len() <= k {
            out.resize(k + 1, BigInt::zero());
        }
        out[k] += c;
    }
    zx_trim(out)
}

// ---- geometry --------------------------------------------------------------

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Vertices of the convex hull by gift wrapping, collinear points dropped.
pub fn hull_vertices(points: &[(i64, i64)]) -> BTreeSet<(i64, i64)> {
    let pts: Vec<(i64, i64)> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pts.len() <= 2 {
        return pts.into_iter().collect();
    }
    let start = pts[0];
    let mut hull = BTreeSet::new();
    let mut cur = start;
    loop {
        hull.insert(cur);
        let mut next = if pts[0] == cur { pts[1] } else { pts[0] };
        for &q in &pts {
            if q == cur {
                continue;
            }
            let c = cross(cur, next, q);
            let farther = |a: (i64, i64), b: (i64, i64)| {
                (b.0 - cur.0).pow(2) + (b.1 - cur.1).pow(2)
                    > (a.0 - cur.0).pow(2) + (a.1 - cur.1).pow(2)
            };
            if c < 0 || (c == 0 && farther(next, q)) {
                next = q;
            }
        }
        cur = next;
        if cur == start {
            break;
        }
    }
    hull
}

pub fn gcd_all(v: impl IntoIterator<Item = i64>) -> i64 {
    v.into_iter().fold(0, |g, x| g.gcd(&x))
}

// ---- 2x2 matrices mod p ----------------------------------------------------

pub type M2 = [[u64; 2]; 2];

pub fn m2_mul(a: &M2, b: &M2, p: u64) -> M2 {
    let mut r = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = (mulm(a[i][0], b[0][j], p) + mulm(a[i][1], b[1][j], p)) % p;
        }
    }
    r
}

/// Inverse of a determinant-one matrix.
pub fn m2_inv(a: &M2, p: u64) -> M2 {
    [[a[1][1], (p - a[0][1]) % p], [(p - a[1][0]) % p, a[0][0]]]
}

/// Generator images at `(x, y)`: `a = [[x, 1], [0, 1/x]]`,
/// `b = [[y, 0], [-x*y - 2 - 1/(x*y), 1/y]]`.
pub fn generators_mod(x: u64, y: u64, p: u64) -> (M2, M2) {
    let xi = invm(x, p);
    let yi = invm(y, p);
    let xy = mulm(x, y, p);
    let c = (3 * p - xy - 2 % p - mulm(xi, yi, p)) % p;
    ([[x, 1], [0, xi]], [[y, 0], [c, yi]])
}

pub fn word_matrix_mod(word: &str, x: u64, y: u64, p: u64) -> M2 {
    let (a, b) = generators_mod(x, y, p);
    let mut m = [[1, 0], [0, 1]];
    for ch in word.chars() {
        let g = match ch {
            'a' => a,
            'b' => b,
            'A' => m2_inv(&a, p),
            'B' => m2_inv(&b, p),
            _ => panic!("letter {ch}"),
        };
        m = m2_mul(&m, &g, p);
    }
    m
}

pub fn word_trace_mod(word: &str, x: u64, y: u64, p: u64) -> u64 {
    let m = word_matrix_mod(word, x, y, p);
    (m[0][0] + m[1][1]) % p
}

// ---- F_p(sqrt(delta)) --------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct Fp2 {
    pub p: u64,
    pub delta: u64,
}

pub type E2 = (u64, u64);

impl Fp2 {
    pub fn new(p: u64) -> Self {
        let delta = (2..p).find(|&d| powm(d, (p - 1) / 2, p) == p - 1).unwrap();
        Fp2 { p, delta }
    }
    pub fn add(&self, a: E2, b: E2) -> E2 {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }
    pub fn mul(&self, a: E2, b: E2) -> E2 {
        let p = self.p;
        (
            (mulm(a.0, b.0, p) + mulm(mulm(a.1, b.1, p), self.delta, p)) % p,
            (mulm(a.0, b.1, p) + mulm(a.1, b.0, p)) % p,
        )
    }
    pub fn pow(&self, mut a: E2, mut e: u64) -> E2 {
        let mut r = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }
    pub fn inv(&self, a: E2) -> E2 {
        // a^(p^2 - 2)
        self.pow(a, self.p * self.p - 2)
    }
    /// A square root of a base-field element.
    pub fn sqrt(&self, a: u64) -> E2 {
        let p = self.p;
        let a = a % p;
        if a == 0 {
            return (0, 0);
        }
        let find = |target: u64| (0..p).find(|&r| mulm(r, r, p) == target);
        if let Some(r) = find(a) {
            (r, 0)
        } else {
            let r = find(mulm(a, invm(self.delta, p), p)).expect("square root");
            (0, r)
        }
    }
    pub fn eval(&self, f: &MultiPoly<Integers>, point: &[E2]) -> E2 {
        let mut acc = (0, 0);
        for (e, c) in terms(f) {
            let mut t = (red(&c, self.p), 0);
            for (x, &k) in point.iter().zip(&e) {
                let base = if k < 0 { self.inv(*x) } else { *x };
                t = self.mul(t, self.pow(base, k.unsigned_abs() as u64));
            }
            acc = self.add(acc, t);
        }
        acc
    }
}

// ---- Q(sqrt(D)) with rational coordinates -----------------------------------

#[derive(Clone, Debug, PartialEq)]
pub struct QD {
    pub a: BigRational,
    pub b: BigRational,
}

pub fn qd(a: i64, b: i64, q: i64) -> QD {
    let q = BigInt::from(q);
    QD {
        a: BigRational::new(BigInt::from(a), q.clone()),
        b: BigRational::new(BigInt::from(b), q),
    }
}

pub fn qd_int(n: &BigInt) -> QD {
    QD {
        a: BigRational::from_integer(n.clone()),
        b: BigRational::zero(),
    }
}

pub fn qd_add(x: &QD, y: &QD) -> QD {
    QD {
        a: &x.a + &y.a,
        b: &x.b + &y.b,
    }
}

pub fn qd_mul(x: &QD, y: &QD, d: i64) -> QD {
    let d = BigRational::from_integer(BigInt::from(d));
    QD {
        a: &x.a * &y.a + &x.b * &y.b * d,
        b: &x.a * &y.b + &x.b * &y.a,
    }
}

pub fn qd_is_zero(x: &QD) -> bool {
    x.a.is_zero() && x.b.is_zero()
}

pub fn qd_eval(f: &MultiPoly<Integers>, point: &[QD], d: i64) -> QD {
    let mut acc = qd_int(&BigInt::zero());
    for (e, c) in terms(f) {
        let mut t = qd_int(&c);
        for (x, &k) in point.iter().zip(&e) {
            for _ in 0..k {
                t = qd_mul(&t, x, d);
            }
        }
        acc = qd_add(&acc, &t);
    }
    acc
}

/// Exponent map of the terms, for coefficient lookups.
pub fn term_map(f: &MultiPoly<Integers>) -> BTreeMap<Vec<i32>, BigInt> {
    terms(f).into_iter().collect()
}
