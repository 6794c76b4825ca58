//! Resultants over the integers by evaluation, interpolation and Chinese
//! remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::modp::{inv_mod, large_primes, mul_mod, sub_mod};
use crate::arith::univariate::resultant_formal;
use crate::arith::{Integers, Monomial, MultiPoly, PrimeField};
use crate::error::Result;

/// Sum of absolute values of the coefficients.
pub(crate) fn l1_norm(f: &MultiPoly<Integers>) -> BigInt {
    f.terms().map(|(_, c)| c.abs()).sum()
}

struct Reduced {
    /// (exponents of the remaining variables, exponent of the eliminated one, coefficient mod p)
    terms: Vec<(Vec<usize>, usize, u64)>,
}

fn reduce(f: &MultiPoly<Integers>, var: usize, rest: &[usize], p: u64) -> Reduced {
    let pb = BigInt::from(p);
    let terms = f
        .terms()
        .map(|(m, c)| {
            let e = m.exps();
            let r = c.mod_floor(&pb).to_u64().expect("residue fits");
            (
                rest.iter().map(|&j| e[j] as usize).collect(),
                e[var] as usize,
                r,
            )
        })
        .filter(|t| t.2 != 0)
        .collect();
    Reduced { terms }
}

/// Coefficients of the eliminated variable at one grid point.
fn specialize(f: &Reduced, deg: usize, powers: &[&[u64]], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; deg + 1];
    for (e, k, c) in &f.terms {
        let mut v = *c;
        for (j, &x) in e.iter().enumerate() {
            if x > 0 {
                v = mul_mod(v, powers[j][x], p);
            }
        }
        out[*k] = (out[*k] + v) % p;
    }
    out
}

/// Values at 0..=n to monomial coefficients, in place.
fn interpolate_line(v: &mut [u64], inv: &[u64], p: u64) {
    let n = v.len();
    // Divided differences at the points 0, 1, ..., n-1.
    for i in 1..n {
        for j in (i..n).rev() {
            v[j] = mul_mod(sub_mod(v[j], v[j - 1], p), inv[i], p);
        }
    }
    // Newton form to monomial basis: poly = c_{n-1}; poly = poly*(x - i) + c_i.
    let mut poly = vec![0u64; n];
    poly[0] = v[n - 1];
    let mut len = 1;
    for i in (0..n - 1).rev() {
        // multiply by (x - i)
        let xi = i as u64 % p;
        for k in (0..=len).rev() {
            let hi = if k > 0 { poly[k - 1] } else { 0 };
            let lo = if k < len { mul_mod(poly[k], xi, p) } else { 0 };
            poly[k] = sub_mod(hi, lo, p);
        }
        len += 1;
        poly[0] = (poly[0] + v[i]) % p;
    }
    v.copy_from_slice(&poly[..n]);
}

/// Applies 1D interpolation along every axis of a row-major tensor.
fn interpolate_tensor(data: &mut [u64], dims: &[usize], p: u64) {
    let maxd = dims.iter().copied().max().unwrap_or(1);
    let inv: Vec<u64> = (0..maxd.max(1))
        .map(|i| {
            if i == 0 {
                0
            } else {
                inv_mod(i as u64, p).expect("point below p")
            }
        })
        .collect();
    for axis in 0..dims.len() {
        let stride: usize = dims[axis + 1..].iter().product();
        let len = dims[axis];
        let outer: usize = dims[..axis].iter().product();
        let mut line = vec![0u64; len];
        for o in 0..outer {
            for s in 0..stride {
                let base = o * len * stride + s;
                for (k, x) in line.iter_mut().enumerate() {
                    *x = data[base + k * stride];
                }
                interpolate_line(&mut line, &inv, p);
                for (k, x) in line.iter().enumerate() {
                    data[base + k * stride] = *x;
                }
            }
        }
    }
}

/// Resultant with respect to variable `var` of two integer polynomials
/// over the same variable list, degrees in `var` used as formal degrees.
pub(crate) fn resultant_modular(
    f: &MultiPoly<Integers>,
    g: &MultiPoly<Integers>,
    var: usize,
) -> Result<MultiPoly<Integers>> {
    f.require_polynomial()?;
    g.require_polynomial()?;
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    let rest: Vec<usize> = (0..f.nvars()).filter(|&j| j != var).collect();
    let dims: Vec<usize> = rest
        .iter()
        .map(|&j| {
            let df = f.degree_in(j).unwrap_or(0).max(0) as usize;
            let dg = g.degree_in(j).unwrap_or(0).max(0) as usize;
            n * df + m * dg + 1
        })
        .collect();
    let max_exp: Vec<usize> = rest
        .iter()
        .map(|&j| {
            f.degree_in(j)
                .unwrap_or(0)
                .max(g.degree_in(j).unwrap_or(0))
                .max(0) as usize
        })
        .collect();
    let npoints: usize = dims.iter().product();
    let bound = l1_norm(f).pow(n as u32) * l1_norm(g).pow(m as u32);
    let target = bound * 2u32 + 1u32;

    let mut acc: Vec<BigInt> = vec![BigInt::zero(); npoints];
    let mut modulus = BigInt::from(1u32);
    for p in large_primes() {
        if modulus > target {
            break;
        }
        let field = PrimeField::new(p)?;
        let rf = reduce(f, var, &rest, p);
        let rg = reduce(g, var, &rest, p);
        // powers[j][v][e] = v^e mod p for grid value v of remaining var j
        let powers: Vec<Vec<Vec<u64>>> = dims
            .iter()
            .zip(&max_exp)
            .map(|(&d, &top)| {
                (0..d as u64)
                    .map(|v| {
                        let mut row = Vec::with_capacity(top + 1);
                        let mut x = 1u64;
                        for _ in 0..=top {
                            row.push(x);
                            x = mul_mod(x, v, p);
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        let mut values: Vec<u64> = (0..npoints)
            .into_par_iter()
            .map(|idx| {
                let mut rem = idx;
                let mut coord = vec![0usize; dims.len()];
                for j in (0..dims.len()).rev() {
                    coord[j] = rem % dims[j];
                    rem /= dims[j];
                }
                let pw: Vec<&[u64]> = coord
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| powers[j][v].as_slice())
                    .collect();
                let fv = specialize(&rf, m, &pw, p);
                let gv = specialize(&rg, n, &pw, p);
                resultant_formal(&field, &fv, m, &gv, n)
            })
            .collect();
        interpolate_tensor(&mut values, &dims, p);
        // Chinese remaindering into acc (mod modulus * p).
        let pb = BigInt::from(p);
        let minv = inv_mod((&modulus % &pb).to_u64().expect("residue"), p).expect("coprime moduli");
        acc.par_iter_mut()
            .zip(values.par_iter())
            .for_each(|(a, &v)| {
                let am = (&*a % &pb).to_u64().expect("residue");
                let t = mul_mod(sub_mod(v, am, p), minv, p);
                if t != 0 {
                    *a += &modulus * t;
                }
            });
        modulus *= &pb;
    }
    let half = &modulus >> 1;
    let vars: Vec<String> = rest.iter().map(|&j| f.vars()[j].clone()).collect();
    let mut out = MultiPoly::zero(Integers, &vars);
    for (idx, mut c) in acc.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c > half {
            c -= &modulus;
        }
        let mut rem = idx;
        let mut e = vec![0i32; dims.len()];
        for j in (0..dims.len()).rev() {
            e[j] = (rem % dims[j]) as i32;
            rem /= dims[j];
        }
        out.add_term(Monomial::new(e), c);
    }
    Ok(out)
}
