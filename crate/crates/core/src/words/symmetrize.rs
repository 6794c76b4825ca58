use crate::arith::{MultiPoly, Ring};
use crate::error::{Error, Result};

/// `V_i(X)` with `V_0 = 2`, `V_1 = X`, `V_{i+1} = X V_i - V_{i-1}`, so that
/// `V_i(u + 1/u) = u^i + u^-i`. Index `var` refers to `vars`.
pub fn chebyshev<R: Ring>(ring: &R, vars: &[String], var: usize, i: usize) -> MultiPoly<R> {
    let mut x = vec![0; vars.len()];
    x[var] = 1;
    let xp = MultiPoly::from_terms(ring.clone(), vars, [(x, ring.one())]).expect("arity");
    let mut prev = MultiPoly::constant(ring.clone(), vars, ring.from_i64(2));
    if i == 0 {
        return prev;
    }
    let mut cur = xp.clone();
    for _ in 1..i {
        let next = &(&xp * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Rewrites a Laurent polynomial invariant under each `v -> 1/v` as a
/// polynomial in `V = v + 1/v`. Output variables are the input names in
/// upper case.
pub fn symmetrize<R: Ring>(f: &MultiPoly<R>) -> Result<MultiPoly<R>> {
    let ring = f.ring().clone();
    let n = f.nvars();
    for (m, c) in f.terms() {
        for i in 0..n {
            let mut flipped = m.exps().to_vec();
            flipped[i] = -flipped[i];
            if f.coeff(&flipped) != *c {
                let mono = MultiPoly::from_terms(
                    ring.clone(),
                    f.vars(),
                    [(m.exps().to_vec(), c.clone())],
                )?;
                return Err(Error::SymmetryViolation {
                    var: f.vars()[i].clone(),
                    monomial: mono.to_string(),
                });
            }
        }
    }
    let out_vars: Vec<String> = f.vars().iter().map(|v| v.to_uppercase()).collect();
    let max_deg: Vec<usize> = (0..n)
        .map(|i| f.degree_in(i).unwrap_or(0).max(0) as usize)
        .collect();
    // Basis images: s_0 = 1 maps to 1, s_k maps to V_k.
    let basis: Vec<Vec<MultiPoly<R>>> = (0..n)
        .map(|i| {
            (0..=max_deg[i])
                .map(|k| {
                    if k == 0 {
                        MultiPoly::one(ring.clone(), &out_vars)
                    } else {
                        chebyshev(&ring, &out_vars, i, k)
                    }
                })
                .collect()
        })
        .collect();
    let mut out = MultiPoly::zero(ring.clone(), &out_vars);
    for (m, c) in f.terms() {
        if m.exps().iter().any(|&e| e < 0) {
            continue;
        }
        let mut term = MultiPoly::constant(ring.clone(), &out_vars, c.clone());
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                term = &term * &basis[i][e as usize];
            }
        }
        out = &out + &term;
    }
    Ok(out)
}
