use crate::arith::{MultiPoly, Ring};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` with respect to one variable; entries
/// are polynomials in the remaining variables.
#[derive(Clone, Debug)]
pub struct SylvesterMatrix<R: Ring> {
    rows: Vec<Vec<MultiPoly<R>>>,
}

impl<R: Ring> SylvesterMatrix<R> {
    /// `deg g` shifted copies of `f`'s coefficients (leading first), then
    /// `deg f` copies of `g`'s. Both inputs must share a variable list.
    pub fn new(f: &MultiPoly<R>, g: &MultiPoly<R>, var: usize) -> Result<Self> {
        let fc = f.coeffs_in(var)?;
        let gc = g.coeffs_in(var)?;
        let m = f.degree_in(var).unwrap_or(0) as usize;
        let n = g.degree_in(var).unwrap_or(0) as usize;
        let zero = f.zero_like().drop_var(var);
        let dim = m + n;
        let mut rows = vec![vec![zero.clone(); dim]; dim];
        for r in 0..n {
            for i in 0..=m {
                rows[r][r + i] = fc[m - i].drop_var(var);
            }
        }
        for r in 0..m {
            for i in 0..=n {
                rows[n + r][r + i] = gc[n - i].drop_var(var);
            }
        }
        Ok(SylvesterMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly<R> {
        &self.rows[i][j]
    }

    /// Fraction-free Gaussian elimination (Bareiss). Every division is
    /// exact over an integral domain; a failed division is reported.
    pub fn determinant(&self) -> Result<MultiPoly<R>> {
        let n = self.dim();
        if n == 0 {
            return Err(Error::InvalidArgument("empty Sylvester matrix".into()));
        }
        let mut a = self.rows.clone();
        let one = a[0][0].constant_like(a[0][0].ring().one());
        let mut prev = one;
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(piv) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(a[0][0].zero_like());
                };
                a.swap(k, piv);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?.ok_or_else(|| {
                        Error::Precondition("inexact division in fraction-free elimination".into())
                    })?;
                }
                a[i][k] = a[i][k].zero_like();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}
