use num_integer::Integer;

use crate::arith::{MultiPoly, Ring};
use crate::error::{Error, Result};

use super::cert::{IrreducibilityCertificate, Method, Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    support: Vec<(i64, i64)>,
    vertices: Vec<(i64, i64)>,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

impl NewtonPolygon {
    /// Convex hull of a nonempty point set by the monotone chain. Vertices
    /// run counter-clockwise from the lexicographically smallest point;
    /// points in the relative interior of an edge are not vertices.
    pub fn from_support(points: &[(i64, i64)]) -> Result<Self> {
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if pts.len() <= 2 {
            return Ok(NewtonPolygon {
                vertices: pts.clone(),
                support: pts,
            });
        }
        let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
        for &p in &pts {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        let lower = hull.len() + 1;
        for &p in pts.iter().rev().skip(1) {
            while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
        Ok(NewtonPolygon {
            support: pts,
            vertices: hull,
        })
    }

    pub fn support(&self) -> &[(i64, i64)] {
        &self.support
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn has_vertex(&self, v: (i64, i64)) -> bool {
        self.vertices.contains(&v)
    }

    /// gcd of all vertex coordinates.
    pub fn vertex_gcd(&self) -> i64 {
        self.vertices.iter().fold(0, |g, &(i, j)| g.gcd(&i).gcd(&j))
    }
}

/// Newton polygon of a nonzero polynomial in two variables, first
/// variable on the horizontal axis.
pub fn newton_polygon<R: Ring>(f: &MultiPoly<R>) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "Newton polygons need two variables, got {}",
            f.nvars()
        )));
    }
    let pts: Vec<(i64, i64)> = f
        .terms()
        .map(|(m, _)| (m.exps()[0] as i64, m.exps()[1] as i64))
        .collect();
    NewtonPolygon::from_support(&pts)
}

/// Irreducibility over the algebraic closure from irreducibility over the
/// rationals plus a Newton polygon whose vertex coordinates are coprime.
pub fn absolute_irreducibility<R: Ring>(
    f: &MultiPoly<R>,
    over_q: &IrreducibilityCertificate,
) -> Result<IrreducibilityCertificate> {
    if !over_q.is_about(f) {
        return Err(Error::Precondition(format!(
            "certificate {} was issued for a different polynomial",
            over_q.name
        )));
    }
    if over_q.verdict != Verdict::Certified {
        return Err(Error::Precondition(format!(
            "{} is not certified irreducible over the rationals ({})",
            over_q.name, over_q.verdict
        )));
    }
    let np = newton_polygon(f)?;
    let mut cert = IrreducibilityCertificate::new(f, &over_q.name, Method::NewtonGcd);
    let g = np.vertex_gcd();
    cert.witness = Witness::Vertices(np.vertices().to_vec());
    if g == 1 {
        cert.verdict = Verdict::Certified;
    } else {
        cert.trail.push(format!("vertex gcd {g}"));
    }
    Ok(cert)
}
