use std::collections::HashMap;

use crate::arith::{Integers, MultiPoly, Ring};
use crate::error::{Error, Result};

use super::GroupWord;

/// Longest word `trace_poly` accepts by default.
pub const DEFAULT_LENGTH_BUDGET: usize = 12;

const VARS: [&str; 3] = ["X", "Y", "Z"];

/// Trace of a word over `{a, b}` as a polynomial in `X = tr a`,
/// `Y = tr b`, `Z = tr ab`, by the Fricke identities.
pub fn trace_poly(w: &GroupWord) -> Result<MultiPoly<Integers>> {
    trace_poly_with_budget(w, DEFAULT_LENGTH_BUDGET)
}

pub fn trace_poly_with_budget(w: &GroupWord, budget: usize) -> Result<MultiPoly<Integers>> {
    if let Some(&c) = w
        .letters()
        .iter()
        .find(|c| !matches!(c, 'a' | 'b' | 'A' | 'B'))
    {
        return Err(Error::UndeclaredLetter(c));
    }
    let w = w.free_reduce();
    if w.len() > budget {
        return Err(Error::LengthBudget {
            len: w.len(),
            budget,
        });
    }
    let mut memo = HashMap::new();
    Ok(Fricke { memo: &mut memo }.trace(&w))
}

struct Fricke<'a> {
    memo: &'a mut HashMap<GroupWord, MultiPoly<Integers>>,
}

fn var(name: &str) -> MultiPoly<Integers> {
    MultiPoly::var(Integers, &VARS, name).expect("trace variable")
}

fn constant(c: i64) -> MultiPoly<Integers> {
    MultiPoly::constant(Integers, &VARS, Integers.from_i64(c))
}

fn generator_trace(c: char) -> MultiPoly<Integers> {
    var(if c.eq_ignore_ascii_case(&'a') {
        "X"
    } else {
        "Y"
    })
}

/// Cyclic reduction, then whichever of the word and its inverse has fewer
/// inverse letters, then the smallest rotation. Preferring fewer inverse
/// letters is what makes the recursion below terminate.
fn canonical(w: &GroupWord) -> GroupWord {
    let w = w.cyclic_reduce();
    let inv = w.inverse();
    let upper = |w: &GroupWord| {
        w.letters()
            .iter()
            .filter(|c| c.is_ascii_uppercase())
            .count()
    };
    let candidates: Vec<&GroupWord> = match upper(&w).cmp(&upper(&inv)) {
        std::cmp::Ordering::Less => vec![&w],
        std::cmp::Ordering::Greater => vec![&inv],
        std::cmp::Ordering::Equal => vec![&w, &inv],
    };
    (0..w.len().max(1))
        .flat_map(|k| candidates.iter().map(move |c| c.rotate(k)))
        .min()
        .unwrap_or(w)
}

impl Fricke<'_> {
    fn trace(&mut self, w: &GroupWord) -> MultiPoly<Integers> {
        let w = canonical(w);
        if let Some(t) = self.memo.get(&w) {
            return t.clone();
        }
        let t = self.compute(&w);
        self.memo.insert(w, t.clone());
        t
    }

    fn compute(&mut self, w: &GroupWord) -> MultiPoly<Integers> {
        let n = w.len();
        let l = w.letters();
        if n == 0 {
            return constant(2);
        }
        if n == 1 {
            return generator_trace(l[0]);
        }
        if let Some(k) = l.iter().position(|c| c.is_ascii_uppercase()) {
            // tr(u g^-1) = tr(u) tr(g) - tr(u g)
            let r = w.rotate(k + 1);
            let g = r.letters()[n - 1];
            let u = GroupWord::from_letters(r.letters()[..n - 1].to_vec());
            let mut ug = u.letters().to_vec();
            ug.push(g.to_ascii_lowercase());
            let a = self.trace(&u);
            let b = self.trace(&GroupWord::from_letters(ug).free_reduce());
            return &(&a * &generator_trace(g)) - &b;
        }
        if l.iter().all(|&c| c == l[0]) {
            // tr(g^n) = tr(g) tr(g^{n-1}) - tr(g^{n-2})
            let a = self.trace(&GroupWord::from_letters(l[..n - 1].to_vec()));
            let b = self.trace(&GroupWord::from_letters(l[..n - 2].to_vec()));
            return &(&generator_trace(l[0]) * &a) - &b;
        }
        if let Some(i) = (0..n).find(|&i| l[i] == l[(i + 1) % n]) {
            // w = u g g: tr(w) = tr(u g) tr(g) - tr(u)
            let r = w.rotate((i + 2) % n);
            let g = l[i];
            let ug = GroupWord::from_letters(r.letters()[..n - 1].to_vec());
            let u = GroupWord::from_letters(r.letters()[..n - 2].to_vec());
            let a = self.trace(&ug);
            let b = self.trace(&u);
            return &(&a * &generator_trace(g)) - &b;
        }
        // Alternating: (ab)^k with k >= 1.
        if n == 2 {
            return var("Z");
        }
        let a = self.trace(&GroupWord::from_letters(l[..n - 2].to_vec()));
        let b = self.trace(&GroupWord::from_letters(l[..n - 4].to_vec()));
        &(&var("Z") * &a) - &b
    }
}
