//! Expression grammar and canonical text forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' exponent)?
//! exponent := integer | '-' integer | '(' ('-')? integer ')'
//! atom   := integer | name | 'sqrt' '(' ('-')? integer ')' | '(' expr ')'
//! ```
//!
//! Juxtaposition is rejected (`2X` must be written `2*X`). Division is only
//! allowed by invertible constants. `sqrt(D)` is accepted when the domain
//! designates a square root of `D`. The Unicode minus sign is read as `-`.

use std::fmt;

use num_bigint::BigInt;

use super::poly::{Monomial, MultiPoly};
use super::ring::{CoefficientDomain, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Ident(s)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((pos, Tok::Sym('-')));
            i += 1;
        } else {
            return Err(Error::parse(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: R,
    vars: &'a [String],
    laurent: bool,
}

impl<'a, R: Ring> Parser<'a, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|&(p, _)| p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos(), format!("expected `{c}`")))
        }
    }

    fn zero(&self) -> MultiPoly<R> {
        MultiPoly::zero(self.ring.clone(), self.vars)
    }

    fn constant(&self, c: R::Elem) -> MultiPoly<R> {
        MultiPoly::constant(self.ring.clone(), self.vars, c)
    }

    fn expr(&mut self) -> Result<MultiPoly<R>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly<R>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(Error::parse(pos, "division by a non-constant"));
                }
                let inv = self
                    .ring
                    .inv(&d.constant_term())
                    .ok_or_else(|| Error::parse(pos, "division by a non-invertible constant"))?;
                acc = acc.scale(&inv);
            } else if matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)))
                || self.peek() == Some(&Tok::Sym('('))
            {
                return Err(Error::parse(
                    self.pos(),
                    "implicit multiplication is not allowed; write `*`",
                ));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly<R>> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn signed_integer(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(if neg { -n } else { n })
            }
            _ => Err(Error::parse(self.pos(), "expected an integer")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let pos = self.pos();
        let n = if self.eat('(') {
            let n = self.signed_integer()?;
            self.expect(')')?;
            n
        } else {
            self.signed_integer()?
        };
        i64::try_from(n).map_err(|_| Error::parse(pos, "exponent out of range"))
    }

    fn power(&mut self) -> Result<MultiPoly<R>> {
        let base_pos = self.pos();
        let (base, var_name) = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if e >= 0 {
            let e = u32::try_from(e).map_err(|_| Error::parse(base_pos, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        // Negative exponent: only single terms can be inverted.
        if base.len() != 1 {
            return Err(Error::parse(base_pos, "negative power of a non-monomial"));
        }
        if let Some(name) = &var_name {
            if !self.laurent {
                return Err(Error::NegativeExponent(name.clone()));
            }
        }
        let (m, c) = base
            .terms()
            .next()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        if !m.is_one() && !self.laurent {
            return Err(Error::NegativeExponent(var_name.unwrap_or_default()));
        }
        let ci = self
            .ring
            .inv(&c)
            .ok_or_else(|| Error::parse(base_pos, "negative power of a non-invertible constant"))?;
        let k = (-e) as i32;
        let exps: Vec<i32> = m.exps().iter().map(|&x| -x * k).collect();
        let mut out = self.zero();
        out.add_term(Monomial::new(exps), self.ring.pow(&ci, k as u64));
        Ok(out)
    }

    fn atom(&mut self) -> Result<(MultiPoly<R>, Option<String>)> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok((self.constant(self.ring.from_bigint(&n)), None))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    let mut e = vec![0; self.vars.len()];
                    e[i] = 1;
                    let mut out = self.zero();
                    out.add_term(Monomial::new(e), self.ring.one());
                    Ok((out, Some(name)))
                } else if name == "sqrt" {
                    self.expect('(')?;
                    let d = self.signed_integer()?;
                    self.expect(')')?;
                    let w = self.ring.sqrt_int(&d).ok_or_else(|| {
                        Error::parse(pos, format!("domain has no designated sqrt({d})"))
                    })?;
                    Ok((self.constant(w), None))
                } else {
                    Err(Error::UnknownVariable(name))
                }
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok((e, None))
            }
            _ => Err(Error::parse(pos, "expected a number, variable or `(`")),
        }
    }
}

fn parse_impl<R: Ring, S: AsRef<str>>(
    text: &str,
    vars: &[S],
    ring: R,
    laurent: bool,
) -> Result<MultiPoly<R>> {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
        vars: &vars,
        laurent,
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        let msg = if matches!(p.peek(), Some(Tok::Sym(')'))) {
            "unbalanced `)`"
        } else {
            "implicit multiplication is not allowed; write `*`"
        };
        return Err(Error::parse(p.pos(), msg));
    }
    Ok(out)
}

/// Parses a polynomial; negative exponents on variables are rejected.
pub fn parse_poly<R: Ring, S: AsRef<str>>(text: &str, vars: &[S], ring: R) -> Result<MultiPoly<R>> {
    parse_impl(text, vars, ring, false)
}

/// Parses a Laurent polynomial (negative exponents allowed).
pub fn parse_laurent<R: Ring, S: AsRef<str>>(
    text: &str,
    vars: &[S],
    ring: R,
) -> Result<MultiPoly<R>> {
    parse_impl(text, vars, ring, true)
}

/// Parses a single domain element (an expression without variables).
pub fn parse_elem<R: Ring>(text: &str, ring: &R) -> Result<R::Elem> {
    let p = parse_impl::<R, &str>(text, &[], ring.clone(), false)?;
    Ok(p.constant_term())
}

fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            e if e < 0 => parts.push(format!("{v}^({e})")),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    /// Canonical single-line expression form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ring = self.ring();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = ring.is_negative(c);
            let mag = if neg { ring.neg(c) } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(self.vars(), m);
            if mono.is_empty() {
                write!(f, "{}", ring.format(&mag))?;
            } else if ring.is_one(&mag) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", ring.format(&mag))?;
            }
        }
        Ok(())
    }
}

/// A fixture file: header plus polynomial body.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureHeader {
    pub vars: Vec<String>,
    pub domain: CoefficientDomain,
}

/// Canonical term-line fixture text for `f`.
pub fn print_fixture<R: Ring>(f: &MultiPoly<R>) -> String {
    let mut out = String::new();
    out.push_str("poly v1\n");
    out.push_str(&format!("vars: {}\n", f.vars().join(" ")));
    out.push_str(&format!("domain: {}\n", f.ring().domain()));
    for (m, c) in f.terms() {
        let exps: Vec<String> = m.exps().iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("{} : {}\n", f.ring().format(c), exps.join(" ")));
    }
    out
}

/// Reads the header of a fixture without committing to a domain type.
pub fn read_fixture_header(text: &str) -> Result<FixtureHeader> {
    let mut lines = text.lines();
    let bad = |m: &str| Error::fixture("<poly>", m);
    if lines.next().map(str::trim) != Some("poly v1") {
        return Err(bad("first line must be `poly v1`"));
    }
    let vars = lines
        .next()
        .and_then(|l| l.trim().strip_prefix("vars:"))
        .ok_or_else(|| bad("second line must be `vars: ...`"))?
        .split_whitespace()
        .map(str::to_string)
        .collect::<Vec<_>>();
    let domain = lines
        .next()
        .and_then(|l| l.trim().strip_prefix("domain:"))
        .ok_or_else(|| bad("third line must be `domain: ...`"))?
        .parse()?;
    Ok(FixtureHeader { vars, domain })
}

/// Parses fixture text into a polynomial over `ring`, whose domain tag must
/// match the header. Accepts term lines or a single `expr:` line.
pub fn parse_fixture<R: Ring>(text: &str, ring: R) -> Result<MultiPoly<R>> {
    let header = read_fixture_header(text)?;
    if header.domain != ring.domain() {
        return Err(Error::DomainMismatch(
            header.domain.to_string(),
            ring.domain().to_string(),
        ));
    }
    let mut out = MultiPoly::zero(ring.clone(), &header.vars);
    let mut saw_expr = false;
    for (ln, line) in text.lines().enumerate().skip(3) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(e) = line.strip_prefix("expr:") {
            if saw_expr || !out.is_zero() {
                return Err(Error::fixture(
                    "<poly>",
                    "`expr:` must be the only body line",
                ));
            }
            out = parse_poly(e, &header.vars, ring.clone())?;
            saw_expr = true;
            continue;
        }
        let (c, e) = line.split_once(" : ").ok_or_else(|| {
            Error::fixture(
                "<poly>",
                format!("line {}: expected `<coeff> : <exps>`", ln + 1),
            )
        })?;
        let coeff = parse_elem(c.trim(), &ring)?;
        let exps = e
            .split_whitespace()
            .map(|x| x.parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::fixture("<poly>", format!("line {}: bad exponent", ln + 1)))?;
        if exps.len() != header.vars.len() {
            return Err(Error::fixture(
                "<poly>",
                format!("line {}: expected {} exponents", ln + 1, header.vars.len()),
            ));
        }
        if let Some(i) = exps.iter().position(|&x| x < 0) {
            return Err(Error::NegativeExponent(header.vars[i].clone()));
        }
        out.add_term(Monomial::new(exps), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::{Integers, QuadraticField, Rationals};

    #[test]
    fn single_variable() {
        let f = parse_poly("X", &["X", "Y"], Integers).unwrap();
        assert_eq!(f.to_string(), "X");
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn rejects_negative_exponent_outside_laurent() {
        let err = parse_poly("X^(\u{2212}1)", &["X", "Y"], Integers).unwrap_err();
        assert_eq!(err, Error::NegativeExponent("X".into()));
        assert!(parse_laurent("X^(-1)", &["X"], Integers).is_ok());
    }

    #[test]
    fn rejects_juxtaposition_and_unknowns() {
        assert!(matches!(
            parse_poly("2X", &["X"], Integers),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly("2 X", &["X"], Integers),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            parse_poly("Z + 1", &["X"], Integers).unwrap_err(),
            Error::UnknownVariable("Z".into())
        );
        assert!(parse_poly("X +", &["X"], Integers).is_err());
        assert!(parse_poly("(X", &["X"], Integers).is_err());
    }

    #[test]
    fn rational_and_quadratic_constants() {
        let q = parse_poly("3/4*X - 1/2", &["X"], Rationals).unwrap();
        assert_eq!(q.to_string(), "3/4*X - 1/2");
        let k = QuadraticField::new(-7).unwrap();
        let y = parse_elem("(17+3*sqrt(-7))/8", &k).unwrap();
        assert_eq!(y, k.elem(17, 3, 8).unwrap());
        assert!(parse_elem("sqrt(-3)", &k).is_err());
        assert!(parse_poly("X/2", &["X"], Integers).is_err());
    }

    #[test]
    fn fixture_round_trip() {
        let f = parse_poly("-6*X*Y^2 + 7*X^3 - Y + 2", &["X", "Y"], Integers).unwrap();
        let text = print_fixture(&f);
        assert_eq!(
            text,
            "poly v1\nvars: X Y\ndomain: Z\n7 : 3 0\n-6 : 1 2\n-1 : 0 1\n2 : 0 0\n"
        );
        let g = parse_fixture(&text, Integers).unwrap();
        assert_eq!(g, f);
        assert!(parse_fixture(&text, Rationals).is_err());
    }
}
