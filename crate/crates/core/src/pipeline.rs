//! The end-to-end check run: every golden value re-derived or re-verified,
//! collected into one plain-text report.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::alexander::{cover_table, leading_coeff_product, torres_check, COMPONENT_ALEXANDER};
use crate::arith::{
    parse_poly, print_fixture, reciprocal_lift, stretch, Integers, MultiPoly, QuadraticField, Ring,
};
use crate::certify::{
    integral_specialization_verdict, integrality, m137_checks, parse_factors, verify_factorization,
    KnotTable, SpecializationVerdict, KNOT_COUNTS, R1_AT_TWO, R_AT_MINUS_TWO,
};
use crate::cyclo::{cyclotomic, m137_unit_report, prime_power, unit_2cos_shift};
use crate::elim::{divides, resultant};
use crate::error::{Error, Result};
use crate::fixtures::FixtureRegistry;
use crate::irred::{
    absolute_irreducibility, certify_root_of_unity_with, dzannier_driver, newton_polygon,
    specialize_irreducible_q, IrreducibilityTable, SpecializationIdeal, DEFAULT_MAX_ATTEMPTS,
    DEFAULT_PRIME_BUDGET,
};
use crate::words::derive_meridian_trace;

/// Section names, in report order.
pub const SECTIONS: &[&str] = &[
    "derive-q",
    "eliminate",
    "factor",
    "integrality",
    "lift",
    "newton",
    "dzannier",
    "roots-of-unity",
    "units",
    "r1",
    "m137",
    "alexander",
    "knots",
];

/// Orders of the roots of unity tried by the per-order certificates.
pub const ROOT_ORDERS: &[u64] = &[3, 5, 7, 9, 11];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: &'static str,
    /// `None` when skipped.
    pub checks: Option<Vec<Check>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub sections: Vec<Section>,
}

impl PipelineReport {
    pub fn worst(&self) -> Option<Status> {
        self.sections
            .iter()
            .flat_map(|s| s.checks.iter().flatten())
            .map(|c| c.status)
            .max()
    }

    /// 0 when everything passed, 1 on any failure, 2 when only
    /// inconclusive results remain.
    pub fn exit_code(&self) -> i32 {
        match self.worst() {
            Some(Status::Fail) => 1,
            Some(Status::Inconclusive) => 2,
            _ => 0,
        }
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.sections
            .iter()
            .flat_map(|s| s.checks.iter().flatten())
            .find(|c| c.name == name)
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sections {
            match &s.checks {
                None => writeln!(f, "[{}] SKIPPED", s.name)?,
                Some(checks) => {
                    writeln!(f, "[{}]", s.name)?;
                    for c in checks {
                        if c.detail.is_empty() {
                            writeln!(f, "{} {}", c.status, c.name)?;
                        } else {
                            writeln!(f, "{} {}: {}", c.status, c.name, c.detail)?;
                        }
                    }
                }
            }
        }
        let counts = |st: Status| {
            self.sections
                .iter()
                .flat_map(|s| s.checks.iter().flatten())
                .filter(|c| c.status == st)
                .count()
        };
        writeln!(
            f,
            "SUMMARY pass={} inconclusive={} fail={}",
            counts(Status::Pass),
            counts(Status::Inconclusive),
            counts(Status::Fail)
        )
    }
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub skip: Vec<String>,
    pub budget_primes: u64,
    pub max_attempts: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            skip: Vec::new(),
            budget_primes: DEFAULT_PRIME_BUDGET,
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }
}

struct Ctx<'a> {
    reg: &'a FixtureRegistry,
    opts: &'a PipelineOptions,
}

fn y_poly(text: &str) -> Result<MultiPoly<Integers>> {
    parse_poly(text, &["Y"], Integers)
}

fn profile(f: &MultiPoly<Integers>) -> String {
    let degs: Vec<String> = f
        .vars()
        .iter()
        .enumerate()
        .map(|(i, v)| format!("deg_{v}={}", f.degree_in(i).unwrap_or(0)))
        .collect();
    format!("terms={} {}", f.len(), degs.join(" "))
}

fn derive_q(cx: &Ctx) -> Result<Vec<Check>> {
    let pres = cx.reg.presentation("L11n106")?;
    let q = derive_meridian_trace(pres.word("m0")?)?;
    let fixture = cx.reg.poly("Q")?;
    let same = print_fixture(&q) == print_fixture(&fixture);
    Ok(vec![Check::new("Q matches fixture", same, profile(&q))])
}

fn eliminate(cx: &Ctx) -> Result<Vec<Check>> {
    let p = cx.reg.poly("P")?;
    let q = cx.reg.poly("Q")?;
    let r = cx.reg.poly("R")?;
    let res = resultant(&p, &q, "X")?;
    let mut out = vec![Check::new(
        "resultant of P and Q in X",
        !res.is_zero(),
        profile(&res),
    )];
    out.push(match divides(&r, &res)?.quotient() {
        Some(c) => Check::new(
            "R divides the resultant",
            true,
            format!("cofactor={c} {}", profile(&c)),
        ),
        None => Check::new("R divides the resultant", false, "division refused"),
    });
    Ok(out)
}

fn specialized_r(cx: &Ctx) -> Result<MultiPoly<Integers>> {
    cx.reg.poly("R")?.substitute("t", &BigInt::from(-2))
}

fn factor(cx: &Ctx) -> Result<Vec<Check>> {
    let r2 = specialized_r(cx)?;
    let fc = verify_factorization(&parse_factors(R_AT_MINUS_TWO, "Y")?, &r2)?;
    let detail = match (fc.sign, &fc.residual) {
        (Some(s), _) => format!("sign={s}"),
        (None, Some(res)) => format!("residual {}", profile(res)),
        (None, None) => String::new(),
    };
    let complete = y_poly("4*Y^2 - 17*Y + 22")?;
    let has = !divides(&complete, &r2)?.is_refused();
    let field = QuadraticField::new(-7)?;
    let point = [field.from_i64(-2), field.elem(17, 3, 8)?];
    let r = cx.reg.poly("R")?;
    let v = r.evaluate_in(&field, |c| field.from_bigint(c), &point)?;
    Ok(vec![
        Check::new("R(-2, Y) equals the claimed product", fc.matches(), detail),
        Check::new("4*Y^2 - 17*Y + 22 divides R(-2, Y)", has, ""),
        Check::new(
            "R(-2, (17+3*sqrt(-7))/8) = 0",
            field.is_zero(&v),
            format!("value={}", field.format(&v)),
        ),
    ])
}

fn integrality_section(cx: &Ctx) -> Result<Vec<Check>> {
    let field = QuadraticField::new(-7)?;
    let r2 = specialized_r(cx)?;
    let mut out = Vec::new();
    for (r, s, q) in [(17, 3, 8), (13, 7, 8)] {
        let e = field.elem(r, s, q)?;
        let v = integrality(&field, &e);
        let ok = !v.integral && v.primes == [BigInt::from(2)] && v.minpoly.annihilates(&field, &e);
        out.push(Check::new(
            format!("{} is not integral", v.element),
            ok,
            v.line(),
        ));
    }
    let e = field.elem(17, 3, 8)?;
    let m = integrality(&field, &e).minpoly;
    let ok = !divides(m.poly(), &r2)?.is_refused();
    out.push(Check::new(
        "its minimal polynomial divides R(-2, Y)",
        ok,
        m.to_string(),
    ));
    Ok(out)
}

fn lift(cx: &Ctx) -> Result<Vec<Check>> {
    let r = cx.reg.poly("R")?;
    let s = cx.reg.poly("S")?;
    let lifted = reciprocal_lift(&r, 8)?;
    let same = print_fixture(&lifted) == print_fixture(&s);
    let top = s.degree_in(0).unwrap_or(0);
    let palindromic = s.terms().all(|(m, c)| {
        let e = m.exps();
        s.coeff(&[top - e[0], e[1]]) == *c
    });
    Ok(vec![
        Check::new("X^8 R(X + 1/X, Y) matches S", same, profile(&lifted)),
        Check::new("S is palindromic in X", palindromic, format!("deg_X={top}")),
    ])
}

fn table(cx: &Ctx) -> Result<IrreducibilityTable> {
    IrreducibilityTable::parse(cx.reg.text("table")?)
        .map_err(|e| Error::fixture("table", e.to_string()))
}

fn newton(cx: &Ctx) -> Result<Vec<Check>> {
    let s = cx.reg.poly("S")?;
    let t = table(cx)?;
    let mut out = Vec::new();
    for &(m, p) in &t.rows {
        let g = stretch(&s, "X", m)?;
        let np = newton_polygon(&g)?;
        let name = format!("S(X^{m},Y)");
        let q = specialize_irreducible_q(&g, &SpecializationIdeal::new("X", 2, p)?, &name)?;
        let abs = if q.is_certified() {
            absolute_irreducibility(&g, &q)?.verdict.to_string()
        } else {
            "not attempted".to_string()
        };
        let ok = np.has_vertex((0, 1)) && np.vertex_gcd() == 1 && abs == "certified";
        out.push(Check::new(
            format!("Newton polygon of {name}"),
            ok,
            format!(
                "vertex(0,1)={} gcd={} absolute={abs}",
                np.has_vertex((0, 1)),
                np.vertex_gcd()
            ),
        ));
    }
    Ok(out)
}

fn dzannier(cx: &Ctx) -> Result<Vec<Check>> {
    let s = cx.reg.poly("S")?;
    let t = table(cx)?;
    let mut out = Vec::new();
    for &(m, p) in &t.rows {
        let g = stretch(&s, "X", m)?;
        let name = format!("S(X^{m},Y)");
        let c = specialize_irreducible_q(&g, &SpecializationIdeal::new("X", 2, p)?, &name);
        out.push(match c {
            Ok(c) => Check::new(format!("table row m={m} p={p}"), c.is_certified(), c.line()),
            Err(e) => Check::new(format!("table row m={m} p={p}"), false, e.to_string()),
        });
    }
    let m_max = s.degree_in(1).unwrap_or(0).max(0) as u32;
    let sweep = dzannier_driver(&s, "S", m_max, None)?;
    let firsts: Vec<String> = sweep
        .rows
        .iter()
        .map(|r| match &r.over_q {
            Some(c) if c.is_certified() => c.witness.to_string(),
            _ => "none".into(),
        })
        .collect();
    let agrees = sweep
        .rows
        .iter()
        .zip(&firsts)
        .all(|(r, w)| t.prime_for(r.m).is_some_and(|p| *w == format!("(X-2,{p})")));
    out.push(Check::new(
        "sweep without table hints",
        sweep.failing().is_empty(),
        sweep.conclusion().unwrap_or_default(),
    ));
    out.push(Check::new(
        "table primes are the least certifying primes at X = 2",
        agrees,
        firsts.join(" "),
    ));
    Ok(out)
}

fn roots_of_unity(cx: &Ctx) -> Result<Vec<Check>> {
    let s = cx.reg.poly("S")?;
    let mut out = Vec::new();
    for &d in ROOT_ORDERS {
        let c =
            certify_root_of_unity_with(&s, "S", d, cx.opts.budget_primes, cx.opts.max_attempts)?;
        out.push(Check {
            name: format!("S(zeta_{d}, Y) irreducible"),
            status: if c.is_certified() {
                Status::Pass
            } else {
                Status::Inconclusive
            },
            detail: c.line(),
        });
    }
    Ok(out)
}

fn units(_: &Ctx) -> Result<Vec<Check>> {
    let odd: Vec<u64> = (3..=199).step_by(2).collect();
    let mut bad0 = Vec::new();
    let mut bad2 = Vec::new();
    for &d in &odd {
        if !unit_2cos_shift(d, 0)?.is_unit {
            bad0.push(d);
        }
        if unit_2cos_shift(d, 2)?.is_unit == prime_power(d)? {
            bad2.push(d);
        }
    }
    let mut bad_phi = Vec::new();
    for d in 1..=200u64 {
        let mut prod = MultiPoly::one(Integers, &["x"]);
        for e in (1..=d).filter(|e| d % e == 0) {
            prod = &prod * &cyclotomic(e)?;
        }
        if prod != parse_poly(&format!("x^{d} - 1"), &["x"], Integers)? {
            bad_phi.push(d);
        }
    }
    let list = |v: &[u64]| format!("exceptions={v:?}");
    Ok(vec![
        Check::new(
            "2cos(2pi/d) is a unit for odd 3 <= d <= 199",
            bad0.is_empty(),
            list(&bad0),
        ),
        Check::new(
            "2cos(2pi/d) - 2 is a unit iff d is not a prime power, odd 3 <= d <= 199",
            bad2.is_empty(),
            list(&bad2),
        ),
        Check::new(
            "product of Phi_e over e | d is x^d - 1 for d <= 200",
            bad_phi.is_empty(),
            list(&bad_phi),
        ),
    ])
}

fn r1(cx: &Ctx) -> Result<Vec<Check>> {
    let r1 = cx.reg.poly("R1")?;
    let at2 = r1.substitute("t", &BigInt::from(2))?;
    let fc = verify_factorization(&parse_factors(R1_AT_TWO, "Y")?, &at2)?;
    let v1 = integral_specialization_verdict(&r1, true)?;
    let v = integral_specialization_verdict(&cx.reg.poly("R")?, true)?;
    Ok(vec![
        Check::new(
            "R1(2, Y) equals the claimed product",
            fc.matches(),
            fc.sign.map(|s| format!("sign={s}")).unwrap_or_default(),
        ),
        Check::new(
            "R1 at a unit t: all roots integral",
            v1 == SpecializationVerdict::AllRootsIntegral,
            v1.to_string(),
        ),
        Check::new(
            "R at a unit t: no conclusion",
            v != SpecializationVerdict::AllRootsIntegral,
            v.to_string(),
        ),
    ])
}

fn m137(cx: &Ctx) -> Result<Vec<Check>> {
    let r = m137_checks(cx.reg)?;
    let mut out = vec![
        Check::new("(s+1)^2 (s-2) = -2 - 3s + s^3", r.first_factorization, ""),
        Check::new(
            "(s+1)(s+2)(s-2) = -(4 + 4s - s^2 - s^3)",
            r.second_sign.is_some(),
            format!(
                "sign={}",
                r.second_sign.map_or("none".into(), |s| s.to_string())
            ),
        ),
        Check::new(
            "component fixture matches the display",
            r.component_matches,
            "",
        ),
        Check::new(
            format!("relator {} maps to +-I", r.relator),
            r.relator_sign.is_some(),
            format!(
                "sign={}",
                r.relator_sign.map_or("none".into(), |s| s.to_string())
            ),
        ),
    ];
    for (d, obstructed) in [(9, true), (10, false), (14, false)] {
        let u = m137_unit_report(d)?;
        out.push(Check::new(
            format!(
                "units at d={d} {}",
                if obstructed {
                    "obstructed"
                } else {
                    "unobstructed"
                }
            ),
            u.obstructed() == obstructed,
            u.line(),
        ));
    }
    Ok(out)
}

fn alexander(cx: &Ctx) -> Result<Vec<Check>> {
    let delta = cx.reg.poly("alexander")?;
    let ds: Vec<u64> = (3..=99).step_by(2).collect();
    let table = cover_table(&delta, &ds)?;
    let mut out = Vec::new();
    for c in table.iter().filter(|c| c.d <= 21) {
        let lcp = leading_coeff_product(c.d)?;
        let ok = c.degree as u64 == c.d - 1 && c.lead == lcp && !c.lead.is_zero();
        out.push(Check::new(format!("cover d={}", c.d), ok, c.line()));
    }
    let three = table.iter().find(|c| c.d == 3).map(|c| c.lead.abs());
    out.push(Check::new(
        "|leading coefficient| at d=3 is 49",
        three == Some(BigInt::from(49)),
        three.map_or("missing".into(), |x| x.to_string()),
    ));
    let trivial: Vec<u64> = table.iter().filter(|c| c.trivial).map(|c| c.d).collect();
    out.push(Check::new(
        "nontrivial for odd 3 <= d <= 99",
        trivial.is_empty(),
        format!("trivial at {trivial:?}"),
    ));
    let t = torres_check(&delta)?;
    let want = parse_poly(COMPONENT_ALEXANDER, &["v"], Integers)?;
    out.push(Check::new(
        "Delta(1, v) = (v + 1) * knotted component polynomial",
        t.matches(&want),
        t.quotient
            .map_or("division refused".into(), |q| format!("quotient={q}")),
    ));
    Ok(out)
}

fn knots(cx: &Ctx) -> Result<Vec<Check>> {
    let t = KnotTable::parse(cx.reg.text("knots")?)?;
    let c = t.counts();
    Ok(vec![Check::new(
        "knot table counts by certifying prime",
        c == KNOT_COUNTS,
        format!(
            "only2={} only3={} other={} rows={}",
            c.0,
            c.1,
            c.2,
            t.rows.len()
        ),
    )])
}

type SectionFn = fn(&Ctx) -> Result<Vec<Check>>;

fn section_fn(name: &str) -> SectionFn {
    match name {
        "derive-q" => derive_q,
        "eliminate" => eliminate,
        "factor" => factor,
        "integrality" => integrality_section,
        "lift" => lift,
        "newton" => newton,
        "dzannier" => dzannier,
        "roots-of-unity" => roots_of_unity,
        "units" => units,
        "r1" => r1,
        "m137" => m137,
        "alexander" => alexander,
        "knots" => knots,
        _ => unreachable!("unknown section {name}"),
    }
}

/// Runs every section not skipped, in [`SECTIONS`] order. Fixture errors
/// abort the run; any other error becomes a failed check.
pub fn run_pipeline(reg: &FixtureRegistry, opts: &PipelineOptions) -> Result<PipelineReport> {
    if let Some(bad) = opts.skip.iter().find(|s| !SECTIONS.contains(&s.as_str())) {
        return Err(Error::InvalidArgument(format!(
            "unknown section `{bad}`; sections are {}",
            SECTIONS.join(", ")
        )));
    }
    let cx = Ctx { reg, opts };
    let mut sections = Vec::new();
    for &name in SECTIONS {
        if opts.skip.iter().any(|s| s == name) {
            sections.push(Section { name, checks: None });
            continue;
        }
        let checks = match section_fn(name)(&cx) {
            Ok(c) => c,
            Err(e @ Error::Fixture { .. }) => return Err(e),
            Err(e) => vec![Check::new(format!("{name} ran"), false, e.to_string())],
        };
        sections.push(Section {
            name,
            checks: Some(checks),
        });
    }
    Ok(PipelineReport { sections })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skipping_and_unknown_sections() {
        let reg = FixtureRegistry::new();
        let mut opts = PipelineOptions::default();
        opts.skip = SECTIONS
            .iter()
            .filter(|s| **s != "knots")
            .map(|s| s.to_string())
            .collect();
        let r = run_pipeline(&reg, &opts).unwrap();
        assert!(r.section("dzannier").unwrap().checks.is_none());
        assert_eq!(r.exit_code(), 0);
        assert!(r.to_string().contains("[dzannier] SKIPPED"));
        opts.skip = vec!["nope".into()];
        assert!(run_pipeline(&reg, &opts).is_err());
    }
}
