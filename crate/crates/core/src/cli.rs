//! The `ntrace` command line. Exit status: 0 all passed, 1 a check was
//! refuted, 2 inconclusive results present, 3 usage or input error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alexander::{cover_table, torres_check, CoverAlexander, COMPONENT_ALEXANDER};
use crate::arith::{
    parse_elem, parse_poly, print_fixture, reciprocal_lift, stretch, Integers, QuadraticField,
};
use crate::certify::{integrality, m137_checks};
use crate::cyclo::{m137_unit_report, unit_2cos_shift};
use crate::elim::{divides, resultant};
use crate::error::{Error, Result};
use crate::fixtures::FixtureRegistry;
use crate::irred::{
    certify_root_of_unity_with, dzannier_driver, newton_polygon, specialize_irreducible_q,
    IrreducibilityTable, SpecializationIdeal, Verdict, DEFAULT_MAX_ATTEMPTS, DEFAULT_PRIME_BUDGET,
};
use crate::pipeline::{run_pipeline, PipelineOptions, SECTIONS};
use crate::words::{
    derive_meridian_trace, parse_word, trace_poly_with_budget, DEFAULT_LENGTH_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ntrace",
    version,
    about = "Exact checks on trace polynomials of knot and link groups"
)]
pub struct Cli {
    /// Replace a bundled fixture with a file, as NAME=PATH. Repeatable.
    #[arg(long, global = true, value_name = "NAME=PATH", value_parser = parse_replacement)]
    pub replace: Vec<(String, PathBuf)>,

    #[command(subcommand)]
    pub command: Command,
}

fn parse_replacement(s: &str) -> std::result::Result<(String, PathBuf), String> {
    let (name, path) = s.split_once('=').ok_or("expected NAME=PATH")?;
    FixtureRegistry::info(name).map_err(|e| e.to_string())?;
    Ok((name.to_string(), PathBuf::from(path)))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableChoice {
    /// The bundled table for m = 1..24.
    Paper,
    /// A fresh sweep to `--m`, table rows tried first.
    Extended,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Trace of a word in a, b as a polynomial in X = tr a, Y = tr b, Z = tr ab.
    TracePoly {
        word: String,
        #[arg(long, default_value_t = DEFAULT_LENGTH_BUDGET)]
        budget: usize,
    },
    /// Derive Q from the meridian word and compare with the fixture.
    DeriveQ,
    /// Eliminate X from P and Q and divide the result by R.
    Eliminate,
    /// Compare X^8 R(X + 1/X, Y) with S.
    Lift,
    /// Newton polygons of S(X^m, Y).
    Newton {
        /// A single m; all of 1..24 when absent.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Irreducibility certificates for f(X^m, Y) by specialization.
    Certify {
        #[arg(long, default_value = "S")]
        fixture: String,
        #[arg(long, value_enum, default_value_t = TableChoice::Paper)]
        table: TableChoice,
        /// Largest m for the extended table, or the single row to check.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Rational and absolute irreducibility of S(X^m, Y) for all m up to `--m`.
    Dzannier {
        #[arg(long, default_value_t = 24)]
        m: u32,
    },
    /// Certificate that S(zeta_d, Y) is irreducible over Q(zeta_d).
    DehnCert {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        budget_primes: u64,
    },
    /// Unit status of 2cos(2pi/d) and its shifts.
    Units {
        /// A single d; the odd sweep 3..199 when absent.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Alexander polynomials of cyclic branched covers.
    Alexander {
        /// A single cover degree; odd 3..21 with the Torres check when absent.
        #[arg(long)]
        d: Option<u64>,
    },
    /// Minimal polynomials and certifying primes of quadratic elements.
    Integrality {
        /// Elements such as `(17+3*sqrt(-7))/8`.
        elements: Vec<String>,
        #[arg(long, default_value_t = -7, allow_negative_numbers = true)]
        field: i64,
    },
    /// Identities and unit reports for the census manifold m137.
    M137,
    /// Every check in order, as one report.
    ReproducePaper {
        /// Section to skip. Repeatable.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SECTIONS))]
        skip: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_PRIME_BUDGET)]
        budget_primes: u64,
    },
}

/// Parses `args` (program name first), runs the command and writes its
/// report to `out`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn registry(cli: &Cli) -> Result<FixtureRegistry> {
    let mut reg = FixtureRegistry::new();
    for (name, path) in &cli.replace {
        reg = reg.with_override_file(name, path)?;
    }
    Ok(reg)
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Certified => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let reg = registry(cli)?;
    let mut text = String::new();
    let code = dispatch(&cli.command, &reg, &mut text)?;
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(code)
}

macro_rules! emit {
    ($buf:expr, $($arg:tt)*) => {{
        $buf.push_str(&format!($($arg)*));
        $buf.push('\n');
    }};
}

fn dispatch(cmd: &Command, reg: &FixtureRegistry, o: &mut String) -> Result<i32> {
    match cmd {
        Command::TracePoly { word, budget } => {
            let w = parse_word(word)?;
            emit!(o, "{}", trace_poly_with_budget(&w, *budget)?);
            Ok(EXIT_OK)
        }
        Command::DeriveQ => {
            let q = derive_meridian_trace(reg.presentation("L11n106")?.word("m0")?)?;
            let same = print_fixture(&q) == print_fixture(&reg.poly("Q")?);
            o.push_str(&print_fixture(&q));
            emit!(o, "{} fixture Q", if same { "MATCH" } else { "MISMATCH" });
            Ok(if same { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Eliminate => {
            let res = resultant(&reg.poly("P")?, &reg.poly("Q")?, "X")?;
            let deg = |v: &str| res.degree_of(v).ok().flatten().unwrap_or(0);
            emit!(
                o,
                "RESULTANT terms={} deg_t={} deg_Y={}",
                res.len(),
                deg("t"),
                deg("Y")
            );
            match divides(&reg.poly("R")?, &res)?.quotient() {
                Some(c) => {
                    emit!(o, "DIVIDES R cofactor={c}");
                    Ok(EXIT_OK)
                }
                None => {
                    emit!(o, "NOT DIVISIBLE by R");
                    Ok(EXIT_REFUTED)
                }
            }
        }
        Command::Lift => {
            let lifted = reciprocal_lift(&reg.poly("R")?, 8)?;
            let same = print_fixture(&lifted) == print_fixture(&reg.poly("S")?);
            emit!(o, "{} fixture S", if same { "MATCH" } else { "MISMATCH" });
            Ok(if same { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::Newton { m } => {
            let s = reg.poly("S")?;
            let ms: Vec<u32> = m.map_or((1..=24).collect(), |m| vec![m]);
            let mut code = EXIT_OK;
            for m in ms {
                let np = newton_polygon(&stretch(&s, "X", m)?)?;
                let vs: Vec<String> = np
                    .vertices()
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect();
                let ok = np.has_vertex((0, 1)) && np.vertex_gcd() == 1;
                if !ok {
                    code = EXIT_REFUTED;
                }
                emit!(
                    o,
                    "NEWTON m={m} vertex(0,1)={} gcd={} vertices=[{}]",
                    np.has_vertex((0, 1)),
                    np.vertex_gcd(),
                    vs.join(",")
                );
            }
            Ok(code)
        }
        Command::Certify { fixture, table, m } => certify(reg, fixture, *table, *m, o),
        Command::Dzannier { m } => {
            let t = bundled_table(reg)?;
            let rep = dzannier_driver(&reg.poly("S")?, "S", *m, Some(&t))?;
            o.push_str(&rep.to_string());
            Ok(if rep.failing().is_empty() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            })
        }
        Command::DehnCert { d, budget_primes } => {
            let c = certify_root_of_unity_with(
                &reg.poly("S")?,
                "S",
                *d,
                *budget_primes,
                DEFAULT_MAX_ATTEMPTS,
            )?;
            for t in &c.trail {
                emit!(o, "# {t}");
            }
            emit!(o, "{}", c.line());
            Ok(verdict_code(c.verdict))
        }
        Command::Units { d } => {
            match d {
                Some(d) => {
                    for c in [0, -1, 2] {
                        let u = unit_2cos_shift(*d, c)?;
                        emit!(
                            o,
                            "UNIT {} norm={} full_norm={} unit={}",
                            u.expression,
                            u.norm,
                            u.full_norm,
                            if u.is_unit { "yes" } else { "no" }
                        );
                    }
                    emit!(o, "{}", m137_unit_report(*d)?.line());
                }
                None => {
                    let mut non_units = Vec::new();
                    for d in (3..=199u64).step_by(2) {
                        if !unit_2cos_shift(d, 0)?.is_unit {
                            emit!(o, "NON-UNIT 2cos(2pi/{d})");
                        }
                        if !unit_2cos_shift(d, 2)?.is_unit {
                            non_units.push(d.to_string());
                        }
                    }
                    emit!(
                        o,
                        "UNITS odd 3..199: 2cos(2pi/d) - 2 is a non-unit at d = {}",
                        non_units.join(", ")
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Alexander { d } => {
            let delta = reg.poly("alexander")?;
            match d {
                Some(d) => emit!(o, "{}", CoverAlexander::compute(&delta, *d)?.line()),
                None => {
                    for c in cover_table(&delta, &(3..=21).step_by(2).collect::<Vec<_>>())? {
                        emit!(o, "{}", c.line());
                    }
                    let t = torres_check(&delta)?;
                    let want = parse_poly(COMPONENT_ALEXANDER, &["v"], Integers)?;
                    emit!(
                        o,
                        "TORRES quotient={} match={}",
                        t.quotient.as_ref().map_or("none".into(), |q| q.to_string()),
                        if t.matches(&want) { "yes" } else { "no" }
                    );
                    if !t.matches(&want) {
                        return Ok(EXIT_REFUTED);
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Integrality { elements, field } => {
            let k = QuadraticField::new(*field)?;
            let defaults = ["(17+3*sqrt(-7))/8", "(13+7*sqrt(-7))/8"];
            let list: Vec<&str> = if elements.is_empty() {
                defaults.to_vec()
            } else {
                elements.iter().map(String::as_str).collect()
            };
            for e in list {
                let x = parse_elem(e, &k)?;
                emit!(o, "{}", integrality(&k, &x).line());
            }
            Ok(EXIT_OK)
        }
        Command::M137 => {
            let r = m137_checks(reg)?;
            for l in r.lines() {
                emit!(o, "{l}");
            }
            for d in [9, 10, 14] {
                emit!(o, "{}", m137_unit_report(d)?.line());
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::ReproducePaper {
            skip,
            budget_primes,
        } => {
            let opts = PipelineOptions {
                skip: skip.clone(),
                budget_primes: *budget_primes,
                ..PipelineOptions::default()
            };
            let rep = run_pipeline(reg, &opts)?;
            o.push_str(&rep.to_string());
            Ok(rep.exit_code())
        }
    }
}

fn bundled_table(reg: &FixtureRegistry) -> Result<IrreducibilityTable> {
    IrreducibilityTable::parse(reg.text("table")?)
        .map_err(|e| Error::fixture("table", e.to_string()))
}

fn certify(
    reg: &FixtureRegistry,
    fixture: &str,
    table: TableChoice,
    m: Option<u32>,
    o: &mut String,
) -> Result<i32> {
    let f = reg.poly(fixture)?;
    if f.nvars() != 2 {
        return Err(Error::InvalidArgument(format!(
            "fixture {fixture} is in [{}], expected two variables",
            f.vars().join(" ")
        )));
    }
    let x = f.vars()[0].clone();
    let y = f.vars()[1].clone();
    let t = bundled_table(reg)?;
    match table {
        TableChoice::Paper => {
            let mut code = EXIT_OK;
            for &(row_m, p) in t.rows.iter().filter(|r| m.is_none_or(|m| r.0 == m)) {
                let g = stretch(&f, &x, row_m)?;
                let name = format!("{fixture}({x}^{row_m},{y})");
                let c = specialize_irreducible_q(
                    &g,
                    &SpecializationIdeal::new(x.clone(), 2, p)?,
                    &name,
                )?;
                emit!(o, "{}", c.line());
                code = code.max(verdict_code(c.verdict));
            }
            Ok(code)
        }
        TableChoice::Extended => {
            let rep = dzannier_driver(&f, fixture, m.unwrap_or(48), Some(&t))?;
            o.push_str(&rep.to_string());
            Ok(if rep.failing().is_empty() {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            })
        }
    }
}
