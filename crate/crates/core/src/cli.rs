//! Command-line front end. Exit codes: 0 success, 1 failed check, 2 input
//! error, 3 Groebner budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::closures::{integral_closure_monomial, symbolic_power_dim1, DEFAULT_E_MAX};
use crate::corpus::{cross_tabulate, load_corpus, run_corpus, RingSpec, Summary};
use crate::divisorial::{divisorial, divisorial_both, divisorial_via_ext};
use crate::error::{Error, Result};
use crate::homology::{ext, fitting_ideal, resolve, Matrix};
use crate::ideals::{AmbientRing, Ideal};
use crate::poly::{parse_seed, EngineConfig, DEFAULT_PAIR_BUDGET, DEFAULT_SEED};
use crate::report::{CheckReport, Verdict};
use crate::semigroup::{parse_exponents, FracIdeal, NumericalSemigroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Colon,
    Ext,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SemigroupOp {
    Info,
    Divisorial,
    Dual,
    Closure,
    Frobclosure,
    Trace,
    Conductor,
}

#[derive(Debug, Parser)]
#[command(name = "divisor-lab", version, about = "Exact computation of higher divisorial ideals")]
pub struct Cli {
    /// Ambient ring, e.g. `QQ[x,y]` or `GF(2)[x,y,z]/(x^2, x*y)`.
    #[arg(long, global = true, default_value = "QQ[x,y]")]
    pub ring: String,
    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    pub order: Order,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed of the pseudo-random candidate stream (hex, or any string).
    #[arg(long, global = true, default_value = DEFAULT_SEED)]
    pub seed: String,
    /// Groebner pair budget per basis computation.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb { ideal: String },
    /// Ideal quotient `(I : J)`.
    Colon { ideal: String, by: String },
    /// `I ∩ J`.
    Intersect { ideal: String, other: String },
    /// `(I : J^∞)`; `J` defaults to the ideal of the variables.
    Saturate { ideal: String, by: Option<String> },
    /// `D(I) = Ann(Ext^g(R/I, R))`.
    Divisorial {
        ideal: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Colon)]
        route: RouteArg,
    },
    /// Presentation of `Ext^i(M, R)` for `M = R/I` or `coker` of `--module`.
    Ext {
        ideal: Option<String>,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        module: Option<String>,
    },
    /// Betti numbers of a minimal resolution of `R/I` or of `coker` of `--module`.
    Betti {
        ideal: Option<String>,
        #[arg(long)]
        module: Option<String>,
    },
    /// Fitting ideal of `coker` of a matrix `[a, b; c, d]`.
    Fitting {
        module: String,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Integral closure of a monomial ideal.
    Intclosure { ideal: String },
    /// Symbolic power of a prime with one-dimensional quotient.
    Symbpower {
        ideal: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Numerical semigroup arithmetic.
    Semigroup {
        gens: Vec<u64>,
        #[arg(long, value_enum, default_value_t = SemigroupOp::Info)]
        op: SemigroupOp,
        /// Generators of a monomial ideal, e.g. `10,11,12,19`.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_E_MAX)]
        e_max: u32,
    },
    /// Run a corpus file or directory.
    Verify {
        path: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        threads: usize,
        /// Zero the `millis` field for byte-comparable reports.
        #[arg(long)]
        no_timing: bool,
    },
    /// Verdicts per cited section, from a corpus or a saved JSON report.
    Report {
        path: PathBuf,
        #[arg(long, default_value_t = 4)]
        threads: usize,
    },
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, text: String, value: Json) -> Result<()> {
        let s = match self.format {
            Format::Text => text,
            Format::Json => serde_json::to_string_pretty(&value).expect("serialisable"),
        };
        writeln!(self.w, "{s}").map_err(|e| Error::Io(e.to_string()))
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

/// Parses `argv` and runs; output goes to `out`, diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn config(cli: &Cli) -> EngineConfig {
    EngineConfig {
        pair_budget: cli.budget,
        seed: parse_seed(&cli.seed),
    }
}

fn ring(cli: &Cli) -> Result<Arc<AmbientRing>> {
    let order = match cli.order {
        Order::Lex => "lex",
        Order::Grevlex => "grevlex",
    };
    RingSpec::from_text(&cli.ring, order)?.build(config(cli))
}

fn ideal_json(i: &Ideal) -> Result<Json> {
    let gens: Vec<String> = i.canonical_gens()?.iter().map(|g| g.to_string()).collect();
    Ok(json!({"ideal": i.to_string(), "gens": gens}))
}

fn module_of(ring: &Arc<AmbientRing>, ideal: &Option<String>, module: &Option<String>) -> Result<Matrix> {
    match (ideal, module) {
        (_, Some(m)) => Matrix::parse(ring, m),
        (Some(i), None) => Ok(Matrix::generator_row(&ring.parse_ideal(i)?)),
        (None, None) => Err(Error::Expression("give an ideal or --module".into())),
    }
}

fn execute(cli: &Cli, w: &mut dyn Write) -> Result<i32> {
    let mut out = Out { format: cli.format, w };
    match &cli.command {
        Command::Gb { ideal } => {
            let r = ring(cli)?;
            let i = r.parse_ideal(ideal)?;
            let gb: Vec<String> = i.gb()?.iter().map(|g| g.to_string()).collect();
            out.emit(gb.join("\n"), json!({"gb": gb}))?;
        }
        Command::Colon { ideal, by } => {
            let r = ring(cli)?;
            let c = r.parse_ideal(ideal)?.colon(&r.parse_ideal(by)?)?;
            out.emit(c.to_string(), ideal_json(&c)?)?;
        }
        Command::Intersect { ideal, other } => {
            let r = ring(cli)?;
            let c = r.parse_ideal(ideal)?.intersect(&r.parse_ideal(other)?)?;
            out.emit(c.to_string(), ideal_json(&c)?)?;
        }
        Command::Saturate { ideal, by } => {
            let r = ring(cli)?;
            let j = match by {
                Some(b) => r.parse_ideal(b)?,
                None => r.maximal_ideal(),
            };
            let (s, k) = r.parse_ideal(ideal)?.saturate(&j)?;
            let mut v = ideal_json(&s)?;
            v["exponent"] = json!(k);
            out.emit(format!("{s}\nstabilises at exponent {k}"), v)?;
        }
        Command::Divisorial { ideal, route } => {
            let r = ring(cli)?;
            let i = r.parse_ideal(ideal)?;
            let res = match route {
                RouteArg::Colon => divisorial(&i)?,
                RouteArg::Ext => divisorial_via_ext(&i)?,
                RouteArg::Both => divisorial_both(&i)?,
            };
            let seq: Vec<String> = res.sequence.iter().map(|g| g.to_string()).collect();
            let mut text = format!("D = {}", res.d);
            if let Some(a) = res.agreement {
                text.push_str(&format!("\nroutes agree: {a}"));
            }
            let v = json!({
                "grade": res.grade,
                "sequence": seq,
                "D": res.d.to_string(),
                "agreement": res.agreement,
            });
            out.emit(text, v)?;
            if res.agreement == Some(false) {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Ext { ideal, index, module } => {
            let r = ring(cli)?;
            let e = ext(&module_of(&r, ideal, module)?, *index)?;
            out.emit(
                format!("coker {e}"),
                json!({"rows": e.rows(), "cols": e.cols(), "presentation": e.to_string()}),
            )?;
        }
        Command::Betti { ideal, module } => {
            let r = ring(cli)?;
            let res = resolve(&module_of(&r, ideal, module)?, None)?;
            if !res.minimal {
                return Err(Error::NotMinimal);
            }
            let b = res.betti();
            let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            out.emit(parts.join(" "), json!({"betti": b}))?;
        }
        Command::Fitting { module, index } => {
            let r = ring(cli)?;
            let f = fitting_ideal(&Matrix::parse(&r, module)?, *index)?;
            out.emit(f.to_string(), ideal_json(&f)?)?;
        }
        Command::Intclosure { ideal } => {
            let r = ring(cli)?;
            let c = integral_closure_monomial(&r.parse_ideal(ideal)?)?;
            out.emit(c.to_string(), ideal_json(&c)?)?;
        }
        Command::Symbpower { ideal, n } => {
            let r = ring(cli)?;
            let s = symbolic_power_dim1(&r.parse_ideal(ideal)?, *n)?;
            out.emit(s.to_string(), ideal_json(&s)?)?;
        }
        Command::Semigroup {
            gens,
            op,
            ideal,
            p,
            e_max,
        } => semigroup(&mut out, gens, *op, ideal.as_deref(), *p, *e_max)?,
        Command::Verify {
            path,
            output,
            threads,
            no_timing,
        } => {
            let entries = load_corpus(path)?;
            let mut reports = run_corpus(&entries, config(cli), *threads);
            if *no_timing {
                reports.iter_mut().for_each(|r| r.millis = 0);
            }
            let json_text = serde_json::to_string_pretty(&reports).expect("serialisable");
            if let Some(o) = output {
                std::fs::write(o, format!("{json_text}\n")).map_err(|e| Error::Io(e.to_string()))?;
            }
            let summary = Summary::of(&reports);
            match cli.format {
                Format::Json => writeln!(out.w, "{json_text}").map_err(|e| Error::Io(e.to_string()))?,
                Format::Text => {
                    writeln!(out.w, "{}", summary_table(&reports, &summary)).map_err(|e| Error::Io(e.to_string()))?
                }
            }
            if summary.budget_exceeded > 0 {
                return Ok(EXIT_BUDGET);
            }
            if summary.failures() > 0 {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Report { path, threads } => {
            let reports: Vec<CheckReport> = if path.is_file() && is_report_file(path) {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
                serde_json::from_str(&text).map_err(|e| Error::Schema {
                    path: path.display().to_string(),
                    field: e.to_string(),
                })?
            } else {
                run_corpus(&load_corpus(path)?, config(cli), *threads)
            };
            let table = cross_tabulate(&reports);
            let mut text = format!(
                "{:<28} {:>5} {:>5} {:>9} {:>11}\n",
                "section", "pass", "fail", "evidence", "assumption"
            );
            let mut value = serde_json::Map::new();
            for (section, counts) in &table {
                let get = |v: Verdict| counts.get(&v).copied().unwrap_or(0);
                text.push_str(&format!(
                    "{:<28} {:>5} {:>5} {:>9} {:>11}\n",
                    section,
                    get(Verdict::Pass),
                    get(Verdict::Fail),
                    get(Verdict::EvidenceOnly),
                    get(Verdict::ExternalAssumption)
                ));
                let row: serde_json::Map<String, Json> =
                    counts.iter().map(|(v, n)| (v.as_str().to_string(), json!(n))).collect();
                value.insert(section.clone(), Json::Object(row));
            }
            out.emit(text.trim_end().to_string(), Json::Object(value))?;
            if Summary::of(&reports).failures() > 0 {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn is_report_file(path: &std::path::Path) -> bool {
    std::fs::read_to_string(path)
        .ok()
        .and_then(|t| serde_json::from_str::<Vec<CheckReport>>(&t).ok())
        .is_some()
}

fn summary_table(reports: &[CheckReport], summary: &Summary) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!("{:<20} {:<48} {}\n", r.verdict.as_str(), r.id, r.cite));
    }
    let counts: Vec<String> = summary
        .by_verdict
        .iter()
        .map(|(v, n)| format!("{} {n}", v.as_str()))
        .collect();
    s.push_str(&format!("{} checks: {}", summary.total, counts.join(", ")));
    s
}

fn semigroup(
    out: &mut Out<'_>,
    gens: &[u64],
    op: SemigroupOp,
    ideal: Option<&str>,
    p: u64,
    e_max: u32,
) -> Result<()> {
    let s = NumericalSemigroup::new(gens)?;
    let frac = || -> Result<FracIdeal> {
        match ideal {
            Some(text) => FracIdeal::new(&s, &parse_exponents(text)?),
            None => Ok(FracIdeal::maximal(&s)),
        }
    };
    let result = match op {
        SemigroupOp::Info => {
            let text = format!(
                "semigroup {s}\ngaps {:?}\nfrobenius number {}\nconductor {}\napery set {:?}",
                s.gaps(),
                s.frobenius_number(),
                s.conductor(),
                s.apery_set()
            );
            let v = json!({
                "generators": s.generators(),
                "gaps": s.gaps(),
                "frobenius": s.frobenius_number(),
                "conductor": s.conductor(),
                "apery": s.apery_set(),
            });
            return out.emit(text, v);
        }
        SemigroupOp::Divisorial => frac()?.divisorial(),
        SemigroupOp::Dual => frac()?.dual(),
        SemigroupOp::Closure => frac()?.integral_closure()?,
        SemigroupOp::Frobclosure => frac()?.frobenius_closure(p, e_max)?,
        SemigroupOp::Trace => frac()?.trace(),
        SemigroupOp::Conductor => FracIdeal::conductor_ideal(&s),
    };
    out.emit(
        result.to_string(),
        json!({"set": result.to_string(), "generators": result.generators()}),
    )
}
