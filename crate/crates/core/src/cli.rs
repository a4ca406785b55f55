//! Command-line frontend. [`run`] parses arguments, dispatches to the library
//! and writes to the given streams; the binary only forwards its exit code.
//!
//! Exit codes: 0 success, 1 a check failed (JSON failure report on stdout),
//! 2 usage or input error (message on stderr).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bing::{alpha, d_table, x_coeff};
use crate::error::Error;
use crate::habiro::{
    casson_congruence_check, eval_at_root, lambda_series, mijk_partial, ohtsuki_c, omega, s_sum,
    wrt_at_root, FramingSign, RootResidue, SurgeryTriple,
};
use crate::laurent::{HbarSeries, LaurentV};
use crate::milnor::{borromean_reduced, factor_cyclotomic, milnor_reduced, Factored};
use crate::qnum::CycIndex;
use crate::verify::{self, Level};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "BINGDOUBLE_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Display {
    /// Exponents of v = q^(1/2).
    V,
    /// Exponents of q; rejected for odd powers of v.
    Q,
}

#[derive(Debug, Parser)]
#[command(
    name = "bingdouble",
    version,
    about = "Exact q-series algebra for Bing doubles"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    format: OutputFormat,
    #[arg(long, global = true, value_enum, default_value_t = Display::V)]
    display: Display,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct FactorArg {
    /// Also strip Φ̃_l factors for l up to this bound.
    #[arg(long, value_name = "BOUND")]
    factor: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// α_{m,n}.
    Alpha { m: u32, n: u32 },
    /// x(i, j, l) = δ_{i,j} (-1)^i {l}! α_{i,l}.
    Xcoeff {
        i: u32,
        j: u32,
        l: u32,
        #[command(flatten)]
        factor: FactorArg,
    },
    /// Table of d_l(α_{m,n}).
    Dltable {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        mmax: u32,
        #[arg(long)]
        nmax: u32,
    },
    /// Reduced colored Jones polynomial of Milnor's link A_n.
    Milnor {
        #[arg(required = true, num_args = 1..)]
        colors: Vec<u32>,
        #[command(flatten)]
        factor: FactorArg,
    },
    /// Reduced colored Jones polynomial of the Borromean rings.
    Borromean {
        i: u32,
        j: u32,
        k: u32,
        #[command(flatten)]
        factor: FactorArg,
    },
    /// s-sum for ±1 surgery on a Bing double.
    #[command(allow_negative_numbers = true)]
    Ssum {
        l: u32,
        eps: i64,
        eps2: i64,
        #[command(flatten)]
        factor: FactorArg,
    },
    /// Habiro's weight ω_{p,n}.
    #[command(allow_negative_numbers = true)]
    Omega { p: i64, n: u32 },
    /// Truncated unified WRT invariant of M_{i,j,k}, or its Casson congruence check.
    #[command(allow_negative_numbers = true)]
    Mijk {
        i: i64,
        j: i64,
        k: i64,
        /// Keep summands l ≤ LEVEL.
        #[arg(long, default_value_t = 2)]
        level: u32,
        /// Run the Casson congruence check with tail terms up to TAIL instead.
        #[arg(long, value_name = "TAIL")]
        casson: Option<u32>,
    },
    /// Coefficients of 1/((q+1)^2 (q^2+q+1) (q^2+1)) in ħ = q - 1.
    OhtsukiC {
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Truncated Ohtsuki series of M_{i,j,k}.
    #[command(allow_negative_numbers = true)]
    Lambda {
        i: i64,
        j: i64,
        k: i64,
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Value at a primitive m-th root of unity.
    #[command(allow_negative_numbers = true)]
    Evalroot {
        #[arg(long)]
        m: u32,
        /// Polynomial as JSON pairs [[v_exponent, "coefficient"], ...].
        #[arg(long, conflicts_with = "wrt", required_unless_present = "wrt")]
        poly: Option<String>,
        /// τ_ζ(M_{i,j,k}) for the given i, j, k.
        #[arg(long, num_args = 3, value_names = ["I", "J", "K"])]
        wrt: Option<Vec<i64>>,
    },
    /// Runs the acceptance criteria and invariant suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Fast => Level::Fast,
            LevelArg::Full => Level::Full,
        }
    }
}

enum Failure {
    Usage(String),
    Check(serde_json::Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Check(report)) => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).unwrap_or_default()
            );
            1
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, String> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| e.to_string())
}

fn sign(v: i64) -> Result<FramingSign, Failure> {
    FramingSign::from_value(v)
        .ok_or_else(|| Failure::Usage(format!("framing sign must be 1 or -1, got {v}")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let fmt = cli.format;
    let disp = cli.display;
    match &cli.command {
        Command::Alpha { m, n } => emit_poly(out, fmt, disp, &alpha(*m, *n), None),
        Command::Xcoeff { i, j, l, factor } => {
            emit_poly(out, fmt, disp, &x_coeff(*i, *j, *l), factor.factor)
        }
        Command::Dltable { l, mmax, nmax } => {
            let table = d_table(CycIndex::new(*l)?, *mmax, *nmax);
            let text = match fmt {
                OutputFormat::Pretty => table.to_pretty(),
                OutputFormat::Csv => table.to_csv(),
                OutputFormat::Json => format!("{}\n", table.to_json()),
            };
            write!(out, "{text}")?;
            Ok(())
        }
        Command::Milnor { colors, factor } => {
            emit_poly(out, fmt, disp, &milnor_reduced(colors)?, factor.factor)
        }
        Command::Borromean { i, j, k, factor } => emit_poly(
            out,
            fmt,
            disp,
            &borromean_reduced(*i, *j, *k),
            factor.factor,
        ),
        Command::Ssum {
            l,
            eps,
            eps2,
            factor,
        } => {
            if *l == 0 {
                return Err(Failure::Usage("s-sum index l must be at least 1".into()));
            }
            emit_poly(
                out,
                fmt,
                disp,
                &s_sum(*l, sign(*eps)?, sign(*eps2)?),
                factor.factor,
            )
        }
        Command::Omega { p, n } => emit_poly(out, fmt, disp, &omega(*p, *n), None),
        Command::Mijk {
            i,
            j,
            k,
            level,
            casson,
        } => {
            let t = SurgeryTriple::new(*i, *j, *k);
            match casson {
                None => emit_poly(out, fmt, disp, &mijk_partial(t, *level), None),
                Some(tail) => {
                    let report = casson_congruence_check(t, *tail)?;
                    let value = serde_json::to_value(&report).expect("report serializes");
                    if !report.pass() {
                        return Err(Failure::Check(
                            json!({ "name": "casson_congruence", "report": value }),
                        ));
                    }
                    match fmt {
                        OutputFormat::Json => writeln!(
                            out,
                            "{}",
                            serde_json::to_string_pretty(&value).expect("json")
                        )?,
                        OutputFormat::Csv => {
                            writeln!(out, "i,j,k,tail,residue,expected,pass")?;
                            writeln!(
                                out,
                                "{},{},{},{},{},{},{}",
                                t.i,
                                t.j,
                                t.k,
                                tail,
                                report
                                    .residue
                                    .as_ref()
                                    .map(|r| r.to_string())
                                    .unwrap_or_default(),
                                report.expected,
                                report.pass()
                            )?
                        }
                        OutputFormat::Pretty => writeln!(
                            out,
                            "J - 1 ≡ {} Φ_2 (mod Φ_2^2), tail terms 3..={} divisible: pass",
                            report.expected, tail
                        )?,
                    }
                    Ok(())
                }
            }
        }
        Command::OhtsukiC { order } => emit_series(out, fmt, "c", &ohtsuki_c(*order)),
        Command::Lambda { i, j, k, order } => {
            let t = SurgeryTriple::new(*i, *j, *k);
            let s = lambda_series(t, *order);
            if !s.boundary_ok {
                return Err(Failure::Check(json!({
                    "name": "lambda_truncation_boundary",
                    "parameters": { "i": i, "j": j, "k": k, "order": order },
                    "pass": false,
                })));
            }
            emit_series(out, fmt, "lambda", &s.series)
        }
        Command::Evalroot { m, poly, wrt } => {
            let residue = match (poly, wrt) {
                (Some(p), _) => {
                    let f = LaurentV::from_json(p)
                        .map_err(|e| Failure::Usage(format!("bad polynomial JSON: {e}")))?;
                    eval_at_root(&f, *m)?
                }
                (None, Some(v)) => wrt_at_root(SurgeryTriple::new(v[0], v[1], v[2]), *m)?,
                (None, None) => unreachable!("clap requires --poly or --wrt"),
            };
            emit_residue(out, fmt, &residue)
        }
        Command::Verify { level } => {
            let report = verify::run((*level).into());
            match fmt {
                OutputFormat::Json => {
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&report).expect("json")
                    )?;
                }
                OutputFormat::Csv => {
                    writeln!(out, "section,title,checks,failed,pass")?;
                    for s in &report.sections {
                        let failed = s.failures().count();
                        writeln!(
                            out,
                            "{},\"{}\",{},{},{}",
                            s.id,
                            s.title,
                            s.checks.len(),
                            failed,
                            failed == 0
                        )?;
                    }
                }
                OutputFormat::Pretty => {
                    for s in &report.sections {
                        writeln!(out, "{}", s.line())?;
                    }
                    writeln!(
                        out,
                        "verify --level {}: {} checks, {}",
                        report.level,
                        report.check_count(),
                        if report.pass() {
                            "all passed"
                        } else {
                            "FAILURES"
                        }
                    )?;
                }
            }
            if report.pass() {
                Ok(())
            } else {
                Err(Failure::Check(report.failure_report()))
            }
        }
    }
}

fn render(f: &LaurentV, disp: Display) -> Result<String, Failure> {
    match disp {
        Display::V => Ok(f.to_string()),
        Display::Q => f.to_q_string().map_err(|_| {
            Failure::Usage("--display q needs even powers of v; use --display v".into())
        }),
    }
}

fn render_factored(fac: &Factored, disp: Display) -> Result<String, Failure> {
    let mut parts: Vec<String> = fac
        .factors
        .iter()
        .map(|&(l, e)| {
            if e == 1 {
                format!("Φ̃{l}")
            } else {
                format!("Φ̃{l}^{e}")
            }
        })
        .collect();
    let minus_one = LaurentV::constant(-1);
    let negate = fac.cofactor == minus_one;
    if !fac.cofactor.is_one() && !negate {
        parts.push(format!(
            "({})",
            render(&fac.cofactor, disp).or_else(|_| render(&fac.cofactor, Display::V))?
        ));
    }
    let body = if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" * ")
    };
    Ok(if negate { format!("-{body}") } else { body })
}

fn emit_poly(
    out: &mut dyn Write,
    fmt: OutputFormat,
    disp: Display,
    f: &LaurentV,
    factor: Option<u32>,
) -> Outcome {
    let factored = factor.map(|b| factor_cyclotomic(f, b));
    match fmt {
        OutputFormat::Pretty => {
            writeln!(out, "{}", render(f, disp)?)?;
            if let Some(fac) = &factored {
                writeln!(out, "= {}", render_factored(fac, disp)?)?;
            }
        }
        OutputFormat::Csv => {
            if disp == Display::Q && !f.is_even_support() {
                render(f, disp)?;
            }
            let (var, unit) = match disp {
                Display::V => ("v", 1),
                Display::Q => ("q", 2),
            };
            writeln!(out, "{var}_exponent,coefficient")?;
            for (e, c) in f.terms() {
                writeln!(out, "{},{}", e / unit, c)?;
            }
        }
        OutputFormat::Json => {
            let mut obj = json!({ "value": f });
            if let Some(fac) = factored {
                obj["factored"] = serde_json::to_value(fac).expect("json");
            }
            writeln!(out, "{}", serde_json::to_string(&obj).expect("json"))?;
        }
    }
    Ok(())
}

fn emit_series(out: &mut dyn Write, fmt: OutputFormat, name: &str, s: &HbarSeries) -> Outcome {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    match fmt {
        OutputFormat::Pretty => {
            for (i, c) in coeffs.iter().enumerate() {
                writeln!(out, "{name}_{i} = {c}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "i,{name}")?;
            for (i, c) in coeffs.iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({ "variable": "hbar", "coefficients": coeffs })
        )?,
    }
    Ok(())
}

fn emit_residue(out: &mut dyn Write, fmt: OutputFormat, r: &RootResidue) -> Outcome {
    let coeffs: Vec<String> = r.coeffs().iter().map(|c| c.to_string()).collect();
    match fmt {
        OutputFormat::Pretty => {
            let terms: Vec<(i64, _)> = r
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (2 * k as i64, c.clone()))
                .collect();
            let text = LaurentV::from_terms(terms)
                .to_q_string()
                .expect("even support");
            writeln!(
                out,
                "{} (q = primitive {}-th root of unity)",
                text,
                r.order()
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "power,coefficient")?;
            for (k, c) in coeffs.iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            json!({ "m": r.order(), "basis": "q^k mod Phi_m", "coeffs": coeffs })
        )?,
    }
    Ok(())
}
