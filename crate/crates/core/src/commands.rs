//! The `gsg` command line.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input,
//! 3 internal defect. Axes are numbered from 1 in all command output.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{difference, m_minus_e, sum};
use crate::canonical::{classify, std_canonical};
use crate::error::{Error, Result};
use crate::format::{parse, serialize};
use crate::generator::{for_each_good, random_good, random_good_ideal, GenConfig};
use crate::lattice::Point;
use crate::render;
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;
use crate::structure::{decompose, jacobson};
use crate::validate::{validate_with_pad, DEFAULT_WINDOW_PAD};
use crate::verify::{verify_identity, verify_suite, IdentityId, SuiteConfig, REPORT_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEFECT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gsg",
    version,
    about = "Exact computation with good semigroups of N^h"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output file, `-` for stdout.
    #[arg(long, global = true, default_value = "-")]
    pub out: String,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Extra margin beyond the conductor for exchange-axiom checks.
    #[arg(long, global = true, default_value_t = DEFAULT_WINDOW_PAD)]
    pub window_pad: i64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    /// Ambient dimension; defaults to the length of `--cap`.
    #[arg(long)]
    pub h: Option<usize>,
    /// Conductor bound, one value per coordinate.
    #[arg(long, num_args = 1.., required = true)]
    pub cap: Vec<i64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl GenArgs {
    fn cap(&self) -> Result<Point> {
        let cap = Point::new(self.cap.iter().copied());
        if let Some(h) = self.h {
            if h != cap.dim() {
                return Err(Error::DimensionMismatch {
                    expected: h,
                    found: cap.dim(),
                });
            }
        }
        Ok(cap)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the good-semigroup axioms.
    Validate {
        path: String,
        /// Check only meet closure and the exchange axiom (relative ideals).
        #[arg(long)]
        as_ideal: bool,
    },
    /// Invariants and classification of a good semigroup.
    Analyze { path: String },
    /// The standard canonical ideal K(S).
    Canonical { path: String },
    /// The dual K(S) - E of a relative ideal E.
    Dual { semigroup: String, ideal: String },
    /// E + F.
    Sum { left: String, right: String },
    /// M - M, or M - e with `--minus-e`.
    Mm {
        path: String,
        #[arg(long)]
        minus_e: bool,
    },
    /// Factorization into local good semigroups.
    Decompose { path: String },
    /// The Jacobson ideal J.
    Jacobson { path: String },
    /// Draw a planar set, optionally with an overlay drawn in open dots.
    Render {
        path: String,
        #[arg(long)]
        overlay: Option<String>,
    },
    /// Check one named identity on a semigroup.
    Verify { path: String, identity: String },
    /// Check identities on seeded random semigroups.
    VerifySuite {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Identities to check (default: all).
        #[arg(long, num_args = 1..)]
        ids: Vec<String>,
    },
    /// A seeded random good semigroup, or a good ideal of `--ideal-of`.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        ideal_of: Option<String>,
    },
    /// Every good semigroup with conductor at most `--cap` (h = 1 or 2).
    Enumerate {
        #[arg(long)]
        h: Option<usize>,
        #[arg(long, num_args = 1.., required = true)]
        cap: Vec<i64>,
    },
}

/// Result of one command: the bytes to write and the exit code.
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            code: EXIT_OK,
        }
    }

    fn checked(output: String, passed: bool) -> Self {
        Outcome {
            output,
            code: if passed { EXIT_OK } else { EXIT_PROPERTY },
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InternalDefect(_) => EXIT_DEFECT,
        _ => EXIT_INPUT,
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(outcome) => match write_output(&cli.common.out, &outcome.output) {
            Ok(()) => outcome.code,
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(PathBuf::from(path)).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidRepresentation(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn write_output(path: &str, text: &str) -> Result<()> {
    let res = if path == "-" {
        io::stdout().write_all(text.as_bytes())
    } else {
        fs::write(path, text)
    };
    res.map_err(|e| Error::InvalidRepresentation(format!("cannot write {path}: {e}")))
}

fn load_set(path: &str) -> Result<TruncatedSet> {
    parse(&read_input(path)?)
}

fn load_semigroup(path: &str, pad: i64) -> Result<GoodSemigroup> {
    let set = load_set(path)?.normalize();
    let findings = validate_with_pad(&set, true, pad);
    if !findings.is_empty() {
        let list: Vec<String> = findings.iter().map(|f| f.to_string()).collect();
        return Err(Error::NotGood(format!("{path}: {}", list.join("; "))));
    }
    GoodSemigroup::new(set)
}

fn one_based(supports: &[Vec<usize>]) -> Vec<Vec<usize>> {
    supports
        .iter()
        .map(|b| b.iter().map(|a| a + 1).collect())
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Writes a set in the requested format; pictures use `base` as the filled
/// layer when given.
fn emit_set(fmt: OutputFormat, set: &TruncatedSet, base: Option<&TruncatedSet>) -> Result<String> {
    match fmt {
        OutputFormat::Text => Ok(serialize(set)),
        OutputFormat::Json => Ok(to_json(set)),
        OutputFormat::Svg => match base {
            Some(b) => render::svg(b, Some(set)),
            None => render::svg(set, None),
        },
        OutputFormat::Ascii => match base {
            Some(b) => render::ascii(b, Some(set)),
            None => render::ascii(set, None),
        },
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let pad = cli.common.window_pad;
    let fmt = cli.common.format;
    let text_or = |default| fmt.unwrap_or(default);
    match &cli.command {
        Command::Validate { path, as_ideal } => {
            let set = load_set(path)?;
            let findings = validate_with_pad(&set, !as_ideal, pad);
            let out = match text_or(OutputFormat::Text) {
                OutputFormat::Json => to_json(&json!({
                    "report_version": REPORT_VERSION,
                    "good": findings.is_empty(),
                    "findings": findings,
                })),
                _ => {
                    let mut s = String::new();
                    if findings.is_empty() {
                        s.push_str("good\n");
                    }
                    for f in &findings {
                        let w: Vec<String> = f.witness.iter().map(Point::to_string).collect();
                        s.push_str(&format!("{f} witness {}\n", w.join(" ")));
                    }
                    s
                }
            };
            Ok(Outcome::checked(out, findings.is_empty()))
        }
        Command::Analyze { path } => {
            let s = load_semigroup(path, pad)?;
            let c = classify(&s)?;
            let d = decompose(&s)?;
            let warnings = s.warnings();
            let out = match text_or(OutputFormat::Text) {
                OutputFormat::Json => to_json(&json!({
                    "report_version": REPORT_VERSION,
                    "classification": c,
                    "decomposition": {
                        "supports": one_based(&d.supports),
                        "conductors": d.components.iter().map(|c| c.conductor().clone()).collect::<Vec<_>>(),
                    },
                    "warnings": warnings,
                })),
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("conductor: {}\n", c.conductor));
                    s.push_str(&format!("frobenius: {}\n", c.frobenius));
                    s.push_str(&format!("local: {}\n", c.local));
                    if let Some(e) = &c.multiplicity {
                        s.push_str(&format!("multiplicity: {e}\n"));
                    }
                    s.push_str(&format!("symmetric: {}\n", c.symmetric));
                    s.push_str(&format!("almost_symmetric: {}\n", c.almost_symmetric));
                    if let Some(m) = c.med {
                        s.push_str(&format!("med: {m}\n"));
                    }
                    for (block, comp) in one_based(&d.supports).iter().zip(&c.components) {
                        s.push_str(&format!(
                            "component {block:?}: conductor {}, multiplicity {}, symmetric {}, almost_symmetric {}, med {}\n",
                            comp.conductor,
                            comp.multiplicity.as_ref().map_or("-".to_string(), Point::to_string),
                            comp.symmetric,
                            comp.almost_symmetric,
                            comp.med.map_or("-".to_string(), |m| m.to_string()),
                        ));
                    }
                    for w in &warnings {
                        s.push_str(&format!("warning: {w}\n"));
                    }
                    s
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Canonical { path } => {
            let s = load_semigroup(path, pad)?;
            let k = std_canonical(&s)?;
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &k,
                Some(s.set()),
            )?))
        }
        Command::Dual { semigroup, ideal } => {
            let s = load_semigroup(semigroup, pad)?;
            let e = load_set(ideal)?;
            let dual = difference(&std_canonical(&s)?, &e)?;
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &dual,
                None,
            )?))
        }
        Command::Sum { left, right } => {
            let total = sum(&load_set(left)?, &load_set(right)?)?;
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &total,
                None,
            )?))
        }
        Command::Mm { path, minus_e } => {
            let s = load_semigroup(path, pad)?;
            let m = s.maximal_ideal()?;
            let mm = difference(&m, &m)?;
            let set = if *minus_e { m_minus_e(&s)? } else { mm.clone() };
            let base = if *minus_e { Some(&mm) } else { None };
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &set,
                base,
            )?))
        }
        Command::Decompose { path } => {
            let s = load_semigroup(path, pad)?;
            let d = decompose(&s)?;
            let out = match text_or(OutputFormat::Text) {
                OutputFormat::Json => to_json(&json!({
                    "report_version": REPORT_VERSION,
                    "supports": one_based(&d.supports),
                    "components": d.components,
                })),
                _ => {
                    let mut s = String::new();
                    for (block, c) in one_based(&d.supports).iter().zip(&d.components) {
                        s.push_str(&format!("# support {block:?}\n"));
                        s.push_str(&serialize(c.set()));
                    }
                    s
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Jacobson { path } => {
            let s = load_semigroup(path, pad)?;
            let j = jacobson(&s)?;
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &j,
                None,
            )?))
        }
        Command::Render { path, overlay } => {
            let base = load_set(path)?;
            let over = overlay.as_deref().map(load_set).transpose()?;
            let out = match text_or(OutputFormat::Svg) {
                OutputFormat::Ascii | OutputFormat::Text => render::ascii(&base, over.as_ref())?,
                OutputFormat::Svg => render::svg(&base, over.as_ref())?,
                OutputFormat::Json => {
                    let pic = render::picture(&base, over.as_ref())?;
                    to_json(&json!({
                        "window": [pic.window.lo(), pic.window.hi()],
                        "filled": pic.points(render::Marker::Filled),
                        "open": pic.points(render::Marker::Open),
                    }))
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify { path, identity } => {
            let id: IdentityId = identity.parse()?;
            let s = load_semigroup(path, pad)?;
            let report = verify_identity(id, &s)?;
            let out = match text_or(OutputFormat::Text) {
                OutputFormat::Json => to_json(&report),
                _ => report.to_string(),
            };
            Ok(Outcome::checked(out, report.passed()))
        }
        Command::VerifySuite { gen, count, ids } => {
            let cap = gen.cap()?;
            let identities = if ids.is_empty() {
                IdentityId::ALL.to_vec()
            } else {
                ids.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>()?
            };
            let config = SuiteConfig {
                dim: cap.dim(),
                cap,
                count: *count,
                seed: gen.seed,
                identities,
            };
            let report = verify_suite(&config)?;
            let out = match text_or(OutputFormat::Json) {
                OutputFormat::Json => to_json(&report),
                _ => {
                    let mut s = format!("{} instances, seed {}\n", config.count, config.seed);
                    for (id, t) in &report.summary {
                        s.push_str(&format!(
                            "{id}: {} pass, {} fail, {} hypothesis not met\n",
                            t.pass, t.fail, t.hypothesis_not_met
                        ));
                    }
                    for inst in &report.instances {
                        for f in &inst.failures {
                            s.push_str(&format!(
                                "instance {} {}: {} {}\n",
                                inst.index, f.identity, f.check, f.detail
                            ));
                        }
                    }
                    s
                }
            };
            Ok(Outcome::checked(out, report.passed()))
        }
        Command::Gen { gen, ideal_of } => {
            let cfg = GenConfig::new(gen.cap()?, gen.seed);
            let set = match ideal_of {
                Some(path) => {
                    let s = load_semigroup(path, pad)?;
                    random_good_ideal(
                        &s,
                        &GenConfig {
                            dim: s.dim(),
                            ..cfg
                        },
                    )?
                }
                None => random_good(&cfg)?.into_set(),
            };
            Ok(Outcome::ok(emit_set(
                text_or(OutputFormat::Text),
                &set,
                None,
            )?))
        }
        Command::Enumerate { h, cap } => {
            let cap = GenArgs {
                h: *h,
                cap: cap.clone(),
                seed: 0,
            }
            .cap()?;
            let mut all = Vec::new();
            for_each_good(cap.dim(), &cap, |s| all.push(s))?;
            let out = match text_or(OutputFormat::Text) {
                OutputFormat::Json => to_json(&json!({
                    "report_version": REPORT_VERSION,
                    "cap": cap,
                    "count": all.len(),
                    "semigroups": all,
                })),
                _ => {
                    let mut s =
                        format!("# {} good semigroups with conductor <= {cap}\n", all.len());
                    for g in &all {
                        s.push('\n');
                        s.push_str(&serialize(g.set()));
                    }
                    s
                }
            };
            Ok(Outcome::ok(out))
        }
    }
}
