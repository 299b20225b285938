//! Command-line frontend: parses link diagrams and algebra inputs, dispatches
//! to `skein`, and prints JSON (default) or text.
//!
//! Exit status: 0 on success, 1 on input errors, 2 when a computed result
//! violates an identity it is checked against.

use std::ffi::OsString;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use skein::bracket::{bracket, jones, jones_in_t, skein as skein_recursion, state_sum, LinkValue, Strategy};
use skein::colorings::{col3_jones_check, count_colorings};
use skein::framed_perm::{self, fp_from_word, fp_normal_word, HeckeElement};
use skein::homflypt::{conway, homflypt, vassiliev_difference, FiniteTypeInvariant};
use skein::homology_skein::{s2_decomposition, IntMatrix, PairingData};
use skein::skein_algebra::{closed_torus_relation_check, nc_reduce, parse_word as parse_torus_word};
use skein::tl::{count_annular_connections, tl_multiply, Matching};
use skein::LinkDiagram;

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Skein-theoretic link invariants and diagram algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// A diagram given inline or a link file processed line by line.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// Inline diagram, e.g. "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)" or "U2;".
    #[arg(long)]
    pd: Option<String>,
    /// Link file: one diagram per line, `#` comments.
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kauffman bracket.
    Bracket {
        #[command(flatten)]
        input: Input,
        /// state_sum or skein.
        #[arg(long, default_value = "state_sum")]
        strategy: String,
        /// Also compute with the other strategy and fail on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// Jones polynomial, in t = A^-4 when the exponents allow it.
    Jones {
        #[command(flatten)]
        input: Input,
    },
    /// Homflypt polynomial in v, z.
    Homflypt {
        #[command(flatten)]
        input: Input,
    },
    /// Conway polynomial in z.
    Conway {
        #[command(flatten)]
        input: Input,
    },
    /// Number of Fox p-colorings.
    Colorings {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'p', long = "prime")]
        p: u64,
    },
    /// Checks col3(L) = 3|V(e^{i pi/3})|^2.
    #[command(name = "col3-check")]
    Col3Check {
        #[command(flatten)]
        input: Input,
    },
    /// Finite-type difference over the switch subsets of chosen crossings.
    Vassiliev {
        #[command(flatten)]
        input: Input,
        /// Comma-separated crossing indices, 0-based in PD order.
        #[arg(long, value_delimiter = ',', required = true)]
        crossings: Vec<usize>,
        /// conway:<k> or homflypt.
        #[arg(long, default_value = "conway:2")]
        invariant: String,
    },
    /// Temperley-Lieb algebra.
    Tl {
        #[command(subcommand)]
        command: TlCommand,
    },
    /// Skein algebra of the once-punctured torus.
    Torus {
        #[command(subcommand)]
        command: TorusCommand,
    },
    /// Framed permutations.
    Wperm {
        #[command(subcommand)]
        command: WpermCommand,
    },
    /// Hecke algebra H_n(p, q).
    Hecke {
        #[command(subcommand)]
        command: HeckeCommand,
    },
    /// Decomposition of the second skein module from homology data.
    Skein2 {
        /// Rank of the free part of H1.
        #[arg(long)]
        h1_free: usize,
        /// Torsion invariant factors of H1, comma-separated.
        #[arg(long, value_delimiter = ',')]
        torsion: Vec<String>,
        /// Rank of H2.
        #[arg(long)]
        h2: usize,
        /// Pairing matrix (h1_free rows, h2 columns): rows separated by `;`,
        /// entries by `,`.
        #[arg(long, default_value = "")]
        pairing: String,
        /// Free coordinates in the table range over [-bound, bound].
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
}

#[derive(Subcommand, Debug)]
enum TlCommand {
    /// Dimension of TL_n (the Catalan number C_n).
    Dim { n: usize },
    /// Product of two matchings, first on top.
    Mul { a: String, b: String },
    /// Crossingless connections of 2n points in an annulus, C(2n, n).
    AnnularCount { n: usize },
}

#[derive(Subcommand, Debug)]
enum TorusCommand {
    /// Normal form of a word in x, y, z.
    Reduce {
        word: String,
        /// Also eliminate monomials divisible by xyz using the closed-torus relation.
        #[arg(long)]
        closed: bool,
    },
}

#[derive(Subcommand, Debug)]
enum WpermCommand {
    /// Normal word of the framed permutation given by a word in t, s1, s2, ...
    Normal {
        #[arg(short, long)]
        n: usize,
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum HeckeCommand {
    /// Product of two words in g1, g2, ...
    Mul {
        #[arg(short, long)]
        n: usize,
        a: String,
        b: String,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Violation(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Violation(m) => format!("invariant violation: {m}"),
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

/// A computed value in both output forms.
struct Output {
    json: Value,
    text: String,
}

fn output<T: Serialize + ?Sized>(value: &T, text: impl Into<String>) -> Result<Output, Failure> {
    let json = serde_json::to_value(value).map_err(|e| Failure::Violation(format!("serialization: {e}")))?;
    Ok(Output { json, text: text.into() })
}

fn big_json(s: String) -> Value {
    match s.parse::<u64>() {
        Ok(v) => json!(v),
        Err(_) => json!(s),
    }
}

/// The invariant a diagram subcommand computes.
#[derive(Debug, Clone)]
enum DiagramTask {
    Bracket { strategy: Strategy, verify: bool },
    Jones,
    Homflypt,
    Conway,
    Colorings(u64),
    Col3Check,
    Vassiliev { crossings: Vec<usize>, invariant: FiniteTypeInvariant },
}

impl DiagramTask {
    fn name(&self) -> String {
        match self {
            DiagramTask::Bracket { .. } => "bracket".into(),
            DiagramTask::Jones => "jones".into(),
            DiagramTask::Homflypt => "homflypt".into(),
            DiagramTask::Conway => "conway".into(),
            DiagramTask::Colorings(p) => format!("colorings:{p}"),
            DiagramTask::Col3Check => "col3-check".into(),
            DiagramTask::Vassiliev { invariant, .. } => match invariant {
                FiniteTypeInvariant::ConwayCoeff(k) => format!("vassiliev:conway:{k}"),
                FiniteTypeInvariant::Homflypt => "vassiliev:homflypt".into(),
            },
        }
    }

    fn run(&self, d: &LinkDiagram) -> Result<Output, Failure> {
        match self {
            DiagramTask::Bracket { strategy, verify } => {
                let v = bracket(d, *strategy);
                if *verify {
                    let other = match strategy {
                        Strategy::StateSum => skein_recursion(d),
                        Strategy::SkeinRecursion => state_sum(d),
                    };
                    if other != v {
                        return Err(Failure::Violation(format!(
                            "state sum and skein recursion disagree: {v} vs {other}"
                        )));
                    }
                }
                output(&v, v.to_string())
            }
            DiagramTask::Jones => {
                let v = match jones(d) {
                    LinkValue::Poly(p) => LinkValue::Poly(jones_in_t(&p).unwrap_or(p)),
                    LinkValue::Empty => LinkValue::Empty,
                };
                output(&v, v.to_string())
            }
            DiagramTask::Homflypt => {
                let v = homflypt(d);
                output(&v, v.to_string())
            }
            DiagramTask::Conway => {
                let v = conway(d);
                output(&v, v.to_string())
            }
            DiagramTask::Colorings(p) => {
                let c = count_colorings(d, *p).map_err(input_err)?.to_string();
                Ok(Output { json: big_json(c.clone()), text: c })
            }
            DiagramTask::Col3Check => {
                let c = col3_jones_check(d);
                if !c.holds() {
                    return Err(Failure::Violation(format!("col3 = {} but 3|V|^2 = {}", c.lhs, c.rhs)));
                }
                let text = format!("col3 = {} = 3|V(zeta)|^2 = {}", c.lhs, c.rhs);
                let mut o = output(&c, text)?;
                o.json["holds"] = json!(true);
                Ok(o)
            }
            DiagramTask::Vassiliev { crossings, invariant } => {
                let v = vassiliev_difference(d, crossings, *invariant).map_err(input_err)?;
                if let FiniteTypeInvariant::ConwayCoeff(_) = invariant {
                    let c = v.constant_term().to_string();
                    return Ok(Output { json: big_json(c.clone()), text: c });
                }
                output(&v, v.to_string())
            }
        }
    }
}

#[derive(Serialize)]
struct Record {
    input: String,
    invariant: String,
    value: Value,
    error: Option<String>,
}

struct Outcome {
    record: Record,
    text: String,
    violation: bool,
}

fn evaluate(task: &DiagramTask, line: &str) -> Option<Outcome> {
    let input = line.trim().to_string();
    let d = match LinkDiagram::from_line(line) {
        Ok(Some(d)) => d,
        Ok(None) => return None,
        Err(e) => {
            let msg = e.to_string();
            return Some(Outcome {
                text: format!("{input} => error: {msg}"),
                record: Record { input, invariant: task.name(), value: Value::Null, error: Some(msg) },
                violation: false,
            });
        }
    };
    let result = panic::catch_unwind(AssertUnwindSafe(|| task.run(&d)))
        .unwrap_or_else(|p| Err(Failure::Violation(panic_message(p))));
    Some(match result {
        Ok(o) => Outcome {
            text: format!("{input} => {}", o.text),
            record: Record { input, invariant: task.name(), value: o.json, error: None },
            violation: false,
        },
        Err(f) => Outcome {
            text: format!("{input} => error: {}", f.message()),
            violation: matches!(f, Failure::Violation(_)),
            record: Record { input, invariant: task.name(), value: Value::Null, error: Some(f.message()) },
        },
    })
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "internal error".into())
}

#[cfg(feature = "parallel")]
fn evaluate_all(task: &DiagramTask, lines: &[&str]) -> Vec<Outcome> {
    use rayon::prelude::*;
    lines.par_iter().filter_map(|l| evaluate(task, l)).collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate_all(task: &DiagramTask, lines: &[&str]) -> Vec<Outcome> {
    lines.iter().filter_map(|l| evaluate(task, l)).collect()
}

fn run_diagram(task: DiagramTask, input: Input, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    if let Some(pd) = input.pd {
        let d = match LinkDiagram::from_line(&pd) {
            Ok(Some(d)) => d,
            Ok(None) => return Err(Failure::Input("no diagram given".into())),
            Err(e) => return Err(input_err(e)),
        };
        let o = task.run(&d)?;
        let record = Record { input: pd.trim().to_string(), invariant: task.name(), value: o.json, error: None };
        return emit(out, format, &record, &o.text);
    }
    let path = input.file.expect("clap requires --pd or a file");
    let contents = std::fs::read_to_string(&path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let lines: Vec<&str> = contents.lines().collect();
    let outcomes = evaluate_all(&task, &lines);
    let io = |e: std::io::Error| Failure::Input(format!("write: {e}"));
    match format {
        Format::Json => {
            let records: Vec<&Record> = outcomes.iter().map(|o| &o.record).collect();
            let s = serde_json::to_string_pretty(&records).map_err(|e| Failure::Violation(e.to_string()))?;
            writeln!(out, "{s}").map_err(io)?;
        }
        Format::Text => {
            for o in &outcomes {
                writeln!(out, "{}", o.text).map_err(io)?;
            }
        }
    }
    match outcomes.iter().find(|o| o.violation) {
        Some(o) => {
            Err(Failure::Violation(format!("{}: {}", o.record.input, o.record.error.clone().unwrap_or_default())))
        }
        None => Ok(()),
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, format: Format, json_value: &T, text: &str) -> Result<(), Failure> {
    let line = match format {
        Format::Json => serde_json::to_string_pretty(json_value).map_err(|e| Failure::Violation(e.to_string()))?,
        Format::Text => text.to_string(),
    };
    writeln!(out, "{line}").map_err(|e| Failure::Input(format!("write: {e}")))
}

fn parse_matrix(s: &str, rows: usize, cols: usize) -> Result<IntMatrix, Failure> {
    let parsed: Vec<Vec<i64>> = s
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| input_err(format!("bad matrix entry `{x}`"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if parsed.is_empty() {
        return Ok(IntMatrix::zeros(rows, cols));
    }
    let m = IntMatrix::from_i64(&parsed).map_err(input_err)?;
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(Failure::Input(format!("pairing is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(m)
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let format = cli.format;
    let (task, input) = match cli.command {
        Command::Bracket { input, strategy, verify } => {
            let strategy = strategy.parse::<Strategy>().map_err(Failure::Input)?;
            (DiagramTask::Bracket { strategy, verify }, input)
        }
        Command::Jones { input } => (DiagramTask::Jones, input),
        Command::Homflypt { input } => (DiagramTask::Homflypt, input),
        Command::Conway { input } => (DiagramTask::Conway, input),
        Command::Colorings { input, p } => (DiagramTask::Colorings(p), input),
        Command::Col3Check { input } => (DiagramTask::Col3Check, input),
        Command::Vassiliev { input, crossings, invariant } => {
            let invariant = invariant.parse().map_err(Failure::Input)?;
            (DiagramTask::Vassiliev { crossings, invariant }, input)
        }
        Command::Tl { command } => return run_tl(command, format, out),
        Command::Torus { command: TorusCommand::Reduce { word, closed } } => {
            let w = parse_torus_word(&word).map_err(input_err)?;
            let mut e = nc_reduce(&w);
            if closed {
                e = closed_torus_relation_check(&e);
            }
            return emit(out, format, &e, &e.to_string());
        }
        Command::Wperm { command: WpermCommand::Normal { n, word } } => {
            let letters = framed_perm::parse_word(&word).map_err(input_err)?;
            let g = fp_from_word(n, &letters).map_err(input_err)?;
            let nw = fp_normal_word(&g);
            let value = json!({ "perm": g.one_line(), "weights": g.weights(), "normal_word": nw });
            return emit(out, format, &value, &nw.to_string());
        }
        Command::Hecke { command: HeckeCommand::Mul { n, a, b } } => {
            let parse = |w: &str| {
                let letters = framed_perm::parse_word(w).map_err(input_err)?;
                HeckeElement::from_word(n, &letters).map_err(input_err)
            };
            let prod = parse(&a)?.mul(&parse(&b)?).map_err(input_err)?;
            return emit(out, format, &prod, &prod.to_string());
        }
        Command::Skein2 { h1_free, torsion, h2, pairing, bound } => {
            let torsion = torsion
                .iter()
                .filter(|t| !t.trim().is_empty())
                .map(|t| t.trim().parse().map_err(|_| input_err(format!("bad torsion coefficient `{t}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            let m = parse_matrix(&pairing, h1_free, h2)?;
            let data = PairingData::new(h1_free, torsion, h2, m).map_err(input_err)?;
            let dec = s2_decomposition(&data, bound);
            let mut text = format!(
                "torsion subgroup {:?}, pairing rank {}, kernel basis {:?}\n{}",
                dec.torsion_subgroup.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                dec.pairing_rank,
                dec.pairing_kernel_basis
                    .iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                dec.rule
            );
            for s in &dec.table {
                let f: Vec<String> = s.free.iter().map(|x| x.to_string()).collect();
                let t: Vec<String> = s.torsion.iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("\n({}; {}) mul={} {}", f.join(","), t.join(","), s.mul, s.module));
            }
            return emit(out, format, &dec, &text);
        }
    };
    run_diagram(task, input, format, out)
}

fn run_tl(command: TlCommand, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        TlCommand::Dim { n } => {
            if n > 60 {
                return Err(Failure::Input(format!("n = {n} is too large (at most 60)")));
            }
            let dim = count_annular_connections(n) / (n as u128 + 1);
            emit(out, format, &big_json(dim.to_string()), &dim.to_string())
        }
        TlCommand::AnnularCount { n } => {
            if n > 60 {
                return Err(Failure::Input(format!("n = {n} is too large (at most 60)")));
            }
            let c = count_annular_connections(n);
            emit(out, format, &big_json(c.to_string()), &c.to_string())
        }
        TlCommand::Mul { a, b } => {
            let a = Matching::parse(&a).map_err(input_err)?;
            let b = Matching::parse(&b).map_err(input_err)?;
            let prod = tl_multiply(&a, &b).map_err(input_err)?;
            emit(out, format, &prod, &prod.to_string())
        }
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if info { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if info { 0 } else { 1 };
        }
    };
    let result = panic::catch_unwind(AssertUnwindSafe(|| dispatch(cli, out)))
        .unwrap_or_else(|p| Err(Failure::Violation(panic_message(p))));
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}
