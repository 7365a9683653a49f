//! Command-line front end. [`run`] takes arguments and output streams so it
//! can be driven from tests; it returns the process exit status.
//!
//! Exit statuses: 0 success, 1 counterexample found (or a witness that does
//! not reproduce), 2 input error, 3 character search overflow.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::Algebra;
use crate::characters::{self, CharacterError, CharacterSet};
use crate::cohomology::classify;
use crate::exactla;
use crate::harness::{self, corpus, HarnessError, Witness};
use format::{rational_strings, AlgebraFile, AuditFile, ReportFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "amenability", version, about = "Exact amenability analysis of finite-dimensional algebras over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharsMode {
    /// Rational search merged with declared characters.
    Auto,
    /// Declared characters only.
    DeclaredOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Lau,
    Sum,
    Unitize,
    Tensor,
    Op,
    Quotient,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebra axioms and declared characters.
    Validate { input: String },
    /// Print the full report as JSON.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = CharsMode::Auto)]
        chars: CharsMode,
    },
    /// Build a new algebra from one or two inputs (files or corpus names).
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        inputs: Vec<String>,
        /// Index into the sorted characters of the second input, or `zero`.
        #[arg(long, default_value = "zero")]
        theta: String,
        /// Ideal generator for `quotient`, comma separated; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        seed: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the rational characters and whether the list is complete.
    Characters { input: String },
    /// Run registry checks over corpus and generated instances.
    Check {
        /// A registry id or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 12)]
        max_dim: usize,
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        /// Write the machine-readable summary here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Invert every conclusion (self-test of the falsification path).
        #[arg(long)]
        negate_conclusions: bool,
    },
    /// Reload witness files and rerun their checks.
    Reverify {
        #[arg(required = true)]
        witnesses: Vec<PathBuf>,
    },
    /// List the corpus, optionally writing each algebra to a directory.
    Corpus {
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

type Outcome = Result<i32, Failure>;

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn char_error(e: CharacterError) -> Failure {
    match e {
        CharacterError::Overflow { .. } | CharacterError::CoefficientTooLarge(_) => Failure {
            code: EXIT_OVERFLOW,
            message: e.to_string(),
        },
        other => input_error(other.to_string()),
    }
}

/// Reads an algebra file, or falls back to a corpus name.
pub fn load_algebra(input: &str) -> Result<Algebra, String> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
        let file = AlgebraFile::parse(&text).map_err(|e| format!("{input}: {e}"))?;
        return file.to_algebra().map_err(|e| format!("{input}: {e}"));
    }
    corpus::lookup(input)
        .map(|e| e.algebra)
        .ok_or_else(|| format!("{input}: no such file or corpus algebra"))
}

fn load_valid(input: &str) -> Result<Algebra, Failure> {
    let a = load_algebra(input).map_err(input_error)?;
    let v = a.validate();
    if !v.is_valid() {
        return Err(input_error(format!("{input}: {}", v.describe())));
    }
    if let Err(e) = characters::declared_only(&a) {
        return Err(input_error(format!("{input}: {e}")));
    }
    Ok(a)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| input_error(format!("write failed: {e}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn cmd_validate(input: &str, out: &mut dyn Write) -> Outcome {
    load_valid(input)?;
    write_out(out, &format!("{input}: valid\n"))?;
    Ok(EXIT_OK)
}

fn character_set(a: &Algebra, mode: CharsMode) -> Result<CharacterSet, Failure> {
    match mode {
        CharsMode::Auto => characters::characters_auto(a),
        CharsMode::DeclaredOnly => characters::declared_only(a),
    }
    .map_err(char_error)
}

fn cmd_analyze(input: &str, mode: CharsMode, out: &mut dyn Write) -> Outcome {
    let a = load_valid(input)?;
    let chars = character_set(&a, mode)?;
    let report = classify(&a, &chars);
    write_out(out, &ReportFile::for_algebra(&a, &report).to_json())?;
    Ok(EXIT_OK)
}

fn cmd_characters(input: &str, out: &mut dyn Write) -> Outcome {
    let a = load_valid(input)?;
    let chars = character_set(&a, CharsMode::Auto)?;
    let listing = serde_json::json!({
        "label": a.label(),
        "characters": chars
            .characters
            .iter()
            .map(|c| rational_strings(c.values()))
            .collect::<Vec<_>>(),
        "complete": chars.complete,
    });
    let mut text = serde_json::to_string_pretty(&listing).expect("plain data serializes");
    text.push('\n');
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn parse_theta(text: &str, b: &Algebra) -> Result<Vec<exactla::Rational>, Failure> {
    if text == "zero" {
        return Ok(exactla::zero_vec(b.dim()));
    }
    let index: usize = text
        .parse()
        .map_err(|_| input_error(format!("--theta must be an index or `zero`, got {text:?}")))?;
    let chars = characters::characters_auto(b).map_err(char_error)?;
    chars
        .characters
        .get(index)
        .map(|c| c.values().to_vec())
        .ok_or_else(|| {
            input_error(format!(
                "--theta={index}: {} has {} rational characters",
                b.label(),
                chars.len()
            ))
        })
}

fn cmd_construct(
    kind: Kind,
    inputs: &[String],
    theta: &str,
    seeds: &[String],
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let arity = match kind {
        Kind::Lau | Kind::Sum | Kind::Tensor => 2,
        Kind::Unitize | Kind::Op | Kind::Quotient => 1,
    };
    if inputs.len() != arity {
        return Err(input_error(format!(
            "{kind:?} takes {arity} input(s), got {}",
            inputs.len()
        )));
    }
    let algebras = inputs.iter().map(|s| load_valid(s)).collect::<Result<Vec<_>, _>>()?;
    let a = &algebras[0];
    let built = match kind {
        Kind::Lau => {
            let t = parse_theta(theta, &algebras[1])?;
            a.lau_product(&algebras[1], &t).map_err(|e| input_error(e.to_string()))?
        }
        Kind::Sum => a.direct_sum(&algebras[1]),
        Kind::Tensor => a.tensor(&algebras[1]),
        Kind::Unitize => a.unitize(),
        Kind::Op => a.opposite(),
        Kind::Quotient => {
            let mut vs = Vec::new();
            for s in seeds {
                let v = s
                    .split(',')
                    .map(|x| exactla::parse_rational(x.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| input_error(format!("--seed {s}: {e}")))?;
                if v.len() != a.dim() {
                    return Err(input_error(format!(
                        "--seed {s}: expected {} coordinates, found {}",
                        a.dim(),
                        v.len()
                    )));
                }
                vs.push(v);
            }
            let ideal = a.ideal_generated_by(&vs).map_err(|e| input_error(e.to_string()))?;
            writeln!(
                err,
                "ideal generated by the seeds has dimension {} of {}",
                ideal.space().dim(),
                a.dim()
            )
            .ok();
            a.quotient(&ideal).map_err(|e| input_error(e.to_string()))?.0
        }
    };
    let text = AlgebraFile::from_algebra(&built).to_json();
    match output {
        Some(p) => write_file(p, &text)?,
        None => write_out(out, &text)?,
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    theorem: &str,
    seed: u64,
    trials: usize,
    max_dim: usize,
    witness_dir: Option<&Path>,
    report: Option<&Path>,
    negate: bool,
    out: &mut dyn Write,
) -> Outcome {
    if max_dim < 1 {
        return Err(input_error("--max-dim must be at least 1"));
    }
    let ids = [theorem];
    let selected = (theorem != "all").then_some(&ids[..]);
    let summary = harness::audit(selected, seed, trials, max_dim, negate).map_err(|e| match e {
        HarnessError::UnknownTheorem(_) => input_error(e.to_string()),
    })?;
    write_out(out, &summary.render())?;
    if let Some(dir) = witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
        for o in &summary.outcomes {
            for (w, stem) in o.counterexamples.iter().zip(format::witness_stems(&o.counterexamples)) {
                write_file(&dir.join(format!("{stem}.json")), &w.to_json())?;
            }
        }
    }
    if let Some(p) = report {
        write_file(p, &AuditFile::new(&summary).to_json())?;
    }
    Ok(if summary.counterexample_count() > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn cmd_reverify(paths: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let mut all = true;
    for p in paths {
        let text = std::fs::read_to_string(p).map_err(|e| input_error(format!("{}: {e}", p.display())))?;
        let w = Witness::parse(&text).map_err(|e| input_error(format!("{}: {e}", p.display())))?;
        let ok = harness::reverify(&w).map_err(|e| input_error(format!("{}: {e}", p.display())))?;
        all &= ok;
        let verdict = if ok { "reproduced" } else { "not reproduced" };
        write_out(out, &format!("{}: {} {} {}\n", p.display(), w.check.id, w.check.subclaim, verdict))?;
    }
    Ok(if all { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_corpus(dump: Option<&Path>, out: &mut dyn Write) -> Outcome {
    if let Some(dir) = dump {
        std::fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
    }
    for e in corpus::corpus() {
        write_out(
            out,
            &format!("{:<4} dim {:<2} {:<12} {}\n", e.name, e.algebra.dim(), e.algebra.label(), e.recipe),
        )?;
        if let Some(dir) = dump {
            write_file(
                &dir.join(format!("{}.json", e.name)),
                &AlgebraFile::from_algebra(&e.algebra).to_json(),
            )?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                err.write_all(text.as_bytes()).ok();
            } else {
                out.write_all(text.as_bytes()).ok();
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Validate { input } => cmd_validate(input, out),
        Command::Analyze { input, chars } => cmd_analyze(input, *chars, out),
        Command::Construct {
            kind,
            inputs,
            theta,
            seed,
            output,
        } => cmd_construct(*kind, inputs, theta, seed, output.as_deref(), out, err),
        Command::Characters { input } => cmd_characters(input, out),
        Command::Check {
            theorem,
            seed,
            trials,
            max_dim,
            witness_dir,
            report,
            negate_conclusions,
        } => cmd_check(
            theorem,
            *seed,
            *trials,
            *max_dim,
            witness_dir.as_deref(),
            report.as_deref(),
            *negate_conclusions,
            out,
        ),
        Command::Reverify { witnesses } => cmd_reverify(witnesses, out),
        Command::Corpus { dump } => cmd_corpus(dump.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            writeln!(err, "error: {}", f.message).ok();
            f.code
        }
    }
}
