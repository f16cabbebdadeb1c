//! Command-line front end. `run` never prints; it returns the rendered output
//! and exit code so the binary and the tests share one code path.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 label outside the graded
//! recursion, 3 internal consistency failure.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::agroup::{shape_of, AElement, MultiplicityVector, Subgroup};
use crate::betti::{self, GradedTable};
use crate::error::Error;
use crate::euler;
use crate::exctables::{irrep_dim, table, ExcGroup};
use crate::partition::{GroupType, OrbitLabel, Partition, Sign};
use crate::restrict::{expand, FormalSum};
use crate::tworow::{closed_form_table, recursion_table, TwoRowLabel, TwoRowTable};
use crate::verify::{self, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TwoRowSource {
    Closed,
    Recursion,
}

#[derive(Debug, Parser)]
#[command(name = "springer", version, about = "Exact invariants of Springer fibers")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct OrbitArgs {
    /// Group type: A, B, C or D.
    #[arg(long = "type")]
    pub group: GroupType,
    /// Jordan type, e.g. 6,4,2.
    #[arg(long)]
    pub partition: Partition,
    /// Which of the two very even type-D orbits; both have the same invariants.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Option<Sign>,
}

impl OrbitArgs {
    fn label(&self) -> Result<OrbitLabel, Error> {
        OrbitLabel::new(self.group, self.partition.clone(), self.sign)
    }

    fn input(&self) -> Value {
        json!({
            "type": self.group.to_string(),
            "partition": self.partition.parts(),
            "sign": self.sign.map(|s| s.to_string()),
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler characteristic, or the trace of a component-group element.
    Ec {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Element of the component group, e.g. z_1z_3 or 1,3.
        #[arg(long)]
        element: Option<AElement>,
    },
    /// Multiplicity of each component-group character in the total cohomology.
    Mult {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// A (component group) or Atilde (extended group).
        #[arg(long, default_value = "A")]
        over: Subgroup,
    },
    /// One-step restriction to the maximal parabolic of the same type.
    Restrict {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
    /// Graded multiplicities per cohomological degree.
    Betti {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, default_value = "A")]
        over: Subgroup,
    },
    /// Two-row table for the orbit (i, j), or (i, j, 1) in type B.
    Tworow {
        #[arg(long = "type")]
        group: GroupType,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, value_enum, default_value_t = TwoRowSource::Closed)]
        source: TwoRowSource,
    },
    /// Character multiplicities for an exceptional nilpotent orbit.
    Exc {
        #[arg(long)]
        group: ExcGroup,
        /// Bala–Carter label, e.g. "2A_4" or "F_4(a_3)".
        #[arg(long)]
        orbit: String,
    },
    /// Runs invariant suites; all of them when no suite is given.
    Verify {
        #[arg(long)]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
}

/// One character row of an exceptional orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcCharacter {
    pub phi: String,
    pub dim: u64,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcReport {
    pub group: ExcGroup,
    pub orbit: String,
    pub a_group: crate::exctables::ComponentGroup,
    pub euler: u64,
    pub characters: Vec<ExcCharacter>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A rendered result: JSON value plus its text form.
struct Rendered {
    command: &'static str,
    input: Value,
    result: Value,
    text: String,
    /// Verification failures turn into exit 3 after the output is written.
    failed: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OutOfScope { .. } => EXIT_OUT_OF_SCOPE,
        e if e.is_internal() => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MissingPart { .. } => "missing_part",
        Error::PartTooSmall { .. } => "part_too_small",
        Error::EmptyPartition => "empty_partition",
        Error::InvalidLabel { .. } => "invalid_label",
        Error::InvalidElement { .. } => "invalid_element",
        Error::RankTooSmall(_) => "rank_too_small",
        Error::OutOfScope { .. } => "out_of_scope",
        Error::NonIntegralMultiplicity(_) => "non_integral_multiplicity",
        Error::Inconsistent(_) => "inconsistent",
        Error::DegreeMismatch { .. } => "degree_mismatch",
        Error::UnknownOrbit { .. } => "unknown_orbit",
        Error::BadLabel(_) => "bad_label",
        Error::Parse(_) => "parse",
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result types serialize to JSON")
}

fn bigint_value(v: &BigInt) -> Value {
    crate::json::serialize(v, serde_json::value::Serializer).expect("integers serialize to JSON")
}

fn render_mults(m: &MultiplicityVector) -> String {
    m.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
}

fn render_graded(t: &GradedTable, columns: &[String]) -> String {
    let mut out = format!("deg\t{}\n", columns.join("\t"));
    for (d, row) in &t.degrees {
        let cells: Vec<String> = columns.iter().map(|c| row.get(c).to_string()).collect();
        let _ = writeln!(out, "{d}\t{}", cells.join("\t"));
    }
    out
}

fn render_tworow(t: &TwoRowTable) -> String {
    let mut out = format!("deg\t{}\n", t.columns.join("\t"));
    for row in &t.rows {
        let cells: Vec<String> = t.columns.iter().map(|c| row.values.get(c).cloned().unwrap_or_default().to_string()).collect();
        let _ = writeln!(out, "{}\t{}", row.degree, cells.join("\t"));
    }
    out
}

fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(
            out,
            "{}: {status} (max_n {}, checked {}, failed {}, skipped {})",
            r.suite, r.max_n, r.checked, r.failed, r.skipped
        );
        for f in &r.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    out
}

pub fn exc_report(group: ExcGroup, orbit: &str) -> Result<ExcReport, Error> {
    let o = table(group).orbit(orbit)?;
    let n = o.a_group.degree();
    let mut characters = Vec::new();
    for r in &o.rows {
        characters.push(ExcCharacter { phi: r.phi.clone(), dim: irrep_dim(n, &r.phi_partition()?)?, mult: r.mult });
    }
    let euler = characters.iter().map(|c| c.dim * c.mult).sum();
    Ok(ExcReport { group, orbit: o.orbit.clone(), a_group: o.a_group, euler, characters })
}

fn dispatch(command: &Command) -> Result<Rendered, Error> {
    match command {
        Command::Ec { orbit, element } => {
            let label = orbit.label()?;
            let z = element.clone().unwrap_or_default();
            let v = euler::twisted_euler(label.group, &label.partition, &z)?;
            let mut input = orbit.input();
            input["element"] = json!(z.to_string());
            Ok(Rendered { command: "ec", input, result: bigint_value(&v), text: format!("{v}\n"), failed: false })
        }
        Command::Mult { orbit, over } => {
            let label = orbit.label()?;
            let m = euler::multiplicities(&label, *over)?;
            let mut input = orbit.input();
            input["over"] = json!(over.to_string());
            Ok(Rendered { command: "mult", input, result: to_value(&m), text: render_mults(&m), failed: false })
        }
        Command::Restrict { orbit } => {
            let label = orbit.label()?;
            let sum: FormalSum = expand(&label)?;
            Ok(Rendered { command: "restrict", input: orbit.input(), result: to_value(&sum), text: format!("{sum}\n"), failed: false })
        }
        Command::Betti { orbit, over } => {
            let label = orbit.label()?;
            let t = match label.group {
                GroupType::A => betti::betti_type_a(&label.partition),
                g => betti::global().betti_bcd_over(g, &label.partition, *over)?,
            };
            let shape = shape_of(label.group, &label.partition)?;
            let over_eff = if label.group == GroupType::A { Subgroup::A } else { *over };
            let columns: Vec<String> = shape.characters(over_eff).iter().map(|c| c.name(&shape)).collect();
            let mut input = orbit.input();
            input["over"] = json!(over.to_string());
            Ok(Rendered { command: "betti", input, result: to_value(&t), text: render_graded(&t, &columns), failed: false })
        }
        Command::Tworow { group, i, j, source } => {
            let label = TwoRowLabel::new(*group, *i, *j)?;
            let t = match source {
                TwoRowSource::Closed => closed_form_table(label)?,
                TwoRowSource::Recursion => recursion_table(label)?,
            };
            let src = match source {
                TwoRowSource::Closed => "closed",
                TwoRowSource::Recursion => "recursion",
            };
            let input = json!({ "type": group.to_string(), "i": i, "j": j, "source": src });
            Ok(Rendered { command: "tworow", input, result: to_value(&t), text: render_tworow(&t), failed: false })
        }
        Command::Exc { group, orbit } => {
            let r = exc_report(*group, orbit)?;
            let mut text = format!("{}\n", r.euler);
            for c in &r.characters {
                let _ = writeln!(text, "{}\t{}", c.phi, c.mult);
            }
            let input = json!({ "group": group.to_string(), "orbit": orbit });
            Ok(Rendered { command: "exc", input, result: to_value(&r), text, failed: false })
        }
        Command::Verify { suite, max_n } => {
            let suites: Vec<Suite> = if suite.is_empty() { Suite::ALL.to_vec() } else { suite.clone() };
            let reports: Vec<SuiteReport> = suites.iter().map(|&s| verify::run(s, *max_n)).collect();
            let failed = reports.iter().any(|r| !r.passed());
            let input = json!({ "suites": suites.iter().map(Suite::to_string).collect::<Vec<_>>(), "max_n": max_n });
            Ok(Rendered { command: "verify", input, result: to_value(&reports), text: render_reports(&reports), failed })
        }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let code = if r.failed { EXIT_INTERNAL } else { EXIT_OK };
            let stdout = match cli.format {
                Format::Text => r.text,
                Format::Json => {
                    let doc = json!({ "command": r.command, "input": r.input, "result": r.result });
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values render"))
                }
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let stderr = match cli.format {
                Format::Text => format!("error: {e}\n"),
                Format::Json => format!("{}\n", json!({ "error": error_kind(&e), "message": e.to_string() })),
            };
            Outcome { code: exit_code(&e), stdout: String::new(), stderr }
        }
    }
}
