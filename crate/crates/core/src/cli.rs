//! The `springer` command line. [`run`] parses arguments, writes the report to
//! `out` and returns the process exit code; diagnostics go to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::finfield::{count_component_points, count_fixed_flags, FieldError, NilpotentOp, PrimeField};
use crate::grothendieck::MotiveClass;
use crate::strata::{enumerate_strata, fiber_class, StratumWord};
use crate::tableau::{decompose, enumerate_standard, Decomposition, Tableau, TableauError, TwoColumnTableau};
use crate::tower::{decomposable_class, motive_of, tower_of};
use crate::verify::{run_verification, VerificationSummary, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "springer", about = "Components, strata and point counts of two-block Springer fibers")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One line per irreducible component: tableau, ψ-word, tower, class, Betti numbers, Euler characteristic, point count.
    Components {
        #[arg(long = "type", value_parser = parse_type)]
        jordan: (usize, usize),
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Stratum words with their dimensions, and the class of the fiber.
    Strata {
        #[arg(long = "type", value_parser = parse_type)]
        jordan: (usize, usize),
    },
    /// Brute-force point count of the fiber, or of one component (1-based, in enumeration order).
    Count {
        #[arg(long = "type", value_parser = parse_type)]
        jordan: (usize, usize),
        #[arg(long)]
        field: u32,
        #[arg(long)]
        component: Option<usize>,
    },
    /// Searches for a decomposition of the tableau in FILE.
    Decompose {
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Class, Betti numbers and Euler characteristic of the component of the tableau in FILE.
    Motive {
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Runs the self-checks and prints a pass/fail table.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        fields: Vec<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn parse_type(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q, got {s:?}"))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (p, q) = (parse(p)?, parse(q)?);
    if q > p || p == 0 {
        return Err(format!("need p >= q >= 0 and p > 0, got ({p},{q})"));
    }
    Ok((p, q))
}

/// One irreducible component in a `components` report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub tableau: Tableau,
    pub psi: String,
    pub tower: String,
    pub class: String,
    pub betti: Vec<i64>,
    pub euler: i64,
    #[serde(rename = "pointCount(t)")]
    pub point_count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataPayload {
    pub strata: Vec<StratumWord>,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPayload {
    pub field: u32,
    pub component: Option<usize>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotivePayload {
    pub class: String,
    pub betti: Vec<i64>,
    pub euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum Payload {
    Components(Vec<ComponentEntry>),
    Strata(StrataPayload),
    Counts(CountPayload),
    Decomposition(Option<Decomposition>),
    Motive(MotivePayload),
    Verification(VerificationSummary),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub format: String,
    pub payload: Payload,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Plain-text rendering with the same numbers as the JSON.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        match &self.payload {
            Payload::Components(entries) => {
                out.push_str("#  tableau  psi  tower  class  betti  euler  points\n");
                for (i, e) in entries.iter().enumerate() {
                    out.push_str(&format!(
                        "{}  {}  {}  {}  {}  {:?}  {}  {}\n",
                        i + 1,
                        e.tableau,
                        e.psi,
                        e.tower,
                        e.class,
                        e.betti,
                        e.euler,
                        e.point_count
                    ));
                }
            }
            Payload::Strata(s) => {
                out.push_str("word  dim\n");
                for w in &s.strata {
                    out.push_str(&format!("{w}  {}\n", w.dim()));
                }
                out.push_str(&format!("class: {}\n", s.class));
            }
            Payload::Counts(c) => out.push_str(&format!("{}\n", c.count)),
            Payload::Decomposition(None) => out.push_str("none\n"),
            Payload::Decomposition(Some(d)) => {
                for part in &d.flag_parts {
                    out.push_str(&format!("flag {:?} phi {:?}\n", part.elements(), part.phi()));
                }
                for part in &d.pq_parts {
                    out.push_str(&format!("two-column {:?} phi {:?}\n", part.elements(), part.phi()));
                }
            }
            Payload::Motive(m) => {
                out.push_str(&format!("class: {}\nbetti: {:?}\neuler: {}\n", m.class, m.betti, m.euler));
            }
            Payload::Verification(v) => {
                for c in &v.criteria {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{:>2}  {status}  {}: {}\n", c.id, c.name, c.detail));
                }
                let overall = if v.all_passed() { "verified" } else { "MISMATCH" };
                out.push_str(&format!("{overall} (max-n {}, fields {:?})\n", v.max_n, v.fields));
            }
        }
        out
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Capacity(String),
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        match e {
            TableauError::SearchBoundExceeded { .. } => CliError::Capacity(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Capacity { .. } => CliError::Capacity(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn small(x: &BigInt) -> i64 {
    i64::try_from(x).expect("desk-scale numbers fit in i64")
}

fn betti_of(class: &MotiveClass) -> Vec<i64> {
    class
        .poincare()
        .expect("component classes have nonnegative coefficients")
        .iter()
        .map(small)
        .collect()
}

pub fn component_entries(p: usize, q: usize) -> Result<Vec<ComponentEntry>, TableauError> {
    Ok(enumerate_standard(p, q)?
        .into_iter()
        .map(|t| {
            let class = motive_of(&t);
            ComponentEntry {
                tableau: t.tableau().clone(),
                psi: t.psi_string(),
                tower: tower_of(&t).to_string(),
                class: class.to_string(),
                betti: betti_of(&class),
                euler: small(&class.euler_characteristic()),
                point_count: class.render_in("t"),
            }
        })
        .collect())
}

fn read_tableau(path: &Path) -> Result<Tableau, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Class of the component of `t`: the tower class for two-column tableaux,
/// otherwise the class of a decomposition if one exists.
fn class_of(t: &Tableau) -> Result<MotiveClass, CliError> {
    if let Ok(two) = TwoColumnTableau::try_from(t.clone()) {
        return Ok(motive_of(&two));
    }
    match decompose(t)? {
        Some(d) => decomposable_class(t, &d).map_err(|e| CliError::Usage(e.to_string())),
        None => Err(CliError::Usage(format!("no class available for the undecomposable tableau {t}"))),
    }
}

fn execute(command: Command, echo: String) -> Result<(Report, Format), CliError> {
    let mut format = Format::Table;
    let payload = match command {
        Command::Components { jordan, format: f } => {
            format = f;
            Payload::Components(component_entries(jordan.0, jordan.1)?)
        }
        Command::Strata { jordan } => Payload::Strata(StrataPayload {
            strata: enumerate_strata(jordan.0, jordan.1)?,
            class: fiber_class(jordan.0, jordan.1)?.to_string(),
        }),
        Command::Count {
            jordan: (p, q),
            field,
            component,
        } => {
            let f = PrimeField::new(field)?;
            let count = match component {
                None => count_fixed_flags(&NilpotentOp::two_block(p, q, f)?)?,
                Some(k) => {
                    let tableaux = enumerate_standard(p, q)?;
                    let t = k
                        .checked_sub(1)
                        .and_then(|i| tableaux.get(i))
                        .ok_or_else(|| CliError::Usage(format!("component {k} out of 1..={}", tableaux.len())))?;
                    count_component_points(t, f)?
                }
            };
            Payload::Counts(CountPayload {
                field,
                component,
                count,
            })
        }
        Command::Decompose { tableau } => {
            let t = read_tableau(&tableau)?;
            Payload::Decomposition(decompose(&t)?)
        }
        Command::Motive { tableau } => {
            let class = class_of(&read_tableau(&tableau)?)?;
            Payload::Motive(MotivePayload {
                class: class.to_string(),
                betti: betti_of(&class),
                euler: small(&class.euler_characteristic()),
            })
        }
        Command::Verify { max_n, fields } => {
            Payload::Verification(run_verification(&VerifyConfig { max_n, fields })?)
        }
    };
    let tag = match format {
        Format::Json => "json",
        Format::Table => "table",
    };
    Ok((
        Report {
            command: echo,
            format: tag.to_string(),
            payload,
        },
        format,
    ))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let parsed = match Args::try_parse_from(&args) {
        Ok(a) => a,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                eprint!("{}", e.render());
            }
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(parsed.command, echo) {
        Ok((report, format)) => {
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Table => report.to_table(),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            match &report.payload {
                Payload::Verification(v) if !v.all_passed() => EXIT_MISMATCH,
                _ => EXIT_OK,
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            EXIT_CAPACITY
        }
    }
}
