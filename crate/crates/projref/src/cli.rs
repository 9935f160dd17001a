//! The command-line surface.
//!
//! Every subcommand prints deterministic JSON or plain text to standard
//! output (or to `--out FILE`).  Exit codes: 0 on success, 1 when a
//! verification found a counterexample, 2 on usage errors.
//!
//! The environment variable `PROJREF_ENUM_CAP` overrides the default
//! enumeration guard; everything else is configured by flags, plus an
//! optional JSON config file for `verify`.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::characters::{coarse_kronecker, wreath_character, CycleType};
use crate::diagonal::{
    diagonal_invariant_hilbert, module_basis_hilbert, tensor_invariant_hilbert,
};
use crate::error::{Error, Result};
use crate::galois::gsigma_check;
use crate::group::{elements, Element, GroupParams};
use crate::partitions::Partition;
use crate::report::{run_all, run_suite, VerifyConfig};
use crate::schensted::projective_rs;
use crate::stats::stat_profile;
use crate::tableaux::{MultiShape, ShapeClass};
use crate::DEFAULT_ENUM_CAP;

#[derive(Parser)]
#[command(
    name = "projref",
    about = "Exact combinatorics of projective reflection groups",
    version
)]
struct Cli {
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group-level enumeration.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Descent profile of one element, as JSON.
    Stats {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        /// Element text, e.g. "2 1 3; 0 4 1".
        #[arg(long)]
        element: String,
    },
    /// The projective correspondence applied to one element.
    Rs {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        #[arg(long)]
        element: String,
    },
    /// Hilbert-type series as a JSON term list.
    Hilbert {
        #[command(subcommand)]
        kind: HilbertKind,
    },
    /// Coarse tensor coefficient of k shape classes.
    Kronecker {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        /// JSON file holding a list of multishapes.
        #[arg(long, value_name = "FILE")]
        shapes: PathBuf,
        /// Expected number of shapes (validated against the file).
        #[arg(long)]
        k: Option<usize>,
    },
    /// One irreducible character value, as a cyclotomic coefficient vector.
    Character {
        /// Multishape as inline JSON, e.g. "[[2,1],[1]]".
        #[arg(long)]
        shape: String,
        /// Cycle type as "length:color" pairs, e.g. "2:1,1:0".
        #[arg(long = "type")]
        cycle_type: String,
    },
    /// Compare the twisted series pair for one Galois automorphism.
    Galois {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        /// Exponent of the twist; must be coprime to r.
        #[arg(long)]
        d: usize,
        /// Collapse each series to a single-variable polynomial.
        #[arg(long)]
        collapse: bool,
        /// Degree bound; defaults to twice the maximal fmaj, which
        /// makes the comparison exact.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Run verification suites and emit a JSON report.
    Verify {
        /// Suite name, or "all".
        suite: String,
        /// Skip groups whose order exceeds this bound.
        #[arg(long)]
        max_order: Option<u64>,
        /// Optional JSON config file with "max_order" and/or "cap".
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// List every element in canonical text form, one per line.
    Enumerate {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        /// Print only the number of elements.
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Subcommand)]
enum HilbertKind {
    /// Diagonal invariants of k coordinate alphabets.
    Diagonal {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Invariants of the k-fold tensor power.
    Tensor {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
    },
    /// Module basis times tensor invariants (the predicted product).
    Rhs {
        #[arg(long, value_parser = parse_params, value_name = "r,p,q,n")]
        params: GroupParams,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bound: usize,
    },
}

fn parse_params(s: &str) -> std::result::Result<GroupParams, String> {
    GroupParams::parse_flag(s).map_err(|e| e.to_string())
}

fn enum_cap() -> usize {
    std::env::var("PROJREF_ENUM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

struct Output {
    text: String,
    /// True when a verification ran and found a counterexample.
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, failed: false }
    }
}

/// Parses command-line arguments from the environment, runs the
/// requested command, and returns the process exit code.
pub fn run_cli() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(out) => {
            if let Err(e) = write_output(cli.out.as_deref(), &out.text) {
                eprintln!("error: {e}");
                return 2;
            }
            i32::from(out.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(command: Command) -> Result<Output> {
    match command {
        Command::Group { action } => group_command(action),
        Command::Stats { params, element } => {
            let g = parse_element(params, &element)?;
            let profile = stat_profile(&g);
            Ok(Output::ok(json_line(&serde_json::to_value(&profile)?)))
        }
        Command::Rs { params, element } => {
            let g = parse_element(params, &element)?;
            let pair = projective_rs(&g)?;
            let class = pair.shape_class();
            let value = json!({
                "insertion": pair.insertion,
                "recording": pair.recording,
                "shape": pair.insertion.shape(),
                "stabilizer_order": class.stabilizer,
            });
            Ok(Output::ok(json_line(&value)))
        }
        Command::Hilbert { kind } => hilbert_command(kind),
        Command::Kronecker { params, shapes, k } => kronecker_command(params, &shapes, k),
        Command::Character { shape, cycle_type } => {
            let shape = parse_shape_json(&shape)
                .map_err(|e| Error::Usage(format!("--shape: {e}")))?;
            let ty = CycleType::parse(&cycle_type, shape.colors())
                .map_err(|e| Error::Usage(format!("--type: {e}")))?;
            let value = wreath_character(&shape, &ty)?;
            Ok(Output::ok(json_line(&serde_json::to_value(value.coeffs())?)))
        }
        Command::Galois { params, d, collapse, bound } => {
            galois_command(params, d, collapse, bound)
        }
        Command::Verify { suite, max_order, config } => {
            verify_command(&suite, max_order, config.as_deref())
        }
    }
}

fn group_command(action: GroupAction) -> Result<Output> {
    match action {
        GroupAction::Enumerate { params, count_only } => {
            if count_only {
                return Ok(Output::ok(format!("{}\n", params.order())));
            }
            let mut text = String::new();
            for g in elements(params, enum_cap())? {
                text.push_str(&g.to_text());
                text.push('\n');
            }
            Ok(Output::ok(text))
        }
    }
}

fn hilbert_command(kind: HilbertKind) -> Result<Output> {
    let series = match kind {
        HilbertKind::Diagonal { params, k, bound } => {
            diagonal_invariant_hilbert(params, k, bound)?
        }
        HilbertKind::Tensor { params, k, bound } => tensor_invariant_hilbert(params, k, bound)?,
        HilbertKind::Rhs { params, k, bound } => {
            let module = module_basis_hilbert(params, k, bound, enum_cap())?;
            let tensor = tensor_invariant_hilbert(params, k, bound)?;
            module.mul_truncated(&tensor, bound)
        }
    };
    Ok(Output::ok(json_line(&series.to_json())))
}

fn kronecker_command(params: GroupParams, shapes: &Path, k: Option<usize>) -> Result<Output> {
    let data = std::fs::read_to_string(shapes)?;
    let raw: Vec<serde_json::Value> = serde_json::from_str(&data)?;
    if let Some(k) = k {
        if k != raw.len() {
            return Err(Error::Usage(format!(
                "--k is {k} but --shapes holds {} shapes",
                raw.len()
            )));
        }
    }
    let mut classes = Vec::with_capacity(raw.len());
    for value in &raw {
        let shape = shape_from_value(value)
            .map_err(|e| Error::Usage(format!("--shapes: {e}")))?;
        classes.push(ShapeClass::of(&shape, params.p)?);
    }
    let c = coarse_kronecker(params, &classes, enum_cap())?;
    Ok(Output::ok(json_line(&json!({ "coarse_kronecker": c }))))
}

fn galois_command(
    params: GroupParams,
    d: usize,
    collapse: bool,
    bound: Option<usize>,
) -> Result<Output> {
    let cap = enum_cap();
    let bound = match bound {
        Some(b) => b,
        None => {
            let max = elements(params.dual(), cap)?
                .map(|g| stat_profile(&g).fmaj)
                .max()
                .unwrap_or(0);
            2 * max
        }
    };
    let report = gsigma_check(params, d, bound, cap)?;
    let equal = report.holds();
    let value = if collapse {
        let comb = report.combinatorial.collapse_total_degree();
        let repr = report.representation.collapse_total_degree();
        json!({
            "d": d,
            "combinatorial": { "coeffs": comb.coeffs(), "pretty": comb.to_string() },
            "representation": { "coeffs": repr.coeffs(), "pretty": repr.to_string() },
            "equal": equal,
        })
    } else {
        json!({
            "d": d,
            "combinatorial": report.combinatorial.to_json(),
            "representation": report.representation.to_json(),
            "equal": equal,
        })
    };
    Ok(Output { text: json_line(&value), failed: !equal })
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    max_order: Option<u64>,
    cap: Option<usize>,
}

fn verify_command(suite: &str, max_order: Option<u64>, config: Option<&Path>) -> Result<Output> {
    let mut cfg = VerifyConfig { max_order: None, cap: enum_cap() };
    if let Some(path) = config {
        let data = std::fs::read_to_string(path)?;
        let file: FileConfig = serde_json::from_str(&data)
            .map_err(|e| Error::Usage(format!("--config: {e}")))?;
        if let Some(m) = file.max_order {
            cfg.max_order = Some(m as u128);
        }
        if let Some(c) = file.cap {
            cfg.cap = c;
        }
    }
    if let Some(m) = max_order {
        cfg.max_order = Some(m as u128);
    }
    let report = if suite.eq_ignore_ascii_case("all") {
        run_all(&cfg)
    } else {
        run_suite(suite, &cfg)?
    };
    let text = format!("{}\n", serde_json::to_string_pretty(&report.to_json())?);
    Ok(Output { text, failed: !report.passed() })
}

fn parse_element(params: GroupParams, text: &str) -> Result<Element> {
    Element::parse_text(params, text).map_err(|e| Error::Usage(format!("--element: {e}")))
}

/// Accepts a multishape either as a bare list of partitions or as the
/// full `{"components": ...}` object.
fn shape_from_value(value: &serde_json::Value) -> Result<MultiShape> {
    if value.is_array() {
        let parts: Vec<Vec<usize>> = serde_json::from_value(value.clone())?;
        return MultiShape::new(parts.into_iter().map(Partition::new).collect());
    }
    let shape: MultiShape = serde_json::from_value(value.clone())?;
    Ok(shape)
}

fn parse_shape_json(text: &str) -> Result<MultiShape> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    shape_from_value(&value)
}

fn json_line(value: &serde_json::Value) -> String {
    format!("{value}\n")
}
