//! `qalcove`: enumerate, map, invert and check the quantum alcove and
//! tableau models from the command line.
//!
//! Exit status: 0 when every check passes, 1 on a usage error (bad flags, a
//! malformed or oversized job), 2 when a validation fails.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qalcove::alcove::{self, enumerate_admissible_guarded, fill, model_record, sfill, walk};
use qalcove::alphabet::column_from_text;
use qalcove::chains::{lambda_chain, validate_chain};
use qalcove::inverse::invert_traced;
use qalcove::qbg::{build_qbg_guarded, DEFAULT_GROUP_GUARD};
use qalcove::tableaux::enumerate_tensor;
use qalcove::{oracle, EdgeKind, Error, Family, LambdaChain, LieType, TableauElement, Weight};

#[derive(Parser, Debug)]
#[command(name = "qalcove", version, about = "Quantum alcove model and Kashiwara-Nakashima tableaux in types A, B, C, D")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cartan family.
    #[arg(long = "type", global = true, value_name = "A|B|C|D")]
    family: Option<Family>,

    /// Size n of the signed window: A_{n-1}, B_n, C_n or D_n.
    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Dominant weight as a partition, e.g. 3,2.
    #[arg(long, global = true, value_delimiter = ',')]
    lambda: Option<Vec<usize>>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Print intermediate stages.
    #[arg(long, global = true)]
    trace: bool,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Longest chain for which admissible subsets are enumerated.
    #[arg(long, global = true, default_value_t = alcove::DEFAULT_MAX_M)]
    guard_max_m: usize,

    /// Largest rank accepted.
    #[arg(long, global = true, default_value_t = 4)]
    guard_rank: usize,

    /// Largest first part of λ accepted.
    #[arg(long, global = true, default_value_t = 3)]
    guard_lambda1: usize,

    /// Largest Weyl group enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_GUARD)]
    guard_group: u128,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the λ-chain and check it with the alcove walk.
    Chain,
    /// Export the quantum Bruhat graph.
    Qbg,
    /// List the admissible subsets A(λ) or the tensor elements B^{λ'}.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Model::Alcove)]
        model: Model,
    },
    /// Map an admissible subset to its filling.
    Map {
        /// Chain positions, 1-based.
        #[arg(long = "J", value_delimiter = ',', num_args = 0..)]
        j: Vec<usize>,
    },
    /// Recover the admissible subset of a tensor element.
    Invert {
        /// Columns separated by `/`, letters by `,`, bars as a trailing `b`
        /// (`2,3b/1`), or a JSON list of columns with bars negative.
        #[arg(long, conflicts_with = "input")]
        tableau: Option<String>,
        /// Read the tableau element from a file.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check the blocked-off obstruction (types B, D) and the fast edge
    /// criteria (types A, C) against brute force.
    Verify,
    /// Run both directions of the bijection on every element.
    Roundtrip,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Model {
    Alcove,
    Tableau,
}

enum Failure {
    Usage(String),
    Validation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Rank { .. }
            | Error::Height { .. }
            | Error::NotDominant(_)
            | Error::GroupTooLarge { .. }
            | Error::ChainTooLong { .. }
            | Error::Guard(_)
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

type Run = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

impl Cli {
    fn lie(&self) -> Result<LieType, Failure> {
        let family = self.family.ok_or_else(|| usage("missing --type"))?;
        let n = self.rank.ok_or_else(|| usage("missing --rank"))?;
        let lie = LieType::new(family, n)?;
        if lie.rank() > self.guard_rank {
            return Err(usage(format!("rank guard: {lie} has rank {} > {} (raise --guard-rank)", lie.rank(), self.guard_rank)));
        }
        Ok(lie)
    }

    fn chain(&self, lie: &LieType) -> Result<LambdaChain, Failure> {
        let parts = self.lambda.as_deref().ok_or_else(|| usage("missing --lambda"))?;
        if parts.is_empty() || parts[0] == 0 {
            return Err(usage("λ must be a nonzero partition"));
        }
        if parts[0] > self.guard_lambda1 {
            return Err(usage(format!("λ_1 guard: {} > {} (raise --guard-lambda1)", parts[0], self.guard_lambda1)));
        }
        let lambda = Weight::from_partition(lie, parts)?;
        Ok(lambda_chain(lie, &lambda)?)
    }

    fn no_dot(&self) -> Result<(), Failure> {
        if self.format == Format::Dot {
            return Err(usage("--format dot is only available for qbg"));
        }
        Ok(())
    }

    fn run(&self) -> Run {
        let lie = self.lie()?;
        if !matches!(self.command, Command::Qbg) {
            self.no_dot()?;
        }
        match &self.command {
            Command::Chain => self.run_chain(&lie),
            Command::Qbg => self.run_qbg(&lie),
            Command::Enumerate { model } => self.run_enumerate(&lie, *model),
            Command::Map { j } => self.run_map(&lie, j),
            Command::Invert { tableau, input } => {
                let text = match (tableau, input) {
                    (Some(t), None) => t.clone(),
                    (None, Some(p)) => std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
                    _ => return Err(usage("give the element with --tableau or --input")),
                };
                self.run_invert(&lie, &parse_tableau(&text)?)
            }
            Command::Verify => self.run_verify(&lie),
            Command::Roundtrip => self.run_roundtrip(&lie),
        }
    }

    fn run_chain(&self, lie: &LieType) -> Run {
        let chain = self.chain(lie)?;
        if let Err(defect) = validate_chain(lie, &chain.lambda, &chain.roots())? {
            return Err(Failure::Validation(format!("not a λ-chain: {defect}")));
        }
        Ok(match self.format {
            Format::Json => to_json(&chain),
            _ => {
                let mut out = format!("{}\n", chain.to_text());
                if self.trace {
                    for seg in &chain.segments {
                        let _ = writeln!(out, "column {} {:?} height {}: entries {}..{}", seg.column + 1, seg.side, seg.height, seg.range.start + 1, seg.range.end);
                    }
                }
                let _ = writeln!(out, "{lie} λ={:?}: valid λ-chain of length {}", chain.lambda.coords(), chain.len());
                out
            }
        })
    }

    fn run_qbg(&self, lie: &LieType) -> Run {
        let qbg = build_qbg_guarded(lie, self.guard_group)?;
        Ok(match self.format {
            Format::Json => to_json(&qbg),
            Format::Dot => qbg.to_dot(),
            Format::Text => {
                let mut out = String::new();
                for e in &qbg.edges {
                    let kind = match e.kind {
                        EdgeKind::BruhatUp => "bruhat",
                        EdgeKind::QuantumDown => "quantum",
                    };
                    let _ = writeln!(out, "{} -> {} {} {kind}", qbg.vertices[e.source], qbg.vertices[e.target], e.label);
                }
                let _ = writeln!(out, "{lie}: {} vertices, {} edges", qbg.vertices.len(), qbg.edges.len());
                out
            }
        })
    }

    fn run_enumerate(&self, lie: &LieType, model: Model) -> Run {
        let chain = self.chain(lie)?;
        match model {
            Model::Alcove => {
                let subsets = enumerate_admissible_guarded(&chain, self.guard_max_m)?;
                if self.format == Format::Json {
                    let records = subsets.iter().map(|j| model_record(&chain, j)).collect::<Result<Vec<_>, _>>()?;
                    return Ok(to_json(&records));
                }
                let mut out = String::new();
                for j in &subsets {
                    let _ = writeln!(out, "{}\t{}", join(j.positions()), sfill(&chain, j)?);
                }
                Ok(out)
            }
            Model::Tableau => {
                let elements = enumerate_tensor(lie, &chain.heights)?;
                if self.format == Format::Json {
                    return Ok(to_json(&elements));
                }
                Ok(elements.iter().map(|b| format!("{b}\n")).collect())
            }
        }
    }

    fn run_map(&self, lie: &LieType, positions: &[usize]) -> Run {
        let chain = self.chain(lie)?;
        let j = alcove::admissible(&chain, positions.to_vec())?;
        if self.format == Format::Json {
            let mut record = model_record(&chain, &j)?;
            if self.trace {
                record["walk"] = serde_json::to_value(walk(&chain, j.positions())?).expect("values serialize");
            }
            return Ok(to_json(&record));
        }
        let mut out = String::new();
        if self.trace {
            for step in walk(&chain, j.positions())? {
                let e = chain.entries[step.position - 1];
                let _ = writeln!(out, "fold {} {e}: {} -> {}", step.position, step.before, step.after);
            }
            let _ = writeln!(out, "fill {}", fill(&chain, &j)?);
        }
        let _ = writeln!(out, "{}", sfill(&chain, &j)?);
        Ok(out)
    }

    fn run_invert(&self, lie: &LieType, b: &TableauElement) -> Run {
        let chain = self.chain(lie)?;
        b.check(lie, &chain.heights)?;
        let inv = invert_traced(&chain, b)?;
        if self.format == Format::Json {
            return Ok(if self.trace { to_json(&inv) } else { to_json(&model_record(&chain, &inv.subset)?) });
        }
        let mut out = String::new();
        if self.trace {
            let _ = writeln!(out, "split {}", inv.split);
            let _ = writeln!(out, "reordered {}", inv.reordered);
            for t in &inv.trace {
                let forced = if t.forced { " forced" } else { "" };
                let _ = writeln!(out, "segment {} fold ({},{}){forced}: {:?} -> {:?}", t.segment + 1, t.pair.0, t.pair.1, t.before, t.after);
            }
        }
        let _ = writeln!(out, "{}", join(inv.subset.positions()));
        Ok(out)
    }

    fn run_verify(&self, lie: &LieType) -> Run {
        let (checked, mismatches) = oracle::qbg_fast_mismatches(lie, self.guard_group)?;
        let blocks = match lie.family() {
            Family::B | Family::D => Some(oracle::blocked_off_no_path(lie, self.guard_group)?),
            _ => None,
        };
        let out = match self.format {
            Format::Json => to_json(&json!({
                "type": lie.to_string(),
                "edge_criteria": { "checked": checked, "mismatches": mismatches },
                "blocked_off": blocks,
            })),
            _ => {
                let mut out = String::new();
                match lie.family() {
                    Family::A | Family::C => {
                        let _ = writeln!(out, "edge criteria: {checked} pairs, {} mismatches", mismatches.len());
                    }
                    _ => {
                        let _ = writeln!(out, "edge criteria: none for {lie}");
                    }
                }
                if let Some(r) = &blocks {
                    let _ = writeln!(out, "blocked off: {} pairs over {} segments, {} joined", r.blocked_pairs, r.segments, r.counterexamples.len());
                }
                out
            }
        };
        if let Some((w, r)) = mismatches.first() {
            return Err(Failure::Validation(format!("{out}edge criterion disagrees at w = {w}, root {r}")));
        }
        if let Some((k, side, c, d, i)) = blocks.as_ref().and_then(|r| r.counterexamples.first()) {
            return Err(Failure::Validation(format!("{out}blocked-off pair joined: k = {k}, {side:?}, {c:?} -> {d:?} at row {i}")));
        }
        Ok(out)
    }

    fn run_roundtrip(&self, lie: &LieType) -> Run {
        let chain = self.chain(lie)?;
        let r = oracle::round_trip(lie, &chain.heights, self.guard_max_m)?;
        let out = match self.format {
            Format::Json => to_json(&json!({ "type": lie.to_string(), "heights": chain.heights, "counts": r, "passed": r.passed() })),
            _ => format!(
                "{lie} λ'={:?}: |A(λ)| = {}, |B| = {}, forward failures {}, backward failures {}: {}\n",
                chain.heights,
                r.model,
                r.tableaux,
                r.forward_failures,
                r.backward_failures,
                if r.passed() { "pass" } else { "FAIL" }
            ),
        };
        if r.model != r.tableaux {
            return Err(Failure::Validation(format!("{out}sizes differ")));
        }
        if !r.passed() {
            return Err(Failure::Validation(format!("{out}round trip failed")));
        }
        Ok(out)
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_tableau(text: &str) -> Result<TableauElement, Failure> {
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| usage(format!("tableau JSON: {e}")));
    }
    let columns = text.split('/').map(column_from_text).collect::<Result<Vec<_>, _>>()?;
    Ok(TableauElement::new(columns))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match cli.run() {
        Ok(out) => match &cli.output {
            Some(path) => match std::fs::write(path, out) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    ExitCode::from(1)
                }
            },
            None => {
                print!("{out}");
                ExitCode::SUCCESS
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("validation failed: {msg}");
            ExitCode::from(2)
        }
    }
}
