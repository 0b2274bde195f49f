//! Command-line surface: parse braid words, evaluate the four invariants,
//! compare closures, and run the self-test and invariance harnesses.
//!
//! Exit codes: 0 on success, 1 when a check or self-test fails, 2 on
//! malformed input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidties::braids::{parse_braid, TiedSingularBraid};
use braidties::btalgebra::{dim_selftest, Presentation};
use braidties::coeffs::{FieldTag, QuadExt, Var};
use braidties::hecke;
use braidties::invariants::{
    self, check_classical_agreement, check_homogeneity, check_markov, check_skein,
    check_unused_strand, Evaluator, InvariantKind,
};
use braidties::partitions::SetPartition;
use braidties::report::CheckReport;
use braidties::trace::check_trace_rules;

#[derive(Parser)]
#[command(
    name = "braidties",
    about = "Exact Homflypt-type invariants of tied and singular links from braid words",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
    All,
}

impl KindArg {
    fn kinds(self) -> Vec<InvariantKind> {
        match self {
            KindArg::Phi => vec![InvariantKind::Phi],
            KindArg::Psi => vec![InvariantKind::Psi],
            KindArg::PhiPrime => vec![InvariantKind::PhiPrime],
            KindArg::PsiPrime => vec![InvariantKind::PsiPrime],
            KindArg::All => InvariantKind::ALL.to_vec(),
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Inline braid word, e.g. "n=2 s1 s1 s1"
    #[arg(long, conflicts_with = "braid")]
    word: Option<String>,
    /// Path to a braid word file
    #[arg(long)]
    braid: Option<PathBuf>,
}

#[derive(Args)]
struct CommonArgs {
    /// Invariant kind(s) to evaluate
    #[arg(long, value_enum, default_value = "all")]
    inv: KindArg,
    /// Substitute one of x, y before printing/comparing, e.g. "x=y"
    #[arg(long)]
    subst: Option<String>,
    /// Machine-readable JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate invariants of a braid closure
    Eval {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Also run the classical Hecke oracle on the underlying word
        #[arg(long)]
        oracle: bool,
    },
    /// Print the number of closure components
    Components {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print the closure's induced component partition
    ClosurePartition {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compare two braid closures under the invariants and under the
    /// single-block proxy
    Compare {
        /// First input: inline word (starting with "n=") or file path
        a: String,
        /// Second input: inline word (starting with "n=") or file path
        b: String,
        #[command(flatten)]
        common: CommonArgs,
        /// Also compare classical Hecke oracle values
        #[arg(long)]
        oracle: bool,
    },
    /// Run randomized invariance/identity harnesses
    Check {
        /// Which harness to run
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "all")]
        inv: KindArg,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 0xb7a1d)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Basis/dimension, defining-relation and trace-rule self-tests
    Selftest {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0xb7a1d)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Markov,
    Skein,
    Homogeneity,
    Classical,
    Oracle,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

fn load_input(input: &InputArgs) -> Result<TiedSingularBraid, String> {
    let text = match (&input.word, &input.braid) {
        (Some(word), None) => word.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?
        }
        _ => return Err("exactly one of --word or --braid is required".to_string()),
    };
    parse_braid(&text).map_err(|e| e.to_string())
}

fn load_positional(spec: &str) -> Result<TiedSingularBraid, String> {
    let text = if spec.trim_start().starts_with("n=") {
        spec.to_string()
    } else {
        fs::read_to_string(spec).map_err(|e| format!("{}: {}", spec, e))?
    };
    parse_braid(&text).map_err(|e| e.to_string())
}

/// Parse `x=<expr>` or `y=<expr>` into a binding in the kind's field.
fn parse_subst(spec: &str, tag: FieldTag) -> Result<(Var, QuadExt), String> {
    let (lhs, rhs) = spec
        .split_once('=')
        .ok_or_else(|| format!("bad substitution '{}', expected var=expr", spec))?;
    let var = match lhs.trim() {
        "x" => Var::X,
        "y" => Var::Y,
        other => return Err(format!("cannot substitute '{}', only x or y", other)),
    };
    let value = QuadExt::parse(tag, rhs.trim()).map_err(|e| e.to_string())?;
    Ok((var, value))
}

fn apply_subst(value: &QuadExt, spec: Option<&str>) -> Result<QuadExt, String> {
    match spec {
        None => Ok(value.clone()),
        Some(spec) => {
            let (var, bound) = parse_subst(spec, value.tag())?;
            value.subst(&[(var, bound)]).map_err(|e| e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Eval {
            input,
            common,
            oracle,
        } => {
            let braid = load_input(&input)?;
            let mut eval = Evaluator::new();
            let mut results = Vec::new();
            for kind in common.inv.kinds() {
                let result = eval.value(&braid, kind);
                let value = apply_subst(&result.value, common.subst.as_deref())?;
                results.push((result, value));
            }
            let oracle_value = if oracle {
                Some(
                    hecke::homflypt(braid.n(), braid.word())
                        .map_err(|e| e.to_string())?,
                )
            } else {
                None
            };
            if common.json {
                let mut kinds = Vec::new();
                for (result, value) in &results {
                    kinds.push(json!({
                        "kind": result.kind.name(),
                        "value": value.render(),
                        "metadata": metadata_json(result),
                    }));
                }
                let mut doc = json!({
                    "command": "eval",
                    "inputs": [braid.render()],
                    "results": kinds,
                });
                if let Some(h) = &oracle_value {
                    doc["oracle"] = json!(h.render());
                }
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("input: {}", braid.render());
                for (result, value) in &results {
                    println!("{} = {}", result.kind.name(), value.render());
                }
                if let Some((result, _)) = results.first() {
                    println!(
                        "strands={} components={} singularities={} sc-partition={}",
                        result.strands,
                        result.components,
                        result.singularities,
                        result.sc_partition
                    );
                }
                if let Some(h) = &oracle_value {
                    println!("homflypt oracle = {}", h.render());
                }
            }
            Ok(true)
        }
        Command::Components { input, json } => {
            let braid = load_input(&input)?;
            let closure = braid.closure();
            if json {
                println!(
                    "{}",
                    json!({
                        "command": "components",
                        "inputs": [braid.render()],
                        "components": closure.components,
                    })
                );
            } else {
                println!("k={}", closure.components);
            }
            Ok(true)
        }
        Command::ClosurePartition { input, json } => {
            let braid = load_input(&input)?;
            let closure = braid.closure();
            if json {
                println!(
                    "{}",
                    json!({
                        "command": "closure-partition",
                        "inputs": [braid.render()],
                        "components": closure.components,
                        "sc_partition": closure.sc_partition.to_string(),
                    })
                );
            } else {
                println!("k={}, J={}", closure.components, closure.sc_partition);
            }
            Ok(true)
        }
        Command::Compare {
            a,
            b,
            common,
            oracle,
        } => {
            let left = load_positional(&a)?;
            let right = load_positional(&b)?;
            let mut eval = Evaluator::new();
            let mut rows = Vec::new();
            for kind in common.inv.kinds() {
                let lv = apply_subst(&eval.value(&left, kind).value, common.subst.as_deref())?;
                let rv = apply_subst(&eval.value(&right, kind).value, common.subst.as_deref())?;
                let equal = lv.eq_val(&rv);
                // single-block proxy: retie every strand into one block
                let lp = single_block(&left);
                let rp = single_block(&right);
                let lpv = apply_subst(&eval.value(&lp, kind).value, common.subst.as_deref())?;
                let rpv = apply_subst(&eval.value(&rp, kind).value, common.subst.as_deref())?;
                let proxy_equal = lpv.eq_val(&rpv);
                rows.push((kind, equal, proxy_equal, lv, rv));
            }
            let oracle_row = if oracle {
                let lo = hecke::homflypt(left.n(), left.word()).map_err(|e| e.to_string())?;
                let ro = hecke::homflypt(right.n(), right.word()).map_err(|e| e.to_string())?;
                Some((lo.eq_val(&ro), lo, ro))
            } else {
                None
            };
            if common.json {
                let mut kinds = Vec::new();
                for (kind, equal, proxy_equal, lv, rv) in &rows {
                    kinds.push(json!({
                        "kind": kind.name(),
                        "equal": equal,
                        "single_block_equal": proxy_equal,
                        "left": lv.render(),
                        "right": rv.render(),
                    }));
                }
                let mut doc = json!({
                    "command": "compare",
                    "inputs": [left.render(), right.render()],
                    "results": kinds,
                });
                if let Some((eq, lo, ro)) = &oracle_row {
                    doc["oracle"] = json!({
                        "equal": eq,
                        "left": lo.render(),
                        "right": ro.render(),
                    });
                }
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("left:  {}", left.render());
                println!("right: {}", right.render());
                for (kind, equal, proxy_equal, _, _) in &rows {
                    println!(
                        "{:<10} {}   single-block proxy: {}",
                        kind.name(),
                        if *equal { "equal" } else { "unequal" },
                        if *proxy_equal { "equal" } else { "unequal" }
                    );
                }
                if let Some((eq, _, _)) = &oracle_row {
                    println!(
                        "homflypt oracle: {}",
                        if *eq { "equal" } else { "unequal" }
                    );
                }
            }
            Ok(true)
        }
        Command::Check {
            suite,
            inv,
            trials,
            max_n,
            max_len,
            seed,
            json,
        } => {
            let mut reports: Vec<CheckReport> = Vec::new();
            if matches!(suite, Suite::Markov | Suite::All) {
                reports.push(check_markov(trials, 5, max_n, max_len, seed));
            }
            if matches!(suite, Suite::Skein | Suite::All) {
                for kind in inv.kinds() {
                    reports.push(check_skein(kind, trials, max_n.min(4), max_len, seed));
                }
            }
            if matches!(suite, Suite::Homogeneity | Suite::All) {
                for kind in inv.kinds() {
                    reports.push(check_homogeneity(kind, trials, seed));
                }
            }
            if matches!(suite, Suite::Classical | Suite::All) {
                reports.push(check_classical_agreement(trials, seed));
                reports.push(check_unused_strand(trials.min(10), seed));
            }
            if matches!(suite, Suite::Oracle | Suite::All) {
                reports.push(hecke::check_oracle(trials, seed));
            }
            emit_reports(&reports, json);
            Ok(reports.iter().all(|r| r.pass()))
        }
        Command::Selftest {
            max_n,
            trials,
            seed,
            json,
        } => {
            let mut pass = true;
            let mut docs = Vec::new();
            for pres in [Presentation::T, Presentation::V] {
                for n in 2..=max_n {
                    let report = dim_selftest(n, pres);
                    pass &= report.pass;
                    if json {
                        docs.push(json!({
                            "name": format!("dimension/relations n={} ({:?})", n, pres),
                            "pass": report.pass,
                            "basis": report.basis_count,
                            "expected": report.expected,
                            "relations": report.relations.iter().map(|r| json!({
                                "name": r.name,
                                "holds": r.holds,
                                "informative": r.informative,
                            })).collect::<Vec<_>>(),
                        }));
                    } else {
                        print!("{}", report);
                    }
                }
                let report = check_trace_rules(max_n.min(4), trials, seed, pres);
                pass &= report.pass();
                if json {
                    docs.push(report_json(&report));
                } else {
                    print!("{}", report);
                }
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "command": "selftest",
                        "checks": docs,
                        "pass": pass,
                    }))
                    .unwrap()
                );
            }
            Ok(pass)
        }
    }
}

fn single_block(braid: &TiedSingularBraid) -> TiedSingularBraid {
    TiedSingularBraid::from_parts(SetPartition::full(braid.n()), braid.word().to_vec())
}

fn metadata_json(result: &invariants::InvariantResult) -> Value {
    json!({
        "strands": result.strands,
        "components": result.components,
        "singularities": result.singularities,
        "sc_partition": result.sc_partition.to_string(),
    })
}

fn report_json(report: &CheckReport) -> Value {
    json!({
        "name": report.name,
        "pass": report.pass(),
        "trials": report.trials,
        "seed": report.seed,
        "failures": report.failures.iter().map(|f| json!({
            "description": f.description,
            "counterexample": f.counterexample,
        })).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

fn emit_reports(reports: &[CheckReport], json: bool) {
    if json {
        let docs: Vec<Value> = reports.iter().map(report_json).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "command": "check",
                "checks": docs,
                "pass": reports.iter().all(|r| r.pass()),
            }))
            .unwrap()
        );
    } else {
        for report in reports {
            print!("{}", report);
        }
    }
}
