use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use symplectic_ice::enumerate::{lattice_diagram, lattice_states, partition_function, state_weight};
use symplectic_ice::model::{self, build_lattice};
use symplectic_ice::patterns::{enumerate_patterns, h_tilde, state_to_pattern, stats, top_row};
use symplectic_ice::relations::{self, FishKind};
use symplectic_ice::weights::{weight_table, TABLE_NAMES};
use symplectic_ice::ybe::verify_all_with;
use symplectic_ice::{Error, LatticeSpec, RIce, Ring, Variant};

/// Metaplectic ice for Cartan type C: partition functions, Gelfand–Tsetlin
/// patterns and checks of the Yang–Baxter equation and its consequences.
#[derive(Parser, Debug)]
#[command(name = "ice", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Rank.
    #[arg(long, global = true, default_value_t = 1)]
    r: usize,
    /// Cover degree (odd).
    #[arg(long, global = true, default_value_t = 3)]
    n: u32,
    /// Dominant weight, comma separated (default: all zeros).
    #[arg(long, global = true, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    #[arg(long, global = true, default_value = "standard")]
    variant: Variant,
    /// Split partition functions by the residues of the left-edge charges.
    #[arg(long, global = true)]
    by_residue: bool,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized double checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads.
    #[arg(long, global = true, env = "ICE_JOBS")]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the admissible states of a lattice with their weights.
    States,
    /// Partition function of a lattice.
    Partition,
    /// Strict Gelfand–Tsetlin patterns with a given top row.
    Patterns {
        /// Top row (default: the top row of the lattice given by --r --lambda).
        #[arg(long, value_delimiter = ',')]
        top: Option<Vec<i64>>,
    },
    /// Coefficients of the pattern generating function, grouped by k.
    Dirichlet,
    /// Dump a weight table.
    Tables {
        /// One of grid, bend, r, modified-grid, modified-r (default: all).
        #[arg(long)]
        table: Option<String>,
    },
    /// Verify the Yang–Baxter equation on every exterior.
    Ybe {
        /// R-vertex type: gd, dd, dg, gg (default: all four).
        #[arg(long)]
        ice: Option<RIce>,
        /// Random specializations per case that must agree with the exact verdict.
        #[arg(long, default_value_t = 2)]
        random_checks: usize,
    },
    /// Check one of the local relations or functional equations.
    Relation {
        /// caduceus, fish-dg, fish-gg, fish-gd, transposition, inverse, rowchange, tau
        #[arg(long)]
        check: String,
    },
}

/// What a subcommand produced: a report and whether all checks passed.
struct Outcome {
    text: String,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { text, json, passed: true }
    }
}

fn lattice(c: &Common) -> Result<LatticeSpec, Error> {
    Ring::new(c.n, c.r)?;
    let lambda = c.lambda.clone().unwrap_or_else(|| vec![0; c.r]);
    build_lattice(c.r, c.n, &lambda)
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Standard => "standard",
        Variant::GDoubled => "gdoubled",
        Variant::Modified => "modified",
    }
}

fn lattice_variant(c: &Common) -> Result<Variant, Error> {
    if c.variant == Variant::Modified {
        return Err(Error::Config("modified weights are defined for grid and R-vertices only".into()));
    }
    Ok(c.variant)
}

fn states(c: &Common) -> Result<Outcome, Error> {
    let spec = lattice(c)?;
    let variant = lattice_variant(c)?;
    let diagram = lattice_diagram(&spec)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for (k, st) in lattice_states(&spec).iter().enumerate() {
        let w = state_weight(&diagram, st, variant);
        let pattern = state_to_pattern(&spec, st)?;
        text.push_str(&format!("state {k}: weight {w}\npattern {pattern}\n{}\n", model::render(&spec, st)));
        let mut j = model::state_to_json(&spec, st);
        j["weight"] = json!(w.to_string());
        j["pattern"] = pattern.to_json();
        rows.push(j);
    }
    text.push_str(&format!("states: {}", rows.len()));
    Ok(Outcome::ok(
        text,
        json!({"spec": spec.to_json(), "variant": variant_name(variant), "count": rows.len(), "states": rows}),
    ))
}

fn partition(c: &Common) -> Result<Outcome, Error> {
    let spec = lattice(c)?;
    let variant = lattice_variant(c)?;
    let z = partition_function(&lattice_diagram(&spec)?, variant)?;
    let by_residue: Vec<(String, String)> = z
        .by_residue
        .iter()
        .map(|(k, w)| (k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), w.to_string()))
        .collect();
    let text = if c.by_residue {
        by_residue.iter().map(|(k, w)| format!("c=({k}): {w}")).collect::<Vec<_>>().join("\n")
    } else {
        z.total.to_string()
    };
    let mut j = json!({
        "spec": spec.to_json(),
        "variant": variant_name(variant),
        "states": z.state_count,
        "total": z.total.to_string(),
    });
    if c.by_residue {
        j["by_residue"] = by_residue.iter().map(|(k, w)| json!({"c": k, "z": w})).collect();
    }
    Ok(Outcome::ok(text, j))
}

fn patterns(c: &Common, top: Option<Vec<i64>>) -> Result<Outcome, Error> {
    let top = match top {
        Some(t) => t,
        None => top_row(&lattice(c)?),
    };
    let ps = enumerate_patterns(&top)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &ps {
        let st = stats(p);
        text.push_str(&format!("{p}    wt={:?} k={:?}\n", st.wt, st.k));
        let mut j = p.to_json();
        j["wt"] = json!(st.wt);
        j["k"] = json!(st.k);
        rows.push(j);
    }
    text.push_str(&format!("patterns: {}", ps.len()));
    Ok(Outcome::ok(text, json!({"top": top, "count": ps.len(), "patterns": rows})))
}

fn dirichlet(c: &Common) -> Result<Outcome, Error> {
    let spec = lattice(c)?;
    let ring = Ring::new(c.n, c.r)?;
    let top = top_row(&spec);
    let coeffs = h_tilde(&ring, &top)?;
    let text = coeffs.iter().map(|(k, w)| format!("k={k:?}: {w}")).collect::<Vec<_>>().join("\n");
    let rows: Vec<Value> = coeffs.iter().map(|(k, w)| json!({"k": k, "coefficient": w.to_string()})).collect();
    Ok(Outcome::ok(text, json!({"spec": spec.to_json(), "top": top, "coefficients": rows})))
}

fn tables(c: &Common, table: Option<String>) -> Result<Outcome, Error> {
    let ring = Ring::new(c.n, 2)?;
    let names: Vec<String> = match table {
        Some(t) => vec![t],
        None => TABLE_NAMES.iter().map(|s| s.to_string()).collect(),
    };
    let mut text = String::new();
    let mut j = serde_json::Map::new();
    for name in &names {
        let rows = weight_table(&ring, name, c.variant)?;
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        text.push_str(&format!("# {name}\n"));
        for (k, w) in &rows {
            text.push_str(&format!("{k:<width$}  {w}\n"));
        }
        j.insert(name.clone(), rows.iter().map(|(k, w)| json!({"config": k, "weight": w})).collect());
    }
    Ok(Outcome::ok(text.trim_end().to_string(), json!({"n": c.n, "tables": j})))
}

fn ybe(c: &Common, ice: Option<RIce>, random_checks: usize) -> Result<Outcome, Error> {
    Ring::new(c.n, 2)?;
    let ices = match ice {
        Some(i) => vec![i],
        None => RIce::ALL.to_vec(),
    };
    let labelled = ices.len() > 1;
    let mut lines = Vec::new();
    let mut reports = Vec::new();
    let mut passed = true;
    for ice in ices {
        let rep = verify_all_with(ice, c.n, c.variant, c.seed, random_checks)?;
        let mut line = format!("cases: {}, failures: {}", rep.cases, rep.failures.len());
        if labelled {
            line = format!("{}: {line}", ice.name());
        }
        for f in rep.failures.iter().take(20) {
            line.push_str(&format!("\n  {}: lhs {} rhs {}", f.case.label(), f.lhs, f.rhs));
        }
        if rep.random_disagreements > 0 {
            line.push_str(&format!("\n  random disagreements: {}", rep.random_disagreements));
        }
        passed &= rep.passed();
        lines.push(line);
        reports.push(rep.to_json());
    }
    let j = if reports.len() == 1 { reports.remove(0) } else { json!({"n": c.n, "reports": reports}) };
    Ok(Outcome { text: lines.join("\n"), json: j, passed })
}

fn relation(c: &Common, check: &str) -> Result<Outcome, Error> {
    Ring::new(c.n, 1)?;
    let summary = |name: &str, cases: usize, failures: usize| format!("{name}: cases: {cases}, failures: {failures}");
    match check {
        "caduceus" | "fish-dg" | "fish-gg" | "fish-gd" => {
            let rep = if check == "caduceus" {
                relations::caduceus_check(c.n)?
            } else {
                let kind: FishKind = check.parse().map_err(Error::Config)?;
                relations::fish_check(kind, c.n)?
            };
            let expected = symplectic_ice::RingFrac::from_poly(rep.expected.clone());
            let failures = rep.cases.iter().filter(|(_, f)| *f != expected).count() + rep.stray.len();
            Ok(Outcome { text: summary(check, rep.cases.len(), failures), json: rep.to_json(), passed: rep.passed() })
        }
        "transposition" | "inverse" => {
            let spec = lattice(c)?;
            if check == "transposition" && c.r < 2 {
                return Err(Error::Config("transposition needs r >= 2".into()));
            }
            let mut ids = Vec::new();
            for cv in relations::all_residue_vectors(c.r, c.n) {
                if check == "transposition" {
                    for i in 1..c.r {
                        ids.push((format!("i={i} c={cv:?}"), relations::transposition_identity(&spec, i, &cv)?));
                    }
                } else {
                    ids.push((format!("c={cv:?}"), relations::inverse_identity(&spec, &cv)?));
                }
            }
            let failures = ids.iter().filter(|(_, id)| !id.holds()).count();
            let cases: Vec<Value> = ids
                .iter()
                .map(|(label, id)| {
                    let mut j = id.to_json();
                    j["case"] = json!(label);
                    j
                })
                .collect();
            Ok(Outcome {
                text: summary(check, ids.len(), failures),
                json: json!({"check": check, "spec": spec.to_json(), "passed": failures == 0, "cases": cases}),
                passed: failures == 0,
            })
        }
        "rowchange" => {
            let spec = lattice(c)?;
            let rep = relations::check_row_change(&spec)?;
            let failures = rep.weight_mismatches.len() + rep.residue_mismatches.len();
            let mut j = rep.to_json();
            j["spec"] = spec.to_json();
            Ok(Outcome { text: summary(check, rep.states, failures), json: j, passed: rep.passed() })
        }
        "tau" => {
            let mut cases = Vec::new();
            let mut failures = 0;
            for ci in 0..c.n {
                for cj in 0..c.n {
                    let m = relations::tau_match(ci, cj, c.n)?;
                    failures += (!m.passed()) as usize;
                    cases.push(json!({
                        "c_i": ci,
                        "c_j": cj,
                        "passed": m.passed(),
                        "entries": m.entries.iter().map(|(a, b, ok)| json!({"tau": a, "table": b, "equal": ok})).collect::<Vec<_>>(),
                    }));
                }
            }
            Ok(Outcome {
                text: summary(check, cases.len(), failures),
                json: json!({"check": "tau", "n": c.n, "passed": failures == 0, "cases": cases}),
                passed: failures == 0,
            })
        }
        _ => Err(Error::Config(format!(
            "unknown check '{check}' (caduceus|fish-dg|fish-gg|fish-gd|transposition|inverse|rowchange|tau)"
        ))),
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let c = &cli.common;
    match cli.command {
        Command::States => states(c),
        Command::Partition => partition(c),
        Command::Patterns { top } => patterns(c, top),
        Command::Dirichlet => dirichlet(c),
        Command::Tables { table } => tables(c, table),
        Command::Ybe { ice, random_checks } => ybe(c, ice, random_checks),
        Command::Relation { check } => relation(c, &check),
    }
}

// A closed pipe (`ice ... | head`) is not an error.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.common.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool configured once");
    }
    let as_json = cli.common.json;
    match run(cli) {
        Ok(out) => {
            if as_json {
                emit(&serde_json::to_string_pretty(&out.json).expect("serializable report"));
            } else {
                emit(&out.text);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
