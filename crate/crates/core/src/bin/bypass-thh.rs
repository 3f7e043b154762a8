//! Command-line driver. Exit codes: 0 when every check passes, 1 on a
//! verification failure, 2 on unreadable or invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use bypass_thh::cyclic::LambdaArrow;
use bypass_thh::eulerian::{count_tours_oracle, enumerate_tours, right_fibration_check, LiftReport};
use bypass_thh::graphcat::json::{bypass_from_json, graph_from_json};
use bypass_thh::graphcat::Graph;
use bypass_thh::suite::{run_all, SuiteConfig};
use bypass_thh::thh::{commutator_quotient_dim, cyclic_bar, othh_homology, LinearEnrichedCategory};

#[derive(Parser)]
#[command(name = "bypass-thh", version, about = "Eulerian tours, the cyclic category and THH of bypass categories")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Eulerian tours of a graph and compare with the BEST count.
    Tours {
        graph: PathBuf,
        /// Check unique tour lifts along this bypass map into `--target`.
        #[arg(long, requires = "target")]
        map: Option<PathBuf>,
        /// Target graph of `--map`.
        #[arg(long, requires = "map")]
        target: Option<PathBuf>,
    },
    /// Homology of the cyclic set O_thh of a graph.
    Othh {
        graph: PathBuf,
        /// Truncation level D (at least 2).
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Hochschild homology of a linear category, degrees 0..=N−2.
    Hh {
        category: PathBuf,
        /// Truncation level N of the cyclic bar construction (at least 2).
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
    /// Arrows of Λ with their duals, and composition tables.
    Lambda {
        /// Largest index shown.
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Run every verification suite.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        /// Truncation level D of the cyclic sets.
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
}

struct InputError(String);

type Outcome = Result<bool, InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, InputError> {
    graph_from_json(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    let out = if json {
        serde_json::to_string_pretty(value).expect("serializable") + "\n"
    } else {
        text()
    };
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}

fn tours(json: bool, path: &Path, lift: Option<(&Path, &Path)>) -> Outcome {
    let g = Arc::new(load_graph(path)?);
    let found = enumerate_tours(&g);
    let oracle = count_tours_oracle(&g);
    let agree = num_bigint::BigInt::from(found.len()) == oracle;
    let lists: Vec<Vec<&str>> = found.iter().map(|t| t.edge_ids()).collect();
    let mut reports: Vec<LiftReport> = Vec::new();
    if let Some((map, target)) = lift {
        let target = Arc::new(load_graph(target)?);
        let f = bypass_from_json(g.clone(), target.clone(), &read(map)?)
            .map_err(|e| InputError(format!("{}: {e}", map.display())))?;
        reports = enumerate_tours(&target).iter().map(|t| right_fibration_check(&f, t)).collect();
    }
    let pass = agree && reports.iter().all(|r| r.pass);
    let value = json!({
        "count": found.len(),
        "tours": lists,
        "oracle": oracle.to_string(),
        "agree": agree,
        "lifts": reports,
        "pass": pass,
    });
    emit(json, &value, || {
        let mut s = format!("{} tours\n", found.len());
        for t in &found {
            s.push_str(&format!("  {t}\n"));
        }
        s.push_str(&format!("oracle {oracle}, agree {agree}\n"));
        for r in &reports {
            s.push_str(&format!("{} lift {} ({} lifts)\n", if r.pass { "PASS" } else { "FAIL" }, r.instance, r.lift_count));
        }
        s
    });
    Ok(pass)
}

fn othh(json: bool, path: &Path, dim: usize) -> Outcome {
    if dim < 2 {
        return Err(InputError(format!("--dim must be at least 2, got {dim}")));
    }
    let g = Arc::new(load_graph(path)?);
    let report = othh_homology(&g, dim).map_err(|e| InputError(e.to_string()))?;
    emit(json, &report, || {
        let mut s = format!("|Eul| = {}\nbetti {:?}\n", report.eul_count, report.betti);
        for h in &report.torsion {
            s.push_str(&format!("{h}\n"));
        }
        s.push_str(&format!("{}\n", if report.pass { "pass" } else { "FAIL" }));
        s
    });
    Ok(report.pass)
}

fn hh(json: bool, path: &Path, dim: usize) -> Outcome {
    if dim < 2 {
        return Err(InputError(format!("--dim must be at least 2, got {dim}")));
    }
    let c = LinearEnrichedCategory::from_json(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let (betti, pass) = match cyclic_bar(&c, dim) {
        Ok(bar) => (bar.betti()[..dim - 1].to_vec(), true),
        Err(e) => {
            eprintln!("error: {e}");
            (Vec::new(), false)
        }
    };
    let quotient = commutator_quotient_dim(&c);
    let pass = pass && betti.first() == Some(&quotient);
    let value = json!({ "hh": betti, "commutator_quotient": quotient, "pass": pass });
    emit(json, &value, || {
        let mut s = String::new();
        for (k, b) in betti.iter().enumerate() {
            s.push_str(&format!("HH_{k} = Q^{b}\n"));
        }
        s.push_str(&format!("dim A/[A,A] = {quotient}\n{}\n", if pass { "pass" } else { "FAIL" }));
        s
    });
    Ok(pass)
}

fn lambda(json: bool, dim: usize) -> Outcome {
    let mut pass = true;
    let mut homs = Vec::new();
    let mut text = String::new();
    for m in 0..=dim {
        for n in 0..=dim {
            let arrows = LambdaArrow::hom(m, n);
            text.push_str(&format!("Λ(T_{m}, T_{n}): {} arrows\n", arrows.len()));
            let mut rows = Vec::new();
            for f in &arrows {
                let d = f.dual();
                pass &= d.dual() == *f;
                text.push_str(&format!("  {f}    dual {d}\n"));
                rows.push(json!({ "arrow": f, "dual": d }));
            }
            homs.push(json!({ "m": m, "n": n, "count": arrows.len(), "arrows": rows }));
        }
    }
    let mut tables = Vec::new();
    for n in 0..=dim {
        let ends = LambdaArrow::hom(n, n);
        text.push_str(&format!("composition in Λ(T_{n}, T_{n}), entry (g, f) = index of g∘f\n"));
        let mut table = Vec::new();
        for g in &ends {
            let row: Vec<usize> = ends
                .iter()
                .map(|f| {
                    let gf = g.compose(f).expect("composable");
                    ends.iter().position(|h| *h == gf).expect("closed")
                })
                .collect();
            text.push_str(&format!("  {}\n", row.iter().map(|i| format!("{i:>3}")).collect::<String>()));
            table.push(row);
        }
        tables.push(json!({ "n": n, "arrows": ends, "table": table }));
    }
    emit(json, &json!({ "homs": homs, "composition": tables, "pass": pass }), || text);
    Ok(pass)
}

fn verify(json: bool, cfg: SuiteConfig) -> Outcome {
    if cfg.dim < 2 || cfg.max_edges == 0 || cfg.max_vertices == 0 {
        return Err(InputError("bounds must be positive and --dim at least 2".into()));
    }
    let checks = run_all(&cfg);
    let pass = checks.iter().all(|c| c.pass);
    emit(json, &json!({ "config": cfg, "checks": checks, "pass": pass }), || {
        let mut s = String::new();
        for c in &checks {
            s.push_str(&format!("[{}] {}\n", c.criterion, c.line()));
        }
        s.push_str(if pass { "all checks pass\n" } else { "verification FAILED\n" });
        s
    });
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let outcome = match &cli.command {
        Command::Tours { graph, map, target } => tours(json, graph, map.as_deref().zip(target.as_deref())),
        Command::Othh { graph, dim } => othh(json, graph, *dim),
        Command::Hh { category, dim } => hh(json, category, *dim),
        Command::Lambda { dim } => lambda(json, *dim),
        Command::Verify {
            max_edges,
            max_vertices,
            dim,
        } => verify(
            json,
            SuiteConfig {
                max_edges: *max_edges,
                max_vertices: *max_vertices,
                dim: *dim,
                ..SuiteConfig::default()
            },
        ),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
