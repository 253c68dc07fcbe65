//! Command-line front end for mixed-graph spectral analysis.

use clap::{Parser, Subcommand};
use hermispec::charpoly::char_poly_exact;
use hermispec::enumerate::SearchConstraints;
use hermispec::graph::MixedGraph;
use hermispec::names::parse_graph_name;
use hermispec::registry::{letter_spec, Registry};
use hermispec::search::{
    find_mates, find_mates_guided, name_mates, replicate_out_campaign, DhsVerdict, MateReport,
    NonEquivalence, OutFamily,
};
use hermispec::spectra::{self, closed_form, ClosedForm, Spectrum};
use hermispec::switching::{
    canonicalize_cycle, canonicalize_unicyclic, normalize_forest, switching_equivalent,
};
use hermispec::verify;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const USAGE_ERROR: u8 = 2;
const CLAIM_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "hermispec",
    about = "Spectral analysis of mixed graphs via Hermitian adjacency matrices",
    after_help = "GRAPH arguments accept named-family shorthand or JSON:\n  \
    P:8              path on 8 vertices\n  \
    C:6 C1:12 C2:8   cycles: undirected / one arc / two consecutive arcs\n  \
    Gt:3 Gttm:2,4 D:7 K:4 theta:3,4,5   other families\n  \
    o p q ... w      reconstructed letter graphs (registry)\n  \
    E:4 Y1:5 Y2:5    reconstructed theta-graph orientations\n  \
    \"P:2 + o\"        disjoint unions\n  \
    file.json        a file in the graph JSON format\n  \
    '{\"n\":2,...}'    inline JSON"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Registry file with reconstructed named graphs (default: built-in).
    #[arg(long, global = true)]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of a graph (numerical, plus exact cosine form for named
    /// families).
    Spectrum {
        graph: String,
        /// Eigensolver tolerance.
        #[arg(long, default_value_t = spectra::DEFAULT_TOL)]
        tol: f64,
    },
    /// Exact integer characteristic polynomial.
    Charpoly { graph: String },
    /// Switching canonical form of a mixed cycle, forest or unicyclic graph.
    Canonicalize { graph: String },
    /// Switching equivalence of two graphs on the same labeled underlying
    /// graph, with a witness when equivalent.
    Equivalent { left: String, right: String },
    /// Exact cospectrality of two graphs.
    Cospectral { left: String, right: String },
    /// Cospectral mates of a graph.
    Mates {
        graph: String,
        /// Exhaustive scan of the whole order/size space (default).
        #[arg(long, conflicts_with = "guided")]
        free: bool,
        /// Decompose over the named-component catalog instead.
        #[arg(long)]
        guided: bool,
        /// Catalog order ceiling for guided search.
        #[arg(long, default_value_t = 30)]
        max_order: usize,
    },
    /// Spectral-determination verdict.
    Dhs {
        graph: String,
        #[arg(long, conflicts_with = "guided")]
        free: bool,
        #[arg(long)]
        guided: bool,
        #[arg(long, default_value_t = 30)]
        max_order: usize,
    },
    /// Whether a graph (or every switching class of a named family) has an
    /// eigenvalue at or beyond +-2.
    OutCheck {
        /// A graph, or one of: deg4-order5, K4, theta:p,q,r, theta33:r.
        target: String,
    },
    /// Run the verification suite; exits 1 if any claim fails.
    VerifyPaper {
        /// Run everything (default).
        #[arg(long)]
        all: bool,
        /// Specific criterion numbers.
        #[arg(value_parser = clap::value_parser!(usize))]
        criteria: Vec<usize>,
    },
    /// Rebuild the named-graph registry by spectral search and write it out.
    Reconstruct {
        #[arg(long, default_value = "registry.json")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("HERMISPEC_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    let registry = match &cli.registry {
        Some(path) => match Registry::load(path) {
            Ok(r) => r,
            Err(e) => return usage_error(&format!("cannot load registry: {e}")),
        },
        None => Registry::frozen(),
    };
    match run(&cli, &registry) {
        Ok(code) => code,
        Err(message) => usage_error(&message),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(USAGE_ERROR)
}

fn parse_graph(input: &str, registry: &Registry) -> Result<MixedGraph, String> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let value: Value =
            serde_json::from_str(trimmed).map_err(|e| format!("inline JSON: {e}"))?;
        return MixedGraph::from_json(&value).map_err(|e| e.to_string());
    }
    if trimmed.ends_with(".json") || std::path::Path::new(trimmed).is_file() {
        let text = std::fs::read_to_string(trimmed)
            .map_err(|e| format!("cannot read {trimmed}: {e}"))?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| format!("{trimmed}: {e}"))?;
        return MixedGraph::from_json(&value).map_err(|e| format!("{trimmed}: {e}"));
    }
    parse_graph_name(trimmed, registry).map_err(|e| e.to_string())
}

/// Exact spectrum when the name is a single closed-form family or letter.
fn closed_form_of(name: &str) -> Option<Spectrum> {
    let name = name.trim().trim_start_matches('(').trim_end_matches(')');
    if let Some(spec) = letter_spec(name) {
        return Some(Spectrum::from_exact(spec.entries.to_vec()));
    }
    let (family, params) = name.split_once(':')?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>().ok())
        .collect::<Option<Vec<_>>>()?;
    let form = match (family, nums.as_slice()) {
        ("P", [n]) if *n >= 1 => ClosedForm::Path(*n),
        ("C" | "C0", [n]) if *n >= 3 => ClosedForm::Cycle0(*n),
        ("C1", [n]) if *n >= 3 => ClosedForm::Cycle1(*n),
        ("C2", [n]) if *n >= 3 => ClosedForm::Cycle2(*n),
        ("Gt", [t]) if *t >= 1 => ClosedForm::Gt(*t),
        ("Gttm", [t, m]) if *t >= 1 => ClosedForm::Gttm(*t, *m),
        ("D", [n]) if *n >= 4 => ClosedForm::Dn(*n),
        _ => return None,
    };
    Some(closed_form(form))
}

fn run(cli: &Cli, registry: &Registry) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Spectrum { graph, tol } => {
            let g = parse_graph(graph, registry)?;
            let numeric = spectra::graph_eigenvalues(&g, *tol).map_err(|e| e.to_string())?;
            let spectrum = closed_form_of(graph).unwrap_or(numeric);
            if cli.json {
                println!("{}", spectrum.to_json());
            } else {
                let shown: Vec<String> = spectrum
                    .values()
                    .iter()
                    .map(|v| format!("{v:.12}"))
                    .collect();
                println!("{}", shown.join(" "));
                if let Some(entries) = spectrum.exact_entries() {
                    let forms: Vec<String> = entries
                        .iter()
                        .map(|(p, q)| format!("2cos({p}pi/{q})"))
                        .collect();
                    println!("exact: {}", forms.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly { graph } => {
            let g = parse_graph(graph, registry)?;
            let phi = char_poly_exact(&g);
            if cli.json {
                println!(
                    "{}",
                    json!({ "coefficients": phi.to_json(), "display": phi.to_string() })
                );
            } else {
                println!("{phi}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Canonicalize { graph } => {
            let g = parse_graph(graph, registry)?;
            let s = g.structure();
            let (label, theta) = if s.corank == 0 {
                let theta = normalize_forest(&g).map_err(|e| e.to_string())?;
                ("forest".to_string(), theta)
            } else if s.components.len() == 1 && s.corank == 1 && s.max_degree == 2 {
                let (ty, theta) = canonicalize_cycle(&g).map_err(|e| e.to_string())?;
                (format!("type {}", ty.tag()), theta)
            } else if s.components.len() == 1 && s.corank == 1 {
                let (ty, theta) = canonicalize_unicyclic(&g).map_err(|e| e.to_string())?;
                (format!("type {}", ty.tag()), theta)
            } else {
                return Err(
                    "canonicalize handles forests, cycles and connected unicyclic graphs".into(),
                );
            };
            let canonical = hermispec::switching::apply_switching(&g, &theta)
                .expect("canonical form is a mixed graph");
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "class": label,
                        "switching": theta.to_json(),
                        "canonical": canonical.to_json(),
                    })
                );
            } else {
                println!("{label}");
                println!("switching: {}", theta.to_json());
                println!("canonical: {}", canonical.to_json());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equivalent { left, right } => {
            let a = parse_graph(left, registry)?;
            let b = parse_graph(right, registry)?;
            let witness = switching_equivalent(&a, &b).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "equivalent": witness.is_some(),
                        "witness": witness.as_ref().map(|t| t.to_json()),
                    })
                );
            } else {
                match witness {
                    Some(theta) => println!("equivalent via {}", theta.to_json()),
                    None => println!("not equivalent"),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cospectral { left, right } => {
            let a = parse_graph(left, registry)?;
            let b = parse_graph(right, registry)?;
            let same = spectra::cospectral(&a, &b);
            if cli.json {
                println!("{}", json!({ "cospectral": same }));
            } else {
                println!("{}", if same { "cospectral" } else { "not cospectral" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Mates {
            graph,
            guided,
            max_order,
            ..
        } => {
            let g = parse_graph(graph, registry)?;
            let report = mates_report(&g, *guided, *max_order, registry)?;
            print_mates(cli, &report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dhs {
            graph,
            guided,
            max_order,
            ..
        } => {
            let g = parse_graph(graph, registry)?;
            let verdict = if *guided {
                let report = mates_report(&g, true, *max_order, registry)?;
                if report.mates.is_empty() {
                    DhsVerdict::Inconclusive(
                        "guided search found no mates but is not exhaustive".into(),
                    )
                } else {
                    DhsVerdict::NotDhs(report)
                }
            } else {
                hermispec::search::is_dhs(&g, &SearchConstraints::exact(0, 0))
            };
            match &verdict {
                DhsVerdict::Dhs => {
                    if cli.json {
                        println!("{}", json!({ "verdict": "DHS" }));
                    } else {
                        println!("DHS: every cospectral mate is a switching of the input");
                    }
                }
                DhsVerdict::NotDhs(report) => {
                    let mut named = report.clone();
                    name_mates(&mut named, registry);
                    if cli.json {
                        println!(
                            "{}",
                            json!({ "verdict": "NotDHS", "mates": mates_json(&named) })
                        );
                    } else {
                        println!("NotDHS: {} mate class(es)", named.mates.len());
                        print_mates_text(&named);
                    }
                }
                DhsVerdict::Inconclusive(reason) => {
                    if cli.json {
                        println!("{}", json!({ "verdict": "Inconclusive", "reason": reason }));
                    } else {
                        println!("Inconclusive: {reason}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::OutCheck { target } => {
            let family = match target.as_str() {
                "deg4-order5" => Some(OutFamily::Deg4Order5),
                "K4" | "k4" => Some(OutFamily::K4Underlying),
                other => {
                    if let Some(rest) = other.strip_prefix("theta33:") {
                        rest.parse::<usize>().ok().map(OutFamily::Theta33Except)
                    } else if let Some(rest) = other.strip_prefix("theta:") {
                        let nums: Vec<usize> = rest
                            .split(',')
                            .filter_map(|p| p.trim().parse().ok())
                            .collect();
                        (nums.len() == 3).then(|| OutFamily::Theta(nums[0], nums[1], nums[2]))
                    } else {
                        None
                    }
                }
            };
            if let Some(family) = family {
                let report = replicate_out_campaign(family).map_err(|e| e.to_string())?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "family": report.family,
                            "classes_checked": report.classes_checked,
                            "excluded": report.excluded,
                            "all_out": report.all_out(),
                            "counterexamples": report
                                .counterexamples
                                .iter()
                                .map(|g| g.to_json())
                                .collect::<Vec<_>>(),
                            "note": report.note,
                        })
                    );
                } else {
                    println!(
                        "{}: {} classes checked, {} excluded, all out: {}",
                        report.family,
                        report.classes_checked,
                        report.excluded,
                        report.all_out()
                    );
                    for g in &report.counterexamples {
                        println!("  counterexample: {}", g.to_json());
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            let g = parse_graph(target, registry)?;
            let out = spectra::is_out(&g);
            if cli.json {
                println!("{}", json!({ "out": out }));
            } else {
                println!(
                    "{}",
                    if out {
                        "out: an eigenvalue lies at or beyond -2/+2"
                    } else {
                        "not out: all eigenvalues are strictly inside (-2, 2)"
                    }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { criteria, .. } => {
            let results = if criteria.is_empty() {
                verify::run_all(registry)
            } else {
                criteria
                    .iter()
                    .map(|id| verify::run_criterion(*id, registry))
                    .collect()
            };
            let failed = results.iter().filter(|r| !r.passed).count();
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "criteria": results
                            .iter()
                            .map(|r| json!({
                                "id": r.id,
                                "name": r.name,
                                "passed": r.passed,
                                "elapsed_ms": r.elapsed.as_millis() as u64,
                                "details": r.details,
                            }))
                            .collect::<Vec<_>>(),
                        "passed": results.len() - failed,
                        "failed": failed,
                    })
                );
            } else {
                for r in &results {
                    println!("{}", r.summary_line());
                }
                println!(
                    "\n{} of {} criteria passed",
                    results.len() - failed,
                    results.len()
                );
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(CLAIM_FAILURE)
            })
        }
        Command::Reconstruct { out } => {
            let rebuilt = hermispec::search::build_registry().map_err(|e| e.to_string())?;
            rebuilt
                .save(out)
                .map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            println!("wrote {} entries to {}", rebuilt.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn mates_report(
    g: &MixedGraph,
    guided: bool,
    max_order: usize,
    registry: &Registry,
) -> Result<MateReport, String> {
    let mut report = if guided {
        find_mates_guided(g, registry, max_order)
    } else {
        find_mates(g, &SearchConstraints::exact(0, 0)).map_err(|e| e.to_string())?
    };
    name_mates(&mut report, registry);
    Ok(report)
}

fn certificate_label(c: &NonEquivalence) -> &'static str {
    match c {
        NonEquivalence::DifferentUnderlying => "different underlying graph",
        NonEquivalence::DifferentCycleClasses => "different cycle value classes",
        NonEquivalence::ExhaustedIsomorphisms => "no relabeling works",
    }
}

fn mates_json(report: &MateReport) -> Value {
    json!({
        "target": report.target.to_json(),
        "char_poly": report.char_poly.to_json(),
        "exhaustive": report.exhaustive,
        "classes_scanned": report.classes_scanned,
        "mates": report
            .mates
            .iter()
            .map(|m| json!({
                "graph": m.graph.to_json(),
                "name": m.name,
                "certificate": certificate_label(&m.certificate),
            }))
            .collect::<Vec<_>>(),
    })
}

fn print_mates_text(report: &MateReport) {
    for m in &report.mates {
        match &m.name {
            Some(name) => println!("  mate: {name} [{}]", certificate_label(&m.certificate)),
            None => println!(
                "  mate: {} [{}]",
                m.graph.to_json(),
                certificate_label(&m.certificate)
            ),
        }
    }
}

fn print_mates(cli: &Cli, report: &MateReport) {
    if cli.json {
        println!("{}", mates_json(report));
    } else {
        println!(
            "{} mate class(es); exhaustive: {}; classes scanned: {}",
            report.mates.len(),
            report.exhaustive,
            report.classes_scanned
        );
        print_mates_text(report);
    }
}
