//! Command-line front end: loads a family specification, runs one decided
//! query against the anchored ultrafilter, and prints the exact symbolic
//! result with a few illustrative per-index samples.
//!
//! Exit codes: 0 decided true / value produced, 1 decided false, 2 usage or
//! validation error, 3 inconclusive (mixed samples on a parametric family).

mod familyfile;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::rc::Rc;

use clap::{Parser, Subcommand, ValueEnum};

use nsgraph_core::family::VertexSelector;
use nsgraph_core::logic::{Sentence, VerdictMode};
use nsgraph_core::nsg::{self, HamiltonianCriterion, NsColoring, NsError, NsVertex};
use nsgraph_core::upalg::{AnchoredUltrafilter, Hypernatural};

use familyfile::LoadedFamily;

#[derive(Parser)]
#[command(
    name = "nsgraph",
    version,
    about = "Decided queries over nonstandard graphs built from ultimately periodic graph families"
)]
struct Cli {
    /// Family specification file
    #[arg(long)]
    family: PathBuf,
    /// Ultrafilter anchor: a set is large when it eventually contains the
    /// anchor's residue class modulo the set's canonical modulus
    #[arg(long, default_value_t = 0)]
    anchor: u64,
    /// Indices sampled when a parametric family cannot be decided exactly
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a.e. equality of two named vertices
    Eq { x: String, y: String },
    /// Decide whether two named vertices form a nonstandard edge
    Edge { x: String, y: String },
    /// Exact hypernatural distance between two named vertices
    Distance { x: String, y: String },
    /// Exact hypernatural degree of a named vertex
    Degree { x: String },
    /// Vertex/edge counts, cyclomatic number, radius, diameter, and the
    /// decided property flags
    Summary,
    /// Decide whether two named vertices are limitedly distant (same nodal
    /// galaxy)
    Galaxy { x: String, y: String },
    /// Decide whether the nonstandard graph is Eulerian
    Eulerian,
    /// Decide a sufficient Hamiltonicity criterion
    Hamiltonian {
        #[arg(long, value_enum)]
        criterion: CriterionArg,
    },
    /// Transferred coloring: standard palette when degrees are bounded,
    /// hypernatural palette otherwise
    Color,
    /// Decide a first-order sentence over the family
    Check { sentence: String },
    /// Reduce a vertex of a constant family to a standard vertex
    Identify { x: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionArg {
    Dirac,
    Ore,
    Posa,
}

impl From<CriterionArg> for HamiltonianCriterion {
    fn from(value: CriterionArg) -> Self {
        match value {
            CriterionArg::Dirac => HamiltonianCriterion::Dirac,
            CriterionArg::Ore => HamiltonianCriterion::Ore,
            CriterionArg::Posa => HamiltonianCriterion::Posa,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code)) => {
            print!("{report}");
            ExitCode::from(code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), String> {
    let loaded = familyfile::load_family(&cli.family).map_err(|e| e.to_string())?;
    let filter = AnchoredUltrafilter::new(cli.anchor);
    let mut report = String::new();
    writeln!(report, "family kind: {}", loaded.family.kind_name()).unwrap();
    writeln!(report, "anchor: {}", cli.anchor).unwrap();

    let code = match &cli.command {
        Command::Eq { x, y } => {
            let (a, b) = (vertex(&loaded, x)?, vertex(&loaded, y)?);
            let equal = nsg::ns_vertex_eq(&a, &b, &filter).map_err(stringify)?;
            writeln!(report, "{}", if equal { "EQUAL" } else { "NOT EQUAL" }).unwrap();
            decided(equal)
        }
        Command::Edge { x, y } => {
            let (a, b) = (vertex(&loaded, x)?, vertex(&loaded, y)?);
            let edge = nsg::mk_ns_edge(&a, &b, &filter).map_err(stringify)?;
            writeln!(report, "{}", if edge.is_some() { "EDGE" } else { "NOT AN EDGE" }).unwrap();
            decided(edge.is_some())
        }
        Command::Distance { x, y } => {
            let (a, b) = (vertex(&loaded, x)?, vertex(&loaded, y)?);
            match nsg::ns_distance(&a, &b, &filter) {
                Ok(d) => {
                    show_hyper(&mut report, "distance", &d, &filter);
                    0
                }
                Err(NsError::NoPath) => {
                    writeln!(report, "NO PATH: the family is disconnected almost everywhere")
                        .unwrap();
                    1
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Degree { x } => {
            let a = vertex(&loaded, x)?;
            let d = nsg::ns_degree(&a, &filter).map_err(stringify)?;
            show_hyper(&mut report, "degree", &d, &filter);
            0
        }
        Command::Summary => {
            let summary = nsg::ns_summary(&loaded.family, &filter).map_err(stringify)?;
            show_hyper(&mut report, "p", &summary.vertex_count, &filter);
            show_hyper(&mut report, "q", &summary.edge_count, &filter);
            show_hyper(&mut report, "r", &summary.cyclomatic, &filter);
            show_hyper(&mut report, "R", &summary.radius, &filter);
            show_hyper(&mut report, "D", &summary.diameter, &filter);
            writeln!(report, "connected: {}", summary.connected).unwrap();
            writeln!(report, "eulerian: {}", summary.eulerian).unwrap();
            writeln!(report, "dirac: {}", summary.dirac).unwrap();
            writeln!(report, "ore: {}", summary.ore).unwrap();
            writeln!(report, "posa: {}", summary.posa).unwrap();
            writeln!(report, "r = q-p+1: {}", summary.cyclomatic_consistent).unwrap();
            writeln!(report, "p-1 <= q <= p(p-1)/2: {}", summary.size_bounds_hold).unwrap();
            writeln!(report, "R <= D <= 2R: {}", summary.radius_diameter_hold).unwrap();
            0
        }
        Command::Galaxy { x, y } => {
            let (a, b) = (vertex(&loaded, x)?, vertex(&loaded, y)?);
            match nsg::ns_distance(&a, &b, &filter) {
                Ok(d) => {
                    let near = d.is_limited(&filter);
                    show_hyper(&mut report, "distance", &d, &filter);
                    writeln!(
                        report,
                        "{}",
                        if near {
                            "LIMITEDLY DISTANT (same nodal galaxy)"
                        } else {
                            "NOT LIMITEDLY DISTANT (different nodal galaxies)"
                        }
                    )
                    .unwrap();
                    decided(near)
                }
                Err(NsError::NoPath) => {
                    writeln!(report, "NO PATH: the family is disconnected almost everywhere")
                        .unwrap();
                    1
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Eulerian => {
            let eulerian = nsg::ns_eulerian(&loaded.family, &filter).map_err(stringify)?;
            writeln!(report, "{}", if eulerian { "EULERIAN" } else { "NOT EULERIAN" }).unwrap();
            decided(eulerian)
        }
        Command::Hamiltonian { criterion } => {
            let holds = nsg::ns_hamiltonian(&loaded.family, (*criterion).into(), &filter)
                .map_err(stringify)?;
            if holds {
                writeln!(report, "CRITERION HOLDS: decided Hamiltonian").unwrap();
            } else {
                writeln!(
                    report,
                    "CRITERION DOES NOT HOLD (sufficient only; the graph may still be Hamiltonian)"
                )
                .unwrap();
            }
            decided(holds)
        }
        Command::Color => {
            match nsg::ns_coloring(&loaded.family, &filter).map_err(stringify)? {
                NsColoring::Strong(strong) => {
                    writeln!(
                        report,
                        "STRONG COLORING: standard degree bound k = {}, palette 1..={}",
                        strong.degree_bound(),
                        strong.palette_size()
                    )
                    .unwrap();
                    let (threshold, period) = loaded.family.structure();
                    let n = filter.progression(period, threshold, 1)[0];
                    let colors = strong.coloring_at(n).map_err(stringify)?;
                    writeln!(report, "illustrative coloring of G_{n}: {colors:?}").unwrap();
                }
                NsColoring::Weak(weak) => {
                    writeln!(
                        report,
                        "WEAK COLORING: degrees unbounded, hypernatural palette"
                    )
                    .unwrap();
                    show_hyper(&mut report, "palette", weak.palette(), &filter);
                }
            }
            0
        }
        Command::Check { sentence } => {
            let parsed = Sentence::parse(sentence).map_err(|e| e.to_string())?;
            writeln!(report, "sentence: {parsed}").unwrap();
            let verdict = parsed
                .decide_ae(&loaded.family, &filter, cli.samples as usize)
                .map_err(|e| e.to_string())?;
            match &verdict.mode {
                VerdictMode::Decided(set) => {
                    writeln!(report, "mode: decided (exact truth set)").unwrap();
                    writeln!(report, "truth set = {set}").unwrap();
                }
                VerdictMode::Sampled { indices, results } => {
                    writeln!(report, "mode: sampled (illustrative, not exact)").unwrap();
                    let shown: Vec<String> = indices
                        .iter()
                        .zip(results)
                        .map(|(n, r)| format!("n={n}: {r}"))
                        .collect();
                    writeln!(report, "samples: {}", shown.join(", ")).unwrap();
                }
            }
            match verdict.decision {
                Some(true) => {
                    writeln!(report, "decision: true").unwrap();
                    0
                }
                Some(false) => {
                    writeln!(report, "decision: false").unwrap();
                    1
                }
                None => {
                    writeln!(report, "decision: INCONCLUSIVE (mixed samples)").unwrap();
                    3
                }
            }
        }
        Command::Identify { x } => {
            let a = vertex(&loaded, x)?;
            match nsg::identify_standard_vertex(&a, &filter).map_err(stringify)? {
                Some(v) => {
                    writeln!(report, "STANDARD VERTEX {v}").unwrap();
                    0
                }
                None => {
                    writeln!(report, "NOT STANDARD (proper element of the enlargement)").unwrap();
                    1
                }
            }
        }
    };
    Ok((report, code))
}

fn decided(value: bool) -> u8 {
    if value {
        0
    } else {
        1
    }
}

fn stringify(e: NsError) -> String {
    e.to_string()
}

fn vertex(loaded: &LoadedFamily, name: &str) -> Result<NsVertex, String> {
    let selector: &VertexSelector = loaded.selectors.get(name).ok_or_else(|| {
        let known: Vec<&str> = loaded.selectors.keys().map(String::as_str).collect();
        format!(
            "unknown selector '{name}'; the family file defines: {}",
            if known.is_empty() {
                "none".to_string()
            } else {
                known.join(", ")
            }
        )
    })?;
    NsVertex::new(Rc::clone(&loaded.family), selector.clone()).map_err(|e| e.to_string())
}

/// `label = HN{..}` plus the first five values along the anchor progression
/// of the representative.
fn show_hyper(
    report: &mut String,
    label: &str,
    value: &Hypernatural,
    filter: &AnchoredUltrafilter,
) {
    writeln!(report, "{label} = {value}").unwrap();
    let shown: Vec<String> = value
        .sample_terms(filter, 5)
        .into_iter()
        .map(|(n, v)| format!("n={n}: {v}"))
        .collect();
    writeln!(report, "  illustrative samples: {}", shown.join(", ")).unwrap();
}
