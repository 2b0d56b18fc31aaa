use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use tangle_decider::decider::{synthesize_weights_as, Axioms, WeightFunction};
use tangle_decider::io::{
    CertificateJson, CountLawJson, GraphJson, Search01Json, SeparationListJson, TangleJson,
    TangleListJson, TieReportJson, VerificationJson, WeightsJson,
};
use tangle_decider::oracle::{count_law_check, search_01_decider, verify_decider};
use tangle_decider::sepsys::{enumerate_separations, GroundSystem, DEFAULT_ENUMERATION_CAP};
use tangle_decider::tangles::{
    enumerate_tangles, induce_from_set, induce_from_weights, is_profile, is_tangle, Induced, Orientation,
};

#[derive(Parser)]
#[command(name = "tangle-decider", version, about = "Integer vertex weights that decide tangles")]
struct Cli {
    /// Refuse to enumerate separations of ground systems larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    max_vertices: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List (or count) all separations of order < k.
    Separations {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Enumerate the k-tangles of a graph.
    Tangles {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check the tangle (or, with --profile, the regular profile) axioms.
    Check {
        graph: PathBuf,
        tangle: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        profile: bool,
    },
    /// Orient every separation towards the heavier side of a set or weighting.
    Induce {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Comma-separated vertex names.
        #[arg(long, value_delimiter = ',', conflicts_with = "weights", required_unless_present = "weights")]
        set: Option<Vec<String>>,
        /// A weights file.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Construct integer weights deciding the given tangle.
    Decide {
        graph: PathBuf,
        tangle: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Check the profile axioms instead of the tangle axioms.
        #[arg(long)]
        profile: bool,
    },
    /// Check that weights decide a tangle on every separation of order < k.
    Verify {
        graph: PathBuf,
        tangle: PathBuf,
        weights: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Look for a vertex set deciding the tangle by plain majority.
    Search01 {
        graph: PathBuf,
        tangle: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Cross-check the separation enumerator against brute force and the count law.
    Countcheck {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {}", path.display()))
}

fn render<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    print!("{}", render(value)?);
    Ok(())
}

fn load_graph(path: &Path, cap: usize) -> Result<GroundSystem> {
    let json: GraphJson = read_json(path)?;
    let g = json
        .to_ground()
        .with_context(|| format!("invalid ground system in {}", path.display()))?;
    Ok(g.with_enumeration_cap(cap))
}

fn load_tangle(g: &GroundSystem, path: &Path, k: usize) -> Result<Orientation> {
    let json: TangleJson = read_json(path)?;
    json.resolve(g, k)
        .with_context(|| format!("invalid tangle in {}", path.display()))
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cap = cli.max_vertices;
    match cli.command {
        Command::Separations { graph, k, count_only } => {
            let g = load_graph(&graph, cap)?;
            let seps = enumerate_separations(&g, k)?;
            emit(&SeparationListJson::new(&g, &seps, count_only))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Tangles { graph, k, limit } => {
            let g = load_graph(&graph, cap)?;
            let tangles = enumerate_tangles(&g, k, limit)?;
            emit(&TangleListJson {
                count: tangles.len(),
                tangles: tangles.iter().map(|t| TangleJson::explicit(&g, t)).collect(),
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { graph, tangle, k, profile } => {
            let g = load_graph(&graph, cap)?;
            let o = load_tangle(&g, &tangle, k)?;
            let cert = if profile { is_profile(&g, &o) } else { is_tangle(&g, &o) };
            emit(&CertificateJson::new(&g, &cert))?;
            Ok(verdict(cert.verdict))
        }
        Command::Induce { graph, k, set, weights } => {
            let g = load_graph(&graph, cap)?;
            let induced = match (set, weights) {
                (Some(names), _) => {
                    let x = g.vertex_set(names.iter().filter(|n| !n.is_empty()))?;
                    induce_from_set(&g, k, x)?
                }
                (None, Some(path)) => {
                    let w: WeightsJson = read_json(&path)?;
                    induce_from_weights(&g, k, &w.to_weights(&g)?)?
                }
                (None, None) => unreachable!("clap requires --set or --weights"),
            };
            match induced {
                Induced::Decided(o) => {
                    emit(&TangleJson::explicit(&g, &o))?;
                    Ok(ExitCode::SUCCESS)
                }
                Induced::Ties(ties) => {
                    emit(&TieReportJson::new(&g, &ties))?;
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Decide { graph, tangle, k, output, profile } => {
            let g = load_graph(&graph, cap)?;
            let o = load_tangle(&g, &tangle, k)?;
            let axioms = if profile { Axioms::Profile } else { Axioms::for_mode(g.mode()) };
            let syn = synthesize_weights_as(&g, &o, axioms)?;
            let text = render(&WeightsJson::from_synthesis(&g, &syn))?;
            fs::write(&output, &text).with_context(|| format!("cannot write {}", output.display()))?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, tangle, weights, k } => {
            let g = load_graph(&graph, cap)?;
            let o = load_tangle(&g, &tangle, k)?;
            let w: WeightsJson = read_json(&weights)?;
            let w: WeightFunction = w.to_weights(&g)?;
            let report = verify_decider(&g, &o, &w)?;
            emit(&VerificationJson::new(&g, &report))?;
            Ok(verdict(report.ok))
        }
        Command::Search01 { graph, tangle, k } => {
            let g = load_graph(&graph, cap)?;
            let o = load_tangle(&g, &tangle, k)?;
            let found = search_01_decider(&g, &o)?;
            emit(&Search01Json {
                found: found.is_some(),
                x: found.map(|x| g.names_of(x)),
            })?;
            Ok(verdict(found.is_some()))
        }
        Command::Countcheck { graph, k } => {
            let g = load_graph(&graph, cap)?;
            let report = count_law_check(&g, k)?;
            emit(&CountLawJson::from(&report))?;
            Ok(verdict(report.ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
