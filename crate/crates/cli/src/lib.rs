//! Command-line workbench for `orthostair`: scene files in, JSON reports
//! and optional SVG figures out.

pub mod commands;
pub mod props;
pub mod scene;
pub mod svg;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use orthostair::grid::Cell;
use serde_json::Value;

pub use scene::{Kind, SceneEntry, SceneFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Result of a command: the report, whether the verdict passed, and a
/// figure when one applies.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
    pub figure: Option<svg::Figure>,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "orthostair", version, about = "Orthogonal and staircase connectivity workbench")]
pub struct Cli {
    /// Scene file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory for SVG figures.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Worker threads for property suites (0 = one per core).
    #[arg(long, global = true, env = "ORTHOSTAIR_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a decision procedure on a named target.
    Check {
        #[arg(long)]
        target: String,
        #[arg(long, value_enum)]
        analysis: Analysis,
    },
    /// Minimum-link distance between two cells of a grid.
    Distance {
        #[arg(long)]
        grid: String,
        /// Cell as `col,row`.
        #[arg(long, value_parser = parse_cell)]
        from: Cell,
        #[arg(long, value_parser = parse_cell)]
        to: Cell,
    },
    /// Route a query of a scene around its obstacles.
    Route {
        #[arg(long)]
        scene: String,
        #[arg(long, default_value_t = 0)]
        query: usize,
        /// Starting cell size for multi-obstacle routing.
        #[arg(long, default_value = "1")]
        cell_size: String,
    },
    /// Rotate a polygon into staircase-connected position.
    Rotate {
        #[arg(long)]
        target: String,
    },
    /// List the s-extreme points of a polygon.
    Extreme {
        #[arg(long)]
        target: String,
    },
    /// Boundary profiles of a rectangle complex.
    Profile {
        #[arg(long)]
        target: String,
    },
    /// Rasterize a polygon, or the free space of a scene.
    Rasterize {
        #[arg(long)]
        target: String,
        #[arg(long, default_value = "1")]
        cell_size: String,
    },
    /// Run a property suite.
    Prop {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Analysis {
    /// Grid: orthogonally connected and orthogonally convex.
    Staircase,
    /// Rectangle complex: exact staircase decision.
    StaircaseExact,
    /// Polygon: tangent-cone certificate.
    StaircaseConvex,
    /// Grid or complex.
    OrthogonalConvexity,
    /// Grid or complex.
    OrthogonalConnectivity,
    /// Polygon: every vertex right or obtuse.
    Obtuse,
    /// Complex: staircase decision against profile unimodality.
    Unimodal,
    /// Grid: bounded components of the complement.
    Holes,
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    let (c, r) = s.split_once(',').ok_or_else(|| format!("expected col,row, got {s:?}"))?;
    let c = c.trim().parse().map_err(|_| format!("bad column in {s:?}"))?;
    let r = r.trim().parse().map_err(|_| format!("bad row in {s:?}"))?;
    Ok(Cell::new(c, r))
}

fn load(cli: &Cli) -> Result<SceneFile, CliError> {
    let path = cli.input.as_ref().ok_or_else(|| CliError::Usage("--input is required".into()))?;
    let text = std::fs::read_to_string(path)?;
    SceneFile::parse(&text)
}

/// Runs the parsed command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Prop { suite, n } => props::run_suite(suite, cli.seed, *n, cli.threads),
        Command::Check { target, analysis } => commands::check(&load(cli)?, target, *analysis),
        Command::Distance { grid, from, to } => commands::distance(&load(cli)?, grid, *from, *to),
        Command::Route { scene, query, cell_size } => commands::route(&load(cli)?, scene, *query, cell_size),
        Command::Rotate { target } => commands::rotate(&load(cli)?, target),
        Command::Extreme { target } => commands::extreme(&load(cli)?, target),
        Command::Profile { target } => commands::profile(&load(cli)?, target),
        Command::Rasterize { target, cell_size } => commands::rasterize(&load(cli)?, target, cell_size),
    }
}

fn figure_name(command: &Command) -> String {
    match command {
        Command::Check { target, .. } => format!("check-{target}"),
        Command::Distance { grid, .. } => format!("distance-{grid}"),
        Command::Route { scene, query, .. } => format!("route-{scene}-{query}"),
        Command::Rotate { target } => format!("rotate-{target}"),
        Command::Extreme { target } => format!("extreme-{target}"),
        Command::Profile { target } => format!("profile-{target}"),
        Command::Rasterize { target, .. } => format!("rasterize-{target}"),
        Command::Prop { suite, .. } => format!("prop-{suite}"),
    }
}

/// Runs the command and writes its outputs; returns the process exit code.
pub fn execute(cli: &Cli) -> u8 {
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("orthostair: {e}");
            return 2;
        }
    };
    let text = serde_json::to_string_pretty(&outcome.report).expect("reports serialize") + "\n";
    let written = match &cli.json {
        Some(path) => std::fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("orthostair: cannot write report: {e}");
        return 2;
    }
    if let (Some(dir), Some(fig)) = (&cli.svg, &outcome.figure) {
        let path = dir.join(format!("{}.svg", figure_name(&cli.command)));
        if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, fig.render())) {
            eprintln!("orthostair: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    outcome.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(["orthostair", "prop", "--suite", "x", "--seed", "7", "--n", "3"]).unwrap();
        assert_eq!(cli.seed, 7);
        assert!(matches!(cli.command, Command::Prop { n: 3, .. }));
    }

    #[test]
    fn cell_arguments() {
        assert_eq!(parse_cell("3,-2"), Ok(Cell::new(3, -2)));
        assert!(parse_cell("3").is_err());
        assert!(parse_cell("a,1").is_err());
    }

    #[test]
    fn missing_input_is_usage_error() {
        let cli = Cli::try_parse_from(["orthostair", "rotate", "--target", "p"]).unwrap();
        assert!(matches!(run(&cli), Err(CliError::Usage(_))));
    }
}
