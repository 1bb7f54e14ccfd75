//! Command-line interface: generate, evaluate, render, sweep, anova.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use tmgen::board::{BoardLayout, TileMultiset};
use tmgen::evaluator::evaluate;
use tmgen::harness::{
    self, load_map, read_rows, render, run_sweep, save_map, summarize, Factor, RenderFormat,
    SweepConfig,
};
use tmgen::search::{run, SearchConfig, StopRule};
use tmgen::stats::one_way_anova;

#[derive(Parser)]
#[command(
    name = "tmgen",
    version,
    about = "Balanced Terra Mystica map generation with Tabu Search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = true)]
struct StopArgs {
    /// Wall-clock limit per run, in seconds
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
    /// Evaluation budget per run (deterministic given a seed)
    #[arg(long, value_name = "N")]
    max_evals: Option<u64>,
}

impl StopArgs {
    fn to_rule(&self) -> Result<StopRule> {
        match (self.time_limit, self.max_evals) {
            (Some(secs), Some(evals)) => Ok(StopRule::either(secs_to_duration(secs)?, evals)),
            (Some(secs), None) => Ok(StopRule::time_limit(secs_to_duration(secs)?)),
            (None, Some(evals)) => Ok(StopRule::max_evaluations(evals)),
            (None, None) => bail!("either --time-limit or --max-evals is required"),
        }
    }
}

fn secs_to_duration(secs: f64) -> Result<Duration> {
    if !(secs > 0.0 && secs.is_finite()) {
        bail!("--time-limit must be a positive number of seconds");
    }
    Ok(Duration::from_secs_f64(secs))
}

#[derive(Subcommand)]
enum Command {
    /// Search for a balanced map and write it to a map file
    Generate {
        #[arg(long, value_name = "N")]
        tabu_size: usize,
        #[arg(long, value_name = "N")]
        neighborhood_size: usize,
        #[command(flatten)]
        stop: StopArgs,
        #[arg(long, value_name = "S")]
        seed: u64,
        /// Map file supplying the board layout and tile multiset
        /// (default: the standard 113-cell board)
        #[arg(long, value_name = "FILE")]
        layout: Option<PathBuf>,
        /// Disable the aspiration override of tabu status
        #[arg(long)]
        no_aspiration: bool,
        #[arg(long, value_name = "MAP")]
        out: PathBuf,
    },
    /// Score a map file: REQ1..REQ4 violation counts and their total
    Evaluate { mapfile: PathBuf },
    /// Render a map file as ASCII or SVG
    Render {
        mapfile: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        /// Output file (default: stdout)
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run a hyperparameter sweep grid, appending rows to a CSV
    Sweep {
        /// Comma-separated tabu list sizes
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        tabu_sizes: Option<Vec<usize>>,
        /// Comma-separated neighborhood sizes
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        neighborhood_sizes: Option<Vec<usize>>,
        /// Runs per grid cell
        #[arg(long, value_name = "N")]
        runs: Option<usize>,
        #[command(flatten)]
        stop: SweepStopArgs,
        #[arg(long, value_name = "S", default_value_t = 0)]
        base_seed: u64,
        #[arg(long, value_name = "CSV")]
        out: PathBuf,
        #[arg(long, value_name = "K", default_value_t = 1)]
        workers: usize,
        /// Baseline profile supplying defaults for unset flags
        #[arg(long, value_enum, default_value_t = Profile::Paper)]
        profile: Profile,
    },
    /// One-way ANOVA of best scores in a sweep CSV, grouped by one factor
    Anova {
        csv: PathBuf,
        #[arg(long, value_enum)]
        factor: FactorArg,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
}

/// Like [`StopArgs`] but optional: the sweep profile supplies a default.
#[derive(Args)]
struct SweepStopArgs {
    /// Wall-clock limit per run, in seconds
    #[arg(long, value_name = "SECS")]
    time_limit: Option<f64>,
    /// Evaluation budget per run (deterministic given a seed)
    #[arg(long, value_name = "N")]
    max_evals: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorArg {
    Neighborhood,
    Tabu,
}

#[derive(Clone, Copy, ValueEnum)]
enum Profile {
    /// Full grid, 30 runs per cell, 300 s per run
    Paper,
    /// Small deterministic grid that finishes in minutes
    Desk,
}

fn main() {
    if let Err(err) = dispatch(Cli::parse()) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate {
            tabu_size,
            neighborhood_size,
            stop,
            seed,
            layout,
            no_aspiration,
            out,
        } => cmd_generate(
            tabu_size,
            neighborhood_size,
            stop,
            seed,
            layout,
            no_aspiration,
            out,
        ),
        Command::Evaluate { mapfile } => cmd_evaluate(mapfile),
        Command::Render {
            mapfile,
            format,
            out,
        } => cmd_render(mapfile, format, out),
        Command::Sweep {
            tabu_sizes,
            neighborhood_sizes,
            runs,
            stop,
            base_seed,
            out,
            workers,
            profile,
        } => cmd_sweep(
            tabu_sizes,
            neighborhood_sizes,
            runs,
            stop,
            base_seed,
            out,
            workers,
            profile,
        ),
        Command::Anova { csv, factor, alpha } => cmd_anova(csv, factor, alpha),
    }
}

fn load_with_warnings(path: &PathBuf) -> Result<tmgen::MapState> {
    let loaded = load_map(path).with_context(|| format!("loading map '{}'", path.display()))?;
    for warning in &loaded.warnings {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(loaded.map)
}

fn cmd_generate(
    tabu_size: usize,
    neighborhood_size: usize,
    stop: StopArgs,
    seed: u64,
    layout: Option<PathBuf>,
    no_aspiration: bool,
    out: PathBuf,
) -> Result<()> {
    let (layout, tiles) = match layout {
        Some(path) => {
            let m = load_with_warnings(&path)?;
            let tiles = m.tile_multiset();
            (m.layout().clone(), tiles)
        }
        None => (BoardLayout::standard(), TileMultiset::standard()),
    };
    let cfg = SearchConfig::new(layout, tiles)
        .with_tabu_size(tabu_size)
        .with_neighborhood_size(neighborhood_size)
        .with_stop(stop.to_rule()?)
        .with_seed(seed)
        .with_aspiration(!no_aspiration);
    let result = run(&cfg).context("search failed")?;
    save_map(&result.best_map, &out).with_context(|| format!("writing map '{}'", out.display()))?;

    let report = evaluate(&result.best_map);
    println!(
        "best score: {} (REQ1 {}, REQ2 {}, REQ3 {}, REQ4 {})",
        report.total, report.req1, report.req2, report.req3, report.req4
    );
    println!("evaluations: {}", result.evaluations);
    println!("iterations: {}", result.iterations);
    println!("elapsed: {:.1}s", result.elapsed.as_secs_f64());
    println!("seed: {} ({})", result.seed, result.rng_name);
    println!("map written to {}", out.display());
    Ok(())
}

fn cmd_evaluate(mapfile: PathBuf) -> Result<()> {
    let map = load_with_warnings(&mapfile)?;
    let report = evaluate(&map);
    println!("REQ1 same-terrain adjacency:  {}", report.req1);
    println!("REQ2 river neighbor balance:  {}", report.req2);
    println!("REQ3 river connectivity:      {}", report.req3);
    println!("REQ4 one-spade reachability:  {}", report.req4);
    println!("F_tot:                        {}", report.total);
    Ok(())
}

fn cmd_render(mapfile: PathBuf, format: FormatArg, out: Option<PathBuf>) -> Result<()> {
    let map = load_with_warnings(&mapfile)?;
    let text = render(
        &map,
        match format {
            FormatArg::Ascii => RenderFormat::Ascii,
            FormatArg::Svg => RenderFormat::Svg,
        },
    );
    match out {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing '{}'", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    tabu_sizes: Option<Vec<usize>>,
    neighborhood_sizes: Option<Vec<usize>>,
    runs: Option<usize>,
    stop: SweepStopArgs,
    base_seed: u64,
    out: PathBuf,
    workers: usize,
    profile: Profile,
) -> Result<()> {
    let mut cfg = match profile {
        Profile::Paper => SweepConfig::paper_scale(out),
        Profile::Desk => SweepConfig::desk_scale(out),
    };
    if let Some(sizes) = tabu_sizes {
        cfg.tabu_sizes = sizes;
    }
    if let Some(sizes) = neighborhood_sizes {
        cfg.neighborhood_sizes = sizes;
    }
    if let Some(n) = runs {
        cfg.runs_per_cell = n;
    }
    cfg.stop = match (stop.time_limit, stop.max_evals) {
        (None, None) => cfg.stop,
        (Some(secs), Some(evals)) => StopRule::either(secs_to_duration(secs)?, evals),
        (Some(secs), None) => StopRule::time_limit(secs_to_duration(secs)?),
        (None, Some(evals)) => StopRule::max_evaluations(evals),
    };
    cfg.base_seed = base_seed;
    cfg.workers = workers;

    let total = cfg.total_rows();
    let mut done = 0usize;
    let rows = run_sweep(&cfg, |row| {
        done += 1;
        eprintln!(
            "[{done}/{total}] tabu={} nbhd={} run={} score={}",
            row.tabu_size, row.neighborhood_size, row.run_index, row.best_score
        );
    })
    .context("sweep failed")?;

    let summary = summarize(&rows)?;
    println!("tabu_size  nbhd_size  runs  mean    std");
    for cell in &summary.cells {
        println!(
            "{:<9}  {:<9}  {:<4}  {:<6.2}  {:.2}",
            cell.tabu_size, cell.neighborhood_size, cell.runs, cell.mean, cell.std
        );
    }
    println!("{} rows written to {}", rows.len(), cfg.out_path.display());
    Ok(())
}

fn cmd_anova(csv: PathBuf, factor: FactorArg, alpha: f64) -> Result<()> {
    let rows = read_rows(&csv).with_context(|| format!("reading '{}'", csv.display()))?;
    let summary = summarize(&rows)?;
    let (factor, label) = match factor {
        FactorArg::Neighborhood => (Factor::Neighborhood, "neighborhood size"),
        FactorArg::Tabu => (Factor::Tabu, "tabu list size"),
    };
    let groups: Vec<Vec<f64>> = summary
        .groups(factor)
        .iter()
        .map(|g| g.scores.clone())
        .collect();
    let result = one_way_anova(&groups, alpha)
        .map_err(harness::HarnessError::Stats)
        .context("anova failed")?;

    println!("factor:      {label}");
    println!("groups:      {}", groups.len());
    println!("SS_between:  {:.4}", result.ss_between);
    println!("SS_within:   {:.4}", result.ss_within);
    println!("df1:         {}", result.df1);
    println!("df2:         {}", result.df2);
    println!("F-value:     {:.4}", result.f_value);
    println!(
        "F-critical:  {:.4} (alpha = {})",
        result.f_critical, result.alpha
    );
    println!("p-value:     {:.6}", result.p_value);
    println!(
        "verdict:     {}",
        if result.significant {
            "significant - the factor affects the score"
        } else {
            "not significant - no detectable effect"
        }
    );
    Ok(())
}
