//! Experiment orchestration: hyperparameter sweeps over (tabu size,
//! neighborhood size) grids, CSV persistence, summaries, and the map file
//! and rendering formats used by the CLI.
//!
//! A sweep writes one CSV row per completed run, in a fixed grid order that
//! does not depend on how many worker threads execute the runs, and appends
//! incrementally so an interrupted sweep resumes from the completed rows.

pub mod mapfile;
pub mod render;

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;
use std::time::Duration;

use thiserror::Error;

use crate::board::{BoardError, BoardLayout, TileMultiset};
use crate::search::{run, SearchConfig, SearchError, StopRule};
use crate::stats::{mean_std, StatsError};

pub use mapfile::{load_map, map_to_string, parse_map, save_map, LoadedMap};
pub use render::{render, render_ascii, render_svg, RenderFormat};

/// The mandatory CSV header.
pub const CSV_HEADER: &str =
    "tabu_size,neighborhood_size,run_index,seed,best_score,evaluations,elapsed_ms";

/// Errors raised by harness operations.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("map file has no significant lines")]
    EmptyMapFile,
    #[error("line {line}: expected 'layout: <row lengths>'")]
    MissingLayout { line: usize },
    #[error("line {line}: '{token}' is not a row length")]
    BadLayoutValue { line: usize, token: String },
    #[error("missing terrain line for row {row} (layout declares {want} rows)")]
    MissingRow { row: usize, want: usize },
    #[error("line {line}:{col}: unknown terrain code '{code}'")]
    UnknownTerrainCode { line: usize, col: usize, code: char },
    #[error("line {line}:{col}: terrain token '{token}' must be a single character")]
    BadTerrainToken {
        line: usize,
        col: usize,
        token: String,
    },
    #[error("line {line}: row {row} has {got} tiles, expected {want}")]
    RowLengthMismatch {
        line: usize,
        row: usize,
        got: usize,
        want: usize,
    },
    #[error("line {line}: content after the last declared row")]
    TrailingContent { line: usize },
    #[error("line {line}: bad CSV row: {message}")]
    CsvFormat { line: usize, message: String },
    #[error("existing CSV does not match this sweep configuration: {message}")]
    CsvMismatch { message: String },
    #[error("sweep grid is empty")]
    EmptyGrid,
    #[error("runs per cell must be positive")]
    ZeroRuns,
    #[error("worker count must be positive")]
    ZeroWorkers,
    #[error("no rows to summarize")]
    EmptyRows,
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

/// Derives the seed for a row ordinal from the sweep's base seed.
///
/// The base is advanced along the splitmix64 golden-ratio stream and passed
/// through the splitmix64 finalizer. The finalizer is a bijection and the
/// stream step is odd, so distinct ordinals always get distinct seeds.
pub fn mix_seed(base: u64, ordinal: u64) -> u64 {
    let mut z = base.wrapping_add((ordinal.wrapping_add(1)).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sweep parameters: the hyperparameter grid and per-run settings.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub tabu_sizes: Vec<usize>,
    pub neighborhood_sizes: Vec<usize>,
    pub runs_per_cell: usize,
    pub stop: StopRule,
    pub base_seed: u64,
    pub layout: BoardLayout,
    pub tiles: TileMultiset,
    pub workers: usize,
    pub out_path: PathBuf,
}

impl SweepConfig {
    /// The full-scale profile: the 6×5 grid, 30 runs per cell, 300-second
    /// wall clock per run.
    pub fn paper_scale(out_path: PathBuf) -> Self {
        Self {
            tabu_sizes: vec![10, 20, 30, 50, 75, 100],
            neighborhood_sizes: vec![10, 25, 50, 75, 100],
            runs_per_cell: 30,
            stop: StopRule::time_limit(Duration::from_secs(300)),
            base_seed: 0,
            layout: BoardLayout::standard(),
            tiles: TileMultiset::standard(),
            workers: 1,
            out_path,
        }
    }

    /// A desk-scale profile that finishes in minutes: a 2×2 grid, 3 runs per
    /// cell, 5 000-evaluation budget, fully deterministic.
    pub fn desk_scale(out_path: PathBuf) -> Self {
        Self {
            tabu_sizes: vec![10, 50],
            neighborhood_sizes: vec![10, 25],
            runs_per_cell: 3,
            stop: StopRule::max_evaluations(5_000),
            base_seed: 0,
            layout: BoardLayout::standard(),
            tiles: TileMultiset::standard(),
            workers: 1,
            out_path,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.tabu_sizes.is_empty() || self.neighborhood_sizes.is_empty() {
            return Err(HarnessError::EmptyGrid);
        }
        if self.runs_per_cell == 0 {
            return Err(HarnessError::ZeroRuns);
        }
        if self.workers == 0 {
            return Err(HarnessError::ZeroWorkers);
        }
        // Per-run parameters are validated once up front on a throwaway
        // config so a bad grid fails before any work.
        for &tabu in &self.tabu_sizes {
            for &nbhd in &self.neighborhood_sizes {
                self.search_config(tabu, nbhd, 0).validate()?;
            }
        }
        Ok(())
    }

    fn search_config(&self, tabu: usize, nbhd: usize, seed: u64) -> SearchConfig {
        SearchConfig::new(self.layout.clone(), self.tiles)
            .with_tabu_size(tabu)
            .with_neighborhood_size(nbhd)
            .with_stop(self.stop)
            .with_seed(seed)
    }

    /// Total number of rows the sweep produces.
    pub fn total_rows(&self) -> usize {
        self.tabu_sizes.len() * self.neighborhood_sizes.len() * self.runs_per_cell
    }

    /// The full job list in grid order: tabu size, then neighborhood size,
    /// then run index.
    fn jobs(&self) -> Vec<SweepJob> {
        let mut jobs = Vec::with_capacity(self.total_rows());
        let mut ordinal = 0u64;
        for &tabu in &self.tabu_sizes {
            for &nbhd in &self.neighborhood_sizes {
                for run_index in 0..self.runs_per_cell {
                    jobs.push(SweepJob {
                        ordinal,
                        tabu_size: tabu,
                        neighborhood_size: nbhd,
                        run_index,
                        seed: mix_seed(self.base_seed, ordinal),
                    });
                    ordinal += 1;
                }
            }
        }
        jobs
    }
}

#[derive(Debug, Clone, Copy)]
struct SweepJob {
    ordinal: u64,
    tabu_size: usize,
    neighborhood_size: usize,
    run_index: usize,
    seed: u64,
}

/// One completed run of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRow {
    pub tabu_size: usize,
    pub neighborhood_size: usize,
    pub run_index: usize,
    pub seed: u64,
    pub best_score: u32,
    pub evaluations: u64,
    /// Wall-clock duration for time-limited runs. Deterministic stop rules
    /// record 0 so CSV output is reproducible byte for byte.
    pub elapsed_ms: u64,
}

impl SweepRow {
    fn to_csv_line(self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.tabu_size,
            self.neighborhood_size,
            self.run_index,
            self.seed,
            self.best_score,
            self.evaluations,
            self.elapsed_ms
        )
    }

    fn from_csv_line(line: &str, line_no: usize) -> Result<Self, HarnessError> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(HarnessError::CsvFormat {
                line: line_no,
                message: format!("expected 7 fields, got {}", fields.len()),
            });
        }
        fn parse<T: std::str::FromStr>(
            s: &str,
            name: &str,
            line_no: usize,
        ) -> Result<T, HarnessError> {
            s.trim().parse().map_err(|_| HarnessError::CsvFormat {
                line: line_no,
                message: format!("bad {name}: '{s}'"),
            })
        }
        Ok(Self {
            tabu_size: parse(fields[0], "tabu_size", line_no)?,
            neighborhood_size: parse(fields[1], "neighborhood_size", line_no)?,
            run_index: parse(fields[2], "run_index", line_no)?,
            seed: parse(fields[3], "seed", line_no)?,
            best_score: parse(fields[4], "best_score", line_no)?,
            evaluations: parse(fields[5], "evaluations", line_no)?,
            elapsed_ms: parse(fields[6], "elapsed_ms", line_no)?,
        })
    }
}

/// Reads a sweep CSV produced by [`run_sweep`].
pub fn read_rows(path: impl AsRef<Path>) -> Result<Vec<SweepRow>, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(HarnessError::CsvFormat {
                line: 1,
                message: format!("unexpected header '{header}'"),
            })
        }
        None => {
            return Err(HarnessError::CsvFormat {
                line: 1,
                message: "missing header".to_string(),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| SweepRow::from_csv_line(l, i + 1))
        .collect()
}

/// Executes the sweep grid, appending rows to the CSV in grid order as they
/// complete and reporting each committed row to `progress`.
///
/// Runs execute on up to `cfg.workers` threads; emission order and file
/// contents are independent of the worker count. If the CSV already holds a
/// prefix of this sweep's rows, those runs are skipped and the sweep
/// continues from the first missing row.
pub fn run_sweep(
    cfg: &SweepConfig,
    mut progress: impl FnMut(&SweepRow),
) -> Result<Vec<SweepRow>, HarnessError> {
    cfg.validate()?;
    let jobs = cfg.jobs();

    // Resume: accept an existing CSV if it is a prefix of this sweep.
    let existing: Vec<SweepRow> = if cfg.out_path.exists() {
        read_rows(&cfg.out_path)?
    } else {
        Vec::new()
    };
    if existing.len() > jobs.len() {
        return Err(HarnessError::CsvMismatch {
            message: format!(
                "file has {} rows but the sweep only produces {}",
                existing.len(),
                jobs.len()
            ),
        });
    }
    for (row, job) in existing.iter().zip(&jobs) {
        if (
            row.tabu_size,
            row.neighborhood_size,
            row.run_index,
            row.seed,
        ) != (
            job.tabu_size,
            job.neighborhood_size,
            job.run_index,
            job.seed,
        ) {
            return Err(HarnessError::CsvMismatch {
                message: format!(
                    "row for ordinal {} was produced by different parameters",
                    job.ordinal
                ),
            });
        }
    }

    let io_err = |source: std::io::Error| HarnessError::Io {
        path: cfg.out_path.display().to_string(),
        source,
    };
    let mut writer = if existing.is_empty() {
        let mut w = BufWriter::new(File::create(&cfg.out_path).map_err(io_err)?);
        writeln!(w, "{CSV_HEADER}").map_err(io_err)?;
        w.flush().map_err(io_err)?;
        w
    } else {
        BufWriter::new(
            OpenOptions::new()
                .append(true)
                .open(&cfg.out_path)
                .map_err(io_err)?,
        )
    };

    let pending = &jobs[existing.len()..];
    let mut rows = existing;
    if pending.is_empty() {
        return Ok(rows);
    }

    let record_elapsed = !cfg.stop.is_deterministic();
    let next_job = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<Result<(u64, SweepRow), SearchError>>();

    let mut first_error: Option<HarnessError> = None;
    std::thread::scope(|scope| {
        for _ in 0..cfg.workers.min(pending.len()) {
            let tx = tx.clone();
            let next_job = &next_job;
            let abort = &abort;
            scope.spawn(move || loop {
                if abort.load(Ordering::Relaxed) {
                    break;
                }
                let i = next_job.fetch_add(1, Ordering::Relaxed);
                let Some(job) = pending.get(i) else { break };
                let outcome =
                    run(&cfg.search_config(job.tabu_size, job.neighborhood_size, job.seed)).map(
                        |result| {
                            let row = SweepRow {
                                tabu_size: job.tabu_size,
                                neighborhood_size: job.neighborhood_size,
                                run_index: job.run_index,
                                seed: job.seed,
                                best_score: result.best_score,
                                evaluations: result.evaluations,
                                elapsed_ms: if record_elapsed {
                                    result.elapsed.as_millis() as u64
                                } else {
                                    0
                                },
                            };
                            (job.ordinal, row)
                        },
                    );
                if tx.send(outcome).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // Single writer: buffer out-of-order completions, flush the
        // contiguous prefix so the file always holds rows 0..k.
        let mut buffered: BTreeMap<u64, SweepRow> = BTreeMap::new();
        let mut next_ordinal = rows.len() as u64;
        for outcome in rx {
            match outcome {
                Ok((ordinal, row)) => {
                    buffered.insert(ordinal, row);
                    while let Some(row) = buffered.remove(&next_ordinal) {
                        if let Err(e) =
                            writeln!(writer, "{}", row.to_csv_line()).and_then(|_| writer.flush())
                        {
                            first_error.get_or_insert(io_err(e));
                            abort.store(true, Ordering::Relaxed);
                            break;
                        }
                        progress(&row);
                        rows.push(row);
                        next_ordinal += 1;
                    }
                }
                Err(e) => {
                    first_error.get_or_insert(HarnessError::Search(e));
                    abort.store(true, Ordering::Relaxed);
                }
            }
            if first_error.is_some() {
                break;
            }
        }
    });

    match first_error {
        Some(e) => Err(e),
        None => Ok(rows),
    }
}

/// Mean and standard deviation of one sweep cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub tabu_size: usize,
    pub neighborhood_size: usize,
    pub runs: usize,
    pub mean: f64,
    pub std: f64,
}

/// Scores pooled over one factor level (all settings of the other factor).
#[derive(Debug, Clone, PartialEq)]
pub struct FactorGroup {
    pub level: usize,
    pub scores: Vec<f64>,
}

/// Per-cell statistics plus the two pooled groupings used by the ANOVA.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub cells: Vec<CellSummary>,
    pub by_neighborhood: Vec<FactorGroup>,
    pub by_tabu: Vec<FactorGroup>,
}

/// The hyperparameter an ANOVA groups rows by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    Neighborhood,
    Tabu,
}

impl SweepSummary {
    pub fn groups(&self, factor: Factor) -> &[FactorGroup] {
        match factor {
            Factor::Neighborhood => &self.by_neighborhood,
            Factor::Tabu => &self.by_tabu,
        }
    }
}

/// Groups rows by cell and by each factor, with cells sorted by
/// (tabu size, neighborhood size) and factor levels ascending.
pub fn summarize(rows: &[SweepRow]) -> Result<SweepSummary, HarnessError> {
    if rows.is_empty() {
        return Err(HarnessError::EmptyRows);
    }
    let mut cells: BTreeMap<(usize, usize), Vec<f64>> = BTreeMap::new();
    let mut by_neighborhood: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    let mut by_tabu: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for row in rows {
        let score = row.best_score as f64;
        cells
            .entry((row.tabu_size, row.neighborhood_size))
            .or_default()
            .push(score);
        by_neighborhood
            .entry(row.neighborhood_size)
            .or_default()
            .push(score);
        by_tabu.entry(row.tabu_size).or_default().push(score);
    }
    let cells = cells
        .into_iter()
        .map(|((tabu_size, neighborhood_size), scores)| {
            let (mean, std) = mean_std(&scores)?;
            Ok(CellSummary {
                tabu_size,
                neighborhood_size,
                runs: scores.len(),
                mean,
                std,
            })
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    let into_groups = |m: BTreeMap<usize, Vec<f64>>| {
        m.into_iter()
            .map(|(level, scores)| FactorGroup { level, scores })
            .collect()
    };
    Ok(SweepSummary {
        cells,
        by_neighborhood: into_groups(by_neighborhood),
        by_tabu: into_groups(by_tabu),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_sweep(dir: &Path, name: &str) -> SweepConfig {
        let mut cfg = SweepConfig::desk_scale(dir.join(name));
        cfg.tabu_sizes = vec![5, 10];
        cfg.neighborhood_sizes = vec![4, 8];
        cfg.runs_per_cell = 2;
        cfg.stop = StopRule::max_evaluations(100);
        cfg.base_seed = 42;
        cfg
    }

    #[test]
    fn mixed_seeds_are_distinct_and_stable() {
        let seeds: Vec<u64> = (0..1000).map(|i| mix_seed(99, i)).collect();
        let unique: std::collections::HashSet<_> = seeds.iter().collect();
        assert_eq!(unique.len(), seeds.len());
        assert_eq!(mix_seed(99, 7), mix_seed(99, 7));
        assert_ne!(mix_seed(99, 7), mix_seed(100, 7));
    }

    #[test]
    fn sweep_produces_grid_rows_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = tiny_sweep(dir.path(), "out.csv");
        let mut seen = Vec::new();
        let rows = run_sweep(&cfg, |row| seen.push(*row)).unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(seen, rows);
        assert_eq!(rows[0].tabu_size, 5);
        assert_eq!(rows[0].neighborhood_size, 4);
        assert_eq!(rows[7].tabu_size, 10);
        assert_eq!(rows[7].neighborhood_size, 8);
        let reread = read_rows(&cfg.out_path).unwrap();
        assert_eq!(reread, rows);
    }

    #[test]
    fn sweep_single_cell_matches_direct_run() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = tiny_sweep(dir.path(), "single.csv");
        cfg.tabu_sizes = vec![7];
        cfg.neighborhood_sizes = vec![5];
        cfg.runs_per_cell = 1;
        let rows = run_sweep(&cfg, |_| {}).unwrap();
        assert_eq!(rows.len(), 1);
        let direct = run(&cfg.search_config(7, 5, mix_seed(42, 0))).unwrap();
        assert_eq!(rows[0].best_score, direct.best_score);
        assert_eq!(rows[0].evaluations, direct.evaluations);
        assert_eq!(
            rows[0].elapsed_ms, 0,
            "deterministic stop records no wall time"
        );
    }

    #[test]
    fn sweep_is_byte_deterministic_across_worker_counts() {
        let dir = tempfile::tempdir().unwrap();
        let mut a = tiny_sweep(dir.path(), "a.csv");
        a.workers = 1;
        let mut b = tiny_sweep(dir.path(), "b.csv");
        b.workers = 4;
        run_sweep(&a, |_| {}).unwrap();
        run_sweep(&b, |_| {}).unwrap();
        let bytes_a = std::fs::read(&a.out_path).unwrap();
        let bytes_b = std::fs::read(&b.out_path).unwrap();
        assert_eq!(bytes_a, bytes_b);
    }

    #[test]
    fn interrupted_sweep_resumes_to_identical_file() {
        let dir = tempfile::tempdir().unwrap();
        let full = tiny_sweep(dir.path(), "full.csv");
        run_sweep(&full, |_| {}).unwrap();

        // Simulate an interruption by truncating the file after 3 rows.
        let partial = tiny_sweep(dir.path(), "partial.csv");
        let text = std::fs::read_to_string(&full.out_path).unwrap();
        let kept: Vec<&str> = text.lines().take(4).collect(); // header + 3 rows
        std::fs::write(&partial.out_path, format!("{}\n", kept.join("\n"))).unwrap();

        let mut resumed_progress = 0;
        let rows = run_sweep(&partial, |_| resumed_progress += 1).unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(resumed_progress, 5, "only fresh rows hit the progress sink");
        assert_eq!(
            std::fs::read(&full.out_path).unwrap(),
            std::fs::read(&partial.out_path).unwrap()
        );
    }

    #[test]
    fn resume_rejects_foreign_csv() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = tiny_sweep(dir.path(), "foreign.csv");
        std::fs::write(&cfg.out_path, format!("{CSV_HEADER}\n1,1,0,123,9,100,0\n")).unwrap();
        assert!(matches!(
            run_sweep(&cfg, |_| {}),
            Err(HarnessError::CsvMismatch { .. })
        ));
    }

    #[test]
    fn validate_rejects_bad_grids() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = tiny_sweep(dir.path(), "x.csv");
        cfg.tabu_sizes.clear();
        assert!(matches!(cfg.validate(), Err(HarnessError::EmptyGrid)));

        let mut cfg = tiny_sweep(dir.path(), "y.csv");
        cfg.runs_per_cell = 0;
        assert!(matches!(cfg.validate(), Err(HarnessError::ZeroRuns)));

        let mut cfg = tiny_sweep(dir.path(), "z.csv");
        cfg.workers = 0;
        assert!(matches!(cfg.validate(), Err(HarnessError::ZeroWorkers)));

        let mut cfg = tiny_sweep(dir.path(), "w.csv");
        cfg.neighborhood_sizes = vec![0];
        assert!(matches!(cfg.validate(), Err(HarnessError::Search(_))));
    }

    #[test]
    fn summarize_means_and_pools() {
        let row = |tabu, nbhd, score| SweepRow {
            tabu_size: tabu,
            neighborhood_size: nbhd,
            run_index: 0,
            seed: 0,
            best_score: score,
            evaluations: 0,
            elapsed_ms: 0,
        };
        let rows = vec![
            row(10, 25, 10),
            row(10, 25, 20),
            row(50, 75, 30),
            row(50, 75, 40),
        ];
        let summary = summarize(&rows).unwrap();
        assert_eq!(summary.cells.len(), 2);
        assert_eq!(summary.cells[0].mean, 15.0);
        assert_eq!(summary.cells[1].mean, 35.0);
        assert_eq!(summary.by_neighborhood.len(), 2);
        assert_eq!(summary.by_tabu.len(), 2);
        assert_eq!(
            summary.groups(Factor::Neighborhood)[0].scores,
            vec![10.0, 20.0]
        );
        assert_eq!(summary.groups(Factor::Tabu)[1].scores, vec![30.0, 40.0]);
        assert!(matches!(summarize(&[]), Err(HarnessError::EmptyRows)));
    }

    #[test]
    fn paper_scale_grid_pools_into_published_df_structure() {
        let cfg = SweepConfig::paper_scale(PathBuf::from("unused.csv"));
        assert_eq!(cfg.total_rows(), 900);

        // Synthetic rows with the full grid shape; scores vary per ordinal
        // so the ANOVA below is non-degenerate.
        let mut rows = Vec::new();
        let mut ordinal = 0u64;
        for &tabu in &cfg.tabu_sizes {
            for &nbhd in &cfg.neighborhood_sizes {
                for run_index in 0..cfg.runs_per_cell {
                    rows.push(SweepRow {
                        tabu_size: tabu,
                        neighborhood_size: nbhd,
                        run_index,
                        seed: mix_seed(0, ordinal),
                        best_score: 20 + (mix_seed(1, ordinal) % 20) as u32,
                        evaluations: 1,
                        elapsed_ms: 0,
                    });
                    ordinal += 1;
                }
            }
        }
        let summary = summarize(&rows).unwrap();
        assert_eq!(summary.cells.len(), 30);
        assert!(summary.cells.iter().all(|c| c.runs == 30));

        let by_nbhd = summary.groups(Factor::Neighborhood);
        assert_eq!(by_nbhd.len(), 5);
        assert!(by_nbhd.iter().all(|g| g.scores.len() == 180));
        let groups: Vec<Vec<f64>> = by_nbhd.iter().map(|g| g.scores.clone()).collect();
        let anova = crate::stats::one_way_anova(&groups, 0.05).unwrap();
        assert_eq!((anova.df1, anova.df2), (4, 895));

        let by_tabu = summary.groups(Factor::Tabu);
        assert_eq!(by_tabu.len(), 6);
        assert!(by_tabu.iter().all(|g| g.scores.len() == 150));
        let groups: Vec<Vec<f64>> = by_tabu.iter().map(|g| g.scores.clone()).collect();
        let anova = crate::stats::one_way_anova(&groups, 0.05).unwrap();
        assert_eq!((anova.df1, anova.df2), (5, 894));
    }

    #[test]
    fn csv_lines_round_trip() {
        let row = SweepRow {
            tabu_size: 50,
            neighborhood_size: 75,
            run_index: 3,
            seed: 0xdead_beef,
            best_score: 28,
            evaluations: 123_456,
            elapsed_ms: 0,
        };
        let parsed = SweepRow::from_csv_line(&row.to_csv_line(), 2).unwrap();
        assert_eq!(parsed, row);
        assert!(SweepRow::from_csv_line("1,2,3", 2).is_err());
        assert!(SweepRow::from_csv_line("a,b,c,d,e,f,g", 2).is_err());
    }
}
