//! Tabu Search over terrain assignments.
//!
//! The move operator picks 6 distinct cells uniformly at random and cycles
//! their terrains: the terrain at `A[i]` replaces the terrain at `A[i+1]`,
//! with `A[5]`'s terrain wrapping back to `A[0]`. Every move therefore
//! conserves the tile multiset. Each iteration scores a fixed-size
//! neighborhood of such moves, picks the best candidate that is not tabu
//! (or beats the global best — aspiration), and accepts it even when it is
//! worse than the current solution. Visited solutions are remembered in a
//! bounded FIFO list of content digests.

use std::collections::{HashMap, VecDeque};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::board::{BoardError, BoardLayout, MapState, TileMultiset};
use crate::evaluator::{evaluate, ViolationReport};

/// Number of cells the perturb operator cycles.
pub const PERTURB_CELLS: usize = 6;

/// Name of the pseudo-random generator runs are reproducible under.
pub const RNG_NAME: &str = "chacha8";

/// Errors raised by search configuration and operators.
#[derive(Debug, Error)]
pub enum SearchError {
    #[error("board has {0} cells; the perturb operator needs at least {PERTURB_CELLS}")]
    BoardTooSmall(usize),
    #[error("tabu list size must be positive")]
    ZeroTabuSize,
    #[error("neighborhood size must be positive")]
    ZeroNeighborhoodSize,
    #[error("provided initial map does not match the configured layout")]
    InitialLayoutMismatch,
    #[error("provided initial map does not match the configured tile multiset")]
    InitialTilesMismatch,
    #[error(transparent)]
    Board(#[from] BoardError),
}

/// 64-bit FNV-1a digest of a terrain sequence, the solution identity kept in
/// the tabu list. Deterministic across runs and builds; collisions are
/// vanishingly improbable at tabu-list scale.
pub fn digest_terrains(terrains: &[crate::terrain::TerrainType]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &t in terrains {
        hash ^= t as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Bounded FIFO memory of visited solution digests with O(1) membership.
#[derive(Debug, Clone)]
pub struct TabuList {
    capacity: usize,
    queue: VecDeque<u64>,
    members: HashMap<u64, u32>,
}

impl TabuList {
    /// Creates a list holding at most `capacity` entries. Panics on zero.
    pub fn new(capacity: usize) -> Self {
        assert!(capacity > 0, "tabu list capacity must be positive");
        Self {
            capacity,
            queue: VecDeque::with_capacity(capacity),
            members: HashMap::with_capacity(capacity),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.queue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    pub fn contains(&self, digest: u64) -> bool {
        self.members.contains_key(&digest)
    }

    /// Records a digest, evicting the oldest entry when full. Duplicate
    /// digests are counted so eviction never forgets a still-queued entry.
    pub fn push(&mut self, digest: u64) {
        if self.queue.len() == self.capacity {
            let oldest = self.queue.pop_front().expect("capacity is positive");
            match self.members.get_mut(&oldest) {
                Some(n) if *n > 1 => *n -= 1,
                _ => {
                    self.members.remove(&oldest);
                }
            }
        }
        self.queue.push_back(digest);
        *self.members.entry(digest).or_insert(0) += 1;
    }
}

/// When a run stops: a wall-clock limit, an evaluation budget, or both
/// (whichever fires first). Constructors guarantee at least one is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StopRule {
    time_limit: Option<Duration>,
    max_evaluations: Option<u64>,
}

impl StopRule {
    pub fn time_limit(limit: Duration) -> Self {
        Self {
            time_limit: Some(limit),
            max_evaluations: None,
        }
    }

    pub fn max_evaluations(budget: u64) -> Self {
        Self {
            time_limit: None,
            max_evaluations: Some(budget),
        }
    }

    pub fn either(limit: Duration, budget: u64) -> Self {
        Self {
            time_limit: Some(limit),
            max_evaluations: Some(budget),
        }
    }

    /// True when the rule has no wall-clock component, so runs with equal
    /// seeds produce identical trajectories.
    pub fn is_deterministic(&self) -> bool {
        self.time_limit.is_none()
    }

    pub fn should_stop(&self, elapsed: Duration, evaluations: u64) -> bool {
        if let Some(limit) = self.time_limit {
            if elapsed >= limit {
                return true;
            }
        }
        if let Some(budget) = self.max_evaluations {
            if evaluations >= budget {
                return true;
            }
        }
        false
    }
}

/// How the first solution is produced.
#[derive(Debug, Clone)]
pub enum InitialState {
    /// A uniformly random arrangement of the tile multiset.
    RandomShuffle,
    /// A caller-supplied map (must match the configured layout and tiles).
    Provided(MapState),
}

/// Parameters of a single search run.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub layout: BoardLayout,
    pub tiles: TileMultiset,
    pub tabu_size: usize,
    pub neighborhood_size: usize,
    pub stop: StopRule,
    pub seed: u64,
    pub initial: InitialState,
    /// Aspiration criterion: a tabu candidate is admissible when it beats
    /// the global best. On by default.
    pub aspiration: bool,
}

impl SearchConfig {
    /// A config for the given board with the defaults: tabu size 50,
    /// neighborhood 75, five-minute wall clock, seed 0, random start.
    pub fn new(layout: BoardLayout, tiles: TileMultiset) -> Self {
        Self {
            layout,
            tiles,
            tabu_size: 50,
            neighborhood_size: 75,
            stop: StopRule::time_limit(Duration::from_secs(300)),
            seed: 0,
            initial: InitialState::RandomShuffle,
            aspiration: true,
        }
    }

    /// A config for the standard board and tile set.
    pub fn standard() -> Self {
        Self::new(BoardLayout::standard(), TileMultiset::standard())
    }

    pub fn with_tabu_size(mut self, n: usize) -> Self {
        self.tabu_size = n;
        self
    }

    pub fn with_neighborhood_size(mut self, n: usize) -> Self {
        self.neighborhood_size = n;
        self
    }

    pub fn with_stop(mut self, stop: StopRule) -> Self {
        self.stop = stop;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_initial(mut self, initial: InitialState) -> Self {
        self.initial = initial;
        self
    }

    pub fn with_aspiration(mut self, on: bool) -> Self {
        self.aspiration = on;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.tabu_size == 0 {
            return Err(SearchError::ZeroTabuSize);
        }
        if self.neighborhood_size == 0 {
            return Err(SearchError::ZeroNeighborhoodSize);
        }
        if self.layout.cell_count() < PERTURB_CELLS {
            return Err(SearchError::BoardTooSmall(self.layout.cell_count()));
        }
        if self.tiles.total() != self.layout.cell_count() {
            return Err(SearchError::Board(BoardError::MultisetMismatch {
                got: self.tiles.total(),
                want: self.layout.cell_count(),
            }));
        }
        if let InitialState::Provided(m) = &self.initial {
            if m.layout() != &self.layout {
                return Err(SearchError::InitialLayoutMismatch);
            }
            if m.tile_multiset() != self.tiles {
                return Err(SearchError::InitialTilesMismatch);
            }
        }
        Ok(())
    }
}

/// One history sample: scores after a given iteration (iteration 0 is the
/// initial solution).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HistoryEntry {
    pub iteration: u64,
    pub current_score: u32,
    pub best_score: u32,
}

/// Outcome of a run.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best_map: MapState,
    pub best_score: u32,
    /// Objective evaluations performed, including the initial map.
    pub evaluations: u64,
    pub iterations: u64,
    pub elapsed: Duration,
    pub history: Vec<HistoryEntry>,
    /// Seed and generator name, recorded so runs can be reproduced.
    pub seed: u64,
    pub rng_name: &'static str,
}

/// Builds a uniformly random arrangement of the tile multiset (Fisher–Yates
/// shuffle of the flat tile sequence).
pub fn initial_map(
    layout: &BoardLayout,
    tiles: &TileMultiset,
    rng: &mut impl Rng,
) -> Result<MapState, SearchError> {
    if tiles.total() != layout.cell_count() {
        return Err(SearchError::Board(BoardError::MultisetMismatch {
            got: tiles.total(),
            want: layout.cell_count(),
        }));
    }
    let mut terrains = Vec::with_capacity(layout.cell_count());
    for (t, count) in tiles.iter() {
        terrains.extend(std::iter::repeat_n(t, count));
    }
    terrains.shuffle(rng);
    Ok(MapState::new(layout.clone(), terrains)?)
}

/// Applies the 6-cell cyclic move and also returns the chosen cells in
/// selection order. The input map is untouched.
pub fn perturb_with_cells(
    m: &MapState,
    rng: &mut impl Rng,
) -> Result<(MapState, [usize; PERTURB_CELLS]), SearchError> {
    let n = m.layout().cell_count();
    if n < PERTURB_CELLS {
        return Err(SearchError::BoardTooSmall(n));
    }
    let picked = rand::seq::index::sample(rng, n, PERTURB_CELLS).into_vec();
    let cells: [usize; PERTURB_CELLS] = picked.try_into().expect("sampled exactly 6 cells");
    let old = cells.map(|i| m.terrain_at(i));
    let mut terrains = m.terrains().to_vec();
    for i in 0..PERTURB_CELLS - 1 {
        terrains[cells[i + 1]] = old[i];
    }
    terrains[cells[0]] = old[PERTURB_CELLS - 1];
    Ok((MapState::new(m.layout().clone(), terrains)?, cells))
}

/// Applies the 6-cell cyclic move, returning the new map.
pub fn perturb(m: &MapState, rng: &mut impl Rng) -> Result<MapState, SearchError> {
    perturb_with_cells(m, rng).map(|(next, _)| next)
}

/// Generates `n` independent perturbations of `m`, in draw order.
/// Duplicates are permitted.
pub fn neighborhood(
    m: &MapState,
    n: usize,
    rng: &mut impl Rng,
) -> Result<Vec<MapState>, SearchError> {
    if n == 0 {
        return Err(SearchError::ZeroNeighborhoodSize);
    }
    (0..n).map(|_| perturb(m, rng)).collect()
}

/// Result of one tabu step.
#[derive(Debug, Clone)]
pub struct StepOutcome {
    pub next: MapState,
    pub report: ViolationReport,
    /// False when every candidate was inadmissible and the search stayed put.
    pub moved: bool,
}

/// One iteration: scores a fresh neighborhood, picks the best admissible
/// candidate (not tabu, or beating `best_score` under aspiration) with ties
/// broken by list position, and records it in the tabu list. The chosen
/// candidate is accepted even when it is worse than `current`.
pub fn step(
    current: &MapState,
    tabu: &mut TabuList,
    best_score: u32,
    cfg: &SearchConfig,
    rng: &mut impl Rng,
) -> Result<StepOutcome, SearchError> {
    let candidates = neighborhood(current, cfg.neighborhood_size, rng)?;
    let mut scored = Vec::with_capacity(candidates.len());
    let mut chosen: Option<(usize, u32)> = None;
    for (i, candidate) in candidates.iter().enumerate() {
        let report = evaluate(candidate);
        let digest = digest_terrains(candidate.terrains());
        scored.push((report, digest));
        let admissible = !tabu.contains(digest) || (cfg.aspiration && report.total < best_score);
        if admissible && chosen.is_none_or(|(_, best)| report.total < best) {
            chosen = Some((i, report.total));
        }
    }
    match chosen {
        Some((i, _)) => {
            let (report, digest) = scored[i];
            tabu.push(digest);
            let next = candidates.into_iter().nth(i).expect("index from enumerate");
            Ok(StepOutcome {
                next,
                report,
                moved: true,
            })
        }
        None => Ok(StepOutcome {
            next: current.clone(),
            report: evaluate(current),
            moved: false,
        }),
    }
}

/// Runs Tabu Search to completion under the config's stop rule.
///
/// With an evaluation-count stop the run is fully deterministic in the seed;
/// with a wall-clock stop the trajectory prefix still is, but its length is
/// not.
pub fn run(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate()?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let current = match &cfg.initial {
        InitialState::RandomShuffle => initial_map(&cfg.layout, &cfg.tiles, &mut rng)?,
        InitialState::Provided(m) => m.clone(),
    };
    let mut current = current;
    let mut current_score = evaluate(&current).total;
    let mut evaluations: u64 = 1;
    let mut best_map = current.clone();
    let mut best_score = current_score;

    let mut tabu = TabuList::new(cfg.tabu_size);
    tabu.push(digest_terrains(current.terrains()));

    let mut history = vec![HistoryEntry {
        iteration: 0,
        current_score,
        best_score,
    }];
    let mut iterations: u64 = 0;

    while !cfg.stop.should_stop(start.elapsed(), evaluations) {
        let outcome = step(&current, &mut tabu, best_score, cfg, &mut rng)?;
        evaluations += cfg.neighborhood_size as u64;
        iterations += 1;
        if outcome.moved {
            current = outcome.next;
            current_score = outcome.report.total;
            if current_score < best_score {
                best_score = current_score;
                best_map = current.clone();
            }
        }
        history.push(HistoryEntry {
            iteration: iterations,
            current_score,
            best_score,
        });
    }

    Ok(SearchResult {
        best_map,
        best_score,
        evaluations,
        iterations,
        elapsed: start.elapsed(),
        history,
        seed: cfg.seed,
        rng_name: RNG_NAME,
    })
}
