//! Balanced map generation for the Terra Mystica board game.
//!
//! A map is the standard 113-cell staggered hex board (or any custom row
//! layout) with one terrain per cell. Map quality is the number of
//! violations of four balance requirements — same-terrain adjacency, river
//! neighbor counts, river connectivity, and one-spade reachability — and
//! [`search::run`] minimizes that score with Tabu Search. The [`harness`]
//! adds hyperparameter sweeps over tabu-list and neighborhood sizes,
//! CSV persistence, one-way ANOVA over the results, and map file/render
//! formats; the `tmgen` binary exposes all of it on the command line.
//!
//! ```
//! use tmgen::search::{run, SearchConfig, StopRule};
//!
//! let cfg = SearchConfig::standard()
//!     .with_tabu_size(50)
//!     .with_neighborhood_size(25)
//!     .with_stop(StopRule::max_evaluations(2_000))
//!     .with_seed(7);
//! let result = run(&cfg).unwrap();
//! assert_eq!(result.best_score, tmgen::evaluator::evaluate(&result.best_map).total);
//! ```

pub mod board;
pub mod evaluator;
pub mod harness;
pub mod search;
pub mod stats;
pub mod terrain;

pub use board::{search_space_log10, BoardLayout, HexCoord, MapState, TileMultiset};
pub use evaluator::{evaluate, ViolationReport};
pub use search::{run, SearchConfig, SearchResult, StopRule, TabuList};
pub use stats::{f_cdf, f_critical, mean_std, one_way_anova, AnovaResult};
pub use terrain::{spade_distance, TerrainType};
