//! Row-staggered hexagonal board geometry and the map state.
//!
//! The board is a list of rows of pointy-top hexes. Even-index rows are
//! aligned left; odd-index rows are shifted right by half a hex. Under that
//! stagger the neighbors of a cell are:
//!
//! * even row `r`, col `c`: `(r,c−1) (r,c+1) (r−1,c−1) (r−1,c) (r+1,c−1) (r+1,c)`
//! * odd  row `r`, col `c`: `(r,c−1) (r,c+1) (r−1,c)   (r−1,c+1) (r+1,c) (r+1,c+1)`
//!
//! with out-of-range candidates dropped. The convention lives entirely in
//! this module; flipping the stagger direction would only change
//! [`BoardLayout::neighbors`].
//!
//! Cells are also addressable by a row-major linear index, so a map is
//! interchangeably a grid of coordinates or a flat array of terrain codes.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::terrain::{TerrainType, ALL_TERRAINS, LAND_TERRAINS};

/// Errors raised by board operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BoardError {
    /// A layout needs at least one row.
    #[error("layout has no rows")]
    EmptyLayout,
    /// Every row needs at least one cell.
    #[error("row {row} has zero length")]
    ZeroLengthRow { row: usize },
    /// Coordinate outside the layout.
    #[error("coordinate {coord} is out of bounds for this layout")]
    OutOfBounds { coord: HexCoord },
    /// Linear index outside the layout.
    #[error("cell index {index} is out of bounds for a {count}-cell layout")]
    IndexOutOfBounds { index: usize, count: usize },
    /// Terrain sequence length does not match the layout.
    #[error("terrain sequence has {got} entries but the layout has {want} cells")]
    LengthMismatch { got: usize, want: usize },
    /// Tile multiset total does not match the layout.
    #[error("tile multiset totals {got} tiles but the layout has {want} cells")]
    MultisetMismatch { got: usize, want: usize },
}

/// A cell address: row index and column index within that row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexCoord {
    pub row: usize,
    pub col: usize,
}

impl HexCoord {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Row lengths of the standard Terra Mystica board: 9 rows alternating
/// 13 and 12 cells, 113 cells total.
pub const STANDARD_ROW_LENGTHS: [usize; 9] = [13, 12, 13, 12, 13, 12, 13, 12, 13];

/// Neighbor column offsets (d_row, d_col), one table per row parity.
const EVEN_ROW_OFFSETS: [(isize, isize); 6] = [(0, -1), (0, 1), (-1, -1), (-1, 0), (1, -1), (1, 0)];
const ODD_ROW_OFFSETS: [(isize, isize); 6] = [(0, -1), (0, 1), (-1, 0), (-1, 1), (1, 0), (1, 1)];

/// Board shape: an ordered list of row lengths, with precomputed row offsets
/// and the adjacency of every cell.
#[derive(Debug, Clone)]
pub struct BoardLayout {
    row_lengths: Vec<usize>,
    row_starts: Vec<usize>,
    adjacency: Vec<Vec<u32>>,
}

impl PartialEq for BoardLayout {
    fn eq(&self, other: &Self) -> bool {
        // Derived fields are a function of the row lengths.
        self.row_lengths == other.row_lengths
    }
}

impl Eq for BoardLayout {}

impl BoardLayout {
    /// Builds a layout from row lengths. Rows must be non-empty.
    pub fn new(row_lengths: Vec<usize>) -> Result<Self, BoardError> {
        if row_lengths.is_empty() {
            return Err(BoardError::EmptyLayout);
        }
        if let Some(row) = row_lengths.iter().position(|&len| len == 0) {
            return Err(BoardError::ZeroLengthRow { row });
        }
        let mut row_starts = Vec::with_capacity(row_lengths.len());
        let mut total = 0usize;
        for &len in &row_lengths {
            row_starts.push(total);
            total += len;
        }
        let mut layout = Self {
            row_lengths,
            row_starts,
            adjacency: Vec::new(),
        };
        layout.adjacency = layout.build_adjacency();
        Ok(layout)
    }

    /// The standard 113-cell Terra Mystica layout.
    pub fn standard() -> Self {
        Self::new(STANDARD_ROW_LENGTHS.to_vec()).expect("standard layout is valid")
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }

    pub fn row_count(&self) -> usize {
        self.row_lengths.len()
    }

    /// Total number of cells: the sum of the row lengths.
    pub fn cell_count(&self) -> usize {
        self.row_starts.last().copied().unwrap_or(0) + self.row_lengths.last().copied().unwrap_or(0)
    }

    /// True for the standard 9-row board.
    pub fn is_standard(&self) -> bool {
        self.row_lengths == STANDARD_ROW_LENGTHS
    }

    pub fn contains(&self, c: HexCoord) -> bool {
        c.row < self.row_lengths.len() && c.col < self.row_lengths[c.row]
    }

    /// Row-major linear index of a coordinate.
    pub fn index_of(&self, c: HexCoord) -> Result<usize, BoardError> {
        if !self.contains(c) {
            return Err(BoardError::OutOfBounds { coord: c });
        }
        Ok(self.row_starts[c.row] + c.col)
    }

    /// Coordinate of a row-major linear index.
    pub fn coord_of(&self, index: usize) -> Result<HexCoord, BoardError> {
        if index >= self.cell_count() {
            return Err(BoardError::IndexOutOfBounds {
                index,
                count: self.cell_count(),
            });
        }
        // Rows are short; a linear scan beats a binary search at this size.
        let row = self
            .row_starts
            .iter()
            .rposition(|&start| start <= index)
            .expect("row_starts is non-empty");
        Ok(HexCoord::new(row, index - self.row_starts[row]))
    }

    /// All valid neighbors of a cell under the stagger convention.
    ///
    /// The relation is symmetric, never contains the cell itself, and has no
    /// duplicates.
    pub fn neighbors(&self, c: HexCoord) -> Result<Vec<HexCoord>, BoardError> {
        let index = self.index_of(c)?;
        Ok(self.adjacency[index]
            .iter()
            .map(|&i| self.coord_of(i as usize).expect("adjacency is in bounds"))
            .collect())
    }

    /// Neighbor linear indices of a cell, precomputed at construction.
    ///
    /// Panics if `index` is out of bounds.
    pub fn neighbor_indices(&self, index: usize) -> &[u32] {
        &self.adjacency[index]
    }

    /// Iterates all coordinates in row-major order.
    pub fn coords(&self) -> impl Iterator<Item = HexCoord> + '_ {
        self.row_lengths
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| HexCoord::new(row, col)))
    }

    fn build_adjacency(&self) -> Vec<Vec<u32>> {
        let mut adjacency = Vec::with_capacity(self.cell_count());
        for c in self.coords() {
            let offsets = if c.row % 2 == 0 {
                &EVEN_ROW_OFFSETS
            } else {
                &ODD_ROW_OFFSETS
            };
            let mut cell = Vec::with_capacity(6);
            for &(dr, dc) in offsets {
                let row = c.row as isize + dr;
                let col = c.col as isize + dc;
                if row < 0 || col < 0 {
                    continue;
                }
                let n = HexCoord::new(row as usize, col as usize);
                if self.contains(n) {
                    cell.push((self.row_starts[n.row] + n.col) as u32);
                }
            }
            adjacency.push(cell);
        }
        adjacency
    }
}

/// Tile counts per terrain type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TileMultiset {
    counts: [usize; ALL_TERRAINS.len()],
}

impl TileMultiset {
    /// An empty multiset.
    pub fn new() -> Self {
        Self {
            counts: [0; ALL_TERRAINS.len()],
        }
    }

    /// The standard tile set: 11 of each land terrain and 36 River,
    /// 113 tiles in total.
    pub fn standard() -> Self {
        let mut tiles = Self::new();
        for t in LAND_TERRAINS {
            tiles.set_count(t, 11);
        }
        tiles.set_count(TerrainType::River, 36);
        tiles
    }

    /// Counts the terrains of an existing sequence.
    pub fn from_terrains(terrains: &[TerrainType]) -> Self {
        let mut tiles = Self::new();
        for &t in terrains {
            tiles.counts[t as usize] += 1;
        }
        tiles
    }

    pub fn count(&self, t: TerrainType) -> usize {
        self.counts[t as usize]
    }

    pub fn set_count(&mut self, t: TerrainType, n: usize) {
        self.counts[t as usize] = n;
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Iterates `(terrain, count)` pairs in enum order, including zeros.
    pub fn iter(&self) -> impl Iterator<Item = (TerrainType, usize)> + '_ {
        ALL_TERRAINS.iter().map(move |&t| (t, self.count(t)))
    }
}

impl Default for TileMultiset {
    fn default() -> Self {
        Self::new()
    }
}

/// A candidate solution: a layout plus one terrain per cell, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapState {
    layout: BoardLayout,
    terrains: Vec<TerrainType>,
}

impl MapState {
    /// Builds a map, rejecting a terrain sequence of the wrong length.
    pub fn new(layout: BoardLayout, terrains: Vec<TerrainType>) -> Result<Self, BoardError> {
        if terrains.len() != layout.cell_count() {
            return Err(BoardError::LengthMismatch {
                got: terrains.len(),
                want: layout.cell_count(),
            });
        }
        Ok(Self { layout, terrains })
    }

    pub fn layout(&self) -> &BoardLayout {
        &self.layout
    }

    /// The flat row-major terrain sequence.
    pub fn terrains(&self) -> &[TerrainType] {
        &self.terrains
    }

    /// Terrain at a linear index. Panics if out of bounds.
    pub fn terrain_at(&self, index: usize) -> TerrainType {
        self.terrains[index]
    }

    pub fn terrain_at_coord(&self, c: HexCoord) -> Result<TerrainType, BoardError> {
        Ok(self.terrains[self.layout.index_of(c)?])
    }

    /// The multiset of tiles currently on the board.
    pub fn tile_multiset(&self) -> TileMultiset {
        TileMultiset::from_terrains(&self.terrains)
    }
}

/// log10 of the number of distinct terrain assignments: the multinomial
/// coefficient `N! / Π(nᵢ!)` over the multiset counts, computed exactly with
/// big integers and converted at the end.
pub fn search_space_log10(layout: &BoardLayout, tiles: &TileMultiset) -> Result<f64, BoardError> {
    let n = layout.cell_count();
    if tiles.total() != n {
        return Err(BoardError::MultisetMismatch {
            got: tiles.total(),
            want: n,
        });
    }
    let mut value = factorial(n);
    for (_, count) in tiles.iter() {
        value /= factorial(count);
    }
    Ok(big_log10(&value))
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// log10 of a positive big integer, exact to f64 precision regardless of
/// magnitude: uses the leading decimal digits plus the digit count.
fn big_log10(value: &BigUint) -> f64 {
    let digits = value.to_string();
    let lead_len = digits.len().min(17);
    let lead: f64 = digits[..lead_len].parse().expect("digits parse as f64");
    lead.log10() + (digits.len() - lead_len) as f64
}
