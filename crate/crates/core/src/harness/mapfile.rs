//! The plain-text map format.
//!
//! `#` starts a comment line; blank lines are ignored. The first significant
//! line declares the layout, then one line of space-separated terrain codes
//! per row:
//!
//! ```text
//! # any comment
//! layout: 2 1
//! P S
//! R
//! ```

use std::fs;
use std::path::Path;

use crate::board::{BoardLayout, MapState, TileMultiset};
use crate::terrain::TerrainType;

use super::HarnessError;

/// A parsed map plus non-fatal findings (e.g. a non-standard tile multiset
/// on the standard layout).
#[derive(Debug, Clone)]
pub struct LoadedMap {
    pub map: MapState,
    pub warnings: Vec<String>,
}

/// Serializes a map in the text format; a `save_map` → `load_map` round
/// trip reproduces the map exactly.
pub fn map_to_string(m: &MapState) -> String {
    let mut out = String::new();
    out.push_str("layout:");
    for len in m.layout().row_lengths() {
        out.push_str(&format!(" {len}"));
    }
    out.push('\n');
    let mut index = 0;
    for &len in m.layout().row_lengths() {
        let row: Vec<String> = (0..len)
            .map(|_| {
                let code = m.terrain_at(index).code().to_string();
                index += 1;
                code
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the text format. Errors carry 1-based line and column positions.
pub fn parse_map(text: &str) -> Result<LoadedMap, HarnessError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (layout_line_no, layout_line) = lines.next().ok_or(HarnessError::EmptyMapFile)?;
    let rest = layout_line
        .trim()
        .strip_prefix("layout:")
        .ok_or(HarnessError::MissingLayout {
            line: layout_line_no,
        })?;
    let mut row_lengths = Vec::new();
    for token in rest.split_whitespace() {
        let len: usize = token.parse().map_err(|_| HarnessError::BadLayoutValue {
            line: layout_line_no,
            token: token.to_string(),
        })?;
        row_lengths.push(len);
    }
    let layout = BoardLayout::new(row_lengths)?;

    let mut terrains = Vec::with_capacity(layout.cell_count());
    for (row, &want) in layout.row_lengths().iter().enumerate() {
        let (line_no, line) = lines.next().ok_or(HarnessError::MissingRow {
            row,
            want: layout.row_count(),
        })?;
        let mut got = 0;
        for (offset, token) in tokens_with_offsets(line) {
            let col = offset + 1;
            let mut chars = token.chars();
            let ch = chars.next().expect("split_whitespace yields non-empty");
            if chars.next().is_some() {
                return Err(HarnessError::BadTerrainToken {
                    line: line_no,
                    col,
                    token: token.to_string(),
                });
            }
            let terrain =
                TerrainType::parse_code(ch).map_err(|_| HarnessError::UnknownTerrainCode {
                    line: line_no,
                    col,
                    code: ch,
                })?;
            terrains.push(terrain);
            got += 1;
        }
        if got != want {
            return Err(HarnessError::RowLengthMismatch {
                line: line_no,
                row,
                got,
                want,
            });
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(HarnessError::TrailingContent { line: line_no });
    }

    let map = MapState::new(layout, terrains)?;
    let mut warnings = Vec::new();
    if map.layout().is_standard() && map.tile_multiset() != TileMultiset::standard() {
        warnings.push(
            "standard layout with a non-standard tile multiset (expected 11 of each land terrain and 36 River)"
                .to_string(),
        );
    }
    Ok(LoadedMap { map, warnings })
}

/// Whitespace tokens with their 0-based byte offsets in the line.
fn tokens_with_offsets(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().scan(0usize, move |pos, token| {
        let start = line[*pos..].find(token).expect("token comes from line") + *pos;
        *pos = start + token.len();
        Some((start, token))
    })
}

/// Reads and parses a map file.
pub fn load_map(path: impl AsRef<Path>) -> Result<LoadedMap, HarnessError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_map(&text)
}

/// Writes a map in the text format.
pub fn save_map(m: &MapState, path: impl AsRef<Path>) -> Result<(), HarnessError> {
    let path = path.as_ref();
    fs::write(path, map_to_string(m)).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::BoardLayout;
    use crate::search::initial_map;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use TerrainType::*;

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("map.txt");
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let m = initial_map(
            &BoardLayout::standard(),
            &TileMultiset::standard(),
            &mut rng,
        )
        .unwrap();
        save_map(&m, &path).unwrap();
        let loaded = load_map(&path).unwrap();
        assert_eq!(loaded.map, m);
        assert!(loaded.warnings.is_empty());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let loaded = parse_map("# a map\n\nlayout: 2 1\n# body\nP S\n\nR\n").unwrap();
        assert_eq!(loaded.map.terrains(), &[Plains, Swamp, River]);
    }

    #[test]
    fn codes_parse_case_insensitively() {
        let loaded = parse_map("layout: 2 1\np s\nr\n").unwrap();
        assert_eq!(loaded.map.terrains(), &[Plains, Swamp, River]);
    }

    #[test]
    fn short_row_is_an_error() {
        let err = parse_map("layout: 13\nP S L\n").unwrap_err();
        match err {
            HarnessError::RowLengthMismatch { row, got, want, .. } => {
                assert_eq!((row, got, want), (0, 3, 13));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn unknown_code_reports_position() {
        let err = parse_map("layout: 2 1\nP X\nR\n").unwrap_err();
        match err {
            HarnessError::UnknownTerrainCode { line, col, code } => {
                assert_eq!((line, col, code), (2, 3, 'X'));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn missing_layout_line_is_an_error() {
        assert!(matches!(
            parse_map("P S\nR\n"),
            Err(HarnessError::MissingLayout { line: 1 })
        ));
        assert!(matches!(
            parse_map("# only comments\n"),
            Err(HarnessError::EmptyMapFile)
        ));
    }

    #[test]
    fn non_standard_multiset_on_standard_layout_warns() {
        let layout = BoardLayout::standard();
        let m = MapState::new(layout, vec![Plains; 113]).unwrap();
        let loaded = parse_map(&map_to_string(&m)).unwrap();
        assert_eq!(loaded.warnings.len(), 1);
        assert_eq!(loaded.map, m);
    }

    #[test]
    fn round_trip_identity_over_ten_thousand_random_maps() {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..10_000 {
            let rows: Vec<usize> = (0..rng.random_range(1..5))
                .map(|_| rng.random_range(1..7))
                .collect();
            let layout = BoardLayout::new(rows).unwrap();
            let terrains: Vec<TerrainType> = (0..layout.cell_count())
                .map(|_| crate::terrain::ALL_TERRAINS[rng.random_range(0..8)])
                .collect();
            let m = MapState::new(layout, terrains).unwrap();
            assert_eq!(parse_map(&map_to_string(&m)).unwrap().map, m);
        }
    }

    proptest! {
        #[test]
        fn round_trip_identity_over_random_maps(
            rows in proptest::collection::vec(1usize..7, 1..5),
            seed in 0u64..10_000,
        ) {
            let layout = BoardLayout::new(rows).unwrap();
            let n = layout.cell_count();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let terrains: Vec<TerrainType> = (0..n)
                .map(|_| {
                    use rand::Rng;
                    crate::terrain::ALL_TERRAINS[rng.random_range(0..8)]
                })
                .collect();
            let m = MapState::new(layout, terrains).unwrap();
            let loaded = parse_map(&map_to_string(&m)).unwrap();
            prop_assert_eq!(loaded.map, m);
        }
    }
}
