//! Terrain types, the cyclic terraforming wheel, and spade distances.
//!
//! Terra Mystica has seven land terrains arranged on a wheel plus River.
//! Converting a hex from one land terrain to another costs spades equal to
//! the minimal cyclic distance between the two positions on the wheel.
//! River hexes are not terraformable and have no wheel position.

use std::fmt;

use thiserror::Error;

/// Errors raised by terrain operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TerrainError {
    /// Spade distance was requested for River, which has no wheel position.
    #[error("{0} is not terraformable: only land terrains sit on the wheel")]
    NotTerraformable(TerrainType),
    /// A character outside the 8-letter terrain alphabet.
    #[error("unknown terrain code '{0}'")]
    UnknownCode(char),
}

/// One of the seven land terrains, or River.
///
/// Land variants are declared in wheel order, so the enum discriminant of a
/// land terrain is its position on the terraforming wheel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TerrainType {
    Plains,
    Swamp,
    Lakes,
    Forest,
    Mountains,
    Wasteland,
    Desert,
    River,
}

use TerrainType::*;

/// All eight terrain values, land first, in wheel order.
pub const ALL_TERRAINS: [TerrainType; 8] = [
    Plains, Swamp, Lakes, Forest, Mountains, Wasteland, Desert, River,
];

/// The seven land terrains in wheel order: Plains → Swamp → Lakes → Forest →
/// Mountains → Wasteland → Desert, wrapping back to Plains.
pub const LAND_TERRAINS: [TerrainType; 7] =
    [Plains, Swamp, Lakes, Forest, Mountains, Wasteland, Desert];

/// Number of positions on the terraforming wheel.
pub const WHEEL_SIZE: u32 = 7;

impl TerrainType {
    /// True for the seven terraformable terrains.
    pub fn is_land(self) -> bool {
        self != River
    }

    /// True for River.
    pub fn is_river(self) -> bool {
        self == River
    }

    /// Position on the terraforming wheel (0..=6), or `None` for River.
    pub fn wheel_position(self) -> Option<u32> {
        if self.is_land() {
            Some(self as u32)
        } else {
            None
        }
    }

    /// Single-character code used in map files: P, S, L, F, M, W, D, R.
    pub fn code(self) -> char {
        match self {
            Plains => 'P',
            Swamp => 'S',
            Lakes => 'L',
            Forest => 'F',
            Mountains => 'M',
            Wasteland => 'W',
            Desert => 'D',
            River => 'R',
        }
    }

    /// Parses a terrain code, case-insensitively.
    pub fn parse_code(ch: char) -> Result<TerrainType, TerrainError> {
        match ch.to_ascii_uppercase() {
            'P' => Ok(Plains),
            'S' => Ok(Swamp),
            'L' => Ok(Lakes),
            'F' => Ok(Forest),
            'M' => Ok(Mountains),
            'W' => Ok(Wasteland),
            'D' => Ok(Desert),
            'R' => Ok(River),
            _ => Err(TerrainError::UnknownCode(ch)),
        }
    }

    /// Display name, matching the physical board.
    pub fn name(self) -> &'static str {
        match self {
            Plains => "Plains",
            Swamp => "Swamp",
            Lakes => "Lakes",
            Forest => "Forest",
            Mountains => "Mountains",
            Wasteland => "Wasteland",
            Desert => "Desert",
            River => "River",
        }
    }
}

impl fmt::Display for TerrainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of spades needed to terraform `a` into `b`: the minimal cyclic
/// distance between their wheel positions, in 0..=3.
///
/// Errors if either argument is River.
pub fn spade_distance(a: TerrainType, b: TerrainType) -> Result<u32, TerrainError> {
    let pa = a
        .wheel_position()
        .ok_or(TerrainError::NotTerraformable(a))?;
    let pb = b
        .wheel_position()
        .ok_or(TerrainError::NotTerraformable(b))?;
    Ok(wheel_distance(pa, pb))
}

/// Cyclic distance between two wheel positions.
pub(crate) fn wheel_distance(pa: u32, pb: u32) -> u32 {
    let d = pa.abs_diff(pb);
    d.min(WHEEL_SIZE - d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for t in ALL_TERRAINS {
            assert_eq!(TerrainType::parse_code(t.code()), Ok(t));
            assert_eq!(
                TerrainType::parse_code(t.code().to_ascii_lowercase()),
                Ok(t)
            );
        }
    }

    #[test]
    fn unknown_code_is_rejected() {
        assert_eq!(
            TerrainType::parse_code('X'),
            Err(TerrainError::UnknownCode('X'))
        );
        assert_eq!(
            TerrainType::parse_code('#'),
            Err(TerrainError::UnknownCode('#'))
        );
    }

    #[test]
    fn mountains_to_desert_is_two_spades() {
        assert_eq!(spade_distance(Mountains, Desert), Ok(2));
        assert_eq!(spade_distance(Desert, Mountains), Ok(2));
    }

    #[test]
    fn plains_to_desert_wraps_around() {
        assert_eq!(spade_distance(Plains, Desert), Ok(1));
    }

    #[test]
    fn distance_to_self_is_zero() {
        assert_eq!(spade_distance(Forest, Forest), Ok(0));
    }

    #[test]
    fn river_is_not_terraformable() {
        assert_eq!(
            spade_distance(River, Plains),
            Err(TerrainError::NotTerraformable(River))
        );
        assert_eq!(
            spade_distance(Plains, River),
            Err(TerrainError::NotTerraformable(River))
        );
    }

    #[test]
    fn spade_distance_is_a_metric() {
        for a in LAND_TERRAINS {
            for b in LAND_TERRAINS {
                let dab = spade_distance(a, b).unwrap();
                assert_eq!(dab, spade_distance(b, a).unwrap(), "symmetry {a} {b}");
                assert_eq!(dab == 0, a == b, "identity {a} {b}");
                for c in LAND_TERRAINS {
                    let dac = spade_distance(a, c).unwrap();
                    let dcb = spade_distance(c, b).unwrap();
                    assert!(dab <= dac + dcb, "triangle {a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn distance_range_and_neighbor_count() {
        let mut max = 0;
        for a in LAND_TERRAINS {
            let at_one = LAND_TERRAINS
                .iter()
                .filter(|&&b| spade_distance(a, b).unwrap() == 1)
                .count();
            assert_eq!(at_one, 2, "{a} must have exactly two wheel neighbors");
            for b in LAND_TERRAINS {
                max = max.max(spade_distance(a, b).unwrap());
            }
        }
        assert_eq!(max, 3);
    }
}
