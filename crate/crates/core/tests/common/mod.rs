//! Definition-level oracle used by the acceptance suite.
//!
//! Everything here re-derives the board rules from scratch — adjacency from
//! the stagger offsets, spade costs from a written-out wheel table, each
//! requirement by direct enumeration over coordinate pairs — sharing no code
//! with the library it checks.

pub type Coord = (usize, usize);

/// Neighbors of a coordinate under the stagger rule: even rows aligned
/// left, odd rows shifted right by half a hex.
pub fn naive_neighbors(rows: &[usize], (r, c): Coord) -> Vec<Coord> {
    let deltas: [(isize, isize); 6] = if r % 2 == 0 {
        [(0, -1), (0, 1), (-1, -1), (-1, 0), (1, -1), (1, 0)]
    } else {
        [(0, -1), (0, 1), (-1, 0), (-1, 1), (1, 0), (1, 1)]
    };
    deltas
        .iter()
        .filter_map(|&(dr, dc)| {
            let nr = r as isize + dr;
            let nc = c as isize + dc;
            if nr < 0 || nc < 0 {
                return None;
            }
            let (nr, nc) = (nr as usize, nc as usize);
            (nr < rows.len() && nc < rows[nr]).then_some((nr, nc))
        })
        .collect()
}

pub fn naive_coords(rows: &[usize]) -> Vec<Coord> {
    let mut coords = Vec::new();
    for (r, &len) in rows.iter().enumerate() {
        for c in 0..len {
            coords.push((r, c));
        }
    }
    coords
}

pub fn naive_index(rows: &[usize], (r, c): Coord) -> usize {
    rows[..r].iter().sum::<usize>() + c
}

/// Wheel order and the full pairwise spade-cost table of the published
/// terraforming wheel, written out literally.
pub const WHEEL: [char; 7] = ['P', 'S', 'L', 'F', 'M', 'W', 'D'];

pub const SPADE_TABLE: [[u32; 7]; 7] = [
    [0, 1, 2, 3, 3, 2, 1],
    [1, 0, 1, 2, 3, 3, 2],
    [2, 1, 0, 1, 2, 3, 3],
    [3, 2, 1, 0, 1, 2, 3],
    [3, 3, 2, 1, 0, 1, 2],
    [2, 3, 3, 2, 1, 0, 1],
    [1, 2, 3, 3, 2, 1, 0],
];

pub fn wheel_pos(ch: char) -> Option<usize> {
    WHEEL.iter().position(|&w| w == ch)
}

pub fn naive_req1(rows: &[usize], cells: &[char]) -> u32 {
    let coords = naive_coords(rows);
    let mut count = 0;
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if naive_neighbors(rows, coords[i]).contains(&coords[j])
                && cells[i] != 'R'
                && cells[j] != 'R'
                && cells[i] == cells[j]
            {
                count += 1;
            }
        }
    }
    count
}

pub fn naive_req2(rows: &[usize], cells: &[char]) -> u32 {
    let coords = naive_coords(rows);
    let mut count = 0;
    for i in 0..coords.len() {
        if cells[i] != 'R' {
            continue;
        }
        let river_neighbors = naive_neighbors(rows, coords[i])
            .into_iter()
            .filter(|&n| cells[naive_index(rows, n)] == 'R')
            .count();
        if river_neighbors == 0 || river_neighbors > 3 {
            count += 1;
        }
    }
    count
}

pub fn naive_req3(rows: &[usize], cells: &[char]) -> u32 {
    let coords = naive_coords(rows);
    let mut seen = vec![false; coords.len()];
    let mut components = 0u32;
    for start in 0..coords.len() {
        if cells[start] != 'R' || seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for n in naive_neighbors(rows, coords[i]) {
                let j = naive_index(rows, n);
                if cells[j] == 'R' && !seen[j] {
                    seen[j] = true;
                    queue.push(j);
                }
            }
        }
    }
    components.saturating_sub(1)
}

pub fn naive_req4(rows: &[usize], cells: &[char]) -> u32 {
    let coords = naive_coords(rows);
    let mut count = 0;
    for i in 0..coords.len() {
        let Some(pi) = wheel_pos(cells[i]) else {
            continue;
        };
        let satisfied = naive_neighbors(rows, coords[i]).into_iter().any(|n| {
            wheel_pos(cells[naive_index(rows, n)]).is_some_and(|pj| SPADE_TABLE[pi][pj] == 1)
        });
        if !satisfied {
            count += 1;
        }
    }
    count
}

/// All row-length lists (compositions) whose cells total 1..=max_cells.
pub fn all_layouts_up_to(max_cells: usize) -> Vec<Vec<usize>> {
    let mut layouts = Vec::new();
    for n in 1..=max_cells {
        for mask in 0u32..(1 << (n - 1)) {
            let mut rows = Vec::new();
            let mut len = 1;
            for bit in 0..n - 1 {
                if mask & (1 << bit) != 0 {
                    rows.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            rows.push(len);
            layouts.push(rows);
        }
    }
    layouts
}
