//! ASCII and SVG views of a map.

use std::fmt::Write as _;

use crate::board::MapState;
use crate::terrain::TerrainType;

/// Output format for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Renders a map as text in the requested format.
pub fn render(m: &MapState, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(m),
        RenderFormat::Svg => render_svg(m),
    }
}

/// One staggered text line per row: codes separated by spaces, odd rows
/// indented one column so the stagger is visible.
pub fn render_ascii(m: &MapState) -> String {
    let mut out = String::new();
    let mut index = 0;
    for (row, &len) in m.layout().row_lengths().iter().enumerate() {
        if row % 2 == 1 {
            out.push(' ');
        }
        for col in 0..len {
            if col > 0 {
                out.push(' ');
            }
            out.push(m.terrain_at(index).code());
            index += 1;
        }
        out.push('\n');
    }
    out
}

fn fill_color(t: TerrainType) -> &'static str {
    match t {
        TerrainType::Plains => "#8b5e3c",    // brown
        TerrainType::Swamp => "#333333",     // black
        TerrainType::Lakes => "#1f5fbf",     // blue
        TerrainType::Forest => "#2e8b57",    // green
        TerrainType::Mountains => "#8c8c8c", // grey
        TerrainType::Wasteland => "#c1440e", // red
        TerrainType::Desert => "#e8c547",    // yellow
        TerrainType::River => "#8ecbe8",     // lighter river blue
    }
}

const HEX_SIZE: f64 = 20.0;
const MARGIN: f64 = 10.0;
const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// A standalone SVG document with one pointy-top hexagon per cell, filled by
/// terrain. Odd rows are shifted right by half a hex width.
pub fn render_svg(m: &MapState) -> String {
    let layout = m.layout();
    let hex_width = SQRT_3 * HEX_SIZE;
    let max_row_len = layout.row_lengths().iter().max().copied().unwrap_or(0);
    let doc_width = MARGIN * 2.0 + hex_width * (max_row_len as f64 + 0.5);
    let doc_height =
        MARGIN * 2.0 + 1.5 * HEX_SIZE * (layout.row_count() as f64 - 1.0) + 2.0 * HEX_SIZE;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{doc_width:.0}\" height=\"{doc_height:.0}\" viewBox=\"0 0 {doc_width:.0} {doc_height:.0}\">"
    );

    let mut index = 0;
    for (row, &len) in layout.row_lengths().iter().enumerate() {
        for col in 0..len {
            let stagger = if row % 2 == 1 { 0.5 } else { 0.0 };
            let cx = MARGIN + hex_width * (col as f64 + stagger) + hex_width / 2.0;
            let cy = MARGIN + 1.5 * HEX_SIZE * row as f64 + HEX_SIZE;
            let points = hexagon_points(cx, cy);
            let _ = writeln!(
                out,
                "  <polygon points=\"{points}\" fill=\"{}\" stroke=\"#222222\" stroke-width=\"1\"/>",
                fill_color(m.terrain_at(index))
            );
            index += 1;
        }
    }
    out.push_str("</svg>\n");
    out
}

/// The six corners of a pointy-top hexagon centered at (cx, cy).
fn hexagon_points(cx: f64, cy: f64) -> String {
    let mut points = String::new();
    for k in 0..6 {
        let angle = std::f64::consts::PI / 180.0 * (60.0 * k as f64 - 30.0);
        if k > 0 {
            points.push(' ');
        }
        let _ = write!(
            points,
            "{:.2},{:.2}",
            cx + HEX_SIZE * angle.cos(),
            cy + HEX_SIZE * angle.sin()
        );
    }
    points
}
