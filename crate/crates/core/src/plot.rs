//! SVG lattice diagram of a two-dimensional semigroup.

use std::fmt::Write as _;

use crate::error::{GnsError, Result};
use crate::gapset::Gns;

const CELL: u32 = 40;
const MARGIN: u32 = 30;
const RADIUS: u32 = 6;

/// Draws the box `[0, c] × [0, c]` with elements black, gaps red and
/// special gaps circled. Only `d = 2` is supported.
pub fn svg_plot(s: &Gns) -> Result<String> {
    if s.dim() != 2 {
        return Err(GnsError::DimensionMismatch {
            expected: 2,
            found: s.dim(),
        });
    }
    let c = s.corner();
    let (w, h) = (c.coords()[0], c.coords()[1]);
    let special = s.special_gaps();
    let width = 2 * MARGIN + w * CELL;
    let height = 2 * MARGIN + h * CELL;
    // y grows downwards in SVG, so the second coordinate is flipped
    let at = |x: u32, y: u32| (MARGIN + x * CELL, height - MARGIN - y * CELL);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(out, "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>");
    let (x0, y0) = at(0, 0);
    let (x1, y1) = at(w, h);
    let _ = writeln!(out, "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"gray\"/>");
    let _ = writeln!(out, "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"gray\"/>");
    for x in 0..=w {
        for y in 0..=h {
            let p = crate::point::Point::from([x, y]);
            let (cx, cy) = at(x, y);
            let fill = if s.is_gap(&p) { "red" } else { "black" };
            let _ = writeln!(out, "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{RADIUS}\" fill=\"{fill}\"/>");
            if special.contains(&p) {
                let r = RADIUS * 2;
                let _ = writeln!(
                    out,
                    "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r}\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>"
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
