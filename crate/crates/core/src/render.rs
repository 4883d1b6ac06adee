//! ASCII and SVG drawings of two-variable staircases.
//!
//! Both renderers cover the bounding box `(max x-corner + 2) x (max y-corner + 2)`
//! with cell `(a, b)` standing for `x^a y^b`; the output is a pure function of
//! the corner list, so identical ideals render byte-identically.

use std::fmt::Write;

use crate::monideal::Staircase;
use crate::poly::Monomial;

const CELL: u32 = 32;
const MARGIN: u32 = 40;

fn bounding_box(s: &Staircase) -> (u32, u32) {
    (s.max_x() + 2, s.max_y() + 2)
}

/// Rows run from the highest y-exponent down to `y^0`; `#` marks a member of
/// the ideal and `.` a standard monomial.
pub fn staircase_ascii(s: &Staircase) -> String {
    let (w, h) = bounding_box(s);
    let mut out = String::with_capacity(((w + 1) * h) as usize);
    for b in (0..h).rev() {
        for a in 0..w {
            out.push(if s.contains(a, b) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn staircase_svg(s: &Staircase) -> String {
    let (w, h) = bounding_box(s);
    let width = w * CELL + 2 * MARGIN;
    let height = h * CELL + 2 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(out, "  <title>staircase of {}</title>", corner_list(s));
    out.push_str(
        "  <style>.in{fill:#8fb3d9;stroke:#34495e}.std{fill:#ffffff;stroke:#bdc3c7}.corner{fill:#1f3a5f}</style>\n",
    );
    for b in 0..h {
        for a in 0..w {
            let (x, y) = cell_origin(a, b, h);
            let class = if s.contains(a, b) { "in" } else { "std" };
            let _ = writeln!(
                out,
                r#"  <rect class="{class}" x="{x}" y="{y}" width="{CELL}" height="{CELL}" data-x="{a}" data-y="{b}"/>"#
            );
        }
    }
    for &(a, b) in &s.corners {
        let (x, y) = cell_origin(a, b, h);
        let label = Monomial::xy(a, b).to_string();
        let _ = writeln!(
            out,
            r#"  <text class="corner" x="{}" y="{}" text-anchor="middle">{label}</text>"#,
            x + CELL / 2,
            y + CELL / 2 + 4
        );
    }
    for a in 0..w {
        let (x, _) = cell_origin(a, 0, h);
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" text-anchor="middle">{a}</text>"#,
            x + CELL / 2,
            MARGIN + h * CELL + 16
        );
    }
    for b in 0..h {
        let (_, y) = cell_origin(0, b, h);
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" text-anchor="end">{b}</text>"#,
            MARGIN - 8,
            y + CELL / 2 + 4
        );
    }
    out.push_str("</svg>\n");
    out
}

fn cell_origin(a: u32, b: u32, h: u32) -> (u32, u32) {
    (MARGIN + a * CELL, MARGIN + (h - 1 - b) * CELL)
}

fn corner_list(s: &Staircase) -> String {
    let gens: Vec<String> = s
        .corners
        .iter()
        .map(|&(a, b)| Monomial::xy(a, b).to_string())
        .collect();
    format!("&lt;{}&gt;", gens.join(", "))
}
