//! Standalone SVG drawings of lattice paths.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::paths::{markers_of_levels, LatticePath, MotzkinStep, Step};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per lattice unit.
    pub unit: u32,
    /// Label the last level-one point `X` and rightmost maximum `R`.
    pub markers: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            unit: 40,
            markers: false,
        }
    }
}

const MARGIN: i64 = 24;

/// Draws the unit grid, one element per step (diagonal lines for up/down,
/// a horizontal line for straight, a sinusoid for wavy) and the lattice
/// points. Marker labels need a nonempty path of positive height whose
/// levels stay nonnegative.
pub fn render_svg(path: &LatticePath<MotzkinStep>, options: &RenderOptions) -> Result<String> {
    let unit = options.unit.max(4) as i64;
    let levels = path.levels();
    let top = path.height().max(1) as i64;
    let bottom = path.min_level().min(0) as i64;
    let width = path.len().max(1) as i64 * unit + 2 * MARGIN;
    let height = (top - bottom) * unit + 2 * MARGIN;
    let px = |x: usize| MARGIN + x as i64 * unit;
    let py = |level: i32| MARGIN + (top - level as i64) * unit;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(
        svg,
        r##"<g class="grid" stroke="#d0d0d0" stroke-width="1">"##
    );
    for x in 0..=path.len().max(1) {
        let _ = writeln!(
            svg,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(top as i32),
            py(bottom as i32)
        );
    }
    for level in bottom..=top {
        let y = py(level as i32);
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#,
            px(0),
            px(path.len().max(1))
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r##"<line class="axis" x1="{0}" y1="{1}" x2="{2}" y2="{1}" stroke="#808080" stroke-width="2"/>"##,
        px(0),
        py(0),
        px(path.len().max(1))
    );

    let _ = writeln!(
        svg,
        r##"<g class="path" stroke="#1f3a93" stroke-width="3" fill="none" stroke-linecap="round">"##
    );
    for (i, step) in path.steps().iter().enumerate() {
        let (x0, y0, x1, y1) = (px(i), py(levels[i]), px(i + 1), py(levels[i + 1]));
        match step {
            MotzkinStep::Wavy => {
                let amp = unit / 6;
                let q = unit / 4;
                let _ = writeln!(
                    svg,
                    r#"<path class="step wavy" d="M {x0} {y0} Q {} {} {} {y0} T {x1} {y1}"/>"#,
                    x0 + q,
                    y0 - amp,
                    x0 + 2 * q
                );
            }
            _ => {
                let class = match step {
                    MotzkinStep::Up => "up",
                    MotzkinStep::Down => "down",
                    _ => "straight",
                };
                let _ = writeln!(
                    svg,
                    r#"<line class="step {class}" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>"#
                );
            }
        }
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r##"<g class="points" fill="#1f3a93">"##);
    for (x, &level) in levels.iter().enumerate() {
        let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="3"/>"#, px(x), py(level));
    }
    let _ = writeln!(svg, "</g>");

    if options.markers {
        if path.is_empty() || !path.is_nonnegative() || path.steps().iter().any(|s| s.is_level()) {
            return Err(Error::Precondition(
                "markers need a nonempty nonnegative up/down path".into(),
            ));
        }
        let mk = markers_of_levels(levels)?;
        let _ = writeln!(
            svg,
            r##"<g class="markers" fill="#c0392b" font-family="sans-serif" font-size="14">"##
        );
        for (label, x) in [("X", mk.last_level_one), ("R", mk.rightmost_max)] {
            let (cx, cy) = (px(x), py(levels[x]));
            let _ = writeln!(
                svg,
                r#"<circle class="marker" data-label="{label}" data-x="{x}" cx="{cx}" cy="{cy}" r="5"/>"#
            );
            let _ = writeln!(
                svg,
                r#"<text class="marker-label" data-x="{x}" x="{}" y="{}">{label}</text>"#,
                cx + 6,
                cy - 8
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
