//! Deterministic SVG rendering of splitting cycles.
//!
//! Each state of a cycle is drawn as one square tile: the unit-square
//! fundamental domain with the two slope curves of the Farey interval
//! `[b/a, d/c]` as straight segments, their crossing smoothed by a pair of
//! short arcs, and the branch weights as labels. On the four-punctured
//! sphere the square is read as a pillowcase and the four orbifold points
//! are marked. The drawing is schematic but fully determined by the cycle
//! data, so fixed inputs always produce identical files.

use num_traits::ToPrimitive;
use std::fmt::Write as _;

use crate::surd::Quad;
use crate::track::{AgolCycle, Surface};

const TILE: f64 = 170.0;
const PAD: f64 = 34.0;
const CAPTION: f64 = 46.0;

fn fmt(v: f64) -> String {
    format!("{v:.4}")
}

/// Segments of the closed slope-`num/den` curve through `(cx, cy)` on the
/// unit square torus, direction `(den, num)`.
fn slope_segments(num: f64, den: f64, cx: f64, cy: f64) -> Vec<((f64, f64), (f64, f64))> {
    if num + den > 128.0 {
        // Too many wraps to draw; show one chord through the base point.
        let t_fwd = [(1.0 - cx) / den.max(1e-9), (1.0 - cy) / num.max(1e-9)]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        let t_back = [cx / den.max(1e-9), cy / num.max(1e-9)]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        return vec![(
            (cx - den * t_back, cy - num * t_back),
            (cx + den * t_fwd, cy + num * t_fwd),
        )];
    }
    let mut cuts: Vec<f64> = vec![0.0, 1.0];
    // Crossing times with vertical and horizontal lattice lines.
    if den > 0.0 {
        let mut k = 0.0;
        loop {
            let t = (k + 1.0 - cx) / den;
            if t >= 1.0 - 1e-12 {
                break;
            }
            if t > 1e-12 {
                cuts.push(t);
            }
            k += 1.0;
        }
    }
    if num > 0.0 {
        let mut k = 0.0;
        loop {
            let t = (k + 1.0 - cy) / num;
            if t >= 1.0 - 1e-12 {
                break;
            }
            if t > 1e-12 {
                cuts.push(t);
            }
            k += 1.0;
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    let mut segments = Vec::new();
    for w in cuts.windows(2) {
        let (t0, t1) = (w[0], w[1]);
        let tm = 0.5 * (t0 + t1);
        let (ox, oy) = ((cx + den * tm).floor(), (cy + num * tm).floor());
        let p0 = (cx + den * t0 - ox, cy + num * t0 - oy);
        let p1 = (cx + den * t1 - ox, cy + num * t1 - oy);
        segments.push((p0, p1));
    }
    segments
}

fn weight_label(v: &Quad) -> String {
    let approx = v.approx_string(5);
    if v.is_rational() {
        v.to_string()
    } else {
        format!("{approx}\u{2248}")
            .trim_end_matches('\u{2248}')
            .to_string()
    }
}

struct Tile<'a> {
    caption: String,
    left_num: f64,
    left_den: f64,
    right_num: f64,
    right_den: f64,
    x: &'a Quad,
    y: &'a Quad,
}

fn endpoint_f64(pair: (&num_bigint::BigInt, &num_bigint::BigInt)) -> (f64, f64) {
    (
        pair.0.to_f64().unwrap_or(f64::MAX),
        pair.1.to_f64().unwrap_or(f64::MAX),
    )
}

fn draw_tile(out: &mut String, surface: Surface, origin_x: f64, tile: &Tile<'_>) {
    let ox = origin_x;
    let oy = PAD;
    let to_px = |p: (f64, f64)| (ox + p.0 * TILE, oy + (1.0 - p.1) * TILE);

    writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="#fffdf7" stroke="#444" stroke-width="1"/>"##,
        fmt(ox),
        fmt(oy),
        fmt(TILE),
        fmt(TILE)
    )
    .unwrap();

    // Base point of both curves; they cross exactly once.
    let (cx, cy) = match surface {
        Surface::Torus => (0.5, 0.5),
        Surface::Sphere4 => (0.25, 0.25),
    };

    let curves = [
        (tile.left_num, tile.left_den, "#c0392b"),
        (tile.right_num, tile.right_den, "#2460a7"),
    ];
    for (num, den, color) in curves {
        // Slope 1/0 degenerates the parametrization; swap roles and mirror.
        let segments = if den == 0.0 {
            slope_segments(0.0, 1.0, cy, cx)
                .into_iter()
                .map(|(p0, p1)| ((p0.1, p0.0), (p1.1, p1.0)))
                .collect()
        } else {
            slope_segments(num, den, cx, cy)
        };
        for (p0, p1) in segments {
            let (x0, y0) = to_px(p0);
            let (x1, y1) = to_px(p1);
            writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="1.6"/>"##,
                fmt(x0),
                fmt(y0),
                fmt(x1),
                fmt(y1)
            )
            .unwrap();
        }
    }

    // Smooth the crossing: two short arcs between the curve directions.
    let norm = |vx: f64, vy: f64| {
        let n = (vx * vx + vy * vy).sqrt();
        (vx / n, vy / n)
    };
    let (ux, uy) = norm(
        if tile.left_den == 0.0 { 0.0 } else { tile.left_den },
        if tile.left_den == 0.0 { 1.0 } else { tile.left_num },
    );
    let (vx, vy) = norm(
        if tile.right_den == 0.0 { 0.0 } else { tile.right_den },
        if tile.right_den == 0.0 { 1.0 } else { tile.right_num },
    );
    let eps = 0.07;
    let (c_px, c_py) = to_px((cx, cy));
    for (sx, sy) in [(1.0, -1.0), (-1.0, 1.0)] {
        let a = to_px((cx + sx * eps * ux, cy + sx * eps * uy));
        let b = to_px((cx + sy * eps * vx, cy + sy * eps * vy));
        writeln!(
            out,
            r##"  <path d="M {} {} Q {} {} {} {}" fill="none" stroke="#1d8348" stroke-width="1.6"/>"##,
            fmt(a.0),
            fmt(a.1),
            fmt(c_px),
            fmt(c_py),
            fmt(b.0),
            fmt(b.1)
        )
        .unwrap();
    }

    if surface == Surface::Sphere4 {
        for (px, py) in [(0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5)] {
            let (mx, my) = to_px((px, py));
            writeln!(
                out,
                r##"  <circle cx="{}" cy="{}" r="2.6" fill="#7d3c98"/>"##,
                fmt(mx),
                fmt(my)
            )
            .unwrap();
        }
    }

    writeln!(
        out,
        r##"  <text x="{}" y="{}" font-size="11" font-family="monospace" fill="#333">{}</text>"##,
        fmt(ox),
        fmt(oy + TILE + 14.0),
        xml_escape(&tile.caption)
    )
    .unwrap();
    writeln!(
        out,
        r##"  <text x="{}" y="{}" font-size="10" font-family="monospace" fill="#c0392b">x = {}</text>"##,
        fmt(ox),
        fmt(oy + TILE + 27.0),
        xml_escape(&weight_label(tile.x))
    )
    .unwrap();
    writeln!(
        out,
        r##"  <text x="{}" y="{}" font-size="10" font-family="monospace" fill="#2460a7">y = {}</text>"##,
        fmt(ox),
        fmt(oy + TILE + 40.0),
        xml_escape(&weight_label(tile.y))
    )
    .unwrap();
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders a splitting cycle as a standalone SVG document: one tile for the
/// initial track and one per step.
pub fn render_cycle_svg(cycle: &AgolCycle) -> String {
    let count = cycle.steps.len() + 1;
    let width = PAD + count as f64 * (TILE + PAD);
    let height = 2.0 * PAD + TILE + CAPTION;

    let mut out = String::new();
    writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"##,
        fmt(width),
        fmt(height),
        fmt(width),
        fmt(height)
    )
    .unwrap();
    writeln!(
        out,
        r##"  <title>splitting cycle of {} on the {}</title>"##,
        xml_escape(&cycle.normal_form.to_string()),
        cycle.surface
    )
    .unwrap();

    let mut tiles: Vec<Tile<'_>> = Vec::with_capacity(count);
    let base = cycle.initial.interval();
    let (ln, ld) = endpoint_f64(base.left_endpoint());
    let (rn, rd) = endpoint_f64(base.right_endpoint());
    tiles.push(Tile {
        caption: format!("start {}", base),
        left_num: ln,
        left_den: ld,
        right_num: rn,
        right_den: rd,
        x: cycle.initial.x(),
        y: cycle.initial.y(),
    });
    for (i, step) in cycle.steps.iter().enumerate() {
        let (ln, ld) = endpoint_f64(step.interval.left_endpoint());
        let (rn, rd) = endpoint_f64(step.interval.right_endpoint());
        tiles.push(Tile {
            caption: format!("{} {} {}", i + 1, step.side, step.interval),
            left_num: ln,
            left_den: ld,
            right_num: rn,
            right_den: rd,
            x: &step.x,
            y: &step.y,
        });
    }

    for (i, tile) in tiles.iter().enumerate() {
        draw_tile(
            &mut out,
            cycle.surface,
            PAD + i as f64 * (TILE + PAD),
            tile,
        );
    }
    writeln!(out, "</svg>").unwrap();
    out
}
