//! SVG rendering of a tiling ball.
//!
//! Hyperbolic tilings are drawn in the Poincare disk, where the hyperboloid
//! point `(x, y, z)` maps to `(x/(1+z), y/(1+z))`; Euclidean tilings are
//! drawn in the plane as-is. Tile edges are straight chords: at the depths
//! the ceiling allows this stays visually faithful, and it keeps the output
//! small and byte-deterministic.

use std::collections::HashMap;
use std::fmt::Write as _;

use pqtiling::geom::build::Tessellation;
use pqtiling::geom::space::Point;
use pqtiling::geom::types::{successor_arc_table, TypedTessellation};
use pqtiling::Curvature;

use crate::Failure;

/// Fixed fill palette, cycled by generation or by letter index.
const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b4", "#59a14f", "#edc949", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorBy {
    Gen,
    Type,
}

fn project(curvature: Curvature, p: &Point) -> (f64, f64) {
    match curvature {
        Curvature::Euclidean => (p[0], p[1]),
        Curvature::Hyperbolic => (p[0] / (1.0 + p[2]), p[1] / (1.0 + p[2])),
    }
}

/// Renders faces of generation `<= draw_gen` as one `<path>` each. `typed`
/// must be present when coloring by type or overlaying the production tree.
pub fn svg(
    tess: &Tessellation,
    typed: Option<&TypedTessellation>,
    draw_gen: u32,
    color: ColorBy,
    tree: bool,
) -> Result<String, Failure> {
    let curvature = tess.params.curvature();
    let drawn: Vec<usize> =
        (0..tess.tiles.len()).filter(|&t| tess.tiles[t].gen <= draw_gen).collect();

    // Bounding box over projected corners, y flipped for SVG.
    let mut min = (f64::MAX, f64::MAX);
    let mut max = (f64::MIN, f64::MIN);
    let mut bound = |x: f64, y: f64| {
        min.0 = min.0.min(x);
        min.1 = min.1.min(y);
        max.0 = max.0.max(x);
        max.1 = max.1.max(y);
    };
    if curvature == Curvature::Hyperbolic {
        bound(-1.0, -1.0);
        bound(1.0, 1.0);
    }
    for &t in &drawn {
        for &c in &tess.tiles[t].corners {
            let (x, y) = project(curvature, &tess.vertices[c].pos);
            bound(x, -y);
        }
    }
    let extent = (max.0 - min.0).max(max.1 - min.1);
    let margin = extent * 0.03;
    let stroke = extent / 500.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" \
         viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        min.0 - margin,
        min.1 - margin,
        (max.0 - min.0) + 2.0 * margin,
        (max.1 - min.1) + 2.0 * margin,
    );
    if curvature == Curvature::Hyperbolic {
        let _ = writeln!(
            out,
            "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" \
             stroke-width=\"{stroke:.6}\"/>"
        );
    }

    let alphabet_len = typed.map_or(0, |ty| ty.subst.alphabet().len());
    for &t in &drawn {
        let tile = &tess.tiles[t];
        let fill = match color {
            ColorBy::Gen => PALETTE[tile.gen as usize % PALETTE.len()],
            ColorBy::Type => {
                let ty = typed.expect("type coloring requires classification");
                match ty.tile_type[t] {
                    Some(l) => {
                        let i = ty.subst.alphabet_index(l).unwrap_or(alphabet_len);
                        PALETTE[i % PALETTE.len()]
                    }
                    None => "#dddddd",
                }
            }
        };
        let mut d = String::new();
        for (i, &c) in tile.corners.iter().enumerate() {
            let (x, y) = project(curvature, &tess.vertices[c].pos);
            let _ = write!(d, "{}{:.6},{:.6}", if i == 0 { "M" } else { " L" }, x, -y);
        }
        d.push_str(" Z");
        let _ = writeln!(
            out,
            "  <path d=\"{d}\" fill=\"{fill}\" fill-opacity=\"0.85\" stroke=\"#333333\" \
             stroke-width=\"{stroke:.6}\"/>"
        );
    }

    if tree {
        let ty = typed.expect("tree overlay requires classification");
        let arcs: HashMap<_, _> = successor_arc_table(ty.subst).into_iter().collect();
        for &t in &drawn {
            let tile = &tess.tiles[t];
            if tile.gen >= draw_gen {
                continue;
            }
            let letter = match ty.tile_type[t] {
                Some(l) => l,
                None => continue,
            };
            let arc = ty.child_arc(t).map_err(|e| Failure {
                code: 1,
                message: format!("production tree overlay failed at face {t}: {e}"),
            })?;
            let (px, py) = project(curvature, &tile.center);
            for (&child, (_, owned)) in arc.iter().zip(&arcs[&letter]) {
                if !owned {
                    continue;
                }
                let (cx, cy) = project(curvature, &tess.tiles[child].center);
                let _ = writeln!(
                    out,
                    "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" \
                     stroke=\"#000000\" stroke-width=\"{:.6}\" stroke-linecap=\"round\"/>",
                    px,
                    -py,
                    cx,
                    -cy,
                    stroke * 1.5,
                );
            }
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
