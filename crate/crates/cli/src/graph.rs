//! JSON dump of the dual graph of a tiling ball.
//!
//! The dual graph's vertices are the tiles, placed at their center
//! coordinates; its edges join tiles sharing a tile edge; its faces are the
//! counterclockwise tile rings around fully surrounded tiling vertices.
//! Field order is fixed and floats carry 17 significant digits, so equal
//! inputs produce byte-identical output.

use std::fmt::Write as _;

use pqtiling::geom::build::Tessellation;
use pqtiling::Curvature;

use crate::emit::f17;

pub fn dump(tess: &Tessellation) -> String {
    let hyperbolic = tess.params.curvature() == Curvature::Hyperbolic;
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"params\":{{\"p\":{},\"q\":{}}},\"max_gen\":{},\"vertices\":[",
        tess.params.p(),
        tess.params.q(),
        tess.max_gen
    );
    for (t, tile) in tess.tiles.iter().enumerate() {
        if t > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"id\":{t},\"gen\":{},\"x\":{},\"y\":{}",
            tile.gen,
            f17(tile.center[0]),
            f17(tile.center[1])
        );
        if hyperbolic {
            let _ = write!(out, ",\"z\":{}", f17(tile.center[2]));
        }
        out.push('}');
    }
    out.push_str("],\"edges\":[");
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (t, row) in tess.neighbors.iter().enumerate() {
        for u in row.iter().flatten() {
            if *u > t {
                edges.push((t, *u));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    for (i, (a, b)) in edges.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "[{a},{b}]");
    }
    out.push_str("],\"faces\":[");
    let mut first = true;
    for v in 0..tess.vertices.len() {
        if !tess.vertex_complete(v) {
            continue;
        }
        if !first {
            out.push(',');
        }
        first = false;
        let ring: Vec<String> = tess.vertex_ring(v).iter().map(|t| t.to_string()).collect();
        let _ = write!(out, "[{}]", ring.join(","));
    }
    out.push_str("]}\n");
    out
}
