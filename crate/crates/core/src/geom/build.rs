use std::collections::HashMap;

use crate::error::Error;
use crate::geom::space::{apply, compose, identity, Isometry, Model, Point};
use crate::params::TilingParams;

/// Two candidate positions closer than this are the same point.
pub const SAME_POINT_TOL: f64 = 1e-5;
/// Distinct points closer than this make dedup unreliable; building such
/// a tessellation is refused rather than risking a wrong identification.
pub const MIN_SEPARATION: f64 = 1e-4;
/// Hash grid cell size; a 3x3 block of cells covers every candidate
/// within MIN_SEPARATION of a query point.
const GRID_CELL: f64 = 1e-3;

/// Deepest generation buildable at double precision before dedup margins
/// erode (hyperbolic coordinates grow exponentially with the generation).
pub const HYPERBOLIC_CEILING: u32 = 9;
/// Euclidean coordinates grow linearly, so the ceiling is generous.
pub const EUCLIDEAN_CEILING: u32 = 60;

/// Generation ceiling for the given parameters; the TESSEL_CEILING
/// environment variable overrides the default when set.
pub fn generation_ceiling(params: TilingParams) -> u32 {
    if let Ok(raw) = std::env::var("TESSEL_CEILING") {
        if let Ok(v) = raw.trim().parse::<u32>() {
            return v;
        }
    }
    match Model::of(params) {
        Model::Euclidean => EUCLIDEAN_CEILING,
        Model::Hyperbolic => HYPERBOLIC_CEILING,
    }
}

/// Spatial dedup index over ambient (x, y). The z coordinate is a
/// function of (x, y) in both models, so plane distance is a faithful
/// proxy for ambient distance.
struct PointGrid {
    points: Vec<[f64; 2]>,
    cells: HashMap<(i64, i64), Vec<usize>>,
}

enum Probe {
    Known(usize),
    New,
}

impl PointGrid {
    fn new() -> Self {
        PointGrid { points: Vec::new(), cells: HashMap::new() }
    }

    fn key(p: [f64; 2]) -> (i64, i64) {
        ((p[0] / GRID_CELL).floor() as i64, (p[1] / GRID_CELL).floor() as i64)
    }

    /// Nearest stored point within the 3x3 cell block around `p`.
    fn nearest(&self, p: [f64; 2]) -> Option<(usize, f64)> {
        let (cx, cy) = Self::key(p);
        let mut best: Option<(usize, f64)> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(ids) = self.cells.get(&(cx + dx, cy + dy)) else { continue };
                for &id in ids {
                    let q = self.points[id];
                    let d = ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt();
                    if best.map_or(true, |(_, bd)| d < bd) {
                        best = Some((id, d));
                    }
                }
            }
        }
        best
    }

    /// Identify `p` with a stored point or insert it as a new one.
    /// Distances in the dead zone between SAME_POINT_TOL and
    /// MIN_SEPARATION are ambiguous and reported as an error.
    fn probe_or_insert(&mut self, p: [f64; 2], max_gen: u32) -> Result<Probe, Error> {
        match self.nearest(p) {
            Some((id, d)) if d <= SAME_POINT_TOL => Ok(Probe::Known(id)),
            Some((_, d)) if d <= MIN_SEPARATION => {
                Err(Error::ToleranceCollision { max_gen, min_dist: d })
            }
            _ => {
                let id = self.points.len();
                self.points.push(p);
                self.cells.entry(Self::key(p)).or_default().push(id);
                Ok(Probe::New)
            }
        }
    }
}

/// One face of the tessellation.
pub struct Tile {
    /// Dual-graph distance from the root face.
    pub gen: u32,
    /// Isometry carrying the root face onto this one. Faces are never
    /// positioned by chained pointwise reflection: composing the parent
    /// isometry with a fixed root-edge generator keeps the relative
    /// rounding error near machine epsilon at every depth.
    pub isometry: Isometry,
    /// Whether `isometry` reverses orientation (odd reflection count).
    pub reversed: bool,
    pub center: Point,
    /// Corner vertex ids, counterclockwise around the center.
    pub corners: Vec<usize>,
}

/// A tessellation vertex together with the faces meeting it.
pub struct TilingVertex {
    pub pos: Point,
    /// Incident faces in creation order (unsorted).
    pub tiles: Vec<usize>,
}

/// Explicitly constructed tessellation: all faces at dual-graph distance
/// at most `max_gen` from the root face, with full corner data.
pub struct Tessellation {
    pub params: TilingParams,
    pub model: Model,
    pub max_gen: u32,
    pub tiles: Vec<Tile>,
    pub vertices: Vec<TilingVertex>,
    /// `neighbors[t][e]` is the face sharing the edge from corner `e` to
    /// corner `e + 1` of face `t`, if it was built.
    pub neighbors: Vec<Vec<Option<usize>>>,
}

impl Tessellation {
    pub fn build(params: TilingParams, max_gen: u32) -> Result<Tessellation, Error> {
        let ceiling = generation_ceiling(params);
        if max_gen > ceiling {
            return Err(Error::CeilingExceeded {
                p: params.p(),
                q: params.q(),
                requested: max_gen,
                ceiling,
            });
        }
        let model = Model::of(params);
        let p = params.p() as usize;

        let root_corners = model.root_polygon(params.p(), params.q());
        // Edge generators: reflection across root edge j. A face whose
        // isometry is M has its copy of edge j on the geodesic through
        // its own corners, and M * gen[j] is the neighbor across it.
        let generators: Vec<Isometry> = (0..p)
            .map(|j| model.reflection(&root_corners[j], &root_corners[(j + 1) % p]))
            .collect();

        let mut tiles: Vec<Tile> = Vec::new();
        let mut vertices: Vec<TilingVertex> = Vec::new();
        let mut vertex_grid = PointGrid::new();
        let mut center_grid = PointGrid::new();

        let place = |iso: Isometry,
                         gen: u32,
                         reversed: bool,
                         tiles: &mut Vec<Tile>,
                         vertices: &mut Vec<TilingVertex>,
                         vertex_grid: &mut PointGrid,
                         center_grid: &mut PointGrid|
         -> Result<bool, Error> {
            let center = model.renormalize(apply(&iso, &model.origin()));
            // Dedup keys are ambient (x, y): distinct points keep a
            // depth-independent separation there, unlike in the Klein
            // disk where spacing shrinks exponentially.
            match center_grid.probe_or_insert([center[0], center[1]], max_gen)? {
                Probe::Known(_) => return Ok(false),
                Probe::New => {}
            }
            let tile_id = tiles.len();
            let mut corner_ids = Vec::with_capacity(p);
            let mut positions: Vec<Point> = root_corners
                .iter()
                .map(|c| model.renormalize(apply(&iso, c)))
                .collect();
            if reversed {
                positions.reverse();
            }
            for pos in positions {
                let id = match vertex_grid.probe_or_insert([pos[0], pos[1]], max_gen)? {
                    Probe::Known(id) => id,
                    Probe::New => {
                        vertices.push(TilingVertex { pos, tiles: Vec::new() });
                        vertices.len() - 1
                    }
                };
                vertices[id].tiles.push(tile_id);
                corner_ids.push(id);
            }
            tiles.push(Tile { gen, isometry: iso, reversed, center, corners: corner_ids });
            Ok(true)
        };

        place(
            identity(),
            0,
            false,
            &mut tiles,
            &mut vertices,
            &mut vertex_grid,
            &mut center_grid,
        )?;

        let mut idx = 0;
        while idx < tiles.len() {
            if tiles[idx].gen < max_gen {
                let (iso, gen, reversed) = (tiles[idx].isometry, tiles[idx].gen, tiles[idx].reversed);
                for g in &generators {
                    place(
                        compose(&iso, g),
                        gen + 1,
                        !reversed,
                        &mut tiles,
                        &mut vertices,
                        &mut vertex_grid,
                        &mut center_grid,
                    )?;
                }
            }
            idx += 1;
        }

        // Edge adjacency from shared corner pairs.
        let mut edge_map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (t, tile) in tiles.iter().enumerate() {
            for e in 0..p {
                let a = tile.corners[e];
                let b = tile.corners[(e + 1) % p];
                edge_map.entry((a.min(b), a.max(b))).or_default().push(t);
            }
        }
        let mut neighbors = Vec::with_capacity(tiles.len());
        for (t, tile) in tiles.iter().enumerate() {
            let mut row = Vec::with_capacity(p);
            for e in 0..p {
                let a = tile.corners[e];
                let b = tile.corners[(e + 1) % p];
                let faces = &edge_map[&(a.min(b), a.max(b))];
                if faces.len() > 2 {
                    return Err(Error::Geometry(format!(
                        "edge ({a}, {b}) is shared by {} faces",
                        faces.len()
                    )));
                }
                row.push(faces.iter().copied().find(|&o| o != t));
            }
            neighbors.push(row);
        }

        Ok(Tessellation { params, model, max_gen, tiles, vertices, neighbors })
    }

    /// Number of faces at each generation 0..=max_gen.
    pub fn tile_count_by_gen(&self) -> Vec<u64> {
        let mut counts = vec![0u64; self.max_gen as usize + 1];
        for tile in &self.tiles {
            counts[tile.gen as usize] += 1;
        }
        counts
    }

    /// True generation of the vertex: the minimum over ALL incident
    /// faces of the full tessellation. Faces are built breadth-first, so
    /// the minimum over built faces is already exact for every vertex
    /// that has at least one built face.
    pub fn vertex_gen(&self, v: usize) -> u32 {
        self.vertices[v].tiles.iter().map(|&t| self.tiles[t].gen).min().unwrap()
    }

    /// A vertex is complete when every face around it has been built.
    pub fn vertex_complete(&self, v: usize) -> bool {
        self.vertices[v].tiles.len() == self.params.q() as usize
    }

    /// Incident faces in counterclockwise order around the vertex,
    /// starting from an arbitrary one.
    pub fn vertex_ring(&self, v: usize) -> Vec<usize> {
        let vk = self.model.klein(&self.vertices[v].pos);
        let mut ring: Vec<(f64, usize)> = self.vertices[v]
            .tiles
            .iter()
            .map(|&t| {
                let ck = self.model.klein(&self.tiles[t].center);
                ((ck[1] - vk[1]).atan2(ck[0] - vk[0]), t)
            })
            .collect();
        ring.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        ring.into_iter().map(|(_, t)| t).collect()
    }
}
