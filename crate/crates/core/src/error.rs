use thiserror::Error;

/// Errors surfaced by parameter validation, word generation and the
/// geometric engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `(p-2)(q-2) < 4`: spherical or degenerate parameters, no plane tiling.
    #[error("no plane tiling for p={p}, q={q}: (p-2)(q-2) must be at least 4")]
    NotATiling { p: u32, q: u32 },

    /// Parameters admit a tiling but no substitution is defined for them.
    #[error("no substitution rule set for p={p}, q={q}")]
    UnsupportedFamily { p: u32, q: u32 },

    /// A generation word would exceed the configured length cap.
    #[error("generation word at n={n} exceeds cap of {cap} letters")]
    WordCapExceeded { n: u32, cap: usize },

    /// Two distinct tessellation vertices landed closer than the
    /// deduplication tolerance allows; results would be unreliable.
    #[error("vertex dedup tolerance collision at generation ceiling {max_gen} (min pairwise distance {min_dist:.3e})")]
    ToleranceCollision { max_gen: u32, min_dist: f64 },

    /// The first-element selection rule did not single out one face.
    #[error("ambiguous first element at vertex {vertex} ({candidates} candidates)")]
    AmbiguousFirstElement { vertex: usize, candidates: usize },

    /// The requested generation exceeds what the geometric engine can
    /// build reliably at double precision.
    #[error("generation {requested} exceeds tessellation ceiling {ceiling} for p={p}, q={q}")]
    CeilingExceeded { p: u32, q: u32, requested: u32, ceiling: u32 },

    /// Geometric consistency check failed while building the tessellation.
    #[error("tessellation construction inconsistency: {0}")]
    Geometry(String),

    /// Numerical root finding did not converge.
    #[error("root finding failed: {0}")]
    RootFinding(String),
}
