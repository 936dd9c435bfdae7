//! Geometric engine: explicit tessellations built from reflections,
//! used as an independent oracle for the combinatorial substitution.

pub mod build;
pub mod space;
pub mod types;

pub use build::Tessellation;
pub use space::Model;
