//! Cyclic averages of regular polygons and Platonic solids.
//!
//! For a point at distance `L` from the centroid of a regular figure with
//! circumradius `R`, the sums `Σ d_i^{2m}` of even powers of the distances to
//! the vertices depend only on `R` and `L` for small `m`. This crate evaluates
//! those sums in closed form and by brute force, classifies their level sets,
//! solves the small distance systems, and carries the algebra behind the
//! rational-distance impossibility for the regular 24-gon.

pub mod cyclotomic;
pub mod errata;
pub mod error;
pub mod geometry;
pub mod poly;
pub mod polygon;
pub mod quadratic;
pub mod rational_distance;
pub mod relations;
pub mod scalar;
pub mod solid;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{
    heron_area_16sq, polygon_distance_squared, polygon_distances_squared, solid_distance_squared,
    solid_distances_squared, solid_vertices, DistanceMultiset, PlanePlacement, PolygonSpec,
    SolidKind, SolidSpec, SpacePlacement, SumBasis,
};
pub use polygon::{CyclicAverage, Figure, LocusClass};
pub use quadratic::QSqrt5;
pub use relations::{BranchPair, SideLength};
pub use scalar::{Angle, Rational, Scalar, Turns};
