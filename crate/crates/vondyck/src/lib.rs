//! Von Dyck groups D(a,b,c) = ⟨x, y | x^a = y^b = (xy)^c = 1⟩, built
//! geometrically: Cayley graphs, rank-two coset geometries, the
//! vertex-to-edge duality linking the two, and their realizations as
//! 1-skeletons of triangle and polygon tilings of the sphere, the plane, or
//! the Poincaré disk.
//!
//! Start with the runnable programs under `examples/`; each one walks one
//! capability end to end.

pub mod presentation;
pub mod geometry;
pub mod group;
pub mod report;
pub mod cayley;
pub mod coset;
pub mod tiling;
pub mod export;
pub mod svg;
pub mod verify;

pub use presentation::{
    classify_curvature, euclidean_triples, parse_word, CurvatureClass, GeneratorLetter,
    VonDyckParams, Word,
};

pub use geometry::{Fingerprint, Geometry, Isometry, SurfacePoint, Triangle};

pub use group::{
    b23_multiply, enumerate_elements, B23NormalForm, ElementId, ElementStore, GroupModel,
    SearchBound,
};

pub use cayley::{build_cayley, graphs_equal, verify_vertex_regularity, CayleyGraph, EdgeColor};
pub use coset::{build_coset_geometry, verify_b_equivariance, verify_edge_action, CosetGeometry};
pub use report::VerificationReport;
