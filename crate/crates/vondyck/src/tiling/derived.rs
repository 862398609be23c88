//! The derived tiling: vertices are the midpoints of the polygon-skeleton
//! edges, and two midpoints are joined when their edges are incident and lie
//! on a common tile. The edge takes the color of the shared skeleton vertex
//! and is directed so that the counterclockwise rotation within the shared
//! tile carries the source edge onto the target edge. Colored and directed
//! this way, the derived skeleton is exactly the Cayley graph.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::cayley::{CayleyEdge, CayleyGraph, EdgeColor};
use crate::geometry::SurfacePoint;
use crate::group::{ElementId, ElementStore};
use crate::presentation::GeneratorLetter;
use crate::report::VerificationReport;

use super::PolygonTiling;

/// Color of a derived edge: the type of the shared skeleton vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DerivedColor {
    A,
    B,
}

impl DerivedColor {
    /// A-colored derived edges correspond to x-colored Cayley edges, B to y.
    pub fn edge_color(self) -> EdgeColor {
        match self {
            DerivedColor::A => EdgeColor::X,
            DerivedColor::B => EdgeColor::Y,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DerivedColor::A => "A",
            DerivedColor::B => "B",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DerivedEdge {
    pub src: ElementId,
    pub dst: ElementId,
    pub color: DerivedColor,
}

/// Vertices keyed by the element labeling the underlying skeleton edge;
/// geometric midpoints are present for tilings, absent for abstract models.
#[derive(Clone, Debug, Default)]
pub struct DerivedTiling {
    pub vertices: BTreeMap<ElementId, Option<SurfacePoint>>,
    pub edges: Vec<DerivedEdge>,
}

/// Build the derived tiling of a polygon tiling. Walking the boundary of a
/// tile counterclockwise through positions j−1, j, j+1, the rotation about
/// the vertex at position j by the tile's interior angle is counterclockwise
/// and carries edge j onto edge j−1, so each tile contributes the directed
/// derived edge μ(edge j) → μ(edge j−1) colored by the type of vertex j.
pub fn derived_tiling(tiling: &PolygonTiling, store: &mut ElementStore) -> DerivedTiling {
    let sides = tiling.sides();
    let mut out = DerivedTiling::default();
    let mut seen: HashSet<DerivedEdge> = HashSet::new();

    for t in 0..tiling.tile_count() {
        let labels: Vec<ElementId> = (0..sides)
            .map(|j| {
                let iso = tiling.edge_label_iso(t, j);
                let word = tiling.edge_label_word(t, j);
                store.resolve_or_insert(&iso, word)
            })
            .collect();
        for (j, &label) in labels.iter().enumerate() {
            out.vertices.entry(label).or_insert_with(|| {
                let (a_pos, b_pos) = tiling.edge_endpoint_positions(j);
                let tile = tiling.tile(t);
                Some(
                    tiling
                        .geom
                        .midpoint(&tile.verts[a_pos], &tile.verts[b_pos]),
                )
            });
        }
        for j in 0..sides {
            let prev = (j + sides - 1) % sides;
            let color = if j % 2 == 0 { DerivedColor::A } else { DerivedColor::B };
            let edge = DerivedEdge {
                src: labels[j],
                dst: labels[prev],
                color,
            };
            let fresh = seen.insert(edge);
            debug_assert!(fresh, "derived edge emitted by two tiles");
            out.edges.push(edge);
        }
    }
    out.edges.sort();
    out
}

/// The derived structure of an abstract (surface-free) model, read directly
/// off the group: an A-colored edge d → d·x and a B-colored edge d → d·y.
pub fn abstract_derived(store: &ElementStore) -> DerivedTiling {
    let mut out = DerivedTiling::default();
    for id in 0..store.len() as ElementId {
        out.vertices.insert(id, None);
        for (letter, color) in [
            (GeneratorLetter::X, DerivedColor::A),
            (GeneratorLetter::Y, DerivedColor::B),
        ] {
            if let Some(target) = store.act(id, letter) {
                out.edges.push(DerivedEdge {
                    src: id,
                    dst: target,
                    color,
                });
            }
        }
    }
    out.edges.sort();
    out
}

impl DerivedTiling {
    /// Directed degree (in plus out) of each vertex.
    pub fn directed_degrees(&self) -> BTreeMap<ElementId, usize> {
        let mut degrees: BTreeMap<ElementId, usize> = BTreeMap::new();
        for e in &self.edges {
            *degrees.entry(e.src).or_default() += 1;
            *degrees.entry(e.dst).or_default() += 1;
        }
        degrees
    }

    pub fn count_edges(&self, color: DerivedColor) -> usize {
        self.edges.iter().filter(|e| e.color == color).count()
    }
}

/// Compare the derived tiling with a Cayley graph on a common vertex set:
/// under μ(d) ↔ d, the A-colored directed edges must coincide with the
/// x-colored ones and the B-colored with the y-colored ones.
pub fn derived_equals_cayley(
    derived: &DerivedTiling,
    cayley: &CayleyGraph,
    restrict: &BTreeSet<ElementId>,
) -> VerificationReport {
    let mut report = VerificationReport::new("derived tiling = Cayley graph");
    let derived_set: BTreeSet<CayleyEdge> = derived
        .edges
        .iter()
        .filter(|e| restrict.contains(&e.src) && restrict.contains(&e.dst))
        .map(|e| CayleyEdge {
            src: e.src,
            dst: e.dst,
            color: e.color.edge_color(),
        })
        .collect();
    let cayley_set: BTreeSet<CayleyEdge> = cayley
        .edges
        .iter()
        .filter(|e| restrict.contains(&e.src) && restrict.contains(&e.dst))
        .copied()
        .collect();

    report.record(!restrict.is_empty(), || "empty comparison set".to_string());
    for e in derived_set.difference(&cayley_set) {
        report.record(false, || {
            format!("derived edge {} -{}-> {} missing from the Cayley graph", e.src, e.color, e.dst)
        });
    }
    for e in cayley_set.difference(&derived_set) {
        report.record(false, || {
            format!("Cayley edge {} -{}-> {} missing from the derived tiling", e.src, e.color, e.dst)
        });
    }
    report.checked += derived_set.len().max(cayley_set.len());
    report
}
