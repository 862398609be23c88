//! The edge-colored, directed Cayley graph of a store: vertices are element
//! ids, with an x-colored edge d → d·x and a y-colored edge d → d·y.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::group::{ElementId, ElementStore, GroupError};
use crate::presentation::GeneratorLetter;
use crate::report::VerificationReport;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CayleyError {
    #[error("operation requires a complete store")]
    IncompleteStore,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Edge color: which generator the edge follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeColor {
    X,
    Y,
}

impl EdgeColor {
    pub fn letter(self) -> GeneratorLetter {
        match self {
            EdgeColor::X => GeneratorLetter::X,
            EdgeColor::Y => GeneratorLetter::Y,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EdgeColor::X => "x",
            EdgeColor::Y => "y",
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CayleyEdge {
    pub src: ElementId,
    pub dst: ElementId,
    pub color: EdgeColor,
}

#[derive(Clone, Debug, Default)]
pub struct CayleyGraph {
    pub vertices: Vec<ElementId>,
    pub edges: Vec<CayleyEdge>,
    /// Vertices whose four neighbors are all known; on a complete store this
    /// is every vertex.
    pub interior: BTreeSet<ElementId>,
}

/// Read the graph off the right-action table: an edge is emitted exactly
/// when the action is known and its target is stored.
pub fn build_cayley(store: &ElementStore) -> CayleyGraph {
    let mut graph = CayleyGraph::default();
    for id in 0..store.len() as ElementId {
        graph.vertices.push(id);
        if store.is_interior(id) {
            graph.interior.insert(id);
        }
        for color in [EdgeColor::X, EdgeColor::Y] {
            if let Some(target) = store.act(id, color.letter()) {
                graph.edges.push(CayleyEdge {
                    src: id,
                    dst: target,
                    color,
                });
            }
        }
    }
    graph
}

impl CayleyGraph {
    pub fn edge_count(&self, color: EdgeColor) -> usize {
        self.edges.iter().filter(|e| e.color == color).count()
    }

    /// Subgraph induced on `keep`: edges with both endpoints kept.
    pub fn restricted(&self, keep: &BTreeSet<ElementId>) -> CayleyGraph {
        CayleyGraph {
            vertices: self
                .vertices
                .iter()
                .copied()
                .filter(|v| keep.contains(v))
                .collect(),
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| keep.contains(&e.src) && keep.contains(&e.dst))
                .collect(),
            interior: self.interior.intersection(keep).copied().collect(),
        }
    }

    fn sorted_edges(&self) -> Vec<CayleyEdge> {
        let mut edges = self.edges.clone();
        edges.sort();
        edges
    }

    /// Map src → dst per color; None when some vertex lacks an out-edge of
    /// that color.
    fn out_map(&self, color: EdgeColor) -> Option<BTreeMap<ElementId, ElementId>> {
        let mut map = BTreeMap::new();
        for e in self.edges.iter().filter(|e| e.color == color) {
            map.insert(e.src, e.dst);
        }
        if self.vertices.iter().all(|v| map.contains_key(v)) {
            Some(map)
        } else {
            None
        }
    }

    /// Orbit lengths of the permutation obtained by following the colors of
    /// `word` in order, sorted ascending. Requires every vertex to have a
    /// full set of out-edges (a complete store).
    pub fn cycle_structure(&self, word: &[EdgeColor]) -> Result<Vec<usize>, CayleyError> {
        let maps: Vec<BTreeMap<ElementId, ElementId>> = word
            .iter()
            .map(|&c| self.out_map(c).ok_or(CayleyError::IncompleteStore))
            .collect::<Result<_, _>>()?;
        let step = |v: ElementId| -> ElementId {
            let mut cur = v;
            for map in &maps {
                cur = map[&cur];
            }
            cur
        };
        let mut seen: BTreeSet<ElementId> = BTreeSet::new();
        let mut lengths = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            loop {
                seen.insert(cur);
                len += 1;
                cur = step(cur);
                if cur == start {
                    break;
                }
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        Ok(lengths)
    }
}

/// Two graphs are equal when their vertex sets and colored directed edge
/// sets coincide.
pub fn graphs_equal(a: &CayleyGraph, b: &CayleyGraph) -> bool {
    let mut va = a.vertices.clone();
    let mut vb = b.vertices.clone();
    va.sort_unstable();
    vb.sort_unstable();
    va == vb && a.sorted_edges() == b.sorted_edges()
}

/// Differences between two graphs, for failure reports.
pub fn graph_difference(a: &CayleyGraph, b: &CayleyGraph) -> Vec<String> {
    let ea: BTreeSet<CayleyEdge> = a.edges.iter().copied().collect();
    let eb: BTreeSet<CayleyEdge> = b.edges.iter().copied().collect();
    let mut out = Vec::new();
    for e in ea.difference(&eb).take(8) {
        out.push(format!("edge {} -{}-> {} only on the left", e.src, e.color, e.dst));
    }
    for e in eb.difference(&ea).take(8) {
        out.push(format!("edge {} -{}-> {} only on the right", e.src, e.color, e.dst));
    }
    out
}

/// Check that left multiplication by every group element is a color- and
/// direction-preserving automorphism of the graph, and that only the
/// identity fixes a vertex (the action is vertex-regular).
pub fn verify_vertex_regularity(
    graph: &CayleyGraph,
    store: &ElementStore,
) -> Result<VerificationReport, CayleyError> {
    if !store.complete() {
        return Err(CayleyError::IncompleteStore);
    }
    let mut report = VerificationReport::new("vertex-regular left action");
    let edge_set: BTreeSet<CayleyEdge> = graph.edges.iter().copied().collect();
    for g in 0..store.len() as ElementId {
        for edge in &graph.edges {
            let src = store.multiply(g, edge.src)?;
            let dst = store.multiply(g, edge.dst)?;
            let mapped = CayleyEdge {
                src,
                dst,
                color: edge.color,
            };
            report.record(edge_set.contains(&mapped), || {
                format!(
                    "left action of {g} does not preserve edge {} -{}-> {}",
                    edge.src, edge.color, edge.dst
                )
            });
        }
        for &v in &graph.vertices {
            let gv = store.multiply(g, v)?;
            report.record(gv != v || g == 0, || {
                format!("non-identity element {g} fixes vertex {v}")
            });
        }
    }
    Ok(report)
}
