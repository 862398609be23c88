//! The rank-two coset geometry T = D/H ∪ D/K with H = ⟨x⟩ and K = ⟨y⟩,
//! viewed as a bipartite vertex-colored graph: cosets are vertices, and two
//! cosets are joined when they intersect. The intersection of an H-coset and
//! a K-coset is at most a single element, which labels the edge; the map
//! b(d) = (dH, dK) is then a bijection from group elements to edges, and ψ
//! recovers the generator power carrying one edge label to an incident one.
//! Together these reconstruct the Cayley graph from the coset geometry.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::cayley::{CayleyEdge, CayleyGraph, EdgeColor};
use crate::group::{ElementId, ElementStore, GroupError};
use crate::presentation::{GeneratorLetter, Word};
use crate::report::VerificationReport;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CosetError {
    #[error("element {0} has no realized coset in this geometry")]
    UnrealizedCoset(ElementId),
    #[error("({0}, {1}) is not an edge of the geometry")]
    NotAnEdge(usize, usize),
    #[error("edges {0} and {1} are not incident")]
    NotIncident(usize, usize),
    #[error("operation requires a complete store")]
    IncompleteStore,
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CosetType {
    H,
    K,
}

impl CosetType {
    pub fn name(self) -> &'static str {
        match self {
            CosetType::H => "H",
            CosetType::K => "K",
        }
    }
}

/// A left coset dH or dK, stored as its sorted member ids. The canonical
/// representative is the smallest id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub ctype: CosetType,
    pub rep: ElementId,
    pub members: Vec<ElementId>,
}

/// An edge of the geometry: indices into the two coset lists plus the label,
/// the unique element in the intersection of the two cosets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetEdge {
    pub h: usize,
    pub k: usize,
    pub label: ElementId,
}

#[derive(Clone, Debug)]
pub struct CosetGeometry {
    pub h_cosets: Vec<Coset>,
    pub k_cosets: Vec<Coset>,
    /// Sorted by (h-coset rep, k-coset rep).
    pub edges: Vec<CosetEdge>,
    /// True when the source store was partial: only cosets all of whose
    /// members are interior are included.
    pub truncated: bool,
    h_of: HashMap<ElementId, usize>,
    k_of: HashMap<ElementId, usize>,
    label_to_edge: HashMap<ElementId, usize>,
    edge_by_pair: HashMap<(usize, usize), usize>,
}

/// Walk the right action of a single letter from `start` until the orbit
/// closes; None when an action is unknown (truncated store rim).
fn orbit(store: &ElementStore, start: ElementId, letter: GeneratorLetter) -> Option<Vec<ElementId>> {
    let mut members = vec![start];
    let mut cur = start;
    loop {
        cur = store.act(cur, letter)?;
        if cur == start {
            members.sort_unstable();
            return Some(members);
        }
        members.push(cur);
    }
}

fn collect_cosets(
    store: &ElementStore,
    ctype: CosetType,
    require_interior: bool,
) -> (Vec<Coset>, HashMap<ElementId, usize>) {
    let letter = match ctype {
        CosetType::H => GeneratorLetter::X,
        CosetType::K => GeneratorLetter::Y,
    };
    let mut cosets = Vec::new();
    let mut of = HashMap::new();
    let mut assigned: BTreeSet<ElementId> = BTreeSet::new();
    for id in 0..store.len() as ElementId {
        if assigned.contains(&id) {
            continue;
        }
        let Some(members) = orbit(store, id, letter) else {
            continue;
        };
        assigned.extend(members.iter().copied());
        if require_interior && !members.iter().all(|&m| store.is_interior(m)) {
            continue;
        }
        let idx = cosets.len();
        for &m in &members {
            of.insert(m, idx);
        }
        cosets.push(Coset {
            ctype,
            rep: members[0],
            members,
        });
    }
    (cosets, of)
}

/// Build the geometry from a store. On a partial store only cosets lying
/// entirely in the interior are realized, so every included edge label has
/// all four of its right actions available.
pub fn build_coset_geometry(store: &ElementStore) -> CosetGeometry {
    let truncated = !store.complete();
    let (h_cosets, h_of) = collect_cosets(store, CosetType::H, truncated);
    let (k_cosets, k_of) = collect_cosets(store, CosetType::K, truncated);

    let mut edges = Vec::new();
    for id in 0..store.len() as ElementId {
        if let (Some(&h), Some(&k)) = (h_of.get(&id), k_of.get(&id)) {
            edges.push(CosetEdge { h, k, label: id });
        }
    }
    edges.sort_by_key(|e| (h_cosets[e.h].rep, k_cosets[e.k].rep));

    let mut label_to_edge = HashMap::new();
    let mut edge_by_pair = HashMap::new();
    for (i, e) in edges.iter().enumerate() {
        label_to_edge.insert(e.label, i);
        let prev = edge_by_pair.insert((e.h, e.k), i);
        assert!(
            prev.is_none(),
            "cosets h{} and k{} intersect in more than one element",
            e.h,
            e.k
        );
    }

    CosetGeometry {
        h_cosets,
        k_cosets,
        edges,
        truncated,
        h_of,
        k_of,
        label_to_edge,
        edge_by_pair,
    }
}

/// An ordered pair of incident edges together with the type of the vertex
/// they share. Distinct incident edges share exactly one vertex, since no
/// two edges have both endpoints in common.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IncidentEdgePair {
    pub e1: usize,
    pub e2: usize,
    pub shared: CosetType,
}

impl CosetGeometry {
    pub fn edge(&self, idx: usize) -> &CosetEdge {
        &self.edges[idx]
    }

    /// Classify an ordered pair of edges as incident (sharing an H- or
    /// K-vertex). Equal edges report their H-vertex.
    pub fn incident_pair(&self, e1: usize, e2: usize) -> Result<IncidentEdgePair, CosetError> {
        if e1 >= self.edges.len() || e2 >= self.edges.len() {
            return Err(CosetError::NotIncident(e1, e2));
        }
        let (a, b) = (self.edges[e1], self.edges[e2]);
        let shared = if a.h == b.h {
            CosetType::H
        } else if a.k == b.k {
            CosetType::K
        } else {
            return Err(CosetError::NotIncident(e1, e2));
        };
        Ok(IncidentEdgePair { e1, e2, shared })
    }

    /// The unique element in the intersection of the two cosets.
    pub fn edge_label(&self, h: usize, k: usize) -> Result<ElementId, CosetError> {
        self.edge_by_pair
            .get(&(h, k))
            .map(|&i| self.edges[i].label)
            .ok_or(CosetError::NotAnEdge(h, k))
    }

    pub fn h_coset_of(&self, d: ElementId) -> Option<usize> {
        self.h_of.get(&d).copied()
    }

    pub fn k_coset_of(&self, d: ElementId) -> Option<usize> {
        self.k_of.get(&d).copied()
    }

    pub fn edge_of_label(&self, d: ElementId) -> Option<usize> {
        self.label_to_edge.get(&d).copied()
    }

    /// The edge (H, K) labeled by the identity, when realized.
    pub fn basic_edge(&self) -> Option<usize> {
        self.edge_of_label(0)
    }

    /// The duality map b: d ↦ (dH, dK). Errors when the element's cosets are
    /// not realized in a truncated geometry.
    pub fn b_map(&self, d: ElementId) -> Result<usize, CosetError> {
        self.edge_of_label(d).ok_or(CosetError::UnrealizedCoset(d))
    }

    /// The generator power carrying the label of `e1` to the label of `e2`:
    /// x^r (0 ≤ r < a) when the edges share their H-vertex, y^s when they
    /// share their K-vertex; the empty word for e1 = e2.
    pub fn psi(
        &self,
        store: &ElementStore,
        e1: usize,
        e2: usize,
    ) -> Result<Word, CosetError> {
        let pair = self.incident_pair(e1, e2)?;
        let (a, b) = (self.edges[e1], self.edges[e2]);
        let letter = match pair.shared {
            CosetType::H => GeneratorLetter::X,
            CosetType::K => GeneratorLetter::Y,
        };
        let mut cur = a.label;
        let mut exponent = 0u32;
        loop {
            if cur == b.label {
                return Ok(Word::power(letter, exponent));
            }
            cur = self
                .act_known(store, cur, letter)
                .ok_or(CosetError::NotIncident(e1, e2))?;
            exponent += 1;
            if exponent > store.len() as u32 {
                return Err(CosetError::NotIncident(e1, e2));
            }
        }
    }

    fn act_known(
        &self,
        store: &ElementStore,
        id: ElementId,
        letter: GeneratorLetter,
    ) -> Option<ElementId> {
        store.act(id, letter)
    }

    /// Rebuild the Cayley graph from the geometry alone: vertices are the
    /// edge labels, and every ordered incident pair whose ψ value is exactly
    /// x (resp. y) contributes an x-colored (resp. y-colored) directed edge.
    pub fn reconstruct_cayley(&self, store: &ElementStore) -> CayleyGraph {
        let mut vertices: Vec<ElementId> = self.edges.iter().map(|e| e.label).collect();
        vertices.sort_unstable();
        let mut edges = Vec::new();

        let mut star_h: Vec<Vec<usize>> = vec![Vec::new(); self.h_cosets.len()];
        let mut star_k: Vec<Vec<usize>> = vec![Vec::new(); self.k_cosets.len()];
        for (i, e) in self.edges.iter().enumerate() {
            star_h[e.h].push(i);
            star_k[e.k].push(i);
        }

        for (stars, color) in [(&star_h, EdgeColor::X), (&star_k, EdgeColor::Y)] {
            for star in stars.iter() {
                for &e1 in star {
                    for &e2 in star {
                        let Ok(word) = self.psi(store, e1, e2) else {
                            continue;
                        };
                        if word.len() == 1 && word.0[0] == color.letter() {
                            edges.push(CayleyEdge {
                                src: self.edges[e1].label,
                                dst: self.edges[e2].label,
                                color,
                            });
                        }
                    }
                }
            }
        }
        edges.sort();

        let interior: BTreeSet<ElementId> = vertices
            .iter()
            .copied()
            .filter(|&v| store.is_interior(v))
            .collect();
        CayleyGraph {
            vertices,
            edges,
            interior,
        }
    }

    /// Labels of the included edges, as a set.
    pub fn label_set(&self) -> BTreeSet<ElementId> {
        self.edges.iter().map(|e| e.label).collect()
    }
}

/// Check edge-transitivity and edge-regularity of the left action on a
/// complete geometry: every edge is the image of the basic edge under its
/// own label, the full action maps edges to edges preserving labels
/// equivariantly, and no non-identity element fixes an edge.
pub fn verify_edge_action(
    geometry: &CosetGeometry,
    store: &ElementStore,
) -> Result<VerificationReport, CosetError> {
    if !store.complete() {
        return Err(CosetError::IncompleteStore);
    }
    let mut report = VerificationReport::new("edge-regular, edge-transitive action");
    let basic = geometry.basic_edge().expect("complete geometry has a basic edge");

    for (i, e) in geometry.edges.iter().enumerate() {
        // Transitivity via the label: label(e) · (H, K) = e.
        let g = e.label;
        report.record(
            geometry.h_coset_of(g) == Some(e.h) && geometry.k_coset_of(g) == Some(e.k),
            || format!("label {g} does not carry the basic edge to edge {i}"),
        );
    }

    for g in 0..store.len() as ElementId {
        for (i, e) in geometry.edges.iter().enumerate() {
            let mapped_label = store.multiply(g, e.label)?;
            let h = geometry.h_coset_of(mapped_label);
            let k = geometry.k_coset_of(mapped_label);
            let target = match (h, k) {
                (Some(h), Some(k)) => geometry.edge_by_pair.get(&(h, k)).copied(),
                _ => None,
            };
            // The action sends edges to edges and labels equivariantly.
            report.record(
                target.is_some()
                    && geometry.edges[target.unwrap()].label == mapped_label,
                || format!("element {g} does not act on edge {i} by label equivariance"),
            );
            // Regularity: only the identity stabilizes an edge.
            if let Some(t) = target {
                report.record(t != i || g == 0, || {
                    format!("non-identity element {g} stabilizes edge {i}")
                });
            }
        }
    }

    // Lemma-level restatement of regularity: H ∩ K = {1}.
    let h0 = &geometry.h_cosets[geometry.edges[basic].h];
    let k0 = &geometry.k_cosets[geometry.edges[basic].k];
    let common: Vec<ElementId> = h0
        .members
        .iter()
        .copied()
        .filter(|m| k0.members.contains(m))
        .collect();
    report.record(common == vec![0], || {
        format!("H ∩ K = {common:?}, expected only the identity")
    });

    Ok(report)
}

/// Image of a coset under left multiplication, when it is a well-defined
/// coset of the geometry: every member must map into one and the same coset.
fn left_image_of_coset(
    geometry: &CosetGeometry,
    store: &ElementStore,
    ctype: CosetType,
    index: usize,
    dp: ElementId,
) -> Option<usize> {
    let members = match ctype {
        CosetType::H => &geometry.h_cosets[index].members,
        CosetType::K => &geometry.k_cosets[index].members,
    };
    let mut image = None;
    for &m in members {
        let mapped = store.multiply(dp, m).ok()?;
        let coset = match ctype {
            CosetType::H => geometry.h_coset_of(mapped)?,
            CosetType::K => geometry.k_coset_of(mapped)?,
        };
        match image {
            None => image = Some(coset),
            Some(prev) if prev != coset => return None,
            _ => {}
        }
    }
    image
}

/// Equivariance of the labeling: b(d'·d) = d'·b(d) for all pairs in a
/// complete store. The left side is the edge labeled d'd; the right side is
/// computed honestly by mapping both cosets of b(d) member by member.
pub fn verify_b_equivariance(
    geometry: &CosetGeometry,
    store: &ElementStore,
) -> Result<VerificationReport, CosetError> {
    if !store.complete() {
        return Err(CosetError::IncompleteStore);
    }
    let mut report = VerificationReport::new("b-map equivariance b(d'd) = d'·b(d)");
    let n = store.len() as ElementId;
    for dp in 0..n {
        for d in 0..n {
            let product = store.multiply(dp, d)?;
            let lhs = geometry.b_map(product)?;
            let e = geometry.edges[geometry.b_map(d)?];
            let rhs_h = left_image_of_coset(geometry, store, CosetType::H, e.h, dp);
            let rhs_k = left_image_of_coset(geometry, store, CosetType::K, e.k, dp);
            let rhs = match (rhs_h, rhs_k) {
                (Some(h), Some(k)) => geometry.edge_by_pair.get(&(h, k)).copied(),
                _ => None,
            };
            report.record(rhs == Some(lhs), || {
                format!("b({dp}·{d}) differs from {dp}·b({d})")
            });
        }
    }
    Ok(report)
}
