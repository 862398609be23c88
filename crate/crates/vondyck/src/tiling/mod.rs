//! Geometric realizations: the triangle tiling, the 2c-gon tiling obtained
//! by rotating the basic triangle fully around its O vertex, the derived
//! tiling on edge midpoints, ring enlargements, and the identifications of
//! tiling skeletons with the coset geometry and the Cayley graph.

mod derived;
mod enumerate;
mod rings;
mod triangle;

pub use derived::{
    abstract_derived, derived_equals_cayley, derived_tiling, DerivedColor, DerivedEdge,
    DerivedTiling,
};
pub use enumerate::{enumerate_dnnn, Enumeration, EnumerationRow, RingStats};
pub use rings::{enlarge, ring_boundary, RingBoundary, TileSet};
pub use triangle::{build_triangle_tiling, TriTile};

use std::collections::{BTreeSet, HashMap, HashSet};
use std::f64::consts::PI;

use thiserror::Error;

use crate::coset::CosetGeometry;
use crate::geometry::{CoordIndex, Geometry, Isometry, SurfacePoint};
use crate::group::{enumerate_elements, ElementId, ElementStore, GroupError, GroupModel, SearchBound};
use crate::presentation::{CurvatureClass, GeneratorLetter, VonDyckParams, Word};
use crate::report::VerificationReport;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("sub-tiling boundary is not a simple loop: {0}")]
    BoundaryNotSimple(String),
    #[error("ring enlargement requires the uniform model P(n,n,n), got {0}")]
    NotUniform(VonDyckParams),
    #[error("enlargement count mismatch at ring {ring}: geometry produced {got}, the angle formula gives {expected}")]
    EnlargementMismatch { ring: u32, got: usize, expected: i64 },
    #[error("edge label could not be resolved against the element store")]
    UnresolvedLabel,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Vertex color of the triangle tiling; A and B survive into the polygon
/// skeleton, O becomes a tile center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    A,
    B,
    O,
}

impl VertexType {
    pub fn name(self) -> &'static str {
        match self {
            VertexType::A => "A",
            VertexType::B => "B",
            VertexType::O => "O",
        }
    }
}

/// One 2c-gon of the polygon tiling. `gen` maps the basic polygon onto this
/// tile; the boundary runs counterclockwise starting at gen·A.
#[derive(Clone, Debug)]
pub struct PolyTile {
    pub gen: Isometry,
    pub word: Word,
    pub verts: Vec<SurfacePoint>,
    pub vert_ids: Vec<usize>,
    pub center: SurfacePoint,
}

/// The polygon tiling P(a,b,c): one 2c-gon per O-type vertex, growable by
/// ring enlargement. Tiles are deduplicated by their center points, boundary
/// vertices by a shared quantized index.
#[derive(Debug)]
pub struct PolygonTiling {
    pub geom: Geometry,
    tiles: Vec<PolyTile>,
    centers: CoordIndex,
    verts: CoordIndex,
    vert_types: Vec<VertexType>,
    vert_tiles: Vec<Vec<usize>>,
    /// Boundary cycle of the basic tile: position 2k is the A-type vertex
    /// (xy)^(-k)·A, position 2k+1 the B-type vertex (xy)^(-k)·B.
    base_verts: Vec<SurfacePoint>,
    /// Label of boundary edge j (from position j to j+1), as an isometry of
    /// the group: the unique element carrying the segment (A,B) onto it.
    base_label_iso: Vec<Isometry>,
    /// A word for the same label, phrased along the xy-chain 1, x, xy, ...
    base_label_word: Vec<Word>,
    /// Edge indices in chain order: the labels 1, x, xy, xyx, ... in turn.
    chain_edges: Vec<usize>,
}

impl PolygonTiling {
    /// The tiling containing only the basic polygon.
    pub fn basic(params: VonDyckParams) -> PolygonTiling {
        let geom = Geometry::new(params);
        let c = params.c as usize;
        let xy_inv = geom.evaluate_word(&Word::xy_power(-1));

        let mut base_verts = Vec::with_capacity(2 * c);
        let mut rot = geom.identity();
        for _ in 0..c {
            base_verts.push(rot.apply(&geom.triangle.va));
            base_verts.push(rot.apply(&geom.triangle.vb));
            rot = rot.compose(&xy_inv);
        }

        let mut base_label_iso = vec![geom.identity(); 2 * c];
        let mut base_label_word = vec![Word::empty(); 2 * c];
        let mut chain_edges = Vec::with_capacity(2 * c);
        for i in 0..2 * c {
            let m = (i / 2) as i64;
            let odd = i % 2 == 1;
            let mut word = Word::xy_power(m);
            if odd {
                word.push(GeneratorLetter::X);
            }
            let edge = if odd {
                2 * ((c as i64 - m - 1).rem_euclid(c as i64)) as usize + 1
            } else {
                2 * ((c as i64 - m).rem_euclid(c as i64)) as usize
            };
            base_label_iso[edge] = geom.evaluate_word(&word);
            base_label_word[edge] = word;
            chain_edges.push(edge);
        }

        let mut tiling = PolygonTiling {
            geom,
            tiles: Vec::new(),
            centers: CoordIndex::new(),
            verts: CoordIndex::new(),
            vert_types: Vec::new(),
            vert_tiles: Vec::new(),
            base_verts,
            base_label_iso,
            base_label_word,
            chain_edges,
        };
        let identity = tiling.geom.identity();
        tiling.add_tile(identity, Word::empty());
        tiling
    }

    /// Tiles for every O-vertex reached by the stored elements within the
    /// given search depth (all of them when `depth` is None).
    pub fn from_store(store: &ElementStore, depth: Option<u32>) -> PolygonTiling {
        let params = match store.model {
            GroupModel::Geometric(p) => p,
            _ => panic!("polygon tilings require a geometric store"),
        };
        let mut tiling = PolygonTiling::basic(params);
        let ids = match depth {
            Some(d) => store.ids_within_depth(d),
            None => (0..store.len() as ElementId).collect(),
        };
        for id in ids {
            let iso = store.isometry(id).expect("geometric payload");
            let center = iso.apply(&tiling.geom.triangle.vo);
            if tiling.centers.lookup(&center.coords()).is_none() {
                let word = store.canonical_word(id).unwrap().clone();
                tiling.add_tile(*iso, word);
            }
        }
        tiling
    }

    pub(crate) fn add_tile(&mut self, gen: Isometry, word: Word) -> usize {
        let idx = self.tiles.len();
        let center = gen.apply(&self.geom.triangle.vo);
        let (center_id, fresh) = self.centers.get_or_insert(&center.coords());
        debug_assert!(fresh && center_id == idx, "duplicate tile center");

        let verts: Vec<SurfacePoint> = self.base_verts.iter().map(|v| gen.apply(v)).collect();
        let mut vert_ids = Vec::with_capacity(verts.len());
        for (pos, v) in verts.iter().enumerate() {
            let vtype = if pos % 2 == 0 { VertexType::A } else { VertexType::B };
            let (vid, fresh) = self.verts.get_or_insert(&v.coords());
            if fresh {
                self.vert_types.push(vtype);
                self.vert_tiles.push(Vec::new());
            } else {
                debug_assert_eq!(self.vert_types[vid], vtype, "vertex type mismatch");
            }
            self.vert_tiles[vid].push(idx);
            vert_ids.push(vid);
        }

        self.tiles.push(PolyTile {
            gen,
            word,
            verts,
            vert_ids,
            center,
        });
        idx
    }

    pub fn tiles(&self) -> &[PolyTile] {
        &self.tiles
    }

    pub fn tile(&self, idx: usize) -> &PolyTile {
        &self.tiles[idx]
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    pub fn sides(&self) -> usize {
        self.base_verts.len()
    }

    pub fn vertex_type(&self, vid: usize) -> VertexType {
        self.vert_types[vid]
    }

    pub fn vertex_point(&self, vid: usize) -> SurfacePoint {
        let coords = self.verts.point(vid);
        match self.geom.curvature {
            CurvatureClass::Spherical => {
                SurfacePoint::Sphere([coords[0], coords[1], coords[2]])
            }
            CurvatureClass::Euclidean => SurfacePoint::Plane(crate::geometry::Complex::new(
                coords[0], coords[1],
            )),
            CurvatureClass::Hyperbolic => SurfacePoint::Disk(crate::geometry::Complex::new(
                coords[0], coords[1],
            )),
        }
    }

    pub fn tiles_at_vertex(&self, vid: usize) -> &[usize] {
        &self.vert_tiles[vid]
    }

    pub fn lookup_tile_by_center(&self, center: &SurfacePoint) -> Option<usize> {
        self.centers.lookup(&center.coords())
    }

    /// Tiles meeting at a vertex of the given type in a full tiling: a at
    /// A-vertices, b at B-vertices.
    pub fn vertex_order(&self, vtype: VertexType) -> u32 {
        match vtype {
            VertexType::A => self.geom.params.a,
            VertexType::B => self.geom.params.b,
            VertexType::O => unreachable!("O vertices are tile centers"),
        }
    }

    /// Label of boundary edge `j` of tile `t`, as an isometry.
    pub fn edge_label_iso(&self, t: usize, j: usize) -> Isometry {
        self.tiles[t].gen.compose(&self.base_label_iso[j])
    }

    /// A word for the label of boundary edge `j` of tile `t`.
    pub fn edge_label_word(&self, t: usize, j: usize) -> Word {
        self.tiles[t]
            .word
            .concat(&self.base_label_word[j])
            .free_reduce()
    }

    /// Edge indices of one tile in the chain order 1, x, xy, xyx, ...
    pub fn chain_edges(&self) -> &[usize] {
        &self.chain_edges
    }

    /// Positions (indices into the vertex cycle) of the endpoints of edge
    /// `j`: first the A-type endpoint, then the B-type one.
    pub fn edge_endpoint_positions(&self, j: usize) -> (usize, usize) {
        let n = self.base_verts.len();
        if j.is_multiple_of(2) {
            (j, (j + 1) % n)
        } else {
            ((j + 1) % n, j)
        }
    }

    /// The counterclockwise rotation slot map around a vertex: rotating
    /// `tile` about the vertex by multiples of the vertex angle enumerates
    /// every tile hinged there.
    pub(crate) fn vertex_slots(&self, vid: usize, reference_tile: usize) -> Vec<Option<usize>> {
        let vtype = self.vert_types[vid];
        let order = self.vertex_order(vtype) as usize;
        let point = self.vertex_point(vid);
        let ref_center = self.tiles[reference_tile].center;
        (0..order)
            .map(|m| {
                let rot = self
                    .geom
                    .rotation_about(&point, 2.0 * PI * m as f64 / order as f64);
                self.centers.lookup(&rot.apply(&ref_center).coords())
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Skeleton
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SkeletonVertex {
    pub vtype: VertexType,
    pub point: Option<SurfacePoint>,
}

/// A skeleton edge joins an A-type vertex to a B-type vertex and is labeled
/// by the element carrying the basic segment (A, B) onto it.
#[derive(Clone, Copy, Debug)]
pub struct SkeletonEdge {
    pub a_vertex: usize,
    pub b_vertex: usize,
    pub label: ElementId,
}

/// Bipartite 1-skeleton of a polygon tiling (or its abstract counterpart
/// built directly from cosets).
#[derive(Clone, Debug, Default)]
pub struct Skeleton {
    pub vertices: Vec<SkeletonVertex>,
    pub edges: Vec<SkeletonEdge>,
}

impl Skeleton {
    pub fn labels(&self) -> BTreeSet<ElementId> {
        self.edges.iter().map(|e| e.label).collect()
    }

    pub fn count_vertices(&self, vtype: VertexType) -> usize {
        self.vertices.iter().filter(|v| v.vtype == vtype).count()
    }
}

/// Extract the labeled skeleton of a tiling. Labels beyond the store's
/// search horizon are appended to the store as externally discovered
/// elements; they carry a valid word but no action data.
pub fn skeleton_of(tiling: &PolygonTiling, store: &mut ElementStore) -> Skeleton {
    let vertices: Vec<SkeletonVertex> = (0..tiling.vert_types.len())
        .map(|vid| SkeletonVertex {
            vtype: tiling.vertex_type(vid),
            point: Some(tiling.vertex_point(vid)),
        })
        .collect();
    let mut edges = Vec::new();
    let mut seen: HashSet<ElementId> = HashSet::new();
    let sides = tiling.sides();
    for t in 0..tiling.tile_count() {
        for j in 0..sides {
            let iso = tiling.edge_label_iso(t, j);
            let word = tiling.edge_label_word(t, j);
            let label = store.resolve_or_insert(&iso, word);
            if !seen.insert(label) {
                continue;
            }
            let (a_pos, b_pos) = tiling.edge_endpoint_positions(j);
            edges.push(SkeletonEdge {
                a_vertex: tiling.tiles[t].vert_ids[a_pos],
                b_vertex: tiling.tiles[t].vert_ids[b_pos],
                label,
            });
        }
    }
    Skeleton { vertices, edges }
}

/// The abstract skeleton of a coset geometry: one A-type vertex per H-coset,
/// one B-type vertex per K-coset, and the labeled incidence edges. Used for
/// the models that carry no surface (Z6, B(2,3)).
pub fn abstract_skeleton(geometry: &CosetGeometry) -> Skeleton {
    let mut vertices = Vec::new();
    for _ in &geometry.h_cosets {
        vertices.push(SkeletonVertex {
            vtype: VertexType::A,
            point: None,
        });
    }
    for _ in &geometry.k_cosets {
        vertices.push(SkeletonVertex {
            vtype: VertexType::B,
            point: None,
        });
    }
    let offset = geometry.h_cosets.len();
    let edges = geometry
        .edges
        .iter()
        .map(|e| SkeletonEdge {
            a_vertex: e.h,
            b_vertex: offset + e.k,
            label: e.label,
        })
        .collect();
    Skeleton { vertices, edges }
}

/// Verify the label-preserving identification of a skeleton with a coset
/// geometry: on the labels common to both, two edges share their A-type
/// skeleton vertex exactly when their labels lie in the same H-coset, and
/// likewise for B-type vertices and K-cosets. On complete models the
/// correspondence must be a bijection of the full structures.
pub fn identify_skeleton_with_coset_geometry(
    skeleton: &Skeleton,
    geometry: &CosetGeometry,
    store: &ElementStore,
) -> VerificationReport {
    let mut report = VerificationReport::new("skeleton = coset geometry");

    let mut by_label: HashMap<ElementId, (usize, usize)> = HashMap::new();
    for e in &skeleton.edges {
        by_label.insert(e.label, (e.a_vertex, e.b_vertex));
    }
    let matched: Vec<ElementId> = geometry
        .edges
        .iter()
        .map(|e| e.label)
        .filter(|l| by_label.contains_key(l))
        .collect();

    // Coset → vertex must be single-valued, and vertex → coset injective.
    let mut h_to_vertex: HashMap<usize, usize> = HashMap::new();
    let mut vertex_to_h: HashMap<usize, usize> = HashMap::new();
    let mut k_to_vertex: HashMap<usize, usize> = HashMap::new();
    let mut vertex_to_k: HashMap<usize, usize> = HashMap::new();
    for &label in &matched {
        let (av, bv) = by_label[&label];
        let h = geometry.h_coset_of(label).unwrap();
        let k = geometry.k_coset_of(label).unwrap();
        report.record(*h_to_vertex.entry(h).or_insert(av) == av, || {
            format!("H-coset {h} meets two distinct A-vertices")
        });
        report.record(*vertex_to_h.entry(av).or_insert(h) == h, || {
            format!("A-vertex {av} meets two distinct H-cosets")
        });
        report.record(*k_to_vertex.entry(k).or_insert(bv) == bv, || {
            format!("K-coset {k} meets two distinct B-vertices")
        });
        report.record(*vertex_to_k.entry(bv).or_insert(k) == k, || {
            format!("B-vertex {bv} meets two distinct K-cosets")
        });
    }

    if store.complete() && !geometry.truncated {
        report.record(matched.len() == geometry.edges.len(), || {
            format!(
                "only {} of {} geometry edges have skeleton counterparts",
                matched.len(),
                geometry.edges.len()
            )
        });
        report.record(skeleton.edges.len() == geometry.edges.len(), || {
            format!(
                "skeleton has {} edges, geometry {}",
                skeleton.edges.len(),
                geometry.edges.len()
            )
        });
        report.record(
            skeleton.count_vertices(VertexType::A) == geometry.h_cosets.len(),
            || {
                format!(
                    "{} A-vertices vs {} H-cosets",
                    skeleton.count_vertices(VertexType::A),
                    geometry.h_cosets.len()
                )
            },
        );
        report.record(
            skeleton.count_vertices(VertexType::B) == geometry.k_cosets.len(),
            || {
                format!(
                    "{} B-vertices vs {} K-cosets",
                    skeleton.count_vertices(VertexType::B),
                    geometry.k_cosets.len()
                )
            },
        );
    } else {
        report.record(!matched.is_empty(), || {
            "no labels shared between skeleton and truncated geometry".to_string()
        });
    }
    report
}

/// Full polygon-tiling build for D(a,b,c): enumerate elements deep enough
/// that every coset of a depth-`depth` element is interior, realize one tile
/// per reached O-vertex, and label the skeleton. Spherical groups close, so
/// there the whole tiling is produced regardless of `depth`.
pub fn build_polygon_tiling(
    params: VonDyckParams,
    depth: u32,
) -> Result<(PolygonTiling, ElementStore, Skeleton), TilingError> {
    let class = crate::presentation::classify_curvature(params);
    let (bound, tile_depth) = if class == CurvatureClass::Spherical {
        (SearchBound::Unbounded, None)
    } else {
        let margin = params.a.max(params.b);
        (SearchBound::Depth(depth + margin), Some(depth))
    };
    let mut store = enumerate_elements(GroupModel::Geometric(params), bound)?;
    let tiling = PolygonTiling::from_store(&store, tile_depth);
    let skeleton = skeleton_of(&tiling, &mut store);
    Ok((tiling, store, skeleton))
}
