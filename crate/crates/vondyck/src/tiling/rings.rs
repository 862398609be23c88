//! Sub-tilings, their boundary loops, and ring enlargement: adding every
//! external tile that meets the boundary of a sub-tiling Q. With N boundary
//! edges and i_k tiles hinged at the k-th boundary vertex, the number of
//! added tiles is N(n−1) − Σ i_k; the implementation adds tiles vertex by
//! vertex and then verifies this count against the fully materialized
//! geometry, failing hard on any mismatch.

use std::collections::{BTreeSet, HashMap};

use crate::presentation::{GeneratorLetter, Word};

use super::{PolygonTiling, TilingError, VertexType};

/// A sub-tiling: a set of tile indices of a `PolygonTiling`.
pub type TileSet = BTreeSet<usize>;

/// The boundary loop of a sub-tiling. Edge k runs from vertex k to vertex
/// k+1 (cyclically), oriented so that the sub-tiling lies on its left;
/// `hinge_counts[k]` is the number of Q-tiles at vertex k, making the
/// interior angle there 2π·hinge_counts[k]/n.
#[derive(Clone, Debug)]
pub struct RingBoundary {
    /// (tile index, edge index within the tile) for each boundary edge.
    pub edges: Vec<(usize, usize)>,
    /// Vertex ids, aligned so vertex k starts edge k.
    pub vertices: Vec<usize>,
    pub hinge_counts: Vec<u32>,
}

impl RingBoundary {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn hinge_sum(&self) -> u64 {
        self.hinge_counts.iter().map(|&i| i as u64).sum()
    }
}

/// Extract the boundary of `q` and check that it is a single simple loop:
/// every boundary vertex lies on exactly two boundary edges, the directed
/// edges close into one cycle, and the Q-tiles around each boundary vertex
/// are angularly contiguous.
pub fn ring_boundary(tiling: &PolygonTiling, q: &TileSet) -> Result<RingBoundary, TilingError> {
    let sides = tiling.sides();
    // Count, per undirected vertex pair, how many Q-tiles own the edge.
    let mut owners: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for &t in q {
        let ids = &tiling.tile(t).vert_ids;
        for j in 0..sides {
            let u = ids[j];
            let v = ids[(j + 1) % sides];
            let key = (u.min(v), u.max(v));
            owners.entry(key).or_default().push((t, j));
        }
    }

    // A boundary edge belongs to exactly one Q-tile; orient it as that
    // tile's counterclockwise cycle does, keeping Q on the left.
    let mut outgoing: HashMap<usize, (usize, (usize, usize))> = HashMap::new();
    let mut boundary_count = 0;
    for list in owners.values() {
        if list.len() > 2 {
            return Err(TilingError::BoundaryNotSimple(
                "an edge is claimed by more than two tiles".into(),
            ));
        }
        if list.len() != 1 {
            continue;
        }
        let (t, j) = list[0];
        boundary_count += 1;
        let ids = &tiling.tile(t).vert_ids;
        let u = ids[j];
        if outgoing.insert(u, ((j + 1) % sides, (t, j))).is_some() {
            return Err(TilingError::BoundaryNotSimple(format!(
                "vertex {u} starts two boundary edges"
            )));
        }
    }
    if boundary_count == 0 {
        return Err(TilingError::BoundaryNotSimple("no boundary edges".into()));
    }

    // Walk the loop from a deterministic start.
    let start = *outgoing.keys().min().unwrap();
    let mut vertices = Vec::with_capacity(boundary_count);
    let mut edges = Vec::with_capacity(boundary_count);
    let mut cur = start;
    loop {
        let Some(&(next_pos, (t, j))) = outgoing.get(&cur) else {
            return Err(TilingError::BoundaryNotSimple(format!(
                "boundary stops at vertex {cur}"
            )));
        };
        vertices.push(cur);
        edges.push((t, j));
        cur = tiling.tile(t).vert_ids[next_pos];
        if cur == start {
            break;
        }
        if vertices.len() > boundary_count {
            return Err(TilingError::BoundaryNotSimple(
                "boundary does not close".into(),
            ));
        }
    }
    if vertices.len() != boundary_count {
        return Err(TilingError::BoundaryNotSimple(format!(
            "boundary splits into several loops ({} of {} edges walked)",
            vertices.len(),
            boundary_count
        )));
    }

    let mut hinge_counts = Vec::with_capacity(vertices.len());
    for &v in &vertices {
        let count = tiling
            .tiles_at_vertex(v)
            .iter()
            .filter(|t| q.contains(t))
            .count() as u32;
        let order = tiling.vertex_order(tiling.vertex_type(v));
        if count == 0 || count >= order {
            return Err(TilingError::BoundaryNotSimple(format!(
                "boundary vertex {v} hinges {count} tiles"
            )));
        }
        hinge_counts.push(count);
    }

    Ok(RingBoundary {
        edges,
        vertices,
        hinge_counts,
    })
}

/// The counterclockwise tile slots around a boundary vertex, starting from a
/// reference Q-tile; missing slots are materialized on demand by rotating
/// the reference tile.
fn materialize_slots(
    tiling: &mut PolygonTiling,
    vid: usize,
    reference_tile: usize,
) -> Vec<usize> {
    let slots = tiling.vertex_slots(vid, reference_tile);
    let order = slots.len();
    let mut out = Vec::with_capacity(order);
    for (m, slot) in slots.into_iter().enumerate() {
        match slot {
            Some(t) => out.push(t),
            None => {
                let t = new_slot_tile(tiling, vid, reference_tile, m as u32);
                out.push(t);
            }
        }
    }
    out
}

/// Create the tile obtained by rotating `reference_tile` about vertex `vid`
/// by m vertex-angle steps, with a word conjugating the appropriate
/// generator power by the tile word.
fn new_slot_tile(
    tiling: &mut PolygonTiling,
    vid: usize,
    reference_tile: usize,
    m: u32,
) -> usize {
    let vtype = tiling.vertex_type(vid);
    let order = tiling.vertex_order(vtype);
    let point = tiling.vertex_point(vid);
    let angle = 2.0 * std::f64::consts::PI * m as f64 / order as f64;
    let rot = tiling.geom.rotation_about(&point, angle);
    let gen = rot.compose(&tiling.tile(reference_tile).gen);

    // The rotation about this vertex is the reference tile's word conjugate
    // of a generator power: position 2k on the base cycle is (xy)^(-k)·A,
    // so the rotation is (xy)^(-k) x^m (xy)^k, and likewise with y at odd
    // positions.
    let tile = tiling.tile(reference_tile);
    let pos = tile
        .vert_ids
        .iter()
        .position(|&v| v == vid)
        .expect("reference tile must touch the vertex");
    let k = (pos / 2) as i64;
    let letter = match vtype {
        VertexType::A => GeneratorLetter::X,
        VertexType::B => GeneratorLetter::Y,
        VertexType::O => unreachable!(),
    };
    let mut word = tile.word.concat(&Word::xy_power(-k));
    for _ in 0..m {
        word.push(letter);
    }
    let word = word.concat(&Word::xy_power(k)).free_reduce();

    tiling.add_tile(gen, word)
}

/// Add every external tile meeting the boundary of `q`. Returns the
/// enlarged set together with the added tiles in deterministic order
/// (boundary vertex k, then counterclockwise position around it). The
/// number of additions must match N(n−1) − Σ i_k, and afterwards every slot
/// around every old boundary vertex must be filled; any discrepancy is a
/// hard error.
pub fn enlarge(
    tiling: &mut PolygonTiling,
    q: &TileSet,
    ring: u32,
) -> Result<(TileSet, Vec<usize>), TilingError> {
    let params = tiling.geom.params;
    if params.a != params.b || params.b != params.c {
        return Err(TilingError::NotUniform(params));
    }
    let n = params.a as i64;
    let boundary = ring_boundary(tiling, q)?;
    let expected = boundary.len() as i64 * (n - 1) - boundary.hinge_sum() as i64;

    let mut grown: TileSet = q.clone();
    let mut added = Vec::new();
    for (k, &vid) in boundary.vertices.iter().enumerate() {
        let reference = *tiling
            .tiles_at_vertex(vid)
            .iter()
            .filter(|t| q.contains(t))
            .min()
            .expect("boundary vertex has a Q-tile");
        let slots = materialize_slots(tiling, vid, reference);
        let order = slots.len();
        let in_q: Vec<bool> = slots.iter().map(|t| q.contains(t)).collect();

        let transitions = (0..order)
            .filter(|&m| in_q[m] != in_q[(m + 1) % order])
            .count();
        if transitions != 2 {
            return Err(TilingError::BoundaryNotSimple(format!(
                "Q-tiles around boundary vertex {vid} are not contiguous"
            )));
        }
        let hinges = in_q.iter().filter(|&&b| b).count() as u32;
        debug_assert_eq!(hinges, boundary.hinge_counts[k]);

        let run_end = (0..order)
            .find(|&m| in_q[m] && !in_q[(m + 1) % order])
            .unwrap();
        // Externals run counterclockwise from run_end+1; the first one lies
        // across the incoming boundary edge and is attributed to the
        // previous vertex, the rest to this one.
        let external = order - hinges as usize;
        for step in 2..=external {
            let t = slots[(run_end + step) % order];
            if !grown.insert(t) {
                return Err(TilingError::EnlargementMismatch {
                    ring,
                    got: added.len(),
                    expected,
                });
            }
            added.push(t);
        }
    }

    if added.len() as i64 != expected {
        return Err(TilingError::EnlargementMismatch {
            ring,
            got: added.len(),
            expected,
        });
    }
    // Geometric completeness: every slot around every old boundary vertex
    // is now occupied by a tile of the enlarged set.
    for &vid in &boundary.vertices {
        let reference = *tiling
            .tiles_at_vertex(vid)
            .iter()
            .filter(|t| grown.contains(t))
            .min()
            .unwrap();
        let slots = tiling.vertex_slots(vid, reference);
        let all_in = slots
            .iter()
            .all(|s| s.map(|t| grown.contains(&t)).unwrap_or(false));
        if !all_in {
            return Err(TilingError::EnlargementMismatch {
                ring,
                got: added.len(),
                expected,
            });
        }
    }

    Ok((grown, added))
}
