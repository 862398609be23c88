//! The triangle tiling: the orbit of the basic triangle under the group
//! (positively oriented tiles) together with the mirror triangles across
//! each edge (negatively oriented).

use crate::geometry::{CoordIndex, SurfacePoint};
use crate::group::{ElementId, ElementStore};

use super::VertexType;

/// One triangle of the tiling, with its typed vertices in (A, B, O) order.
#[derive(Clone, Debug)]
pub struct TriTile {
    pub va: SurfacePoint,
    pub vb: SurfacePoint,
    pub vo: SurfacePoint,
    pub positive: bool,
    /// The group element carrying the basic triangle here, for positively
    /// oriented tiles.
    pub element: Option<ElementId>,
}

impl TriTile {
    pub fn vertex(&self, t: VertexType) -> SurfacePoint {
        match t {
            VertexType::A => self.va,
            VertexType::B => self.vb,
            VertexType::O => self.vo,
        }
    }

    fn key(&self) -> Vec<f64> {
        let mut coords = self.va.coords();
        coords.extend(self.vb.coords());
        coords.extend(self.vo.coords());
        coords
    }
}

/// Positively oriented tiles are the images of the basic triangle under the
/// stored elements up to the given search depth; each of their edges then
/// determines the complementary mirror triangle on the other side.
/// Duplicates are removed by quantized vertex coordinates.
pub fn build_triangle_tiling(store: &ElementStore, depth: u32) -> Vec<TriTile> {
    let geom = store
        .geometry()
        .expect("triangle tilings require a geometric store");
    let tri = geom.triangle;
    let mut tiles: Vec<TriTile> = Vec::new();
    let mut index = CoordIndex::new();

    for id in store.ids_within_depth(depth) {
        let iso = store.isometry(id).expect("geometric payload");
        let tile = TriTile {
            va: iso.apply(&tri.va),
            vb: iso.apply(&tri.vb),
            vo: iso.apply(&tri.vo),
            positive: true,
            element: Some(id),
        };
        let (_, fresh) = index.get_or_insert(&tile.key());
        if fresh {
            tiles.push(tile);
        }
    }

    let positive_count = tiles.len();
    for i in 0..positive_count {
        let (va, vb, vo) = (tiles[i].va, tiles[i].vb, tiles[i].vo);
        let mirrors = [
            // Across (A, B): O reflects.
            TriTile {
                va,
                vb,
                vo: geom.reflect_across(&va, &vb, &vo),
                positive: false,
                element: None,
            },
            // Across (B, O): A reflects.
            TriTile {
                va: geom.reflect_across(&vb, &vo, &va),
                vb,
                vo,
                positive: false,
                element: None,
            },
            // Across (O, A): B reflects.
            TriTile {
                va,
                vb: geom.reflect_across(&vo, &va, &vb),
                vo,
                positive: false,
                element: None,
            },
        ];
        for tile in mirrors {
            let (_, fresh) = index.get_or_insert(&tile.key());
            if fresh {
                tiles.push(tile);
            }
        }
    }
    tiles
}
