//! Recursive enumeration of the elements of D(n,n,n): list the 2n boundary
//! edges of the basic polygon, then repeatedly enlarge the sub-tiling by one
//! ring and list the edges of every added tile. Each edge is a group
//! element; fingerprints guarantee the list is free of repetitions.

use std::collections::HashMap;

use crate::geometry::Fingerprint;
use crate::presentation::{VonDyckParams, Word};

use super::{enlarge, PolygonTiling, TileSet, TilingError};

#[derive(Clone, Debug)]
pub struct EnumerationRow {
    pub index: usize,
    pub word: Word,
    pub fingerprint: Fingerprint,
}

/// Per-ring accounting: boundary length N, angle sum Σ i_k, and the number
/// of tiles the enlargement added (which must equal N(n−1) − Σ i_k).
#[derive(Clone, Copy, Debug)]
pub struct RingStats {
    pub ring: u32,
    pub boundary_edges: usize,
    pub hinge_sum: u64,
    pub added_tiles: usize,
}

#[derive(Debug)]
pub struct Enumeration {
    pub n: u32,
    pub rows: Vec<EnumerationRow>,
    pub stats: Vec<RingStats>,
    pub tiling: PolygonTiling,
    pub region: TileSet,
}

/// Enumerate the edges (= elements) of the region of P(n,n,n) covered by
/// `rings` enlargements of the basic polygon. Words are read off the
/// construction and torsion-normalized for readability; identity is decided
/// by fingerprint.
pub fn enumerate_dnnn(n: u32, rings: u32) -> Result<Enumeration, TilingError> {
    assert!(n >= 3, "enumeration is defined for n >= 3");
    let params = VonDyckParams::new(n, n, n).expect("n >= 3");
    let mut tiling = PolygonTiling::basic(params);
    let mut region: TileSet = [0].into_iter().collect();

    let mut rows = Vec::new();
    let mut seen: HashMap<Fingerprint, usize> = HashMap::new();
    let mut list_tile = |tiling: &PolygonTiling, t: usize, rows: &mut Vec<EnumerationRow>| {
        for &j in tiling.chain_edges() {
            let iso = tiling.edge_label_iso(t, j);
            let fingerprint = tiling.geom.fingerprint(&iso);
            if seen.contains_key(&fingerprint) {
                continue;
            }
            let word = tiling.edge_label_word(t, j).torsion_normalize(params);
            let index = rows.len();
            seen.insert(fingerprint.clone(), index);
            rows.push(EnumerationRow {
                index,
                word,
                fingerprint,
            });
        }
    };

    list_tile(&tiling, 0, &mut rows);

    let mut stats = Vec::new();
    for ring in 1..=rings {
        let boundary = super::ring_boundary(&tiling, &region)?;
        let (grown, added) = enlarge(&mut tiling, &region, ring)?;
        stats.push(RingStats {
            ring,
            boundary_edges: boundary.len(),
            hinge_sum: boundary.hinge_sum(),
            added_tiles: added.len(),
        });
        for t in added {
            list_tile(&tiling, t, &mut rows);
        }
        region = grown;
    }

    Ok(Enumeration {
        n,
        rows,
        stats,
        tiling,
        region,
    })
}
