//! Duality on infinite groups: the Euclidean D(3,3,3) and hyperbolic
//! D(4,4,4) do not close, so the structures are built to a finite depth and
//! the verifications run on interior elements, where truncation cannot
//! fabricate or lose edges.
//!
//!     cargo run --example truncated_duality

use std::collections::BTreeSet;

use vondyck::cayley::build_cayley;
use vondyck::coset::build_coset_geometry;
use vondyck::tiling::{
    build_polygon_tiling, derived_equals_cayley, derived_tiling,
    identify_skeleton_with_coset_geometry,
};
use vondyck::{ElementId, VonDyckParams};

fn main() {
    for (a, b, c, depth) in [(3, 3, 3, 4), (4, 4, 4, 2)] {
        let params = VonDyckParams::new(a, b, c).unwrap();
        println!("D{params} at search depth {depth}:");
        let (tiling, mut store, skeleton) = build_polygon_tiling(params, depth).unwrap();
        println!(
            "  {} tiles, {} skeleton edges, {} stored elements",
            tiling.tile_count(),
            skeleton.edges.len(),
            store.len()
        );

        let geometry = build_coset_geometry(&store);
        let identify = identify_skeleton_with_coset_geometry(&skeleton, &geometry, &store);
        println!("  {identify}");

        let derived = derived_tiling(&tiling, &mut store);
        let cayley = build_cayley(&store);
        let interior: BTreeSet<ElementId> = store.ids_within_depth(depth).into_iter().collect();
        let compare = derived_equals_cayley(&derived, &cayley, &interior);
        println!("  {compare}");

        let rebuilt = geometry.reconstruct_cayley(&store);
        let labels = geometry.label_set();
        let equal = vondyck::graphs_equal(&rebuilt, &cayley.restricted(&labels));
        println!(
            "  ψ-reconstruction on {} included labels: {}",
            labels.len(),
            if equal { "matches" } else { "MISMATCH" }
        );
        println!();
    }
}
