//! Write SVG figures: the trihexagonal derived tiling of the plane, the
//! hyperbolic octagon tiling of the Poincaré disk with its skeleton, and the
//! derived octagon ring.
//!
//!     cargo run --example render_figures
//!
//! Output lands in the current directory.

use vondyck::svg::{render_coset, render_derived, render_tiling, RenderStyle};
use vondyck::tiling::{build_polygon_tiling, derived_tiling};
use vondyck::VonDyckParams;

fn main() {
    // Trihexagonal pattern: the derived tiling of the hexagon tiling P(3,3,3).
    let params = VonDyckParams::new(3, 3, 3).unwrap();
    let (tiling, mut store, _skeleton) = build_polygon_tiling(params, 4).unwrap();
    let derived = derived_tiling(&tiling, &mut store);
    let svg = render_derived(&tiling, &derived, RenderStyle::default()).unwrap();
    std::fs::write("trihexagonal.svg", svg).unwrap();
    println!("wrote trihexagonal.svg ({} midpoints)", derived.vertices.len());

    // The hyperbolic tiling P(4,4,4) and its bipartite skeleton.
    let params = VonDyckParams::new(4, 4, 4).unwrap();
    let (tiling, _store, skeleton) = build_polygon_tiling(params, 2).unwrap();
    let svg = render_tiling(&tiling, RenderStyle::default()).unwrap();
    std::fs::write("octagons.svg", svg).unwrap();
    println!("wrote octagons.svg ({} tiles)", tiling.tile_count());

    let svg = render_coset(&tiling, &skeleton, RenderStyle::default()).unwrap();
    std::fs::write("octagon_skeleton.svg", svg).unwrap();
    println!("wrote octagon_skeleton.svg ({} labeled edges)", skeleton.edges.len());

    // The derived ring around the central octagon: the cycle of xy.
    let (tiling, mut store2, _) = build_polygon_tiling(params, 0).unwrap();
    let derived = derived_tiling(&tiling, &mut store2);
    let svg = render_derived(&tiling, &derived, RenderStyle::default()).unwrap();
    std::fs::write("octagon_ring.svg", svg).unwrap();
    println!("wrote octagon_ring.svg ({} arrows)", derived.edges.len());
}
