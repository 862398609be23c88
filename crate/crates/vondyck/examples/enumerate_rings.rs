//! Recursive enumeration of D(n,n,n): list the boundary words of the basic
//! 2n-gon, then enlarge ring by ring. Every enlargement adds exactly
//! N(n−1) − Σ i_k tiles, where N is the boundary length and 2π·i_k/n the
//! interior angle at the k-th boundary vertex.
//!
//!     cargo run --example enumerate_rings

use vondyck::tiling::enumerate_dnnn;

fn main() {
    for (n, rings) in [(3u32, 2u32), (4, 1)] {
        let e = enumerate_dnnn(n, rings).unwrap();
        println!("D({n},{n},{n}), {rings} ring(s): {} elements enumerated", e.rows.len());
        for s in &e.stats {
            println!(
                "  ring {}: boundary {} edges, angle sum {}, added {} tiles = {}·({}−1) − {}",
                s.ring, s.boundary_edges, s.hinge_sum, s.added_tiles, s.boundary_edges, n, s.hinge_sum
            );
        }
        println!("  first rows:");
        for row in e.rows.iter().take(10) {
            println!("    {:>3}  {}", row.index, row.word);
        }
        println!();
    }
}
