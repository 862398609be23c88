//! Words over {x, x⁻¹, y, y⁻¹}: parsing, free reduction, power-relator
//! normalization, and geometric evaluation against the defining relators.
//!
//!     cargo run --example word_arithmetic

use vondyck::geometry::Geometry;
use vondyck::{parse_word, VonDyckParams};

fn main() {
    let params = VonDyckParams::new(4, 4, 4).unwrap();
    let geom = Geometry::new(params);

    for text in [
        "x y x^-1",
        "x x^-1 y",
        "x^5 y^4",
        "x y x y x y x y",
        "X Y x y",
    ] {
        let word = parse_word(text).unwrap();
        let reduced = word.free_reduce();
        let normalized = reduced.torsion_normalize(params);
        let displacement = geom.max_probe_displacement(&geom.evaluate_word(&word));
        println!(
            "{text:<16} reduces to {:<12} normalizes to {:<10} {}",
            reduced.to_string(),
            normalized.to_string(),
            if displacement < 1e-9 {
                "= 1 in D(4,4,4)".to_string()
            } else {
                format!("moves the basic triangle by {displacement:.3}")
            }
        );
    }
}
