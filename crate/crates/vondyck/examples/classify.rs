//! Curvature classification: which surface carries the triangle tiling of
//! D(a,b,c), and the three Euclidean parameter triples.
//!
//!     cargo run --example classify

use vondyck::{classify_curvature, euclidean_triples, VonDyckParams};

fn main() {
    println!("triple      1/a+1/b+1/c vs 1   surface");
    for (a, b, c) in [
        (2, 3, 3),
        (2, 3, 4),
        (2, 3, 5),
        (3, 3, 3),
        (2, 4, 4),
        (2, 3, 6),
        (4, 4, 4),
        (2, 3, 7),
        (5, 5, 5),
    ] {
        let params = VonDyckParams::new(a, b, c).unwrap();
        let class = classify_curvature(params);
        println!("{params:<11} {:>18}   {class}", sign_text(params));
    }

    println!();
    println!("Euclidean triples (all solutions of 1/a + 1/b + 1/c = 1):");
    for params in euclidean_triples() {
        println!("  {params}");
    }
}

fn sign_text(p: VonDyckParams) -> &'static str {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    match (b * c + a * c + a * b).cmp(&(a * b * c)) {
        std::cmp::Ordering::Greater => "> 1",
        std::cmp::Ordering::Equal => "= 1",
        std::cmp::Ordering::Less => "< 1",
    }
}
