//! The free Burnside group B(2,3) = ⟨x, y | x³ = y³ = [x,y,x] = [x,y,y] = 1⟩:
//! 27 elements in the normal form x^α y^β [x,y]^γ, a 9+9 coset geometry with
//! 27 edges, and the full duality verification.
//!
//!     cargo run --example burnside

use vondyck::cayley::build_cayley;
use vondyck::coset::build_coset_geometry;
use vondyck::verify::run_verification;
use vondyck::{
    b23_multiply, enumerate_elements, B23NormalForm, GroupModel, SearchBound,
};

fn main() {
    let store = enumerate_elements(GroupModel::BurnsideB23, SearchBound::Unbounded).unwrap();
    println!("B(2,3) has {} elements", store.len());

    let x = B23NormalForm::new(1, 0, 0);
    let y = B23NormalForm::new(0, 1, 0);
    println!("xy  = {:?}", b23_multiply(x, y));
    println!("yx  = {:?}  (meta-abelian, not abelian)", b23_multiply(y, x));

    let geometry = build_coset_geometry(&store);
    let cayley = build_cayley(&store);
    println!(
        "coset geometry: {} + {} vertices, {} edges; Cayley graph: {} vertices",
        geometry.h_cosets.len(),
        geometry.k_cosets.len(),
        geometry.edges.len(),
        cayley.vertices.len()
    );

    // xy has order three, so the derived tile boundaries close after 6 arrows.
    let xy_cycles = cayley
        .cycle_structure(&[vondyck::EdgeColor::X, vondyck::EdgeColor::Y])
        .unwrap();
    println!("xy-cycle lengths: {xy_cycles:?}");

    println!();
    for report in run_verification(GroupModel::BurnsideB23, None).unwrap() {
        println!("{report}");
    }
}
