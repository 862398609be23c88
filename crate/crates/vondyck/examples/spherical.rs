//! Spherical von Dyck groups are finite: the rotation search closes on its
//! own, recovering the classical orders 12, 24, 60 and 2c.
//!
//!     cargo run --example spherical

use vondyck::cayley::build_cayley;
use vondyck::geometry::EPS_IDENTITY;
use vondyck::presentation::{GeneratorLetter, Word};
use vondyck::{enumerate_elements, EdgeColor, GroupModel, SearchBound, VonDyckParams};

fn main() {
    for (a, b, c) in [(2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 2, 4), (2, 2, 6)] {
        let params = VonDyckParams::new(a, b, c).unwrap();
        let store =
            enumerate_elements(GroupModel::Geometric(params), SearchBound::Unbounded).unwrap();
        let geom = store.geometry().unwrap();

        // Relator residuals: the three defining words act as the identity.
        let residual = [
            Word::power(GeneratorLetter::X, a),
            Word::power(GeneratorLetter::Y, b),
            Word::xy_power(c as i64),
        ]
        .iter()
        .map(|w| geom.max_probe_displacement(&geom.evaluate_word(w)))
        .fold(0.0f64, f64::max);

        let cayley = build_cayley(&store);
        let xy = cayley
            .cycle_structure(&[EdgeColor::X, EdgeColor::Y])
            .unwrap();
        println!(
            "D{params}: order {}, closed = {}, max relator residual {:.2e} (tol {:.0e}), xy-cycles all of length {}",
            store.len(),
            store.complete(),
            residual,
            EPS_IDENTITY,
            xy[0]
        );
    }
}
