//! Acceptance suite: one test per shipped guarantee, each printing a
//! PASS/FAIL line with its runtime. Budgets are asserted in-code.
//!
//!     cargo test --test acceptance -- --nocapture

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use vondyck::cayley::{build_cayley, graphs_equal, verify_vertex_regularity, EdgeColor};
use vondyck::coset::{build_coset_geometry, verify_b_equivariance, verify_edge_action};
use vondyck::geometry::{Geometry, EPS_IDENTITY};
use vondyck::presentation::{GeneratorLetter, Word};
use vondyck::svg::{parse_metadata_counts, render_derived, render_tiling, RenderStyle};
use vondyck::tiling::{
    build_polygon_tiling, derived_equals_cayley, derived_tiling, enlarge, enumerate_dnnn,
    identify_skeleton_with_coset_geometry, ring_boundary, PolygonTiling, TileSet,
};
use vondyck::{
    enumerate_elements, ElementId, ElementStore, GroupModel, SearchBound, VonDyckParams,
};

fn params(a: u32, b: u32, c: u32) -> VonDyckParams {
    VonDyckParams::new(a, b, c).unwrap()
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("PASS  {criterion} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion}: {elapsed:.2?} exceeded the {budget:.2?} budget"
    );
}

#[test]
fn criterion_1_toy_z6_counts_and_duality() {
    let start = Instant::now();
    let store = enumerate_elements(GroupModel::ToyZ6, SearchBound::Unbounded).unwrap();
    let geometry = build_coset_geometry(&store);
    assert_eq!(geometry.h_cosets.len(), 3);
    assert_eq!(geometry.k_cosets.len(), 2);
    assert_eq!(geometry.edges.len(), 6);

    let cayley = build_cayley(&store);
    assert_eq!(cayley.vertices.len(), 6);
    assert_eq!(cayley.edge_count(EdgeColor::X), 6);
    assert_eq!(cayley.edge_count(EdgeColor::Y), 6);

    // b is a bijection from elements to edges.
    let images: BTreeSet<usize> = (0..6).map(|d| geometry.b_map(d).unwrap()).collect();
    assert_eq!(images.len(), 6);

    // Reconstruction equals the direct build exactly.
    let rebuilt = geometry.reconstruct_cayley(&store);
    assert!(graphs_equal(&rebuilt, &cayley));

    finish(
        "criterion 1: Z6 toy model counts and duality",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_burnside_b23() {
    let start = Instant::now();

    // The closed-form multiplication is validated against the brute-force
    // matrix model over all 27 × 27 products before the store is trusted.
    let x = Heisenberg::x();
    let y = Heisenberg::y();
    let comm = Heisenberg::commutator(x, y);
    let phi = |n: vondyck::B23NormalForm| {
        x.pow(n.alpha as u32)
            .mul(y.pow(n.beta as u32))
            .mul(comm.pow(n.gamma as u32))
    };
    let forms: Vec<vondyck::B23NormalForm> = (0..27u8)
        .map(|i| vondyck::B23NormalForm::new(i % 3, (i / 3) % 3, i / 9))
        .collect();
    let closure = heisenberg_closure();
    assert_eq!(closure.len(), 27);
    for &u in &forms {
        for &v in &forms {
            assert_eq!(phi(vondyck::b23_multiply(u, v)), phi(u).mul(phi(v)));
        }
    }

    let store = enumerate_elements(GroupModel::BurnsideB23, SearchBound::Unbounded).unwrap();
    assert_eq!(store.len(), 27);

    let geometry = build_coset_geometry(&store);
    assert_eq!(geometry.h_cosets.len(), 9);
    assert_eq!(geometry.k_cosets.len(), 9);
    assert_eq!(geometry.edges.len(), 27);

    let cayley = build_cayley(&store);
    assert_eq!(cayley.vertices.len(), 27);

    assert!(verify_edge_action(&geometry, &store).unwrap().passed());
    assert!(verify_b_equivariance(&geometry, &store).unwrap().passed());
    assert!(verify_vertex_regularity(&cayley, &store).unwrap().passed());
    let rebuilt = geometry.reconstruct_cayley(&store);
    assert!(graphs_equal(&rebuilt, &cayley));

    finish(
        "criterion 2: B(2,3) order, counts, exhaustive duality",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_3_spherical_closures() {
    let start = Instant::now();
    let mut cases: Vec<(u32, u32, u32, usize)> =
        vec![(2, 3, 3, 12), (2, 3, 4, 24), (2, 3, 5, 60)];
    for c in 2..=6 {
        cases.push((2, 2, c, 2 * c as usize));
    }
    for (a, b, c, order) in cases {
        let p = params(a, b, c);
        let store = enumerate_elements(GroupModel::Geometric(p), SearchBound::Unbounded).unwrap();
        assert!(store.complete(), "({a},{b},{c}) closed");
        assert_eq!(store.len(), order, "({a},{b},{c}) order");
        // Independent matrix-closure oracle.
        assert_eq!(sphere_closure(a, b, c).len(), order, "({a},{b},{c}) oracle");
        // Relator residuals.
        let geom = store.geometry().unwrap();
        for w in [
            Word::power(GeneratorLetter::X, a),
            Word::power(GeneratorLetter::Y, b),
            Word::xy_power(c as i64),
        ] {
            let residual = geom.max_probe_displacement(&geom.evaluate_word(&w));
            assert!(residual < EPS_IDENTITY, "({a},{b},{c}) residual {residual:e}");
        }
    }
    finish(
        "criterion 3: spherical closures 12/24/60/2c vs matrix oracle",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_4_ring_counts() {
    let start = Instant::now();

    // (3,3,3): the first two enlargements of {P0}.
    let mut tiling = PolygonTiling::basic(params(3, 3, 3));
    let q: TileSet = [0].into_iter().collect();
    let boundary = ring_boundary(&tiling, &q).unwrap();
    assert_eq!(boundary.len(), 6);
    assert_eq!(boundary.hinge_sum(), 6);
    let (flower, added) = enlarge(&mut tiling, &q, 1).unwrap();
    assert_eq!(added.len(), 6); // 6·(3−1) − 6

    let boundary = ring_boundary(&tiling, &flower).unwrap();
    assert_eq!(boundary.len(), 18);
    let expected = 18 * 2 - boundary.hinge_sum() as i64;
    let (_, added) = enlarge(&mut tiling, &flower, 2).unwrap();
    assert_eq!(added.len() as i64, expected);
    assert_eq!(added.len(), 12);

    // (4,4,4): the first enlargement of {P0}.
    let mut tiling = PolygonTiling::basic(params(4, 4, 4));
    let q: TileSet = [0].into_iter().collect();
    let (_, added) = enlarge(&mut tiling, &q, 1).unwrap();
    assert_eq!(added.len(), 16); // 8·(4−1) − 8

    finish(
        "criterion 4: ring enlargement counts match the angle formula",
        start,
        Duration::from_secs(10),
    );
}

/// Resolve every enumerated edge against a breadth-first store, deepening
/// the search until all labels land, and return the store.
fn resolving_store(n: u32, enumeration: &vondyck::tiling::Enumeration) -> ElementStore {
    let p = params(n, n, n);
    let geometry = Geometry::new(p);
    let mut store =
        enumerate_elements(GroupModel::Geometric(p), SearchBound::Depth(4)).unwrap();
    for depth in 5..=16u32 {
        let unresolved = enumeration.rows.iter().any(|row| {
            store
                .resolve_isometry(&geometry.evaluate_word(&row.word))
                .is_none()
        });
        if !unresolved {
            break;
        }
        store.deepen(depth);
    }
    store
}

#[test]
fn criterion_5_enumeration_matches_breadth_first_search() {
    let start = Instant::now();
    for (n, rings) in [(3u32, 3u32), (4, 2)] {
        let enumeration = enumerate_dnnn(n, rings).unwrap();

        // No repetitions.
        let mut fps: Vec<_> = enumeration.rows.iter().map(|r| r.fingerprint.clone()).collect();
        let total = fps.len();
        fps.sort();
        fps.dedup();
        assert_eq!(fps.len(), total, "n={n}: duplicate fingerprints");

        // The enumerated edges coincide with the store elements whose edges
        // lie inside the region.
        let store = resolving_store(n, &enumeration);
        let geometry = store.geometry().unwrap().clone();
        let mut enumerated: BTreeSet<ElementId> = BTreeSet::new();
        for row in &enumeration.rows {
            let id = store
                .resolve_isometry(&geometry.evaluate_word(&row.word))
                .unwrap_or_else(|| panic!("n={n}: row {} did not resolve", row.index));
            assert!(enumerated.insert(id), "n={n}: row {} repeats an element", row.index);
        }

        // Region edge set, as quantized (A, B) endpoint pairs.
        let mut region_edges = vondyck::geometry::CoordIndex::new();
        for &t in &enumeration.region {
            let tile = enumeration.tiling.tile(t);
            for j in 0..enumeration.tiling.sides() {
                let (a_pos, b_pos) = enumeration.tiling.edge_endpoint_positions(j);
                let mut coords = tile.verts[a_pos].coords();
                coords.extend(tile.verts[b_pos].coords());
                region_edges.get_or_insert(&coords);
            }
        }
        let tri = geometry.triangle;
        let mut in_region: BTreeSet<ElementId> = BTreeSet::new();
        for id in 0..store.len() as ElementId {
            let iso = store.isometry(id).unwrap();
            let mut coords = iso.apply(&tri.va).coords();
            coords.extend(iso.apply(&tri.vb).coords());
            if region_edges.lookup(&coords).is_some() {
                in_region.insert(id);
            }
        }
        assert_eq!(
            enumerated, in_region,
            "n={n}: enumeration does not match the search region"
        );
    }
    finish(
        "criterion 5: ring enumeration = breadth-first region, no repetitions",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_6_truncated_duality() {
    let start = Instant::now();
    for (p, depth) in [(params(3, 3, 3), 4u32), (params(4, 4, 4), 2)] {
        let (tiling, mut store, skeleton) = build_polygon_tiling(p, depth).unwrap();
        let geometry = build_coset_geometry(&store);

        // Interior-restricted reconstruction equals the direct graph.
        let labels = geometry.label_set();
        assert!(!labels.is_empty());
        let rebuilt = geometry.reconstruct_cayley(&store);
        let direct = build_cayley(&store);
        assert!(
            graphs_equal(&rebuilt.restricted(&labels), &direct.restricted(&labels)),
            "{p} depth {depth}: reconstruction mismatch"
        );

        // Skeleton = coset geometry.
        let identify = identify_skeleton_with_coset_geometry(&skeleton, &geometry, &store);
        assert!(identify.passed(), "{p}: {identify}");

        // Derived tiling = Cayley graph on the interior.
        let derived = derived_tiling(&tiling, &mut store);
        let cayley = build_cayley(&store);
        let interior: BTreeSet<ElementId> = store.ids_within_depth(depth).into_iter().collect();
        let compare = derived_equals_cayley(&derived, &cayley, &interior);
        assert!(compare.passed(), "{p}: {compare}");
    }
    finish(
        "criterion 6: truncated duality for (3,3,3) depth 4 and (4,4,4) depth 2",
        start,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_7_property_suites() {
    let start = Instant::now();

    // Exhaustive on the finite models.
    for model in [
        GroupModel::ToyZ6,
        GroupModel::BurnsideB23,
        GroupModel::Geometric(params(2, 3, 3)),
        GroupModel::Geometric(params(2, 3, 4)),
    ] {
        let store = enumerate_elements(model, SearchBound::Unbounded).unwrap();
        let geometry = build_coset_geometry(&store);
        let cayley = build_cayley(&store);

        // Pairwise coset intersections have at most one element.
        for h in &geometry.h_cosets {
            for k in &geometry.k_cosets {
                let common = h
                    .members
                    .iter()
                    .filter(|m| k.members.binary_search(m).is_ok())
                    .count();
                assert!(common <= 1);
            }
        }

        // Label equivariance over all (g, edge) pairs.
        for g in 0..store.len() as ElementId {
            for e in &geometry.edges {
                let mapped = store.multiply(g, e.label).unwrap();
                let h = geometry.h_coset_of(mapped).unwrap();
                let k = geometry.k_coset_of(mapped).unwrap();
                assert_eq!(geometry.edge_label(h, k).unwrap(), mapped);
            }
        }

        // ψ cocycle on every vertex star.
        let (a_order, b_order) = orders_of(&store);
        let mut star_h = vec![Vec::new(); geometry.h_cosets.len()];
        let mut star_k = vec![Vec::new(); geometry.k_cosets.len()];
        for (i, e) in geometry.edges.iter().enumerate() {
            star_h[e.h].push(i);
            star_k[e.k].push(i);
        }
        for (stars, order) in [(&star_h, a_order), (&star_k, b_order)] {
            for star in stars {
                for &e1 in star {
                    for &e2 in star {
                        for &e3 in star {
                            let r12 = geometry.psi(&store, e1, e2).unwrap().len() as u32;
                            let r23 = geometry.psi(&store, e2, e3).unwrap().len() as u32;
                            let r13 = geometry.psi(&store, e1, e3).unwrap().len() as u32;
                            assert_eq!((r12 + r23) % order, r13);
                        }
                    }
                }
            }
        }

        // Per-color cycle lengths divide the generator orders.
        let x_cycles = cayley.cycle_structure(&[EdgeColor::X]).unwrap();
        assert!(x_cycles.iter().all(|&l| a_order % l as u32 == 0));
        let y_cycles = cayley.cycle_structure(&[EdgeColor::Y]).unwrap();
        assert!(y_cycles.iter().all(|&l| b_order % l as u32 == 0));
        if let GroupModel::Geometric(p) = model {
            let xy = cayley
                .cycle_structure(&[EdgeColor::X, EdgeColor::Y])
                .unwrap();
            assert!(xy.iter().all(|&l| l as u32 == p.c));
        }

        // b-equivariance over all pairs.
        assert!(verify_b_equivariance(&geometry, &store).unwrap().passed());
    }

    // Sampled on the truncated models: at least 10³ cases per property.
    for (p, depth) in [(params(3, 3, 3), 5u32), (params(4, 4, 4), 3)] {
        let store =
            enumerate_elements(GroupModel::Geometric(p), SearchBound::Depth(depth + p.a.max(p.b)))
                .unwrap();
        let geometry = build_coset_geometry(&store);
        let mut rng = XorShift(0x9e3779b97f4a7c15);

        // Intersections.
        let mut checked = 0;
        while checked < 1000 {
            let h = &geometry.h_cosets[rng.below(geometry.h_cosets.len())];
            let k = &geometry.k_cosets[rng.below(geometry.k_cosets.len())];
            let common = h
                .members
                .iter()
                .filter(|m| k.members.binary_search(m).is_ok())
                .count();
            assert!(common <= 1);
            checked += 1;
        }

        // Label equivariance, where the product stays in range.
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 1000 && attempts < 200_000 {
            attempts += 1;
            let g = rng.below(store.len()) as ElementId;
            let e = &geometry.edges[rng.below(geometry.edges.len())];
            let Ok(mapped) = store.multiply(g, e.label) else {
                continue;
            };
            let (Some(h), Some(k)) = (geometry.h_coset_of(mapped), geometry.k_coset_of(mapped))
            else {
                continue;
            };
            assert_eq!(geometry.edge_label(h, k).unwrap(), mapped);
            checked += 1;
        }
        assert!(checked >= 1000, "{p}: only {checked} equivariance samples");

        // ψ cocycle on sampled stars.
        let mut star_h = vec![Vec::new(); geometry.h_cosets.len()];
        for (i, e) in geometry.edges.iter().enumerate() {
            star_h[e.h].push(i);
        }
        let mut checked = 0;
        while checked < 1000 {
            let star = &star_h[rng.below(star_h.len())];
            let e1 = star[rng.below(star.len())];
            let e2 = star[rng.below(star.len())];
            let e3 = star[rng.below(star.len())];
            let r12 = geometry.psi(&store, e1, e2).unwrap().len() as u32;
            let r23 = geometry.psi(&store, e2, e3).unwrap().len() as u32;
            let r13 = geometry.psi(&store, e1, e3).unwrap().len() as u32;
            assert_eq!((r12 + r23) % p.a, r13);
            checked += 1;
        }

        // Interior x-cycles close with length dividing a (here exactly a).
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 1000 && attempts < 200_000 {
            attempts += 1;
            let d = rng.below(store.len()) as ElementId;
            let mut cur = d;
            let mut len = 0;
            let closed = loop {
                match store.act(cur, GeneratorLetter::X) {
                    Some(next) => {
                        cur = next;
                        len += 1;
                        if cur == d {
                            break true;
                        }
                        if len > p.a {
                            break false;
                        }
                    }
                    None => break false,
                }
            };
            if closed {
                assert_eq!(len, p.a);
                checked += 1;
            }
        }
        assert!(checked >= 1000, "{p}: only {checked} cycle samples");

        // b-equivariance via the geometry edges, in range.
        let mut checked = 0;
        let mut attempts = 0;
        while checked < 1000 && attempts < 400_000 {
            attempts += 1;
            let dp = geometry.edges[rng.below(geometry.edges.len())].label;
            let d = geometry.edges[rng.below(geometry.edges.len())].label;
            let Ok(product) = store.multiply(dp, d) else {
                continue;
            };
            let Ok(edge) = geometry.b_map(product) else {
                continue;
            };
            assert_eq!(geometry.edge(edge).label, product);
            let (Some(h), Some(k)) = (
                geometry.h_coset_of(product),
                geometry.k_coset_of(product),
            ) else {
                continue;
            };
            assert_eq!((geometry.edge(edge).h, geometry.edge(edge).k), (h, k));
            checked += 1;
        }
        assert!(checked >= 1000, "{p}: only {checked} b-map samples");
    }

    finish(
        "criterion 7: property suites, exhaustive finite / sampled truncated",
        start,
        Duration::from_secs(60),
    );
}

fn orders_of(store: &ElementStore) -> (u32, u32) {
    match store.model {
        GroupModel::Geometric(p) => (p.a, p.b),
        GroupModel::ToyZ6 => (2, 3),
        GroupModel::BurnsideB23 => (3, 3),
    }
}

#[test]
fn criterion_8_figure_smoke_tests() {
    let start = Instant::now();

    // Derived tiling of (3,3,3): the trihexagonal pattern.
    let (tiling, mut store, _skeleton) = build_polygon_tiling(params(3, 3, 3), 3).unwrap();
    let derived = derived_tiling(&tiling, &mut store);
    let svg = render_derived(&tiling, &derived, RenderStyle::default()).unwrap();
    assert_valid_xml(&svg);
    let (what, vertices, edges) = parse_metadata_counts(&svg).unwrap();
    assert_eq!(what, "derived");
    assert_eq!(vertices, derived.vertices.len());
    assert_eq!(edges, derived.edges.len());

    // Polygon tiling of (4,4,4) in the disk.
    let (tiling, _store, _skeleton) = build_polygon_tiling(params(4, 4, 4), 2).unwrap();
    let svg = render_tiling(&tiling, RenderStyle::default()).unwrap();
    assert_valid_xml(&svg);
    let (what, _, edges) = parse_metadata_counts(&svg).unwrap();
    assert_eq!(what, "tiling");
    assert_eq!(edges, tiling.tile_count() * tiling.sides());

    finish(
        "criterion 8: SVG figures parse and carry matching counts",
        start,
        Duration::from_secs(30),
    );
}

fn assert_valid_xml(svg: &str) {
    let mut reader = quick_xml::Reader::from_str(svg);
    let mut depth = 0i64;
    loop {
        match reader.read_event() {
            Ok(quick_xml::events::Event::Start(_)) => depth += 1,
            Ok(quick_xml::events::Event::End(_)) => {
                depth -= 1;
                assert!(depth >= 0, "unbalanced closing tag");
            }
            Ok(quick_xml::events::Event::Eof) => break,
            Ok(_) => {}
            Err(e) => panic!("invalid XML: {e}"),
        }
    }
    assert_eq!(depth, 0, "unbalanced tags");
}
