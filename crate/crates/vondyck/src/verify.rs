//! End-to-end duality verification for one model: edge action, b-map
//! equivariance, ψ-reconstruction of the Cayley graph, and for geometric
//! models the two tiling identifications. Complete stores are checked
//! exhaustively; truncated stores are checked on their interiors.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cayley::{build_cayley, graph_difference, graphs_equal, verify_vertex_regularity};
use crate::coset::{build_coset_geometry, verify_b_equivariance, verify_edge_action, CosetGeometry};
use crate::group::{
    enumerate_elements, ElementId, ElementStore, GroupError, GroupModel, SearchBound,
};
use crate::presentation::{classify_curvature, CurvatureClass, VonDyckParams};
use crate::report::VerificationReport;
use crate::tiling::{
    abstract_derived, abstract_skeleton, build_polygon_tiling, derived_equals_cayley,
    derived_tiling, identify_skeleton_with_coset_geometry, TilingError,
};

#[derive(Error, Debug)]
pub enum VerifyError {
    #[error("geometric model {0} does not close; pass a search depth")]
    DepthRequired(VonDyckParams),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

/// Build the store a verification run works on.
pub fn store_for(model: GroupModel, depth: Option<u32>) -> Result<ElementStore, VerifyError> {
    let bound = match model {
        GroupModel::Geometric(params)
            if classify_curvature(params) != CurvatureClass::Spherical =>
        {
            SearchBound::Depth(depth.ok_or(VerifyError::DepthRequired(params))?)
        }
        _ => SearchBound::Unbounded,
    };
    Ok(enumerate_elements(model, bound)?)
}

fn truncated_edge_action(geometry: &CosetGeometry, store: &ElementStore) -> VerificationReport {
    let mut report = VerificationReport::new("edge action on included edges");
    report.record(!geometry.edges.is_empty(), || {
        "truncated geometry is empty; increase the search depth".into()
    });
    for (i, e) in geometry.edges.iter().enumerate() {
        report.record(
            geometry.h_coset_of(e.label) == Some(e.h) && geometry.k_coset_of(e.label) == Some(e.k),
            || format!("label of edge {i} does not carry the basic edge onto it"),
        );
    }
    // Regularity in the truncated setting: the included H- and K-cosets of
    // the identity still intersect only in the identity.
    if let (Some(h), Some(k)) = (geometry.h_coset_of(0), geometry.k_coset_of(0)) {
        let h = &geometry.h_cosets[h];
        let k = &geometry.k_cosets[k];
        let common: Vec<ElementId> = h
            .members
            .iter()
            .copied()
            .filter(|m| k.members.contains(m))
            .collect();
        report.record(common == vec![0], || format!("H ∩ K = {common:?}"));
    }
    let _ = store;
    report
}

fn truncated_b_equivariance(
    geometry: &CosetGeometry,
    store: &ElementStore,
    samples: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new("b-map equivariance (sampled, in range)");
    let labels: Vec<ElementId> = geometry.edges.iter().map(|e| e.label).collect();
    if labels.is_empty() {
        report.record(false, || "truncated geometry has no labeled edges".into());
        return report;
    }
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < samples * 64 {
        attempts += 1;
        let dp = labels[(next() % labels.len() as u64) as usize];
        let d = labels[(next() % labels.len() as u64) as usize];
        let Ok(product) = store.multiply(dp, d) else {
            continue;
        };
        let Ok(lhs) = geometry.b_map(product) else {
            continue;
        };
        // d'·b(d): map every member of both cosets of b(d); the images must
        // fill single cosets forming the edge labeled d'd.
        let Ok(e_idx) = geometry.b_map(d) else {
            continue;
        };
        let e = geometry.edges[e_idx];
        let map_members = |members: &[ElementId], is_h: bool| -> Option<usize> {
            let mut image = None;
            for &m in members {
                let mapped = store.multiply(dp, m).ok()?;
                let coset = if is_h {
                    geometry.h_coset_of(mapped)?
                } else {
                    geometry.k_coset_of(mapped)?
                };
                match image {
                    None => image = Some(coset),
                    Some(prev) if prev != coset => return None,
                    _ => {}
                }
            }
            image
        };
        let rhs_h = map_members(&geometry.h_cosets[e.h].members, true);
        let rhs_k = map_members(&geometry.k_cosets[e.k].members, false);
        let (Some(h), Some(k)) = (rhs_h, rhs_k) else {
            continue; // image leaves the truncated region
        };
        report.record(
            geometry.edges[lhs].h == h && geometry.edges[lhs].k == k,
            || format!("b({dp}·{d}) is not {dp}·b({d})"),
        );
        done += 1;
    }
    report
}

/// Run the verification suite. Returns one report per check; the run passes
/// when every report does.
pub fn run_verification(
    model: GroupModel,
    depth: Option<u32>,
) -> Result<Vec<VerificationReport>, VerifyError> {
    // The graph-level checks on a truncated model need cosets of the
    // requested depth to be realized, which takes one generator-order of
    // extra search margin (the same margin the tiling builder uses).
    let store = match model {
        GroupModel::Geometric(params)
            if classify_curvature(params) != CurvatureClass::Spherical =>
        {
            let depth = depth.ok_or(VerifyError::DepthRequired(params))?;
            let bound = SearchBound::Depth(depth + params.a.max(params.b));
            enumerate_elements(model, bound)?
        }
        _ => store_for(model, depth)?,
    };
    let geometry = build_coset_geometry(&store);
    let cayley = build_cayley(&store);
    let mut reports = Vec::new();

    if store.complete() {
        reports.push(verify_edge_action(&geometry, &store).expect("complete store"));
        reports.push(verify_b_equivariance(&geometry, &store).expect("complete store"));
        reports.push(verify_vertex_regularity(&cayley, &store).expect("complete store"));

        let rebuilt = geometry.reconstruct_cayley(&store);
        let mut report = VerificationReport::new("ψ-reconstruction equals the Cayley graph");
        let equal = graphs_equal(&rebuilt, &cayley);
        report.checked = rebuilt.edges.len().max(cayley.edges.len());
        if !equal {
            for line in graph_difference(&rebuilt, &cayley) {
                report.record(false, || line.clone());
            }
            report.record(false, || "graphs differ".into());
        }
        reports.push(report);
    } else {
        reports.push(truncated_edge_action(&geometry, &store));
        reports.push(truncated_b_equivariance(&geometry, &store, 1000));

        let labels = geometry.label_set();
        let rebuilt = geometry.reconstruct_cayley(&store);
        let direct = cayley.restricted(&labels);
        let mut report =
            VerificationReport::new("ψ-reconstruction equals the Cayley graph (interior)");
        let equal = graphs_equal(&rebuilt.restricted(&labels), &direct);
        report.checked = direct.edges.len().max(1);
        if !equal {
            for line in graph_difference(&rebuilt.restricted(&labels), &direct) {
                report.record(false, || line.clone());
            }
            report.record(false, || "graphs differ".into());
        }
        reports.push(report);
    }

    match model {
        GroupModel::Geometric(params) => {
            let tiling_depth = depth.unwrap_or(0);
            let (tiling, mut tiling_store, skeleton) =
                build_polygon_tiling(params, tiling_depth)?;
            let tiling_geometry = build_coset_geometry(&tiling_store);
            reports.push(identify_skeleton_with_coset_geometry(
                &skeleton,
                &tiling_geometry,
                &tiling_store,
            ));
            let derived = derived_tiling(&tiling, &mut tiling_store);
            let tiling_cayley = build_cayley(&tiling_store);
            let restrict: BTreeSet<ElementId> = if tiling_store.complete() {
                tiling_cayley.vertices.iter().copied().collect()
            } else {
                tiling_store.ids_within_depth(tiling_depth).into_iter().collect()
            };
            reports.push(derived_equals_cayley(&derived, &tiling_cayley, &restrict));
        }
        _ => {
            // Abstract models: the skeleton and derived structure come from
            // the group itself.
            let skeleton = abstract_skeleton(&geometry);
            reports.push(identify_skeleton_with_coset_geometry(
                &skeleton, &geometry, &store,
            ));
            let derived = abstract_derived(&store);
            let all: BTreeSet<ElementId> = cayley.vertices.iter().copied().collect();
            reports.push(derived_equals_cayley(&derived, &cayley, &all));
        }
    }

    Ok(reports)
}
