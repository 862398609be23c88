//! Deterministic DOT and JSON serializations of stores, graphs, geometries
//! and tilings. Identical inputs must produce byte-identical output, so
//! everything is emitted in id order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cayley::CayleyGraph;
use crate::coset::CosetGeometry;
use crate::group::{ElementStore, EXTERNAL_DEPTH};
use crate::tiling::{PolygonTiling, Skeleton};

#[derive(Serialize)]
struct StoreDump {
    schema: &'static str,
    model: String,
    complete: bool,
    elements: Vec<ElementRecord>,
    /// Per element: targets of right multiplication by x, y, x⁻¹, y⁻¹
    /// (null when unknown).
    action: Vec<[Option<u32>; 4]>,
}

#[derive(Serialize)]
struct ElementRecord {
    id: u32,
    word: String,
    fingerprint: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<u32>,
}

pub fn store_json(store: &ElementStore) -> String {
    let elements = (0..store.len() as u32)
        .map(|id| {
            let depth = store.depth(id);
            ElementRecord {
                id,
                word: store.canonical_word(id).unwrap().to_string(),
                fingerprint: store.fingerprint(id).0,
                depth: (depth != EXTERNAL_DEPTH).then_some(depth),
            }
        })
        .collect();
    let action = (0..store.len() as u32)
        .map(|id| {
            [
                store.act(id, crate::presentation::GeneratorLetter::X),
                store.act(id, crate::presentation::GeneratorLetter::Y),
                store.act(id, crate::presentation::GeneratorLetter::XInv),
                store.act(id, crate::presentation::GeneratorLetter::YInv),
            ]
        })
        .collect();
    let dump = StoreDump {
        schema: "element-store/1",
        model: format!("{:?}", store.model),
        complete: store.complete(),
        elements,
        action,
    };
    serde_json::to_string_pretty(&dump).unwrap()
}

#[derive(Serialize)]
struct CayleyVertexRecord {
    id: u32,
    word: String,
    interior: bool,
}

#[derive(Serialize)]
struct CayleyEdgeRecord {
    src: u32,
    dst: u32,
    color: &'static str,
}

#[derive(Serialize)]
struct CayleyDump {
    schema: &'static str,
    vertices: Vec<CayleyVertexRecord>,
    edges: Vec<CayleyEdgeRecord>,
}

pub fn cayley_json(graph: &CayleyGraph, store: &ElementStore) -> String {
    let dump = CayleyDump {
        schema: "cayley-graph/1",
        vertices: graph
            .vertices
            .iter()
            .map(|&id| CayleyVertexRecord {
                id,
                word: store.canonical_word(id).unwrap().to_string(),
                interior: graph.interior.contains(&id),
            })
            .collect(),
        edges: graph
            .edges
            .iter()
            .map(|e| CayleyEdgeRecord {
                src: e.src,
                dst: e.dst,
                color: e.color.name(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dump).unwrap()
}

pub fn cayley_dot(graph: &CayleyGraph, store: &ElementStore) -> String {
    let mut out = String::new();
    out.push_str("digraph cayley {\n");
    for &id in &graph.vertices {
        let word = store.canonical_word(id).unwrap();
        let _ = writeln!(out, "  n{id} [label=\"{word}\"];");
    }
    for e in &graph.edges {
        let _ = writeln!(out, "  n{} -> n{} [color={}];", e.src, e.dst, e.color.name());
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct CosetRecord {
    rep: u32,
    members: Vec<u32>,
}

#[derive(Serialize)]
struct CosetEdgeRecord {
    h: usize,
    k: usize,
    label: u32,
    word: String,
}

#[derive(Serialize)]
struct CosetDump {
    schema: &'static str,
    truncated: bool,
    h_vertices: Vec<CosetRecord>,
    k_vertices: Vec<CosetRecord>,
    edges: Vec<CosetEdgeRecord>,
}

pub fn coset_json(geometry: &CosetGeometry, store: &ElementStore) -> String {
    let dump = CosetDump {
        schema: "coset-geometry/1",
        truncated: geometry.truncated,
        h_vertices: geometry
            .h_cosets
            .iter()
            .map(|c| CosetRecord {
                rep: c.rep,
                members: c.members.clone(),
            })
            .collect(),
        k_vertices: geometry
            .k_cosets
            .iter()
            .map(|c| CosetRecord {
                rep: c.rep,
                members: c.members.clone(),
            })
            .collect(),
        edges: geometry
            .edges
            .iter()
            .map(|e| CosetEdgeRecord {
                h: e.h,
                k: e.k,
                label: e.label,
                word: store.canonical_word(e.label).unwrap().to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dump).unwrap()
}

pub fn coset_dot(geometry: &CosetGeometry, store: &ElementStore) -> String {
    let mut out = String::new();
    out.push_str("graph coset {\n");
    for (i, c) in geometry.h_cosets.iter().enumerate() {
        let word = store.canonical_word(c.rep).unwrap();
        let _ = writeln!(
            out,
            "  h{i} [type=H, color=red, label=\"{word} H\"];"
        );
    }
    for (i, c) in geometry.k_cosets.iter().enumerate() {
        let word = store.canonical_word(c.rep).unwrap();
        let _ = writeln!(
            out,
            "  k{i} [type=K, color=blue, label=\"{word} K\"];"
        );
    }
    for e in &geometry.edges {
        let word = store.canonical_word(e.label).unwrap();
        let _ = writeln!(out, "  h{} -- k{} [label=\"{word}\"];", e.h, e.k);
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct TileRecord {
    center: Vec<f64>,
    vertices: Vec<TileVertexRecord>,
    word: String,
}

#[derive(Serialize)]
struct TileVertexRecord {
    pos: Vec<f64>,
    vtype: &'static str,
}

#[derive(Serialize)]
struct SkeletonEdgeRecord {
    a_vertex: usize,
    b_vertex: usize,
    label: u32,
}

#[derive(Serialize)]
struct TilingDump {
    schema: &'static str,
    surface: String,
    sides: usize,
    tiles: Vec<TileRecord>,
    skeleton_edges: Vec<SkeletonEdgeRecord>,
}

pub fn tiling_json(tiling: &PolygonTiling, skeleton: &Skeleton) -> String {
    let dump = TilingDump {
        schema: "tiling/1",
        surface: tiling.geom.curvature.to_string(),
        sides: tiling.sides(),
        tiles: tiling
            .tiles()
            .iter()
            .map(|t| TileRecord {
                center: t.center.coords(),
                vertices: t
                    .verts
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| TileVertexRecord {
                        pos: v.coords(),
                        vtype: if pos % 2 == 0 { "A" } else { "B" },
                    })
                    .collect(),
                word: t.word.to_string(),
            })
            .collect(),
        skeleton_edges: skeleton
            .edges
            .iter()
            .map(|e| SkeletonEdgeRecord {
                a_vertex: e.a_vertex,
                b_vertex: e.b_vertex,
                label: e.label,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dump).unwrap()
}
