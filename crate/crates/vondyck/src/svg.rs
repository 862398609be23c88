//! SVG rendering: coset geometries as labeled skeletons, Cayley graphs as
//! directed midpoint arrows, polygon and derived tilings. Euclidean models
//! use straight segments; hyperbolic models draw geodesics as circular arcs
//! orthogonal to the unit circle. Spherical models are not rendered.
//!
//! Every document embeds a `<metadata>` block with the vertex and edge
//! counts of the structure it depicts, so smoke tests can compare the file
//! against the in-memory graph.

use std::fmt::Write as _;

use crate::cayley::EdgeColor;
use crate::geometry::{Complex, SurfacePoint};
use crate::presentation::CurvatureClass;
use crate::tiling::{DerivedTiling, PolygonTiling, Skeleton, VertexType};

/// Colors and stroke settings; the defaults follow the convention A/H red,
/// B/K blue, with x-edges red and y-edges blue to match the vertex classes
/// they rotate about.
#[derive(Clone, Debug)]
pub struct RenderStyle {
    pub a_color: String,
    pub b_color: String,
    pub x_color: String,
    pub y_color: String,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub draw_disk_boundary: bool,
    pub arrowheads: bool,
    pub scale: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            a_color: "#cc2222".into(),
            b_color: "#2244cc".into(),
            x_color: "#cc2222".into(),
            y_color: "#2244cc".into(),
            stroke_width: 1.2,
            vertex_radius: 2.5,
            draw_disk_boundary: true,
            arrowheads: true,
            scale: 320.0,
        }
    }
}

impl RenderStyle {
    fn vertex_color(&self, t: VertexType) -> &str {
        match t {
            VertexType::A => &self.a_color,
            VertexType::B => &self.b_color,
            VertexType::O => "#999999",
        }
    }

    fn edge_color(&self, c: EdgeColor) -> &str {
        match c {
            EdgeColor::X => &self.x_color,
            EdgeColor::Y => &self.y_color,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("spherical models are not rendered")]
    SphericalModel,
    #[error("abstract models carry no geometry to render")]
    NoGeometry,
}

struct Canvas {
    body: String,
    style: RenderStyle,
    curvature: CurvatureClass,
    min: Complex,
    max: Complex,
}

fn fmt_coord(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v }; // normalize -0.0
    format!("{v:.6}")
}

impl Canvas {
    fn new(curvature: CurvatureClass, style: RenderStyle) -> Result<Canvas, RenderError> {
        if curvature == CurvatureClass::Spherical {
            return Err(RenderError::SphericalModel);
        }
        Ok(Canvas {
            body: String::new(),
            style,
            curvature,
            min: Complex::new(f64::MAX, f64::MAX),
            max: Complex::new(f64::MIN, f64::MIN),
        })
    }

    fn track(&mut self, z: Complex) {
        self.min.re = self.min.re.min(z.re);
        self.min.im = self.min.im.min(z.im);
        self.max.re = self.max.re.max(z.re);
        self.max.im = self.max.im.max(z.im);
    }

    fn point(&mut self, p: &SurfacePoint) -> Complex {
        let z = match p {
            SurfacePoint::Plane(z) | SurfacePoint::Disk(z) => *z,
            SurfacePoint::Sphere(_) => unreachable!("spherical rendering rejected"),
        };
        self.track(z);
        z
    }

    /// SVG path for the geodesic from p to q: a straight line in the plane,
    /// a circular arc orthogonal to the unit circle in the disk (with the
    /// diameter as the degenerate case).
    fn geodesic_path(&mut self, p: &SurfacePoint, q: &SurfacePoint) -> String {
        let z1 = self.point(p);
        let z2 = self.point(q);
        if self.curvature == CurvatureClass::Euclidean {
            return format!(
                "M {} {} L {} {}",
                fmt_coord(z1.re),
                fmt_coord(-z1.im),
                fmt_coord(z2.re),
                fmt_coord(-z2.im)
            );
        }
        // Orthogonality to the unit circle forces the arc's center o to
        // satisfy 2·Re(conj(o)·z) = |z|² + 1 for both endpoints.
        let det = 2.0 * (z1.re * z2.im - z1.im * z2.re);
        if det.abs() < 1e-9 {
            // Collinear with the origin: the geodesic is a diameter.
            return format!(
                "M {} {} L {} {}",
                fmt_coord(z1.re),
                fmt_coord(-z1.im),
                fmt_coord(z2.re),
                fmt_coord(-z2.im)
            );
        }
        let r1 = z1.norm_sq() + 1.0;
        let r2 = z2.norm_sq() + 1.0;
        let ox = (r1 * z2.im - r2 * z1.im) / det;
        let oy = (r2 * z1.re - r1 * z2.re) / det;
        let radius = (ox * ox + oy * oy - 1.0).max(0.0).sqrt();
        // Sweep: the y-axis flip inverts the orientation, so a positive
        // cross product around the center maps to sweep flag 0.
        let cross = (z1.re - ox) * (z2.im - oy) - (z1.im - oy) * (z2.re - ox);
        let sweep = if cross > 0.0 { 0 } else { 1 };
        format!(
            "M {} {} A {} {} 0 0 {} {} {}",
            fmt_coord(z1.re),
            fmt_coord(-z1.im),
            fmt_coord(radius),
            fmt_coord(radius),
            sweep,
            fmt_coord(z2.re),
            fmt_coord(-z2.im)
        )
    }

    fn edge(&mut self, p: &SurfacePoint, q: &SurfacePoint, color: &str, arrow: bool) {
        let path = self.geodesic_path(p, q);
        let marker = if arrow { " marker-end=\"url(#arrow)\"" } else { "" };
        // The viewBox is in world units; scale pixel widths down to match.
        let width = self.style.stroke_width / self.style.scale;
        let _ = writeln!(
            self.body,
            "  <path d=\"{path}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"{marker}/>",
            fmt_coord(width)
        );
    }

    fn dot(&mut self, p: &SurfacePoint, color: &str) {
        let z = self.point(p);
        let r = self.style.vertex_radius / self.style.scale;
        let _ = writeln!(
            self.body,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{color}\"/>",
            fmt_coord(z.re),
            fmt_coord(-z.im),
            fmt_coord(r)
        );
    }

    fn finish(self, what: &str, vertices: usize, edges: usize) -> String {
        let (min, max) = if self.curvature == CurvatureClass::Hyperbolic {
            (Complex::new(-1.05, -1.05), Complex::new(1.05, 1.05))
        } else {
            let pad = 0.6;
            (
                Complex::new(self.min.re - pad, self.min.im - pad),
                Complex::new(self.max.re + pad, self.max.im + pad),
            )
        };
        let scale = self.style.scale;
        let width = (max.re - min.re) * scale;
        let height = (max.im - min.im) * scale;
        let view = format!(
            "{} {} {} {}",
            fmt_coord(min.re),
            fmt_coord(-max.im),
            fmt_coord(max.re - min.re),
            fmt_coord(max.im - min.im)
        );
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"{view}\">"
        );
        let _ = writeln!(
            out,
            "  <metadata id=\"counts\">{{\"what\":\"{what}\",\"vertices\":{vertices},\"edges\":{edges}}}</metadata>"
        );
        if self.style.arrowheads {
            let _ = writeln!(
                out,
                "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
                 markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">\
                 <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"context-stroke\"/></marker></defs>"
            );
        }
        if self.curvature == CurvatureClass::Hyperbolic && self.style.draw_disk_boundary {
            out.push_str(
                "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#222222\" stroke-width=\"0.004\"/>\n",
            );
        }
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

/// The coset geometry as realized by the polygon skeleton: red A/H vertices,
/// blue B/K vertices, uncolored geodesic edges.
pub fn render_coset(
    tiling: &PolygonTiling,
    skeleton: &Skeleton,
    style: RenderStyle,
) -> Result<String, RenderError> {
    let mut canvas = Canvas::new(tiling.geom.curvature, style)?;
    for e in &skeleton.edges {
        let pa = skeleton.vertices[e.a_vertex].point.ok_or(RenderError::NoGeometry)?;
        let pb = skeleton.vertices[e.b_vertex].point.ok_or(RenderError::NoGeometry)?;
        canvas.edge(&pa, &pb, "#444444", false);
    }
    for v in &skeleton.vertices {
        let p = v.point.ok_or(RenderError::NoGeometry)?;
        let color = canvas.style.vertex_color(v.vtype).to_string();
        canvas.dot(&p, &color);
    }
    Ok(canvas.finish("coset", skeleton.vertices.len(), skeleton.edges.len()))
}

/// The polygon tiling's tile boundaries.
pub fn render_tiling(tiling: &PolygonTiling, style: RenderStyle) -> Result<String, RenderError> {
    let mut canvas = Canvas::new(tiling.geom.curvature, style)?;
    let sides = tiling.sides();
    let mut edges = 0;
    for t in tiling.tiles() {
        for j in 0..sides {
            let p = t.verts[j];
            let q = t.verts[(j + 1) % sides];
            canvas.edge(&p, &q, "#333333", false);
            edges += 1;
        }
    }
    let vertices = tiling.tiles().len() * sides;
    Ok(canvas.finish("tiling", vertices, edges))
}

/// The derived tiling: directed colored arrows between edge midpoints; this
/// is the Cayley graph drawn on the surface.
pub fn render_derived(
    tiling: &PolygonTiling,
    derived: &DerivedTiling,
    style: RenderStyle,
) -> Result<String, RenderError> {
    let mut canvas = Canvas::new(tiling.geom.curvature, style)?;
    for e in &derived.edges {
        let p = derived.vertices[&e.src].ok_or(RenderError::NoGeometry)?;
        let q = derived.vertices[&e.dst].ok_or(RenderError::NoGeometry)?;
        let color = canvas.style.edge_color(e.color.edge_color()).to_string();
        canvas.edge(&p, &q, &color, canvas.style.arrowheads);
    }
    for point in derived.vertices.values() {
        let p = point.ok_or(RenderError::NoGeometry)?;
        canvas.dot(&p, "#222222");
    }
    Ok(canvas.finish("derived", derived.vertices.len(), derived.edges.len()))
}

/// The Cayley graph drawn via the duality: vertices at edge midpoints of the
/// skeleton, overlaid on the faint tiling.
pub fn render_cayley(
    tiling: &PolygonTiling,
    derived: &DerivedTiling,
    style: RenderStyle,
) -> Result<String, RenderError> {
    // Same positions as the derived tiling; kept separate so callers can
    // style the two differently later.
    render_derived(tiling, derived, style).map(|s| s.replace("\"what\":\"derived\"", "\"what\":\"cayley\""))
}

/// Extract the metadata counts block of a rendered document.
pub fn parse_metadata_counts(svg: &str) -> Option<(String, usize, usize)> {
    let start = svg.find("<metadata id=\"counts\">")? + "<metadata id=\"counts\">".len();
    let end = svg[start..].find("</metadata>")? + start;
    let value: serde_json::Value = serde_json::from_str(&svg[start..end]).ok()?;
    Some((
        value["what"].as_str()?.to_string(),
        value["vertices"].as_u64()? as usize,
        value["edges"].as_u64()? as usize,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::VonDyckParams;
    use crate::tiling::{build_polygon_tiling, derived_tiling};

    fn params(a: u32, b: u32, c: u32) -> VonDyckParams {
        VonDyckParams::new(a, b, c).unwrap()
    }

    #[test]
    fn euclidean_render_has_no_arcs() {
        let (tiling, _store, skeleton) = build_polygon_tiling(params(3, 3, 3), 2).unwrap();
        let svg = render_coset(&tiling, &skeleton, RenderStyle::default()).unwrap();
        assert!(!svg.contains(" A "));
        let (what, v, e) = parse_metadata_counts(&svg).unwrap();
        assert_eq!(what, "coset");
        assert_eq!(v, skeleton.vertices.len());
        assert_eq!(e, skeleton.edges.len());
    }

    #[test]
    fn hyperbolic_render_uses_arcs_and_disk() {
        let (tiling, mut store, _skeleton) = build_polygon_tiling(params(4, 4, 4), 1).unwrap();
        let derived = derived_tiling(&tiling, &mut store);
        let svg = render_derived(&tiling, &derived, RenderStyle::default()).unwrap();
        assert!(svg.contains(" A "), "expected circular arcs");
        assert!(svg.contains("r=\"1\""), "expected the unit circle");
        let (_, v, e) = parse_metadata_counts(&svg).unwrap();
        assert_eq!(v, derived.vertices.len());
        assert_eq!(e, derived.edges.len());
    }

    #[test]
    fn hyperbolic_coset_render_counts_match_the_skeleton() {
        let (tiling, _store, skeleton) = build_polygon_tiling(params(4, 4, 4), 2).unwrap();
        let svg = render_coset(&tiling, &skeleton, RenderStyle::default()).unwrap();
        let (what, v, e) = parse_metadata_counts(&svg).unwrap();
        assert_eq!(what, "coset");
        assert_eq!(v, skeleton.vertices.len());
        assert_eq!(e, skeleton.edges.len());
    }

    #[test]
    fn cayley_render_counts_match_the_derived_tiling() {
        let (tiling, mut store, _skeleton) = build_polygon_tiling(params(3, 3, 3), 2).unwrap();
        let derived = derived_tiling(&tiling, &mut store);
        let svg = render_cayley(&tiling, &derived, RenderStyle::default()).unwrap();
        let (what, v, e) = parse_metadata_counts(&svg).unwrap();
        assert_eq!(what, "cayley");
        assert_eq!(v, derived.vertices.len());
        assert_eq!(e, derived.edges.len());
    }

    #[test]
    fn spherical_render_is_rejected() {
        let (tiling, _store, skeleton) = build_polygon_tiling(params(2, 3, 4), 0).unwrap();
        assert!(matches!(
            render_coset(&tiling, &skeleton, RenderStyle::default()),
            Err(RenderError::SphericalModel)
        ));
    }

    #[test]
    fn rendering_is_deterministic() {
        let make = || {
            let (tiling, _store, skeleton) = build_polygon_tiling(params(3, 3, 3), 2).unwrap();
            render_coset(&tiling, &skeleton, RenderStyle::default()).unwrap()
        };
        assert_eq!(make(), make());
    }
}
