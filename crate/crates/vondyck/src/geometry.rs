//! Surface models (sphere, Euclidean plane, Poincaré disk), their
//! orientation-preserving isometries, the basic triangle with angles π/a,
//! π/b, π/c, and quantized fingerprints used as element identity keys.
//!
//! Conventions fixed here and relied on everywhere else:
//! - the O vertex of the basic triangle sits at the model origin (north pole
//!   on the sphere), the A vertex on the positive real axis, and (A, B, O)
//!   runs counterclockwise;
//! - the generator x is the counterclockwise rotation by 2π/a about A, and y
//!   the counterclockwise rotation by 2π/b about B;
//! - words act on the left: `evaluate_word([l1, l2])` is the isometry
//!   l1 ∘ l2 (apply l2 first).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::presentation::{
    classify_curvature, CurvatureClass, GeneratorLetter, VonDyckParams, Word,
};

/// Tolerance for treating two isometries (or points) as equal. Composition
/// drift at the search depths used here stays several orders of magnitude
/// below this.
pub const EPS_IDENTITY: f64 = 1e-9;

/// Grid resolution for fingerprint quantization.
pub const FP_STEP: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Complex numbers and 3x3 matrices
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Complex::new(r * theta.cos(), r * theta.sin())
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn norm_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn scale(self, s: f64) -> Self {
        Complex::new(self.re * s, self.im * s)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for Complex {
    type Output = Complex;
    fn div(self, rhs: Complex) -> Complex {
        let d = rhs.norm_sq();
        Complex::new(
            (self.re * rhs.re + self.im * rhs.im) / d,
            (self.im * rhs.re - self.re * rhs.im) / d,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i", self.re, self.im)
    }
}

pub type Vec3 = [f64; 3];

fn dot3(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross3(u: Vec3, v: Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn normalize3(v: Vec3) -> Vec3 {
    let n = dot3(v, v).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

/// Row-major 3x3 matrix; always a rotation in this crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat3(out)
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        [
            dot3(self.0[0], v),
            dot3(self.0[1], v),
            dot3(self.0[2], v),
        ]
    }

    /// Rodrigues rotation by `angle` about the unit axis `u`, counterclockwise
    /// as seen from the tip of the axis.
    pub fn rotation(u: Vec3, angle: f64) -> Mat3 {
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let (x, y, z) = (u[0], u[1], u[2]);
        Mat3([
            [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
            [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
            [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
        ])
    }
}

// ---------------------------------------------------------------------------
// Points and isometries
// ---------------------------------------------------------------------------

/// A point of the active surface model.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SurfacePoint {
    /// Unit vector in 3-space.
    Sphere(Vec3),
    /// The Euclidean plane as complex numbers.
    Plane(Complex),
    /// The Poincaré unit disk, |z| < 1.
    Disk(Complex),
}

impl SurfacePoint {
    pub fn curvature(&self) -> CurvatureClass {
        match self {
            SurfacePoint::Sphere(_) => CurvatureClass::Spherical,
            SurfacePoint::Plane(_) => CurvatureClass::Euclidean,
            SurfacePoint::Disk(_) => CurvatureClass::Hyperbolic,
        }
    }

    /// Raw model coordinates (3 on the sphere, 2 in the plane models).
    pub fn coords(&self) -> Vec<f64> {
        match self {
            SurfacePoint::Sphere(v) => v.to_vec(),
            SurfacePoint::Plane(z) | SurfacePoint::Disk(z) => vec![z.re, z.im],
        }
    }

    /// Euclidean distance between raw coordinates (chordal on the sphere).
    /// Used only for tolerance comparisons at small scales.
    pub fn coord_distance(&self, other: &SurfacePoint) -> f64 {
        match (self, other) {
            (SurfacePoint::Sphere(u), SurfacePoint::Sphere(v)) => {
                let d = [u[0] - v[0], u[1] - v[1], u[2] - v[2]];
                dot3(d, d).sqrt()
            }
            (SurfacePoint::Plane(z), SurfacePoint::Plane(w))
            | (SurfacePoint::Disk(z), SurfacePoint::Disk(w)) => (*z - *w).abs(),
            _ => panic!("surface model mismatch"),
        }
    }

    fn plane_coord(&self) -> Complex {
        match self {
            SurfacePoint::Plane(z) | SurfacePoint::Disk(z) => *z,
            SurfacePoint::Sphere(_) => panic!("expected a planar model point"),
        }
    }
}

/// An orientation-preserving isometry of one of the three models.
#[derive(Clone, Copy, Debug)]
pub enum Isometry {
    /// Rotation matrix with determinant +1.
    Spherical(Mat3),
    /// z ↦ rot·z + trans with |rot| = 1.
    Euclidean { rot: Complex, trans: Complex },
    /// z ↦ (p·z + q)/(q̄·z + p̄) with |p|² − |q|² = 1.
    Mobius { p: Complex, q: Complex },
}

impl Isometry {
    pub fn identity(curvature: CurvatureClass) -> Isometry {
        match curvature {
            CurvatureClass::Spherical => Isometry::Spherical(Mat3::identity()),
            CurvatureClass::Euclidean => Isometry::Euclidean {
                rot: Complex::ONE,
                trans: Complex::ZERO,
            },
            CurvatureClass::Hyperbolic => Isometry::Mobius {
                p: Complex::ONE,
                q: Complex::ZERO,
            },
        }
    }

    /// Group operation: `g.compose(&h)` applies h first, then g, so that
    /// `compose(g, h).apply(p) == g.apply(h.apply(p))`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        match (self, other) {
            (Isometry::Spherical(m), Isometry::Spherical(n)) => Isometry::Spherical(m.mul(n)),
            (
                Isometry::Euclidean { rot: r1, trans: t1 },
                Isometry::Euclidean { rot: r2, trans: t2 },
            ) => {
                let rot = *r1 * *r2;
                let trans = *r1 * *t2 + *t1;
                // |rot| drifts multiplicatively; renormalize to the unit circle.
                let scale = 1.0 / rot.abs();
                Isometry::Euclidean {
                    rot: rot.scale(scale),
                    trans,
                }
            }
            (Isometry::Mobius { p: p1, q: q1 }, Isometry::Mobius { p: p2, q: q2 }) => {
                let p = *p1 * *p2 + *q1 * q2.conj();
                let q = *p1 * *q2 + *q1 * p2.conj();
                renormalize_mobius(p, q)
            }
            _ => panic!("surface model mismatch"),
        }
    }

    pub fn inverse(&self) -> Isometry {
        match self {
            Isometry::Spherical(m) => Isometry::Spherical(m.transpose()),
            Isometry::Euclidean { rot, trans } => {
                let inv_rot = rot.conj();
                Isometry::Euclidean {
                    rot: inv_rot,
                    trans: -(inv_rot * *trans),
                }
            }
            Isometry::Mobius { p, q } => Isometry::Mobius {
                p: p.conj(),
                q: -*q,
            },
        }
    }

    pub fn apply(&self, point: &SurfacePoint) -> SurfacePoint {
        match (self, point) {
            (Isometry::Spherical(m), SurfacePoint::Sphere(v)) => {
                SurfacePoint::Sphere(m.apply(*v))
            }
            (Isometry::Euclidean { rot, trans }, SurfacePoint::Plane(z)) => {
                SurfacePoint::Plane(*rot * *z + *trans)
            }
            (Isometry::Mobius { p, q }, SurfacePoint::Disk(z)) => {
                let num = *p * *z + *q;
                let den = q.conj() * *z + p.conj();
                SurfacePoint::Disk(num / den)
            }
            _ => panic!("surface model mismatch"),
        }
    }
}

fn renormalize_mobius(p: Complex, q: Complex) -> Isometry {
    let det = p.norm_sq() - q.norm_sq();
    let scale = 1.0 / det.sqrt();
    Isometry::Mobius {
        p: p.scale(scale),
        q: q.scale(scale),
    }
}

// ---------------------------------------------------------------------------
// The basic triangle and the geometry context
// ---------------------------------------------------------------------------

/// The basic triangle: vertex A carries the angle π/a, B the angle π/b and O
/// the angle π/c, with (A, B, O) counterclockwise.
#[derive(Clone, Copy, Debug)]
pub struct Triangle {
    pub va: SurfacePoint,
    pub vb: SurfacePoint,
    pub vo: SurfacePoint,
}

/// Per-parameter geometric context: surface model, basic triangle and the two
/// generator rotations. Everything downstream evaluates against one of these.
#[derive(Clone, Debug)]
pub struct Geometry {
    pub params: VonDyckParams,
    pub curvature: CurvatureClass,
    pub triangle: Triangle,
    gen_x: Isometry,
    gen_y: Isometry,
}

impl Geometry {
    pub fn new(params: VonDyckParams) -> Geometry {
        let curvature = classify_curvature(params);
        let alpha = PI / params.a as f64;
        let beta = PI / params.b as f64;
        let gamma = PI / params.c as f64;

        // Side lengths from the angles. OA is the side opposite B, OB the
        // side opposite A, AB the side opposite O.
        let triangle = match curvature {
            CurvatureClass::Euclidean => {
                // Law of sines, normalized so that |AB| = 1.
                let oa = beta.sin() / gamma.sin();
                let ob = alpha.sin() / gamma.sin();
                let va = Complex::new(oa, 0.0);
                let vb = Complex::from_polar(ob, gamma);
                Triangle {
                    va: SurfacePoint::Plane(va),
                    vb: SurfacePoint::Plane(vb),
                    vo: SurfacePoint::Plane(Complex::ZERO),
                }
            }
            CurvatureClass::Spherical => {
                // Dual spherical law of cosines; OA is the side opposite B,
                // flanked by the angles at A and O.
                let oa = side_spherical(alpha, gamma, beta);
                let ob = side_spherical(beta, gamma, alpha);
                let va = [oa.sin(), 0.0, oa.cos()];
                let vb = [ob.sin() * gamma.cos(), ob.sin() * gamma.sin(), ob.cos()];
                Triangle {
                    va: SurfacePoint::Sphere(va),
                    vb: SurfacePoint::Sphere(vb),
                    vo: SurfacePoint::Sphere([0.0, 0.0, 1.0]),
                }
            }
            CurvatureClass::Hyperbolic => {
                // Dual hyperbolic law of cosines; disk radius tanh(d/2).
                let oa = side_hyperbolic(alpha, gamma, beta);
                let ob = side_hyperbolic(beta, gamma, alpha);
                let va = Complex::new((oa / 2.0).tanh(), 0.0);
                let vb = Complex::from_polar((ob / 2.0).tanh(), gamma);
                Triangle {
                    va: SurfacePoint::Disk(va),
                    vb: SurfacePoint::Disk(vb),
                    vo: SurfacePoint::Disk(Complex::ZERO),
                }
            }
        };

        let mut geometry = Geometry {
            params,
            curvature,
            triangle,
            gen_x: Isometry::identity(curvature),
            gen_y: Isometry::identity(curvature),
        };
        geometry.gen_x = geometry.rotation_about(&triangle.va, 2.0 * PI / params.a as f64);
        geometry.gen_y = geometry.rotation_about(&triangle.vb, 2.0 * PI / params.b as f64);
        geometry
    }

    pub fn identity(&self) -> Isometry {
        Isometry::identity(self.curvature)
    }

    /// The isometry of a single letter: x and y are the generator rotations,
    /// uppercase letters their inverses.
    pub fn generator(&self, letter: GeneratorLetter) -> Isometry {
        match letter {
            GeneratorLetter::X => self.gen_x,
            GeneratorLetter::Y => self.gen_y,
            GeneratorLetter::XInv => self.gen_x.inverse(),
            GeneratorLetter::YInv => self.gen_y.inverse(),
        }
    }

    /// Left-to-right composition of the letters of `word`; the empty word is
    /// the identity.
    pub fn evaluate_word(&self, word: &Word) -> Isometry {
        let mut acc = self.identity();
        for &letter in &word.0 {
            acc = acc.compose(&self.generator(letter));
        }
        acc
    }

    /// Counterclockwise rotation by `angle` about an arbitrary point.
    pub fn rotation_about(&self, center: &SurfacePoint, angle: f64) -> Isometry {
        match center {
            SurfacePoint::Sphere(v) => Isometry::Spherical(Mat3::rotation(normalize3(*v), angle)),
            SurfacePoint::Plane(w) => {
                let rot = Complex::from_polar(1.0, angle);
                Isometry::Euclidean {
                    rot,
                    trans: *w - rot * *w,
                }
            }
            SurfacePoint::Disk(w) => {
                // Conjugate the rotation about the origin by the Möbius map
                // sending w to 0.
                let to_origin = mobius_to_origin(*w);
                let half = Complex::from_polar(1.0, angle / 2.0);
                let spin = Isometry::Mobius {
                    p: half,
                    q: Complex::ZERO,
                };
                to_origin.inverse().compose(&spin).compose(&to_origin)
            }
        }
    }

    /// Images of the three basic-triangle vertices; the probe set that
    /// identifies an isometry.
    pub fn probe_images(&self, g: &Isometry) -> [SurfacePoint; 3] {
        [
            g.apply(&self.triangle.va),
            g.apply(&self.triangle.vb),
            g.apply(&self.triangle.vo),
        ]
    }

    pub fn probe_coords(&self, g: &Isometry) -> Vec<f64> {
        let mut out = Vec::with_capacity(9);
        for pt in self.probe_images(g) {
            out.extend(pt.coords());
        }
        out
    }

    /// Largest displacement of a probe point under `g`; zero for the
    /// identity.
    pub fn max_probe_displacement(&self, g: &Isometry) -> f64 {
        let base = [self.triangle.va, self.triangle.vb, self.triangle.vo];
        self.probe_images(g)
            .iter()
            .zip(base.iter())
            .map(|(im, b)| im.coord_distance(b))
            .fold(0.0, f64::max)
    }

    pub fn is_identity(&self, g: &Isometry) -> bool {
        self.max_probe_displacement(g) < EPS_IDENTITY
    }

    /// Probe-image distance between two isometries.
    pub fn isometry_distance(&self, g: &Isometry, h: &Isometry) -> f64 {
        self.probe_images(g)
            .iter()
            .zip(self.probe_images(h).iter())
            .map(|(u, v)| u.coord_distance(v))
            .fold(0.0, f64::max)
    }

    pub fn fingerprint(&self, g: &Isometry) -> Fingerprint {
        self.fingerprint_with(g, FP_STEP)
    }

    /// Quantize the probe images of `g` at resolution `tol`.
    pub fn fingerprint_with(&self, g: &Isometry, tol: f64) -> Fingerprint {
        Fingerprint(
            self.probe_coords(g)
                .iter()
                .map(|&x| (x / tol).round() as i64)
                .collect(),
        )
    }

    /// Geodesic midpoint of the segment between two points.
    pub fn midpoint(&self, p: &SurfacePoint, q: &SurfacePoint) -> SurfacePoint {
        match (p, q) {
            (SurfacePoint::Sphere(u), SurfacePoint::Sphere(v)) => {
                SurfacePoint::Sphere(normalize3([u[0] + v[0], u[1] + v[1], u[2] + v[2]]))
            }
            (SurfacePoint::Plane(z), SurfacePoint::Plane(w)) => {
                SurfacePoint::Plane((*z + *w).scale(0.5))
            }
            (SurfacePoint::Disk(z), SurfacePoint::Disk(w)) => {
                // Send z to the origin, halve the radial coordinate of the
                // image of w, and map back.
                let m = mobius_to_origin(*z);
                let image = match m.apply(&SurfacePoint::Disk(*w)) {
                    SurfacePoint::Disk(u) => u,
                    _ => unreachable!(),
                };
                let r = image.abs();
                if r < 1e-15 {
                    return *p;
                }
                let half = (r.atanh() / 2.0).tanh();
                let mid = image.scale(half / r);
                m.inverse().apply(&SurfacePoint::Disk(mid))
            }
            _ => panic!("surface model mismatch"),
        }
    }

    /// Reflect `v` across the geodesic through `p` and `q`. This is the only
    /// orientation-reversing operation in the crate; it is used to construct
    /// the negatively oriented triangles of the triangle tiling.
    pub fn reflect_across(
        &self,
        p: &SurfacePoint,
        q: &SurfacePoint,
        v: &SurfacePoint,
    ) -> SurfacePoint {
        match (p, q, v) {
            (SurfacePoint::Sphere(a), SurfacePoint::Sphere(b), SurfacePoint::Sphere(u)) => {
                let n = normalize3(cross3(*a, *b));
                let d = 2.0 * dot3(*u, n);
                SurfacePoint::Sphere([u[0] - d * n[0], u[1] - d * n[1], u[2] - d * n[2]])
            }
            (SurfacePoint::Plane(a), SurfacePoint::Plane(b), SurfacePoint::Plane(z)) => {
                let dir = *b - *a;
                let unit = dir.scale(1.0 / dir.abs());
                // Reflection across the line a + t·unit.
                let rel = *z - *a;
                let reflected = unit * unit * rel.conj();
                SurfacePoint::Plane(*a + reflected)
            }
            (SurfacePoint::Disk(a), SurfacePoint::Disk(_), SurfacePoint::Disk(_)) => {
                // Move a to the origin so the geodesic becomes a diameter,
                // reflect across that line, and move back.
                let m = mobius_to_origin(*a);
                let qq = m.apply(q).plane_coord();
                let zz = m.apply(v).plane_coord();
                let unit = Complex::from_polar(1.0, qq.arg());
                let reflected = unit * unit * zz.conj();
                m.inverse().apply(&SurfacePoint::Disk(reflected))
            }
            _ => panic!("surface model mismatch"),
        }
    }

    /// Interior angle of the geodesic triangle (at `vertex`, between the
    /// sides toward `p` and `q`), in (0, π].
    pub fn angle_at(&self, vertex: &SurfacePoint, p: &SurfacePoint, q: &SurfacePoint) -> f64 {
        match (vertex, p, q) {
            (SurfacePoint::Sphere(v), SurfacePoint::Sphere(a), SurfacePoint::Sphere(b)) => {
                let ta = tangent_at(*v, *a);
                let tb = tangent_at(*v, *b);
                dot3(ta, tb).clamp(-1.0, 1.0).acos()
            }
            (SurfacePoint::Plane(v), SurfacePoint::Plane(a), SurfacePoint::Plane(b)) => {
                let u = *a - *v;
                let w = *b - *v;
                angle_between(u, w)
            }
            (SurfacePoint::Disk(v), SurfacePoint::Disk(_), SurfacePoint::Disk(_)) => {
                let m = mobius_to_origin(*v);
                let u = m.apply(p).plane_coord();
                let w = m.apply(q).plane_coord();
                angle_between(u, w)
            }
            _ => panic!("surface model mismatch"),
        }
    }
}

fn angle_between(u: Complex, w: Complex) -> f64 {
    let diff = (u.arg() - w.arg()).rem_euclid(2.0 * PI);
    diff.min(2.0 * PI - diff)
}

fn tangent_at(v: Vec3, toward: Vec3) -> Vec3 {
    let d = dot3(toward, v);
    normalize3([toward[0] - d * v[0], toward[1] - d * v[1], toward[2] - d * v[2]])
}

/// Unit-form Möbius map sending w to the origin: z ↦ (z − w)/(1 − w̄ z).
fn mobius_to_origin(w: Complex) -> Isometry {
    let scale = 1.0 / (1.0 - w.norm_sq()).sqrt();
    Isometry::Mobius {
        p: Complex::ONE.scale(scale),
        q: (-w).scale(scale),
    }
}

/// Dual law of cosines: the side opposite the third listed angle, for a
/// spherical triangle with angles (first, second, third).
fn side_spherical(first: f64, second: f64, third: f64) -> f64 {
    let cosine = (third.cos() + first.cos() * second.cos()) / (first.sin() * second.sin());
    cosine.clamp(-1.0, 1.0).acos()
}

fn side_hyperbolic(first: f64, second: f64, third: f64) -> f64 {
    let ch = (third.cos() + first.cos() * second.cos()) / (first.sin() * second.sin());
    ch.acosh()
}

// ---------------------------------------------------------------------------
// Fingerprints and quantized point indexing
// ---------------------------------------------------------------------------

/// Quantized probe coordinates; the identity key of a group element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(pub Vec<i64>);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Deduplication index over coordinate vectors: grid hashing at resolution
/// `step`, with lookups that also probe neighboring cells whenever a
/// coordinate sits within `match_tol` of a cell boundary. Two insertions
/// whose coordinates agree within `match_tol` therefore always resolve to
/// the same id, even across a rounding boundary, while genuinely distinct
/// points (separated by much more than `step`) never collide.
#[derive(Clone, Debug, Default)]
pub struct CoordIndex {
    step: f64,
    match_tol: f64,
    map: HashMap<Vec<i64>, Vec<usize>>,
    points: Vec<Vec<f64>>,
}

impl CoordIndex {
    pub fn new() -> Self {
        CoordIndex::with_resolution(FP_STEP, EPS_IDENTITY)
    }

    pub fn with_resolution(step: f64, match_tol: f64) -> Self {
        CoordIndex {
            step,
            match_tol,
            map: HashMap::new(),
            points: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> &[f64] {
        &self.points[id]
    }

    fn primary_key(&self, coords: &[f64]) -> Vec<i64> {
        coords.iter().map(|&x| (x / self.step).round() as i64).collect()
    }

    fn distance(a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }

    /// All grid keys a point within `match_tol` of `coords` could round to.
    fn candidate_keys(&self, coords: &[f64]) -> Vec<Vec<i64>> {
        let band = self.match_tol / self.step;
        let mut keys: Vec<Vec<i64>> = vec![Vec::with_capacity(coords.len())];
        for &x in coords {
            let t = x / self.step;
            let base = t.round() as i64;
            let frac = t - base as f64;
            let mut options = vec![base];
            if frac > 0.5 - band {
                options.push(base + 1);
            } else if frac < -(0.5 - band) {
                options.push(base - 1);
            }
            let mut next = Vec::with_capacity(keys.len() * options.len());
            for key in &keys {
                for &o in &options {
                    let mut k = key.clone();
                    k.push(o);
                    next.push(k);
                }
            }
            keys = next;
        }
        keys
    }

    pub fn lookup(&self, coords: &[f64]) -> Option<usize> {
        for key in self.candidate_keys(coords) {
            if let Some(ids) = self.map.get(&key) {
                for &id in ids {
                    if Self::distance(&self.points[id], coords) < self.match_tol {
                        return Some(id);
                    }
                }
            }
        }
        None
    }

    /// Insert without checking for a duplicate; use `get_or_insert` unless
    /// the caller has already performed the lookup.
    pub fn insert(&mut self, coords: Vec<f64>) -> usize {
        let id = self.points.len();
        let key = self.primary_key(&coords);
        self.points.push(coords);
        self.map.entry(key).or_default().push(id);
        id
    }

    /// Returns (id, true) when the point was newly inserted.
    pub fn get_or_insert(&mut self, coords: &[f64]) -> (usize, bool) {
        if let Some(id) = self.lookup(coords) {
            return (id, false);
        }
        (self.insert(coords.to_vec()), true)
    }

    /// Smallest pairwise distance between stored points that share a grid
    /// neighborhood; `None` when no two points come near each other. A value
    /// far above `match_tol` certifies that the quantization cannot have
    /// merged distinct points.
    pub fn min_neighbor_gap(&self) -> Option<f64> {
        let mut min: Option<f64> = None;
        for (id, coords) in self.points.iter().enumerate() {
            let key = self.primary_key(coords);
            let dim = key.len();
            let mut offsets = vec![0i64; dim];
            loop {
                let probe: Vec<i64> = key.iter().zip(&offsets).map(|(k, o)| k + o).collect();
                if let Some(ids) = self.map.get(&probe) {
                    for &other in ids {
                        if other != id {
                            let d = Self::distance(coords, &self.points[other]);
                            min = Some(min.map_or(d, |m: f64| m.min(d)));
                        }
                    }
                }
                // Advance the mixed-radix counter over {-1, 0, 1}^dim.
                let mut i = 0;
                loop {
                    if i == dim {
                        break;
                    }
                    offsets[i] += 1;
                    if offsets[i] <= 1 {
                        break;
                    }
                    offsets[i] = -1;
                    i += 1;
                }
                if i == dim {
                    break;
                }
            }
        }
        min
    }
}
