// Each integration test binary compiles its own copy of this module and
// uses a different subset of it.
#![allow(dead_code)]

//! Independent oracles shared by the integration tests. Nothing here calls
//! into the crate's geometric evaluation path: the Burnside oracle works in
//! unitriangular matrices over GF(3), the spherical oracle closes explicit
//! rotation matrices, the Euclidean oracle computes exactly in Eisenstein
//! integers, and the hyperbolic oracle works in SL(2,R) on the upper half
//! plane.

use std::collections::HashMap;
use std::f64::consts::PI;

use vondyck::presentation::GeneratorLetter;

// ---------------------------------------------------------------------------
// B(2,3) as the Heisenberg group over GF(3)
// ---------------------------------------------------------------------------

/// Upper unitriangular 3x3 matrix over GF(3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Heisenberg(pub [[u8; 3]; 3]);

impl Heisenberg {
    pub fn identity() -> Self {
        Heisenberg([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn x() -> Self {
        Heisenberg([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn y() -> Self {
        Heisenberg([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    }

    pub fn mul(self, other: Heisenberg) -> Heisenberg {
        let mut out = [[0u8; 3]; 3];
        for (i, row_out) in out.iter_mut().enumerate() {
            for (j, cell) in row_out.iter_mut().enumerate() {
                let mut acc = 0u16;
                for (k, row) in other.0.iter().enumerate() {
                    acc += self.0[i][k] as u16 * row[j] as u16;
                }
                *cell = (acc % 3) as u8;
            }
        }
        Heisenberg(out)
    }

    pub fn pow(self, e: u32) -> Heisenberg {
        let mut acc = Heisenberg::identity();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn inverse(self) -> Heisenberg {
        // Exponent 3: g⁻¹ = g².
        self.mul(self)
    }

    pub fn commutator(a: Heisenberg, b: Heisenberg) -> Heisenberg {
        a.inverse().mul(b.inverse()).mul(a).mul(b)
    }
}

/// Free closure of {x, y} under multiplication and inverses.
pub fn heisenberg_closure() -> Vec<Heisenberg> {
    let mut elements = vec![Heisenberg::identity(), Heisenberg::x(), Heisenberg::y()];
    loop {
        let mut added = false;
        let snapshot = elements.clone();
        for &a in &snapshot {
            for &b in [Heisenberg::x(), Heisenberg::y(), Heisenberg::x().inverse(), Heisenberg::y().inverse()].iter() {
                let p = a.mul(b);
                if !elements.contains(&p) {
                    elements.push(p);
                    added = true;
                }
            }
        }
        if !added {
            return elements;
        }
    }
}

// ---------------------------------------------------------------------------
// Spherical rotation-matrix closure
// ---------------------------------------------------------------------------

pub type M3 = [[f64; 3]; 3];

pub fn m3_identity() -> M3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub fn m3_mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn m3_transpose(a: &M3) -> M3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn m3_distance(a: &M3, b: &M3) -> f64 {
    let mut max: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            max = max.max((a[i][j] - b[i][j]).abs());
        }
    }
    max
}

fn rodrigues(axis: [f64; 3], angle: f64) -> M3 {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let (x, y, z) = (axis[0] / n, axis[1] / n, axis[2] / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

/// The two generator rotations of the spherical triangle group, derived from
/// the spherical law of cosines without touching the crate's geometry code.
pub fn sphere_generators(a: u32, b: u32, c: u32) -> (M3, M3) {
    let alpha = PI / a as f64;
    let beta = PI / b as f64;
    let gamma = PI / c as f64;
    let side = |first: f64, second: f64, third: f64| -> f64 {
        let cosine = (third.cos() + first.cos() * second.cos()) / (first.sin() * second.sin());
        cosine.clamp(-1.0, 1.0).acos()
    };
    let oa = side(alpha, gamma, beta);
    let ob = side(beta, gamma, alpha);
    let va = [oa.sin(), 0.0, oa.cos()];
    let vb = [ob.sin() * gamma.cos(), ob.sin() * gamma.sin(), ob.cos()];
    (
        rodrigues(va, 2.0 * PI / a as f64),
        rodrigues(vb, 2.0 * PI / b as f64),
    )
}

/// Closure of the two rotations under multiplication, deduplicated by matrix
/// entries with an explicit separation check: merges happen below 1e−9,
/// anything between 1e−9 and 1e−3 is an oracle failure.
pub fn sphere_closure(a: u32, b: u32, c: u32) -> Vec<M3> {
    let (gx, gy) = sphere_generators(a, b, c);
    let gens = [gx, gy, m3_transpose(&gx), m3_transpose(&gy)];
    let mut elements: Vec<M3> = vec![m3_identity()];
    let mut frontier = vec![m3_identity()];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let p = m3_mul(&m, g);
            let mut found = false;
            for e in &elements {
                let d = m3_distance(e, &p);
                assert!(
                    !(1e-9..=1e-3).contains(&d),
                    "spherical oracle separation violated: distance {d:e}"
                );
                if d < 1e-9 {
                    found = true;
                    break;
                }
            }
            if !found {
                elements.push(p);
                frontier.push(p);
            }
        }
        assert!(elements.len() <= 200, "closure failed to terminate");
    }
    elements
}

// ---------------------------------------------------------------------------
// D(3,3,3) exactly, as Eisenstein translations and rotations
// ---------------------------------------------------------------------------

/// u + v·ω with ω = exp(2πi/3); an exact Eisenstein integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub u: i64,
    pub v: i64,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { u: 0, v: 0 };

    pub fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein {
            u: self.u + o.u,
            v: self.v + o.v,
        }
    }

    /// Multiplication by ω: ω(u + vω) = −v + (u − v)ω.
    pub fn rot(self) -> Eisenstein {
        Eisenstein {
            u: -self.v,
            v: self.u - self.v,
        }
    }

    pub fn rot_by(self, k: u8) -> Eisenstein {
        let mut out = self;
        for _ in 0..k {
            out = out.rot();
        }
        out
    }
}

/// z ↦ ω^k z + t: an exact element of the (3,3,3) rotation group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactP3 {
    pub t: Eisenstein,
    pub k: u8,
}

impl ExactP3 {
    pub fn identity() -> Self {
        ExactP3 {
            t: Eisenstein::ZERO,
            k: 0,
        }
    }

    /// x: rotation by ω about A = 1, so z ↦ ωz + (1 − ω).
    pub fn x() -> Self {
        ExactP3 {
            t: Eisenstein { u: 1, v: -1 },
            k: 1,
        }
    }

    /// y: rotation by ω about B = 1 + ω, so z ↦ ωz + (1+ω)(1−ω) = ωz + 2 + ω.
    pub fn y() -> Self {
        ExactP3 {
            t: Eisenstein { u: 2, v: 1 },
            k: 1,
        }
    }

    pub fn mul(self, o: ExactP3) -> ExactP3 {
        ExactP3 {
            t: self.t.add(o.t.rot_by(self.k)),
            k: (self.k + o.k) % 3,
        }
    }

    pub fn inverse(self) -> ExactP3 {
        let kinv = (3 - self.k) % 3;
        ExactP3 {
            t: self.t.rot_by(kinv).neg(),
            k: kinv,
        }
    }

    pub fn letter(l: GeneratorLetter) -> ExactP3 {
        match l {
            GeneratorLetter::X => ExactP3::x(),
            GeneratorLetter::Y => ExactP3::y(),
            GeneratorLetter::XInv => ExactP3::x().inverse(),
            GeneratorLetter::YInv => ExactP3::y().inverse(),
        }
    }

    pub fn evaluate(word: &[GeneratorLetter]) -> ExactP3 {
        word.iter()
            .fold(ExactP3::identity(), |acc, &l| acc.mul(ExactP3::letter(l)))
    }
}

impl Eisenstein {
    fn neg(self) -> Eisenstein {
        Eisenstein {
            u: -self.u,
            v: -self.v,
        }
    }
}

// ---------------------------------------------------------------------------
// D(4,4,4) in SL(2,R) on the upper half plane
// ---------------------------------------------------------------------------

pub type M2 = [[f64; 2]; 2];

pub fn m2_mul(a: &M2, b: &M2) -> M2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn m2_inverse(a: &M2) -> M2 {
    let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    [
        [a[1][1] / det, -a[0][1] / det],
        [-a[1][0] / det, a[0][0] / det],
    ]
}

pub fn m2_distance(a: &M2, b: &M2) -> f64 {
    let mut max: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            max = max.max((a[i][j] - b[i][j]).abs());
        }
    }
    max
}

/// Rotation by `angle` about the upper-half-plane point u + vi.
fn uhp_rotation(u: f64, v: f64, angle: f64) -> M2 {
    let move_to_i: M2 = [[v.sqrt(), u / v.sqrt()], [0.0, 1.0 / v.sqrt()]];
    let (s, c) = (angle / 2.0).sin_cos();
    let spin: M2 = [[c, s], [-s, c]];
    m2_mul(&m2_mul(&move_to_i, &spin), &m2_inverse(&move_to_i))
}

/// Apply a Möbius transformation to a UHP point.
fn uhp_apply(m: &M2, z: (f64, f64)) -> (f64, f64) {
    let (x, y) = z;
    // (a(x+iy) + b) / (c(x+iy) + d)
    let (a, b, c, d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
    let nr = a * x + b;
    let ni = a * y;
    let dr = c * x + d;
    let di = c * y;
    let den = dr * dr + di * di;
    ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
}

/// Generators of D(4,4,4) acting on the upper half plane: O sits at i, A at
/// distance acosh(1+√2) straight up, B at the same distance rotated by π/4
/// about i.
pub fn uhp_generators_444() -> (M2, M2) {
    let d = (1.0 + 2.0f64.sqrt()).acosh();
    let a_point = (0.0, d.exp());
    let spin = uhp_rotation(0.0, 1.0, PI / 4.0);
    let b_point = uhp_apply(&spin, a_point);
    (
        uhp_rotation(a_point.0, a_point.1, PI / 2.0),
        uhp_rotation(b_point.0, b_point.1, PI / 2.0),
    )
}

pub fn uhp_letter_444(l: GeneratorLetter) -> M2 {
    let (x, y) = uhp_generators_444();
    match l {
        GeneratorLetter::X => x,
        GeneratorLetter::Y => y,
        GeneratorLetter::XInv => m2_inverse(&x),
        GeneratorLetter::YInv => m2_inverse(&y),
    }
}

pub fn uhp_evaluate_444(word: &[GeneratorLetter]) -> M2 {
    word.iter().fold([[1.0, 0.0], [0.0, 1.0]], |acc, &l| {
        m2_mul(&acc, &uhp_letter_444(l))
    })
}

// ---------------------------------------------------------------------------
// Word enumeration and a deterministic generator
// ---------------------------------------------------------------------------

/// All freely reduced words of length at most `max_len`.
pub fn reduced_words(max_len: usize) -> Vec<Vec<GeneratorLetter>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<GeneratorLetter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for word in &layer {
            for l in GeneratorLetter::ALL {
                if word.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut w = word.clone();
                w.push(l);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Group indices 0..n into classes by a pairwise equality predicate, with a
/// gray-zone assertion supplied by the caller via the predicate itself.
pub fn partition_by<F: FnMut(usize, usize) -> bool>(n: usize, mut equal: F) -> Vec<usize> {
    let mut class = vec![usize::MAX; n];
    let mut next_class = 0;
    for i in 0..n {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = next_class;
        #[allow(clippy::needless_range_loop)]
        for j in (i + 1)..n {
            if class[j] == usize::MAX && equal(i, j) {
                class[j] = next_class;
            }
        }
        next_class += 1;
    }
    class
}

/// Deterministic xorshift generator for sampled property checks.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

/// Map exact values to dense class indices.
pub fn classes_of<T: std::hash::Hash + Eq + Clone>(values: &[T]) -> Vec<usize> {
    let mut map: HashMap<T, usize> = HashMap::new();
    values
        .iter()
        .map(|v| {
            let next = map.len();
            *map.entry(v.clone()).or_insert(next)
        })
        .collect()
}
