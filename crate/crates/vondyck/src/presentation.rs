//! The symbolic layer: group parameters, generator words, parsing, and the
//! curvature trichotomy.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("invalid parameters ({a},{b},{c}): each of a, b, c must be at least 2")]
    OutOfRange { a: u32, b: u32, c: u32 },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unexpected character '{ch}' at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("missing exponent after '^' at position {pos}")]
    MissingExponent { pos: usize },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
}

/// Defining triple of the group D(a,b,c) = ⟨x, y | x^a = y^b = (xy)^c = 1⟩.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VonDyckParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl VonDyckParams {
    /// Each parameter must be at least 2, so that both generators and their
    /// product have nontrivial finite order.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self, ParamError> {
        if a < 2 || b < 2 || c < 2 {
            return Err(ParamError::OutOfRange { a, b, c });
        }
        Ok(VonDyckParams { a, b, c })
    }

    /// Order of the base generator a letter refers to: a for x, b for y.
    pub fn order_of(&self, letter: GeneratorLetter) -> u32 {
        match letter.base() {
            'x' => self.a,
            _ => self.b,
        }
    }
}

impl fmt::Display for VonDyckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// One of the four letters of the generating alphabet.
///
/// The declaration order X < Y < XInv < YInv is the lexicographic order used
/// for canonical-word tie-breaking everywhere in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLetter {
    X,
    Y,
    XInv,
    YInv,
}

impl GeneratorLetter {
    pub const ALL: [GeneratorLetter; 4] = [
        GeneratorLetter::X,
        GeneratorLetter::Y,
        GeneratorLetter::XInv,
        GeneratorLetter::YInv,
    ];

    pub fn inverse(self) -> Self {
        match self {
            GeneratorLetter::X => GeneratorLetter::XInv,
            GeneratorLetter::XInv => GeneratorLetter::X,
            GeneratorLetter::Y => GeneratorLetter::YInv,
            GeneratorLetter::YInv => GeneratorLetter::Y,
        }
    }

    pub fn base(self) -> char {
        match self {
            GeneratorLetter::X | GeneratorLetter::XInv => 'x',
            GeneratorLetter::Y | GeneratorLetter::YInv => 'y',
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, GeneratorLetter::XInv | GeneratorLetter::YInv)
    }

    /// Table index used by the element stores: X=0, Y=1, XInv=2, YInv=3.
    pub fn index(self) -> usize {
        match self {
            GeneratorLetter::X => 0,
            GeneratorLetter::Y => 1,
            GeneratorLetter::XInv => 2,
            GeneratorLetter::YInv => 3,
        }
    }
}

/// A word over {x, x⁻¹, y, y⁻¹}; the syntactic face of a group element.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GeneratorLetter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: GeneratorLetter) -> Self {
        Word(vec![l])
    }

    /// `letter` repeated `count` times.
    pub fn power(letter: GeneratorLetter, count: u32) -> Self {
        Word(vec![letter; count as usize])
    }

    /// (xy)^k for any integer k; negative exponents use (y⁻¹x⁻¹)^(−k).
    pub fn xy_power(k: i64) -> Self {
        let mut letters = Vec::new();
        if k >= 0 {
            for _ in 0..k {
                letters.push(GeneratorLetter::X);
                letters.push(GeneratorLetter::Y);
            }
        } else {
            for _ in 0..(-k) {
                letters.push(GeneratorLetter::YInv);
                letters.push(GeneratorLetter::XInv);
            }
        }
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, l: GeneratorLetter) {
        self.0.push(l);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancel adjacent letter–inverse pairs until none remain. Idempotent,
    /// and the result represents the same element of the free group.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<GeneratorLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// Collapse maximal runs of an equal letter modulo the order of its base
    /// generator (a for x-letters, b for y-letters), then free-reduce, and
    /// repeat until stable. Only the power relators x^a and y^b are applied;
    /// (xy)^c is left to the geometric model.
    pub fn torsion_normalize(&self, params: VonDyckParams) -> Word {
        let mut current = self.free_reduce();
        loop {
            let mut next: Vec<GeneratorLetter> = Vec::with_capacity(current.0.len());
            let mut changed = false;
            let mut i = 0;
            while i < current.0.len() {
                let l = current.0[i];
                let mut run = 1;
                while i + run < current.0.len() && current.0[i + run] == l {
                    run += 1;
                }
                let order = params.order_of(l) as usize;
                let keep = run % order;
                if keep != run {
                    changed = true;
                }
                next.extend(std::iter::repeat_n(l, keep));
                i += run;
            }
            let reduced = Word(next).free_reduce();
            if !changed && reduced == current {
                return current;
            }
            if reduced == current {
                return current;
            }
            current = reduced;
        }
    }
}

impl fmt::Display for Word {
    /// Runs are printed with exponents: `x^2 y^-1 x`. The empty word prints
    /// as `1`. `parse_word` inverts this format on freely reduced words.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp: i64 = if l.is_inverse() { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "{}", l.base())?;
            } else {
                write!(f, "{}^{}", l.base(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parse generator words: letters `x`/`y` with optional integer exponents
/// (`x^-2`), uppercase as shorthand for inverses (`X` = `x^-1`), `1` for the
/// identity. No reduction is performed: `x x^-1` parses to [X, XInv].
pub fn parse_word(text: &str) -> Result<Word, WordParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() || ch == '*' {
            i += 1;
            continue;
        }
        if ch == '1' {
            i += 1;
            continue;
        }
        let (plain, inv) = match ch {
            'x' => (GeneratorLetter::X, GeneratorLetter::XInv),
            'X' => (GeneratorLetter::XInv, GeneratorLetter::X),
            'y' => (GeneratorLetter::Y, GeneratorLetter::YInv),
            'Y' => (GeneratorLetter::YInv, GeneratorLetter::Y),
            _ => return Err(WordParseError::UnexpectedChar { ch, pos: i }),
        };
        i += 1;
        let mut exp: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            let caret = i;
            i += 1;
            let mut negative = false;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                negative = chars[i] == '-';
                i += 1;
            }
            let start = i;
            let mut value: i64 = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add((chars[i] as u8 - b'0') as i64))
                    .ok_or(WordParseError::ExponentOverflow { pos: i })?;
                i += 1;
            }
            if i == start {
                return Err(WordParseError::MissingExponent { pos: caret });
            }
            exp = if negative { -value } else { value };
        }
        let letter = if exp >= 0 { plain } else { inv };
        for _ in 0..exp.unsigned_abs() {
            letters.push(letter);
        }
    }
    Ok(Word(letters))
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

/// Sign class of 1/a + 1/b + 1/c − 1, which decides the surface carrying the
/// triangle tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurvatureClass {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl fmt::Display for CurvatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurvatureClass::Spherical => "Spherical",
            CurvatureClass::Euclidean => "Euclidean",
            CurvatureClass::Hyperbolic => "Hyperbolic",
        };
        write!(f, "{s}")
    }
}

/// Compare 1/a + 1/b + 1/c with 1 in exact integer arithmetic. The Euclidean
/// boundary case must not be subject to rounding.
pub fn classify_curvature(params: VonDyckParams) -> CurvatureClass {
    let (a, b, c) = (params.a as i128, params.b as i128, params.c as i128);
    let lhs = b * c + a * c + a * b;
    let rhs = a * b * c;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => CurvatureClass::Spherical,
        std::cmp::Ordering::Equal => CurvatureClass::Euclidean,
        std::cmp::Ordering::Less => CurvatureClass::Hyperbolic,
    }
}

/// All unordered triples a ≤ b ≤ c with 1/a + 1/b + 1/c = 1.
///
/// The search space is finite: a ≤ 3 since 3/a ≥ 1, and for fixed a,
/// 2/b ≥ 1 − 1/a bounds b; c is then determined by exact division.
pub fn euclidean_triples() -> Vec<VonDyckParams> {
    let mut out = Vec::new();
    for a in 2u32..=3 {
        let b_max = 2 * a / (a - 1);
        for b in a..=b_max {
            let denom = (a * b) as i64 - a as i64 - b as i64;
            if denom <= 0 {
                continue;
            }
            let num = (a * b) as i64;
            if num % denom == 0 {
                let c = (num / denom) as u32;
                if c >= b {
                    out.push(VonDyckParams::new(a, b, c).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}
