//! Group elements with resolved identity: breadth-first enumeration over
//! right multiplication by {x, y, x⁻¹, y⁻¹}, deduplicated geometrically for
//! D(a,b,c) and by exact normal forms for the two finite reference models
//! (Z6 and the Burnside group B(2,3)).

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::geometry::{CoordIndex, Fingerprint, Geometry, Isometry};
use crate::presentation::{CurvatureClass, GeneratorLetter, VonDyckParams, Word};

pub type ElementId = u32;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unbounded enumeration requires a finite model; {0} is {1}")]
    UnboundedInfinite(VonDyckParams, CurvatureClass),
    #[error("element id {0} not present in the store")]
    AbsentElement(ElementId),
    #[error("product not materialized in this partial store")]
    ProductNotMaterialized,
    #[error("operation requires a complete store")]
    IncompleteStore,
}

/// Which group the store enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupModel {
    /// D(a,b,c) acting on its surface.
    Geometric(VonDyckParams),
    /// Z6 = ⟨x, y | x² = y³ = [x,y] = 1⟩ with x = 3 and y = 2 mod 6.
    ToyZ6,
    /// B(2,3) = ⟨x, y | x³ = y³ = [x,y,x] = [x,y,y] = 1⟩, 27 elements.
    BurnsideB23,
}

/// Normal form x^α y^β [x,y]^γ with exponents mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct B23NormalForm {
    pub alpha: u8,
    pub beta: u8,
    pub gamma: u8,
}

impl B23NormalForm {
    pub const IDENTITY: B23NormalForm = B23NormalForm {
        alpha: 0,
        beta: 0,
        gamma: 0,
    };

    pub fn new(alpha: u8, beta: u8, gamma: u8) -> Self {
        B23NormalForm {
            alpha: alpha % 3,
            beta: beta % 3,
            gamma: gamma % 3,
        }
    }

    pub fn inverse(self) -> Self {
        let alpha = (3 - self.alpha) % 3;
        let beta = (3 - self.beta) % 3;
        // (x^a y^b c^g)⁻¹ = x^-a y^-b c^(-g - ab).
        let gamma = (6 - self.gamma - self.alpha * self.beta % 3) % 3;
        B23NormalForm::new(alpha, beta, gamma)
    }

    fn letter(l: GeneratorLetter) -> Self {
        match l {
            GeneratorLetter::X => B23NormalForm::new(1, 0, 0),
            GeneratorLetter::Y => B23NormalForm::new(0, 1, 0),
            GeneratorLetter::XInv => B23NormalForm::new(2, 0, 0),
            GeneratorLetter::YInv => B23NormalForm::new(0, 2, 0),
        }
    }

    fn pack(self) -> u64 {
        (self.alpha + 3 * self.beta + 9 * self.gamma) as u64
    }
}

/// Multiplication in the normal form of B(2,3). Moving y^β₁ left past x^α₂
/// costs [x,y]^(−α₂β₁) because the commutator is central, which gives
/// (α₁+α₂, β₁+β₂, γ₁+γ₂−α₂β₁) mod 3. Validated against a brute-force matrix
/// model in the test suite before being trusted anywhere.
pub fn b23_multiply(u: B23NormalForm, v: B23NormalForm) -> B23NormalForm {
    let alpha = (u.alpha + v.alpha) % 3;
    let beta = (u.beta + v.beta) % 3;
    let cross = (v.alpha * u.beta) % 3;
    let gamma = ((u.gamma + v.gamma + 6) - cross) % 3;
    B23NormalForm::new(alpha, beta, gamma)
}

/// Identity-resolved element payload.
#[derive(Clone, Debug)]
pub enum Payload {
    Iso(Isometry),
    Z6(u8),
    B23(B23NormalForm),
}

/// One materialized group element.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub id: ElementId,
    /// A shortest word found by the search, ties broken lexicographically
    /// with X < Y < XInv < YInv.
    pub word: Word,
    pub payload: Payload,
    /// Search layer the element was first discovered at. Elements appended
    /// outside the search (tile labels) carry `EXTERNAL_DEPTH`.
    pub depth: u32,
}

pub const EXTERNAL_DEPTH: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchBound {
    Depth(u32),
    Unbounded,
}

enum StoreIndex {
    Exact(HashMap<u64, ElementId>),
    Geometric(CoordIndex),
}

/// Enumerated elements with their right-multiplication table.
pub struct ElementStore {
    pub model: GroupModel,
    geometry: Option<Geometry>,
    elements: Vec<GroupElement>,
    action: Vec<[Option<ElementId>; 4]>,
    index: StoreIndex,
    frontier: VecDeque<ElementId>,
    bound: SearchBound,
    complete: bool,
}

/// Breadth-first enumeration from the identity. `Unbounded` is accepted only
/// for models guaranteed to close: the two finite reference models and
/// spherical D(a,b,c). A bounded search that does not close returns a
/// partial store with `complete() == false`; that is not an error.
pub fn enumerate_elements(
    model: GroupModel,
    bound: SearchBound,
) -> Result<ElementStore, GroupError> {
    if bound == SearchBound::Unbounded {
        if let GroupModel::Geometric(params) = model {
            let class = crate::presentation::classify_curvature(params);
            if class != CurvatureClass::Spherical {
                return Err(GroupError::UnboundedInfinite(params, class));
            }
        }
    }

    let geometry = match model {
        GroupModel::Geometric(params) => Some(Geometry::new(params)),
        _ => None,
    };
    let identity = match model {
        GroupModel::Geometric(_) => Payload::Iso(geometry.as_ref().unwrap().identity()),
        GroupModel::ToyZ6 => Payload::Z6(0),
        GroupModel::BurnsideB23 => Payload::B23(B23NormalForm::IDENTITY),
    };
    let index = match model {
        GroupModel::Geometric(_) => StoreIndex::Geometric(CoordIndex::new()),
        _ => StoreIndex::Exact(HashMap::new()),
    };

    let mut store = ElementStore {
        model,
        geometry,
        elements: Vec::new(),
        action: Vec::new(),
        index,
        frontier: VecDeque::new(),
        bound,
        complete: false,
    };
    store.push_element(Word::empty(), identity, 0);
    store.frontier.push_back(0);
    store.run_search();
    Ok(store)
}

impl ElementStore {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        self.geometry.as_ref()
    }

    pub fn element(&self, id: ElementId) -> Result<&GroupElement, GroupError> {
        self.elements
            .get(id as usize)
            .ok_or(GroupError::AbsentElement(id))
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Stored shortest canonical word of an element.
    pub fn canonical_word(&self, id: ElementId) -> Result<&Word, GroupError> {
        Ok(&self.element(id)?.word)
    }

    pub fn depth(&self, id: ElementId) -> u32 {
        self.elements[id as usize].depth
    }

    /// Right action d ↦ d·letter, when known.
    pub fn act(&self, id: ElementId, letter: GeneratorLetter) -> Option<ElementId> {
        self.action[id as usize][letter.index()]
    }

    /// All four right actions of an element are known.
    pub fn is_interior(&self, id: ElementId) -> bool {
        self.action[id as usize].iter().all(Option::is_some)
    }

    pub fn interior_ids(&self) -> Vec<ElementId> {
        (0..self.len() as ElementId)
            .filter(|&i| self.is_interior(i))
            .collect()
    }

    /// Follow right actions along a word, if every step is known.
    pub fn act_word(&self, id: ElementId, word: &Word) -> Option<ElementId> {
        let mut cur = id;
        for &letter in &word.0 {
            cur = self.act(cur, letter)?;
        }
        Some(cur)
    }

    /// Product of two stored elements. Requires the result to be
    /// materialized, which always holds in a complete store.
    pub fn multiply(&self, i: ElementId, j: ElementId) -> Result<ElementId, GroupError> {
        self.element(i)?;
        self.element(j)?;
        let product = self.mul_payload(
            &self.elements[i as usize].payload,
            &self.elements[j as usize].payload,
        );
        self.resolve_payload(&product)
            .ok_or(GroupError::ProductNotMaterialized)
    }

    pub fn inverse_id(&self, i: ElementId) -> Result<ElementId, GroupError> {
        let inv = match &self.element(i)?.payload {
            Payload::Iso(iso) => Payload::Iso(iso.inverse()),
            Payload::Z6(v) => Payload::Z6((6 - v) % 6),
            Payload::B23(n) => Payload::B23(n.inverse()),
        };
        self.resolve_payload(&inv)
            .ok_or(GroupError::ProductNotMaterialized)
    }

    /// Identity key as used in exports: quantized probe coordinates for the
    /// geometric model, the exact normal form otherwise.
    pub fn fingerprint(&self, id: ElementId) -> Fingerprint {
        match &self.elements[id as usize].payload {
            Payload::Iso(iso) => self.geometry.as_ref().unwrap().fingerprint(iso),
            Payload::Z6(v) => Fingerprint(vec![*v as i64]),
            Payload::B23(n) => {
                Fingerprint(vec![n.alpha as i64, n.beta as i64, n.gamma as i64])
            }
        }
    }

    pub fn isometry(&self, id: ElementId) -> Option<&Isometry> {
        match &self.elements[id as usize].payload {
            Payload::Iso(iso) => Some(iso),
            _ => None,
        }
    }

    pub fn payload(&self, id: ElementId) -> &Payload {
        &self.elements[id as usize].payload
    }

    /// Find an element by exact value (finite models): the residue for Z6,
    /// the packed normal form for B(2,3).
    pub fn find_z6(&self, value: u8) -> Option<ElementId> {
        match &self.index {
            StoreIndex::Exact(map) => map.get(&((value % 6) as u64)).copied(),
            _ => None,
        }
    }

    pub fn find_b23(&self, form: B23NormalForm) -> Option<ElementId> {
        match &self.index {
            StoreIndex::Exact(map) => map.get(&form.pack()).copied(),
            _ => None,
        }
    }

    /// Resolve an isometry to a stored element id, by fingerprint.
    pub fn resolve_isometry(&self, iso: &Isometry) -> Option<ElementId> {
        match &self.index {
            StoreIndex::Geometric(index) => {
                let coords = self.geometry.as_ref().unwrap().probe_coords(iso);
                index.lookup(&coords).map(|id| id as ElementId)
            }
            _ => None,
        }
    }

    /// Resolve an isometry, appending it as a new element when absent. Used
    /// by the tiling builders for edge labels that lie beyond the search
    /// horizon; such elements carry no action data and are never interior.
    pub fn resolve_or_insert(&mut self, iso: &Isometry, word: Word) -> ElementId {
        if let Some(id) = self.resolve_isometry(iso) {
            return id;
        }
        self.push_element(word, Payload::Iso(*iso), EXTERNAL_DEPTH)
    }

    fn resolve_payload(&self, payload: &Payload) -> Option<ElementId> {
        match (payload, &self.index) {
            (Payload::Iso(iso), _) => self.resolve_isometry(iso),
            (Payload::Z6(v), StoreIndex::Exact(map)) => map.get(&(*v as u64)).copied(),
            (Payload::B23(n), StoreIndex::Exact(map)) => map.get(&n.pack()).copied(),
            _ => None,
        }
    }

    fn mul_payload(&self, u: &Payload, v: &Payload) -> Payload {
        match (u, v) {
            (Payload::Iso(a), Payload::Iso(b)) => Payload::Iso(a.compose(b)),
            (Payload::Z6(a), Payload::Z6(b)) => Payload::Z6((a + b) % 6),
            (Payload::B23(a), Payload::B23(b)) => Payload::B23(b23_multiply(*a, *b)),
            _ => panic!("mismatched payloads"),
        }
    }

    fn mul_letter(&self, payload: &Payload, letter: GeneratorLetter) -> Payload {
        match payload {
            Payload::Iso(iso) => {
                let step = self.geometry.as_ref().unwrap().generator(letter);
                Payload::Iso(iso.compose(&step))
            }
            Payload::Z6(v) => {
                let delta = match letter {
                    GeneratorLetter::X | GeneratorLetter::XInv => 3,
                    GeneratorLetter::Y => 2,
                    GeneratorLetter::YInv => 4,
                };
                Payload::Z6((v + delta) % 6)
            }
            Payload::B23(n) => Payload::B23(b23_multiply(*n, B23NormalForm::letter(letter))),
        }
    }

    fn push_element(&mut self, word: Word, payload: Payload, depth: u32) -> ElementId {
        let id = self.elements.len() as ElementId;
        match (&payload, &mut self.index) {
            (Payload::Iso(iso), StoreIndex::Geometric(index)) => {
                let coords = self.geometry.as_ref().unwrap().probe_coords(iso);
                debug_assert!(index.lookup(&coords).is_none());
                index.insert(coords);
            }
            (Payload::Z6(v), StoreIndex::Exact(map)) => {
                let prev = map.insert(*v as u64, id);
                debug_assert!(prev.is_none());
            }
            (Payload::B23(n), StoreIndex::Exact(map)) => {
                let prev = map.insert(n.pack(), id);
                debug_assert!(prev.is_none());
            }
            _ => panic!("mismatched payload and index"),
        }
        self.elements.push(GroupElement {
            id,
            word,
            payload,
            depth,
        });
        self.action.push([None; 4]);
        id
    }

    fn record_action(&mut self, from: ElementId, letter: GeneratorLetter, to: ElementId) {
        let slot = &mut self.action[from as usize][letter.index()];
        debug_assert!(slot.is_none() || *slot == Some(to));
        *slot = Some(to);
        let back = &mut self.action[to as usize][letter.inverse().index()];
        debug_assert!(back.is_none() || *back == Some(from));
        *back = Some(from);
    }

    fn run_search(&mut self) {
        while let Some(id) = self.frontier.front().copied() {
            let depth = self.elements[id as usize].depth;
            if let SearchBound::Depth(limit) = self.bound {
                if depth >= limit {
                    break;
                }
            }
            self.frontier.pop_front();
            for letter in GeneratorLetter::ALL {
                if self.action[id as usize][letter.index()].is_some() {
                    continue;
                }
                let next = self.mul_letter(&self.elements[id as usize].payload, letter);
                match self.resolve_payload(&next) {
                    Some(target) => self.record_action(id, letter, target),
                    None => {
                        let mut word = self.elements[id as usize].word.clone();
                        word.push(letter);
                        let target = self.push_element(word, next, depth + 1);
                        self.record_action(id, letter, target);
                        self.frontier.push_back(target);
                    }
                }
            }
        }
        self.complete = (0..self.len() as ElementId).all(|i| self.is_interior(i));
    }

    /// Continue a bounded search to a deeper layer. Produces exactly the
    /// store a fresh search with the new bound would have produced, provided
    /// no external elements have been appended in the meantime.
    pub fn deepen(&mut self, new_bound: u32) {
        assert!(
            self.elements.iter().all(|e| e.depth != EXTERNAL_DEPTH),
            "cannot deepen a store after external insertions"
        );
        if let SearchBound::Depth(old) = self.bound {
            if new_bound <= old || self.complete {
                return;
            }
        }
        self.bound = SearchBound::Depth(new_bound);
        self.run_search();
    }

    /// Ids discovered within the given search depth, in id order.
    pub fn ids_within_depth(&self, depth: u32) -> Vec<ElementId> {
        (0..self.len() as ElementId)
            .filter(|&i| self.elements[i as usize].depth <= depth)
            .collect()
    }

    /// Smallest probe-coordinate gap between distinct stored elements that
    /// share a quantization neighborhood (geometric stores only). Values far
    /// above the match tolerance certify that deduplication is safe at this
    /// depth.
    pub fn min_probe_gap(&self) -> Option<f64> {
        match &self.index {
            StoreIndex::Geometric(index) => index.min_neighbor_gap(),
            _ => None,
        }
    }
}
