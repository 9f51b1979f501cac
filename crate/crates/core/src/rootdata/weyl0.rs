use super::vector::Vector;
use super::RootSystem;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Hard cap on enumerated Weyl groups; everything verified at desk scale
/// stays far below it.
const MAX_ORDER: usize = 10_000;

/// One finite Weyl group element: a reduced word (1-based simple letters,
/// product left to right) and its matrix (images of the ambient standard
/// basis, as columns).
#[derive(Debug, Clone)]
pub struct WeylElem {
    pub word: Vec<usize>,
    pub matrix: Vec<Vector>,
}

impl WeylElem {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.matrix[0].dim());
        for (col, c) in self.matrix.iter().zip(&v.0) {
            out = &out + &col.scale(c);
        }
        out
    }
}

/// The finite Weyl group `W_0` of a root system, fully enumerated.
///
/// Elements are addressed by index into a canonical ordering (by length,
/// then by matrix); index 0 is the identity.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElem>,
    by_matrix: BTreeMap<Vec<Vector>, usize>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Self {
        let dim = rs.ambient_dim();
        let id: Vec<Vector> = (0..dim).map(|i| Vector::unit(dim, i)).collect();
        let mut seen: BTreeMap<Vec<Vector>, Vec<usize>> = BTreeMap::new();
        seen.insert(id.clone(), vec![]);
        let mut queue = VecDeque::new();
        queue.push_back(id);
        while let Some(m) = queue.pop_front() {
            let word = seen[&m].clone();
            for i in 1..=rs.rank() {
                // right multiplication: (w s_i)(e_j) = w(s_i e_j)
                let mi: Vec<Vector> = (0..dim)
                    .map(|j| {
                        let sv = rs.simple_reflect(i, &Vector::unit(dim, j));
                        let mut out = Vector::zeros(dim);
                        for (col, c) in m.iter().zip(&sv.0) {
                            out = &out + &col.scale(c);
                        }
                        out
                    })
                    .collect();
                if !seen.contains_key(&mi) {
                    let mut w = word.clone();
                    w.push(i);
                    seen.insert(mi.clone(), w);
                    queue.push_back(mi);
                    assert!(seen.len() <= MAX_ORDER, "Weyl group exceeds enumeration cap");
                }
            }
        }
        let mut elements: Vec<WeylElem> = seen
            .into_iter()
            .map(|(matrix, word)| WeylElem { word, matrix })
            .collect();
        elements.sort_by(|a, b| {
            (a.word.len(), &a.matrix).cmp(&(b.word.len(), &b.matrix))
        });
        let by_matrix = elements
            .iter()
            .enumerate()
            .map(|(k, e)| (e.matrix.clone(), k))
            .collect();
        WeylGroup {
            rs: rs.clone(),
            elements,
            by_matrix,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elem(&self, idx: usize) -> &WeylElem {
        &self.elements[idx]
    }

    pub fn elements(&self) -> &[WeylElem] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the element with the given matrix.
    pub fn find(&self, matrix: &[Vector]) -> usize {
        *self
            .by_matrix
            .get(matrix)
            .expect("matrix does not belong to the Weyl group")
    }

    /// Index of the product `s_{i_1} ... s_{i_k}` of a word.
    pub fn elem_from_word(&self, word: &[usize]) -> usize {
        let dim = self.rs.ambient_dim();
        let m: Vec<Vector> = (0..dim)
            .map(|j| self.apply_word(word, &Vector::unit(dim, j)))
            .collect();
        self.find(&m)
    }

    /// Product of two elements (by index).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let ea = &self.elements[a];
        let eb = &self.elements[b];
        let m: Vec<Vector> = eb.matrix.iter().map(|col| ea.apply(col)).collect();
        self.find(&m)
    }

    pub fn inverse(&self, a: usize) -> usize {
        // every element preserves the standard inner product, so the inverse
        // matrix is the transpose
        let m = &self.elements[a].matrix;
        let dim = m.len();
        let t: Vec<Vector> = (0..dim)
            .map(|r| Vector((0..dim).map(|c| m[c].0[r].clone()).collect()))
            .collect();
        self.find(&t)
    }

    /// `w(v)` by element index.
    pub fn apply_elem(&self, idx: usize, v: &Vector) -> Vector {
        self.elements[idx].apply(v)
    }

    /// Apply the word `s_{i_1} ... s_{i_k}` to a vector (rightmost letter
    /// acts first).
    pub fn apply_word(&self, word: &[usize], v: &Vector) -> Vector {
        let mut x = v.clone();
        for &i in word.iter().rev() {
            x = self.rs.simple_reflect(i, &x);
        }
        x
    }

    /// Inversion set `{alpha in R_0^+ : w(alpha) in R_0^-}`.
    pub fn inversions(&self, idx: usize) -> Vec<Vector> {
        let w = &self.elements[idx];
        self.rs
            .positive_roots()
            .iter()
            .filter(|a| !self.rs.is_positive_root(&w.apply(a)))
            .cloned()
            .collect()
    }

    /// The longest element `w_0`.
    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    /// W-orbit of a vector, sorted.
    pub fn orbit(&self, v: &Vector) -> Vec<Vector> {
        let mut seen = BTreeSet::new();
        seen.insert(v.clone());
        let mut queue = VecDeque::new();
        queue.push_back(v.clone());
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rs.rank() {
                let y = self.rs.simple_reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The dominant representative of the orbit of `v`, together with the
    /// word of an element `w` with `w(v)` dominant (product convention).
    pub fn dominant_rep(&self, v: &Vector) -> (Vector, Vec<usize>) {
        self.rep_impl(v, true)
    }

    /// The antidominant representative and the reduced word of the UNIQUE
    /// shortest `w` with `w(v)` antidominant.
    pub fn antidominant_rep(&self, v: &Vector) -> (Vector, Vec<usize>) {
        self.rep_impl(v, false)
    }

    /// Greedy sign correction.  Each step strictly shrinks the number of
    /// wrongly-signed positive pairings, so the collected word is reduced and
    /// of the minimal possible length.
    fn rep_impl(&self, v: &Vector, dominant: bool) -> (Vector, Vec<usize>) {
        let mut x = v.clone();
        let mut steps = Vec::new();
        'outer: loop {
            for i in 1..=self.rs.rank() {
                let p = x.dot(&self.rs.simple_root(i).covector());
                let wrong = if dominant {
                    p.is_negative()
                } else {
                    p.is_positive()
                };
                if wrong {
                    x = self.rs.simple_reflect(i, &x);
                    steps.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        steps.reverse();
        (x, steps)
    }

    /// Bruhat order `u <= w`, by the lifting property along the first letter
    /// of the stored reduced word of `w`.
    pub fn bruhat_le(&self, u: usize, w: usize) -> bool {
        if self.elements[w].word.is_empty() {
            return u == w;
        }
        let s = self.elem_from_word(&self.elements[w].word[..1]);
        let sw = self.compose(s, w);
        let su = self.compose(s, u);
        if self.elements[su].length() < self.elements[u].length() {
            self.bruhat_le(su, sw)
        } else {
            self.bruhat_le(u, sw)
        }
    }
}
