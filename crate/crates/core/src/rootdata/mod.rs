//! Finite crystallographic root systems in exact rational realizations,
//! their Weyl groups, and the lattices sandwiched between root and weight
//! lattices.
//!
//! Conventions used throughout the crate:
//!
//! * Root systems are realized in an ambient space `Q^N` with the standard
//!   inner product.  Type A lives in `Q^(n+1)` (roots `e_i - e_j`); types B
//!   and C live in `Q^n` with short/long roots of squared length 1, 2 or 4.
//! * Simple roots are indexed `1..=n`, matching the affine convention that
//!   reserves index 0 for the extra affine node.  All finite Weyl group
//!   words use these 1-based letters.
//! * A [`Lattice`] is an explicit basis; membership and integer coordinates
//!   are computed by exact linear algebra.

mod lattice;
mod linalg;
mod vector;
mod weyl0;

pub use lattice::Lattice;
pub use linalg::{invert_columns, solve_columns};
pub use vector::Vector;
pub use weyl0::{WeylElem, WeylGroup};

use crate::qnum::{sc, Scalar};
use num_traits::{Signed, Zero};

/// A finite reduced crystallographic root system with a fixed simple system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    label: String,
    ambient: usize,
    simple: Vec<Vector>,
    positive: Vec<Vector>,
}

impl RootSystem {
    /// Type `A_n` realized in `Q^(n+1)`: roots `e_i - e_j`.
    pub fn type_a(n: usize) -> Self {
        assert!(n >= 1);
        let dim = n + 1;
        let e = |i: usize| Vector::unit(dim, i);
        let simple: Vec<Vector> = (0..n).map(|i| &e(i) - &e(i + 1)).collect();
        let mut positive = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                positive.push(&e(i) - &e(j));
            }
        }
        Self::finish(format!("A{n}"), dim, simple, positive)
    }

    /// Type `B_n` realized in `Q^n`: long roots `±e_i ± e_j`, short `±e_i`.
    /// `B_1` degenerates to `{±e_1}`.
    pub fn type_b(n: usize) -> Self {
        assert!(n >= 1);
        let e = |i: usize| Vector::unit(n, i);
        let mut simple: Vec<Vector> = (0..n.saturating_sub(1))
            .map(|i| &e(i) - &e(i + 1))
            .collect();
        simple.push(e(n - 1));
        let mut positive = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                positive.push(&e(i) - &e(j));
                positive.push(&e(i) + &e(j));
            }
            positive.push(e(i));
        }
        Self::finish(format!("B{n}"), n, simple, positive)
    }

    /// Type `C_n` realized in `Q^n`: short roots `±e_i ± e_j`, long `±2e_i`.
    /// `C_1` degenerates to `{±2e_1}`.
    pub fn type_c(n: usize) -> Self {
        assert!(n >= 1);
        let e = |i: usize| Vector::unit(n, i);
        let mut simple: Vec<Vector> = (0..n.saturating_sub(1))
            .map(|i| &e(i) - &e(i + 1))
            .collect();
        simple.push(e(n - 1).scale(&sc(2)));
        let mut positive = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                positive.push(&e(i) - &e(j));
                positive.push(&e(i) + &e(j));
            }
            positive.push(e(i).scale(&sc(2)));
        }
        Self::finish(format!("C{n}"), n, simple, positive)
    }

    /// Type `D_n` (`n >= 3`) realized in `Q^n`: roots `±e_i ± e_j`.
    pub fn type_d(n: usize) -> Self {
        assert!(n >= 3);
        let e = |i: usize| Vector::unit(n, i);
        let mut simple: Vec<Vector> = (0..n - 1).map(|i| &e(i) - &e(i + 1)).collect();
        simple.push(&e(n - 2) + &e(n - 1));
        let mut positive = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                positive.push(&e(i) - &e(j));
                positive.push(&e(i) + &e(j));
            }
        }
        Self::finish(format!("D{n}"), n, simple, positive)
    }

    /// Assemble a root system from explicit data (used for dual root
    /// systems, whose realizations are computed rather than tabulated).  The
    /// positive roots must be exactly the roots that are nonnegative in the
    /// given simple basis.
    pub fn from_parts(
        label: String,
        ambient: usize,
        simple: Vec<Vector>,
        positive: Vec<Vector>,
    ) -> Self {
        Self::finish(label, ambient, simple, positive)
    }

    fn finish(label: String, ambient: usize, simple: Vec<Vector>, mut positive: Vec<Vector>) -> Self {
        positive.sort();
        let rs = RootSystem {
            label,
            ambient,
            simple,
            positive,
        };
        debug_assert!(rs.positive.iter().all(|a| {
            rs.coords_in_simple(a)
                .map(|c| c.iter().all(|x| !x.is_negative()))
                .unwrap_or(false)
        }));
        rs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Simple root `alpha_i`, `1 <= i <= rank`.
    pub fn simple_root(&self, i: usize) -> &Vector {
        assert!((1..=self.rank()).contains(&i), "simple root index {i}");
        &self.simple[i - 1]
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    pub fn roots(&self) -> impl Iterator<Item = Vector> + '_ {
        self.positive
            .iter()
            .cloned()
            .chain(self.positive.iter().map(|a| -a))
    }

    pub fn is_root(&self, v: &Vector) -> bool {
        self.positive.binary_search(v).is_ok() || self.positive.binary_search(&(-v)).is_ok()
    }

    pub fn is_positive_root(&self, v: &Vector) -> bool {
        self.positive.binary_search(v).is_ok()
    }

    /// Coordinates of `v` in the simple-root basis, if `v` lies in the root
    /// span.
    pub fn coords_in_simple(&self, v: &Vector) -> Option<Vec<Scalar>> {
        solve_columns(&self.simple, v)
    }

    /// Height of a root: coordinate sum in the simple basis.
    pub fn height(&self, root: &Vector) -> Scalar {
        self.coords_in_simple(root)
            .expect("height: not in root span")
            .into_iter()
            .fold(Scalar::zero(), |a, c| a + c)
    }

    /// Reflection `s_v(x) = x - (x, v^) v` in a nonzero vector `v`.
    pub fn reflect(v: &Vector, x: &Vector) -> Vector {
        let c = x.dot(&v.covector());
        x - &v.scale(&c)
    }

    /// `s_i(x)` for a simple root index `1 <= i <= rank`.
    pub fn simple_reflect(&self, i: usize, x: &Vector) -> Vector {
        Self::reflect(self.simple_root(i), x)
    }

    /// The squared lengths occurring among the roots, sorted increasing.
    pub fn root_lengths2(&self) -> Vec<Scalar> {
        let mut ls: Vec<Scalar> = self.positive.iter().map(|a| a.norm2()).collect();
        ls.sort();
        ls.dedup();
        ls
    }

    pub fn has_two_root_lengths(&self) -> bool {
        self.root_lengths2().len() == 2
    }

    /// The highest root (maximal height).
    pub fn highest_root(&self) -> Vector {
        self.positive
            .iter()
            .max_by(|a, b| self.height(a).cmp(&self.height(b)))
            .unwrap()
            .clone()
    }

    /// The highest SHORT root (maximal height among roots of minimal squared
    /// length); equals the highest root when all roots have one length.
    pub fn highest_short_root(&self) -> Vector {
        let min2 = self.root_lengths2().remove(0);
        self.positive
            .iter()
            .filter(|a| a.norm2() == min2)
            .max_by(|a, b| self.height(a).cmp(&self.height(b)))
            .unwrap()
            .clone()
    }

    /// `v` is dominant: `(v, alpha_i^) >= 0` for all simple `alpha_i`.
    pub fn is_dominant(&self, v: &Vector) -> bool {
        self.simple.iter().all(|a| !v.dot(&a.covector()).is_negative())
    }

    pub fn is_antidominant(&self, v: &Vector) -> bool {
        self.simple.iter().all(|a| !v.dot(&a.covector()).is_positive())
    }

    /// Fundamental weights `w_i` in the root span: `(w_i, alpha_j^) = d_ij`.
    pub fn fundamental_weights(&self) -> Vec<Vector> {
        let n = self.rank();
        let covs: Vec<Vector> = self.simple.iter().map(|a| a.covector()).collect();
        // w_i = sum_k c_k alpha_k with sum_k c_k (alpha_k, alpha_j^) = d_ij
        let gram_cols: Vec<Vector> = (0..n)
            .map(|k| Vector((0..n).map(|j| self.simple[k].dot(&covs[j])).collect()))
            .collect();
        (0..n)
            .map(|i| {
                let c = solve_columns(&gram_cols, &Vector::unit(n, i))
                    .expect("Cartan matrix is invertible");
                let mut w = Vector::zeros(self.ambient);
                for (k, ck) in c.iter().enumerate() {
                    w = &w + &self.simple[k].scale(ck);
                }
                w
            })
            .collect()
    }

    /// Dominance order on `Lambda^+` (also defined for any pair): `le(x, y)`
    /// iff `y - x` is a nonnegative integer combination of positive roots.
    pub fn dominance_le(&self, x: &Vector, y: &Vector) -> bool {
        let d = y - x;
        match self.coords_in_simple(&d) {
            None => false,
            Some(c) => c.iter().all(|v| v.is_integer() && !v.is_negative()),
        }
    }

    /// Cartan integers `(alpha_i^, alpha_j) = (alpha_j, alpha_i^)` as a
    /// matrix indexed by `0..rank`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let ci = self.simple[i].covector();
                (0..n)
                    .map(|j| {
                        let p = self.simple[j].dot(&ci);
                        assert!(p.is_integer());
                        i64::try_from(p.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
