use super::linalg::solve_columns;
use super::vector::Vector;
use crate::qnum::Scalar;

/// A full- or partial-rank lattice in the ambient space, given by an
/// explicit basis.  Polynomial exponents downstream are integer coordinate
/// vectors in this basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    basis: Vec<Vector>,
    label: String,
}

impl Lattice {
    /// The basis vectors must be linearly independent; this is asserted by
    /// the exact solver on first use.
    pub fn from_basis(label: impl Into<String>, basis: Vec<Vector>) -> Self {
        assert!(!basis.is_empty());
        let dim = basis[0].dim();
        assert!(basis.iter().all(|b| b.dim() == dim));
        Lattice {
            basis,
            label: label.into(),
        }
    }

    /// The standard lattice `Z^n`.
    pub fn standard(n: usize) -> Self {
        Lattice::from_basis("Z^n", (0..n).map(|i| Vector::unit(n, i)).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis[0].dim()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Integer coordinates of `v` in the lattice basis, or `None` when `v`
    /// is not a lattice point.
    pub fn coords(&self, v: &Vector) -> Option<Vec<i64>> {
        let sol = solve_columns(&self.basis, v)?;
        let mut out = Vec::with_capacity(sol.len());
        for c in sol {
            if !c.is_integer() {
                return None;
            }
            out.push(i64::try_from(c.to_integer()).ok()?);
        }
        Some(out)
    }

    /// Rational coordinates in the lattice basis (point of the ambient span).
    pub fn rational_coords(&self, v: &Vector) -> Option<Vec<Scalar>> {
        solve_columns(&self.basis, v)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.coords(v).is_some()
    }

    /// The ambient vector with the given integer coordinates.
    pub fn point(&self, coords: &[i64]) -> Vector {
        assert_eq!(coords.len(), self.rank());
        let mut v = Vector::zeros(self.ambient_dim());
        for (b, &c) in self.basis.iter().zip(coords) {
            v = &v + &b.scale(&crate::qnum::sc(c));
        }
        v
    }
}
