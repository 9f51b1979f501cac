//! The extended affine Weyl group of an initial-data quintuple, and the
//! orders on the lattice that control triangularity of the polynomial
//! families.
//!
//! Elements are pairs `(u, xi)` with `u` in the finite Weyl group and `xi`
//! a translation vector from the dual lattice; the pair stands for
//! `u \circ tau(xi)`.  On an affine root `l c + beta` the translation acts
//! by `tau(xi): l c + beta -> (l - (xi, beta)) c + beta` and `u` moves the
//! gradient.  Lengths come from a closed-form count over positive roots,
//! cross-checked in tests against brute-force inversion counting; reduced
//! words are peeled greedily from the right, leaving a length-zero
//! remainder that permutes the affine simple roots.

use crate::initdata::{AffineRoot, InitialData};
use crate::qnum::{frac, sc, Scalar};
use crate::rootdata::{RootSystem, Vector};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// An element `u tau(xi)` of the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElem {
    /// Index of the finite part into the stored Weyl group.
    pub u: usize,
    /// Translation part, a vector of the dual lattice.
    pub xi: Vector,
}

/// The extended affine Weyl group `W_0 x Lambda^d` of a quintuple.
pub struct AffineWeyl<'a> {
    d: &'a InitialData,
}

impl<'a> AffineWeyl<'a> {
    pub fn new(d: &'a InitialData) -> Self {
        AffineWeyl { d }
    }

    pub fn data(&self) -> &InitialData {
        self.d
    }

    pub fn identity(&self) -> ExtElem {
        ExtElem {
            u: self.d.weyl().identity(),
            xi: Vector::zeros(self.d.root_system().ambient_dim()),
        }
    }

    pub fn is_identity(&self, w: &ExtElem) -> bool {
        w.u == self.d.weyl().identity() && w.xi.is_zero()
    }

    /// The translation `tau(xi)`; `xi` must lie in the dual lattice.
    pub fn translation(&self, xi: Vector) -> ExtElem {
        debug_assert!(
            self.d.dual_lattice().contains(&xi),
            "translation vector {xi} outside the dual lattice"
        );
        ExtElem {
            u: self.d.weyl().identity(),
            xi,
        }
    }

    pub fn from_finite(&self, u: usize) -> ExtElem {
        ExtElem {
            u,
            xi: Vector::zeros(self.d.root_system().ambient_dim()),
        }
    }

    /// The reflection in an affine root `a = l c + beta`, i.e. the pair
    /// `(s_beta, l beta^)`.
    pub fn reflection(&self, a: &AffineRoot) -> ExtElem {
        let rs = self.d.root_system();
        let cols: Vec<Vector> = (0..rs.ambient_dim())
            .map(|k| RootSystem::reflect(&a.grad, &Vector::unit(rs.ambient_dim(), k)))
            .collect();
        ExtElem {
            u: self.d.weyl().find(&cols),
            xi: a.grad.covector().scale(&a.level),
        }
    }

    /// The affine simple reflection `s_i`, `i = 0, ..., n`.
    pub fn simple(&self, i: usize) -> ExtElem {
        self.reflection(&self.d.affine_simple(i))
    }

    /// `(u, xi)(v, eta) = (uv, v^{-1} xi + eta)`.
    pub fn compose(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let w0 = self.d.weyl();
        let v_inv = w0.inverse(b.u);
        ExtElem {
            u: w0.compose(a.u, b.u),
            xi: &w0.apply_elem(v_inv, &a.xi) + &b.xi,
        }
    }

    pub fn inverse(&self, a: &ExtElem) -> ExtElem {
        let w0 = self.d.weyl();
        let u_inv = w0.inverse(a.u);
        ExtElem {
            u: u_inv,
            xi: -&w0.apply_elem(a.u, &a.xi),
        }
    }

    /// Action on an affine root.
    pub fn act(&self, w: &ExtElem, a: &AffineRoot) -> AffineRoot {
        AffineRoot::new(
            &a.level - a.grad.dot(&w.xi),
            self.d.weyl().apply_elem(w.u, &a.grad),
        )
    }

    /// Action on a point of the ambient space: `x -> u(x + xi)`.
    pub fn act_point(&self, w: &ExtElem, x: &Vector) -> Vector {
        self.d.weyl().apply_elem(w.u, &(x + &w.xi))
    }

    /// An affine root is positive when its level is positive, or zero with
    /// positive gradient.
    pub fn is_positive(&self, a: &AffineRoot) -> bool {
        a.level.is_positive()
            || (a.level.is_zero() && self.d.root_system().is_positive_root(&a.grad))
    }

    /// Closed-form length: `sum over beta > 0 of
    /// |(xi, beta)/mu_beta + [u beta < 0]|`.
    pub fn length(&self, w: &ExtElem) -> usize {
        let rs = self.d.root_system();
        let mut total = Scalar::zero();
        for beta in rs.positive_roots() {
            let k = w.xi.dot(beta) / self.d.mu(beta);
            assert!(k.is_integer(), "dual lattice pairs integrally with R_0^d^");
            let chi = if rs.is_positive_root(&self.d.weyl().apply_elem(w.u, beta)) {
                sc(0)
            } else {
                sc(1)
            };
            total += (k + chi).abs();
        }
        usize::try_from(total.to_integer()).unwrap()
    }

    /// Reduced decomposition `w = omega s_{i_1} ... s_{i_m}` with `omega`
    /// of length zero.  Returns `(omega, [i_1, ..., i_m])`.
    pub fn reduced_word(&self, w: &ExtElem) -> (ExtElem, Vec<usize>) {
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        let mut rev = Vec::with_capacity(len);
        while len > 0 {
            let i = (0..=self.d.rank())
                .find(|&i| !self.is_positive(&self.act(&cur, &self.d.affine_simple(i))))
                .expect("positive length forces a descent");
            cur = self.compose(&cur, &self.simple(i));
            rev.push(i);
            len -= 1;
            debug_assert_eq!(self.length(&cur), len);
        }
        rev.reverse();
        (cur, rev)
    }

    /// A length-zero element permutes the affine simple roots; return that
    /// permutation (image indices for `i = 0, ..., n`).
    pub fn simple_permutation(&self, omega: &ExtElem) -> Vec<usize> {
        assert_eq!(self.length(omega), 0);
        (0..=self.d.rank())
            .map(|i| {
                let img = self.act(omega, &self.d.affine_simple(i));
                (0..=self.d.rank())
                    .find(|&j| self.d.affine_simple(j) == img)
                    .expect("length zero permutes the affine simple roots")
            })
            .collect()
    }

    pub fn from_affine_word(&self, word: &[usize]) -> ExtElem {
        word.iter()
            .fold(self.identity(), |acc, &i| self.compose(&acc, &self.simple(i)))
    }

    /// The positive reduced affine roots sent negative by `w`, sorted.  A
    /// candidate `l c + beta > 0` with `w a < 0` needs `l <= (xi, beta)`, so
    /// a level window of `max |(xi, beta)|` suffices.  The count must agree
    /// with the closed-form length; that cross-check is kept as an assert.
    pub fn inversion_set(&self, w: &ExtElem) -> Vec<AffineRoot> {
        let mut bound = Scalar::zero();
        for beta in self.d.root_system().positive_roots() {
            let p = w.xi.dot(beta).abs();
            if p > bound {
                bound = p;
            }
        }
        let mut out: Vec<AffineRoot> = self
            .d
            .affine_roots_up_to_level(&bound)
            .into_iter()
            .filter(|a| {
                self.d.is_reduced_affine_root(a)
                    && self.is_positive(a)
                    && !self.is_positive(&self.act(w, a))
            })
            .collect();
        out.sort();
        assert_eq!(
            out.len(),
            self.length(w),
            "inversion count must equal the length"
        );
        out
    }
}

/// Half-sum of the positive coroots.
fn rho_vee(rs: &RootSystem) -> Vector {
    let mut acc = Vector::zeros(rs.ambient_dim());
    for a in rs.positive_roots() {
        acc = &acc + &a.covector();
    }
    acc.scale(&frac(1, 2))
}

/// The word (product convention) of the shortest `v` with `v(lambda)`
/// antidominant.
pub fn v_word(d: &InitialData, lambda: &Vector) -> Vec<usize> {
    d.weyl().antidominant_rep(lambda).1
}

/// The order controlling triangularity: `lambda` precedes `mu` when the
/// dominant representative is dominance-smaller, or representatives agree
/// and the shortest antidominant-sorting element is Bruhat-larger.
pub fn preceq(d: &InitialData, lambda: &Vector, mu: &Vector) -> bool {
    if lambda == mu {
        return true;
    }
    let (lp, _) = d.weyl().dominant_rep(lambda);
    let (mp, _) = d.weyl().dominant_rep(mu);
    if lp == mp {
        let vl = d.weyl().elem_from_word(&v_word(d, lambda));
        let vm = d.weyl().elem_from_word(&v_word(d, mu));
        d.weyl().bruhat_le(vm, vl)
    } else {
        d.root_system().dominance_le(&lp, &mp)
    }
}

pub fn prec(d: &InitialData, lambda: &Vector, mu: &Vector) -> bool {
    lambda != mu && preceq(d, lambda, mu)
}

/// Saturation: close the orbit of `lambda` under moving along coroot
/// strings toward the reflection.  The result is the union of the orbits
/// of all dominant weights dominance-below the dominant representative.
pub fn saturation(d: &InitialData, lambda: &Vector) -> BTreeSet<Vector> {
    let rs = d.root_system();
    let mut out: BTreeSet<Vector> = BTreeSet::new();
    let mut queue: Vec<Vector> = vec![lambda.clone()];
    while let Some(x) = queue.pop() {
        if !out.insert(x.clone()) {
            continue;
        }
        for alpha in rs.positive_roots() {
            let p = x.dot(&alpha.covector());
            assert!(p.is_integer(), "saturation needs integral pairings");
            let p: i64 = p.to_integer().try_into().unwrap();
            let (lo, hi) = if p >= 0 { (0, p) } else { (p, 0) };
            for r in lo..=hi {
                let y = &x - &alpha.scale(&sc(r));
                if !out.contains(&y) {
                    queue.push(y);
                }
            }
        }
    }
    out
}

/// A total order refining `preceq`, for deterministic matrix assembly:
/// sort by pairing of the dominant representative with `rho^`, then by the
/// representative itself, then by descending length of the sorting
/// element, then lexicographically.
pub fn cmp_total(d: &InitialData, lambda: &Vector, mu: &Vector) -> Ordering {
    if lambda == mu {
        return Ordering::Equal;
    }
    let rv = rho_vee(d.root_system());
    let (lp, _) = d.weyl().dominant_rep(lambda);
    let (mp, _) = d.weyl().dominant_rep(mu);
    lp.dot(&rv)
        .cmp(&mp.dot(&rv))
        .then_with(|| lp.cmp(&mp))
        .then_with(|| v_word(d, mu).len().cmp(&v_word(d, lambda).len()))
        .then_with(|| lambda.cmp(mu))
}

/// The saturation of `lambda`, sorted by the total order.  This is the
/// monomial support space in which eigenfunction triangularity holds.
pub fn saturation_sorted(d: &InitialData, lambda: &Vector) -> Vec<Vector> {
    let mut v: Vec<Vector> = saturation(d, lambda).into_iter().collect();
    v.sort_by(|a, b| cmp_total(d, a, b));
    v
}
