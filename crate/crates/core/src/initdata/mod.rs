//! Initial-data quintuples and the affine root systems they generate.
//!
//! A quintuple bundles a finite reduced irreducible root system with a fixed
//! ordered basis, a twist marker (untwisted/twisted), and a compatible pair
//! of lattices.  From it we derive: the rescaling function `mu`, the affine
//! simple root `a_0`, the reduced affine root system, the set `S` of simple
//! indices whose doubles extend it to a (possibly) nonreduced system, the
//! orbit table of the extended affine Weyl group action, and the dual
//! quintuple with the multiplicity transport between the two orbit tables.
//!
//! Affine roots are stored as `level * c + gradient`; all pairings between
//! affine objects go through gradients (the constant function `c` is
//! isotropic).

mod presets;

pub use presets::{
    b_twisted_weightlattice, b_untwisted_zn, c2_exceptional, dual_root_system, gl, koornwinder,
    lattice_for_choice, reduced_twisted, reduced_untwisted, LatticeChoice,
};

use crate::error::{Error, Result};
use crate::qnum::{frac, sc, Scalar};
use crate::rootdata::{Lattice, RootSystem, Vector, WeylGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// The twist marker `u` (untwisted) or `t` (twisted).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Twist {
    Untwisted,
    Twisted,
}

impl std::fmt::Display for Twist {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Twist::Untwisted => write!(f, "u"),
            Twist::Twisted => write!(f, "t"),
        }
    }
}

/// An affine linear function `level * c + grad` on the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineRoot {
    pub level: Scalar,
    pub grad: Vector,
}

impl AffineRoot {
    pub fn new(level: Scalar, grad: Vector) -> Self {
        AffineRoot { level, grad }
    }

    /// A finite root viewed as an affine root of level zero.
    pub fn finite(grad: Vector) -> Self {
        AffineRoot {
            level: Scalar::zero(),
            grad,
        }
    }

    pub fn double(&self) -> Self {
        AffineRoot {
            level: &self.level * sc(2),
            grad: self.grad.scale(&sc(2)),
        }
    }

    pub fn half(&self) -> Self {
        AffineRoot {
            level: &self.level * frac(1, 2),
            grad: self.grad.scale(&frac(1, 2)),
        }
    }

    pub fn neg(&self) -> Self {
        AffineRoot {
            level: -self.level.clone(),
            grad: -&self.grad,
        }
    }

    /// Evaluation at a point of the ambient space.
    pub fn eval(&self, x: &Vector) -> Scalar {
        &self.level + self.grad.dot(x)
    }

    /// Reflection of `b` in `self`: `b - (Db, (Da)^) a`.  The pairing only
    /// sees gradients.
    pub fn reflect(&self, b: &AffineRoot) -> AffineRoot {
        let p = b.grad.dot(&self.grad.covector());
        AffineRoot {
            level: &b.level - &(&p * &self.level),
            grad: &b.grad - &self.grad.scale(&p),
        }
    }
}

impl std::fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}c+{}", self.level, self.grad)
    }
}

/// One orbit of the extended affine Weyl group acting on the affine root
/// system, described by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineOrbit {
    pub rep: AffineRoot,
    /// True when the orbit consists of doubled roots `2b`.
    pub doubled: bool,
}

/// A validated initial-data quintuple together with everything derived from
/// it that downstream layers need.
#[derive(Debug, Clone)]
pub struct InitialData {
    label: String,
    rs: RootSystem,
    twist: Twist,
    lambda: Lattice,
    lambda_dual: Lattice,
    w0: WeylGroup,
    s_set: BTreeSet<usize>,
    orbits: Vec<AffineOrbit>,
}

impl InitialData {
    pub fn new(
        label: impl Into<String>,
        rs: RootSystem,
        twist: Twist,
        lambda: Lattice,
        lambda_dual: Lattice,
    ) -> Result<Self> {
        let label = label.into();
        validate_lattices(&rs, twist, &lambda, &lambda_dual)?;
        let w0 = WeylGroup::new(&rs);
        let mut d = InitialData {
            label,
            rs,
            twist,
            lambda,
            lambda_dual,
            w0,
            s_set: BTreeSet::new(),
            orbits: Vec::new(),
        };
        d.s_set = d.compute_s();
        d.orbits = d.compute_orbits();
        Ok(d)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lambda
    }

    pub fn dual_lattice(&self) -> &Lattice {
        &self.lambda_dual
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.w0
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// The rescaling `mu`: identically 1 (untwisted) or `|alpha|^2 / 2`
    /// (twisted).
    pub fn mu(&self, root: &Vector) -> Scalar {
        match self.twist {
            Twist::Untwisted => sc(1),
            Twist::Twisted => root.norm2() * frac(1, 2),
        }
    }

    /// `alpha^d = mu_alpha alpha^`: the dual-side image of a root.
    pub fn root_d(&self, root: &Vector) -> Vector {
        root.covector().scale(&self.mu(root))
    }

    /// `alpha^{d vee} = alpha / mu_alpha`: the coroot of `alpha^d`.
    pub fn root_d_vee(&self, root: &Vector) -> Vector {
        root.scale(&self.mu(root).recip())
    }

    /// The affine simple root `a_0`: `c - phi` (untwisted) or
    /// `(|theta|^2/2) c - theta` (twisted).
    pub fn a0(&self) -> AffineRoot {
        match self.twist {
            Twist::Untwisted => AffineRoot::new(sc(1), -&self.rs.highest_root()),
            Twist::Twisted => {
                let theta = self.rs.highest_short_root();
                AffineRoot::new(theta.norm2() * frac(1, 2), -&theta)
            }
        }
    }

    /// Affine simple roots `a_0, ..., a_n` (index 0 is the affine node).
    pub fn affine_simple(&self, i: usize) -> AffineRoot {
        if i == 0 {
            self.a0()
        } else {
            AffineRoot::finite(self.rs.simple_root(i).clone())
        }
    }

    /// `S = { i : (Lambda, (Da_i)^) = 2Z }`: the simple indices whose
    /// doubles extend the reduced affine root system.
    pub fn s_set(&self) -> &BTreeSet<usize> {
        &self.s_set
    }

    fn compute_s(&self) -> BTreeSet<usize> {
        (0..=self.rank())
            .filter(|&i| {
                let cov = self.affine_simple(i).grad.covector();
                pairing_generator(&self.lambda, &cov) == sc(2)
            })
            .collect()
    }

    /// Membership in the full (possibly nonreduced) affine root system `R`.
    pub fn is_affine_root(&self, a: &AffineRoot) -> bool {
        self.is_reduced_affine_root(a) || self.is_doubled_affine_root(a)
    }

    /// Membership in the reduced part `R^bullet = { m mu_alpha c + alpha }`.
    pub fn is_reduced_affine_root(&self, a: &AffineRoot) -> bool {
        if !self.rs.is_root(&a.grad) {
            return false;
        }
        (&a.level / self.mu(&a.grad)).is_integer()
    }

    /// Membership in the doubled part: `a = 2b` with `b` in the affine Weyl
    /// group orbit of some `a_i`, `i in S`.
    pub fn is_doubled_affine_root(&self, a: &AffineRoot) -> bool {
        let b = a.half();
        if !self.is_reduced_affine_root(&b) {
            return false;
        }
        self.s_set.iter().any(|&i| {
            // W^bullet-orbit: translations come from Z R_0^d only
            let ai = self.affine_simple(i);
            if self.w0.dominant_rep(&b.grad).0 != self.w0.dominant_rep(&ai.grad).0 {
                return false;
            }
            let g = self.root_lattice_pairing_gen(&b.grad);
            congruent(&b.level, &ai.level, &g)
        })
    }

    /// Generator of `(Z R_0^d, beta)` (translations available in the
    /// unextended affine Weyl group).
    fn root_lattice_pairing_gen(&self, beta: &Vector) -> Scalar {
        let gens: Vec<Vector> = (1..=self.rank())
            .map(|i| self.root_d(self.rs.simple_root(i)))
            .collect();
        let lat = Lattice::from_basis("ZR0d", gens);
        pairing_generator(&lat, beta)
    }

    /// Generator of `(Lambda^d, beta)` (translations in the extended group).
    pub fn dual_pairing_gen(&self, beta: &Vector) -> Scalar {
        pairing_generator(&self.lambda_dual, beta)
    }

    /// Canonical representative of the extended-Weyl-group orbit of a
    /// reduced affine root: dominant gradient, minimal nonnegative level
    /// residue modulo the available translations.
    fn canonical_rep_reduced(&self, a: &AffineRoot) -> AffineRoot {
        let (dom, _) = self.w0.dominant_rep(&a.grad);
        let g = self.dual_pairing_gen(&dom);
        assert!(g.is_positive());
        AffineRoot::new(rem_euclid_scalar(&a.level, &g), dom)
    }

    /// Canonical representative of the orbit of any root of `R`.
    pub fn orbit_rep(&self, a: &AffineRoot) -> AffineRoot {
        if self.is_reduced_affine_root(a) {
            self.canonical_rep_reduced(a)
        } else {
            assert!(self.is_doubled_affine_root(a), "not an affine root: {a}");
            self.canonical_rep_reduced(&a.half()).double()
        }
    }

    /// Index into [`InitialData::orbits`] of the orbit of `a`.
    pub fn orbit_index(&self, a: &AffineRoot) -> usize {
        let rep = self.orbit_rep(a);
        let doubled = !self.is_reduced_affine_root(a);
        self.orbits
            .iter()
            .position(|o| o.doubled == doubled && o.rep == rep)
            .expect("orbit table is complete")
    }

    /// The orbit table of the extended affine Weyl group acting on `R`.
    /// Its length is the dimension of the multiplicity torus.
    pub fn orbits(&self) -> &[AffineOrbit] {
        &self.orbits
    }

    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }

    fn compute_orbits(&self) -> Vec<AffineOrbit> {
        let mut reduced_reps = BTreeSet::new();
        // gradient orbits of R_0 are represented by the dominant roots
        let dominant_roots: BTreeSet<Vector> = self
            .rs
            .positive_roots()
            .iter()
            .filter(|a| self.rs.is_dominant(a))
            .cloned()
            .collect();
        for dom in &dominant_roots {
            let mu = self.mu(dom);
            let g = self.dual_pairing_gen(dom);
            let classes = &g / &mu;
            assert!(
                classes.is_integer() && classes.is_positive(),
                "level classes must be a positive integer count"
            );
            let classes: i64 = classes.to_integer().try_into().unwrap();
            for j in 0..classes {
                reduced_reps.insert(AffineRoot::new(&mu * sc(j), dom.clone()));
            }
        }
        let mut doubled_reps = BTreeSet::new();
        for &i in &self.s_set {
            doubled_reps.insert(self.orbit_rep(&self.affine_simple(i).double()));
        }
        let mut orbits: Vec<AffineOrbit> = reduced_reps
            .into_iter()
            .map(|rep| AffineOrbit {
                rep,
                doubled: false,
            })
            .collect();
        orbits.extend(doubled_reps.into_iter().map(|rep| AffineOrbit {
            rep,
            doubled: true,
        }));
        orbits
    }

    /// The dual quintuple `(R_0^d, Delta_0^d, bullet, Lambda^d, Lambda)`.
    pub fn dual(&self) -> InitialData {
        let dual_rs = dual_root_system(&self.rs, self.twist);
        InitialData::new(
            format!("{}^d", self.label),
            dual_rs,
            self.twist,
            self.lambda_dual.clone(),
            self.lambda.clone(),
        )
        .expect("dual of valid initial data is valid")
    }

    /// Multiplicity transport to the dual side: entry `k` is the index of
    /// the orbit of `self` whose multiplicity the `k`-th orbit of `dual`
    /// inherits.  The generator assignments are: the orbit of `a_0^d` takes
    /// the value at `2 alpha_j` (`alpha_j` a short simple root), the orbit
    /// of `alpha_i^d` takes the value at `alpha_i`, the orbit of `2 a_0^d`
    /// takes the value at `2 a_0`, and the orbit of `2 alpha_{j^d}^d` takes
    /// the value at `a_0`; here the value at `2a` means the value at `a`
    /// whenever `2a` is not itself a root.  Consistency across orbit merges
    /// and bijectivity are theorems, asserted here.
    pub fn dual_multiplicity_map(&self, dual: &InitialData) -> Vec<usize> {
        // orbit of 2a when 2a is a root, else orbit of a
        let double_or_self = |d: &InitialData, a: &AffineRoot| -> usize {
            let twice = a.double();
            if d.is_affine_root(&twice) {
                d.orbit_index(&twice)
            } else {
                d.orbit_index(a)
            }
        };
        let short_simple = |d: &InitialData| -> usize {
            let norm = |i: &usize| d.rs.simple_root(*i).norm2();
            (1..=d.rank()).min_by_key(norm).unwrap()
        };
        let mut entries: Vec<(usize, usize)> = Vec::new();
        entries.push((
            dual.orbit_index(&dual.a0()),
            double_or_self(
                self,
                &AffineRoot::finite(self.rs.simple_root(short_simple(self)).clone()),
            ),
        ));
        for i in 1..=self.rank() {
            entries.push((
                dual.orbit_index(&AffineRoot::finite(dual.rs.simple_root(i).clone())),
                self.orbit_index(&AffineRoot::finite(self.rs.simple_root(i).clone())),
            ));
        }
        if dual.s_set.contains(&0) {
            entries.push((
                dual.orbit_index(&dual.a0().double()),
                double_or_self(self, &self.a0()),
            ));
        }
        let jd = short_simple(dual);
        if dual.s_set.contains(&jd) {
            entries.push((
                dual.orbit_index(&dual.affine_simple(jd).double()),
                self.orbit_index(&self.a0()),
            ));
        }
        let mut map: Vec<Option<usize>> = vec![None; dual.num_orbits()];
        for (k, v) in entries {
            match map[k] {
                None => map[k] = Some(v),
                Some(prev) => assert_eq!(
                    prev, v,
                    "multiplicity transport must be single-valued on merged orbits"
                ),
            }
        }
        let map: Vec<usize> = map
            .into_iter()
            .map(|m| m.expect("every dual orbit meets an affine simple root or its double"))
            .collect();
        let mut image: Vec<usize> = map.clone();
        image.sort_unstable();
        image.dedup();
        assert_eq!(
            image.len(),
            self.num_orbits(),
            "multiplicity transport must be a bijection on orbit tables"
        );
        map
    }

    /// Affine Cartan matrix `a_ij = (a_i^, a_j)` over the ordered basis
    /// `(a_0, ..., a_n)`; pairings see gradients only.
    pub fn affine_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let simples: Vec<AffineRoot> = (0..=n).map(|i| self.affine_simple(i)).collect();
        (0..=n)
            .map(|i| {
                let cov = simples[i].grad.covector();
                (0..=n)
                    .map(|j| {
                        let p = simples[j].grad.dot(&cov);
                        assert!(p.is_integer(), "affine Cartan entries are integers");
                        i64::try_from(p.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    /// All roots of `R` with `|level| <= bound` (brute-force test support).
    pub fn affine_roots_up_to_level(&self, bound: &Scalar) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        for beta in self.rs.roots() {
            let mu = self.mu(&beta);
            let mut m = sc(0);
            loop {
                if &m > bound {
                    break;
                }
                out.push(AffineRoot::new(m.clone(), beta.clone()));
                if !m.is_zero() {
                    out.push(AffineRoot::new(-m.clone(), beta.clone()));
                }
                m += &mu;
            }
        }
        let doubled: Vec<AffineRoot> = out
            .iter()
            .map(|b| b.double())
            .filter(|a| a.level.abs() <= *bound && self.is_doubled_affine_root(a))
            .collect();
        out.extend(doubled);
        out.sort();
        out
    }
}

/// Generator of the subgroup `{ (x, v) : x in lattice }` of `Q`, i.e. the
/// nonnegative gcd of the basis pairings.
pub fn pairing_generator(lattice: &Lattice, v: &Vector) -> Scalar {
    lattice
        .basis()
        .iter()
        .map(|b| b.dot(v))
        .fold(Scalar::zero(), |acc, p| rational_gcd(&acc, &p))
}

/// Euclid on rationals: the generator of `aZ + bZ` inside `Q`.
fn rational_gcd(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let (an, ad) = (a.numer().clone(), a.denom().clone());
    let (bn, bd) = (b.numer().clone(), b.denom().clone());
    // gcd(an/ad, bn/bd) = gcd(an*bd, bn*ad) / (ad*bd)
    let num: BigInt = (an * &bd).gcd(&(bn * &ad));
    Scalar::new(num, ad * bd)
}

fn congruent(a: &Scalar, b: &Scalar, modulus: &Scalar) -> bool {
    if modulus.is_zero() {
        return a == b;
    }
    ((a - b) / modulus).is_integer()
}

fn rem_euclid_scalar(a: &Scalar, modulus: &Scalar) -> Scalar {
    let q = (a / modulus).floor();
    a - &(q * modulus)
}

fn validate_lattices(
    rs: &RootSystem,
    twist: Twist,
    lambda: &Lattice,
    lambda_dual: &Lattice,
) -> Result<()> {
    let mu = |root: &Vector| -> Scalar {
        match twist {
            Twist::Untwisted => sc(1),
            Twist::Twisted => root.norm2() * frac(1, 2),
        }
    };
    for i in 1..=rs.rank() {
        let alpha = rs.simple_root(i);
        if !lambda.contains(alpha) {
            return Err(Error::LatticeCondition(format!(
                "the root lattice is not contained in Lambda: simple root {alpha} is not a lattice point of {}",
                lambda.label()
            )));
        }
        let alpha_d = alpha.covector().scale(&mu(alpha));
        if !lambda_dual.contains(&alpha_d) {
            return Err(Error::LatticeCondition(format!(
                "the dual root lattice is not contained in Lambda^d: dual simple root {alpha_d} is not a lattice point of {}",
                lambda_dual.label()
            )));
        }
        for b in lambda.basis() {
            if !b.dot(&alpha.covector()).is_integer() {
                return Err(Error::LatticeCondition(format!(
                    "(Lambda, coroot lattice) is not integral: ({b}, {alpha}^) is not an integer"
                )));
            }
        }
        for b in lambda_dual.basis() {
            if !b.dot(&alpha_d.covector()).is_integer() {
                return Err(Error::LatticeCondition(format!(
                    "(Lambda^d, dual coroot lattice) is not integral: ({b}, ({alpha_d})^) is not an integer"
                )));
            }
        }
    }
    if lambda.rank() != lambda_dual.rank() {
        return Err(Error::LatticeCondition(format!(
            "Lambda and Lambda^d must span the same space: ranks {} and {} differ",
            lambda.rank(),
            lambda_dual.rank()
        )));
    }
    for b in lambda.basis() {
        if lambda_dual.rational_coords(b).is_none() {
            return Err(Error::LatticeCondition(format!(
                "Lambda and Lambda^d must span the same space: {b} is outside the span of {}",
                lambda_dual.label()
            )));
        }
    }
    Ok(())
}
