//! The polynomial families attached to a fixed choice of initial data:
//! monic nonsymmetric polynomials as joint eigenfunctions of the commuting
//! `Y`-operators, their symmetrizations, the normalized variants, and the
//! closed product formulas for base-point values and quadratic norms.
//!
//! Everything is exact rational arithmetic.  Parameter specializations that
//! break genericity surface as `Error::Genericity` instead of silently
//! producing a wrong basis.  Two independent construction routes are kept:
//! triangular back-substitution on the saturation span, and the intertwiner
//! recursion along a reduced word; tests pin them against each other.

mod explicit;

pub use explicit::{rank1_askey_wilson, rank1_gl2, section5_case, section5_formulas, Section5Case};

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::heckeops::{matrix_on_span, required_scale, BasicRep, LaurentPoly};
use crate::initdata::{AffineRoot, InitialData};
use crate::qnum::{pow_i, Field, ParameterSet, RefOps, Scalar};
use crate::rootdata::{Lattice, Vector};
use crate::weyl::{preceq, saturation_sorted, v_word, AffineWeyl, ExtElem};

/// A spectral point `gamma_{lambda,q}` of the torus of the dual lattice (or,
/// when built from the dual data, a point `gamma^d_{xi,q}` of the primal
/// torus).  Stored in factored form: the `q`-part plus one
/// `(value, exponent vector)` pair per positive root, so the value on a
/// character `xi` is `q^((weight,xi)) * prod value^((xi,e))` with every
/// exponent integral by the lattice axioms.
#[derive(Debug, Clone)]
pub struct SpectralPoint<S: Field = Scalar> {
    params: ParameterSet<S>,
    weight: Vector,
    factors: Vec<(S, Vector)>,
}

impl<S: Field> SpectralPoint<S>
where
    for<'x> &'x S: RefOps<S>,
{
    fn build(d: &InitialData, params: &ParameterSet<S>, weight: &Vector) -> SpectralPoint<S> {
        debug_assert!(
            d.lattice().contains(weight),
            "spectral weight must lie in the lattice"
        );
        let factors = d
            .root_system()
            .positive_roots()
            .iter()
            .map(|alpha| {
                let finite = AffineRoot::finite(alpha.clone());
                let shifted = AffineRoot::new(d.mu(alpha), alpha.clone());
                let ups = params.kappa_half(d.orbit_index(&finite))
                    * params.kappa_half(d.orbit_index(&shifted));
                // sign convention: the factor enters inverted on the closed
                // nonpositive side (weight, alpha^) <= 0.
                let signed = if weight.dot(&alpha.covector()).is_positive() {
                    ups
                } else {
                    ups.recip()
                };
                (signed, d.root_d_vee(alpha))
            })
            .collect();
        SpectralPoint {
            params: params.clone(),
            weight: weight.clone(),
            factors,
        }
    }

    pub fn weight(&self) -> &Vector {
        &self.weight
    }

    /// Value on the character `xi` of the torus.
    pub fn eval(&self, xi: &Vector) -> Result<S> {
        let mut acc = self.params.q_pow(&self.weight.dot(xi))?;
        for (value, evec) in &self.factors {
            let e = evec.dot(xi);
            assert!(e.is_integer(), "spectral exponent must be integral");
            acc = acc * pow_i(value, i64::try_from(e.to_integer()).unwrap());
        }
        Ok(acc)
    }

    /// Value on the affine character `q^level x^grad`.
    pub fn eval_affine(&self, a: &AffineRoot) -> Result<S> {
        Ok(self.params.q_pow(&a.level)? * self.eval(&a.grad)?)
    }

    /// Evaluate a Laurent polynomial whose exponents are coordinates in
    /// `lat`.
    pub fn eval_poly(&self, lat: &Lattice, p: &LaurentPoly<S>) -> Result<S> {
        let mut acc = S::zero();
        for (exp, coeff) in p.terms() {
            acc = acc + coeff * &self.eval(&lat.point(exp))?;
        }
        Ok(acc)
    }
}

/// Which of the two mutually dual sides a weight lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
}

/// `gamma_{weight,q}` for a primal weight, or `gamma^d_{weight,q}` for a
/// dual one.
pub fn spectral_point<S: Field>(
    d: &InitialData,
    params: &ParameterSet<S>,
    weight: &Vector,
    side: Side,
) -> Result<SpectralPoint<S>>
where
    for<'x> &'x S: RefOps<S>,
{
    match side {
        Side::Primal => Ok(SpectralPoint::build(d, params, weight)),
        Side::Dual => {
            let (dual_d, dual_params) = dual_companions(d, params)?;
            Ok(SpectralPoint::build(&dual_d, &dual_params, weight))
        }
    }
}

/// The dual initial data together with the transported multiplicity
/// parameters: each dual orbit inherits the kappa of the primal orbit it is
/// paired with.
pub fn dual_companions<S: Field>(
    d: &InitialData,
    params: &ParameterSet<S>,
) -> Result<(InitialData, ParameterSet<S>)>
where
    for<'x> &'x S: RefOps<S>,
{
    let dual = d.dual();
    let need = required_scale(&dual);
    if params.scale_l() % need != 0 {
        return Err(Error::Invalid(format!(
            "the dual side of {} needs q-powers on the (1/{})Z grid, got scale 1/{}",
            d.label(),
            2 * need,
            2 * params.scale_l()
        )));
    }
    let map = d.dual_multiplicity_map(&dual);
    Ok((dual, params.transported(&map)))
}

/// `kappa` at the orbit of `a`.
pub fn kappa_at<S: Field>(d: &InitialData, params: &ParameterSet<S>, a: &AffineRoot) -> S
where
    for<'x> &'x S: RefOps<S>,
{
    params.kappa(d.orbit_index(a))
}

/// `kappa` at the orbit of `2a`, falling back to the value at `a` when `2a`
/// is not a root.
pub fn kappa_double<S: Field>(d: &InitialData, params: &ParameterSet<S>, a: &AffineRoot) -> S
where
    for<'x> &'x S: RefOps<S>,
{
    let twice = a.double();
    if d.is_affine_root(&twice) {
        params.kappa(d.orbit_index(&twice))
    } else {
        kappa_at(d, params, a)
    }
}

/// The c-function value
/// `(1 - kappa_a kappa_2a t)(1 + kappa_a kappa_2a^-1 t) / (1 - t^2)`
/// where `t` is the value of the spectral point on `a`.
pub fn c_value<S: Field>(
    d: &InitialData,
    params: &ParameterSet<S>,
    a: &AffineRoot,
    at: &SpectralPoint<S>,
) -> Result<S>
where
    for<'x> &'x S: RefOps<S>,
{
    debug_assert!(d.is_reduced_affine_root(a), "c-function wants a reduced root");
    let t = at.eval_affine(a)?;
    let den = S::one() - &t * &t;
    if den.is_zero() {
        return Err(Error::Pole(format!("c-function pole at {a}")));
    }
    let k = kappa_at(d, params, a);
    let k2 = kappa_double(d, params, a);
    let num = (S::one() - &k * &k2 * &t) * (S::one() + &k * &t / &k2);
    Ok(num / den)
}

/// The normalized intertwiner factor
/// `kappa_a^-1 (1 - kappa_a kappa_2a t)(1 + kappa_a kappa_2a^-1 t)`.
pub fn r_value<S: Field>(
    d: &InitialData,
    params: &ParameterSet<S>,
    a: &AffineRoot,
    at: &SpectralPoint<S>,
) -> Result<S>
where
    for<'x> &'x S: RefOps<S>,
{
    let t = at.eval_affine(a)?;
    let k = kappa_at(d, params, a);
    let k2 = kappa_double(d, params, a);
    Ok((S::one() - &k * &k2 * &t) * (S::one() + &k * &t / &k2) / k)
}

/// Normalization tag of a constructed polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Monic nonsymmetric eigenfunction, coefficient 1 on its leading
    /// monomial.
    NonsymmetricMonic,
    /// Monic symmetric polynomial labelled by a dominant weight.
    SymmetricMonic,
    /// Nonsymmetric family normalized to value 1 at the evaluation point.
    NormalizedE,
    /// Symmetrized normalized family, again value 1 at the evaluation point.
    NormalizedESymmetric,
}

/// A constructed polynomial with its label and parameter provenance.
#[derive(Debug, Clone)]
pub struct MkPolynomial<S: Field = Scalar> {
    pub weight: Vector,
    pub family: Family,
    pub poly: LaurentPoly<S>,
    /// Fingerprint of the parameter specialization it was built at.
    pub fingerprint: String,
}

/// Per-orbit spectral data: the saturation span in the total order, the
/// column-major matrices of the `Y`-action along the dual basis, and the
/// predicted diagonal.
struct OrbitData<S: Field> {
    span: Vec<Vector>,
    coords: Vec<Vec<i64>>,
    mats: Vec<Vec<Vec<S>>>,
    /// `eigs[i][k]`: value of the spectral point of `span[i]` on the negated
    /// `k`-th dual basis vector.
    eigs: Vec<Vec<S>>,
}

/// Construction engine for one choice of initial data and parameters.
/// Spectral data is cached per dominant orbit.
pub struct MkEngine<'a, S: Field = Scalar> {
    rep: BasicRep<'a, S>,
    dual_d: InitialData,
    dual_params: ParameterSet<S>,
    gamma0: SpectralPoint<S>,
    gamma0_dual: SpectralPoint<S>,
    cache: Mutex<BTreeMap<Vec<i64>, Arc<OrbitData<S>>>>,
}

impl<'a, S: Field> MkEngine<'a, S>
where
    for<'x> &'x S: RefOps<S>,
{
    pub fn new(d: &'a InitialData, params: &'a ParameterSet<S>) -> Result<MkEngine<'a, S>> {
        let rep = BasicRep::new(d, params)?;
        let (dual_d, dual_params) = dual_companions(d, params)?;
        let zero = Vector::zeros(d.root_system().ambient_dim());
        let gamma0 = SpectralPoint::build(d, params, &zero);
        let gamma0_dual = SpectralPoint::build(&dual_d, &dual_params, &zero);
        Ok(MkEngine {
            rep,
            dual_d,
            dual_params,
            gamma0,
            gamma0_dual,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn data(&self) -> &InitialData {
        self.rep.data()
    }

    pub fn params(&self) -> &ParameterSet<S> {
        self.rep.params()
    }

    pub fn rep(&self) -> &BasicRep<'a, S> {
        &self.rep
    }

    pub fn dual_data(&self) -> &InitialData {
        &self.dual_d
    }

    pub fn dual_params(&self) -> &ParameterSet<S> {
        &self.dual_params
    }

    /// `gamma_{lambda,q}`, a point of the dual-side torus.
    pub fn spectral(&self, lambda: &Vector) -> SpectralPoint<S> {
        SpectralPoint::build(self.data(), self.params(), lambda)
    }

    /// `gamma^d_{xi,q}`, a point of the primal torus.
    pub fn dual_spectral(&self, xi: &Vector) -> SpectralPoint<S> {
        SpectralPoint::build(&self.dual_d, &self.dual_params, xi)
    }

    pub fn gamma0(&self) -> &SpectralPoint<S> {
        &self.gamma0
    }

    /// The evaluation base point.
    pub fn gamma0_dual(&self) -> &SpectralPoint<S> {
        &self.gamma0_dual
    }

    /// Value of a primal-side polynomial at `gamma^d_{xi,q}`.
    pub fn value_at_dual(&self, p: &LaurentPoly<S>, xi: &Vector) -> Result<S> {
        self.dual_spectral(xi).eval_poly(self.data().lattice(), p)
    }

    /// The extended affine Weyl group of the dual data, where the spectral
    /// combinatorics of primal weights lives.
    pub fn dual_affine_weyl(&self) -> AffineWeyl<'_> {
        AffineWeyl::new(&self.dual_d)
    }

    /// The minimal-length representative of the translation by `lambda`
    /// modulo the finite group; it moves the origin to `lambda`.
    pub fn u_elem(&self, aw: &AffineWeyl<'_>, lambda: &Vector) -> ExtElem {
        let vw = v_word(self.data(), lambda);
        let dweyl = self.dual_d.weyl();
        let vidx = dweyl.elem_from_word(&vw);
        let tau = aw.translation(lambda.clone());
        let u = aw.compose(&tau, &aw.from_finite(dweyl.inverse(vidx)));
        debug_assert_eq!(
            aw.length(&u) + vw.len(),
            aw.length(&tau),
            "u v = tau must factor reduced"
        );
        debug_assert_eq!(aw.act_point(&u, &Vector::zeros(lambda.dim())), *lambda);
        u
    }

    fn dual_kappa(&self, a: &AffineRoot) -> S {
        kappa_at(&self.dual_d, &self.dual_params, a)
    }

    fn dual_c(&self, a: &AffineRoot, at: &SpectralPoint<S>) -> Result<S> {
        c_value(&self.dual_d, &self.dual_params, a, at)
    }

    /// Product of dual kappas over a word in the finite simple reflections.
    fn dual_kappa_word(&self, word: &[usize]) -> S {
        word.iter().fold(S::one(), |acc, &i| {
            acc * self.dual_kappa(&self.dual_d.affine_simple(i))
        })
    }

    fn orbit_data(&self, lambda: &Vector) -> Result<Arc<OrbitData<S>>> {
        let (dom, _) = self.data().weyl().dominant_rep(lambda);
        let key = self.rep.coords(&dom);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build_orbit(&dom)?);
        Ok(self
            .cache
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(built)
            .clone())
    }

    fn build_orbit(&self, dom: &Vector) -> Result<OrbitData<S>> {
        let span = saturation_sorted(self.data(), dom);
        let coords: Vec<Vec<i64>> = span.iter().map(|v| self.rep.coords(v)).collect();
        let basis = self.data().dual_lattice().basis();
        let mut eigs: Vec<Vec<S>> = Vec::with_capacity(span.len());
        for mu in &span {
            let point = self.spectral(mu);
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                row.push(point.eval(&-b)?);
            }
            eigs.push(row);
        }
        let mut mats = Vec::with_capacity(basis.len());
        for (k, b) in basis.iter().enumerate() {
            let m = matrix_on_span(&coords, |p| self.rep.y_apply(b, p));
            // triangularity in the total order with the predicted spectrum
            // on the diagonal is the structural fact everything rests on;
            // fail loudly if a change elsewhere ever breaks it.
            for (j, col) in m.iter().enumerate() {
                assert_eq!(col[j], eigs[j][k], "diagonal must match the spectrum");
                for (i, entry) in col.iter().enumerate() {
                    assert!(i <= j || entry.is_zero(), "Y-action must be triangular");
                }
            }
            mats.push(m);
        }
        Ok(OrbitData {
            span,
            coords,
            mats,
            eigs,
        })
    }

    /// The monic nonsymmetric polynomial with leading monomial `x^lambda`,
    /// by back-substitution in the joint triangular eigenproblem.
    pub fn nonsymmetric_poly(&self, lambda: &Vector) -> Result<MkPolynomial<S>> {
        if !self.data().lattice().contains(lambda) {
            return Err(Error::Invalid(format!("{lambda} is not in the lattice")));
        }
        let od = self.orbit_data(lambda)?;
        let j = od
            .span
            .iter()
            .position(|m| m == lambda)
            .expect("a weight lies in its own saturation");
        let target = &od.eigs[j];
        let mut v = vec![S::zero(); od.span.len()];
        v[j] = S::one();
        for i in (0..j).rev() {
            let k = match (0..target.len()).find(|&k| od.eigs[i][k] != target[k]) {
                Some(k) => k,
                None => {
                    return Err(Error::Genericity(format!(
                        "the spectral points of {} and {} coincide",
                        od.span[i], lambda
                    )))
                }
            };
            let mut num = S::zero();
            for l in (i + 1)..=j {
                if !v[l].is_zero() {
                    num = num + &od.mats[k][l][i] * &v[l];
                }
            }
            v[i] = num / (&target[k] - &od.eigs[i][k]);
        }
        // the vector must be an eigenvector in every direction, not only the
        // ones used to force each coordinate
        for (k, t) in target.iter().enumerate() {
            for i in 0..=j {
                let mut acc = S::zero();
                for l in i..=j {
                    if !v[l].is_zero() {
                        acc = acc + &od.mats[k][l][i] * &v[l];
                    }
                }
                if acc != t * &v[i] {
                    return Err(Error::EigenspaceDimension(0));
                }
            }
        }
        let mut poly = LaurentPoly::zero();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                debug_assert!(
                    preceq(self.data(), &od.span[i], lambda),
                    "support must respect the order"
                );
                poly.add_term(od.coords[i].clone(), c.clone());
            }
        }
        Ok(MkPolynomial {
            weight: lambda.clone(),
            family: Family::NonsymmetricMonic,
            poly,
            fingerprint: self.params().fingerprint(),
        })
    }

    /// The monic symmetric polynomial labelled by a dominant weight.
    pub fn symmetric_poly(&self, dominant: &Vector) -> Result<MkPolynomial<S>> {
        if !self.data().root_system().is_dominant(dominant) {
            return Err(Error::Invalid(format!("{dominant} is not dominant")));
        }
        let (anti, _) = self.data().weyl().antidominant_rep(dominant);
        let e = self.nonsymmetric_poly(&anti)?;
        let s = self.rep.symmetrize(&e.poly);
        let lead = s.coeff(&self.rep.coords(dominant));
        if lead.is_zero() {
            return Err(Error::Genericity(
                "symmetrization annihilated the leading orbit sum".into(),
            ));
        }
        Ok(MkPolynomial {
            weight: dominant.clone(),
            family: Family::SymmetricMonic,
            poly: s.scale(&lead.recip()),
            fingerprint: self.params().fingerprint(),
        })
    }

    /// The nonsymmetric polynomial normalized to value 1 at the base point.
    pub fn normalized_e(&self, lambda: &Vector) -> Result<MkPolynomial<S>> {
        let p = self.nonsymmetric_poly(lambda)?;
        let val = self.gamma0_dual.eval_poly(self.data().lattice(), &p.poly)?;
        if val.is_zero() {
            return Err(Error::Pole(format!("P_{lambda} vanishes at the base point")));
        }
        Ok(MkPolynomial {
            weight: lambda.clone(),
            family: Family::NormalizedE,
            poly: p.poly.scale(&val.recip()),
            fingerprint: self.params().fingerprint(),
        })
    }

    /// Symmetrization of the normalized family; keeps value 1 at the base
    /// point.
    pub fn normalized_e_symmetric(&self, lambda: &Vector) -> Result<MkPolynomial<S>> {
        let e = self.normalized_e(lambda)?;
        Ok(MkPolynomial {
            weight: lambda.clone(),
            family: Family::NormalizedESymmetric,
            poly: self.rep.symmetrize(&e.poly),
            fingerprint: self.params().fingerprint(),
        })
    }

    /// The operator image of the affine generator transported through the
    /// duality anti-isomorphism: multiply by the inverse character of the
    /// highest short root, then apply the inverse Hecke element of its
    /// reflection.
    pub fn dual_t0_apply(&self, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let theta = self.data().root_system().highest_short_root();
        let aw = self.rep.affine_weyl();
        let s_theta = aw.reflection(&AffineRoot::finite(theta.clone()));
        let shifted = p.shifted(&self.rep.coords(&-&theta), &S::one());
        self.rep.t_elem_inv_apply(&s_theta, &shifted)
    }

    /// The `i`-th intertwiner as an operator on polynomials: a commutator of
    /// a `Y`-character with a Hecke generator, the affine case carrying a
    /// `q`-power prefactor.
    pub fn intertwiner_apply(&self, i: usize, p: &LaurentPoly<S>) -> Result<LaurentPoly<S>> {
        if i == 0 {
            let a0d = self.dual_d.a0();
            let theta_d = -&a0d.grad;
            let qmu = self.params().q_pow(&a0d.level)?;
            let left = self.rep.y_apply(&theta_d, &self.dual_t0_apply(p));
            let right = self.dual_t0_apply(&self.rep.y_apply(&theta_d, p));
            Ok((&left - &right).scale(&qmu))
        } else {
            let minus_ad = -&self.dual_d.affine_simple(i).grad;
            let left = self.rep.y_apply(&minus_ad, &self.rep.t_apply(i, p));
            let right = self.rep.t_apply(i, &self.rep.y_apply(&minus_ad, p));
            Ok(&left - &right)
        }
    }

    /// Independent construction of the monic nonsymmetric polynomial by the
    /// intertwiner recursion along a reduced word.
    pub fn nonsymmetric_via_intertwiners(&self, lambda: &Vector) -> Result<MkPolynomial<S>> {
        if !self.data().lattice().contains(lambda) {
            return Err(Error::Invalid(format!("{lambda} is not in the lattice")));
        }
        let aw = self.dual_affine_weyl();
        let u = self.u_elem(&aw, lambda);
        let (omega, word) = aw.reduced_word(&aw.inverse(&u));
        let dim = self.data().lattice().basis().len();
        let zero = Vector::zeros(lambda.dim());
        let mut p = LaurentPoly::one(dim);
        let mut cur = zero.clone();
        if !aw.is_identity(&omega) {
            // the length-zero factor belongs to a minuscule-type weight; it
            // acts by the inverse Hecke element of the sorting word after
            // multiplication by the inverse character
            let mu = aw.act_point(&omega, &zero);
            if self.u_elem(&aw, &mu) != omega {
                return Err(Error::Invalid(format!(
                    "length-zero factor is not attached to {mu}"
                )));
            }
            let weyl = self.data().weyl();
            let vidx = weyl.elem_from_word(&v_word(self.data(), &mu));
            let velem = self.rep.affine_weyl().from_finite(weyl.inverse(vidx));
            let shifted = p.shifted(&self.rep.coords(&-&mu), &S::one());
            p = self.rep.t_elem_inv_apply(&velem, &shifted);
            cur = aw.act_point(&aw.inverse(&omega), &zero);
        }
        for &i in &word {
            let next = aw.act_point(&aw.simple(i), &cur);
            if next == cur {
                return Err(Error::Invalid(
                    "intertwiner chain stalled at a fixed weight".into(),
                ));
            }
            p = self.intertwiner_apply(i, &p)?;
            cur = next;
        }
        if cur != *lambda {
            return Err(Error::Invalid(format!(
                "intertwiner chain ended at {cur}, wanted {lambda}"
            )));
        }
        let lead = p.coeff(&self.rep.coords(lambda));
        if lead.is_zero() {
            return Err(Error::Genericity(
                "intertwiner route produced a vanishing leading term".into(),
            ));
        }
        Ok(MkPolynomial {
            weight: lambda.clone(),
            family: Family::NonsymmetricMonic,
            poly: p.scale(&lead.recip()),
            fingerprint: self.params().fingerprint(),
        })
    }

    /// Closed product formula for the base-point value of the monic
    /// nonsymmetric polynomial.
    pub fn evaluation_value(&self, lambda: &Vector) -> Result<S> {
        let aw = self.dual_affine_weyl();
        let u = self.u_elem(&aw, lambda);
        let tau = aw.translation(lambda.clone());
        let mut acc = S::one();
        for a in aw.inversion_set(&tau) {
            acc = acc / self.dual_kappa(&a);
        }
        for a in aw.inversion_set(&u) {
            acc = acc * self.dual_c(&a, &self.gamma0)?;
        }
        Ok(acc)
    }

    /// The normalized quadratic norm of the nonsymmetric family, as a closed
    /// product over the inversion set.
    pub fn norm_nonsymmetric(&self, lambda: &Vector) -> Result<S> {
        let aw = self.dual_affine_weyl();
        let u = self.u_elem(&aw, lambda);
        let mut acc = S::one();
        for a in aw.inversion_set(&u) {
            acc = acc * self.dual_c(&a.neg(), &self.gamma0)? / self.dual_c(&a, &self.gamma0)?;
        }
        Ok(acc)
    }

    /// Product of finite c-function values over the negative dual roots.
    fn script_c_dual(&self, at: &SpectralPoint<S>) -> Result<S> {
        let mut acc = S::one();
        for alpha in self.dual_d.root_system().positive_roots() {
            acc = acc * self.dual_c(&AffineRoot::finite(-alpha), at)?;
        }
        Ok(acc)
    }

    /// Closed product formulas for the symmetric family at an antidominant
    /// weight: the base-point value of the monic symmetric polynomial and
    /// its normalized quadratic norm.
    pub fn norm_symmetric(&self, lambda: &Vector) -> Result<(S, S)> {
        if !self.data().root_system().is_antidominant(lambda) {
            return Err(Error::Invalid(format!("{lambda} is not antidominant")));
        }
        let aw = self.dual_affine_weyl();
        let tau = aw.translation(lambda.clone());
        let mut c_tau = S::one();
        let mut c_neg_tau = S::one();
        let mut kappa_tau = S::one();
        for a in aw.inversion_set(&tau) {
            c_tau = c_tau * self.dual_c(&a, &self.gamma0)?;
            c_neg_tau = c_neg_tau * self.dual_c(&a.neg(), &self.gamma0)?;
            kappa_tau = kappa_tau * self.dual_kappa(&a);
        }
        let c0 = self.script_c_dual(&self.gamma0)?;
        let cl = self.script_c_dual(&self.spectral(lambda))?;
        let value = &c0 * &c_tau / (&cl * &kappa_tau);
        let norm = &cl * &c_neg_tau / (&c0 * &c_tau);
        Ok((value, norm))
    }

    /// Expansion of the monic symmetric polynomial over the orbit of an
    /// antidominant weight: pairs `(mu, coefficient)` against the monic
    /// nonsymmetric basis.
    pub fn symmetric_expansion(&self, lambda: &Vector) -> Result<Vec<(Vector, S)>> {
        if !self.data().root_system().is_antidominant(lambda) {
            return Err(Error::Invalid(format!("{lambda} is not antidominant")));
        }
        let gl = self.spectral(lambda);
        let weyl = self.data().weyl();
        let mut out = Vec::new();
        for mu in weyl.orbit(lambda) {
            let vidx = weyl.elem_from_word(&v_word(self.data(), &mu));
            let vinv = weyl.inverse(vidx);
            let mut coeff = S::one();
            for alpha in weyl.inversions(vinv) {
                let a = AffineRoot::finite(self.data().root_d(&alpha));
                coeff = coeff * self.dual_c(&a, &gl)?;
            }
            out.push((mu, coeff));
        }
        Ok(out)
    }

    /// Product of dual kappas over the sorting word of `lambda`.
    pub fn kappa_v(&self, lambda: &Vector) -> S {
        self.dual_kappa_word(&v_word(self.data(), lambda))
    }
}
