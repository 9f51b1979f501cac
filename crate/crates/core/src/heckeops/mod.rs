//! The basic representation of the extended affine Hecke algebra on Laurent
//! polynomials: Demazure-Lusztig operators `pi(T_i)`, the length-zero action
//! `omega_q`, commuting `Y` operators, the `c`-functions, and the Hecke
//! symmetrizer.
//!
//! `pi(T_i)` is applied per monomial in closed form: the rational coefficient
//! `(kappa_i - kappa_i^{-1} + (kappa_{2a_i} - kappa_{2a_i}^{-1}) t_q^{a_i}) /
//! (1 - t_q^{2a_i})` times `x^lambda - s_{i,q} x^lambda` is a finite
//! geometric sum, expanded exactly.  A second route performs the literal
//! polynomial division and reports any nonzero remainder; the two are checked
//! against each other in the test suite, never mixed in production paths.

mod laurent;

pub use laurent::LaurentPoly;

use crate::error::{Error, Result};
use crate::initdata::{AffineRoot, InitialData};
use crate::qnum::{sc, Field, ParameterSet, RefOps, Scalar};
use crate::rootdata::Vector;
use crate::weyl::{AffineWeyl, ExtElem};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Smallest `D` such that every q-exponent produced by the representation
/// lies on the grid `(1/D) Z`: lattice pairings `(Lambda, Lambda^d)` and the
/// level of `a_0`.  A [`ParameterSet`] with base root `q^(1/2L)` is usable
/// whenever `D` divides `2L`.
pub fn required_scale(d: &InitialData) -> i64 {
    let mut den = BigInt::one();
    let mut push = |s: &Scalar| den = den.lcm(s.denom());
    for b in d.lattice().basis() {
        for bd in d.dual_lattice().basis() {
            push(&b.dot(bd));
        }
    }
    push(&d.a0().level);
    i64::try_from(den).expect("exponent denominators stay small")
}

/// The basic representation `pi_{kappa,q}` bound to one initial-data
/// quintuple and one parameter specialization.
pub struct BasicRep<'a, S: Field = Scalar> {
    d: &'a InitialData,
    aw: AffineWeyl<'a>,
    params: &'a ParameterSet<S>,
}

impl<'a, S: Field> BasicRep<'a, S>
where
    for<'x> &'x S: RefOps<S>,
{
    pub fn new(d: &'a InitialData, params: &'a ParameterSet<S>) -> Result<Self> {
        if params.num_orbits() != d.num_orbits() {
            return Err(Error::Invalid(format!(
                "parameter set carries {} orbit values but the initial data has {} orbits",
                params.num_orbits(),
                d.num_orbits()
            )));
        }
        let need = required_scale(d);
        if (2 * params.scale_l()) % need != 0 {
            return Err(Error::Invalid(format!(
                "exponent grid too coarse: pairings of {} need q-exponent denominator {need}, \
                 but q is only specified through q^(1/{})",
                d.label(),
                2 * params.scale_l()
            )));
        }
        Ok(BasicRep {
            d,
            aw: AffineWeyl::new(d),
            params,
        })
    }

    pub fn data(&self) -> &InitialData {
        self.d
    }

    pub fn affine_weyl(&self) -> &AffineWeyl<'a> {
        &self.aw
    }

    pub fn params(&self) -> &ParameterSet<S> {
        self.params
    }

    /// Coordinates of a point of `Lambda` in the lattice basis; exponents of
    /// every [`LaurentPoly`] handled here are such coordinate vectors.
    pub fn coords(&self, v: &Vector) -> Vec<i64> {
        self.d
            .lattice()
            .coords(v)
            .expect("exponent must be a point of Lambda")
    }

    pub fn point(&self, exp: &[i64]) -> Vector {
        self.d.lattice().point(exp)
    }

    pub fn monomial(&self, lambda: &Vector) -> LaurentPoly<S> {
        LaurentPoly::monomial(self.coords(lambda), S::one())
    }

    fn q_pow(&self, e: &Scalar) -> S {
        self.params
            .q_pow(e)
            .expect("exponent grid was validated at construction")
    }

    /// Multiplicity `kappa_a` of a reduced affine root.
    pub fn kappa_at(&self, a: &AffineRoot) -> S {
        self.params.kappa(self.d.orbit_index(a))
    }

    /// `kappa_{2a}`, with the convention `kappa_{2a} = kappa_a` when `2a` is
    /// not a root.
    pub fn kappa_double(&self, a: &AffineRoot) -> S {
        let twice = a.double();
        if self.d.is_affine_root(&twice) {
            self.kappa_at(&twice)
        } else {
            self.kappa_at(a)
        }
    }

    pub fn kappa_i(&self, i: usize) -> S {
        self.kappa_at(&self.d.affine_simple(i))
    }

    pub fn kappa_2i(&self, i: usize) -> S {
        self.kappa_double(&self.d.affine_simple(i))
    }

    /// `w_q` for `w = (u, xi)`: `x^lambda -> q^{-(lambda,xi)} x^{u lambda}`.
    /// Restricted to `w` of length zero this is `pi(omega)`; for `w` the
    /// reflection in `a_i` it is `s_{i,q}`.
    pub fn w_act(&self, w: &ExtElem, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let w0 = self.d.weyl();
        let mut out = LaurentPoly::zero();
        for (e, c) in p.terms() {
            let lam = self.point(e);
            let coeff = c * &self.q_pow(&-lam.dot(&w.xi));
            out.add_term(self.coords(&w0.apply_elem(w.u, &lam)), coeff);
        }
        out
    }

    /// `pi(T_i) p`, affine index allowed, geometric sums expanded exactly.
    pub fn t_apply(&self, i: usize, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let ai = self.d.affine_simple(i);
        let b_coords = self.coords(&ai.grad);
        let b_vee = ai.grad.covector();
        let kap = self.kappa_i(i);
        let c1 = &kap - &kap.recip();
        let kap2 = self.kappa_2i(i);
        let c2 = &kap2 - &kap2.recip();
        let doubled = self.d.s_set().contains(&i);
        let mut out = LaurentPoly::zero();
        for (e, coeff) in p.terms() {
            let lam = self.point(e);
            let pairing = lam.dot(&b_vee);
            assert!(pairing.is_integer(), "Lambda pairs integrally with (Da_i)^");
            let k = i64::try_from(pairing.to_integer()).expect("pairing fits in i64");
            // x^lambda shifted by s copies of beta, with the matching q-power
            // of the level: the monomial Z^s x^lambda for Z = q^l x^beta
            let shift = |s: i64| -> Vec<i64> {
                e.iter().zip(&b_coords).map(|(a, b)| a + s * b).collect()
            };
            let zpow = |s: i64| -> S { self.q_pow(&(&ai.level * sc(s))) };
            // kappa_i s_{i,q} x^lambda = kappa_i q^{-kl} x^{lambda - k beta}
            out.add_term(shift(-k), coeff * &kap * zpow(-k));
            if doubled {
                // (1 - Z^{-k})/(1 - Z^2) is a polynomial in Z^2 since k is
                // even; the kappa_2 part carries one extra factor of Z
                assert!(k % 2 == 0, "(lambda, (Da_i)^) is even when 2a_i is a root");
                let m = k / 2;
                if m > 0 {
                    for j in 1..=m {
                        out.add_term(shift(-2 * j), -(coeff * &c1 * zpow(-2 * j)));
                        out.add_term(shift(-2 * j + 1), -(coeff * &c2 * zpow(-2 * j + 1)));
                    }
                } else {
                    for j in 0..(-m) {
                        out.add_term(shift(2 * j), coeff * &c1 * zpow(2 * j));
                        out.add_term(shift(2 * j + 1), coeff * &c2 * zpow(2 * j + 1));
                    }
                }
            } else if k > 0 {
                for j in 1..=k {
                    out.add_term(shift(-j), -(coeff * &c1 * zpow(-j)));
                }
            } else {
                for j in 0..(-k) {
                    out.add_term(shift(j), coeff * &c1 * zpow(j));
                }
            }
        }
        out
    }

    /// `pi(T_i)^{-1} = pi(T_i) - (kappa_i - kappa_i^{-1})`.
    pub fn t_apply_inv(&self, i: usize, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let kap = self.kappa_i(i);
        &self.t_apply(i, p) - &p.scale(&(&kap - &kap.recip()))
    }

    /// Literal route for `pi(T_i) p`: multiply `p - s_{i,q} p` by the
    /// numerator of the rational coefficient and divide exactly by
    /// `1 - q^{2l} x^{2 beta}`.  A nonzero remainder signals a lattice or
    /// parameter bug and is reported as an error.
    pub fn t_apply_division(&self, i: usize, p: &LaurentPoly<S>) -> Result<LaurentPoly<S>> {
        let ai = self.d.affine_simple(i);
        let b_coords = self.coords(&ai.grad);
        let kap = self.kappa_i(i);
        let kap2 = self.kappa_2i(i);
        let sp = self.w_act(&self.aw.simple(i), p);
        let diff = p - &sp;
        let dim = b_coords.len();
        let mut numer = LaurentPoly::monomial(vec![0; dim], &kap - &kap.recip());
        numer.add_term(
            b_coords.clone(),
            (&kap2 - &kap2.recip()) * self.q_pow(&ai.level),
        );
        let e2: Vec<i64> = b_coords.iter().map(|c| 2 * c).collect();
        let s2 = self.q_pow(&(&ai.level * sc(2)));
        let rational_part = div_exact(&(&numer * &diff), &e2, &s2)?;
        Ok(&sp.scale(&kap) + &rational_part)
    }

    /// Apply `T_{i_1} ... T_{i_m}` (rightmost factor acts first).
    pub fn t_word_apply(&self, word: &[usize], p: &LaurentPoly<S>) -> LaurentPoly<S> {
        word.iter()
            .rev()
            .fold(p.clone(), |acc, &i| self.t_apply(i, &acc))
    }

    /// `pi(T_w) p` for the stored reduced expression `w = omega s_{i_1} ...
    /// s_{i_m}`: the word acts first, the length-zero part last.
    pub fn t_elem_apply(&self, w: &ExtElem, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let (omega, word) = self.aw.reduced_word(w);
        self.w_act(&omega, &self.t_word_apply(&word, p))
    }

    /// `pi(T_w)^{-1} p = pi(T_{i_m})^{-1} ... pi(T_{i_1})^{-1} omega_q^{-1} p`.
    pub fn t_elem_inv_apply(&self, w: &ExtElem, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let (omega, word) = self.aw.reduced_word(w);
        let mut acc = self.w_act(&self.aw.inverse(&omega), p);
        for &i in &word {
            acc = self.t_apply_inv(i, &acc);
        }
        acc
    }

    /// A strictly dominant vector of `Z R_0^d`: the sum of the positive dual
    /// roots.  Used to split any `xi` into a difference of dominant vectors.
    fn dominant_shift(&self) -> Vector {
        let rs = self.d.root_system();
        let mut acc = Vector::zeros(rs.ambient_dim());
        for a in rs.positive_roots() {
            acc = &acc + &self.d.root_d(a);
        }
        acc
    }

    /// `pi(Y^xi) p` for any `xi` in `Lambda^d`, via the minimal dominant
    /// split `xi = xi1 - xi2` with `xi2` a multiple of the sum of positive
    /// dual roots: `pi(T_{tau(xi1)}) pi(T_{tau(xi2)})^{-1} p`.
    pub fn y_apply(&self, xi: &Vector, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let rs = self.d.root_system();
        let delta = self.dominant_shift();
        let mut m = Scalar::zero();
        for i in 1..=self.d.rank() {
            let ai = rs.simple_root(i);
            let num = xi.dot(ai);
            if num.is_negative() {
                let need = (-&num / delta.dot(ai)).ceil();
                if need > m {
                    m = need;
                }
            }
        }
        let xi2 = delta.scale(&m);
        let xi1 = xi + &xi2;
        let halfway = self.t_elem_inv_apply(&self.aw.translation(xi2), p);
        self.t_elem_apply(&self.aw.translation(xi1), &halfway)
    }

    /// Product `kappa_w = kappa_{i_1} ... kappa_{i_m}` over a reduced word.
    pub fn kappa_word(&self, word: &[usize]) -> S {
        word.iter()
            .fold(S::one(), |acc, &i| acc * self.kappa_i(i))
    }

    /// The Hecke symmetrizer `C_+ p = (sum_w kappa_w^2)^{-1} sum_w kappa_w
    /// T_w p` over the finite Weyl group; idempotent, image the
    /// `W_0`-invariants, and `pi(T_i) C_+ = kappa_i C_+` for finite `i`.
    pub fn symmetrize(&self, p: &LaurentPoly<S>) -> LaurentPoly<S> {
        let w0 = self.d.weyl();
        let mut acc = LaurentPoly::zero();
        let mut norm = S::zero();
        for idx in 0..w0.order() {
            let kw = self.kappa_word(&w0.elem(idx).word);
            norm += &kw * &kw;
            acc = &acc + &self.t_word_apply(&w0.elem(idx).word, p).scale(&kw);
        }
        acc.scale(&norm.recip())
    }

    /// The rational pair `(numerator, denominator)` of the `c`-function of a
    /// reduced affine root `a = l c + beta`:
    ///
    /// `c_a = (1 - kappa_a kappa_{2a} q^l x^beta)
    ///        (1 + kappa_a kappa_{2a}^{-1} q^l x^beta) / (1 - q^{2l} x^{2beta})`.
    ///
    /// Both entries are Laurent polynomials in the lattice coordinates,
    /// evaluable at any torus point.
    pub fn c_function(&self, a: &AffineRoot) -> (LaurentPoly<S>, LaurentPoly<S>) {
        assert!(
            self.d.is_reduced_affine_root(a),
            "c-functions are indexed by reduced affine roots"
        );
        let kap = self.kappa_at(a);
        let kap2 = self.kappa_double(a);
        let b_coords = self.coords(&a.grad);
        let dim = b_coords.len();
        let zq = self.q_pow(&a.level);
        let mut f1 = LaurentPoly::one(dim);
        f1.add_term(b_coords.clone(), -(&kap * &kap2 * &zq));
        let mut f2 = LaurentPoly::one(dim);
        f2.add_term(b_coords.clone(), &kap * kap2.recip() * &zq);
        let mut den = LaurentPoly::one(dim);
        den.add_term(
            b_coords.iter().map(|c| 2 * c).collect(),
            -(&zq * &zq),
        );
        (&f1 * &f2, den)
    }
}

/// Exact division of `f` by `1 - s x^e`.  Quotient terms are produced in
/// increasing order of the grade `h(c) = (c, e)`; a candidate above the
/// grade ceiling of the dividend proves the division has a remainder, which
/// is reported rather than looped on.
pub fn div_exact<S: Field>(f: &LaurentPoly<S>, e: &[i64], s: &S) -> Result<LaurentPoly<S>>
where
    for<'x> &'x S: RefOps<S>,
{
    if f.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let h = |c: &[i64]| -> i64 { c.iter().zip(e).map(|(a, b)| a * b).sum() };
    let he = h(e);
    assert!(he > 0, "division direction must have positive self-grade");
    let hmax = f.support().iter().map(|c| h(c)).max().unwrap();
    let mut rem = f.clone();
    let mut quot = LaurentPoly::zero();
    while !rem.is_zero() {
        let (c, a) = rem
            .terms()
            .min_by_key(|(c, _)| h(c))
            .map(|(c, a)| (c.clone(), a.clone()))
            .unwrap();
        if h(&c) > hmax - he {
            return Err(Error::DivisionRemainder(format!(
                "1 - {s} x^{e:?} leaves a remainder (stuck at x^{c:?})"
            )));
        }
        rem.add_term(c.clone(), -a.clone());
        rem.add_term(c.iter().zip(e).map(|(x, y)| x + y).collect(), &a * s);
        quot.add_term(c, a);
    }
    Ok(quot)
}

/// Matrix of a linear operator on the span of the monomials `x^e`, `e` in
/// `span`; column `j` holds the coordinates of the image of `x^{span[j]}`.
/// Panics if an image leaves the span.
pub fn matrix_on_span<S: Field>(
    span: &[Vec<i64>],
    mut op: impl FnMut(&LaurentPoly<S>) -> LaurentPoly<S>,
) -> Vec<Vec<S>>
where
    for<'x> &'x S: RefOps<S>,
{
    let index: BTreeMap<&Vec<i64>, usize> =
        span.iter().enumerate().map(|(i, e)| (e, i)).collect();
    span.iter()
        .map(|e| {
            let img = op(&LaurentPoly::monomial(e.clone(), S::one()));
            let mut col = vec![S::zero(); span.len()];
            for (ex, c) in img.terms() {
                let i = *index
                    .get(ex)
                    .unwrap_or_else(|| panic!("operator image leaves the span at x^{ex:?}"));
                col[i] = c.clone();
            }
            col
        })
        .collect()
}

#[cfg(test)]
mod tests;
