//! Closed product formulas: the per-case evaluation and norm products for
//! the symmetric family, and the rank-one hypergeometric forms.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::heckeops::LaurentPoly;
use crate::initdata::{AffineRoot, InitialData, Twist};
use crate::qnum::{pow_i, qpochhammer, qpochhammer_multi, sc, ParameterSet, Scalar};
use crate::rootdata::Vector;

use super::{dual_companions, kappa_at, kappa_double, SpectralPoint};

/// The families covered by the explicit product formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section5Case {
    /// Twisted, reduced on both sides.
    TwistedReduced,
    /// The five-orbit nonreduced twisted family.
    NonreducedTwisted,
    /// Untwisted, reduced on both sides.
    UntwistedReduced,
    /// The exceptional nonreduced untwisted family in rank two.
    ExceptionalRankTwo,
}

/// Decide which explicit family the data belongs to.  Intermediate
/// nonreduced cases (only one end of the affine grid doubled) have no
/// closed form here and are reported as unsupported.
pub fn section5_case(d: &InitialData) -> Result<Section5Case> {
    let full: std::collections::BTreeSet<usize> = [0, d.rank()].into_iter().collect();
    match d.twist() {
        Twist::Twisted => {
            if d.s_set().is_empty() && d.dual().s_set().is_empty() {
                Ok(Section5Case::TwistedReduced)
            } else if *d.s_set() == full && *d.dual().s_set() == full {
                Ok(Section5Case::NonreducedTwisted)
            } else {
                Err(Error::UnsupportedFamily(format!(
                    "no closed product formulas for {}: intermediate nonreduced twisted case",
                    d.label()
                )))
            }
        }
        Twist::Untwisted => {
            let single: std::collections::BTreeSet<usize> = [1].into_iter().collect();
            let dual_single: std::collections::BTreeSet<usize> = [2].into_iter().collect();
            if d.s_set().is_empty() && d.dual().s_set().is_empty() {
                Ok(Section5Case::UntwistedReduced)
            } else if d.rank() == 2
                && d.root_system().has_two_root_lengths()
                && *d.s_set() == single
                && *d.dual().s_set() == dual_single
            {
                Ok(Section5Case::ExceptionalRankTwo)
            } else {
                Err(Error::UnsupportedFamily(format!(
                    "no closed product formulas for {}: nonreduced untwisted outside the exceptional rank-two family",
                    d.label()
                )))
            }
        }
    }
}

/// `-(lambda, alpha^)` as a nonnegative machine integer.
fn neg_pairing(lambda: &Vector, alpha: &Vector) -> Result<usize> {
    let p = -lambda.dot(&alpha.covector());
    if !p.is_integer() || p.is_negative() {
        return Err(Error::Invalid(format!(
            "pairing of {lambda} with the coroot of {alpha} is not a nonnegative integer"
        )));
    }
    Ok(usize::try_from(p.to_integer()).unwrap())
}

fn div_nonzero(num: Scalar, den: Scalar, what: &str) -> Result<Scalar> {
    if den.is_zero() {
        return Err(Error::Pole(format!("vanishing factor in {what}")));
    }
    Ok(num / den)
}

/// One reduced-side factor pair: the evaluation factor
/// `(kappa^2 g; q_a)_r / (g; q_a)_r` and the norm factor
/// `(1-g)/(1-q_a^r g) * (q_a kappa^-2 g; q_a)_r / (kappa^2 g; q_a)_r`.
fn reduced_factor(
    g: &Scalar,
    kappa2: &Scalar,
    qa: &Scalar,
    r: usize,
) -> Result<(Scalar, Scalar)> {
    let value = div_nonzero(
        qpochhammer(&(kappa2 * g), qa, r),
        qpochhammer(g, qa, r),
        "evaluation product",
    )?;
    let head = div_nonzero(
        Scalar::one() - g,
        Scalar::one() - pow_i(qa, r as i64) * g,
        "norm product",
    )?;
    let tail = div_nonzero(
        qpochhammer(&(qa * g / kappa2), qa, r),
        qpochhammer(&(kappa2 * g), qa, r),
        "norm product",
    )?;
    Ok((value, head * tail))
}

/// Closed product formulas for the base-point value of the monic symmetric
/// polynomial and its normalized quadratic norm, at an antidominant weight.
/// Dispatches on the explicit family of the data.
pub fn section5_formulas(
    d: &InitialData,
    params: &ParameterSet,
    lambda: &Vector,
) -> Result<(Scalar, Scalar)> {
    if !d.lattice().contains(lambda) {
        return Err(Error::Invalid(format!("{lambda} is not in the lattice")));
    }
    if !d.root_system().is_antidominant(lambda) {
        return Err(Error::Invalid(format!("{lambda} is not antidominant")));
    }
    let case = section5_case(d)?;
    let rs = d.root_system();
    let zero = Vector::zeros(rs.ambient_dim());
    let gamma0 = SpectralPoint::build(d, params, &zero);
    let (dual_d, dual_params) = dual_companions(d, params)?;
    let gamma0_dual = SpectralPoint::build(&dual_d, &dual_params, &zero);
    let mut value = gamma0_dual.eval(&-lambda)?;
    let mut norm = gamma0_dual.eval(&lambda.scale(&sc(2)))?;

    match case {
        Section5Case::TwistedReduced | Section5Case::UntwistedReduced => {
            let covector = case == Section5Case::UntwistedReduced;
            for alpha in rs.positive_roots() {
                let r = neg_pairing(lambda, alpha)?;
                let qa = params.q_pow(&d.mu(alpha))?;
                let character = if covector { alpha.covector() } else { alpha.clone() };
                let g = gamma0.eval(&-&character)?;
                let kap = kappa_at(d, params, &AffineRoot::finite(alpha.clone()));
                let (fv, fn_) = reduced_factor(&g, &(&kap * &kap), &qa, r)?;
                value = value * fv;
                norm = norm * fn_;
            }
        }
        Section5Case::NonreducedTwisted => {
            let theta = rs.highest_short_root();
            let short2 = theta.norm2();
            let q_theta = params.q_pow(&d.mu(&theta))?;
            let q_theta_sq = &q_theta * &q_theta;
            let kap_theta = kappa_at(d, params, &AffineRoot::finite(theta.clone()));
            let kap_2theta = kappa_double(d, params, &AffineRoot::finite(theta.clone()));
            let a0 = d.a0();
            let kap_0 = kappa_at(d, params, &a0);
            let kap_2a0 = kappa_double(d, params, &a0);
            let tilde = [
                &kap_theta * &kap_0,
                -(&kap_theta / &kap_0),
                &q_theta * &kap_2theta * &kap_2a0,
                -(&q_theta * &kap_2theta / &kap_2a0),
            ];
            for alpha in rs.positive_roots() {
                let r = neg_pairing(lambda, alpha)?;
                let g = gamma0.eval(&-alpha)?;
                if alpha.norm2() == short2 {
                    if r % 2 != 0 {
                        return Err(Error::Invalid(format!(
                            "odd pairing of {lambda} with a short coroot"
                        )));
                    }
                    let r2 = r / 2;
                    let g2 = &g * &g;
                    let args: Vec<Scalar> = tilde.iter().map(|x| x * &g).collect();
                    let inv_args: Vec<Scalar> =
                        tilde.iter().map(|x| q_theta_sq.clone() / x * &g).collect();
                    value = value
                        * div_nonzero(
                            qpochhammer_multi(&args, &q_theta_sq, r2),
                            qpochhammer(&g2, &q_theta_sq, r),
                            "evaluation product",
                        )?;
                    let head = div_nonzero(
                        Scalar::one() - &g2,
                        Scalar::one() - pow_i(&q_theta_sq, r as i64) * &g2,
                        "norm product",
                    )?;
                    let tail = div_nonzero(
                        qpochhammer_multi(&inv_args, &q_theta_sq, r2),
                        qpochhammer_multi(&args, &q_theta_sq, r2),
                        "norm product",
                    )?;
                    norm = norm * head * tail;
                } else {
                    let qa = params.q_pow(&d.mu(alpha))?;
                    let kap = kappa_at(d, params, &AffineRoot::finite(alpha.clone()));
                    let (fv, fn_) = reduced_factor(&g, &(&kap * &kap), &qa, r)?;
                    value = value * fv;
                    norm = norm * fn_;
                }
            }
        }
        Section5Case::ExceptionalRankTwo => {
            let theta = rs.highest_short_root();
            let phi = rs.highest_root();
            let short2 = theta.norm2();
            let q = params.q();
            let q_sq = &q * &q;
            let kap_theta = kappa_at(d, params, &AffineRoot::finite(theta.clone()));
            let kap_2theta = kappa_double(d, params, &AffineRoot::finite(theta.clone()));
            let kap_phi = kappa_at(d, params, &AffineRoot::finite(phi.clone()));
            let kap_0 = kappa_at(d, params, &d.a0());
            let long_pair = [&kap_phi * &kap_0, -(&kap_phi / &kap_0)];
            let short_pair = [&kap_theta * &kap_theta, &q * &kap_2theta * &kap_2theta];
            for alpha in rs.positive_roots() {
                let r = neg_pairing(lambda, alpha)?;
                let h = gamma0.eval(&-&alpha.covector())?;
                if alpha.norm2() == short2 {
                    if r % 2 != 0 {
                        return Err(Error::Invalid(format!(
                            "odd pairing of {lambda} with a short coroot"
                        )));
                    }
                    let r2 = r / 2;
                    let args: Vec<Scalar> = short_pair.iter().map(|x| x * &h).collect();
                    let inv_args: Vec<Scalar> =
                        short_pair.iter().map(|x| q_sq.clone() / x * &h).collect();
                    value = value
                        * div_nonzero(
                            qpochhammer_multi(&args, &q_sq, r2),
                            qpochhammer(&h, &q, r),
                            "evaluation product",
                        )?;
                    let head = div_nonzero(
                        Scalar::one() - &h,
                        Scalar::one() - pow_i(&q, r as i64) * &h,
                        "norm product",
                    )?;
                    let tail = div_nonzero(
                        qpochhammer_multi(&inv_args, &q_sq, r2),
                        qpochhammer_multi(&args, &q_sq, r2),
                        "norm product",
                    )?;
                    norm = norm * head * tail;
                } else {
                    let h2 = &h * &h;
                    let args: Vec<Scalar> = long_pair.iter().map(|x| x * &h).collect();
                    let inv_args: Vec<Scalar> =
                        long_pair.iter().map(|x| q.clone() / x * &h).collect();
                    value = value
                        * div_nonzero(
                            qpochhammer_multi(&args, &q, r),
                            qpochhammer(&h2, &q_sq, r),
                            "evaluation product",
                        )?;
                    let head = div_nonzero(
                        Scalar::one() - &h2,
                        Scalar::one() - pow_i(&q, 2 * r as i64) * &h2,
                        "norm product",
                    )?;
                    let tail = div_nonzero(
                        qpochhammer_multi(&inv_args, &q, r),
                        qpochhammer_multi(&args, &q, r),
                        "norm product",
                    )?;
                    norm = norm * head * tail;
                }
            }
        }
    }
    Ok((value, norm))
}

/// Monic symmetric rank-one polynomial of the one-orbit family on the
/// standard two-dimensional lattice, with leading exponents
/// `(lambda.0, lambda.1)`: the terminating Gauss sum written out exactly.
/// `kappa` is the multiplicity value (its square is the classical `t`).
pub fn rank1_gl2(kappa: &Scalar, q: &Scalar, lambda: (i64, i64)) -> Result<LaurentPoly> {
    let (l1, l2) = lambda;
    if l1 < l2 {
        return Err(Error::Invalid(format!(
            "leading exponents ({l1},{l2}) are not dominant"
        )));
    }
    let t = kappa * kappa;
    let m = (l1 - l2) as usize;
    let mut out = LaurentPoly::zero();
    let mut coeff = Scalar::one();
    for r in 0..=m {
        if r > 0 {
            let j = (r - 1) as i64;
            let num = (Scalar::one() - &t * pow_i(q, j)) * (Scalar::one() - pow_i(q, l2 - l1 + j));
            let den = (Scalar::one() - pow_i(q, r as i64))
                * (Scalar::one() - pow_i(q, 1 + l2 - l1 + j) / &t);
            if den.is_zero() {
                return Err(Error::PhiDivision(r));
            }
            coeff = coeff * num / den * q / &t;
        }
        out.add_term(vec![l1 - r as i64, l2 + r as i64], coeff.clone());
    }
    Ok(out)
}

/// Monic symmetric rank-one polynomial of the four-parameter family, as the
/// terminating balanced series with its monic normalization constant.
pub fn rank1_askey_wilson(
    a: &Scalar,
    b: &Scalar,
    c: &Scalar,
    d: &Scalar,
    q: &Scalar,
    m: usize,
) -> Result<LaurentPoly> {
    if a.is_zero() {
        return Err(Error::Invalid("first parameter must be nonzero".into()));
    }
    let abcd = a * b * c * d;
    let qm1abcd = pow_i(q, m as i64 - 1) * &abcd;
    let cst_den = pow_i(a, m as i64) * qpochhammer(&qm1abcd, q, m);
    if cst_den.is_zero() {
        return Err(Error::PhiDivision(m));
    }
    let cst = qpochhammer(&(a * b), q, m) * qpochhammer(&(a * c), q, m)
        * qpochhammer(&(a * d), q, m)
        / cst_den;
    let q_minus_m = pow_i(q, -(m as i64));
    let mut out = LaurentPoly::zero();
    let mut factor = Scalar::one();
    // running polynomial prod_{j<r} (1 - a q^j x)(1 - a q^j / x)
    let mut prod = LaurentPoly::one(1);
    for r in 0..=m {
        if r > 0 {
            let j = (r - 1) as i64;
            let qj = pow_i(q, j);
            let num = (Scalar::one() - &q_minus_m * &qj) * (Scalar::one() - &qm1abcd * &qj);
            let den = (Scalar::one() - pow_i(q, r as i64))
                * (Scalar::one() - a * b * &qj)
                * (Scalar::one() - a * c * &qj)
                * (Scalar::one() - a * d * &qj);
            if den.is_zero() {
                return Err(Error::PhiDivision(r));
            }
            factor = factor * num / den * q;
            let mut step = LaurentPoly::monomial(vec![0], Scalar::one() + a * a * &qj * &qj);
            step.add_term(vec![1], -(a * &qj));
            step.add_term(vec![-1], -(a * &qj));
            prod = &prod * &step;
        }
        out = &out + &prod.scale(&factor);
    }
    Ok(out.scale(&cst))
}
