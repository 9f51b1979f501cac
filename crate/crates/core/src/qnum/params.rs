use super::field::{pow_i, Field, RefOps};
use super::scalar::{scalar_str, Scalar};
use super::series::QSeries;
use crate::error::{Error, Result};
use num_traits::{One, Signed};

/// Which inequalities the specialization is required to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `0 < q < 1` and `0 < kappa_o < 1`: the window in which the pairing is
    /// biorthogonal and all closed-form denominators are nonzero.
    Orthogonality,
    /// No window constraints (used for the inverted-parameter engine, where
    /// `q > 1` and `kappa_o > 1` by construction).
    Relaxed,
}

/// Exact specialization of the deformation parameter q and the multiplicity
/// function kappa, over any coefficient field.
///
/// The stored primitives are the base root `q^(1/2L)` and per-orbit square
/// roots `kappa_o^(1/2)`; q itself and all grid powers are derived.  Values
/// are immutable after construction.  The default field is the exact
/// rationals; the series pairing backend instantiates the same type over
/// [`QSeries`], where the base root is the formal variable itself.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterSet<S: Field = Scalar> {
    q_half_l: S,
    scale_l: i64,
    kappa_half: Vec<S>,
    /// When every `kappa_o` is an exact q-power `q^(e_o)`, the exponents are
    /// recorded here; the series pairing backend requires this metadata to
    /// grade the weight-function factors.
    kappa_q_exp: Option<Vec<Scalar>>,
    regime: Regime,
}

impl ParameterSet<Scalar> {
    /// Generic specialization: arbitrary positive rational square roots.
    pub fn new(
        q_half_l: Scalar,
        scale_l: i64,
        kappa_half: Vec<Scalar>,
        regime: Regime,
    ) -> Result<Self> {
        let p = ParameterSet {
            q_half_l,
            scale_l,
            kappa_half,
            kappa_q_exp: None,
            regime,
        };
        p.validate()?;
        Ok(p)
    }

    /// Specialization with every kappa a positive power of q: `kappa_o =
    /// q^(e_o)`.  Required by the exact series pairing backend.
    pub fn from_q_powers(
        q_half_l: Scalar,
        scale_l: i64,
        exponents: Vec<Scalar>,
        regime: Regime,
    ) -> Result<Self> {
        let mut kappa_half = Vec::with_capacity(exponents.len());
        for e in &exponents {
            // kappa_o^(1/2) = q^(e_o/2) = (q^(1/2L))^(e_o * L)
            let k = kappa_half_units(e, scale_l)?;
            kappa_half.push(pow_i(&q_half_l, k));
        }
        let p = ParameterSet {
            q_half_l,
            scale_l,
            kappa_half,
            kappa_q_exp: Some(exponents),
            regime,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.scale_l < 1 {
            return Err(Error::Invalid("denominator scale L must be >= 1".into()));
        }
        if !self.q_half_l.is_positive() {
            return Err(Error::Invalid("base root of q must be positive".into()));
        }
        if self.kappa_half.iter().any(|k| !k.is_positive()) {
            return Err(Error::Invalid("kappa square roots must be positive".into()));
        }
        if self.regime == Regime::Orthogonality {
            let one = Scalar::one();
            if self.q_half_l >= one {
                return Err(Error::Invalid(
                    "orthogonality regime requires 0 < q < 1".into(),
                ));
            }
            for (o, kh) in self.kappa_half.iter().enumerate() {
                if *kh >= one {
                    return Err(Error::Invalid(format!(
                        "orthogonality regime requires 0 < kappa < 1, violated on orbit {o}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `e_o * L` as an integer: the number of base-root units in
/// `kappa_o^(1/2) = q^(e_o/2)`.
fn kappa_half_units(e: &Scalar, scale_l: i64) -> Result<i64> {
    let steps = e * Scalar::from_integer(scale_l.into());
    if !steps.is_integer() {
        return Err(Error::ExponentScale(scalar_str(e), 2 * scale_l));
    }
    steps
        .to_integer()
        .try_into()
        .map_err(|_| Error::ExponentScale(scalar_str(e), 2 * scale_l))
}

impl ParameterSet<QSeries> {
    /// Formal specialization over truncated Laurent series: the base root is
    /// the series variable `x` itself, and every kappa is the positive
    /// q-power `q^(e_o) = x^(2 L e_o)`.  Every identity computed over this
    /// field is an identity of formal q-expansions.
    pub fn formal_series(scale_l: i64, exponents: Vec<Scalar>) -> Result<Self> {
        if scale_l < 1 {
            return Err(Error::Invalid("denominator scale L must be >= 1".into()));
        }
        let mut kappa_half = Vec::with_capacity(exponents.len());
        for e in &exponents {
            if !e.is_positive() {
                return Err(Error::SeriesAdmissibility(format!(
                    "kappa exponent {} is not positive",
                    scalar_str(e)
                )));
            }
            kappa_half.push(QSeries::x_power(kappa_half_units(e, scale_l)?));
        }
        Ok(ParameterSet {
            q_half_l: QSeries::x_power(1),
            scale_l,
            kappa_half,
            kappa_q_exp: Some(exponents),
            regime: Regime::Orthogonality,
        })
    }
}

impl<S: Field> ParameterSet<S>
where
    for<'x> &'x S: RefOps<S>,
{
    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn scale_l(&self) -> i64 {
        self.scale_l
    }

    pub fn num_orbits(&self) -> usize {
        self.kappa_half.len()
    }

    /// The deformation parameter `q = (q^(1/2L))^(2L)`.
    pub fn q(&self) -> S {
        pow_i(&self.q_half_l, 2 * self.scale_l)
    }

    pub fn q_half_l(&self) -> &S {
        &self.q_half_l
    }

    /// Exponent in base-root units: `e * 2L`, which must be an integer.
    pub fn q_units(&self, e: &Scalar) -> Result<i64> {
        let steps = e * Scalar::from_integer((2 * self.scale_l).into());
        if !steps.is_integer() {
            return Err(Error::ExponentScale(scalar_str(e), 2 * self.scale_l));
        }
        steps
            .to_integer()
            .try_into()
            .map_err(|_| Error::ExponentScale(scalar_str(e), 2 * self.scale_l))
    }

    /// `q^e` for a rational exponent on the grid `(1/2L)*Z`.
    pub fn q_pow(&self, e: &Scalar) -> Result<S> {
        Ok(pow_i(&self.q_half_l, self.q_units(e)?))
    }

    pub fn kappa_half(&self, orbit: usize) -> &S {
        &self.kappa_half[orbit]
    }

    pub fn kappa(&self, orbit: usize) -> S {
        &self.kappa_half[orbit] * &self.kappa_half[orbit]
    }

    /// Exponent `e_o` with `kappa_o = q^(e_o)`, when known.
    pub fn kappa_q_exponent(&self, orbit: usize) -> Option<&Scalar> {
        self.kappa_q_exp.as_ref().map(|v| &v[orbit])
    }

    /// The same q with the kappas replaced along an orbit map; used to
    /// transport multiplicities to the dual initial data.
    pub fn transported(&self, orbit_of: &[usize]) -> ParameterSet<S> {
        ParameterSet {
            q_half_l: self.q_half_l.clone(),
            scale_l: self.scale_l,
            kappa_half: orbit_of
                .iter()
                .map(|&o| self.kappa_half[o].clone())
                .collect(),
            kappa_q_exp: self
                .kappa_q_exp
                .as_ref()
                .map(|v| orbit_of.iter().map(|&o| v[o].clone()).collect()),
            regime: self.regime,
        }
    }

    /// The inverted-parameter companion: `q -> 1/q`, `kappa -> 1/kappa`.
    /// With respect to the inverted q the kappa exponents are unchanged, so
    /// the q-power metadata survives inversion.
    pub fn inverted(&self) -> ParameterSet<S> {
        ParameterSet {
            q_half_l: self.q_half_l.recip(),
            scale_l: self.scale_l,
            kappa_half: self.kappa_half.iter().map(|k| k.recip()).collect(),
            kappa_q_exp: self.kappa_q_exp.clone(),
            regime: Regime::Relaxed,
        }
    }

    /// Stable textual identity of the specialization, echoed into artifacts.
    pub fn fingerprint(&self) -> String {
        let kappas: Vec<String> = self.kappa_half.iter().map(|k| k.repr()).collect();
        format!(
            "q^(1/{})={};kappa^(1/2)=[{}]",
            2 * self.scale_l,
            self.q_half_l.repr(),
            kappas.join(",")
        )
    }
}

impl<S: Field> std::fmt::Display for ParameterSet<S>
where
    for<'x> &'x S: RefOps<S>,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.fingerprint())
    }
}
