//! Exact scalar arithmetic, q-shifted factorials, truncated q-series, and
//! terminating basic hypergeometric sums.
//!
//! Everything downstream works over exact rational specializations of the
//! deformation parameter q and the multiplicity function kappa.  Two stored
//! primitives make half-integral exponents exact:
//!
//! * the base root `q^(1/2L)`, where `L` is the common denominator scale of
//!   all lattice pairings a computation can produce, and
//! * one square root `kappa_o^(1/2)` per orbit `o` of the affine root system.
//!
//! All q-powers that occur live on the grid `(1/2L)*Z`, so raising the base
//! root to an integer power evaluates them exactly.  Spectral points and
//! normalization constants only ever use the stored square roots in pairs or
//! as explicit half-power products, so no further root extractions happen.

mod field;
mod scalar;
mod series;
mod params;

pub use field::{pow_i, Field, RefOps};
pub use scalar::{sc, frac, parse_scalar, scalar_str, Scalar};
pub use series::{series_precision, set_series_precision, QSeries};
pub use params::{ParameterSet, Regime};

use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// q-shifted factorial `(x; q)_r = prod_{j=0}^{r-1} (1 - q^j x)`.
pub fn qpochhammer(x: &Scalar, q: &Scalar, r: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut qj = Scalar::one();
    for _ in 0..r {
        acc *= Scalar::one() - &qj * x;
        qj *= q;
    }
    acc
}

/// Multi-argument q-shifted factorial `(x_1, ..., x_m; q)_r`.
pub fn qpochhammer_multi(xs: &[Scalar], q: &Scalar, r: usize) -> Scalar {
    xs.iter().map(|x| qpochhammer(x, q, r)).product()
}

/// Partial sum of the basic hypergeometric series
/// `r_phi_s(upper; lower; q, z)` through the term of index `nterms - 1`.
///
/// Each term carries the standard compensating factor
/// `((-1)^k q^(k(k-1)/2))^(1+s-r)`.  Callers are expected to pass a
/// terminating series (some upper parameter a nonpositive integral q-power)
/// or to accept plain truncation.
pub fn phi_series(
    upper: &[Scalar],
    lower: &[Scalar],
    q: &Scalar,
    z: &Scalar,
    nterms: usize,
) -> Result<Scalar> {
    let r = upper.len() as i64;
    let s = lower.len() as i64;
    let exponent = 1 + s - r;
    let mut sum = Scalar::zero();
    // Running term, updated multiplicatively: term_{k+1}/term_k =
    //   prod(1 - q^k a_i) / (prod(1 - q^k b_j) (1 - q^{k+1})) * extra * z
    let mut term = Scalar::one();
    let mut qk = Scalar::one(); // q^k
    for k in 0..nterms {
        sum += &term;
        // prepare term k+1
        let mut num = Scalar::one();
        for a in upper {
            num *= Scalar::one() - &qk * a;
        }
        if num.is_zero() {
            // series terminated: all later terms vanish
            return Ok(sum);
        }
        let mut den = Scalar::one() - &qk * q; // the (q;q)_k factor advanced by one
        for b in lower {
            den *= Scalar::one() - &qk * b;
        }
        if den.is_zero() {
            return Err(Error::PhiDivision(k + 1));
        }
        // ((-1)^{k+1} q^{k(k+1)/2})^{e} / ((-1)^k q^{k(k-1)/2})^{e} = (-q^k)^{e}
        let extra = pow_i(&(-qk.clone()), exponent);
        term = term * num / den * extra * z;
        qk *= q;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests;
