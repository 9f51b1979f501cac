//! Truncated formal Laurent series in one variable, the base root
//! `x = q^(1/2L)`.  This is the coefficient field of the exact series
//! pairing backend: polynomials built over it carry their full formal
//! q-expansion, so congruences "modulo x^N" are certified rational
//! identities rather than numeric approximations.
//!
//! A value is `sum_{d=val}^{prec-1} c_{d-val} x^d`, exact modulo `x^prec`.
//! Values produced without any truncation (monomials, finite sums and
//! products of them) carry `prec = i64::MAX` and behave as exact Laurent
//! polynomials in `x`.  Inverting anything except a monomial leaves the
//! exact world; the relative precision used at that point is taken from the
//! value itself when it is already truncated, and from the thread-local
//! default (see [`set_series_precision`]) when it is exact.

use super::field::Field;
use super::scalar::{scalar_str, Scalar};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::cell::Cell;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

thread_local! {
    static DEFAULT_REL: Cell<i64> = const { Cell::new(64) };
}

/// Set the relative precision (number of retained orders in `x`) used when
/// an exact non-monomial series is inverted on the current thread.  Returns
/// the previous value.
pub fn set_series_precision(rel: i64) -> i64 {
    assert!(rel > 0, "series precision must be positive");
    DEFAULT_REL.with(|c| c.replace(rel))
}

pub fn series_precision() -> i64 {
    DEFAULT_REL.with(|c| c.get())
}

const EXACT: i64 = i64::MAX;

fn padd(p: i64, v: i64) -> i64 {
    if p == EXACT {
        EXACT
    } else {
        p.saturating_add(v)
    }
}

/// Formal Laurent series in the base root, exact modulo `x^prec`.
#[derive(Debug, Clone)]
pub struct QSeries {
    val: i64,
    coeffs: Vec<Scalar>,
    prec: i64,
}

impl QSeries {
    fn normalized(mut val: i64, mut coeffs: Vec<Scalar>, prec: i64) -> QSeries {
        while coeffs.first().is_some_and(Scalar::is_zero) {
            coeffs.remove(0);
            val += 1;
        }
        if prec == EXACT {
            while coeffs.last().is_some_and(Scalar::is_zero) {
                coeffs.pop();
            }
        }
        if coeffs.is_empty() {
            val = if prec == EXACT { 0 } else { prec };
        }
        QSeries { val, coeffs, prec }
    }

    /// Exact monomial `c x^e`.
    pub fn monomial(c: Scalar, e: i64) -> QSeries {
        if c.is_zero() {
            return QSeries::zero();
        }
        QSeries {
            val: e,
            coeffs: vec![c],
            prec: EXACT,
        }
    }

    /// Exact power `x^e` of the base root.
    pub fn x_power(e: i64) -> QSeries {
        QSeries::monomial(Scalar::one(), e)
    }

    pub fn constant(c: Scalar) -> QSeries {
        QSeries::monomial(c, 0)
    }

    /// Exponent of the lowest stored nonzero coefficient; `None` when the
    /// value is zero (exactly, or modulo its precision window).
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    /// Exponent modulo which the value is exact, `None` when fully exact.
    pub fn precision(&self) -> Option<i64> {
        (self.prec != EXACT).then_some(self.prec)
    }

    pub fn is_exact(&self) -> bool {
        self.prec == EXACT
    }

    /// Coefficient of `x^d` when it is within the known window.
    pub fn known_coeff(&self, d: i64) -> Option<Scalar> {
        if d >= self.prec {
            return None;
        }
        if d < self.val {
            return Some(Scalar::zero());
        }
        Some(
            self.coeffs
                .get(usize::try_from(d - self.val).unwrap())
                .cloned()
                .unwrap_or_else(Scalar::zero),
        )
    }

    /// Coefficient of `x^d`; panics outside the known window.
    pub fn coeff(&self, d: i64) -> Scalar {
        self.known_coeff(d)
            .unwrap_or_else(|| panic!("coefficient of x^{d} is beyond precision x^{}", self.prec))
    }

    /// Forget everything at or beyond `x^prec`.
    pub fn truncated(&self, prec: i64) -> QSeries {
        if prec >= self.prec {
            return self.clone();
        }
        let keep = (prec - self.val).max(0) as usize;
        QSeries::normalized(
            self.val,
            self.coeffs.iter().take(keep).cloned().collect(),
            prec,
        )
    }

    /// Certify that the value vanishes modulo `x^order`.  `Ok(false)` when a
    /// nonzero coefficient below the order is visible; an error when the
    /// stored precision is too small to decide.
    pub fn certified_zero_to(&self, order: i64) -> Result<bool> {
        for (j, c) in self.coeffs.iter().enumerate() {
            if self.val + (j as i64) >= order {
                break;
            }
            if !c.is_zero() {
                return Ok(false);
            }
        }
        if self.prec >= order {
            Ok(true)
        } else {
            Err(Error::SeriesPrecision(format!(
                "needed x^{order}, have x^{}: raise the working precision",
                self.prec
            )))
        }
    }

    fn add_impl(&self, rhs: &QSeries) -> QSeries {
        if self.coeffs.is_empty() && self.prec == EXACT {
            return rhs.clone();
        }
        if rhs.coeffs.is_empty() && rhs.prec == EXACT {
            return self.clone();
        }
        let prec = self.prec.min(rhs.prec);
        let lo = match (self.coeffs.is_empty(), rhs.coeffs.is_empty()) {
            (true, true) => return QSeries::normalized(prec, Vec::new(), prec),
            (true, false) => rhs.val,
            (false, true) => self.val,
            (false, false) => self.val.min(rhs.val),
        };
        let hi = if prec == EXACT {
            (self.val + self.coeffs.len() as i64).max(rhs.val + rhs.coeffs.len() as i64)
        } else {
            prec
        };
        let mut coeffs = vec![Scalar::zero(); (hi - lo).max(0) as usize];
        for (src_val, src) in [(self.val, &self.coeffs), (rhs.val, &rhs.coeffs)] {
            for (j, c) in src.iter().enumerate() {
                let d = src_val + j as i64;
                if d < hi {
                    coeffs[(d - lo) as usize] += c;
                }
            }
        }
        QSeries::normalized(lo, coeffs, prec)
    }

    fn mul_impl(&self, rhs: &QSeries) -> QSeries {
        // 0 * y = 0 exactly, even against a truncated y
        if (self.coeffs.is_empty() && self.prec == EXACT)
            || (rhs.coeffs.is_empty() && rhs.prec == EXACT)
        {
            return QSeries::zero();
        }
        let prec = padd(self.prec, rhs.val).min(padd(rhs.prec, self.val));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QSeries::normalized(prec, Vec::new(), prec);
        }
        let lo = self.val + rhs.val;
        let hi = if prec == EXACT {
            lo + (self.coeffs.len() + rhs.coeffs.len()) as i64 - 1
        } else {
            prec
        };
        let mut coeffs = vec![Scalar::zero(); (hi - lo).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let d = lo + (i + j) as i64;
                if d >= hi {
                    break;
                }
                coeffs[(i + j) as usize] += a * b;
            }
        }
        QSeries::normalized(lo, coeffs, prec)
    }

    fn neg_impl(&self) -> QSeries {
        QSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }

    fn recip_impl(&self) -> QSeries {
        assert!(
            !(self.coeffs.is_empty() && self.prec == EXACT),
            "inversion of the zero series"
        );
        assert!(
            !self.coeffs.is_empty(),
            "inversion of a series that vanishes modulo x^{}: insufficient working precision",
            self.prec
        );
        // self = x^val * u with u a unit; invert u by the geometric recursion
        let rel = if self.prec == EXACT {
            if self.coeffs.len() == 1 {
                return QSeries::monomial(self.coeffs[0].recip(), -self.val);
            }
            series_precision()
        } else {
            self.prec - self.val
        };
        let n = rel as usize;
        let c0 = self.coeffs[0].recip();
        let mut inv = vec![Scalar::zero(); n];
        inv[0] = c0.clone();
        for d in 1..n {
            let mut acc = Scalar::zero();
            for j in 0..d {
                if let Some(a) = self.coeffs.get(d - j) {
                    if !a.is_zero() && !inv[j].is_zero() {
                        acc += a * &inv[j];
                    }
                }
            }
            inv[d] = -acc * &c0;
        }
        QSeries::normalized(-self.val, inv, rel - self.val)
    }

    fn eq_impl(&self, rhs: &QSeries) -> bool {
        self.add_impl(&rhs.neg_impl()).is_zero()
    }
}

impl PartialEq for QSeries {
    /// Equality modulo the finer of the two precision windows.
    fn eq(&self, rhs: &QSeries) -> bool {
        self.eq_impl(rhs)
    }
}

impl Zero for QSeries {
    fn zero() -> Self {
        QSeries {
            val: 0,
            coeffs: Vec::new(),
            prec: EXACT,
        }
    }

    /// True when no nonzero coefficient is stored; for a truncated value
    /// this means "zero modulo the precision window".
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QSeries {
    fn one() -> Self {
        QSeries::constant(Scalar::one())
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (j, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "({})x^{}", scalar_str(c), self.val + j as i64)?;
            }
            if first {
                write!(f, "0")?;
            }
        }
        if self.prec != EXACT {
            write!(f, " + O(x^{})", self.prec)?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                QSeries::$impl_fn(&self, &rhs)
            }
        }
        impl $trait<&QSeries> for QSeries {
            type Output = QSeries;
            fn $method(self, rhs: &QSeries) -> QSeries {
                QSeries::$impl_fn(&self, rhs)
            }
        }
        impl $trait<QSeries> for &QSeries {
            type Output = QSeries;
            fn $method(self, rhs: QSeries) -> QSeries {
                QSeries::$impl_fn(self, &rhs)
            }
        }
        impl $trait<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $method(self, rhs: &QSeries) -> QSeries {
                QSeries::$impl_fn(self, rhs)
            }
        }
    };
}

impl QSeries {
    fn sub_impl(&self, rhs: &QSeries) -> QSeries {
        self.add_impl(&rhs.neg_impl())
    }

    fn div_impl(&self, rhs: &QSeries) -> QSeries {
        self.mul_impl(&rhs.recip_impl())
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.neg_impl()
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        self.neg_impl()
    }
}

macro_rules! forward_assign {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<QSeries> for QSeries {
            fn $method(&mut self, rhs: QSeries) {
                *self = QSeries::$impl_fn(self, &rhs);
            }
        }
        impl $trait<&QSeries> for QSeries {
            fn $method(&mut self, rhs: &QSeries) {
                *self = QSeries::$impl_fn(self, rhs);
            }
        }
    };
}

forward_assign!(AddAssign, add_assign, add_impl);
forward_assign!(SubAssign, sub_assign, sub_impl);
forward_assign!(MulAssign, mul_assign, mul_impl);

impl Field for QSeries {
    fn from_int(n: i64) -> Self {
        QSeries::constant(Scalar::from_integer(n.into()))
    }

    fn from_rat(r: &Scalar) -> Self {
        QSeries::constant(r.clone())
    }

    fn recip(&self) -> Self {
        self.recip_impl()
    }

    fn repr(&self) -> String {
        format!("{self}")
    }
}
