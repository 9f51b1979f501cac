//! Laurent polynomials with exact coefficients in a generic field.  Exponents
//! are integer coordinate vectors with respect to a fixed lattice basis; the
//! container itself is basis-agnostic.

use crate::qnum::{pow_i, Field, Scalar};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<S: Field = Scalar> {
    terms: BTreeMap<Vec<i64>, S>,
}

impl<S: Field> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![0; dim], S::one())
    }

    pub fn monomial(exp: Vec<i64>, coeff: S) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: Vec<i64>, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> S {
        self.terms.get(exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `coeff * x^shift`.
    pub fn shifted(&self, shift: &[i64], coeff: &S) -> Self {
        if coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let ne: Vec<i64> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
                    (ne, v.clone() * coeff)
                })
                .collect(),
        }
    }

    /// Evaluate at a point given by the multiplicative values of the basis
    /// coordinates.
    pub fn eval(&self, z: &[S]) -> S {
        let mut acc = S::zero();
        for (e, v) in &self.terms {
            let mut term = v.clone();
            for (c, zi) in e.iter().zip(z) {
                term *= pow_i(zi, *c);
            }
            acc += term;
        }
        acc
    }

    /// Change the coefficient field termwise.
    pub fn map_coeffs<T: Field>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), f(v));
        }
        out
    }
}

impl<S: Field> std::ops::Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl<S: Field> std::ops::Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), -v.clone());
        }
        out
    }
}

impl<S: Field> std::ops::Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        let mut out = LaurentPoly::zero();
        for (e1, v1) in &self.terms {
            for (e2, v2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, v1.clone() * v2);
            }
        }
        out
    }
}

impl<S: Field> std::ops::Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl<S: Field> std::fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, v) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let exps: Vec<String> = e.iter().map(|c| c.to_string()).collect();
            write!(f, "{v}*x^({})", exps.join(","))?;
        }
        Ok(())
    }
}
