//! Exact-arithmetic construction and verification of Macdonald-Koornwinder
//! polynomials.
//!
//! The crate builds, from an initial-data quintuple (a finite root system, a
//! basis choice, a twist marker, and a compatible pair of lattices), the
//! affine root system and extended affine Weyl group, a faithful polynomial
//! representation of the associated affine Hecke algebra, and from those the
//! nonsymmetric and symmetric polynomial families together with their
//! difference operators, evaluation and norm formulas, and a biorthogonal
//! pairing that can be certified by two independent numerical backends.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, q and the
//! multiplicity parameters are specialized to rationals on a fixed power
//! grid, and every identity check is an equality of rationals (or, for the
//! pairing backends, an equality up to a stated, pinned tolerance).
//!
//! Module layout, bottom up:
//!
//! * [`qnum`]: scalars, parameter specializations, q-series utilities.
//! * [`rootdata`]: finite root systems, lattices, Weyl groups.
//! * [`initdata`]: initial-data quintuples, affine root systems, duality.
//! * [`weyl`]: the extended affine Weyl group and the orderings it induces.
//! * [`heckeops`]: Laurent polynomials, the basic representation, difference
//!   operators in normal form.
//! * [`mkpoly`]: the polynomial families and their closed-form identities.
//! * [`pairing`]: the biorthogonality form, series and quadrature backends.

pub mod error;
pub mod heckeops;
pub mod initdata;
pub mod mkpoly;
pub mod qnum;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
