//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A lattice fails one of the initial-data compatibility conditions.
    /// The message names the violated containment or pairing.
    #[error("lattice condition violated: {0}")]
    LatticeCondition(String),

    #[error("unsupported family/rank combination: {0}")]
    UnsupportedFamily(String),

    /// Two spectral points needed by the same computation coincide, so the
    /// joint eigenproblem is degenerate at this parameter specialization.
    #[error("parameter specialization is not generic: {0}")]
    Genericity(String),

    #[error("cannot invert a series with zero constant term")]
    NonUnitInverse,

    #[error("q-exponent {0} does not lie on the grid (1/{1})*Z")]
    ExponentScale(String, i64),

    #[error("basic hypergeometric series: lower-parameter Pochhammer vanished at term {0}")]
    PhiDivision(usize),

    /// An operator application produced a nonzero remainder in a division
    /// that must be exact; this signals a lattice or parameter bug upstream.
    #[error("internal consistency: nonzero remainder in exact division ({0})")]
    DivisionRemainder(String),

    /// An operator does not normalize to the sum-over-Weyl-group form.
    #[error("operator is not in the expected normal form: {0}")]
    NotNormalizable(String),

    #[error("evaluation hit a zero denominator: {0}")]
    Pole(String),

    #[error("specialization not series-admissible: {0}")]
    SeriesAdmissibility(String),

    /// A truncated series does not carry enough terms to certify the
    /// requested property; recompute at higher precision.
    #[error("series precision exhausted: {0}")]
    SeriesPrecision(String),

    #[error("joint eigenspace has dimension {0}, expected 1")]
    EigenspaceDimension(usize),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
