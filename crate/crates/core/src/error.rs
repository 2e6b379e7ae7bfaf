use thiserror::Error;

/// Errors raised by the series kernel, the class constructors and the search harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series whose constant term {modulus:e} is below the pivot tolerance")]
    ZeroConstantTerm { modulus: f64 },
    #[error("inner series of a composition has nonzero constant term (|c0| = {modulus:e})")]
    InnerConstantNonzero { modulus: f64 },
    #[error("series must have constant term 1 (got {re} + {im}i)")]
    NotUnitConstantTerm { re: f64, im: f64 },
    #[error("series must be normalized as z + O(z^2)")]
    NotNormalized,
    #[error("evaluation point |z| = {modulus} is not inside the unit disk")]
    OutsideDisk { modulus: f64 },
    #[error("a non-finite coefficient was produced")]
    NonFinite,
    #[error("a series needs at least one coefficient")]
    EmptySeries,
    #[error("parameter s = {0} is outside (0, 1]")]
    BadS(f64),
    #[error("index {0} is out of range")]
    BadIndex(usize),
    #[error("angle {phi} is outside the open interval (-{limit}, {limit})")]
    AngleOutOfRange { phi: f64, limit: f64 },
    #[error("point lies on the branch cut (non-positive real axis)")]
    BranchCut,
    #[error("requested index {requested} exceeds what order {order} supports")]
    OrderExceeded { requested: usize, order: usize },
    #[error("family parameter x = {0} is outside [0, 1]")]
    XOutOfRange(f64),
    #[error("parameter {what} has modulus {modulus} outside the admissible disk")]
    ParamOutOfDisk { what: &'static str, modulus: f64 },
    #[error("invalid campaign configuration: {0}")]
    ConfigInvalid(String),
}

impl Error {
    /// True for errors caused by out-of-range user input rather than numerical breakdown.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::BadS(_)
                | Error::BadIndex(_)
                | Error::AngleOutOfRange { .. }
                | Error::OrderExceeded { .. }
                | Error::XOutOfRange(_)
                | Error::ParamOutOfDisk { .. }
                | Error::ConfigInvalid(_)
                | Error::OutsideDisk { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
