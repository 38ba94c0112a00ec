//! Exact arithmetic dynamics of rational self-maps of the projective line
//! over the rationals.
//!
//! Everything is computed in exact big-integer arithmetic: rational periodic
//! points, good/bad reduction via resultants, the p-adic chordal valuation,
//! explicit bound formulas, and executable checkers for the distance and
//! integrality lemmas they rest on.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod bounds;
pub mod cli;
pub mod dynamics;
pub mod exact;
pub mod homog;
pub mod parse;
pub mod point;
pub mod ratmap;
pub mod verify;



pub use bounds::{BoundFamily, BoundValue};
pub use dynamics::{OrbitRecord, PeriodicPoint};
pub use exact::{Factorization, Int, Rat};
pub use homog::HomogForm;
pub use point::{ChordalVal, PlaceSet, ProjPoint};
pub use ratmap::RationalMap;
pub use verify::{Status, VerificationReport};


/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("cannot factorize zero")]
    FactorizeZero,
    #[error("unfactored residue {0} after exhausting the factorization budget")]
    UnfactoredResidue(Int),
    #[error("the zero form has no {0}")]
    ZeroForm(&'static str),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("(0,0) does not define a projective point")]
    ZeroPoint,
    #[error("constant polynomial does not define a map")]
    ConstantMap,
    #[error("degenerate pair (common factor): resultant is zero")]
    DegeneratePair,
    #[error("iterate degree {0} exceeds the configured cap {1}")]
    DegreeCapExceeded(usize, usize),
    #[error("{0} is a prime of bad reduction")]
    BadPrime(Int),
    #[error("singular conjugation matrix")]
    SingularMatrix,
    #[error("points must be distinct: {0}")]
    CoincidentPoints(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
