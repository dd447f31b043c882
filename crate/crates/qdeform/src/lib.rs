//! Deformed oscillator algebras built on exact q-arithmetic.
//!
//! Everything here revolves around the deformation parameter `q` and the
//! bracket ("basic") numbers it generates. The crate has two layers:
//!
//! - an exact layer — Laurent polynomials in `q` over the rationals
//!   ([`laurent`]), the three bracket-number families ([`qnum`]), and the
//!   dilatation/scaling/Jackson-derivative operators acting on formal series
//!   ([`jackson`]). Identities at this layer are decided structurally: a
//!   relation holds iff the difference of its sides is the zero polynomial.
//! - a numeric layer — truncated Fock-space matrix representations of the
//!   deformed ladder algebras ([`fock`]) and Heisenberg-picture time
//!   evolution under the undeformed and deformed equations of motion
//!   ([`dynamics`]), verified against closed-form per-element solutions.
//!
//! Start with the runnable examples (`cargo run --example basic_numbers`,
//! `--example deformed_heisenberg`, ...) or the `qdeform` command-line tool
//! from the companion crate.
//!
//! ```
//! use qdeform::jackson::{jackson_derivative, FormalSeries, QParam};
//! use qdeform::qnum::{basic_int, BasicNumberKind};
//!
//! // D x^3 = [3] x^2, with [3] = q^2 + 1 + q^-2 exactly
//! let d = jackson_derivative(&FormalSeries::monomial(3), &QParam::Symbolic)?;
//! let bracket = basic_int(BasicNumberKind::BosonSymmetric, 3);
//! assert_eq!(d, FormalSeries::symbolic([(2, bracket.clone())]));
//! assert_eq!(bracket.to_string(), "q^2 + 1 + q^-2");
//! # Ok::<(), qdeform::Error>(())
//! ```

pub mod dynamics;
pub mod fock;
pub mod jackson;
pub mod laurent;
pub mod qnum;

pub use dynamics::{EvolutionSpec, HVariant, HamiltonianModel, ModelKind};
pub use fock::{FockRep, OperatorMatrix, RepKind};
pub use jackson::{FormalSeries, LinearOperator, QParam, ScaleDirection};
pub use laurent::{rat, LaurentPoly, Rational};
pub use num_complex::Complex64;
pub use qnum::{BasicNumberKind, QValue};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Laurent division left a nonzero remainder; either the divisor does
    /// not divide the dividend or the identity being tested is false.
    #[error("division is not exact; remainder {remainder}")]
    NonExactDivision { remainder: String },

    /// An argument fell outside the domain of the requested operation.
    #[error("{0}")]
    Domain(String),

    /// Exponent arithmetic would overflow the machine-sized exponent.
    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,

    /// A symbolic series met a numeric one (or vice versa) in a single
    /// operation. Conversions must be explicit.
    #[error("cannot mix symbolic and numeric series: {0}")]
    ModeMismatch(String),

    /// The Hamiltonian model and the Fock representation belong to
    /// different algebra families.
    #[error("hamiltonian model {model} is incompatible with representation kind {rep}")]
    IncompatibleKinds { model: String, rep: String },

    /// No closed-form frequency factor is on record for this
    /// model/variant combination.
    #[error("no closed-form frequency factor for model {model} under variant {variant}")]
    NoClosedForm { model: String, variant: String },

    /// The closed-form factor disagrees with the exact element frequency
    /// under both candidate operator orderings.
    #[error(
        "closed-form factor matches neither ordering: exact {oracle}, \
         at-n candidate {at_n}, at-predecessor candidate {at_predecessor}"
    )]
    NoOrderingMatches {
        oracle: f64,
        at_n: f64,
        at_predecessor: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
