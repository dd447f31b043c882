//! Basic (bracket) numbers: the q-analogs that replace ordinary integers in
//! the deformed algebras.
//!
//! Three families are supported, in two independent constructions each. The
//! primary construction is the explicit sum form,
//!
//! ```text
//! [n]   = q^(n-1) + q^(n-3) + ... + q^(-(n-1))      symmetric boson
//! [n]'  = 1 + q + ... + q^(n-1)                     nonsymmetric boson
//! [n]_F = q^(-(n-1)) - q^(-(n-3)) + ...             fermion (alternating)
//! ```
//!
//! and the cross-check is the quotient form
//!
//! ```text
//! [n]   = (q^n - q^-n) / (q - q^-1)
//! [n]'  = (q^n - 1) / (q - 1)
//! [n]_F = (q^-n - (-1)^n q^n) / (q + q^-1)
//! ```
//!
//! realized with exact Laurent division, so a transcription slip in either
//! form shows up as a structural mismatch. The symmetric boson bracket is
//! invariant under `q <-> q^-1`; the fermion bracket is not (`[2]_F`
//! changes sign), and its `q -> 1` limit alternates 0, 1, 0, 1 rather than
//! approaching `n`.

use num_traits::ToPrimitive;

use crate::laurent::{rat, LaurentPoly, Rational};
use crate::{Error, Result};

/// A validated deformation parameter: a finite positive real.
///
/// `q = 1` is allowed — it is the classical point — but individual
/// operations that divide by `q - q^-1` reject it explicitly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QValue(f64);

impl QValue {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q > 0.0 {
            Ok(Self(q))
        } else {
            Err(Error::Domain(format!(
                "deformation parameter must be a finite positive real, got {q}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn recip(self) -> Self {
        Self(1.0 / self.0)
    }

    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }
}

/// Which bracket-number family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicNumberKind {
    /// `[n] = (q^n - q^-n)/(q - q^-1)`, invariant under `q <-> q^-1`.
    BosonSymmetric,
    /// `[n]' = (q^n - 1)/(q - 1)`, the convention in which the ladder
    /// algebra reads `a a† - q a† a = 1`.
    BosonNonsymmetric,
    /// `[n]_F = (q^-n - (-1)^n q^n)/(q + q^-1)`.
    Fermion,
}

impl BasicNumberKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::BosonSymmetric => "boson-sym",
            Self::BosonNonsymmetric => "boson-nonsym",
            Self::Fermion => "fermion",
        }
    }
}

/// The integer-argument bracket `[n]` as an exact Laurent polynomial, from
/// the sum form.
pub fn basic_int(kind: BasicNumberKind, n: u32) -> LaurentPoly {
    let n = i64::from(n);
    match kind {
        BasicNumberKind::BosonSymmetric => {
            LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, rat(1, 1))))
        }
        BasicNumberKind::BosonNonsymmetric => {
            LaurentPoly::from_terms((0..n).map(|k| (k, rat(1, 1))))
        }
        BasicNumberKind::Fermion => LaurentPoly::from_terms(
            (0..n).map(|j| (-(n - 1) + 2 * j, rat(if j % 2 == 0 { 1 } else { -1 }, 1))),
        ),
    }
}

/// The same bracket from its quotient definition, via exact division.
/// Independent of [`basic_int`]; the two must agree for every `n`.
pub fn basic_int_quotient(kind: BasicNumberKind, n: u32) -> Result<LaurentPoly> {
    let n = i64::from(n);
    let (numerator, denominator) = match kind {
        BasicNumberKind::BosonSymmetric => (
            LaurentPoly::monomial(n).sub(&LaurentPoly::monomial(-n)),
            LaurentPoly::monomial(1).sub(&LaurentPoly::monomial(-1)),
        ),
        BasicNumberKind::BosonNonsymmetric => (
            LaurentPoly::monomial(n).sub(&LaurentPoly::one()),
            LaurentPoly::monomial(1).sub(&LaurentPoly::one()),
        ),
        BasicNumberKind::Fermion => {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            (
                LaurentPoly::monomial(-n).sub(&LaurentPoly::monomial(n).scaled(&rat(sign, 1))),
                LaurentPoly::monomial(1).add(&LaurentPoly::monomial(-1)),
            )
        }
    };
    numerator.exact_div(&denominator)
}

/// The real-argument bracket `[alpha]` at a concrete `q`.
///
/// Boson kinds accept any finite real `alpha`, with the `q = 1` limit value
/// `alpha` handled explicitly. The fermion bracket is defined here for
/// nonnegative integer arguments only: `(-1)^alpha` has no preferred real
/// continuation, so anything else is a domain error.
pub fn basic_real(kind: BasicNumberKind, alpha: f64, q: QValue) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "bracket argument must be finite, got {alpha}"
        )));
    }
    let qv = q.get();
    match kind {
        BasicNumberKind::BosonSymmetric => {
            if q.is_one() {
                Ok(alpha)
            } else {
                Ok((qv.powf(alpha) - qv.powf(-alpha)) / (qv - qv.recip()))
            }
        }
        BasicNumberKind::BosonNonsymmetric => {
            if q.is_one() {
                Ok(alpha)
            } else {
                Ok((qv.powf(alpha) - 1.0) / (qv - 1.0))
            }
        }
        BasicNumberKind::Fermion => {
            let rounded = alpha.round();
            if alpha != rounded || rounded < 0.0 || rounded > f64::from(u32::MAX) {
                return Err(Error::Domain(format!(
                    "fermion bracket is defined for nonnegative integer arguments only, got {alpha}"
                )));
            }
            basic_int(kind, rounded.to_u32().unwrap()).eval(qv)
        }
    }
}

/// Verifies the bracket recursion for one `n`, exactly:
///
/// ```text
/// [n+1]   = q [n]   + q^-n      symmetric boson
/// [n+1]'  = q [n]'  + 1         nonsymmetric boson
/// [n+1]_F = q^-n - q [n]_F      fermion
/// ```
///
/// Returns `false` only if one of the bracket constructions is wrong.
pub fn check_recursion(kind: BasicNumberKind, n: u32) -> bool {
    recursion_residual(kind, n).is_zero()
}

/// The left-minus-right side of the recursion for one `n`; zero when the
/// recursion holds.
pub fn recursion_residual(kind: BasicNumberKind, n: u32) -> LaurentPoly {
    let q = LaurentPoly::monomial(1);
    let next = basic_int(kind, n + 1);
    let cur = basic_int(kind, n);
    match kind {
        BasicNumberKind::BosonSymmetric => next
            .sub(&q.mul(&cur))
            .sub(&LaurentPoly::monomial(-i64::from(n))),
        BasicNumberKind::BosonNonsymmetric => next.sub(&q.mul(&cur)).sub(&LaurentPoly::one()),
        BasicNumberKind::Fermion => q
            .mul(&cur)
            .add(&next)
            .sub(&LaurentPoly::monomial(-i64::from(n))),
    }
}

/// The exact `q -> 1` limit of the fermion bracket: `(1 - (-1)^n) / 2`,
/// i.e. 1 for odd `n` and 0 for even `n`.
pub fn fermion_classical_limit(n: u32) -> Rational {
    basic_int(BasicNumberKind::Fermion, n).coeff_sum()
}
