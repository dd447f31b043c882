//! The exact operator-identity suite.
//!
//! Every check below is symbolic: two routes to the same object are built
//! through different arithmetic and subtracted, and the check passes only
//! when the difference is structurally zero. The residual column carries
//! the first nonzero difference, rendered, so a failure states what was
//! actually computed.

use qdeform::jackson::{
    bracket_theta, jackson_derivative, scale, signed_scale, solve_heisenberg_coefficients,
    FormalSeries, QParam, ScaleDirection,
};
use qdeform::qnum::{basic_int, basic_int_quotient, recursion_residual, BasicNumberKind};
use qdeform::{LaurentPoly, Result};

use crate::config::FaultKind;
use crate::output::IdentityRow;

const SYM: QParam = QParam::Symbolic;

struct Outcome {
    passed: bool,
    residual: String,
}

impl Outcome {
    fn pass() -> Self {
        Self {
            passed: true,
            residual: "0".into(),
        }
    }

    fn fail(residual: impl ToString) -> Self {
        Self {
            passed: false,
            residual: residual.to_string(),
        }
    }

    fn from_series(label: &str, residual: &FormalSeries) -> Option<Self> {
        if residual.is_zero() {
            None
        } else {
            Some(Self::fail(format!("{label}: {residual}")))
        }
    }

    fn from_poly(label: &str, residual: &LaurentPoly) -> Option<Self> {
        if residual.is_zero() {
            None
        } else {
            Some(Self::fail(format!("{label}: {residual}")))
        }
    }
}

fn q_poly() -> LaurentPoly {
    LaurentPoly::monomial(1)
}

/// `[N] X = X [N+1]`, with the right side built from the recursion
/// `[m+1] = q [m] + q^{-m}` so the two sides do different arithmetic.
fn bracket_shift(n_max: u32) -> Result<Outcome> {
    for m in 0..=i64::from(n_max) {
        let xm = FormalSeries::monomial(m);
        let lhs = bracket_theta(&xm.mul_x(), &SYM)?;
        let rhs = bracket_theta(&xm, &SYM)?
            .coeff_mul(&q_poly())?
            .add(&scale(&xm, ScaleDirection::Down, &SYM)?)?
            .mul_x();
        if let Some(outcome) = Outcome::from_series(&format!("x^{m}"), &lhs.sub(&rhs)?) {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// `(-q)^N X = X (-q)^{N+1}`, the right side built by multiplying the
/// coefficient with the monomial `-q`.
fn sign_scale_shift(n_max: u32) -> Result<Outcome> {
    let minus_q = q_poly().neg();
    for m in 0..=i64::from(n_max) {
        let xm = FormalSeries::monomial(m);
        let lhs = signed_scale(&xm.mul_x())?;
        let rhs = signed_scale(&xm)?.coeff_mul(&minus_q)?.mul_x();
        if let Some(outcome) = Outcome::from_series(&format!("x^{m}"), &lhs.sub(&rhs)?) {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// `(D X - q X D) f = q^{-N} f` on every monomial up to the degree bound.
fn deformed_heisenberg(n_max: u32) -> Result<Outcome> {
    for m in 0..=i64::from(n_max) {
        let f = FormalSeries::monomial(m);
        let lhs = jackson_derivative(&f.mul_x(), &SYM)?
            .sub(&jackson_derivative(&f, &SYM)?.mul_x().coeff_mul(&q_poly())?)?;
        let rhs = scale(&f, ScaleDirection::Down, &SYM)?;
        if let Some(outcome) = Outcome::from_series(&format!("x^{m}"), &lhs.sub(&rhs)?) {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// `([N] X - q X [N]) f = X q^{-N} f` on every monomial up to the bound.
fn bracket_commutator(n_max: u32) -> Result<Outcome> {
    for m in 0..=i64::from(n_max) {
        let f = FormalSeries::monomial(m);
        let lhs = bracket_theta(&f.mul_x(), &SYM)?
            .sub(&bracket_theta(&f, &SYM)?.mul_x().coeff_mul(&q_poly())?)?;
        let rhs = scale(&f, ScaleDirection::Down, &SYM)?.mul_x();
        if let Some(outcome) = Outcome::from_series(&format!("x^{m}"), &lhs.sub(&rhs)?) {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// The degree-by-degree solution of the deformed relation must reproduce
/// the symmetric brackets.
fn derivative_uniqueness(n_max: u32) -> Result<Outcome> {
    let solved = solve_heisenberg_coefficients(n_max);
    for (r, d) in solved.iter().enumerate() {
        let bracket = basic_int(BasicNumberKind::BosonSymmetric, r as u32);
        if let Some(outcome) = Outcome::from_poly(&format!("degree {r}"), &d.sub(&bracket)) {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// `q^{±N} x^m = q^{±m} x^m`, the right side via an independent power chain.
fn scaling_monomial(n_max: u32) -> Result<Outcome> {
    for m in 0..=n_max {
        let xm = FormalSeries::monomial(i64::from(m));
        let up = scale(&xm, ScaleDirection::Up, &SYM)?;
        let up_expected = FormalSeries::symbolic([(i64::from(m), LaurentPoly::monomial(1).pow(m))]);
        if let Some(outcome) = Outcome::from_series(&format!("up x^{m}"), &up.sub(&up_expected)?) {
            return Ok(outcome);
        }
        let down = scale(&xm, ScaleDirection::Down, &SYM)?;
        let down_expected =
            FormalSeries::symbolic([(i64::from(m), LaurentPoly::monomial(-1).pow(m))]);
        if let Some(outcome) =
            Outcome::from_series(&format!("down x^{m}"), &down.sub(&down_expected)?)
        {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// `q^{-N} q^{N} = 1` on a composite series.
fn scaling_inverse(n_max: u32) -> Result<Outcome> {
    let f = FormalSeries::symbolic(
        (0..=i64::from(n_max)).map(|m| (m, LaurentPoly::from_int(m % 5 - 2))),
    );
    let round_trip = scale(
        &scale(&f, ScaleDirection::Up, &SYM)?,
        ScaleDirection::Down,
        &SYM,
    )?;
    match Outcome::from_series("round trip", &round_trip.sub(&f)?) {
        Some(outcome) => Ok(outcome),
        None => Ok(Outcome::pass()),
    }
}

/// `q^N D = D q^{N-1}` and `[N] D = D [N-1]` on every monomial up to the
/// bound.
fn ladder_number_shift(n_max: u32) -> Result<Outcome> {
    for m in 0..=i64::from(n_max) {
        let xm = FormalSeries::monomial(m);

        let lhs_scale = scale(&jackson_derivative(&xm, &SYM)?, ScaleDirection::Up, &SYM)?;
        let shifted = FormalSeries::symbolic([(m, LaurentPoly::monomial(m - 1))]);
        let rhs_scale = jackson_derivative(&shifted, &SYM)?;
        if let Some(outcome) =
            Outcome::from_series(&format!("q^N D x^{m}"), &lhs_scale.sub(&rhs_scale)?)
        {
            return Ok(outcome);
        }

        let lhs_bracket = bracket_theta(&jackson_derivative(&xm, &SYM)?, &SYM)?;
        let prev_bracket = if m >= 1 {
            basic_int(BasicNumberKind::BosonSymmetric, (m - 1) as u32)
        } else {
            basic_int(BasicNumberKind::BosonSymmetric, 1).neg()
        };
        let rhs_bracket = jackson_derivative(&FormalSeries::symbolic([(m, prev_bracket)]), &SYM)?;
        if let Some(outcome) =
            Outcome::from_series(&format!("[N] D x^{m}"), &lhs_bracket.sub(&rhs_bracket)?)
        {
            return Ok(outcome);
        }
    }
    Ok(Outcome::pass())
}

/// One bracket recursion, optionally with the negative-control corruption.
fn recursion_check(kind: BasicNumberKind, n_max: u32, fault: bool) -> Outcome {
    for n in 0..=n_max {
        let mut residual = recursion_residual(kind, n);
        if fault && n == n_max.min(3) {
            // the corrupted bracket [n] + 1 shifts the residual by -q
            residual = residual.sub(&LaurentPoly::monomial(1));
        }
        if let Some(outcome) = Outcome::from_poly(&format!("n = {n}"), &residual) {
            return outcome;
        }
    }
    Outcome::pass()
}

/// Sum form against quotient form for all three bracket families.
fn bracket_quotient_match(n_max: u32) -> Result<Outcome> {
    for kind in [
        BasicNumberKind::BosonSymmetric,
        BasicNumberKind::BosonNonsymmetric,
        BasicNumberKind::Fermion,
    ] {
        for n in 0..=n_max {
            let sum_form = basic_int(kind, n);
            let quotient_form = basic_int_quotient(kind, n)?;
            if let Some(outcome) = Outcome::from_poly(
                &format!("{} [{n}]", kind.label()),
                &sum_form.sub(&quotient_form),
            ) {
                return Ok(outcome);
            }
        }
    }
    Ok(Outcome::pass())
}

/// Runs the whole suite. Every check is exact; `fault` corrupts one bracket
/// inside the boson recursion so the failure path stays demonstrably alive.
pub fn identity_suite(n_max: u32, fault: Option<FaultKind>) -> Result<Vec<IdentityRow>> {
    let corrupt = fault == Some(FaultKind::BasicNumber);
    let named: Vec<(&str, Outcome)> = vec![
        ("bracket-shift", bracket_shift(n_max)?),
        ("sign-scale-shift", sign_scale_shift(n_max)?),
        ("deformed-heisenberg", deformed_heisenberg(n_max)?),
        ("bracket-commutator", bracket_commutator(n_max)?),
        ("derivative-uniqueness", derivative_uniqueness(n_max)?),
        ("scaling-monomial", scaling_monomial(n_max)?),
        ("scaling-inverse", scaling_inverse(n_max)?),
        ("ladder-number-shift", ladder_number_shift(n_max)?),
        (
            "boson-recursion",
            recursion_check(BasicNumberKind::BosonSymmetric, n_max, corrupt),
        ),
        (
            "fermion-recursion",
            recursion_check(BasicNumberKind::Fermion, n_max, false),
        ),
        (
            "nonsym-recursion",
            recursion_check(BasicNumberKind::BosonNonsymmetric, n_max, false),
        ),
        ("bracket-quotient-match", bracket_quotient_match(n_max)?),
    ];
    Ok(named
        .into_iter()
        .map(|(name, outcome)| IdentityRow {
            identity: name.into(),
            n_max,
            passed: outcome.passed,
            residual: outcome.residual,
        })
        .collect())
}
