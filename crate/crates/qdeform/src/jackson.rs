//! The dilatation operator, the scaling operators `q^{±N}`, and the Jackson
//! derivative, acting on formal series in `x`.
//!
//! Series are explicit term lists, so every operator acts term by term and
//! nothing is truncated. A series is either *symbolic* — integer exponents,
//! [`LaurentPoly`] coefficients, all results exact — or *numeric* — real
//! exponents, `f64` coefficients. Real exponents force numeric coefficients,
//! and the two modes never meet in one operation: any attempt returns
//! [`Error::ModeMismatch`] instead of silently losing exactness.
//!
//! The operators:
//!
//! ```text
//! theta x^r         = r x^r                     dilatation, x d/dx
//! X f               = x f                       multiplication by x
//! q^{±N} x^r        = q^{±r} x^r                scaling, f(x) -> f(q^{±1} x)
//! D x^r             = [r] x^{r-1}               Jackson derivative
//! ```
//!
//! with `[r]` the symmetric boson bracket. `D` has an equivalent quotient
//! construction, `(q^N - q^{-N}) / (x (q - q^-1))`; both are implemented and
//! must agree — see [`jackson_derivative`] and [`jackson_derivative_quotient`].
//!
//! [`check_deformed_heisenberg`] verifies, exactly, that `D` satisfies the
//! deformed commutation relation `D X - q X D = q^{-N}` on any symbolic
//! series, and [`solve_heisenberg_coefficients`] shows the converse: solving
//! that relation degree by degree on the monomial basis forces the
//! coefficients `[r]`, so the relation pins the derivative down uniquely
//! within the class of operators diagonal in degree.

use std::collections::BTreeMap;
use std::fmt;

use crate::laurent::{pow_f64, rat, LaurentPoly};
use crate::qnum::{basic_int, BasicNumberKind, QValue};
use crate::{Error, Result};

/// A finite formal sum of terms `c * x^r`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries {
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq)]
enum Repr {
    /// Integer exponents, exact coefficients.
    Symbolic(BTreeMap<i64, LaurentPoly>),
    /// Real exponents, floating-point coefficients, ascending exponent order.
    Numeric(Vec<(f64, f64)>),
}

/// Whether a series carries exact or floating-point coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMode {
    Symbolic,
    Numeric,
}

/// The deformation parameter as seen by the series operators: either the
/// formal symbol `q` (symbolic series) or a concrete value (numeric series).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum QParam {
    Symbolic,
    Numeric(QValue),
}

/// Direction of the scaling operator: `Up` is `q^N`, `Down` is `q^{-N}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleDirection {
    Up,
    Down,
}

impl ScaleDirection {
    pub fn signum(self) -> i64 {
        match self {
            Self::Up => 1,
            Self::Down => -1,
        }
    }
}

impl FormalSeries {
    /// An empty symbolic series.
    pub fn zero() -> Self {
        Self {
            repr: Repr::Symbolic(BTreeMap::new()),
        }
    }

    /// A symbolic series from `(exponent, coefficient)` pairs; duplicate
    /// exponents merge and zero coefficients drop.
    pub fn symbolic(terms: impl IntoIterator<Item = (i64, LaurentPoly)>) -> Self {
        let mut map: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (r, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(r).or_insert_with(LaurentPoly::zero);
            *entry = entry.add(&c);
            if entry.is_zero() {
                map.remove(&r);
            }
        }
        Self {
            repr: Repr::Symbolic(map),
        }
    }

    /// A numeric series from `(exponent, coefficient)` pairs with real
    /// exponents.
    pub fn numeric(terms: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let mut v: Vec<(f64, f64)> = Vec::new();
        for (r, c) in terms {
            if !r.is_finite() || !c.is_finite() {
                return Err(Error::Domain("numeric series terms must be finite".into()));
            }
            if c == 0.0 {
                continue;
            }
            match v.iter_mut().find(|(e, _)| *e == r) {
                Some((_, existing)) => *existing += c,
                None => v.push((r, c)),
            }
        }
        v.retain(|&(_, c)| c != 0.0);
        v.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(Self {
            repr: Repr::Numeric(v),
        })
    }

    /// The symbolic monomial `x^r`.
    pub fn monomial(r: i64) -> Self {
        Self::symbolic([(r, LaurentPoly::one())])
    }

    /// The numeric monomial `x^r` for any real `r`.
    pub fn monomial_real(r: f64) -> Result<Self> {
        Self::numeric([(r, 1.0)])
    }

    pub fn mode(&self) -> SeriesMode {
        match self.repr {
            Repr::Symbolic(_) => SeriesMode::Symbolic,
            Repr::Numeric(_) => SeriesMode::Numeric,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Symbolic(m) => m.is_empty(),
            Repr::Numeric(v) => v.is_empty(),
        }
    }

    /// Terms of a symbolic series, ascending exponents.
    pub fn symbolic_terms(&self) -> Option<impl Iterator<Item = (i64, &LaurentPoly)>> {
        match &self.repr {
            Repr::Symbolic(m) => Some(m.iter().map(|(&r, c)| (r, c))),
            Repr::Numeric(_) => None,
        }
    }

    /// Terms of a numeric series, ascending exponents.
    pub fn numeric_terms(&self) -> Option<&[(f64, f64)]> {
        match &self.repr {
            Repr::Numeric(v) => Some(v),
            Repr::Symbolic(_) => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        match (&self.repr, &other.repr) {
            (Repr::Symbolic(a), Repr::Symbolic(b)) => Ok(Self::symbolic(
                a.iter()
                    .map(|(&r, c)| (r, c.clone()))
                    .chain(b.iter().map(|(&r, c)| (r, c.clone()))),
            )),
            (Repr::Numeric(a), Repr::Numeric(b)) => {
                Self::numeric(a.iter().chain(b.iter()).copied())
            }
            _ => Err(Error::ModeMismatch("add".into())),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> Self {
        match &self.repr {
            Repr::Symbolic(m) => Self {
                repr: Repr::Symbolic(m.iter().map(|(&r, c)| (r, c.neg())).collect()),
            },
            Repr::Numeric(v) => Self {
                repr: Repr::Numeric(v.iter().map(|&(r, c)| (r, -c)).collect()),
            },
        }
    }

    /// Multiplies every coefficient of a symbolic series by a Laurent
    /// polynomial.
    pub fn coeff_mul(&self, s: &LaurentPoly) -> Result<Self> {
        match &self.repr {
            Repr::Symbolic(m) => Ok(Self::symbolic(m.iter().map(|(&r, c)| (r, c.mul(s))))),
            Repr::Numeric(_) => Err(Error::ModeMismatch("coeff_mul on a numeric series".into())),
        }
    }

    /// Multiplies every coefficient of a numeric series by a scalar.
    pub fn coeff_scale(&self, s: f64) -> Result<Self> {
        match &self.repr {
            Repr::Numeric(v) => Self::numeric(v.iter().map(|&(r, c)| (r, c * s))),
            Repr::Symbolic(_) => Err(Error::ModeMismatch(
                "coeff_scale on a symbolic series".into(),
            )),
        }
    }

    /// Multiplication by `x`: shifts every exponent up by one.
    pub fn mul_x(&self) -> Self {
        match &self.repr {
            Repr::Symbolic(m) => Self {
                repr: Repr::Symbolic(m.iter().map(|(&r, c)| (r + 1, c.clone())).collect()),
            },
            Repr::Numeric(v) => Self {
                repr: Repr::Numeric(v.iter().map(|&(r, c)| (r + 1.0, c)).collect()),
            },
        }
    }

    /// Evaluates a symbolic series at `(x0, q0)`.
    pub fn eval_symbolic(&self, x0: f64, q0: f64) -> Result<f64> {
        let Repr::Symbolic(m) = &self.repr else {
            return Err(Error::ModeMismatch(
                "eval_symbolic on a numeric series".into(),
            ));
        };
        if x0 == 0.0 && m.keys().any(|&r| r < 0) {
            return Err(Error::Domain("series with poles evaluated at x = 0".into()));
        }
        let mut sum = 0.0;
        for (&r, c) in m {
            sum += c.eval(q0)? * pow_f64(x0, r);
        }
        Ok(sum)
    }

    /// Evaluates a numeric series at `x0 > 0` (real exponents need a
    /// positive base).
    pub fn eval_numeric(&self, x0: f64) -> Result<f64> {
        let Repr::Numeric(v) = &self.repr else {
            return Err(Error::ModeMismatch(
                "eval_numeric on a symbolic series".into(),
            ));
        };
        if x0 <= 0.0 || !x0.is_finite() {
            return Err(Error::Domain(format!(
                "numeric series evaluation needs x > 0, got {x0}"
            )));
        }
        Ok(v.iter().map(|&(r, c)| c * x0.powf(r)).sum())
    }

    /// Evaluates the coefficients of a symbolic series at `q0`, producing
    /// the numeric series with the same exponents.
    pub fn to_numeric(&self, q0: f64) -> Result<Self> {
        let Repr::Symbolic(m) = &self.repr else {
            return Ok(self.clone());
        };
        let mut terms = Vec::with_capacity(m.len());
        for (&r, c) in m {
            terms.push((r as f64, c.eval(q0)?));
        }
        Self::numeric(terms)
    }
}

impl fmt::Display for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        match &self.repr {
            Repr::Symbolic(m) => {
                for (&r, c) in m.iter().rev() {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    write!(f, "({c})*x^{r}")?;
                }
            }
            Repr::Numeric(v) => {
                for &(r, c) in v.iter().rev() {
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    write!(f, "({c})*x^{r}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The symmetric bracket `[r]` for a signed integer argument; `[-r] = -[r]`.
fn bracket_signed(r: i64) -> LaurentPoly {
    if r >= 0 {
        basic_int(BasicNumberKind::BosonSymmetric, r as u32)
    } else {
        basic_int(BasicNumberKind::BosonSymmetric, (-r) as u32).neg()
    }
}

/// The symmetric bracket `[r]` at a concrete `q`, with the `q = 1` limit `r`.
fn bracket_real(r: f64, q: QValue) -> f64 {
    if q.is_one() {
        r
    } else {
        let qv = q.get();
        (qv.powf(r) - qv.powf(-r)) / (qv - qv.recip())
    }
}

/// The dilatation operator: `c x^r -> (r c) x^r`.
pub fn theta(f: &FormalSeries) -> FormalSeries {
    match &f.repr {
        Repr::Symbolic(m) => {
            FormalSeries::symbolic(m.iter().map(|(&r, c)| (r, c.scaled(&rat(r, 1)))))
        }
        Repr::Numeric(v) => FormalSeries {
            repr: Repr::Numeric(
                v.iter()
                    .filter(|&&(r, _)| r != 0.0)
                    .map(|&(r, c)| (r, r * c))
                    .collect(),
            ),
        },
    }
}

/// The bracket of the dilatation operator: `c x^r -> ([r] c) x^r`.
pub fn bracket_theta(f: &FormalSeries, q: &QParam) -> Result<FormalSeries> {
    match (&f.repr, q) {
        (Repr::Symbolic(m), QParam::Symbolic) => Ok(FormalSeries::symbolic(
            m.iter().map(|(&r, c)| (r, c.mul(&bracket_signed(r)))),
        )),
        (Repr::Numeric(v), QParam::Numeric(q0)) => {
            FormalSeries::numeric(v.iter().map(|&(r, c)| (r, c * bracket_real(r, *q0))))
        }
        _ => Err(Error::ModeMismatch("bracket_theta".into())),
    }
}

/// The scaling operator `q^{±N}`: `c x^r -> (c q^{±r}) x^r`, i.e.
/// `f(x) -> f(q^{±1} x)`.
pub fn scale(f: &FormalSeries, direction: ScaleDirection, q: &QParam) -> Result<FormalSeries> {
    let sign = direction.signum();
    match (&f.repr, q) {
        (Repr::Symbolic(m), QParam::Symbolic) => {
            Ok(FormalSeries::symbolic(m.iter().map(|(&r, c)| {
                (r, c.mul(&LaurentPoly::monomial(sign * r)))
            })))
        }
        (Repr::Numeric(v), QParam::Numeric(q0)) => FormalSeries::numeric(
            v.iter()
                .map(|&(r, c)| (r, c * q0.get().powf(sign as f64 * r))),
        ),
        (Repr::Numeric(_), QParam::Symbolic) => Err(Error::ModeMismatch(
            "symbolic scaling of a numeric series (q^r leaves the Laurent ring for real r)".into(),
        )),
        (Repr::Symbolic(_), QParam::Numeric(_)) => Err(Error::ModeMismatch(
            "numeric scaling of a symbolic series; convert with to_numeric first".into(),
        )),
    }
}

/// The Jackson derivative in term-map form: `c x^r -> (c [r]) x^{r-1}`.
pub fn jackson_derivative(f: &FormalSeries, q: &QParam) -> Result<FormalSeries> {
    match (&f.repr, q) {
        (Repr::Symbolic(m), QParam::Symbolic) => Ok(FormalSeries::symbolic(
            m.iter().map(|(&r, c)| (r - 1, c.mul(&bracket_signed(r)))),
        )),
        (Repr::Numeric(v), QParam::Numeric(q0)) => {
            FormalSeries::numeric(v.iter().map(|&(r, c)| (r - 1.0, c * bracket_real(r, *q0))))
        }
        _ => Err(Error::ModeMismatch("jackson_derivative".into())),
    }
}

/// The Jackson derivative in quotient form,
/// `(q^N f - q^{-N} f) / (x (q - q^-1))`, built from the scaling operators
/// and exact division. Independent of [`jackson_derivative`]; the two must
/// agree on every series.
pub fn jackson_derivative_quotient(f: &FormalSeries, q: &QParam) -> Result<FormalSeries> {
    let diff = scale(f, ScaleDirection::Up, q)?.sub(&scale(f, ScaleDirection::Down, q)?)?;
    match (&diff.repr, q) {
        (Repr::Symbolic(m), QParam::Symbolic) => {
            let denom = LaurentPoly::monomial(1).sub(&LaurentPoly::monomial(-1));
            let mut terms = Vec::with_capacity(m.len());
            for (&r, c) in m {
                terms.push((r - 1, c.exact_div(&denom)?));
            }
            Ok(FormalSeries::symbolic(terms))
        }
        (Repr::Numeric(v), QParam::Numeric(q0)) => {
            if q0.is_one() {
                return Err(Error::Domain(
                    "quotient form of the Jackson derivative is undefined at q = 1".into(),
                ));
            }
            let denom = q0.get() - q0.get().recip();
            FormalSeries::numeric(v.iter().map(|&(r, c)| (r - 1.0, c / denom)))
        }
        _ => unreachable!("scale preserves the series mode"),
    }
}

/// The Jackson derivative of a plain function at a point:
/// `(f(q x0) - f(q^-1 x0)) / (x0 (q - q^-1))`.
pub fn jackson_derivative_numeric(f: impl Fn(f64) -> f64, x0: f64, q: QValue) -> Result<f64> {
    if x0 == 0.0 || !x0.is_finite() {
        return Err(Error::Domain(format!(
            "Jackson quotient needs a finite nonzero evaluation point, got {x0}"
        )));
    }
    if q.is_one() {
        return Err(Error::Domain(
            "Jackson quotient is undefined at q = 1".into(),
        ));
    }
    let qv = q.get();
    Ok((f(qv * x0) - f(x0 / qv)) / (x0 * (qv - qv.recip())))
}

/// Verifies, exactly, that the Jackson derivative satisfies the deformed
/// commutation relation on `f`:
///
/// ```text
/// (D X - q X D) f = q^{-N} f
/// ```
///
/// together with its bracket form `([N] X - q X [N]) f = X q^{-N} f`.
/// `f` must be symbolic.
pub fn check_deformed_heisenberg(f: &FormalSeries) -> Result<bool> {
    let sym = QParam::Symbolic;
    let q = LaurentPoly::monomial(1);

    let d_xf = jackson_derivative(&f.mul_x(), &sym)?;
    let x_df = jackson_derivative(f, &sym)?.mul_x();
    let lhs = d_xf.sub(&x_df.coeff_mul(&q)?)?;
    let rhs = scale(f, ScaleDirection::Down, &sym)?;
    let commutator_holds = lhs == rhs;

    let n_xf = bracket_theta(&f.mul_x(), &sym)?;
    let x_nf = bracket_theta(f, &sym)?.mul_x();
    let lhs_bracket = n_xf.sub(&x_nf.coeff_mul(&q)?)?;
    let rhs_bracket = scale(f, ScaleDirection::Down, &sym)?.mul_x();
    let bracket_holds = lhs_bracket == rhs_bracket;

    Ok(commutator_holds && bracket_holds)
}

/// Verifies the shift identities as operator statements on every monomial
/// `x^m`, `0 <= m <= n_max`, exactly:
///
/// ```text
/// [N] X = X [N+1]           (realized through the bracket recursion)
/// (-q)^N X = X (-q)^{N+1}
/// ```
///
/// The left side applies the shifted operator directly; the right side
/// builds the shift from the recursion `[m+1] = q [m] + q^{-m}` (first
/// identity) or from multiplication by the monomial `-q` (second), so the
/// two sides go through genuinely different arithmetic.
pub fn check_shift_identities(n_max: u32) -> bool {
    let sym = QParam::Symbolic;
    let minus_q = LaurentPoly::monomial(1).neg();
    for m in 0..=i64::from(n_max) {
        let xm = FormalSeries::monomial(m);

        let lhs = match bracket_theta(&xm.mul_x(), &sym) {
            Ok(s) => s,
            Err(_) => return false,
        };
        let recursion_route = (|| -> Result<FormalSeries> {
            let q_bracket = bracket_theta(&xm, &sym)?.coeff_mul(&LaurentPoly::monomial(1))?;
            let down = scale(&xm, ScaleDirection::Down, &sym)?;
            Ok(q_bracket.add(&down)?.mul_x())
        })();
        match recursion_route {
            Ok(rhs) if lhs == rhs => {}
            _ => return false,
        }

        let sign_route = (|| -> Result<FormalSeries> {
            let lhs = signed_scale(&xm.mul_x())?;
            let rhs = signed_scale(&xm)?.coeff_mul(&minus_q)?.mul_x();
            lhs.sub(&rhs)
        })();
        match sign_route {
            Ok(residual) if residual.is_zero() => {}
            _ => return false,
        }
    }
    true
}

/// The sign-tracking scaling operator `(-q)^N`: `c x^m -> ((-q)^m c) x^m`.
/// Symbolic only: the sign `(-1)^m` needs an integer exponent.
pub fn signed_scale(f: &FormalSeries) -> Result<FormalSeries> {
    match &f.repr {
        Repr::Symbolic(m) => Ok(FormalSeries::symbolic(m.iter().map(|(&r, c)| {
            let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
            (r, c.mul(&LaurentPoly::monomial(r).scaled(&rat(sign, 1))))
        }))),
        Repr::Numeric(_) => Err(Error::ModeMismatch(
            "sign-tracking scaling needs integer exponents".into(),
        )),
    }
}

/// Solves `D X - q X D = q^{-N}` degree by degree for an operator of the
/// form `D x^m = d_m x^{m-1}` on the polynomial monomial basis.
///
/// Requiring `D` to keep polynomials polynomial forces `d_0 = 0`, and the
/// relation applied to `x^m` then gives `d_{m+1} = q d_m + q^{-m}`. The
/// returned coefficients `d_0 ... d_{n_max}` therefore belong to the unique
/// degree-diagonal solution; they must come out equal to the brackets `[m]`.
pub fn solve_heisenberg_coefficients(n_max: u32) -> Vec<LaurentPoly> {
    let q = LaurentPoly::monomial(1);
    let mut coeffs = vec![LaurentPoly::zero()];
    for m in 0..i64::from(n_max) {
        let next = q.mul(&coeffs[m as usize]).add(&LaurentPoly::monomial(-m));
        coeffs.push(next);
    }
    coeffs
}

/// Applies the truncated exponential series for `q^theta`,
/// `sum_k (theta ln q)^k / k!`, to a numeric series. A diagnostic route to
/// the scaling operator: the result must approach `scale(f, Up, q)` as the
/// truncation order grows.
pub fn exp_scale_series(f: &FormalSeries, q: QValue, terms: usize) -> Result<FormalSeries> {
    let Repr::Numeric(v) = &f.repr else {
        return Err(Error::ModeMismatch(
            "exponential-series scaling acts on numeric series; convert with to_numeric".into(),
        ));
    };
    let ln_q = q.get().ln();
    FormalSeries::numeric(v.iter().map(|&(r, c)| {
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 0..terms {
            if k > 0 {
                term *= r * ln_q / k as f64;
            }
            sum += term;
        }
        (r, c * sum)
    }))
}

/// The action carried by a [`LinearOperator`]. `Send + Sync` so operators
/// share across parameter sweeps like every other value in the crate.
pub type OperatorAction = Box<dyn Fn(&FormalSeries) -> Result<FormalSeries> + Send + Sync>;

/// A named linear operator on formal series.
pub struct LinearOperator {
    name: String,
    action: OperatorAction,
}

impl LinearOperator {
    pub fn new(
        name: impl Into<String>,
        action: impl Fn(&FormalSeries) -> Result<FormalSeries> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            action: Box::new(action),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, f: &FormalSeries) -> Result<FormalSeries> {
        (self.action)(f)
    }

    /// Composition `self ∘ inner`.
    pub fn after(self, inner: LinearOperator) -> LinearOperator {
        let name = format!("{} ∘ {}", self.name, inner.name);
        LinearOperator::new(name, move |f| (self.action)(&(inner.action)(f)?))
    }

    /// The dilatation operator.
    pub fn dilatation() -> Self {
        Self::new("theta", |f| Ok(theta(f)))
    }

    /// Multiplication by `x`.
    pub fn mul_x() -> Self {
        Self::new("X", |f| Ok(f.mul_x()))
    }

    /// The scaling operator `q^{±N}`.
    pub fn scaling(direction: ScaleDirection, q: QParam) -> Self {
        let name = match direction {
            ScaleDirection::Up => "q^N",
            ScaleDirection::Down => "q^-N",
        };
        Self::new(name, move |f| scale(f, direction, &q))
    }

    /// The Jackson derivative.
    pub fn jackson(q: QParam) -> Self {
        Self::new("D", move |f| jackson_derivative(f, &q))
    }

    /// The bracket of the dilatation operator, `[N]`.
    pub fn bracket(q: QParam) -> Self {
        Self::new("[N]", move |f| bracket_theta(f, &q))
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearOperator")
            .field("name", &self.name)
            .finish()
    }
}
