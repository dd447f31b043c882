//! Exact Laurent-polynomial arithmetic in the deformation parameter `q`.
//!
//! A [`LaurentPoly`] is a finite sum of terms `c * q^e` with rational
//! coefficients and integer exponents of either sign. Values are kept in
//! canonical form — no zero coefficient is ever stored, every coefficient is
//! a reduced fraction — so equality is structural and an identity check
//! reduces to "the difference of the two sides has an empty term map".
//!
//! Coefficients are arbitrary-precision: bracket numbers up to `[64]` and
//! their products overflow machine words long before the identities of
//! interest are exhausted. Exponents are machine integers; overflowing them
//! is a checked error ([`try_mul`](LaurentPoly::try_mul)), never wraparound.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Coefficient field: arbitrary-precision rationals, stored in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small rational constants.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A Laurent polynomial in `q` over the rationals, in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0)
    }

    /// A small integer constant.
    pub fn from_int(n: i64) -> Self {
        Self::term(rat(n, 1), 0)
    }

    /// The monomial `q^exponent`.
    pub fn monomial(exponent: i64) -> Self {
        Self::term(Rational::one(), exponent)
    }

    /// The single term `coefficient * q^exponent`.
    pub fn term(coefficient: Rational, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// duplicate exponents and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.insert_term(e, c);
        }
        out
    }

    fn insert_term(&mut self, exponent: i64, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coefficient;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// The coefficient of `q^exponent` (zero if absent).
    pub fn coeff(&self, exponent: i64) -> Rational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.insert_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.insert_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    /// Convolution product; exponent overflow is reported, not wrapped.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1.checked_add(e2).ok_or(Error::ExponentOverflow)?;
                out.insert_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Convolution product. Panics on exponent overflow; use
    /// [`try_mul`](Self::try_mul) where the exponents are not under control.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other)
            .expect("exponent overflow in Laurent product")
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scaled(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact division: returns `c` with `divisor * c == self`, or
    /// [`Error::NonExactDivision`] when no such Laurent polynomial exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let b_min = divisor.min_exponent().unwrap();
        let b_max = divisor.max_exponent().unwrap();
        let b_low = divisor.coeff(b_min);
        // Any exact quotient has exponents within [a_min - b_min, a_max - b_max].
        let e_limit = self.max_exponent().unwrap() - b_max;

        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(a_min) = rem.min_exponent() {
            let e = a_min - b_min;
            if e > e_limit {
                return Err(Error::NonExactDivision {
                    remainder: rem.to_string(),
                });
            }
            let c = rem.coeff(a_min) / &b_low;
            for (be, bc) in divisor.terms() {
                rem.insert_term(be + e, -(bc * &c));
            }
            quotient.insert_term(e, c);
        }
        Ok(quotient)
    }

    /// Evaluates at a positive real `q0`. Evaluation is a ring homomorphism
    /// up to rounding.
    pub fn eval(&self, q0: f64) -> Result<f64> {
        if !q0.is_finite() || q0 <= 0.0 {
            return Err(Error::Domain(format!(
                "evaluation point must be a positive real, got {q0}"
            )));
        }
        let mut sum = 0.0;
        for (e, c) in self.terms() {
            sum += rational_to_f64(c) * pow_f64(q0, e);
        }
        Ok(sum)
    }

    /// Substitutes `q -> q^-1`, i.e. negates every exponent.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact value at `q = 1`: the sum of all coefficients.
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// Nearest-double value of a rational.
pub fn rational_to_f64(c: &Rational) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn pow_f64(base: f64, exponent: i64) -> f64 {
    match i32::try_from(exponent) {
        Ok(e) => base.powi(e),
        Err(_) => base.powf(exponent as f64),
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

/// Renders as a sorted sum with descending exponents, e.g. `q^2 + 1 + q^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses the [`Display`](fmt::Display) format back, e.g. `q^2 + 1 + q^-2`
/// or `-q + 3/2*q^-1`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Domain("empty polynomial string".into()));
        }
        let mut pairs = Vec::new();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        }
        loop {
            let split = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if p < m => Some((p, false)),
                (Some(_), Some(m)) => Some((m, true)),
                (Some(p), None) => Some((p, false)),
                (None, Some(m)) => Some((m, true)),
                (None, None) => None,
            };
            let token = match split {
                Some((idx, _)) => &rest[..idx],
                None => rest,
            };
            let (e, c) = parse_term(token.trim())?;
            pairs.push((e, if negative { -c } else { c }));
            match split {
                Some((idx, next_negative)) => {
                    negative = next_negative;
                    rest = &rest[idx + 3..];
                }
                None => break,
            }
        }
        Ok(Self::from_terms(pairs))
    }
}

fn parse_term(token: &str) -> Result<(i64, Rational)> {
    if token.is_empty() {
        return Err(Error::Domain("empty term in polynomial string".into()));
    }
    let Some(qpos) = token.find('q') else {
        return Ok((0, parse_rational(token)?));
    };
    let coeff_str = token[..qpos].trim().trim_end_matches('*').trim();
    let coeff = if coeff_str.is_empty() {
        Rational::one()
    } else {
        parse_rational(coeff_str)?
    };
    let after = token[qpos + 1..].trim();
    let exponent = if after.is_empty() {
        1
    } else if let Some(e) = after.strip_prefix('^') {
        e.trim()
            .parse::<i64>()
            .map_err(|_| Error::Domain(format!("bad exponent in term `{token}`")))?
    } else {
        return Err(Error::Domain(format!("malformed term `{token}`")));
    };
    Ok((exponent, coeff))
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|_| Error::Domain(format!("bad rational coefficient `{s}`")))
}
