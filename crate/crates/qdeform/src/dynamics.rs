//! Heisenberg-picture time evolution of ladder operators under the
//! undeformed and deformed equations of motion.
//!
//! The evolution equation is `i dF/dt = F H - λ H F` (ħ = 1 throughout),
//! with the coefficient λ selecting the variant: λ = 1 is the ordinary
//! commutator equation, λ = q and λ = q⁻¹ are its deformed relatives. Every
//! Hamiltonian here is diagonal in the number basis with closed-form level
//! energies:
//!
//! ```text
//! BosonSym            E_n = ω/2 ([n] + [n+1])
//! BosonNonsym         E_n = ω/2 ([n]' + [n+1]')
//! StandardFermion     E_n = ω/2 ([n] - [1-n])   = ∓ω/2 on n = 0, 1
//! GeneralizedFermion  E_n = ω/2 ([n]_F - [n+1]_F)
//! ```
//!
//! so the equation decouples per matrix element and has the exact solution
//! `F_mn(t) = F_mn(0) exp(-i t (E_n - λ E_m))` — every element is a pure
//! phase. [`exact_evolution`] implements that solution and serves as the
//! oracle; [`integrate_evolution`] integrates the same equation with a
//! classical fixed-step fourth-order scheme and must land on the oracle to
//! tight tolerance.
//!
//! The q-dependent factors multiplying ω in the element phase rates have
//! closed forms; [`closed_form_frequency`] compares them against the exact
//! element frequency under the two operator orderings an `a f(N)` product
//! admits (`N -> n` or `N -> n-1` on the element `(n-1, n)`) and reports
//! which one matched. For the generalized fermion under λ = q⁻¹ the factor
//! `((-q)^N - (-q)^{N-1})/2` agrees in magnitude but disagrees in sign for
//! every `n` under both orderings; that is a documented finding, surfaced
//! as [`Error::NoOrderingMatches`], and [`closed_form_frequency_magnitude`]
//! records the magnitude agreement.

use num_complex::Complex64;

use crate::fock::{annihilator, FockRep, OperatorMatrix, RepKind};
use crate::laurent::{pow_f64, rat, LaurentPoly};
use crate::qnum::{basic_int, BasicNumberKind, QValue};
use crate::{Error, Result};

/// Which evolution equation: `i dF/dt = F H - λ H F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HVariant {
    /// λ = 1, the ordinary commutator equation.
    Undeformed,
    /// λ = q.
    DeformedQ,
    /// λ = q⁻¹.
    DeformedQinv,
}

impl HVariant {
    pub fn label(self) -> &'static str {
        match self {
            Self::Undeformed => "undeformed",
            Self::DeformedQ => "deformed-q",
            Self::DeformedQinv => "deformed-qinv",
        }
    }

    pub fn lambda(self, q: QValue) -> f64 {
        match self {
            Self::Undeformed => 1.0,
            Self::DeformedQ => q.get(),
            Self::DeformedQinv => q.get().recip(),
        }
    }

    pub fn lambda_symbolic(self) -> LaurentPoly {
        match self {
            Self::Undeformed => LaurentPoly::one(),
            Self::DeformedQ => LaurentPoly::monomial(1),
            Self::DeformedQinv => LaurentPoly::monomial(-1),
        }
    }
}

/// Which Hamiltonian family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    BosonSym,
    BosonNonsym,
    StandardFermion,
    GeneralizedFermion,
}

impl ModelKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::BosonSym => "boson-sym",
            Self::BosonNonsym => "boson-nonsym",
            Self::StandardFermion => "std-fermion",
            Self::GeneralizedFermion => "gen-fermion",
        }
    }

    /// The representation kind this Hamiltonian is built on.
    pub fn rep_kind(self) -> RepKind {
        match self {
            Self::BosonSym => RepKind::Boson,
            Self::BosonNonsym => RepKind::BosonNonsym,
            Self::StandardFermion => RepKind::StandardFermion,
            Self::GeneralizedFermion => RepKind::GeneralizedFermion,
        }
    }
}

/// A Hamiltonian family with its angular frequency (ħ = 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianModel {
    kind: ModelKind,
    omega: f64,
}

impl HamiltonianModel {
    pub fn new(kind: ModelKind, omega: f64) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::Domain(format!(
                "angular frequency must be a finite positive real, got {omega}"
            )));
        }
        Ok(Self { kind, omega })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// Level energy `E_n` for a model at a concrete `q`.
pub fn level_energy(kind: ModelKind, n: u32, omega: f64, q: QValue) -> Result<f64> {
    Ok(level_energy_symbolic(kind, n)?.eval(q.get())? * omega)
}

/// Level energy `E_n` in units of ħω, as an exact Laurent polynomial.
pub fn level_energy_symbolic(kind: ModelKind, n: u32) -> Result<LaurentPoly> {
    use BasicNumberKind::*;
    let half = rat(1, 2);
    match kind {
        ModelKind::BosonSym => Ok(basic_int(BosonSymmetric, n)
            .add(&basic_int(BosonSymmetric, n + 1))
            .scaled(&half)),
        ModelKind::BosonNonsym => Ok(basic_int(BosonNonsymmetric, n)
            .add(&basic_int(BosonNonsymmetric, n + 1))
            .scaled(&half)),
        ModelKind::StandardFermion => match n {
            // E_n = ω/2 ([n] - [1-n]); [0] = 0 and [1] = 1 for every q
            0 => Ok(LaurentPoly::constant(rat(-1, 2))),
            1 => Ok(LaurentPoly::constant(rat(1, 2))),
            _ => Err(Error::Domain(format!(
                "standard fermion levels are n = 0, 1 only; got {n}"
            ))),
        },
        ModelKind::GeneralizedFermion => Ok(basic_int(Fermion, n)
            .sub(&basic_int(Fermion, n + 1))
            .scaled(&half)),
    }
}

/// An evolution problem: a representation, a compatible Hamiltonian, an
/// equation variant, and the operator to evolve (the annihilator unless
/// overridden).
#[derive(Clone, Debug)]
pub struct EvolutionSpec {
    rep: FockRep,
    model: HamiltonianModel,
    variant: HVariant,
    initial: OperatorMatrix,
    energies: Vec<f64>,
}

impl EvolutionSpec {
    pub fn new(rep: FockRep, model: HamiltonianModel, variant: HVariant) -> Result<Self> {
        if model.kind().rep_kind() != rep.kind() {
            return Err(Error::IncompatibleKinds {
                model: model.kind().label().into(),
                rep: rep.kind().label().into(),
            });
        }
        let initial = annihilator(&rep);
        let energies = (0..rep.dim() as u32)
            .map(|n| level_energy(model.kind(), n, model.omega(), rep.q()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rep,
            model,
            variant,
            initial,
            energies,
        })
    }

    /// Replaces the evolved operator.
    pub fn with_initial(mut self, initial: OperatorMatrix) -> Result<Self> {
        if initial.dim() != self.rep.dim() {
            return Err(Error::Domain(format!(
                "initial operator dimension {} does not match representation dimension {}",
                initial.dim(),
                self.rep.dim()
            )));
        }
        self.initial = initial;
        Ok(self)
    }

    pub fn rep(&self) -> &FockRep {
        &self.rep
    }

    pub fn model(&self) -> &HamiltonianModel {
        &self.model
    }

    pub fn variant(&self) -> HVariant {
        self.variant
    }

    pub fn initial(&self) -> &OperatorMatrix {
        &self.initial
    }

    /// The level energies `E_0 ... E_{dim-1}`.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }
}

/// The Hamiltonian matrix: diagonal with the closed-form level energies.
pub fn hamiltonian(spec: &EvolutionSpec) -> OperatorMatrix {
    OperatorMatrix::from_diagonal(spec.energies())
}

/// The exact solution at time `t`:
/// `F_mn(t) = F_mn(0) exp(-i t (E_n - λ E_m))`.
pub fn exact_evolution(spec: &EvolutionSpec, t: f64) -> OperatorMatrix {
    let energies = spec.energies();
    let lambda = spec.variant().lambda(spec.rep().q());
    let mut data = spec.initial().data().clone();
    for ((m, n), z) in data.indexed_iter_mut() {
        let rate = energies[n] - lambda * energies[m];
        *z *= Complex64::new(0.0, -rate * t).exp();
    }
    OperatorMatrix::from_array(data).expect("phases keep entries finite")
}

/// Fixed-step fourth-order integration of `dF/dt = -i (F H - λ H F)` from
/// `F(0)`, returning the matrices at `t_k = k t_end / steps` for
/// `k = 0 ..= steps`.
pub fn integrate_evolution(spec: &EvolutionSpec, t_end: f64, steps: usize) -> Vec<OperatorMatrix> {
    assert!(steps >= 1, "integration needs at least one step");
    let h = t_end / steps as f64;
    let h_c = Complex64::new(h, 0.0);
    let lambda = Complex64::new(spec.variant().lambda(spec.rep().q()), 0.0);
    let hmat = hamiltonian(spec).data().clone();
    let minus_i = Complex64::new(0.0, -1.0);

    let rhs = |f: &ndarray::Array2<Complex64>| {
        let fh = f.dot(&hmat);
        let hf = hmat.dot(f);
        (fh - hf.mapv(|z| z * lambda)).mapv(|z| z * minus_i)
    };

    let mut f = spec.initial().data().clone();
    let mut out = Vec::with_capacity(steps + 1);
    out.push(OperatorMatrix::from_array(f.clone()).expect("finite initial operator"));
    for _ in 0..steps {
        let k1 = rhs(&f);
        let k2 = rhs(&(&f + &k1.mapv(|z| z * h_c / 2.0)));
        let k3 = rhs(&(&f + &k2.mapv(|z| z * h_c / 2.0)));
        let k4 = rhs(&(&f + &k3.mapv(|z| z * h_c)));
        f = &f + &(k1 + k2.mapv(|z| z * 2.0) + k3.mapv(|z| z * 2.0) + k4).mapv(|z| z * h_c / 6.0);
        out.push(OperatorMatrix::from_array(f.clone()).expect("integration stayed finite"));
    }
    out
}

/// The exact phase rate of the element `(m, n)`: `E_n - λ E_m`.
pub fn element_frequency(
    model: &HamiltonianModel,
    variant: HVariant,
    q: QValue,
    m: u32,
    n: u32,
) -> Result<f64> {
    let e_n = level_energy(model.kind(), n, model.omega(), q)?;
    let e_m = level_energy(model.kind(), m, model.omega(), q)?;
    Ok(e_n - variant.lambda(q) * e_m)
}

/// The exact phase rate of the ladder element `(n-1, n)` in units of ω,
/// as a Laurent polynomial: `E_n - λ E_{n-1}` with λ symbolic.
pub fn element_frequency_symbolic(
    kind: ModelKind,
    variant: HVariant,
    n: u32,
) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::Domain(
            "ladder elements are labeled by n >= 1".into(),
        ));
    }
    let e_n = level_energy_symbolic(kind, n)?;
    let e_prev = level_energy_symbolic(kind, n - 1)?;
    Ok(e_n.sub(&variant.lambda_symbolic().mul(&e_prev)))
}

/// Which substitution of the operator `N` matched the exact frequency.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NOrdering {
    /// `N -> n` on the element `(n-1, n)`: the factor stood right of the
    /// ladder operator.
    AtN,
    /// `N -> n-1`: the factor stood left of the ladder operator.
    AtPredecessor,
}

impl NOrdering {
    pub fn label(self) -> &'static str {
        match self {
            Self::AtN => "at-n",
            Self::AtPredecessor => "at-predecessor",
        }
    }
}

/// The closed-form frequency factor (multiplier of ω) for the model/variant
/// combinations that have one, evaluated with `N -> n_sub`.
pub fn closed_form_factor(
    kind: ModelKind,
    variant: HVariant,
    n_sub: i64,
    q: QValue,
) -> Result<f64> {
    let qv = q.get();
    let m = n_sub;
    match (kind, variant) {
        (ModelKind::BosonSym, HVariant::Undeformed) => Ok((pow_f64(qv, m) + pow_f64(qv, -m)) / 2.0),
        (ModelKind::BosonSym, HVariant::DeformedQ) => {
            Ok((pow_f64(qv, -m - 1) + pow_f64(qv, -m)) / 2.0)
        }
        (ModelKind::BosonSym, HVariant::DeformedQinv) => {
            Ok((pow_f64(qv, m) + pow_f64(qv, m - 1)) / 2.0)
        }
        (ModelKind::BosonNonsym, HVariant::DeformedQ) => Ok(1.0),
        (ModelKind::StandardFermion, HVariant::DeformedQinv) => {
            Ok((pow_f64(qv, m - 1) + pow_f64(qv, m - 2)) / 2.0)
        }
        (ModelKind::GeneralizedFermion, HVariant::DeformedQinv) => {
            let minus_q = -qv;
            Ok((pow_f64(minus_q, m) - pow_f64(minus_q, m - 1)) / 2.0)
        }
        _ => Err(Error::NoClosedForm {
            model: kind.label().into(),
            variant: variant.label().into(),
        }),
    }
}

/// The closed-form factor as an exact Laurent polynomial with the
/// substitution `N -> n_sub`. Sign factors `(-1)^{n_sub}` stay exact.
pub fn closed_form_factor_symbolic(
    kind: ModelKind,
    variant: HVariant,
    n_sub: i64,
) -> Result<LaurentPoly> {
    let half = rat(1, 2);
    let m = n_sub;
    match (kind, variant) {
        (ModelKind::BosonSym, HVariant::Undeformed) => Ok(LaurentPoly::monomial(m)
            .add(&LaurentPoly::monomial(-m))
            .scaled(&half)),
        (ModelKind::BosonSym, HVariant::DeformedQ) => Ok(LaurentPoly::monomial(-m - 1)
            .add(&LaurentPoly::monomial(-m))
            .scaled(&half)),
        (ModelKind::BosonSym, HVariant::DeformedQinv) => Ok(LaurentPoly::monomial(m)
            .add(&LaurentPoly::monomial(m - 1))
            .scaled(&half)),
        (ModelKind::BosonNonsym, HVariant::DeformedQ) => Ok(LaurentPoly::one()),
        (ModelKind::StandardFermion, HVariant::DeformedQinv) => Ok(LaurentPoly::monomial(m - 1)
            .add(&LaurentPoly::monomial(m - 2))
            .scaled(&half)),
        (ModelKind::GeneralizedFermion, HVariant::DeformedQinv) => {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            // (-q)^m - (-q)^(m-1) = (-1)^m (q^m + q^(m-1))
            Ok(LaurentPoly::monomial(m)
                .add(&LaurentPoly::monomial(m - 1))
                .scaled(&rat(sign, 2)))
        }
        _ => Err(Error::NoClosedForm {
            model: kind.label().into(),
            variant: variant.label().into(),
        }),
    }
}

/// A closed-form factor that matched the exact element frequency.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrequencyMatch {
    /// The matched frequency (radians per unit time).
    pub frequency: f64,
    /// Which substitution of `N` produced it.
    pub ordering: NOrdering,
}

fn match_candidates(oracle: f64, at_n: f64, at_predecessor: f64) -> Result<FrequencyMatch> {
    let tol = 1e-12 * oracle.abs().max(1.0);
    if (at_n - oracle).abs() <= tol {
        Ok(FrequencyMatch {
            frequency: at_n,
            ordering: NOrdering::AtN,
        })
    } else if (at_predecessor - oracle).abs() <= tol {
        Ok(FrequencyMatch {
            frequency: at_predecessor,
            ordering: NOrdering::AtPredecessor,
        })
    } else {
        Err(Error::NoOrderingMatches {
            oracle,
            at_n,
            at_predecessor,
        })
    }
}

/// Evaluates the closed-form factor for the ladder element `(n-1, n)` under
/// both candidate substitutions of `N` and returns the one equal to the
/// exact frequency `E_n - λ E_{n-1}`, reporting which ordering matched.
///
/// For the generalized fermion under λ = q⁻¹ neither ordering matches: the
/// factor has the right magnitude and the wrong sign for every `n`. That
/// case returns [`Error::NoOrderingMatches`]; see
/// [`closed_form_frequency_magnitude`].
pub fn closed_form_frequency(
    model: &HamiltonianModel,
    variant: HVariant,
    n: u32,
    q: QValue,
) -> Result<FrequencyMatch> {
    if n == 0 {
        return Err(Error::Domain(
            "ladder elements are labeled by n >= 1".into(),
        ));
    }
    let oracle = element_frequency(model, variant, q, n - 1, n)?;
    let omega = model.omega();
    let at_n = omega * closed_form_factor(model.kind(), variant, i64::from(n), q)?;
    let at_pred = omega * closed_form_factor(model.kind(), variant, i64::from(n) - 1, q)?;
    match_candidates(oracle, at_n, at_pred)
}

/// Like [`closed_form_frequency`] but compares magnitudes, for the closed form
/// whose sign disagrees with the exact solution.
pub fn closed_form_frequency_magnitude(
    model: &HamiltonianModel,
    variant: HVariant,
    n: u32,
    q: QValue,
) -> Result<FrequencyMatch> {
    if n == 0 {
        return Err(Error::Domain(
            "ladder elements are labeled by n >= 1".into(),
        ));
    }
    let oracle = element_frequency(model, variant, q, n - 1, n)?.abs();
    let omega = model.omega();
    let at_n = (omega * closed_form_factor(model.kind(), variant, i64::from(n), q)?).abs();
    let at_pred = (omega * closed_form_factor(model.kind(), variant, i64::from(n) - 1, q)?).abs();
    match_candidates(oracle, at_n, at_pred)
}
