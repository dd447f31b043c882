//! Truncated Fock-space matrix representations of the deformed ladder
//! algebras.
//!
//! Each representation lives on the number basis `|0>, ..., |dim-1>`. The
//! annihilator has the familiar bidiagonal shape with bracket-number matrix
//! elements,
//!
//! ```text
//! a = | 0  sqrt([1])    0         ...  |
//!     | 0     0      sqrt([2])    ...  |
//!     | .     .         .       sqrt([dim-1]) |
//!     | 0     0         0          0   |
//! ```
//!
//! with the bracket family chosen by the representation kind, and the
//! defining relation is
//!
//! ```text
//! Boson               a a† - q a† a = q^{-N}
//! BosonNonsym         a a† - q a† a = 1
//! StandardFermion     b b† + q^-1 b† b = q^{-N}     (dim = 2 exactly)
//! GeneralizedFermion  b b† + q b† b = q^{-N}        (0 < q < 1)
//! ```
//!
//! On a finite space the relation cannot close on the top state — `a` has
//! nowhere to lower it from — so [`relation_residual`] projects out the top
//! row and column before taking the norm. The standard fermion case needs no
//! projection: at dim 2 the relation closes exactly.
//!
//! Residuals are scale-normalized per entry. Bracket numbers grow like
//! `q^dim`, and at dim 64, q = 2 the entries reach 1e19, where even a
//! correctly rounded sqrt/square pair leaves absolute residuals far above
//! any useful tolerance; dividing by the magnitude of the terms entering an
//! entry keeps the residual a measure of the algebra rather than of float
//! granularity, while staying identical to the absolute residual for
//! entries of order one.

use ndarray::Array2;
use num_complex::Complex64;

use crate::jackson::ScaleDirection;
use crate::laurent::pow_f64;
use crate::qnum::{basic_int, BasicNumberKind, QValue};
use crate::{Error, Result};

/// A dense complex square matrix acting on the truncated number basis.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    data: Array2<Complex64>,
}

impl OperatorMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            data: Array2::zeros((dim, dim)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diagonal(&vec![1.0; dim])
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (n, &v) in diag.iter().enumerate() {
            m.data[[n, n]] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Wraps a raw array; all entries must be finite.
    pub fn from_array(data: Array2<Complex64>) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::Domain("operator matrices must be square".into()));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain(
                "operator matrices must have finite entries".into(),
            ));
        }
        Ok(Self { data })
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn data(&self) -> &Array2<Complex64> {
        &self.data
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[[row, col]]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self {
            data: self.data.t().mapv(|z| z.conj()),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn dot(&self, rhs: &Self) -> Self {
        Self {
            data: self.data.dot(&rhs.data),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            data: &self.data + &rhs.data,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            data: &self.data - &rhs.data,
        }
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self {
            data: self.data.mapv(|z| z * s),
        }
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude over the difference `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        self.sub(rhs).max_abs()
    }
}

/// Which deformed ladder algebra a representation carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepKind {
    /// Symmetric q-boson: `a a† - q a† a = q^{-N}`.
    Boson,
    /// Nonsymmetric q-boson: `a a† - q a† a = 1`.
    BosonNonsym,
    /// Standard q-fermion on the two-state space: `b b† + q^-1 b† b = q^{-N}`.
    StandardFermion,
    /// Generalized q-fermion with unbounded occupation:
    /// `b b† + q b† b = q^{-N}`.
    GeneralizedFermion,
}

impl RepKind {
    pub fn label(self) -> &'static str {
        match self {
            Self::Boson => "boson",
            Self::BosonNonsym => "boson-nonsym",
            Self::StandardFermion => "std-fermion",
            Self::GeneralizedFermion => "gen-fermion",
        }
    }

    /// The bracket family supplying the ladder matrix elements.
    pub fn bracket_kind(self) -> BasicNumberKind {
        match self {
            Self::Boson => BasicNumberKind::BosonSymmetric,
            Self::BosonNonsym => BasicNumberKind::BosonNonsymmetric,
            Self::StandardFermion | Self::GeneralizedFermion => BasicNumberKind::Fermion,
        }
    }
}

/// A validated truncated representation: dimension, deformation parameter,
/// and algebra kind.
///
/// Standard fermions require `dim = 2` (the number operator has eigenvalues
/// 0 and 1 only). Generalized fermions require `0 < q < 1`: that is the
/// range on which every fermion bracket `[n]_F` is nonnegative, so the
/// ladder matrix elements `sqrt([n]_F)` stay real. For `q > 1` the brackets
/// alternate in sign and no Hermitian ladder pair of this shape exists.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FockRep {
    kind: RepKind,
    q: QValue,
    dim: usize,
}

impl FockRep {
    pub fn new(kind: RepKind, q: QValue, dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!(
                "representation dimension must be at least 2, got {dim}"
            )));
        }
        match kind {
            RepKind::StandardFermion if dim != 2 => {
                return Err(Error::Domain(format!(
                    "standard fermions live on a two-state space; got dim {dim}"
                )));
            }
            RepKind::GeneralizedFermion if q.get() >= 1.0 => {
                return Err(Error::Domain(format!(
                    "generalized fermions need 0 < q < 1 for real ladder elements; got q = {}",
                    q.get()
                )));
            }
            _ => {}
        }
        Ok(Self { kind, q, dim })
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn q(&self) -> QValue {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// The number operator: `diag(0, 1, ..., dim-1)`.
pub fn number_operator(rep: &FockRep) -> OperatorMatrix {
    OperatorMatrix::from_diagonal(&(0..rep.dim()).map(|n| n as f64).collect::<Vec<_>>())
}

/// The diagonal scaling operator `q^{±N}`.
pub fn q_power_number(rep: &FockRep, direction: ScaleDirection) -> OperatorMatrix {
    let q = rep.q().get();
    let sign = direction.signum();
    OperatorMatrix::from_diagonal(
        &(0..rep.dim())
            .map(|n| pow_f64(q, sign * n as i64))
            .collect::<Vec<_>>(),
    )
}

/// The bracket value `[n]` feeding the ladder element at level `n`.
fn ladder_value(rep: &FockRep, n: u32) -> f64 {
    let v = basic_int(rep.kind().bracket_kind(), n)
        .eval(rep.q().get())
        .expect("q is validated positive");
    // nonnegative by the FockRep invariants; a violation here is a bug
    assert!(
        v >= 0.0,
        "bracket [{n}] is negative ({v}) for {} at q = {}",
        rep.kind().label(),
        rep.q().get()
    );
    v
}

/// The annihilator: nonzero entries `a[n-1, n] = sqrt([n])` only.
pub fn annihilator(rep: &FockRep) -> OperatorMatrix {
    let mut m = OperatorMatrix::zeros(rep.dim());
    for n in 1..rep.dim() {
        m.data[[n - 1, n]] = Complex64::new(ladder_value(rep, n as u32).sqrt(), 0.0);
    }
    m
}

/// The creator: the conjugate transpose of the annihilator.
pub fn creator(rep: &FockRep) -> OperatorMatrix {
    annihilator(rep).dagger()
}

/// The defining relation's left side minus its right side, for a given
/// ladder matrix: `a a† ∓ λ a† a - rhs` with the sign, coefficient λ and
/// right side fixed by the representation kind.
fn relation_terms(
    rep: &FockRep,
    ladder: &OperatorMatrix,
) -> (OperatorMatrix, OperatorMatrix, OperatorMatrix) {
    let q = rep.q().get();
    let a_ad = ladder.dot(&ladder.dagger());
    let ad_a = ladder.dagger().dot(ladder);
    let (coef, rhs) = match rep.kind() {
        RepKind::Boson => (-q, q_power_number(rep, ScaleDirection::Down)),
        RepKind::BosonNonsym => (-q, OperatorMatrix::identity(rep.dim())),
        RepKind::StandardFermion => (1.0 / q, q_power_number(rep, ScaleDirection::Down)),
        RepKind::GeneralizedFermion => (q, q_power_number(rep, ScaleDirection::Down)),
    };
    (a_ad, ad_a.scaled(Complex64::new(coef, 0.0)), rhs)
}

/// The relation residual for the representation's own ladder matrices.
pub fn relation_residual(rep: &FockRep) -> f64 {
    relation_residual_with(rep, &annihilator(rep))
}

/// The relation residual for an arbitrary candidate ladder matrix.
///
/// Computes the kind's defining relation, projects out the top basis state
/// (except for standard fermions, where the relation closes exactly at
/// dim 2), and returns the largest scale-normalized entry of the result:
/// each entry of `lhs - rhs` is divided by the magnitude of the largest
/// term that built it, floored at one.
pub fn relation_residual_with(rep: &FockRep, ladder: &OperatorMatrix) -> f64 {
    let (t1, t2, rhs) = relation_terms(rep, ladder);
    let residual = t1.add(&t2).sub(&rhs);
    let project = rep.kind() != RepKind::StandardFermion;
    let top = rep.dim() - 1;
    let mut worst = 0.0f64;
    for ((i, j), r) in residual.data().indexed_iter() {
        if project && (i == top || j == top) {
            continue;
        }
        let scale = t1
            .entry(i, j)
            .norm()
            .max(t2.entry(i, j).norm())
            .max(rhs.entry(i, j).norm())
            .max(1.0);
        worst = worst.max(r.norm() / scale);
    }
    worst
}

/// Residuals of the two auxiliary shift relations for the boson kind:
/// `q^N a = a q^{N-1}` and `[N] a = a [N-1]`, both measured off the top
/// basis state.
pub fn aux_relation_residuals(rep: &FockRep) -> (f64, f64) {
    assert!(
        rep.kind() == RepKind::Boson,
        "auxiliary shift relations are stated for the symmetric boson kind"
    );
    let q = rep.q().get();
    let a = annihilator(rep);
    let dim = rep.dim();

    let qn = q_power_number(rep, ScaleDirection::Up);
    let qn_shift = OperatorMatrix::from_diagonal(
        &(0..dim)
            .map(|n| pow_f64(q, n as i64 - 1))
            .collect::<Vec<_>>(),
    );
    let scale_residual = projected_max_abs_diff(&qn.dot(&a), &a.dot(&qn_shift), dim);

    let bracket = OperatorMatrix::from_diagonal(
        &(0..dim)
            .map(|n| ladder_value(rep, n as u32))
            .collect::<Vec<_>>(),
    );
    // [N-1] has [-1] = -[1] = -1 in the top-left slot
    let bracket_shift = OperatorMatrix::from_diagonal(
        &(0..dim)
            .map(|n| {
                if n == 0 {
                    -ladder_value(rep, 1)
                } else {
                    ladder_value(rep, n as u32 - 1)
                }
            })
            .collect::<Vec<_>>(),
    );
    let bracket_residual = projected_max_abs_diff(&bracket.dot(&a), &a.dot(&bracket_shift), dim);

    (scale_residual, bracket_residual)
}

fn projected_max_abs_diff(a: &OperatorMatrix, b: &OperatorMatrix, dim: usize) -> f64 {
    let diff = a.sub(b);
    let top = dim - 1;
    let mut worst = 0.0f64;
    for ((i, j), r) in diff.data().indexed_iter() {
        if i == top || j == top {
            continue;
        }
        let scale = a.entry(i, j).norm().max(b.entry(i, j).norm()).max(1.0);
        worst = worst.max(r.norm() / scale);
    }
    worst
}

/// Checks both auxiliary shift relations against the shared 1e-12 gate.
pub fn check_aux_relations(rep: &FockRep) -> bool {
    let (scale_res, bracket_res) = aux_relation_residuals(rep);
    scale_res < 1e-12 && bracket_res < 1e-12
}
