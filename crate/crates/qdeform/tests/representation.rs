//! The function-space picture and the matrix picture must tell one story:
//! multiplication by x plays the creator, the Jackson derivative plays the
//! annihilator, and the bracket numbers appear on both sides.

use qdeform::dynamics::{
    element_frequency, exact_evolution, EvolutionSpec, HVariant, HamiltonianModel, ModelKind,
};
use qdeform::fock::{annihilator, creator, q_power_number, FockRep, RepKind};
use qdeform::jackson::{
    check_deformed_heisenberg, jackson_derivative, scale, FormalSeries, QParam, ScaleDirection,
};
use qdeform::qnum::{basic_int, BasicNumberKind, QValue};

fn qv(q: f64) -> QValue {
    QValue::new(q).unwrap()
}

#[test]
fn occupation_diagonal_matches_derivative_coefficients() {
    // D x^n = [n] x^(n-1) on the series side; (a† a)_nn = [n] on the matrix
    // side; both against the same exact bracket
    for q in [0.5, 1.3, 2.0] {
        let dim = 10;
        let rep = FockRep::new(RepKind::Boson, qv(q), dim).unwrap();
        let occupation = creator(&rep).dot(&annihilator(&rep));
        for n in 1..dim as u32 {
            let derivative =
                jackson_derivative(&FormalSeries::monomial(i64::from(n)), &QParam::Symbolic)
                    .unwrap();
            let (_, coefficient) = derivative.symbolic_terms().unwrap().next().unwrap();
            let series_value = coefficient.eval(q).unwrap();
            let matrix_value = occupation.entry(n as usize, n as usize).re;
            let exact = basic_int(BasicNumberKind::BosonSymmetric, n)
                .eval(q)
                .unwrap();
            assert!((series_value - exact).abs() < 1e-12 * exact.max(1.0));
            assert!((matrix_value - exact).abs() < 1e-12 * exact.max(1.0));
        }
    }
}

#[test]
fn scaling_operator_matches_its_matrix() {
    // q^(-N) acts on x^n as multiplication by q^(-n); the matrix version is
    // the diagonal of the same values
    let q = 1.7;
    let rep = FockRep::new(RepKind::Boson, qv(q), 8).unwrap();
    let matrix = q_power_number(&rep, ScaleDirection::Down);
    for n in 0..8i64 {
        let scaled = scale(
            &FormalSeries::monomial(n),
            ScaleDirection::Down,
            &QParam::Symbolic,
        )
        .unwrap();
        let (_, coefficient) = scaled.symbolic_terms().unwrap().next().unwrap();
        let series_value = coefficient.eval(q).unwrap();
        let matrix_value = matrix.entry(n as usize, n as usize).re;
        assert!((series_value - matrix_value).abs() < 1e-14 * series_value.max(1.0));
    }
}

#[test]
fn deformed_relation_holds_in_both_pictures() {
    // series side: exact; matrix side: residual at float granularity
    let f = FormalSeries::symbolic([
        (6, qdeform::LaurentPoly::from_int(2)),
        (1, qdeform::LaurentPoly::one()),
    ]);
    assert!(check_deformed_heisenberg(&f).unwrap());

    for q in [0.5, 2.0] {
        let rep = FockRep::new(RepKind::Boson, qv(q), 16).unwrap();
        assert!(qdeform::fock::relation_residual(&rep) < 1e-12);
    }
}

#[test]
fn evolved_ladder_keeps_the_bracket_weights() {
    // time evolution only rotates phases; the occupation numbers built from
    // the evolved ladder operator stay the brackets
    let rep = FockRep::new(RepKind::Boson, qv(1.4), 6).unwrap();
    let model = HamiltonianModel::new(ModelKind::BosonSym, 1.0).unwrap();
    let spec = EvolutionSpec::new(rep, model, HVariant::DeformedQinv).unwrap();
    let evolved = exact_evolution(&spec, 3.7);
    let occupation = evolved.dagger().dot(&evolved);
    for n in 1..6u32 {
        let exact = basic_int(BasicNumberKind::BosonSymmetric, n)
            .eval(1.4)
            .unwrap();
        let got = occupation.entry(n as usize, n as usize).re;
        assert!((got - exact).abs() < 1e-12 * exact.max(1.0), "level {n}");
    }
    // and the rotation rate of each element is the level-energy difference
    let t = 0.01;
    let at_t = exact_evolution(&spec, t);
    for n in 1..6u32 {
        let ratio = at_t.entry(n as usize - 1, n as usize)
            / spec.initial().entry(n as usize - 1, n as usize);
        let measured = -ratio.arg() / t;
        let predicted =
            element_frequency(spec.model(), spec.variant(), spec.rep().q(), n - 1, n).unwrap();
        assert!((measured - predicted).abs() < 1e-9 * predicted.abs().max(1.0));
    }
}
