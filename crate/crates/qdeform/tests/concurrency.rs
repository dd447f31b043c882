//! Everything in the crate is a value: immutable after construction,
//! shareable, and safe to move across threads. Pinned at compile time and
//! exercised with a threaded parameter sweep.

use std::thread;

use qdeform::dynamics::{exact_evolution, EvolutionSpec, HVariant, HamiltonianModel, ModelKind};
use qdeform::fock::{relation_residual, FockRep, OperatorMatrix, RepKind};
use qdeform::jackson::{FormalSeries, LinearOperator, QParam};
use qdeform::{LaurentPoly, QValue};

fn assert_send_sync<T: Send + Sync>() {}

#[test]
fn values_are_send_and_sync() {
    assert_send_sync::<LaurentPoly>();
    assert_send_sync::<FormalSeries>();
    assert_send_sync::<LinearOperator>();
    assert_send_sync::<OperatorMatrix>();
    assert_send_sync::<FockRep>();
    assert_send_sync::<EvolutionSpec>();
}

#[test]
fn parameter_sweeps_run_concurrently() {
    let shared = FormalSeries::monomial(4);
    let results: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = [0.5, 0.9, 1.1, 2.0]
            .into_iter()
            .map(|q| {
                let series = &shared;
                scope.spawn(move || {
                    let rep = FockRep::new(RepKind::Boson, QValue::new(q).unwrap(), 16).unwrap();
                    let residual = relation_residual(&rep);
                    let model = HamiltonianModel::new(ModelKind::BosonSym, 1.0).unwrap();
                    let spec = EvolutionSpec::new(rep, model, HVariant::DeformedQinv).unwrap();
                    let evolved = exact_evolution(&spec, 1.0);
                    let op = LinearOperator::jackson(QParam::Symbolic);
                    let derived = op.apply(series).unwrap();
                    (residual, evolved.max_abs(), derived)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (residual, norm, derived) in results {
        assert!(residual < 1e-12);
        assert!(norm.is_finite());
        assert!(!derived.is_zero());
    }
}
