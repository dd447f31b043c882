//! Heisenberg-picture evolution of the annihilator under the three
//! equation variants, checked against the exact per-element phase solution
//! and against the closed-form frequency factors.
//!
//! ```bash
//! cargo run --example time_evolution
//! ```

use qdeform::dynamics::{
    closed_form_frequency, element_frequency, exact_evolution, integrate_evolution, EvolutionSpec,
    HVariant, HamiltonianModel, ModelKind,
};
use qdeform::fock::FockRep;
use qdeform::{Error, QValue};

fn main() {
    let q = QValue::new(2.0).unwrap();
    let model = HamiltonianModel::new(ModelKind::BosonSym, 1.0).unwrap();

    println!("symmetric q-boson, q = 2, dim = 4, omega = 1\n");
    println!("element (n-1, n) phase rates E_n - lambda E_(n-1):");
    println!(
        "  {:>2}  {:>12} {:>12} {:>12}",
        "n", "undeformed", "lambda=q", "lambda=1/q"
    );
    for n in 1..4u32 {
        let f = |v: HVariant| element_frequency(&model, v, q, n - 1, n).unwrap();
        println!(
            "  {n:>2}  {:>12.6} {:>12.6} {:>12.6}",
            f(HVariant::Undeformed),
            f(HVariant::DeformedQ),
            f(HVariant::DeformedQinv)
        );
    }

    // closed forms: factor and the N-substitution that reproduces the rate
    println!("\nclosed-form factors against the exact rates:");
    for (variant, label) in [
        (HVariant::Undeformed, "(q^N + q^-N)/2"),
        (HVariant::DeformedQ, "(q^-N-1 + q^-N)/2"),
        (HVariant::DeformedQinv, "(q^N + q^N-1)/2"),
    ] {
        let matched = closed_form_frequency(&model, variant, 2, q).unwrap();
        println!(
            "  {:<14} {label:<18} -> {:.6} with {}",
            variant.label(),
            matched.frequency,
            matched.ordering.label()
        );
    }

    // integrate and compare against the exact solution
    let rep = FockRep::new(ModelKind::BosonSym.rep_kind(), q, 4).unwrap();
    let spec = EvolutionSpec::new(rep, model, HVariant::DeformedQinv).unwrap();
    let (t_end, steps) = (10.0, 10_000);
    let series = integrate_evolution(&spec, t_end, steps);
    let mut worst = 0.0f64;
    for (k, f) in series.iter().enumerate() {
        let t = t_end * k as f64 / steps as f64;
        worst = worst.max(f.max_abs_diff(&exact_evolution(&spec, t)));
    }
    println!("\nfourth-order integration vs exact solution over omega t = 10:");
    println!("  max entry error: {worst:.3e}  (every element is a pure phase)");

    // the generalized fermion's closed form: right magnitude, wrong sign
    let gen = HamiltonianModel::new(ModelKind::GeneralizedFermion, 1.0).unwrap();
    let qh = QValue::new(0.5).unwrap();
    println!("\ngeneralized fermion under lambda = 1/q, q = 0.5:");
    for n in 1..=3u32 {
        match closed_form_frequency(&gen, HVariant::DeformedQinv, n, qh) {
            Err(Error::NoOrderingMatches { oracle, at_n, .. }) => println!(
                "  n = {n}: exact rate {oracle:>9.6}, closed form {at_n:>9.6}  (sign flipped)"
            ),
            other => println!("  n = {n}: unexpected {other:?}"),
        }
    }
    println!("the factor ((-q)^N - (-q)^(N-1))/2 matches in magnitude only;");
    println!("the sign disagrees for every n under both N-substitutions");
}
