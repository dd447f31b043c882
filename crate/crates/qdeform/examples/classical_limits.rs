//! What survives at q = 1: bosons recover the undeformed oscillator, the
//! Jackson derivative becomes d/dx, and the fermion bracket does something
//! stranger — it alternates instead of counting.
//!
//! ```bash
//! cargo run --example classical_limits
//! ```

use qdeform::fock::{annihilator, creator, FockRep, RepKind};
use qdeform::jackson::jackson_derivative_numeric;
use qdeform::qnum::{fermion_classical_limit, QValue};

fn main() {
    // fermion brackets at q = 1: 0, 1, 0, 1, ... (exact rationals)
    println!("fermion bracket limit [n]_F at q = 1:");
    print!("  n     =");
    (0..=10).for_each(|n| print!(" {n:>3}"));
    println!();
    print!("  [n]_F =");
    (0..=10).for_each(|n| print!(" {:>3}", fermion_classical_limit(n)));
    println!("\n  odd n give 1, even n give 0 — the limit alternates, it does not count\n");

    // the generalized-fermion occupation diagonal shows the same pattern
    let rep = FockRep::new(RepKind::GeneralizedFermion, QValue::new(0.999).unwrap(), 8).unwrap();
    let occ = creator(&rep).dot(&annihilator(&rep));
    println!("generalized-fermion b†b diagonal at q = 0.999:");
    print!(" ");
    for n in 0..8 {
        print!(" {:>6.3}", occ.entry(n, n).re);
    }
    println!("\n");

    // bosons do recover the ordinary oscillator: [a, a†] = 1 off the top state
    let boson = FockRep::new(RepKind::Boson, QValue::new(1.0).unwrap(), 8).unwrap();
    let a = annihilator(&boson);
    let comm = a.dot(&a.dagger()).sub(&a.dagger().dot(&a));
    println!("boson commutator a a† - a† a at q = 1 (diagonal, top state truncated):");
    print!(" ");
    for n in 0..7 {
        print!(" {:>6.3}", comm.entry(n, n).re);
    }
    println!("\n");

    // the Jackson derivative collapses onto d/dx at second order
    let f = |x: f64| x.powi(5);
    let exact = 5.0 * 1.3f64.powi(4);
    println!("|D_q(x^5) - d/dx(x^5)| at x = 1.3:");
    let mut prev: Option<f64> = None;
    for q in [1.1, 1.01, 1.001, 1.0001] {
        let err =
            (jackson_derivative_numeric(f, 1.3, QValue::new(q).unwrap()).unwrap() - exact).abs();
        match prev {
            Some(p) => println!("  q = {q:<7} error {err:.3e}   ratio {:.1}", p / err),
            None => println!("  q = {q:<7} error {err:.3e}"),
        }
        prev = Some(err);
    }
    println!("  the symmetric quotient is second-order accurate in (q - 1)");
}
