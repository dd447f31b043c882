//! Truncated Fock-space representations: ladder matrices, their defining
//! relations, and the residual report across all four algebra kinds.
//!
//! ```bash
//! cargo run --example fock_matrices
//! ```

use qdeform::fock::{
    annihilator, check_aux_relations, creator, number_operator, relation_residual, FockRep, RepKind,
};
use qdeform::QValue;

fn main() {
    // a small symmetric q-boson representation, spelled out
    let rep = FockRep::new(RepKind::Boson, QValue::new(2.0).unwrap(), 4).unwrap();
    let a = annihilator(&rep);
    let n = number_operator(&rep);
    println!("symmetric q-boson, q = 2, dim = 4");
    println!(
        "number operator diagonal: {:?}",
        (0..4).map(|i| n.entry(i, i).re).collect::<Vec<_>>()
    );
    println!("annihilator superdiagonal (sqrt of brackets):");
    for col in 1..4 {
        println!("  a[{}, {col}] = {:.7}", col - 1, a.entry(col - 1, col).re);
    }
    let occupation = creator(&rep).dot(&a);
    println!("a† a diagonal (the brackets themselves):");
    for i in 0..4 {
        println!("  [{i}] at q=2: {:.7}", occupation.entry(i, i).re);
    }

    println!("\nrelation residuals (scale-normalized, off the top state):");
    println!(
        "  {:<14} {:>5} {:>5}  {:>12}",
        "kind", "q", "dim", "residual"
    );
    let grid = [
        (RepKind::Boson, 2.0, 32),
        (RepKind::Boson, 0.5, 64),
        (RepKind::BosonNonsym, 2.0, 32),
        (RepKind::StandardFermion, 0.7, 2),
        (RepKind::GeneralizedFermion, 0.5, 32),
        (RepKind::GeneralizedFermion, 0.9, 64),
    ];
    for (kind, q, dim) in grid {
        let rep = FockRep::new(kind, QValue::new(q).unwrap(), dim).unwrap();
        println!(
            "  {:<14} {q:>5} {dim:>5}  {:>12.3e}",
            kind.label(),
            relation_residual(&rep)
        );
    }

    let boson = FockRep::new(RepKind::Boson, QValue::new(2.0).unwrap(), 16).unwrap();
    println!(
        "\nauxiliary shifts q^N a = a q^(N-1) and [N] a = a [N-1]: {}",
        if check_aux_relations(&boson) {
            "hold"
        } else {
            "BROKEN"
        }
    );

    // the generalized fermion needs q < 1; at q > 1 the brackets go
    // negative and no Hermitian ladder pair of this shape exists
    let rejected = FockRep::new(RepKind::GeneralizedFermion, QValue::new(2.0).unwrap(), 8);
    println!(
        "\ngeneralized fermion at q = 2 is rejected: {}",
        rejected.is_err()
    );
}
