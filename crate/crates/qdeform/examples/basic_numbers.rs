//! Bracket numbers in all three families: exact polynomials, numeric
//! values, and the recursions that tie consecutive brackets together.
//!
//! ```bash
//! cargo run --example basic_numbers
//! ```

use qdeform::qnum::{
    basic_int, basic_int_quotient, basic_real, check_recursion, BasicNumberKind, QValue,
};

fn main() {
    let kinds = [
        BasicNumberKind::BosonSymmetric,
        BasicNumberKind::BosonNonsymmetric,
        BasicNumberKind::Fermion,
    ];

    println!("bracket numbers [n] as exact Laurent polynomials in q\n");
    for kind in kinds {
        println!("{}:", kind.label());
        for n in 0..=5 {
            let sym = basic_int(kind, n);
            let at_half = sym.eval(0.5).unwrap();
            let at_two = sym.eval(2.0).unwrap();
            let rendered = sym.to_string();
            println!("  [{n}] = {rendered:<33} q=0.5: {at_half:>10.6}   q=2: {at_two:>10.6}");
        }
        println!();
    }

    println!("sum form vs quotient form (independent constructions):");
    for kind in kinds {
        let agree = (0..=64).all(|n| basic_int(kind, n) == basic_int_quotient(kind, n).unwrap());
        println!(
            "  {:<14} n <= 64: {}",
            kind.label(),
            if agree { "identical" } else { "MISMATCH" }
        );
    }

    println!("\nrecursions ([n+1] = q[n] + q^-n and relatives), exact:");
    for kind in kinds {
        let hold = (0..=64).all(|n| check_recursion(kind, n));
        println!(
            "  {:<14} n <= 64: {}",
            kind.label(),
            if hold { "hold" } else { "BROKEN" }
        );
    }

    // real arguments interpolate the integer brackets; q = 1 is the
    // classical point where [alpha] -> alpha
    println!("\nreal arguments, symmetric boson bracket:");
    for q in [0.5, 1.0, 2.0] {
        let v = basic_real(
            BasicNumberKind::BosonSymmetric,
            2.5,
            QValue::new(q).unwrap(),
        )
        .unwrap();
        println!("  [2.5] at q = {q}: {v:.6}");
    }
}
