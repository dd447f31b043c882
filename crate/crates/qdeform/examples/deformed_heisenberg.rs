//! The deformed commutation relation `D X - q X D = q^{-N}` pins the
//! Jackson derivative down: checking the relation on arbitrary series, and
//! solving it degree by degree to watch the bracket coefficients appear.
//!
//! ```bash
//! cargo run --example deformed_heisenberg
//! ```

use qdeform::jackson::{
    check_deformed_heisenberg, check_shift_identities, solve_heisenberg_coefficients, FormalSeries,
};
use qdeform::qnum::{basic_int, BasicNumberKind};
use qdeform::LaurentPoly;

fn main() {
    // the relation holds exactly on any series with integer exponents,
    // negative ones included
    let samples = [
        FormalSeries::monomial(5),
        FormalSeries::monomial(0),
        FormalSeries::symbolic([
            (7, LaurentPoly::from_int(3)),
            (2, "q - q^-1".parse().unwrap()),
            (-3, LaurentPoly::one()),
        ]),
    ];
    println!("(D X - q X D) f = q^-N f, exact check:");
    for f in &samples {
        println!("  f = {f}");
        println!("    holds: {}", check_deformed_heisenberg(f).unwrap());
    }

    println!("\nshift identities [N]X = X[N+1] and (-q)^N X = X(-q)^(N+1), m <= 30:");
    println!("  hold: {}", check_shift_identities(30));

    // solve the relation degree by degree: requiring polynomials to stay
    // polynomials forces d_0 = 0, then d_(m+1) = q d_m + q^-m, and the
    // brackets fall out
    println!("\ndegree-by-degree solution of the relation:");
    let coeffs = solve_heisenberg_coefficients(6);
    for (r, d) in coeffs.iter().enumerate() {
        let bracket = basic_int(BasicNumberKind::BosonSymmetric, r as u32);
        let rendered = d.to_string();
        println!(
            "  d_{r} = {rendered:<33} equals the bracket [{r}]: {}",
            *d == bracket
        );
    }
    println!("\nthe relation admits exactly one degree-diagonal solution, and it");
    println!("is the Jackson derivative");
}
