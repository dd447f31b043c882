//! The Jackson derivative two ways: the term-map rule `D x^r = [r] x^{r-1}`
//! and the scaling quotient `(f(qx) - f(x/q)) / (x (q - q^-1))`, plus its
//! collapse onto the ordinary derivative as q -> 1.
//!
//! ```bash
//! cargo run --example jackson_derivative
//! ```

use qdeform::jackson::{
    jackson_derivative, jackson_derivative_numeric, jackson_derivative_quotient, FormalSeries,
    QParam,
};
use qdeform::{LaurentPoly, QValue};

fn main() {
    // f(x) = x^3 - 2x + 5, symbolically
    let f = FormalSeries::symbolic([
        (3, LaurentPoly::one()),
        (1, LaurentPoly::from_int(-2)),
        (0, LaurentPoly::from_int(5)),
    ]);
    let term_map = jackson_derivative(&f, &QParam::Symbolic).unwrap();
    let quotient = jackson_derivative_quotient(&f, &QParam::Symbolic).unwrap();
    println!("f       = {f}");
    println!("D f     = {term_map}");
    println!("routes agree exactly: {}\n", term_map == quotient);

    // pointwise: D(x^2) at x = 1, q = 2 is [2] = q + 1/q = 2.5
    let v = jackson_derivative_numeric(|x| x * x, 1.0, QValue::new(2.0).unwrap()).unwrap();
    println!("D(x^2) at x=1, q=2: {v}  (the bracket [2] at q=2)");

    // q -> 1: the quotient becomes the symmetric difference and converges
    // at second order to the ordinary derivative
    let g = |x: f64| x.powi(5);
    let exact = 5.0 * 1.3f64.powi(4);
    println!("\nD(x^5) at x = 1.3 against the ordinary derivative {exact}:");
    println!("  {:>8}  {:>13}  {:>10}", "q", "jackson", "error");
    for q in [1.5, 1.1, 1.01, 1.001, 1.0001] {
        let jd = jackson_derivative_numeric(g, 1.3, QValue::new(q).unwrap()).unwrap();
        println!("  {q:>8}  {jd:>13.8}  {:>10.3e}", (jd - exact).abs());
    }
    println!("each factor-of-ten step toward q = 1 cuts the error ~100x");
}
