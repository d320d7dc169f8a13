//! Exact polynomial arithmetic, the text grammar, and monomial orders.

use hedet::poly::{parse_polynomial, MonomialOrder, Polynomial, Rational, VarSet, Variable};

fn main() -> hedet::Result<()> {
    let p = parse_polynomial("e_1_2*x_1 + e_1_2*x_2")?;
    let q = parse_polynomial("x_1 - x_2")?;
    println!("p       = {p}");
    println!("p * q   = {}", &p * &q);
    println!("p^2     = {}", p.pow(2));

    // Coefficients are exact; large values fall back to big integers.
    let big = Polynomial::constant(Rational::new(i64::MAX, 3));
    println!("big^2   = {}", big.pow(2));

    let h = Polynomial::complete_homogeneous(Variable::x(1), Variable::x(2), 3);
    println!("h_3     = {h}");

    for order in [
        MonomialOrder::Lex,
        MonomialOrder::Grevlex,
        MonomialOrder::eliminate_all_but(VarSet::edges()),
    ] {
        let (lm, _) = p.leading_term(&order).expect("nonzero");
        println!("leading monomial of p under {:<24} {lm}", order.name());
    }
    Ok(())
}
