//! Reduced Gröbner bases, normal forms, membership and elimination.

use hedet::groebner::{buchberger, contains_one, elimination_ideal, ideal_subset, Ideal};
use hedet::poly::{parse_generators, MonomialOrder, VarSet, Variable};

fn main() -> hedet::Result<()> {
    let circle = Ideal::from_generators(parse_generators("x_1^2 + x_2^2 - 1\nx_1 - x_2")?);
    let gb = buchberger(&circle, &MonomialOrder::Lex)?;
    println!("lex basis of the circle cut by x = y:");
    for g in &gb.basis {
        println!("  {g}");
    }
    println!("stats: {:?}", gb.stats);

    let f = parse_generators("x_1^3 - 1/2*x_2")?.remove(0);
    println!("normal form of {f}: {}", gb.normal_form(&f));

    let twisted = Ideal::from_generators(parse_generators("x_1 - x_2^2\nx_1 - x_3")?);
    let keep = VarSet::of([Variable::x(2), Variable::x(3)]);
    println!(
        "eliminating x_1: {:?}",
        elimination_ideal(&twisted, &keep)?.generators()
    );

    let unit = Ideal::from_generators(parse_generators("x_1 - 1\nx_1")?);
    println!("(x - 1, x) is the unit ideal: {}", contains_one(&unit)?);

    let small = Ideal::from_generators(parse_generators("x_1")?);
    let big = Ideal::from_generators(parse_generators("x_1\nx_2")?);
    println!("(x) ⊆ (x, y): {}", ideal_subset(&small, &big)?);
    Ok(())
}
