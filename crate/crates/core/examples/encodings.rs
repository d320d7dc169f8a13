//! The polynomial ideal families that encode colourings and criticality.

use hedet::encode::{assemble_l, family, fixed_graph_ideal, Side, FAMILIES};
use hedet::graphs::h0;
use hedet::poly::{var_universe, RingKind};

fn main() -> hedet::Result<()> {
    let (k, n, np) = (3, 3, 3);
    println!(
        "W ring: {} variables, V ring: {}",
        var_universe(RingKind::W, k, n, np)?.len(),
        var_universe(RingKind::V, k, n, np)?.len()
    );
    for name in FAMILIES {
        let ideal = family(name, k, n, np)?;
        println!("{name:<5} {:>4} generators", ideal.len());
    }

    println!("\nJ(3, 2, 2):");
    for g in family("J", 3, 2, 2)?.generators() {
        println!("  {g}");
    }

    let e = fixed_graph_ideal(&h0(), Side::G);
    println!(
        "\nfixed-graph ideal of H0 has {} generators, first {}",
        e.len(),
        e.generators()[0]
    );
    let l = assemble_l(&h0(), &h0(), 4)?;
    println!(
        "L(H0, H0, 4): {} generators over {} variables",
        l.len(),
        l.universe().len()
    );
    Ok(())
}
