//! Chromatic numbers, criticality and tensor products.

use hedet::graphs::{
    chromatic_number, cycle, find_coloring, grotzsch, h0, h_star, is_k_critical, is_vertex_critical, tensor_product,
};

fn main() -> hedet::Result<()> {
    for (name, g) in [
        ("H0", h0()),
        ("H*", h_star()),
        ("Grotzsch", grotzsch()),
        ("C7", cycle(7)?),
    ] {
        let chi = chromatic_number(&g);
        println!(
            "{name:<9} n={:<2} m={:<2} chi={chi} omega={} critical={} vertex-critical={}",
            g.n(),
            g.edge_count(),
            g.clique_number(),
            is_k_critical(&g, chi),
            is_vertex_critical(&g, chi),
        );
    }

    let p = tensor_product(&h0(), &grotzsch());
    println!("H0 x Grotzsch: {} vertices, chi = {}", p.n(), chromatic_number(&p));
    let c = find_coloring(&p, 4).expect("4-colourable");
    println!("a 4-colouring starts {:?}", &c[..12]);
    Ok(())
}
