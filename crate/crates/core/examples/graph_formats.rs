//! graph6 and edge-list text, the graph spec language, canonical forms and
//! enumeration of isomorphism classes.

use hedet::graphs::{
    are_isomorphic, canonical_form, edge_list_emit, enumerate_graphs, graph6_emit, graph6_parse, parse_graph_spec,
};

fn main() -> hedet::Result<()> {
    for spec in ["K1+C5", "M(C5)", "H0", "6; 1 2; 2 3; 3 1", "D?{"] {
        let g = parse_graph_spec(spec)?;
        println!(
            "{spec:<18} -> graph6 {:<12} edges {}",
            graph6_emit(&g),
            edge_list_emit(&g)
        );
    }

    let star = graph6_parse(">>graph6<<D?{")?;
    let relabelled = star.relabel(&[5, 4, 3, 2, 1]);
    println!("relabelled star isomorphic: {}", are_isomorphic(&star, &relabelled));
    println!("canonical key: {:?}", canonical_form(&star)?);

    if let Err(e) = parse_graph_spec("K2+Q7") {
        println!("error reported with its position: {e}");
    }

    for n in 1..=7 {
        println!("graphs on {n} vertices: {}", enumerate_graphs(n)?.len());
    }
    Ok(())
}
