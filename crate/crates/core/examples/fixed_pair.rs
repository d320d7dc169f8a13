//! Triviality of the fixed-pair ideal, cross-checked by colouring G×H.

use hedet::conjecture::check_fixed_pair;
use hedet::graphs::parse_graph_spec;
use hedet::groebner::GbConfig;

fn main() -> hedet::Result<()> {
    let cfg = GbConfig::default();
    for (g, h, k) in [("C5", "C5", 3), ("C5", "C7", 3), ("K3", "K3", 4), ("H0", "H0", 4)] {
        let r = check_fixed_pair(&parse_graph_spec(g)?, &parse_graph_spec(h)?, k, &cfg)?;
        println!(
            "{g} x {h}, k={k}: unit ideal {} (oracle agrees), {} pairs, {:?}",
            r.holds, r.stats.spairs_processed, r.elapsed
        );
    }
    Ok(())
}
