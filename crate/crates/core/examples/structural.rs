//! Enumeration checks of the small critical-graph catalogues.

use hedet::conjecture::{verify_a4, verify_prop43, verify_small_critical};

fn main() -> hedet::Result<()> {
    let a4 = verify_a4()?;
    println!(
        "order-7 4-critical classes: {} (edge-critical: {})",
        a4.classes, a4.edge_critical
    );
    println!(
        "member with a vertex in no triangle: {:?}, is H0: {}",
        a4.triangle_free_vertex, a4.h0_identified
    );
    println!("graph6: {}", a4.graph6.join(" "));
    for d in &a4.discrepancies {
        println!("discrepancy: {d}");
    }

    for (k, max_n) in [(3, 7), (4, 7), (5, 7)] {
        let r = verify_small_critical(k, max_n)?;
        println!("\nk = {k}:");
        for row in &r.rows {
            println!("  n={} found {:?} catalogue match {:?}", row.n, row.found, row.matches);
        }
    }

    println!("\ncyclotomic identity for k = 2..10: {}", (2..=10).all(verify_prop43));
    Ok(())
}
