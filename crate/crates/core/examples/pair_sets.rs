//! The combinatorial pair sets W, V and V' and the inclusion V ⊆ W.

use hedet::conjecture::{build_set, check_prop41, PairSetKind, SetOptions, V3Mode};

fn main() -> hedet::Result<()> {
    for kind in [PairSetKind::W, PairSetKind::V, PairSetKind::VPrime] {
        let s = build_set(kind, 4, 4, 4, &SetOptions::default())?;
        println!(
            "{kind:?}(4,4,4): {} of {} pairs (exhaustive: {})",
            s.len(),
            s.examined,
            s.exhaustive
        );
    }
    let opts = SetOptions {
        v3: V3Mode::VertexOne,
        ..SetOptions::default()
    };
    let v1 = build_set(PairSetKind::V, 3, 4, 4, &opts)?;
    println!("V(3,4,4) with the vertex-1 reading: {} members", v1.len());

    let sampled = build_set(
        PairSetKind::W,
        3,
        5,
        5,
        &SetOptions {
            samples: 500,
            ..SetOptions::default()
        },
    )?;
    println!(
        "W(3,5,5) sampled: {} members among {} draws",
        sampled.len(),
        sampled.examined
    );

    for (k, n, np) in [(3, 3, 3), (3, 4, 4), (4, 4, 4)] {
        let r = check_prop41(k, n, np)?;
        println!(
            "V ⊆ W at ({k},{n},{np}): {} (|W| = {}, |V| = {}, |V'| = {})",
            r.holds, r.w_size, r.v_size, r.vprime_size
        );
    }
    Ok(())
}
