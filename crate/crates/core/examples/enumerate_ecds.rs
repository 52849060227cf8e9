//! Builds every optimal quintic graph on 14 vertices that arises from an
//! even cycle decomposition of a connected 4-regular graph on 7 vertices.
//!
//! ```text
//! cargo run --release --example enumerate_ecds
//! ```

use std::collections::BTreeMap;

use trireg::io::write_graph6;
use trireg::{
    are_isomorphic, canonical_form, construct_ln, enumerate_ecds, enumerate_regular_graphs, synthesize_quintic,
};

fn main() -> trireg::Result<()> {
    let l7 = construct_ln(7)?;
    let mut found = BTreeMap::new();
    for base in enumerate_regular_graphs(7, 4, true)? {
        let ecds = enumerate_ecds(&base, usize::MAX)?;
        println!("base {}: {} decompositions", write_graph6(&base)?, ecds.len());
        for ecd in ecds {
            let g = synthesize_quintic(&ecd)?;
            println!("  {:?} -> {}", ecd.cycles(), write_graph6(&g)?);
            found.entry(canonical_form(&g)).or_insert(g);
        }
    }
    println!("{} optimal quintic graphs on 14 vertices up to isomorphism", found.len());
    for g in found.values() {
        let tag = if are_isomorphic(g, &l7) { "  (L_7)" } else { "" };
        println!("  {}{tag}", write_graph6(g)?);
    }
    Ok(())
}
