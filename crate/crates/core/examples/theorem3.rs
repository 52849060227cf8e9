//! For every connected quintic graph with the triangle property on at most
//! the given number of vertices, compares "no removable edge" with
//! optimality.
//!
//! ```text
//! cargo run --release --example theorem3 -- 12
//! ```

use trireg::{classify_edges, construct_ln, verify_theorem3};

fn main() -> trireg::Result<()> {
    let bound: usize = std::env::args().nth(1).map_or(Ok(10), |s| s.parse()).expect("bound must be a number");
    let report = verify_theorem3(bound)?;
    for o in &report.orders {
        println!(
            "n = {:2}: {:5} quintic, {:4} with the property, {} optimal, {} all-unremovable",
            o.vertex_count, o.quintic, o.with_property, o.optimal, o.all_unremovable
        );
    }
    println!("counterexamples: {:?}", report.counterexamples);
    let l7 = classify_edges(&construct_ln(7)?)?;
    println!("L_7: {} edges, all unremovable {}", l7.per_edge.len(), l7.all_unremovable);
    Ok(())
}
