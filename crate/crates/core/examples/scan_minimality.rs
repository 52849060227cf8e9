//! Counts the connected quintic graphs on 6 to 12 vertices and shows that
//! none of them is optimal, while L_7 on 14 vertices is.
//!
//! ```text
//! cargo run --release --example scan_minimality
//! ```

use std::time::Instant;

use trireg::{construct_ln, enumerate_regular_graphs, is_optimal, scan_optimal};

fn main() -> trireg::Result<()> {
    for n in (6..=12).step_by(2) {
        let start = Instant::now();
        let census = enumerate_regular_graphs(n, 5, true)?;
        let optimal = scan_optimal(n, 5)?;
        println!(
            "n = {n:2}: {:5} connected quintic graphs, {} optimal ({:.1?})",
            census.len(),
            optimal.len(),
            start.elapsed()
        );
    }
    let l7 = construct_ln(7)?;
    println!("L_7 on {} vertices optimal: {}", l7.vertex_count(), is_optimal(&l7)?);
    Ok(())
}
