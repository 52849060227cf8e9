//! Builds L_n, lists its spokes and prints it as DOT with the spokes dashed.
//!
//! ```text
//! cargo run --example construct_ln -- 7 > l7.dot
//! ```

use trireg::construct::Construction;
use trireg::enumerate_triangles;
use trireg::io::to_dot;

fn main() -> trireg::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(7), |s| s.parse()).expect("n must be a number");
    let c = Construction::ln(n)?;
    let report = enumerate_triangles(&c.graph);
    eprintln!(
        "L_{n}: {} vertices, {} edges, {} triangles, spokes {:?}",
        c.graph.vertex_count(),
        c.graph.edge_count(),
        report.distinct_count,
        c.highlights
    );
    print!("{}", to_dot(&c.graph, &c.highlights));
    Ok(())
}
