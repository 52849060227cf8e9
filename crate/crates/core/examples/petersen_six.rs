//! The 6-regular graph on 15 vertices: the line graph of the Petersen graph
//! plus five triangles on vertex triples at pairwise distance 3.

use trireg::construct::named_graph;
use trireg::io::write_graph6;
use trireg::{enumerate_triangles, is_optimal, line_graph, petersen_six_regular, NamedGraph};

fn main() -> trireg::Result<()> {
    let lp = line_graph(&named_graph(NamedGraph::Petersen))?;
    let g = petersen_six_regular();
    let added: Vec<_> = g.edges().filter(|&(u, v, _)| !lp.has_edge(u, v)).map(|(u, v, _)| (u, v)).collect();
    println!("added edges: {added:?}");
    println!(
        "{} vertices, {}-regular, {} triangles, optimal {}",
        g.vertex_count(),
        g.regularity().unwrap(),
        enumerate_triangles(&g).weighted_count,
        is_optimal(&g)?
    );
    println!("{}", write_graph6(&g)?);
    Ok(())
}
