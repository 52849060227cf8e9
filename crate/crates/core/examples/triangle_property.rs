//! Triangle inventory of a few graphs and the two ways of testing the
//! triangle property.

use trireg::construct::named_graph;
use trireg::{
    construct_ln, enumerate_triangles, has_triangle_property_direct, has_triangle_property_lemma, line_graph,
    MultiGraph, NamedGraph,
};

fn main() -> trireg::Result<()> {
    let graphs = [
        ("C5", MultiGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)))?),
        ("K4", named_graph(NamedGraph::K4)),
        ("Petersen", named_graph(NamedGraph::Petersen)),
        ("L(Petersen)", line_graph(&named_graph(NamedGraph::Petersen))?),
        ("L_7", construct_ln(7)?),
        ("doubled triangle side", MultiGraph::new(3, [(0, 1), (0, 1), (1, 2), (0, 2)])?),
    ];
    for (name, g) in &graphs {
        let r = enumerate_triangles(g);
        println!(
            "{name:>22}: {:2} distinct / {:2} weighted triangles, property {} (neighbourhood test {})",
            r.distinct_count,
            r.weighted_count,
            has_triangle_property_direct(g),
            has_triangle_property_lemma(g)
        );
    }
    Ok(())
}
