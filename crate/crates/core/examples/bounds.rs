//! Lower bounds on the triangle count for a few degrees and orders, and the
//! constructions that meet them.

use trireg::construct::named_graph;
use trireg::{
    construct_ln, enumerate_triangles, is_optimal, line_graph, lower_bound_triangles, min_two_triangle_edges,
    petersen_six_regular, seven_regular_from_l3j, MultiGraph, NamedGraph,
};

fn show(name: &str, g: &MultiGraph) -> trireg::Result<()> {
    let r = g.regularity().expect("regular");
    println!(
        "{name:>14}: r = {r}, n = {:3}, triangles {:3}, bound {:3}, optimal {}",
        g.vertex_count(),
        enumerate_triangles(g).weighted_count,
        lower_bound_triangles(r, g.vertex_count())?,
        is_optimal(g)?
    );
    Ok(())
}

fn main() -> trireg::Result<()> {
    for (r, n) in [(4, 9), (4, 10), (5, 14), (6, 15), (7, 30)] {
        println!("bound({r}, {n}) = {}", lower_bound_triangles(r, n)?);
    }
    println!("quintic on 14 vertices: at least {} edges in two triangles", min_two_triangle_edges(14)?);
    show("L(K33)", &line_graph(&named_graph(NamedGraph::K33))?)?;
    show("L(cube)", &line_graph(&named_graph(NamedGraph::Cube))?)?;
    show("L(K4)", &line_graph(&named_graph(NamedGraph::K4))?)?;
    show("L_7", &construct_ln(7)?)?;
    show("Petersen 6-reg", &petersen_six_regular())?;
    show("7-reg, j = 5", &seven_regular_from_l3j(5)?)?;
    Ok(())
}
