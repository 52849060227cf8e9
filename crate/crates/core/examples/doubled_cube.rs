//! Doubling a perfect matching of the cube's line graph gives a quintic
//! multigraph with the triangle property that is not optimal; every doubled
//! copy is removable.

use trireg::construct::Construction;
use trireg::io::write_edge_list;
use trireg::{classify_edges, enumerate_triangles, is_optimal, lower_bound_triangles};

fn main() -> trireg::Result<()> {
    let c = Construction::doubled_cube()?;
    let g = &c.graph;
    println!("doubled matching: {:?}", c.highlights);
    println!(
        "{} vertices, {}-regular, {} triangles (bound {}), optimal {}",
        g.vertex_count(),
        g.regularity().unwrap(),
        enumerate_triangles(g).weighted_count,
        lower_bound_triangles(5, g.vertex_count())?,
        is_optimal(g)?
    );
    let classes = classify_edges(g)?;
    println!("removable copies: {:?}", classes.removable().collect::<Vec<_>>());
    print!("{}", write_edge_list(g));
    Ok(())
}
