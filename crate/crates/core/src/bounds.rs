//! Lower bounds on the number of triangles in a regular graph with the
//! triangle property, and the optimality certificate built on them.
//!
//! | degree `r`   | bound on `n` vertices  |
//! |--------------|------------------------|
//! | even         | `ceil(n r / 6)`        |
//! | 3            | `n` (disjoint `K4`s)   |
//! | 5            | `n`                    |
//! | odd, `>= 7`  | `ceil(n (r + 1) / 6)`  |
//!
//! All cases the constructions touch are integral; the ceiling only matters
//! for parameter pairs that admit no optimal graph.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::triangles::{enumerate_triangles, has_triangle_property_direct};

pub fn lower_bound_triangles(regularity: usize, vertex_count: usize) -> Result<u64> {
    let (r, n) = (regularity, vertex_count);
    let bad = |reason| Error::BadParameters {
        regularity: r,
        vertex_count: n,
        reason,
    };
    if r < 2 {
        return Err(bad("degree must be at least 2 for any edge to lie in a triangle"));
    }
    if (r * n) % 2 != 0 {
        return Err(bad("degree times vertex count must be even"));
    }
    if n < r + 1 {
        return Err(bad("too few vertices for a simple graph of that degree"));
    }
    let (r, n) = (r as u64, n as u64);
    Ok(match r {
        r if r % 2 == 0 => (n * r).div_ceil(6),
        3 | 5 => n,
        r => (n * (r + 1)).div_ceil(6),
    })
}

/// Minimum number of edges lying in two or more triangles in a quintic graph
/// with the triangle property on `vertex_count` vertices.
pub fn min_two_triangle_edges(vertex_count: usize) -> Result<usize> {
    if !vertex_count.is_multiple_of(2) {
        return Err(Error::BadParameters {
            regularity: 5,
            vertex_count,
            reason: "a quintic graph has an even number of vertices",
        });
    }
    Ok(vertex_count / 2)
}

/// A regular graph is optimal when it has the triangle property and its
/// weighted triangle count equals the lower bound for its degree and order.
/// Connectivity is not required.
pub fn is_optimal(g: &MultiGraph) -> Result<bool> {
    let r = g.regularity().ok_or(Error::NotRegular)?;
    let bound = lower_bound_triangles(r, g.vertex_count())?;
    if !has_triangle_property_direct(g) {
        return Ok(false);
    }
    Ok(enumerate_triangles(g).weighted_count == bound)
}
