//! Triangle inventory and the triangle property.
//!
//! A triangle is a set of three distinct, pairwise adjacent vertices. Parallel
//! edges multiply: the triangle `{a, b, c}` is counted
//! `m(ab) * m(bc) * m(ac)` times in the weighted count. Loops never lie in a
//! triangle.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::graph::{EdgeKey, MultiGraph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    /// Sorted, distinct.
    pub vertices: [Vertex; 3],
    /// Product of the three edge multiplicities.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleReport {
    /// Lexicographic by vertex triple.
    pub triangles: Vec<Triangle>,
    pub distinct_count: usize,
    pub weighted_count: u64,
    /// Number of triangles through a single copy of each stored pair. Loops
    /// map to 0.
    pub per_edge: BTreeMap<EdgeKey, u64>,
    /// Weighted number of triangles at each vertex.
    pub per_vertex: Vec<u64>,
}

impl TriangleReport {
    /// Pairs lying in at least `k` triangles.
    pub fn edges_in_at_least(&self, k: u64) -> impl Iterator<Item = EdgeKey> + '_ {
        self.per_edge
            .iter()
            .filter(move |&(_, &c)| c >= k)
            .map(|(&e, _)| e)
    }

    pub fn to_json(&self, g: &MultiGraph) -> Value {
        let per_edge: Vec<Value> = self
            .per_edge
            .iter()
            .map(|(&(u, v), &t)| {
                json!({ "u": u, "v": v, "multiplicity": g.multiplicity(u, v), "triangles": t })
            })
            .collect();
        json!({
            "distinct_triangles": self.distinct_count,
            "weighted_triangles": self.weighted_count,
            "per_vertex": self.per_vertex,
            "per_edge": per_edge,
        })
    }
}

/// Lists every triangle. For each edge `uv` with `u < v`, the common
/// neighbours `w > v` are found by intersecting the two sorted neighbour
/// lists, so each triangle is produced exactly once and in lexicographic
/// order.
pub fn enumerate_triangles(g: &MultiGraph) -> TriangleReport {
    let n = g.vertex_count();
    let mut triangles = Vec::new();
    let mut per_edge: BTreeMap<EdgeKey, u64> = g.edges().map(|(u, v, _)| ((u, v), 0)).collect();
    let mut per_vertex = vec![0u64; n];

    for u in 0..n {
        let nu = g.neighbors(u);
        for &(v, muv) in nu.iter().filter(|&&(v, _)| v > u) {
            let nv = g.neighbors(v);
            let (mut i, mut j) = (0, 0);
            while i < nu.len() && j < nv.len() {
                let (a, mua) = nu[i];
                let (b, mvb) = nv[j];
                if a < b {
                    i += 1;
                } else if b < a {
                    j += 1;
                } else {
                    if a > v {
                        let w = a;
                        let mult = muv as u64 * mua as u64 * mvb as u64;
                        triangles.push(Triangle {
                            vertices: [u, v, w],
                            multiplicity: mult,
                        });
                        for x in [u, v, w] {
                            per_vertex[x] += mult;
                        }
                        // Triangles through one copy of each side.
                        *per_edge.get_mut(&(u, v)).unwrap() += mua as u64 * mvb as u64;
                        *per_edge.get_mut(&(u, w)).unwrap() += muv as u64 * mvb as u64;
                        *per_edge.get_mut(&(v, w)).unwrap() += muv as u64 * mua as u64;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    let weighted_count = triangles.iter().map(|t| t.multiplicity).sum();
    TriangleReport {
        distinct_count: triangles.len(),
        triangles,
        weighted_count,
        per_edge,
        per_vertex,
    }
}

/// Number of triangles through one copy of the edge `uv`.
pub fn triangles_through(g: &MultiGraph, u: Vertex, v: Vertex) -> u64 {
    if u == v {
        return 0;
    }
    g.neighbors(u)
        .iter()
        .filter(|&&(w, _)| w != v)
        .map(|&(w, muw)| muw as u64 * g.multiplicity(v, w) as u64)
        .sum()
}

/// Every copy of every edge lies in a triangle. Any loop makes this false.
pub fn has_triangle_property_direct(g: &MultiGraph) -> bool {
    if g.has_loops() {
        return false;
    }
    g.edges().all(|(u, v, _)| triangles_through(g, u, v) > 0)
}

/// The neighbourhood characterization: no vertex's induced neighbourhood has
/// an isolated vertex.
pub fn has_triangle_property_lemma(g: &MultiGraph) -> bool {
    if g.has_loops() {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        let (nbhd, _) = g
            .neighborhood_subgraph(v)
            .expect("vertex is in range");
        (0..nbhd.vertex_count()).all(|w| !nbhd.neighbors(w).is_empty())
    })
}

/// Alias for the direct check.
pub fn has_triangle_property(g: &MultiGraph) -> bool {
    has_triangle_property_direct(g)
}

/// Pairs in exactly `k` triangles, as a set.
pub fn edges_with_count(report: &TriangleReport, k: u64) -> Vec<EdgeKey> {
    report
        .per_edge
        .iter()
        .filter(|&(_, &c)| c == k)
        .map(|(&e, _)| e)
        .collect()
}
