//! Removable and unremovable edges.
//!
//! In a graph with the triangle property, an edge copy is removable when the
//! graph minus that copy still has the property. Optimal quintic graphs have
//! no removable edges; on small orders this is checked to be the only way
//! a quintic triangle-property graph can be all-unremovable.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::is_optimal;
use crate::error::{Error, Result};
use crate::graph::{edge_key, MultiGraph, Vertex};
use crate::io::write_graph6;
use crate::search::enumerate_regular_graphs;
use crate::triangles::has_triangle_property_direct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Removability {
    Removable,
    Unremovable,
}

/// Edge copy `(u, v, copy)` with `u <= v` and `copy < multiplicity`.
pub type EdgeCopy = (Vertex, Vertex, u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassification {
    pub per_edge: BTreeMap<EdgeCopy, Removability>,
    pub all_unremovable: bool,
}

impl EdgeClassification {
    pub fn removable(&self) -> impl Iterator<Item = EdgeCopy> + '_ {
        self.per_edge
            .iter()
            .filter(|&(_, &c)| c == Removability::Removable)
            .map(|(&e, _)| e)
    }

    pub fn removable_count(&self) -> usize {
        self.removable().count()
    }

    pub fn to_json(&self) -> Value {
        let removable: Vec<Value> = self.removable().map(|(u, v, c)| json!([u, v, c])).collect();
        json!({
            "edges": self.per_edge.len(),
            "removable": self.removable_count(),
            "all_unremovable": self.all_unremovable,
            "removable_copies": removable,
        })
    }
}

/// Whether deleting one copy of `uv` keeps the triangle property.
pub fn is_edge_removable(g: &MultiGraph, u: Vertex, v: Vertex) -> Result<bool> {
    if u >= g.vertex_count() || v >= g.vertex_count() || g.multiplicity(u, v) == 0 {
        return Err(Error::MissingEdge(u, v));
    }
    if !has_triangle_property_direct(g) {
        return Err(Error::LacksTriangleProperty);
    }
    Ok(has_triangle_property_direct(&g.remove_edge_copy(u, v)?))
}

/// Classifies every edge copy; copies of one pair share a verdict, since
/// removing any one of them gives the same graph.
pub fn classify_edges(g: &MultiGraph) -> Result<EdgeClassification> {
    if !has_triangle_property_direct(g) {
        return Err(Error::LacksTriangleProperty);
    }
    let pairs: Vec<(Vertex, Vertex, u32)> = g.edges().collect();
    let verdicts: Vec<Removability> = pairs
        .par_iter()
        .map(|&(u, v, _)| {
            let h = g.remove_edge_copy(u, v).expect("edge is present");
            if has_triangle_property_direct(&h) {
                Removability::Removable
            } else {
                Removability::Unremovable
            }
        })
        .collect();
    let mut per_edge = BTreeMap::new();
    for (&(u, v, m), &verdict) in pairs.iter().zip(&verdicts) {
        let (u, v) = edge_key(u, v);
        for copy in 0..m {
            per_edge.insert((u, v, copy), verdict);
        }
    }
    let all_unremovable = verdicts.iter().all(|&c| c == Removability::Unremovable);
    Ok(EdgeClassification {
        per_edge,
        all_unremovable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSummary {
    pub vertex_count: usize,
    /// Connected simple quintic graphs of this order.
    pub quintic: usize,
    /// Those with the triangle property.
    pub with_property: usize,
    pub optimal: usize,
    pub all_unremovable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub vertex_bound: usize,
    pub orders: Vec<OrderSummary>,
    /// graph6 strings of graphs where all-unremovable and optimal disagree.
    pub counterexamples: Vec<String>,
}

impl Theorem3Report {
    pub fn checked(&self) -> usize {
        self.orders.iter().map(|o| o.with_property).sum()
    }

    /// No triangle-property graph was in range, so nothing was tested.
    pub fn is_vacuous(&self) -> bool {
        self.checked() == 0
    }

    pub fn to_json(&self) -> Value {
        let orders: Vec<Value> = self
            .orders
            .iter()
            .map(|o| {
                json!({
                    "n": o.vertex_count,
                    "quintic": o.quintic,
                    "triangle_property": o.with_property,
                    "optimal": o.optimal,
                    "all_unremovable": o.all_unremovable,
                })
            })
            .collect();
        json!({
            "vertex_bound": self.vertex_bound,
            "orders": orders,
            "checked": self.checked(),
            "vacuous": self.is_vacuous(),
            "counterexamples": self.counterexamples,
        })
    }
}

/// For every connected simple quintic graph with the triangle property on at
/// most `vertex_bound` vertices, compares "all edges unremovable" with
/// optimality. Disagreements are reported, not raised.
pub fn verify_theorem3(vertex_bound: usize) -> Result<Theorem3Report> {
    verify_theorem3_with(vertex_bound, |n| enumerate_regular_graphs(n, 5, true))
}

/// As [`verify_theorem3`] with a caller-supplied census per even order.
pub fn verify_theorem3_with<F>(vertex_bound: usize, mut census: F) -> Result<Theorem3Report>
where
    F: FnMut(usize) -> Result<Vec<MultiGraph>>,
{
    if vertex_bound > crate::search::MAX_ORDER {
        return Err(Error::Envelope {
            n: vertex_bound,
            r: 5,
        });
    }
    let mut orders = Vec::new();
    let mut counterexamples = Vec::new();
    for n in (6..=vertex_bound).step_by(2) {
        let graphs = census(n)?;
        let mut summary = OrderSummary {
            vertex_count: n,
            quintic: graphs.len(),
            with_property: 0,
            optimal: 0,
            all_unremovable: 0,
        };
        for g in graphs.iter().filter(|g| has_triangle_property_direct(g)) {
            summary.with_property += 1;
            let optimal = is_optimal(g)?;
            let unremovable = classify_edges(g)?.all_unremovable;
            summary.optimal += optimal as usize;
            summary.all_unremovable += unremovable as usize;
            if optimal != unremovable {
                counterexamples.push(write_graph6(g)?);
            }
        }
        orders.push(summary);
    }
    Ok(Theorem3Report {
        vertex_bound,
        orders,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_ln, named_graph, NamedGraph};

    #[test]
    fn k4_edges_are_removable() {
        let k4 = named_graph(NamedGraph::K4);
        for (u, v, _) in k4.edges() {
            assert!(is_edge_removable(&k4, u, v).unwrap());
        }
        let two = k4.disjoint_union(&k4);
        let c = classify_edges(&two).unwrap();
        assert_eq!(c.removable_count(), 12);
        assert!(!c.all_unremovable);
    }

    #[test]
    fn l7_edges_are_unremovable() {
        let l7 = construct_ln(7).unwrap();
        let c = classify_edges(&l7).unwrap();
        assert_eq!(c.per_edge.len(), 35);
        assert!(c.all_unremovable);
        assert!(!is_edge_removable(&l7, 0, 7).unwrap());
    }

    #[test]
    fn parallel_copies_are_listed_separately() {
        let g = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        let c = classify_edges(&g).unwrap();
        assert_eq!(c.per_edge[&(0, 1, 0)], Removability::Removable);
        assert_eq!(c.per_edge[&(0, 1, 1)], Removability::Removable);
        assert_eq!(c.per_edge[&(1, 2, 0)], Removability::Unremovable);
    }

    #[test]
    fn errors() {
        let c5 = MultiGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(classify_edges(&c5), Err(Error::LacksTriangleProperty));
        assert_eq!(is_edge_removable(&c5, 0, 1), Err(Error::LacksTriangleProperty));
        let k4 = named_graph(NamedGraph::K4);
        assert_eq!(is_edge_removable(&k4, 0, 0), Err(Error::MissingEdge(0, 0)));
        assert!(verify_theorem3(14).is_err());
    }

    #[test]
    fn small_bounds() {
        let r = verify_theorem3(8).unwrap();
        assert!(r.counterexamples.is_empty());
        // K6 is the only quintic graph on 6 vertices and it has the property.
        assert_eq!(r.orders[0].with_property, 1);
        assert_eq!(r.orders[0].all_unremovable, 0);
    }
}
