//! Undirected multigraphs with edge multiplicities and loops.
//!
//! Vertices are the dense integers `0..n`. A [`MultiGraph`] is immutable once
//! built; every operation that "changes" a graph returns a new one.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair stored with `u <= v`.
pub type EdgeKey = (Vertex, Vertex);

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge_key(u: Vertex, v: Vertex) -> EdgeKey {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    /// Sorted by neighbor; loops are kept separately.
    adj: Vec<Vec<(Vertex, u32)>>,
    loops: Vec<u32>,
}

impl MultiGraph {
    pub fn empty(n: usize) -> Self {
        MultiGraph {
            n,
            adj: vec![Vec::new(); n],
            loops: vec![0; n],
        }
    }

    /// Builds a graph from an edge list; repeated pairs accumulate multiplicity.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::with_multiplicities(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Zero multiplicities
    /// are ignored.
    pub fn with_multiplicities<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, u32)>,
    {
        let mut acc: BTreeMap<EdgeKey, u32> = BTreeMap::new();
        for (u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if m > 0 {
                *acc.entry(edge_key(u, v)).or_insert(0) += m;
            }
        }
        let mut g = MultiGraph::empty(n);
        for ((u, v), m) in acc {
            if u == v {
                g.loops[u] = m;
            } else {
                g.adj[u].push((v, m));
                g.adj[v].push((u, m));
            }
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total edge multiplicity, loops included.
    pub fn edge_count(&self) -> usize {
        self.edges().map(|(_, _, m)| m as usize).sum()
    }

    /// Number of distinct vertex pairs carrying at least one edge.
    pub fn distinct_edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Degree of `v`; a loop contributes 2.
    ///
    /// Panics if `v` is out of range; see [`MultiGraph::try_degree`].
    pub fn degree(&self, v: Vertex) -> usize {
        let d: u32 = self.adj[v].iter().map(|&(_, m)| m).sum();
        d as usize + 2 * self.loops[v] as usize
    }

    pub fn try_degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degree(v))
    }

    /// Distinct non-loop neighbors of `v` with their multiplicities, sorted.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, u32)] {
        &self.adj[v]
    }

    pub fn loop_multiplicity(&self, v: Vertex) -> u32 {
        self.loops[v]
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        if u >= self.n || v >= self.n {
            return 0;
        }
        if u == v {
            return self.loops[u];
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        match self.adj[a].binary_search_by_key(&b, |&(w, _)| w) {
            Ok(i) => self.adj[a][i].1,
            Err(_) => 0,
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Every stored pair as `(u, v, multiplicity)` with `u <= v`, in
    /// lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            let lp = (self.loops[u] > 0).then_some((u, u, self.loops[u]));
            lp.into_iter().chain(
                self.adj[u]
                    .iter()
                    .filter(move |&&(v, _)| v > u)
                    .map(move |&(v, m)| (u, v, m)),
            )
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(r)` when every vertex has degree `r`. The graph on zero vertices
    /// is reported as 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        let mut degs = (0..self.n).map(|v| self.degree(v));
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&m| m > 0)
    }

    /// No loops and no pair with multiplicity two or more.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.adj.iter().flatten().all(|&(_, m)| m == 1)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Subgraph induced on `vertices` (relabelled `0..k` in the given order),
    /// keeping multiplicities and loops.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<MultiGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            if self.loops[v] > 0 {
                edges.push((i, i, self.loops[v]));
            }
            for &(w, m) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j, m));
                }
            }
        }
        MultiGraph::with_multiplicities(vertices.len(), edges)
    }

    /// Graph induced on the distinct neighbors of `v`, together with the map
    /// from new labels back to original vertices. `v` itself is never part of
    /// its neighborhood, even when it carries a loop.
    pub fn neighborhood_subgraph(&self, v: Vertex) -> Result<(MultiGraph, Vec<Vertex>)> {
        self.check_vertex(v)?;
        let nbrs: Vec<Vertex> = self.adj[v].iter().map(|&(w, _)| w).collect();
        let sub = self.induced_subgraph(&nbrs)?;
        Ok((sub, nbrs))
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[Vertex]) -> Result<MultiGraph> {
        if perm.len() != self.n {
            return Err(Error::precondition("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::precondition("not a permutation"));
            }
        }
        MultiGraph::with_multiplicities(
            self.n,
            self.edges().map(|(u, v, m)| (perm[u], perm[v], m)),
        )
    }

    /// Returns a copy with one copy of the edge `uv` removed.
    pub fn remove_edge_copy(&self, u: Vertex, v: Vertex) -> Result<MultiGraph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let key = edge_key(u, v);
        MultiGraph::with_multiplicities(
            self.n,
            self.edges()
                .map(|(a, b, m)| if (a, b) == key { (a, b, m - 1) } else { (a, b, m) }),
        )
    }

    /// Returns a copy with the given edges added (multiplicities accumulate).
    pub fn with_added_edges<I>(&self, extra: I) -> Result<MultiGraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        MultiGraph::with_multiplicities(
            self.n,
            self.edges().chain(extra.into_iter().map(|(u, v)| (u, v, 1))),
        )
    }

    /// Disjoint union, with `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let off = self.n;
        MultiGraph::with_multiplicities(
            self.n + other.n,
            self.edges()
                .chain(other.edges().map(|(u, v, m)| (u + off, v + off, m))),
        )
        .expect("labels are in range by construction")
    }

    /// Breadth-first distances from `src`; unreachable vertices get `None`.
    pub fn distances_from(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> MultiGraph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        MultiGraph::new(n, edges).unwrap()
    }

    #[test]
    fn complete_graph_degrees() {
        let g = k(4);
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert_eq!(g.regularity(), Some(3));
        assert!(g.is_simple());
    }

    #[test]
    fn repeated_pairs_accumulate() {
        let g = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(1, 0), 2);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.distinct_edge_count(), 3);
        assert!(!g.is_simple());
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn loop_counts_twice() {
        let g = MultiGraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert!(!g.is_simple());
        let (nb, map) = g.neighborhood_subgraph(0).unwrap();
        assert_eq!(nb.vertex_count(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn out_of_range_edge_is_named() {
        let err = MultiGraph::new(3, [(0, 1), (1, 3)]).unwrap_err();
        assert_eq!(err, Error::EdgeOutOfRange { u: 1, v: 3, n: 3 });
        assert!(err.to_string().contains("(1, 3)"));
        assert!(k(3).try_degree(3).is_err());
    }

    #[test]
    fn path_is_not_regular() {
        let p = MultiGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.regularity(), None);
    }

    #[test]
    fn neighborhoods() {
        let (nb, map) = k(4).neighborhood_subgraph(0).unwrap();
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(nb, k(3));

        let star = MultiGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (nb, _) = star.neighborhood_subgraph(0).unwrap();
        assert_eq!(nb.vertex_count(), 3);
        assert_eq!(nb.edge_count(), 0);
    }

    #[test]
    fn remove_one_copy() {
        let g = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let h = g.remove_edge_copy(1, 0).unwrap();
        assert_eq!(h.multiplicity(0, 1), 1);
        let h2 = h.remove_edge_copy(0, 1).unwrap();
        assert!(!h2.has_edge(0, 1));
        assert_eq!(h2.remove_edge_copy(0, 1), Err(Error::MissingEdge(0, 1)));
    }

    #[test]
    fn connectivity_and_union() {
        let two = k(3).disjoint_union(&k(3));
        assert_eq!(two.vertex_count(), 6);
        assert!(!two.is_connected());
        assert!(k(5).is_connected());
        assert_eq!(two.distances_from(0)[4], None);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(k(3).relabel(&[0, 0, 1]).is_err());
        let g = MultiGraph::new(3, [(0, 1)]).unwrap();
        let h = g.relabel(&[2, 1, 0]).unwrap();
        assert!(h.has_edge(2, 1));
        assert!(!h.has_edge(0, 1));
    }
}
