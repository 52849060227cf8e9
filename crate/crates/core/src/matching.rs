//! Maximum matching in general graphs by Edmonds' blossom algorithm.
//!
//! Deterministic: vertices are scanned in label order and neighbours in
//! sorted order, so the same graph always yields the same matching.

use std::collections::VecDeque;

use crate::graph::{edge_key, EdgeKey, MultiGraph, Vertex};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a MultiGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a MultiGraph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.vertex_count();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.vertex_count() {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let ppv = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = ppv;
            }
        }
        self.mate
    }
}

/// A maximum matching as sorted edge keys. Parallel edges and loops do not
/// change the answer.
pub fn maximum_matching(g: &MultiGraph) -> Vec<EdgeKey> {
    let mate = Blossom::new(g).run();
    let mut out: Vec<EdgeKey> = (0..g.vertex_count())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| edge_key(v, mate[v]))
        .collect();
    out.sort_unstable();
    out
}

/// A perfect matching if one exists.
pub fn perfect_matching(g: &MultiGraph) -> Option<Vec<EdgeKey>> {
    let m = maximum_matching(g);
    (2 * m.len() == g.vertex_count()).then_some(m)
}

/// Checks that `matching` uses edges of `g` and covers every vertex once.
pub fn is_perfect_matching(g: &MultiGraph, matching: &[(Vertex, Vertex)]) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for &(u, v) in matching {
        if u == v || !g.has_edge(u, v) {
            return false;
        }
        for x in [u, v] {
            if std::mem::replace(&mut covered[x], true) {
                return false;
            }
        }
    }
    covered.into_iter().all(|c| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn even_cycle_has_perfect_matching() {
        let g = cycle(8);
        let m = perfect_matching(&g).unwrap();
        assert!(is_perfect_matching(&g, &m));
    }

    #[test]
    fn odd_cycle_does_not() {
        assert!(perfect_matching(&cycle(7)).is_none());
        assert_eq!(maximum_matching(&cycle(7)).len(), 3);
    }

    #[test]
    fn blossom_is_needed() {
        // A triangle with pendant paths: greedy matching in label order fails
        // without contracting the odd cycle.
        let g = MultiGraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)],
        )
        .unwrap();
        let m = perfect_matching(&g).unwrap();
        assert!(is_perfect_matching(&g, &m));
        assert_eq!(m, vec![(0, 4), (1, 5), (2, 3)]);
    }

    #[test]
    fn petersen_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = MultiGraph::new(10, edges).unwrap();
        let m = perfect_matching(&g).unwrap();
        assert!(is_perfect_matching(&g, &m));
    }

    #[test]
    fn matching_validation() {
        let g = cycle(4);
        assert!(is_perfect_matching(&g, &[(0, 1), (2, 3)]));
        assert!(!is_perfect_matching(&g, &[(0, 1)]));
        assert!(!is_perfect_matching(&g, &[(0, 2), (1, 3)]));
        assert!(!is_perfect_matching(&g, &[(0, 1), (1, 2)]));
    }
}
