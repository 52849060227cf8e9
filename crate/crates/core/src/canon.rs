//! Canonical labelling by colour refinement and individualization.
//!
//! The search tree is the usual one: refine to an equitable partition, pick
//! the first smallest non-singleton cell, individualize each of its vertices
//! in turn. Leaves are compared by their relabelled edge lists and the
//! largest one wins. Automorphisms discovered at equal leaves prune sibling
//! branches that lie in the same orbit of the pointwise stabilizer of the
//! current path. Multiplicities and loops take part as edge colours.

use std::cmp::Ordering;

use crate::graph::{MultiGraph, Vertex};

type Certificate = Vec<(u32, u32, u32)>;

/// Returns a permutation `old -> new` that maps `g` onto its canonical form.
pub fn canonical_labeling(g: &MultiGraph) -> Vec<Vertex> {
    let mut search = Search::new(g);
    let init = initial_colors(g);
    let mut path = Vec::new();
    search.descend(init, &mut path);
    search.best.expect("search visits at least one leaf").1
}

/// Byte string that is equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &MultiGraph) -> Vec<u8> {
    let perm = canonical_labeling(g);
    encode(g.vertex_count(), &certificate(g, &perm))
}

/// The canonically relabelled graph.
pub fn canonical_graph(g: &MultiGraph) -> MultiGraph {
    g.relabel(&canonical_labeling(g))
        .expect("canonical labeling is a permutation")
}

pub fn are_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.distinct_edge_count() != h.distinct_edge_count()
    {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

fn encode(n: usize, cert: &Certificate) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 12 * cert.len());
    out.extend_from_slice(&(n as u32).to_le_bytes());
    for &(u, v, m) in cert {
        out.extend_from_slice(&u.to_le_bytes());
        out.extend_from_slice(&v.to_le_bytes());
        out.extend_from_slice(&m.to_le_bytes());
    }
    out
}

fn certificate(g: &MultiGraph, perm: &[Vertex]) -> Certificate {
    let mut cert: Certificate = g
        .edges()
        .map(|(u, v, m)| {
            let (a, b) = (perm[u] as u32, perm[v] as u32);
            (a.min(b), a.max(b), m)
        })
        .collect();
    cert.sort_unstable();
    cert
}

fn initial_colors(g: &MultiGraph) -> Vec<u32> {
    let keys: Vec<(usize, u32)> = (0..g.vertex_count())
        .map(|v| (g.degree(v), g.loop_multiplicity(v)))
        .collect();
    rank(&keys)
}

/// Replaces each key by its rank among the distinct keys.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Refines `colors` until equitable. Colour order is preserved: a refined
/// cell always sorts inside the cell it came from.
fn refine(g: &MultiGraph, mut colors: Vec<u32>) -> Vec<u32> {
    let mut cells = cell_count(&colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u32)>)> = (0..g.vertex_count())
            .map(|v| {
                let mut s: Vec<(u32, u32)> =
                    g.neighbors(v).iter().map(|&(w, m)| (colors[w], m)).collect();
                s.sort_unstable();
                (colors[v], s)
            })
            .collect();
        let next = rank(&sigs);
        let next_cells = cell_count(&next);
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

fn individualize(colors: &[u32], v: Vertex) -> Vec<u32> {
    let keys: Vec<(u32, bool)> = colors
        .iter()
        .enumerate()
        .map(|(w, &c)| (c, w != v))
        .collect();
    rank(&keys)
}

struct Search<'a> {
    g: &'a MultiGraph,
    first: Option<(Certificate, Vec<Vertex>)>,
    best: Option<(Certificate, Vec<Vertex>)>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a MultiGraph) -> Self {
        Search {
            g,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<Vertex>) {
        let colors = refine(self.g, colors);
        let n = self.g.vertex_count();
        if cell_count(&colors) == n {
            self.leaf(colors.iter().map(|&c| c as usize).collect());
            return;
        }
        let mut sizes = vec![0usize; cell_count(&colors)];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..sizes.len())
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c))
            .unwrap() as u32;
        let cell: Vec<Vertex> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let orbit = self.stabilizer_orbits(path);
                if tried.iter().any(|&t| find(&orbit, t) == find(&orbit, v)) {
                    continue;
                }
            }
            tried.push(v);
            path.push(v);
            self.descend(individualize(&colors, v), path);
            path.pop();
        }
    }

    fn leaf(&mut self, perm: Vec<Vertex>) {
        let cert = certificate(self.g, &perm);
        match &self.first {
            None => {
                self.first = Some((cert.clone(), perm.clone()));
                self.best = Some((cert, perm));
                return;
            }
            Some((fc, fp)) if *fc == cert => {
                let aut = automorphism(fp, &perm);
                self.automorphisms.push(aut);
            }
            _ => {}
        }
        let (bc, bp) = self.best.as_ref().unwrap();
        match cert.cmp(bc) {
            Ordering::Greater => self.best = Some((cert, perm)),
            Ordering::Equal => {
                if self.first.as_ref().map(|f| &f.1) != Some(bp) {
                    let aut = automorphism(bp, &perm);
                    self.automorphisms.push(aut);
                }
            }
            Ordering::Less => {}
        }
    }

    /// Union-find parents for the orbits of the automorphisms found so far
    /// that fix every vertex of `path`.
    fn stabilizer_orbits(&self, path: &[Vertex]) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        for aut in &self.automorphisms {
            if path.iter().all(|&p| aut[p] == p) {
                for v in 0..n {
                    union(&mut parent, v, aut[v]);
                }
            }
        }
        parent
    }
}

/// Given two leaf labelings producing the same relabelled graph, the map
/// `v -> q^-1(p(v))` is an automorphism.
fn automorphism(p: &[Vertex], q: &[Vertex]) -> Vec<Vertex> {
    let mut q_inv = vec![0; q.len()];
    for (v, &img) in q.iter().enumerate() {
        q_inv[img] = v;
    }
    p.iter().map(|&img| q_inv[img]).collect()
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
