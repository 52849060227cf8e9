//! Constructions of regular graphs with every edge in a triangle.

use std::collections::BTreeSet;
use std::fmt;

use crate::bounds::is_optimal;
use crate::error::{Error, Result};
use crate::graph::{edge_key, EdgeKey, MultiGraph, Vertex};
use crate::matching::{is_perfect_matching, perfect_matching};
use crate::triangles::{enumerate_triangles, has_triangle_property_direct};

/// The quintic graph `L_n` on `2n` vertices.
///
/// Vertices `0..n` form a cycle; `k` is joined to `n + k`; and `n + k` is
/// joined to `n + (k + 2) mod n`, `(k - 2) mod n` and `(k + 1) mod n`.
/// The result is 5-regular for every `n >= 3` and simple from `n = 5` on.
pub fn construct_ln(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::precondition(format!("L_n needs n >= 3, got {n}")));
    }
    let mut edges = Vec::with_capacity(5 * n);
    for k in 0..n {
        edges.push((k, (k + 1) % n));
        edges.push((k, n + k));
        edges.push((n + k, n + (k + 2) % n));
        edges.push((n + k, (k + n - 2) % n));
        edges.push((n + k, (k + 1) % n));
    }
    MultiGraph::new(2 * n, edges)
}

/// The spoke edges `(k, n + k)` of `L_n`.
pub fn ln_spokes(n: usize) -> BTreeSet<EdgeKey> {
    (0..n).map(|k| (k, n + k)).collect()
}

/// One vertex per edge of `g`, numbered in lexicographic edge order; two
/// vertices are adjacent when their edges share an endpoint.
pub fn line_graph(g: &MultiGraph) -> Result<MultiGraph> {
    if !g.is_simple() {
        return Err(Error::precondition("line graphs are only built for simple graphs"));
    }
    let edges: Vec<EdgeKey> = g.edges().map(|(u, v, _)| (u, v)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut out = Vec::new();
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                out.push((i, j));
            }
        }
    }
    MultiGraph::new(edges.len(), out)
}

/// Line graph of a simple, cubic, triangle-free graph, certified optimal
/// before it is returned.
pub fn optimal_quartic_from_cubic(g: &MultiGraph) -> Result<MultiGraph> {
    if !g.is_simple() {
        return Err(Error::precondition("input must be simple"));
    }
    if g.regularity() != Some(3) {
        return Err(Error::precondition("input must be 3-regular"));
    }
    if let Some(t) = enumerate_triangles(g).triangles.first() {
        return Err(Error::precondition(format!(
            "input must be triangle-free, found triangle {:?}",
            t.vertices
        )));
    }
    let lg = line_graph(g)?;
    if !is_optimal(&lg)? {
        return Err(Error::Consistency("line graph failed the optimality check".into()));
    }
    Ok(lg)
}

/// Adds the edges of each triple, one triple at a time, and checks that each
/// addition raises the weighted triangle count by exactly one.
pub fn augment_with_triangles(g: &MultiGraph, triples: &[[Vertex; 3]]) -> Result<MultiGraph> {
    let mut used = vec![false; g.vertex_count()];
    for t in triples {
        for &x in t {
            g.check_vertex(x)?;
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(Error::precondition(format!("triple {t:?} repeats a vertex")));
        }
        for &x in t {
            if std::mem::replace(&mut used[x], true) {
                return Err(Error::OverlappingTriples(*t));
            }
        }
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            if g.has_edge(a, b) {
                let (u, v) = edge_key(a, b);
                return Err(Error::EdgeAlreadyPresent { triple: *t, u, v });
            }
        }
    }

    let mut current = g.clone();
    let mut count = enumerate_triangles(&current).weighted_count;
    for t in triples {
        let next = current.with_added_edges([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])?;
        let next_count = enumerate_triangles(&next).weighted_count;
        if next_count != count + 1 {
            return Err(Error::ExtraTriangle(*t));
        }
        current = next;
        count = next_count;
    }
    Ok(current)
}

/// The Petersen graph's line graph with five triangles added on triples of
/// vertices pairwise at distance 3: a 6-regular graph on 15 vertices with 15
/// triangles.
pub fn petersen_six_regular() -> MultiGraph {
    let lp = line_graph(&named_graph(NamedGraph::Petersen)).expect("Petersen is simple");
    let triples = distance_three_partition(&lp);
    let triples = triples.expect("the line graph of Petersen splits into distance-3 triples");
    augment_with_triangles(&lp, &triples).expect("distance-3 triples never close other triangles")
}

/// Lexicographically least partition of the vertices into triples that are
/// pairwise at distance exactly 3 and can be added without extra triangles.
fn distance_three_partition(g: &MultiGraph) -> Option<Vec<[Vertex; 3]>> {
    let n = g.vertex_count();
    if !n.is_multiple_of(3) {
        return None;
    }
    let dist: Vec<Vec<Option<usize>>> = (0..n).map(|v| g.distances_from(v)).collect();
    let far = |a: Vertex, b: Vertex| dist[a][b] == Some(3);

    fn search(
        g: &MultiGraph,
        far: &dyn Fn(Vertex, Vertex) -> bool,
        used: &mut Vec<bool>,
        chosen: &mut Vec<[Vertex; 3]>,
    ) -> bool {
        let Some(a) = used.iter().position(|&u| !u) else {
            return augment_with_triangles(g, chosen).is_ok();
        };
        let n = used.len();
        used[a] = true;
        for b in a + 1..n {
            if used[b] || !far(a, b) {
                continue;
            }
            used[b] = true;
            for c in b + 1..n {
                if used[c] || !far(a, c) || !far(b, c) {
                    continue;
                }
                used[c] = true;
                chosen.push([a, b, c]);
                if search(g, far, used, chosen) {
                    return true;
                }
                chosen.pop();
                used[c] = false;
            }
            used[b] = false;
        }
        used[a] = false;
        false
    }

    let mut used = vec![false; n];
    let mut chosen = Vec::new();
    search(g, &far, &mut used, &mut chosen).then_some(chosen)
}

/// `L_{3j}` plus, within each half, triangles on the triples of labels that are
/// congruent mod `j`. Certified optimal 7-regular on `6j` vertices.
pub fn seven_regular_from_l3j(j: usize) -> Result<MultiGraph> {
    if j < 5 {
        return Err(Error::precondition(format!(
            "the mod-j triangles only avoid extra triangles for j >= 5, got {j}"
        )));
    }
    let n = 3 * j;
    let base = construct_ln(n)?;
    let mut triples = Vec::with_capacity(2 * j);
    for offset in [0, n] {
        for i in 0..j {
            triples.push([offset + i, offset + i + j, offset + i + 2 * j]);
        }
    }
    let g = augment_with_triangles(&base, &triples)?;
    if !is_optimal(&g)? {
        return Err(Error::Consistency(format!("7-regular graph from L_{n} is not optimal")));
    }
    Ok(g)
}

/// Raises the multiplicity of every edge of a perfect matching to two.
pub fn double_one_factor(g: &MultiGraph, matching: &[(Vertex, Vertex)]) -> Result<MultiGraph> {
    if !g.is_simple() || g.regularity() != Some(4) {
        return Err(Error::precondition("input must be a simple 4-regular graph"));
    }
    if !has_triangle_property_direct(g) {
        return Err(Error::LacksTriangleProperty);
    }
    if !is_perfect_matching(g, matching) {
        return Err(Error::NotPerfectMatching(format!("{matching:?}")));
    }
    g.with_added_edges(matching.iter().copied())
}

/// Doubles the deterministic perfect matching found by the blossom matcher.
pub fn double_some_one_factor(g: &MultiGraph) -> Result<(MultiGraph, Vec<EdgeKey>)> {
    let m = perfect_matching(g)
        .ok_or_else(|| Error::NotPerfectMatching("graph has no perfect matching".into()))?;
    Ok((double_one_factor(g, &m)?, m))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Petersen,
    Cube,
    K4,
    K33,
}

impl std::str::FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "petersen" => Ok(NamedGraph::Petersen),
            "cube" | "q3" => Ok(NamedGraph::Cube),
            "k4" => Ok(NamedGraph::K4),
            "k33" | "k3,3" => Ok(NamedGraph::K33),
            other => Err(Error::precondition(format!("unknown named graph `{other}`"))),
        }
    }
}

/// Fixed presentations: Petersen with outer 5-cycle `0..5`, spokes `i, i+5`
/// and inner pentagram; the cube on 3-bit labels; `K4`; `K_{3,3}` with sides
/// `{0,1,2}` and `{3,4,5}`.
pub fn named_graph(name: NamedGraph) -> MultiGraph {
    let edges: Vec<(Vertex, Vertex)> = match name {
        NamedGraph::Petersen => (0..5)
            .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
            .collect(),
        NamedGraph::Cube => (0..8usize)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|&(u, v)| u < v)
            .collect(),
        NamedGraph::K4 => (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect(),
        NamedGraph::K33 => (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect(),
    };
    let n = match name {
        NamedGraph::Petersen => 10,
        NamedGraph::Cube => 8,
        NamedGraph::K4 => 4,
        NamedGraph::K33 => 6,
    };
    MultiGraph::new(n, edges).expect("fixed presentations are in range")
}

/// Provenance of a constructed graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Ln,
    LineGraph,
    PetersenSix,
    SevenFromL3j,
    DoubledOneFactor,
    External,
}

impl GraphFamily {
    fn arity(self) -> usize {
        match self {
            GraphFamily::Ln | GraphFamily::SevenFromL3j => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamilyTag {
    family: GraphFamily,
    parameters: Vec<usize>,
}

impl GraphFamilyTag {
    pub fn new(family: GraphFamily, parameters: Vec<usize>) -> Result<Self> {
        if parameters.len() != family.arity() {
            return Err(Error::precondition(format!(
                "{family:?} takes {} parameter(s), got {}",
                family.arity(),
                parameters.len()
            )));
        }
        Ok(GraphFamilyTag { family, parameters })
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn parameters(&self) -> &[usize] {
        &self.parameters
    }
}

impl fmt::Display for GraphFamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.family)?;
        for p in &self.parameters {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// A graph together with where it came from and the edges worth
/// highlighting when it is drawn.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: MultiGraph,
    pub tag: GraphFamilyTag,
    pub highlights: BTreeSet<EdgeKey>,
}

impl Construction {
    pub fn ln(n: usize) -> Result<Self> {
        Ok(Construction {
            graph: construct_ln(n)?,
            tag: GraphFamilyTag::new(GraphFamily::Ln, vec![n])?,
            highlights: ln_spokes(n),
        })
    }

    pub fn line_graph_of(name: NamedGraph) -> Result<Self> {
        Ok(Construction {
            graph: line_graph(&named_graph(name))?,
            tag: GraphFamilyTag::new(GraphFamily::LineGraph, vec![])?,
            highlights: BTreeSet::new(),
        })
    }

    pub fn petersen_six() -> Result<Self> {
        Ok(Construction {
            graph: petersen_six_regular(),
            tag: GraphFamilyTag::new(GraphFamily::PetersenSix, vec![])?,
            highlights: BTreeSet::new(),
        })
    }

    pub fn seven_regular(j: usize) -> Result<Self> {
        Ok(Construction {
            graph: seven_regular_from_l3j(j)?,
            tag: GraphFamilyTag::new(GraphFamily::SevenFromL3j, vec![j])?,
            highlights: BTreeSet::new(),
        })
    }

    /// Line graph of the cube with a perfect matching doubled.
    pub fn doubled_cube() -> Result<Self> {
        let lg = line_graph(&named_graph(NamedGraph::Cube))?;
        let (graph, matching) = double_some_one_factor(&lg)?;
        Ok(Construction {
            graph,
            tag: GraphFamilyTag::new(GraphFamily::DoubledOneFactor, vec![])?,
            highlights: matching.into_iter().collect(),
        })
    }

    pub fn external(graph: MultiGraph) -> Self {
        Construction {
            graph,
            tag: GraphFamilyTag {
                family: GraphFamily::External,
                parameters: vec![],
            },
            highlights: BTreeSet::new(),
        }
    }
}
