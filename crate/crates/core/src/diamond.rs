//! Diamond decompositions of optimal quintic graphs and the even cycle
//! decompositions (ECDs) of 4-regular graphs that encode them.
//!
//! In an optimal simple quintic graph on `2n` vertices every vertex is a
//! degree-3 vertex of exactly one diamond (`K4` minus an edge) and a degree-2
//! vertex of exactly one other, and the `n` diamonds partition the edge set.
//! Contracting each diamond to a point gives a 4-regular graph on `n`
//! vertices: every host vertex becomes the edge joining its two diamonds.
//!
//! Walking through the diamonds, one enters a diamond through one vertex of
//! its spoke pair (or side pair) and leaves through the other vertex of the
//! same pair; the next diamond is then entered through the opposite kind of
//! pair. Each diamond is therefore visited twice, once through each pair,
//! and the visits alternate along every closed walk. The walks form an even
//! cycle decomposition of the contracted graph. Visits through the side pair
//! sit at even positions, visits through the spoke pair at odd positions.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{edge_key, EdgeKey, MultiGraph, Vertex};
use crate::triangles::{enumerate_triangles, has_triangle_property_direct};

/// `K4` minus one edge. The spoke joins the two degree-3 vertices; the side
/// pair (the two degree-2 vertices) is not joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diamond {
    pub spoke: EdgeKey,
    pub side: EdgeKey,
}

impl Diamond {
    pub fn edges(&self) -> [EdgeKey; 5] {
        let (a, b) = self.spoke;
        let (c, d) = self.side;
        [
            (a, b),
            edge_key(a, c),
            edge_key(a, d),
            edge_key(b, c),
            edge_key(b, d),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondDecomposition {
    host: MultiGraph,
    /// Ordered by spoke.
    diamonds: Vec<Diamond>,
    /// Diamond in which each host vertex has degree 3.
    spoke_of: Vec<usize>,
    /// Diamond in which each host vertex has degree 2.
    side_of: Vec<usize>,
}

impl DiamondDecomposition {
    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn diamonds(&self) -> &[Diamond] {
        &self.diamonds
    }

    pub fn spokes(&self) -> BTreeSet<EdgeKey> {
        self.diamonds.iter().map(|d| d.spoke).collect()
    }

    pub fn spoke_diamond(&self, v: Vertex) -> usize {
        self.spoke_of[v]
    }

    pub fn side_diamond(&self, v: Vertex) -> usize {
        self.side_of[v]
    }
}

/// Splits a simple quintic graph into edge-disjoint diamonds, one spoke per
/// edge lying in exactly two triangles. Returns `None` when those edges do
/// not produce a decomposition with every vertex in the degree-3 role once
/// and the degree-2 role once; that happens exactly when the graph is not
/// optimal.
pub fn find_diamond_decomposition(g: &MultiGraph) -> Result<Option<DiamondDecomposition>> {
    if !g.is_simple() {
        return Err(Error::precondition("diamond decomposition needs a simple graph"));
    }
    if g.regularity() != Some(5) {
        return Err(Error::precondition("diamond decomposition needs a 5-regular graph"));
    }
    let n = g.vertex_count();
    let report = enumerate_triangles(g);
    let spokes: Vec<EdgeKey> = report.edges_in_at_least(2).collect();
    if spokes.len() * 2 != n || spokes.iter().any(|e| report.per_edge[e] != 2) {
        return Ok(None);
    }

    let mut diamonds = Vec::with_capacity(spokes.len());
    for &(u, v) in &spokes {
        let common: Vec<Vertex> = g
            .neighbors(u)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| w != v && g.has_edge(v, w))
            .collect();
        if common.len() != 2 || g.has_edge(common[0], common[1]) {
            return Ok(None);
        }
        diamonds.push(Diamond {
            spoke: (u, v),
            side: edge_key(common[0], common[1]),
        });
    }

    let mut spoke_of = vec![usize::MAX; n];
    let mut side_of = vec![usize::MAX; n];
    let mut covered: HashSet<EdgeKey> = HashSet::with_capacity(g.edge_count());
    for (i, d) in diamonds.iter().enumerate() {
        for x in [d.spoke.0, d.spoke.1] {
            if std::mem::replace(&mut spoke_of[x], i) != usize::MAX {
                return Ok(None);
            }
        }
        for x in [d.side.0, d.side.1] {
            if std::mem::replace(&mut side_of[x], i) != usize::MAX {
                return Ok(None);
            }
        }
        for e in d.edges() {
            if !covered.insert(e) {
                return Ok(None);
            }
        }
    }
    if covered.len() != g.edge_count() {
        return Ok(None);
    }
    Ok(Some(DiamondDecomposition {
        host: g.clone(),
        diamonds,
        spoke_of,
        side_of,
    }))
}

/// Contracts every diamond to a vertex. Diamond `i` becomes base vertex `i`;
/// host vertex `x` becomes the edge between its two diamonds.
pub fn contract_diamonds(dd: &DiamondDecomposition) -> (MultiGraph, Vec<Vertex>) {
    let edges = (0..dd.host.vertex_count()).map(|x| (dd.spoke_of[x], dd.side_of[x]));
    let base = MultiGraph::new(dd.diamonds.len(), edges).expect("diamond indices are in range");
    (base, (0..dd.diamonds.len()).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    /// A visit through the diamond's side (degree-2) pair.
    Even,
    /// A visit through the diamond's spoke (degree-3) pair.
    Odd,
}

impl Parity {
    fn of(position: usize) -> Self {
        if position.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

/// Closed walks over the vertices of a 4-regular base graph, each vertex
/// occurring exactly twice in total, with a parity per occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenCycleDecomposition {
    vertex_count: usize,
    cycles: Vec<Vec<Vertex>>,
    parity: Vec<Vec<Parity>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// A base pair is traversed more than once, in either direction.
    RepeatedOrReversedPair,
    /// A triangle of the base graph whose edges are never consecutive
    /// through a side-pair visit; the synthesized graph would have a triangle
    /// outside the diamonds.
    NonConsecutiveTrianglePattern,
    /// Both occurrences of a vertex have the same parity.
    ParityConflict,
    OddCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleViolation {
    pub kind: ViolationKind,
    pub witness: Vec<Vertex>,
}

impl EvenCycleDecomposition {
    /// Builds a decomposition from raw closed walks. Structural requirements:
    /// labels in range, every walk of length at least 2 without immediate
    /// repeats, and every vertex occurring exactly twice overall. Parities
    /// are assigned by position, flipping whole walks where needed so that
    /// the two occurrences of each vertex differ; the lowest-indexed walk of
    /// each linked group keeps position 0 even. Rule violations (odd walks,
    /// unresolvable parities, forbidden pair patterns) are left for
    /// [`validate_ecd`].
    pub fn from_cycles(vertex_count: usize, cycles: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut seen = vec![0usize; vertex_count];
        for (ci, c) in cycles.iter().enumerate() {
            if c.len() < 2 {
                return Err(Error::precondition(format!("cycle {ci} has fewer than 2 vertices")));
            }
            for (i, &x) in c.iter().enumerate() {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { v: x, n: vertex_count });
                }
                if c[(i + 1) % c.len()] == x {
                    return Err(Error::precondition(format!(
                        "cycle {ci} repeats vertex {x} consecutively"
                    )));
                }
                seen[x] += 1;
            }
        }
        if let Some(x) = seen.iter().position(|&s| s != 2) {
            return Err(Error::precondition(format!(
                "vertex {x} occurs {} times; every vertex must occur exactly twice",
                seen[x]
            )));
        }

        let offsets = Self::cycle_offsets(vertex_count, &cycles);
        let parity = cycles
            .iter()
            .zip(&offsets)
            .map(|(c, &off)| (0..c.len()).map(|i| Parity::of(i + off)).collect())
            .collect();
        let mut ecd = EvenCycleDecomposition {
            vertex_count,
            cycles,
            parity,
        };
        ecd.normalize();
        Ok(ecd)
    }

    /// Per-walk position offsets chosen greedily by breadth-first search over
    /// walks sharing a vertex.
    fn cycle_offsets(vertex_count: usize, cycles: &[Vec<Vertex>]) -> Vec<usize> {
        let mut occ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertex_count];
        for (ci, c) in cycles.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                occ[x].push((ci, i));
            }
        }
        let mut offset: Vec<Option<usize>> = vec![None; cycles.len()];
        for root in 0..cycles.len() {
            if offset[root].is_some() {
                continue;
            }
            offset[root] = Some(0);
            let mut stack = vec![root];
            while let Some(ci) = stack.pop() {
                let off = offset[ci].unwrap();
                for (i, &x) in cycles[ci].iter().enumerate() {
                    for &(cj, j) in &occ[x] {
                        if (cj, j) == (ci, i) || offset[cj].is_some() {
                            continue;
                        }
                        // (i + off) and (j + off_j) must differ in parity.
                        let want = (i + off + 1 + j) % 2;
                        offset[cj] = Some(want);
                        stack.push(cj);
                    }
                }
            }
        }
        offset.into_iter().map(|o| o.unwrap()).collect()
    }

    /// Rotates each walk to start at its smallest even-parity vertex (or its
    /// smallest vertex if it has none), turns it towards the smaller
    /// neighbour, and sorts the walks.
    fn normalize(&mut self) {
        let mut pairs: Vec<(Vec<Vertex>, Vec<Parity>)> = Vec::with_capacity(self.cycles.len());
        for (c, p) in self.cycles.iter().zip(&self.parity) {
            let len = c.len();
            let start = (0..len)
                .filter(|&i| p[i] == Parity::Even)
                .min_by_key(|&i| (c[i], i))
                .or_else(|| (0..len).min_by_key(|&i| (c[i], i)))
                .unwrap();
            let fwd = c[(start + 1) % len];
            let back = c[(start + len - 1) % len];
            let order: Vec<usize> = if back < fwd {
                (0..len).map(|k| (start + len - k) % len).collect()
            } else {
                (0..len).map(|k| (start + k) % len).collect()
            };
            pairs.push((
                order.iter().map(|&i| c[i]).collect(),
                order.iter().map(|&i| p[i]).collect(),
            ));
        }
        pairs.sort();
        (self.cycles, self.parity) = pairs.into_iter().unzip();
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn cycles(&self) -> &[Vec<Vertex>] {
        &self.cycles
    }

    pub fn parity(&self) -> &[Vec<Parity>] {
        &self.parity
    }

    /// The graph whose edges are the consecutive pairs of the walks.
    pub fn base(&self) -> MultiGraph {
        let edges = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])));
        MultiGraph::new(self.vertex_count, edges).expect("labels checked on construction")
    }

    /// Groups of walk indices linked by shared vertices.
    fn linked_groups(&self) -> Vec<Vec<usize>> {
        let mut owner: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (ci, c) in self.cycles.iter().enumerate() {
            for &x in c {
                owner[x].push(ci);
            }
        }
        let mut group = vec![usize::MAX; self.cycles.len()];
        let mut groups = Vec::new();
        for root in 0..self.cycles.len() {
            if group[root] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut members = vec![root];
            group[root] = id;
            let mut stack = vec![root];
            while let Some(ci) = stack.pop() {
                for &x in &self.cycles[ci] {
                    for &cj in &owner[x] {
                        if group[cj] == usize::MAX {
                            group[cj] = id;
                            members.push(cj);
                            stack.push(cj);
                        }
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        groups
    }

    /// Same walks with the parity of every occurrence in the given linked
    /// groups flipped.
    fn flipped(&self, groups: &[&Vec<usize>]) -> Self {
        let mut out = self.clone();
        for g in groups {
            for &ci in g.iter() {
                for p in &mut out.parity[ci] {
                    *p = p.flip();
                }
            }
        }
        out.normalize();
        out
    }

    /// `ecd <n> <cycle-count>` followed by one walk per line. Walks are
    /// written so that position 0 is even.
    pub fn to_text(&self) -> String {
        let mut out = format!("ecd {} {}\n", self.vertex_count, self.cycles.len());
        for c in &self.cycles {
            let line: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let at = |line: usize, msg: String| Error::Format {
            line: Some(line),
            msg,
        };
        let (hl, header) = lines.next().ok_or_else(|| Error::format("empty ecd input"))?;
        let (n, count) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["ecd", n, c] => (
                n.parse::<usize>().map_err(|e| at(hl, e.to_string()))?,
                c.parse::<usize>().map_err(|e| at(hl, e.to_string()))?,
            ),
            _ => return Err(at(hl, "expected header `ecd <n> <cycle-count>`".into())),
        };
        let mut cycles = Vec::with_capacity(count);
        for (ln, l) in lines {
            let c = l
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| at(ln, e.to_string()))?;
            cycles.push(c);
        }
        if cycles.len() != count {
            return Err(Error::format(format!(
                "header announces {count} cycles, found {}",
                cycles.len()
            )));
        }
        Self::from_cycles(n, cycles)
    }
}

/// Reads the walks off a diamond decomposition. Walks start at the smallest
/// diamond visited through its side pair and head towards the smaller
/// neighbour.
pub fn extract_ecd(dd: &DiamondDecomposition) -> Result<EvenCycleDecomposition> {
    let nd = dd.diamonds.len();
    // visit index: 2*d for the side visit, 2*d + 1 for the spoke visit
    let pair = |visit: usize| -> EdgeKey {
        let d = &dd.diamonds[visit / 2];
        if visit.is_multiple_of(2) {
            d.side
        } else {
            d.spoke
        }
    };
    // Leaving a visit through host vertex x leads to x's other diamond.
    let next_visit = |visit: usize, x: Vertex| -> usize {
        if visit.is_multiple_of(2) {
            2 * dd.spoke_of[x] + 1
        } else {
            2 * dd.side_of[x]
        }
    };

    let mut visited = vec![false; 2 * nd];
    let mut cycles = Vec::new();
    let mut parities = Vec::new();
    for start in 0..2 * nd {
        if visited[start] {
            continue;
        }
        let (p, q) = pair(start);
        let mut exit = if next_visit(start, q) / 2 < next_visit(start, p) / 2 {
            q
        } else {
            p
        };
        let mut visit = start;
        let mut cycle = Vec::new();
        let mut parity = Vec::new();
        loop {
            if visited[visit] {
                return Err(Error::Consistency(format!(
                    "diamond {} visited twice through the same pair",
                    visit / 2
                )));
            }
            visited[visit] = true;
            cycle.push(visit / 2);
            parity.push(if visit % 2 == 0 { Parity::Even } else { Parity::Odd });
            let next = next_visit(visit, exit);
            if next == start {
                break;
            }
            let (a, b) = pair(next);
            exit = if a == exit { b } else { a };
            visit = next;
        }
        if cycle.len() % 2 != 0 {
            return Err(Error::Consistency("extracted walk has odd length".into()));
        }
        cycles.push(cycle);
        parities.push(parity);
    }
    let mut ecd = EvenCycleDecomposition {
        vertex_count: nd,
        cycles,
        parity: parities,
    };
    ecd.normalize();
    Ok(ecd)
}

/// Lists every rule violation; an empty list means the decomposition
/// synthesizes to an optimal quintic graph.
pub fn validate_ecd(ecd: &EvenCycleDecomposition) -> Vec<RuleViolation> {
    let mut out = Vec::new();

    for c in &ecd.cycles {
        if c.len() % 2 != 0 {
            out.push(RuleViolation {
                kind: ViolationKind::OddCycle,
                witness: c.clone(),
            });
        }
    }

    let mut pair_count: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    for c in &ecd.cycles {
        for i in 0..c.len() {
            *pair_count.entry(edge_key(c[i], c[(i + 1) % c.len()])).or_default() += 1;
        }
    }
    for (&(x, y), &k) in &pair_count {
        if k > 1 {
            out.push(RuleViolation {
                kind: ViolationKind::RepeatedOrReversedPair,
                witness: vec![x, y],
            });
        }
    }

    let mut seen: Vec<Vec<Parity>> = vec![Vec::new(); ecd.vertex_count];
    for (c, p) in ecd.cycles.iter().zip(&ecd.parity) {
        for (&x, &px) in c.iter().zip(p) {
            seen[x].push(px);
        }
    }
    for (x, ps) in seen.iter().enumerate() {
        if ps.len() == 2 && ps[0] == ps[1] {
            out.push(RuleViolation {
                kind: ViolationKind::ParityConflict,
                witness: vec![x],
            });
        }
    }

    // A base triangle {x, y, z} is harmless only if some vertex of it is
    // visited through its side pair between the other two.
    let mut blocked: HashSet<[Vertex; 3]> = HashSet::new();
    for (c, p) in ecd.cycles.iter().zip(&ecd.parity) {
        let len = c.len();
        if len < 3 {
            continue;
        }
        for i in 0..len {
            if p[i] == Parity::Even {
                let mut t = [c[(i + len - 1) % len], c[i], c[(i + 1) % len]];
                t.sort_unstable();
                blocked.insert(t);
            }
        }
    }
    let base = MultiGraph::new(ecd.vertex_count, pair_count.keys().copied())
        .expect("labels checked on construction");
    for t in enumerate_triangles(&base).triangles {
        if !blocked.contains(&t.vertices) {
            out.push(RuleViolation {
                kind: ViolationKind::NonConsecutiveTrianglePattern,
                witness: t.vertices.to_vec(),
            });
        }
    }

    out.sort();
    out
}

/// Replaces every base vertex by a diamond: each consecutive pair of a walk
/// becomes a host vertex, odd visits give the spoke pair and even visits the
/// side pair. The result is checked to be simple, quintic and optimal.
pub fn synthesize_quintic(ecd: &EvenCycleDecomposition) -> Result<MultiGraph> {
    let violations = validate_ecd(ecd);
    if !violations.is_empty() {
        return Err(Error::EcdRejected(violations));
    }
    let n = ecd.vertex_count;
    let mut spoke: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut side: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut next_link = 0;
    for (c, p) in ecd.cycles.iter().zip(&ecd.parity) {
        let first = next_link;
        let len = c.len();
        for i in 0..len {
            let incoming = first + (i + len - 1) % len;
            let outgoing = first + i;
            let pair = if p[i] == Parity::Odd { &mut spoke[c[i]] } else { &mut side[c[i]] };
            pair.extend([incoming, outgoing]);
        }
        next_link += len;
    }
    let mut edges = Vec::with_capacity(5 * n);
    for d in 0..n {
        let (&[a, b], &[c, e]) = (&spoke[d][..], &side[d][..]) else {
            return Err(Error::Consistency(format!("diamond {d} lacks a spoke or side visit")));
        };
        edges.extend([(a, b), (a, c), (a, e), (b, c), (b, e)]);
    }
    let g = MultiGraph::new(next_link, edges)?;
    let report = enumerate_triangles(&g);
    if !g.is_simple()
        || g.regularity() != Some(5)
        || !has_triangle_property_direct(&g)
        || report.weighted_count != g.vertex_count() as u64
    {
        return Err(Error::Consistency(format!(
            "synthesized graph is not an optimal quintic graph ({} triangles on {} vertices)",
            report.weighted_count,
            g.vertex_count()
        )));
    }
    Ok(g)
}

/// Every rule-valid even cycle decomposition of a simple 4-regular base
/// graph, one per isomorphism class of the synthesized quintic graph, in a
/// fixed order, truncated at `limit`.
///
/// Walks are generated from transition systems (a pairing of the four edges
/// at each vertex, three choices per vertex); each linked group of walks can
/// carry either parity.
pub fn enumerate_ecds(base: &MultiGraph, limit: usize) -> Result<Vec<EvenCycleDecomposition>> {
    if !base.is_simple() || base.regularity() != Some(4) {
        return Err(Error::precondition("base graph must be simple and 4-regular"));
    }
    let n = base.vertex_count();
    if n > 12 {
        return Err(Error::precondition(format!(
            "transition enumeration is limited to 12 base vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    if limit == 0 || n == 0 {
        return Ok(out);
    }

    let edges: Vec<EdgeKey> = base.edges().map(|(u, v, _)| (u, v)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    const PAIRINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

    let mut seen_forms: HashSet<Vec<u8>> = HashSet::new();
    let mut choice = vec![0usize; n];
    // partner[v][k]: for the k-th incident edge of v, the index of its partner
    let mut partner = vec![[0usize; 4]; n];
    loop {
        for v in 0..n {
            for &(a, b) in &PAIRINGS[choice[v]] {
                partner[v][a] = b;
                partner[v][b] = a;
            }
        }
        if let Some(cycles) = trace_walks(&edges, &incident, &partner) {
            if cycles.iter().all(|c| c.len() % 2 == 0) {
                let ecd = EvenCycleDecomposition::from_cycles(n, cycles)?;
                let groups = ecd.linked_groups();
                for mask in 0u32..(1 << groups.len()) {
                    let flip: Vec<&Vec<usize>> = groups
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, g)| g)
                        .collect();
                    let candidate = ecd.flipped(&flip);
                    if !validate_ecd(&candidate).is_empty() {
                        continue;
                    }
                    let g = synthesize_quintic(&candidate)?;
                    if seen_forms.insert(canonical_form(&g)) {
                        out.push(candidate);
                        if out.len() == limit {
                            return Ok(out);
                        }
                    }
                }
            }
        }
        // next transition system, last vertex fastest
        let mut v = n;
        loop {
            if v == 0 {
                return Ok(out);
            }
            v -= 1;
            choice[v] += 1;
            if choice[v] < 3 {
                break;
            }
            choice[v] = 0;
        }
    }
}

/// Closed walks of a transition system. `None` if some walk would be a
/// single edge traversed back and forth.
fn trace_walks(
    edges: &[EdgeKey],
    incident: &[Vec<usize>],
    partner: &[[usize; 4]],
) -> Option<Vec<Vec<Vertex>>> {
    let mut used = vec![false; edges.len()];
    let mut walks = Vec::new();
    let local = |v: Vertex, e: usize| incident[v].iter().position(|&x| x == e).unwrap();
    for e0 in 0..edges.len() {
        if used[e0] {
            continue;
        }
        let start = edges[e0].0;
        let mut cur = start;
        let mut e = e0;
        let mut walk = Vec::new();
        loop {
            used[e] = true;
            walk.push(cur);
            let (a, b) = edges[e];
            let w = if a == cur { b } else { a };
            let f = incident[w][partner[w][local(w, e)]];
            if w == start && f == e0 {
                break;
            }
            if used[f] {
                return None;
            }
            cur = w;
            e = f;
        }
        walks.push(walk);
    }
    Some(walks)
}
