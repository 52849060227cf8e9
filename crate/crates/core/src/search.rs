//! Exhaustive generation of small simple regular graphs, one per
//! isomorphism class.
//!
//! Orderly generation: a graph on vertices `0..k` is written as the column
//! string `a01 | a02 a12 | a03 a13 a23 | ...` and is canonical when no
//! relabeling gives a lexicographically larger string. Every prefix of a
//! canonical graph is canonical, so graphs are grown one vertex at a time,
//! choosing the new vertex's earlier neighbours and discarding any prefix
//! that is not canonical. In a canonical connected graph every vertex after
//! the first has an earlier neighbour, which lets the connected search prune
//! early.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use log::{debug, info};
use rayon::prelude::*;

use crate::bounds::is_optimal;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::io::parse_graph6;

/// Largest order the internal generator accepts.
pub const MAX_ORDER: usize = 12;

/// Prefix size at which the search tree is split into parallel work units.
const SPLIT_DEPTH: usize = 6;

#[derive(Clone, Debug, Default)]
pub struct SearchConfig {
    pub connected_only: bool,
    /// Stop after this many graphs. A limited search runs on one thread so
    /// that the graphs returned are the first ones in generation order.
    pub limit: Option<usize>,
    pub time_budget: Option<Duration>,
}

impl SearchConfig {
    pub fn connected() -> Self {
        SearchConfig {
            connected_only: true,
            ..Self::default()
        }
    }
}

/// One representative per isomorphism class of simple `r`-regular graphs on
/// `n` vertices, in a fixed order.
pub fn enumerate_regular_graphs(n: usize, r: usize, connected_only: bool) -> Result<Vec<MultiGraph>> {
    enumerate_regular_graphs_with(
        n,
        r,
        &SearchConfig {
            connected_only,
            ..SearchConfig::default()
        },
    )
}

pub fn enumerate_regular_graphs_with(n: usize, r: usize, config: &SearchConfig) -> Result<Vec<MultiGraph>> {
    if !(n * r).is_multiple_of(2) {
        return Err(Error::BadParameters {
            regularity: r,
            vertex_count: n,
            reason: "degree times vertex count must be even",
        });
    }
    if n > MAX_ORDER {
        return Err(Error::Envelope { n, r });
    }
    let start = Instant::now();
    let gen = Generator {
        n,
        r,
        connected_only: config.connected_only,
        deadline: config.time_budget.map(|b| (start, b)),
        aborted: AtomicBool::new(false),
    };
    if n == 0 {
        return Ok(vec![MultiGraph::empty(0)]);
    }
    if r >= n {
        return Ok(Vec::new());
    }

    let masks = match config.limit {
        Some(0) => Vec::new(),
        Some(limit) => {
            let mut out = Vec::new();
            let mut state = State::new();
            gen.extend(&mut state, 0, usize::MAX, &mut |adj: &[u32]| {
                out.push(adj.to_vec());
                out.len() < limit
            });
            out
        }
        None => {
            let split = SPLIT_DEPTH.min(n);
            let mut units = Vec::new();
            gen.collect_units(&mut State::new(), 0, split, &mut units);
            debug!("search {n} {r}: {} work units at depth {split}", units.len());
            let parts: Vec<Vec<Vec<u32>>> = units
                .into_par_iter()
                .map(|mut s| {
                    let mut out = Vec::new();
                    gen.extend(&mut s, split, usize::MAX, &mut |adj: &[u32]| {
                        out.push(adj.to_vec());
                        true
                    });
                    out
                })
                .collect();
            parts.into_iter().flatten().collect()
        }
    };
    if gen.aborted.load(Ordering::Relaxed) {
        return Err(Error::TimeBudget(config.time_budget.unwrap_or_default()));
    }
    info!(
        "search {n} {r}{}: {} graphs in {:.2?}",
        if config.connected_only { " connected" } else { "" },
        masks.len(),
        start.elapsed()
    );
    Ok(masks.iter().map(|adj| to_graph(adj)).collect())
}

fn to_graph(adj: &[u32]) -> MultiGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    MultiGraph::new(n, edges).expect("vertices are in range")
}

#[derive(Clone)]
struct State {
    adj: [u32; MAX_ORDER],
    deg: [usize; MAX_ORDER],
    /// Column values: bit `j - 1 - i` of `col[j]` is the adjacency of `i`
    /// and `j`, so vertex 0 is the most significant bit.
    col: [u32; MAX_ORDER],
}

impl State {
    fn new() -> Self {
        State {
            adj: [0; MAX_ORDER],
            deg: [0; MAX_ORDER],
            col: [0; MAX_ORDER],
        }
    }
}

struct Generator {
    n: usize,
    r: usize,
    connected_only: bool,
    deadline: Option<(Instant, Duration)>,
    aborted: AtomicBool,
}

impl Generator {
    fn out_of_time(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return true;
        }
        if let Some((start, budget)) = self.deadline {
            if start.elapsed() > budget {
                self.aborted.store(true, Ordering::Relaxed);
                return true;
            }
        }
        false
    }

    /// Canonical extensions of the prefix `0..j` by vertex `j`, in order.
    fn children(&self, s: &State, j: usize, mut f: impl FnMut(u32)) {
        let (n, r) = (self.n, self.r);
        let remaining_after = n - j - 1;
        let mut avail = 0u32;
        let mut forced = 0u32;
        for i in 0..j {
            let deficit = r - s.deg[i];
            if deficit > 0 {
                avail |= 1 << i;
            }
            // Vertex i needs more neighbours than vertices left after j.
            if deficit > remaining_after {
                forced |= 1 << i;
            }
        }
        let free = avail & !forced;
        let min_back = r.saturating_sub(remaining_after);
        // Submasks of `free`, largest first.
        let mut sub = free;
        loop {
            let set = sub | forced;
            let size = set.count_ones() as usize;
            let ok_conn = !self.connected_only || j == 0 || set != 0;
            if size <= r && size >= min_back && ok_conn {
                f(set);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }

    /// Walks the tree below a prefix of size `j`. Stops descending at prefix
    /// size `stop`; `emit` sees complete graphs and returns false to end the
    /// search.
    fn extend(&self, s: &mut State, j: usize, stop: usize, emit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if j == self.n {
            return emit(&s.adj[..j]);
        }
        if j == stop {
            return true;
        }
        if self.out_of_time() {
            return false;
        }
        let mut sets = Vec::new();
        self.children(s, j, |set| sets.push(set));
        for set in sets {
            if !self.push(s, j, set) {
                continue;
            }
            let go_on = self.extend(s, j + 1, stop, emit);
            self.pop(s, j, set);
            if !go_on {
                return false;
            }
        }
        true
    }

    fn collect_units(&self, s: &mut State, j: usize, stop: usize, out: &mut Vec<State>) {
        if j == stop || j == self.n {
            out.push(s.clone());
            return;
        }
        let mut sets = Vec::new();
        self.children(s, j, |set| sets.push(set));
        for set in sets {
            if self.push(s, j, set) {
                self.collect_units(s, j + 1, stop, out);
                self.pop(s, j, set);
            }
        }
    }

    /// Adds vertex `j` with earlier neighbours `set`; false (and nothing
    /// changed) if the prefix is not canonical.
    fn push(&self, s: &mut State, j: usize, set: u32) -> bool {
        let mut colv = 0u32;
        for i in 0..j {
            if set >> i & 1 == 1 {
                colv |= 1 << (j - 1 - i);
            }
        }
        // Swapping j - 1 and j must not increase column j - 1.
        if j >= 2 && (colv >> 1) > s.col[j - 1] {
            return false;
        }
        s.col[j] = colv;
        s.adj[j] = set;
        s.deg[j] = set.count_ones() as usize;
        for i in 0..j {
            if set >> i & 1 == 1 {
                s.adj[i] |= 1 << j;
                s.deg[i] += 1;
            }
        }
        if is_canonical(&s.adj[..=j], &s.col[..=j]) {
            true
        } else {
            self.pop(s, j, set);
            false
        }
    }

    fn pop(&self, s: &mut State, j: usize, set: u32) {
        for i in 0..j {
            if set >> i & 1 == 1 {
                s.adj[i] &= !(1 << j);
                s.deg[i] -= 1;
            }
        }
        s.adj[j] = 0;
        s.deg[j] = 0;
        s.col[j] = 0;
    }
}

/// True when no relabeling of the prefix gives a larger column string.
fn is_canonical(adj: &[u32], col: &[u32]) -> bool {
    let k = adj.len();
    let mut order = [0usize; MAX_ORDER];
    !larger_exists(adj, col, k, 0, 0, &mut order)
}

fn larger_exists(adj: &[u32], col: &[u32], k: usize, pos: usize, used: u32, order: &mut [usize; MAX_ORDER]) -> bool {
    if pos == k {
        return false;
    }
    for v in 0..k {
        if used >> v & 1 == 1 {
            continue;
        }
        let mut val = 0u32;
        for (q, &w) in order[..pos].iter().enumerate() {
            if adj[v] >> w & 1 == 1 {
                val |= 1 << (pos - 1 - q);
            }
        }
        if val > col[pos] {
            return true;
        }
        if val == col[pos] {
            order[pos] = v;
            if larger_exists(adj, col, k, pos + 1, used | 1 << v, order) {
                return true;
            }
        }
    }
    false
}

/// The optimal graphs in the connected census of simple `r`-regular graphs
/// on `n` vertices.
pub fn scan_optimal(n: usize, r: usize) -> Result<Vec<MultiGraph>> {
    scan_optimal_with(n, r, &SearchConfig::connected())
}

pub fn scan_optimal_with(n: usize, r: usize, config: &SearchConfig) -> Result<Vec<MultiGraph>> {
    let census = enumerate_regular_graphs_with(n, r, config)?;
    filter_optimal(census)
}

/// Keeps the optimal graphs of any collection, propagating the first error
/// (for instance a non-regular input).
pub fn filter_optimal<I>(graphs: I) -> Result<Vec<MultiGraph>>
where
    I: IntoIterator<Item = MultiGraph>,
{
    let mut out = Vec::new();
    for g in graphs {
        if is_optimal(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

/// Graphs read from graph6 lines. Blank lines are skipped; errors carry
/// the 1-based line number.
pub struct Graph6Stream<R> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            lines: reader.lines(),
            line_no: 0,
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<MultiGraph>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            if line.trim().is_empty() {
                continue;
            }
            let line_no = self.line_no;
            return Some(parse_graph6(line.trim()).map_err(|e| match e {
                Error::Format { msg, .. } => Error::Format {
                    line: Some(line_no),
                    msg,
                },
                other => other,
            }));
        }
    }
}

pub fn ingest_graph6_stream(path: impl AsRef<Path>) -> Result<Graph6Stream<BufReader<File>>> {
    let file = File::open(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    Ok(Graph6Stream::new(BufReader::new(file)))
}
