//! Cross-checks of the census, bounds and decomposition code against
//! brute-force computations.

use std::collections::{BTreeSet, HashSet};
use std::io::Write;

use trireg::construct::named_graph;
use trireg::io::write_graph6;
use trireg::search::{enumerate_regular_graphs_with, SearchConfig};
use trireg::{
    are_isomorphic, canonical_form, construct_ln, contract_diamonds, enumerate_ecds, enumerate_regular_graphs,
    enumerate_triangles, extract_ecd, find_diamond_decomposition, has_triangle_property_direct,
    ingest_graph6_stream, is_optimal, line_graph, lower_bound_triangles, scan_optimal, synthesize_quintic,
    validate_ecd, MultiGraph, NamedGraph,
};

/// All labelled simple r-regular graphs on n vertices, by backtracking.
fn labelled_regular(n: usize, r: usize) -> Vec<MultiGraph> {
    fn go(n: usize, r: usize, v: usize, deg: &mut Vec<usize>, edges: &mut Vec<(usize, usize)>, out: &mut Vec<MultiGraph>) {
        if v == n {
            out.push(MultiGraph::new(n, edges.iter().copied()).unwrap());
            return;
        }
        let need = r - deg[v];
        let cands: Vec<usize> = (v + 1..n).filter(|&w| deg[w] < r).collect();
        if cands.len() < need {
            return;
        }
        // choose `need` of the candidates
        let mut pick = Vec::new();
        choose(&cands, need, 0, &mut pick, &mut |set| {
            for &w in set {
                deg[w] += 1;
                edges.push((v, w));
            }
            deg[v] = r;
            go(n, r, v + 1, deg, edges, out);
            deg[v] = r - need;
            for &w in set {
                deg[w] -= 1;
                edges.pop();
            }
        });
    }
    fn choose(c: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if pick.len() == k {
            f(pick);
            return;
        }
        for i in from..c.len() {
            pick.push(c[i]);
            choose(c, k, i + 1, pick, f);
            pick.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, 0, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

fn classes(graphs: &[MultiGraph], connected_only: bool) -> BTreeSet<Vec<u8>> {
    graphs
        .iter()
        .filter(|g| !connected_only || g.is_connected())
        .map(canonical_form)
        .collect()
}

#[test]
fn census_matches_labelled_enumeration() {
    for (n, r) in [(4, 3), (6, 2), (6, 3), (8, 2), (8, 3), (5, 4), (6, 4), (7, 4), (8, 4), (6, 5), (8, 5), (7, 6)] {
        let labelled = labelled_regular(n, r);
        for connected in [false, true] {
            let got = enumerate_regular_graphs(n, r, connected).unwrap();
            let got_forms: Vec<Vec<u8>> = got.iter().map(canonical_form).collect();
            let distinct: BTreeSet<Vec<u8>> = got_forms.iter().cloned().collect();
            assert_eq!(distinct.len(), got.len(), "({n}, {r}) emitted isomorphic graphs");
            assert_eq!(distinct, classes(&labelled, connected), "({n}, {r}, connected={connected})");
            for g in &got {
                assert!(g.is_simple() && g.regularity() == Some(r));
                assert!(!connected || g.is_connected());
            }
        }
    }
}

#[test]
fn quartic_on_seven_vertices_from_all_graphs() {
    // Every one of the 2^21 labelled graphs on 7 vertices.
    let pairs: Vec<(usize, usize)> = (0..7).flat_map(|u| (u + 1..7).map(move |v| (u, v))).collect();
    let mut forms = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut deg = [0u8; 7];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().all(|&d| d == 4) {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            forms.insert(canonical_form(&MultiGraph::new(7, edges).unwrap()));
        }
    }
    let got: BTreeSet<Vec<u8>> = enumerate_regular_graphs(7, 4, true).unwrap().iter().map(canonical_form).collect();
    assert_eq!(got, forms);
    assert_eq!(got.len(), 2);
}

/// Connected cubic, quartic and quintic counts up to 12 vertices (OEIS
/// A002851, A006820, A006821).
#[test]
fn census_counts() {
    let table: &[(usize, usize, usize)] = &[
        (3, 4, 1),
        (3, 6, 2),
        (3, 8, 5),
        (3, 10, 19),
        (3, 12, 85),
        (4, 5, 1),
        (4, 6, 1),
        (4, 7, 2),
        (4, 8, 6),
        (4, 9, 16),
        (4, 10, 59),
        (4, 11, 265),
        (4, 12, 1544),
        (5, 6, 1),
        (5, 8, 3),
        (5, 10, 60),
    ];
    for &(r, n, want) in table {
        let got = enumerate_regular_graphs(n, r, true).unwrap();
        assert_eq!(got.len(), want, "connected {r}-regular on {n}");
        let forms: HashSet<Vec<u8>> = got.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), got.len());
    }
}

#[test]
fn limited_search_returns_a_prefix() {
    let config = SearchConfig {
        connected_only: true,
        limit: Some(10),
        ..SearchConfig::default()
    };
    let some = enumerate_regular_graphs_with(10, 4, &config).unwrap();
    let all = enumerate_regular_graphs(10, 4, true).unwrap();
    assert_eq!(some, all[..10].to_vec());
}

/// Over every graph on at most 7 vertices: the bound never exceeds the
/// triangle count of a regular triangle-property graph, and `is_optimal`
/// holds exactly at equality.
#[test]
fn bounds_against_all_small_graphs() {
    for n in 1..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let mut deg = vec![0usize; n];
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            let r = deg[0];
            if r < 2 || deg.iter().any(|&d| d != r) {
                continue;
            }
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = MultiGraph::new(n, edges).unwrap();
            let bound = lower_bound_triangles(r, n).unwrap();
            let w = enumerate_triangles(&g).weighted_count;
            if has_triangle_property_direct(&g) {
                assert!(w >= bound, "n={n} r={r}: {w} < {bound}");
            }
            assert_eq!(is_optimal(&g).unwrap(), has_triangle_property_direct(&g) && w == bound);
        }
    }
    // K4 is the only optimal graph on 4 vertices.
    let k4 = named_graph(NamedGraph::K4);
    assert!(is_optimal(&k4).unwrap());
}

#[test]
fn scan_finds_line_graph_of_k33() {
    let found = scan_optimal(9, 4).unwrap();
    let lk33 = line_graph(&named_graph(NamedGraph::K33)).unwrap();
    assert!(found.iter().any(|g| are_isomorphic(g, &lk33)));
    for g in &found {
        assert!(is_optimal(g).unwrap());
    }
}

#[test]
fn decomposition_exists_exactly_for_optimal_graphs() {
    for g in enumerate_regular_graphs(10, 5, false).unwrap() {
        assert_eq!(find_diamond_decomposition(&g).unwrap().is_some(), is_optimal(&g).unwrap());
    }
    // Disjoint union of two L_7: optimal, disconnected, decomposable.
    let l7 = construct_ln(7).unwrap();
    let two = l7.disjoint_union(&l7);
    assert!(is_optimal(&two).unwrap());
    let dd = find_diamond_decomposition(&two).unwrap().unwrap();
    let ecd = extract_ecd(&dd).unwrap();
    assert_eq!(ecd.cycles().len(), 2);
    assert!(are_isomorphic(&synthesize_quintic(&ecd).unwrap(), &two));
}

#[test]
fn ecds_of_eight_vertex_bases_are_consistent() {
    let mut total = 0;
    for base in enumerate_regular_graphs(8, 4, true).unwrap() {
        let ecds = enumerate_ecds(&base, usize::MAX).unwrap();
        let mut forms = HashSet::new();
        for e in &ecds {
            assert!(validate_ecd(e).is_empty());
            let g = synthesize_quintic(e).unwrap();
            assert_eq!(g.vertex_count(), 16);
            assert!(is_optimal(&g).unwrap());
            assert!(forms.insert(canonical_form(&g)), "duplicate class");
            let dd = find_diamond_decomposition(&g).unwrap().unwrap();
            assert!(are_isomorphic(&contract_diamonds(&dd).0, &base));
            let again = synthesize_quintic(&extract_ecd(&dd).unwrap()).unwrap();
            assert!(are_isomorphic(&again, &g));
        }
        total += ecds.len();
    }
    // L_8 lives on 16 vertices, over the circulant C_8(1, 2).
    assert!(total >= 1);
    let l8 = construct_ln(8).unwrap();
    let base = contract_diamonds(&find_diamond_decomposition(&l8).unwrap().unwrap()).0;
    let forms: HashSet<Vec<u8>> = enumerate_ecds(&base, usize::MAX)
        .unwrap()
        .iter()
        .map(|e| canonical_form(&synthesize_quintic(e).unwrap()))
        .collect();
    assert!(forms.contains(&canonical_form(&l8)));
}

#[test]
fn no_optimal_quintic_on_ten_vertices_from_ecds() {
    let k5 = MultiGraph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
    assert!(enumerate_ecds(&k5, usize::MAX).unwrap().is_empty());
    assert!(scan_optimal(10, 5).unwrap().is_empty());
}

#[test]
fn graph6_ingestion() {
    let dir = tempfile::tempdir().unwrap();
    let l7 = construct_ln(7).unwrap();
    let good = dir.path().join("good.g6");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "{}", write_graph6(&l7).unwrap()).unwrap();
    writeln!(f, "C~").unwrap();
    drop(f);
    let graphs: Vec<MultiGraph> = ingest_graph6_stream(&good).unwrap().collect::<Result<_, _>>().unwrap();
    assert_eq!(graphs.len(), 2);
    assert!(are_isomorphic(&graphs[0], &l7));

    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "C~\nC~x\n").unwrap();
    let err = ingest_graph6_stream(&bad)
        .unwrap()
        .collect::<Result<Vec<_>, _>>()
        .unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
    assert!(ingest_graph6_stream(dir.path().join("missing.g6")).is_err());
}
