//! Oracles shared by the integration tests. Nothing here calls the
//! library's colouring or enumeration code.

#![allow(dead_code)]

use std::collections::VecDeque;
use std::path::PathBuf;

use snarkcrit::formats::{parse_edge_list, parse_graph6};
use snarkcrit::Graph;

pub fn repo_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

pub fn fixture(name: &str) -> Graph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Every graph in the bundled corpus, by file stem, in name order.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(repo_path("corpus"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let g = match p.extension().and_then(|e| e.to_str()) {
                Some("g6") => parse_graph6(&text).unwrap(),
                _ => parse_edge_list(&text).unwrap(),
            };
            (p.file_stem().unwrap().to_string_lossy().into_owned(), g)
        })
        .collect()
}

/// Plain backtracking 3-edge-colouring of the edges flagged in `keep`.
/// Edges are visited in breadth-first order over the line graph, and the
/// first edge of each region gets colour 0.
pub fn naive_colourable(g: &Graph, keep: &[bool]) -> bool {
    naive_colouring(g, keep).is_some()
}

pub fn naive_colouring(g: &Graph, keep: &[bool]) -> Option<Vec<u8>> {
    let m = g.edge_count();
    let edges = g.edges();
    let adjacent = |a: usize, b: usize| {
        let (p, q) = edges[a];
        let (r, s) = edges[b];
        a != b && (p == r || p == s || q == r || q == s)
    };
    let mut order = Vec::new();
    let mut seen = vec![false; m];
    for start in 0..m {
        if !keep[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            for f in 0..m {
                if keep[f] && !seen[f] && adjacent(e, f) {
                    seen[f] = true;
                    queue.push_back(f);
                }
            }
        }
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &e)| order[..i].iter().copied().filter(|&f| adjacent(e, f)).collect())
        .collect();
    let mut colour = vec![u8::MAX; m];
    fn go(i: usize, order: &[usize], earlier: &[Vec<usize>], colour: &mut [u8]) -> bool {
        if i == order.len() {
            return true;
        }
        let e = order[i];
        let top = if earlier[i].is_empty() { 1 } else { 3 };
        for c in 0..top {
            if earlier[i].iter().all(|&f| colour[f] != c) {
                colour[e] = c;
                if go(i + 1, order, earlier, colour) {
                    return true;
                }
            }
        }
        colour[e] = u8::MAX;
        false
    }
    go(0, &order, &earlier, &mut colour).then_some(colour)
}

pub fn mask(m: usize, edges: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut k = vec![false; m];
    for e in edges {
        k[e] = true;
    }
    k
}

/// True when `edges` is conflicting but every one-edge deletion colours.
pub fn naive_is_critical(g: &Graph, edges: &[usize]) -> bool {
    let m = g.edge_count();
    !naive_colourable(g, &mask(m, edges.iter().copied()))
        && edges.iter().all(|&e| {
            naive_colourable(g, &mask(m, edges.iter().copied().filter(|&f| f != e)))
        })
}

/// All 3-critical edge subsets by exhausting the subset lattice. Only for
/// graphs with at most about 20 edges.
pub fn brute_force_mcs(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 20, "brute force over 2^{m} subsets");
    let bits = |s: u32| (0..m).filter(move |&e| s >> e & 1 == 1);
    let conflicting: Vec<bool> = (0..1u32 << m)
        .map(|s| !naive_colourable(g, &mask(m, bits(s))))
        .collect();
    let mut out: Vec<Vec<usize>> = (0..1u32 << m)
        .filter(|&s| conflicting[s as usize] && bits(s).all(|e| !conflicting[(s & !(1 << e)) as usize]))
        .map(|s| bits(s).collect())
        .collect();
    out.sort();
    out
}

/// All `k`-subsets of `0..n`, lexicographically.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
