mod common;

use common::*;
use proptest::prelude::*;
use proptest::sample::subsequence;
use snarkcrit::colour::{enumerate_minimal_colourings, ColourOracle};
use snarkcrit::criticality::{enumerate_all_mcs, grow_from_edge, mcs_violations, shrink_to_mcs, DEFAULT_BUDGET};
use snarkcrit::formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use snarkcrit::generators::{petersen, three_gadget_snark};
use snarkcrit::resistance::resistance;
use snarkcrit::structure::oddness;
use snarkcrit::Graph;

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.vertex_count(), &pairs).unwrap()
}

/// A random spanning subgraph of the Petersen graph with relabelled
/// vertices; dense enough that many samples are conflicting.
fn petersen_piece() -> impl Strategy<Value = Graph> {
    let p = petersen();
    let all: Vec<(usize, usize)> = p.edges().to_vec();
    (
        subsequence(all, 11..=15),
        Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(|(pairs, perm)| {
            let mapped: Vec<(usize, usize)> = pairs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            Graph::new(10, &mapped).unwrap()
        })
}

fn vertex_sets(g: &Graph, lists: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut out: Vec<Vec<(usize, usize)>> = lists
        .iter()
        .map(|l| {
            let mut pairs: Vec<(usize, usize)> = l.iter().map(|&e| g.edge(e)).collect();
            pairs.sort();
            pairs
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph6_round_trip(g in petersen_piece()) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in petersen_piece()) {
        let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn enumeration_matches_brute_force(g in petersen_piece()) {
        let d = enumerate_all_mcs(&g, DEFAULT_BUDGET).unwrap();
        prop_assert!(d.complete);
        let mut found: Vec<Vec<usize>> = d.mcs_list.iter().map(|m| m.edges.to_vec()).collect();
        found.sort();
        prop_assert_eq!(found, brute_force_mcs(&g));
    }

    #[test]
    fn resistance_and_oddness_ignore_labels(perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = petersen();
        let h = relabel(&g, &perm);
        let (rg, rh) = (resistance(&g).unwrap(), resistance(&h).unwrap());
        prop_assert_eq!((rg.r, rg.r_v), (rh.r, rh.r_v));
        prop_assert_eq!(oddness(&g).unwrap().omega, oddness(&h).unwrap().omega);
        let dg = enumerate_all_mcs(&g, DEFAULT_BUDGET).unwrap();
        let dh = enumerate_all_mcs(&h, DEFAULT_BUDGET).unwrap();
        let mapped: Vec<Vec<usize>> = dg.mcs_list.iter().map(|m| {
            m.edges.iter().map(|e| {
                let (u, v) = g.edge(e);
                h.edge_index(perm[u], perm[v]).unwrap()
            }).collect()
        }).collect();
        let theirs: Vec<Vec<usize>> = dh.mcs_list.iter().map(|m| m.edges.to_vec()).collect();
        prop_assert_eq!(vertex_sets(&h, &mapped), vertex_sets(&h, &theirs));
    }

    #[test]
    fn shrink_returns_a_critical_subset(drop in subsequence((0..42usize).collect::<Vec<_>>(), 0..6)) {
        let g = three_gadget_snark();
        let oracle = ColourOracle::new(&g);
        let mut scope = g.all_edges();
        for e in drop {
            scope.remove(e);
        }
        let keep: Vec<bool> = (0..42).map(|e| scope.contains(e)).collect();
        match shrink_to_mcs(&oracle, &scope) {
            Ok(m) => {
                prop_assert!(m.edges.is_subset(&scope));
                prop_assert!(naive_is_critical(&g, &m.edges.to_vec()));
                prop_assert!(mcs_violations(&oracle, &m.edges).is_empty());
            }
            Err(_) => prop_assert!(naive_colourable(&g, &keep)),
        }
    }
}

/// Under the growth precondition (the other conflicting edges of a
/// minimal colouring are forbidden) the result is an MCS through the seed.
#[test]
fn grow_from_every_conflicting_edge() {
    for g in [petersen(), three_gadget_snark()] {
        let r = resistance(&g).unwrap().r;
        let oracle = ColourOracle::new(&g);
        let mcs = checked_family(&g);
        let all = enumerate_minimal_colourings(&g, r, 10_000);
        assert!(all.complete && !all.colourings.is_empty());
        for mc in &all.colourings {
            for e in &mc.conflict_set {
                let mut forbidden = mc.conflict_set.clone();
                forbidden.remove(e);
                let m = grow_from_edge(&oracle, e, &forbidden).unwrap();
                assert!(m.edges.contains(e) && m.edges.is_disjoint(&forbidden));
                assert!(mcs.contains(&m.edges.to_vec()));
            }
        }
    }
}

/// MCS lists checked member by member with the naive colourer.
fn checked_family(g: &Graph) -> Vec<Vec<usize>> {
    let d = enumerate_all_mcs(g, DEFAULT_BUDGET).unwrap();
    let lists: Vec<Vec<usize>> = d.mcs_list.iter().map(|m| m.edges.to_vec()).collect();
    assert!(lists.iter().all(|l| naive_is_critical(g, l)));
    lists
}

#[test]
fn grow_on_class_one_is_an_error() {
    let g = snarkcrit::generators::generate(snarkcrit::generators::Family::Prism, 0).unwrap();
    let oracle = ColourOracle::new(&g);
    assert!(grow_from_edge(&oracle, 0, &g.no_edges()).is_err());
}
