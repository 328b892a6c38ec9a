//! Minimal conflicting subgraphs (3-critical subgraphs) and the
//! decomposition of a graph into M_G, C_G and B_G.
//!
//! Complete enumeration works by dualisation. Every maximal edge set that
//! contains none of the subgraphs found so far is the complement of a
//! minimal transversal of the found family. If such a complement is still
//! conflicting it contains a new minimal conflicting subgraph, which
//! shrinking extracts; if every complement is 3-colourable, no minimal
//! conflicting subgraph is missing.

use std::collections::HashSet;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::colour::{min_class0_colouring_in, ColourOracle};
use crate::edgeset::EdgeSet;
use crate::graph::{Graph, GraphError};
use crate::transversal::for_each_minimal_transversal;

/// Default enumeration budget in oracle calls.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalityError {
    #[error("scope is 3-edge-colourable, so it contains no minimal conflicting subgraph")]
    NotConflicting,
    #[error("edge {edge} lies in no conflicting subgraph avoiding the forbidden edges")]
    NoConflictThroughEdge { edge: usize },
    #[error("edge {0} is forbidden but is the growth seed")]
    SeedForbidden(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A minimal conflicting subgraph, identified by its edge set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mcs {
    pub edges: EdgeSet,
}

impl Mcs {
    pub fn new(edges: EdgeSet) -> Self {
        Mcs { edges }
    }

    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        g.subgraph(self.edges.clone()).vertices()
    }
}

/// The properties every 3-critical subgraph must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum McsProperty {
    /// Conflicting, and every single-edge deletion is colourable.
    Minimal,
    /// Resistance exactly 1.
    ResistanceOne,
    /// Some vertex has degree below 3.
    StrictlySubcubic,
    Bridgeless,
    /// Every vertex has degree 2 or 3.
    DegreeTwoOrThree,
    /// Every vertex has at least two neighbours of degree 3.
    TwoCubicNeighbours,
}

impl McsProperty {
    pub const ALL: [McsProperty; 6] = [
        McsProperty::Minimal,
        McsProperty::ResistanceOne,
        McsProperty::StrictlySubcubic,
        McsProperty::Bridgeless,
        McsProperty::DegreeTwoOrThree,
        McsProperty::TwoCubicNeighbours,
    ];
}

/// Evaluates every [`McsProperty`] on `edges`; returns the failing ones.
pub fn mcs_violations(oracle: &ColourOracle<'_>, edges: &EdgeSet) -> Vec<McsProperty> {
    let g = oracle.graph();
    let sub = g.subgraph(edges.clone());
    let verts = sub.vertices();
    let mut bad = Vec::new();

    let minimal = oracle.is_conflicting(edges)
        && edges.iter().all(|e| {
            let mut rest = edges.clone();
            rest.remove(e);
            !oracle.is_conflicting(&rest)
        });
    if !minimal {
        bad.push(McsProperty::Minimal);
    }
    if min_class0_colouring_in(g, edges).conflict_set.count() != 1 {
        bad.push(McsProperty::ResistanceOne);
    }
    if !verts.iter().any(|&v| sub.degree(v) < 3) {
        bad.push(McsProperty::StrictlySubcubic);
    }
    if !sub.is_bridgeless() {
        bad.push(McsProperty::Bridgeless);
    }
    if !verts.iter().all(|&v| matches!(sub.degree(v), 2 | 3)) {
        bad.push(McsProperty::DegreeTwoOrThree);
    }
    let two_cubic = verts.iter().all(|&v| {
        sub.neighbours(v).filter(|&(w, _)| sub.degree(w) == 3).count() >= 2
    });
    if !two_cubic {
        bad.push(McsProperty::TwoCubicNeighbours);
    }
    bad
}

/// Deletes edges of `scope` in canonical order whenever the remainder stays
/// conflicting; the survivors form a minimal conflicting subgraph.
///
/// One pass suffices: an edge kept because its deletion made the remainder
/// colourable stays necessary after later deletions.
pub fn shrink_to_mcs(oracle: &ColourOracle<'_>, scope: &EdgeSet) -> Result<Mcs, CriticalityError> {
    shrink_protecting(oracle, scope, &EdgeSet::empty(scope.universe()))
}

/// [`shrink_to_mcs`] that never tries to delete edges in `keep`. The caller
/// guarantees each kept edge is necessary for the conflict.
pub fn shrink_protecting(
    oracle: &ColourOracle<'_>,
    scope: &EdgeSet,
    keep: &EdgeSet,
) -> Result<Mcs, CriticalityError> {
    if !oracle.is_conflicting(scope) {
        return Err(CriticalityError::NotConflicting);
    }
    let mut current = scope.clone();
    for e in scope {
        if keep.contains(e) {
            continue;
        }
        current.remove(e);
        if !oracle.is_conflicting(&current) {
            current.insert(e);
        }
    }
    Ok(Mcs::new(current))
}

/// Grows a conflicting subgraph outward from `seed` through edges outside
/// `forbidden`, then shrinks it while keeping `seed`.
///
/// Intended for a conflicting edge `seed` of a minimal colouring whose
/// other conflicting edges are `forbidden`: the result then is a minimal
/// conflicting subgraph containing `seed` and no other conflicting edge.
pub fn grow_from_edge(
    oracle: &ColourOracle<'_>,
    seed: usize,
    forbidden: &EdgeSet,
) -> Result<Mcs, CriticalityError> {
    let g = oracle.graph();
    if forbidden.contains(seed) {
        return Err(CriticalityError::SeedForbidden(seed));
    }
    let mut grown = EdgeSet::from_indices(g.edge_count(), [seed]);
    while !oracle.is_conflicting(&grown) {
        let next = grown
            .iter()
            .flat_map(|e| g.adjacent_edges(e))
            .filter(|&f| !grown.contains(f) && !forbidden.contains(f))
            .min();
        match next {
            Some(f) => grown.insert(f),
            None => return Err(CriticalityError::NoConflictThroughEdge { edge: seed }),
        }
    }
    let mut without_seed = grown.clone();
    without_seed.remove(seed);
    if oracle.is_conflicting(&without_seed) {
        // the conflict does not depend on the seed
        return Err(CriticalityError::NoConflictThroughEdge { edge: seed });
    }
    let keep = EdgeSet::from_indices(g.edge_count(), [seed]);
    shrink_protecting(oracle, &grown, &keep)
}

/// All minimal conflicting subgraphs of a graph and the induced partition
/// of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Sorted canonically by edge set.
    pub mcs_list: Vec<Mcs>,
    /// Union of all minimal conflicting subgraphs.
    pub m_g: EdgeSet,
    /// Edges outside `m_g` sharing a vertex with an edge of `m_g`.
    pub c_g: EdgeSet,
    /// Every remaining edge.
    pub b_g: EdgeSet,
    /// False when the budget ran out before completeness was established.
    pub complete: bool,
    /// Oracle queries spent.
    pub oracle_calls: u64,
}

impl Decomposition {
    pub fn from_mcs(g: &Graph, mut mcs_list: Vec<Mcs>, complete: bool, oracle_calls: u64) -> Self {
        mcs_list.sort();
        mcs_list.dedup();
        let mut m_g = g.no_edges();
        for m in &mcs_list {
            m_g.union_with(&m.edges);
        }
        let mut touched = vec![false; g.vertex_count()];
        for e in &m_g {
            let (u, v) = g.edge(e);
            touched[u] = true;
            touched[v] = true;
        }
        let mut c_g = g.no_edges();
        let mut b_g = g.no_edges();
        for e in m_g.complement().iter() {
            let (u, v) = g.edge(e);
            if touched[u] || touched[v] {
                c_g.insert(e);
            } else {
                b_g.insert(e);
            }
        }
        Decomposition {
            mcs_list,
            m_g,
            c_g,
            b_g,
            complete,
            oracle_calls,
        }
    }

    pub fn mcs_edge_sets(&self) -> Vec<EdgeSet> {
        self.mcs_list.iter().map(|m| m.edges.clone()).collect()
    }

    pub fn is_class_two(&self) -> bool {
        !self.mcs_list.is_empty()
    }
}

/// Enumerates every minimal conflicting subgraph of `g`, stopping early
/// (and flagging the result incomplete) once `budget` oracle calls have
/// been spent.
pub fn enumerate_all_mcs(g: &Graph, budget: u64) -> Result<Decomposition, CriticalityError> {
    let oracle = ColourOracle::new(g);
    enumerate_all_mcs_with(&oracle, budget)
}

/// [`enumerate_all_mcs`] with a caller-supplied oracle (and its cache).
pub fn enumerate_all_mcs_with(
    oracle: &ColourOracle<'_>,
    budget: u64,
) -> Result<Decomposition, CriticalityError> {
    let g = oracle.graph();
    g.require_subcubic()?;
    let start = oracle.calls();
    let full = g.all_edges();
    let mut found: Vec<EdgeSet> = Vec::new();
    // complements of maximal colourable subgraphs already confirmed
    let mut confirmed: HashSet<EdgeSet> = HashSet::new();

    let complete = 'search: loop {
        let mut fresh: Option<EdgeSet> = None;
        let mut out_of_budget = false;
        let _ = for_each_minimal_transversal(g.edge_count(), &found, |t| {
            if confirmed.contains(t) {
                return ControlFlow::Continue(());
            }
            if oracle.calls() - start >= budget {
                out_of_budget = true;
                return ControlFlow::Break(());
            }
            let rest = full.difference(t);
            if oracle.is_conflicting(&rest) {
                fresh = Some(rest);
                ControlFlow::Break(())
            } else {
                confirmed.insert(t.clone());
                ControlFlow::Continue(())
            }
        });
        if out_of_budget {
            break 'search false;
        }
        match fresh {
            None => break 'search true,
            Some(rest) => {
                let m = shrink_to_mcs(oracle, &rest)?;
                debug_assert!(!found.contains(&m.edges));
                found.push(m.edges);
            }
        }
    };

    let mcs = found.into_iter().map(Mcs::new).collect();
    Ok(Decomposition::from_mcs(g, mcs, complete, oracle.calls() - start))
}
