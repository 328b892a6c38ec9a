//! Clusters of minimal conflicting subgraphs, oddness, hypo-Hamiltonicity
//! and the instance checks for the cluster propositions and conjectures.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criticality::{enumerate_all_mcs, CriticalityError, Decomposition};
use crate::edgeset::EdgeSet;
use crate::generators::chain_cluster;
use crate::graph::Graph;
use crate::hitting::{min_hitting_sets, HittingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("the MCS enumeration is incomplete")]
    IncompleteDecomposition,
    #[error("oddness is only defined here for cubic graphs")]
    NotCubic,
    #[error("graph has no perfect matching, so no 2-factor")]
    NoPerfectMatching,
    #[error("chain census needs n >= 1")]
    EmptyChain,
    #[error(transparent)]
    Criticality(#[from] CriticalityError),
    #[error(transparent)]
    Hitting(#[from] HittingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClusterKind {
    /// One MCS meeting no other.
    Singleton,
    /// All members share an edge.
    Dense,
    /// Not dense, and some pair of members is edge-disjoint.
    Sparse,
    /// Not dense, yet every pair of members meets.
    DenselySparse,
}

impl ClusterKind {
    /// Sparse in the wide sense: at least two members, no common edge.
    pub fn is_sparse(self) -> bool {
        matches!(self, ClusterKind::Sparse | ClusterKind::DenselySparse)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cluster {
    /// Indices into the decomposition's MCS list, ascending.
    pub members: Vec<usize>,
    pub kind: ClusterKind,
}

/// Connected components of the edge-intersection graph on the MCSs,
/// ordered by smallest member.
pub fn clusters(decomp: &Decomposition) -> Result<Vec<Cluster>, StructureError> {
    if !decomp.complete {
        return Err(StructureError::IncompleteDecomposition);
    }
    let sets = decomp.mcs_edge_sets();
    let n = sets.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = out.len();
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for b in 0..n {
                if comp[b] == usize::MAX && sets[a].intersects(&sets[b]) {
                    comp[b] = out.len();
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let refs: Vec<&EdgeSet> = members.iter().map(|&m| &sets[m]).collect();
        out.push(Cluster {
            kind: classify(&refs),
            members,
        });
    }
    Ok(out)
}

/// Kind of a connected family of MCSs.
pub fn classify(members: &[&EdgeSet]) -> ClusterKind {
    match members {
        [] => panic!("a cluster has at least one member"),
        [_] => ClusterKind::Singleton,
        [first, rest @ ..] => {
            let mut core = (*first).clone();
            for s in rest {
                core.intersect_with(s);
            }
            if !core.is_empty() {
                return ClusterKind::Dense;
            }
            let pairwise = members
                .iter()
                .enumerate()
                .all(|(i, a)| members[i + 1..].iter().all(|b| a.intersects(b)));
            if pairwise {
                ClusterKind::DenselySparse
            } else {
                ClusterKind::Sparse
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oddness {
    pub omega: usize,
    /// Complement of the first perfect matching reaching the minimum.
    pub witness_two_factor: EdgeSet,
    /// Odd cycles of the witness, each from its smallest vertex.
    pub odd_components: Vec<Vec<usize>>,
}

/// Minimum number of odd cycles over the 2-factors of a cubic graph.
pub fn oddness(g: &Graph) -> Result<Oddness, StructureError> {
    if !g.is_cubic() {
        return Err(StructureError::NotCubic);
    }
    let mut best: Option<(usize, EdgeSet)> = None;
    for_each_perfect_matching(g, |m| {
        let factor = m.complement();
        let odd = cycles(g, &factor).iter().filter(|c| c.len() % 2 == 1).count();
        if best.as_ref().is_none_or(|(b, _)| odd < *b) {
            best = Some((odd, factor));
        }
        // zero cannot be beaten
        best.as_ref().is_some_and(|(b, _)| *b > 0)
    });
    let (omega, witness_two_factor) = best.ok_or(StructureError::NoPerfectMatching)?;
    let odd_components = cycles(g, &witness_two_factor)
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .collect();
    Ok(Oddness {
        omega,
        witness_two_factor,
        odd_components,
    })
}

/// Visits perfect matchings in canonical order (lowest unmatched vertex
/// first, partners by edge index). Stops when `visit` returns false.
pub fn for_each_perfect_matching<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&EdgeSet) -> bool,
{
    fn rec<F: FnMut(&EdgeSet) -> bool>(g: &Graph, covered: &mut [bool], m: &mut EdgeSet, visit: &mut F) -> bool {
        let Some(v) = covered.iter().position(|&c| !c) else {
            return visit(m);
        };
        let mut options: Vec<(usize, usize)> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&(w, _)| !covered[w])
            .map(|(w, e)| (e, w))
            .collect();
        options.sort_unstable();
        for (e, w) in options {
            covered[v] = true;
            covered[w] = true;
            m.insert(e);
            let go_on = rec(g, covered, m, visit);
            m.remove(e);
            covered[v] = false;
            covered[w] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    if g.vertex_count() % 2 == 1 {
        return;
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut m = g.no_edges();
    rec(g, &mut covered, &mut m, &mut visit);
}

/// Cycles of a 2-regular edge set, each listed from its smallest vertex
/// towards its smaller neighbour; sorted by first vertex.
fn cycles(g: &Graph, factor: &EdgeSet) -> Vec<Vec<usize>> {
    let sub = g.subgraph(factor.clone());
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for v in sub.vertices() {
        if seen[v] {
            continue;
        }
        let mut nbrs: Vec<usize> = sub.neighbours(v).map(|(w, _)| w).collect();
        nbrs.sort_unstable();
        let mut cycle = vec![v];
        seen[v] = true;
        let (mut prev, mut cur) = (v, nbrs[0]);
        while cur != v {
            seen[cur] = true;
            cycle.push(cur);
            let next = sub
                .neighbours(cur)
                .map(|(w, _)| w)
                .find(|&w| w != prev)
                .expect("2-regular");
            prev = cur;
            cur = next;
        }
        out.push(cycle);
    }
    out
}

/// A Hamiltonian cycle of `g` with `skip` removed, as a vertex sequence.
pub fn hamiltonian_cycle(g: &Graph, skip: Option<usize>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let active: Vec<bool> = (0..n).map(|v| Some(v) != skip).collect();
    let count = active.iter().filter(|&&a| a).count();
    if count < 3 {
        return None;
    }
    let start = active.iter().position(|&a| a)?;
    let mut on_path = vec![false; n];
    on_path[start] = true;
    let mut path = vec![start];
    let mut hc = Ham {
        g,
        active: &active,
        on_path,
        start,
        target: count,
    };
    hc.extend(&mut path).then_some(path)
}

struct Ham<'a> {
    g: &'a Graph,
    active: &'a [bool],
    on_path: Vec<bool>,
    start: usize,
    target: usize,
}

impl Ham<'_> {
    /// Neighbours of `v` it could still use in the cycle: unvisited ones
    /// and the two path ends.
    fn free_degree(&self, v: usize, end: usize) -> usize {
        self.g
            .neighbours(v)
            .iter()
            .filter(|&&(w, _)| self.active[w] && (!self.on_path[w] || w == self.start || w == end))
            .count()
    }

    fn extend(&mut self, path: &mut Vec<usize>) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == self.target {
            return self.g.edge_index(cur, self.start).is_some();
        }
        let mut nbrs: Vec<usize> = self
            .g
            .neighbours(cur)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| self.active[w] && !self.on_path[w])
            .collect();
        nbrs.sort_unstable();
        for w in nbrs {
            self.on_path[w] = true;
            path.push(w);
            // every unvisited neighbour of cur still needs two ways in and out
            let dead = self
                .g
                .neighbours(cur)
                .iter()
                .any(|&(x, _)| self.active[x] && !self.on_path[x] && self.free_degree(x, w) < 2);
            if !dead && self.extend(path) {
                return true;
            }
            path.pop();
            self.on_path[w] = false;
        }
        false
    }
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian_cycle(g, None).is_some()
}

/// Not Hamiltonian, but Hamiltonian after deleting any one vertex.
pub fn is_hypohamiltonian(g: &Graph) -> bool {
    !is_hamiltonian(g) && (0..g.vertex_count()).all(|v| hamiltonian_cycle(g, Some(v)).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    /// A proved statement; a failure is a refutation-grade finding.
    Proposition,
    /// An open statement; a failure is a counterexample candidate.
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatementCheck {
    pub name: String,
    pub grade: Grade,
    pub applicable: bool,
    pub holds: bool,
    pub certificate: Option<String>,
}

impl StatementCheck {
    fn vacuous(name: &str, grade: Grade) -> Self {
        StatementCheck {
            name: name.to_string(),
            grade,
            applicable: false,
            holds: true,
            certificate: None,
        }
    }

    fn judged(name: &str, grade: Grade, failure: Option<String>) -> Self {
        StatementCheck {
            name: name.to_string(),
            grade,
            applicable: true,
            holds: failure.is_none(),
            certificate: failure,
        }
    }
}

/// Inputs for [`check_conjectures`], all computed upstream.
pub struct StatementInputs<'a> {
    pub decomp: &'a Decomposition,
    pub clusters: &'a [Cluster],
    pub resistance: usize,
    pub critical: &'a EdgeSet,
    /// Needed only for the oddness bound; `None` when skipped.
    pub omega: Option<usize>,
}

/// Instance checks, in order:
///
/// - `oddness_bound`: a cubic class-two graph with empty buffer has
///   omega <= 2r;
/// - `critical_iff_densely_sparse`: for bridgeless cubic graphs, K_G = E(G)
///   iff r = 2 and the MCSs form one densely sparse cluster;
/// - `no_cubic_dense_cluster`: no cluster of a cubic graph is dense;
/// - `full_m_g_single_sparse`: a bridgeless cubic graph with M_G = E(G)
///   is one sparse cluster.
pub fn check_conjectures(g: &Graph, inp: &StatementInputs<'_>) -> Result<Vec<StatementCheck>, StructureError> {
    let d = inp.decomp;
    if !d.complete {
        return Err(StructureError::IncompleteDecomposition);
    }
    let cubic = g.is_cubic();
    let bridgeless = g.subgraph(g.all_edges()).is_bridgeless();
    let class_two = d.is_class_two();
    let mut out = Vec::new();

    let name = "oddness_bound";
    out.push(match inp.omega {
        Some(w) if cubic && class_two && d.b_g.is_empty() => StatementCheck::judged(
            name,
            Grade::Conjecture,
            (w > 2 * inp.resistance).then(|| format!("omega = {w} > 2r = {}", 2 * inp.resistance)),
        ),
        _ => StatementCheck::vacuous(name, Grade::Conjecture),
    });

    let name = "critical_iff_densely_sparse";
    out.push(if cubic && bridgeless {
        let full = inp.critical.count() == g.edge_count();
        let one_ds = matches!(inp.clusters, [c] if c.kind == ClusterKind::DenselySparse);
        let rhs = inp.resistance == 2 && one_ds;
        StatementCheck::judged(
            name,
            Grade::Conjecture,
            (full != rhs).then(|| {
                let kinds: Vec<ClusterKind> = inp.clusters.iter().map(|c| c.kind).collect();
                format!(
                    "K_G = E(G) is {full}, but r = {} with clusters {kinds:?}",
                    inp.resistance
                )
            }),
        )
    } else {
        StatementCheck::vacuous(name, Grade::Conjecture)
    });

    let name = "no_cubic_dense_cluster";
    out.push(if cubic && class_two {
        let dense = inp.clusters.iter().find(|c| c.kind == ClusterKind::Dense);
        StatementCheck::judged(
            name,
            Grade::Proposition,
            dense.map(|c| format!("cluster of MCSs {:?} is dense", c.members)),
        )
    } else {
        StatementCheck::vacuous(name, Grade::Proposition)
    });

    let name = "full_m_g_single_sparse";
    out.push(if cubic && bridgeless && d.m_g.count() == g.edge_count() {
        let ok = matches!(inp.clusters, [c] if c.kind.is_sparse());
        StatementCheck::judged(
            name,
            Grade::Proposition,
            (!ok).then(|| {
                let kinds: Vec<ClusterKind> = inp.clusters.iter().map(|c| c.kind).collect();
                format!("M_G = E(G) but clusters are {kinds:?}")
            }),
        )
    } else {
        StatementCheck::vacuous(name, Grade::Proposition)
    });

    Ok(out)
}

/// Result of [`chain_cluster_census`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub graph: Graph,
    pub decomp: Decomposition,
    pub clusters: Vec<Cluster>,
    /// Minimum hitting set size, which equals the resistance.
    pub r: usize,
    pub critical: EdgeSet,
    /// Expected properties that failed; empty when the chain behaves.
    pub violations: Vec<String>,
}

/// Analyses the chain with `n` MCSs and checks: exactly n MCSs, one
/// cluster, singleton for n = 1, dense for n = 2, sparse (and not densely
/// sparse) for n >= 3.
pub fn chain_cluster_census(n: usize, budget: u64) -> Result<Census, StructureError> {
    if n == 0 {
        return Err(StructureError::EmptyChain);
    }
    let graph = chain_cluster(n);
    let decomp = enumerate_all_mcs(&graph, budget)?;
    if !decomp.complete {
        return Err(StructureError::IncompleteDecomposition);
    }
    let cl = clusters(&decomp)?;
    let hs = min_hitting_sets(&decomp)?;
    let mut critical = graph.no_edges();
    for s in &hs.sets {
        critical.union_with(s);
    }
    let mut violations = Vec::new();
    if decomp.mcs_list.len() != n {
        violations.push(format!("expected {n} MCSs, found {}", decomp.mcs_list.len()));
    }
    let expected = match n {
        1 => ClusterKind::Singleton,
        2 => ClusterKind::Dense,
        _ => ClusterKind::Sparse,
    };
    match cl.as_slice() {
        [c] if c.kind == expected => {}
        _ => {
            let kinds: Vec<ClusterKind> = cl.iter().map(|c| c.kind).collect();
            violations.push(format!("expected one {expected:?} cluster, found {kinds:?}"));
        }
    }
    Ok(Census {
        n,
        graph,
        r: hs.size,
        decomp,
        clusters: cl,
        critical,
        violations,
    })
}
