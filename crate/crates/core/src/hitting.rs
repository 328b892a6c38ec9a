//! Minimum representative conflicting subsets (hitting sets of the MCS
//! family), the critical subgraph K_G by two routes, and the checks tying
//! resistance, hitting sets and minimal colourings together.

use thiserror::Error;

use crate::colour::{enumerate_minimal_colourings, three_colour, MinimalColouring};
use crate::criticality::Decomposition;
use crate::edgeset::EdgeSet;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HittingError {
    #[error("the MCS enumeration is incomplete; hitting sets would be unsound")]
    IncompleteDecomposition,
    #[error("minimal colouring enumeration hit its cap of {0} conflict sets")]
    ColouringCapReached(usize),
}

/// Every minimum-cardinality edge set meeting all MCSs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSets {
    pub size: usize,
    /// Canonically sorted.
    pub sets: Vec<EdgeSet>,
}

/// Exact minimum hitting sets of `decomp`'s MCS family.
///
/// An empty family gives size 0 and the single empty set.
pub fn min_hitting_sets(decomp: &Decomposition) -> Result<HittingSets, HittingError> {
    if !decomp.complete {
        return Err(HittingError::IncompleteDecomposition);
    }
    Ok(min_hitting_sets_of(decomp.m_g.universe(), &decomp.mcs_edge_sets()))
}

/// [`min_hitting_sets`] over an arbitrary family of non-empty sets.
pub fn min_hitting_sets_of(universe: usize, family: &[EdgeSet]) -> HittingSets {
    let mut family: Vec<EdgeSet> = family.to_vec();
    // fail-first: small sets constrain the branching most
    family.sort_by(|a, b| a.count().cmp(&b.count()).then_with(|| a.cmp(b)));
    let mut solver = Solver {
        family: &family,
        chosen: EdgeSet::empty(universe),
        excluded: EdgeSet::empty(universe),
        found: Vec::new(),
    };
    let mut k = 0;
    loop {
        solver.search(k);
        if !solver.found.is_empty() {
            break;
        }
        k += 1;
    }
    let mut sets = std::mem::take(&mut solver.found);
    sets.sort();
    HittingSets { size: k, sets }
}

struct Solver<'a> {
    family: &'a [EdgeSet],
    chosen: EdgeSet,
    excluded: EdgeSet,
    found: Vec<EdgeSet>,
}

impl Solver<'_> {
    /// Collects every hitting set of size exactly `budget` extending
    /// `chosen`. Excluding earlier siblings makes each set appear once.
    fn search(&mut self, budget: usize) {
        let left = budget - self.chosen.count();
        let open: Vec<&EdgeSet> = self.family.iter().filter(|s| s.is_disjoint(&self.chosen)).collect();
        let Some(first) = open.first() else {
            if left == 0 {
                self.found.push(self.chosen.clone());
            }
            return;
        };
        if left == 0 || packing_bound(&open) > left {
            return;
        }
        let branch: Vec<usize> = first.iter().filter(|&e| !self.excluded.contains(e)).collect();
        let mut newly = Vec::new();
        for e in branch {
            self.chosen.insert(e);
            self.search(budget);
            self.chosen.remove(e);
            self.excluded.insert(e);
            newly.push(e);
        }
        for e in newly {
            self.excluded.remove(e);
        }
    }
}

/// Greedy count of pairwise disjoint sets; each needs its own edge.
fn packing_bound(open: &[&EdgeSet]) -> usize {
    let mut used: Option<EdgeSet> = None;
    let mut count = 0;
    for s in open {
        match &mut used {
            None => {
                used = Some((*s).clone());
                count = 1;
            }
            Some(u) if u.is_disjoint(s) => {
                u.union_with(s);
                count += 1;
            }
            Some(_) => {}
        }
    }
    count
}

/// K_G as the union of all minimum hitting sets.
pub fn critical_subgraph_via_hitting(decomp: &Decomposition) -> Result<EdgeSet, HittingError> {
    let hs = min_hitting_sets(decomp)?;
    let mut k = EdgeSet::empty(decomp.m_g.universe());
    for s in &hs.sets {
        k.union_with(s);
    }
    Ok(k)
}

/// K_G as the union of the conflict sets of all minimal colourings.
/// `cap` bounds the number of distinct conflict sets (0 = unlimited).
pub fn critical_subgraph_via_colourings(g: &Graph, r: usize, cap: usize) -> Result<EdgeSet, HittingError> {
    let mc = enumerate_minimal_colourings(g, r, cap);
    if !mc.complete {
        return Err(HittingError::ColouringCapReached(cap));
    }
    Ok(union_of_conflicts(g, &mc.colourings))
}

fn union_of_conflicts(g: &Graph, colourings: &[MinimalColouring]) -> EdgeSet {
    let mut k = g.no_edges();
    for c in colourings {
        k.union_with(&c.conflict_set);
    }
    k
}

/// Outcome of one check in [`verify_hitting_theorems`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// False when the premise does not hold; such checks pass vacuously.
    pub applicable: bool,
    /// The violating object on failure.
    pub certificate: Option<String>,
}

impl Check {
    fn new(name: &'static str, failure: Option<String>) -> Check {
        Check {
            name,
            passed: failure.is_none(),
            applicable: true,
            certificate: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Everything [`verify_hitting_theorems`] needs, computed once.
#[derive(Clone, Debug)]
pub struct HittingAnalysis {
    pub resistance: usize,
    pub hitting: HittingSets,
    pub minimal_colourings: Vec<MinimalColouring>,
    pub k_via_hitting: EdgeSet,
    pub k_via_colourings: EdgeSet,
}

impl HittingAnalysis {
    /// `r` must be the graph's resistance; `cap` bounds the minimal
    /// colouring enumeration (0 = unlimited).
    pub fn compute(g: &Graph, decomp: &Decomposition, r: usize, cap: usize) -> Result<Self, HittingError> {
        let hitting = min_hitting_sets(decomp)?;
        let mc = enumerate_minimal_colourings(g, r, cap);
        if !mc.complete {
            return Err(HittingError::ColouringCapReached(cap));
        }
        let mut k_via_hitting = g.no_edges();
        for s in &hitting.sets {
            k_via_hitting.union_with(s);
        }
        let k_via_colourings = union_of_conflicts(g, &mc.colourings);
        Ok(HittingAnalysis {
            resistance: r,
            hitting,
            minimal_colourings: mc.colourings,
            k_via_hitting,
            k_via_colourings,
        })
    }
}

/// Runs checks (a) to (e):
///
/// - `resistance_equals_min_hitting`: r equals the minimum hitting set size;
/// - `hitting_sets_uncolour`: G - R is 3-colourable for each minimum R;
/// - `critical_routes_agree`: both K_G computations coincide;
/// - `conflict_edges_isolated`: each conflicting edge of each minimal
///   colouring lies in an MCS with no other conflicting edge;
/// - `disjoint_family_count`: pairwise disjoint MCSs force r = |family|.
pub fn verify_hitting_theorems(g: &Graph, decomp: &Decomposition, a: &HittingAnalysis) -> Result<Verdict, HittingError> {
    if !decomp.complete {
        return Err(HittingError::IncompleteDecomposition);
    }
    let fmt = |s: &EdgeSet| format!("{:?}", s.to_vec());
    let mut checks = Vec::new();

    checks.push(Check::new(
        "resistance_equals_min_hitting",
        (a.resistance != a.hitting.size)
            .then(|| format!("r = {}, minimum hitting size = {}", a.resistance, a.hitting.size)),
    ));

    let all = g.all_edges();
    let bad = a
        .hitting
        .sets
        .iter()
        .find(|r| three_colour(g, &all.difference(r)).is_none());
    checks.push(Check::new(
        "hitting_sets_uncolour",
        bad.map(|r| format!("G - {} is still conflicting", fmt(r))),
    ));

    let agree = a.k_via_hitting == a.k_via_colourings;
    checks.push(Check::new(
        "critical_routes_agree",
        (!agree).then(|| {
            format!(
                "via hitting sets {}, via colourings {}",
                fmt(&a.k_via_hitting),
                fmt(&a.k_via_colourings)
            )
        }),
    ));

    let mut isolated = None;
    'outer: for mc in &a.minimal_colourings {
        for e in &mc.conflict_set {
            let ok = decomp
                .mcs_list
                .iter()
                .any(|m| m.edges.contains(e) && m.edges.intersection(&mc.conflict_set).count() == 1);
            if !ok {
                isolated = Some(format!("edge {e} of conflict set {}", fmt(&mc.conflict_set)));
                break 'outer;
            }
        }
    }
    checks.push(Check::new("conflict_edges_isolated", isolated));

    let sets = decomp.mcs_edge_sets();
    let disjoint = sets
        .iter()
        .enumerate()
        .all(|(i, s)| sets[i + 1..].iter().all(|t| s.is_disjoint(t)));
    let mut e = Check::new(
        "disjoint_family_count",
        (disjoint && a.resistance != sets.len())
            .then(|| format!("{} disjoint MCSs but r = {}", sets.len(), a.resistance)),
    );
    e.applicable = disjoint && !sets.is_empty();
    checks.push(e);

    Ok(Verdict { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criticality::{enumerate_all_mcs, DEFAULT_BUDGET};
    use crate::generators::{generate, petersen, Family};

    fn sets(universe: usize, lists: &[&[usize]]) -> Vec<EdgeSet> {
        lists
            .iter()
            .map(|l| EdgeSet::from_indices(universe, l.iter().copied()))
            .collect()
    }

    #[test]
    fn empty_family() {
        let hs = min_hitting_sets_of(5, &[]);
        assert_eq!(hs.size, 0);
        assert_eq!(hs.sets, vec![EdgeSet::empty(5)]);
    }

    #[test]
    fn small_families() {
        let hs = min_hitting_sets_of(6, &sets(6, &[&[0, 1], &[1, 2], &[3, 4]]));
        assert_eq!(hs.size, 2);
        assert_eq!(hs.sets, sets(6, &[&[1, 3], &[1, 4]]));

        let hs = min_hitting_sets_of(6, &sets(6, &[&[0, 1], &[2, 3], &[4, 5]]));
        assert_eq!(hs.size, 3);
        assert_eq!(hs.sets.len(), 8);
    }

    #[test]
    fn matches_brute_force() {
        use proptest::prelude::*;
        use proptest::test_runner::TestRunner;
        let mut runner = TestRunner::default();
        runner
            .run(
                &proptest::collection::vec(proptest::collection::btree_set(0usize..10, 1..5), 1..7),
                |lists| {
                    let fam: Vec<EdgeSet> = lists
                        .iter()
                        .map(|l| EdgeSet::from_indices(10, l.iter().copied()))
                        .collect();
                    let got = min_hitting_sets_of(10, &fam);
                    let mut best = usize::MAX;
                    let mut all = Vec::new();
                    for mask in 0u32..1 << 10 {
                        let s = EdgeSet::from_indices(10, (0..10).filter(|i| mask >> i & 1 == 1));
                        if fam.iter().all(|f| f.intersects(&s)) {
                            match s.count().cmp(&best) {
                                std::cmp::Ordering::Less => {
                                    best = s.count();
                                    all = vec![s];
                                }
                                std::cmp::Ordering::Equal => all.push(s),
                                std::cmp::Ordering::Greater => {}
                            }
                        }
                    }
                    all.sort();
                    prop_assert_eq!(got.size, best);
                    prop_assert_eq!(got.sets, all);
                    Ok(())
                },
            )
            .unwrap();
    }

    #[test]
    fn petersen_checks_pass() {
        let g = petersen();
        let d = enumerate_all_mcs(&g, DEFAULT_BUDGET).unwrap();
        let a = HittingAnalysis::compute(&g, &d, 2, 0).unwrap();
        assert_eq!(a.hitting.size, 2);
        assert_eq!(a.k_via_hitting, g.all_edges());
        assert_eq!(critical_subgraph_via_colourings(&g, 2, 0).unwrap(), g.all_edges());
        let v = verify_hitting_theorems(&g, &d, &a).unwrap();
        assert!(v.all_passed(), "{v:?}");
        assert!(!v.check("disjoint_family_count").unwrap().applicable);
    }

    #[test]
    fn class_one_is_vacuous() {
        let g = generate(Family::K4, 0).unwrap();
        let d = enumerate_all_mcs(&g, DEFAULT_BUDGET).unwrap();
        assert!(critical_subgraph_via_hitting(&d).unwrap().is_empty());
        let a = HittingAnalysis::compute(&g, &d, 0, 0).unwrap();
        assert!(a.k_via_colourings.is_empty());
        assert!(verify_hitting_theorems(&g, &d, &a).unwrap().all_passed());
    }

    #[test]
    fn incomplete_decomposition_refused() {
        let g = petersen();
        let d = enumerate_all_mcs(&g, 3).unwrap();
        assert_eq!(min_hitting_sets(&d), Err(HittingError::IncompleteDecomposition));
    }
}
