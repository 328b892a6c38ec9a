//! Minimal transversals (minimal hitting sets) of a family of edge sets.
//!
//! The walk branches on the edges of the first set not yet hit. In the
//! branch for the i-th edge of that set, the edges before it are excluded
//! for the rest of the subtree, so every minimal transversal is produced
//! exactly once. A partial selection is abandoned as soon as one of its
//! edges has no private set left, since adding edges never restores one.

use std::ops::ControlFlow;

use crate::edgeset::EdgeSet;

/// Calls `visit` on each minimal transversal of `family`, in a
/// deterministic order. Returns `Break` if `visit` broke out early.
///
/// An empty family has exactly one minimal transversal, the empty set.
pub fn for_each_minimal_transversal<B, F>(
    universe: usize,
    family: &[EdgeSet],
    mut visit: F,
) -> ControlFlow<B>
where
    F: FnMut(&EdgeSet) -> ControlFlow<B>,
{
    if family.iter().any(EdgeSet::is_empty) {
        // nothing hits an empty set
        return ControlFlow::Continue(());
    }
    let mut walk = Walk {
        family,
        chosen: EdgeSet::empty(universe),
        order: Vec::new(),
    };
    let mut excluded = EdgeSet::empty(universe);
    walk.rec(&mut excluded, &mut visit)
}

/// Collects every minimal transversal of `family`.
pub fn minimal_transversals(universe: usize, family: &[EdgeSet]) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    let _ = for_each_minimal_transversal::<(), _>(universe, family, |t| {
        out.push(t.clone());
        ControlFlow::Continue(())
    });
    out
}

/// True iff `candidate` meets every set of `family`.
pub fn is_transversal(candidate: &EdgeSet, family: &[EdgeSet]) -> bool {
    family.iter().all(|s| s.intersects(candidate))
}

/// True iff `candidate` is a transversal and no proper subset is.
pub fn is_minimal_transversal(candidate: &EdgeSet, family: &[EdgeSet]) -> bool {
    is_transversal(candidate, family) && candidate.iter().all(|e| has_private(e, candidate, family))
}

fn has_private(e: usize, chosen: &EdgeSet, family: &[EdgeSet]) -> bool {
    family.iter().any(|s| {
        s.contains(e) && {
            let hit = s.intersection(chosen);
            hit.count() == 1
        }
    })
}

struct Walk<'a> {
    family: &'a [EdgeSet],
    chosen: EdgeSet,
    order: Vec<usize>,
}

impl Walk<'_> {
    fn rec<B, F>(&mut self, excluded: &mut EdgeSet, visit: &mut F) -> ControlFlow<B>
    where
        F: FnMut(&EdgeSet) -> ControlFlow<B>,
    {
        let open = self.family.iter().find(|s| s.is_disjoint(&self.chosen));
        let Some(open) = open else {
            return visit(&self.chosen);
        };
        let candidates: Vec<usize> = open.iter().collect();
        let mut newly_excluded = Vec::new();
        let mut result = ControlFlow::Continue(());
        for &e in &candidates {
            if excluded.contains(e) {
                continue;
            }
            self.chosen.insert(e);
            self.order.push(e);
            let keeps_minimal = self
                .order
                .iter()
                .all(|&x| has_private(x, &self.chosen, self.family));
            if keeps_minimal {
                result = self.rec(excluded, visit);
            }
            self.order.pop();
            self.chosen.remove(e);
            if result.is_break() {
                break;
            }
            excluded.insert(e);
            newly_excluded.push(e);
        }
        for e in newly_excluded {
            excluded.remove(e);
        }
        result
    }
}
