//! Edge and vertex resistance by iterative deepening over deletion sets.

use crate::colour::{for_each_matching, three_colour};
use crate::edgeset::EdgeSet;
use crate::graph::{Graph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resistance {
    /// Fewest edges whose removal leaves a 3-edge-colourable graph.
    pub r: usize,
    /// Fewest vertices whose removal leaves a 3-edge-colourable graph.
    pub r_v: usize,
    /// `r` edges forming a matching; the rest is 3-colourable.
    pub witness_deletion: EdgeSet,
    /// `r_v` vertices; removing them leaves a 3-colourable graph.
    pub witness_vertices: Vec<usize>,
}

/// Computes both resistances with witnesses.
///
/// Edge deletions are searched over matchings only: class 0 of any proper
/// 4-colouring is a matching, so a minimum deletion set can always be
/// chosen that way.
pub fn resistance(g: &Graph) -> Result<Resistance, GraphError> {
    g.require_subcubic()?;
    let (r, witness_deletion) = edge_resistance(g);
    let (r_v, witness_vertices) = vertex_resistance(g);
    Ok(Resistance {
        r,
        r_v,
        witness_deletion,
        witness_vertices,
    })
}

/// Edge resistance alone, with a witness matching.
pub fn edge_resistance(g: &Graph) -> (usize, EdgeSet) {
    let all = g.all_edges();
    for k in 0..=g.edge_count() {
        let mut found = None;
        for_each_matching(g, k, |m| {
            let del = EdgeSet::from_indices(g.edge_count(), m.iter().copied());
            if three_colour(g, &all.difference(&del)).is_some() {
                found = Some(del);
                false
            } else {
                true
            }
        });
        if let Some(del) = found {
            return (k, del);
        }
    }
    unreachable!("a subcubic graph has a proper 4-colouring, whose class 0 is a matching")
}

/// Vertex resistance alone, with a witness vertex set.
pub fn vertex_resistance(g: &Graph) -> (usize, Vec<usize>) {
    let all = g.all_edges();
    let n = g.vertex_count();
    for k in 0..=n {
        let mut chosen = Vec::with_capacity(k);
        if let Some(w) = subsets(g, &all, k, 0, &mut chosen) {
            return (k, w);
        }
    }
    unreachable!("deleting every vertex leaves the empty graph")
}

fn subsets(g: &Graph, all: &EdgeSet, k: usize, start: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
    if chosen.len() == k {
        let mut rest = all.clone();
        for &v in chosen.iter() {
            rest = rest.difference(&g.star(v));
        }
        return three_colour(g, &rest).map(|_| chosen.clone());
    }
    let need = k - chosen.len();
    for v in start..g.vertex_count() {
        if g.vertex_count() - v < need {
            break;
        }
        // an isolated vertex never helps
        if g.degree(v) == 0 {
            continue;
        }
        chosen.push(v);
        let hit = subsets(g, all, k, v + 1, chosen);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, petersen, Family};

    #[test]
    fn class_one_has_zero_resistance() {
        let g = generate(Family::K4, 0).unwrap();
        let res = resistance(&g).unwrap();
        assert_eq!((res.r, res.r_v), (0, 0));
        assert!(res.witness_deletion.is_empty() && res.witness_vertices.is_empty());
    }

    #[test]
    fn petersen_resistance_two() {
        let g = petersen();
        let res = resistance(&g).unwrap();
        assert_eq!((res.r, res.r_v), (2, 2));
        assert_eq!(res.witness_deletion.count(), 2);
        let rest = g.all_edges().difference(&res.witness_deletion);
        assert!(three_colour(&g, &rest).is_some());
        assert_eq!(res.witness_vertices.len(), 2);
    }

    #[test]
    fn non_subcubic_rejected() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(resistance(&g).is_err());
    }
}
