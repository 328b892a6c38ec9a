//! Named graphs used throughout the test corpus.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown graph family '{0}'")]
    UnknownFamily(String),
    #[error("invalid parameter {param} for {family}: {reason}")]
    InvalidParameter {
        family: Family,
        param: usize,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Petersen,
    /// Flower snark J_k, k odd and at least 5.
    Flower,
    K4,
    K33,
    /// Triangular prism.
    Prism,
    /// n overlapping minimal conflicting subgraphs in a path (n + 1 blocks).
    ChainCluster,
    /// Four overlapping minimal conflicting subgraphs; same as `chain_cluster(4)`.
    FixtureExample1,
    /// Three disjoint Petersen-minus-a-vertex gadgets around a central vertex.
    FixtureExample2,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Petersen,
        Family::Flower,
        Family::K4,
        Family::K33,
        Family::Prism,
        Family::ChainCluster,
        Family::FixtureExample1,
        Family::FixtureExample2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Petersen => "petersen",
            Family::Flower => "flower",
            Family::K4 => "k4",
            Family::K33 => "k33",
            Family::Prism => "prism",
            Family::ChainCluster => "chain_cluster",
            Family::FixtureExample1 => "fixture_example1",
            Family::FixtureExample2 => "fixture_example2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

/// Builds a member of `family`. The parameter is ignored by fixed graphs.
pub fn generate(family: Family, parameter: usize) -> Result<Graph, GenerateError> {
    let invalid = |reason| GenerateError::InvalidParameter {
        family,
        param: parameter,
        reason,
    };
    Ok(match family {
        Family::Petersen => petersen(),
        Family::Flower => {
            if parameter < 5 || parameter.is_multiple_of(2) {
                return Err(invalid("flower snarks need an odd k >= 5"));
            }
            flower(parameter)
        }
        Family::K4 => build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        Family::K33 => {
            let pairs: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
            build(6, &pairs)
        }
        Family::Prism => build(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        Family::ChainCluster => {
            if parameter < 1 {
                return Err(invalid("a chain needs at least one conflicting subgraph"));
            }
            chain_cluster(parameter)
        }
        Family::FixtureExample1 => chain_cluster(4),
        Family::FixtureExample2 => three_gadget_snark(),
    })
}

fn build(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::new(n, pairs).expect("generator produced an invalid graph")
}

pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    build(10, &pairs)
}

/// Flower snark J_k on 4k vertices: claws a_i-{b_i, c_i, d_i}, a k-cycle
/// through the b_i and a 2k-cycle c_0..c_{k-1} d_0..d_{k-1}.
pub fn flower(k: usize) -> Graph {
    let (a, b, c, d) = (0, k, 2 * k, 3 * k);
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((a + i, b + i));
        pairs.push((a + i, c + i));
        pairs.push((a + i, d + i));
        pairs.push((b + i, b + (i + 1) % k));
    }
    for i in 0..k - 1 {
        pairs.push((c + i, c + i + 1));
        pairs.push((d + i, d + i + 1));
    }
    pairs.push((c + k - 1, d));
    pairs.push((d + k - 1, c));
    build(4 * k, &pairs)
}

/// Petersen vertices dropped from an `X` block, and the path removed from
/// a `Y` block (its middle edge joins the two dropped vertices).
const X_DROPPED: [usize; 2] = [0, 1];
const Y_PATH: [(usize, usize); 3] = [(1, 2), (0, 1), (0, 4)];

// Ports as Petersen labels: (left pair, right pair).
const X_PORTS: ([usize; 2], [usize; 2]) = ([2, 6], [4, 5]);
const Y_PORTS: ([usize; 2], [usize; 2]) = ([1, 2], [0, 4]);

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    /// Petersen minus two adjacent vertices: forces each port monochromatic.
    X,
    /// Petersen minus a three-edge path: closing either port with an edge
    /// leaves exactly one minimal conflicting subgraph.
    Y,
}

impl Block {
    fn at(i: usize) -> Block {
        if i.is_multiple_of(2) {
            Block::X
        } else {
            Block::Y
        }
    }

    fn vertices(self) -> Vec<usize> {
        match self {
            Block::X => (0..10).filter(|v| !X_DROPPED.contains(v)).collect(),
            Block::Y => (0..10).collect(),
        }
    }

    fn edges(self) -> Vec<(usize, usize)> {
        let p = petersen();
        p.edges()
            .iter()
            .copied()
            .filter(|&(u, v)| match self {
                Block::X => !X_DROPPED.contains(&u) && !X_DROPPED.contains(&v),
                Block::Y => !Y_PATH.contains(&(u, v)),
            })
            .collect()
    }

    fn ports(self) -> ([usize; 2], [usize; 2]) {
        match self {
            Block::X => X_PORTS,
            Block::Y => Y_PORTS,
        }
    }
}

/// n + 1 blocks in a row, alternating X, Y, X, ...; the right port of each
/// block is joined by two edges to the left port of the next. Every two
/// consecutive blocks carry one minimal conflicting subgraph, so there are
/// n of them and consecutive ones overlap inside the shared block.
pub fn chain_cluster(n: usize) -> Graph {
    let blocks = chain_blocks(n);
    let mut pairs = Vec::new();
    for (i, vs) in blocks.iter().enumerate() {
        let local = |v: usize| vs[Block::at(i).vertices().binary_search(&v).unwrap()];
        pairs.extend(Block::at(i).edges().into_iter().map(|(u, v)| (local(u), local(v))));
    }
    for i in 0..n {
        let (this, next) = (Block::at(i), Block::at(i + 1));
        let here = |v: usize| blocks[i][this.vertices().binary_search(&v).unwrap()];
        let there = |v: usize| blocks[i + 1][next.vertices().binary_search(&v).unwrap()];
        let (right, left) = (this.ports().1, next.ports().0);
        pairs.push((here(right[0]), there(left[0])));
        pairs.push((here(right[1]), there(left[1])));
    }
    build(blocks.last().map_or(0, |b| b[b.len() - 1] + 1), &pairs)
}

/// Three copies of Petersen-minus-a-vertex. Each copy has an inner
/// pentagram a0..a4, an outer path b0-b1-b2-b3 and spokes a_i-b_i for
/// i < 4. Every a4 meets a central vertex; b3 of one copy meets b0 of the
/// next, cyclically.
pub fn three_gadget_snark() -> Graph {
    let centre = 27;
    let mut pairs = Vec::new();
    for g in 0..3 {
        let a = |x: usize| 9 * g + x;
        let b = |x: usize| 9 * g + 5 + x;
        for x in 0..5 {
            pairs.push((a(x), a((x + 2) % 5)));
        }
        for x in 0..3 {
            pairs.push((b(x), b(x + 1)));
        }
        for x in 0..4 {
            pairs.push((a(x), b(x)));
        }
        pairs.push((a(4), centre));
        pairs.push((b(3), 9 * ((g + 1) % 3) + 5));
    }
    build(28, &pairs)
}

/// Vertex sets of the three gadgets of [`three_gadget_snark`].
pub fn three_gadget_parts() -> [Vec<usize>; 3] {
    [0, 1, 2].map(|g| (9 * g..9 * g + 9).collect())
}

/// Vertex sets of the blocks of [`chain_cluster`], in chain order.
pub fn chain_blocks(n: usize) -> Vec<Vec<usize>> {
    let mut next = 0;
    (0..=n)
        .map(|i| {
            let size = Block::at(i).vertices().len();
            next += size;
            (next - size..next).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &Graph) -> Vec<usize> {
        (0..g.vertex_count()).map(|v| g.degree(v)).collect()
    }

    #[test]
    fn petersen_shape() {
        let g = generate(Family::Petersen, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn flower_sizes() {
        for k in [5, 7, 9] {
            let g = generate(Family::Flower, k).unwrap();
            assert_eq!(g.vertex_count(), 4 * k);
            assert_eq!(g.edge_count(), 6 * k);
            assert!(g.is_cubic());
            assert!(g.is_connected());
        }
        assert!(generate(Family::Flower, 4).is_err());
        assert!(generate(Family::Flower, 3).is_err());
    }

    #[test]
    fn small_class_one_graphs() {
        for (f, n, m) in [(Family::K4, 4, 6), (Family::K33, 6, 9), (Family::Prism, 6, 9)] {
            let g = generate(f, 0).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
            assert!(g.is_cubic());
        }
    }

    #[test]
    fn chain_shape() {
        for n in 1..=5 {
            let g = generate(Family::ChainCluster, n).unwrap();
            let xs = n / 2 + 1;
            let ys = n.div_ceil(2);
            assert_eq!(g.vertex_count(), 8 * xs + 10 * ys);
            assert_eq!(g.edge_count(), 10 * xs + 12 * ys + 2 * n);
            assert!(g.is_subcubic() && g.is_connected());
            assert!(!g.is_cubic());
            let blocks = chain_blocks(n);
            assert_eq!(blocks.len(), n + 1);
            assert_eq!(blocks.concat(), (0..g.vertex_count()).collect::<Vec<_>>());
        }
        // even n: X blocks at both ends, so the only degree-2 vertices are
        // their free ports and the two path ends inside each Y block
        let g = chain_cluster(4);
        let deg2: Vec<_> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(deg2, vec![0, 4, 8, 9, 26, 27, 38, 39]);
        assert!((0..g.vertex_count()).all(|v| g.degree(v) >= 2));
        assert!(generate(Family::ChainCluster, 0).is_err());
        assert_eq!(generate(Family::FixtureExample1, 0).unwrap(), chain_cluster(4));
    }

    #[test]
    fn three_gadget_snark_is_cubic() {
        let g = generate(Family::FixtureExample2, 0).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (28, 42));
        assert!(degrees(&g).iter().all(|&d| d == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("heawood".parse::<Family>().is_err());
    }
}
