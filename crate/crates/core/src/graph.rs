//! Immutable simple graphs with a canonical edge indexing.
//!
//! Edges are stored as `(u, v)` with `u < v` and sorted lexicographically;
//! the position in that list is the edge index used by every [`EdgeSet`].
//! Subgraphs are never materialised as new graphs: deleting edges means
//! masking them out with an [`EdgeSet`].

use std::collections::VecDeque;

use thiserror::Error;

use crate::edgeset::EdgeSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not subcubic: vertex {vertex} has degree {degree}")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: usize, degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Per vertex: `(neighbour, edge index)`, sorted by neighbour.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from an unordered list of vertex pairs.
    ///
    /// The input order of pairs and of the endpoints within a pair does not
    /// matter; the canonical edge order is recomputed here.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree, Δ.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = (a.min(b), a.max(b));
        self.edges.binary_search(&(u, v)).ok()
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn require_subcubic(&self) -> Result<(), GraphError> {
        match (0..self.n).find(|&v| self.degree(v) > 3) {
            Some(v) => Err(GraphError::NotSubcubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    pub fn require_cubic(&self) -> Result<(), GraphError> {
        match (0..self.n).find(|&v| self.degree(v) != 3) {
            Some(v) => Err(GraphError::NotCubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    pub fn no_edges(&self) -> EdgeSet {
        EdgeSet::empty(self.edge_count())
    }

    /// Edges incident to `v`.
    pub fn star(&self, v: usize) -> EdgeSet {
        EdgeSet::from_indices(self.edge_count(), self.adj[v].iter().map(|&(_, e)| e))
    }

    /// Edges sharing at least one endpoint with `e`, excluding `e` itself.
    pub fn adjacent_edges(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        let (u, v) = self.edges[e];
        self.adj[u]
            .iter()
            .chain(&self.adj[v])
            .map(|&(_, f)| f)
            .filter(move |&f| f != e)
    }

    pub fn subgraph(&self, edges: EdgeSet) -> Subgraph<'_> {
        Subgraph::new(self, edges)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// The subgraph induced by a set of edges of a host graph.
///
/// A vertex belongs to the subgraph iff at least one of its edges does.
#[derive(Clone, Debug)]
pub struct Subgraph<'g> {
    host: &'g Graph,
    edges: EdgeSet,
    degree: Vec<usize>,
}

impl<'g> Subgraph<'g> {
    pub fn new(host: &'g Graph, edges: EdgeSet) -> Self {
        assert_eq!(edges.universe(), host.edge_count());
        let mut degree = vec![0; host.vertex_count()];
        for e in &edges {
            let (u, v) = host.edge(e);
            degree[u] += 1;
            degree[v] += 1;
        }
        Subgraph { host, edges, degree }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.degree[v] > 0
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.host.vertex_count())
            .filter(|&v| self.degree[v] > 0)
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.degree.iter().filter(|&&d| d > 0).count()
    }

    /// Neighbours of `v` through edges of this subgraph.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.host.adj[v]
            .iter()
            .copied()
            .filter(|&(_, e)| self.edges.contains(e))
    }

    /// Edges of this subgraph whose removal increases the number of
    /// connected components.
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.host.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX || self.degree[root] == 0 {
                continue;
            }
            // Iterative DFS: (vertex, edge used to enter, next neighbour slot).
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (u, via, ref mut slot)) = stack.last_mut() {
                let adj = &self.host.adj[u];
                if *slot < adj.len() {
                    let (w, e) = adj[*slot];
                    *slot += 1;
                    if !self.edges.contains(e) || e == via {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push(via);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_with_tail() -> Graph {
        Graph::new(4, &[(2, 1), (0, 1), (0, 2), (3, 2)]).unwrap()
    }

    #[test]
    fn canonical_edge_order() {
        let g = triangle_with_tail();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(g.edge_index(3, 2), Some(3));
        assert_eq!(g.edge_index(0, 3), None);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_subcubic());
        assert!(!g.is_cubic());
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn subgraph_vertices_and_bridges() {
        let g = triangle_with_tail();
        let all = g.subgraph(g.all_edges());
        assert_eq!(all.bridges(), vec![3]);
        assert_eq!(all.vertex_count(), 4);
        let tri = g.subgraph(EdgeSet::from_indices(4, [0, 1, 2]));
        assert!(tri.is_bridgeless());
        assert!(!tri.contains_vertex(3));
        assert_eq!(tri.vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn girth_and_connectivity() {
        let g = triangle_with_tail();
        assert_eq!(g.girth(), Some(3));
        assert!(g.is_connected());
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), None);
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
    }

    #[test]
    fn adjacent_edges_share_an_endpoint() {
        let g = triangle_with_tail();
        let mut adj: Vec<_> = g.adjacent_edges(2).collect();
        adj.sort_unstable();
        assert_eq!(adj, vec![0, 1, 3]);
    }
}
