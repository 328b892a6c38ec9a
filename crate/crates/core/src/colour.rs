//! Exact proper edge-colouring search on edge-induced subgraphs.
//!
//! Colours are `0..=3`. Three-colourings use `{1, 2, 3}`; colour 0 is the
//! extra colour of a four-colouring and its class is always a matching.
//!
//! The search colours one edge at a time, always picking an uncoloured edge
//! with the fewest available colours (ties broken by canonical index), and
//! never introduces a fresh colour above the smallest unused one. Before
//! searching, pendant edges are peeled off (they can always be coloured
//! last) and the rest is split into connected components that are solved
//! independently.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};

use lru::LruCache;
use parking_lot::Mutex;

use crate::edgeset::EdgeSet;
use crate::graph::{Graph, Subgraph};

pub type Colour = u8;

/// Colour class 0, the conflicting colour.
pub const CONFLICT: Colour = 0;

const NONE: Colour = u8::MAX;

/// A proper edge colouring of an edge-induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    scope: EdgeSet,
    colour_of: Vec<Colour>,
}

impl Colouring {
    pub fn scope(&self) -> &EdgeSet {
        &self.scope
    }

    /// `None` for edges outside the scope.
    pub fn colour(&self, e: usize) -> Option<Colour> {
        let c = self.colour_of[e];
        (c != NONE).then_some(c)
    }

    /// The colour class f⁻¹(c).
    pub fn class(&self, c: Colour) -> EdgeSet {
        EdgeSet::from_indices(
            self.colour_of.len(),
            self.colour_of
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == c)
                .map(|(e, _)| e),
        )
    }

    pub fn classes(&self) -> [EdgeSet; 4] {
        [0, 1, 2, 3].map(|c| self.class(c))
    }

    /// Checks totality on the scope, the colour range and properness at
    /// every vertex, class 0 included.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colour_of.len() != g.edge_count() {
            return false;
        }
        for e in 0..g.edge_count() {
            let c = self.colour_of[e];
            if self.scope.contains(e) != (c != NONE) || (c != NONE && c > 3) {
                return false;
            }
        }
        (0..g.vertex_count()).all(|v| {
            let mut seen = 0u8;
            for &(_, e) in g.neighbours(v) {
                let c = self.colour_of[e];
                if c == NONE {
                    continue;
                }
                if seen >> c & 1 == 1 {
                    return false;
                }
                seen |= 1 << c;
            }
            true
        })
    }

    /// True when only colours 1, 2, 3 are used.
    pub fn is_three_colouring(&self) -> bool {
        self.colour_of.iter().all(|&c| c == NONE || (1..=3).contains(&c))
    }

    fn from_parts(scope: EdgeSet, colour_of: Vec<Colour>) -> Self {
        Colouring { scope, colour_of }
    }
}

/// A proper four-colouring whose class 0 has minimum size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalColouring {
    pub colouring: Colouring,
    /// f⁻¹(0), the conflicting edges.
    pub conflict_set: EdgeSet,
}

/// Finds a proper 3-edge-colouring of the subgraph, if one exists.
pub fn find_3_colouring(scope: &Subgraph<'_>) -> Option<Colouring> {
    three_colour(scope.host(), scope.edges())
}

/// True iff the subgraph admits no proper 3-edge-colouring.
pub fn is_conflicting(scope: &Subgraph<'_>) -> bool {
    find_3_colouring(scope).is_none()
}

/// Deterministic 3-colouring search over `scope`.
pub fn three_colour(g: &Graph, scope: &EdgeSet) -> Option<Colouring> {
    let plan = Plan::new(g, scope);
    let mut colour_of = vec![NONE; g.edge_count()];
    for comp in &plan.components {
        let mut s = Search::new(g, comp, 0);
        if !s.run() {
            return None;
        }
        for (i, &e) in comp.iter().enumerate() {
            colour_of[e] = s.colour[i];
        }
    }
    plan.colour_peeled(g, &mut colour_of);
    Some(Colouring::from_parts(scope.clone(), colour_of))
}

/// Minimum-size class 0 over proper 4-colourings of `scope`, by iterative
/// deepening on the class-0 budget. Components are minimised separately.
pub fn min_class0_colouring_in(g: &Graph, scope: &EdgeSet) -> MinimalColouring {
    let plan = Plan::new(g, scope);
    let mut colour_of = vec![NONE; g.edge_count()];
    for comp in &plan.components {
        let mut budget = 0;
        let s = loop {
            let mut s = Search::new(g, comp, budget);
            if s.run() {
                break s;
            }
            budget += 1;
        };
        for (i, &e) in comp.iter().enumerate() {
            colour_of[e] = s.colour[i];
        }
    }
    plan.colour_peeled(g, &mut colour_of);
    let colouring = Colouring::from_parts(scope.clone(), colour_of);
    let conflict_set = colouring.class(CONFLICT);
    MinimalColouring {
        colouring,
        conflict_set,
    }
}

/// Minimal colouring of the whole graph.
pub fn min_class0_colouring(g: &Graph) -> MinimalColouring {
    min_class0_colouring_in(g, &g.all_edges())
}

/// Reduction of a scope to its non-trivial part.
struct Plan {
    /// Connected components of the core, edges in canonical order.
    components: Vec<Vec<usize>>,
    /// Pendant edges in removal order.
    peeled: Vec<usize>,
}

impl Plan {
    fn new(g: &Graph, scope: &EdgeSet) -> Plan {
        let mut live = scope.clone();
        let mut degree = vec![0usize; g.vertex_count()];
        for e in scope {
            let (u, v) = g.edge(e);
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut stack: Vec<usize> = (0..g.vertex_count()).filter(|&v| degree[v] == 1).collect();
        let mut peeled = Vec::new();
        while let Some(v) = stack.pop() {
            if degree[v] != 1 {
                continue;
            }
            let e = g
                .neighbours(v)
                .iter()
                .map(|&(_, e)| e)
                .find(|&e| live.contains(e))
                .expect("degree-one vertex has a live edge");
            live.remove(e);
            peeled.push(e);
            let (a, b) = g.edge(e);
            degree[a] -= 1;
            degree[b] -= 1;
            let other = if a == v { b } else { a };
            if degree[other] == 1 {
                stack.push(other);
            }
        }

        let mut comp_of = vec![usize::MAX; g.vertex_count()];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for e in &live {
            let (root, _) = g.edge(e);
            if comp_of[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut edges = Vec::new();
            let mut queue = vec![root];
            comp_of[root] = id;
            while let Some(u) = queue.pop() {
                for &(w, f) in g.neighbours(u) {
                    if !live.contains(f) {
                        continue;
                    }
                    if u < w {
                        edges.push(f);
                    }
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = id;
                        queue.push(w);
                    }
                }
            }
            edges.sort_unstable();
            components.push(edges);
        }
        Plan { components, peeled }
    }

    fn colour_peeled(&self, g: &Graph, colour_of: &mut [Colour]) {
        for &e in self.peeled.iter().rev() {
            let (u, v) = g.edge(e);
            let mut used = 0u8;
            for w in [u, v] {
                for &(_, f) in g.neighbours(w) {
                    if colour_of[f] != NONE {
                        used |= 1 << colour_of[f];
                    }
                }
            }
            colour_of[e] = (1..=3)
                .find(|c| used >> c & 1 == 0)
                .expect("a pendant edge always has a free colour");
        }
    }
}

/// Backtracking over one connected component.
struct Search {
    ends: Vec<(usize, usize)>,
    /// Per local vertex: bit c set when colour c is on an incident edge.
    used: Vec<u8>,
    colour: Vec<Colour>,
    /// Remaining class-0 allowance.
    zero_budget: usize,
}

impl Search {
    fn new(g: &Graph, edges: &[usize], zero_budget: usize) -> Search {
        let mut local = std::collections::HashMap::new();
        let mut ends = Vec::with_capacity(edges.len());
        for &e in edges {
            let (u, v) = g.edge(e);
            let n = local.len();
            let lu = *local.entry(u).or_insert(n);
            let n = local.len();
            let lv = *local.entry(v).or_insert(n);
            ends.push((lu, lv));
        }
        Search {
            used: vec![0; local.len()],
            colour: vec![NONE; ends.len()],
            ends,
            zero_budget,
        }
    }

    fn run(&mut self) -> bool {
        self.step(0)
    }

    #[inline]
    fn free(&self, i: usize) -> u8 {
        let (u, v) = self.ends[i];
        !(self.used[u] | self.used[v]) & 0b1110
    }

    fn set(&mut self, i: usize, c: Colour) {
        let (u, v) = self.ends[i];
        self.colour[i] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
    }

    fn unset(&mut self, i: usize) {
        let (u, v) = self.ends[i];
        let c = self.colour[i];
        self.colour[i] = NONE;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
    }

    /// `max_colour` is the largest of 1..=3 used so far (0 if none).
    fn step(&mut self, max_colour: Colour) -> bool {
        let mut pick = usize::MAX;
        let mut best = u32::MAX;
        let mut stuck = 0usize;
        for i in 0..self.ends.len() {
            if self.colour[i] != NONE {
                continue;
            }
            let k = self.free(i).count_ones();
            if k == 0 {
                let (u, v) = self.ends[i];
                if (self.used[u] | self.used[v]) & 1 != 0 {
                    // colour 0 is also blocked
                    return false;
                }
                stuck += 1;
            }
            if k < best {
                best = k;
                pick = i;
            }
        }
        if pick == usize::MAX {
            return true;
        }
        if stuck > self.zero_budget {
            return false;
        }
        let free = self.free(pick);
        for c in 1..=3u8 {
            if free >> c & 1 == 0 || c > max_colour + 1 {
                continue;
            }
            self.set(pick, c);
            if self.step(max_colour.max(c)) {
                return true;
            }
            self.unset(pick);
        }
        if self.zero_budget > 0 {
            let (u, v) = self.ends[pick];
            if (self.used[u] | self.used[v]) & 1 == 0 {
                self.zero_budget -= 1;
                self.set(pick, CONFLICT);
                if self.step(max_colour) {
                    return true;
                }
                self.unset(pick);
                self.zero_budget += 1;
            }
        }
        false
    }
}

/// Default memo capacity for [`ColourOracle`].
pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 20;

/// Memoising conflict oracle for edge subsets of one host graph.
///
/// Safe to share between threads; every query counts towards
/// [`ColourOracle::calls`], cached or not.
pub struct ColourOracle<'g> {
    graph: &'g Graph,
    cache: Mutex<LruCache<EdgeSet, bool>>,
    calls: AtomicU64,
    searches: AtomicU64,
}

impl<'g> ColourOracle<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_capacity(graph, DEFAULT_CACHE_ENTRIES)
    }

    pub fn with_capacity(graph: &'g Graph, entries: usize) -> Self {
        let cap = NonZeroUsize::new(entries.max(1)).expect("non-zero");
        ColourOracle {
            graph,
            cache: Mutex::new(LruCache::new(cap)),
            calls: AtomicU64::new(0),
            searches: AtomicU64::new(0),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Number of conflict queries answered so far.
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    /// Number of queries that required a search.
    pub fn searches(&self) -> u64 {
        self.searches.load(Ordering::Relaxed)
    }

    pub fn find_3_colouring(&self, scope: &EdgeSet) -> Option<Colouring> {
        let found = three_colour(self.graph, scope);
        self.cache.lock().put(scope.clone(), found.is_none());
        found
    }

    pub fn is_conflicting(&self, scope: &EdgeSet) -> bool {
        self.calls.fetch_add(1, Ordering::Relaxed);
        if let Some(&hit) = self.cache.lock().get(scope) {
            return hit;
        }
        self.searches.fetch_add(1, Ordering::Relaxed);
        let answer = three_colour(self.graph, scope).is_none();
        self.cache.lock().put(scope.clone(), answer);
        answer
    }

    pub fn is_colourable(&self, scope: &EdgeSet) -> bool {
        !self.is_conflicting(scope)
    }
}

/// Result of [`enumerate_minimal_colourings`].
#[derive(Clone, Debug)]
pub struct MinimalColourings {
    /// One witness per distinct conflict set, sorted by conflict set.
    pub colourings: Vec<MinimalColouring>,
    /// False when the cap stopped the enumeration early.
    pub complete: bool,
}

/// Every distinct conflict set of a proper 4-colouring with exactly `r`
/// edges in class 0, with one witness colouring each.
///
/// Class 0 is a matching, so candidate conflict sets are the `r`-edge
/// matchings in lexicographic order; a matching qualifies iff the rest of
/// the graph is 3-colourable. `cap == 0` means unlimited.
pub fn enumerate_minimal_colourings(g: &Graph, r: usize, cap: usize) -> MinimalColourings {
    let mut out = Vec::new();
    let mut complete = true;
    let all = g.all_edges();
    for_each_matching(g, r, |matching| {
        if cap != 0 && out.len() == cap {
            complete = false;
            return false;
        }
        let conflict_set = EdgeSet::from_indices(g.edge_count(), matching.iter().copied());
        if let Some(mut colouring) = three_colour(g, &all.difference(&conflict_set)) {
            for &e in matching {
                colouring.colour_of[e] = CONFLICT;
            }
            colouring.scope = all.clone();
            out.push(MinimalColouring {
                colouring,
                conflict_set,
            });
        }
        true
    });
    MinimalColourings {
        colourings: out,
        complete,
    }
}

/// Calls `visit` on every matching of exactly `size` edges, in
/// lexicographic order of the ascending edge-index lists. Stops early when
/// `visit` returns false; returns whether the walk ran to completion.
pub fn for_each_matching<F>(g: &Graph, size: usize, mut visit: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    fn rec<F: FnMut(&[usize]) -> bool>(
        g: &Graph,
        size: usize,
        start: usize,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) -> bool {
        if chosen.len() == size {
            return visit(chosen);
        }
        let m = g.edge_count();
        let need = size - chosen.len();
        for e in start..m {
            if m - e < need {
                break;
            }
            let (u, v) = g.edge(e);
            if covered[u] || covered[v] {
                continue;
            }
            covered[u] = true;
            covered[v] = true;
            chosen.push(e);
            let go_on = rec(g, size, e + 1, covered, chosen, visit);
            chosen.pop();
            covered[u] = false;
            covered[v] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
    let mut covered = vec![false; g.vertex_count()];
    rec(g, size, 0, &mut covered, &mut Vec::new(), &mut visit)
}
