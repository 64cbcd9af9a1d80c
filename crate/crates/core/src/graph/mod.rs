//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is one `u64` bitset per vertex, so edge tests and neighbourhood
//! intersections with a vertex set are single word operations. Every search in
//! this crate works on desk-scale graphs, which is what makes the cap harmless.

pub mod enumerate;
pub mod graph6;
pub mod matching;

use std::fmt;

use crate::bound::DegreeBound;
use crate::error::{Error, Result};

pub use enumerate::{enumerate_labeled_graphs, LabeledGraphs, ENUMERATION_MAX_ORDER};
pub use graph6::{encode_graph6, parse_graph6, read_graph6_lines, Graph6Error};
pub use matching::{maximum_matching, Matching};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// A set of vertices of one graph, bit `v` standing for vertex `v`.
pub type VertexMask = u64;

pub(crate) fn bit(v: usize) -> VertexMask {
    1u64 << v
}

pub(crate) fn mask_vertices(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexMask>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Mask containing every vertex.
    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.order())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & bit(v) != 0
    }

    pub fn neighbor_mask(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_vertices(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| mask_vertices(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, m)| !m & all & !bit(v))
            .collect();
        Graph { adj }
    }

    /// `G[s]`, with vertices renumbered in increasing order of their old index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut old: Vec<usize> = vertices.to_vec();
        old.sort_unstable();
        old.dedup();
        for &v in &old {
            self.check_vertex(v)?;
        }
        let mut graph = Graph::new(old.len())?;
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    graph.add_edge(i, j)?;
                }
            }
        }
        Ok(InducedSubgraph {
            graph,
            vertices: old,
        })
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParameters {
                family: "permutation",
                reason: format!("length {} for order {n}", perm.len()),
            });
        }
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertex_mask() {
            return Err(Error::InvalidParameters {
                family: "permutation",
                reason: "not a bijection".into(),
            });
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn component_within(&self, start: usize, within: VertexMask) -> VertexMask {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn component_count_within(&self, within: VertexMask) -> usize {
        let mut rest = within;
        let mut count = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !self.component_within(v, within);
            count += 1;
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.component_count_within(self.vertex_mask())
    }

    pub fn edge_count_within(&self, within: VertexMask) -> usize {
        mask_vertices(within)
            .map(|v| (self.adj[v] & within).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree_within(&self, v: usize, within: VertexMask) -> usize {
        (self.adj[v] & within).count_ones() as usize
    }

    pub fn is_acyclic_within(&self, within: VertexMask) -> bool {
        self.edge_count_within(within) + self.component_count_within(within)
            == within.count_ones() as usize
    }

    /// Some cycle of `G[within]`, as a vertex sequence, if one exists.
    pub fn find_cycle_within(&self, within: VertexMask) -> Option<Vec<usize>> {
        let n = self.order();
        let mut parent = vec![usize::MAX; n];
        let mut visited: VertexMask = 0;
        for root in mask_vertices(within) {
            if visited & bit(root) != 0 {
                continue;
            }
            // Iterative DFS; a non-tree edge to a visited vertex closes a cycle.
            visited |= bit(root);
            let mut stack = vec![(root, self.adj[root] & within)];
            while let Some((v, pending)) = stack.last_mut() {
                let v = *v;
                if *pending == 0 {
                    stack.pop();
                    continue;
                }
                let w = pending.trailing_zeros() as usize;
                *pending &= *pending - 1;
                if w == parent[v] {
                    continue;
                }
                if visited & bit(w) != 0 {
                    let mut cycle = vec![v];
                    let mut x = v;
                    while x != w {
                        x = parent[x];
                        cycle.push(x);
                    }
                    return Some(cycle);
                }
                visited |= bit(w);
                parent[w] = v;
                stack.push((w, self.adj[w] & within & !bit(v)));
            }
        }
        None
    }

    pub fn is_forest(&self) -> bool {
        self.is_acyclic_within(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.component_count() == 1
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order() * self.order().saturating_sub(1) / 2
    }
}

/// True iff `g` is acyclic and, for a finite bound, Δ(g) ≤ bound.
pub fn is_forest_with_max_degree(g: &Graph, bound: DegreeBound) -> bool {
    g.is_forest() && bound.allows(g.max_degree())
}

/// True iff `g` has a path on four vertices as a (not necessarily induced) subgraph.
///
/// Such a path exists exactly when some edge `uv` has a further neighbour `a`
/// of `u` and `b` of `v` with `a != b`.
pub fn contains_p4_subgraph(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let left = g.neighbor_mask(u) & !bit(v);
        let right = g.neighbor_mask(v) & !bit(u);
        left != 0 && right != 0 && !(left == right && left.count_ones() == 1)
    })
}

pub(crate) fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// An induced subgraph together with its vertex correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[new] = old`, sorted ascending.
    pub vertices: Vec<usize>,
}

impl InducedSubgraph {
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.vertices.binary_search(&old).ok()
    }
}

/// The labeled graph families used by the constructions and tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteTripartite(usize, usize, usize),
    /// Order `n`: vertex 0 is the centre, vertices `1..n` form the rim cycle.
    Wheel(usize),
    /// `K_{1,n-1}` with centre 0.
    Star(usize),
    Path(usize),
    Cycle(usize),
    Edgeless(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Complete(n) => complete_multipartite(&vec![1; n]),
            Family::CompleteBipartite(a, b) => complete_multipartite(&[a, b]),
            Family::CompleteTripartite(a, b, c) => complete_multipartite(&[a, b, c]),
            Family::Wheel(n) => {
                if n < 4 {
                    return Err(invalid("wheel", format!("order {n} < 4")));
                }
                let mut g = Graph::new(n)?;
                for v in 1..n {
                    g.add_edge(0, v)?;
                    g.add_edge(v, if v + 1 < n { v + 1 } else { 1 })?;
                }
                Ok(g)
            }
            Family::Star(n) => {
                if n < 1 {
                    return Err(invalid("star", "order must be at least 1".into()));
                }
                Graph::from_edges(n, (1..n).map(|v| (0, v)))
            }
            Family::Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(invalid("cycle", format!("order {n} < 3")));
                }
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
            }
            Family::Edgeless(n) => Graph::new(n),
        }
    }
}

fn invalid(family: &'static str, reason: String) -> Error {
    Error::InvalidParameters { family, reason }
}

/// Complete multipartite graph with parts laid out consecutively: part 0 is
/// `0..parts[0]`, part 1 follows, and so on.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::new(n)?;
    let label = part_labels(parts);
    for u in 0..n {
        for v in u + 1..n {
            if label[u] != label[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Part index of every vertex under the consecutive layout.
pub fn part_labels(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &size)| std::iter::repeat_n(i, size))
        .collect()
}
