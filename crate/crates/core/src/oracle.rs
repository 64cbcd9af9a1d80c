//! Exact decision procedure for equitable `(t, k)`-tree-colorings, and the
//! arboricity parameters computed from it.
//!
//! The search assigns vertices in descending-degree order. A vertex may only
//! open a new class once all lower-indexed classes are non-empty, which removes
//! the `t!` relabelings of every partition. Class sizes are capped so that the
//! finished partition has exactly `n mod t` classes of size `⌈n/t⌉`, and each
//! placement is checked incrementally for cycles and degree.

use crate::bound::DegreeBound;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{bit, mask_vertices, Graph, VertexMask};

/// Search configuration. The default has no node limit, in which case the
/// search never aborts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Oracle {
    node_limit: Option<u64>,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    /// Aborts any single search that expands more than `limit` nodes with
    /// [`Error::NodeLimitExceeded`]. An aborted search is never reported as infeasible.
    pub fn with_node_limit(limit: u64) -> Self {
        Oracle {
            node_limit: Some(limit),
        }
    }

    pub fn node_limit(&self) -> Option<u64> {
        self.node_limit
    }

    /// A witness equitable `(t, k)`-tree-coloring of `g`, or `None` if there is none.
    pub fn find_coloring(&self, g: &Graph, t: usize, k: DegreeBound) -> Result<Option<Coloring>> {
        let n = g.order();
        if t == 0 {
            return Ok(None);
        }
        if t > n {
            // Singletons plus empty classes.
            return Coloring::new(t, (0..n).collect()).map(Some);
        }
        let mut search = Search::new(g, t, k, self.node_limit);
        if search.place(0)? {
            Ok(Some(Coloring::new(t, search.assignment)?))
        } else {
            Ok(None)
        }
    }

    pub fn is_feasible(&self, g: &Graph, t: usize, k: DegreeBound) -> Result<bool> {
        Ok(self.find_coloring(g, t, k)?.is_some())
    }

    /// `va_k^=`: the least `t` admitting an equitable `(t, k)`-tree-coloring.
    pub fn equitable_vertex_arboricity(&self, g: &Graph, k: DegreeBound) -> Result<usize> {
        for t in 1..=g.order() {
            if self.is_feasible(g, t, k)? {
                return Ok(t);
            }
        }
        Ok(1)
    }

    /// `va_k^≡`: the least `t` such that every `t' >= t` is feasible.
    ///
    /// For `k >= 1` every `q >= ⌈n/2⌉` is feasible (classes of at most two
    /// vertices), so only `q < ⌈n/2⌉` is searched. For `k = 0` that shortcut
    /// does not hold and the window extends to `n - 1`; `q >= n` is always
    /// feasible.
    pub fn strong_equitable_vertex_arboricity(&self, g: &Graph, k: DegreeBound) -> Result<usize> {
        let n = g.order();
        let upper = if k.allows_edges() {
            n.div_ceil(2).saturating_sub(1)
        } else {
            n.saturating_sub(1)
        };
        for q in (1..=upper).rev() {
            if !self.is_feasible(g, q, k)? {
                return Ok(q + 1);
            }
        }
        Ok(1)
    }

    /// Entry `t - 1` tells whether `t` classes are feasible, for `t = 1..=n`.
    pub fn feasibility_profile(&self, g: &Graph, k: DegreeBound) -> Result<Vec<bool>> {
        (1..=g.order()).map(|t| self.is_feasible(g, t, k)).collect()
    }
}

/// `va_k^≡` read off a full profile without any window assumption.
pub fn strong_from_profile(profile: &[bool]) -> usize {
    profile
        .iter()
        .rposition(|&feasible| !feasible)
        .map_or(1, |i| i + 2)
}

pub fn exists_equitable_tree_coloring(g: &Graph, t: usize, k: DegreeBound) -> Option<Coloring> {
    Oracle::new()
        .find_coloring(g, t, k)
        .expect("unlimited search cannot abort")
}

pub fn equitable_vertex_arboricity(g: &Graph, k: DegreeBound) -> usize {
    Oracle::new()
        .equitable_vertex_arboricity(g, k)
        .expect("unlimited search cannot abort")
}

pub fn strong_equitable_vertex_arboricity(g: &Graph, k: DegreeBound) -> usize {
    Oracle::new()
        .strong_equitable_vertex_arboricity(g, k)
        .expect("unlimited search cannot abort")
}

pub fn feasibility_profile(g: &Graph, k: DegreeBound) -> Vec<bool> {
    Oracle::new()
        .feasibility_profile(g, k)
        .expect("unlimited search cannot abort")
}

struct Search<'a> {
    g: &'a Graph,
    k: DegreeBound,
    order: Vec<usize>,
    t: usize,
    small: usize,
    big_quota: usize,
    members: Vec<VertexMask>,
    sizes: Vec<usize>,
    assignment: Vec<usize>,
    opened: usize,
    bigs: usize,
    /// Vertices still needed to bring every class up to `small`.
    deficit: usize,
    nodes: u64,
    limit: Option<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, t: usize, k: DegreeBound, limit: Option<u64>) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let small = n / t;
        Search {
            g,
            k,
            order,
            t,
            small,
            big_quota: n % t,
            members: vec![0; t],
            sizes: vec![0; t],
            assignment: vec![0; n],
            opened: 0,
            bigs: 0,
            deficit: small * t,
            nodes: 0,
            limit,
        }
    }

    fn has_room(&self, c: usize) -> bool {
        let size = self.sizes[c];
        size < self.small || (size == self.small && self.bigs < self.big_quota)
    }

    fn can_join(&self, v: usize, c: usize) -> bool {
        let class = self.members[c];
        let nb = self.g.neighbor_mask(v) & class;
        let d = nb.count_ones() as usize;
        if !self.k.allows(d) {
            return false;
        }
        if nb == 0 {
            return true;
        }
        if self.k.is_finite()
            && mask_vertices(nb).any(|u| !self.k.allows(self.g.degree_within(u, class) + 1))
        {
            return false;
        }
        // Joining keeps the class acyclic iff the neighbours lie in distinct trees.
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            let tree = self.g.component_within(u, class);
            if (tree & nb).count_ones() > 1 {
                return false;
            }
            rest &= !tree;
        }
        true
    }

    fn place(&mut self, i: usize) -> Result<bool> {
        let n = self.order.len();
        if i == n {
            return Ok(true);
        }
        self.nodes += 1;
        if let Some(limit) = self.limit {
            if self.nodes > limit {
                return Err(Error::NodeLimitExceeded(limit));
            }
        }
        let v = self.order[i];
        let left_after = n - i - 1;
        for c in 0..(self.opened + 1).min(self.t) {
            if !self.has_room(c) || !self.can_join(v, c) {
                continue;
            }
            let prev = self.sizes[c];
            let opened_new = c == self.opened;
            self.sizes[c] += 1;
            self.members[c] |= bit(v);
            self.assignment[v] = c;
            if opened_new {
                self.opened += 1;
            }
            if prev < self.small {
                self.deficit -= 1;
            } else {
                self.bigs += 1;
            }

            if self.deficit <= left_after && self.place(i + 1)? {
                return Ok(true);
            }

            if prev < self.small {
                self.deficit += 1;
            } else {
                self.bigs -= 1;
            }
            if opened_new {
                self.opened -= 1;
            }
            self.members[c] &= !bit(v);
            self.sizes[c] -= 1;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_tree_coloring;
    use crate::graph::{enumerate_labeled_graphs, Family};
    use crate::testutil::set_partitions;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const UNB: DegreeBound = DegreeBound::Unbounded;

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn checked(g: &Graph, t: usize, k: DegreeBound) -> Option<Coloring> {
        let w = exists_equitable_tree_coloring(g, t, k);
        if let Some(c) = &w {
            assert_eq!(c.t(), t);
            assert!(
                validate_tree_coloring(g, c, k).unwrap().valid,
                "{g:?} {c:?}"
            );
        }
        w
    }

    /// Independent oracle: try every set partition with exactly `t` blocks.
    fn brute_force_feasible(
        g: &Graph,
        t: usize,
        k: DegreeBound,
        partitions: &[Vec<usize>],
    ) -> bool {
        if t > g.order() {
            return true;
        }
        partitions.iter().any(|rgs| {
            rgs.iter().max().map_or(0, |m| m + 1) == t
                && validate_tree_coloring(g, &Coloring::new(t, rgs.clone()).unwrap(), k)
                    .unwrap()
                    .valid
        })
    }

    #[test]
    fn decision_examples() {
        assert!(checked(&fam(Family::Complete(5)), 2, UNB).is_none());
        let w = checked(&fam(Family::Complete(6)), 3, 1.into()).unwrap();
        assert_eq!(w.class_sizes(), vec![2, 2, 2]);
        assert!(checked(&fam(Family::Cycle(5)), 2, UNB).is_some());
        assert!(checked(&fam(Family::Edgeless(0)), 1, UNB).is_some());
        assert!(checked(&fam(Family::Path(3)), 5, 0.into()).is_some());
        assert!(exists_equitable_tree_coloring(&fam(Family::Path(3)), 0, UNB).is_none());
    }

    #[test]
    fn arboricity_examples() {
        let k33 = fam(Family::CompleteBipartite(3, 3));
        assert_eq!(equitable_vertex_arboricity(&k33, 0.into()), 2);
        assert_eq!(
            equitable_vertex_arboricity(&fam(Family::Complete(5)), UNB),
            3
        );
        let forest = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (4, 5)]).unwrap();
        for k in [3, 4].map(DegreeBound::Finite).into_iter().chain([UNB]) {
            assert_eq!(equitable_vertex_arboricity(&forest, k), 1);
            assert_eq!(strong_equitable_vertex_arboricity(&forest, k), 1);
        }
    }

    #[test]
    fn strong_examples() {
        let p4 = fam(Family::Path(4));
        assert_eq!(strong_equitable_vertex_arboricity(&p4, 1.into()), 2);
        assert_eq!(strong_equitable_vertex_arboricity(&p4, 2.into()), 1);
        for k in [DegreeBound::Finite(1), DegreeBound::Finite(2), UNB] {
            assert_eq!(
                strong_equitable_vertex_arboricity(&fam(Family::Complete(7)), k),
                4
            );
        }
        // k = 0: K_n needs n classes and every t >= n works.
        assert_eq!(
            strong_equitable_vertex_arboricity(&fam(Family::Complete(4)), 0.into()),
            4
        );
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            feasibility_profile(&fam(Family::Complete(5)), UNB),
            vec![false, false, true, true, true]
        );
        assert!(feasibility_profile(&fam(Family::Edgeless(6)), 0.into())
            .iter()
            .all(|&b| b));
        // K_{3,3}, k = 1, t = 3: classes of two vertices are always fine.
        let profile = feasibility_profile(&fam(Family::CompleteBipartite(3, 3)), 1.into());
        assert_eq!(profile, vec![false, true, true, true, true, true]);
        // K_{2m+1,2m+1} with m = 1: proper equitable 2-coloring exists, 3-coloring does not.
        let profile = feasibility_profile(&fam(Family::CompleteBipartite(3, 3)), 0.into());
        assert_eq!(profile, vec![false, true, false, true, true, true]);
        let k55 = fam(Family::CompleteBipartite(5, 5));
        assert!(checked(&k55, 2, 0.into()).is_some());
        assert!(checked(&k55, 5, 0.into()).is_none());
    }

    #[test]
    fn matches_brute_force_exhaustively() {
        let ks = [0, 1, 2].map(DegreeBound::Finite).into_iter().chain([UNB]);
        let ks: Vec<_> = ks.collect();
        for n in 1..=5 {
            let partitions = set_partitions(n);
            for g in enumerate_labeled_graphs(n).unwrap() {
                for &k in &ks {
                    for t in 1..=n + 1 {
                        assert_eq!(
                            checked(&g, t, k).is_some(),
                            brute_force_feasible(&g, t, k, &partitions),
                            "{g:?} t={t} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn profile_window_and_bounds_exhaustive() {
        for n in 1..=6 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                for k in [DegreeBound::Finite(1), DegreeBound::Finite(2), UNB] {
                    let profile = feasibility_profile(&g, k);
                    assert!(profile[n.div_ceil(2) - 1..].iter().all(|&b| b));
                    let strong = strong_equitable_vertex_arboricity(&g, k);
                    assert_eq!(strong, strong_from_profile(&profile));
                    assert!((1..=n.div_ceil(2)).contains(&strong));
                    let weak = equitable_vertex_arboricity(&g, k);
                    assert!(weak <= strong);
                    assert_eq!(weak, profile.iter().position(|&b| b).unwrap() + 1);
                }
            }
        }
    }

    #[test]
    fn monotone_in_k() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 0.5);
            for t in 1..=n {
                let mut prev = false;
                for k in [0, 1, 2, 3]
                    .map(DegreeBound::Finite)
                    .into_iter()
                    .chain([UNB])
                {
                    let now = checked(&g, t, k).is_some();
                    assert!(!prev || now);
                    prev = now;
                }
            }
        }
    }

    #[test]
    fn spanning_subgraph_monotone() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(2..=7);
            let g = random_graph(&mut rng, n, 0.6);
            let mut h = g.clone();
            for (u, v) in g.edges() {
                if rng.gen_bool(0.4) {
                    h.remove_edge(u, v).unwrap();
                }
            }
            for k in [DegreeBound::Finite(1), DegreeBound::Finite(2), UNB] {
                assert!(
                    strong_equitable_vertex_arboricity(&h, k)
                        <= strong_equitable_vertex_arboricity(&g, k)
                );
            }
        }
    }

    #[test]
    fn node_limit_aborts_instead_of_answering() {
        let k9 = fam(Family::Complete(9));
        let oracle = Oracle::with_node_limit(3);
        assert!(matches!(
            oracle.find_coloring(&k9, 3, UNB),
            Err(Error::NodeLimitExceeded(3))
        ));
        assert!(!Oracle::with_node_limit(1_000_000)
            .is_feasible(&k9, 3, UNB)
            .unwrap());
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }
}
