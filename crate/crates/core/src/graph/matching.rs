use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// A set of pairwise vertex-disjoint edges of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the matching invariants against `host`.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let mut used = 0u64;
        self.edges.iter().all(|&(u, v)| {
            let ok = host.has_edge(u, v) && used & (1 << u) == 0 && used & (1 << v) == 0;
            used |= (1 << u) | (1 << v);
            ok
        })
    }
}

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// contraction, O(n³)).
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut mate = vec![NONE; n];

    // Greedy start; augmentation only ever grows it.
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(v) = g.neighbors(u).find(|&v| mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }

    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(end) = search.find_augmenting_path(g, &mate, root) {
            let mut v = end;
            while v != NONE {
                let pv = search.parent[v];
                let next = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = next;
            }
        }
    }

    let edges = (0..n)
        .filter(|&u| mate[u] != NONE && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    Matching { edges }
}

struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS over alternating trees from `root`; returns the free endpoint of an
    /// augmenting path, with `parent` describing the path back to `root`.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    // Odd cycle: contract it onto its base.
                    let cur = self.lowest_common_base(mate, v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}
