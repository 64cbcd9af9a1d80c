use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_labeled_graphs`]; the edge mask of
/// an order-11 graph (55 pairs) still fits a `u64` counter.
pub const ENUMERATION_MAX_ORDER: usize = 11;

/// Every labeled simple graph on `n` vertices, exactly once.
///
/// Graph number `m` has pair `(i, j)` (with `i < j`) as an edge iff bit `p` of
/// `m` is set, where `p` is the position of `(i, j)` in the lexicographic list
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`. Masks are visited in increasing order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::EnumerationCap {
            order: n,
            cap: ENUMERATION_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs {
        n,
        pairs,
        next: 0,
        end,
    })
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Total number of graphs, `2^(n(n-1)/2)`.
    pub fn total(&self) -> u64 {
        self.end
    }

    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let mut g = Graph::new(self.n).expect("order within cap");
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> p & 1 == 1 {
                g.add_edge(i, j).expect("pair in range");
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph_for_mask(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.end - self.next).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}
