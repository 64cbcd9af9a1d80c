//! Closed-form bounds and matching-based characterizations of the strong
//! equitable vertex arboricity, each checkable against the oracle.

use serde::Serialize;

use crate::bound::DegreeBound;
use crate::error::{Error, Result};
use crate::graph::{contains_p4_subgraph, encode_graph6, maximum_matching, Graph};
use crate::oracle;

/// `n = 3m + 2r`, `m + r = target`: how `n` vertices split into `target`
/// classes of sizes 3 and 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ThresholdParams {
    pub m: usize,
    pub r: usize,
    pub target: usize,
}

pub fn threshold_params(n: usize, target: usize) -> Result<ThresholdParams> {
    let m = n as i64 - 2 * target as i64;
    let r = target as i64 - m;
    if m < 0 || r < 0 {
        return Err(Error::NoThresholdSolution { n, target });
    }
    Ok(ThresholdParams {
        m: m as usize,
        r: r as usize,
        target,
    })
}

/// `va_k^≡(g) = 1` exactly when `g` is a forest whose maximum degree is within `k`.
pub fn predicate_va_equals_1(g: &Graph, k: DegreeBound) -> bool {
    g.is_forest() && k.allows(g.max_degree())
}

/// Characterization of `va^≡(g) = ⌈n/2⌉`, read off the complement.
pub fn predicate_va_equals_half(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOutOfRange {
            n,
            what: "the ceil(n/2) characterization",
        });
    }
    Ok(match n {
        2 => true,
        _ if n % 2 == 1 => g.is_complete(),
        4 => !contains_p4_subgraph(&g.complement()),
        _ => {
            let m = threshold_params(n, n / 2 - 1)?.m;
            maximum_matching(&g.complement()).len() < m
        }
    })
}

/// Characterization of `va^≡(g) = ⌈n/2⌉ - 1`, defined for `n = 9` and `n >= 11`.
pub fn predicate_va_equals_half_minus_1(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 9 || n == 10 {
        return Err(Error::OrderOutOfRange {
            n,
            what: "the ceil(n/2)-1 characterization",
        });
    }
    Ok(predicate_va_equals_half_minus_1_unchecked(g))
}

/// The same matching window applied at any `n >= 4`, with `m = n - 2(⌈n/2⌉ - 2)`
/// taken even where no nonnegative `r` exists. Used for report-only runs
/// outside the characterized range.
pub fn predicate_va_equals_half_minus_1_unchecked(g: &Graph) -> bool {
    let n = g.order();
    let target = n.div_ceil(2).saturating_sub(2);
    let m = n.saturating_sub(2 * target);
    let lo = if n.is_multiple_of(2) { 2 } else { 1 };
    let size = maximum_matching(&g.complement()).len();
    lo <= size && size < m
}

/// `(1 + ⌈(n-k-1)/(k+2)⌉, ⌈n/k⌉)`, bracketing `va_k^≡(K_{1,n-1})`.
pub fn star_bounds(n: usize, k: u32) -> Result<(usize, usize)> {
    if n < 2 || k < 1 {
        return Err(Error::InvalidParameters {
            family: "star",
            reason: format!("need n >= 2 and k >= 1, got n = {n}, k = {k}"),
        });
    }
    let k = k as i64;
    let num = n as i64 - k - 1;
    let den = k + 2;
    let ceil = num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0);
    let lower = 1 + ceil;
    let upper = (n as i64 + k - 1) / k;
    Ok((lower as usize, upper as usize))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    /// Upper bound on `va_2^≡(K_{n,n+ell})`.
    Bipartite { n: usize, ell: usize },
    /// Exact `va_2^≡(K_{n,n+1})`.
    BipartitePlusOne { n: usize },
    /// Upper bound on `va_k^≡(W_n)`.
    Wheel { n: usize, k: usize },
}

impl BoundFamily {
    /// Looks a family up by name; `params` are positional.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::InvalidParameters {
                    family: "closed_form_bounds",
                    reason: format!("{name} takes {want} parameters, got {}", params.len()),
                })
            }
        };
        match name {
            "bipartite" => arity(2).map(|_| BoundFamily::Bipartite {
                n: params[0],
                ell: params[1],
            }),
            "bipartite_plus_one" => {
                arity(1).map(|_| BoundFamily::BipartitePlusOne { n: params[0] })
            }
            "wheel" => arity(2).map(|_| BoundFamily::Wheel {
                n: params[0],
                k: params[1],
            }),
            _ => Err(Error::Unknown {
                kind: "bound family",
                value: name.to_string(),
            }),
        }
    }
}

pub fn closed_form_bounds(family: BoundFamily) -> Result<usize> {
    match family {
        BoundFamily::Bipartite { n, ell } => Ok(2 * ((n + ell + 1) / 3)),
        BoundFamily::BipartitePlusOne { n } => Ok(2 * n.div_ceil(3)),
        BoundFamily::Wheel { n, k } if k >= 1 => Ok(n.div_ceil(k)),
        BoundFamily::Wheel { .. } => Err(Error::InvalidParameters {
            family: "wheel",
            reason: "k must be at least 1".into(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateCheck {
    pub predicate: &'static str,
    /// The value the predicate characterizes.
    pub value: usize,
    pub verdict: bool,
    pub oracle_agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub graph6: String,
    pub order: usize,
    pub k: DegreeBound,
    pub strong_arboricity: usize,
    pub checks: Vec<PredicateCheck>,
    pub counterexamples: Vec<PredicateCheck>,
}

impl TheoremReport {
    pub fn all_agree(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs every predicate applicable at this order and compares each with the oracle.
pub fn cross_validate(g: &Graph, k: DegreeBound) -> TheoremReport {
    let n = g.order();
    let strong = oracle::strong_equitable_vertex_arboricity(g, k);
    let mut checks = Vec::new();
    let mut push = |predicate, value: usize, verdict: bool| {
        checks.push(PredicateCheck {
            predicate,
            value,
            verdict,
            oracle_agrees: verdict == (strong == value),
        });
    };
    push("va_equals_1", 1, predicate_va_equals_1(g, k));
    if let Ok(v) = predicate_va_equals_half(g) {
        push("va_equals_half", n.div_ceil(2), v);
    }
    if let Ok(v) = predicate_va_equals_half_minus_1(g) {
        push("va_equals_half_minus_1", n.div_ceil(2) - 1, v);
    }
    let counterexamples = checks
        .iter()
        .filter(|c| !c.oracle_agrees)
        .cloned()
        .collect();
    TheoremReport {
        graph6: encode_graph6(g),
        order: n,
        k,
        strong_arboricity: strong,
        checks,
        counterexamples,
    }
}
