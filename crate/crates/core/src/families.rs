//! Constructive colorings for structured families and an exact solver for
//! complete multipartite graphs.
//!
//! Constructions are built from their recipe and then run through the
//! validator; a recipe that yields an invalid coloring is reported as a
//! [`Finding`] instead of being returned.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bound::DegreeBound;
use crate::coloring::{validate_tree_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{complete_multipartite, part_labels, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Valid,
    /// The recipe's classes do not cover every vertex exactly once.
    NotPartition,
    NotEquitable,
    /// Some class is not a forest of maximum degree at most `k`.
    InvalidClass,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Valid => "valid",
            Verdict::NotPartition => "classes do not partition the vertex set",
            Verdict::NotEquitable => "classes are not equitable",
            Verdict::InvalidClass => "a class is not a forest within the degree bound",
        })
    }
}

/// Outcome of one construction attempt; serialized one per line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub q: usize,
    pub k: DegreeBound,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_class: Option<Vec<usize>>,
}

impl Finding {
    fn new(family: &str, params: &[(&str, usize)], q: usize, k: DegreeBound) -> Self {
        Finding {
            family: family.to_string(),
            params: params.iter().map(|&(n, v)| (n.to_string(), v)).collect(),
            q,
            k,
            verdict: Verdict::Valid,
            offending_class: None,
        }
    }

    /// The finding describing `result`, whichever way it went.
    pub fn of(result: &Result<Coloring>, template: Finding) -> Option<Finding> {
        match result {
            Ok(_) => Some(template),
            Err(Error::ConstructionNotApplicable(f)) => Some((**f).clone()),
            Err(_) => None,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("finding serializes")
    }
}

fn not_applicable(mut finding: Finding, verdict: Verdict, class: Option<Vec<usize>>) -> Error {
    finding.verdict = verdict;
    finding.offending_class = class;
    Error::ConstructionNotApplicable(Box::new(finding))
}

fn build_then_validate(
    host: &crate::graph::Graph,
    classes: &[Vec<usize>],
    k: DegreeBound,
    finding: Finding,
) -> Result<Coloring> {
    let coloring = match Coloring::from_classes(host.order(), classes) {
        Ok(c) => c,
        Err(_) => return Err(not_applicable(finding, Verdict::NotPartition, None)),
    };
    let report = validate_tree_coloring(host, &coloring, k)?;
    if report.valid {
        return Ok(coloring);
    }
    if !report.equitable {
        return Err(not_applicable(finding, Verdict::NotEquitable, None));
    }
    let bad = report
        .first_failing_class()
        .map(|c| classes[c.class].clone());
    Err(not_applicable(finding, Verdict::InvalidClass, bad))
}

/// Template finding for [`construct_bipartite_coloring`].
pub fn bipartite_finding(n: usize, ell: usize, q: usize, k: DegreeBound) -> Finding {
    Finding::new("bipartite", &[("n", n), ("ell", ell)], q, k)
}

/// Equitable `(q, k)`-tree-coloring of `K_{n,n+ell}` following the bipartite
/// upper-bound recipe.
///
/// Vertex 0 (the first of the `n`-side) and vertex `n` (the first of the
/// `n+ell`-side) form a mixed seed class when a class of size 2 is allowed by
/// the equitable sizes `⌊N/q⌋, ⌈N/q⌉` (`N = 2n + ell`). The remaining vertices
/// of each side fill the other classes, one side at a time, whenever the
/// remaining class sizes can be split so that every class stays on one side;
/// otherwise the remaining vertices are cut into consecutive runs, which may
/// produce a second mixed class. The validator arbitrates the result.
pub fn construct_bipartite_coloring(
    n: usize,
    ell: usize,
    q: usize,
    k: DegreeBound,
) -> Result<Coloring> {
    if ell < 1 || ell > n {
        return Err(Error::InvalidParameters {
            family: "bipartite",
            reason: format!("need 1 <= ell <= n, got n = {n}, ell = {ell}"),
        });
    }
    let total = 2 * n + ell;
    if q < 1 || q > total {
        return Err(Error::InvalidParameters {
            family: "bipartite",
            reason: format!("need 1 <= q <= {total}, got {q}"),
        });
    }
    let host = Family::CompleteBipartite(n, n + ell).build()?;
    let finding = bipartite_finding(n, ell, q, k);

    let small = total / q;
    let mut bigs = total % q;
    let mut smalls = q - bigs;

    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(q);
    let seed_fits = (small + 1 == 2 && bigs > 0) || (small == 2 && smalls > 0);
    let (rest_x, rest_y): (Vec<usize>, Vec<usize>) = if seed_fits {
        classes.push(vec![0, n]);
        if small == 2 {
            smalls -= 1;
        } else {
            bigs -= 1;
        }
        ((1..n).collect(), (n + 1..total).collect())
    } else {
        ((0..n).collect(), (n..total).collect())
    };

    let mut sizes = Vec::with_capacity(bigs + smalls);
    match pure_split(rest_x.len(), small, bigs, smalls) {
        Some((x_bigs, x_smalls)) => {
            // Classes on the n-side first, then the (n+ell)-side.
            sizes.extend(std::iter::repeat_n(small + 1, x_bigs));
            sizes.extend(std::iter::repeat_n(small, x_smalls));
            sizes.extend(std::iter::repeat_n(small + 1, bigs - x_bigs));
            sizes.extend(std::iter::repeat_n(small, smalls - x_smalls));
        }
        None => {
            sizes.extend(std::iter::repeat_n(small + 1, bigs));
            sizes.extend(std::iter::repeat_n(small, smalls));
        }
    }
    let mut rest = rest_x.into_iter().chain(rest_y);
    for size in sizes {
        classes.push(rest.by_ref().take(size).collect());
    }

    build_then_validate(&host, &classes, k, finding)
}

/// Numbers of big and small classes whose sizes add up to `target` exactly.
fn pure_split(target: usize, small: usize, bigs: usize, smalls: usize) -> Option<(usize, usize)> {
    (0..=bigs).find_map(|b| {
        let left = target.checked_sub(b * (small + 1))?;
        if small == 0 {
            return (left == 0).then_some((b, 0));
        }
        (left % small == 0 && left / small <= smalls).then_some((b, left / small))
    })
}

/// Template finding for [`construct_wheel_coloring`].
pub fn wheel_finding(n: usize, q: usize, k: u32) -> Finding {
    Finding::new("wheel", &[("n", n)], q, DegreeBound::Finite(k))
}

/// Coloring of the wheel `W_n` with classes `V_i = {v_{jq+i} : 0 <= j <= k}`,
/// `1 <= i <= q`, where `v_1, ..., v_n` are vertices `0..n` (so `v_1` is the
/// centre). Indices past `n` are dropped.
pub fn construct_wheel_coloring(n: usize, q: usize, k: u32) -> Result<Coloring> {
    let invalid = |reason: String| Error::InvalidParameters {
        family: "wheel",
        reason,
    };
    if n < 4 {
        return Err(invalid(format!("order {n} < 4")));
    }
    if k == 0 {
        return Err(invalid("k must be at least 1".into()));
    }
    let lo = n.div_ceil(k as usize);
    let hi = n.div_ceil(2);
    if q < lo || q > hi {
        return Err(invalid(format!("need {lo} <= q <= {hi}, got {q}")));
    }
    let host = Family::Wheel(n).build()?;
    let finding = wheel_finding(n, q, k);
    let classes: Vec<Vec<usize>> = (1..=q)
        .map(|i| {
            (0..=k as usize)
                .map(|j| j * q + i)
                .filter(|&idx| idx <= n)
                .map(|idx| idx - 1)
                .collect()
        })
        .collect();
    build_then_validate(&host, &classes, DegreeBound::Finite(k), finding)
}

/// Per-part vertex counts of one color class in a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassType(pub Vec<usize>);

impl ClassType {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Whether any realization induces a forest of maximum degree at most `k`.
    ///
    /// A class with counts `p` induces the complete multipartite graph on those
    /// counts. That is a forest exactly when it is edgeless (one non-zero part)
    /// or a star `K_{1,p}` (one part with `p` vertices and a single vertex
    /// elsewhere), whose maximum degree is `p`.
    pub fn is_admissible(&self, k: DegreeBound) -> bool {
        let nonzero: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        match nonzero.as_slice() {
            [] | [_] => true,
            [a, b] if *a == 1 || *b == 1 => k.allows((*a).max(*b)),
            _ => false,
        }
    }
}

/// Every class type of the given size that fits the parts and is admissible for `k`,
/// in decreasing lexicographic order.
pub fn admissible_class_types(parts: &[usize], size: usize, k: DegreeBound) -> Vec<ClassType> {
    fn rec(parts: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let cap = parts[cur.len()].min(left);
        for p in (0..=cap).rev() {
            cur.push(p);
            rec(parts, left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, size, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(ClassType)
        .filter(|t| t.is_admissible(k))
        .collect()
}

/// Exact feasibility of an equitable `(t, k)`-tree-coloring of the complete
/// multipartite graph with the given parts, decided over class types.
///
/// Searches multiplicities of admissible types of the two equitable sizes,
/// with `N mod t` classes of the larger size, whose per-part totals equal the
/// part sizes. The witness fills each class with the lowest unused vertices of
/// each part.
pub fn solve_complete_multipartite(parts: &[usize], t: usize, k: DegreeBound) -> Option<Coloring> {
    let total: usize = parts.iter().sum();
    if t == 0 {
        return None;
    }
    let small = total / t;
    let bigs = total % t;
    let mut candidates: Vec<(ClassType, usize)> = Vec::new();
    if bigs > 0 {
        candidates.extend(
            admissible_class_types(parts, small + 1, k)
                .into_iter()
                .map(|c| (c, 0)),
        );
    }
    if t > bigs {
        candidates.extend(
            admissible_class_types(parts, small, k)
                .into_iter()
                .map(|c| (c, 1)),
        );
    }

    let mut group_left = [bigs, t - bigs];
    let mut remaining = parts.to_vec();
    let mut counts = vec![0; candidates.len()];
    if !choose_multiplicities(&candidates, 0, &mut group_left, &mut remaining, &mut counts) {
        return None;
    }

    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, &p| {
            let start = *acc;
            *acc += p;
            Some(start)
        })
        .collect();
    let mut next = offsets.clone();
    let mut classes = Vec::with_capacity(t);
    for ((ty, _), &count) in candidates.iter().zip(&counts) {
        for _ in 0..count {
            let mut class = Vec::with_capacity(ty.size());
            for (part, &p) in ty.0.iter().enumerate() {
                class.extend(next[part]..next[part] + p);
                next[part] += p;
            }
            classes.push(class);
        }
    }
    Some(Coloring::from_classes(total, &classes).expect("type solution realizes a partition"))
}

fn choose_multiplicities(
    candidates: &[(ClassType, usize)],
    idx: usize,
    group_left: &mut [usize; 2],
    remaining: &mut [usize],
    counts: &mut [usize],
) -> bool {
    if idx == candidates.len() {
        return group_left.iter().all(|&g| g == 0) && remaining.iter().all(|&r| r == 0);
    }
    let (ty, group) = &candidates[idx];
    let max =
        ty.0.iter()
            .zip(remaining.iter())
            .filter(|(&p, _)| p > 0)
            .map(|(&p, &r)| r / p)
            .fold(group_left[*group], usize::min);
    for m in (0..=max).rev() {
        for (r, &p) in remaining.iter_mut().zip(&ty.0) {
            *r -= m * p;
        }
        group_left[*group] -= m;
        counts[idx] = m;
        if choose_multiplicities(candidates, idx + 1, group_left, remaining, counts) {
            return true;
        }
        group_left[*group] += m;
        for (r, &p) in remaining.iter_mut().zip(&ty.0) {
            *r += m * p;
        }
    }
    counts[idx] = 0;
    false
}

/// `1 + max{t : infeasible}` over `t = 1..=N` using the structural solver.
pub fn strong_arboricity_multipartite(parts: &[usize], k: DegreeBound) -> usize {
    let total: usize = parts.iter().sum();
    (1..=total)
        .rev()
        .find(|&t| solve_complete_multipartite(parts, t, k).is_none())
        .map_or(1, |t| t + 1)
}

/// The 18 class types of an equitable coloring of `K_{n,n,n}` with parts
/// `X, Y, Z`. A primed type has one vertex outside its home part: `'` in the
/// next part in `X, Y, Z` order skipping the home part, `''` in the other one.
/// Types with suffix 1 have `a + 1` vertices, suffix 2 have `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TripartiteClassKind {
    X1,
    X1p,
    X1pp,
    X2,
    X2p,
    X2pp,
    Y1,
    Y1p,
    Y1pp,
    Y2,
    Y2p,
    Y2pp,
    Z1,
    Z1p,
    Z1pp,
    Z2,
    Z2p,
    Z2pp,
}

impl TripartiteClassKind {
    pub const ALL: [TripartiteClassKind; 18] = {
        use TripartiteClassKind::*;
        [
            X1, X1p, X1pp, X2, X2p, X2pp, Y1, Y1p, Y1pp, Y2, Y2p, Y2pp, Z1, Z1p, Z1pp, Z2, Z2p,
            Z2pp,
        ]
    };

    pub fn name(self) -> &'static str {
        const NAMES: [&str; 18] = [
            "X1", "X1'", "X1''", "X2", "X2'", "X2''", "Y1", "Y1'", "Y1''", "Y2", "Y2'", "Y2''",
            "Z1", "Z1'", "Z1''", "Z2", "Z2'", "Z2''",
        ];
        NAMES[self as usize]
    }

    /// Part counts `(|V∩X|, |V∩Y|, |V∩Z|)` of this type for the given `a`;
    /// `None` when a count would be negative.
    pub fn counts(self, a: usize) -> Option<[usize; 3]> {
        let idx = self as usize;
        let home = idx / 6;
        let big = idx % 6 < 3;
        let variant = idx % 3;
        let home_count = match (big, variant) {
            (true, 0) => a + 1,
            (true, _) => a,
            (false, 0) => a,
            (false, _) => a.checked_sub(1)?,
        };
        let mut counts = [0; 3];
        counts[home] = home_count;
        if variant > 0 {
            let others: Vec<usize> = (0..3).filter(|&p| p != home).collect();
            counts[others[variant - 1]] = 1;
        }
        Some(counts)
    }
}

/// Classification order: single-part types before mixed ones, so a class that
/// matches both (possible when `a <= 1`) is recorded under its single-part name.
const CLASSIFY_ORDER: [TripartiteClassKind; 18] = {
    use TripartiteClassKind::*;
    [
        X1, Y1, Z1, X2, Y2, Z2, X1p, X1pp, Y1p, Y1pp, Z1p, Z1pp, X2p, X2pp, Y2p, Y2pp, Z2p, Z2pp,
    ]
};

pub fn classify_tripartite_class(counts: [usize; 3], a: usize) -> Option<TripartiteClassKind> {
    CLASSIFY_ORDER
        .iter()
        .copied()
        .find(|kind| kind.counts(a) == Some(counts))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripartiteProfile {
    /// Part size.
    pub n: usize,
    pub q: usize,
    /// `⌊3n/q⌋`.
    pub a: usize,
    /// `3n - a q`.
    pub r: usize,
    /// Indexed by `TripartiteClassKind as usize`.
    pub counts: [usize; 18],
}

impl TripartiteProfile {
    pub fn zero(n: usize, q: usize) -> Self {
        let a = (3 * n).checked_div(q).unwrap_or(0);
        TripartiteProfile {
            n,
            q,
            a,
            r: 3 * n - a * q,
            counts: [0; 18],
        }
    }

    pub fn get(&self, kind: TripartiteClassKind) -> usize {
        self.counts[kind as usize]
    }

    pub fn set(&mut self, kind: TripartiteClassKind, value: usize) {
        self.counts[kind as usize] = value;
    }

    /// Number of classes whose type has `a + 1` vertices.
    pub fn big_classes(&self) -> usize {
        TripartiteClassKind::ALL
            .iter()
            .filter(|k| (**k as usize) % 6 < 3)
            .map(|&k| self.get(k))
            .sum()
    }
}

/// Counts the class types of a coloring of `K_{n,n,n}` whose parts are
/// `X = 0..n`, `Y = n..2n`, `Z = 2n..3n`.
pub fn tripartite_profile(c: &Coloring, n: usize) -> Result<TripartiteProfile> {
    if c.order() != 3 * n {
        return Err(Error::VertexMismatch {
            coloring: c.order(),
            graph: 3 * n,
        });
    }
    let mut profile = TripartiteProfile::zero(n, c.t());
    let labels = part_labels(&[n, n, n]);
    for (i, class) in c.classes().iter().enumerate() {
        let mut counts = [0; 3];
        for &v in class {
            counts[labels[v]] += 1;
        }
        let kind = classify_tripartite_class(counts, profile.a)
            .ok_or(Error::UnclassifiableClass { class: i, counts })?;
        profile.counts[kind as usize] += 1;
    }
    Ok(profile)
}

/// The three part-count equalities over the 18 class types, one per part.
pub fn check_tripartite_equalities(p: &TripartiteProfile) -> bool {
    use TripartiteClassKind::*;
    let a = p.a as i64;
    let n = p.n as i64;
    let c = |k: TripartiteClassKind| p.get(k) as i64;
    let eq1 = (a + 1) * c(X1)
        + a * c(X2)
        + a * c(X1p)
        + a * c(X1pp)
        + (a - 1) * c(X2p)
        + (a - 1) * c(X2pp)
        + c(Y1p)
        + c(Y2p)
        + c(Z1p)
        + c(Z2p);
    let eq2 = (a + 1) * c(Y1)
        + a * c(Y2)
        + a * c(Y1p)
        + a * c(Y1pp)
        + (a - 1) * c(Y2p)
        + (a - 1) * c(Y2pp)
        + c(X1p)
        + c(X2p)
        + c(Z1pp)
        + c(Z2pp);
    let eq3 = (a + 1) * c(Z1)
        + a * c(Z2)
        + a * c(Z1p)
        + a * c(Z1pp)
        + (a - 1) * c(Z2p)
        + (a - 1) * c(Z2pp)
        + c(X1pp)
        + c(X2pp)
        + c(Y1pp)
        + c(Y2pp);
    eq1 == n && eq2 == n && eq3 == n
}

/// Host graph for [`tripartite_profile`].
pub fn tripartite_host(n: usize) -> Result<crate::graph::Graph> {
    complete_multipartite(&[n, n, n])
}
