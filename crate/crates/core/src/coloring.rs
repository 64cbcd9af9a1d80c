//! Color-class partitions and the definitional validator for equitable
//! `(t, k)`-tree-colorings.
//!
//! Classes are indexed `0..t` in this API; the JSON form lists the classes in
//! index order. Empty classes are representable and count as size 0 when
//! equitability is judged, so every `t > n` admits an equitable coloring.

use serde::{Deserialize, Serialize};

use crate::bound::DegreeBound;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexMask};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ColoringJson", try_from = "ColoringJson")]
pub struct Coloring {
    t: usize,
    assignment: Vec<usize>,
}

/// Wire form: `{"t": 3, "classes": [[0, 1], [2, 3], [4]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringJson {
    pub t: usize,
    pub classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// `assignment[v]` is the class of vertex `v`.
    pub fn new(t: usize, assignment: Vec<usize>) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidColoring("t must be at least 1".into()));
        }
        if let Some((v, &c)) = assignment.iter().enumerate().find(|(_, &c)| c >= t) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has class {c}, outside 0..{t}"
            )));
        }
        Ok(Coloring { t, assignment })
    }

    /// Builds a coloring of an order-`n` graph from its classes. Every vertex in
    /// `0..n` must appear exactly once; the class count is `classes.len()`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidColoring(format!("vertex {v} outside 0..{n}")));
                }
                if assignment[v] != usize::MAX {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} appears in more than one class"
                    )));
                }
                assignment[v] = c;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidColoring(format!("vertex {v} is uncolored")));
        }
        Coloring::new(classes.len(), assignment)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of colored vertices.
    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.t];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn class_masks(&self) -> Vec<VertexMask> {
        let mut masks = vec![0; self.t];
        for (v, &c) in self.assignment.iter().enumerate() {
            masks[c] |= bit(v);
        }
        masks
    }

    /// Sizes of classes `0..t` in index order.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.t];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn is_equitable(&self) -> bool {
        is_equitable_sizes(&self.class_sizes())
    }

    /// Same partition with class `c` renamed to `perm[c]`.
    pub fn relabel_classes(&self, perm: &[usize]) -> Result<Self> {
        Coloring::new(self.t, self.assignment.iter().map(|&c| perm[c]).collect())
    }

    /// Same partition transported along the vertex relabeling `v -> perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Result<Self> {
        let mut assignment = vec![0; self.order()];
        for (v, &c) in self.assignment.iter().enumerate() {
            assignment[perm[v]] = c;
        }
        Coloring::new(self.t, assignment)
    }
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson {
            t: c.t,
            classes: c.classes(),
        }
    }
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = Error;

    fn try_from(json: ColoringJson) -> Result<Self> {
        if json.classes.len() > json.t {
            return Err(Error::InvalidColoring(format!(
                "{} classes listed for t = {}",
                json.classes.len(),
                json.t
            )));
        }
        let n = json.classes.iter().map(Vec::len).sum();
        let mut classes = json.classes;
        classes.resize(json.t, Vec::new());
        Coloring::from_classes(n, &classes)
    }
}

/// True iff the largest and smallest entries differ by at most one.
pub fn is_equitable_sizes(sizes: &[usize]) -> bool {
    match (sizes.iter().max(), sizes.iter().min()) {
        (Some(max), Some(min)) => max - min <= 1,
        _ => true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub class: usize,
    pub size: usize,
    pub is_forest: bool,
    pub max_degree: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_cycle: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub high_degree_vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub equitable: bool,
    pub k: DegreeBound,
    pub class_sizes: Vec<usize>,
    pub classes: Vec<ClassVerdict>,
}

impl ValidationReport {
    pub fn first_failing_class(&self) -> Option<&ClassVerdict> {
        self.classes.iter().find(|c| !c.ok)
    }
}

/// Checks that `c` is equitable and every class induces a forest of maximum
/// degree at most `k`. Each failing class reports a cycle if it has one,
/// otherwise its first vertex of excessive degree.
pub fn validate_tree_coloring(g: &Graph, c: &Coloring, k: DegreeBound) -> Result<ValidationReport> {
    if g.order() != c.order() {
        return Err(Error::VertexMismatch {
            coloring: c.order(),
            graph: g.order(),
        });
    }
    let class_sizes = c.class_sizes();
    let equitable = is_equitable_sizes(&class_sizes);
    let classes: Vec<ClassVerdict> = c
        .class_masks()
        .into_iter()
        .enumerate()
        .map(|(i, mask)| class_verdict(g, i, mask, k))
        .collect();
    let valid = equitable && classes.iter().all(|v| v.ok);
    Ok(ValidationReport {
        valid,
        equitable,
        k,
        class_sizes,
        classes,
    })
}

fn class_verdict(g: &Graph, class: usize, mask: VertexMask, k: DegreeBound) -> ClassVerdict {
    let members = || crate::graph::mask_vertices(mask);
    let max_degree = members()
        .map(|v| g.degree_within(v, mask))
        .max()
        .unwrap_or(0);
    let offending_cycle = g.find_cycle_within(mask);
    let is_forest = offending_cycle.is_none();
    let high_degree_vertex = if is_forest && !k.allows(max_degree) {
        members().find(|&v| !k.allows(g.degree_within(v, mask)))
    } else {
        None
    };
    ClassVerdict {
        class,
        size: mask.count_ones() as usize,
        is_forest,
        max_degree,
        ok: is_forest && k.allows(max_degree),
        offending_cycle,
        high_degree_vertex,
    }
}
