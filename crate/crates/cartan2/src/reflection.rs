//! Reflections of rank-2 diagrams and the orbit graph they generate.
//!
//! Reflecting a diagram at vertex `i` keeps the label of vertex `i` and
//! rewrites the other vertex and the edge. With `a` the label at `i`, `b` the
//! label at the other vertex, and `m = -a_{ij}`, exactly one of three cases
//! applies (several may hold at once, in which case they agree):
//!
//! ```text
//!   (c1)  a^m·q0 = 1:              b' = b,          q0' = q0
//!   (c2)  a primitive (m+1)-th:    b' = a·b·q0^m,   q0' = a^2·q0^{-1}
//!   (c3)  a = 1:                   b' = b·q0^m,     q0' = q0^{-1}
//! ```
//!
//! Minimality of `m` forces at least one case, so the listing is exhaustive;
//! the implementation evaluates every applicable branch and asserts that they
//! coincide rather than silently picking one.
//!
//! Closing a diagram under both reflections yields the orbit graph: points are
//! the distinct diagrams reached, edges are labeled by the reflecting vertex,
//! and each point carries its Cartan matrix.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{cartan_entry, CartanMatrix2, Label, NotIFinite, Rank2Diagram};

/// Default bound on the number of orbit points before giving up.
pub const DEFAULT_ORBIT_CAP: usize = 10_000;

/// Why an orbit closure stopped without producing a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OrbitError {
    /// Some reached diagram has an undefined Cartan entry.
    #[error("orbit reached a diagram that is not i-finite")]
    NotAllReflections,
    /// More than `cap` points were produced; only possible with free
    /// parameters, and reported as a verdict rather than a failure.
    #[error("orbit exceeded the cap of {cap} points")]
    Diverged { cap: usize },
}

/// Reflection of `d` at vertex `i`.
pub fn reflect(d: &Rank2Diagram, i: Label) -> Result<Rank2Diagram, NotIFinite> {
    let p = d.group().p();
    let a = d.vertex(i).clone();
    let b = d.vertex(i.other()).clone();
    let q0 = d.q0().clone();
    let m = -cartan_entry(&a, &q0, p)?;

    let c1 = (&a.pow(m) * &q0).is_one();
    let c2 = a.is_primitive_root(m as u64 + 1);
    let c3 = a.is_one();

    let mut results: Vec<(Rank2Diagram, &str)> = Vec::new();
    if c1 {
        results.push((rebuild(d, i, b.clone(), q0.clone()), "c1"));
    }
    if c2 {
        let b2 = &(&a * &b) * &q0.pow(m);
        let q02 = &a.pow(2) * &q0.inv();
        results.push((rebuild(d, i, b2, q02), "c2"));
    }
    if c3 {
        let b3 = &b * &q0.pow(m);
        results.push((rebuild(d, i, b3, q0.inv()), "c3"));
    }

    let (first, _) = results
        .first()
        .expect("case exhaustion failure: minimal Cartan entry admits no reflection case");
    for (other, case) in &results[1..] {
        assert_eq!(
            other, first,
            "overlapping reflection cases disagree at {d} (case {case})"
        );
    }
    Ok(first.clone())
}

fn rebuild(
    d: &Rank2Diagram,
    i: Label,
    other_label: crate::units::Unit,
    q0: crate::units::Unit,
) -> Rank2Diagram {
    let (q11, q22) = match i {
        Label::One => (d.q11().clone(), other_label),
        Label::Two => (other_label, d.q22().clone()),
    };
    Rank2Diagram::new(q11, q22, q0).expect("labels share the diagram's group")
}

/// The closure of a diagram under both reflections.
///
/// Points are deduplicated by exact label equality; the base point has index
/// 0 and points are numbered in breadth-first discovery order.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    points: Vec<Rank2Diagram>,
    cartan: Vec<CartanMatrix2>,
    refl: [Vec<usize>; 2],
}

/// Breadth-first closure of `d` under `reflect(·, 1)` and `reflect(·, 2)`.
pub fn orbit(d: &Rank2Diagram, cap: usize) -> Result<OrbitGraph, OrbitError> {
    assert!(cap >= 1);
    let mut points = vec![d.clone()];
    let mut cartan = vec![d
        .cartan_matrix()
        .map_err(|_| OrbitError::NotAllReflections)?];
    let mut index: HashMap<Rank2Diagram, usize> = HashMap::new();
    index.insert(d.clone(), 0);
    let mut refl = [Vec::new(), Vec::new()];

    let mut next = 0;
    while next < points.len() {
        let x = next;
        next += 1;
        for label in Label::BOTH {
            let image = reflect(&points[x], label).map_err(|_| OrbitError::NotAllReflections)?;
            let idx = match index.get(&image) {
                Some(&i) => i,
                None => {
                    if points.len() >= cap {
                        return Err(OrbitError::Diverged { cap });
                    }
                    let i = points.len();
                    cartan.push(
                        image
                            .cartan_matrix()
                            .map_err(|_| OrbitError::NotAllReflections)?,
                    );
                    points.push(image.clone());
                    index.insert(image, i);
                    i
                }
            };
            let r = &mut refl[label.index()];
            if r.len() <= x {
                r.resize(points.len(), usize::MAX);
            }
            r[x] = idx;
        }
    }
    for r in &mut refl {
        r.truncate(points.len());
    }

    let g = OrbitGraph {
        points,
        cartan,
        refl,
    };
    g.assert_semi_cartan();
    Ok(g)
}

impl OrbitGraph {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> &[Rank2Diagram] {
        &self.points
    }

    pub fn point(&self, idx: usize) -> &Rank2Diagram {
        &self.points[idx]
    }

    pub fn base(&self) -> usize {
        0
    }

    pub fn cartan(&self, idx: usize) -> &CartanMatrix2 {
        &self.cartan[idx]
    }

    /// Image of point `idx` under the reflection `r_label`.
    pub fn reflect_point(&self, idx: usize, label: Label) -> usize {
        self.refl[label.index()][idx]
    }

    /// Undirected edges `(x, label, y)` with `x <= y`, including fixed points
    /// as self-loops, in deterministic order.
    pub fn edges(&self) -> Vec<(usize, Label, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for label in Label::BOTH {
                let y = self.reflect_point(x, label);
                if x <= y {
                    out.push((x, label, y));
                }
            }
        }
        out
    }

    /// Semi-Cartan graph conditions: reflections are involutions and Cartan
    /// rows are preserved along their own reflection.
    fn assert_semi_cartan(&self) {
        for x in 0..self.len() {
            for label in Label::BOTH {
                let y = self.reflect_point(x, label);
                assert_eq!(
                    self.reflect_point(y, label),
                    x,
                    "reflection is not an involution"
                );
                assert_eq!(
                    self.cartan[x].entry(label),
                    self.cartan[y].entry(label),
                    "Cartan row not preserved under its reflection"
                );
            }
        }
    }

    /// Graphviz rendering of the exchange graph. Self-loops are omitted and
    /// parallel edges are merged onto one edge with both labels.
    pub fn to_dot(&self) -> String {
        let g = self.points[0].group();
        let mut out = String::new();
        out.push_str("graph exchange {\n");
        out.push_str(&format!(
            "  label=\"p={}, N={}, free rank {}\";\n",
            g.p(),
            g.torsion(),
            g.free_rank()
        ));
        for (i, d) in self.points.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{d}\"];\n"));
        }
        let mut merged: Vec<((usize, usize), Vec<String>)> = Vec::new();
        for (x, label, y) in self.edges() {
            if x == y {
                continue;
            }
            match merged.iter_mut().find(|(k, _)| *k == (x, y)) {
                Some((_, labels)) => labels.push(label.to_string()),
                None => merged.push(((x, y), vec![label.to_string()])),
            }
        }
        for ((x, y), labels) in merged {
            out.push_str(&format!(
                "  n{x} -- n{y} [label=\"{}\"];\n",
                labels.join(",")
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// Serialized orbit: full diagrams plus undirected labeled edges.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitJson {
    pub points: Vec<Rank2Diagram>,
    pub edges: Vec<(usize, u8, usize)>,
}

impl From<&OrbitGraph> for OrbitJson {
    fn from(g: &OrbitGraph) -> Self {
        OrbitJson {
            points: g.points.clone(),
            edges: g
                .edges()
                .into_iter()
                .map(|(x, l, y)| (x, if l == Label::One { 1 } else { 2 }, y))
                .collect(),
        }
    }
}
