//! Rank-2 Dynkin diagrams of diagonal braidings and their Cartan matrices.
//!
//! A two-dimensional diagonal braiding is captured by three scalars: the
//! vertex labels `q11`, `q22` and the edge label `q0 = q12·q21`. The
//! generalized Cartan matrix is read off from quantum-integer vanishing:
//! `-a_{ij}` is the least `m ≥ 0` with
//!
//! ```text
//!     (m+1)_{q_ii} · (q_ii^m·q0 - 1) = 0.
//! ```
//!
//! When no such `m` exists the braiding is not `i`-finite and the reflection
//! at `i` is undefined; this is the [`NotIFinite`] error.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::units::{Order, Unit, UnitError, UnitGroup, UnitRepr};

/// Vertex label of the rank-2 diagram, and edge label of exchange graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    One,
    Two,
}

impl Label {
    pub const BOTH: [Label; 2] = [Label::One, Label::Two];

    pub fn other(self) -> Label {
        match self {
            Label::One => Label::Two,
            Label::Two => Label::One,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Label::One => 0,
            Label::Two => 1,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::One => write!(f, "1"),
            Label::Two => write!(f, "2"),
        }
    }
}

/// The braiding is not `i`-finite: no Cartan entry exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("braiding is not i-finite: Cartan entry undefined")]
pub struct NotIFinite;

/// A generalized Cartan matrix with fixed diagonal `(2, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CartanMatrix2 {
    a12: i64,
    a21: i64,
}

impl CartanMatrix2 {
    pub(crate) fn new(a12: i64, a21: i64) -> Self {
        assert!(
            a12 <= 0 && a21 <= 0,
            "off-diagonal entries must be non-positive"
        );
        // Zero symmetry: a12 = 0 iff q0 = 1 iff a21 = 0, so a mixed zero is a bug.
        assert_eq!(
            a12 == 0,
            a21 == 0,
            "generalized Cartan matrix zero-symmetry violated"
        );
        CartanMatrix2 { a12, a21 }
    }

    pub fn a12(&self) -> i64 {
        self.a12
    }

    pub fn a21(&self) -> i64 {
        self.a21
    }

    /// Off-diagonal entry in row `i`.
    pub fn entry(&self, i: Label) -> i64 {
        match i {
            Label::One => self.a12,
            Label::Two => self.a21,
        }
    }
}

/// The Cartan entry `a_{ij} = -m` for a vertex labeled `qii` over an edge
/// labeled `q0`, or [`NotIFinite`] when the defining product never vanishes.
///
/// `m` is the minimum of the least power neutralizing `q0` against `qii` and
/// the least `m` with `(m+1)_{qii} = 0` (that is `ord(qii) - 1`, or `p - 1`
/// when `qii = 1`).
pub fn cartan_entry(qii: &Unit, q0: &Unit, p: u64) -> Result<i64, NotIFinite> {
    let m1 = qii.min_neutralizing_power(q0);
    let m2 = match qii.order() {
        Order::Finite(1) => Some(p - 1),
        Order::Finite(d) => Some(d - 1),
        Order::Infinite => None,
    };
    let m = match (m1, m2) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Err(NotIFinite),
    };
    Ok(-(m as i64))
}

/// An ordered rank-2 Dynkin diagram `(q11, q22, q0)`.
///
/// Vertices are ordered: a diagram and its vertex swap `τ` are distinct values
/// unless `q11 = q22`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank2Diagram {
    q11: Unit,
    q22: Unit,
    q0: Unit,
}

impl Rank2Diagram {
    pub fn new(q11: Unit, q22: Unit, q0: Unit) -> Result<Self, UnitError> {
        if q11.group() != q22.group() || q11.group() != q0.group() {
            return Err(UnitError::MismatchedGroup);
        }
        Ok(Rank2Diagram { q11, q22, q0 })
    }

    pub fn group(&self) -> &UnitGroup {
        self.q11.group()
    }

    pub fn q11(&self) -> &Unit {
        &self.q11
    }

    pub fn q22(&self) -> &Unit {
        &self.q22
    }

    pub fn q0(&self) -> &Unit {
        &self.q0
    }

    /// Label of vertex `i`.
    pub fn vertex(&self, i: Label) -> &Unit {
        match i {
            Label::One => &self.q11,
            Label::Two => &self.q22,
        }
    }

    /// The vertex swap: exchanges `q11` and `q22`, keeping the edge label.
    pub fn tau(&self) -> Rank2Diagram {
        Rank2Diagram {
            q11: self.q22.clone(),
            q22: self.q11.clone(),
            q0: self.q0.clone(),
        }
    }

    /// The lexicographically smaller of `self` and `tau(self)`.
    pub fn tau_canonical(&self) -> Rank2Diagram {
        let t = self.tau();
        if *self <= t {
            self.clone()
        } else {
            t
        }
    }

    /// Whether every label has finite multiplicative order.
    pub fn is_torsion(&self) -> bool {
        self.q11.order().is_finite() && self.q22.order().is_finite() && self.q0.order().is_finite()
    }

    pub fn cartan_matrix(&self) -> Result<CartanMatrix2, NotIFinite> {
        let p = self.group().p();
        let a12 = cartan_entry(&self.q11, &self.q0, p)?;
        let a21 = cartan_entry(&self.q22, &self.q0, p)?;
        Ok(CartanMatrix2::new(a12, a21))
    }
}

impl fmt::Display for Rank2Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.q11, self.q0, self.q22)
    }
}

/// Wire format of a diagram: the group flattened next to the three units.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub p: u64,
    pub torsion: u64,
    pub free_rank: usize,
    pub q11: UnitRepr,
    pub q22: UnitRepr,
    pub q0: UnitRepr,
}

impl From<&Rank2Diagram> for DiagramJson {
    fn from(d: &Rank2Diagram) -> Self {
        let g = d.group();
        DiagramJson {
            p: g.p(),
            torsion: g.torsion(),
            free_rank: g.free_rank(),
            q11: d.q11.repr(),
            q22: d.q22.repr(),
            q0: d.q0.repr(),
        }
    }
}

impl TryFrom<&DiagramJson> for Rank2Diagram {
    type Error = UnitError;

    fn try_from(j: &DiagramJson) -> Result<Self, UnitError> {
        let group = UnitGroup::new(j.p, j.torsion, j.free_rank)?;
        let q11 = Unit::from_repr(group, &j.q11)?;
        let q22 = Unit::from_repr(group, &j.q22)?;
        let q0 = Unit::from_repr(group, &j.q0)?;
        Rank2Diagram::new(q11, q22, q0)
    }
}

impl Serialize for Rank2Diagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DiagramJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rank2Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = DiagramJson::deserialize(deserializer)?;
        Rank2Diagram::try_from(&j).map_err(serde::de::Error::custom)
    }
}
