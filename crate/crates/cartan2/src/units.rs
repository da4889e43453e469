//! Exact arithmetic for multiplicative scalars over a field of characteristic `p > 0`.
//!
//! A scalar is never evaluated in an actual field on the main path. Instead it
//! is an element of a finitely generated abelian group
//!
//! ```text
//!     Z^r  ⊕  Z/N        (written multiplicatively)
//! ```
//!
//! interpreted as `t_1^{e_1} ··· t_r^{e_r} · ζ_N^{e_0}`, where `ζ_N` is a fixed
//! primitive `N`-th root of unity in an algebraic closure of `F_p` and the
//! `t_i` are multiplicatively independent generic units. Requiring
//! `gcd(N, p) = 1` keeps the torsion part faithful: `F_p`-algebras have no
//! nontrivial `p`-th roots of unity.
//!
//! Everything the reflection theory needs — multiplicative order, vanishing of
//! quantum integers `(n)_q = 1 + q + … + q^{n-1}`, and the discrete-log style
//! question "which power of `q` cancels a given unit" — is decidable from the
//! exponents, so all downstream computations are exact.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{gcd, is_prime, mod_inverse};

/// Errors from unit-group construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitError {
    #[error("operands belong to different unit groups")]
    MismatchedGroup,
    #[error("invalid unit group: {0}")]
    InvalidGroup(String),
}

/// The ambient group `Z^r ⊕ Z/N` together with the field characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UnitGroup {
    p: u64,
    torsion: u64,
    free_rank: usize,
}

impl UnitGroup {
    /// A group with torsion modulus `torsion` and `free_rank` generic
    /// generators, over characteristic `p`.
    pub fn new(p: u64, torsion: u64, free_rank: usize) -> Result<Self, UnitError> {
        if !is_prime(p) {
            return Err(UnitError::InvalidGroup(format!("{p} is not prime")));
        }
        if torsion == 0 {
            return Err(UnitError::InvalidGroup(
                "torsion modulus must be positive".into(),
            ));
        }
        if gcd(torsion, p) != 1 {
            return Err(UnitError::InvalidGroup(format!(
                "torsion modulus {torsion} is not coprime to the characteristic {p}"
            )));
        }
        Ok(UnitGroup {
            p,
            torsion,
            free_rank,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn torsion(&self) -> u64 {
        self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// The identity element.
    pub fn one(&self) -> Unit {
        Unit {
            group: *self,
            free: vec![0; self.free_rank],
            torsion: 0,
        }
    }

    /// The fixed primitive `N`-th root of unity `ζ_N`.
    pub fn zeta(&self) -> Unit {
        self.unit(&[], 1)
    }

    /// `-1`, when it exists: `ζ_N^{N/2}` for even `N`, and `1` when `p = 2`.
    /// `None` for odd `N` in odd characteristic.
    pub fn minus_one(&self) -> Option<Unit> {
        if self.p == 2 {
            Some(self.one())
        } else if self.torsion.is_multiple_of(2) {
            Some(self.unit(&[], (self.torsion / 2) as i64))
        } else {
            None
        }
    }

    /// The `idx`-th generic generator `t_idx`.
    pub fn free_gen(&self, idx: usize) -> Unit {
        assert!(idx < self.free_rank, "free generator index out of range");
        let mut free = vec![0; self.free_rank];
        free[idx] = 1;
        Unit {
            group: *self,
            free,
            torsion: 0,
        }
    }

    /// Builds a unit from exponents; missing free exponents are zero and the
    /// torsion exponent is reduced mod `N`.
    pub fn unit(&self, free: &[i64], torsion: i64) -> Unit {
        assert!(free.len() <= self.free_rank, "too many free exponents");
        let mut f = free.to_vec();
        f.resize(self.free_rank, 0);
        Unit {
            group: *self,
            free: f,
            torsion: torsion.rem_euclid(self.torsion as i64) as u64,
        }
    }

    /// All `N` torsion units of the group, by ascending exponent.
    pub fn torsion_units(&self) -> impl Iterator<Item = Unit> + '_ {
        (0..self.torsion).map(move |e| self.unit(&[], e as i64))
    }
}

impl<'de> Deserialize<'de> for UnitGroup {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            p: u64,
            torsion: u64,
            free_rank: usize,
        }
        let raw = Raw::deserialize(deserializer)?;
        UnitGroup::new(raw.p, raw.torsion, raw.free_rank).map_err(serde::de::Error::custom)
    }
}

/// Multiplicative order of a unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl Order {
    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// Group-and-exponent free serialization shape: `{"free": [...], "torsion": e}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRepr {
    pub free: Vec<i64>,
    pub torsion: u64,
}

/// An element `t_1^{e_1}···t_r^{e_r}·ζ_N^{e_0}` of a [`UnitGroup`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Unit {
    group: UnitGroup,
    free: Vec<i64>,
    torsion: u64,
}

impl Unit {
    pub fn group(&self) -> &UnitGroup {
        &self.group
    }

    pub fn free_exp(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_exp(&self) -> u64 {
        self.torsion
    }

    pub fn repr(&self) -> UnitRepr {
        UnitRepr {
            free: self.free.clone(),
            torsion: self.torsion,
        }
    }

    /// Reconstructs a unit from its serialized exponents.
    pub fn from_repr(group: UnitGroup, repr: &UnitRepr) -> Result<Self, UnitError> {
        if repr.free.len() != group.free_rank() {
            return Err(UnitError::InvalidGroup(format!(
                "free exponent vector has length {}, expected {}",
                repr.free.len(),
                group.free_rank()
            )));
        }
        if repr.torsion >= group.torsion() {
            return Err(UnitError::InvalidGroup(format!(
                "torsion exponent {} not reduced mod {}",
                repr.torsion,
                group.torsion()
            )));
        }
        Ok(group.unit(&repr.free, repr.torsion as i64))
    }

    /// Product, failing on mismatched groups. The `*` operator asserts instead.
    pub fn checked_mul(&self, rhs: &Unit) -> Result<Unit, UnitError> {
        if self.group != rhs.group {
            return Err(UnitError::MismatchedGroup);
        }
        let free = self
            .free
            .iter()
            .zip(&rhs.free)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Unit {
            group: self.group,
            free,
            torsion: (self.torsion + rhs.torsion) % self.group.torsion,
        })
    }

    pub fn inv(&self) -> Unit {
        let n = self.group.torsion;
        Unit {
            group: self.group,
            free: self.free.iter().map(|e| -e).collect(),
            torsion: (n - self.torsion) % n,
        }
    }

    pub fn pow(&self, k: i64) -> Unit {
        let n = self.group.torsion as i64;
        Unit {
            group: self.group,
            free: self.free.iter().map(|e| e * k).collect(),
            torsion: (self.torsion as i64 * k).rem_euclid(n) as u64,
        }
    }

    pub fn is_one(&self) -> bool {
        self.torsion == 0 && self.free.iter().all(|&e| e == 0)
    }

    /// `Infinite` iff the free part is nonzero, else `N / gcd(N, e_0)`.
    pub fn order(&self) -> Order {
        if self.free.iter().any(|&e| e != 0) {
            Order::Infinite
        } else {
            Order::Finite(self.group.torsion / gcd(self.group.torsion, self.torsion))
        }
    }

    /// Whether `self` is a primitive `n`-th root of unity.
    pub fn is_primitive_root(&self, n: u64) -> bool {
        self.order() == Order::Finite(n)
    }

    /// Vanishing of the quantum integer `(n)_q = 1 + q + … + q^{n-1}` in
    /// characteristic `p`: zero iff `n = 0`, or `q = 1` and `p | n`, or `q` has
    /// finite order `d > 1` with `d | n`.
    pub fn qnum_is_zero(&self, n: u64) -> bool {
        if n == 0 {
            return true;
        }
        if self.is_one() {
            return n.is_multiple_of(self.group.p);
        }
        match self.order() {
            Order::Finite(d) => n.is_multiple_of(d),
            Order::Infinite => false,
        }
    }

    /// Minimal `m ≥ 0` with `self^m · tgt = 1`, or `None` when no power works.
    ///
    /// Solves `m·free(self) = -free(tgt)` over `Z` together with the torsion
    /// congruence `m·e_0(self) ≡ -e_0(tgt) (mod N)`.
    pub fn min_neutralizing_power(&self, tgt: &Unit) -> Option<u64> {
        assert_eq!(self.group, tgt.group, "units from different groups");
        let n = self.group.torsion;

        // The free part pins m to at most one candidate.
        let mut pinned: Option<i64> = None;
        for (&a, &b) in self.free.iter().zip(&tgt.free) {
            if a == 0 {
                if b != 0 {
                    return None;
                }
            } else {
                if b % a != 0 {
                    return None;
                }
                let m = -(b / a);
                if m < 0 {
                    return None;
                }
                match pinned {
                    None => pinned = Some(m),
                    Some(m0) if m0 != m => return None,
                    _ => {}
                }
            }
        }

        let a = self.torsion % n;
        let target = (n - tgt.torsion % n) % n; // -e_0(tgt) mod N
        if let Some(m) = pinned {
            let lhs = (a as u128 * m as u128 % n as u128) as u64;
            return (lhs == target).then_some(m as u64);
        }

        // Pure congruence m·a ≡ target (mod N).
        let g = gcd(a, n);
        if !target.is_multiple_of(g) {
            return None;
        }
        if a == 0 {
            return (target == 0).then_some(0);
        }
        let n1 = n / g;
        let inv = mod_inverse(a / g % n1, n1)?;
        Some(target / g % n1 * inv % n1)
    }
}

impl std::ops::Mul for &Unit {
    type Output = Unit;

    fn mul(self, rhs: &Unit) -> Unit {
        self.checked_mul(rhs).expect("units from different groups")
    }
}

fn free_gen_name(idx: usize, rank: usize) -> String {
    match (idx, rank) {
        (0, _) => "t".into(),
        (1, _) => "s".into(),
        (2, _) => "u".into(),
        _ => format!("g{idx}"),
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let n = self.group.torsion;
        if self.torsion != 0 {
            if n.is_multiple_of(2) && self.torsion == n / 2 {
                parts.push("-1".into());
            } else if self.torsion == 1 {
                parts.push("z".into());
            } else {
                parts.push(format!("z^{}", self.torsion));
            }
        }
        for (i, &e) in self.free.iter().enumerate() {
            if e != 0 {
                let name = free_gen_name(i, self.free.len());
                if e == 1 {
                    parts.push(name);
                } else {
                    parts.push(format!("{name}^{e}"));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}
