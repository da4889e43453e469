//! The rank-2 finiteness decision.
//!
//! Walking the orbit of a diagram along alternating reflections and reading
//! off the negated Cartan entries yields the characteristic sequence. With `n`
//! the period of the base point under the double reflection `r_2 r_1` and
//! `l = 6n - Σ_{k=1}^{2n} c_k`, the orbit graph is a finite Cartan graph
//! exactly when
//!
//! ```text
//!   l > 0,   l | 12,   (c_1, …, c_q) is a triangulation sequence,   and
//!   the whole sequence is the q-periodic extension of that window,
//! ```
//!
//! where `q = 12n/l` is then the number of positive roots. Positive roots are
//! produced from the window via the recurrence `β_{k+1} = c_k·β_k - β_{k-1}`
//! (`β_0 = -α_2`, `β_1 = α_1`), joined with the coordinate swap of the same
//! construction for the other label.
//!
//! [`brute_force_real_roots`] recomputes the root sets directly from the Weyl
//! groupoid generators as an independent oracle.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::lcm;
use crate::diagram::{Label, Rank2Diagram};
use crate::reflection::{orbit, OrbitError, OrbitGraph};
use crate::sequences::is_aplus_by_reduction;

/// A root in coordinates over the basis `(α_1, α_2)`; serializes as `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root2(pub i64, pub i64);

impl Root2 {
    pub const ALPHA1: Root2 = Root2(1, 0);
    pub const ALPHA2: Root2 = Root2(0, 1);

    pub fn is_non_negative(&self) -> bool {
        self.0 >= 0 && self.1 >= 0
    }

    /// Coordinate swap.
    pub fn tau(&self) -> Root2 {
        Root2(self.1, self.0)
    }

    pub fn neg(&self) -> Root2 {
        Root2(-self.0, -self.1)
    }
}

/// The characteristic sequence of an orbit with respect to its base point and
/// a starting label: one full period of `2n` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharSeq {
    n: usize,
    entries: Vec<i64>,
}

impl CharSeq {
    /// Period of the base point under the double reflection.
    pub fn n(&self) -> usize {
        self.n
    }

    /// One period of `2n` entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `c_k` of the periodically extended sequence, 1-based.
    pub fn at(&self, k: usize) -> i64 {
        assert!(k >= 1);
        self.entries[(k - 1) % self.entries.len()]
    }

    /// The first `q` entries of the periodic extension.
    pub fn window(&self, q: usize) -> Vec<i64> {
        (1..=q).map(|k| self.at(k)).collect()
    }

    /// `β_1, …, β_{up_to}` by the recurrence `β_{k+1} = c_k·β_k - β_{k-1}`
    /// with `β_0 = -α_2` and `β_1 = α_1`.
    pub fn root_sequence(&self, up_to: usize) -> Vec<Root2> {
        beta_sequence(|k| self.at(k), up_to)
    }
}

/// The same recurrence over an arbitrary coefficient source.
pub fn beta_sequence(c: impl Fn(usize) -> i64, up_to: usize) -> Vec<Root2> {
    let mut prev = Root2::ALPHA2.neg();
    let mut cur = Root2::ALPHA1;
    let mut out = Vec::with_capacity(up_to);
    for k in 1..=up_to {
        out.push(cur);
        let ck = c(k);
        let next = Root2(ck * cur.0 - prev.0, ck * cur.1 - prev.1);
        prev = cur;
        cur = next;
    }
    out
}

/// Reads the characteristic sequence of `g` at its base point for `i`: walk
/// `X, r_i(X), r_j r_i(X), …`, recording `-a_{ij}` at even steps and
/// `-a_{ji}` at odd steps, until the base point recurs after an even number
/// of steps.
pub fn characteristic_sequence(g: &OrbitGraph, i: Label) -> CharSeq {
    let j = i.other();
    let mut entries = Vec::new();
    let mut cur = g.base();
    let mut steps = 0usize;
    loop {
        entries.push(-g.cartan(cur).entry(i));
        cur = g.reflect_point(cur, i);
        entries.push(-g.cartan(cur).entry(j));
        cur = g.reflect_point(cur, j);
        steps += 2;
        if cur == g.base() {
            break;
        }
        assert!(
            steps <= 2 * g.len(),
            "double reflection failed to close its cycle"
        );
    }
    CharSeq {
        n: steps / 2,
        entries,
    }
}

/// Why a diagram fails to generate a finite Cartan graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InfiniteReason {
    LNonPositive,
    LNotDividing12,
    NotAplus,
    NotPeriodic,
}

/// Outcome of [`decide_finite`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FinitenessVerdict {
    Finite {
        n: usize,
        l: i64,
        /// `12n/l`, the number of positive roots.
        roots: usize,
        /// The accepted window `(c_1, …, c_q)`.
        sequence: Vec<i64>,
        positive_roots: BTreeSet<Root2>,
    },
    Infinite {
        reason: InfiniteReason,
        n: usize,
        l: i64,
    },
    NotAllReflections,
    Inconclusive {
        cap_hit: usize,
    },
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, FinitenessVerdict::Finite { .. })
    }

    /// Short tag, stable across data payloads.
    pub fn tag(&self) -> &'static str {
        match self {
            FinitenessVerdict::Finite { .. } => "finite",
            FinitenessVerdict::Infinite { .. } => "infinite",
            FinitenessVerdict::NotAllReflections => "not_all_reflections",
            FinitenessVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Decides whether the orbit graph of `d` is a finite Cartan graph.
///
/// Checks are ordered deterministically: positivity of `l`, divisibility
/// `l | 12`, window membership, then `q`-periodicity of the characteristic
/// sequence over one `lcm(2n, q)` horizon (the sequence is `2n`-periodic by
/// construction, so agreement there proves it everywhere).
pub fn decide_finite(d: &Rank2Diagram, cap: usize) -> FinitenessVerdict {
    let g = match orbit(d, cap) {
        Ok(g) => g,
        Err(OrbitError::NotAllReflections) => return FinitenessVerdict::NotAllReflections,
        Err(OrbitError::Diverged { cap }) => {
            return FinitenessVerdict::Inconclusive { cap_hit: cap }
        }
    };
    decide_finite_orbit(&g)
}

/// The same decision, starting from an already-built orbit graph.
pub fn decide_finite_orbit(g: &OrbitGraph) -> FinitenessVerdict {
    let cs = characteristic_sequence(g, Label::One);
    let n = cs.n();
    let sum: i64 = cs.entries().iter().sum();
    let l = 6 * n as i64 - sum;
    if l <= 0 {
        return FinitenessVerdict::Infinite {
            reason: InfiniteReason::LNonPositive,
            n,
            l,
        };
    }
    if 12 % l != 0 {
        return FinitenessVerdict::Infinite {
            reason: InfiniteReason::LNotDividing12,
            n,
            l,
        };
    }
    let q = (12 * n as i64 / l) as usize;
    let window = cs.window(q);
    if !is_aplus_by_reduction(&window) {
        return FinitenessVerdict::Infinite {
            reason: InfiniteReason::NotAplus,
            n,
            l,
        };
    }
    let horizon = lcm(2 * n as u64, q as u64) as usize;
    for k in 1..=horizon {
        if cs.at(k) != window[(k - 1) % q] {
            return FinitenessVerdict::Infinite {
                reason: InfiniteReason::NotPeriodic,
                n,
                l,
            };
        }
    }
    let roots = positive_roots(g, q);
    debug_assert_eq!(roots.len(), q, "positive root count must equal 12n/l");
    FinitenessVerdict::Finite {
        n,
        l,
        roots: q,
        sequence: window,
        positive_roots: roots,
    }
}

/// Positive roots at the base point of a finite orbit: the first `q` values
/// of the root sequence for label 1, united with the coordinate swap of the
/// root sequence for label 2.
pub fn positive_roots(g: &OrbitGraph, q: usize) -> BTreeSet<Root2> {
    let beta = characteristic_sequence(g, Label::One).root_sequence(q);
    let gamma = characteristic_sequence(g, Label::Two).root_sequence(q);
    debug_assert_eq!(
        beta.last(),
        Some(&Root2::ALPHA2),
        "root sequence must end at α_2"
    );
    beta.into_iter()
        .chain(gamma.into_iter().map(|r| r.tau()))
        .filter(|r| r.is_non_negative())
        .collect()
}

/// The brute-force oracle hit its word cap before the root sets saturated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("real-root closure did not saturate within {cap} rounds")]
pub struct CapHit {
    pub cap: usize,
}

/// Real roots at every point, computed directly from the groupoid generators:
/// seed `α_1, α_2` at every point and close under `v ↦ s_i^Y(v)` mapped from
/// `Y` to `r_i(Y)`, where `s_i^Y` sends `α_j` to `α_j - a_{ij}^Y·α_i`.
pub fn brute_force_real_roots(
    g: &OrbitGraph,
    word_cap: usize,
) -> Result<Vec<BTreeSet<Root2>>, CapHit> {
    let mut sets: Vec<BTreeSet<Root2>> = vec![[Root2::ALPHA1, Root2::ALPHA2].into(); g.len()];
    let mut frontier: Vec<(usize, Root2)> = (0..g.len())
        .flat_map(|x| [(x, Root2::ALPHA1), (x, Root2::ALPHA2)])
        .collect();
    for _ in 0..word_cap {
        if frontier.is_empty() {
            return Ok(sets);
        }
        let mut next = Vec::new();
        for (y, v) in frontier {
            for label in Label::BOTH {
                let target = g.reflect_point(y, label);
                let image = apply_simple_reflection(g, y, label, v);
                if sets[target].insert(image) {
                    next.push((target, image));
                }
            }
        }
        frontier = next;
    }
    Err(CapHit { cap: word_cap })
}

fn apply_simple_reflection(g: &OrbitGraph, at: usize, label: Label, v: Root2) -> Root2 {
    let a = g.cartan(at);
    match label {
        Label::One => Root2(-v.0 - a.a12() * v.1, v.1),
        Label::Two => Root2(v.0, -v.1 - a.a21() * v.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::DEFAULT_ORBIT_CAP;
    use crate::units::UnitGroup;

    fn dg(
        _g: &UnitGroup,
        q11: &crate::units::Unit,
        q0: &crate::units::Unit,
        q22: &crate::units::Unit,
    ) -> Rank2Diagram {
        Rank2Diagram::new(q11.clone(), q22.clone(), q0.clone()).unwrap()
    }

    fn orb(d: &Rank2Diagram) -> OrbitGraph {
        orbit(d, DEFAULT_ORBIT_CAP).unwrap()
    }

    #[test]
    fn char_seq_single_point_chain() {
        // (q; q^{-2}; q^2): one point, entries (2, 1).
        let g = UnitGroup::new(3, 1, 1).unwrap();
        let q = g.free_gen(0);
        let cs = characteristic_sequence(&orb(&dg(&g, &q, &q.pow(-2), &q.pow(2))), Label::One);
        assert_eq!(cs.n(), 1);
        assert_eq!(cs.entries(), &[2, 1]);
    }

    #[test]
    fn char_seq_disconnected() {
        let g = UnitGroup::new(3, 1, 2).unwrap();
        let d = dg(&g, &g.free_gen(0), &g.one(), &g.free_gen(1));
        let cs = characteristic_sequence(&orb(&d), Label::One);
        assert_eq!(cs.n(), 1);
        assert_eq!(cs.entries(), &[0, 0]);
    }

    #[test]
    fn char_seq_order_nine() {
        // p=5, ζ of order 9: (-ζ^2; ζ; -1) has period 3 and window (4,1,2,2,2,1).
        let g = UnitGroup::new(5, 18, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let d = dg(&g, &(&minus * &z.pow(2)), &z, &minus);
        let cs = characteristic_sequence(&orb(&d), Label::One);
        assert_eq!(cs.n(), 3);
        assert_eq!(cs.entries(), &[4, 1, 2, 2, 2, 1]);
    }

    #[test]
    fn label_two_sequence_is_reversed_shift() {
        // With (r_2 r_1)^n(X) = X, the label-2 sequence is (c_{2n+1-k})_k.
        let g = UnitGroup::new(5, 18, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let d = dg(&g, &(&minus * &z.pow(2)), &z, &minus);
        let graph = orb(&d);
        let c1 = characteristic_sequence(&graph, Label::One);
        let c2 = characteristic_sequence(&graph, Label::Two);
        assert_eq!(c1.n(), c2.n());
        let two_n = 2 * c1.n();
        let expected: Vec<i64> = (1..=two_n).map(|k| c1.at(2 * c1.n() + 1 - k)).collect();
        assert_eq!(c2.entries(), &expected[..]);
    }

    #[test]
    fn root_sequence_examples() {
        // (2,1,2,1,...) gives the B2 positive roots in order.
        let b2 = beta_sequence(|k| [2, 1][(k - 1) % 2], 4);
        assert_eq!(b2, vec![Root2(1, 0), Root2(2, 1), Root2(1, 1), Root2(0, 1)]);

        // (0,0): α_1 then α_2.
        let a1a1 = beta_sequence(|_| 0, 2);
        assert_eq!(a1a1, vec![Root2(1, 0), Root2(0, 1)]);

        // β_2 = c_1·α_1 + α_2 always.
        for c1 in -3..=5 {
            assert_eq!(beta_sequence(|_| c1, 2)[1], Root2(c1, 1));
        }
    }

    #[test]
    fn decide_trivial_edge() {
        // Any diagram with q0 = 1 is finite with two positive roots.
        let g = UnitGroup::new(7, 5, 0).unwrap();
        let d = dg(&g, &g.zeta(), &g.one(), &g.zeta().pow(3));
        match decide_finite(&d, DEFAULT_ORBIT_CAP) {
            FinitenessVerdict::Finite {
                n,
                l,
                roots,
                sequence,
                positive_roots,
            } => {
                assert_eq!((n, l, roots), (1, 6, 2));
                assert_eq!(sequence, vec![0, 0]);
                assert_eq!(positive_roots, [Root2::ALPHA1, Root2::ALPHA2].into());
            }
            v => panic!("expected finite, got {v:?}"),
        }
    }

    #[test]
    fn decide_order_seven_pair() {
        // p=3, ζ of order 7: (-ζ; -ζ^{-3}; -1) is finite with n=2, l=2,
        // twelve roots and window (3,1,5,1)^3.
        let g = UnitGroup::new(3, 14, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let d = dg(&g, &(&minus * &z), &(&minus * &z.pow(-3)), &minus);
        match decide_finite(&d, DEFAULT_ORBIT_CAP) {
            FinitenessVerdict::Finite {
                n,
                l,
                roots,
                sequence,
                ..
            } => {
                assert_eq!((n, l, roots), (2, 2, 12));
                assert_eq!(sequence, vec![3, 1, 5, 1, 3, 1, 5, 1, 3, 1, 5, 1]);
            }
            v => panic!("expected finite, got {v:?}"),
        }
    }

    #[test]
    fn negative_anchor_p13() {
        // p = 13, ζ of order 3: (ζ; -ζ^{-1}; -1) gives l = 20 - 2p = -6.
        let g = UnitGroup::new(13, 6, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let d = dg(&g, &z, &(&minus * &z.inv()), &minus);
        match decide_finite(&d, DEFAULT_ORBIT_CAP) {
            FinitenessVerdict::Infinite { reason, n, l } => {
                assert_eq!(reason, InfiniteReason::LNonPositive);
                assert_eq!((n, l), (6, -6));
            }
            v => panic!("expected infinite, got {v:?}"),
        }
    }

    #[test]
    fn negative_anchor_p11() {
        // p = 11, same family: l = 16 - 2p = -6.
        let g = UnitGroup::new(11, 6, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let d = dg(&g, &z, &(&minus * &z.inv()), &minus);
        match decide_finite(&d, DEFAULT_ORBIT_CAP) {
            FinitenessVerdict::Infinite { reason, n, l } => {
                assert_eq!(reason, InfiniteReason::LNonPositive);
                assert_eq!((n, l), (4, -6));
            }
            v => panic!("expected infinite, got {v:?}"),
        }
    }

    #[test]
    fn brute_force_oracle_agrees() {
        // Disconnected: ±α_1, ±α_2 only.
        let g = UnitGroup::new(7, 5, 0).unwrap();
        let d = dg(&g, &g.zeta(), &g.one(), &g.zeta().pow(3));
        let graph = orb(&d);
        let roots = brute_force_real_roots(&graph, 100).unwrap();
        assert_eq!(
            roots[0],
            [Root2(1, 0), Root2(0, 1), Root2(-1, 0), Root2(0, -1)].into()
        );

        // B2 shape: 8 roots.
        let g1 = UnitGroup::new(3, 1, 1).unwrap();
        let q = g1.free_gen(0);
        let graph = orb(&dg(&g1, &q, &q.pow(-2), &q.pow(2)));
        let roots = brute_force_real_roots(&graph, 100).unwrap();
        assert_eq!(roots[0].len(), 8);

        // Order-7 pair: 24 roots matching ± the positive set.
        let g2 = UnitGroup::new(3, 14, 0).unwrap();
        let z = g2.zeta().pow(2);
        let minus = g2.minus_one().unwrap();
        let graph = orb(&dg(&g2, &(&minus * &z), &(&minus * &z.pow(-3)), &minus));
        let roots = brute_force_real_roots(&graph, 100).unwrap();
        let pos = positive_roots(&graph, 12);
        let expected: BTreeSet<Root2> = pos
            .iter()
            .copied()
            .chain(pos.iter().map(|r| r.neg()))
            .collect();
        assert_eq!(roots[graph.base()], expected);
        assert_eq!(roots[graph.base()].len(), 24);
    }

    #[test]
    fn verdict_is_tau_equivariant() {
        let g = UnitGroup::new(5, 12, 0).unwrap();
        for q11 in g.torsion_units().step_by(3) {
            for q22 in g.torsion_units().step_by(4) {
                for q0 in g.torsion_units().step_by(2) {
                    let d = Rank2Diagram::new(q11.clone(), q22.clone(), q0.clone()).unwrap();
                    let v1 = decide_finite(&d, DEFAULT_ORBIT_CAP);
                    let v2 = decide_finite(&d.tau(), DEFAULT_ORBIT_CAP);
                    assert_eq!(v1.tag(), v2.tag());
                    if let (
                        FinitenessVerdict::Finite { n, l, roots, .. },
                        FinitenessVerdict::Finite {
                            n: n2,
                            l: l2,
                            roots: r2,
                            ..
                        },
                    ) = (&v1, &v2)
                    {
                        assert_eq!((n, l, roots), (n2, l2, r2));
                    }
                }
            }
        }
    }

    #[test]
    fn double_reflection_period_divides_root_count() {
        // (r_2 r_1)^q fixes every point of a finite orbit.
        let g = UnitGroup::new(3, 14, 0).unwrap();
        let z = g.zeta().pow(2);
        let minus = g.minus_one().unwrap();
        let graph = orb(&dg(&g, &(&minus * &z), &(&minus * &z.pow(-3)), &minus));
        let q = match decide_finite_orbit(&graph) {
            FinitenessVerdict::Finite { roots, .. } => roots,
            v => panic!("expected finite, got {v:?}"),
        };
        for start in 0..graph.len() {
            let mut cur = start;
            for _ in 0..q {
                cur = graph.reflect_point(cur, Label::One);
                cur = graph.reflect_point(cur, Label::Two);
            }
            assert_eq!(cur, start);
        }
    }

    #[test]
    fn verdict_json_shapes() {
        let g = UnitGroup::new(7, 5, 0).unwrap();
        let d = dg(&g, &g.zeta(), &g.one(), &g.zeta().pow(3));
        let v = decide_finite(&d, DEFAULT_ORBIT_CAP);
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "finite");
        assert_eq!(json["roots"], 2);
        assert_eq!(json["positive_roots"][0][0], 0);

        let g13 = UnitGroup::new(13, 6, 0).unwrap();
        let z = g13.zeta().pow(2);
        let minus = g13.minus_one().unwrap();
        let d = dg(&g13, &z, &(&minus * &z.inv()), &minus);
        let v = decide_finite(&d, DEFAULT_ORBIT_CAP);
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["verdict"], "infinite");
        assert_eq!(json["reason"], "l_non_positive");
        assert_eq!(json["l"], -6);
    }
}
