//! The combinatorics behind the rank-2 finiteness criterion: an inductively
//! defined family of integer sequences, its bijection with triangulations of
//! convex polygons, and a 2×2 matrix characterization.
//!
//! The family contains `(0,0)` and is closed under inserting a `1` between two
//! entries that are each incremented, anywhere except around the ends. Three
//! independent membership routes are implemented:
//!
//! * **reduction** — undo the insertion step on the leftmost interior `1`;
//! * **matrix** — the product `η(c_1)···η(c_n)` equals `-id` with all partial
//!   images of `α_1` non-negative, where `η(a) = [[a, -1], [1, 0]]`;
//! * **enumeration** — generate all members of length `n` from triangulations
//!   of the convex `n`-gon (`c_i` = number of triangles at vertex `i`).
//!
//! The three agree; tests cross-check them exhaustively on small lengths.
//! Every member of length `n` sums to `3n - 6`, and members of length at least
//! 3 always contain one of a short list of local windows (see
//! [`find_window_pattern`]).

use std::collections::BTreeSet;

use thiserror::Error;

/// Largest length accepted by [`enumerate_aplus`] (Catalan growth).
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("enumeration length {n} exceeds the bound {bound}")]
pub struct BoundExceeded {
    pub n: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangulationError {
    #[error("diagonal ({0}, {1}) is not a chord of the polygon")]
    NotAChord(usize, usize),
    #[error("diagonals ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("expected {expected} diagonals for an {n}-gon, got {got}")]
    WrongCount {
        n: usize,
        expected: usize,
        got: usize,
    },
}

/// An exact 2×2 integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    /// Row-major entries.
    pub e: [[i64; 2]; 2],
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        e: [[1, 0], [0, 1]],
    };
    pub const MINUS_IDENTITY: Mat2 = Mat2 {
        e: [[-1, 0], [0, -1]],
    };

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &rhs.e;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0]
                    .checked_mul(b[0][j])
                    .and_then(|x| x.checked_add(a[i][1].checked_mul(b[1][j])?))
                    .expect("matrix entry overflow");
            }
        }
        Mat2 { e: out }
    }

    pub fn det(&self) -> i64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Image of the column vector `(x, y)`.
    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        (
            self.e[0][0] * v.0 + self.e[0][1] * v.1,
            self.e[1][0] * v.0 + self.e[1][1] * v.1,
        )
    }
}

/// `η(a) = [[a, -1], [1, 0]]`, a determinant-one matrix.
pub fn eta(a: i64) -> Mat2 {
    Mat2 {
        e: [[a, -1], [1, 0]],
    }
}

/// Membership by repeatedly removing the leftmost interior `1` and
/// decrementing its neighbours, after cheap size and sum rejects.
pub fn is_aplus_by_reduction(s: &[i64]) -> bool {
    if s.len() < 2 || s.iter().any(|&c| c < 0) {
        return false;
    }
    if s.iter().map(|&c| c as i128).sum::<i128>() != 3 * s.len() as i128 - 6 {
        return false;
    }
    let mut cur = s.to_vec();
    loop {
        let n = cur.len();
        if n == 2 {
            return cur == [0, 0];
        }
        if cur.iter().any(|&c| c < 1) {
            return false;
        }
        // Leftmost interior 1; any choice of interior 1 reduces equivalently.
        let Some(i) = (1..n - 1).find(|&i| cur[i] == 1) else {
            return false;
        };
        cur[i - 1] -= 1;
        cur[i + 1] -= 1;
        cur.remove(i);
    }
}

/// Membership via the matrix route: full `η`-product equal to `-id` and all
/// partial images of `α_1` in the non-negative quadrant.
pub fn is_aplus_by_matrix(s: &[i64]) -> bool {
    if s.len() < 2 {
        return false;
    }
    let mut acc = Mat2::IDENTITY;
    // β_k = η(c_1)···η(c_{k-1})(α_1) for k = 1..n; β_1 = α_1.
    for &c in s {
        let beta = acc.apply((1, 0));
        if beta.0 < 0 || beta.1 < 0 {
            return false;
        }
        acc = acc.mul(&eta(c));
    }
    acc == Mat2::MINUS_IDENTITY
}

/// A triangulation of the convex `n`-gon with vertices `1..=n`, stored as its
/// set of non-crossing diagonals `(a, b)` with `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: BTreeSet<(usize, usize)>) -> Result<Self, TriangulationError> {
        assert!(n >= 2);
        for &(a, b) in &diagonals {
            let chord = a >= 1 && b <= n && a + 2 <= b && !(a == 1 && b == n);
            if !chord {
                return Err(TriangulationError::NotAChord(a, b));
            }
        }
        for &(a, b) in &diagonals {
            for &(c, d) in &diagonals {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return Err(TriangulationError::Crossing(a, b, c, d));
                }
            }
        }
        let expected = n.saturating_sub(3);
        if diagonals.len() != expected {
            return Err(TriangulationError::WrongCount {
                n,
                expected,
                got: diagonals.len(),
            });
        }
        Ok(Triangulation { n, diagonals })
    }

    pub fn polygon_size(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        b == a + 1 || (a == 1 && b == self.n) || self.diagonals.contains(&(a, b))
    }

    /// The triangles of the triangulation, as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        if self.n >= 3 {
            self.collect_triangles(1, self.n, &mut out);
        }
        out
    }

    fn collect_triangles(&self, lo: usize, hi: usize, out: &mut Vec<[usize; 3]>) {
        if hi - lo < 2 {
            return;
        }
        // Unique apex k making (lo, k) and (k, hi) edges of the triangulation.
        let k = (lo + 1..hi)
            .find(|&k| self.is_edge(lo, k) && self.is_edge(k, hi))
            .expect("valid triangulation has an apex on every edge");
        out.push([lo, k, hi]);
        self.collect_triangles(lo, k, out);
        self.collect_triangles(k, hi, out);
    }

    /// `c_i` = number of triangles meeting the `i`-th vertex. The 2-gon has
    /// no triangles and yields `(0, 0)`.
    pub fn to_sequence(&self) -> Vec<i64> {
        let mut c = vec![0i64; self.n];
        for t in self.triangles() {
            for v in t {
                c[v - 1] += 1;
            }
        }
        c
    }
}

/// All members of length `n`, by enumerating triangulations of the `n`-gon.
/// The cardinality is the Catalan number `C(n-2)`.
pub fn enumerate_aplus(n: usize) -> Result<BTreeSet<Vec<i64>>, BoundExceeded> {
    enumerate_aplus_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_aplus_bounded(
    n: usize,
    bound: usize,
) -> Result<BTreeSet<Vec<i64>>, BoundExceeded> {
    assert!(n >= 2);
    if n > bound {
        return Err(BoundExceeded { n, bound });
    }
    Ok(enumerate_triangulations(n)
        .into_iter()
        .map(|t| t.to_sequence())
        .collect())
}

/// All triangulations of the convex `n`-gon, recursively by the apex of the
/// triangle resting on the edge `(1, n)`.
pub fn enumerate_triangulations(n: usize) -> BTreeSet<Triangulation> {
    // Diagonal sets of all triangulations of the sub-polygon lo..=hi.
    fn go(lo: usize, hi: usize, n: usize) -> Vec<BTreeSet<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![BTreeSet::new()];
        }
        let polygon_edge = |a: usize, b: usize| b == a + 1 || (a == 1 && b == n);
        let mut out = Vec::new();
        for k in lo + 1..hi {
            for left in go(lo, k, n) {
                for right in go(k, hi, n) {
                    let mut d: BTreeSet<(usize, usize)> = left.union(&right).copied().collect();
                    if !polygon_edge(lo, k) {
                        d.insert((lo, k));
                    }
                    if !polygon_edge(k, hi) {
                        d.insert((k, hi));
                    }
                    out.push(d);
                }
            }
        }
        out
    }

    let sets = if n == 2 {
        vec![BTreeSet::new()]
    } else {
        go(1, n, n)
    };
    sets.into_iter()
        .map(|d| Triangulation::new(n, d).expect("enumerator produces valid triangulations"))
        .collect()
}

/// The local windows that every member of length ≥ 3 must contain, up to
/// reversal: `(1,1)`, `(1,2,a)` for `a ≤ 3`, `(2,1,b)` and `(1,3,1,b)` for
/// `3 ≤ b ≤ 5`.
pub const WINDOW_PATTERNS: [&[i64]; 10] = [
    &[1, 1],
    &[1, 2, 1],
    &[1, 2, 2],
    &[1, 2, 3],
    &[2, 1, 3],
    &[2, 1, 4],
    &[2, 1, 5],
    &[1, 3, 1, 3],
    &[1, 3, 1, 4],
    &[1, 3, 1, 5],
];

/// A pattern occurrence: 1-based window start, the pattern, and whether it
/// matched reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternMatch {
    pub position: usize,
    pub pattern: &'static [i64],
    pub reversed: bool,
}

fn window_matches(window: &[i64], pattern: &[i64]) -> Option<bool> {
    if window == pattern {
        Some(false)
    } else if window.iter().rev().eq(pattern.iter()) {
        Some(true)
    } else {
        None
    }
}

/// First occurrence of any listed pattern (or its reversal) as a consecutive
/// window, scanning positions left to right and patterns in listed order.
pub fn find_window_pattern(s: &[i64]) -> Option<PatternMatch> {
    for start in 0..s.len() {
        for pattern in WINDOW_PATTERNS {
            if start + pattern.len() > s.len() {
                continue;
            }
            if let Some(reversed) = window_matches(&s[start..start + pattern.len()], pattern) {
                return Some(PatternMatch {
                    position: start + 1,
                    pattern,
                    reversed,
                });
            }
        }
    }
    None
}

/// The distinct listed patterns occurring in `s` (a pattern and its reversal
/// count as one).
pub fn window_patterns_present(s: &[i64]) -> Vec<&'static [i64]> {
    WINDOW_PATTERNS
        .into_iter()
        .filter(|pattern| {
            (0..s.len().saturating_sub(pattern.len() - 1))
                .any(|start| window_matches(&s[start..start + pattern.len()], pattern).is_some())
        })
        .collect()
}
