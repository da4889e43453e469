//! Concrete finite fields `F_{p^k}`, used as an independent oracle.
//!
//! The main decision path never touches a field; this module exists so that
//! tests can realize a [`UnitGroup`](crate::units::UnitGroup) inside an actual
//! `F_{p^k}` and compare exact predicates (quantum-integer vanishing, monomial
//! identities, Cartan entries) against brute-force field evaluation.
//!
//! Elements are polynomials over `F_p` reduced modulo a monic irreducible of
//! degree `k`. The modulus is found by a deterministic scan in ascending
//! coefficient order, so a given `(p, k)` always yields the same field.

use thiserror::Error;

use crate::arith::{gcd, prime_factors};
use crate::units::{Unit, UnitGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("no embedding: torsion modulus {n} shares a factor with the characteristic {p}")]
    NoEmbedding { p: u64, n: u64 },
    #[error("free generator assignment has length {got}, expected {want}")]
    BadAssignment { got: usize, want: usize },
    #[error("free generators must be assigned nonzero field elements")]
    ZeroAssignment,
}

/// A field element: coefficient vector of length `k`, little-endian in `x`.
pub type Element = Vec<u64>;

/// `F_{p^k}` as `F_p[x]` modulo a fixed monic irreducible of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic modulus, length `k + 1`.
    modulus: Vec<u64>,
}

/// Minimal `k` with `n | p^k - 1`, i.e. the degree of the smallest extension
/// of `F_p` containing the `n`-th roots of unity.
pub fn minimal_extension_degree(p: u64, n: u64) -> Result<usize, FieldError> {
    if gcd(p, n) != 1 {
        return Err(FieldError::NoEmbedding { p, n });
    }
    let mut pk = 1u64;
    for k in 1..=64 {
        pk = pk.checked_mul(p).expect("p^k overflow");
        if pk % n == 1 % n {
            return Ok(k);
        }
    }
    unreachable!("multiplicative order of p mod n exceeds 64");
}

impl FiniteField {
    /// Builds `F_{p^k}`; `p` must be prime.
    pub fn new(p: u64, k: usize) -> Self {
        assert!(crate::arith::is_prime(p), "characteristic must be prime");
        assert!(k >= 1);
        let modulus = find_irreducible(p, k);
        FiniteField { p, k, modulus }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^k`, the number of field elements.
    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn zero(&self) -> Element {
        vec![0; self.k]
    }

    pub fn one(&self) -> Element {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u64) -> Element {
        let mut e = vec![0; self.k];
        e[0] = c % self.p;
        e
    }

    /// The residue class of `x` (equals `scalar` image only when `k = 1`).
    pub fn x(&self) -> Element {
        if self.k == 1 {
            // x ≡ -c_0 mod (x + c_0)
            self.scalar(self.p - self.modulus[0] % self.p)
        } else {
            let mut e = vec![0; self.k];
            e[1] = 1;
            e
        }
    }

    /// Enumerates all `p^k` elements in a fixed order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.size();
        (0..total).map(move |mut m| {
            let mut e = vec![0; self.k];
            for c in e.iter_mut() {
                *c = m % self.p;
                m /= self.p;
            }
            e
        })
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut prod = vec![0u64; 2 * self.k];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut poly: Vec<u64>) -> Element {
        for i in (self.k..poly.len()).rev() {
            let c = poly[i];
            if c != 0 {
                poly[i] = 0;
                // x^i ≡ -(modulus - x^k)·x^{i-k}
                for j in 0..self.k {
                    let m = self.modulus[j];
                    if m != 0 {
                        let idx = i - self.k + j;
                        poly[idx] = (poly[idx] + (self.p - m) * c) % self.p;
                    }
                }
            }
        }
        poly.truncate(self.k);
        poly
    }

    pub fn pow(&self, a: &Element, mut e: u64) -> Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &Element) -> Element {
        assert!(!self.is_zero(a), "division by zero");
        self.pow(a, self.size() - 2)
    }

    /// Signed power, inverting first for negative exponents.
    pub fn pow_signed(&self, a: &Element, e: i64) -> Element {
        if e >= 0 {
            self.pow(a, e as u64)
        } else {
            self.pow(&self.inv(a), e.unsigned_abs())
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &Element) -> u64 {
        assert!(!self.is_zero(a));
        let mut ord = self.size() - 1;
        for q in prime_factors(self.size() - 1) {
            while ord.is_multiple_of(q) && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// First element (in enumeration order) of multiplicative order exactly
    /// `n`; requires `n | p^k - 1`.
    pub fn element_of_order(&self, n: u64) -> Element {
        let q1 = self.size() - 1;
        assert_eq!(q1 % n, 0, "no elements of order {n} in this field");
        let cofactor = q1 / n;
        for h in self.elements() {
            if self.is_zero(&h) {
                continue;
            }
            let g = self.pow(&h, cofactor);
            if self.element_order(&g) == n {
                return g;
            }
        }
        unreachable!("cyclic group of order {q1} has elements of order {n}");
    }

    /// `(n)_a = 1 + a + … + a^{n-1}` evaluated in the field.
    pub fn qnum(&self, a: &Element, n: u64) -> Element {
        let mut acc = self.zero();
        let mut pow = self.one();
        for _ in 0..n {
            acc = self.add(&acc, &pow);
            pow = self.mul(&pow, a);
        }
        acc
    }
}

/// Scans monic degree-`k` polynomials in ascending coefficient order (constant
/// term varying fastest) and returns the first irreducible one.
fn find_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x itself
    }
    let count = p.checked_pow(k as u32).expect("p^k overflow");
    'next: for m in 0..count {
        let mut f = vec![0u64; k + 1];
        let mut v = m;
        for c in f.iter_mut().take(k) {
            *c = v % p;
            v /= p;
        }
        f[k] = 1;
        // No factor of degree <= k/2 iff gcd(x^{p^i} - x, f) = 1 for all i <= k/2.
        let mut xpi = vec![0, 1]; // x
        for _ in 1..=k / 2 {
            xpi = poly_powmod(p, &xpi, p, &f);
            let mut diff = xpi.clone();
            poly_sub_x(p, &mut diff);
            if poly_gcd_deg(p, &diff, &f) != 0 {
                continue 'next;
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials of degree {k} exist over F_{p}");
}

fn poly_trim(f: &mut Vec<u64>) {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
}

fn poly_sub_x(p: u64, f: &mut Vec<u64>) {
    if f.len() < 2 {
        f.resize(2, 0);
    }
    f[1] = (f[1] + p - 1) % p;
    poly_trim(f);
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(p, prod, m)
}

fn poly_rem(p: u64, mut f: Vec<u64>, m: &[u64]) -> Vec<u64> {
    let dm = m.len() - 1;
    if dm == 0 {
        return vec![0]; // modulus is a unit
    }
    let lead_inv = crate::arith::mod_inverse(m[dm] % p, p).expect("invertible leading coefficient");
    poly_trim(&mut f);
    while f.len() > dm {
        let df = f.len() - 1;
        let c = f[df] % p;
        if c != 0 {
            let scale = c * lead_inv % p;
            for (j, &mj) in m.iter().enumerate() {
                let idx = df - dm + j;
                f[idx] = (f[idx] + p - scale * mj % p) % p;
            }
        }
        f.pop();
        poly_trim(&mut f);
    }
    f
}

fn poly_powmod(p: u64, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut b = poly_rem(p, base.to_vec(), m);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(p, &acc, &b, m);
        }
        b = poly_mulmod(p, &b, &b, m);
        e >>= 1;
    }
    acc
}

/// Degree of gcd(a, b) over F_p.
fn poly_gcd_deg(p: u64, a: &[u64], b: &[u64]) -> usize {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !(y.len() == 1 && y[0] == 0) {
        let r = poly_rem(p, x.clone(), &y);
        x = y;
        y = r;
    }
    x.len() - 1
}

/// A unit group realized inside a concrete `F_{p^k}`.
///
/// The field degree is minimal with `N | p^k - 1` and `ζ_N` maps to a verified
/// element of order exactly `N`; free generators are supplied per call.
#[derive(Debug, Clone)]
pub struct Realization {
    group: UnitGroup,
    field: FiniteField,
    zeta: Element,
}

impl Realization {
    pub fn new(group: UnitGroup) -> Result<Self, FieldError> {
        let k = minimal_extension_degree(group.p(), group.torsion())?;
        let field = FiniteField::new(group.p(), k);
        let zeta = field.element_of_order(group.torsion());
        Ok(Realization { group, field, zeta })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn zeta(&self) -> &Element {
        &self.zeta
    }

    /// Maps a unit to its field value under `ζ_N ↦ zeta`, `t_i ↦ free[i]`.
    pub fn realize(&self, u: &Unit, free: &[Element]) -> Result<Element, FieldError> {
        if free.len() != self.group.free_rank() {
            return Err(FieldError::BadAssignment {
                got: free.len(),
                want: self.group.free_rank(),
            });
        }
        if free.iter().any(|e| self.field.is_zero(e)) {
            return Err(FieldError::ZeroAssignment);
        }
        let mut acc = self.field.pow(&self.zeta, u.torsion_exp());
        for (gen, &e) in free.iter().zip(u.free_exp()) {
            acc = self.field.mul(&acc, &self.field.pow_signed(gen, e));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_degrees() {
        assert_eq!(minimal_extension_degree(3, 7).unwrap(), 6); // 7 | 3^6 - 1 = 728
        assert_eq!(minimal_extension_degree(5, 24).unwrap(), 2); // 24 | 5^2 - 1
        assert_eq!(minimal_extension_degree(2, 1).unwrap(), 1);
        assert!(minimal_extension_degree(3, 6).is_err());
    }

    #[test]
    fn field_arithmetic() {
        let f = FiniteField::new(3, 2);
        // Frobenius fixes exactly F_p.
        let fixed = f.elements().filter(|a| f.pow(a, 3) == *a).count();
        assert_eq!(fixed, 3);
        for a in f.elements() {
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
                assert_eq!(f.pow(&a, f.size() - 1), f.one());
            }
        }
    }

    #[test]
    fn modulus_is_deterministic_and_irreducible() {
        let f1 = FiniteField::new(2, 4);
        let f2 = FiniteField::new(2, 4);
        assert_eq!(f1.modulus(), f2.modulus());
        // No factors of degree 1 or 2: brute-force division check.
        let m = f1.modulus().to_vec();
        for a in 0..2u64 {
            let q = vec![a, 1];
            assert_ne!(poly_rem(2, m.clone(), &q), vec![0]);
            for b in 0..2u64 {
                let q = vec![a, b, 1];
                assert_ne!(poly_rem(2, m.clone(), &q), vec![0]);
            }
        }
    }

    #[test]
    fn realize_basics() {
        // p=2, N=1: the unit 1 realizes to 1 in F_2.
        let g = UnitGroup::new(2, 1, 0).unwrap();
        let r = Realization::new(g).unwrap();
        assert_eq!(r.realize(&g.one(), &[]).unwrap(), r.field().one());

        // p=5, N=24: zeta has verified order 24 in F_25.
        let g = UnitGroup::new(5, 24, 0).unwrap();
        let r = Realization::new(g).unwrap();
        assert_eq!(r.field().degree(), 2);
        assert_eq!(r.field().element_order(r.zeta()), 24);
    }

    #[test]
    fn realize_is_homomorphism() {
        let g = UnitGroup::new(3, 8, 1).unwrap();
        let r = Realization::new(g).unwrap();
        let t = r.field().element_of_order(r.field().size() - 1);
        let us = [
            g.unit(&[2], 3),
            g.unit(&[-1], 5),
            g.unit(&[0], 7),
            g.unit(&[3], 0),
        ];
        for u in &us {
            for v in &us {
                let lhs = r
                    .realize(&u.checked_mul(v).unwrap(), std::slice::from_ref(&t))
                    .unwrap();
                let rhs = r.field().mul(
                    &r.realize(u, std::slice::from_ref(&t)).unwrap(),
                    &r.realize(v, std::slice::from_ref(&t)).unwrap(),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn order_agrees_with_field() {
        // ζ_14^7 = -1 has order 2; cross-check in F_{3^6}.
        let g = UnitGroup::new(3, 14, 0).unwrap();
        let u = g.zeta().pow(7);
        assert_eq!(u.order(), crate::units::Order::Finite(2));
        let r = Realization::new(g).unwrap();
        assert_eq!(r.field().degree(), 6);
        let val = r.realize(&u, &[]).unwrap();
        assert_eq!(r.field().element_order(&val), 2);
    }

    #[test]
    fn generic_qnum_nonzero_in_field() {
        // (n)_t is nonzero for generic t: realize t as a high-order root
        // (the group embeds in F_{3^6}, whose units have order 728).
        let g = UnitGroup::new(3, 7, 1).unwrap();
        let r = Realization::new(g).unwrap();
        let t_val = r.field().element_of_order(r.field().size() - 1);
        assert!(r.field().element_order(&t_val) > 30);
        let t = g.free_gen(0);
        for n in 1..=30u64 {
            assert!(!t.qnum_is_zero(n));
            let val = r.realize(&t, std::slice::from_ref(&t_val)).unwrap();
            assert!(!r.field().is_zero(&r.field().qnum(&val, n)));
        }
    }
}
