//! Exact decision procedures for rank-2 Weyl groupoids of diagonal braidings
//! over fields of positive characteristic.
//!
//! A two-dimensional braided vector space of diagonal type is described by its
//! Dynkin diagram: vertex labels `q11`, `q22` and edge label `q0 = q12·q21`,
//! all nonzero scalars of a field of characteristic `p > 0`. This crate
//! decides, in exact arithmetic, whether the braiding's root system is finite
//! (equivalently, whether its Weyl groupoid is finite), and reproduces the
//! full classification of such braidings by exhaustive search.
//!
//! The main pieces:
//!
//! * [`units`] — scalars as elements of `Z^r ⊕ Z/N` with decidable order,
//!   quantum-integer vanishing, and monomial identities; no field arithmetic
//!   on the decision path.
//! * [`fq`] — concrete `F_{p^k}` realizations, used only as a test oracle.
//! * [`diagram`] — rank-2 diagrams and their generalized Cartan matrices.
//! * [`reflection`] — the reflection operators and orbit (exchange graph)
//!   closure.
//! * [`sequences`] — the triangulation-sequence calculus underpinning the
//!   finiteness criterion.
//! * [`finiteness`] — characteristic sequences, root sequences, the finiteness
//!   verdict, and a brute-force Weyl-groupoid root oracle.
//! * [`tables`] — the embedded classification dataset, row verification, and
//!   exhaustive search.
//!
//! Start with [`finiteness::decide_finite`]:
//!
//! ```
//! use cartan2::units::UnitGroup;
//! use cartan2::diagram::Rank2Diagram;
//! use cartan2::finiteness::{decide_finite, FinitenessVerdict};
//! use cartan2::reflection::DEFAULT_ORBIT_CAP;
//!
//! // p = 3, ζ a primitive 7th root of unity: the diagram (-ζ; -ζ^{-3}; -1).
//! let group = UnitGroup::new(3, 14, 0).unwrap();
//! let zeta = group.zeta().pow(2);
//! let minus = group.minus_one().unwrap();
//! let d = Rank2Diagram::new(
//!     zeta.checked_mul(&minus).unwrap(),
//!     minus.clone(),
//!     zeta.pow(-3).checked_mul(&minus).unwrap(),
//! ).unwrap();
//!
//! match decide_finite(&d, DEFAULT_ORBIT_CAP) {
//!     FinitenessVerdict::Finite { n, l, roots, .. } => {
//!         assert_eq!((n, l, roots), (2, 2, 12));
//!     }
//!     v => panic!("unexpected verdict {v:?}"),
//! }
//! ```
//!
//! The runnable examples under `examples/` walk through each capability; the
//! `cartan2` binary exposes them as subcommands (`classify`, `orbit`,
//! `aplus`, `search`, `verify-tables`).

mod arith;

pub mod diagram;
pub mod finiteness;
pub mod fq;
pub mod reflection;
pub mod sequences;
pub mod tables;
pub mod units;

pub use diagram::{cartan_entry, CartanMatrix2, Label, NotIFinite, Rank2Diagram};
pub use finiteness::{decide_finite, FinitenessVerdict, Root2};
pub use reflection::{orbit, reflect, OrbitGraph, DEFAULT_ORBIT_CAP};
pub use units::{Order, Unit, UnitGroup};
