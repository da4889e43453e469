//! Diagrams with generic (non-root-of-unity) labels.
//!
//! Free generators of the unit group model multiplicatively independent
//! scalars that satisfy no root-of-unity relation. A braiding can have a
//! finite Weyl groupoid while its Nichols algebra is infinite-dimensional:
//! finite dimension additionally requires every orbit label to be a root of
//! unity.
//!
//! ```bash
//! cargo run -p cartan2 --example generic_parameters
//! ```

use cartan2::diagram::Rank2Diagram;
use cartan2::finiteness::FinitenessVerdict;
use cartan2::reflection::orbit;
use cartan2::tables::is_finite_dimensional;
use cartan2::units::UnitGroup;
use cartan2::{decide_finite, DEFAULT_ORBIT_CAP};

fn main() {
    // One generic scalar q over p = 3: the Cartan-type chain (q; q^{-1}; q).
    let group = UnitGroup::new(3, 1, 1).unwrap();
    let q = group.free_gen(0);
    let d = Rank2Diagram::new(q.clone(), q.clone(), q.inv()).unwrap();
    show(&d);

    // (q; q^{-2}; -1) needs the torsion part for -1: group Z ⊕ Z/2.
    let group = UnitGroup::new(5, 2, 1).unwrap();
    let q = group.free_gen(0);
    let minus = group.minus_one().unwrap();
    let d = Rank2Diagram::new(q.clone(), minus, q.pow(-2)).unwrap();
    show(&d);

    // Two independent generic scalars with a trivial edge: finite groupoid,
    // two positive roots, infinite dimension.
    let group = UnitGroup::new(7, 1, 2).unwrap();
    let d = Rank2Diagram::new(group.free_gen(0), group.free_gen(1), group.one()).unwrap();
    show(&d);

    // Independent generics on an edge admit no reflection at all.
    let group = UnitGroup::new(5, 1, 2).unwrap();
    let d = Rank2Diagram::new(group.free_gen(0), group.free_gen(1), group.free_gen(1)).unwrap();
    show(&d);
}

fn show(d: &Rank2Diagram) {
    println!("diagram {d}  (free rank {})", d.group().free_rank());
    match decide_finite(d, DEFAULT_ORBIT_CAP) {
        FinitenessVerdict::Finite { n, l, roots, .. } => {
            let points = orbit(d, DEFAULT_ORBIT_CAP).unwrap().len();
            println!(
                "  Weyl groupoid: finite (n={n}, l={l}, {roots} roots, {points} orbit points)"
            );
            println!(
                "  Nichols algebra finite-dimensional: {}",
                is_finite_dimensional(d, DEFAULT_ORBIT_CAP)
            );
        }
        other => println!("  verdict: {other:?}"),
    }
    println!();
}
