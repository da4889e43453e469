//! Decide finiteness for a few rank-2 diagrams.
//!
//! ```bash
//! cargo run -p cartan2 --example classify_diagram
//! ```

use cartan2::diagram::Rank2Diagram;
use cartan2::finiteness::FinitenessVerdict;
use cartan2::units::UnitGroup;
use cartan2::{decide_finite, DEFAULT_ORBIT_CAP};

fn main() {
    // p = 3, ζ a primitive 7th root of unity in F_{3^6}: the diagram
    // (-ζ; -ζ^{-3}; -1) generates a finite root system with 12 positive roots.
    let group = UnitGroup::new(3, 14, 0).unwrap();
    let zeta = group.zeta().pow(2);
    let minus = group.minus_one().unwrap();
    let d = Rank2Diagram::new(
        zeta.checked_mul(&minus).unwrap(),
        minus.clone(),
        zeta.pow(-3).checked_mul(&minus).unwrap(),
    )
    .unwrap();
    report(&d);

    // The same shape at p = 13 with ζ of order 3 fails: l = 20 - 2p < 0.
    let group = UnitGroup::new(13, 6, 0).unwrap();
    let zeta = group.zeta().pow(2);
    let minus = group.minus_one().unwrap();
    let d = Rank2Diagram::new(
        zeta.clone(),
        minus.clone(),
        zeta.inv().checked_mul(&minus).unwrap(),
    )
    .unwrap();
    report(&d);

    // Disconnected diagrams (edge label 1) are always finite with two roots.
    let group = UnitGroup::new(7, 5, 0).unwrap();
    let d = Rank2Diagram::new(group.zeta(), group.zeta().pow(3), group.one()).unwrap();
    report(&d);
}

fn report(d: &Rank2Diagram) {
    let g = d.group();
    println!("diagram {d}  (p={}, N={})", g.p(), g.torsion());
    match decide_finite(d, DEFAULT_ORBIT_CAP) {
        FinitenessVerdict::Finite {
            n,
            l,
            roots,
            sequence,
            positive_roots,
        } => {
            println!("  finite: n={n}, l={l}, {roots} positive roots");
            println!("  window: {sequence:?}");
            println!(
                "  roots:  {:?}",
                positive_roots
                    .iter()
                    .map(|r| (r.0, r.1))
                    .collect::<Vec<_>>()
            );
        }
        FinitenessVerdict::Infinite { reason, n, l } => {
            println!("  infinite ({reason:?}), n={n}, l={l}");
        }
        other => println!("  {other:?}"),
    }
    println!();
}
