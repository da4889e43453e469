//! Close a diagram under both reflections and print its exchange graph.
//!
//! The example uses the ten-point cycle arising at p = 5 from ζ of order 12,
//! emitting Graphviz DOT plus the characteristic sequence read along the
//! alternating reflection walk.
//!
//! ```bash
//! cargo run -p cartan2 --example orbit_exchange_graph | dot -Tsvg > orbit.svg
//! ```

use cartan2::diagram::Rank2Diagram;
use cartan2::finiteness::characteristic_sequence;
use cartan2::reflection::{orbit, DEFAULT_ORBIT_CAP};
use cartan2::units::UnitGroup;
use cartan2::Label;

fn main() {
    let group = UnitGroup::new(5, 12, 0).unwrap();
    let zeta = group.zeta();
    let minus = group.minus_one().unwrap();
    // (-ζ^2; ζ; -1)
    let d = Rank2Diagram::new(
        zeta.pow(2).checked_mul(&minus).unwrap(),
        minus.clone(),
        zeta.clone(),
    )
    .unwrap();

    let graph = orbit(&d, DEFAULT_ORBIT_CAP).unwrap();
    eprintln!("orbit of {d}: {} points", graph.len());
    for (i, point) in graph.points().iter().enumerate() {
        let a = graph.cartan(i);
        eprintln!("  point {i}: {point}   a12={} a21={}", a.a12(), a.a21());
    }
    let cs = characteristic_sequence(&graph, Label::One);
    eprintln!("double-reflection period n = {}", cs.n());
    eprintln!("characteristic entries     = {:?}", cs.entries());

    // DOT goes to stdout so it can be piped straight into graphviz.
    print!("{}", graph.to_dot());
}
