//! Exhaustively scan all torsion diagrams of small moduli against the
//! built-in classification dataset.
//!
//! Every diagram that decides finite must match a dataset row, and every row
//! instance representable over the scanned modulus must be found finite.
//!
//! ```bash
//! cargo run --release -p cartan2 --example classification_search
//! ```

use cartan2::reflection::DEFAULT_ORBIT_CAP;
use cartan2::tables::{acceptance_orders, search};

fn main() {
    let p = 2;
    let orders = acceptance_orders(p);
    println!("characteristic {p}, scanning moduli {orders:?}\n");
    let reports = search(p, &orders, DEFAULT_ORBIT_CAP).unwrap();
    for report in &reports {
        println!("{}", report.summary());
    }
    let clean = reports.iter().all(|r| r.is_clean());
    println!("\nsearch agrees with the dataset: {clean}");

    // Row attributions for the largest batch.
    let last = reports.last().unwrap();
    println!("\nfinite diagrams over μ_{}:", last.torsion);
    for entry in &last.finite {
        println!(
            "  {}  -> row {:>3}  (n={}, l={}, {} roots)",
            entry.diagram,
            entry.row.as_deref().unwrap_or("?"),
            entry.n,
            entry.l,
            entry.roots
        );
    }
}
