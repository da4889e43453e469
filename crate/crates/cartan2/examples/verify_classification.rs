//! Re-derive the dataset's exchange-graph data from the decision procedure.
//!
//! For every row valid at the chosen characteristic, instantiate its
//! parameters, close the first diagram under reflections, and compare the
//! computed period, the number l, the accepted window, and the full point set
//! against the stored columns.
//!
//! ```bash
//! cargo run -p cartan2 --example verify_classification
//! ```

use cartan2::finiteness::FinitenessVerdict;
use cartan2::tables::{default_assignments, rows_for, verify_row};

fn main() {
    let p = 5;
    println!("characteristic {p}\n");
    println!(
        "{:>5} {:>7} {:>3} {:>3} {:>6}  window",
        "row", "points", "n", "l", "roots"
    );
    for row in rows_for(p) {
        let assignment = &default_assignments(row, p)[0];
        let report = verify_row(row, p, assignment).unwrap();
        assert!(report.ok(), "row {}: {:?}", row.id, report.mismatches);
        let FinitenessVerdict::Finite {
            n,
            l,
            roots,
            sequence,
            ..
        } = &report.verdict
        else {
            unreachable!("verified rows are finite");
        };
        println!(
            "{:>5} {:>7} {:>3} {:>3} {:>6}  {:?}",
            row.id,
            row.points.len(),
            n,
            l,
            roots,
            sequence
        );
    }
    println!("\nall rows verified");
}
