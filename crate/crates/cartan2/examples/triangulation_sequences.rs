//! The sequence family behind the finiteness criterion: enumeration from
//! polygon triangulations, the two independent membership routes, and the
//! local window patterns.
//!
//! ```bash
//! cargo run -p cartan2 --example triangulation_sequences
//! ```

use cartan2::sequences::{
    enumerate_aplus, enumerate_triangulations, find_window_pattern, is_aplus_by_matrix,
    is_aplus_by_reduction,
};

fn main() {
    println!("members by length (Catalan numbers):");
    for n in 2..=9 {
        println!("  length {n}: {}", enumerate_aplus(n).unwrap().len());
    }

    println!("\ntriangulations of the pentagon and their vertex sequences:");
    for t in enumerate_triangulations(5) {
        println!("  diagonals {:?} -> {:?}", t.diagonals(), t.to_sequence());
    }

    println!("\nmembership, two ways:");
    for s in [
        vec![0, 0],
        vec![2, 1, 2, 1],
        vec![3, 1, 5, 1, 3, 1, 5, 1, 3, 1, 5, 1],
        vec![2, 2],
        vec![4, 1, 4, 1, 4, 1],
    ] {
        let reduction = is_aplus_by_reduction(&s);
        let matrix = is_aplus_by_matrix(&s);
        assert_eq!(reduction, matrix);
        println!("  {s:?}: member = {reduction}");
    }

    println!("\nevery member of length >= 3 contains a listed window:");
    for m in enumerate_aplus(6).unwrap() {
        let hit = find_window_pattern(&m).unwrap();
        println!(
            "  {:?} contains {:?}{} at position {}",
            m,
            hit.pattern,
            if hit.reversed { " (reversed)" } else { "" },
            hit.position
        );
    }
}
