//! Cross-check the exact unit arithmetic against a concrete finite field.
//!
//! The decision path never evaluates scalars in a field; this example builds
//! the realization oracle and confirms that quantum-integer vanishing and
//! Cartan entries agree with direct evaluation in F_{p^k}.
//!
//! ```bash
//! cargo run -p cartan2 --example finite_field_oracle
//! ```

use cartan2::diagram::cartan_entry;
use cartan2::fq::{minimal_extension_degree, Realization};
use cartan2::units::UnitGroup;

fn main() {
    // Hosting the 7th roots of unity over F_3 needs F_{3^6} (7 | 3^6 - 1).
    let group = UnitGroup::new(3, 7, 0).unwrap();
    println!(
        "p = 3, N = 7: minimal extension degree k = {}",
        minimal_extension_degree(3, 7).unwrap()
    );
    let realization = Realization::new(group).unwrap();
    let field = realization.field();
    println!(
        "field size {}, modulus coefficients {:?}",
        field.size(),
        field.modulus()
    );
    println!(
        "zeta realizes with multiplicative order {}",
        field.element_order(realization.zeta())
    );

    println!("\nquantum integers (k)_u, exact vs field:");
    for u in group.torsion_units() {
        let value = realization.realize(&u, &[]).unwrap();
        for k in 0..=14u64 {
            let exact = u.qnum_is_zero(k);
            let concrete = field.is_zero(&field.qnum(&value, k));
            assert_eq!(exact, concrete);
        }
        let zeros: Vec<u64> = (0..=14).filter(|&k| u.qnum_is_zero(k)).collect();
        println!("  u = {u}: (k)_u = 0 for k in {zeros:?}");
    }

    // Cartan entries from exponents match the field search for the minimal m
    // with (m+1)_{q11}·(q11^m·q0 - 1) = 0.
    println!("\nCartan entries, exact vs field:");
    let group = UnitGroup::new(5, 12, 0).unwrap();
    let realization = Realization::new(group).unwrap();
    let field = realization.field();
    for (e11, e0) in [(1i64, 3i64), (6, 1), (0, 2), (4, 4)] {
        let q11 = group.unit(&[], e11);
        let q0 = group.unit(&[], e0);
        let exact = cartan_entry(&q11, &q0, 5).unwrap();
        let v11 = realization.realize(&q11, &[]).unwrap();
        let v0 = realization.realize(&q0, &[]).unwrap();
        let m = (0..64)
            .find(|&m| {
                let qn = field.qnum(&v11, m + 1);
                let pw = field.sub(&field.mul(&field.pow(&v11, m), &v0), &field.one());
                field.is_zero(&field.mul(&qn, &pw))
            })
            .unwrap();
        assert_eq!(exact, -(m as i64));
        println!("  q11 = {q11}, q0 = {q0}: a12 = {exact}");
    }
}
