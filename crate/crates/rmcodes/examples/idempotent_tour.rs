//! The cyclic machinery behind the sub-code constructions: cyclotomic cosets,
//! primitive idempotents, their evaluation property, and the punctured R(2,m)
//! code assembled from them.
//!
//! ```bash
//! cargo run --example idempotent_tour
//! ```

use rmcodes::cyclic::{
    all_cyclotomic_cosets, cyclic_code_from_idempotent, gcd_power_formula,
    primitive_idempotent_star, RingPolynomial,
};
use rmcodes::gf2m::{FieldElement, FieldTable};
use rmcodes::rm;

fn main() {
    let m = 4u32;
    let field = FieldTable::new(m).unwrap();
    let n = field.n() as u64;

    println!("cyclotomic cosets mod {n}:");
    for c in all_cyclotomic_cosets(n) {
        println!(
            "  C_{} = {:?} (size {})",
            c.representative(),
            c.members(),
            c.len()
        );
    }

    println!("\ngcd(2^m - 1, 2^i + 1) by the closed form:");
    for mm in [5u32, 6] {
        for i in 1..=mm / 2 {
            println!("  gcd(2^{mm}-1, 2^{i}+1) = {}", gcd_power_formula(mm, i));
        }
    }

    // theta_1^* evaluates to 1 exactly on C_{-1}
    let theta = primitive_idempotent_star(1, &field);
    println!("\ntheta_1^* = {}", theta.coeffs());
    let ones: Vec<u64> = (0..n)
        .filter(|&j| theta.eval(&field, field.alpha_pow(j)) == FieldElement::ONE)
        .collect();
    println!("evaluates to 1 at alpha^j for j in {ones:?}");
    assert!(theta.is_idempotent());

    // the punctured second order Reed-Muller code from its idempotent:
    // theta_0 + theta_1^* + theta_3^* + theta_5^* for m = 4
    let mut e = RingPolynomial::zero(n as usize);
    for s in [0u64, 1, 3, 5] {
        e = e.add(&primitive_idempotent_star(s, &field));
    }
    let punctured = cyclic_code_from_idempotent(&e, &field).unwrap();
    println!(
        "\npunctured R(2,{m}) from idempotents: [{}, {}]",
        punctured.n(),
        punctured.k()
    );

    // extend + glue into Boolean point order: exactly R(2,m)
    let glued = punctured
        .extend_parity()
        .permuted_columns(&rm::boolean_order_permutation(&field));
    let rm2 = rm::rm2(m).unwrap();
    assert_eq!(glued.k(), rm2.k());
    assert!(rmcodes::binlinalg::row_space_subset(
        glued.generator(),
        rm2.generator()
    ));
    println!("extended + permuted into point order: equals R(2,{m}) as a code");
}
