//! Two independent routes to the same weight distribution: a Gray-code walk
//! over all codewords, and the coset-rank law that reads the distribution off
//! the symplectic matrices of the R(1,m)-cosets.
//!
//! ```bash
//! cargo run --example weight_methods
//! ```

use std::time::Instant;

use rmcodes::gf2m::FieldTable;
use rmcodes::rm::{self, SubcodeFamily, SubcodeSpec};

fn main() {
    let field = FieldTable::new(6).unwrap();
    let spec = SubcodeSpec::new(6, 2, SubcodeFamily::Even).unwrap();
    let code = rm::subcode(&spec, &field).unwrap();
    println!("sub-code m=6 d=2: [{}, {}]", code.n(), code.k());

    let t0 = Instant::now();
    let brute = code.weight_distribution().unwrap().clone();
    let t_brute = t0.elapsed();

    let t0 = Instant::now();
    let by_cosets = rm::weight_distribution_by_cosets(&code, 6).unwrap();
    let t_cosets = t0.elapsed();

    println!(
        "enumeration ({} codewords): {t_brute:.2?}",
        1u64 << code.k()
    );
    println!(
        "coset-rank ({} cosets):      {t_cosets:.2?}",
        1u64 << (code.k() - 7)
    );
    assert_eq!(brute, by_cosets);
    println!("\nweight,count (identical for both methods)");
    print!("{by_cosets}");

    // the big [256, 29] code is out of comfortable enumeration range;
    // the coset method stays fast
    let field = FieldTable::new(8).unwrap();
    let spec = SubcodeSpec::new(8, 2, SubcodeFamily::Even).unwrap();
    let code = rm::subcode(&spec, &field).unwrap();
    let t0 = Instant::now();
    let d_min = rm::minimum_distance_by_cosets(&code, 8).unwrap();
    println!(
        "\n[{}, {}] minimum distance {d_min} via {} cosets in {:.2?}",
        code.n(),
        code.k(),
        1u64 << (code.k() - 9),
        t0.elapsed()
    );
}
