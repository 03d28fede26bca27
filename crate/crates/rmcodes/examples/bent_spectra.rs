//! Hadamard spectra of Boolean functions, bent functions, and the rank law
//! that turns a symplectic matrix into a coset weight distribution.
//!
//! ```bash
//! cargo run --example bent_spectra
//! ```

use rmcodes::boolfn::{coset_weight_distribution_by_rank, BooleanFunction};

fn main() {
    // v1 v2 on two variables: the smallest bent function
    let f = BooleanFunction::from_fn(2, |u| u == 3);
    println!(
        "f = v1 v2 (m=2), spectrum {:?}",
        f.hadamard_transform().values()
    );
    println!("bent: {}", f.is_bent().unwrap());

    // v1 v2 + v3 v4: bent on four variables
    let g = BooleanFunction::from_fn(4, |u| {
        ((u & 1 == 1) && (u >> 1 & 1 == 1)) ^ ((u >> 2 & 1 == 1) && (u >> 3 & 1 == 1))
    });
    println!("\ng = v1 v2 + v3 v4 (m=4)");
    println!("spectrum {:?}", g.hadamard_transform().values());
    println!("bent: {}", g.is_bent().unwrap());

    let b = g.polarize().unwrap();
    println!("symplectic matrix (rank {}):", b.rank());
    print!("{b}");
    let dist = coset_weight_distribution_by_rank(&b).unwrap();
    println!("coset g + R(1,4) weight distribution from the rank alone:");
    print!("{dist}");

    // a rank-2 quadratic: spectrum has zeros, coset reaches weight 4
    let h = BooleanFunction::from_fn(4, |u| (u & 1 == 1) && (u >> 1 & 1 == 1));
    let bh = h.polarize().unwrap();
    println!("\nh = v1 v2 (m=4), rank {} matrix", bh.rank());
    println!("bent: {}", h.is_bent().unwrap());
    let dist = coset_weight_distribution_by_rank(&bh).unwrap();
    println!("coset h + R(1,4) weight distribution:");
    print!("{dist}");

    // Parseval holds for every function
    let s = h.hadamard_transform();
    let energy: i64 = s.values().iter().map(|v| v * v).sum();
    println!(
        "\nParseval check: sum of squares = {energy} = 2^(2m) = {}",
        1 << 8
    );
}
