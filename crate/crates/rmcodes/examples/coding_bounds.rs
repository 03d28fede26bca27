//! The coding bounds in exact integer arithmetic, and the optimality of the
//! self-complementary [2^m, 1+3m/2, 2^(m-1)-2^(m/2-1)] codes.
//!
//! ```bash
//! cargo run --example coding_bounds
//! ```

use rmcodes::bounds::{self, PlotkinBound};

fn main() {
    println!("Plotkin, applicable when 2d > n:");
    for (n, d) in [(7u64, 5u64), (7, 4), (8, 4), (15, 8), (15, 9)] {
        match bounds::plotkin_max(n, d) {
            PlotkinBound::Max(max) => println!("  (n={n}, d={d}): at most {max} codewords"),
            PlotkinBound::NotApplicable => println!("  (n={n}, d={d}): not applicable"),
        }
    }

    println!("\nHamming sphere packing:");
    for (n, k, d) in [(7u64, 4u64, 3u64), (7, 5, 3), (23, 12, 7), (15, 11, 3)] {
        let r = bounds::hamming_feasible(n, k, d);
        let label = if r.tight {
            "tight (perfect)"
        } else if r.feasible {
            "feasible"
        } else {
            "infeasible"
        };
        println!("  [{n}, {k}, {d}]: {label}");
    }

    println!("\nGrey-Rankin for self-complementary codes:");
    for (n, d) in [(16u64, 7u64), (16, 6), (64, 29), (256, 97)] {
        match bounds::grey_rankin_max(n, d) {
            Ok(max) => println!("  (n={n}, d={d}): at most {max} codewords"),
            Err(_) => println!("  (n={n}, d={d}): out of validity region"),
        }
    }

    println!("\nminimum-distance optimality of the d = m/2 sub-codes:");
    for m in [4u32, 6, 8, 10, 12] {
        let n = 1u64 << m;
        let k = 1 + 3 * m / 2;
        let d = (1u64 << (m - 1)) - (1u64 << (m / 2 - 1));
        let optimal = bounds::self_complementary_optimality(m).unwrap();
        println!("  [{n}, {k}, {d}] self-complementary: optimal = {optimal}");
    }
}
