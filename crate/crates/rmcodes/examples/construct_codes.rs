//! Build the basic code families and print their parameters and weight
//! distributions.
//!
//! ```bash
//! cargo run --example construct_codes
//! ```

use rmcodes::rm;
use rmcodes::LinearCode;

fn describe(name: &str, code: &LinearCode) {
    let dist = code.weight_distribution().unwrap();
    let d_min = dist.min_nonzero_weight().unwrap();
    println!("{name}: [{}, {}, {}]", code.n(), code.k(), d_min);
    let line: Vec<String> = dist.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    println!("  weights {{{}}}", line.join(", "));
}

fn main() {
    for m in 3..=5 {
        println!("--- m = {m}");
        describe("R(1,m)     ", &rm::rm1(m).unwrap());
        describe("R(2,m)     ", &rm::rm2(m).unwrap());
        describe("orthogonal ", &rm::orthogonal(m).unwrap());
        describe("simplex    ", &rm::simplex(m).unwrap());
    }

    // R(1,m) is self-complementary; the simplex code is not
    let rm1 = rm::rm1(4).unwrap();
    let simplex = rm::simplex(4).unwrap();
    println!(
        "\nR(1,4) contains the all-one word: {}",
        rm1.contains_all_one()
    );
    println!(
        "simplex(4) contains the all-one word: {}",
        simplex.contains_all_one()
    );
}
