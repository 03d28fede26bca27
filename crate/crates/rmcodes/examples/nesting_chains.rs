//! The sub-code families are nested: increasing d shrinks the code.
//!
//! ```bash
//! cargo run --example nesting_chains
//! ```

use rmcodes::binlinalg::row_space_subset;
use rmcodes::gf2m::FieldTable;
use rmcodes::rm::{self, SubcodeFamily, SubcodeSpec};

fn main() {
    for m in [4u32, 5, 6, 7, 8] {
        let field = FieldTable::new(m).unwrap();
        let families: &[SubcodeFamily] = if m % 2 == 0 {
            &[SubcodeFamily::Even]
        } else {
            &[SubcodeFamily::OddFirst, SubcodeFamily::OddSecond]
        };
        let d_max = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
        for &family in families {
            let codes: Vec<_> = (1..=d_max)
                .map(|d| {
                    let spec = SubcodeSpec::new(m, d, family).unwrap();
                    rm::subcode(&spec, &field).unwrap()
                })
                .collect();
            let mut chain = Vec::new();
            for (i, code) in codes.iter().enumerate() {
                chain.push(format!("[{}, {}] (d={})", code.n(), code.k(), i + 1));
            }
            for pair in codes.windows(2) {
                assert!(row_space_subset(pair[1].generator(), pair[0].generator()));
            }
            println!(
                "m = {m} {:<10}: {}",
                family.name(),
                chain
                    .iter()
                    .rev()
                    .cloned()
                    .collect::<Vec<_>>()
                    .join("  inside  ")
            );
        }
        assert!(rm::check_nesting(m).unwrap());
    }
    println!("\nall containment chains verified by row-space reduction");
}
