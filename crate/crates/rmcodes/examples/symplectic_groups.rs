//! Extract the additive group of full-rank symplectic matrices from the
//! d = m/2 sub-code: 2^(m/2) matrices, closed under XOR, every nonzero one of
//! full rank.
//!
//! ```bash
//! cargo run --example symplectic_groups
//! ```

use rmcodes::gf2m::FieldTable;
use rmcodes::rm;

fn main() {
    for m in [2u32, 4, 6, 8] {
        let field = FieldTable::new(m).unwrap();
        let group = rm::symplectic_group(m, &field).unwrap();
        let full_rank = group
            .elements()
            .iter()
            .filter(|b| b.rank() == m as usize)
            .count();
        println!(
            "m = {m}: {} matrices, {} of full rank, XOR-closed: {}",
            group.len(),
            full_rank,
            group.is_xor_closed()
        );
    }

    println!("\nthe three nonzero elements for m = 4:");
    let field = FieldTable::new(4).unwrap();
    let group = rm::symplectic_group(4, &field).unwrap();
    for b in group.elements().iter().filter(|b| !b.is_zero()) {
        println!("rank {}", b.rank());
        print!("{b}");
    }
}
