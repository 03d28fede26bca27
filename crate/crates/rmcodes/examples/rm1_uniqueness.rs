//! The uniqueness verifier: any [2^m, 1+m, 2^(m-1)] code is a column
//! permutation of R(1,m), and the verifier produces the certificate.
//!
//! ```bash
//! cargo run --example rm1_uniqueness
//! ```

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use rmcodes::codes::Verdict;
use rmcodes::rm;

fn main() {
    let mut rng = StdRng::seed_from_u64(7);
    let m = 4;
    let canonical = rm::rm1(m).unwrap();

    // scramble the coordinates
    let mut perm: Vec<usize> = (0..canonical.n()).collect();
    perm.shuffle(&mut rng);
    let scrambled = canonical.permuted_columns(&perm);
    println!("scrambled R(1,{m}) with column permutation {perm:?}");

    let cert = scrambled.verify_first_order_rm();
    assert!(cert.is_accept());
    println!("verifier: accept");
    println!("recovered permutation:   {:?}", cert.column_permutation);

    let mapped = cert.apply(scrambled.generator()).unwrap();
    assert_eq!(&mapped, canonical.generator());
    println!("certificate maps the scrambled generator back onto the canonical one:");
    print!("{mapped}");

    // a wrong code is rejected with a reason
    let simplex = rm::simplex(m).unwrap();
    match simplex.verify_first_order_rm().verdict {
        Verdict::Reject(reason) => println!("\nsimplex({m}) rejected: {reason}"),
        Verdict::Accept => unreachable!(),
    }
    let rm2 = rm::rm2(m).unwrap();
    match rm2.verify_first_order_rm().verdict {
        Verdict::Reject(reason) => println!("R(2,{m}) rejected: {reason}"),
        Verdict::Accept => unreachable!(),
    }
}
