//! Signed 2-Motzkin counts P - N against T(m, n) for small m + n.
//!
//!     cargo run --release --example signed_motzkin_count -- 12

use supercat::bijections::signed_count_row;
use supercat::numbers::super_catalan;

fn main() {
    let max_sum: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max m+n"))
        .unwrap_or(8);
    println!("m\tn\tP\tN\tT");
    for sum in 2..=max_sum {
        // one walk over M_{sum-2} serves every split m + n = sum
        for (m, counts) in (1..sum).zip(signed_count_row(sum - 2)) {
            let n = sum - m;
            let t = super_catalan(m as u64, n as u64).unwrap();
            assert_eq!(counts.difference(), t);
            println!("{m}\t{n}\t{}\t{}\t{t}", counts.positive, counts.negative);
        }
    }
}
