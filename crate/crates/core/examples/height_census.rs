//! Dyck paths whose height after the last level-one point exceeds the
//! height before it by at most two, counted against T(2, n).
//!
//!     cargo run --release --example height_census

use supercat::bijections::{height_balanced_census, height_balanced_paths};
use supercat::numbers::super_catalan;

fn main() {
    for path in height_balanced_paths(3).unwrap() {
        let mk = path.markers().unwrap();
        println!(
            "{path}  X={} R={} before={} after={}",
            mk.last_level_one, mk.rightmost_max, mk.height_before, mk.height_after
        );
    }
    for n in 1..=10 {
        let census = height_balanced_census(n).unwrap();
        println!(
            "n={n}: {census} (T(2,{n}) = {})",
            super_catalan(2, n as u64).unwrap()
        );
    }
}
