//! Streams Dyck, 2-Motzkin and ballot paths in lexicographic order.
//!
//!     cargo run --example dyck_enumeration

use supercat::enumerate::{enum_ballot, enum_dyck, enum_motzkin2, PathFamily};

fn main() {
    println!("D_3:");
    for path in enum_dyck(3) {
        println!("  {path}  height {}", path.height());
    }
    println!("M_2:");
    for path in enum_motzkin2(2) {
        println!("  {path}");
    }
    println!("ballot paths to (5, 1):");
    for path in enum_ballot(3, 1).unwrap() {
        println!("  {path}");
    }
    for n in [8, 10, 12] {
        let family = PathFamily::Dyck(n);
        println!(
            "|D_{n}| = {} (C_{n} = {})",
            family.count().unwrap(),
            family.expected_count().unwrap()
        );
    }
}
