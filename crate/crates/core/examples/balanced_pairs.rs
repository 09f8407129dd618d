//! Splits height-balanced Dyck paths into pairs whose heights differ by at
//! most one, and joins them back.
//!
//!     cargo run --example balanced_pairs -- UUDUUDDDUD

use supercat::bijections::{balanced_pair_count, join_balanced, split_balanced};
use supercat::DyckPath;

fn show(p: &DyckPath) -> String {
    if p.is_empty() {
        "(empty)".into()
    } else {
        p.render()
    }
}

fn main() {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let words = if words.is_empty() {
        vec!["UUDUUDDDUD".to_string(), "UDUDUD".to_string()]
    } else {
        words
    };
    for word in words {
        let path = DyckPath::parse(&word).unwrap();
        match split_balanced(&path) {
            Ok(image) => {
                for pair in image.pairs() {
                    assert_eq!(join_balanced(&pair).unwrap(), path);
                    println!("{path} -> ({}, {})", show(&pair.first), show(&pair.second));
                }
            }
            Err(e) => println!("{path}: {e}"),
        }
    }
    for n in 1..=8 {
        println!("pairs of total semilength {n}: {}", balanced_pair_count(n));
    }
}
