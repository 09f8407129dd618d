//! The doubling map from 2-Motzkin paths to Dyck paths and the mod-4
//! level rule that carries the sign.
//!
//!     cargo run --example motzkin_dyck_bijection -- SUWD 2

use supercat::bijections::{dyck_to_motzkin, motzkin_to_dyck, weight};
use supercat::TwoMotzkinPath;

fn main() {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "USDW".into());
    let m: usize = args.next().map(|s| s.parse().unwrap()).unwrap_or(2);

    let path = TwoMotzkinPath::parse(&word).unwrap();
    let dyck = motzkin_to_dyck(&path).unwrap();
    println!("{path} -> {dyck}");
    assert_eq!(dyck_to_motzkin(&dyck).unwrap(), path);

    let n = path.len() + 2 - m;
    let lifted = dyck.levels()[2 * m - 1];
    println!(
        "m={m}, n={n}: weight {:+}, Dyck level at {} is {lifted} ({} mod 4)",
        weight(&path, m).unwrap(),
        2 * m - 1,
        lifted % 4
    );
}
