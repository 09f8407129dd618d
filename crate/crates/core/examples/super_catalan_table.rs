//! Prints T(m, n) for 0 <= m, n <= 6, then one large value.
//!
//!     cargo run --example super_catalan_table

use supercat::numbers::super_catalan;
use supercat::table::{Table, TableKind};

fn main() {
    let (table, warnings) = Table::build(TableKind::T, 6, 6);
    for w in &warnings {
        eprintln!("{w}");
    }
    print!("{}", table.to_tsv());

    let big = super_catalan(200, 150).unwrap();
    println!("T(200,150) has {} decimal digits", big.to_string().len());
}
