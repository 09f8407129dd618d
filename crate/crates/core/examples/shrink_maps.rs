//! Sorts D_4 by how each path starts and applies the matching shrink map.
//!
//!     cargo run --example shrink_maps

use supercat::bijections::{
    classify_start, expand_no_return, expand_return, shrink_no_return, shrink_return_staged,
    StartClass,
};
use supercat::enumerate::enum_dyck;

fn main() {
    for path in enum_dyck(4) {
        let class = classify_start(&path).unwrap();
        match class {
            StartClass::TripleUpNoReturn => {
                let small = shrink_no_return(&path).unwrap();
                assert_eq!(expand_no_return(&small).unwrap(), path);
                println!("{path}  {class:?}  -> {small}");
            }
            StartClass::TripleUpReturn => {
                let staged = shrink_return_staged(&path).unwrap();
                assert_eq!(expand_return(&staged.path).unwrap(), path);
                println!(
                    "{path}  {class:?}  -> ballot {} -> {}",
                    staged.ballot, staged.path
                );
            }
            _ => println!("{path}  {class:?}"),
        }
    }
}
