//! Writes an SVG drawing of a path, with markers when it is a Dyck path.
//!
//!     cargo run --example render_svg -- UUDUUDDD out.svg

use supercat::paths::{LatticePath, MotzkinStep};
use supercat::render::{render_svg, RenderOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let word = args.next().unwrap_or_else(|| "UUDUDD".into());
    let out = args.next().unwrap_or_else(|| "path.svg".into());

    let path = LatticePath::<MotzkinStep>::parse(&word).unwrap();
    let options = RenderOptions {
        markers: path.to_dyck_steps().is_some() && !path.is_empty(),
        ..RenderOptions::default()
    };
    let svg = render_svg(&path, &options).unwrap();
    std::fs::write(&out, svg).unwrap();
    println!("wrote {out}");
}
