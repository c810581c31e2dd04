//! Hodge numbers and first-order deformations of linear sections of Gr(2,n).
//!
//!     cargo run --release --example linear_section_hodge [n k]

use grpf::geometry::ModelParams;
use grpf::sections::{h1_tangent_y1, hodge_diamond_y1, DegreeValue};

fn main() -> grpf::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases = match args.as_slice() {
        [n, k, ..] => vec![(*n, *k)],
        _ => vec![(10, 5), (7, 7), (9, 9), (6, 2)],
    };
    for (n, k) in cases {
        let p = ModelParams::new(n, k)?;
        let y = hodge_diamond_y1(&p)?;
        let d = y.diamond.dim();
        let row: Vec<String> = y.diamond.middle_row().iter().map(ToString::to_string).collect();
        println!("Gr(2,{n}) cut by {k} hyperplanes: dimension {d}");
        println!("  h^(p,{d}-p), p = {d}..0: {}", row.join(" "));
        println!(
            "  Euler number {}, chi(Omega^p) = {:?}",
            y.diamond.euler_number(),
            y.chi.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
        let t = h1_tangent_y1(&p)?;
        match t.h(1) {
            DegreeValue::Exact { value } => println!("  h^1(T) = {value} ({:?}, {})", t.mode, t.resolution),
            DegreeValue::Bounds { lower, upper } => println!("  h^1(T) between {lower} and {upper}"),
        }
    }
    Ok(())
}
