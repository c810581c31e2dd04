//! Dimensions, canonical classes and window sets for a range of (n, k).
//!
//!     cargo run --example windows_and_classification

use grpf::geometry::{classify, orthogonal_rectangle, window_sets, ModelParams};

fn main() -> grpf::Result<()> {
    println!(" n  k | dim Y1  type Y1      | dim Y2  type Y2      | T in S  theorem  rectangle");
    for (n, k) in [(6, 3), (7, 7), (8, 4), (9, 9), (10, 5), (10, 6), (11, 8), (12, 6)] {
        let p = ModelParams::new(n, k)?;
        let c = classify(&p);
        let w = window_sets(&p)?;
        println!(
            "{n:>2} {k:>2} | {:>6}  {:<12} | {:>6}  {:<12} | {:<6}  {:<7}  {}",
            c.dim_y1,
            c.y1_type.to_string(),
            c.dim_y2,
            c.y2_type.to_string(),
            w.inclusion,
            c.theorem_applies,
            orthogonal_rectangle(&p).len()
        );
    }

    let p = ModelParams::new(10, 5)?;
    let rect = orthogonal_rectangle(&p);
    println!("\nlabels (l, m) orthogonal to every O(t), 0 <= t <= 5, at (10, 5):");
    println!("  {:?}", rect.labels());
    Ok(())
}
