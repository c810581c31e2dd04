//! Samples points of the degeneracy locus Y2 for random families of skew
//! forms over F_10007 and prints rank and smoothness statistics.
//!
//!     cargo run --release --example sample_pfaffian_locus [n k points seed]

use std::time::Instant;

use grpf::pfaffian::{sample_y2, AMap, DEFAULT_PRIME};

fn main() -> grpf::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let cases: Vec<(usize, usize)> = match args.as_slice() {
        [n, k, ..] => vec![(*n as usize, *k as usize)],
        _ => vec![(10, 5), (7, 7), (8, 4)],
    };
    let points = args.get(2).copied().unwrap_or(120) as usize;
    let seed = args.get(3).copied().unwrap_or(42);

    for (n, k) in cases {
        let start = Instant::now();
        let a = AMap::random(n, k, DEFAULT_PRIME, seed)?;
        let report = sample_y2(&a, DEFAULT_PRIME, points, seed)?;
        println!("n = {n}, k = {k}: {}", report.method);
        println!(
            "  {} points from {} lines, {} smooth ({:.1}%), kernel dims at smooth points {:?}",
            report.points.len(),
            report.lines_tried,
            report.smooth_points,
            100.0 * report.smooth_fraction(),
            report.kernel_dims_at_smooth
        );
        if let Some(p) = report.points.first() {
            println!("  first point {:?}, rank {}", p.coordinates, p.rank);
        }
        println!("  {:.2?}", start.elapsed());
    }
    Ok(())
}
