//! Checks that the window S on Gr(2,n) is a strong exceptional collection
//! and prints its Hom dimensions.
//!
//!     cargo run --release --example exceptional_collection [n]

use grpf::geometry::window_s;
use grpf::sections::verify_strong_exceptional;

fn main() -> grpf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let report = verify_strong_exceptional(n, &window_s(n))?;
    println!(
        "Gr(2,{n}): {} objects Sym^l S(-m), {} ordered pairs, {} higher Ext failures, passed = {}",
        report.labels.len(),
        report.pairs_checked,
        report.failures.len(),
        report.passed
    );
    if let Some(order) = &report.order {
        println!("an order with Homs only going forward: {order:?}");
    }
    println!("\ndim Hom(E_a, E_b), rows a, columns b, in label order:");
    let width = report.hom.iter().flatten().map(|h| h.to_string().len()).max().unwrap_or(1) + 1;
    for (a, row) in report.labels.iter().zip(&report.hom) {
        let cells: String = row.iter().map(|h| format!("{h:>width$}")).collect();
        println!("{:>8} {cells}", format!("{a:?}"));
    }
    Ok(())
}
