//! Decides Ext^{>0}(E, F(t)) = 0 for all t >= 0 over the window S, then
//! shows a label outside S breaking it.
//!
//!     cargo run --release --example ext_vanishing_all_twists [n]

use grpf::geometry::window_s;
use grpf::sections::{decide_pair_all_t, lemma_vanishing_all_t};

fn main() -> grpf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let report = lemma_vanishing_all_t(n)?;
    println!(
        "n = {n}: {:?} ({} pairs, {} Clebsch-Gordan summands, {} values of t needed a direct BWB call)",
        report.verdict, report.pairs, report.summands, report.direct_evaluations
    );

    let sample = decide_pair_all_t(n, (2, 1), (1, n as i64 - 1))?;
    println!("\nhow t >= 0 is covered for Hom((2, 1), (1, {})(t)):", n - 1);
    for s in &sample.summands {
        println!("  summand {} with offsets {:?}:", s.summand, s.offsets);
        for iv in &s.intervals {
            let to = iv.to.map_or("inf".to_string(), |t| t.to_string());
            println!("    t in [{}, {to}]: {:?}", iv.from, iv.kind);
        }
    }

    let outside = ((n / 2) as u32, n as i64 - 1);
    println!("\nagainst {outside:?}, which is not in S:");
    for e in window_s(n).labels() {
        if let Some(c) = decide_pair_all_t(n, e, outside)?.first_counterexample() {
            println!(
                "  Ext^{} from {e:?} at t = {} (weight {}, dimension {})",
                c.result.degree().unwrap_or(0),
                c.t,
                c.weight,
                c.result.dimension()
            );
            break;
        }
    }
    Ok(())
}
