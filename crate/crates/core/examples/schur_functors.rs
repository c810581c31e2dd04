//! Littlewood-Richardson products, rank-two Clebsch-Gordan and the Cauchy
//! decomposition of exterior powers of the cotangent bundle.
//!
//!     cargo run --example schur_functors

use grpf::schur::{cauchy_exterior_cotangent, clebsch_gordan_rank2, littlewood_richardson};
use grpf::weights::Partition;

fn main() -> grpf::Result<()> {
    let lambda = Partition::new(vec![2, 1])?;
    let mu = Partition::new(vec![2, 1])?;
    println!("s_{lambda} * s_{mu} =");
    for (nu, c) in littlewood_richardson(&lambda, &mu, 6) {
        println!("  {c} s_{nu}");
    }

    println!("\nSym^3 (x) Sym^2 on C^2:");
    for (d, i) in clebsch_gordan_rank2(3, 2) {
        println!("  Sym^{d} (x) det^{i}");
    }

    let n = 6;
    for m in [1, 2, 4] {
        let c = cauchy_exterior_cotangent(n, m)?;
        println!("\nwedge^{m} Omega on Gr(2,{n}), rank {}:\n  {c}", c.virtual_rank());
    }
    Ok(())
}
