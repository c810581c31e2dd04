//! Cohomology of homogeneous bundles on Gr(2,n) by Borel-Weil-Bott.
//!
//!     cargo run --example grassmannian_bwb [n]

use grpf::bwb::{bwb_cohomology, cohomology_of_kclass, BwbResult};
use grpf::schur::cauchy_exterior_cotangent;
use grpf::weights::{grassmannian_poincare, GLWeight};

fn show(label: &str, w: &GLWeight) -> grpf::Result<()> {
    match bwb_cohomology(w)? {
        BwbResult::Vanishes => println!("{label:<28} {w:<28} all cohomology vanishes"),
        BwbResult::Cohomology { degree, dimension, .. } => {
            println!("{label:<28} {w:<28} H^{degree} has dimension {dimension}")
        }
    }
    Ok(())
}

fn main() -> grpf::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let zeros = vec![0; n - 2];
    let mut tangent_q = zeros.clone();
    tangent_q[n - 3] = -1;

    println!("Gr(2,{n}), dimension {}", 2 * (n - 2));
    show("O", &GLWeight::line(n, 0)?)?;
    show("O(1), the Pluecker bundle", &GLWeight::line(n, 1)?)?;
    show("O(-1)", &GLWeight::line(n, -1)?)?;
    show("canonical bundle O(-n)", &GLWeight::line(n, -(n as i64))?)?;
    show("Sym^3 of S^v", &GLWeight::s_only(n, 3, 0)?)?;
    show("tangent bundle S^v (x) Q", &GLWeight::new(n, [1, 0], tangent_q)?)?;
    show("S(-2) twisted down", &GLWeight::s_only(n, -2, -3)?)?;

    // Hodge numbers h^{p,p} of the Grassmannian from the Cauchy formula,
    // against the Poincare polynomial.
    let poincare = grassmannian_poincare(n)?;
    print!("\nh^(p,p) from wedge^p Omega:");
    for p in 0..=2 * (n - 2) {
        let h = cohomology_of_kclass(&cauchy_exterior_cotangent(n, p as i64)?, 0)?;
        print!(" {}", h.positive.get(p));
    }
    println!(
        "\nPoincare polynomial:       {}",
        poincare.coefficients().iter().map(|c| format!(" {c}")).collect::<String>()
    );
    Ok(())
}
