//! Builds the Pfaffian of a skew matrix of linear forms from a family in
//! the JSON input format, and the submaximal Pfaffians for odd size.
//!
//!     cargo run --release --example pfaffian_polynomials

use grpf::pfaffian::{build_skew_matrix, AMap};

fn main() -> grpf::Result<()> {
    // e1^e2 + e3^e4 and e1^e3 + e2^e4 span a pencil of forms on C^4
    let pencil = AMap::from_json_str(r#"{"n": 4, "k": 2, "field": "Q", "matrix": [[1,0,0,0,0,1],[0,1,0,0,-1,0]]}"#)?;
    let m = build_skew_matrix(&pencil)?;
    let pf = m.pfaffian_polynomial()?;
    println!("pencil on C^4: Pf = {}", m.ring().format(&pf, "u", |c| c.to_string()));

    let net = build_skew_matrix(&AMap::universal(5)?)?;
    println!("\nuniversal 5 x 5: submaximal Pfaffians");
    for (i, f) in net.submaximal_pfaffians()?.iter().enumerate() {
        println!("  delete {i}: {}", net.ring().format(f, "u", |c| c.to_string()));
    }

    let big = build_skew_matrix(&AMap::universal(10)?)?.pfaffian_polynomial()?;
    println!(
        "\nuniversal 10 x 10 in 45 variables: degree {:?}, {} terms, homogeneous = {}",
        big.total_degree(),
        big.num_terms(),
        big.is_homogeneous()
    );
    Ok(())
}
