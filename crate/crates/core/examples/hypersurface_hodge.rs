//! Hodge numbers of smooth hypersurfaces from the Jacobian ring.
//!
//!     cargo run --example hypersurface_hodge

use grpf::pfaffian::hypersurface_hodge;

fn main() -> grpf::Result<()> {
    let cases = [
        ("plane cubic", 2, 3),
        ("quartic K3 surface", 3, 4),
        ("quintic threefold", 4, 5),
        ("cubic fourfold", 5, 3),
        ("sextic fivefold", 6, 6),
    ];
    for (name, ambient, degree) in cases {
        let h = hypersurface_hodge(ambient, degree)?;
        let row: Vec<String> = h.middle_row_nonzero().iter().map(ToString::to_string).collect();
        println!(
            "{name:<20} P^{ambient}, degree {degree}: middle row {:<40} Euler number {}",
            row.join(" "),
            h.euler_number()
        );
    }
    Ok(())
}
