use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::sections::HodgeDiamond;

fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `dim R_m` for `R = C[x_0..x_N] / (x_0^(d-1), ..., x_N^(d-1))`, the
/// Jacobian ring of the Fermat hypersurface of degree `d` in `P^N`.
pub fn jacobian_ring_dim(ambient_dim: usize, degree: usize, m: i64) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    let vars = ambient_dim as i64 + 1;
    let step = degree as i64 - 1;
    let mut total = BigInt::zero();
    for j in 0..=vars {
        let t = binom(vars, j) * binom(m - j * step + vars - 1, vars - 1);
        if j % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    total.to_biguint().expect("graded piece has non-negative dimension")
}

/// Hodge diamond of a smooth degree-`degree` hypersurface in `P^ambient_dim`.
///
/// The primitive middle part is `h^{n-q,q}_prim = dim R_{(q+1)d - N - 1}`
/// (Griffiths); everything else, and the hyperplane class in the middle, is
/// inherited from projective space.
pub fn hypersurface_hodge(ambient_dim: usize, degree: usize) -> Result<HodgeDiamond> {
    if ambient_dim < 2 || degree < 1 {
        return Err(Error::Dimension(format!(
            "need ambient dimension >= 2 and degree >= 1, got P^{ambient_dim} and degree {degree}"
        )));
    }
    let dim = ambient_dim - 1;
    let mut d = HodgeDiamond::zero(dim);
    for p in 0..=dim {
        d.set(p, p, BigUint::one());
    }
    for q in 0..=dim {
        let m = (q as i64 + 1) * degree as i64 - ambient_dim as i64 - 1;
        let prim = jacobian_ring_dim(ambient_dim, degree, m);
        let p = dim - q;
        let v = d.get(p, q) + prim;
        d.set(p, q, v);
    }
    d.check_integrity(None)?;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn quintic_threefold() {
        let d = hypersurface_hodge(4, 5).unwrap();
        assert_eq!(d.middle_row(), vec![u(1), u(101), u(101), u(1)]);
        assert_eq!(d.get(1, 1), u(1));
        assert_eq!(d.euler_number(), BigInt::from(-200));
    }

    #[test]
    fn quartic_surface() {
        let d = hypersurface_hodge(3, 4).unwrap();
        assert_eq!(d.get(2, 0), u(1));
        assert_eq!(d.get(1, 1), u(20));
        assert_eq!(d.euler_number(), BigInt::from(24));
    }

    #[test]
    fn plane_curves() {
        for deg in 1..9usize {
            let d = hypersurface_hodge(2, deg).unwrap();
            assert_eq!(d.get(1, 0), BigUint::from((deg - 1) * (deg.max(2) - 2) / 2));
        }
    }

    #[test]
    fn hyperplanes_and_quadrics() {
        // a hyperplane is P^4
        let d = hypersurface_hodge(5, 1).unwrap();
        assert_eq!(d.middle_row_nonzero(), vec![u(1)]);
        assert_eq!(d.euler_number(), BigInt::from(5));
        let q = hypersurface_hodge(5, 2).unwrap();
        assert_eq!(q.get(2, 2), u(2));
    }

    #[test]
    fn euler_number_matches_chern_class_formula() {
        // chi_top = ((1-d)^(N+1) - 1)/d + N + 1
        for n in 2..7i64 {
            for deg in 1..7i64 {
                let d = hypersurface_hodge(n as usize, deg as usize).unwrap();
                let expected = (BigInt::from(1 - deg).pow((n + 1) as u32) - 1) / deg + n + 1;
                assert_eq!(d.euler_number(), expected, "N={n} d={deg}");
            }
        }
    }

    #[test]
    fn rejects_degenerate() {
        assert!(hypersurface_hodge(1, 3).is_err());
        assert!(hypersurface_hodge(3, 0).is_err());
    }
}
