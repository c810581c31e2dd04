use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Hodge numbers `h^{p,q} = dim H^q(Y, Omega^p)` of a smooth projective
/// variety of dimension `dim`, stored as `h[p][q]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    dim: usize,
    #[serde(serialize_with = "crate::json::decimal_matrix")]
    h: Vec<Vec<BigUint>>,
}

impl HodgeDiamond {
    pub fn zero(dim: usize) -> Self {
        HodgeDiamond { dim, h: vec![vec![BigUint::zero(); dim + 1]; dim + 1] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: usize, q: usize) -> BigUint {
        self.h.get(p).and_then(|r| r.get(q)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, p: usize, q: usize, v: BigUint) {
        self.h[p][q] = v;
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.h
    }

    /// `(h^{d,0}, h^{d-1,1}, ..., h^{0,d})`.
    pub fn middle_row(&self) -> Vec<BigUint> {
        (0..=self.dim).rev().map(|p| self.get(p, self.dim - p)).collect()
    }

    /// The nonzero middle entries, e.g. `1 101 101 1` for a quintic threefold.
    pub fn middle_row_nonzero(&self) -> Vec<BigUint> {
        self.middle_row().into_iter().filter(|x| !x.is_zero()).collect()
    }

    /// `chi^p = sum_q (-1)^q h^{p,q}`.
    pub fn chi_p(&self, p: usize) -> BigInt {
        alternating(&self.h[p])
    }

    /// Topological Euler characteristic `sum (-1)^{p+q} h^{p,q}`.
    pub fn euler_number(&self) -> BigInt {
        (0..=self.dim).map(|p| if p % 2 == 0 { self.chi_p(p) } else { -self.chi_p(p) }).sum()
    }

    /// Betti number `b_j = sum_{p+q=j} h^{p,q}`.
    pub fn betti(&self, j: usize) -> BigUint {
        (0..=self.dim.min(j)).filter(|&p| j - p <= self.dim).map(|p| self.get(p, j - p)).sum()
    }

    /// Hodge symmetry, Serre duality, connectedness when `dim >= 1`, and
    /// agreement with the supplied `chi^p` values.
    pub fn check_integrity(&self, chi: Option<&[BigInt]>) -> Result<()> {
        let d = self.dim;
        for p in 0..=d {
            for q in 0..=d {
                if self.h[p][q] != self.h[q][p] {
                    return Err(Error::Integrity(format!("h^({p},{q}) != h^({q},{p})")));
                }
                if self.h[p][q] != self.h[d - p][d - q] {
                    return Err(Error::Integrity(format!("h^({p},{q}) != h^({},{})", d - p, d - q)));
                }
            }
        }
        if d >= 1 && !self.h[0][0].is_one() {
            return Err(Error::Integrity(format!("h^(0,0) = {} for a positive-dimensional variety", self.h[0][0])));
        }
        if let Some(chi) = chi {
            if chi.len() != d + 1 {
                return Err(Error::Integrity("chi vector has the wrong length".into()));
            }
            for (p, c) in chi.iter().enumerate() {
                if self.chi_p(p) != *c {
                    return Err(Error::Integrity(format!("row {p} sums to {} but chi^{p} = {c}", self.chi_p(p))));
                }
            }
            let from_chi: BigInt = chi.iter().enumerate().map(|(p, c)| if p % 2 == 0 { c.clone() } else { -c }).sum();
            if from_chi != self.euler_number() {
                return Err(Error::Integrity("topological Euler characteristic mismatch".into()));
            }
        }
        Ok(())
    }
}

fn alternating(v: &[BigUint]) -> BigInt {
    v.iter()
        .enumerate()
        .map(|(q, x)| {
            let x = BigInt::from(x.clone());
            if q % 2 == 0 {
                x
            } else {
                -x
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(genus: u64) -> HodgeDiamond {
        let mut d = HodgeDiamond::zero(1);
        d.set(0, 0, BigUint::one());
        d.set(1, 1, BigUint::one());
        d.set(1, 0, BigUint::from(genus));
        d.set(0, 1, BigUint::from(genus));
        d
    }

    #[test]
    fn curve_diamond() {
        let d = curve(3);
        d.check_integrity(None).unwrap();
        assert_eq!(d.euler_number(), BigInt::from(-4));
        assert_eq!(d.betti(1), BigUint::from(6u32));
        assert_eq!(d.middle_row(), vec![BigUint::from(3u32), BigUint::from(3u32)]);
    }

    #[test]
    fn integrity_catches_asymmetry() {
        let mut d = curve(1);
        d.set(1, 0, BigUint::from(2u32));
        assert!(d.check_integrity(None).is_err());
        let d = curve(1);
        assert!(d.check_integrity(Some(&[BigInt::from(0), BigInt::from(0)])).is_ok());
        assert!(d.check_integrity(Some(&[BigInt::from(1), BigInt::from(0)])).is_err());
    }
}
