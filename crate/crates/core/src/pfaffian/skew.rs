use num_bigint::BigInt;

use super::amap::{pair_index, AMap};
use crate::algebra::{pfaffian, Integers, Matrix, Poly, PolyRing, PrimeField, Ring};
use crate::error::{Error, Result};

/// An `n x n` skew matrix whose entries are linear forms in `u_1..u_k`.
#[derive(Debug, Clone)]
pub struct SkewLinearMatrix<R: Ring> {
    ring: PolyRing<R>,
    entries: Matrix<Poly<R::Elem>>,
}

/// Entry `(i, j)` is `sum_r a[r][(i,j)] u_r`, over the integers.
pub fn build_skew_matrix(a: &AMap) -> Result<SkewLinearMatrix<Integers>> {
    let rank = a.rank();
    if rank < a.k() {
        return Err(Error::DegenerateFamily { rank, k: a.k() });
    }
    Ok(SkewLinearMatrix::from_coefficients(Integers, a.n(), a.matrix(), |c| c.clone()))
}

/// The same matrix with coefficients reduced modulo `p`.
pub fn build_skew_matrix_mod(a: &AMap, f: &PrimeField) -> Result<SkewLinearMatrix<PrimeField>> {
    a.forms_mod(f)?;
    Ok(SkewLinearMatrix::from_coefficients(*f, a.n(), a.matrix(), |c| f.reduce_big(c)))
}

impl<R: Ring> SkewLinearMatrix<R> {
    fn from_coefficients(base: R, n: usize, rows: &[Vec<BigInt>], map: impl Fn(&BigInt) -> R::Elem) -> Self {
        let ring = PolyRing::new(base, rows.len());
        let mut entries = vec![vec![ring.zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<R::Elem> = rows.iter().map(|row| map(&row[pair_index(n, i, j)])).collect();
                let form = ring.linear_form(&coeffs);
                entries[j][i] = ring.neg(&form);
                entries[i][j] = form;
            }
        }
        SkewLinearMatrix { ring, entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn k(&self) -> usize {
        self.ring.nvars()
    }

    pub fn ring(&self) -> &PolyRing<R> {
        &self.ring
    }

    pub fn entries(&self) -> &Matrix<Poly<R::Elem>> {
        &self.entries
    }

    /// `M^T = -M` and zero diagonal.
    pub fn is_skew(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            self.ring.is_zero(&self.entries[i][i])
                && (0..n).all(|j| self.ring.is_zero(&self.ring.add(&self.entries[i][j], &self.entries[j][i])))
        })
    }

    pub fn evaluate(&self, point: &[R::Elem]) -> Matrix<R::Elem> {
        self.entries.iter().map(|row| row.iter().map(|f| self.ring.evaluate(f, point)).collect()).collect()
    }

    /// `Pf(M)`, a form of degree `n/2` in `u`.
    pub fn pfaffian_polynomial(&self) -> Result<Poly<R::Elem>> {
        if self.n() % 2 == 1 {
            return Err(Error::Parity(format!(
                "the Pfaffian needs even n, got n = {}; use the submaximal Pfaffians",
                self.n()
            )));
        }
        Ok(pfaffian(&self.ring, &self.entries))
    }

    /// The principal Pfaffians with row and column `i` deleted, for `i = 0..n`.
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Poly<R::Elem>>> {
        let n = self.n();
        if n.is_multiple_of(2) {
            return Err(Error::Parity(format!("submaximal Pfaffians need odd n, got n = {n}")));
        }
        Ok((0..n).map(|i| pfaffian(&self.ring, &delete(&self.entries, &[i]))).collect())
    }
}

/// The principal submatrix avoiding `removed`.
pub fn delete<E: Clone>(m: &Matrix<E>, removed: &[usize]) -> Matrix<E> {
    let keep: Vec<usize> = (0..m.len()).filter(|i| !removed.contains(i)).collect();
    keep.iter().map(|&i| keep.iter().map(|&j| m[i][j].clone()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::determinant;
    use crate::pfaffian::amap::Scalars;

    #[test]
    fn two_by_two() {
        let a = AMap::new(2, 1, Scalars::Rational, vec![vec![BigInt::from(1)]]).unwrap();
        let m = build_skew_matrix(&a).unwrap();
        let r = m.ring();
        assert_eq!(m.entries()[0][1], r.var(0));
        assert_eq!(m.entries()[1][0], r.neg(&r.var(0)));
        assert_eq!(m.pfaffian_polynomial().unwrap(), r.var(0));
    }

    #[test]
    fn basis_vectors_recover_rows() {
        let a = AMap::random(5, 4, 101, 3).unwrap();
        let f = PrimeField::new(101).unwrap();
        let m = build_skew_matrix_mod(&a, &f).unwrap();
        assert!(m.is_skew());
        let forms = a.forms_mod(&f).unwrap();
        for r in 0..4 {
            let mut e = vec![0u64; 4];
            e[r] = 1;
            assert_eq!(m.evaluate(&e), forms[r]);
        }
    }

    #[test]
    fn universal_pfaffian_of_size_ten() {
        let m = build_skew_matrix(&AMap::universal(10).unwrap()).unwrap();
        let pf = m.pfaffian_polynomial().unwrap();
        assert_eq!(pf.total_degree(), Some(5));
        assert!(pf.is_homogeneous());
        // one monomial per perfect matching of ten points
        assert_eq!(pf.num_terms(), 945);
    }

    #[test]
    fn parity_errors() {
        let m = build_skew_matrix(&AMap::universal(3).unwrap()).unwrap();
        assert!(matches!(m.pfaffian_polynomial(), Err(Error::Parity(_))));
        let subs = m.submaximal_pfaffians().unwrap();
        // deleting index i leaves the single entry of the complementary pair
        let r = m.ring();
        assert_eq!(subs[0], r.var(2));
        assert_eq!(subs[1], r.var(1));
        assert_eq!(subs[2], r.var(0));
        let m4 = build_skew_matrix(&AMap::universal(4).unwrap()).unwrap();
        assert!(m4.submaximal_pfaffians().is_err());
    }

    #[test]
    fn symbolic_square_is_determinant_mod_p() {
        let f = PrimeField::new(10007).unwrap();
        for n in [4, 6] {
            let m = build_skew_matrix_mod(&AMap::random(n, 3, 10007, n as u64).unwrap(), &f).unwrap();
            let pf = m.pfaffian_polynomial().unwrap();
            for x in 1..20u64 {
                let u = [x, x * x % 10007, 7 * x + 1];
                let v = m.ring().evaluate(&pf, &u);
                assert_eq!(f.mul(&v, &v), determinant(&f, &m.evaluate(&u)));
            }
        }
    }
}
