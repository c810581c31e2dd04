//! Partitions, GL(n) weights for the (2, n-2) parabolic, the rho shift,
//! the Weyl dimension formula and Poincare polynomials of Gr(2,n).
//!
//! Weight convention: a homogeneous bundle `S_a(S^v) (x) S_b(Q^v)` on
//! Gr(2,n) is the weight `(a1, a2 | b1, ..., b_{n-2})`. In particular
//! `S^v = (1,0|0..)`, `O(1) = det S^v = (1,1|0..)` and `Q = (0,0|0..,-1)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// A partition with trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant {
                weight: parts.iter().map(|&p| p as i64).collect(),
                detail: "partition parts must be weakly decreasing".into(),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let parts = (0..first).map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32).collect();
        Partition(parts)
    }

    /// The parts padded with zeros to `len` entries, as a signed vector.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len).map(|i| self.part(i) as i64).collect()
    }

    /// All partitions of `m` with at most `max_len` parts, each at most `max_part`.
    pub fn all_in_box(m: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn rec(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A Levi-dominant weight for GL(2) x GL(n-2) inside GL(n).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GLWeight {
    n: usize,
    s_block: [i64; 2],
    q_block: Vec<i64>,
}

impl GLWeight {
    pub fn new(n: usize, s_block: [i64; 2], q_block: Vec<i64>) -> Result<Self> {
        check_rank(n)?;
        if q_block.len() != n - 2 {
            return Err(Error::Dimension(format!("Q-block has length {}, expected n - 2 = {}", q_block.len(), n - 2)));
        }
        if s_block[0] < s_block[1] {
            return Err(Error::NotDominant {
                weight: s_block.to_vec(),
                detail: "S-block must satisfy a1 >= a2".into(),
            });
        }
        if !is_weakly_decreasing(&q_block) {
            return Err(Error::NotDominant { weight: q_block, detail: "Q-block must be weakly decreasing".into() });
        }
        Ok(GLWeight { n, s_block, q_block })
    }

    /// Weight supported on the S-block, `(a1, a2, 0, ..., 0)`.
    pub fn s_only(n: usize, a1: i64, a2: i64) -> Result<Self> {
        Self::new(n, [a1, a2], vec![0; n.saturating_sub(2)])
    }

    /// The line bundle `O(t) = (det S^v)^t`.
    pub fn line(n: usize, t: i64) -> Result<Self> {
        Self::s_only(n, t, t)
    }

    /// Splits a length-n vector into S- and Q-blocks.
    pub fn from_vec(v: &[i64]) -> Result<Self> {
        check_rank(v.len())?;
        Self::new(v.len(), [v[0], v[1]], v[2..].to_vec())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s_block(&self) -> [i64; 2] {
        self.s_block
    }

    pub fn q_block(&self) -> &[i64] {
        &self.q_block
    }

    pub fn to_vec(&self) -> Vec<i64> {
        let mut v = self.s_block.to_vec();
        v.extend_from_slice(&self.q_block);
        v
    }

    /// Twist by `O(t)`.
    pub fn twist(&self, t: i64) -> GLWeight {
        GLWeight { n: self.n, s_block: [self.s_block[0] + t, self.s_block[1] + t], q_block: self.q_block.clone() }
    }

    /// The dual representation: negate and reverse each block.
    pub fn dual(&self) -> GLWeight {
        GLWeight {
            n: self.n,
            s_block: [-self.s_block[1], -self.s_block[0]],
            q_block: self.q_block.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Rank of the homogeneous bundle, `dim S_a(C^2) * dim S_b(C^{n-2})`.
    pub fn bundle_rank(&self) -> BigUint {
        let s = weyl_dimension(&self.s_block).expect("S-block is dominant");
        if self.q_block.is_empty() {
            return s;
        }
        s * weyl_dimension(&self.q_block).expect("Q-block is dominant")
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}|", self.s_block[0], self.s_block[1])?;
        for (i, q) in self.q_block.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

/// Coefficients of a polynomial in `q`, indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincarePolynomial {
    #[serde(serialize_with = "crate::json::decimal_vec")]
    coefficients: Vec<BigUint>,
}

impl PoincarePolynomial {
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn coefficient(&self, p: usize) -> BigUint {
        self.coefficients.get(p).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        (0..c.len()).all(|i| c[i] == c[c.len() - 1 - i])
    }

    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidRank { n: n as i64, min: 3 });
    }
    Ok(())
}

pub(crate) fn is_weakly_decreasing(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// The shift `rho = (n, n-1, ..., 1)`.
pub fn rho(n: usize) -> Result<Vec<i64>> {
    check_rank(n)?;
    Ok((1..=n as i64).rev().collect())
}

/// Dimension of the irreducible GL(len(w)) representation with highest weight `w`.
pub fn weyl_dimension(w: &[i64]) -> Result<BigUint> {
    if !is_weakly_decreasing(w) {
        return Err(Error::NotDominant {
            weight: w.to_vec(),
            detail: "Weyl dimension needs a weakly decreasing weight".into(),
        });
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let gap = (j - i) as i64;
            num *= (w[i] - w[j] + gap) as u64;
            den *= gap as u64;
        }
    }
    Ok(num / den)
}

/// Gaussian binomial `[n choose k]_q` via the q-Pascal recursion.
pub fn gaussian_binomial(n: usize, k: usize) -> Vec<BigUint> {
    if k > n {
        return Vec::new();
    }
    // row[j] holds [i choose j]_q for the current i.
    let mut row: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for i in 1..=n {
        let mut next: Vec<Vec<BigUint>> = Vec::with_capacity(i + 1);
        for j in 0..=i {
            if j == 0 || j == i {
                next.push(vec![BigUint::one()]);
                continue;
            }
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            let a = &row[j - 1];
            let b = &row[j];
            let len = a.len().max(b.len() + j);
            let mut c = vec![BigUint::default(); len];
            for (d, x) in a.iter().enumerate() {
                c[d] += x;
            }
            for (d, x) in b.iter().enumerate() {
                c[d + j] += x;
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Poincare polynomial of Gr(2,n) in `q = t^2`; the coefficient of `q^p` is `h^{p,p}`.
pub fn grassmannian_poincare(n: usize) -> Result<PoincarePolynomial> {
    check_rank(n)?;
    Ok(PoincarePolynomial { coefficients: gaussian_binomial(n, 2) })
}
