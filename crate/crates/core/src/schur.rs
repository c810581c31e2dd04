//! Schur functor calculus for the tautological bundles of Gr(2,n).
//!
//! A bundle in the window sets, `Sym^l S (x) (det S)^m`, is stored through
//! its `S^v`-side weight `(-m, -l-m)`; see [`window_label_weight`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{GLWeight, Partition};

/// Decomposes `Sym^l E (x) Sym^l' E` for a rank-2 bundle `E`.
///
/// Returns `(exponent, det_power)` pairs: the summands are
/// `Sym^{l+l'-2i} E (x) (det E)^i` for `0 <= i <= min(l, l')`, each once.
pub fn clebsch_gordan_rank2(l: u32, l_prime: u32) -> Vec<(u32, u32)> {
    (0..=l.min(l_prime)).map(|i| (l + l_prime - 2 * i, i)).collect()
}

/// Littlewood-Richardson coefficients `c^nu_{lambda mu}` for all `nu` with
/// at most `max_rows` rows, by enumerating LR tableaux of shape `nu/lambda`
/// and content `mu` as a chain of horizontal strips.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, max_rows: usize) -> Vec<(Partition, u64)> {
    if lambda.len() > max_rows {
        return Vec::new();
    }
    let rows = max_rows.min(lambda.len() + mu.len());
    let start: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    // counts[r][i]: number of boxes labelled i+1 in row r
    let counts = vec![vec![0u32; mu.len()]; rows];
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    lr_fill(mu.parts(), 0, start, counts, &mut out);
    out.into_iter().collect()
}

fn lr_fill(content: &[u32], label: usize, shape: Vec<u32>, counts: Vec<Vec<u32>>, out: &mut BTreeMap<Partition, u64>) {
    if label == content.len() {
        let nu = Partition::new(shape).expect("strip chain stays a partition");
        *out.entry(nu).or_insert(0) += 1;
        return;
    }
    let mut strip = vec![0u32; shape.len()];
    place_strip(content, label, &shape, &counts, 0, content[label], &mut strip, out);
}

/// Distributes `remaining` boxes with label `label + 1` over rows `row..`
/// as a horizontal strip, keeping the reverse reading word a lattice word.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    content: &[u32],
    label: usize,
    shape: &[u32],
    counts: &[Vec<u32>],
    row: usize,
    remaining: u32,
    strip: &mut Vec<u32>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut new_shape = shape.to_vec();
        let mut new_counts = counts.to_vec();
        for r in 0..shape.len() {
            new_shape[r] += strip[r];
            new_counts[r][label] += strip[r];
        }
        lr_fill(content, label + 1, new_shape, new_counts, out);
        return;
    }
    if row == shape.len() {
        return;
    }
    // Horizontal strip: the row may grow up to the old length of the row above.
    let cap_strip = if row == 0 { remaining } else { shape[row - 1] - shape[row] };
    // Lattice condition: labels `label+1` in rows <= row may not exceed labels
    // `label` in rows < row.
    let cap_lattice = if label == 0 {
        remaining
    } else {
        let above: u32 = counts[..row].iter().map(|c| c[label - 1]).sum();
        let used: u32 = strip[..row].iter().sum::<u32>() + counts[..row].iter().map(|c| c[label]).sum::<u32>();
        above.saturating_sub(used)
    };
    let cap = remaining.min(cap_strip).min(cap_lattice);
    for take in (0..=cap).rev() {
        strip[row] = take;
        place_strip(content, label, shape, counts, row + 1, remaining - take, strip, out);
    }
    strip[row] = 0;
}

/// `S^v`-side weight of `Sym^l S (x) (det S)^m`, i.e. `(-m, -l-m)`.
pub fn window_label_weight(l: u32, m: i64) -> [i64; 2] {
    [-m, -(l as i64) - m]
}

/// Formal integer combination of irreducible homogeneous bundles on Gr(2,n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    n: usize,
    terms: BTreeMap<GLWeight, BigInt>,
}

/// One irreducible summand of a [`KClass`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurTerm {
    pub s_weight: [i64; 2],
    pub q_weight: Vec<i64>,
    #[serde(serialize_with = "crate::json::decimal")]
    pub multiplicity: BigInt,
}

impl KClass {
    pub fn zero(n: usize) -> Self {
        KClass { n, terms: BTreeMap::new() }
    }

    pub fn irreducible(w: GLWeight) -> Self {
        let mut c = KClass::zero(w.n());
        c.terms.insert(w, BigInt::from(1));
        c
    }

    /// `O(t)`.
    pub fn line(n: usize, t: i64) -> Result<Self> {
        Ok(Self::irreducible(GLWeight::line(n, t)?))
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::line(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GLWeight, &BigInt)> {
        self.terms.iter()
    }

    pub fn multiplicity(&self, w: &GLWeight) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> Vec<SchurTerm> {
        self.terms
            .iter()
            .map(|(w, m)| SchurTerm { s_weight: w.s_block(), q_weight: w.q_block().to_vec(), multiplicity: m.clone() })
            .collect()
    }

    /// True if every multiplicity is positive (an honest bundle).
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|m| m.is_positive())
    }

    pub fn add_term(&mut self, w: GLWeight, mult: BigInt) -> Result<()> {
        if w.n() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: w.n() });
        }
        let entry = self.terms.entry(w).or_default();
        *entry += mult;
        if entry.is_zero() {
            self.terms.retain(|_, m| !m.is_zero());
        }
        Ok(())
    }

    fn check_same(&self, other: &KClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &KClass) -> Result<KClass> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, m) in &other.terms {
            out.add_term(w.clone(), m.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &KClass) -> Result<KClass> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> KClass {
        if factor.is_zero() {
            return KClass::zero(self.n);
        }
        KClass { n: self.n, terms: self.terms.iter().map(|(w, m)| (w.clone(), m * factor)).collect() }
    }

    /// Twist by `O(t)`: adds `t` to both entries of every S-weight.
    pub fn tensor_by_line(&self, t: i64) -> KClass {
        KClass { n: self.n, terms: self.terms.iter().map(|(w, m)| (w.twist(t), m.clone())).collect() }
    }

    pub fn dualize(&self) -> KClass {
        KClass { n: self.n, terms: self.terms.iter().map(|(w, m)| (w.dual(), m.clone())).collect() }
    }

    /// Sum of multiplicity times bundle rank.
    pub fn virtual_rank(&self) -> BigInt {
        self.terms.iter().map(|(w, m)| m * BigInt::from(w.bundle_rank())).sum()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}*{w}")?;
        }
        Ok(())
    }
}

/// `wedge^m Omega_Gr` for `Omega_Gr = S (x) Q^v`, by the Cauchy identity
/// `wedge^m (S (x) Q^v) = sum_{lambda |- m} S_lambda S (x) S_{lambda'} Q^v`.
///
/// Out-of-range `m` gives the zero class.
pub fn cauchy_exterior_cotangent(n: usize, m: i64) -> Result<KClass> {
    let mut class = KClass::zero(n);
    if n < 3 {
        return Err(Error::InvalidRank { n: n as i64, min: 3 });
    }
    if m < 0 || m > 2 * (n as i64 - 2) {
        return Ok(class);
    }
    for lambda in Partition::all_in_box(m as u32, 2, (n - 2) as u32) {
        let conj = lambda.conjugate();
        // S_lambda S = (S_lambda S^v)^v has S^v-weight (-lambda2, -lambda1).
        let s = [-(lambda.part(1) as i64), -(lambda.part(0) as i64)];
        let w = GLWeight::new(n, s, conj.padded(n - 2))?;
        class.add_term(w, BigInt::from(1))?;
    }
    Ok(class)
}
