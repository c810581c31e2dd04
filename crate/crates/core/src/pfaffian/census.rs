//! How often random skew matrices over `F_q` have each rank, compared with
//! the exact count and with the codimension of the rank strata.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rank, PrimeField, Ring};
use crate::error::{Error, Result};
use crate::geometry::pfaffian_stratum_codim;

/// Number of `n x n` skew matrices over `F_q` of rank `2s`:
/// `q^(s(s-1)) prod_{i<2s} (q^(n-i) - 1) / prod_{i=1..s} (q^(2i) - 1)`.
pub fn skew_rank_count(n: usize, rank: usize, q: u64) -> BigUint {
    if rank % 2 == 1 || rank > n {
        return BigUint::default();
    }
    let s = rank / 2;
    let q = BigUint::from(q);
    let pow = |e: usize| -> BigUint { Pow::pow(&q, e as u32) };
    let mut num = pow(s * s.saturating_sub(1));
    for i in 0..2 * s {
        num *= pow(n - i) - 1u32;
    }
    let mut den = BigUint::one();
    for i in 1..=s {
        den *= pow(2 * i) - 1u32;
    }
    num / den
}

#[derive(Debug, Clone, Serialize)]
pub struct RankCensus {
    pub n: usize,
    pub prime: u64,
    pub samples: usize,
    pub seed: u64,
    /// rank -> number of sampled matrices
    pub counts: BTreeMap<usize, usize>,
    /// rank -> exact probability of that rank
    pub exact: BTreeMap<usize, f64>,
}

/// Draws `samples` uniform skew matrices over `F_p` and tallies their ranks.
pub fn rank_census(n: usize, p: u64, samples: usize, seed: u64) -> Result<RankCensus> {
    let f = PrimeField::new(p)
        .ok_or_else(|| Error::InvalidParams { bound: "p prime below 2^32".into(), detail: format!("p = {p}") })?;
    let ranks: Vec<usize> = (0..samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            let mut m = vec![vec![0u64; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let c = rng.gen_range(0..p);
                    m[i][j] = c;
                    m[j][i] = f.neg(&c);
                }
            }
            rank(&f, &m)
        })
        .collect();
    let mut counts = BTreeMap::new();
    for r in ranks {
        *counts.entry(r).or_default() += 1;
    }
    let total = BigUint::from(p).pow((n * (n - 1) / 2) as u32);
    let exact = (0..=n).step_by(2).map(|r| (r, ratio(&skew_rank_count(n, r, p), &total))).collect();
    Ok(RankCensus { n, prime: p, samples, seed, counts, exact })
}

fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    // both can exceed f64 range; scale down together
    let shift = b.bits().saturating_sub(60);
    let a = (a >> shift).to_f64().unwrap_or(0.0);
    let b = (b >> shift).to_f64().unwrap_or(1.0);
    a / b
}

/// `P(rank <= r) * p^codim`, which should be of order one.
pub fn stratum_scaling(n: usize, r: usize, p: u64) -> Result<f64> {
    let codim = pfaffian_stratum_codim(n, r)?;
    let total = BigUint::from(p).pow((n * (n - 1) / 2) as u32);
    let below: BigUint = (0..=r).step_by(2).map(|s| skew_rank_count(n, s, p)).sum();
    Ok(ratio(&(below * BigUint::from(p).pow(codim as u32)), &total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(n: usize, q: u64) -> BTreeMap<usize, u64> {
        let f = PrimeField::new(q).unwrap();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut out = BTreeMap::new();
        let total = q.pow(pairs.len() as u32);
        for mut code in 0..total {
            let mut m = vec![vec![0u64; n]; n];
            for &(i, j) in &pairs {
                let c = code % q;
                code /= q;
                m[i][j] = c;
                m[j][i] = f.neg(&c);
            }
            *out.entry(rank(&f, &m)).or_default() += 1;
        }
        out
    }

    #[test]
    fn formula_matches_enumeration() {
        for (n, q) in [(3, 3), (4, 2), (4, 3), (5, 2)] {
            for (r, c) in brute_force(n, q) {
                assert_eq!(skew_rank_count(n, r, q), BigUint::from(c), "n={n} q={q} r={r}");
            }
        }
    }

    #[test]
    fn counts_sum_to_total() {
        for n in 2..9 {
            let total: BigUint = (0..=n).map(|r| skew_rank_count(n, r, 7)).sum();
            assert_eq!(total, BigUint::from(7u32).pow((n * (n - 1) / 2) as u32));
        }
    }

    #[test]
    fn census_tracks_exact_frequencies() {
        let c = rank_census(4, 3, 20000, 1).unwrap();
        for (r, &count) in &c.counts {
            let expected = c.exact[r] * 20000.0;
            assert!((count as f64 - expected).abs() < 5.0 * expected.sqrt() + 5.0, "rank {r}");
        }
    }

    #[test]
    fn strata_scale_with_codimension() {
        for n in 3..=8 {
            for r in (0..n).step_by(2) {
                let s = stratum_scaling(n, r, 10007).unwrap();
                assert!((1.0 / 3.0..=3.0).contains(&s), "n={n} r={r}: {s}");
            }
        }
    }
}
