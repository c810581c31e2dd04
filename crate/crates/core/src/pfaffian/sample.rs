//! Points of `Y2` over `F_p` found by restricting to random lines.
//!
//! For even `n`, `Y2` is the hypersurface `Pf = 0` in `P(U)`; its restriction
//! to a line is a polynomial of degree `n/2` in one variable, recovered by
//! interpolation and searched exhaustively for roots.
//!
//! For odd `n`, `Y2` has codimension three, so random lines in `P(U)` miss
//! it. Instead a random line is taken in `P(V)`: for each vector `v` on it
//! the forms `u` with `v` in their kernel form a linear space, generically a
//! single point, and that point is kept when its rank has dropped to `n - 3`.
//! The vectors `v` arising this way sweep out a hypersurface in `P(V)`, which
//! a line does meet. This needs `k >= n`; for `k > n` the search runs inside
//! a random `n`-dimensional subspace of `U`.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::amap::AMap;
use super::skew::delete;
use crate::algebra::{nullspace, pfaffian, rank, Field, Matrix, PrimeField, Ring};
use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 10007;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplePoint {
    /// Projective coordinates, scaled so the first nonzero entry is 1.
    pub coordinates: Vec<u64>,
    pub rank: usize,
    pub kernel_dim: usize,
    pub jacobian_rank: usize,
    pub smooth_at: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleReport {
    pub n: usize,
    pub k: usize,
    pub prime: u64,
    pub seed: u64,
    pub requested: usize,
    pub method: String,
    pub lines_tried: usize,
    /// True when the line budget ran out before `requested` points were found.
    pub exhausted: bool,
    pub note: Option<String>,
    pub points: Vec<SamplePoint>,
    pub smooth_points: usize,
    /// Kernel dimensions seen at smooth points.
    pub kernel_dims_at_smooth: BTreeMap<usize, usize>,
}

impl SampleReport {
    pub fn smooth_fraction(&self) -> f64 {
        if self.points.is_empty() {
            0.0
        } else {
            self.smooth_points as f64 / self.points.len() as f64
        }
    }
}

/// `sum_r u_r A_r`.
pub fn combine(f: &PrimeField, forms: &[Matrix<u64>], u: &[u64]) -> Matrix<u64> {
    let n = forms[0].len();
    let mut m = vec![vec![0u64; n]; n];
    for (a, &c) in forms.iter().zip(u) {
        if c == 0 {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                m[i][j] = f.add(&m[i][j], &f.mul(&c, &a[i][j]));
            }
        }
    }
    m
}

fn normalize(f: &PrimeField, u: &[u64]) -> Option<Vec<u64>> {
    let lead = *u.iter().find(|&&x| x != 0)?;
    let inv = f.inv(&lead)?;
    Some(u.iter().map(|x| f.mul(x, &inv)).collect())
}

/// Sign of `d Pf / d m_{ij}` for `i < j`: the cofactor is
/// `(-1)^(i+j+1) Pf(M without i, j)`.
fn cofactor_sign(i: usize, j: usize) -> bool {
    (i + j + 1).is_multiple_of(2)
}

/// Gradient of `Pf(sum u_r A_r)` with respect to `u`.
fn pfaffian_gradient(f: &PrimeField, forms: &[Matrix<u64>], m: &Matrix<u64>) -> Vec<u64> {
    let n = m.len();
    let mut grad = vec![0u64; forms.len()];
    for i in 0..n {
        for j in i + 1..n {
            let mut c = pfaffian(f, &delete(m, &[i, j]));
            if c == 0 {
                continue;
            }
            if !cofactor_sign(i, j) {
                c = f.neg(&c);
            }
            for (g, a) in grad.iter_mut().zip(forms) {
                *g = f.add(g, &f.mul(&c, &a[i][j]));
            }
        }
    }
    grad
}

/// Jacobian of the `n` submaximal Pfaffians with respect to `u` (odd `n`).
fn submaximal_jacobian(f: &PrimeField, forms: &[Matrix<u64>], m: &Matrix<u64>) -> Matrix<u64> {
    let n = m.len();
    (0..n)
        .map(|del| {
            let sub = delete(m, &[del]);
            let sub_forms: Vec<Matrix<u64>> = forms.iter().map(|a| delete(a, &[del])).collect();
            pfaffian_gradient(f, &sub_forms, &sub)
        })
        .collect()
}

/// Rank, kernel dimension and Jacobian criterion at the point `u` of `P(U)`.
pub fn analyze_point(f: &PrimeField, forms: &[Matrix<u64>], u: &[u64]) -> SamplePoint {
    let n = forms[0].len();
    let m = combine(f, forms, u);
    let r = rank(f, &m);
    let (jacobian_rank, codim) = if n.is_multiple_of(2) {
        let g = pfaffian_gradient(f, forms, &m);
        (usize::from(g.iter().any(|&x| x != 0)), 1)
    } else {
        (rank(f, &submaximal_jacobian(f, forms, &m)), 3)
    };
    let on_y2 = r + 2 <= n - n % 2;
    SamplePoint {
        coordinates: normalize(f, u).unwrap_or_else(|| u.to_vec()),
        rank: r,
        kernel_dim: n - r,
        jacobian_rank,
        smooth_at: on_y2 && jacobian_rank == codim,
    }
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_vec(rng: &mut ChaCha8Rng, p: u64, len: usize) -> Vec<u64> {
    (0..len).map(|_| rng.gen_range(0..p)).collect()
}

/// Coefficients (constant first) of the polynomial through `(x_i, y_i)`.
fn interpolate(f: &PrimeField, xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let d = xs.len();
    let mut coeffs = vec![0u64; d];
    for i in 0..d {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![1u64];
        let mut denom = 1u64;
        for j in 0..d {
            if i == j {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (e, &c) in basis.iter().enumerate() {
                next[e + 1] = f.add(&next[e + 1], &c);
                next[e] = f.sub(&next[e], &f.mul(&c, &xs[j]));
            }
            basis = next;
            denom = f.mul(&denom, &f.sub(&xs[i], &xs[j]));
        }
        let scale = f.mul(&ys[i], &f.inv(&denom).expect("distinct nodes"));
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c = f.add(c, &f.mul(b, &scale));
        }
    }
    coeffs
}

fn roots(f: &PrimeField, coeffs: &[u64]) -> Vec<u64> {
    (0..f.modulus()).filter(|s| coeffs.iter().rev().fold(0u64, |acc, c| f.add(&f.mul(&acc, s), c)) == 0).collect()
}

fn even_line(f: &PrimeField, forms: &[Matrix<u64>], seed: u64, index: u64) -> Vec<Vec<u64>> {
    let p = f.modulus();
    let k = forms.len();
    let n = forms[0].len();
    let mut rng = stream_rng(seed, index);
    let base = random_vec(&mut rng, p, k);
    let dir = random_vec(&mut rng, p, k);
    let point = |s: u64| -> Vec<u64> { base.iter().zip(&dir).map(|(b, d)| f.add(b, &f.mul(&s, d))).collect() };
    let xs: Vec<u64> = (0..=(n / 2) as u64).collect();
    let ys: Vec<u64> = xs.iter().map(|&s| pfaffian(f, &combine(f, forms, &point(s)))).collect();
    let coeffs = interpolate(f, &xs, &ys);
    if coeffs.iter().all(|&c| c == 0) {
        return Vec::new();
    }
    roots(f, &coeffs).into_iter().map(point).filter(|u| u.iter().any(|&x| x != 0)).collect()
}

fn odd_line(f: &PrimeField, forms: &[Matrix<u64>], basis: &Matrix<u64>, seed: u64, index: u64) -> Vec<Vec<u64>> {
    let p = f.modulus();
    let n = forms[0].len();
    let sub: Vec<Matrix<u64>> =
        (0..basis[0].len()).map(|c| combine(f, forms, &basis.iter().map(|row| row[c]).collect::<Vec<_>>())).collect();
    let mut rng = stream_rng(seed, index);
    let v0 = random_vec(&mut rng, p, n);
    let v1 = random_vec(&mut rng, p, n);
    let mut found = Vec::new();
    for s in 0..p {
        let v: Vec<u64> = v0.iter().zip(&v1).map(|(a, b)| f.add(a, &f.mul(&s, b))).collect();
        // column c of L is A'_c v
        let l: Matrix<u64> = (0..n)
            .map(|i| sub.iter().map(|a| (0..n).fold(0u64, |acc, j| f.add(&acc, &f.mul(&a[i][j], &v[j])))).collect())
            .collect();
        let kernel = nullspace(f, &l, sub.len());
        if kernel.len() != 1 {
            continue;
        }
        let w = &kernel[0];
        let u: Vec<u64> =
            basis.iter().map(|row| row.iter().zip(w).fold(0u64, |acc, (b, x)| f.add(&acc, &f.mul(b, x)))).collect();
        if rank(f, &combine(f, forms, &u)) + 3 <= n {
            found.push(u);
        }
    }
    found
}

/// Up to `count` points of `Y2(F_p)` with their local invariants.
pub fn sample_y2(a: &AMap, p: u64, count: usize, seed: u64) -> Result<SampleReport> {
    if count == 0 {
        return Err(Error::InvalidParams { bound: "points >= 1".into(), detail: "points = 0".into() });
    }
    let f = PrimeField::new(p).filter(|_| p > 2).ok_or_else(|| Error::InvalidParams {
        bound: "p an odd prime below 2^32".into(),
        detail: format!("p = {p}"),
    })?;
    let forms = a.forms_mod(&f)?;
    let (n, k) = (a.n(), a.k());
    let mut report = SampleReport {
        n,
        k,
        prime: p,
        seed,
        requested: count,
        method: String::new(),
        lines_tried: 0,
        exhausted: false,
        note: None,
        points: Vec::new(),
        smooth_points: 0,
        kernel_dims_at_smooth: BTreeMap::new(),
    };
    let even = n % 2 == 0;
    let basis: Matrix<u64> = if even {
        report.method = "roots of the Pfaffian on random lines in P(U)".into();
        Vec::new()
    } else if k < n {
        report.method = "kernel incidence on random lines in P(V)".into();
        report.exhausted = true;
        report.note = Some(format!("odd n needs k >= n for line sampling; got n = {n}, k = {k}"));
        return Ok(report);
    } else {
        report.method = "kernel incidence on random lines in P(V)".into();
        // a random n-dimensional subspace of U, as a k x n matrix of full rank
        let mut stream = u64::MAX;
        loop {
            let mut rng = stream_rng(seed, stream);
            let b: Matrix<u64> = (0..k).map(|_| random_vec(&mut rng, p, n)).collect();
            if k == n || rank(&f, &b) == n {
                break if k == n { (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect() } else { b };
            }
            stream -= 1;
        }
    };

    let budget = if even { (count * 50).max(500) } else { (count * 2).max(40) };
    let batch = rayon::current_num_threads().max(4);
    let mut seen = BTreeSet::new();
    let mut next = 0usize;
    while report.points.len() < count && next < budget {
        let end = (next + batch).min(budget);
        let found: Vec<Vec<Vec<u64>>> = (next..end)
            .into_par_iter()
            .map(|idx| {
                if even {
                    even_line(&f, &forms, seed, idx as u64)
                } else {
                    odd_line(&f, &forms, &basis, seed, idx as u64)
                }
            })
            .collect();
        for (offset, line) in found.into_iter().enumerate() {
            if report.points.len() >= count {
                break;
            }
            report.lines_tried = next + offset + 1;
            for u in line {
                if report.points.len() >= count {
                    break;
                }
                let key = normalize(&f, &u).expect("nonzero point");
                if seen.insert(key) {
                    report.points.push(analyze_point(&f, &forms, &u));
                }
            }
        }
        next = end;
    }
    report.exhausted = report.points.len() < count;
    for pt in report.points.iter().filter(|pt| pt.smooth_at) {
        report.smooth_points += 1;
        *report.kernel_dims_at_smooth.entry(pt.kernel_dim).or_default() += 1;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaffian::amap::{pair_index, Scalars};
    use num_bigint::BigInt;

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = PrimeField::new(101).unwrap();
        let poly = [3u64, 0, 5, 1];
        let xs = [0u64, 1, 2, 3];
        let ys: Vec<u64> = xs.iter().map(|x| poly.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, x), c))).collect();
        assert_eq!(interpolate(&f, &xs, &ys), poly.to_vec());
        let r = roots(&f, &[f.neg(&4), 0, 1]);
        assert_eq!(r, vec![2, 99]);
    }

    #[test]
    fn gradient_matches_directional_derivative() {
        let f = PrimeField::new(10007).unwrap();
        let a = AMap::random(6, 4, 10007, 11).unwrap();
        let forms = a.forms_mod(&f).unwrap();
        let u = [3u64, 17, 29, 5];
        let m = combine(&f, &forms, &u);
        let g = pfaffian_gradient(&f, &forms, &m);
        for r in 0..4 {
            // Pf restricted to the u_r direction is a cubic; its linear
            // coefficient is the directional derivative
            let vals: Vec<u64> = (0..4u64)
                .map(|t| {
                    let mut v = u;
                    v[r] = f.add(&u[r], &t);
                    pfaffian(&f, &combine(&f, &forms, &v))
                })
                .collect();
            let c = interpolate(&f, &[0, 1, 2, 3], &vals);
            assert_eq!(c[1], g[r], "direction {r}");
        }
    }

    #[test]
    fn even_sampling_finds_smooth_points() {
        let a = AMap::random(6, 4, 10007, 1).unwrap();
        let r = sample_y2(&a, 10007, 30, 42).unwrap();
        assert_eq!(r.points.len(), 30);
        for pt in &r.points {
            assert_eq!(pt.rank + pt.kernel_dim, 6);
            assert_eq!(pt.rank % 2, 0);
        }
        assert!(r.smooth_points >= 28);
        assert_eq!(r.kernel_dims_at_smooth.keys().copied().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn odd_sampling_finds_rank_drop() {
        let a = AMap::random(5, 6, 10007, 2).unwrap();
        let r = sample_y2(&a, 10007, 10, 42).unwrap();
        assert!(!r.points.is_empty());
        for pt in &r.points {
            assert!(pt.rank <= 2);
        }
        assert_eq!(r.kernel_dims_at_smooth.keys().copied().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn deterministic_in_seed() {
        let a = AMap::random(6, 3, 10007, 9).unwrap();
        let x = sample_y2(&a, 10007, 12, 5).unwrap();
        let y = sample_y2(&a, 10007, 12, 5).unwrap();
        assert_eq!(x.points, y.points);
    }

    #[test]
    fn deeper_stratum_is_singular() {
        // u_1 is the rank-6 form e12 + e34 + e56 on a 10-dimensional space
        let n = 10;
        let p = 10007;
        let base = AMap::random(n, 5, p, 4).unwrap();
        let mut rows: Vec<Vec<BigInt>> = base.matrix().to_vec();
        rows[0] = vec![BigInt::from(0); 45];
        for (i, j) in [(0, 1), (2, 3), (4, 5)] {
            rows[0][pair_index(n, i, j)] = BigInt::from(1);
        }
        let a = AMap::new(n, 5, Scalars::Prime(p), rows).unwrap();
        let f = PrimeField::new(p).unwrap();
        let forms = a.forms_mod(&f).unwrap();
        let pt = analyze_point(&f, &forms, &[1, 0, 0, 0, 0]);
        assert_eq!(pt.rank, 6);
        assert_eq!(pt.kernel_dim, 4);
        assert!(!pt.smooth_at);
    }

    #[test]
    fn odd_small_k_is_reported() {
        let a = AMap::random(7, 4, 10007, 1).unwrap();
        let r = sample_y2(&a, 10007, 5, 1).unwrap();
        assert!(r.exhausted);
        assert!(r.note.is_some());
    }
}
