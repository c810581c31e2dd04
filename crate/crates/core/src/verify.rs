//! One-shot reproduction of the headline numbers and the property suites,
//! used by `grpf verify-all`.

use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{determinant, pfaffian, Field, PrimeField, Ring};
use crate::bwb::{BwbEngine, BwbResult};
use crate::geometry::{orthogonal_rectangle, window_s, window_sets, ModelParams, WindowSet};
use crate::pfaffian::{build_skew_matrix, hypersurface_hodge, sample_y2, AMap};
use crate::schur::{cauchy_exterior_cotangent, littlewood_richardson};
use crate::sections::{
    h1_tangent_y1, hodge_diamond_y1, lemma_vanishing_all_t, verify_strong_exceptional, Mode, Verdict,
};
use crate::weights::{GLWeight, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Fast,
    Full,
}

/// Deliberate corruption for checking that the suite notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Fault {
    /// Shift the first entry of rho by one in the BWB engine.
    Rho,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub profile: Profile,
    pub seed: u64,
    pub prime: u64,
    pub fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub name: String,
    pub slow: bool,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub profile: Profile,
    pub fault: Option<Fault>,
    pub checks: Vec<CheckOutcome>,
    pub passed: bool,
}

type CheckFn = fn(&VerifyOptions) -> crate::Result<(bool, String)>;

struct Check {
    id: &'static str,
    name: &'static str,
    slow: bool,
    run: CheckFn,
}

const CHECKS: &[Check] = &[
    Check { id: "1", name: "quintic threefold middle row", slow: false, run: quintic },
    Check { id: "2", name: "elevenfold middle cohomology", slow: false, run: elevenfold },
    Check { id: "3", name: "elevenfold deformations", slow: false, run: deformations },
    Check { id: "4", name: "strong exceptionality of S (n = 10, 7)", slow: false, run: collection },
    Check { id: "5", name: "Ext vanishing for all t (n = 8, 10, 12)", slow: false, run: lemma },
    Check { id: "6", name: "window inclusion criterion, 3 <= n <= 14", slow: false, run: inclusion },
    Check { id: "7", name: "orthogonal rectangle at (10, 5)", slow: false, run: rectangle },
    Check { id: "8a", name: "Y2 sampling at (10, 5) and (8, 4)", slow: false, run: sampling_even },
    Check { id: "8b", name: "Y2 sampling at (7, 7)", slow: true, run: sampling_odd },
    Check { id: "9", name: "degree of the 10 x 10 Pfaffian", slow: false, run: pfaffian_degree },
    Check { id: "10a", name: "Serre duality on random weights", slow: false, run: serre_duality },
    Check { id: "10b", name: "Pf^2 = det on random matrices", slow: false, run: pf_squared },
    Check { id: "10c", name: "Cauchy rank conservation, n <= 12", slow: false, run: cauchy_ranks },
    Check { id: "10d", name: "diamond integrity", slow: false, run: diamonds },
    Check { id: "10e", name: "Littlewood-Richardson against Schur polynomials", slow: false, run: lr_oracle },
];

pub fn verify_all(opts: &VerifyOptions) -> VerifyReport {
    let mut checks = Vec::new();
    for c in CHECKS {
        if c.slow && opts.profile == Profile::Fast {
            checks.push(CheckOutcome {
                id: c.id.into(),
                name: c.name.into(),
                slow: true,
                status: Status::Skipped,
                detail: "skipped in the fast profile".into(),
                elapsed_ms: 0,
            });
            continue;
        }
        let start = Instant::now();
        let (status, detail) = match (c.run)(opts) {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        checks.push(CheckOutcome {
            id: c.id.into(),
            name: c.name.into(),
            slow: c.slow,
            status,
            detail,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    VerifyReport { profile: opts.profile, fault: opts.fault, checks, passed }
}

fn nums(v: &[u32]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn quintic(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let row = hypersurface_hodge(4, 5)?.middle_row();
    Ok((row == nums(&[1, 101, 101, 1]), format!("middle row {row:?}")))
}

fn elevenfold(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let h = hodge_diamond_y1(&ModelParams::new(10, 5)?)?;
    let mut expected = vec![BigUint::default(); 12];
    for (p, v) in [(7, 1u32), (6, 101), (5, 101), (4, 1)] {
        expected[11 - p] = BigUint::from(v);
    }
    let row = h.diamond.middle_row();
    Ok((row == expected, format!("middle row {row:?}")))
}

fn deformations(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let r = h1_tangent_y1(&ModelParams::new(10, 5)?)?;
    let h1 = r.exact(1);
    Ok((
        r.mode == Mode::ExactGeneric && h1 == Some(BigUint::from(101u32)),
        format!("h^1(T) = {h1:?}, mode {:?}", r.mode),
    ))
}

fn collection(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [10, 7] {
        let r = verify_strong_exceptional(n, &window_s(n))?;
        ok &= r.passed && r.pairs_checked == r.labels.len().pow(2);
        detail.push(format!("n = {n}: {} pairs, {} failures", r.pairs_checked, r.failures.len()));
    }
    Ok((ok, detail.join("; ")))
}

fn lemma(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in [8, 10, 12] {
        let r = lemma_vanishing_all_t(n)?;
        ok &= r.verdict == Verdict::VanishesForAllT;
        detail.push(format!("n = {n}: {:?} over {} pairs", r.verdict, r.pairs));
    }
    Ok((ok, detail.join("; ")))
}

fn inclusion(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let mut cases = 0;
    for n in 3..=14 {
        for k in 1..=n * (n - 1) / 2 {
            window_sets(&ModelParams::new(n, k)?)?;
            cases += 1;
        }
    }
    Ok((true, format!("{cases} parameter pairs agree")))
}

fn rectangle(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let r = orthogonal_rectangle(&ModelParams::new(10, 5)?);
    let expected = WindowSet::from_labels((0..=3).flat_map(|l| (0..=4).map(move |m| (l, m))));
    Ok((r == expected, format!("{} labels", r.len())))
}

fn sample_case(opts: &VerifyOptions, n: usize, k: usize) -> crate::Result<(bool, String)> {
    let a = AMap::random(n, k, opts.prime, opts.seed)?;
    let r = sample_y2(&a, opts.prime, 100, opts.seed)?;
    let kernel = if n.is_multiple_of(2) { 2 } else { 3 };
    let ok =
        r.points.len() >= 100 && r.kernel_dims_at_smooth.keys().all(|&d| d == kernel) && r.smooth_fraction() >= 0.95;
    Ok((
        ok,
        format!(
            "({n}, {k}): {} points, {:.1}% smooth, kernel dims {:?}",
            r.points.len(),
            100.0 * r.smooth_fraction(),
            r.kernel_dims_at_smooth
        ),
    ))
}

fn sampling_even(opts: &VerifyOptions) -> crate::Result<(bool, String)> {
    let (a, da) = sample_case(opts, 10, 5)?;
    let (b, db) = sample_case(opts, 8, 4)?;
    Ok((a && b, format!("{da}; {db}")))
}

fn sampling_odd(opts: &VerifyOptions) -> crate::Result<(bool, String)> {
    sample_case(opts, 7, 7)
}

fn pfaffian_degree(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let pf = build_skew_matrix(&AMap::universal(10)?)?.pfaffian_polynomial()?;
    let deg = pf.total_degree();
    Ok((deg == Some(5) && pf.is_homogeneous(), format!("degree {deg:?}, {} monomials", pf.num_terms())))
}

fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> GLWeight {
    let span = 2 * n as i64;
    let a2 = rng.gen_range(-span..=span);
    let a1 = a2 + rng.gen_range(0..=span);
    let mut q: Vec<i64> = (0..n - 2).map(|_| rng.gen_range(-span..=span)).collect();
    q.sort_unstable_by(|x, y| y.cmp(x));
    GLWeight::new(n, [a1, a2], q).expect("sorted blocks are dominant")
}

fn serre_duality(opts: &VerifyOptions) -> crate::Result<(bool, String)> {
    let engine = match opts.fault {
        Some(Fault::Rho) => BwbEngine::with_perturbed_rho(1),
        None => BwbEngine::new(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut weights: Vec<GLWeight> = (0..1000)
        .map(|_| {
            let n = rng.gen_range(5..=12);
            random_weight(&mut rng, n)
        })
        .collect();
    // the structure sheaf of every Grassmannian in range
    weights.extend((3..=12).map(|n| GLWeight::line(n, 0).expect("valid rank")));
    for w in &weights {
        let n = w.n() as i64;
        let dual = w.dual().twist(-n);
        let (a, b) = (engine.cohomology(w)?, engine.cohomology(&dual)?);
        let agree = match (&a, &b) {
            (BwbResult::Vanishes, BwbResult::Vanishes) => true,
            (
                BwbResult::Cohomology { degree: d1, dimension: x, .. },
                BwbResult::Cohomology { degree: d2, dimension: y, .. },
            ) => x == y && (d1 + d2) as i64 == 2 * (n - 2),
            _ => false,
        };
        if !agree {
            return Ok((false, format!("{w}: {a:?} but its Serre dual gives {b:?}")));
        }
    }
    Ok((true, format!("{} weights", weights.len())))
}

fn pf_squared(opts: &VerifyOptions) -> crate::Result<(bool, String)> {
    let f = PrimeField::new(opts.prime).ok_or_else(|| crate::Error::InvalidParams {
        bound: "p prime below 2^32".into(),
        detail: format!("p = {}", opts.prime),
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for idx in 0..1000 {
        let n = [8, 10, 12][idx % 3];
        let mut m = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = rng.gen_range(0..opts.prime);
                m[i][j] = c;
                m[j][i] = f.neg(&c);
            }
        }
        let pf = pfaffian(&f, &m);
        if f.mul(&pf, &pf) != determinant(&f, &m) {
            return Ok((false, format!("mismatch on sample {idx} (n = {n})")));
        }
    }
    Ok((true, "1000 matrices of size 8, 10, 12".into()))
}

fn cauchy_ranks(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let mut count = 0;
    for n in 3..=12usize {
        let top = 2 * (n - 2);
        for m in 0..=top {
            let r = cauchy_exterior_cotangent(n, m as i64)?.virtual_rank();
            if r != num_integer::binomial(num_bigint::BigInt::from(top), num_bigint::BigInt::from(m)) {
                return Ok((false, format!("n = {n}, m = {m}: rank {r}")));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} exterior powers")))
}

fn diamonds(_: &VerifyOptions) -> crate::Result<(bool, String)> {
    let mut count = 0;
    for n in 4..=8usize {
        for k in 0..=2 * (n - 2) {
            // hodge_diamond_y1 checks integrity before returning
            hodge_diamond_y1(&ModelParams::new(n, k)?)?;
            count += 1;
        }
    }
    for (n, k) in [(10, 5), (7, 7), (9, 9)] {
        hodge_diamond_y1(&ModelParams::new(n, k)?)?;
        count += 1;
    }
    for ambient in 2..=6 {
        for degree in 1..=6 {
            hypersurface_hodge(ambient, degree)?;
            count += 1;
        }
    }
    Ok((true, format!("{count} diamonds")))
}

/// `s_lambda(x_1..x_m)` as a ratio of alternants, over `F_p`.
fn schur_eval(f: &PrimeField, lambda: &Partition, x: &[u64]) -> u64 {
    let m = x.len();
    if lambda.len() > m {
        return 0;
    }
    let alt = |exps: &dyn Fn(usize) -> u64| -> u64 {
        let mat: Vec<Vec<u64>> = (0..m).map(|i| (0..m).map(|j| f.pow(x[i], exps(j))).collect()).collect();
        determinant(f, &mat)
    };
    let num = alt(&|j| (lambda.part(j) as usize + m - 1 - j) as u64);
    let den = alt(&|j| (m - 1 - j) as u64);
    f.mul(&num, &f.inv(&den).expect("distinct evaluation points"))
}

fn partitions_up_to(total: u32) -> Vec<Partition> {
    (0..=total).flat_map(|s| Partition::all_in_box(s, s as usize, s)).collect()
}

fn distinct_points(rng: &mut ChaCha8Rng, count: usize, p: u64) -> Vec<u64> {
    let mut x: Vec<u64> = Vec::with_capacity(count);
    while x.len() < count {
        let c = rng.gen_range(1..p);
        if !x.contains(&c) {
            x.push(c);
        }
    }
    x
}

fn lr_oracle(opts: &VerifyOptions) -> crate::Result<(bool, String)> {
    let f = PrimeField::new(opts.prime).expect("default prime");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let parts = partitions_up_to(12);
    let mut pairs = 0;
    for lambda in &parts {
        for mu in &parts {
            let total = lambda.size() + mu.size();
            if total > 12 {
                continue;
            }
            let vars = total.max(1) as usize;
            let product = littlewood_richardson(lambda, mu, vars);
            if product != littlewood_richardson(mu, lambda, vars) {
                return Ok((false, format!("c({lambda}, {mu}) is not symmetric")));
            }
            let x = distinct_points(&mut rng, vars, opts.prime);
            let lhs = f.mul(&schur_eval(&f, lambda, &x), &schur_eval(&f, mu, &x));
            let rhs = product
                .iter()
                .fold(0u64, |acc, (nu, c)| f.add(&acc, &f.mul(&(c % opts.prime), &schur_eval(&f, nu, &x))));
            if lhs != rhs {
                return Ok((false, format!("s_{lambda} s_{mu} disagrees with its LR expansion")));
            }
            pairs += 1;
        }
    }
    Ok((true, format!("{pairs} pairs with |lambda| + |mu| <= 12")))
}
