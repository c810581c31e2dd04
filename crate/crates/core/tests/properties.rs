use grpf::algebra::{determinant, pfaffian, rank, PrimeField, Ring};
use grpf::bwb::{bwb_cohomology, cohomology_of_kclass, BwbResult};
use grpf::geometry::{classify, orthogonal_rectangle, window_s, window_sets, ModelParams};
use grpf::pfaffian::{build_skew_matrix_mod, knorrer_check, lg_ext_profile, sample_y2, stratum_scaling, AMap};
use grpf::schur::{cauchy_exterior_cotangent, clebsch_gordan_rank2};
use grpf::sections::collection::hom_table;
use grpf::sections::{hodge_diamond_y1, lemma_vanishing_all_t, omega_p_class, restricted_euler, rhom, Verdict};
use grpf::weights::{grassmannian_poincare, rho, weyl_dimension, GLWeight};
use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use proptest::prelude::*;

const P: u64 = 10007;

fn weight_strategy() -> impl Strategy<Value = GLWeight> {
    (5usize..=12).prop_flat_map(|n| {
        let span = 2 * n as i64;
        (-span..=span, 0..=span, proptest::collection::vec(-span..=span, n - 2)).prop_map(move |(a2, gap, mut q)| {
            q.sort_unstable_by(|x, y| y.cmp(x));
            GLWeight::new(n, [a2 + gap, a2], q).unwrap()
        })
    })
}

fn skew_strategy(sizes: &'static [usize]) -> impl Strategy<Value = Vec<Vec<u64>>> {
    proptest::sample::select(sizes).prop_flat_map(|n| {
        proptest::collection::vec(0..P, n * (n - 1) / 2).prop_map(move |entries| {
            let f = PrimeField::new(P).unwrap();
            let mut m = vec![vec![0u64; n]; n];
            let mut it = entries.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let c = it.next().unwrap();
                    m[i][j] = c;
                    m[j][i] = f.neg(&c);
                }
            }
            m
        })
    })
}

#[test]
fn rho_shape() {
    for n in 3..=30 {
        let r = rho(n).unwrap();
        assert_eq!((r[0], *r.last().unwrap()), (n as i64, 1));
        assert!(r.windows(2).all(|w| w[0] > w[1]));
    }
}

#[test]
fn poincare_palindromic_with_binomial_total() {
    for n in 3..=20 {
        let p = grassmannian_poincare(n).unwrap();
        assert!(p.is_palindromic(), "n = {n}");
        assert_eq!(p.total(), BigUint::from(n * (n - 1) / 2));
    }
}

#[test]
fn cauchy_rank_conservation() {
    for n in 3..=12usize {
        let top = 2 * (n - 2);
        for m in 0..=top {
            let r = cauchy_exterior_cotangent(n, m as i64).unwrap().virtual_rank();
            assert_eq!(r, binomial(BigInt::from(top), BigInt::from(m)), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn clebsch_gordan_dimensions() {
    for l in 0..=30u32 {
        for lp in 0..=30u32 {
            let total: u32 = clebsch_gordan_rank2(l, lp).iter().map(|&(d, _)| d + 1).sum();
            assert_eq!(total, (l + 1) * (lp + 1));
        }
    }
}

#[test]
fn hodge_theory_of_the_grassmannian() {
    for n in 3..=12usize {
        let poincare = grassmannian_poincare(n).unwrap();
        for p in 0..=2 * (n - 2) {
            let c = cauchy_exterior_cotangent(n, p as i64).unwrap();
            let h = cohomology_of_kclass(&c, 0).unwrap();
            assert!(h.negative.is_zero());
            let entries = h.positive.entries();
            let expected = poincare.coefficient(p);
            if expected == BigUint::default() {
                assert!(h.positive.is_zero());
            } else {
                assert_eq!(entries.len(), 1, "n = {n}, p = {p}: {entries:?}");
                assert_eq!(h.positive.get(p), expected);
            }
        }
    }
}

#[test]
fn window_inclusion_grid_and_classification() {
    for n in 3..=14usize {
        let mut previous = usize::MAX;
        for k in 1..=n * (n - 1) / 2 {
            let p = ModelParams::new(n, k).unwrap();
            let w = window_sets(&p).unwrap();
            assert_eq!(w.inclusion, w.inclusion_formula);
            let c = classify(&p);
            assert_eq!(c, classify(&p));
            let smooth = if n % 2 == 0 { k <= 6 } else { k <= 10 };
            assert_eq!(c.y2_smoothable, smooth, "n = {n}, k = {k}");
            let rect = orthogonal_rectangle(&p);
            assert!(rect.is_subset(&window_s(n)));
            assert!(rect.len() <= previous);
            previous = rect.len();
        }
    }
}

#[test]
fn diamond_integrity_and_chi_two_ways() {
    for n in 4..=9usize {
        for k in 0..=2 * (n - 2) {
            let p = ModelParams::new(n, k).unwrap();
            let y = hodge_diamond_y1(&p).unwrap();
            y.diamond.check_integrity(Some(&y.chi)).unwrap();
            let d = y.diamond.dim();
            if d > 0 {
                // a zero-dimensional section is deg Gr points
                assert_eq!(y.diamond.get(0, 0), BigUint::from(1u32));
            }
            let chi_sum: BigInt = (0..=d).map(|q| if q % 2 == 0 { y.chi[q].clone() } else { -y.chi[q].clone() }).sum();
            assert_eq!(y.diamond.euler_number(), chi_sum);
            for q in 0..=d {
                let direct = restricted_euler(&p, &omega_p_class(&p, q as i64).unwrap()).unwrap();
                assert_eq!(direct, y.diamond.chi_p(q), "n = {n}, k = {k}, p = {q}");
            }
            // off-middle entries come from the Grassmannian
            let poincare = grassmannian_poincare(n).unwrap();
            for j in 0..d {
                if 2 * j < d {
                    assert_eq!(y.diamond.get(j, j), poincare.coefficient(j));
                }
            }
        }
    }
}

#[test]
fn omega_ranks_at_ten_five() {
    let p = ModelParams::new(10, 5).unwrap();
    for q in 0..=11i64 {
        let r = omega_p_class(&p, q).unwrap().virtual_rank();
        assert_eq!(r, binomial(BigInt::from(11), BigInt::from(q)));
    }
}

#[test]
fn enumerative_and_symbolic_paths_agree() {
    for n in [6usize, 8] {
        assert_eq!(lemma_vanishing_all_t(n).unwrap().verdict, Verdict::VanishesForAllT);
        let s = window_s(n);
        let k = n / 2;
        let homs = hom_table(n, &s, 0..=k as i64).unwrap();
        for ((e, f, t), dim) in homs {
            let r = rhom(n, e, f, t).unwrap();
            assert!(r.iter().all(|x| !x.result.has_higher()));
            let euler: BigInt = r.iter().map(|x| x.result.euler()).sum();
            assert_eq!(BigInt::from(dim), euler);
        }
    }
}

#[test]
fn census_scaling_within_factor_three() {
    for n in 3..=8usize {
        let top = n - n % 2;
        let mut r = top;
        while r >= 2 {
            r -= 2;
            let s = stratum_scaling(n, r, P).unwrap();
            assert!((1.0 / 3.0..=3.0).contains(&s), "n = {n}, r = {r}: {s}");
        }
    }
}

#[test]
fn lg_profile_total_rank() {
    for x in 0..=12i64 {
        for a in 0..=x {
            for b in 0..=x {
                for ab in 0..=a.min(b) {
                    if let Ok(profile) = lg_ext_profile(x, a, b, ab) {
                        let r = x - a - b + ab;
                        let total: BigUint = profile.iter().map(|(_, c)| c.clone()).sum();
                        assert_eq!(total, BigUint::from(2u32).pow(r as u32));
                    }
                }
            }
        }
    }
    for s in [2i64, 4, 6] {
        for v in [2i64, 4, 6, 8] {
            assert!(knorrer_check(s, v).unwrap().consistent, "s = {s}, v = {v}");
        }
    }
}

#[test]
fn sampled_points_have_even_rank_and_expected_kernels() {
    for (n, k) in [(6usize, 3usize), (8, 4), (5, 5)] {
        let a = AMap::random(n, k, P, 11).unwrap();
        let r = sample_y2(&a, P, 30, 11).unwrap();
        let kernel = if n % 2 == 0 { 2 } else { 3 };
        for pt in &r.points {
            assert_eq!(pt.rank % 2, 0);
            assert_eq!(pt.rank + pt.kernel_dim, n);
            if pt.smooth_at {
                assert_eq!(pt.kernel_dim, kernel);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weyl_dimension_ignores_determinant_twist(w in weight_strategy(), c in -20i64..20) {
        let mut v = w.to_vec();
        v.sort_unstable_by(|x, y| y.cmp(x));
        let shifted: Vec<i64> = v.iter().map(|x| x + c).collect();
        prop_assert_eq!(weyl_dimension(&v).unwrap(), weyl_dimension(&shifted).unwrap());
    }

    #[test]
    fn bwb_single_degree_with_dominant_output(w in weight_strategy()) {
        let n = w.n();
        match bwb_cohomology(&w).unwrap() {
            BwbResult::Vanishes => {}
            BwbResult::Cohomology { degree, weight, dimension } => {
                prop_assert!(degree <= 2 * (n - 2));
                prop_assert!(weight.windows(2).all(|x| x[0] >= x[1]));
                prop_assert_eq!(weyl_dimension(&weight).unwrap(), dimension);
            }
        }
    }

    #[test]
    fn serre_duality(w in weight_strategy()) {
        let n = w.n();
        let a = bwb_cohomology(&w).unwrap();
        let b = bwb_cohomology(&w.dual().twist(-(n as i64))).unwrap();
        match (a.degree(), b.degree()) {
            (None, None) => {}
            (Some(i), Some(j)) => {
                prop_assert_eq!(i + j, 2 * (n - 2));
                prop_assert_eq!(a.dimension(), b.dimension());
            }
            _ => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn pfaffian_squared_is_determinant(m in skew_strategy(&[2, 4, 6, 8, 10, 12])) {
        let f = PrimeField::new(P).unwrap();
        let pf = pfaffian(&f, &m);
        prop_assert_eq!(f.mul(&pf, &pf), determinant(&f, &m));
        prop_assert_eq!(rank(&f, &m) % 2, 0);
    }

    #[test]
    fn odd_skew_matrices_are_singular(m in skew_strategy(&[3, 5, 7, 9])) {
        let f = PrimeField::new(P).unwrap();
        prop_assert_eq!(determinant(&f, &m), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn ten_by_ten_pfaffian_is_a_quintic(seed in any::<u64>()) {
        let f = PrimeField::new(P).unwrap();
        let a = AMap::random(10, 5, P, seed).unwrap();
        let pf = build_skew_matrix_mod(&a, &f).unwrap().pfaffian_polynomial().unwrap();
        prop_assert_eq!(pf.total_degree(), Some(5));
        prop_assert!(pf.is_homogeneous());
    }
}
