use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::diamond::HodgeDiamond;
use super::koszul::{omega_p_class, restricted_cohomology, restricted_euler, CohomologyResult, DegreeValue, Mode};
use crate::error::{Error, Result};
use crate::geometry::ModelParams;
use crate::schur::KClass;
use crate::weights::{gaussian_binomial, GLWeight};

/// Hodge diamond of `Y1` together with the data it was solved from.
#[derive(Debug, Clone, Serialize)]
pub struct Y1Hodge {
    pub n: usize,
    pub k: usize,
    pub diamond: HodgeDiamond,
    /// `chi(Y1, Omega^p)` for `p = 0..=dim`, from the Koszul sums.
    #[serde(serialize_with = "crate::json::decimal_vec")]
    pub chi: Vec<BigInt>,
    /// `Y1` is cut out by sections of the ample bundle `O(1)`, so Lefschetz
    /// fixes every entry off the middle row.
    pub lefschetz_gate: bool,
    pub theorem_applies: bool,
    /// Set when the parameters lie outside the range where the diamond is
    /// claimed; the numbers are then only as good as the genericity of `A`.
    pub heuristic: bool,
}

/// Off-middle rows from the Grassmannian, middle row from `chi(Omega^p)`.
pub fn hodge_diamond_y1(p: &ModelParams) -> Result<Y1Hodge> {
    let d = p.dim_y1();
    if d < 0 {
        return Err(Error::Dimension(format!("Y1 is empty for n = {}, k = {}", p.n(), p.k())));
    }
    let d = d as usize;
    // zero locus of a section of a direct sum of ample line bundles
    let lefschetz_gate = true;

    let chi: Vec<BigInt> = (0..=d)
        .into_par_iter()
        .map(|deg| restricted_euler(p, &omega_p_class(p, deg as i64)?))
        .collect::<Result<_>>()?;

    let ambient = gaussian_binomial(p.n(), 2);
    let mut diamond = HodgeDiamond::zero(d);
    for a in 0..=d {
        for b in 0..=d {
            if a + b < d && a == b {
                diamond.set(a, b, ambient.get(a).cloned().unwrap_or_default());
            } else if a + b > d && a == b {
                diamond.set(a, b, ambient.get(d - a).cloned().unwrap_or_default());
            }
        }
    }
    for a in 0..=d {
        let b = d - a;
        let known: BigInt = (0..=d)
            .filter(|&q| q != b)
            .map(|q| {
                let x = BigInt::from(diamond.get(a, q));
                if q % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .sum();
        let mut v = &chi[a] - known;
        if b % 2 == 1 {
            v = -v;
        }
        if v.is_negative() {
            return Err(Error::Integrity(format!("h^({a},{b}) solves to {v}")));
        }
        diamond.set(a, b, v.to_biguint().expect("non-negative"));
    }
    diamond.check_integrity(Some(&chi))?;
    let theorem_applies = p.theorem_applies();
    Ok(Y1Hodge { n: p.n(), k: p.k(), diamond, chi, lefschetz_gate, theorem_applies, heuristic: !theorem_applies })
}

fn tangent_class(n: usize) -> Result<KClass> {
    let mut q = vec![0i64; n - 2];
    q[n - 3] = -1;
    Ok(KClass::irreducible(GLWeight::new(n, [1, 0], q)?))
}

/// `H^*(Y1, T_{Y1})` in degrees 0 and 1 from
/// `0 -> T_{Y1} -> T_Gr|_{Y1} -> O(1)^k|_{Y1} -> 0`.
///
/// Both restricted bundles go through [`restricted_cohomology`]. The map on
/// global sections is taken to have maximal rank, which is what a generic
/// family of forms gives; results relying on it carry [`Mode::ExactGeneric`].
pub fn h1_tangent_y1(p: &ModelParams) -> Result<CohomologyResult> {
    let n = p.n();
    let k = p.k();
    let tangent = restricted_cohomology(p, &tangent_class(n)?)?;
    if k == 0 {
        let mut degrees = tangent.degrees.clone();
        degrees.retain(|j, _| *j == 0 || *j == 1);
        return Ok(CohomologyResult {
            mode: tangent.mode,
            degrees,
            euler: tangent.euler,
            resolution: "no section taken: T_Y is the tangent bundle of the Grassmannian".into(),
            provenance: tangent.provenance,
        });
    }
    let normal_class = KClass::line(n, 1)?.scale(&BigInt::from(k));
    let normal = restricted_cohomology(p, &normal_class)?;

    let mut provenance = tangent.provenance.clone();
    provenance.extend(normal.provenance.iter().cloned());
    let euler = &tangent.euler - &normal.euler;

    let exact = (tangent.exact(0), tangent.exact(1), normal.exact(0), normal.exact(1));
    if let (Some(h0t), Some(h1t), Some(h0n), Some(h1n)) = exact {
        if h1n.is_zero() {
            let rank = (&h0t).min(&h0n).clone();
            let h0 = &h0t - &rank;
            let h1 = &h0n - &rank + &h1t;
            let mode = if h0t.is_zero() || h0n.is_zero() { Mode::Exact } else { Mode::ExactGeneric };
            let degrees =
                [(0i64, h0), (1, h1)].into_iter().map(|(j, v)| (j, DegreeValue::Exact { value: v })).collect();
            return Ok(CohomologyResult {
                mode,
                degrees,
                euler,
                resolution: format!(
                    "h0(T_Gr|Y) = {h0t}, h1(T_Gr|Y) = {h1t}, h0(N) = {h0n}, h1(N) = 0; \
                     H0(T_Gr|Y) -> H0(N) assumed of maximal rank"
                ),
                provenance,
            });
        }
    }
    // h^1(T_Y) <= h^0(N) + h^1(T_Gr|Y), and >= h^0(N) - h^0(T_Gr|Y)
    let h0t = tangent.h(0);
    let h0n = normal.h(0);
    let h1t = tangent.h(1);
    let upper: BigUint = h0n.upper() + h1t.upper();
    let lower = if h0n.lower() > h0t.upper() { h0n.lower() - h0t.upper() } else { BigUint::zero() };
    let degrees = [(1i64, DegreeValue::Bounds { lower, upper })].into_iter().collect();
    Ok(CohomologyResult {
        mode: Mode::Bounds,
        degrees,
        euler,
        resolution: "restricted tangent or normal cohomology not determined; bounds from the long exact sequence"
            .into(),
        provenance,
    })
}
