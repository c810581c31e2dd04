//! Koszul-resolution bookkeeping for `Y1`, the zero locus of a section of
//! `O(1)^k` on Gr(2,n): Euler characteristics of restricted classes, the
//! K-theory class of `Omega^p_{Y1}`, and the page-one analysis of the
//! hypercohomology spectral sequence.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::bwb::{cohomology_of_kclass, euler_characteristic, BwbResult};
use crate::error::{Error, Result};
use crate::geometry::ModelParams;
use crate::schur::{cauchy_exterior_cotangent, KClass};
use crate::weights::GLWeight;

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `chi(Y1, c|_{Y1}) = sum_a (-1)^a C(k,a) chi(Gr, c(-a))`.
pub fn restricted_euler(p: &ModelParams, c: &KClass) -> Result<BigInt> {
    let k = p.k() as i64;
    let mut total = BigInt::zero();
    for a in 0..=k {
        let chi = euler_characteristic(c, -a)? * binom(k, a);
        if a % 2 == 0 {
            total += chi;
        } else {
            total -= chi;
        }
    }
    Ok(total)
}

/// `lambda^deg([Omega_Gr] - k [O(-1)])`
/// `= sum_i (-1)^i C(k+i-1, i) wedge^{deg-i} Omega_Gr (x) O(-i)`.
pub fn omega_p_class(p: &ModelParams, deg: i64) -> Result<KClass> {
    let n = p.n();
    let k = p.k() as i64;
    let mut class = KClass::zero(n);
    if deg < 0 {
        return Ok(class);
    }
    for i in 0..=deg {
        // Sym^i of a rank-k bundle
        let mult = if k == 0 { BigInt::from((i == 0) as i64) } else { binom(k + i - 1, i) };
        if mult.is_zero() {
            continue;
        }
        let signed = if i % 2 == 0 { mult } else { -mult };
        let term = cauchy_exterior_cotangent(n, deg - i)?.tensor_by_line(-i).scale(&signed);
        class = class.add(&term)?;
    }
    Ok(class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Determined unconditionally.
    Exact,
    /// Determined under the assumption that the family of forms is generic.
    ExactGeneric,
    /// Only bounds are known.
    Bounds,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum DegreeValue {
    Exact {
        #[serde(serialize_with = "crate::json::decimal")]
        value: BigUint,
    },
    Bounds {
        #[serde(serialize_with = "crate::json::decimal")]
        lower: BigUint,
        #[serde(serialize_with = "crate::json::decimal")]
        upper: BigUint,
    },
}

impl DegreeValue {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            DegreeValue::Exact { value } => Some(value),
            DegreeValue::Bounds { .. } => None,
        }
    }

    pub fn upper(&self) -> &BigUint {
        match self {
            DegreeValue::Exact { value } => value,
            DegreeValue::Bounds { upper, .. } => upper,
        }
    }

    pub fn lower(&self) -> &BigUint {
        match self {
            DegreeValue::Exact { value } => value,
            DegreeValue::Bounds { lower, .. } => lower,
        }
    }
}

/// One page-one entry of the Koszul spectral sequence: the term
/// `c(-a)^{C(k,a)}` at homological position `a`, with its BWB outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulTerm {
    pub a: usize,
    pub weight: GLWeight,
    #[serde(serialize_with = "crate::json::decimal")]
    pub multiplicity: BigInt,
    pub result: BwbResult,
}

/// Cohomology of `c|_{Y1}` by degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyResult {
    pub mode: Mode,
    pub degrees: BTreeMap<i64, DegreeValue>,
    #[serde(serialize_with = "crate::json::decimal")]
    pub euler: BigInt,
    /// How the values were obtained.
    pub resolution: String,
    pub provenance: Vec<KoszulTerm>,
}

impl CohomologyResult {
    pub fn h(&self, j: i64) -> DegreeValue {
        self.degrees.get(&j).cloned().unwrap_or(DegreeValue::Exact { value: BigUint::zero() })
    }

    /// `h^j` if exactly known.
    pub fn exact(&self, j: i64) -> Option<BigUint> {
        self.h(j).exact().cloned()
    }
}

/// Cohomology of `c|_{Y1}` for an honest bundle `c`, from page one of the
/// spectral sequence `E1^{-a,q} = H^q(Gr, c(-a))^{C(k,a)} => H^{q-a}(Y1, c|_{Y1})`.
///
/// Exact when no differential can connect two nonzero entries. Otherwise
/// degrees outside `[0, dim Y1]` are zero, every degree is bounded by its
/// neighbours, and if a single degree remains undetermined it is solved
/// from the Euler characteristic; failing that the result is `Bounds`.
pub fn restricted_cohomology(p: &ModelParams, c: &KClass) -> Result<CohomologyResult> {
    if !c.is_effective() {
        return Err(Error::Dimension("restricted cohomology needs a class with positive multiplicities".into()));
    }
    let k = p.k();
    let dim_y = p.dim_y1();
    if dim_y < 0 {
        return Err(Error::Dimension(format!("Y1 is empty for n = {}, k = {k}", p.n())));
    }
    // (a, q) -> dimension
    let mut page: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    let mut provenance = Vec::new();
    for a in 0..=k {
        let copies = binomial(BigUint::from(k), BigUint::from(a));
        let h = cohomology_of_kclass(c, -(a as i64))?;
        for (q, dim) in h.positive.entries() {
            *page.entry((a, *q)).or_default() += dim * &copies;
        }
        for t in h.terms {
            if t.result != BwbResult::Vanishes {
                provenance.push(KoszulTerm {
                    a,
                    weight: t.weight,
                    multiplicity: t.multiplicity * BigInt::from(copies.clone()),
                    result: t.result,
                });
            }
        }
    }

    let mut sums: BTreeMap<i64, BigUint> = BTreeMap::new();
    for ((a, q), d) in &page {
        *sums.entry(*q as i64 - *a as i64).or_default() += d;
    }
    let euler: BigInt = sums
        .iter()
        .map(|(j, d)| if j.rem_euclid(2) == 0 { BigInt::from(d.clone()) } else { -BigInt::from(d.clone()) })
        .sum();

    // d_r : E^{-a,q} -> E^{-a+r, q-r+1}
    let conflict = page.keys().any(|&(a, q)| (1..=a).any(|r| q + 1 >= r && page.contains_key(&(a - r, q + 1 - r))));
    if !conflict {
        let degrees = sums.into_iter().map(|(j, v)| (j, DegreeValue::Exact { value: v })).collect();
        return Ok(CohomologyResult {
            mode: Mode::Exact,
            degrees,
            euler,
            resolution: "page one degenerates: no differential joins two nonzero entries".into(),
            provenance,
        });
    }

    let get = |j: i64| sums.get(&j).cloned().unwrap_or_default();
    let mut bounds: BTreeMap<i64, (BigUint, BigUint)> = BTreeMap::new();
    let lo_j = sums.keys().next().copied().unwrap_or(0).min(0);
    let hi_j = sums.keys().last().copied().unwrap_or(0).max(dim_y);
    for j in lo_j..=hi_j {
        if j < 0 || j > dim_y {
            bounds.insert(j, (BigUint::zero(), BigUint::zero()));
            continue;
        }
        let upper = get(j);
        let killers = get(j - 1) + get(j + 1);
        let lower = if upper > killers { &upper - &killers } else { BigUint::zero() };
        bounds.insert(j, (lower, upper));
    }
    let open: Vec<i64> = bounds.iter().filter(|(_, (lo, hi))| lo != hi).map(|(j, _)| *j).collect();
    let mut resolution = String::from("degrees outside [0, dim Y1] vanish; neighbour bounds");
    let mut mode = Mode::Bounds;
    if open.len() == 1 {
        let j = open[0];
        let rest: BigInt = bounds
            .iter()
            .filter(|(i, _)| **i != j)
            .map(|(i, (v, _))| if i.rem_euclid(2) == 0 { BigInt::from(v.clone()) } else { -BigInt::from(v.clone()) })
            .sum();
        let signed = &euler - rest;
        let value = if j.rem_euclid(2) == 0 { signed } else { -signed };
        let (lo, hi) = &bounds[&j];
        if value.is_negative() || value < BigInt::from(lo.clone()) || value > BigInt::from(hi.clone()) {
            return Err(Error::Integrity(format!("Euler characteristic forces h^{j} = {value} outside [{lo}, {hi}]")));
        }
        let v = value.to_biguint().expect("checked non-negative");
        bounds.insert(j, (v.clone(), v));
        resolution.push_str(&format!("; h^{j} solved from the Euler characteristic"));
        mode = Mode::Exact;
    }
    let degrees = bounds
        .into_iter()
        .filter(|(_, (lo, hi))| !(lo.is_zero() && hi.is_zero()))
        .map(|(j, (lo, hi))| {
            let v =
                if lo == hi { DegreeValue::Exact { value: lo } } else { DegreeValue::Bounds { lower: lo, upper: hi } };
            (j, v)
        })
        .collect();
    Ok(CohomologyResult { mode, degrees, euler, resolution, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: usize) -> ModelParams {
        ModelParams::new(n, k).unwrap()
    }

    #[test]
    fn euler_of_structure_sheaf() {
        let o = KClass::trivial(10).unwrap();
        assert_eq!(restricted_euler(&params(10, 5), &o).unwrap(), BigInt::from(1));
        let o7 = KClass::trivial(7).unwrap();
        assert_eq!(restricted_euler(&params(7, 7), &o7).unwrap(), BigInt::from(0));
    }

    #[test]
    fn empty_koszul_complex() {
        let c = cauchy_exterior_cotangent(6, 2).unwrap().tensor_by_line(1);
        assert_eq!(restricted_euler(&params(6, 0), &c).unwrap(), euler_characteristic(&c, 0).unwrap());
    }

    #[test]
    fn omega_class_ranks() {
        let p = params(10, 5);
        assert_eq!(omega_p_class(&p, 0).unwrap(), KClass::trivial(10).unwrap());
        for deg in 0..=11i64 {
            let r = omega_p_class(&p, deg).unwrap().virtual_rank();
            assert_eq!(r, binom(11, deg), "deg {deg}");
        }
    }

    #[test]
    fn sections_of_hyperplane_class() {
        // H^0(Y1, O(1)) = 45 - 5: the Koszul entry in degree -1 must die.
        let p = params(10, 5);
        let r = restricted_cohomology(&p, &KClass::line(10, 1).unwrap()).unwrap();
        assert_eq!(r.mode, Mode::Exact);
        assert_eq!(r.exact(0), Some(BigUint::from(40u32)));
        assert_eq!(r.exact(-1), Some(BigUint::zero()));
    }

    #[test]
    fn structure_sheaf_degenerates() {
        let p = params(10, 5);
        let r = restricted_cohomology(&p, &KClass::trivial(10).unwrap()).unwrap();
        assert_eq!(r.mode, Mode::Exact);
        assert_eq!(r.degrees.len(), 1);
        assert_eq!(r.exact(0), Some(BigUint::from(1u32)));
    }

    #[test]
    fn rejects_virtual_classes() {
        let p = params(6, 2);
        let c = KClass::trivial(6).unwrap().scale(&BigInt::from(-1));
        assert!(restricted_cohomology(&p, &c).is_err());
    }
}
