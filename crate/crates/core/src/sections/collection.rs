//! Ext groups between the bundles `Sym^l S (x) (det S)^m` on Gr(2,n) and the
//! strong-exceptionality check for a finite set of them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bwb::{bwb_cohomology, BwbResult};
use crate::error::Result;
use crate::geometry::WindowSet;
use crate::schur::clebsch_gordan_rank2;
use crate::weights::GLWeight;

/// A bundle `Sym^l S (x) (det S)^m`, i.e. `Sym^l S(-m)`.
pub type Label = (u32, i64);

/// One Clebsch-Gordan summand `Sym^{l+l'-2i} S^v (x) (det S^v)^(i + m - m' - l' + t)`
/// of `Hom(E, F(t))` and its cohomology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummandCohomology {
    pub i: u32,
    pub weight: GLWeight,
    pub result: BwbResult,
}

/// The S^v-side weight of summand `i` of `Hom(E, F(t))`.
pub fn summand_weight(e: Label, f: Label, i: u32, t: i64) -> [i64; 2] {
    let (l, m) = e;
    let (lp, mp) = f;
    [m - mp + l as i64 - i as i64 + t, m - mp - lp as i64 + i as i64 + t]
}

/// `RHom(E, F(t))` as a list of irreducible summands.
pub fn rhom(n: usize, e: Label, f: Label, t: i64) -> Result<Vec<SummandCohomology>> {
    let mut out = Vec::new();
    for (_, i) in clebsch_gordan_rank2(e.0, f.0) {
        let [a1, a2] = summand_weight(e, f, i, t);
        let weight = GLWeight::s_only(n, a1, a2)?;
        let result = bwb_cohomology(&weight)?;
        out.push(SummandCohomology { i, weight, result });
    }
    Ok(out)
}

/// Dimension of `Ext^j(E, F(t))`.
pub fn ext_dimension(summands: &[SummandCohomology], j: usize) -> BigUint {
    summands.iter().map(|s| s.result.h(j)).sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtFailure {
    pub source: Label,
    pub target: Label,
    pub summand: u32,
    pub weight: GLWeight,
    pub degree: usize,
    #[serde(serialize_with = "crate::json::decimal")]
    pub dimension: BigUint,
}

#[derive(Debug, Clone, Serialize)]
pub struct CollectionReport {
    pub n: usize,
    pub labels: Vec<Label>,
    /// `hom[a][b] = dim Hom(labels[a], labels[b])`.
    #[serde(serialize_with = "crate::json::decimal_matrix")]
    pub hom: Vec<Vec<BigUint>>,
    pub pairs_checked: usize,
    /// Nonzero higher Ext groups.
    pub failures: Vec<ExtFailure>,
    /// Labels whose endomorphism algebra is not one-dimensional.
    pub non_simple: Vec<Label>,
    /// An ordering with no Hom from a later object to an earlier one, if
    /// the Hom graph has no cycles.
    pub order: Option<Vec<Label>>,
    pub passed: bool,
}

/// Checks `Ext^{>0}(E, F) = 0` for every ordered pair, `Hom(E, E) = C`,
/// and that the nonzero Homs admit a compatible total order.
pub fn verify_strong_exceptional(n: usize, set: &WindowSet) -> Result<CollectionReport> {
    let labels = set.labels();
    let size = labels.len();
    let pairs: Vec<(usize, usize)> = (0..size).flat_map(|a| (0..size).map(move |b| (a, b))).collect();
    let computed: Vec<((usize, usize), Vec<SummandCohomology>)> =
        pairs.par_iter().map(|&(a, b)| rhom(n, labels[a], labels[b], 0).map(|r| ((a, b), r))).collect::<Result<_>>()?;

    let mut hom = vec![vec![BigUint::zero(); size]; size];
    let mut failures = Vec::new();
    for ((a, b), summands) in &computed {
        hom[*a][*b] = ext_dimension(summands, 0);
        for s in summands {
            if s.result.has_higher() {
                failures.push(ExtFailure {
                    source: labels[*a],
                    target: labels[*b],
                    summand: s.i,
                    weight: s.weight.clone(),
                    degree: s.result.degree().unwrap_or(0),
                    dimension: s.result.dimension(),
                });
            }
        }
    }
    let non_simple: Vec<Label> = (0..size).filter(|&a| !hom[a][a].is_one()).map(|a| labels[a]).collect();
    let order = topological_order(&labels, &hom);
    let passed = failures.is_empty() && non_simple.is_empty() && order.is_some();
    Ok(CollectionReport { n, labels, hom, pairs_checked: pairs.len(), failures, non_simple, order, passed })
}

/// Kahn's algorithm on the graph `a -> b` whenever `Hom(a, b) != 0`, taking
/// the smallest available label first so the result is deterministic.
fn topological_order(labels: &[Label], hom: &[Vec<BigUint>]) -> Option<Vec<Label>> {
    let size = labels.len();
    let mut indegree = vec![0usize; size];
    for a in 0..size {
        for b in 0..size {
            if a != b && !hom[a][b].is_zero() {
                indegree[b] += 1;
            }
        }
    }
    let mut ready: BTreeSet<(Label, usize)> = (0..size).filter(|&a| indegree[a] == 0).map(|a| (labels[a], a)).collect();
    let mut order = Vec::with_capacity(size);
    while let Some(first) = ready.iter().next().copied() {
        ready.remove(&first);
        let a = first.1;
        order.push(labels[a]);
        for b in 0..size {
            if a != b && !hom[a][b].is_zero() {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.insert((labels[b], b));
                }
            }
        }
    }
    (order.len() == size).then_some(order)
}

/// `dim Hom(E, F(t))` for every ordered pair and every `t` in `ts`.
pub fn hom_table(
    n: usize,
    set: &WindowSet,
    ts: impl IntoIterator<Item = i64>,
) -> Result<BTreeMap<(Label, Label, i64), BigUint>> {
    let labels = set.labels();
    let mut out = BTreeMap::new();
    for t in ts {
        for &e in &labels {
            for &f in &labels {
                out.insert((e, f, t), ext_dimension(&rhom(n, e, f, t)?, 0));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{window_s, window_t, ModelParams};

    #[test]
    fn weight_matches_leading_summand() {
        // i = 0 gives (m - m' + l + t, m - m' - l' + t)
        assert_eq!(summand_weight((2, 3), (1, 5), 0, 4), [4, 1]);
    }

    #[test]
    fn endomorphisms_of_line_bundle() {
        let r = rhom(10, (0, 3), (0, 3), 0).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(ext_dimension(&r, 0), BigUint::one());
    }

    #[test]
    fn hom_from_o_to_o1() {
        // Hom(O, O(1)) = wedge^2 V^v
        let r = rhom(6, (0, 0), (0, 0), 1).unwrap();
        assert_eq!(ext_dimension(&r, 0), BigUint::from(15u32));
    }

    #[test]
    fn hom_sym_s_to_o() {
        // Hom(S, O) = H^0(S^v) = V^v
        let r = rhom(7, (1, 0), (0, 0), 0).unwrap();
        assert_eq!(ext_dimension(&r, 0), BigUint::from(7u32));
    }

    #[test]
    fn window_sets_are_strong_exceptional() {
        for n in [4, 5, 6, 7, 8] {
            let r = verify_strong_exceptional(n, &window_s(n)).unwrap();
            assert!(r.passed, "n = {n}: {:?}", r.failures);
            assert_eq!(r.pairs_checked, r.labels.len() * r.labels.len());
        }
    }

    #[test]
    fn oversized_set_fails() {
        // O and O(-n) with K_Gr = O(-n): Ext^top(O, O(-n)) = C
        let set = WindowSet::from_labels([(0, 0), (0, 6)]);
        let r = verify_strong_exceptional(6, &set).unwrap();
        assert!(!r.passed);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].degree, 8);
    }

    #[test]
    fn t_set_inside_s() {
        let p = ModelParams::new(8, 3).unwrap();
        let r = verify_strong_exceptional(8, &window_t(&p)).unwrap();
        assert!(r.passed);
        let order = r.order.unwrap();
        assert_eq!(order.len(), r.labels.len());
    }
}
