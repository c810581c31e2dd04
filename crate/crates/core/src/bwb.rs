//! Borel-Weil-Bott on Gr(2,n).
//!
//! For a Levi-dominant weight `w`, form `v = w + rho` with
//! `rho = (n, ..., 1)`. A repeated entry means all cohomology vanishes;
//! otherwise the only nonzero group sits in degree `l` = number of
//! inversions of `v`, and is the GL(n) representation `sort(v) - rho`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::schur::KClass;
use crate::weights::{rho, weyl_dimension, GLWeight};

/// Outcome of the algorithm on one irreducible bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome")]
pub enum BwbResult {
    Vanishes,
    Cohomology {
        degree: usize,
        weight: Vec<i64>,
        #[serde(serialize_with = "crate::json::decimal")]
        dimension: BigUint,
    },
}

impl BwbResult {
    pub fn degree(&self) -> Option<usize> {
        match self {
            BwbResult::Vanishes => None,
            BwbResult::Cohomology { degree, .. } => Some(*degree),
        }
    }

    pub fn dimension(&self) -> BigUint {
        match self {
            BwbResult::Vanishes => BigUint::zero(),
            BwbResult::Cohomology { dimension, .. } => dimension.clone(),
        }
    }

    /// `h^j` of the bundle.
    pub fn h(&self, j: usize) -> BigUint {
        match self {
            BwbResult::Cohomology { degree, dimension, .. } if *degree == j => dimension.clone(),
            _ => BigUint::zero(),
        }
    }

    /// True if some `h^j` with `j > 0` is nonzero.
    pub fn has_higher(&self) -> bool {
        matches!(self, BwbResult::Cohomology { degree, .. } if *degree > 0)
    }

    /// `(-1)^degree * dimension`, or zero.
    pub fn euler(&self) -> BigInt {
        match self {
            BwbResult::Vanishes => BigInt::zero(),
            BwbResult::Cohomology { degree, dimension, .. } => {
                let d = BigInt::from(dimension.clone());
                if degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            }
        }
    }
}

/// The BWB engine. `rho_perturbation` exists only to let the self-check
/// harness confirm that a corrupted engine is caught; it is zero in all
/// real computations.
#[derive(Debug, Clone, Copy, Default)]
pub struct BwbEngine {
    rho_perturbation: i64,
}

impl BwbEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// An engine whose first rho entry is shifted by `delta`.
    pub fn with_perturbed_rho(delta: i64) -> Self {
        BwbEngine { rho_perturbation: delta }
    }

    pub fn cohomology(&self, w: &GLWeight) -> Result<BwbResult> {
        let n = w.n();
        let mut r = rho(n)?;
        r[0] += self.rho_perturbation;
        let mut v: Vec<i64> = w.to_vec().iter().zip(&r).map(|(a, b)| a + b).collect();
        // Stable insertion sort into strictly decreasing order, counting swaps.
        let mut inversions = 0usize;
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] <= v[j] {
                if v[j - 1] == v[j] {
                    return Ok(BwbResult::Vanishes);
                }
                v.swap(j - 1, j);
                inversions += 1;
                j -= 1;
            }
        }
        let weight: Vec<i64> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        let dimension = weyl_dimension(&weight)?;
        Ok(BwbResult::Cohomology { degree: inversions, weight, dimension })
    }
}

/// Cohomology of the irreducible homogeneous bundle with weight `w`.
pub fn bwb_cohomology(w: &GLWeight) -> Result<BwbResult> {
    BwbEngine::new().cohomology(w)
}

/// Map from degree `j` to `h^j`, zero entries omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    #[serde(serialize_with = "crate::json::decimal_map")]
    entries: BTreeMap<usize, BigUint>,
}

impl CohomologyTable {
    pub fn add(&mut self, degree: usize, dim: BigUint) {
        if dim.is_zero() {
            return;
        }
        *self.entries.entry(degree).or_default() += dim;
    }

    pub fn get(&self, degree: usize) -> BigUint {
        self.entries.get(&degree).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &BTreeMap<usize, BigUint> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn euler(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(j, d)| {
                let d = BigInt::from(d.clone());
                if j % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }
}

/// Per-term record of a [`cohomology_of_kclass`] computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermCohomology {
    pub weight: GLWeight,
    #[serde(serialize_with = "crate::json::decimal")]
    pub multiplicity: BigInt,
    pub result: BwbResult,
}

/// Cohomology of a virtual class, split into its positive and negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KClassCohomology {
    pub positive: CohomologyTable,
    pub negative: CohomologyTable,
    pub terms: Vec<TermCohomology>,
}

impl KClassCohomology {
    pub fn euler(&self) -> BigInt {
        self.positive.euler() - self.negative.euler()
    }
}

/// Applies BWB to every term of `c (x) O(twist)`.
pub fn cohomology_of_kclass(c: &KClass, twist: i64) -> Result<KClassCohomology> {
    cohomology_of_kclass_with(&BwbEngine::new(), c, twist)
}

pub fn cohomology_of_kclass_with(engine: &BwbEngine, c: &KClass, twist: i64) -> Result<KClassCohomology> {
    let twisted = c.tensor_by_line(twist);
    let items: Vec<(&GLWeight, &BigInt)> = twisted.iter().collect();
    let terms = items
        .par_iter()
        .map(|(w, m)| {
            engine.cohomology(w).map(|result| TermCohomology {
                weight: (*w).clone(),
                multiplicity: (*m).clone(),
                result,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut positive = CohomologyTable::default();
    let mut negative = CohomologyTable::default();
    for t in &terms {
        if let BwbResult::Cohomology { degree, dimension, .. } = &t.result {
            let scaled = dimension * t.multiplicity.magnitude();
            if t.multiplicity.is_negative() {
                negative.add(*degree, scaled);
            } else {
                positive.add(*degree, scaled);
            }
        }
    }
    Ok(KClassCohomology { positive, negative, terms })
}

/// `sum_j (-1)^j h^j(c (x) O(twist))`, additive in `c`.
pub fn euler_characteristic(c: &KClass, twist: i64) -> Result<BigInt> {
    let engine = BwbEngine::new();
    c.tensor_by_line(twist).iter().map(|(w, m)| Ok(engine.cohomology(w)?.euler() * m)).sum()
}
