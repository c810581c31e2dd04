//! Symbolic check that `Ext^{>0}(Sym^l S(-m), Sym^{l'} S(t-m')) = 0` for
//! every `t >= 0` and every pair of labels in the window `S` (n even).
//!
//! Each Clebsch-Gordan summand has BWB weight `(A1 + t, A2 + t, 0, ..., 0)`.
//! The half-line `t >= 0` splits into the dominant tail `t >= -A2`, the
//! stretches where `alpha_2` or `alpha_1` collides with the Q-block of `rho`,
//! and finitely many leftover values that are evaluated directly.

use rayon::prelude::*;
use serde::Serialize;

use super::collection::{summand_weight, Label};
use crate::bwb::{bwb_cohomology, BwbResult};
use crate::error::{Error, Result};
use crate::geometry::window_s;
use crate::schur::clebsch_gordan_rank2;
use crate::weights::GLWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason")]
pub enum IntervalKind {
    /// `alpha_2 >= 0`: only global sections.
    Dominant,
    /// `alpha_2` in `[2-n, -1]`: `alpha + rho` has a repeated entry.
    SecondRepeats,
    /// `alpha_1` in `[1-n, -2]`: `alpha + rho` has a repeated entry.
    FirstRepeats,
    /// Evaluated by BWB one value at a time.
    Direct,
}

/// `t` in `[from, to]`; `to = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub from: i64,
    pub to: Option<i64>,
    pub kind: IntervalKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub source: Label,
    pub target: Label,
    pub summand: u32,
    pub t: i64,
    pub weight: GLWeight,
    pub result: BwbResult,
}

#[derive(Debug, Clone, Serialize)]
pub struct SummandDecision {
    pub summand: u32,
    /// `(A1, A2)` with the BWB weight equal to `(A1 + t, A2 + t)`.
    pub offsets: [i64; 2],
    pub intervals: Vec<Interval>,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairDecision {
    pub source: Label,
    pub target: Label,
    pub summands: Vec<SummandDecision>,
}

impl PairDecision {
    pub fn vanishes_for_all_t(&self) -> bool {
        self.summands.iter().all(|s| s.counterexample.is_none())
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.summands.iter().find_map(|s| s.counterexample.as_ref())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    VanishesForAllT,
    Counterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub verdict: Verdict,
    pub pairs: usize,
    pub summands: usize,
    /// Number of `t` values decided by a direct BWB evaluation.
    pub direct_evaluations: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Intersects `[lo, hi]` with `[0, cap)`.
fn clip(lo: i64, hi: i64, cap: i64) -> Option<(i64, i64)> {
    let lo = lo.max(0);
    let hi = hi.min(cap - 1);
    (lo <= hi).then_some((lo, hi))
}

/// Decides one ordered pair for all `t >= 0`.
pub fn decide_pair_all_t(n: usize, e: Label, f: Label) -> Result<PairDecision> {
    let ni = n as i64;
    let mut summands = Vec::new();
    for (_, i) in clebsch_gordan_rank2(e.0, f.0) {
        let [a1, a2] = summand_weight(e, f, i, 0);
        let tail = (-a2).max(0);
        let mut intervals = vec![Interval { from: tail, to: None, kind: IntervalKind::Dominant }];
        // each t in [0, tail) is claimed by the first rule that covers it
        let mut claimed = vec![None; tail as usize];
        let rules =
            [(IntervalKind::SecondRepeats, 2 - ni - a2, -1 - a2), (IntervalKind::FirstRepeats, 1 - ni - a1, -2 - a1)];
        for (kind, lo, hi) in rules {
            if let Some((lo, hi)) = clip(lo, hi, tail) {
                for slot in &mut claimed[lo as usize..=hi as usize] {
                    slot.get_or_insert(kind);
                }
            }
        }
        let mut counterexample = None;
        let mut t = 0;
        while t < tail {
            let kind = claimed[t as usize].unwrap_or(IntervalKind::Direct);
            let mut end = t;
            while end + 1 < tail && claimed[(end + 1) as usize].unwrap_or(IntervalKind::Direct) == kind {
                end += 1;
            }
            if kind == IntervalKind::Direct {
                for s in t..=end {
                    let weight = GLWeight::s_only(n, a1 + s, a2 + s)?;
                    let result = bwb_cohomology(&weight)?;
                    if result.has_higher() && counterexample.is_none() {
                        counterexample =
                            Some(Counterexample { source: e, target: f, summand: i, t: s, weight, result });
                    }
                }
            }
            intervals.push(Interval { from: t, to: Some(end), kind });
            t = end + 1;
        }
        intervals.sort_by_key(|iv| iv.from);
        summands.push(SummandDecision { summand: i, offsets: [a1, a2], intervals, counterexample });
    }
    Ok(PairDecision { source: e, target: f, summands })
}

fn direct_count(d: &PairDecision) -> usize {
    d.summands
        .iter()
        .flat_map(|s| &s.intervals)
        .filter(|iv| iv.kind == IntervalKind::Direct)
        .map(|iv| (iv.to.unwrap_or(iv.from) - iv.from + 1) as usize)
        .sum()
}

/// Runs [`decide_pair_all_t`] over every ordered pair of the window `S`.
pub fn lemma_vanishing_all_t(n: usize) -> Result<LemmaReport> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParams { bound: "n even, n >= 4".into(), detail: format!("n = {n}") });
    }
    let labels = window_s(n).labels();
    let pairs: Vec<(Label, Label)> = labels.iter().flat_map(|&e| labels.iter().map(move |&f| (e, f))).collect();
    let decisions: Vec<PairDecision> =
        pairs.par_iter().map(|&(e, f)| decide_pair_all_t(n, e, f)).collect::<Result<_>>()?;
    let counterexamples: Vec<Counterexample> =
        decisions.iter().flat_map(|d| d.summands.iter().filter_map(|s| s.counterexample.clone())).collect();
    Ok(LemmaReport {
        n,
        verdict: if counterexamples.is_empty() { Verdict::VanishesForAllT } else { Verdict::Counterexample },
        pairs: decisions.len(),
        summands: decisions.iter().map(|d| d.summands.len()).sum(),
        direct_evaluations: decisions.iter().map(direct_count).sum(),
        counterexamples,
    })
}
