//! Model parameters `(n, k)`: dimensions and canonical-class trichotomies of
//! the two linear sections, rank strata of skew forms, and the window sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// `n = dim V`, `k = dim U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModelParams {
    n: usize,
    k: usize,
}

impl ModelParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams { bound: "n >= 3".into(), detail: format!("n = {n}") });
        }
        let max_k = n * (n - 1) / 2;
        if k > max_k {
            return Err(Error::InvalidParams {
                bound: "k <= (n choose 2)".into(),
                detail: format!("k = {k}, (n choose 2) = {max_k}"),
            });
        }
        Ok(ModelParams { n, k })
    }

    /// Like [`ModelParams::new`] but also requires `k >= 1`.
    pub fn with_section(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams { bound: "k >= 1".into(), detail: "k = 0".into() });
        }
        Self::new(n, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// `L = n/2` for even `n`, `(n-1)/2` for odd `n`.
    pub fn window_length(&self) -> u32 {
        (self.n / 2) as u32
    }

    /// Dimension of the Grassmannian side section, `2(n-2) - k`.
    pub fn dim_y1(&self) -> i64 {
        2 * (self.n as i64 - 2) - self.k as i64
    }

    /// Codimension of the rank-drop locus of skew forms: 1 (n even) or 3 (n odd).
    pub fn rank_drop_codim(&self) -> i64 {
        if self.n_is_even() {
            1
        } else {
            3
        }
    }

    /// Dimension of the Pfaffian side section, `k - 1 - codim`.
    pub fn dim_y2(&self) -> i64 {
        self.k as i64 - 1 - self.rank_drop_codim()
    }

    /// Conditions (i)/(ii): `k <= min(n, 10)` for odd n, `k <= min(n/2, 6)` for even n.
    pub fn theorem_applies(&self) -> bool {
        if self.n_is_even() {
            self.k <= (self.n / 2).min(6)
        } else {
            self.k <= self.n.min(10)
        }
    }

    /// Closed-form window inclusion: `k <= n` (n odd) or `k <= n/2` (n even).
    pub fn window_inclusion_formula(&self) -> bool {
        if self.n_is_even() {
            self.k <= self.n / 2
        } else {
            self.k <= self.n
        }
    }

    /// Smoothness of the Pfaffian side for generic forms: the linear space
    /// `P(U)` misses the singular locus of the Pfaffian variety.
    pub fn y2_smoothable(&self) -> bool {
        self.k as i64 <= singular_locus_codim(self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CanonicalType {
    Fano,
    CalabiYau,
    GeneralType,
}

impl fmt::Display for CanonicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CanonicalType::Fano => "Fano",
            CanonicalType::CalabiYau => "CalabiYau",
            CanonicalType::GeneralType => "GeneralType",
        };
        f.write_str(s)
    }
}

fn trichotomy(k: usize, threshold: usize) -> CanonicalType {
    use std::cmp::Ordering::*;
    match k.cmp(&threshold) {
        Less => CanonicalType::GeneralType,
        Equal => CanonicalType::CalabiYau,
        Greater => CanonicalType::Fano,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub k: usize,
    pub dim_y1: i64,
    pub dim_y2: i64,
    pub y1_empty: bool,
    pub y2_empty: bool,
    pub y1_type: CanonicalType,
    pub y2_type: CanonicalType,
    pub y2_smoothable: bool,
    pub theorem_applies: bool,
    pub window_inclusion: bool,
}

pub fn classify(p: &ModelParams) -> Classification {
    let n = p.n();
    let k = p.k();
    // Y1: K = O(k - n). Y2: K = O(n/2 - k) for even n; odd n has threshold n.
    let y1_type = match k.cmp(&n) {
        std::cmp::Ordering::Less => CanonicalType::Fano,
        std::cmp::Ordering::Equal => CanonicalType::CalabiYau,
        std::cmp::Ordering::Greater => CanonicalType::GeneralType,
    };
    let y2_type = if p.n_is_even() { trichotomy(k, n / 2) } else { trichotomy(k, n) };
    Classification {
        n,
        k,
        dim_y1: p.dim_y1(),
        dim_y2: p.dim_y2(),
        y1_empty: p.dim_y1() < 0,
        y2_empty: p.dim_y2() < 0,
        y1_type,
        y2_type,
        y2_smoothable: p.y2_smoothable(),
        theorem_applies: p.theorem_applies(),
        window_inclusion: p.window_inclusion_formula(),
    }
}

/// Codimension of `{rank <= r}` in the space of skew forms on `C^n`: `C(n-r, 2)`.
pub fn pfaffian_stratum_codim(n: usize, r: usize) -> Result<i64> {
    if !r.is_multiple_of(2) {
        return Err(Error::Parity(format!("target rank r = {r} must be even")));
    }
    if r >= n {
        return Err(Error::Dimension(format!("target rank r = {r} must be at most n - 1 = {}", n - 1)));
    }
    let d = (n - r) as i64;
    Ok(d * (d - 1) / 2)
}

/// Ambient codimension of the singular locus of the Pfaffian variety, the
/// stratum two rank steps below the generic rank: `C(4,2)` for even `n`,
/// `C(5,2)` for odd `n` (independent of `n`; empty when `n` is too small).
pub fn singular_locus_codim(n: usize) -> i64 {
    let d: i64 = if n.is_multiple_of(2) { 4 } else { 5 };
    d * (d - 1) / 2
}

/// A finite set of labels `(l, m)` naming `Sym^l S (x) (det S)^m`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WindowSet {
    labels: BTreeSet<(u32, i64)>,
}

impl WindowSet {
    pub fn from_labels(labels: impl IntoIterator<Item = (u32, i64)>) -> Self {
        WindowSet { labels: labels.into_iter().collect() }
    }

    pub fn contains(&self, l: u32, m: i64) -> bool {
        self.labels.contains(&(l, m))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.labels.iter().copied()
    }

    pub fn labels(&self) -> Vec<(u32, i64)> {
        self.labels.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &WindowSet) -> bool {
        self.labels.is_subset(&other.labels)
    }
}

/// The Grassmannian-side window set for `dim V = n`.
pub fn window_s(n: usize) -> WindowSet {
    let n_i = n as i64;
    let big_l = (n / 2) as u32;
    if n % 2 == 1 {
        WindowSet::from_labels((0..big_l).flat_map(|l| (0..n_i).map(move |m| (l, m))))
    } else {
        let full = (0..big_l.saturating_sub(1)).flat_map(|l| (0..n_i).map(move |m| (l, m)));
        let last = (0..n_i / 2).map(|m| (big_l - 1, m));
        WindowSet::from_labels(full.chain(last))
    }
}

/// The Pfaffian-side window set `l in [0, L)`, `m in [0, k)`.
pub fn window_t(p: &ModelParams) -> WindowSet {
    let big_l = p.window_length();
    let k = p.k() as i64;
    WindowSet::from_labels((0..big_l).flat_map(|l| (0..k).map(move |m| (l, m))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowSets {
    pub s: WindowSet,
    pub t: WindowSet,
    /// Literal subset test `T ⊂ S`.
    pub inclusion: bool,
    /// The closed-form inequality on `(n, k)`.
    pub inclusion_formula: bool,
}

/// Both window sets with the inclusion decided two ways; disagreement is an
/// integrity error.
pub fn window_sets(p: &ModelParams) -> Result<WindowSets> {
    let s = window_s(p.n());
    let t = window_t(p);
    let inclusion = t.is_subset(&s);
    let inclusion_formula = p.window_inclusion_formula();
    if inclusion != inclusion_formula {
        return Err(Error::Integrity(format!(
            "n = {}, k = {}: subset test says {inclusion}, inequality says {inclusion_formula}",
            p.n(),
            p.k()
        )));
    }
    Ok(WindowSets { s, t, inclusion, inclusion_formula })
}

/// Labels `(l, m)` with `(l, m + t)` in `S` for every `t` in `[0, k]`.
pub fn orthogonal_rectangle(p: &ModelParams) -> WindowSet {
    let s = window_s(p.n());
    let k = p.k() as i64;
    WindowSet::from_labels(s.iter().filter(|&(l, m)| (0..=k).all(|t| s.contains(l, m + t))))
}
