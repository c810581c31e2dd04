//! Rank and shift bookkeeping for Ext sheaves between structure sheaves of
//! cleanly intersecting submanifolds `A`, `B` of `X`.

use num_bigint::BigUint;
use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};

/// `(i, rank of ext^i(O_A, O_B))` for `a - r <= i <= a`, where
/// `a = codim A` and `r` is the rank of the excess bundle; the ranks are
/// those of `wedge^(a-i) E^v`.
pub fn lg_ext_profile(dim_x: i64, dim_a: i64, dim_b: i64, dim_ab: i64) -> Result<Vec<(i64, BigUint)>> {
    if dim_ab > dim_a.min(dim_b) || dim_a > dim_x || dim_b > dim_x || dim_ab < 0 {
        return Err(Error::Dimension(format!(
            "need dim(A n B) <= dim A, dim B <= dim X, got X = {dim_x}, A = {dim_a}, B = {dim_b}, A n B = {dim_ab}"
        )));
    }
    let r = dim_x - dim_a - dim_b + dim_ab;
    if r < 0 {
        return Err(Error::Dimension(format!("negative excess rank {r}")));
    }
    let a = dim_x - dim_a;
    Ok((a - r..=a).map(|i| (i, binomial(BigUint::from(r as u64), BigUint::from((a - i) as u64)))).collect())
}

/// Shift `dim(A n B) - dim B` of the surviving morphism sheaf once `dW`
/// cuts the excess bundle transversely.
pub fn lg_hom_shift(dim_ab: i64, dim_b: i64) -> i64 {
    dim_ab - dim_b
}

#[derive(Debug, Clone, Serialize)]
pub struct KnorrerCheck {
    pub dim_s: i64,
    pub dim_v: i64,
    pub dim_x: i64,
    pub dim_a: i64,
    pub dim_b: i64,
    pub dim_ab: i64,
    pub excess_rank: i64,
    /// Lowest degree of the Ext profile, where the single surviving term sits.
    pub surviving_degree: i64,
    pub shift: i64,
    /// `-dim S * dim V / 4`.
    pub expected_shift: i64,
    /// Line-bundle factors not modelled here.
    pub twist: String,
    pub consistent: bool,
}

/// Intersects `LGr(S) x Hom(S, L)` with `Hom(S / Lambda, V)` inside
/// `LGr(S) x Hom(S, V)` for symplectic `S`, `V` with `L` Lagrangian in `V`,
/// and compares the resulting shift with `-dim S * dim V / 4`.
pub fn knorrer_check(dim_s: i64, dim_v: i64) -> Result<KnorrerCheck> {
    if dim_s < 2 || dim_v < 2 || dim_s % 2 == 1 || dim_v % 2 == 1 {
        return Err(Error::Parity(format!("symplectic spaces need positive even dimension, got {dim_s} and {dim_v}")));
    }
    let h = dim_s / 2;
    let lgr = h * (h + 1) / 2;
    let dim_x = lgr + dim_s * dim_v;
    // LGr(S) x Hom(S, L)
    let dim_a = lgr + dim_s * dim_v / 2;
    // Hom(S / Lambda, V)
    let dim_b = lgr + h * dim_v;
    // Hom(S / Lambda, L)
    let dim_ab = lgr + h * dim_v / 2;
    let profile = lg_ext_profile(dim_x, dim_a, dim_b, dim_ab)?;
    let excess_rank = dim_x - dim_a - dim_b + dim_ab;
    let surviving_degree = profile[0].0;
    let shift = lg_hom_shift(dim_ab, dim_b);
    let expected_shift = -dim_s * dim_v / 4;
    Ok(KnorrerCheck {
        dim_s,
        dim_v,
        dim_x,
        dim_a,
        dim_b,
        dim_ab,
        excess_rank,
        surviving_degree,
        shift,
        expected_shift,
        twist: "K_{A n B} (x) K_B^{-1}".into(),
        consistent: shift == expected_shift && surviving_degree == -shift && excess_rank == h * dim_v / 2,
    })
}
