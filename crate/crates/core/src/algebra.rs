//! Scalar rings, sparse multivariate polynomials and small dense linear
//! algebra over exact rings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A commutative ring given as a context object, so that moduli and
/// variable counts can be chosen at runtime.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The integers, with arbitrary precision.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

/// The prime field `F_p`, elements stored reduced in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime and below 2^32.
    pub fn new(p: u64) -> Option<Self> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return None;
        }
        Some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_big(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.try_into().expect("residue fits in u64")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Symmetric representative in `(-p/2, p/2]`, for display.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
}

/// Exponent vector of a monomial.
pub type Monomial = Vec<u16>;

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<E> {
    terms: BTreeMap<Monomial, E>,
}

impl<E> Poly<E> {
    pub fn terms(&self) -> &BTreeMap<Monomial, E> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|&e| e as u32).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

/// Polynomials in `nvars` variables over `base`.
#[derive(Debug, Clone)]
pub struct PolyRing<R: Ring> {
    base: R,
    nvars: usize,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, nvars: usize) -> Self {
        PolyRing { base, nvars }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        let mut terms = BTreeMap::new();
        if !self.base.is_zero(&c) {
            terms.insert(vec![0; self.nvars], c);
        }
        Poly { terms }
    }

    pub fn var(&self, i: usize) -> Poly<R::Elem> {
        let mut m = vec![0; self.nvars];
        m[i] = 1;
        Poly { terms: BTreeMap::from([(m, self.base.one())]) }
    }

    /// `sum_i coeffs[i] * u_i`.
    pub fn linear_form(&self, coeffs: &[R::Elem]) -> Poly<R::Elem> {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !self.base.is_zero(c) {
                let mut m = vec![0; self.nvars];
                m[i] = 1;
                terms.insert(m, c.clone());
            }
        }
        Poly { terms }
    }

    pub fn evaluate(&self, f: &Poly<R::Elem>, point: &[R::Elem]) -> R::Elem {
        let b = &self.base;
        let mut acc = b.zero();
        for (m, c) in &f.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    t = b.mul(&t, x);
                }
            }
            acc = b.add(&acc, &t);
        }
        acc
    }

    pub fn derivative(&self, f: &Poly<R::Elem>, i: usize) -> Poly<R::Elem> {
        let b = &self.base;
        let mut terms = BTreeMap::new();
        for (m, c) in &f.terms {
            if m[i] == 0 {
                continue;
            }
            let coeff = b.mul(c, &b.from_i64(m[i] as i64));
            if b.is_zero(&coeff) {
                continue;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            terms.insert(m2, coeff);
        }
        Poly { terms }
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<S: Ring>(
        &self,
        f: &Poly<R::Elem>,
        target: &PolyRing<S>,
        map: impl Fn(&R::Elem) -> S::Elem,
    ) -> Poly<S::Elem> {
        let mut terms = BTreeMap::new();
        for (m, c) in &f.terms {
            let c2 = map(c);
            if !target.base.is_zero(&c2) {
                terms.insert(m.clone(), c2);
            }
        }
        Poly { terms }
    }

    pub fn format(&self, f: &Poly<R::Elem>, var: &str, coeff: impl Fn(&R::Elem) -> String) -> String {
        if f.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in f.terms.iter().rev().enumerate() {
            let cs = coeff(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("{var}{}", i + 1) } else { format!("{var}{}^{e}", i + 1) })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{mag}*{}", mono.join("*")));
            }
        }
        out
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly { terms: BTreeMap::new() }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, v: i64) -> Self::Elem {
        self.constant(self.base.from_i64(v))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut terms = a.terms.clone();
        for (m, c) in &b.terms {
            match terms.get_mut(m) {
                Some(x) => {
                    let s = self.base.add(x, c);
                    if self.base.is_zero(&s) {
                        terms.remove(m);
                    } else {
                        *x = s;
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Poly { terms }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.base.neg(c))).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut acc: HashMap<Monomial, R::Elem> = HashMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                let c = self.base.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(x) => *x = self.base.add(x, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly { terms: acc.into_iter().filter(|(_, c)| !self.base.is_zero(c)).collect() }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }
}

/// Square matrix stored as rows.
pub type Matrix<E> = Vec<Vec<E>>;

/// Rank by Gaussian elimination over a field.
pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    row_echelon(field, m).1.len()
}

/// Reduced row echelon form and pivot columns.
pub fn row_echelon<F: Field>(field: &F, m: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = field.inv(&a[r][c]).expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&a[i][c]) {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = field.mul(&f, &a[r][j]);
                    a[i][j] = field.sub(&a[i][j], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A basis of the right kernel `{x : m x = 0}`.
pub fn nullspace<F: Field>(field: &F, m: &Matrix<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let (rref, pivots) = row_echelon(field, m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); cols];
            v[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(&rref[row][f]);
            }
            v
        })
        .collect()
}

/// Determinant over a field by elimination.
pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let f = field.mul(&a[i][c], &inv);
            for j in c..n {
                let t = field.mul(&f, &a[c][j]);
                a[i][j] = field.sub(&a[i][j], &t);
            }
        }
    }
    det
}

/// Rank of an integer matrix, by fraction-free (Bareiss) elimination.
pub fn integer_rank(m: &Matrix<BigInt>) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        r += 1;
    }
    r
}

/// Pfaffian of an even skew-symmetric matrix over any commutative ring, by
/// expansion along the first remaining row with memoization on index
/// subsets. Division-free.
pub fn pfaffian<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> R::Elem {
    let n = m.len();
    assert!(n % 2 == 0, "Pfaffian needs an even-sized matrix");
    assert!(n <= 62, "index subsets are stored in a u64 mask");
    let mut memo: HashMap<u64, R::Elem> = HashMap::new();
    pf_rec(ring, m, if n == 0 { 0 } else { (1u64 << n) - 1 }, &mut memo)
}

fn pf_rec<R: Ring>(ring: &R, m: &Matrix<R::Elem>, mask: u64, memo: &mut HashMap<u64, R::Elem>) -> R::Elem {
    if mask == 0 {
        return ring.one();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let i0 = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << i0);
    let mut acc = ring.zero();
    let mut pos = 0usize;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        pos += 1;
        if ring.is_zero(&m[i0][j]) {
            continue;
        }
        let sub = pf_rec(ring, m, rest & !(1u64 << j), memo);
        let term = ring.mul(&m[i0][j], &sub);
        acc = if pos % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    memo.insert(mask, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.signed(6), -1);
        assert!(PrimeField::new(10).is_none());
        assert!(PrimeField::new(10007).is_some());
    }

    #[test]
    fn small_pfaffians() {
        let z = Integers;
        let a = BigInt::from(5);
        let m = vec![vec![BigInt::zero(), a.clone()], vec![-a.clone(), BigInt::zero()]];
        assert_eq!(pfaffian(&z, &m), a);
        let empty: Matrix<BigInt> = Vec::new();
        assert_eq!(pfaffian(&z, &empty), BigInt::one());
    }

    #[test]
    fn four_by_four_pfaffian_formula() {
        // Pf = a12 a34 - a13 a24 + a14 a23 in six variables.
        let ring = PolyRing::new(Integers, 6);
        let vars: Vec<_> = (0..6).map(|i| ring.var(i)).collect();
        let idx = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut m = vec![vec![ring.zero(); 4]; 4];
        for (v, &(i, j)) in idx.iter().enumerate() {
            m[i][j] = vars[v].clone();
            m[j][i] = ring.neg(&vars[v]);
        }
        let pf = pfaffian(&ring, &m);
        let expect = ring.add(
            &ring.sub(&ring.mul(&vars[0], &vars[5]), &ring.mul(&vars[1], &vars[4])),
            &ring.mul(&vars[2], &vars[3]),
        );
        assert_eq!(pf, expect);
    }

    #[test]
    fn rank_and_nullspace() {
        let f = PrimeField::new(101).unwrap();
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&f, &m), 2);
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&ns[0]).fold(0, |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            assert_eq!(dot, 0);
        }
        assert_eq!(determinant(&f, &m), 0);
        let id = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(determinant(&f, &id), 100);
    }

    #[test]
    fn bareiss_rank() {
        let m: Matrix<BigInt> =
            [[2, 4, 6], [1, 2, 3], [0, 1, 5]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(integer_rank(&m), 2);
        let m: Matrix<BigInt> = [[0, 0], [0, 3]].iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(integer_rank(&m), 1);
    }

    #[test]
    fn poly_derivative_and_eval() {
        let f = PrimeField::new(13).unwrap();
        let ring = PolyRing::new(f, 2);
        let x = ring.var(0);
        let y = ring.var(1);
        let p = ring.add(&ring.mul(&ring.mul(&x, &x), &y), &ring.from_i64(3));
        assert_eq!(ring.evaluate(&p, &[2, 5]), (4 * 5 + 3) % 13);
        let dx = ring.derivative(&p, 0);
        assert_eq!(ring.evaluate(&dx, &[2, 5]), (2 * 2 * 5) % 13);
        assert_eq!(p.total_degree(), Some(3));
        assert!(!p.is_homogeneous());
    }
}
