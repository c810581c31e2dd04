use num_bigint::BigInt;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::algebra::{integer_rank, rank, PrimeField, Ring};
use crate::error::{Error, Result};

/// Scalars the coefficients of an [`AMap`] live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalars {
    Rational,
    Prime(u64),
}

/// A `k`-dimensional space of skew forms on an `n`-dimensional space,
/// given by `k` coefficient rows over the basis `e_i ^ e_j` (i < j) in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMap {
    n: usize,
    k: usize,
    field: Scalars,
    matrix: Vec<Vec<BigInt>>,
}

/// Column of the pair `(i, j)`, `0 <= i < j < n`, in the lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl AMap {
    /// Validates the shape and that the rows are linearly independent.
    pub fn new(n: usize, k: usize, field: Scalars, matrix: Vec<Vec<BigInt>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams { bound: "n >= 2".into(), detail: format!("n = {n}") });
        }
        if k == 0 || k > pair_count(n) {
            return Err(Error::InvalidParams {
                bound: "1 <= k <= (n choose 2)".into(),
                detail: format!("n = {n}, k = {k}"),
            });
        }
        if let Scalars::Prime(p) = field {
            if PrimeField::new(p).is_none() || p == 2 {
                return Err(Error::InvalidParams {
                    bound: "p an odd prime below 2^32".into(),
                    detail: format!("p = {p}"),
                });
            }
        }
        if matrix.len() != k {
            return Err(Error::Parse(format!("matrix has {} rows, expected k = {k}", matrix.len())));
        }
        for (r, row) in matrix.iter().enumerate() {
            if row.len() != pair_count(n) {
                return Err(Error::Parse(format!(
                    "matrix row {r} has {} entries, expected (n choose 2) = {}",
                    row.len(),
                    pair_count(n)
                )));
            }
        }
        let a = AMap { n, k, field, matrix };
        let r = a.rank();
        if r < k {
            return Err(Error::DegenerateFamily { rank: r, k });
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field(&self) -> Scalars {
        self.field
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    /// Rank of the coefficient matrix over its own scalars.
    pub fn rank(&self) -> usize {
        match self.field {
            Scalars::Rational => integer_rank(&self.matrix),
            Scalars::Prime(p) => {
                let f = PrimeField::new(p).expect("validated prime");
                rank(&f, &self.reduce(&f))
            }
        }
    }

    /// Coefficients reduced into `F_p`.
    pub fn reduce(&self, f: &PrimeField) -> Vec<Vec<u64>> {
        self.matrix.iter().map(|row| row.iter().map(|c| f.reduce_big(c)).collect()).collect()
    }

    /// The `k` forms as dense skew matrices over `F_p`.
    pub fn forms_mod(&self, f: &PrimeField) -> Result<Vec<Vec<Vec<u64>>>> {
        if let Scalars::Prime(q) = self.field {
            if q != f.modulus() {
                return Err(Error::InvalidParams {
                    bound: "sampling prime equals the prime of the family".into(),
                    detail: format!("family over F_{q}, sampling over F_{}", f.modulus()),
                });
            }
        }
        let red = self.reduce(f);
        let r = rank(f, &red);
        if r < self.k {
            return Err(Error::DegenerateFamily { rank: r, k: self.k });
        }
        let n = self.n;
        Ok(red
            .iter()
            .map(|row| {
                let mut m = vec![vec![0u64; n]; n];
                for i in 0..n {
                    for j in i + 1..n {
                        let c = row[pair_index(n, i, j)];
                        m[i][j] = c;
                        m[j][i] = f.neg(&c);
                    }
                }
                m
            })
            .collect())
    }

    /// A uniformly random family over `F_p`, redrawn until it has full rank.
    pub fn random(n: usize, k: usize, p: u64, seed: u64) -> Result<Self> {
        let f = PrimeField::new(p)
            .ok_or_else(|| Error::InvalidParams { bound: "p prime below 2^32".into(), detail: format!("p = {p}") })?;
        for stream in 0..64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let matrix: Vec<Vec<BigInt>> =
                (0..k).map(|_| (0..pair_count(n)).map(|_| BigInt::from(rng.gen_range(0..p))).collect()).collect();
            let red: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|c| f.reduce_big(c)).collect()).collect();
            if rank(&f, &red) == k {
                return AMap::new(n, k, Scalars::Prime(p), matrix);
            }
        }
        Err(Error::DegenerateFamily { rank: 0, k })
    }

    /// The family of all skew forms: `k = (n choose 2)`, identity matrix.
    pub fn universal(n: usize) -> Result<Self> {
        let c = pair_count(n);
        let matrix = (0..c).map(|r| (0..c).map(|s| BigInt::from((r == s) as i64)).collect()).collect();
        AMap::new(n, c, Scalars::Rational, matrix)
    }

    pub fn to_json(&self) -> Value {
        let field = match self.field {
            Scalars::Rational => json!("Q"),
            Scalars::Prime(p) => json!({ "p": p }),
        };
        let matrix: Vec<Value> = self
            .matrix
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| Value::Number(crate::json::number(c))).collect()))
            .collect();
        let mut m = Map::new();
        m.insert("field".into(), field);
        m.insert("k".into(), json!(self.k));
        m.insert("matrix".into(), Value::Array(matrix));
        m.insert("n".into(), json!(self.n));
        Value::Object(m)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("top level must be an object".into()))?;
        let size = |key: &str| -> Result<usize> {
            obj.get(key)
                .ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))?
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("\"{key}\" must be a non-negative integer")))
        };
        let n = size("n")?;
        let k = size("k")?;
        let field = match obj.get("field") {
            None => return Err(Error::Parse("missing field \"field\"".into())),
            Some(Value::String(s)) if s == "Q" => Scalars::Rational,
            Some(Value::Object(f)) => {
                let p = f
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("\"field\" object needs an integer \"p\"".into()))?;
                Scalars::Prime(p)
            }
            Some(other) => {
                return Err(Error::Parse(format!("\"field\" must be \"Q\" or {{\"p\": prime}}, got {other}")))
            }
        };
        let rows = obj
            .get("matrix")
            .ok_or_else(|| Error::Parse("missing field \"matrix\"".into()))?
            .as_array()
            .ok_or_else(|| Error::Parse("\"matrix\" must be an array of rows".into()))?;
        let mut matrix = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| Error::Parse(format!("matrix row {r} is not an array")))?;
            let mut parsed = Vec::with_capacity(row.len());
            for (c, x) in row.iter().enumerate() {
                let Value::Number(num) = x else {
                    return Err(Error::Parse(format!("matrix[{r}][{c}] is not an integer")));
                };
                let b: BigInt = num
                    .to_string()
                    .parse()
                    .map_err(|_| Error::Parse(format!("matrix[{r}][{c}] = {num} is not an integer")))?;
                parsed.push(b);
            }
            matrix.push(parsed);
        }
        AMap::new(n, k, field, matrix)
    }
}
