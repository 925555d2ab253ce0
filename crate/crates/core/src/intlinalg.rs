//! Exact integer matrices, Smith normal form and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("{rows}x{cols} matrix needs {expected} entries, got {got}")]
    Shape { rows: usize, cols: usize, expected: usize, got: usize },
    #[error("cannot multiply {0}x{1} by {2}x{3}")]
    Product(usize, usize, usize, usize),
    #[error("determinant of a non-square {0}x{1} matrix")]
    NotSquare(usize, usize),
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape { rows, cols, expected: rows * cols, got: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self, MatrixError> {
        Self::new(rows, cols, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Build from rows; all rows must have the same length. `cols` is needed
    /// for the empty case.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::Shape { rows: rows.len(), cols, expected: cols, got: r.len() });
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (k, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.entries[k * cols + k] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Product(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.entries[src * self.cols + j] * q;
            self.entries[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.entries[i * self.cols + src] * q;
            self.entries[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.entries[i * self.cols + j]);
            self.entries[i * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `D = U · A · V` with `U`, `V` unimodular and `D` in Smith form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SNFResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SNFResult {
    /// The diagonal `d_1 | d_2 | …` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|k| self.d.get(k, k).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms. Pivots are chosen by least
/// absolute value to keep intermediate entries small.
pub fn smith_normal_form(a: &IntMatrix) -> SNFResult {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_entry(&d, t) else {
                return SNFResult { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..r {
                let q = d.get(i, t).div_floor(&p);
                if !q.is_zero() {
                    d.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..c {
                let q = d.get(t, j).div_floor(&p);
                if !q.is_zero() {
                    d.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest; otherwise fold an offending row in
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SNFResult { d, u, v }
}

fn min_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// `Z^rows / A·Z^cols`.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    AbelianGroup { free_rank: a.rows - rank, torsion: diag.into_iter().filter(|x| *x > BigInt::one()).collect() }
}

pub fn kernel_rank(a: &IntMatrix) -> usize {
    a.cols - a.rank()
}

/// `Z^free_rank ⊕ Z/t_1 ⊕ ⋯ ⊕ Z/t_k` with `t_1 | t_2 | ⋯` and every `t_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_big_vec", deserialize_with = "de_big_vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// `Z/m`; `m = 0` gives `Z` and `m = 1` the trivial group.
    pub fn cyclic(m: u64) -> Self {
        Self::from_factors(0, &[BigInt::from(m)])
    }

    /// Normalize `Z^free_rank ⊕ ⨁ Z/m_i` for arbitrary `m_i` (zeros count as `Z`).
    pub fn from_factors(free_rank: usize, factors: &[BigInt]) -> Self {
        let n = factors.len();
        let extra = cokernel(&IntMatrix::diagonal(n, n, factors));
        AbelianGroup { free_rank: free_rank + extra.free_rank, torsion: extra.torsion }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        Self::from_factors(self.free_rank + other.free_rank, &t)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn big_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(x.to_string()),
    }
}

fn big_from_json<E: de::Error>(v: &serde_json::Value) -> Result<BigInt, E> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(E::custom(format!("not an integer: {n}")))
            }
        }
        serde_json::Value::String(s) => s.trim().parse().map_err(|_| E::custom(format!("not an integer: {s:?}"))),
        other => Err(E::custom(format!("expected an integer, found {other}"))),
    }
}

fn ser_big_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    v.iter().map(big_to_json).collect::<Vec<_>>().serialize(s)
}

fn de_big_vec<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let raw = Vec::<serde_json::Value>::deserialize(d)?;
    raw.iter().map(big_from_json).collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows).map(|i| self.row(i).iter().map(big_to_json).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        if m.entries.len() != m.rows {
            return Err(de::Error::custom(format!("expected {} rows, found {}", m.rows, m.entries.len())));
        }
        let mut entries = Vec::with_capacity(m.rows * m.cols);
        for (i, row) in m.entries.iter().enumerate() {
            if row.len() != m.cols {
                return Err(de::Error::custom(format!("row {i} has {} entries, expected {}", row.len(), m.cols)));
            }
            for v in row {
                entries.push(big_from_json(v)?);
            }
        }
        Ok(IntMatrix { rows: m.rows, cols: m.cols, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, e).unwrap()
    }

    fn check(a: &IntMatrix) -> SNFResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().unwrap().abs().is_one());
        assert!(s.v.determinant().unwrap().abs().is_one());
        s
    }

    #[test]
    fn small_forms() {
        assert_eq!(check(&IntMatrix::identity(3)).d, IntMatrix::identity(3));
        assert_eq!(check(&m(2, 1, &[2, 3])).d, m(2, 1, &[1, 0]));
        assert_eq!(check(&m(2, 2, &[2, 4, 6, 8])).d, m(2, 2, &[2, 0, 0, 4]));
        assert_eq!(check(&IntMatrix::zeros(0, 3)).d.rows(), 0);
        assert_eq!(check(&m(2, 2, &[0, 0, 0, 0])).d, m(2, 2, &[0, 0, 0, 0]));
        assert_eq!(check(&m(2, 2, &[2, 0, 0, 3])).diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel(&m(2, 1, &[1, 1])), AbelianGroup::free(1));
        assert_eq!(cokernel(&m(2, 1, &[2, 3])), AbelianGroup::free(1));
        assert_eq!(cokernel(&m(2, 1, &[2, 4])).to_string(), "Z + Z/2");
        assert_eq!(kernel_rank(&m(2, 3, &[1, 2, 3, 2, 4, 6])), 2);
        assert_eq!(cokernel(&m(1, 1, &[0])), AbelianGroup::free(1));
    }

    #[test]
    fn determinants() {
        assert_eq!(m(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]).determinant().unwrap(), BigInt::from(6));
        assert_eq!(m(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 1]).determinant().unwrap(), BigInt::from(0));
        assert_eq!(m(2, 2, &[0, 1, 1, 0]).determinant().unwrap(), BigInt::from(-1));
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).determinant().unwrap(), BigInt::from(0));
    }

    #[test]
    fn groups() {
        let g = AbelianGroup::cyclic(2).direct_sum(&AbelianGroup::cyclic(3));
        assert_eq!(g, AbelianGroup::cyclic(6));
        assert_eq!(AbelianGroup::cyclic(1), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::cyclic(0), AbelianGroup::free(1));
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(5).to_string(), "Z^5");
    }

    #[test]
    fn json_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let a = IntMatrix::new(1, 2, vec![big.clone(), BigInt::from(-3)]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"rows":1,"cols":2,"entries":[["123456789012345678901234567890",-3]]}"#);
        let back: IntMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<IntMatrix>(r#"{"rows":2,"cols":1,"entries":[[1]]}"#).is_err());
    }
}
