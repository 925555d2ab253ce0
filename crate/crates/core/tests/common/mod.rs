//! Test-side oracles that share no code with the library's linear algebra.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Bareiss elimination over i128 (exact for the small matrices used here).
pub fn det_i128(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Cofactor expansion over BigInt; only for the unimodularity checks.
pub fn det_big(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    match n {
        0 => BigInt::one(),
        1 => a[0][0].clone(),
        _ => {
            let mut total = BigInt::zero();
            for c in 0..n {
                if a[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &a[0][c] * det_big(&minor);
                if c % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// gcd of all k x k minors (`D_0 = 1`).
pub fn minors_gcd(a: &[Vec<i128>], k: usize) -> i128 {
    if k == 0 {
        return 1;
    }
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if k > rows || k > cols {
        return 0;
    }
    let mut g = 0i128;
    let cc = combinations(cols, k);
    for rs in combinations(rows, k) {
        for cs in &cc {
            let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c]).collect()).collect();
            g = g.gcd(&det_i128(&sub));
            if g == 1 {
                return 1;
            }
        }
    }
    g
}

/// Invariant factors `D_k / D_{k-1}` (zero past the rank), length `min(rows, cols)`.
pub fn invariant_factors(a: &[Vec<i128>]) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let d = if prev == 0 { 0 } else { minors_gcd(a, k) };
        out.push(if d == 0 { 0 } else { d / prev });
        prev = d;
    }
    out
}

/// The finite group `Z^m / (column lattice of a)`, enumerated element by
/// element. Membership of `v` uses `[L + Zv : L] = D_m(a) / D_m([a | v])`.
pub struct FiniteQuotient {
    a: Vec<Vec<i128>>,
    dm: i128,
    pub elements: Vec<Vec<i128>>,
}

impl FiniteQuotient {
    /// `None` when the cokernel is infinite or larger than `bound`.
    pub fn enumerate(a: &[Vec<i128>], bound: usize) -> Option<FiniteQuotient> {
        let m = a.len();
        let dm = minors_gcd(a, m).abs();
        if dm == 0 || dm as usize > bound {
            return None;
        }
        let mut q = FiniteQuotient { a: a.to_vec(), dm, elements: vec![vec![0; m]] };
        let mut frontier = 0;
        while frontier < q.elements.len() {
            let base = q.elements[frontier].clone();
            frontier += 1;
            for i in 0..m {
                let mut v = base.clone();
                v[i] += 1;
                if q.class_of(&v).is_none() {
                    q.elements.push(v);
                }
                if q.elements.len() > bound {
                    return None;
                }
            }
        }
        Some(q)
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        let aug: Vec<Vec<i128>> =
            self.a.iter().zip(v).map(|(row, &x)| row.iter().copied().chain([x]).collect()).collect();
        minors_gcd(&aug, self.a.len()).abs() == self.dm
    }

    pub fn class_of(&self, v: &[i128]) -> Option<usize> {
        self.elements.iter().position(|e| {
            let diff: Vec<i128> = v.iter().zip(e).map(|(x, y)| x - y).collect();
            self.contains(&diff)
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `#{g : k g = 0}`.
    pub fn killed_by(&self, k: i128) -> usize {
        self.elements.iter().filter(|e| self.contains(&e.iter().map(|x| k * x).collect::<Vec<_>>())).count()
    }
}

/// `#{g : k g = 0}` in `Z/t_1 + … + Z/t_r`.
pub fn killed_by_factors(torsion: &[BigInt], k: i128) -> usize {
    torsion.iter().map(|t| BigInt::from(k).gcd(t)).product::<BigInt>().try_into().unwrap_or(usize::MAX)
}

/// `|G / N G|` for `G = Z^f + Z/t_1 + …`.
pub fn mod_n_size(free_rank: usize, torsion: &[BigInt], n: u64) -> BigInt {
    let nn = BigInt::from(n);
    let mut s = num_traits::pow(nn.clone(), free_rank);
    for t in torsion {
        s *= nn.gcd(t);
    }
    s
}

pub fn to_i128_rows(m: &braidkit::intlinalg::IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|v| i128::try_from(v).expect("small entry")).collect()).collect()
}

pub fn to_big_rows(m: &braidkit::intlinalg::IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn is_unit(d: &BigInt) -> bool {
    d.abs().is_one()
}

/// `n!` by repeated multiplication.
pub fn factorial(n: u64) -> u64 {
    (2..=n).product()
}

/// Coefficients of `(1 + t)(1 + 2t)…(1 + (n-1)t)` by direct polynomial multiplication.
pub fn poincare_coefficients(n: usize) -> Vec<u64> {
    let mut p = vec![1u64];
    for k in 1..n as u64 {
        let mut next = vec![0u64; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * k;
        }
        p = next;
    }
    p
}
