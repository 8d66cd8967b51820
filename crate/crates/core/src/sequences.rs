//! Exact counting formulas for Horadam cubes.
//!
//! Everything here is arbitrary precision: `s_n` grows like `λ^n` with
//! `λ = (a + sqrt(a² + 4b)) / 2`, which overflows 64 bits by `n ≈ 30` already
//! for small `a, b`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::graph;
use crate::limits::Limits;
use crate::words::{enumerate_words_capped, Params};

/// What a [`CountTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    /// `values[m] = s_m` for `m = 0..=n`.
    Vertices,
    /// `values[m] = e_m` for `m = 0..=n`.
    Edges,
    /// `values[k]` = number of vertices of degree `k` in `Π_n`.
    Degrees,
    /// `values[k]` = number of induced `Q_k` in `Π_n`.
    CubeCoefficients,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub params: Params,
    pub kind: TableKind,
    pub values: Vec<BigUint>,
}

impl CountTable {
    pub fn get(&self, index: usize) -> BigUint {
        self.values.get(index).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }

    /// Nonzero entries as `(index, value)`.
    pub fn nonzero(&self) -> Vec<(usize, BigUint)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }

    /// Checks the identities every table of its kind satisfies.
    pub fn check_invariants(&self) -> bool {
        let p = &self.params;
        match self.kind {
            TableKind::Vertices => self.values == vertex_counts(p.a, p.b, p.n),
            TableKind::Edges => self.values == edge_counts(p.a, p.b, p.n),
            TableKind::Degrees => {
                let weighted: BigUint = self
                    .values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * BigUint::from(k))
                    .sum();
                self.total() == vertex_count(p) && weighted == edge_count(p) * 2u32
            }
            TableKind::CubeCoefficients => {
                self.get(0) == vertex_count(p) && (p.n == 0 || self.get(1) == edge_count(p))
            }
        }
    }
}

/// `s_0..=s_upto` with `s_0 = 1`, `s_1 = a`, `s_m = a s_{m-1} + b s_{m-2}`.
pub fn vertex_counts(a: u32, b: u32, upto: usize) -> Vec<BigUint> {
    let mut s: Vec<BigUint> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let next = match m {
            0 => BigUint::one(),
            1 => BigUint::from(a),
            _ => &s[m - 1] * a + &s[m - 2] * b,
        };
        s.push(next);
    }
    s
}

/// `s_n`, the number of vertices of `Π^{a,b}_n`.
pub fn vertex_count(p: &Params) -> BigUint {
    vertex_counts(p.a, p.b, p.n).pop().unwrap_or_default()
}

/// `s_n` as `sum_k C(n-k, k) a^{n-2k} b^k`.
pub fn vertex_count_closed(p: &Params) -> BigUint {
    let n = p.n;
    (0..=n / 2)
        .map(|k| binomial(n - k, k) * pow(p.a, n - 2 * k) * pow(p.b, k))
        .sum()
}

/// Fibonacci number with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fibonacci_number(m: usize) -> BigUint {
    let (mut x, mut y) = (BigUint::zero(), BigUint::one());
    for _ in 0..m {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    x
}

/// `e_0..=e_upto` from `e_m = a e_{m-1} + b e_{m-2} + s_m - s_{m-1}` with
/// `e_0 = 0` and `e_{-1} = 0`.
pub fn edge_counts(a: u32, b: u32, upto: usize) -> Vec<BigUint> {
    let s = vertex_counts(a, b, upto);
    let mut e: Vec<BigUint> = Vec::with_capacity(upto + 1);
    e.push(BigUint::zero());
    for m in 1..=upto {
        let prev2 = if m >= 2 { &e[m - 2] * b } else { BigUint::zero() };
        // s_m >= s_{m-1} for all m >= 1, since s_m - s_{m-1} = (a-1)s_{m-1} + b s_{m-2}.
        let next = &e[m - 1] * a + prev2 + &s[m] - &s[m - 1];
        e.push(next);
    }
    e
}

/// `e_n`, the number of edges of `Π^{a,b}_n`, by the edge recurrence.
pub fn edge_count(p: &Params) -> BigUint {
    edge_counts(p.a, p.b, p.n).pop().unwrap_or_default()
}

/// `e_n = sum_{k=0}^{n-1} s_k (s_{n-k} - s_{n-1-k})`.
pub fn edge_count_convolution(p: &Params) -> BigUint {
    let s = vertex_counts(p.a, p.b, p.n);
    (0..p.n)
        .map(|k| &s[k] * (&s[p.n - k] - &s[p.n - 1 - k]))
        .sum()
}

/// `e_n = sum_{k=0}^{n} (-1)^{n-k} ceil((n+k)/2) C(floor((n+k)/2), k) a^k b^{floor((n-k)/2)}`.
pub fn edge_count_binomial(p: &Params) -> BigUint {
    let n = p.n;
    let total: BigInt = (0..=n)
        .map(|k| {
            let half_up = (n + k).div_ceil(2);
            let half_down = (n + k) / 2;
            let magnitude =
                BigUint::from(half_up) * binomial(half_down, k) * pow(p.a, k) * pow(p.b, (n - k) / 2);
            let sign = if (n - k).is_multiple_of(2) { Sign::Plus } else { Sign::Minus };
            BigInt::from_biguint(sign, magnitude)
        })
        .sum();
    total
        .to_biguint()
        .expect("alternating edge sum is a non-negative count")
}

/// Degree-distribution rows `Δ_0..=Δ_upto`, each indexed by degree `k`.
///
/// Rows `m <= 3` come from explicit degree histograms; later rows follow the
/// parity-split recurrences (one for `a >= 2`, a three-term-deep one for
/// `a = 1`).
pub fn degree_rows(a: u32, b: u32, upto: usize) -> Result<Vec<Vec<BigUint>>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(upto + 1);
    for m in 0..=upto.min(3) {
        let p = Params::new(a, b, m)?;
        rows.push(brute_degree_row(&p)?);
    }
    let (a_big, b_big) = (BigInt::from(a), BigInt::from(b));
    for m in 4..=upto {
        let mut row = vec![BigInt::zero(); 2 * m + 1];
        let at = |rows: &Vec<Vec<BigInt>>, back: usize, k: usize, shift: usize| -> BigInt {
            if k < shift {
                return BigInt::zero();
            }
            rows[m - back].get(k - shift).cloned().unwrap_or_default()
        };
        for (k, slot) in row.iter_mut().enumerate() {
            *slot = if a >= 2 {
                at(&rows, 1, k, 1) * 2
                    + at(&rows, 1, k, 2) * (&a_big - 2)
                    + at(&rows, 2, k, 1)
                    + at(&rows, 2, k, 2) * (&b_big - 2)
                    + at(&rows, 2, k, 3)
            } else {
                at(&rows, 1, k, 1)
                    + at(&rows, 2, k, 1)
                    + at(&rows, 2, k, 2) * (&b_big - 1)
                    + at(&rows, 3, k, 1)
                    + at(&rows, 3, k, 2) * (&b_big - 2)
                    - at(&rows, 3, k, 3) * (&b_big - 1)
            };
        }
        rows.push(row);
    }
    Ok(rows
        .into_iter()
        .map(|row| {
            let mut row: Vec<BigUint> = row
                .into_iter()
                .map(|v| {
                    assert!(!v.is_negative(), "degree recurrence produced a negative count");
                    v.to_biguint().unwrap_or_default()
                })
                .collect();
            trim(&mut row);
            row
        })
        .collect())
}

fn brute_degree_row(p: &Params) -> Result<Vec<BigInt>> {
    let words = enumerate_words_capped(p, Limits::DEFAULT.vertex_cap)?;
    let mut row = vec![0u64; 2 * p.n + 1];
    for word in &words {
        row[graph::neighbor_words(word, p).len()] += 1;
    }
    Ok(row.into_iter().map(BigInt::from).collect())
}

/// `Δ_{n,k}` for all `k`.
pub fn degree_table(p: &Params) -> Result<CountTable> {
    let values = degree_rows(p.a, p.b, p.n)?.pop().unwrap_or_default();
    Ok(CountTable {
        params: *p,
        kind: TableKind::Degrees,
        values,
    })
}

/// Cube-coefficient rows `c(Π_0)..=c(Π_upto)` from
/// `c_k(n) = a c_k(n-1) + b c_k(n-2) + (a-1) c_{k-1}(n-1) + b c_{k-1}(n-2)`
/// with `c(Π_0) = [1]`, `c(Π_1) = [a, a-1]`.
pub fn cube_coefficient_rows(a: u32, b: u32, upto: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let mut row = match m {
            0 => vec![BigUint::one()],
            1 => vec![BigUint::from(a), BigUint::from(a - 1)],
            _ => {
                let (r1, r2) = (&rows[m - 1], &rows[m - 2]);
                let len = r1.len().max(r2.len()) + 1;
                (0..len)
                    .map(|k| {
                        let get = |r: &Vec<BigUint>, i: usize| r.get(i).cloned().unwrap_or_default();
                        let mut v = get(r1, k) * a + get(r2, k) * b;
                        if k >= 1 {
                            v += get(r1, k - 1) * (a - 1) + get(r2, k - 1) * b;
                        }
                        v
                    })
                    .collect()
            }
        };
        trim(&mut row);
        rows.push(row);
    }
    rows
}

pub fn cube_coefficients(p: &Params) -> CountTable {
    CountTable {
        params: *p,
        kind: TableKind::CubeCoefficients,
        values: cube_coefficient_rows(p.a, p.b, p.n).pop().unwrap_or_default(),
    }
}

/// Total number of induced subcubes, `c_n = (2a-1) c_{n-1} + 2b c_{n-2}`.
pub fn cube_number(p: &Params) -> BigUint {
    let mut prev = BigUint::zero();
    let mut cur = BigUint::one();
    for _ in 0..p.n {
        let next = &cur * (2 * p.a - 1) + &prev * (2 * p.b);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `C(Π_n, x) = sum_k c_k x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubePolynomial {
    pub params: Params,
    pub coefficients: Vec<BigUint>,
}

impl CubePolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigUint) -> BigUint {
        self.coefficients
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for CubePolynomial {
    /// Highest power first, e.g. `8x^3+44x^2+74x+39`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let coeff = if c.is_one() && k > 0 { String::new() } else { c.to_string() };
                match k {
                    0 => coeff,
                    1 => format!("{coeff}x"),
                    _ => format!("{coeff}x^{k}"),
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Polynomial recurrence `C_n = (a + (a-1)x) C_{n-1} + (b + bx) C_{n-2}`.
pub fn cube_polynomial(p: &Params) -> CubePolynomial {
    let step_one = [BigUint::from(p.a), BigUint::from(p.a - 1)];
    let step_two = [BigUint::from(p.b), BigUint::from(p.b)];
    let mut prev: Vec<BigUint> = Vec::new();
    let mut cur = vec![BigUint::one()];
    for _ in 0..p.n {
        let next = poly_add(&poly_mul(&step_one, &cur), &poly_mul(&step_two, &prev));
        prev = std::mem::replace(&mut cur, next);
    }
    trim(&mut cur);
    CubePolynomial {
        params: *p,
        coefficients: cur,
    }
}

fn poly_mul(x: &[BigUint], y: &[BigUint]) -> Vec<BigUint> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            out[i + j] += xi * yj;
        }
    }
    out
}

fn poly_add(x: &[BigUint], y: &[BigUint]) -> Vec<BigUint> {
    (0..x.len().max(y.len()))
        .map(|i| x.get(i).cloned().unwrap_or_default() + y.get(i).cloned().unwrap_or_default())
        .collect()
}

fn trim(row: &mut Vec<BigUint>) {
    while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn pow(base: u32, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}
