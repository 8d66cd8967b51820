//! Truncated formal power series in one or two variables with exact integer
//! coefficients, and the rational generating functions of the counting
//! sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Highest retained power of each variable (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Order {
    pub x: usize,
    pub y: usize,
}

impl Order {
    pub const DEFAULT: Order = Order { x: 32, y: 32 };

    pub fn new(x: usize, y: usize) -> Self {
        Order { x, y }
    }
}

impl Default for Order {
    fn default() -> Self {
        Order::DEFAULT
    }
}

/// Dense truncated series. Univariate series keep `y = 0` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    bivariate: bool,
    order: Order,
    // row-major: coeffs[i * (order.y + 1) + j] is the x^i y^j coefficient
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn zero(bivariate: bool, order: Order) -> Self {
        let order = if bivariate { order } else { Order { y: 0, ..order } };
        Series {
            bivariate,
            order,
            coeffs: vec![BigInt::zero(); (order.x + 1) * (order.y + 1)],
        }
    }

    /// Univariate series from `sum c_i x^i`; terms past the order are dropped.
    pub fn univariate(terms: &[i64], order: usize) -> Self {
        let mut s = Series::zero(false, Order::new(order, 0));
        for (i, &c) in terms.iter().enumerate().take(order + 1) {
            s.coeffs[i] = BigInt::from(c);
        }
        s
    }

    /// Bivariate series from `(i, j, c)` triples meaning `c x^i y^j`.
    pub fn bivariate(terms: &[(usize, usize, i64)], order: Order) -> Self {
        let mut s = Series::zero(true, order);
        for &(i, j, c) in terms {
            if i <= order.x && j <= order.y {
                let slot = s.index(i, j);
                s.coeffs[slot] += c;
            }
        }
        s
    }

    pub fn is_bivariate(&self) -> bool {
        self.bivariate
    }

    pub fn order(&self) -> Order {
        self.order
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.order.y + 1) + j
    }

    /// Coefficient of `x^i y^j`; zero outside the stored range.
    pub fn coeff2(&self, i: usize, j: usize) -> BigInt {
        if i > self.order.x || j > self.order.y {
            return BigInt::zero();
        }
        self.coeffs[self.index(i, j)].clone()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeff2(i, 0)
    }

    /// The `y`-polynomial multiplying `x^i`, trailing zeros trimmed.
    pub fn row(&self, i: usize) -> Vec<BigInt> {
        if i > self.order.x {
            return Vec::new();
        }
        let start = self.index(i, 0);
        let mut row = self.coeffs[start..start + self.order.y + 1].to_vec();
        while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
            row.pop();
        }
        row
    }

    /// Univariate coefficients `0..=order.x`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..=self.order.x).map(|i| self.coeff(i)).collect()
    }

    fn reshaped(&self, bivariate: bool, order: Order) -> Series {
        let mut out = Series::zero(bivariate, order);
        let order = out.order;
        for i in 0..=order.x.min(self.order.x) {
            for j in 0..=order.y.min(self.order.y) {
                let slot = out.index(i, j);
                out.coeffs[slot] = self.coeff2(i, j);
            }
        }
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Series) -> Series {
        let bivariate = self.bivariate || other.bivariate;
        let order = Order::new(
            self.order.x.min(other.order.x),
            if bivariate {
                match (self.bivariate, other.bivariate) {
                    (true, true) => self.order.y.min(other.order.y),
                    (true, false) => self.order.y,
                    _ => other.order.y,
                }
            } else {
                0
            },
        );
        let mut out = Series::zero(bivariate, order);
        let order = out.order;
        for i1 in 0..=order.x.min(self.order.x) {
            for j1 in 0..=order.y.min(self.order.y) {
                let c1 = &self.coeffs[self.index(i1, j1)];
                if c1.is_zero() {
                    continue;
                }
                for i2 in 0..=(order.x - i1).min(other.order.x) {
                    for j2 in 0..=(order.y - j1).min(other.order.y) {
                        let c2 = &other.coeffs[other.index(i2, j2)];
                        if !c2.is_zero() {
                            let slot = out.index(i1 + i2, j1 + j2);
                            out.coeffs[slot] += c1 * c2;
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Series {
    /// One line per power of `x`: `i: c_0 c_1 ..` (the `y`-coefficients).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.bivariate {
            let parts: Vec<String> = self.coefficients().iter().map(|c| c.to_string()).collect();
            return writeln!(f, "{}", parts.join(" "));
        }
        for i in 0..=self.order.x {
            let parts: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
            writeln!(f, "{i}: {}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// `numerator / denominator` truncated at `order` (per variable), computed by
/// the coefficient recursion `Q_{ij} = (N_{ij} - sum D_{pq} Q_{i-p, j-q}) / D_00`.
///
/// Fails when `D_00 = 0`, when a division is not exact, or when `order`
/// exceeds the series cap.
pub fn expand_rational_series(numerator: &Series, denominator: &Series, order: Order) -> Result<Series> {
    let cap = Limits::DEFAULT.series_order_cap;
    if order.x > cap || order.y > cap {
        return Err(Error::limit("series order", order.x.max(order.y), cap as u64));
    }
    let lead = denominator.coeff2(0, 0);
    if lead.is_zero() {
        return Err(Error::InvalidParams(
            "denominator has zero constant term".into(),
        ));
    }
    let bivariate = numerator.bivariate || denominator.bivariate;
    let mut out = Series::zero(bivariate, order);
    let order = out.order;
    let num = numerator.reshaped(bivariate, order);
    let den = denominator.reshaped(bivariate, order);

    // Nonzero denominator terms other than the constant.
    let den_terms: Vec<(usize, usize, BigInt)> = (0..=order.x)
        .flat_map(|p| (0..=order.y).map(move |q| (p, q)))
        .filter(|&(p, q)| (p, q) != (0, 0))
        .map(|(p, q)| (p, q, den.coeff2(p, q)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();

    for i in 0..=order.x {
        for j in 0..=order.y {
            let mut acc = num.coeff2(i, j);
            for (p, q, c) in &den_terms {
                if *p <= i && *q <= j {
                    acc -= c * &out.coeffs[out.index(i - p, j - q)];
                }
            }
            let (quot, rem) = acc.div_rem(&lead);
            if !rem.is_zero() {
                return Err(Error::InvalidParams(format!(
                    "coefficient of x^{i} y^{j} is not an integer (denominator constant {lead})"
                )));
            }
            let slot = out.index(i, j);
            out.coeffs[slot] = quot;
        }
    }
    Ok(out)
}

/// The four generating functions of the counting sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingFunction {
    /// `S(x) = 1 / (1 - ax - bx²)`, vertices.
    Vertices,
    /// `E(x) = ((a-1)x + bx²) / (1 - ax - bx²)²`, edges.
    Edges,
    /// `Δ(x, y)`, degree distribution (`x` marks `n`, `y` the degree).
    Degrees,
    /// `A(x, y) = 1 / (1 - ax - bx² - (a-1)xy - bx²y)`, cube coefficients.
    Cubes,
}

impl GeneratingFunction {
    /// Numerator and denominator at concrete `a, b`.
    pub fn rational(self, a: u32, b: u32, order: Order) -> (Series, Series) {
        let (a, b) = (a as i64, b as i64);
        match self {
            GeneratingFunction::Vertices => {
                (Series::univariate(&[1], order.x), horadam_denominator(a, b, order.x))
            }
            GeneratingFunction::Edges => {
                let d = horadam_denominator(a, b, order.x);
                (Series::univariate(&[0, a - 1, b], order.x), d.mul(&d))
            }
            GeneratingFunction::Degrees if a >= 2 => (
                Series::bivariate(&[(0, 0, 1)], order),
                Series::bivariate(
                    &[
                        (0, 0, 1),
                        (1, 1, -2),
                        (1, 2, -(a - 2)),
                        (2, 1, -1),
                        (2, 2, -(b - 2)),
                        (2, 3, -1),
                    ],
                    order,
                ),
            ),
            GeneratingFunction::Degrees => (
                // (1 - (y - 1)x) / (1 - xy - (y + (b-1)y²)x² - (y + (b-2)y² - (b-1)y³)x³)
                Series::bivariate(&[(0, 0, 1), (1, 1, -1), (1, 0, 1)], order),
                Series::bivariate(
                    &[
                        (0, 0, 1),
                        (1, 1, -1),
                        (2, 1, -1),
                        (2, 2, -(b - 1)),
                        (3, 1, -1),
                        (3, 2, -(b - 2)),
                        (3, 3, b - 1),
                    ],
                    order,
                ),
            ),
            GeneratingFunction::Cubes => (
                Series::bivariate(&[(0, 0, 1)], order),
                Series::bivariate(
                    &[(0, 0, 1), (1, 0, -a), (2, 0, -b), (1, 1, -(a - 1)), (2, 1, -b)],
                    order,
                ),
            ),
        }
    }

    pub fn expand(self, a: u32, b: u32, order: Order) -> Result<Series> {
        let (num, den) = self.rational(a, b, order);
        expand_rational_series(&num, &den, order)
    }
}

fn horadam_denominator(a: i64, b: i64, order: usize) -> Series {
    Series::univariate(&[1, -a, -b], order)
}

/// Convenience: coefficient rows of a bivariate expansion as non-negative
/// integers, for comparison against count tables.
pub fn nonnegative_row(series: &Series, i: usize) -> Option<Vec<num_bigint::BigUint>> {
    series
        .row(i)
        .into_iter()
        .map(|c| if c.is_negative() { None } else { c.to_biguint() })
        .collect()
}
