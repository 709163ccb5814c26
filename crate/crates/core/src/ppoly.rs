//! The alternating subset-sum polynomials `P_n` and their evaluation.
//!
//! For a tuple `x = (x_1, ..., x_m)` the degree-`n` polynomial is the signed
//! sum over all nonempty subsets `S` of the coordinates:
//!
//! ```text
//! P_n(x) = sum_{S != {}} (-1)^(|S|+1) (sum_{j in S} x_j)^n
//! ```
//!
//! `P_n` is symmetric in the coordinates, vanishes for `n < m`, equals
//! `(-1)^(m+1) m! x_1...x_m` at `n = m`, and for positive coordinates has
//! the fixed sign `(-1)^(m+1)` for every `n >= m`.
//!
//! Two independent evaluators are provided: [`eval_p`] enumerates the `2^m`
//! subsets directly, while [`eval_p_recursive`] peels off one coordinate at
//! a time via
//!
//! ```text
//! P_n(x_1..x_m) = -sum_{k=1}^{n-1} C(n,k) x_m^(n-k) P_k(x_1..x_{m-1})
//! ```
//!
//! with `P_k(x_1) = x_1^k`. Their agreement on random points is one of the
//! crate's standing cross-checks.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{binomial_rat, Rational};
use crate::error::{Error, Result};

/// Default cap on the number of variables for subset enumeration.
pub const DEFAULT_SUBSET_CAP: usize = 22;

/// An ordered tuple of exact rational coordinates.
///
/// Serves both as the evaluation point of the symmetric polynomials and as
/// the generator tuple of the partition-counting side. Coordinates may be
/// negative or zero; operations that need positivity or integrality check it
/// themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointTuple {
    coords: Vec<Rational>,
}

impl PointTuple {
    pub fn new(coords: Vec<Rational>) -> Self {
        PointTuple { coords }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        PointTuple {
            coords: values.iter().map(|&v| crate::arith::rat_int(v)).collect(),
        }
    }

    /// Parse a comma-separated list of rationals, e.g. `1,-2/3,5`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::domain("empty coordinate list"));
        }
        let coords = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<Rational>()
                    .map_err(|e| Error::domain(format!("bad rational {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PointTuple { coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Sum of all coordinates.
    pub fn sum(&self) -> Rational {
        self.coords.iter().sum()
    }

    /// Product of all coordinates (`chi_m` on the x side, `pi_m` on the d side).
    pub fn product(&self) -> Rational {
        self.coords.iter().product()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.coords.iter()
    }

    /// True when every coordinate is a positive integer.
    pub fn is_positive_integers(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.is_integer() && c > &Rational::zero())
    }
}

impl fmt::Display for PointTuple {
    /// Prints in the same comma-separated form the CLI accepts, so a witness
    /// can be replayed verbatim.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn check_args(n: u32, x: &PointTuple) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("degree n must be >= 1"));
    }
    if x.is_empty() {
        return Err(Error::domain("point tuple must have at least one coordinate"));
    }
    Ok(())
}

/// Evaluate `P_n(x)` by direct subset enumeration, with the default cap on
/// the tuple length.
pub fn eval_p(n: u32, x: &PointTuple) -> Result<Rational> {
    eval_p_with_cap(n, x, DEFAULT_SUBSET_CAP)
}

/// Evaluate `P_n(x)` by direct subset enumeration with an explicit cap.
///
/// Subsets are walked in Gray-code order so each step updates the running
/// subset sum by a single coordinate. Exact arithmetic makes the order
/// irrelevant to the value; it is fixed for reproducibility.
pub fn eval_p_with_cap(n: u32, x: &PointTuple, cap: usize) -> Result<Rational> {
    check_args(n, x)?;
    let m = x.len();
    if m > cap {
        return Err(Error::SubsetCapExceeded { m, cap });
    }

    let mut acc = Rational::zero();
    let mut subset_sum = Rational::zero();
    let mut prev_gray: usize = 0;
    for i in 1usize..(1usize << m) {
        let gray = i ^ (i >> 1);
        let flipped = gray ^ prev_gray;
        let j = flipped.trailing_zeros() as usize;
        if gray & flipped != 0 {
            subset_sum += &x.coords()[j];
        } else {
            subset_sum -= &x.coords()[j];
        }
        let term = subset_sum.pow(n as i32);
        if gray.count_ones() % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
        prev_gray = gray;
    }
    Ok(acc)
}

/// Evaluate `P_n(x)` through the one-coordinate-at-a-time recursion.
///
/// Maintains the vector `P_1..P_n` of the current prefix and folds in one
/// coordinate per round, so the cost is `O(m n^2)` exact operations instead
/// of `2^m` subset sums.
pub fn eval_p_recursive(n: u32, x: &PointTuple) -> Result<Rational> {
    check_args(n, x)?;
    let n = n as usize;

    // Prefix of length 1: P_k(x_1) = x_1^k.
    let first = &x.coords()[0];
    let mut p: Vec<Rational> = (1..=n).map(|k| first.pow(k as i32)).collect();

    for coord in &x.coords()[1..] {
        // Powers coord^1 .. coord^n.
        let mut powers = Vec::with_capacity(n);
        let mut acc = Rational::one();
        for _ in 0..n {
            acc *= coord;
            powers.push(acc.clone());
        }
        let mut next: Vec<Rational> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut sum = Rational::zero();
            for i in 1..k {
                sum += binomial_rat(k as u64, i as i64) * &powers[k - i - 1] * &p[i - 1];
            }
            next.push(-sum);
        }
        p = next;
    }
    Ok(p[n - 1].clone())
}
