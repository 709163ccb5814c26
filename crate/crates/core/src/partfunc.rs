//! The partition-counting side: Bernoulli-umbral coefficients `f_r`, the
//! polynomial part `W_1` of the restricted counting function, an exact
//! dynamic-programming counter to compare against, and the parity check.
//!
//! For a generator tuple `d = (d_1, ..., d_m)` the number of ways to write
//! `s >= 0` as a nonnegative integer combination `sum t_i d_i` is the
//! counting function `W(s, d)`. Its polynomial part is
//!
//! ```text
//! W_1(s, d) = 1/((m-1)! d_1...d_m) * sum_{r=0}^{m-1} C(m-1, r) f_r(d) s^(m-1-r)
//! ```
//!
//! where `f_r(d)` expands `(sigma_1 + sum_i B d_i)^r` umbrally: after the
//! multinomial expansion each power `(B d_i)^j` is read as `B_j d_i^j` with
//! `B_j` the j-th Bernoulli number, each generator carrying its own
//! independent umbra. `f_r` is symmetric of weight `r` in the power sums
//! `sigma_k = sum d_i^k`, so the same interpolation machinery that recovers
//! the `T_r` expansions recovers `f_r` ([`f_poly`]).

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::arith::{bernoulli, binomial_rat, factorial, Rational};
use crate::error::{Error, Result};
use crate::powersum::PowerSumPoly;
use crate::ppoly::PointTuple;
use crate::report::{inputs, ReportBuilder, VerificationReport};
use crate::tpoly::{for_each_composition, interpolate_power_sum_poly};

/// Evaluate the umbral coefficient `f_r(d)`.
///
/// The multinomial runs over `(j_0, j_1, ..., j_m) >= 0` summing to `r`:
///
/// ```text
/// f_r(d) = sum r!/(j_0! ... j_m!) * sigma_1^j_0 * prod_i B_{j_i} d_i^{j_i}
/// ```
///
/// Cross terms between two generators pick up `B_1 d_i * B_1 d_j`, not
/// `B_2 d_i d_j`: the umbrae are independent per generator.
///
/// Integer tuples take a fast path: the Bernoulli numbers are scaled to a
/// common denominator, the walk prunes every branch whose umbral index has
/// a vanishing Bernoulli number, and rational reduction happens once at the
/// end.
pub fn eval_f(r: u32, d: &PointTuple) -> Result<Rational> {
    let m = d.len();
    if m == 0 {
        return Err(Error::domain("generator tuple must have at least one entry"));
    }
    if d.iter().all(|c| c.is_integer()) {
        return Ok(eval_f_integer(r, d));
    }
    eval_f_general(r, d)
}

/// The general multinomial odometer over rationals; the reference route.
pub(crate) fn eval_f_general(r: u32, d: &PointTuple) -> Result<Rational> {
    let m = d.len();
    let sigma1 = d.sum();

    // sigma_1^t and d_i^t for t = 0..=r, B_t, and 1/t!.
    let sigma_powers = powers_upto(&sigma1, r);
    let coord_powers: Vec<Vec<Rational>> = d.iter().map(|c| powers_upto(c, r)).collect();
    let bern: Vec<Rational> = (0..=r).map(|t| bernoulli(t as usize)).collect();
    let inv_factorials: Vec<Rational> = (0..=r)
        .map(|t| Rational::new(1.into(), factorial(t as u64).into()))
        .collect();
    let r_factorial = Rational::from_integer(factorial(r as u64).into());

    let mut acc = Rational::zero();
    // Compositions of r into m+1 slots, shifted down from the >= 1 form.
    for_each_composition(r + m as u32 + 1, m + 1, |k| {
        let j0 = k[0] - 1;
        // Bernoulli numbers at odd indices >= 3 vanish; skip those terms
        // before doing any big-rational work.
        if k[1..].iter().any(|&ki| {
            let j = ki - 1;
            j >= 3 && j % 2 == 1
        }) {
            return;
        }
        let mut term = &sigma_powers[j0 as usize] * &inv_factorials[j0 as usize];
        for (i, &ki) in k[1..].iter().enumerate() {
            let j = (ki - 1) as usize;
            term *= &bern[j];
            term *= &coord_powers[i][j];
            term *= &inv_factorials[j];
        }
        acc += term;
    });
    Ok(acc * r_factorial)
}

fn eval_f_integer(r: u32, d: &PointTuple) -> Rational {
    use num_bigint::BigInt;

    let m = d.len();
    let bern: Vec<Rational> = (0..=r).map(|t| bernoulli(t as usize)).collect();
    // Common denominator of B_0..B_r; every scaled value is an integer.
    let mut scale = BigInt::one();
    for b in &bern {
        scale = num_integer::lcm(scale, b.denom().clone());
    }
    let bern_scaled: Vec<BigInt> = bern
        .iter()
        .map(|b| b.numer() * (&scale / b.denom()))
        .collect();
    // Umbral indices with nonzero Bernoulli numbers: 0, 1 and even.
    let allowed: Vec<u32> = (0..=r)
        .filter(|&j| j <= 1 || (j % 2 == 0))
        .collect();

    let sigma1 = d.sum().to_integer();
    let sigma_powers = int_powers_upto(&sigma1, r);
    let coord_powers: Vec<Vec<BigInt>> = d
        .iter()
        .map(|c| int_powers_upto(&c.to_integer(), r))
        .collect();
    let factorials: Vec<BigInt> = (0..=r).map(|t| BigInt::from(factorial(t as u64))).collect();

    struct UmbralTables {
        allowed: Vec<u32>,
        coord_powers: Vec<Vec<BigInt>>,
        bern_scaled: Vec<BigInt>,
        sigma_powers: Vec<BigInt>,
        factorials: Vec<BigInt>,
    }

    // Recursive walk over (j_1..j_m); the sigma slot absorbs the remainder.
    // `multinomial` carries r!/(j_1!..j_i!), exact at every prefix.
    fn walk(
        tables: &UmbralTables,
        slot: usize,
        remaining: u32,
        prod: BigInt,
        multinomial: BigInt,
        acc: &mut BigInt,
    ) {
        if slot == tables.coord_powers.len() {
            let j0 = remaining as usize;
            *acc += prod * &tables.sigma_powers[j0] * (multinomial / &tables.factorials[j0]);
            return;
        }
        for &j in tables.allowed.iter().take_while(|&&j| j <= remaining) {
            walk(
                tables,
                slot + 1,
                remaining - j,
                &prod * &tables.coord_powers[slot][j as usize] * &tables.bern_scaled[j as usize],
                &multinomial / &tables.factorials[j as usize],
                acc,
            );
        }
    }

    let tables = UmbralTables {
        allowed,
        coord_powers,
        bern_scaled,
        sigma_powers,
        factorials,
    };
    let mut acc = BigInt::from(0);
    let r_factorial = tables.factorials[r as usize].clone();
    walk(&tables, 0, r, BigInt::one(), r_factorial, &mut acc);
    // Each generator slot contributed one factor of `scale`.
    Rational::new(acc, scale.pow(m as u32))
}

fn int_powers_upto(base: &num_bigint::BigInt, max: u32) -> Vec<num_bigint::BigInt> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = num_bigint::BigInt::one();
    out.push(acc.clone());
    for _ in 0..max {
        acc *= base;
        out.push(acc.clone());
    }
    out
}

fn powers_upto(base: &Rational, max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for _ in 0..max {
        acc *= base;
        out.push(acc.clone());
    }
    out
}

/// The exact power-sum expansion of `f_r` in the sigma variables.
pub fn f_poly(r: u32, seed: u64) -> Result<PowerSumPoly> {
    interpolate_power_sum_poly(|d| eval_f(r, d), r, seed)
}

fn require_positive_integer_generators(d: &PointTuple) -> Result<()> {
    if d.is_empty() {
        return Err(Error::domain("generator tuple must have at least one entry"));
    }
    if !d.is_positive_integers() {
        return Err(Error::domain(
            "generators must be positive integers",
        ));
    }
    Ok(())
}

/// Evaluate the polynomial part `W_1(s, d)`.
///
/// `s` may be any rational; the parity property is probed at half-integer
/// shifts. The generators must be positive integers.
pub fn eval_w1(s: &Rational, d: &PointTuple) -> Result<Rational> {
    require_positive_integer_generators(d)?;
    let m = d.len();
    let s_powers = powers_upto(s, m as u32 - 1);
    let mut sum = Rational::zero();
    for r in 0..m {
        sum += binomial_rat(m as u64 - 1, r as i64)
            * eval_f(r as u32, d)?
            * &s_powers[m - 1 - r];
    }
    let norm = Rational::from_integer(factorial(m as u64 - 1).into()) * d.product();
    Ok(sum / norm)
}

/// Count representations `s = sum t_i d_i` with `t_i >= 0`, by dynamic
/// programming over `s` (unbounded-knapsack style), in exact big integers.
pub fn count_partitions_brute(s: u64, d: &PointTuple) -> Result<BigUint> {
    require_positive_integer_generators(d)?;
    let items: Vec<u64> = d
        .iter()
        .map(|c| {
            u64::try_from(c.to_integer()).map_err(|_| Error::domain("generator too large"))
        })
        .collect::<Result<Vec<_>>>()?;
    let size = s as usize;
    let mut ways = vec![BigUint::zero(); size + 1];
    ways[0] = BigUint::one();
    for item in items {
        let item = item as usize;
        for t in item..=size {
            let add = ways[t - item].clone();
            ways[t] += add;
        }
    }
    Ok(ways[size].clone())
}

/// Check the reflection property of `W_1` around `-sigma_1/2`:
///
/// ```text
/// W_1(s - sigma_1/2, d) = (-1)^(m+1) W_1(-s - sigma_1/2, d)
/// ```
///
/// for every `s` in `s_values` (rationals; half-integers are the
/// interesting probes when `sigma_1` is odd).
pub fn check_parity(d: &PointTuple, s_values: &[Rational]) -> Result<VerificationReport> {
    require_positive_integer_generators(d)?;
    let m = d.len();
    let half_sigma1 = d.sum() / crate::arith::rat_int(2);
    let sign = crate::arith::parity_sign(m);

    let mut builder = ReportBuilder::new("parity")
        .param("d", d)
        .param("m", m)
        .param("s_count", s_values.len());
    for s in s_values {
        let lhs = eval_w1(&(s - &half_sigma1), d)?;
        let rhs = &sign * eval_w1(&(-s - &half_sigma1), d)?;
        builder.check(
            lhs == rhs,
            inputs([("d", d.to_string()), ("s", s.to_string())]),
            rhs,
            lhs,
        );
    }
    Ok(builder.finish())
}

/// Largest absolute deviation `|W - W_1|` over `s = lo..=hi`.
pub fn max_deviation(d: &PointTuple, lo: u64, hi: u64) -> Result<Rational> {
    let mut max = Rational::zero();
    for s in lo..=hi {
        let w = Rational::from_integer(count_partitions_brute(s, d)?.into());
        let w1 = eval_w1(&crate::arith::rat_int(s as i64), d)?;
        let dev = (w - w1).abs();
        if dev > max {
            max = dev;
        }
    }
    Ok(max)
}

/// Least common multiple of the generators, for window sizing.
pub fn generators_lcm(d: &PointTuple) -> Result<u64> {
    require_positive_integer_generators(d)?;
    let mut acc: u64 = 1;
    for c in d.iter() {
        let v = u64::try_from(c.to_integer()).map_err(|_| Error::domain("generator too large"))?;
        acc = num_integer::lcm(acc, v);
    }
    Ok(acc)
}
