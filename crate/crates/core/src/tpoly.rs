//! The normalized factors `T_r` of the subset-sum polynomials: point
//! evaluation by two independent routes, and exact recovery of their
//! power-sum expansions by interpolation.
//!
//! For a tuple of `m` nonzero coordinates and `n = r + m`,
//!
//! ```text
//! T_r(x) = (-1)^(m+1) * r!/n! * P_n(x) / (x_1 ... x_m)
//! ```
//!
//! ([`eval_t_via_p`]), and independently
//!
//! ```text
//! T_r(x) = r! * sum over (k_1..k_m), k_j >= 1, sum k_j = r + m,
//!          of prod_j x_j^(k_j - 1) / k_j!
//! ```
//!
//! ([`eval_t_direct`]), a composition sum that is polynomial-time in `r`
//! and `m` and tolerates zero coordinates. `T_r` is weighted-homogeneous of
//! weight `r` in the power sums `E_k`, so its expansion is recovered
//! exactly by solving one `p(r) x p(r)` linear system over sampled points
//! ([`interpolate_power_sum_poly`], [`t_poly`]).

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{factorial, rat_int, Rational};
use crate::error::{Error, Result};
use crate::powersum::{partitions_of, power_sums, PowerSumPoly, PowerSumVector};
use crate::ppoly::{eval_p, PointTuple};

/// Visit every composition of `total` into `parts` entries, each >= 1, in a
/// fixed odometer order. `total >= parts >= 1` is required for any visit to
/// happen.
pub(crate) fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, mut visit: F) {
    debug_assert!(parts >= 1);
    if (total as usize) < parts {
        return;
    }
    if parts == 1 {
        visit(&[total]);
        return;
    }
    // head holds k_1..k_{m-1}; the last entry is derived from the total.
    let head_len = parts - 1;
    let mut k = vec![1u32; parts];
    loop {
        let used: u32 = k[..head_len].iter().sum();
        k[head_len] = total - used;
        visit(&k);
        // Find the rightmost head entry that can grow once the entries after
        // it reset to 1 while the derived last entry stays >= 1.
        let mut advanced = false;
        for i in (0..head_len).rev() {
            let prefix: u32 = k[..=i].iter().sum::<u32>() + 1;
            let reset_tail = (head_len - 1 - i) as u32;
            if total - (prefix + reset_tail) >= 1 {
                k[i] += 1;
                for entry in k.iter_mut().take(head_len).skip(i + 1) {
                    *entry = 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return;
        }
    }
}

/// Evaluate `T_r(x)` through the subset-sum polynomial `P_{r+m}`.
///
/// Requires every coordinate nonzero (the normalization divides by their
/// product); use [`eval_t_direct`] at points with zeros.
pub fn eval_t_via_p(r: u32, x: &PointTuple) -> Result<Rational> {
    let m = x.len();
    if m == 0 {
        return Err(Error::domain("point tuple must have at least one coordinate"));
    }
    if x.iter().any(|c| c.is_zero()) {
        return Err(Error::domain(
            "eval_t_via_p needs nonzero coordinates (division by their product)",
        ));
    }
    let n = r + m as u32;
    let ratio = Rational::new(factorial(r as u64).into(), factorial(n as u64).into());
    Ok(crate::arith::parity_sign(m) * ratio * eval_p(n, x)? / x.product())
}

/// Evaluate `T_r(x)` by the composition sum; total for every rational point.
///
/// Integer points (the interpolation samples and every verification sweep)
/// take a fast path that walks the compositions as a prefix-product tree
/// over big integers against the common denominator `(r+m)!`, deferring all
/// rational reduction to one final division.
pub fn eval_t_direct(r: u32, x: &PointTuple) -> Result<Rational> {
    let m = x.len();
    if m == 0 {
        return Err(Error::domain("point tuple must have at least one coordinate"));
    }
    if x.iter().all(|c| c.is_integer()) {
        return Ok(eval_t_direct_integer(r, x));
    }
    eval_t_direct_general(r, x)
}

/// The general composition odometer over rationals; the reference route.
pub(crate) fn eval_t_direct_general(r: u32, x: &PointTuple) -> Result<Rational> {
    let m = x.len();
    let total = r + m as u32;

    // x_j^t for t = 0..=r and 1/t! for t = 1..=r+1.
    let powers: Vec<Vec<Rational>> = x
        .iter()
        .map(|c| {
            let mut row = Vec::with_capacity(r as usize + 1);
            let mut acc = Rational::one();
            row.push(acc.clone());
            for _ in 0..r {
                acc *= c;
                row.push(acc.clone());
            }
            row
        })
        .collect();
    let inv_factorials: Vec<Rational> = (0..=total)
        .map(|t| Rational::new(1.into(), factorial(t as u64).into()))
        .collect();

    let mut acc = Rational::zero();
    for_each_composition(total, m, |k| {
        let mut term = Rational::one();
        for (j, &kj) in k.iter().enumerate() {
            term *= &powers[j][(kj - 1) as usize];
            term *= &inv_factorials[kj as usize];
        }
        acc += term;
    });
    Ok(acc * Rational::from_integer(factorial(r as u64).into()))
}

fn eval_t_direct_integer(r: u32, x: &PointTuple) -> Rational {
    use num_bigint::BigInt;

    let m = x.len();
    let total = r + m as u32;
    // X_j^t tables over integers.
    let powers: Vec<Vec<BigInt>> = x
        .iter()
        .map(|c| {
            let base = c.to_integer();
            let mut row = Vec::with_capacity(r as usize + 1);
            let mut acc = BigInt::from(1);
            row.push(acc.clone());
            for _ in 0..r {
                acc *= &base;
                row.push(acc.clone());
            }
            row
        })
        .collect();
    let factorials: Vec<BigInt> = (0..=total)
        .map(|t| BigInt::from(factorial(t as u64)))
        .collect();

    // Walks every composition; at a leaf the accumulated multiplier equals
    // the multinomial (r+m)!/(k_1!..k_m!), an integer at every prefix too.
    fn walk(
        depth: usize,
        remaining: u32,
        prod: BigInt,
        multinomial: BigInt,
        powers: &[Vec<BigInt>],
        factorials: &[BigInt],
        acc: &mut BigInt,
    ) {
        let slots_left = powers.len() - depth;
        if slots_left == 1 {
            let k = remaining;
            *acc += prod
                * &powers[depth][(k - 1) as usize]
                * (multinomial / &factorials[k as usize]);
            return;
        }
        for k in 1..=(remaining - slots_left as u32 + 1) {
            walk(
                depth + 1,
                remaining - k,
                &prod * &powers[depth][(k - 1) as usize],
                &multinomial / &factorials[k as usize],
                powers,
                factorials,
                acc,
            );
        }
    }

    let mut acc = BigInt::from(0);
    walk(
        0,
        total,
        BigInt::from(1),
        factorials[total as usize].clone(),
        &powers,
        &factorials,
        &mut acc,
    );
    // T_r = r!/(r+m)! * sum of multinomial-weighted power products.
    Rational::new(
        acc * BigInt::from(factorial(r as u64)),
        factorials[total as usize].clone(),
    )
}

/// Solve `a * c = b` exactly by fraction-free (Bareiss) elimination.
/// Returns `None` when the matrix is singular.
///
/// Each row is first scaled to integers by the lcm of its denominators (a
/// row operation, so the solution is unchanged). The forward sweep then
/// stays in big integers with exact divisions by the previous pivot, and
/// only the back substitution works in rationals.
fn solve_exact(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Option<Vec<Rational>> {
    use num_bigint::BigInt;

    let n = b.len();
    // Augmented integer matrix, one row scale at a time.
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (row, rhs) in a.into_iter().zip(b) {
        let mut scale = rhs.denom().clone();
        for entry in &row {
            scale = num_integer::lcm(scale, entry.denom().clone());
        }
        let mut int_row: Vec<BigInt> = row
            .iter()
            .map(|entry| entry.numer() * (&scale / entry.denom()))
            .collect();
        int_row.push(rhs.numer() * (&scale / rhs.denom()));
        m.push(int_row);
    }

    let mut prev_pivot = BigInt::from(1);
    for col in 0..n {
        let pivot_row = (col..n).find(|&row| !m[row][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            for c2 in (col + 1)..=n {
                row[c2] = (&row[c2] * &pivot[col] - &row[col] * &pivot[c2]) / &prev_pivot;
            }
            row[col] = BigInt::from(0);
        }
        prev_pivot = pivot[col].clone();
    }

    // Back substitution over rationals on the triangular system.
    let mut solution = vec![Rational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = Rational::from_integer(m[row][n].clone());
        for col in (row + 1)..n {
            acc -= Rational::from_integer(m[row][col].clone()) * &solution[col];
        }
        solution[row] = acc / Rational::from_integer(m[row][row].clone());
    }
    Some(solution)
}

const INTERPOLATION_ATTEMPTS: usize = 5;
const HELD_OUT_POINTS: usize = 5;
const SAMPLE_COORD_MAX: i64 = 10_000;

fn random_point(rng: &mut ChaCha8Rng, m: usize) -> PointTuple {
    PointTuple::new(
        (0..m)
            .map(|_| rat_int(rng.random_range(1..=SAMPLE_COORD_MAX)))
            .collect(),
    )
}

/// Recover the unique weight-`w` power-sum polynomial representing a
/// point evaluator.
///
/// The evaluator must be symmetric and weighted-homogeneous of weight `w`;
/// it is sampled on tuples of `max(w, 1)` integer coordinates, where
/// `E_1..E_w` are algebraically independent, so the linear system over the
/// partition-monomial basis has a unique solution. The solved polynomial is
/// re-checked against the evaluator on held-out sample points before being
/// returned; any disagreement is a hard error carrying the witness.
pub fn interpolate_power_sum_poly<F>(evaluate: F, w: u32, seed: u64) -> Result<PowerSumPoly>
where
    F: Fn(&PointTuple) -> Result<Rational>,
{
    let basis = partitions_of(w);
    let size = basis.len();
    let m = w.max(1) as usize;
    let k_max = w.max(1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut solution = None;
    for _ in 0..INTERPOLATION_ATTEMPTS {
        let points: Vec<PointTuple> = (0..size).map(|_| random_point(&mut rng, m)).collect();
        let mut matrix = Vec::with_capacity(size);
        let mut rhs = Vec::with_capacity(size);
        for point in &points {
            let e = power_sums(point, k_max);
            let row = basis
                .iter()
                .map(|mono| mono.eval(&e))
                .collect::<Result<Vec<_>>>()?;
            matrix.push(row);
            rhs.push(evaluate(point)?);
        }
        if let Some(coeffs) = solve_exact(matrix, rhs) {
            solution = Some(coeffs);
            break;
        }
    }
    let coeffs = solution.ok_or(Error::SingularSystem {
        attempts: INTERPOLATION_ATTEMPTS,
    })?;

    let poly = PowerSumPoly::from_terms(basis.into_iter().zip(coeffs));

    for _ in 0..HELD_OUT_POINTS {
        let point = random_point(&mut rng, m);
        let got = poly.eval(&power_sums(&point, k_max))?;
        let want = evaluate(&point)?;
        if got != want {
            return Err(Error::InterpolationMismatch {
                point: point.to_string(),
                got: got.to_string(),
                want: want.to_string(),
            });
        }
    }
    Ok(poly)
}

/// The exact power-sum expansion of `T_r`, via [`eval_t_direct`] sampling.
pub fn t_poly(r: u32, seed: u64) -> Result<PowerSumPoly> {
    interpolate_power_sum_poly(|x| eval_t_direct(r, x), r, seed)
}

/// `E_k` values needed to evaluate weight-`w` polynomials at a point.
pub fn power_sum_context(x: &PointTuple, w: u32) -> PowerSumVector {
    power_sums(x, w.max(1) as usize)
}
