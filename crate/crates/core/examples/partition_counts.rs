//! Compare the exact partition counting function W(s, d) with its
//! polynomial part W_1(s, d) and watch the deviation stay bounded and
//! periodic.
//!
//! Run with: cargo run --example partition_counts

use num_traits::{Signed, Zero};
use sympart::arith::{rat_int, Rational};
use sympart::partfunc::{generators_lcm, max_deviation};
use sympart::{count_partitions_brute, eval_w1, PointTuple};

fn main() -> sympart::Result<()> {
    let d = PointTuple::from_integers(&[3, 5, 7]);
    println!("generators d = ({d})");
    println!("{:>4} {:>8} {:>14} {:>12}", "s", "W", "W_1", "W - W_1");
    for s in 0..=20u64 {
        let w = Rational::from_integer(count_partitions_brute(s, &d)?.into());
        let w1 = eval_w1(&rat_int(s as i64), &d)?;
        println!("{s:>4} {w:>8} {w1:>14} {:>12}", &w - &w1);
    }

    println!("\ndeviation windows (one period = lcm of the generators):");
    for gens in [vec![1i64, 2], vec![2, 3], vec![3, 5, 7]] {
        let d = PointTuple::from_integers(&gens);
        let period = generators_lcm(&d)?;
        let per_window: Vec<String> = (0..3)
            .map(|i| {
                max_deviation(&d, i * period, (i + 1) * period - 1)
                    .map(|v| v.to_string())
                    .unwrap_or_default()
            })
            .collect();
        println!("  d=({d}), period {period}: max |W - W_1| per window = {per_window:?}");
    }

    println!("\nall-ones generators make the polynomial part exact:");
    let d = PointTuple::from_integers(&[1, 1, 1]);
    for s in [0i64, 5, 10] {
        let w1 = eval_w1(&rat_int(s), &d)?;
        let w = count_partitions_brute(s as u64, &d)?;
        println!("  s={s}: W = {w}, W_1 = {w1} (binomial C(s+2, 2))");
        assert!((w1 - Rational::from_integer(w.into())).abs().is_zero());
    }
    Ok(())
}
