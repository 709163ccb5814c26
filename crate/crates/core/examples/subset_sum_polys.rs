//! Evaluate the alternating subset-sum polynomials and watch their
//! structural identities hold exactly.
//!
//! Run with: cargo run --example subset_sum_polys

use sympart::arith::rat;
use sympart::{eval_p, eval_p_recursive, PointTuple};

fn main() -> sympart::Result<()> {
    let x = PointTuple::from_integers(&[1, 2, 3]);

    println!("point x = ({x}), m = {}", x.len());
    for n in 1..=6 {
        println!("  P_{n}(x) = {}", eval_p(n, &x)?);
    }

    println!("\nstructure:");
    println!("  P_1, P_2 vanish (degree below the variable count)");
    println!(
        "  P_3 = (-1)^(m+1) m! x1 x2 x3 = {} (factorial identity)",
        eval_p(3, &x)?
    );

    let with_zero = PointTuple::from_integers(&[4, 0, 9]);
    println!(
        "\na zero coordinate kills every degree: P_5({with_zero}) = {}",
        eval_p(5, &with_zero)?
    );

    let balanced = PointTuple::new(vec![rat(7, 2), rat(-3, 2), rat(-2, 1)]);
    println!(
        "zero coordinate sum, odd degree gap:  P_4({balanced}) = {}",
        eval_p(4, &balanced)?
    );

    println!("\nthe subset enumeration and the coordinate-peeling recursion agree:");
    for n in 1..=8 {
        let a = eval_p(n, &x)?;
        let b = eval_p_recursive(n, &x)?;
        assert_eq!(a, b);
        println!("  n={n}: both give {a}");
    }
    Ok(())
}
