//! Recover the power-sum expansions of the normalized factors T_r and the
//! umbral coefficients f_r by exact interpolation, and print both tables.
//!
//! Run with: cargo run --example power_sum_tables

use sympart::{f_poly, t_poly, VariableFamily};

fn main() -> sympart::Result<()> {
    let seed = 42;

    println!("normalized factors of the subset-sum polynomials:");
    for r in 0..=7 {
        let poly = t_poly(r, seed)?;
        println!("  T_{r} = {}", poly.format(VariableFamily::E));
    }

    println!("\numbral coefficients of the partition-count polynomial part:");
    for r in 0..=7 {
        let poly = f_poly(r, seed)?;
        println!("  f_{r} = {}", poly.format(VariableFamily::Sigma));
    }

    println!("\nflip the sign of every index >= 2 in f_r and T_r appears:");
    for r in 0..=7 {
        let flipped = f_poly(r, seed)?.flip_even_signs();
        let t = t_poly(r, seed)?;
        println!(
            "  r={r}: T_r == flip(f_r) is {}",
            if t == flipped { "true" } else { "FALSE" }
        );
    }
    Ok(())
}
