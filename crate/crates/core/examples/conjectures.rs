//! Run the two conjectured-identity suites and print their reports.
//!
//! Run with: cargo run --example conjectures

use sympart::{check_parity, verify_conjecture1, verify_conjecture2, PointTuple};

fn main() -> sympart::Result<()> {
    let seed = 42;

    // T_r(E1, E2, ..) versus f_r(E1, -E2, ..): exact polynomial equality,
    // interpolated fresh on both sides.
    let report = verify_conjecture1(9, seed)?;
    println!("{}", report.render_text());

    // The universal ratio relation over the T family at random points.
    for m in [4usize, 6, 8] {
        let report = verify_conjecture2(m, seed, 30)?;
        println!("{}", report.render_text());
    }

    // The reflection property feeding the ratio relation on the f side.
    let d = PointTuple::from_integers(&[2, 3, 5]);
    let probes: Vec<_> = (0..=10).map(|k| sympart::arith::rat(k, 2)).collect();
    let report = check_parity(&d, &probes)?;
    println!("{}", report.render_text());
    Ok(())
}
