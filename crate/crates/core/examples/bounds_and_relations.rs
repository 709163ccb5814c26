//! Double bounds on the normalized ratios T_r/T_1^r, and the printed
//! power-sum reduction relations for small tuples — including the one that
//! fails.
//!
//! Run with: cargo run --example bounds_and_relations

use sympart::{
    ratio_lower_bound, ratio_upper_bound, verify_bounds, verify_power_sum_relations,
};

fn main() -> sympart::Result<()> {
    let seed = 42;

    println!("bounds on T_r/T_1^r (m = 3):");
    for r in 2..=7 {
        println!(
            "  r={r}: {} <= ratio <= {}",
            ratio_lower_bound(r, 3)?,
            ratio_upper_bound(r, 3)?
        );
    }
    for m in 1..=6usize {
        let report = verify_bounds(7, m, seed, 100)?;
        println!("{}", report.render_text());
    }

    println!("\nat m = 1 both bounds collapse to 2^r/(r+1):");
    for r in 2..=7 {
        assert_eq!(ratio_lower_bound(r, 1)?, ratio_upper_bound(r, 1)?);
        println!("  r={r}: {}", ratio_lower_bound(r, 1)?);
    }

    println!("\npower-sum reduction relations at m = 1, 2, 3:");
    for m in 1..=3usize {
        let report = verify_power_sum_relations(m, seed, 50)?;
        // The three-variable E6 relation is transcribed as printed and
        // fails at every point: its E2^3 coefficient is misprinted (3 is
        // correct, by Newton's identities). The failing report below, with
        // witnesses, is exactly what this crate is for.
        let text = report.render_text();
        let mut lines = text.lines();
        println!("{}", lines.next().unwrap_or_default());
        if let Some(first_witness) = lines.next() {
            println!("{first_witness}");
            println!("  ... ({} witnesses total)", report.failures.len());
        }
    }
    Ok(())
}
