//! The integer coefficients C_{n,r} that collapse the universal ratio
//! relation: table, closed forms, and the equivalence of the two
//! elimination routes.
//!
//! Run with: cargo run --example ratio_coefficients

use sympart::cnr::CnrTable;
use sympart::{cnr_closed, verify_eq28_equivalence};

fn main() -> sympart::Result<()> {
    let table = CnrTable::build(8);
    println!("C_{{n,r}} (value / binomial-product terms):");
    print!("{:>4}", "n\\r");
    for r in 1..=8 {
        print!("{r:>16}");
    }
    println!();
    for n in 1..=8u32 {
        print!("{n:>4}");
        for row in table.rows().iter().filter(|row| row.n == n) {
            print!("{:>16}", format!("{}/{}", row.value, row.terms));
        }
        println!();
    }

    println!("\nclosed forms (printed for r <= 4) against the elimination:");
    for n in 1..=8u32 {
        for r in 1..=n.min(4) {
            let closed = cnr_closed(n, r)?;
            let rec = sympart::cnr_recursive(n, r)?;
            assert_eq!(closed, rec);
        }
    }
    println!("  agree for every n <= 8, r <= 4");

    println!("\nsigned rows of the collapsed relation (these are the integer");
    println!("coefficients of the printed ratio identities):");
    for n in 2..=4u32 {
        let signed: Vec<String> = (1..=n)
            .map(|r| {
                let c = sympart::cnr_recursive(n, r).unwrap();
                if r % 2 == 1 { c.to_string() } else { format!("-{c}") }
            })
            .collect();
        println!("  n={n}: ({})", signed.join(", "));
    }

    println!("\nindependent substitution route:");
    for n in 1..=8 {
        let report = verify_eq28_equivalence(n)?;
        println!("  {}", report.render_text());
    }
    Ok(())
}
