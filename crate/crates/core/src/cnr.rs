//! Integer coefficients `C_{n,r}` of the collapsed ratio identity, their
//! closed forms for `r <= 4`, and pointwise verification of the universal
//! ratio relation they come from.
//!
//! Writing `F_j = g_j / g_1^j` for either family of normalized values
//! (`g = T` or `g = f`), the universal relation states, for `1 <= n <= m/2`,
//!
//! ```text
//! F_{2n-1} = sum_{k=1}^{2n-1} (-1)^(k+1) C(2n-1, k) F_{2n-1-k}
//! ```
//!
//! Eliminating the odd-index ratios on the right by applying the same
//! relation recursively collapses it to even indices only:
//!
//! ```text
//! F_{2n-1} = sum_{r=1}^{n} (-1)^(r+1) C_{n,r} F_{2(n-r)}
//! ```
//!
//! with positive integer coefficients `C_{n,r}` built from signed products
//! of binomial coefficients; exactly `2^(r-1)` such products contribute to
//! `C_{n,r}`. [`cnr_recursive`] runs the elimination; [`cnr_closed`]
//! transcribes the printed closed forms for `r <= 4`;
//! [`verify_eq28_equivalence`] replays the elimination by an independent
//! index-substitution route and compares, and [`verify_relation26`] checks
//! the uncollapsed relation at exact random points.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::arith::{binomial, binomial_rat, rat_int, Rational};
use crate::error::{Error, Result};
use crate::partfunc::eval_f;
use crate::ppoly::PointTuple;
use crate::report::{inputs, ReportBuilder, VerificationReport};
use crate::tpoly::eval_t_direct;

/// Which normalized family the ratio relation is evaluated over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RatioFamily {
    /// The subset-sum factors `T_r`.
    T,
    /// The Bernoulli-umbral coefficients `f_r`.
    F,
}

impl RatioFamily {
    pub fn label(self) -> &'static str {
        match self {
            RatioFamily::T => "T",
            RatioFamily::F => "f",
        }
    }

    fn eval(self, r: u32, x: &PointTuple) -> Result<Rational> {
        match self {
            RatioFamily::T => eval_t_direct(r, x),
            RatioFamily::F => eval_f(r, x),
        }
    }
}

/// Signed contributions to the even-index coefficients, collected during
/// the elimination walk. `slot[r - 1]` holds the coefficient multiplying
/// `F_{2(n-r)}` and the number of binomial products that built it.
fn elimination_walk(n: u32) -> Vec<(BigInt, u64)> {
    let mut out = vec![(BigInt::zero(), 0u64); n as usize];
    walk(n, 0, BigInt::from(1), &mut out);
    out
}

fn walk(level: u32, consumed: u32, acc: BigInt, out: &mut Vec<(BigInt, u64)>) {
    let top = 2 * level as u64 - 1;
    // Odd lower index: lands on an even-index ratio, terminal.
    for k in 1..=level {
        let slot = &mut out[(consumed + k - 1) as usize];
        slot.0 += &acc * BigInt::from(binomial(top, 2 * k as i64 - 1));
        slot.1 += 1;
    }
    // Even lower index: lands on an odd-index ratio, eliminated recursively.
    for k in 1..level {
        let next = -&acc * BigInt::from(binomial(top, 2 * k as i64));
        walk(level - k, consumed + k, next, out);
    }
}

/// `C_{n,r}` by recursive elimination of the odd-index ratios.
pub fn cnr_recursive(n: u32, r: u32) -> Result<BigInt> {
    Ok(cnr_with_terms(n, r)?.0)
}

/// `C_{n,r}` together with the number of binomial products contributing.
pub fn cnr_with_terms(n: u32, r: u32) -> Result<(BigInt, u64)> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::domain(format!(
            "C_{{n,r}} needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let slots = elimination_walk(n);
    let (signed, terms) = slots[(r - 1) as usize].clone();
    // The collapsed form reads (-1)^(r+1) C_{n,r}; undo the sign.
    let value = if r % 2 == 1 { signed } else { -signed };
    Ok((value, terms))
}

/// The printed closed forms of `C_{n,r}` for `r = 1..4`, transcribed term
/// by term. Out-of-range binomials vanish, so the formulas may be applied
/// verbatim.
pub fn cnr_closed(n: u32, r: u32) -> Result<BigInt> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::domain(format!(
            "C_{{n,r}} needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let b = |top: u32, low: u32| BigInt::from(binomial(top as u64, low as i64));
    let v = 2 * n - 1;
    Ok(match r {
        1 => b(v, 1),
        2 => b(v, 2) * b(v - 2, 1) - b(v, 3),
        3 => {
            b(v, 2) * b(v - 2, 2) * b(v - 4, 1) - b(v, 2) * b(v - 2, 3) - b(v, 4) * b(v - 4, 1)
                + b(v, 5)
        }
        4 => {
            b(v, 2) * b(v - 2, 2) * b(v - 4, 2) * b(v - 6, 1)
                - b(v, 2) * b(v - 2, 4) * b(v - 6, 1)
                - b(v, 4) * b(v - 4, 2) * b(v - 6, 1)
                - b(v, 2) * b(v - 2, 2) * b(v - 4, 3)
                + b(v, 2) * b(v - 2, 5)
                + b(v, 4) * b(v - 4, 3)
                + b(v, 6) * b(v - 6, 1)
                - b(v, 7)
        }
        _ => {
            return Err(Error::domain(format!(
                "closed form only printed for r <= 4, got r={r}"
            )))
        }
    })
}

/// One `(n, r)` entry of the coefficient table.
#[derive(Clone, Debug)]
pub struct CnrRow {
    pub n: u32,
    pub r: u32,
    pub value: BigInt,
    pub terms: u64,
}

impl CnrRow {
    /// JSON row `{"n":…,"r":…,"value":"…","terms":…}`.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"n\":{},\"r\":{},\"value\":\"{}\",\"terms\":{}}}",
            self.n, self.r, self.value, self.terms
        )
    }
}

/// The full table of coefficients for `1 <= r <= n <= max_n`.
#[derive(Clone, Debug, Default)]
pub struct CnrTable {
    rows: Vec<CnrRow>,
}

impl CnrTable {
    pub fn build(max_n: u32) -> Self {
        let mut rows = Vec::new();
        for n in 1..=max_n {
            let slots = elimination_walk(n);
            for r in 1..=n {
                let (signed, terms) = slots[(r - 1) as usize].clone();
                let value = if r % 2 == 1 { signed } else { -signed };
                debug_assert!(value > BigInt::zero(), "C_{{{n},{r}}} must be positive");
                debug_assert_eq!(terms, 1 << (r - 1), "term count at ({n},{r})");
                rows.push(CnrRow { n, r, value, terms });
            }
        }
        CnrTable { rows }
    }

    pub fn rows(&self) -> &[CnrRow] {
        &self.rows
    }
}

/// Check the universal ratio relation at seeded random all-positive points.
///
/// For each trial point of `m` positive integer coordinates the relation
/// `F_{2n-1} = sum (-1)^(k+1) C(2n-1,k) F_{2n-1-k}` is checked exactly over
/// the chosen family. The stated validity range is `1 <= n <= m/2`; calls
/// outside it still run but the report is flagged.
pub fn verify_relation26(
    family: RatioFamily,
    n: u32,
    m: usize,
    seed: u64,
    trials: u32,
) -> Result<VerificationReport> {
    if n == 0 || m == 0 || trials == 0 {
        return Err(Error::domain("relation26 needs n >= 1, m >= 1, trials >= 1"));
    }
    let mut builder = ReportBuilder::new(format!("relation26.{}", family.label()))
        .param("family", family.label())
        .param("n", n)
        .param("m", m)
        .param("seed", seed)
        .param("trials", trials);
    if 2 * n as usize > m {
        builder.set_param("outside_stated_range", "true");
    }

    let top = 2 * n - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = PointTuple::new(
            (0..m).map(|_| rat_int(rng.random_range(1..=50))).collect(),
        );
        let g: Vec<Rational> = (0..=top).map(|r| family.eval(r, &x)).collect::<Result<_>>()?;
        let g1 = &g[1];
        // Positive coordinates keep g_1 > 0, so the ratios are defined.
        let lhs = &g[top as usize] / g1.pow(top as i32);
        let mut rhs = Rational::zero();
        for k in 1..=top {
            let j = (top - k) as usize;
            let term = binomial_rat(top as u64, k as i64) * &g[j] / g1.pow(j as i32);
            if k % 2 == 1 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        builder.check(
            lhs == rhs,
            inputs([("x", x.to_string()), ("n", n.to_string())]),
            rhs,
            lhs,
        );
    }
    Ok(builder.finish())
}

/// Replay the odd-index elimination by direct substitution on a coefficient
/// map and compare with the collapsed form built from [`cnr_recursive`].
///
/// Route A substitutes, inside a map from ratio index to integer
/// coefficient, every odd-index entry by the universal relation until only
/// even indices remain. Route B evaluates the collapsed form. The two must
/// agree coefficient by coefficient, and the number of binomial products
/// behind each `C_{n,r}` must be `2^(r-1)`.
pub fn verify_eq28_equivalence(n: u32) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::domain("eq28 needs n >= 1"));
    }
    let mut builder = ReportBuilder::new("eq28").param("n", n);

    // Route A: index-substitution fixpoint, starting from the relation at n.
    let mut combo: BTreeMap<u32, BigInt> = BTreeMap::new();
    let top = 2 * n - 1;
    for k in 1..=top {
        let coeff = BigInt::from(binomial(top as u64, k as i64));
        let signed = if k % 2 == 1 { coeff } else { -coeff };
        add_entry(&mut combo, top - k, signed);
    }
    while let Some((&j, _)) = combo.iter().rev().find(|(&j, _)| j % 2 == 1) {
        let c = combo.remove(&j).expect("entry just found");
        for k in 1..=j {
            let coeff = BigInt::from(binomial(j as u64, k as i64));
            let signed = if k % 2 == 1 { &c * coeff } else { -&c * coeff };
            add_entry(&mut combo, j - k, signed);
        }
    }

    // Route B: the collapsed form with C_{n,r} from the elimination walk.
    for r in 1..=n {
        let (value, terms) = cnr_with_terms(n, r)?;
        let expected = if r % 2 == 1 { value.clone() } else { -value.clone() };
        let actual = combo
            .remove(&(2 * (n - r)))
            .unwrap_or_else(BigInt::zero);
        builder.check(
            expected == actual,
            inputs([("n", n.to_string()), ("r", r.to_string())]),
            &expected,
            &actual,
        );

        let want_terms = 1u64 << (r - 1);
        builder.check(
            terms == want_terms,
            inputs([
                ("n", n.to_string()),
                ("r", r.to_string()),
                ("check", "term_count".to_string()),
            ]),
            want_terms,
            terms,
        );
    }
    // Nothing else may survive the elimination.
    builder.check(
        combo.is_empty(),
        inputs([("n", n.to_string()), ("check", "residual_terms".to_string())]),
        "no residual ratio indices",
        format!("{:?}", combo.keys().collect::<Vec<_>>()),
    );
    Ok(builder.finish())
}

fn add_entry(map: &mut BTreeMap<u32, BigInt>, key: u32, delta: BigInt) {
    let entry = map.entry(key).or_insert_with(BigInt::zero);
    *entry += delta;
    if entry.is_zero() {
        map.remove(&key);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn first_column_is_odd_numbers() {
        for n in 1..=10u32 {
            assert_eq!(cnr_recursive(n, 1).unwrap(), BigInt::from(2 * n - 1));
        }
        assert_eq!(cnr_recursive(4, 1).unwrap(), BigInt::from(7));
    }

    #[test]
    fn diagonal_values_from_the_ratio_identities() {
        assert_eq!(cnr_recursive(2, 2).unwrap(), BigInt::from(2));
        assert_eq!(cnr_recursive(3, 3).unwrap(), BigInt::from(16));
        assert_eq!(cnr_recursive(4, 4).unwrap(), BigInt::from(272));
    }

    #[test]
    fn closed_forms_match_hand_substitution() {
        assert_eq!(cnr_closed(3, 1).unwrap(), BigInt::from(5));
        assert_eq!(cnr_closed(3, 2).unwrap(), BigInt::from(20));
        assert_eq!(cnr_closed(4, 2).unwrap(), BigInt::from(70));
    }

    #[test]
    fn closed_and_recursive_agree() {
        for n in 1..=12u32 {
            for r in 1..=n.min(4) {
                assert_eq!(
                    cnr_recursive(n, r).unwrap(),
                    cnr_closed(n, r).unwrap(),
                    "n={n}, r={r}"
                );
            }
        }
    }

    #[test]
    fn values_are_positive_integers() {
        for n in 1..=12u32 {
            for r in 1..=n {
                assert!(cnr_recursive(n, r).unwrap() > BigInt::zero(), "n={n}, r={r}");
            }
        }
    }

    #[test]
    fn term_counts_are_powers_of_two() {
        for n in 8..=8u32 {
            for r in 1..=8 {
                let (_, terms) = cnr_with_terms(n, r).unwrap();
                assert_eq!(terms, 1u64 << (r - 1), "n={n}, r={r}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(cnr_recursive(3, 4).is_err());
        assert!(cnr_recursive(3, 0).is_err());
        assert!(cnr_closed(6, 5).is_err());
    }

    #[test]
    fn table_rows_and_json() {
        let table = CnrTable::build(4);
        assert_eq!(table.rows().len(), 1 + 2 + 3 + 4);
        let last = table.rows().last().unwrap();
        assert_eq!((last.n, last.r), (4, 4));
        assert_eq!(last.value, BigInt::from(272));
        assert_eq!(last.to_json(), "{\"n\":4,\"r\":4,\"value\":\"272\",\"terms\":8}");
    }

    #[test]
    fn relation_holds_identically_at_n_equals_one() {
        let report = verify_relation26(RatioFamily::F, 1, 2, 42, 5).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let report = verify_relation26(RatioFamily::T, 1, 3, 42, 5).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn relation_for_both_families_inside_the_range() {
        let report = verify_relation26(RatioFamily::F, 2, 4, 42, 8).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let report = verify_relation26(RatioFamily::T, 2, 4, 42, 8).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn out_of_range_calls_are_flagged() {
        let report = verify_relation26(RatioFamily::F, 2, 2, 42, 3).unwrap();
        assert_eq!(report.params.get("outside_stated_range").map(String::as_str), Some("true"));
    }

    #[test]
    fn eq28_reproduces_the_printed_coefficient_rows() {
        // (3, -2), (5, -20, 16), (7, -70, 336, -272) as signed sequences.
        let signed = |n: u32| -> Vec<BigInt> {
            (1..=n)
                .map(|r| {
                    let c = cnr_recursive(n, r).unwrap();
                    if r % 2 == 1 { c } else { -c }
                })
                .collect()
        };
        assert_eq!(signed(2), vec![BigInt::from(3), BigInt::from(-2)]);
        assert_eq!(
            signed(3),
            vec![BigInt::from(5), BigInt::from(-20), BigInt::from(16)]
        );
        assert_eq!(
            signed(4),
            vec![
                BigInt::from(7),
                BigInt::from(-70),
                BigInt::from(336),
                BigInt::from(-272)
            ]
        );
    }

    #[test]
    fn eq28_equivalence_for_small_n() {
        for n in 1..=8u32 {
            let report = verify_eq28_equivalence(n).unwrap();
            assert!(report.passed(), "n={n}: {}", report.render_text());
        }
    }

    #[test]
    fn trivial_row_n_equals_one() {
        assert_eq!(cnr_recursive(1, 1).unwrap(), BigInt::one());
        let (_, terms) = cnr_with_terms(1, 1).unwrap();
        assert_eq!(terms, 1);
    }
}
