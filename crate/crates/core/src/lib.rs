//! Exact-rational computer algebra for a family of symmetric polynomials
//! built from signed subset sums, and for the polynomial part of the
//! restricted partition counting function.
//!
//! Everything is computed over arbitrary-precision rationals in canonical
//! lowest terms; there is no floating point and no tolerance anywhere.
//!
//! The main objects:
//!
//! * `P_n(x_1..x_m)` — the alternating sum of `(subset sum)^n` over all
//!   nonempty coordinate subsets ([`ppoly`]), with two independent
//!   evaluators that cross-check each other.
//! * `T_r` — the factor left after normalizing `P_{r+m}` by
//!   `(-1)^(m+1) (r+m)!/r! * x_1...x_m` ([`tpoly`]); weight-`r` symmetric,
//!   recovered exactly in the power-sum basis by seeded interpolation.
//! * `f_r` and `W_1` — the Bernoulli-umbral coefficients and the degree
//!   `m-1` polynomial part of the partition counting function `W(s, d)`
//!   ([`partfunc`]), with an exact dynamic-programming counter to compare
//!   against.
//! * `C_{n,r}` — the positive integer coefficients collapsing the universal
//!   ratio relation between the normalized values ([`cnr`]).
//! * verification suites ([`verify`]) that check every identity, bound and
//!   conjectured relation at seeded random rational points and return
//!   structured reports ([`report`]).
//!
//! The `sympart` binary exposes all of it on the command line ([`cli`]);
//! the crate's `examples/` directory walks through each capability.

pub mod arith;
pub mod cli;
pub mod cnr;
pub mod error;
pub mod partfunc;
pub mod powersum;
pub mod ppoly;
pub mod report;
pub mod tpoly;
pub mod verify;

pub use arith::{bernoulli, binomial, factorial, Rational};
pub use cnr::{cnr_closed, cnr_recursive, verify_eq28_equivalence, verify_relation26, CnrTable, RatioFamily};
pub use error::{Error, Result};
pub use partfunc::{check_parity, count_partitions_brute, eval_f, eval_w1, f_poly};
pub use powersum::{partitions_of, power_sums, PartitionMonomial, PowerSumPoly, PowerSumVector, VariableFamily};
pub use ppoly::{eval_p, eval_p_recursive, PointTuple};
pub use report::{Failure, ReportBuilder, Status, VerificationReport};
pub use tpoly::{eval_t_direct, eval_t_via_p, interpolate_power_sum_poly, t_poly};
pub use verify::{
    ratio_lower_bound, ratio_upper_bound, verify_bounds, verify_conjecture1, verify_conjecture2,
    verify_lemmas, verify_power_sum_relations,
};
