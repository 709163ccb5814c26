//! Command-line front end: every kernel operation behind one verb, with
//! human-readable or JSON output, a fixed default seed, and CI-friendly
//! exit codes.
//!
//! Exit codes: `0` success (all emitted reports pass), `1` at least one
//! emitted report failed (the reports are still printed), `2` usage or
//! domain error (one-line diagnostic on stderr).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{bernoulli, rat, rat_int, Rational};
use crate::cnr::{cnr_closed, cnr_with_terms, verify_eq28_equivalence, CnrRow};
use crate::error::Result;
use crate::partfunc::{check_parity, count_partitions_brute, eval_f, eval_w1, f_poly};
use crate::powersum::VariableFamily;
use crate::ppoly::{eval_p, eval_p_recursive, PointTuple};
use crate::report::VerificationReport;
use crate::tpoly::{eval_t_direct, eval_t_via_p, t_poly};
use crate::verify::{
    verify_bounds, verify_conjecture1, verify_conjecture2, verify_lemmas,
    verify_power_sum_relations,
};

#[derive(Parser, Debug)]
#[command(
    name = "sympart",
    version,
    about = "Exact evaluation and verification of subset-sum symmetric polynomials \
             and partition-count polynomial parts"
)]
pub struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every randomized sweep
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// k-th Bernoulli number (B_1 = -1/2 convention)
    Bernoulli {
        #[arg(long)]
        k: usize,
    },
    /// Evaluate P_n at a point by subset enumeration
    EvalP {
        #[arg(long)]
        n: u32,
        /// Comma-separated rational coordinates, e.g. 1,-2/3,5
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate P_n by the coordinate-peeling recursion
    EvalPRec {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Evaluate the normalized factor T_r at a point
    EvalT {
        #[arg(long)]
        r: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Composition-sum evaluator (the default)
        #[arg(long, conflicts_with = "via_p")]
        direct: bool,
        /// Evaluate through P_{r+m} instead
        #[arg(long = "via-p")]
        via_p: bool,
    },
    /// Power-sum expansion of T_r
    TPoly {
        #[arg(long)]
        r: u32,
    },
    /// Evaluate the umbral coefficient f_r at a generator tuple
    FEval {
        #[arg(long)]
        r: u32,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Power-sum expansion of f_r (sigma variables)
    FPoly {
        #[arg(long)]
        r: u32,
    },
    /// Polynomial part W_1(s, d) of the partition counting function
    W1 {
        /// Any rational, e.g. 7 or -5/2
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Exact partition count W(s, d) by dynamic programming
    WCount {
        #[arg(long)]
        s: u64,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Coefficient C_{n,r} of the collapsed ratio identity
    Cnr {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Use the printed closed form (r <= 4) instead of the elimination
        #[arg(long)]
        closed: bool,
    },
    /// Run a verification suite
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifySuite {
    /// T_r equals f_r with signs flipped at indices >= 2, for 2 <= r <= max-r
    Conjecture1 {
        #[arg(long = "max-r", default_value_t = 7)]
        max_r: u32,
    },
    /// Universal ratio relation over the T family for 1 <= n <= m/2
    Conjecture2 {
        #[arg(long, default_value_t = 6)]
        m: usize,
        #[arg(long, default_value_t = 50)]
        trials: u32,
    },
    /// Double bounds on T_r/T_1^r for 2 <= r <= max-r
    Bounds {
        #[arg(long = "max-r", default_value_t = 7)]
        max_r: u32,
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 200)]
        trials: u32,
    },
    /// Printed reduction relations for power sums at m = 1, 2, 3
    Relations {
        /// Tuple size; omitted runs all of 1, 2, 3
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 200)]
        trials: u32,
    },
    /// Vanishing, sign and recursion battery for P_n
    Lemmas {
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: usize,
        #[arg(long, default_value_t = 200)]
        trials: u32,
    },
    /// Reflection property of W_1 around -sigma_1/2
    Parity {
        /// Generator tuple; omitted sweeps seeded random tuples
        #[arg(long, allow_hyphen_values = true)]
        d: Option<String>,
        /// Comma-separated probe values for s; defaults to 0, 1/2, ..., 10
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Number of random tuples when --d is omitted
        #[arg(long, default_value_t = 20)]
        tuples: u32,
    },
    /// Collapsed ratio coefficients match the direct elimination
    Eq28 {
        /// Single n; omitted sweeps n = 1..=8
        #[arg(long)]
        n: Option<u32>,
    },
}

enum Output {
    /// A single value; `(human, json)` renderings.
    Value(String, String),
    Reports(Vec<VerificationReport>),
}

fn scalar(value: impl ToString) -> Output {
    let text = value.to_string();
    Output::Value(text.clone(), format!("{{\"value\":\"{text}\"}}"))
}

fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|e| crate::error::Error::domain(format!("bad rational {text:?}: {e}")))
}

fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    text.split(',').map(parse_rational).collect()
}

fn default_parity_probes() -> Vec<Rational> {
    (0..=20).map(|k| rat(k, 2)).collect()
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Bernoulli { k } => Ok(scalar(bernoulli(*k))),
        Command::EvalP { n, x } => {
            let x = PointTuple::parse(x)?;
            Ok(scalar(eval_p(*n, &x)?))
        }
        Command::EvalPRec { n, x } => {
            let x = PointTuple::parse(x)?;
            Ok(scalar(eval_p_recursive(*n, &x)?))
        }
        Command::EvalT { r, x, direct: _, via_p } => {
            let x = PointTuple::parse(x)?;
            let value = if *via_p {
                eval_t_via_p(*r, &x)?
            } else {
                eval_t_direct(*r, &x)?
            };
            Ok(scalar(value))
        }
        Command::TPoly { r } => {
            let poly = t_poly(*r, cli.seed)?;
            Ok(Output::Value(
                poly.format(VariableFamily::E),
                poly.to_json(VariableFamily::E),
            ))
        }
        Command::FEval { r, d } => {
            let d = PointTuple::parse(d)?;
            Ok(scalar(eval_f(*r, &d)?))
        }
        Command::FPoly { r } => {
            let poly = f_poly(*r, cli.seed)?;
            Ok(Output::Value(
                poly.format(VariableFamily::Sigma),
                poly.to_json(VariableFamily::Sigma),
            ))
        }
        Command::W1 { s, d } => {
            let s = parse_rational(s)?;
            let d = PointTuple::parse(d)?;
            Ok(scalar(eval_w1(&s, &d)?))
        }
        Command::WCount { s, d } => {
            let d = PointTuple::parse(d)?;
            Ok(scalar(count_partitions_brute(*s, &d)?))
        }
        Command::Cnr { n, r, closed } => {
            let (recursive_value, terms) = cnr_with_terms(*n, *r)?;
            let value = if *closed { cnr_closed(*n, *r)? } else { recursive_value };
            let row = CnrRow { n: *n, r: *r, value, terms };
            Ok(Output::Value(row.value.to_string(), row.to_json()))
        }
        Command::Verify { suite } => run_suite(suite, cli.seed).map(Output::Reports),
    }
}

fn run_suite(suite: &VerifySuite, seed: u64) -> Result<Vec<VerificationReport>> {
    match suite {
        VerifySuite::Conjecture1 { max_r } => Ok(vec![verify_conjecture1(*max_r, seed)?]),
        VerifySuite::Conjecture2 { m, trials } => Ok(vec![verify_conjecture2(*m, seed, *trials)?]),
        VerifySuite::Bounds { max_r, m, trials } => {
            Ok(vec![verify_bounds(*max_r, *m, seed, *trials)?])
        }
        VerifySuite::Relations { m, trials } => match m {
            Some(m) => Ok(vec![verify_power_sum_relations(*m, seed, *trials)?]),
            None => (1..=3)
                .map(|m| verify_power_sum_relations(m, seed, *trials))
                .collect(),
        },
        VerifySuite::Lemmas { max_n, max_m, trials } => {
            Ok(vec![verify_lemmas(*max_n, *max_m, seed, *trials)?])
        }
        VerifySuite::Parity { d, s, tuples } => {
            let probes = match s {
                Some(text) => parse_rational_list(text)?,
                None => default_parity_probes(),
            };
            match d {
                Some(text) => {
                    let d = PointTuple::parse(text)?;
                    Ok(vec![check_parity(&d, &probes)?])
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    (0..*tuples)
                        .map(|_| {
                            let m = rng.random_range(1..=5);
                            let d = PointTuple::new(
                                (0..m).map(|_| rat_int(rng.random_range(1..=9))).collect(),
                            );
                            check_parity(&d, &probes)
                        })
                        .collect()
                }
            }
        }
        VerifySuite::Eq28 { n } => match n {
            Some(n) => Ok(vec![verify_eq28_equivalence(*n)?]),
            None => (1..=8).map(verify_eq28_equivalence).collect(),
        },
    }
}

fn render(output: &Output, json: bool) -> (String, i32) {
    match output {
        Output::Value(human, as_json) => {
            let text = if json { as_json.clone() } else { human.clone() };
            (text, 0)
        }
        Output::Reports(reports) => {
            let all_pass = reports.iter().all(VerificationReport::passed);
            let code = if all_pass { 0 } else { 1 };
            let text = if json {
                if reports.len() == 1 {
                    reports[0].to_json()
                } else {
                    let rows: Vec<String> =
                        reports.iter().map(VerificationReport::to_json).collect();
                    format!("[{}]", rows.join(","))
                }
            } else {
                reports
                    .iter()
                    .map(VerificationReport::render_text)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            (text, code)
        }
    }
}

/// Run the CLI against explicit arguments; returns (exit code, stdout, stderr).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match execute(&cli) {
            Ok(output) => {
                let (text, code) = render(&output, cli.json);
                (code, format!("{text}\n"), String::new())
            }
            Err(e) => (2, String::new(), format!("error: {e}\n")),
        },
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                (0, e.render().to_string(), String::new())
            } else {
                // Keep the diagnostic to one line for scripting.
                let line = e
                    .render()
                    .to_string()
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments")
                    .to_string();
                (2, String::new(), format!("{line}\n"))
            }
        }
    }
}

/// Entry point used by the binary.
pub fn main_entry() -> i32 {
    let (code, stdout, stderr) = run(std::env::args_os());
    if !stdout.is_empty() {
        print!("{stdout}");
    }
    if !stderr.is_empty() {
        eprint!("{stderr}");
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let mut full = vec!["sympart"];
        full.extend_from_slice(args);
        run(full)
    }

    #[test]
    fn eval_p_prints_the_value() {
        let (code, out, _) = invoke(&["eval-p", "--n", "3", "--x", "1,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "6\n");
    }

    #[test]
    fn t_poly_json_matches_the_documented_shape() {
        let (code, out, _) = invoke(&["t-poly", "--r", "2", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"E1^2\":\"1/4\",\"E2\":\"1/12\"}\n");
    }

    #[test]
    fn f_poly_uses_sigma_names() {
        let (code, out, _) = invoke(&["f-poly", "--r", "2", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"s1^2\":\"1/4\",\"s2\":\"-1/12\"}\n");
    }

    #[test]
    fn scalar_json_wrapping() {
        let (code, out, _) = invoke(&["bernoulli", "--k", "12", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"value\":\"-691/2730\"}\n");
    }

    #[test]
    fn w1_and_w_count_agree_on_all_ones() {
        let (_, w1, _) = invoke(&["w1", "--s", "4", "--d", "1,1"]);
        let (_, count, _) = invoke(&["w-count", "--s", "4", "--d", "1,1"]);
        assert_eq!(w1, "5\n");
        assert_eq!(count, "5\n");
    }

    #[test]
    fn cnr_routes_agree() {
        let (code, recursive, _) = invoke(&["cnr", "--n", "4", "--r", "4"]);
        assert_eq!(code, 0);
        assert_eq!(recursive, "272\n");
        let (_, closed, _) = invoke(&["cnr", "--n", "4", "--r", "4", "--closed"]);
        assert_eq!(closed, "272\n");
        let (_, json, _) = invoke(&["cnr", "--n", "4", "--r", "2", "--json"]);
        assert_eq!(json, "{\"n\":4,\"r\":2,\"value\":\"70\",\"terms\":2}\n");
    }

    #[test]
    fn verify_conjecture1_passes_and_exits_zero() {
        let (code, out, _) = invoke(&["verify", "conjecture1", "--max-r", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("conjecture1: pass"), "{out}");
    }

    #[test]
    fn verify_relations_m3_surfaces_the_finding() {
        let (code, out, _) = invoke(&[
            "verify", "relations", "--m", "3", "--trials", "5", "--json",
        ]);
        assert_eq!(code, 1, "the misprinted E6 reduction must fail");
        assert!(out.contains("\"status\":\"fail\""));
        assert!(out.contains("\"relation\":\"E6\""));
    }

    #[test]
    fn domain_errors_exit_two() {
        let (code, _, err) = invoke(&["w1", "--s", "1", "--d", "0,2"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: "), "{err}");
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn malformed_rationals_exit_two() {
        let (code, _, err) = invoke(&["eval-p", "--n", "3", "--x", "1,oops"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn unknown_flags_are_rejected() {
        let (code, _, err) = invoke(&["eval-p", "--n", "3", "--x", "1", "--bogus"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn identical_invocations_are_byte_identical() {
        let a = invoke(&["verify", "lemmas", "--trials", "10", "--json", "--seed", "7"]);
        let b = invoke(&["verify", "lemmas", "--trials", "10", "--json", "--seed", "7"]);
        assert_eq!(a, b);
    }

    #[test]
    fn eval_t_route_flags() {
        let (_, direct, _) = invoke(&["eval-t", "--r", "2", "--x", "1,1"]);
        let (_, via_p, _) = invoke(&["eval-t", "--r", "2", "--x", "1,1", "--via-p"]);
        assert_eq!(direct, "7/6\n");
        assert_eq!(via_p, "7/6\n");
        let (code, _, _) = invoke(&["eval-t", "--r", "2", "--x", "1,1", "--direct", "--via-p"]);
        assert_eq!(code, 2);
    }
}
