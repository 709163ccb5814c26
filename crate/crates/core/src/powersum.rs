//! Polynomials in the power sums `E_1, E_2, ...` indexed by integer
//! partitions.
//!
//! A monomial `E_1^{a_1} E_2^{a_2} ...` is encoded by the partition with
//! `a_k` parts of size `k` ([`PartitionMonomial`]); its weight is
//! `sum k * a_k`, which is the degree of the monomial as a symmetric
//! polynomial in the underlying variables. A [`PowerSumPoly`] is a finite
//! map from monomials to nonzero rational coefficients; equality is
//! structural because zero coefficients are deleted eagerly and monomials
//! are kept in a canonical form.
//!
//! The same representation serves two variable families: power sums `E_k`
//! of the x-tuple and power sums `sigma_k` of the generator tuple. The
//! family is purely a rendering label ([`VariableFamily`]); the sign-flip
//! substitution `E_k -> -E_k` for `k >= 2`, which relates the two
//! coefficient systems, is [`PowerSumPoly::flip_even_signs`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ppoly::PointTuple;

/// Rendering family for monomials: `E`-variables or `sigma`-variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariableFamily {
    /// Power sums of the x-tuple, printed `E1, E2, ...`.
    E,
    /// Power sums of the generator tuple, printed `s1, s2, ...`.
    Sigma,
}

impl VariableFamily {
    fn prefix(self) -> &'static str {
        match self {
            VariableFamily::E => "E",
            VariableFamily::Sigma => "s",
        }
    }
}

/// The monomial `prod_k E_k^{a_k}`, stored as `index -> multiplicity` with
/// all multiplicities >= 1. The empty map is the constant monomial `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionMonomial {
    exponents: BTreeMap<u32, u32>,
}

impl PartitionMonomial {
    /// The constant monomial (empty partition).
    pub fn unit() -> Self {
        PartitionMonomial::default()
    }

    /// Build from `(index, multiplicity)` pairs; zero multiplicities are
    /// dropped, repeated indices accumulate. Panics on index 0.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut exponents = BTreeMap::new();
        for &(k, a) in pairs {
            assert!(k >= 1, "power sum indices start at 1");
            if a > 0 {
                *exponents.entry(k).or_insert(0) += a;
            }
        }
        PartitionMonomial { exponents }
    }

    /// Build from a list of parts, e.g. `[2, 1, 1]` gives `E1^2 * E2`.
    pub fn from_parts(parts: &[u32]) -> Self {
        let mut exponents = BTreeMap::new();
        for &k in parts {
            assert!(k >= 1, "partition parts start at 1");
            *exponents.entry(k).or_insert(0) += 1;
        }
        PartitionMonomial { exponents }
    }

    /// `sum k * a_k`.
    pub fn weight(&self) -> u64 {
        self.exponents
            .iter()
            .map(|(&k, &a)| k as u64 * a as u64)
            .sum()
    }

    /// Largest power-sum index used, 0 for the constant monomial.
    pub fn max_index(&self) -> u32 {
        self.exponents.keys().next_back().copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exponents.iter().map(|(&k, &a)| (k, a))
    }

    /// Total multiplicity of indices >= 2; the sign picked up under the
    /// substitution `E_k -> -E_k` for `k >= 2` is `(-1)` to this count.
    pub fn even_flip_count(&self) -> u64 {
        self.exponents
            .iter()
            .filter(|(&k, _)| k >= 2)
            .map(|(_, &a)| a as u64)
            .sum()
    }

    /// Value of the monomial on a vector of power sums.
    pub fn eval(&self, e: &PowerSumVector) -> Result<Rational> {
        let mut acc = Rational::one();
        for (&k, &a) in &self.exponents {
            acc *= e.get(k as usize)?.pow(a as i32);
        }
        Ok(acc)
    }

    /// Text form like `E1^2*E2` (`s1^2*s2` for the sigma family); `^1` is
    /// omitted and the constant monomial prints as `1`.
    pub fn format(&self, family: VariableFamily) -> String {
        if self.exponents.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, (&k, &a)) in self.exponents.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            let _ = write!(out, "{}{}", family.prefix(), k);
            if a > 1 {
                let _ = write!(out, "^{}", a);
            }
        }
        out
    }

    /// Dense exponent vector `[a_1, a_2, ..., a_max]`.
    fn dense_exponents(&self, len: u32) -> Vec<u32> {
        (1..=len)
            .map(|k| self.exponents.get(&k).copied().unwrap_or(0))
            .collect()
    }
}

/// Ordering used for *printing* polynomials: descending lexicographic on the
/// dense exponent vector, which lists `E1^4` before `E1^2*E2` before `E2^2`
/// before `E4`.
fn display_cmp(a: &PartitionMonomial, b: &PartitionMonomial) -> std::cmp::Ordering {
    let len = a.max_index().max(b.max_index());
    b.dense_exponents(len).cmp(&a.dense_exponents(len))
}

/// A finite linear combination of partition monomials with nonzero exact
/// rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerSumPoly {
    terms: BTreeMap<PartitionMonomial, Rational>,
}

impl PowerSumPoly {
    pub fn zero() -> Self {
        PowerSumPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = PowerSumPoly::default();
        p.add_term(PartitionMonomial::unit(), c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PartitionMonomial, Rational)>) -> Self {
        let mut p = PowerSumPoly::default();
        for (mono, coeff) in terms {
            p.add_term(mono, coeff);
        }
        p
    }

    /// Add `coeff * mono`, deleting the entry if the sum cancels to zero.
    pub fn add_term(&mut self, mono: PartitionMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &PowerSumPoly) -> PowerSumPoly {
        let mut out = self.clone();
        for (mono, coeff) in &other.terms {
            out.add_term(mono.clone(), coeff.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> PowerSumPoly {
        if c.is_zero() {
            return PowerSumPoly::zero();
        }
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &PartitionMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PartitionMonomial, &Rational)> {
        self.terms.iter()
    }

    /// If every monomial has the same weight, that weight; `None` for the
    /// zero polynomial or a mixed-weight combination.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight();
        it.all(|m| m.weight() == w).then_some(w)
    }

    /// Evaluate on a vector of power sums.
    pub fn eval(&self, e: &PowerSumVector) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (mono, coeff) in &self.terms {
            acc += coeff * mono.eval(e)?;
        }
        Ok(acc)
    }

    /// Substitute `E_k -> -E_k` for every `k >= 2`, leaving `E_1` fixed.
    /// An involution.
    pub fn flip_even_signs(&self) -> PowerSumPoly {
        PowerSumPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    let flipped = if m.even_flip_count() % 2 == 1 { -v } else { v.clone() };
                    (m.clone(), flipped)
                })
                .collect(),
        }
    }

    /// Terms sorted in display order (descending exponent vectors).
    pub fn display_terms(&self) -> Vec<(&PartitionMonomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| display_cmp(a, b));
        terms
    }

    /// JSON object mapping monomial strings to rational strings, e.g.
    /// `{"E1^2":"1/4","E2":"1/12"}`. Keys carry no characters needing
    /// escapes, so the object is assembled directly in display order.
    pub fn to_json(&self, family: VariableFamily) -> String {
        let mut out = String::from("{");
        for (i, (mono, coeff)) in self.display_terms().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\":\"{}\"", mono.format(family), coeff);
        }
        out.push('}');
        out
    }

    /// Human layout: integer numerator terms over one common denominator,
    /// e.g. `(15*E1^4 + 30*E1^2*E2 + 5*E2^2 - 2*E4)/240`.
    pub fn format(&self, family: VariableFamily) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut denom = BigInt::one();
        for coeff in self.terms.values() {
            denom = num_integer::lcm(denom, coeff.denom().clone());
        }
        let scale = Rational::from_integer(denom.clone());
        let mut body = String::new();
        for (i, (mono, coeff)) in self.display_terms().into_iter().enumerate() {
            let scaled = coeff * &scale;
            debug_assert!(scaled.is_integer());
            let magnitude = scaled.numer().abs();
            if i == 0 {
                if scaled.is_negative() {
                    body.push('-');
                }
            } else if scaled.is_negative() {
                body.push_str(" - ");
            } else {
                body.push_str(" + ");
            }
            let mono_text = mono.format(family);
            if mono_text == "1" {
                let _ = write!(body, "{}", magnitude);
            } else if magnitude.is_one() {
                body.push_str(&mono_text);
            } else {
                let _ = write!(body, "{}*{}", magnitude, mono_text);
            }
        }
        if denom.is_one() {
            body
        } else if self.terms.len() == 1 && !body.starts_with('-') {
            format!("{}/{}", body, denom)
        } else {
            format!("({})/{}", body, denom)
        }
    }
}

/// Exact values `[E_1, ..., E_K]` of the power sums at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumVector {
    values: Vec<Rational>,
}

impl PowerSumVector {
    pub fn new(values: Vec<Rational>) -> Self {
        PowerSumVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based access: `get(k)` is `E_k`.
    pub fn get(&self, k: usize) -> Result<&Rational> {
        if k == 0 || k > self.values.len() {
            return Err(Error::PowerSumIndex {
                index: k,
                available: self.values.len(),
            });
        }
        Ok(&self.values[k - 1])
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Compute `[E_1, ..., E_K]` with `E_k = sum_j x_j^k`, exactly.
///
/// An empty tuple is allowed and gives all zeros.
pub fn power_sums(x: &PointTuple, k_max: usize) -> PowerSumVector {
    let mut values = vec![Rational::zero(); k_max];
    for coord in x.iter() {
        let mut power = Rational::one();
        for value in values.iter_mut() {
            power *= coord;
            *value += &power;
        }
    }
    PowerSumVector { values }
}

/// All integer partitions of `w` as monomials, parts listed largest-first:
/// for `w = 4` the order is `{4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}`.
pub fn partitions_of(w: u32) -> Vec<PartitionMonomial> {
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    descend(w, w, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<PartitionMonomial>) {
    if remaining == 0 {
        out.push(PartitionMonomial::from_parts(stack));
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}
