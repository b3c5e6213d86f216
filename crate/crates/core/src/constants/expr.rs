//! Finite sums of terms `coeff * delta^(e/64)` in canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::interval::{nth_root_interval, RatInterval};
use super::radical::Coeff;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstantsError {
    #[error("delta must lie in the open interval (0, 1)")]
    DeltaOutOfRange,
    #[error("terms have different delta exponents and are not comparable as constants")]
    Incomparable,
}

/// One term `coeff * delta^(exp64/64)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Coeff,
    pub exp64: u32,
}

impl Term {
    pub fn new(coeff: Coeff, exp64: u32) -> Self {
        Term { coeff, exp64 }
    }
}

/// A canonical sum of terms: sorted by exponent then radical key, with
/// like-radical coefficients merged and zero terms dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaExpr {
    terms: Vec<Term>,
}

impl DeltaExpr {
    pub fn zero() -> Self {
        DeltaExpr { terms: Vec::new() }
    }

    pub fn monomial(coeff: Coeff, exp64: u32) -> Self {
        DeltaExpr::from_terms(vec![Term::new(coeff, exp64)])
    }

    pub fn constant(coeff: Coeff) -> Self {
        DeltaExpr::monomial(coeff, 0)
    }

    pub fn from_terms(terms: Vec<Term>) -> Self {
        let mut sorted = terms;
        sorted.sort_by(|a, b| {
            (a.exp64, a.coeff.radical_key()).cmp(&(b.exp64, b.coeff.radical_key()))
        });
        let mut merged: Vec<Term> = Vec::new();
        for t in sorted {
            if t.coeff.is_zero() {
                continue;
            }
            match merged.last_mut() {
                Some(last)
                    if last.exp64 == t.exp64
                        && last.coeff.radical_key() == t.coeff.radical_key() =>
                {
                    let q = last.coeff.rational_part().clone()
                        + t.coeff.rational_part().clone();
                    let base = BigRational::from_integer(BigInt::from(
                        last.coeff.radicand().clone(),
                    ));
                    last.coeff = Coeff::with_radical(q, &base, 1, last.coeff.index());
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        DeltaExpr { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &DeltaExpr) -> DeltaExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DeltaExpr::from_terms(terms)
    }

    pub fn neg(&self) -> DeltaExpr {
        DeltaExpr {
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(t.coeff.neg(), t.exp64))
                .collect(),
        }
    }

    pub fn sub(&self, other: &DeltaExpr) -> DeltaExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &DeltaExpr) -> DeltaExpr {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term::new(a.coeff.mul(&b.coeff), a.exp64 + b.exp64));
            }
        }
        DeltaExpr::from_terms(terms)
    }

    pub fn pow(&self, e: u32) -> DeltaExpr {
        let mut acc = DeltaExpr::constant(Coeff::from_int(1));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &Coeff) -> DeltaExpr {
        DeltaExpr::from_terms(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.mul(c), t.exp64))
                .collect(),
        )
    }

    /// Enclosure of the value at a rational `delta` in (0, 1), with per-root
    /// absolute error below `2^-bits`.
    pub fn eval_interval(&self, delta: &BigRational, bits: u32) -> RatInterval {
        let mut acc = RatInterval::zero();
        for t in &self.terms {
            acc = acc.add(&term_interval(t, delta, bits));
        }
        acc
    }
}

/// Enclosure of `delta^(exp64/64)` at a positive rational delta.
pub(crate) fn delta_power_interval(
    delta: &BigRational,
    exp64: u32,
    bits: u32,
) -> RatInterval {
    if exp64 == 0 {
        return RatInterval::point(BigRational::one());
    }
    let g = exp64.gcd(&64);
    let j = exp64 / g;
    let k = 64 / g;
    let mut p = BigRational::one();
    for _ in 0..j {
        p *= delta.clone();
    }
    nth_root_interval(&p, k, bits)
}

fn term_interval(t: &Term, delta: &BigRational, bits: u32) -> RatInterval {
    t.coeff
        .enclosure(bits)
        .mul(&delta_power_interval(delta, t.exp64, bits))
}

/// Least power `L` such that `|term value at delta|^L` is rational: the lcm
/// of the coefficient's radical index and the reduced delta-root index.
pub(crate) fn term_power_requirement(t: &Term) -> u32 {
    let k_delta = 64 / t.exp64.gcd(&64);
    t.coeff.index().lcm(&k_delta)
}

/// `|term value at delta|^L` as an exact rational; `L` must be a multiple
/// of [`term_power_requirement`].
pub(crate) fn term_abs_pow_at(t: &Term, delta: &BigRational, l: u32) -> BigRational {
    debug_assert_eq!(l % term_power_requirement(t), 0);
    let mut out = BigRational::one();
    let aq = t.coeff.rational_part().abs();
    for _ in 0..l {
        out *= aq.clone();
    }
    out *= BigRational::from_integer(BigInt::from(
        t.coeff.radicand().pow(l / t.coeff.index()),
    ));
    // delta^(exp64 * l / 64), an integer power by the requirement
    let e = (t.exp64 as u64 * l as u64 / 64) as u32;
    for _ in 0..e {
        out *= delta.clone();
    }
    out
}

/// Exact comparison of two term values at a positive rational delta.
pub(crate) fn cmp_terms_at(
    a: &Term,
    b: &Term,
    delta: &BigRational,
) -> std::cmp::Ordering {
    let (sa, sb) = (a.coeff.signum(), b.coeff.signum());
    if sa != sb {
        return sa.cmp(&sb);
    }
    if sa == 0 {
        return std::cmp::Ordering::Equal;
    }
    let l = term_power_requirement(a).lcm(&term_power_requirement(b));
    let (pa, pb) = (term_abs_pow_at(a, delta, l), term_abs_pow_at(b, delta, l));
    if sa > 0 {
        pa.cmp(&pb)
    } else {
        pb.cmp(&pa)
    }
}

impl fmt::Display for DeltaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.exp64 == 0 {
                write!(f, "{}", t.coeff)?;
            } else {
                write!(f, "{}*d^({}/64)", t.coeff, t.exp64)?;
            }
        }
        Ok(())
    }
}

/// Spec'd interval evaluation: enclosure with relative width at most
/// `2^(1-precision_bits) * |value|` (point intervals when exact).
pub fn numeric_eval(
    expr: &DeltaExpr,
    delta: &BigRational,
    precision_bits: u32,
) -> Result<RatInterval, ConstantsError> {
    if !delta.is_positive() || *delta >= BigRational::one() {
        return Err(ConstantsError::DeltaOutOfRange);
    }
    if expr.is_zero() {
        return Ok(RatInterval::zero());
    }
    let mut bits = precision_bits.max(16) + 8;
    loop {
        let i = expr.eval_interval(delta, bits);
        let width = i.width();
        if width.is_zero() {
            return Ok(i);
        }
        let mag = i.lo.abs().max(i.hi.abs());
        // width <= 2^(1 - precision_bits) * |value|
        let bound = mag.clone()
            * BigRational::new(BigInt::from(2), BigInt::one())
            / BigRational::from_integer(BigInt::from(2u8).pow(precision_bits));
        if !mag.is_zero() && width <= bound {
            return Ok(i);
        }
        bits *= 2;
        if bits > 1 << 16 {
            return Ok(i);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_merge_and_permutation_invariance() {
        let a = Term::new(Coeff::from_int(3), 16);
        let b = Term::new(Coeff::with_radical(BigRational::one(), &rat(5, 3), 1, 2), 16);
        let c = Term::new(Coeff::from_int(2), 16);
        let d = Term::new(Coeff::from_int(1), 8);
        let e1 = DeltaExpr::from_terms(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
        let e2 = DeltaExpr::from_terms(vec![d, b, c, a]);
        assert_eq!(e1, e2);
        // 3 + 2 merged, radical kept apart
        assert_eq!(e1.terms().len(), 3);
    }

    #[test]
    fn cancellation_to_zero() {
        let x = DeltaExpr::monomial(Coeff::from_int(5), 32);
        let y = x.sub(&x);
        assert!(y.is_zero());
    }

    #[test]
    fn numeric_eval_sqrt_delta_exact() {
        let d2 = DeltaExpr::monomial(Coeff::from_int(1), 32);
        let i = numeric_eval(&d2, &rat(1, 4), 53).unwrap();
        assert_eq!(i, RatInterval::point(rat(1, 2)));
    }

    #[test]
    fn numeric_eval_rejects_bad_delta() {
        let d2 = DeltaExpr::monomial(Coeff::from_int(1), 32);
        assert!(numeric_eval(&d2, &rat(0, 1), 53).is_err());
        assert!(numeric_eval(&d2, &rat(3, 2), 53).is_err());
    }

    #[test]
    fn mul_adds_exponents() {
        let a = DeltaExpr::monomial(Coeff::from_ratio(5, 3), 32);
        let b = DeltaExpr::monomial(Coeff::from_int(3), 32);
        let p = a.mul(&b);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].exp64, 64);
        assert_eq!(p.terms()[0].coeff.as_rational().unwrap(), rat(5, 1));
    }
}
