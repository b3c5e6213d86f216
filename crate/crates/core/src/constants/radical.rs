//! Coefficients of the form `q * m^(1/k)`: a rational times the k-th root
//! of a k-th-power-free positive integer, with k a power of two.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::{nth_root_interval, RatInterval};

/// Trial-divides `n` into prime powers. Intended for the small radicands of
/// the constant ledger; larger leftover cofactors are reduced by perfect
/// power checks and otherwise treated as prime.
fn factorize(mut n: BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut push = |p: BigUint, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut d = 2u64;
    while d <= 100_000 {
        let big_d = BigUint::from(d);
        if &big_d * &big_d > n {
            break;
        }
        let mut e = 0;
        while (&n % &big_d).is_zero() {
            n /= &big_d;
            e += 1;
        }
        push(big_d, e);
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        // peel perfect powers off the cofactor before calling it prime
        let mut k = 8u32;
        while k >= 2 {
            let r = n.nth_root(k);
            if r.pow(k) == n {
                push(r, k);
                return out;
            }
            k /= 2;
        }
        push(n, 1);
    }
    out
}

/// `q * radicand^(1/index)` in canonical form: the radicand is a positive
/// index-th-power-free integer, the index is the least power of two that
/// expresses the value, and a radicand of 1 forces index 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff {
    q: BigRational,
    radicand: BigUint,
    index: u32,
}

impl Coeff {
    pub fn rational(q: BigRational) -> Self {
        Coeff {
            q,
            radicand: BigUint::one(),
            index: 1,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Coeff::rational(BigRational::new(n.into(), d.into()))
    }

    /// `q * base^(exp/index)` canonicalized; `base` must be a positive
    /// rational and `index` a power of two at most 64.
    pub fn with_radical(q: BigRational, base: &BigRational, exp: u32, index: u32) -> Self {
        assert!(index.is_power_of_two() && index <= 64, "bad radical index");
        assert!(base.is_positive(), "radicand must be positive");
        if q.is_zero() {
            return Coeff::rational(BigRational::zero());
        }
        // exponent vector of base^exp over primes, scaled by 1/index
        let mut q = q;
        let mut residual: Vec<(BigUint, u32)> = Vec::new();
        let mut handle = |n: BigUint, sign_num: bool| {
            for (p, e) in factorize(n) {
                let total = e as i64 * exp as i64 * if sign_num { 1 } else { -1 };
                // value contributes p^(total/index); split into integer and
                // fractional parts with the fractional exponent in [0, index)
                let whole = total.div_euclid(index as i64);
                let frac = total.rem_euclid(index as i64) as u32;
                let pi = BigInt::from(p.clone());
                if whole >= 0 {
                    q *= BigRational::from_integer(pi.pow(whole as u32));
                } else {
                    q /= BigRational::from_integer(pi.pow((-whole) as u32));
                }
                if frac > 0 {
                    residual.push((p, frac));
                }
            }
        };
        handle(base.numer().magnitude().clone(), true);
        handle(base.denom().magnitude().clone(), false);
        // reduce the index by the gcd of all fractional exponents
        let mut g = index;
        for (_, e) in &residual {
            g = g.gcd(e);
        }
        let index = if residual.is_empty() { 1 } else { index / g };
        let mut radicand = BigUint::one();
        for (p, e) in residual {
            radicand *= p.pow(e / g);
        }
        Coeff {
            q,
            radicand,
            index,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.index == 1
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.q
    }

    pub fn radicand(&self) -> &BigUint {
        &self.radicand
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Exact rational value when the radical part is trivial.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.q.clone())
    }

    pub fn neg(&self) -> Coeff {
        Coeff {
            q: -self.q.clone(),
            radicand: self.radicand.clone(),
            index: self.index,
        }
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if self.is_zero() || other.is_zero() {
            return Coeff::rational(BigRational::zero());
        }
        let k = self.index.lcm(&other.index);
        // radicand^(k/index) for each side, combined under one k-th root
        let combined = BigRational::from_integer(BigInt::from(
            self.radicand.pow(k / self.index) * other.radicand.pow(k / other.index),
        ));
        Coeff::with_radical(self.q.clone() * other.q.clone(), &combined, 1, k)
    }

    pub fn pow(&self, e: u32) -> Coeff {
        if e == 0 {
            return Coeff::from_int(1);
        }
        let mut qe = BigRational::one();
        for _ in 0..e {
            qe *= self.q.clone();
        }
        Coeff::with_radical(
            qe,
            &BigRational::from_integer(BigInt::from(self.radicand.clone())),
            e,
            self.index,
        )
    }

    /// Sign of the value: the radical part is positive, so this is the sign
    /// of the rational factor.
    pub fn signum(&self) -> i32 {
        if self.q.is_zero() {
            0
        } else if self.q.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Structural key identifying the radical part, used to merge like terms.
    pub fn radical_key(&self) -> (u32, BigUint) {
        (self.index, self.radicand.clone())
    }

    /// Exact comparison by cross-raising to the least common radical index.
    pub fn cmp_value(&self, other: &Coeff) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let k = self.index.lcm(&other.index);
        let raise = |c: &Coeff| -> BigRational {
            let mut q = BigRational::one();
            let aq = c.q.abs();
            for _ in 0..k {
                q *= aq.clone();
            }
            q * BigRational::from_integer(BigInt::from(c.radicand.pow(k / c.index)))
        };
        let (a, b) = (raise(self), raise(other));
        if sa > 0 {
            a.cmp(&b)
        } else {
            b.cmp(&a)
        }
    }

    /// Enclosure of the value with absolute root error below `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        if self.is_rational() {
            return RatInterval::point(self.q.clone());
        }
        let root = nth_root_interval(
            &BigRational::from_integer(BigInt::from(self.radicand.clone())),
            self.index,
            bits,
        );
        root.scale(&self.q)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{}*{}^(1/{})", self.q, self.radicand, self.index)
        }
    }
}
