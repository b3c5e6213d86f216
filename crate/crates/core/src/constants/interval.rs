//! Rational interval arithmetic with outward rounding, plus exact k-th
//! root enclosures.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "inverted interval");
        RatInterval { lo, hi }
    }

    pub fn zero() -> Self {
        RatInterval::point(BigRational::zero())
    }

    pub fn width(&self) -> BigRational {
        self.hi.clone() - self.lo.clone()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: self.lo.clone() + other.lo.clone(),
            hi: self.hi.clone() + other.hi.clone(),
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let products = [
            self.lo.clone() * other.lo.clone(),
            self.lo.clone() * other.hi.clone(),
            self.hi.clone() * other.lo.clone(),
            self.hi.clone() * other.hi.clone(),
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        let a = self.lo.clone() * c.clone();
        let b = self.hi.clone() * c.clone();
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }
}

/// Enclosure of `x^(1/k)` for `x >= 0` with absolute error below
/// `2^-bits` (exact when the root is rational at that scale).
pub fn nth_root_interval(x: &BigRational, k: u32, bits: u32) -> RatInterval {
    assert!(!x.is_negative(), "root of a negative rational");
    assert!(k >= 1);
    if x.is_zero() {
        return RatInterval::zero();
    }
    if k == 1 {
        return RatInterval::point(x.clone());
    }
    let scale = BigUint::one() << bits;
    let num = x.numer().magnitude().clone();
    let den = x.denom().magnitude().clone();
    // floor of the k-th root of num * scale^k / den
    let scaled = num * scale.pow(k) / &den;
    let root = scaled.nth_root(k);
    let lo = BigRational::new(BigInt::from(root.clone()), BigInt::from(scale.clone()));
    // exact when root^k * den == num * scale^k
    let exact = {
        let num = x.numer().magnitude().clone();
        root.pow(k) * den == num * scale.pow(k)
    };
    if exact {
        RatInterval::point(lo)
    } else {
        let hi = BigRational::new(
            BigInt::from(root + BigUint::one()),
            BigInt::from(scale),
        );
        RatInterval::new(lo, hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sqrt_of_quarter_is_exact() {
        let i = nth_root_interval(&rat(1, 4), 2, 53);
        assert_eq!(i, RatInterval::point(rat(1, 2)));
    }

    #[test]
    fn sqrt2_enclosure_narrows() {
        let i = nth_root_interval(&rat(2, 1), 2, 80);
        assert!(i.lo < i.hi);
        assert!(i.width() <= rat(1, 1 << 30));
        let mid = i.lo.to_f64().unwrap();
        assert!((mid - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn eighth_root() {
        let i = nth_root_interval(&rat(256, 1), 8, 64);
        assert_eq!(i, RatInterval::point(rat(2, 1)));
        let i = nth_root_interval(&rat(20016, 1), 8, 64);
        let v = i.lo.to_f64().unwrap();
        assert!((v - 3.44885).abs() < 1e-4, "got {v}");
    }

    #[test]
    fn interval_mul_signs() {
        let a = RatInterval::new(rat(-2, 1), rat(3, 1));
        let b = RatInterval::new(rat(-1, 1), rat(4, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, rat(-8, 1));
        assert_eq!(p.hi, rat(12, 1));
    }
}
