//! Rational-coefficient polynomials with Sturm-sequence sign certification.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Coefficients in ascending degree order; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Remainder of self divided by other.
    fn rem(&self, other: &RatPoly) -> RatPoly {
        assert!(!other.is_zero());
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.coeffs[d].clone();
        while r.len() > d && !r.is_empty() {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead.clone();
            if !factor.is_zero() {
                for i in 0..=d {
                    let idx = k - d + i;
                    let sub = factor.clone() * other.coeffs[i].clone();
                    r[idx] -= sub;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            if r.len() <= d {
                break;
            }
        }
        RatPoly::new(r)
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn div_exact(&self, other: &RatPoly) -> RatPoly {
        // long division; remainder is known to vanish
        let mut r = self.coeffs.clone();
        let d = other.degree();
        let lead = other.coeffs[d].clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while r.len() > d {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead.clone();
            q[k - d] = factor.clone();
            for i in 0..=d {
                let idx = k - d + i;
                let sub = factor.clone() * other.coeffs[i].clone();
                r[idx] -= sub;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        RatPoly::new(q)
    }

    /// Square-free part: self / gcd(self, self').
    pub fn squarefree(&self) -> RatPoly {
        if self.degree() == 0 || self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[k - 2].rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(RatPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect()));
        }
        chain
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b);
        let sf = self.squarefree();
        let chain = sf.sturm_chain();
        let variations = |x: &BigRational| -> usize {
            let mut signs = chain
                .iter()
                .map(|p| p.eval(x))
                .filter(|v| !v.is_zero())
                .map(|v| v.is_positive());
            let mut count = 0;
            if let Some(mut prev) = signs.next() {
                for s in signs {
                    if s != prev {
                        count += 1;
                    }
                    prev = s;
                }
            }
            count
        };
        variations(a) - variations(b)
    }

    /// Certifies `self >= 0` on the closed interval [a, b]: endpoint values
    /// are nonnegative and the square-free part has no root strictly inside,
    /// with nonnegative sign at the midpoint. Sound but conservative: an
    /// interior touch point of even multiplicity is not certified.
    pub fn nonneg_on(&self, a: &BigRational, b: &BigRational) -> bool {
        assert!(a < b);
        if self.is_zero() {
            return true;
        }
        if self.eval(a).is_negative() || self.eval(b).is_negative() {
            return false;
        }
        let sf = self.squarefree();
        let interior = sf.roots_in(a, b) - usize::from(sf.eval(b).is_zero());
        if interior > 0 {
            return false;
        }
        let mid = (a.clone() + b.clone()) / BigRational::from_integer(2.into());
        !self.eval(&mid).is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(cs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn root_counting() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let p = poly(&[(2, 1), (-3, 1), (1, 1)]);
        assert_eq!(p.roots_in(&rat(0, 1), &rat(3, 1)), 2);
        assert_eq!(p.roots_in(&rat(0, 1), &rat(1, 1)), 1); // (0,1] contains 1
        assert_eq!(p.roots_in(&rat(1, 1), &rat(3, 2)), 0); // (1, 3/2]
        // repeated root: (x-1)^2
        let p = poly(&[(1, 1), (-2, 1), (1, 1)]);
        assert_eq!(p.roots_in(&rat(0, 1), &rat(2, 1)), 1);
    }

    #[test]
    fn nonneg_certificates() {
        // x/5 - 9x^2/25 on [0, 5/9]: zero at both endpoints, positive inside
        let p = poly(&[(0, 1), (1, 5), (-9, 25)]);
        assert!(p.nonneg_on(&rat(0, 1), &rat(5, 9)));
        assert!(!p.nonneg_on(&rat(0, 1), &rat(2, 3)));
        // conservative on interior touch points: (x-1)^2 on [0,2] is not
        // certified, but away from the touch point it is
        let sq = poly(&[(1, 1), (-2, 1), (1, 1)]);
        assert!(!sq.nonneg_on(&rat(0, 1), &rat(2, 1)));
        assert!(sq.nonneg_on(&rat(1, 1), &rat(2, 1)));
        // x^2 + 1 has no roots anywhere
        let p = poly(&[(1, 1), (0, 1), (1, 1)]);
        assert!(p.nonneg_on(&rat(-5, 1), &rat(5, 1)));
    }
}
