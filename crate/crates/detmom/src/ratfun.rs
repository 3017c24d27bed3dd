//! Rational functions `P(k)/Q(k)` in normal form.
//!
//! Normal form: common polynomial factors cancelled, both polynomials scaled
//! so the denominator has coprime integer coefficients with positive leading
//! coefficient. Normalization is idempotent and never changes values at
//! non-pole points.

use crate::error::{Error, Result};
use crate::poly::PolynomialQ;
use crate::rational::{Int, Rat};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctionQ {
    num: PolynomialQ,
    den: PolynomialQ,
}

impl RationalFunctionQ {
    /// Builds `num/den` and reduces to normal form. Panics if `den` is
    /// identically zero.
    pub fn new(num: PolynomialQ, den: PolynomialQ) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunctionQ {
                num,
                den: PolynomialQ::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        // scale both by the same factor so coefficients are integers with
        // joint content 1 and the denominator leading coefficient positive
        let cn = num.content();
        let cd = den.content();
        // content is num_gcd/den_lcm (signed); the joint content of the pair
        // is gcd(num contents) / lcm(den contents)
        let joint = if num.is_zero() {
            cd.clone().abs()
        } else {
            let n = Int::from(cn.numer().gcd_ref(cd.numer()));
            let d = Int::from(cn.denom().lcm_ref(cd.denom()));
            Rat::from((n, d))
        };
        let mut scale = Rat::from(joint.recip_ref());
        if cd.cmp0() == std::cmp::Ordering::Less {
            scale = -scale;
        }
        RationalFunctionQ {
            num: num.scale(&scale),
            den: den.scale(&scale),
        }
    }

    pub fn from_poly(p: PolynomialQ) -> Self {
        Self::new(p, PolynomialQ::one())
    }

    pub fn constant(c: impl Into<Rat>) -> Self {
        Self::from_poly(PolynomialQ::constant(c))
    }

    pub fn num(&self) -> &PolynomialQ {
        &self.num
    }

    pub fn den(&self) -> &PolynomialQ {
        &self.den
    }

    /// Exact evaluation; `Err(Pole)` where the reduced denominator vanishes.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.cmp0() == std::cmp::Ordering::Equal {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn is_pole(&self, x: &Rat) -> bool {
        self.den.eval(x).cmp0() == std::cmp::Ordering::Equal
    }

    /// Substitution `k -> k + delta`, re-expanded and reduced.
    pub fn shift(&self, delta: i64) -> Self {
        let d = Rat::from(delta);
        Self::new(self.num.shift(&d), self.den.shift(&d))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.num.is_zero(), "reciprocal of zero");
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn add(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        RationalFunctionQ::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn sub(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        RationalFunctionQ::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn mul(self, rhs: &RationalFunctionQ) -> RationalFunctionQ {
        RationalFunctionQ::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunctionQ {
    type Output = RationalFunctionQ;
    fn neg(self) -> RationalFunctionQ {
        RationalFunctionQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunctionQ {
    /// Prints as `P(k)/Q(k)` with expanded polynomials; the numerator is
    /// scaled to integer coefficients where the normal form allows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == PolynomialQ::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn sample() -> RationalFunctionQ {
        // (k+1)(k+2) / (2(k+2)(k+3)) reduces to (k+1) / (2k+6)
        RationalFunctionQ::new(
            &PolynomialQ::from_roots(&[rat(-1), rat(-2)]) * &PolynomialQ::one(),
            (&PolynomialQ::from_roots(&[rat(-2), rat(-3)])).scale(&rat(2)),
        )
    }

    #[test]
    fn normalization_cancels_and_is_idempotent() {
        let r = sample();
        assert_eq!(r.num().degree(), Some(1));
        assert_eq!(r.den(), &PolynomialQ::from_ints(&[6, 2]));
        let again = RationalFunctionQ::new(r.num().clone(), r.den().clone());
        assert_eq!(r, again);
    }

    #[test]
    fn evaluation_invariant_under_normalization() {
        let raw_num = PolynomialQ::from_roots(&[rat(-1), rat(-2)]);
        let raw_den = PolynomialQ::from_roots(&[rat(-2), rat(-3)]).scale(&rat(2));
        let r = RationalFunctionQ::new(raw_num.clone(), raw_den.clone());
        for k in [-5i64, -4, 0, 1, 7, 100] {
            let x = rat(k);
            if raw_den.eval(&x).cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            assert_eq!(r.eval(&x).unwrap(), raw_num.eval(&x) / raw_den.eval(&x));
        }
        assert_eq!(r.eval(&rat(-3)), Err(Error::Pole));
        // the cancelled point is no longer a pole of the reduced form
        assert_eq!(r.eval(&rat(-2)).unwrap(), ratio(-1, 2));
    }

    #[test]
    fn shift_roundtrip() {
        let r = sample();
        assert_eq!(r.shift(0), r);
        assert_eq!(r.shift(1).shift(-1), r);
        for k in 0i64..6 {
            assert_eq!(r.shift(2).eval(&rat(k)).unwrap(), r.eval(&rat(k + 2)).unwrap());
        }
    }

    #[test]
    fn arithmetic() {
        let a = sample();
        let b = RationalFunctionQ::new(PolynomialQ::one(), PolynomialQ::from_roots(&[rat(-1)]));
        let s = &a + &b;
        let p = &a * &b;
        for k in [0i64, 1, 2, 5] {
            let x = rat(k);
            assert_eq!(
                s.eval(&x).unwrap(),
                a.eval(&x).unwrap() + b.eval(&x).unwrap()
            );
            assert_eq!(
                p.eval(&x).unwrap(),
                a.eval(&x).unwrap() * b.eval(&x).unwrap()
            );
        }
    }
}
