//! Exact univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree; the zero polynomial is the
//! empty coefficient list, so the leading coefficient is nonzero whenever it
//! exists.

use crate::rational::{pow_rat, Int, Rat};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialQ {
    coeffs: Vec<Rat>,
}

impl PolynomialQ {
    pub fn zero() -> Self {
        PolynomialQ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::from(1))
    }

    pub fn constant(c: impl Into<Rat>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Rat::from(0), Rat::from(1)])
    }

    /// `a*x + b`
    pub fn linear(a: impl Into<Rat>, b: impl Into<Rat>) -> Self {
        Self::from_coeffs(vec![b.into(), a.into()])
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolynomialQ { coeffs };
        p.trim();
        p
    }

    /// Convenience for integer coefficient lists, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    /// Monic product of `(x - r)` over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = &p * &Self::linear(1, -r.clone());
        }
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.cmp0() == std::cmp::Ordering::Equal) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Rat::from(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::from(0);
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| Rat::from(c * s)).collect())
    }

    /// Substitution `x -> x + delta`, exact binomial expansion via repeated
    /// Horner steps.
    pub fn shift(&self, delta: &Rat) -> Self {
        self.compose_linear(&Rat::from(1), delta)
    }

    /// Substitution `x -> u*x + v`.
    pub fn compose_linear(&self, u: &Rat, v: &Rat) -> Self {
        let lin = Self::linear(u.clone(), v.clone());
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder with `deg r < deg d`. Panics on zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![Rat::from(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = Rat::from(rem.leading().unwrap() / lead);
            let pos = rd - dd;
            for i in 0..=dd {
                let sub = Rat::from(&d.coeffs[i] * &q);
                rem.coeffs[pos + i] -= sub;
            }
            rem.trim();
            quo[pos] = q;
        }
        (Self::from_coeffs(quo), rem)
    }

    /// Monic greatest common divisor by the Euclidean algorithm, with
    /// content stripped at every step so coefficients stay reduced.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&Rat::from(lead.recip_ref()))
    }

    /// Content: the positive rational `c` with `self = c * primitive`,
    /// where the primitive part has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::from(0);
        }
        let mut num_gcd = Int::from(0);
        let mut den_lcm = Int::from(1);
        for c in &self.coeffs {
            num_gcd.gcd_mut(c.numer());
            den_lcm.lcm_mut(c.denom());
        }
        let mut content = Rat::from((num_gcd, den_lcm));
        if self.leading().unwrap().cmp0() == std::cmp::Ordering::Less {
            content = -content;
        }
        content
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.scale(&Rat::from(c.recip_ref()))
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![Rat::from(0)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(Rat::from(c / Rat::from((i + 1) as u64)));
        }
        Self::from_coeffs(coeffs)
    }

    /// Definite integral over `[a, b]`.
    pub fn integrate(&self, a: &Rat, b: &Rat) -> Rat {
        let f = self.antiderivative();
        f.eval(b) - f.eval(a)
    }

    /// Exact power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            let a = c.clone().abs();
            if out.is_empty() {
                if c.cmp0() == std::cmp::Ordering::Less {
                    out.push('-');
                }
            } else if c.cmp0() == std::cmp::Ordering::Less {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let unit = a == 1;
            match (i, unit) {
                (0, _) => out.push_str(&a.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => out.push_str(&format!("{a}*{var}")),
                (_, true) => out.push_str(&format!("{var}^{i}")),
                (_, false) => out.push_str(&format!("{a}*{var}^{i}")),
            }
        }
        out
    }
}

impl Add for &PolynomialQ {
    type Output = PolynomialQ;
    fn add(self, rhs: &PolynomialQ) -> PolynomialQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        PolynomialQ::from_coeffs(coeffs)
    }
}

impl Sub for &PolynomialQ {
    type Output = PolynomialQ;
    fn sub(self, rhs: &PolynomialQ) -> PolynomialQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        PolynomialQ::from_coeffs(coeffs)
    }
}

impl Neg for &PolynomialQ {
    type Output = PolynomialQ;
    fn neg(self) -> PolynomialQ {
        PolynomialQ::from_coeffs(self.coeffs.iter().map(|c| Rat::from(-c)).collect())
    }
}

impl Mul for &PolynomialQ {
    type Output = PolynomialQ;
    fn mul(self, rhs: &PolynomialQ) -> PolynomialQ {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialQ::zero();
        }
        let mut coeffs = vec![Rat::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += Rat::from(a * b);
            }
        }
        PolynomialQ::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("k"))
    }
}

/// Scales a polynomial by the power of a rational; used for factors such as
/// `128 (k+3)(k+4)(k+5)`.
pub fn poly_product(scalar: impl Into<Rat>, factors: &[PolynomialQ]) -> PolynomialQ {
    let mut p = PolynomialQ::constant(scalar.into());
    for f in factors {
        p = &p * f;
    }
    p
}

/// `(a*x + b)` repeated as linear factors; exponent per factor.
pub fn linear_factors(factors: &[(i64, i64, u32)]) -> Vec<PolynomialQ> {
    factors
        .iter()
        .map(|&(a, b, e)| PolynomialQ::linear(a, b).pow(e))
        .collect()
}

/// Power of two as a rational, handling negative exponents.
pub fn two_pow(e: i64) -> Rat {
    pow_rat(&Rat::from(2), e).expect("2^e")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn roots_product_matches_catalog_denominator() {
        // (k+3)(k+4)(k+5)(4k+9)(4k+11) at k = 0 -> 3*4*5*9*11 = 5940
        let p = poly_product(
            1,
            &[
                PolynomialQ::linear(1, 3),
                PolynomialQ::linear(1, 4),
                PolynomialQ::linear(1, 5),
                PolynomialQ::linear(4, 9),
                PolynomialQ::linear(4, 11),
            ],
        );
        assert_eq!(p.eval(&rat(0)), rat(5940));
    }

    #[test]
    fn zero_identity() {
        let p = PolynomialQ::from_ints(&[-2970, -2790, -631, 142, 76, 8]);
        assert_eq!(&PolynomialQ::zero() + &p, p);
        assert_eq!(p.eval(&rat(0)), rat(-2970));
    }

    #[test]
    fn shift_and_compose() {
        let p = PolynomialQ::from_ints(&[1, 2, 3]); // 3k^2 + 2k + 1
        let q = p.shift(&rat(1));
        for k in -4i64..=4 {
            assert_eq!(q.eval(&rat(k)), p.eval(&rat(k + 1)));
        }
        let r = p.compose_linear(&ratio(1, 2), &ratio(-3, 2));
        for k in -4i64..=4 {
            assert_eq!(r.eval(&rat(k)), p.eval(&(ratio(k, 2) - ratio(3, 2))));
        }
    }

    #[test]
    fn division_and_gcd() {
        let a = PolynomialQ::from_roots(&[rat(1), rat(2), rat(3)]);
        let b = PolynomialQ::from_roots(&[rat(2), rat(5)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        let g = a.gcd(&b);
        assert_eq!(g, PolynomialQ::from_roots(&[rat(2)]));
    }

    #[test]
    fn content_and_primitive() {
        let p = PolynomialQ::from_coeffs(vec![ratio(-4, 3), ratio(-8, 9)]);
        let c = p.content();
        assert_eq!(c, ratio(-4, 9));
        assert_eq!(p.primitive_part(), PolynomialQ::from_ints(&[3, 2]));
        assert_eq!(p.primitive_part().scale(&c), p);
    }

    #[test]
    fn integration() {
        // moments of the uniform density on [0,1]
        let one = PolynomialQ::one();
        for m in 0usize..5 {
            let xm = PolynomialQ::x().pow(m as u32);
            let int = (&xm * &one).integrate(&rat(0), &rat(1));
            assert_eq!(int, Rat::from((1u64, (m as u64) + 1)));
        }
    }

    #[test]
    fn display() {
        let p = PolynomialQ::from_ints(&[-2970, -2790, -631, 142, 76, 8]);
        assert_eq!(
            p.to_string(),
            "8*k^5 + 76*k^4 + 142*k^3 - 631*k^2 - 2790*k - 2970"
        );
    }
}
