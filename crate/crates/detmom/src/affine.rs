//! Affine parameter forms `c0 + c_a*a + c_k*k + c_n*n`.
//!
//! Hypergeometric parameters in this domain are affine in the Dyson index
//! `a` and the moment powers `k`, `n` (for example `-5a - 2k - 2n - 1`).
//! An `AffineForm` carries the four rational coefficients symbolically and
//! binds to an exact rational once values are supplied.

use crate::rational::Rat;
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineForm {
    pub c0: Rat,
    pub c_alpha: Rat,
    pub c_k: Rat,
    pub c_n: Rat,
}

/// Values for the three symbols of an [`AffineForm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bindings {
    pub alpha: Rat,
    pub k: Rat,
    pub n: Rat,
}

impl Bindings {
    pub fn new(alpha: impl Into<Rat>, k: impl Into<Rat>, n: impl Into<Rat>) -> Self {
        Bindings {
            alpha: alpha.into(),
            k: k.into(),
            n: n.into(),
        }
    }
}

impl AffineForm {
    pub fn new(
        c0: impl Into<Rat>,
        c_alpha: impl Into<Rat>,
        c_k: impl Into<Rat>,
        c_n: impl Into<Rat>,
    ) -> Self {
        AffineForm {
            c0: c0.into(),
            c_alpha: c_alpha.into(),
            c_k: c_k.into(),
            c_n: c_n.into(),
        }
    }

    pub fn constant(c0: impl Into<Rat>) -> Self {
        Self::new(c0, 0, 0, 0)
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn alpha() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn k() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn n() -> Self {
        Self::new(0, 0, 0, 1)
    }

    pub fn is_constant(&self) -> bool {
        self.c_alpha.cmp0() == std::cmp::Ordering::Equal
            && self.c_k.cmp0() == std::cmp::Ordering::Equal
            && self.c_n.cmp0() == std::cmp::Ordering::Equal
    }

    /// The constant value if the form has no symbol dependence.
    pub fn as_constant(&self) -> Option<&Rat> {
        self.is_constant().then_some(&self.c0)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        AffineForm {
            c0: (&self.c0 * s).into(),
            c_alpha: (&self.c_alpha * s).into(),
            c_k: (&self.c_k * s).into(),
            c_n: (&self.c_n * s).into(),
        }
    }

    /// Exact substitution of the three symbols.
    pub fn bind(&self, b: &Bindings) -> Rat {
        let mut v = self.c0.clone();
        v += Rat::from(&self.c_alpha * &b.alpha);
        v += Rat::from(&self.c_k * &b.k);
        v += Rat::from(&self.c_n * &b.n);
        v
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;
    fn add(self, rhs: &AffineForm) -> AffineForm {
        AffineForm {
            c0: Rat::from(&self.c0 + &rhs.c0),
            c_alpha: Rat::from(&self.c_alpha + &rhs.c_alpha),
            c_k: Rat::from(&self.c_k + &rhs.c_k),
            c_n: Rat::from(&self.c_n + &rhs.c_n),
        }
    }
}

impl Sub for &AffineForm {
    type Output = AffineForm;
    fn sub(self, rhs: &AffineForm) -> AffineForm {
        AffineForm {
            c0: Rat::from(&self.c0 - &rhs.c0),
            c_alpha: Rat::from(&self.c_alpha - &rhs.c_alpha),
            c_k: Rat::from(&self.c_k - &rhs.c_k),
            c_n: Rat::from(&self.c_n - &rhs.c_n),
        }
    }
}

impl Neg for &AffineForm {
    type Output = AffineForm;
    fn neg(self) -> AffineForm {
        AffineForm {
            c0: Rat::from(-&self.c0),
            c_alpha: Rat::from(-&self.c_alpha),
            c_k: Rat::from(-&self.c_k),
            c_n: Rat::from(-&self.c_n),
        }
    }
}

impl fmt::Display for AffineForm {
    /// Serializes as `c0 + c_a*a + c_k*k + c_n*n`, dropping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        let mut term = |f: &mut fmt::Formatter<'_>, c: &Rat, sym: &str| -> fmt::Result {
            if c.cmp0() == std::cmp::Ordering::Equal {
                return Ok(());
            }
            if wrote {
                if c.cmp0() == std::cmp::Ordering::Less {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let a = c.clone().abs();
                if sym.is_empty() {
                    write!(f, "{a}")?;
                } else if a == 1 {
                    write!(f, "{sym}")?;
                } else {
                    write!(f, "{a}*{sym}")?;
                }
            } else if sym.is_empty() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{sym}")?;
            } else if *c == -1 {
                write!(f, "-{sym}")?;
            } else {
                write!(f, "{c}*{sym}")?;
            }
            wrote = true;
            Ok(())
        };
        term(f, &self.c0, "")?;
        term(f, &self.c_alpha, "a")?;
        term(f, &self.c_k, "k")?;
        term(f, &self.c_n, "n")?;
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Rising factorial of a bound affine form.
pub fn pochhammer_affine(p: &AffineForm, m: u32, b: &Bindings) -> Rat {
    crate::rational::pochhammer(&p.bind(b), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn bind_examples() {
        // a + 1/2 at a = 1/2
        let p = AffineForm::new((1, 2), 1, 0, 0);
        let b = Bindings::new(ratio(1, 2), rat(0), rat(0));
        assert_eq!(pochhammer_affine(&p, 1, &b), rat(1));

        // (a+1)_2 at a = 1
        let p = AffineForm::new(1, 1, 0, 0);
        let b = Bindings::new(rat(1), rat(0), rat(0));
        assert_eq!(pochhammer_affine(&p, 2, &b), rat(6));

        // (2k+a+1)_2 at a = 1, k = 1 -> (4)(5)
        let p = AffineForm::new(1, 1, 2, 0);
        let b = Bindings::new(rat(1), rat(1), rat(0));
        assert_eq!(pochhammer_affine(&p, 2, &b), rat(20));
    }

    #[test]
    fn bind_is_ring_homomorphism_on_sums() {
        let b = Bindings::new(ratio(3, 2), ratio(-7, 3), rat(4));
        let p = AffineForm::new((1, 3), -5, 2, (9, 7));
        let q = AffineForm::new(-2, (1, 2), (4, 5), -1);
        assert_eq!((&p + &q).bind(&b), p.bind(&b) + q.bind(&b));
        assert_eq!((&p - &q).bind(&b), p.bind(&b) - q.bind(&b));
        assert_eq!((-&p).bind(&b), -p.bind(&b));
        let s = ratio(5, 9);
        assert_eq!(p.scale(&s).bind(&b), p.bind(&b) * s);
    }

    #[test]
    fn display_compact() {
        let p = AffineForm::new((-1, 4), (-3, 2), -1, -1);
        assert_eq!(p.to_string(), "-1/4 - 3/2*a - k - n");
        assert_eq!(AffineForm::zero().to_string(), "0");
        assert_eq!(AffineForm::alpha().to_string(), "a");
    }
}
