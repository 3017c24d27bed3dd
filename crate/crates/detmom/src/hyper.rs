//! Terminating generalized hypergeometric series with affine parameters.
//!
//! A `HyperSeries` is a pFq carrier: numerator and denominator parameter
//! lists of [`AffineForm`]s plus an exact rational argument. Evaluation is
//! defined only for terminating series — after binding, at least one
//! numerator parameter must be a nonpositive integer. Termination follows the
//! standard convention: the sum stops at the smallest index forced that way;
//! deeper numerator zeros do not resurrect later terms. Evaluation is exact
//! for any rational argument regardless of analytic convergence (the
//! qubit-qutrit construction has argument 729/4).

use crate::affine::{AffineForm, Bindings};
use crate::error::{Error, Result};
use crate::rational::{pochhammer, Rat};
use std::fmt;

#[derive(Debug, Clone)]
pub struct HyperSeries {
    pub num_params: Vec<AffineForm>,
    pub den_params: Vec<AffineForm>,
    pub argument: Rat,
}

impl HyperSeries {
    pub fn new(num_params: Vec<AffineForm>, den_params: Vec<AffineForm>, argument: Rat) -> Self {
        HyperSeries {
            num_params,
            den_params,
            argument,
        }
    }

    /// Sum of denominator parameters minus sum of numerator parameters.
    /// The series is balanced (Saalschutzian) iff this is the constant 1.
    pub fn balance_gap(&self) -> AffineForm {
        let mut gap = AffineForm::zero();
        for d in &self.den_params {
            gap = &gap + d;
        }
        for n in &self.num_params {
            gap = &gap - n;
        }
        gap
    }

    /// Number of parameters with a nonzero alpha coefficient in each list.
    pub fn alpha_count(&self) -> (usize, usize) {
        let count = |ps: &[AffineForm]| {
            ps.iter()
                .filter(|p| p.c_alpha.cmp0() != std::cmp::Ordering::Equal)
                .count()
        };
        (count(&self.num_params), count(&self.den_params))
    }

    /// Termination index after binding: the smallest `-p` over bound
    /// numerator parameters `p` that are nonpositive integers.
    pub fn termination_index(&self, b: &Bindings) -> Result<u32> {
        let mut t: Option<u32> = None;
        for p in &self.num_params {
            let v = p.bind(b);
            if v.is_integer() && v.cmp0() != std::cmp::Ordering::Greater {
                let m = (-v).numer().to_u32().ok_or_else(|| {
                    Error::Parse("termination index exceeds u32".into())
                })?;
                t = Some(t.map_or(m, |cur| cur.min(m)));
            }
        }
        t.ok_or(Error::NotTerminating)
    }

    /// Exact value of the terminating sum
    /// `sum_{j=0..T} [prod (a_i)_j / prod (b_i)_j] z^j / j!`
    /// by term recursion.
    pub fn evaluate_terminating(&self, b: &Bindings) -> Result<Rat> {
        let t = self.termination_index(b)?;
        let num: Vec<Rat> = self.num_params.iter().map(|p| p.bind(b)).collect();
        let den: Vec<Rat> = self.den_params.iter().map(|p| p.bind(b)).collect();
        // a denominator parameter -m with m < T zeroes a Pochhammer while
        // numerator terms are still alive
        for d in &den {
            if d.is_integer() && d.cmp0() != std::cmp::Ordering::Greater {
                let m = (-d.clone()).numer().to_u32().unwrap_or(u32::MAX);
                if m < t {
                    return Err(Error::PoleBeforeTermination {
                        term: m + 1,
                        termination: t,
                    });
                }
            }
        }
        let mut sum = Rat::from(1);
        let mut term = Rat::from(1);
        for j in 0..t {
            // term_{j+1} = term_j * prod(a_i + j) / prod(b_i + j) * z / (j+1)
            for a in &num {
                term *= Rat::from(a + Rat::from(j));
            }
            for d in &den {
                term /= Rat::from(d + Rat::from(j));
            }
            term *= &self.argument;
            term /= Rat::from(j + 1);
            sum += &term;
        }
        Ok(sum)
    }

    /// Direct evaluation computing every term from scratch; the independent
    /// oracle for the term recursion (test use).
    pub fn evaluate_terminating_direct(&self, b: &Bindings) -> Result<Rat> {
        let t = self.termination_index(b)?;
        let num: Vec<Rat> = self.num_params.iter().map(|p| p.bind(b)).collect();
        let den: Vec<Rat> = self.den_params.iter().map(|p| p.bind(b)).collect();
        let mut sum = Rat::from(0);
        let mut factorial = Rat::from(1);
        let mut z_pow = Rat::from(1);
        for j in 0..=t {
            if j > 0 {
                factorial *= Rat::from(j);
                z_pow *= &self.argument;
            }
            let mut term = Rat::from(&z_pow / &factorial);
            for a in &num {
                term *= pochhammer(a, j);
            }
            for d in &den {
                let p = pochhammer(d, j);
                if p.cmp0() == std::cmp::Ordering::Equal {
                    return Err(Error::PoleBeforeTermination {
                        term: j,
                        termination: t,
                    });
                }
                term /= p;
            }
            sum += term;
        }
        Ok(sum)
    }

    fn sorted(params: &[AffineForm]) -> Vec<&AffineForm> {
        let mut v: Vec<&AffineForm> = params.iter().collect();
        v.sort();
        v
    }
}

/// Structural equality, order-insensitive on each parameter list.
impl PartialEq for HyperSeries {
    fn eq(&self, other: &Self) -> bool {
        self.argument == other.argument
            && Self::sorted(&self.num_params) == Self::sorted(&other.num_params)
            && Self::sorted(&self.den_params) == Self::sorted(&other.den_params)
    }
}

impl Eq for HyperSeries {}

impl fmt::Display for HyperSeries {
    /// Structured text form: every affine parameter as a
    /// `c0 + c_a*a + c_k*k + c_n*n` string plus the rational argument.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}F{}(z = {})",
            self.num_params.len(),
            self.den_params.len(),
            self.argument
        )?;
        writeln!(f, "  numerator:")?;
        for p in &self.num_params {
            writeln!(f, "    {p}")?;
        }
        writeln!(f, "  denominator:")?;
        for p in &self.den_params {
            writeln!(f, "    {p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn f21(b: i64, c: i64, z: Rat) -> HyperSeries {
        HyperSeries::new(
            vec![AffineForm::constant(-1), AffineForm::constant(b)],
            vec![AffineForm::constant(c)],
            z,
        )
    }

    fn bind0() -> Bindings {
        Bindings::new(0, 0, 0)
    }

    #[test]
    fn two_f_one_single_step() {
        // 2F1(-1, b; c; z) = 1 - b z / c
        let s = f21(1, 2, rat(1));
        assert_eq!(s.evaluate_terminating(&bind0()).unwrap(), ratio(1, 2));
    }

    #[test]
    fn z_zero_gives_one() {
        let s = HyperSeries::new(
            vec![AffineForm::constant(-5), AffineForm::constant((7, 3))],
            vec![AffineForm::constant((1, 2))],
            rat(0),
        );
        assert_eq!(s.evaluate_terminating(&bind0()).unwrap(), rat(1));
    }

    #[test]
    fn not_terminating() {
        let s = HyperSeries::new(
            vec![AffineForm::constant((1, 2))],
            vec![AffineForm::constant(2)],
            rat(1),
        );
        assert_eq!(s.evaluate_terminating(&bind0()), Err(Error::NotTerminating));
    }

    #[test]
    fn pole_before_termination() {
        // denominator parameter -1 dies at term 2 while -n = -3 runs to 3
        let s = HyperSeries::new(
            vec![AffineForm::constant(-3), AffineForm::constant(1)],
            vec![AffineForm::constant(-1)],
            rat(1),
        );
        assert!(matches!(
            s.evaluate_terminating(&bind0()),
            Err(Error::PoleBeforeTermination { .. })
        ));
        // pole exactly at the termination boundary is fine: -3 in the
        // denominator first vanishes at term 4 > T = 3
        let s = HyperSeries::new(
            vec![AffineForm::constant(-3), AffineForm::constant(1)],
            vec![AffineForm::constant(-3)],
            rat(1),
        );
        assert!(s.evaluate_terminating(&bind0()).is_ok());
    }

    #[test]
    fn recursion_matches_direct_evaluation() {
        let b = Bindings::new(ratio(1, 2), rat(3), rat(2));
        let s = HyperSeries::new(
            vec![
                AffineForm::n().scale(&rat(-1)),
                AffineForm::k().scale(&rat(-1)),
                AffineForm::new((1, 2), 1, 0, 0),
            ],
            vec![AffineForm::new(1, 2, 1, 0), AffineForm::new((5, 4), 0, 0, 1)],
            ratio(729, 4),
        );
        assert_eq!(
            s.evaluate_terminating(&b).unwrap(),
            s.evaluate_terminating_direct(&b).unwrap()
        );
    }

    #[test]
    fn permutation_and_cancellation_invariance() {
        let b = Bindings::new(rat(1), rat(2), rat(2));
        let mk = |extra: Option<AffineForm>| {
            let mut num = vec![
                AffineForm::n().scale(&rat(-1)),
                AffineForm::new(0, 1, 0, 0),
                AffineForm::new((1, 2), 1, 0, 0),
            ];
            let mut den = vec![AffineForm::new(2, 1, 1, 0), AffineForm::new((7, 2), 0, 0, 1)];
            if let Some(e) = extra {
                num.push(e.clone());
                den.push(e);
            }
            HyperSeries::new(num, den, ratio(3, 7))
        };
        let base = mk(None).evaluate_terminating(&b).unwrap();
        // permute
        let mut permuted = mk(None);
        permuted.num_params.reverse();
        permuted.den_params.reverse();
        assert_eq!(permuted.evaluate_terminating(&b).unwrap(), base);
        assert_eq!(permuted, mk(None));
        // append the same parameter to both lists
        let padded = mk(Some(AffineForm::new((9, 2), 1, 1, 0)));
        assert_eq!(padded.evaluate_terminating(&b).unwrap(), base);
    }

    #[test]
    fn termination_uses_smallest_forced_index() {
        // numerator parameters 0 and -4: the 0 stops the series immediately
        let s = HyperSeries::new(
            vec![AffineForm::constant(0), AffineForm::constant(-4)],
            vec![AffineForm::constant((3, 2))],
            rat(1),
        );
        assert_eq!(s.termination_index(&bind0()).unwrap(), 0);
        assert_eq!(s.evaluate_terminating(&bind0()).unwrap(), rat(1));
    }
}
