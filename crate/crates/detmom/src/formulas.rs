//! The catalog of closed-form moment expressions: determinant moments under
//! the Hilbert-Schmidt and Bures measures, the n = 1 ratio formulas for the
//! two-qubit family and the 6x6 qubit-qutrit family, their reduced forms,
//! the F2 utility closed forms, and the degree-10 two-rebit n = 2 result.
//!
//! Everything here is exact. Powers of the determinant are written `k`
//! (rational, so proxy values such as 1e-20 are handled exactly) and powers
//! of the partial-transpose determinant `n` (nonnegative integer).

use crate::affine::AffineForm;
use crate::error::{Error, Result};
use crate::hyper::HyperSeries;
use crate::poly::{poly_product, two_pow, PolynomialQ};
use crate::ratfun::RationalFunctionQ;
use crate::rational::{as_nonneg_integer, pochhammer, rat, ratio, Rat};

// ---------------------------------------------------------------------------
// scenarios
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// 4x4 density matrices: rebit (alpha = 1/2), qubit (1), quaternionic (2), ...
    GeneralizedTwoQubit,
    /// 6x6 (2x3-dimensional) systems; Hilbert-Schmidt only.
    QubitQutrit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    HilbertSchmidt,
    Bures,
}

/// A measure/family pair with its Dyson-index-like parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub family: Family,
    pub measure: Measure,
    pub alpha: Rat,
}

impl Scenario {
    pub fn new(family: Family, measure: Measure, alpha: impl Into<Rat>) -> Result<Self> {
        let alpha = alpha.into();
        if alpha.cmp0() == std::cmp::Ordering::Less {
            return Err(Error::UnsupportedAlpha(alpha.to_string()));
        }
        if family == Family::QubitQutrit && measure == Measure::Bures {
            return Err(Error::UnsupportedScenario(
                "qubit-qutrit is supported under Hilbert-Schmidt only".into(),
            ));
        }
        Ok(Scenario {
            family,
            measure,
            alpha,
        })
    }

    pub fn bures(alpha: impl Into<Rat>) -> Self {
        Self::new(Family::GeneralizedTwoQubit, Measure::Bures, alpha).unwrap()
    }

    pub fn hs_two_qubit(alpha: impl Into<Rat>) -> Self {
        Self::new(Family::GeneralizedTwoQubit, Measure::HilbertSchmidt, alpha).unwrap()
    }

    pub fn qubit_qutrit(alpha: impl Into<Rat>) -> Result<Self> {
        Self::new(Family::QubitQutrit, Measure::HilbertSchmidt, alpha)
    }
}

/// Moment query: power `n` of the partial-transpose determinant and power
/// `k` of the determinant itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentQuery {
    pub n: u32,
    pub k: Rat,
}

fn require_nonneg_integer(k: &Rat) -> Result<u32> {
    as_nonneg_integer(k).ok_or_else(|| Error::NonIntegerPower(k.to_string()))
}

// ---------------------------------------------------------------------------
// determinant moments <|rho|^k> and the shifted ratio products R(n, k)
// ---------------------------------------------------------------------------

/// `<|rho|^k>` for the scenario, exact; `k` must be a nonnegative integer
/// (for rational proxy powers use [`r_value`], which only ever needs integer
/// offsets of Pochhammer products).
pub fn det_moment(s: &Scenario, k: &Rat) -> Result<Rat> {
    let k = require_nonneg_integer(k)?;
    let a = &s.alpha;
    let v = match (s.family, s.measure) {
        (Family::GeneralizedTwoQubit, Measure::Bures) => {
            let num = pochhammer(&ratio(1, 2), k)
                * pochhammer(&(a.clone() + ratio(1, 2)), k)
                * pochhammer(&(a.clone() + 1), 2 * k);
            let den = two_pow(8 * k as i64)
                * pochhammer(&(Rat::from(2 * a) + 1), k)
                * pochhammer(&(Rat::from(3 * a) + 1), k)
                * pochhammer(&(Rat::from(3 * a) + ratio(3, 2)), 2 * k);
            num / den
        }
        (Family::GeneralizedTwoQubit, Measure::HilbertSchmidt) => {
            let num = pochhammer(&rat(1), k)
                * pochhammer(&(a.clone() + 1), k)
                * pochhammer(&(Rat::from(2 * a) + 1), k);
            let den = two_pow(6 * k as i64)
                * pochhammer(&(Rat::from(3 * a) + ratio(3, 2)), k)
                * pochhammer(&(Rat::from(6 * a) + ratio(5, 2)), 2 * k);
            num / den
        }
        (Family::QubitQutrit, Measure::HilbertSchmidt) => {
            let mut num = Rat::from(1);
            for j in 0..=5i64 {
                num *= pochhammer(&(Rat::from(j * a) + 1), k);
            }
            let den = pochhammer(&(Rat::from(30 * a) + 6), 6 * k);
            num / den
        }
        (Family::QubitQutrit, Measure::Bures) => unreachable!("rejected at construction"),
    };
    Ok(v)
}

/// `R(n, k) = <|rho|^{n+k}> / <|rho|^k>`, evaluated as a finite product of
/// Pochhammer factors with base offset `k`; exact for any rational `k`.
pub fn r_value(s: &Scenario, n: u32, k: &Rat) -> Result<Rat> {
    let a = &s.alpha;
    let v = match (s.family, s.measure) {
        (Family::GeneralizedTwoQubit, Measure::Bures) => {
            let num = pochhammer(&(k.clone() + ratio(1, 2)), n)
                * pochhammer(&(k.clone() + a + ratio(1, 2)), n)
                * pochhammer(&(Rat::from(2 * k) + a + 1), 2 * n);
            let den = two_pow(8 * n as i64)
                * pochhammer(&(k.clone() + Rat::from(2 * a) + 1), n)
                * pochhammer(&(k.clone() + Rat::from(3 * a) + 1), n)
                * pochhammer(&(Rat::from(2 * k) + Rat::from(3 * a) + ratio(3, 2)), 2 * n);
            num / den
        }
        (Family::GeneralizedTwoQubit, Measure::HilbertSchmidt) => {
            let num = pochhammer(&(k.clone() + 1), n)
                * pochhammer(&(k.clone() + a + 1), n)
                * pochhammer(&(k.clone() + Rat::from(2 * a) + 1), n);
            let den = two_pow(6 * n as i64)
                * pochhammer(&(k.clone() + Rat::from(3 * a) + ratio(3, 2)), n)
                * pochhammer(&(Rat::from(2 * k) + Rat::from(6 * a) + ratio(5, 2)), 2 * n);
            num / den
        }
        (Family::QubitQutrit, Measure::HilbertSchmidt) => {
            let mut num = Rat::from(1);
            for j in 0..=5i64 {
                num *= pochhammer(&(k.clone() + Rat::from(j * a) + 1), n);
            }
            let den = pochhammer(&(Rat::from(6 * k) + Rat::from(30 * a) + 6), 6 * n);
            num / den
        }
        (Family::QubitQutrit, Measure::Bures) => unreachable!("rejected at construction"),
    };
    Ok(v)
}

/// The non-hypergeometric prefactor paired with each scenario's
/// hypergeometric moment form. Written out literally; it coincides with
/// [`r_value`] in every scenario (asserted in tests), which is why the
/// hybrid series always starts at 1.
pub fn prefactor(s: &Scenario, n: u32, k: &Rat) -> Result<Rat> {
    let a = &s.alpha;
    let v = match (s.family, s.measure) {
        (Family::GeneralizedTwoQubit, Measure::Bures) => {
            // (k+1/2)_n (k+a+1/2)_n (2k+a+1)_{2n}
            //   / [2^{8n} (k+2a+1)_n (k+3a+1)_n (2k+3a+3/2)_{2n}]
            let num = pochhammer(&(k.clone() + ratio(1, 2)), n)
                * pochhammer(&(k.clone() + a + ratio(1, 2)), n)
                * pochhammer(&(Rat::from(2 * k) + a + 1), 2 * n);
            let den = two_pow(8 * n as i64)
                * pochhammer(&(k.clone() + Rat::from(2 * a) + 1), n)
                * pochhammer(&(k.clone() + Rat::from(3 * a) + 1), n)
                * pochhammer(&(Rat::from(2 * k) + Rat::from(3 * a) + ratio(3, 2)), 2 * n);
            num / den
        }
        (Family::GeneralizedTwoQubit, Measure::HilbertSchmidt) => {
            // (k+1)_n (k+1+a)_n (k+1+2a)_n / [2^{6n} (k+3a+3/2)_n (2k+6a+5/2)_{2n}]
            let num = pochhammer(&(k.clone() + 1), n)
                * pochhammer(&(k.clone() + 1 + a.clone()), n)
                * pochhammer(&(k.clone() + 1 + Rat::from(2 * a)), n);
            let den = two_pow(6 * n as i64)
                * pochhammer(&(k.clone() + Rat::from(3 * a) + ratio(3, 2)), n)
                * pochhammer(&(Rat::from(2 * k) + Rat::from(6 * a) + ratio(5, 2)), 2 * n);
            num / den
        }
        (Family::QubitQutrit, Measure::HilbertSchmidt) => {
            // (k+1)_n (k+a+1)_n ... (k+5a+1)_n / (6k+30a+6)_{6n}
            let mut num = Rat::from(1);
            for j in 0..=5i64 {
                num *= pochhammer(&(k.clone() + Rat::from(j * a) + 1), n);
            }
            let den = pochhammer(&(Rat::from(6 * k) + Rat::from(30 * a) + 6), 6 * n);
            num / den
        }
        (Family::QubitQutrit, Measure::Bures) => unreachable!("rejected at construction"),
    };
    Ok(v)
}

// ---------------------------------------------------------------------------
// hypergeometric moment forms
// ---------------------------------------------------------------------------

/// The 5F4 series of the Hilbert-Schmidt two-qubit moment formula.
pub fn hs_5f4_series() -> HyperSeries {
    HyperSeries::new(
        vec![
            AffineForm::new(0, 0, 0, -1),              // -n
            AffineForm::new(0, 0, -1, 0),              // -k
            AffineForm::alpha(),                       // a
            AffineForm::new((1, 2), 1, 0, 0),          // a + 1/2
            AffineForm::new(-1, -5, -2, -2),           // -2k - 2n - 1 - 5a
        ],
        vec![
            AffineForm::new(0, -1, -1, -1),            // -k - n - a
            AffineForm::new(0, -2, -1, -1),            // -k - n - 2a
            AffineForm::new(0, 0, (-1, 2), (-1, 2)),   // -(k+n)/2
            AffineForm::new((1, 2), 0, (-1, 2), (-1, 2)), // -(k+n-1)/2
        ],
        rat(1),
    )
}

/// The 6F5 series of the trial Bures expression.
pub fn trial_6f5_series() -> HyperSeries {
    HyperSeries::new(
        vec![
            AffineForm::new(0, 0, 0, -1),              // -n
            AffineForm::new(0, 0, -1, 0),              // -k
            AffineForm::alpha(),                       // a
            AffineForm::new((1, 2), 1, 0, 0),          // a + 1/2
            AffineForm::new(-4, -8, -2, -2),           // -2k - 2n - 4 - 8a
            AffineForm::new(-3, -2, -2, -2),           // -2k - 2n - 3 - 2a
        ],
        vec![
            AffineForm::new(0, 0, -1, -1),             // -k - n
            AffineForm::new(0, -4, -1, -1),            // -k - n - 4a
            AffineForm::new((1, 4), 0, (-1, 2), (-1, 2)), // -(k+n)/2 + 1/4
            AffineForm::new((1, 2), 0, (-1, 2), (-1, 2)), // -(k+n)/2 + 1/2
            AffineForm::new(-5, 0, -2, -2),            // -2k - 2n - 5
        ],
        rat(1),
    )
}

fn bind(alpha: &Rat, n: u32, k: &Rat) -> crate::affine::Bindings {
    crate::affine::Bindings::new(alpha.clone(), k.clone(), Rat::from(n))
}

/// `<|rho^PT|^n |rho|^k> / <|rho|^k>` under Hilbert-Schmidt: prefactor
/// times the terminating 5F4.
pub fn hs_ratio(alpha: &Rat, n: u32, k: &Rat) -> Result<Rat> {
    let s = Scenario::hs_two_qubit(alpha.clone());
    let pf = prefactor(&s, n, k)?;
    let series = hs_5f4_series().evaluate_terminating(&bind(alpha, n, k))?;
    Ok(pf * series)
}

/// The trial Bures moment expression: Bures prefactor times the 6F5.
/// Reproduces the classical reduction at alpha = 0 and the n = 1 formulas up
/// to their two lowest-degree numerator terms.
pub fn trial_bures_ratio(alpha: &Rat, n: u32, k: &Rat) -> Result<Rat> {
    let s = Scenario::bures(alpha.clone());
    let pf = prefactor(&s, n, k)?;
    let series = trial_6f5_series().evaluate_terminating(&bind(alpha, n, k))?;
    Ok(pf * series)
}

// ---------------------------------------------------------------------------
// the n = 1 Bures catalog (two-qubit family)
// ---------------------------------------------------------------------------

/// Corrected n = 1 two-qubit Bures ratio: degree-5 over degree-5, with
/// denominator `128 (k+3)(k+4)(k+5)(4k+9)(4k+11)`.
pub fn bures_qubit_ratio_n1_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-2970, -2790, -631, 142, 76, 8]),
        PolynomialQ::from_ints(&[760320, 1209984, 756224, 231808, 34816, 2048]),
    )
}

/// Corrected n = 1 two-rebit Bures ratio, denominator
/// `2048 (k+2)^2 (2k+3)(2k+5)(2k+7)`.
pub fn bures_rebit_ratio_n1_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-2663, -3351, -644, 812, 448, 64]),
        PolynomialQ::from_ints(&[860160, 2023424, 1869824, 847872, 188416, 16384]),
    )
}

/// The off-by-one-index two-qubit form that a sequence fit produces when the
/// first sample is fed in as k = 1; shifting `k -> k+1` recovers the
/// corrected formula.
pub fn bures_qubit_ratio_n1_misindexed_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-885, -1366, -681, -82, 36, 8]),
        PolynomialQ::from_ints(&[840, 2062, 1947, 883, 192, 16]).scale(&rat(128)),
    )
}

/// The off-by-one-index two-rebit form; it additionally lacks the
/// `F0(k+1)/F0(k)` rescaling and has a pole at k = 0.
pub fn bures_rebit_ratio_n1_misindexed_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-384, -1099, -1032, -340, 128, 64]),
        poly_product(
            1,
            &[
                PolynomialQ::x(),
                PolynomialQ::from_ints(&[-1, -2, 8]),
                PolynomialQ::from_ints(&[-5, 18, 8]),
            ],
        ),
    )
}

/// Exact n = 1 Bures ratio for alpha in {1/2, 1}.
pub fn bures_ratio_n1(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let f = if *alpha == ratio(1, 2) {
        bures_rebit_ratio_n1_fn()
    } else if *alpha == 1 {
        bures_qubit_ratio_n1_fn()
    } else {
        return Err(Error::UnsupportedAlpha(alpha.to_string()));
    };
    f.eval(k)
}

/// Classical (alpha = 0) reductions, where `|rho^PT| = |rho|`.
pub fn classical_ratio(measure: Measure, k: &Rat) -> Result<Rat> {
    let f = match measure {
        Measure::HilbertSchmidt => classical_hs_ratio_fn(),
        Measure::Bures => classical_bures_ratio_fn(),
    };
    f.eval(k)
}

/// `(k+1)^3 / (8 (2k+3)(4k+5)(4k+7))`
pub fn classical_hs_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[1, 3, 3, 1]),
        poly_product(
            8,
            &[
                PolynomialQ::linear(2, 3),
                PolynomialQ::linear(4, 5),
                PolynomialQ::linear(4, 7),
            ],
        ),
    )
}

/// `(2k+1)^3 / (128 (k+1)(4k+3)(4k+5))`
pub fn classical_bures_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[1, 6, 12, 8]),
        poly_product(
            128,
            &[
                PolynomialQ::linear(1, 1),
                PolynomialQ::linear(4, 3),
                PolynomialQ::linear(4, 5),
            ],
        ),
    )
}

/// What the trial 6F5 expression yields at n = 1, alpha = 1: the corrected
/// two-qubit formula except for the two lowest-degree numerator terms.
pub fn trial_qubit_fit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-1467, -2028, -631, 142, 76, 8]),
        PolynomialQ::from_ints(&[760320, 1209984, 756224, 231808, 34816, 2048]),
    )
}

/// The alpha = 1/2 analogue of [`trial_qubit_fit_fn`].
pub fn trial_rebit_fit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-1095, -2231, -644, 812, 448, 64]),
        PolynomialQ::from_ints(&[860160, 2023424, 1869824, 847872, 188416, 16384]),
    )
}

/// The two-qubit n = 1 ratio after the prefactor is factored out:
/// numerator of the corrected formula over `(k+1)(k+5)(2k+1)(2k+3)^2`.
pub fn reduced_qubit_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-2970, -2790, -631, 142, 76, 8]),
        PolynomialQ::from_ints(&[45, 204, 329, 238, 76, 8]),
    )
}

/// The two-rebit analogue of [`reduced_qubit_ratio_fn`].
pub fn reduced_rebit_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-2663, -3351, -644, 812, 448, 64]),
        PolynomialQ::from_ints(&[105, 569, 1148, 1068, 448, 64]),
    )
}

/// The single expression jointly covering both reduced n = 1 ratios:
/// at alpha = 1 it equals [`reduced_qubit_ratio_fn`], at alpha = 1/2
/// [`reduced_rebit_ratio_fn`].
pub fn joint_j(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let a = alpha;
    let k1 = Rat::from(k + rat(1));
    let twok1 = Rat::from(2 * k) + 1;
    let a2k2 = a.clone() + Rat::from(2 * k) + 2;
    let a3k2 = Rat::from(3 * a) + k + rat(2);
    let a3k0 = Rat::from(3 * a) + Rat::from(2 * k);
    for d in [&k1, &twok1, &a2k2, &a3k2, &a3k0] {
        if d.cmp0() == std::cmp::Ordering::Equal {
            return Err(Error::Pole);
        }
    }
    let mut t1num = a.clone();
    t1num *= Rat::from(2 * a) + 1;
    t1num *= Rat::from(4 * a) - 1;
    t1num *= Rat::from(4 * a) + 1;
    let mut t1den = k1.clone();
    t1den *= &twok1;
    t1den *= &a2k2;
    t1den *= &a3k2;
    t1den *= &a3k0;
    let mut t2num = Rat::from(2 * a);
    t2num *= Rat::from(2 * a) + 1;
    t2num *= Rat::from(4 * a) + Rat::from(4 * k) + 5;
    t2num *= Rat::from(8 * a) + Rat::from(4 * k) + 3;
    let mut t2den = k1;
    t2den *= twok1;
    t2den *= a2k2;
    t2den *= a3k0;
    Ok(-(t1num / t1den) - (t2num / t2den) + 1)
}

// ---------------------------------------------------------------------------
// F2 closed forms (Bures, n = 1) and their generators
// ---------------------------------------------------------------------------

/// Generator of the n = 1 Bures F2 numerators:
/// `(1/27)(-7466a - 32(5a-2)(6a+3k+4)^3 + 6(569a-260)(6a+3k+4) + 3521)`.
pub fn num_alpha(alpha: &Rat, k: &Rat) -> Rat {
    let a = alpha;
    let u = Rat::from(6 * a) + Rat::from(3 * k) + 4;
    let u3 = Rat::from(&u * &u) * &u;
    let v = Rat::from(-7466 * a)
        - Rat::from(32) * (Rat::from(5 * a) - 2) * u3
        + Rat::from(6) * (Rat::from(569 * a) - 260) * u
        + 3521;
    v / 27
}

/// Generator of the n = 1 Bures F2 denominators:
/// `128 a (2a+k+1)(3a+k+1)(3a+k+2)(6a+4k+3)(6a+4k+5)`.
pub fn den_alpha(alpha: &Rat, k: &Rat) -> Rat {
    let a = alpha;
    Rat::from(128 * a)
        * (Rat::from(2 * a) + k + rat(1))
        * (Rat::from(3 * a) + k + rat(1))
        * (Rat::from(3 * a) + k + rat(2))
        * (Rat::from(6 * a) + Rat::from(4 * k) + 3)
        * (Rat::from(6 * a) + Rat::from(4 * k) + 5)
}

/// `F2(1, k, alpha) = <|rho|^k (|rho^PT| - |rho|)> / <|rho|^k>` under Bures:
/// the ratio of the two generators above. At alpha = 1 this is the
/// degree-3-over-degree-5 two-qubit closed form, at alpha = 1/2 the
/// two-rebit one.
pub fn f2_bures_n1(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let d = den_alpha(alpha, k);
    if d.cmp0() == std::cmp::Ordering::Equal {
        return Err(Error::Pole);
    }
    Ok(num_alpha(alpha, k) / d)
}

/// The two-qubit F2 closed form `(-96k^3 - 960k^2 - 2994k - 3015) / (...)`.
pub fn f2_bures_qubit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-3015, -2994, -960, -96]),
        PolynomialQ::from_ints(&[760320, 1209984, 756224, 231808, 34816, 2048]),
    )
}

/// The two-rebit F2 closed form `(-16k^3 - 112k^2 - 245k - 173) / (...)`.
pub fn f2_bures_rebit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-173, -245, -112, -16]),
        PolynomialQ::from_ints(&[53760, 126464, 116864, 52992, 11776, 1024]),
    )
}

/// Hilbert-Schmidt F2 in Pochhammer form, valid for every n:
/// `2^{-6n} (a)_n (a+1/2)_n (-2k-2n-5a-1)_n
///    / [(k+3a+5/4)_n (k+3a+3/2)_n (k+3a+7/4)_n]`.
pub fn f2_hs(alpha: &Rat, n: u32, k: &Rat) -> Rat {
    let a = alpha;
    let num = pochhammer(a, n)
        * pochhammer(&(a.clone() + ratio(1, 2)), n)
        * pochhammer(
            &(Rat::from(-2 * k) - Rat::from(2 * (n as i64)) - Rat::from(5 * a) - 1),
            n,
        );
    let den = two_pow(6 * n as i64)
        * pochhammer(&(k.clone() + Rat::from(3 * a) + ratio(5, 4)), n)
        * pochhammer(&(k.clone() + Rat::from(3 * a) + ratio(3, 2)), n)
        * pochhammer(&(k.clone() + Rat::from(3 * a) + ratio(7, 4)), n);
    num / den
}

// ---------------------------------------------------------------------------
// qubit-qutrit (6x6) n = 1 catalog
// ---------------------------------------------------------------------------

/// Rebit-retrit (alpha = 1/2) n = 1 ratio: degree-5 numerator over
/// `576 (k+4)(3k+11)(3k+13)(6k+23)(6k+25)`.
pub fn qq_rebit_retrit_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-1170, -1149, -220, 95, 40, 4]),
        poly_product(
            576,
            &[
                PolynomialQ::linear(1, 4),
                PolynomialQ::linear(3, 11),
                PolynomialQ::linear(3, 13),
                PolynomialQ::linear(6, 23),
                PolynomialQ::linear(6, 25),
            ],
        ),
    )
}

/// Qubit-qutrit (alpha = 1) n = 1 ratio: degree-5 numerator over
/// `72 (2k+13)(3k+19)(3k+20)(6k+37)(6k+41)`.
pub fn qq_qubit_qutrit_ratio_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-3840, -2558, -423, 37, 15, 1]),
        poly_product(
            72,
            &[
                PolynomialQ::linear(2, 13),
                PolynomialQ::linear(3, 19),
                PolynomialQ::linear(3, 20),
                PolynomialQ::linear(6, 37),
                PolynomialQ::linear(6, 41),
            ],
        ),
    )
}

/// The considerably simpler form left after dividing out the 6x6 prefactor,
/// alpha = 1/2: `(4k^3 + 20k^2 - 29k - 195) / (4k^3 + 20k^2 + 31k + 15)`.
pub fn qq_rebit_retrit_reduced_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-195, -29, 20, 4]),
        PolynomialQ::from_ints(&[15, 31, 20, 4]),
    )
}

/// alpha = 1 analogue: `(k^3 + 7k^2 - 34k - 256) / (k^3 + 7k^2 + 14k + 8)`.
pub fn qq_qubit_qutrit_reduced_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-256, -34, 7, 1]),
        PolynomialQ::from_ints(&[8, 14, 7, 1]),
    )
}

pub fn qq_ratio_n1(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let f = if *alpha == ratio(1, 2) {
        qq_rebit_retrit_ratio_fn()
    } else if *alpha == 1 {
        qq_qubit_qutrit_ratio_fn()
    } else {
        return Err(Error::UnsupportedAlpha(alpha.to_string()));
    };
    f.eval(k)
}

pub fn qq_simplified_n1(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let f = if *alpha == ratio(1, 2) {
        qq_rebit_retrit_reduced_fn()
    } else if *alpha == 1 {
        qq_qubit_qutrit_reduced_fn()
    } else {
        return Err(Error::UnsupportedAlpha(alpha.to_string()));
    };
    f.eval(k)
}

/// F2 for the 6x6 case at n = 1, alpha = 1/2:
/// `-5(k+2)(k+3)(2k+7) / (96 (k+4)(3k+11)(3k+13)(6k+23)(6k+25))`.
pub fn f2_qq_rebit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[-210, -235, -85, -10]),
        poly_product(
            96,
            &[
                PolynomialQ::linear(1, 4),
                PolynomialQ::linear(3, 11),
                PolynomialQ::linear(3, 13),
                PolynomialQ::linear(6, 23),
                PolynomialQ::linear(6, 25),
            ],
        ),
    )
}

/// F2 for the 6x6 case at n = 1, alpha = 1:
/// `(k(4k^2+54k+211)+330) / (6 (2k+13)(3k+19)(3k+20)(6k+37)(6k+41))`.
pub fn f2_qq_qubit_fn() -> RationalFunctionQ {
    RationalFunctionQ::new(
        PolynomialQ::from_ints(&[330, 211, 54, 4]),
        poly_product(
            6,
            &[
                PolynomialQ::linear(2, 13),
                PolynomialQ::linear(3, 19),
                PolynomialQ::linear(3, 20),
                PolynomialQ::linear(6, 37),
                PolynomialQ::linear(6, 41),
            ],
        ),
    )
}

pub fn f2_qq_n1(alpha: &Rat, k: &Rat) -> Result<Rat> {
    let f = if *alpha == ratio(1, 2) {
        f2_qq_rebit_fn()
    } else if *alpha == 1 {
        f2_qq_qubit_fn()
    } else {
        return Err(Error::UnsupportedAlpha(alpha.to_string()));
    };
    f.eval(k)
}

// ---------------------------------------------------------------------------
// the 8F12-based F2 candidate
// ---------------------------------------------------------------------------

/// Candidate for the Bures `F2(n, k, alpha)`: the rising factorial of
/// `num(alpha)` with `k -> k+n-1`, over `2^{7n}` times the rising factorials
/// of the six factors of `den(alpha)/(128 alpha)` together with `alpha`
/// itself. Reduces to `num/den` at n = 1.
pub fn candidate_f2_8f12(alpha: &Rat, n: u32, k: &Rat) -> Result<Rat> {
    if n == 0 {
        return Ok(rat(1));
    }
    let a = alpha;
    let k_shift = k.clone() + Rat::from(n as i64 - 1);
    let num_base = num_alpha(alpha, &k_shift);
    let num = pochhammer(&num_base, n);
    let den = two_pow(7 * n as i64)
        * pochhammer(a, n)
        * pochhammer(&(Rat::from(2 * a) + k + rat(1)), n)
        * pochhammer(&(Rat::from(3 * a) + k + rat(1)), n)
        * pochhammer(&(Rat::from(3 * a) + k + rat(2)), n)
        * pochhammer(&(Rat::from(6 * a) + Rat::from(4 * k) + 3), n)
        * pochhammer(&(Rat::from(6 * a) + Rat::from(4 * k) + 5), n);
    if den.cmp0() == std::cmp::Ordering::Equal {
        return Err(Error::Pole);
    }
    Ok(num / den)
}

/// Display structure of the 8F12 function that the candidate produces under
/// the utility summation: seven affine numerator parameters (the eighth is
/// the quartic of [`quartic_numerator_term`]), twelve denominator
/// parameters, argument `3^6 / 2^15`.
pub fn candidate_8f12_structure() -> (Vec<AffineForm>, Vec<AffineForm>, Rat) {
    let base = AffineForm::new(0, -2, (-4, 3), (-4, 3)); // -2a - 4k/3 - 4n/3
    let num = vec![
        &base + &AffineForm::constant((-4, 3)),
        &base + &AffineForm::constant(-1),
        &base + &AffineForm::constant((-2, 3)),
        &base + &AffineForm::constant((-2, 3)),
        &base + &AffineForm::constant((-1, 3)),
        base.clone(),
        AffineForm::new(0, 0, 0, -1),
    ];
    let kn = AffineForm::new(0, 0, -1, -1); // -k - n
    let den = vec![
        AffineForm::alpha(),
        &kn + &AffineForm::constant((1, 2)),
        &(&kn + &AffineForm::constant(-1)) + &AffineForm::new(0, -3, 0, 0),
        &(&kn + &AffineForm::constant(-1)) + &AffineForm::new(0, (-3, 2), 0, 0),
        &(&kn + &AffineForm::constant((-3, 4))) + &AffineForm::new(0, (-3, 2), 0, 0),
        &(&kn + &AffineForm::constant((-1, 2))) + &AffineForm::new(0, (-3, 2), 0, 0),
        &(&kn + &AffineForm::constant((-1, 2))) + &AffineForm::new(0, (-3, 2), 0, 0),
        &(&kn + &AffineForm::constant((-1, 4))) + &AffineForm::new(0, (-3, 2), 0, 0),
        &kn + &AffineForm::new(0, (-3, 2), 0, 0),
        &(&kn + &AffineForm::constant((1, 2))) + &AffineForm::new(0, -1, 0, 0),
        &kn + &AffineForm::new(0, (-1, 2), 0, 0),
        &(&kn + &AffineForm::constant((1, 2))) + &AffineForm::new(0, (-1, 2), 0, 0),
    ];
    (num, den, ratio(729, 32768))
}

/// The quartic eighth numerator term of the 8F12: a thirty-summand
/// polynomial in alpha, k, n, stored explicitly (it is not affine).
pub fn quartic_numerator_term(alpha: &Rat, k: &Rat, n: &Rat) -> Rat {
    let a = alpha;
    let terms: [(i64, u32, u32, u32); 30] = [
        // (coefficient, alpha power, k power, n power)
        (-1280, 4, 0, 0),
        (-128, 3, 0, 0),
        (908, 2, 0, 0),
        (-460, 1, 0, 0),
        (-160, 1, 3, 0),
        (64, 0, 3, 0),
        (-960, 2, 2, 0),
        (224, 1, 2, 0),
        (-480, 1, 2, 1),
        (192, 0, 2, 1),
        (64, 0, 2, 0),
        (-1920, 3, 1, 0),
        (128, 2, 1, 0),
        (582, 1, 1, 0),
        (-480, 1, 1, 2),
        (192, 0, 1, 2),
        (-1920, 2, 1, 1),
        (448, 1, 1, 1),
        (128, 0, 1, 1),
        (-152, 0, 1, 0),
        (-160, 1, 0, 3),
        (64, 0, 0, 3),
        (-960, 2, 0, 2),
        (224, 1, 0, 2),
        (64, 0, 0, 2),
        (-1920, 3, 0, 1),
        (128, 2, 0, 1),
        (582, 1, 0, 1),
        (-152, 0, 0, 1),
        (75, 0, 0, 0),
    ];
    let mut sum = Rat::from(0);
    for (c, pa, pk, pn) in terms {
        let mut t = Rat::from(c);
        for _ in 0..pa {
            t *= a;
        }
        for _ in 0..pk {
            t *= k;
        }
        for _ in 0..pn {
            t *= n;
        }
        sum += t;
    }
    sum
}

// ---------------------------------------------------------------------------
// the n = 2 two-rebit Bures result
// ---------------------------------------------------------------------------

/// Which constant multiplies the denominator of the degree-10 n = 2 ratio.
/// `Corrected` uses 2^22, which is what the two exact moment values at
/// k = 0 and k = 1 force; `PaperLiteral` uses the printed 2^12, off by 2^10.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N2DenominatorConstant {
    Corrected,
    PaperLiteral,
}

/// Degree-10 numerator of `<|rho^PT|^2 |rho|^k> / <|rho|^k>` for Bures
/// two-rebits.
pub fn rebit_n2_numerator() -> PolynomialQ {
    PolynomialQ::from_ints(&[
        303925362,
        644925323,
        557112761,
        248378840,
        63736088,
        16125680,
        7842576,
        3191808,
        730624,
        86016,
        4096,
    ])
}

/// The same numerator in the published nested (Horner-style) arrangement;
/// used as a transcription cross-check.
pub fn rebit_n2_numerator_nested(k: &Rat) -> Rat {
    let mul = |a: Rat, b: &Rat| -> Rat { a * b };
    let mut v = k.clone() + 21;
    v = mul(v, k) * 8 + 1427;
    v = mul(v, k) + 6234;
    v = mul(v, k) * 32 + 490161;
    v = mul(v, k) + 1007855;
    v = mul(v, k) * 2 + 7967011;
    v = mul(v, k) + 31047355;
    v = mul(v, k) * 8 + 557112761;
    v = mul(v, k) + 644925323;
    v = mul(v, k) + 303925362;
    v
}

pub fn rebit_n2_denominator(constant: N2DenominatorConstant) -> PolynomialQ {
    let c = match constant {
        N2DenominatorConstant::Corrected => two_pow(22),
        N2DenominatorConstant::PaperLiteral => two_pow(12),
    };
    poly_product(
        c,
        &[
            PolynomialQ::linear(1, 2).pow(2),
            PolynomialQ::linear(1, 3).pow(2),
            PolynomialQ::linear(2, 3),
            PolynomialQ::linear(2, 5).pow(2),
            PolynomialQ::linear(2, 7),
            PolynomialQ::linear(2, 9),
            PolynomialQ::linear(2, 11),
        ],
    )
}

pub fn rebit_n2_ratio_fn(constant: N2DenominatorConstant) -> RationalFunctionQ {
    RationalFunctionQ::new(rebit_n2_numerator(), rebit_n2_denominator(constant))
}

/// `<|rho^PT|^2 |rho|^k> / <|rho|^k>` for Bures two-rebits, with the
/// denominator constant corrected to 2^22 (see [`N2DenominatorConstant`]).
pub fn bures_rebit_n2_ratio(k: &Rat) -> Result<Rat> {
    rebit_n2_ratio_fn(N2DenominatorConstant::Corrected).eval(k)
}

// ---------------------------------------------------------------------------
// catalog listing (used by the sequence-fitting round-trips and the CLI)
// ---------------------------------------------------------------------------

/// Every named closed-form rational function in the catalog.
pub fn catalog() -> Vec<(&'static str, RationalFunctionQ)> {
    vec![
        ("bures-qubit-n1", bures_qubit_ratio_n1_fn()),
        ("bures-rebit-n1", bures_rebit_ratio_n1_fn()),
        (
            "bures-qubit-n1-misindexed",
            bures_qubit_ratio_n1_misindexed_fn(),
        ),
        (
            "bures-rebit-n1-misindexed",
            bures_rebit_ratio_n1_misindexed_fn(),
        ),
        ("classical-hs", classical_hs_ratio_fn()),
        ("classical-bures", classical_bures_ratio_fn()),
        ("trial-qubit-fit", trial_qubit_fit_fn()),
        ("trial-rebit-fit", trial_rebit_fit_fn()),
        ("reduced-qubit", reduced_qubit_ratio_fn()),
        ("reduced-rebit", reduced_rebit_ratio_fn()),
        ("f2-bures-qubit", f2_bures_qubit_fn()),
        ("f2-bures-rebit", f2_bures_rebit_fn()),
        ("qq-rebit-retrit", qq_rebit_retrit_ratio_fn()),
        ("qq-qubit-qutrit", qq_qubit_qutrit_ratio_fn()),
        ("qq-rebit-retrit-reduced", qq_rebit_retrit_reduced_fn()),
        ("qq-qubit-qutrit-reduced", qq_qubit_qutrit_reduced_fn()),
        ("f2-qq-rebit", f2_qq_rebit_fn()),
        ("f2-qq-qubit", f2_qq_qubit_fn()),
    ]
}
