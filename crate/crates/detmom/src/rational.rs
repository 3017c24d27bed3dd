//! Exact rational scalars and the Pochhammer symbol.
//!
//! Every closed-form constant in this crate is an arbitrary-precision
//! rational; nothing in the algebraic core ever rounds. `Rat` is kept in
//! lowest terms with a positive denominator by construction and prints as
//! `p/q` (or `p` when `q` is 1), sign on the numerator.

use crate::error::{Error, Result};
pub use rug::Integer as Int;
pub use rug::Rational as Rat;
use rug::ops::Pow;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rat {
    Rat::from(n)
}

/// Shorthand for `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::from((n, d))
}

/// Parses `p`, `p/q`, decimals (`0.25`) and scientific notation (`1e-20`,
/// `2.5e3`) into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Ok(r) = s.parse::<Rat>() {
        return Ok(r);
    }
    // decimal / scientific form: [sign] digits [. digits] [eE [sign] digits]
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(Error::Parse(format!("bad rational `{s}`")));
    }
    let num: Int = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let shift = exp10 - frac_part.len() as i64;
    let ten = Int::from(10);
    let mut r = Rat::from(num);
    if shift >= 0 {
        r *= Rat::from(ten.pow(shift as u32));
    } else {
        r /= Rat::from(ten.pow((-shift) as u32));
    }
    Ok(r)
}

/// Exact integer power with negative exponents allowed (errors on `0^-m`).
pub fn pow_rat(base: &Rat, exp: i64) -> Result<Rat> {
    if exp >= 0 {
        Ok(base.clone().pow(exp as u32))
    } else {
        if base.cmp0() == std::cmp::Ordering::Equal {
            return Err(Error::DivisionByZero);
        }
        Ok(base.clone().pow(exp as i32))
    }
}

/// Rising factorial `(x)_m = x (x+1) ... (x+m-1)`; `1` for `m = 0`.
pub fn pochhammer(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::from(1);
    let mut factor = x.clone();
    for _ in 0..m {
        acc *= &factor;
        factor += 1;
    }
    acc
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> Int {
    Int::from(n).binomial(k as u32)
}

/// Is this rational a nonnegative integer? Returns it as `u32` if so.
pub fn as_nonneg_integer(x: &Rat) -> Option<u32> {
    if x.is_integer() && x.cmp0() != std::cmp::Ordering::Less {
        x.numer().to_u32()
    } else {
        None
    }
}

/// Decimal expansion of a rational, correctly rounded (round half away from
/// zero) to `digits` significant digits, in scientific-free form when the
/// magnitude is moderate and scientific form otherwise.
pub fn rat_to_decimal(x: &Rat, digits: usize) -> String {
    if x.cmp0() == std::cmp::Ordering::Equal {
        return "0".into();
    }
    let digits = digits.max(1);
    let neg = x.cmp0() == std::cmp::Ordering::Less;
    let ax = x.clone().abs();
    // order of magnitude: largest e with 10^e <= ax
    let mut e: i64 = 0;
    let ten = Rat::from(10);
    let mut scaled = ax.clone();
    while scaled >= 10 {
        scaled /= &ten;
        e += 1;
    }
    while scaled < 1 {
        scaled *= &ten;
        e -= 1;
    }
    // round ax * 10^(digits-1-e) to nearest integer
    let shift = digits as i64 - 1 - e;
    let mut scaled = ax;
    if shift >= 0 {
        scaled *= Rat::from(Int::from(10).pow(shift as u32));
    } else {
        scaled /= Rat::from(Int::from(10).pow((-shift) as u32));
    }
    let (num, den) = scaled.into_numer_denom();
    let (mut q, r) = num.div_rem_euc(den.clone());
    if Int::from(2) * r >= den {
        q += 1;
    }
    let mut mantissa = q.to_string();
    // rounding may have produced an extra digit (e.g. 999.95 -> 10000)
    let mut e = e;
    if mantissa.len() > digits {
        mantissa.truncate(digits);
        e += 1;
    }
    let sign = if neg { "-" } else { "" };
    if (-4..16).contains(&e) {
        if e >= 0 {
            let e = e as usize;
            if e + 1 >= mantissa.len() {
                let zeros = "0".repeat(e + 1 - mantissa.len());
                format!("{sign}{mantissa}{zeros}")
            } else {
                let frac = mantissa.split_off(e + 1);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    format!("{sign}{mantissa}")
                } else {
                    format!("{sign}{mantissa}.{frac}")
                }
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            let m = mantissa.trim_end_matches('0');
            format!("{sign}0.{zeros}{m}")
        }
    } else {
        let frac = mantissa.split_off(1);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{mantissa}e{e}")
        } else {
            format!("{sign}{mantissa}.{frac}e{e}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_basic() {
        assert_eq!(pochhammer(&ratio(1, 2), 0), rat(1));
        assert_eq!(pochhammer(&ratio(1, 2), 2), ratio(3, 4));
        // appears as the (-1/4)_{k+1} factor at k = 1 in the n = 2 assembly
        assert_eq!(pochhammer(&ratio(-1, 4), 2), ratio(-3, 16));
    }

    #[test]
    fn pochhammer_splits_multiplicatively() {
        // (x)_{m1+m2} = (x)_{m1} (x+m1)_{m2}
        for num in -6i64..=6 {
            let x = ratio(num, 4);
            for m1 in 0u32..=5 {
                for m2 in 0u32..=5 {
                    let lhs = pochhammer(&x, m1 + m2);
                    let shifted = x.clone() + Rat::from(m1);
                    let rhs = pochhammer(&x, m1) * pochhammer(&shifted, m2);
                    assert_eq!(lhs, rhs, "x={x} m1={m1} m2={m2}");
                }
            }
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rat("1e-20").unwrap(), Rat::from((1, Int::from(10).pow(20))));
        assert_eq!(parse_rat("2.5e3").unwrap(), rat(2500));
        assert_eq!(parse_rat("-1.5e-2").unwrap(), ratio(-3, 200));
        assert!(parse_rat("abc").is_err());
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(ratio(-2970, 760320).to_string(), "-1/256");
        assert_eq!(rat(17).to_string(), "17");
    }

    #[test]
    fn decimal_expansion() {
        assert_eq!(rat_to_decimal(&ratio(-1, 256), 10), "-0.00390625");
        assert_eq!(rat_to_decimal(&ratio(1, 3), 5), "0.33333");
        assert_eq!(rat_to_decimal(&ratio(2, 3), 5), "0.66667");
        assert_eq!(rat_to_decimal(&rat(0), 8), "0");
        assert_eq!(rat_to_decimal(&ratio(9999, 10), 3), "1000");
        assert_eq!(
            rat_to_decimal(&Rat::from((1, Int::from(10).pow(20))), 4),
            "1e-20"
        );
    }
}
