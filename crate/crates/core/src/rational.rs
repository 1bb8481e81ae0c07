//! Exact rational scalars and the few helpers the rest of the crate needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_big(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

pub fn to_f64(v: &Rational) -> f64 {
    match v.to_f64() {
        Some(f) if f.is_finite() => f,
        // numerator/denominator overflow f64 individually; divide after shifting
        _ => {
            let (n, d) = (v.numer(), v.denom());
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let n = (n >> shift).to_f64().unwrap_or(0.0);
            let d = (d >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.125`.
pub fn parse(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("not a rational number: {text:?}"));
    let t = text.trim();
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if neg {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(num, den));
    }
    let v: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(v))
}

/// `p` for integers, `p/q` otherwise.
pub fn format(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn is_nonneg(v: &Rational) -> bool {
    !v.is_negative()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_q(n: i64, k: i64) -> Rational {
    from_big(&binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_three_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse("4/6").unwrap(), ratio(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format(&ratio(6, 4)), "3/2");
        assert_eq!(format(&int(-7)), "-7");
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
