//! Exact rationals and their `"p/q"` text form.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"-p/q"` or a bare integer. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::RationalSyntax(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Lowest terms with the sign on the numerator; integers keep the `/1` suffix
/// so every value has the same shape in golden files.
pub fn format_rational(r: &Rational) -> String {
    let r = r.reduced();
    format!("{}/{}", r.numer(), r.denom())
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn pow(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

pub fn pm_one(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}
