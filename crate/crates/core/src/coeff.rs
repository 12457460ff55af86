//! Scalar arithmetic: arbitrary-precision rationals.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator (zero is 0/1), which is exactly the normal form the rest of
//! the crate relies on for structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// Integer as an exact rational.
pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational n/d. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_one(c: &Coeff) -> bool {
    c.is_one()
}

pub fn is_minus_one(c: &Coeff) -> bool {
    c.is_negative() && c.abs().is_one()
}

/// (-1)^n for any integer n.
pub fn sign_pow(n: i64) -> Coeff {
    if n.rem_euclid(2) == 0 {
        coeff(1)
    } else {
        coeff(-1)
    }
}

/// Parse `p` or `p/q` with arbitrary-precision parts; rejects q = 0.
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator: {s:?}")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational denominator: {s:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator: {s:?}")));
    }
    Ok(BigRational::new(n, d))
}
