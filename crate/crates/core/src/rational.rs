//! Exact rational scalars used throughout the crate.
//!
//! All arithmetic is over `BigRational`; nothing in the crate touches
//! floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p" into a rational (lowest terms, positive denominator).
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

/// Formats a rational as "p" or "p/q".
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Common denominator scaling: returns integer row `lcm(denoms) * row`.
pub fn clear_denominators(row: &[Q]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        if !x.is_zero() {
            lcm = num_integer::lcm(lcm, x.denom().clone());
        }
    }
    row.iter()
        .map(|x| (x.numer() * &lcm / x.denom()).clone())
        .collect()
}

/// Removes the integer content of a row (gcd of entries), keeping signs.
pub fn primitive_part(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = num_integer::gcd(g, x.abs());
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}
