//! Exact numbers as strings: arbitrary precision survives JSON intact.
//!
//! Accepted input forms: integer (`"-3"`), fraction (`"7/2"`), decimal
//! (`"0.25"`). Emission is canonical — reduced `"p"` or `"p/q"` with a
//! positive denominator — so parse→emit→parse is the identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::str::FromStr;

fn plain_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses an exact rational from its string form.
pub fn parse_exact(s: &str) -> Result<BigRational, String> {
    let bad = || format!("invalid exact number {s:?}: expected \"p\", \"p/q\", or \"p.d\"");
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let value = if let Some((num, den)) = body.split_once('/') {
        if !plain_digits(num) || !plain_digits(den) {
            return Err(bad());
        }
        let d = BigInt::from_str(den).expect("digits");
        if d.is_zero() {
            return Err(bad());
        }
        BigRational::new(BigInt::from_str(num).expect("digits"), d)
    } else if let Some((int, frac)) = body.split_once('.') {
        if !plain_digits(int) || !plain_digits(frac) {
            return Err(bad());
        }
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let numer = BigInt::from_str(int).expect("digits") * &scale
            + BigInt::from_str(frac).expect("digits");
        BigRational::new(numer, scale)
    } else {
        if !plain_digits(body) {
            return Err(bad());
        }
        BigRational::from_integer(BigInt::from_str(body).expect("digits"))
    };
    Ok(if negative { -value } else { value })
}

/// Canonical string form: `"p"` for integers, reduced `"p/q"` otherwise.
pub fn emit_exact(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
