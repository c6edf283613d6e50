//! Exact rational scalars.
//!
//! All coefficients in the engine are `BigRational`s: arbitrary-precision,
//! always reduced, denominator positive. This module adds the small amount of
//! glue the rest of the crate needs (parsing, powers, square roots, JSON).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number; reduced form with positive denominator.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"3"`, `"-3"`, or `"3/4"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| bad())?;
            let d: BigInt = den.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// Compact text form: `"3"`, `"-3"`, `"3/4"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Signed integer power. Errors on `0^e` with `e < 0`.
pub fn rat_pow(base: &Rat, exp: i64) -> Result<Rat> {
    if base.is_zero() && exp < 0 {
        return Err(Error::Eval("zero base with negative exponent".into()));
    }
    // num's pow takes i32; exponents here are small.
    let e = i32::try_from(exp).map_err(|_| Error::Eval(format!("exponent {exp} out of range")))?;
    Ok(num::pow::Pow::pow(base.clone(), e))
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// JSON form with exact integer strings: `{"num":"3","den":"4"}`.
pub fn rat_json(r: &Rat) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

/// Uniform nonzero rational with numerator in `±num_max` and denominator in
/// `1..=den_max` (before reduction). Used for random evaluation points.
pub fn random_nonzero_rat<R: rand::Rng>(rng: &mut R, num_max: i64, den_max: i64) -> Rat {
    assert!(num_max >= 1 && den_max >= 1);
    loop {
        let n = rng.gen_range(-num_max..=num_max);
        if n != 0 {
            return rat(n, rng.gen_range(1..=den_max));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-7", "3/4", "-3/4"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // non-canonical input reduces
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert_eq!(format_rat(&parse_rat("3/-4").unwrap()), "-3/4");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(rat_pow(&rat(2, 3), 2).unwrap(), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1).unwrap(), rat(3, 2));
        assert_eq!(rat_pow(&rat(5, 1), 0).unwrap(), rat_int(1));
        assert!(rat_pow(&rat_int(0), -2).is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(sqrt_exact(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(sqrt_exact(&rat_int(2)), None);
        assert_eq!(sqrt_exact(&rat_int(-4)), None);
    }
}
