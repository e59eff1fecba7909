//! Small helpers around [`BigRational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `base^exp` for any integer exponent.
pub fn pow(base: u64, exp: i64) -> BigRational {
    let b = BigInt::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        BigRational::from_integer(b)
    } else {
        BigRational::new(BigInt::one(), b)
    }
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `num/den`, or just `num` for integers.
pub fn fraction(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `num/den` or an integer.
pub fn parse_fraction(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Decimal rendering with `digits` places, rounding half to even.
pub fn round_half_even(r: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = scaled - BigRational::from_integer(floor.clone());
    let half = ratio(1, 2);
    let rounded = if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let negative = r.is_negative() && !rounded.is_zero();
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        out.push('.');
        out.push_str(&format!(
            "{:0>width$}",
            frac_part.to_string(),
            width = digits
        ));
    }
    out
}

/// [`round_half_even`] applied to the exact binary value of `x`.
pub fn round_f64_half_even(x: f64, digits: usize) -> String {
    match BigRational::from_float(x) {
        Some(r) => round_half_even(&r, digits),
        None => x.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_is_half_even() {
        assert_eq!(round_half_even(&ratio(1, 8), 2), "0.12");
        assert_eq!(round_half_even(&ratio(3, 8), 2), "0.38");
        assert_eq!(round_half_even(&ratio(16, 45), 4), "0.3556");
        assert_eq!(round_half_even(&ratio(-1, 3), 3), "-0.333");
        assert_eq!(round_half_even(&ratio(-1, 100000), 3), "0.000");
        assert_eq!(round_half_even(&integer(2), 0), "2");
    }

    #[test]
    fn fractions_round_trip() {
        for r in [ratio(3, 17), integer(5), ratio(-2, 7)] {
            assert_eq!(parse_fraction(&fraction(&r)), Some(r));
        }
        assert_eq!(parse_fraction("1/0"), None);
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow(2, -3), ratio(1, 8));
        assert_eq!(pow(3, 2), integer(9));
    }
}
