//! Exact decimal <-> rational conversions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Parses `"p/q"`, a plain decimal (`"14.1347"`, `"-0.5"`, `".25"`) or a decimal
/// with exponent (`"1.5e-3"`) into an exact rational. No binary float is
/// involved, so every digit of the input survives.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    if negative {
        numer = -numer;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    Some(if scale >= 0 {
        BigRational::from_integer(numer * ten.pow(scale as u32))
    } else {
        BigRational::new(numer, ten.pow((-scale) as u32))
    })
}

/// Decimal expansion with exactly `places` digits after the point, rounded
/// half away from zero.
pub fn to_decimal_string(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let two = BigInt::from(2);
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let rounded = if &rem * &two >= *scaled.denom() {
        q + BigInt::one()
    } else {
        q
    };
    let (int_part, frac_part) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    let frac = frac_part.to_str_radix(10);
    format!("{sign}{int_part}.{}{frac}", "0".repeat(places - frac.len()))
}

/// Fractional part `x - floor(x)`, always in `[0, 1)`.
pub fn fract(r: &BigRational) -> BigRational {
    r - r.floor()
}
