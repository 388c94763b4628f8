use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_rational::BigRational;
use serde::{Serialize, Serializer};

const RM: RoundingMode = RoundingMode::ToEven;
/// Guard bits carried on top of the requested decimal precision.
const GUARD_BITS: usize = 64;

pub(crate) fn bits_for_digits(digits: u32) -> usize {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

/// Arbitrary-precision working context: a binary precision plus the
/// constant cache astro-float needs for `ln`, `exp` and `sin`.
pub(crate) struct Working {
    pub p: usize,
    cc: RefCell<Consts>,
}

impl Working {
    pub fn new(digits: u32) -> Self {
        Self {
            p: bits_for_digits(digits),
            cc: RefCell::new(Consts::new().expect("constant cache allocation")),
        }
    }

    pub fn int(&self, n: u64) -> BigFloat {
        BigFloat::from_u64(n, self.p)
    }

    pub fn rational(&self, r: &BigRational) -> BigFloat {
        let n = BigFloat::parse(
            &r.numer().to_string(),
            Radix::Dec,
            self.p,
            RM,
            &mut self.cc.borrow_mut(),
        );
        let d = BigFloat::parse(
            &r.denom().to_string(),
            Radix::Dec,
            self.p,
            RM,
            &mut self.cc.borrow_mut(),
        );
        n.div(&d, self.p, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, RM, &mut self.cc.borrow_mut())
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc.borrow_mut())
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        a.sin(self.p, RM, &mut self.cc.borrow_mut())
    }

    pub fn pi(&self) -> BigFloat {
        self.cc.borrow_mut().pi(self.p, RM)
    }

    pub fn wrap(&self, value: BigFloat, digits: u32) -> HpReal {
        HpReal { value, digits }
    }
}

/// A high-precision real together with the decimal precision it was
/// computed at.
#[derive(Clone)]
pub struct HpReal {
    value: BigFloat,
    digits: u32,
}

impl HpReal {
    pub fn zero(digits: u32) -> HpReal {
        HpReal {
            value: BigFloat::from_u64(0, bits_for_digits(digits)),
            digits,
        }
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.value
    }

    pub fn precision_digits(&self) -> u32 {
        self.digits
    }

    pub fn to_f64(&self) -> f64 {
        self.to_sig_string(20).parse().unwrap_or(f64::NAN)
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Exact negation.
    pub fn neg(&self) -> HpReal {
        HpReal {
            value: self.value.neg(),
            digits: self.digits,
        }
    }

    /// Sum at the wider of the two working precisions.
    pub fn add(&self, other: &HpReal) -> HpReal {
        let digits = self.digits.max(other.digits);
        HpReal {
            value: self.value.add(&other.value, bits_for_digits(digits), RM),
            digits,
        }
    }

    /// `|self - other|` as `f64`.
    pub fn abs_diff_f64(&self, other: &HpReal) -> f64 {
        let digits = self.digits.max(other.digits);
        let d = self
            .value
            .sub(&other.value, bits_for_digits(digits), RM)
            .abs();
        HpReal { value: d, digits }.to_f64()
    }

    /// Plain decimal with `sig` significant digits, rounded half-up.
    pub fn to_sig_string(&self, sig: usize) -> String {
        if self.value.is_zero() {
            return "0".to_string();
        }
        let raw = self.value.to_string();
        round_scientific(&raw, sig.max(1))
    }
}

/// Rounds astro-float's `d.ddddde[+-]x` rendering to `sig` significant
/// digits and prints it positionally.
fn round_scientific(raw: &str, sig: usize) -> String {
    let (negative, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw),
    };
    let (mant, exp) = match body.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    let mut digits: Vec<u8> = ip.bytes().chain(fp.bytes()).map(|b| b - b'0').collect();
    // position of the decimal point relative to the digit string
    let mut point = ip.len() as i64 + exp;
    let lead = digits.iter().take_while(|&&d| d == 0).count();
    digits.drain(..lead);
    point -= lead as i64;
    if digits.is_empty() {
        return "0".to_string();
    }
    if digits.len() > sig {
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.truncate(sig);
                    point += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
    }
    let s: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), s)
    } else if point as usize >= s.len() {
        format!("{}{}", s, "0".repeat(point as usize - s.len()))
    } else {
        format!("{}.{}", &s[..point as usize], &s[point as usize..])
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sig_string(self.digits as usize))
    }
}

impl fmt::Debug for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HpReal({self})")
    }
}

/// Serialized as a decimal string carrying the full working precision.
impl Serialize for HpReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
