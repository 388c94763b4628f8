use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use super::table::ZeroTable;
use crate::error::{Error, Result};
use crate::rational::{fract, parse_rational, to_decimal_string};

/// pi to 100 decimal places (truncated).
pub const PI_100: &str = "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

pub const MIN_DIGITIZE_PRECISION: u32 = 40;
pub const MAX_DIGITIZE_PRECISION: u32 = 100;
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-6;

/// pi rounded to `digits` decimal places.
pub fn pi_to(digits: u32) -> BigRational {
    let full = parse_rational(PI_100).expect("constant parses");
    let scale = BigInt::from(10).pow(digits);
    let scaled = full * BigRational::from_integer(scale.clone());
    BigRational::new(scaled.round().to_integer(), scale)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DigitEntry {
    /// 1-based position in the digitized order.
    pub n: usize,
    pub gamma: String,
    #[serde(skip)]
    pub t: BigRational,
    pub a: u8,
    pub boundary_flag: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DigitSequence {
    pub entries: Vec<DigitEntry>,
    pub precision_digits: u32,
    pub boundary_tol: f64,
    /// How the 2 pi divisor was obtained.
    pub pi_source: String,
}

impl DigitSequence {
    pub fn digits(&self) -> Vec<u8> {
        self.entries.iter().map(|e| e.a).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn boundary_count(&self) -> usize {
        self.entries.iter().filter(|e| e.boundary_flag).count()
    }

    /// `n,gamma,t,a,boundary_flag` with `t` printed to the working precision.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "gamma", "t", "a", "boundary_flag"])?;
        for e in &self.entries {
            w.write_record([
                e.n.to_string(),
                e.gamma.clone(),
                to_decimal_string(&e.t, self.precision_digits as usize),
                e.a.to_string(),
                e.boundary_flag.to_string(),
            ])?;
        }
        w.flush().map_err(|e| Error::Serialize(e.to_string()))?;
        Ok(())
    }
}

/// `t_n = frac(gamma_n / 2 pi)` and `a_n = floor(4 t_n)` for each ordinate in
/// table order. The only approximation is pi, rounded to `precision_digits`
/// decimals; the division and floor are exact. An entry is flagged when
/// `4 t_n` lies within `boundary_tol` of an integer.
pub fn digitize(
    table: &ZeroTable,
    precision_digits: u32,
    boundary_tol: f64,
) -> Result<DigitSequence> {
    if !(MIN_DIGITIZE_PRECISION..=MAX_DIGITIZE_PRECISION).contains(&precision_digits) {
        return Err(Error::input(format!(
            "digitization precision must be in {MIN_DIGITIZE_PRECISION}..={MAX_DIGITIZE_PRECISION} digits, got {precision_digits}"
        )));
    }
    if !(0.0..0.5).contains(&boundary_tol) {
        return Err(Error::input(format!(
            "boundary tolerance must be in [0, 0.5), got {boundary_tol}"
        )));
    }
    let two_pi = pi_to(precision_digits) * BigRational::from_integer(2.into());
    let tol = BigRational::from_float(boundary_tol).expect("finite tolerance");
    let four = BigRational::from_integer(4.into());
    let entries = table
        .gammas
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let t = fract(&(&g.value / &two_pi));
            let scaled = &t * &four;
            let a = scaled.floor().to_integer().to_u8().expect("0 <= 4t < 4");
            let dist = (&scaled - scaled.round()).abs();
            DigitEntry {
                n: i + 1,
                gamma: g.text.clone(),
                t,
                a,
                boundary_flag: dist < tol,
            }
        })
        .collect();
    Ok(DigitSequence {
        entries,
        precision_digits,
        boundary_tol,
        pi_source: format!("stored 100-digit constant rounded to {precision_digits} decimals"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::table::parse_zero_text;

    fn table(lines: &[&str]) -> ZeroTable {
        parse_zero_text(&lines.join("\n"), "mem").unwrap()
    }

    #[test]
    fn first_zero_sits_near_a_cell_boundary() {
        let d = digitize(&table(&["14.134725141734693"]), 50, 1e-4).unwrap();
        let e = &d.entries[0];
        // independent high-precision division gives t = 0.2496113755523673...
        let t = e.t.to_f64().unwrap();
        assert!((t - 0.249_611_375_552_367_3).abs() < 1e-15, "{t}");
        assert_eq!(e.a, 0);
        assert!(!e.boundary_flag);
        // 4t is 0.00156 below 1, so a coarser tolerance flags it
        let d = digitize(&table(&["14.134725141734693"]), 50, 2e-3).unwrap();
        assert!(d.entries[0].boundary_flag);
    }

    fn synthetic(k: i64, offset_num: i64, offset_den: i64) -> String {
        // gamma = 2 pi k + pi * offset, rendered with 90 decimals
        let pi = pi_to(100);
        let g = &pi * BigRational::from_integer((2 * k).into())
            + &pi * BigRational::new(offset_num.into(), offset_den.into());
        to_decimal_string(&g, 90)
    }

    #[test]
    fn synthetic_quarter_and_half() {
        let quarter = synthetic(3, 1, 4);
        let half = synthetic(5, 1, 1);
        let five_eighths = synthetic(2, 5, 4);
        let d = digitize(&table(&[&quarter, &half, &five_eighths]), 80, 1e-6).unwrap();
        let eighth = BigRational::new(1.into(), 8.into());
        let one_half = BigRational::new(1.into(), 2.into());
        let close = |a: &BigRational, b: &BigRational| {
            (a - b).abs() < BigRational::new(1.into(), BigInt::from(10).pow(70))
        };
        assert!(close(&d.entries[0].t, &eighth));
        assert_eq!(d.entries[0].a, 0);
        assert!(close(&d.entries[1].t, &one_half));
        // 4t = 2 up to rounding of pi: either side is possible, but it is flagged
        assert!(matches!(d.entries[1].a, 1 | 2));
        assert!(d.entries[1].boundary_flag);
        assert_eq!(d.entries[2].a, 2);
        assert!(!d.entries[2].boundary_flag);
    }

    #[test]
    fn digit_invariants() {
        let d = digitize(
            &table(&[
                "14.134725141734693",
                "21.022039638771555",
                "25.010857580145688",
                "30.424876125859513",
            ]),
            40,
            DEFAULT_BOUNDARY_TOL,
        )
        .unwrap();
        for e in &d.entries {
            assert!(e.a <= 3);
            let four_t = &e.t * BigRational::from_integer(4.into());
            assert_eq!(four_t.floor().to_integer(), BigInt::from(e.a));
        }
        assert_eq!(d.digits().len(), 4);
    }

    #[test]
    fn precision_bounds() {
        let t = table(&["14.1"]);
        assert!(digitize(&t, 39, 1e-6).is_err());
        assert!(digitize(&t, 101, 1e-6).is_err());
        assert!(digitize(&t, 40, -1.0).is_err());
    }

    #[test]
    fn csv_output() {
        let d = digitize(&table(&["14.134725141734693"]), 40, 1e-6).unwrap();
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,gamma,t,a,boundary_flag"));
        let row = lines.next().unwrap();
        assert!(
            row.starts_with("1,14.134725141734693,0.24961137555236"),
            "{row}"
        );
        assert!(row.ends_with(",0,false"));
    }
}
