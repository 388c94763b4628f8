use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

/// Retained digit sets, either one set reused at every level or an explicit
/// finite list of per-level sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Levels {
    Constant(Vec<u32>),
    PerLevel(Vec<Vec<u32>>),
}

/// A base-`b` digit-restricted construction. At level `k` every surviving
/// interval is split into `b` equal parts and only the parts whose digit lies
/// in the level's retained set are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    base: u32,
    levels: Levels,
    label: String,
}

fn normalize(base: u32, digits: &[u32], level: Option<usize>) -> Result<Vec<u32>> {
    let at = || match level {
        Some(l) => format!(" at level {l}"),
        None => String::new(),
    };
    let mut set = digits.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::input(format!("retained digit set is empty{}", at())));
    }
    if let Some(&d) = set.iter().find(|&&d| d >= base) {
        return Err(Error::input(format!(
            "digit {d} is not below the base {base}{}",
            at()
        )));
    }
    if set.len() == base as usize {
        return Err(Error::input(format!(
            "retained digit set keeps all {base} digits{}; it must be a strict subset",
            at()
        )));
    }
    Ok(set)
}

impl GridSpec {
    /// Same retained set at every level.
    pub fn constant(base: u32, retained: &[u32], label: impl Into<String>) -> Result<Self> {
        if base < 2 {
            return Err(Error::input(format!("base must be at least 2, got {base}")));
        }
        Ok(Self {
            base,
            levels: Levels::Constant(normalize(base, retained, None)?),
            label: label.into(),
        })
    }

    /// Finite per-level stream; `levels[0]` is the retained set of level 1.
    pub fn per_level(base: u32, levels: Vec<Vec<u32>>, label: impl Into<String>) -> Result<Self> {
        if base < 2 {
            return Err(Error::input(format!("base must be at least 2, got {base}")));
        }
        if levels.is_empty() {
            return Err(Error::input("per-level spec needs at least one level"));
        }
        let levels = levels
            .iter()
            .enumerate()
            .map(|(i, set)| normalize(base, set, Some(i + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            base,
            levels: Levels::PerLevel(levels),
            label: label.into(),
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn levels(&self) -> &Levels {
        &self.levels
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.levels, Levels::Constant(_))
    }

    /// Number of levels the spec can drive, `None` when unbounded.
    pub fn available_levels(&self) -> Option<usize> {
        match &self.levels {
            Levels::Constant(_) => None,
            Levels::PerLevel(v) => Some(v.len()),
        }
    }

    /// Sorted retained digits of `level` (1-based).
    pub fn retained(&self, level: usize) -> Option<&[u32]> {
        if level == 0 {
            return None;
        }
        match &self.levels {
            Levels::Constant(set) => Some(set),
            Levels::PerLevel(v) => v.get(level - 1).map(Vec::as_slice),
        }
    }

    /// Product of retained-set sizes over levels `1..=depth`.
    pub fn count_at(&self, depth: usize) -> Result<BigUint> {
        self.check_depth(depth)?;
        Ok((1..=depth)
            .map(|k| self.retained(k).map_or(0, <[u32]>::len))
            .fold(BigUint::one(), |acc, n| acc * BigUint::from(n)))
    }

    pub(crate) fn check_depth(&self, depth: usize) -> Result<()> {
        match self.available_levels() {
            Some(avail) if depth > avail => Err(Error::input(format!(
                "depth {depth} requested but `{}` only has {avail} levels of digits",
                self.label
            ))),
            _ => Ok(()),
        }
    }

    /// Contraction ratios `1/b`, one per retained digit. Only defined for
    /// level-invariant specs.
    pub fn ratios(&self) -> Result<Vec<BigRational>> {
        match &self.levels {
            Levels::Constant(set) => {
                let r = BigRational::new(1.into(), self.base.into());
                Ok(vec![r; set.len()])
            }
            Levels::PerLevel(_) => Err(Error::UnsupportedStructure(format!(
                "`{}` changes its retained digits from level to level, so it has no fixed set of contraction maps",
                self.label
            ))),
        }
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.levels {
            Levels::Constant(set) => {
                write!(f, "{} (base {}, keep {:?})", self.label, self.base, set)
            }
            Levels::PerLevel(v) => write!(
                f,
                "{} (base {}, {} per-level digit sets)",
                self.label,
                self.base,
                v.len()
            ),
        }
    }
}

pub const NAMED_SETS: [&str; 5] = ["pess", "cantor13", "classic-cantor", "mod6", "mod8"];

/// Base 4, keeping digits 1 and 3 at every level.
pub fn make_pess_spec() -> GridSpec {
    GridSpec::constant(4, &[1, 3], "pess").expect("static spec is valid")
}

/// Built-in constructions by catalog identifier.
pub fn make_named_spec(name: &str) -> Result<GridSpec> {
    let (base, keep): (u32, &[u32]) = match name {
        "pess" => return Ok(make_pess_spec()),
        "cantor13" => (8, &[0, 7]),
        "classic-cantor" => (3, &[0, 2]),
        "mod6" => (6, &[1, 5]),
        "mod8" => (8, &[1, 3, 5, 7]),
        _ => {
            return Err(Error::UnknownName {
                name: name.to_string(),
                valid: NAMED_SETS.to_vec(),
            })
        }
    };
    GridSpec::constant(base, keep, name)
}

/// Base-4 spec whose level-`n` retained pair is `{a_n, a_n + 2 mod 4}`.
pub fn zf_spec_from_digits(digits: &[u8], label: impl Into<String>) -> Result<GridSpec> {
    if digits.is_empty() {
        return Err(Error::input("Z_F needs at least one base-4 digit"));
    }
    let levels = digits
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if a > 3 {
                Err(Error::input(format!(
                    "digit {a} at level {} is not in 0..=3",
                    i + 1
                )))
            } else {
                let a = u32::from(a);
                Ok(vec![a, (a + 2) % 4])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    GridSpec::per_level(4, levels, label)
}

/// Z_F spec driven by a digitized zero sequence.
pub fn make_zf_spec(digits: &crate::zeros::DigitSequence) -> Result<GridSpec> {
    zf_spec_from_digits(&digits.digits(), "zf")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pess_keeps_one_and_three() {
        let spec = make_pess_spec();
        assert_eq!(spec.base(), 4);
        assert_eq!(spec.retained(1), Some(&[1, 3][..]));
        assert_eq!(spec.retained(17), Some(&[1, 3][..]));
        assert_eq!(spec.label(), "pess");
        assert_eq!(spec.count_at(10).unwrap(), BigUint::from(1024u32));
    }

    #[test]
    fn named_specs() {
        let c = make_named_spec("cantor13").unwrap();
        assert_eq!((c.base(), c.retained(1).unwrap()), (8, &[0, 7][..]));
        let c = make_named_spec("classic-cantor").unwrap();
        assert_eq!((c.base(), c.retained(1).unwrap()), (3, &[0, 2][..]));
        let c = make_named_spec("mod6").unwrap();
        assert_eq!((c.base(), c.retained(1).unwrap()), (6, &[1, 5][..]));
        let c = make_named_spec("mod8").unwrap();
        assert_eq!(c.retained(1).unwrap().len(), 4);
        assert_eq!(c.base(), 8);
    }

    #[test]
    fn unknown_name_lists_valid_names() {
        let err = make_named_spec("sierpinski").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("sierpinski"));
        for name in ["cantor13", "classic-cantor", "mod6", "mod8"] {
            assert!(msg.contains(name), "{msg}");
        }
    }

    #[test]
    fn zf_pairs() {
        let spec = zf_spec_from_digits(&[0], "t").unwrap();
        assert_eq!(spec.retained(1), Some(&[0, 2][..]));
        let spec = zf_spec_from_digits(&[3], "t").unwrap();
        assert_eq!(spec.retained(1), Some(&[1, 3][..]));
        let spec = zf_spec_from_digits(&[2, 1, 0, 3, 3], "t").unwrap();
        for k in 1..=5 {
            assert_eq!(spec.retained(k).unwrap().len(), 2);
        }
        assert_eq!(spec.count_at(5).unwrap(), BigUint::from(32u32));
        assert_eq!(spec.available_levels(), Some(5));
    }

    #[test]
    fn zf_rejects_empty_and_out_of_range() {
        assert!(matches!(
            zf_spec_from_digits(&[], "t"),
            Err(Error::Input(_))
        ));
        assert!(zf_spec_from_digits(&[4], "t").is_err());
    }

    #[test]
    fn invalid_retained_sets() {
        assert!(GridSpec::constant(4, &[], "x").is_err());
        assert!(GridSpec::constant(4, &[0, 1, 2, 3], "x").is_err());
        assert!(GridSpec::constant(4, &[5], "x").is_err());
        assert!(GridSpec::constant(1, &[0], "x").is_err());
    }

    #[test]
    fn depth_beyond_stream_is_an_error() {
        let spec = zf_spec_from_digits(&[1, 2], "t").unwrap();
        assert!(spec.count_at(2).is_ok());
        assert!(matches!(spec.count_at(3), Err(Error::Input(_))));
    }

    #[test]
    fn per_level_spec_has_no_fixed_ratios() {
        let spec = zf_spec_from_digits(&[1, 2], "t").unwrap();
        assert!(matches!(spec.ratios(), Err(Error::UnsupportedStructure(_))));
        assert_eq!(make_pess_spec().ratios().unwrap().len(), 2);
    }
}
