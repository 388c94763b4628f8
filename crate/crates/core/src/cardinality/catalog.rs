use serde::Serialize;

use super::info::{ComponentProvenance, Delta, InfoCardinality, Provenance};
use crate::dimension::similarity_dimension;
use crate::error::{Error, Result};
use crate::exact::make_named_spec;
use crate::zeta::{half, zeta_euler_maclaurin, HpReal, ZetaParams};

pub const CATALOG_NAMES: [&str; 6] = [
    "pess",
    "cantor13",
    "zf",
    "unit-interval",
    "cantor",
    "trivial-zeros",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Structure {
    Countable,
    Uncountable,
}

impl Structure {
    pub fn alpha(self) -> u8 {
        match self {
            Structure::Countable => 0,
            Structure::Uncountable => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Row label in the rendered table.
    pub display: &'static str,
    pub structure: Structure,
    pub cardinality: InfoCardinality,
    /// Full-precision `iota` when it comes from a zeta evaluation.
    pub iota_digits: Option<String>,
    /// Named grid construction behind `delta`, when there is one.
    pub grid: Option<&'static str>,
    pub notes: &'static str,
    /// Whether the row appears in the five-row summary table.
    pub in_table: bool,
}

struct Row {
    name: &'static str,
    display: &'static str,
    structure: Structure,
    delta: (u64, u64),
    grid: Option<&'static str>,
    iota: IotaRule,
    notes: &'static str,
    in_table: bool,
}

#[derive(Clone, Copy)]
enum IotaRule {
    NegZetaHalf,
    ZetaHalf,
    Zero,
}

const ROWS: [Row; 6] = [
    Row {
        name: "pess",
        display: "P_ess",
        structure: Structure::Uncountable,
        delta: (2, 4),
        grid: Some("pess"),
        iota: IotaRule::NegZetaHalf,
        notes: "base-4 digits {1, 3}: the odd residues mod 4, the classes holding every odd prime",
        in_table: true,
    },
    Row {
        name: "cantor13",
        display: "C_1/3",
        structure: Structure::Uncountable,
        delta: (2, 8),
        grid: Some("cantor13"),
        iota: IotaRule::Zero,
        notes: "base-8 digits {0, 7}; no arithmetic weighting",
        in_table: true,
    },
    Row {
        name: "zf",
        display: "Z_F",
        structure: Structure::Uncountable,
        delta: (2, 4),
        grid: None,
        iota: IotaRule::ZetaHalf,
        notes: "base 4, level n keeps {a_n, a_n + 2 mod 4} with a_n read from the n-th zeta zero",
        in_table: true,
    },
    Row {
        name: "unit-interval",
        display: "[0,1]",
        structure: Structure::Uncountable,
        delta: (2, 2),
        grid: None,
        iota: IotaRule::Zero,
        notes: "the full interval",
        in_table: true,
    },
    Row {
        name: "cantor",
        display: "Cantor set",
        structure: Structure::Uncountable,
        delta: (2, 3),
        grid: Some("classic-cantor"),
        iota: IotaRule::Zero,
        notes: "base-3 digits {0, 2}",
        in_table: true,
    },
    Row {
        name: "trivial-zeros",
        display: "trivial zeros",
        structure: Structure::Countable,
        delta: (1, 2),
        grid: None,
        iota: IotaRule::Zero,
        notes: "the negative even integers: countable, default information",
        in_table: false,
    },
];

fn build_entry(row: &Row, zeta_half: &HpReal) -> Result<CatalogEntry> {
    let mut delta = Delta::log_ratio(row.delta.0, row.delta.1)?;
    let mut delta_prov = Provenance::Defined;
    if let Some(grid) = row.grid {
        let spec = make_named_spec(grid)?;
        delta.value = similarity_dimension(&spec.ratios()?)?.value;
        delta_prov = Provenance::Computed;
    }
    let (iota, iota_digits, iota_prov) = match row.iota {
        IotaRule::Zero => (0.0, None, Provenance::DefaultZero),
        IotaRule::ZetaHalf => (
            zeta_half.to_f64(),
            Some(zeta_half.to_string()),
            Provenance::Computed,
        ),
        IotaRule::NegZetaHalf => {
            let v = zeta_half.neg();
            (v.to_f64(), Some(v.to_string()), Provenance::Computed)
        }
    };
    let provenance = ComponentProvenance {
        alpha: Provenance::Defined,
        delta: delta_prov,
        iota: iota_prov,
    };
    let cardinality = InfoCardinality::new(row.structure.alpha(), delta, iota, provenance)?
        .with_dim_vector(vec![delta.value, delta.value])?;
    Ok(CatalogEntry {
        name: row.name,
        display: row.display,
        structure: row.structure,
        cardinality,
        iota_digits,
        grid: row.grid,
        notes: row.notes,
        in_table: row.in_table,
    })
}

pub(crate) fn zeta_half_value(params: ZetaParams) -> Result<HpReal> {
    Ok(zeta_euler_maclaurin(&half(), params)?.value)
}

/// All entries, with `iota` computed from one evaluation of `zeta(1/2)`.
/// Dimension vectors hold `(Hausdorff, box)`.
pub fn catalog(params: ZetaParams) -> Result<Vec<CatalogEntry>> {
    let z = zeta_half_value(params)?;
    ROWS.iter().map(|r| build_entry(r, &z)).collect()
}

pub fn catalog_entry(name: &str, params: ZetaParams) -> Result<CatalogEntry> {
    let row = ROWS
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownName {
            name: name.to_string(),
            valid: CATALOG_NAMES.to_vec(),
        })?;
    let z = match row.iota {
        IotaRule::Zero => None,
        _ => Some(zeta_half_value(params)?),
    };
    match z {
        Some(z) => build_entry(row, &z),
        // unused when iota is a default zero
        None => build_entry(row, &HpReal::zero(params.precision_digits)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinality::{compare, Comparison};

    fn params() -> ZetaParams {
        ZetaParams::new(200, 10, 30)
    }

    #[test]
    fn names_are_unique_and_listed() {
        let cat = catalog(params()).unwrap();
        let names: Vec<_> = cat.iter().map(|e| e.name).collect();
        assert_eq!(names, CATALOG_NAMES.to_vec());
    }

    #[test]
    fn table_rows() {
        let cat = catalog(params()).unwrap();
        let get = |n: &str| {
            cat.iter()
                .find(|e| e.name == n)
                .unwrap()
                .cardinality
                .clone()
        };
        let pess = get("pess");
        assert_eq!((pess.alpha, pess.delta.value), (1, 0.5));
        assert!((pess.iota - 1.460_354_508_809_586_8).abs() < 1e-12);
        let zf = get("zf");
        assert_eq!(zf.iota, -pess.iota);
        assert!((get("cantor").delta.value - 0.630_929_753_571_457_4).abs() < 1e-12);
        assert!((get("cantor13").delta.value - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(get("unit-interval").delta.value, 1.0);
        let tz = get("trivial-zeros");
        assert_eq!((tz.alpha, tz.delta.value, tz.iota), (0, 0.0, 0.0));
        assert_eq!(cat.iter().filter(|e| e.in_table).count(), 5);
    }

    #[test]
    fn grid_deltas_match_similarity_dimension() {
        for e in catalog(params()).unwrap() {
            let symbolic = e.cardinality.delta.symbolic.unwrap().value();
            assert!(
                (e.cardinality.delta.value - symbolic).abs() < 1e-12,
                "{}",
                e.name
            );
            if let Some(g) = e.grid {
                let spec = make_named_spec(g).unwrap();
                let s = similarity_dimension(&spec.ratios().unwrap()).unwrap().value;
                assert!((e.cardinality.delta.value - s).abs() < 1e-12);
                assert_eq!(e.cardinality.provenance.delta, Provenance::Computed);
            }
        }
    }

    #[test]
    fn iota_follows_zeta_precision() {
        let coarse = catalog(ZetaParams::new(3, 1, 20)).unwrap();
        let fine = catalog(params()).unwrap();
        let iota =
            |c: &[CatalogEntry], n: &str| c.iter().find(|e| e.name == n).unwrap().cardinality.iota;
        let shift_p = iota(&coarse, "pess") - iota(&fine, "pess");
        let shift_z = iota(&coarse, "zf") - iota(&fine, "zf");
        assert!(
            shift_p.abs() > 1e-6,
            "coarse parameters should move the value"
        );
        assert_eq!(shift_p, -shift_z);
    }

    #[test]
    fn single_lookup() {
        let p = catalog_entry("pess", params()).unwrap();
        let c = catalog_entry("cantor13", params()).unwrap();
        assert_eq!(
            compare(&p.cardinality, &c.cardinality).outcome,
            Comparison::Greater
        );
        assert!(matches!(
            catalog_entry("nope", params()),
            Err(Error::UnknownName { .. })
        ));
    }
}
