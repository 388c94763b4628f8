use serde::Serialize;

use super::catalog::CatalogEntry;
use super::info::fmt_real;
use crate::error::{Error, Result};

/// One row of the summary table, with the columns as typeset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Row {
    pub set: String,
    pub alpha: String,
    pub delta: String,
    pub iota: String,
    pub triple: String,
}

fn short(x: f64, places: usize) -> String {
    let s = format!("{x:.places$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn row_for(e: &CatalogEntry) -> Table1Row {
    let c = &e.cardinality;
    let delta = match c.delta.symbolic {
        Some(s) => match s.as_rational() {
            Some(q) => q.to_string(),
            None => format!("{s} ~ {}", short(c.delta.value, 3)),
        },
        None => fmt_real(c.delta.value),
    };
    let iota = match e.name {
        "pess" => format!("-zeta(1/2) ~ {}", short(c.iota, 2)),
        "zf" => format!("zeta(1/2) ~ {}", short(c.iota, 2)),
        _ => fmt_real(c.iota),
    };
    let triple_delta = match c.delta.symbolic.and_then(|s| s.as_rational()) {
        Some(q) if *q.denom() == 1 => q.to_string(),
        Some(q) if *q.denom() == 2 => short(c.delta.value, 1),
        _ => short(c.delta.value, 3),
    };
    let triple_iota = if c.iota == 0.0 {
        "0".to_string()
    } else {
        short(c.iota, 2)
    };
    Table1Row {
        set: e.display.to_string(),
        alpha: c.alpha.to_string(),
        delta,
        iota,
        triple: format!("({}, {triple_delta}, {triple_iota})", c.alpha),
    }
}

/// Rows of the five-entry summary table, in catalog order.
pub fn table1_rows(entries: &[CatalogEntry]) -> Vec<Table1Row> {
    entries.iter().filter(|e| e.in_table).map(row_for).collect()
}

fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = String>| {
        let padded: Vec<String> = cells.zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(&mut header.iter().map(|h| h.to_string()));
    out.push_str(&format!(
        "|{}|\n",
        width
            .iter()
            .take(cols)
            .map(|w| "-".repeat(w + 2))
            .collect::<Vec<_>>()
            .join("|")
    ));
    for r in rows {
        out.push_str(&line(&mut r.iter().cloned()));
    }
    out
}

pub fn table1_text(entries: &[CatalogEntry]) -> String {
    let rows: Vec<Vec<String>> = table1_rows(entries)
        .into_iter()
        .map(|r| vec![r.set, r.alpha, r.delta, r.iota, r.triple])
        .collect();
    render(&["Set", "alpha", "delta", "iota", "I(M)"], &rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table2Row {
    pub property: &'static str,
    pub pess: String,
    pub zf: String,
}

/// Side-by-side properties of `P_ess` and `Z_F`, with dimension and
/// information values taken from the catalog.
pub fn table2_rows(entries: &[CatalogEntry]) -> Result<Vec<Table2Row>> {
    let find = |n: &str| {
        entries
            .iter()
            .find(|e| e.name == n)
            .ok_or_else(|| Error::input(format!("catalog has no `{n}` entry")))
    };
    let (p, z) = (find("pess")?, find("zf")?);
    let dim = |e: &CatalogEntry| e.cardinality.delta.describe();
    let info = |e: &CatalogEntry, lead: &str| {
        let sign = if e.cardinality.iota > 0.0 {
            "> 0"
        } else {
            "< 0"
        };
        format!("{lead} {sign} ({})", short(e.cardinality.iota, 5))
    };
    Ok(vec![
        Table2Row {
            property: "Hausdorff dimension",
            pess: dim(p),
            zf: dim(z),
        },
        Table2Row {
            property: "Cardinality",
            pess: "c".into(),
            zf: "c".into(),
        },
        Table2Row {
            property: "Lebesgue measure",
            pess: "0".into(),
            zf: "0".into(),
        },
        Table2Row {
            property: "Self-similar",
            pess: "Yes (deterministic)".into(),
            zf: "Yes (data-dependent)".into(),
        },
        Table2Row {
            property: "Information measure",
            pess: info(p, "-zeta(1/2)"),
            zf: info(z, "zeta(1/2)"),
        },
        Table2Row {
            property: "Arithmetic origin",
            pess: "Primes mod 4".into(),
            zf: "Zeta zeros".into(),
        },
    ])
}

pub fn table2_text(entries: &[CatalogEntry]) -> Result<String> {
    let rows: Vec<Vec<String>> = table2_rows(entries)?
        .into_iter()
        .map(|r| vec![r.property.to_string(), r.pess, r.zf])
        .collect();
    Ok(render(&["Property", "P_ess", "Z_F"], &rows))
}
