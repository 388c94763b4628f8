use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Absolute tolerance for comparing real components without an exact form.
pub const COMPARE_TOLERANCE: f64 = 1e-12;

/// `log n / log base` with integer arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LogRatio {
    pub n: u64,
    pub base: u64,
}

impl LogRatio {
    pub fn new(n: u64, base: u64) -> Result<Self> {
        if n == 0 || base < 2 {
            return Err(Error::input(format!(
                "log ratio needs n >= 1 and base >= 2, got log {n} / log {base}"
            )));
        }
        Ok(Self { n, base })
    }

    pub fn value(&self) -> f64 {
        (self.n as f64).ln() / (self.base as f64).ln()
    }

    /// `(i/j, r, t)` with `n = r^i`, `base = t^j` and `r`, `t` not perfect powers.
    /// For `n = 1` the coefficient is 0 and `r = 1`.
    fn canonical(&self) -> (Ratio<u64>, u64, u64) {
        let (t, j) = perfect_power(self.base);
        if self.n == 1 {
            return (Ratio::from_integer(0), 1, t);
        }
        let (r, i) = perfect_power(self.n);
        (Ratio::new(i as u64, j as u64), r, t)
    }

    /// Exact value when `log n / log base` is rational.
    pub fn as_rational(&self) -> Option<Ratio<u64>> {
        let (c, r, t) = self.canonical();
        (r == 1 || r == t).then_some(c)
    }

    /// Exact comparison when both sides reduce to a common transcendental
    /// factor (or are rational); `None` otherwise.
    pub fn exact_cmp(&self, other: &LogRatio) -> Option<Ordering> {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Some(a.cmp(&b));
        }
        let (ca, ra, ta) = self.canonical();
        let (cb, rb, tb) = other.canonical();
        if ca == Ratio::from_integer(0) || cb == Ratio::from_integer(0) {
            // one side is 0 and the other is strictly positive
            return Some(ca.cmp(&cb));
        }
        (ra == rb && ta == tb).then(|| ca.cmp(&cb))
    }
}

impl fmt::Display for LogRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "log {} / log {}", self.n, self.base)
    }
}

/// Largest `k` with `n = r^k`, returned as `(r, k)`.
fn perfect_power(n: u64) -> (u64, u32) {
    if n < 4 {
        return (n, 1);
    }
    for k in (2..=63u32).rev() {
        let r = (n as f64).powf(1.0 / f64::from(k)).round() as u64;
        for cand in r.saturating_sub(1)..=r + 1 {
            if cand >= 2 && cand.checked_pow(k) == Some(n) {
                return (cand, k);
            }
        }
    }
    (n, 1)
}

/// Second component: a real value, optionally with an exact log-ratio form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Delta {
    pub value: f64,
    pub symbolic: Option<LogRatio>,
}

impl Delta {
    pub fn real(value: f64) -> Self {
        Self {
            value,
            symbolic: None,
        }
    }

    pub fn log_ratio(n: u64, base: u64) -> Result<Self> {
        let r = LogRatio::new(n, base)?;
        Ok(Self {
            value: r.value(),
            symbolic: Some(r),
        })
    }

    pub fn describe(&self) -> String {
        match (self.symbolic, self.symbolic.and_then(|s| s.as_rational())) {
            (Some(_), Some(q)) => q.to_string(),
            (Some(s), None) => format!("{s} = {}", fmt_real(self.value)),
            (None, _) => fmt_real(self.value),
        }
    }
}

pub(crate) fn fmt_real(x: f64) -> String {
    let s = format!("{x:.15}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Defined,
    Computed,
    DefaultZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentProvenance {
    pub alpha: Provenance,
    pub delta: Provenance,
    pub iota: Provenance,
}

/// The triple `(alpha, delta, iota)` with an optional dimension vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfoCardinality {
    pub alpha: u8,
    pub delta: Delta,
    pub iota: f64,
    pub dim_vector: Option<Vec<f64>>,
    pub provenance: ComponentProvenance,
}

impl InfoCardinality {
    pub fn new(
        alpha: u8,
        delta: Delta,
        iota: f64,
        provenance: ComponentProvenance,
    ) -> Result<Self> {
        if alpha > 1 {
            return Err(Error::input(format!("alpha must be 0 or 1, got {alpha}")));
        }
        if !(0.0..=1.0).contains(&delta.value) {
            return Err(Error::input(format!(
                "delta must be in [0, 1], got {}",
                delta.value
            )));
        }
        if !iota.is_finite() {
            return Err(Error::input("iota must be finite"));
        }
        Ok(Self {
            alpha,
            delta,
            iota,
            dim_vector: None,
            provenance,
        })
    }

    /// Triple with every component tagged as defined.
    pub fn defined(alpha: u8, delta: Delta, iota: f64) -> Result<Self> {
        let d = Provenance::Defined;
        Self::new(
            alpha,
            delta,
            iota,
            ComponentProvenance {
                alpha: d,
                delta: d,
                iota: d,
            },
        )
    }

    pub fn with_dim_vector(mut self, v: Vec<f64>) -> Result<Self> {
        match v.first() {
            None => return Err(Error::input("dimension vector is empty")),
            Some(&first) if (first - self.delta.value).abs() > COMPARE_TOLERANCE => {
                return Err(Error::input(format!(
                    "dimension vector starts with {first} but delta is {}",
                    self.delta.value
                )));
            }
            _ => {}
        }
        self.dim_vector = Some(v);
        Ok(self)
    }

    /// Dimension vector, or `[delta]` when none is attached.
    pub fn vector(&self) -> Vec<f64> {
        self.dim_vector
            .clone()
            .unwrap_or_else(|| vec![self.delta.value])
    }
}

impl fmt::Display for InfoCardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.alpha,
            self.delta.describe(),
            fmt_real(self.iota)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "less",
            Comparison::Equal => "equal",
            Comparison::Greater => "greater",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompareMethod {
    Exact,
    Tolerance,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentStep {
    pub component: &'static str,
    pub left: String,
    pub right: String,
    pub outcome: Comparison,
    pub method: CompareMethod,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareResult {
    pub outcome: Comparison,
    /// Components examined in order, ending at the deciding one.
    pub trace: Vec<ComponentStep>,
}

impl CompareResult {
    pub fn decided_by(&self) -> Option<&'static str> {
        self.trace
            .last()
            .filter(|s| s.outcome != Comparison::Equal)
            .map(|s| s.component)
    }
}

fn cmp_real(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= COMPARE_TOLERANCE {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn cmp_delta(a: &Delta, b: &Delta) -> (Ordering, CompareMethod) {
    if let (Some(x), Some(y)) = (a.symbolic, b.symbolic) {
        if let Some(o) = x.exact_cmp(&y) {
            return (o, CompareMethod::Exact);
        }
    }
    (cmp_real(a.value, b.value), CompareMethod::Tolerance)
}

/// Lexicographic comparison on `(alpha, delta, iota)`.
pub fn compare(a: &InfoCardinality, b: &InfoCardinality) -> CompareResult {
    let mut trace = Vec::with_capacity(3);
    let alpha = a.alpha.cmp(&b.alpha);
    trace.push(ComponentStep {
        component: "alpha",
        left: a.alpha.to_string(),
        right: b.alpha.to_string(),
        outcome: alpha.into(),
        method: CompareMethod::Exact,
    });
    if alpha != Ordering::Equal {
        return CompareResult {
            outcome: alpha.into(),
            trace,
        };
    }
    let (delta, method) = cmp_delta(&a.delta, &b.delta);
    trace.push(ComponentStep {
        component: "delta",
        left: a.delta.describe(),
        right: b.delta.describe(),
        outcome: delta.into(),
        method,
    });
    if delta != Ordering::Equal {
        return CompareResult {
            outcome: delta.into(),
            trace,
        };
    }
    let iota = cmp_real(a.iota, b.iota);
    trace.push(ComponentStep {
        component: "iota",
        left: fmt_real(a.iota),
        right: fmt_real(b.iota),
        outcome: iota.into(),
        method: CompareMethod::Tolerance,
    });
    CompareResult {
        outcome: iota.into(),
        trace,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Dominates,
    Dominated,
    Incomparable,
    Equal,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::Dominates => "dominates",
            Dominance::Dominated => "dominated",
            Dominance::Incomparable => "incomparable",
            Dominance::Equal => "equal",
        })
    }
}

impl From<Ordering> for Dominance {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Dominance::Dominated,
            Ordering::Equal => Dominance::Equal,
            Ordering::Greater => Dominance::Dominates,
        }
    }
}

/// `alpha` first, then the dimension vectors componentwise, then `iota`.
/// Mixed signs across vector components give `Incomparable`.
pub fn compare_extended(a: &InfoCardinality, b: &InfoCardinality) -> Result<Dominance> {
    let (va, vb) = (a.vector(), b.vector());
    if va.len() != vb.len() {
        return Err(Error::input(format!(
            "dimension vectors differ in length: {} vs {}",
            va.len(),
            vb.len()
        )));
    }
    let alpha = a.alpha.cmp(&b.alpha);
    if alpha != Ordering::Equal {
        return Ok(alpha.into());
    }
    let mut signs = va.iter().zip(&vb).enumerate().map(|(i, (x, y))| {
        if i == 0 {
            cmp_delta(&a.delta, &b.delta).0
        } else {
            cmp_real(*x, *y)
        }
    });
    let (mut greater, mut less) = (false, false);
    for o in &mut signs {
        match o {
            Ordering::Greater => greater = true,
            Ordering::Less => less = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (greater, less) {
        (true, true) => Dominance::Incomparable,
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::Dominated,
        (false, false) => cmp_real(a.iota, b.iota).into(),
    })
}
