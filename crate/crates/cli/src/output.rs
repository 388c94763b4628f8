use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use fraczeta::{Error, Result};
use serde::Serialize;
use serde_json::Value;

/// Recorded with every artifact so a run can be repeated.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub precision_digits: u32,
    pub tool_version: &'static str,
    pub timestamp: String,
}

/// `SOURCE_DATE_EPOCH` pins the timestamp for reproducible output.
fn timestamp() -> String {
    let t = std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .map(|secs| UNIX_EPOCH + Duration::from_secs(secs))
        .unwrap_or_else(SystemTime::now);
    humantime::format_rfc3339_seconds(t).to_string()
}

impl RunManifest {
    pub fn new(command: &str, parameters: Value, seed: Option<u64>, precision_digits: u32) -> Self {
        Self {
            command: command.to_string(),
            parameters,
            seed,
            precision_digits,
            tool_version: env!("CARGO_PKG_VERSION"),
            timestamp: timestamp(),
        }
    }
}

fn significant_digits(repr: &str) -> usize {
    let mantissa = repr.split(['e', 'E']).next().unwrap_or(repr);
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let trimmed = digits.trim_start_matches('0');
    if mantissa.contains('.') {
        trimmed.len()
    } else {
        trimmed.trim_end_matches('0').len().max(1)
    }
}

/// Numbers whose text carries more than 15 significant digits become strings.
pub fn protect_wide_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => {
            let repr = n.to_string();
            if significant_digits(&repr) > 15 {
                *v = Value::String(repr);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(protect_wide_numbers),
        Value::Object(map) => map.values_mut().for_each(protect_wide_numbers),
        _ => {}
    }
}

pub struct Sink {
    pub manifest: RunManifest,
    pub path: Option<PathBuf>,
}

impl Sink {
    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.path {
            Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| io_error(p, e))?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    /// `{"manifest": ..., "result": ...}`.
    pub fn json<T: Serialize>(&self, result: &T) -> Result<()> {
        let mut doc = serde_json::json!({ "manifest": self.manifest, "result": result });
        protect_wide_numbers(&mut doc);
        let mut w = self.writer()?;
        serde_json::to_writer_pretty(&mut w, &doc)?;
        writeln!(w)
            .and_then(|_| w.flush())
            .map_err(|e| Error::Serialize(e.to_string()))
    }

    /// CSV body preceded by a `# manifest:` comment line.
    pub fn csv(&self, body: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
        let mut w = self.writer()?;
        self.manifest_line(&mut w)?;
        body(&mut w)?;
        w.flush().map_err(|e| Error::Serialize(e.to_string()))
    }

    pub fn text(&self, body: &str) -> Result<()> {
        let mut w = self.writer()?;
        self.manifest_line(&mut w)?;
        w.write_all(body.as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| Error::Serialize(e.to_string()))
    }

    fn manifest_line(&self, w: &mut dyn Write) -> Result<()> {
        let m = serde_json::to_string(&self.manifest)?;
        writeln!(w, "# manifest: {m}").map_err(|e| Error::Serialize(e.to_string()))
    }
}

pub fn io_error(path: &std::path::Path, e: io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        source: e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_counting() {
        assert_eq!(significant_digits("0.5"), 1);
        assert_eq!(significant_digits("1.4603545088095868"), 17);
        assert_eq!(significant_digits("-0.0001234"), 4);
        assert_eq!(significant_digits("1e-5"), 1);
        assert_eq!(significant_digits("1000"), 1);
        assert_eq!(significant_digits("12345678901234567"), 17);
    }

    #[test]
    fn wide_numbers_become_strings() {
        let mut v =
            serde_json::json!({"a": 0.5, "b": [1.4603545088095868, 3], "c": {"d": 0.1 + 0.2}});
        protect_wide_numbers(&mut v);
        assert_eq!(v["a"], serde_json::json!(0.5));
        assert_eq!(v["b"][0], serde_json::json!("1.4603545088095868"));
        assert_eq!(v["b"][1], serde_json::json!(3));
        assert_eq!(v["c"]["d"], serde_json::json!("0.30000000000000004"));
    }
}
