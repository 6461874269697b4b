//! Output envelope: every run echoes its command and full parameter set,
//! and every number is fixed at 12 significant digits so identical
//! command lines produce byte-identical payloads.

use serde_json::{json, Value};

/// Rounds to 12 significant digits (the CLI-wide numeric precision).
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// String form of [`sig12`] for CSV cells.
pub fn fmt12(x: f64) -> String {
    let r = sig12(x);
    // prefer the shortest exact representation of the rounded value
    let plain = format!("{r}");
    if plain.len() <= 18 {
        plain
    } else {
        format!("{r:.11e}")
    }
}

pub fn sig12_slice(xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| sig12(x)).collect()
}

/// Reproducibility wrapper: command name plus echoed parameters.
pub struct Envelope {
    command: &'static str,
    params: Value,
}

impl Envelope {
    pub fn new(command: &'static str, params: Value) -> Self {
        Envelope { command, params }
    }

    /// `{"command": ..., "params": {...}, "result": {...}}` on stdout.
    pub fn print_json(&self, result: Value) {
        let doc = json!({
            "command": self.command,
            "params": self.params,
            "result": result,
        });
        println!("{doc}");
    }

    /// CSV with a leading `#` echo line, a header row, data rows, and
    /// trailing `#` summary lines. Comma separator, `.` decimal point,
    /// LF line endings.
    pub fn print_csv(&self, header: &[&str], rows: &[Vec<String>], summary: &[(&str, String)]) {
        let mut out = String::new();
        out.push_str(&format!("# command={} params={}\n", self.command, self.params));
        out.push_str(&header.join(","));
        out.push('\n');
        for row in rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        for (k, v) in summary {
            out.push_str(&format!("# {k}={v}\n"));
        }
        print!("{out}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_rounds_to_twelve_digits() {
        assert_eq!(sig12(2.0 / 3.0), 0.666666666667);
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(-1.0 / 3.0), -0.333333333333);
        assert_eq!(sig12(123456789012345.0), 123456789012000.0);
    }

    #[test]
    fn fmt12_is_plain_for_moderate_numbers() {
        assert_eq!(fmt12(0.6), "0.6");
        assert_eq!(fmt12(2.0 / 3.0), "0.666666666667");
        assert_eq!(fmt12(3.0), "3");
    }
}
