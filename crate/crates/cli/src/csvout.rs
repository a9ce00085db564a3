//! CSV emission: RFC-4180-style rows with a header line, `.` decimal
//! separator, and floats carrying 12 significant digits so files
//! round-trip to within 1e-9.

use std::fmt::Write as _;

/// 12 significant digits in scientific notation; parses back with
/// `f64::from_str` exactly enough for any downstream comparison.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    format!("{:.11e}", x)
}

/// One CSV cell.
#[derive(Debug, Clone)]
pub enum Field {
    UInt(u64),
    Float(f64),
    Str(String),
    Empty,
}

impl From<u64> for Field {
    fn from(v: u64) -> Self {
        Field::UInt(v)
    }
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Float(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Str(v.to_string())
    }
}

/// Buffered CSV assembly with a fixed column set.
pub struct CsvWriter {
    columns: usize,
    buf: String,
}

impl CsvWriter {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = String::new();
        buf.push_str(&header.join(","));
        buf.push('\n');
        Self {
            columns: header.len(),
            buf,
        }
    }

    pub fn row(&mut self, fields: &[Field]) {
        assert_eq!(fields.len(), self.columns, "row width mismatch");
        for (i, f) in fields.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            match f {
                Field::UInt(v) => {
                    let _ = write!(self.buf, "{}", v);
                }
                Field::Float(v) => self.buf.push_str(&fmt_sig12(*v)),
                Field::Str(s) => {
                    debug_assert!(!s.contains([',', '"', '\n']), "cell needs quoting: {s}");
                    self.buf.push_str(s);
                }
                Field::Empty => {}
            }
        }
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
