//! Small deterministic output helpers: JSON string escaping, fixed-width
//! float formatting, and the write-to-path-or-stdout tail of every command.
//!
//! Serialization here is hand-rolled on purpose: the schemas are tiny, the
//! field order is part of the contract, and byte determinism across runs is
//! a tested property.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use crate::Failure;

/// Escapes a string for inclusion in a JSON document, without the quotes.
pub fn esc(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// A finite float as a JSON number token with 17 significant digits,
/// enough to round-trip every f64 exactly.
pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Joins already-serialized items into a JSON array.
pub fn array<I: IntoIterator<Item = String>>(items: I) -> String {
    let body: Vec<String> = items.into_iter().collect();
    format!("[{}]", body.join(","))
}

/// Writes `content` to `out` when given, stdout otherwise.
pub fn write_out(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| Failure {
            code: 3,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            io::stdout().write_all(content.as_bytes()).map_err(|e| Failure {
                code: 3,
                message: format!("cannot write to stdout: {e}"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escapes_controls_and_quotes() {
        assert_eq!(esc("a\"b\\c\nd\u{1}"), "a\\\"b\\\\c\\nd\\u0001");
    }

    #[test]
    fn floats_have_17_significant_digits() {
        assert_eq!(f17(1.0), "1.0000000000000000e0");
        assert_eq!(f17(0.1), "1.0000000000000001e-1");
        let x = 2.618033988749895_f64;
        assert_eq!(f17(x).parse::<f64>().unwrap(), x);
    }
}
