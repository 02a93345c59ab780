//! Generator-matrix text format shared by binary and Z4 ingestion.
//!
//! One row per line, digits only, arbitrary whitespace between blocks,
//! `#` starts a comment that runs to the end of the line. Blank lines are
//! skipped.

use crate::error::ParseError;

/// Parses rows of digits `0..=max_digit`. Every row must have the same
/// number of digits and at least one row must be present.
pub fn parse_rows(text: &str, max_digit: u8) -> Result<Vec<Vec<u8>>, ParseError> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut first_len_line = 0;
    for (line_idx, raw) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut row = Vec::new();
        for (col_idx, ch) in content.chars().enumerate() {
            if ch.is_whitespace() {
                continue;
            }
            match ch.to_digit(10) {
                Some(d) if d <= max_digit as u32 => row.push(d as u8),
                _ => {
                    return Err(ParseError {
                        line: line_no,
                        column: col_idx + 1,
                        message: format!("unexpected character {ch:?} (expected a digit 0-{max_digit})"),
                    })
                }
            }
        }
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError {
                    line: line_no,
                    column: 1,
                    message: format!(
                        "row has {} entries but the row on line {} has {}",
                        row.len(),
                        first_len_line,
                        first.len()
                    ),
                });
            }
        } else {
            first_len_line = line_no;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "no matrix rows found".into(),
        });
    }
    Ok(rows)
}

/// Renders rows as digit strings, with a space every `group` digits.
pub fn render_rows(rows: &[Vec<u8>], group: usize) -> String {
    let mut out = String::new();
    for row in rows {
        for (i, d) in row.iter().enumerate() {
            if group > 0 && i > 0 && i % group == 0 {
                out.push(' ');
            }
            out.push(char::from(b'0' + d));
        }
        out.push('\n');
    }
    out
}
