//! Text formats: sequence strings, profile CSVs, histogram CSVs and plain P1
//! bitmaps.

use std::fmt::Write as _;

use crate::error::{Error, Result};

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// One character per symbol, `0-9` then `a-z`.
pub fn format_sequence(s: &[u8]) -> Result<String> {
    s.iter()
        .enumerate()
        .map(|(position, &b)| {
            DIGITS
                .get(b as usize)
                .map(|&c| c as char)
                .ok_or(Error::InvalidParameter(format!(
                    "symbol {b} at {position} has no single-character form"
                )))
        })
        .collect()
}

/// Inverse of [`format_sequence`]; whitespace is ignored.
pub fn parse_sequence(text: &str) -> Result<Vec<u8>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| {
            c.to_digit(36)
                .map(|d| d as u8)
                .ok_or_else(|| Error::Parse(format!("bad symbol '{c}'")))
        })
        .collect()
}

/// `N,value` rows followed by `#` comment lines.
pub fn profile_csv(rows: &[(usize, u64)], comments: &[String]) -> String {
    let mut out = String::from("N,value\n");
    for (n, v) in rows {
        let _ = writeln!(out, "{n},{v}");
    }
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    out
}

/// Rows of a profile CSV; comment lines are skipped.
pub fn parse_profile_csv(text: &str) -> Result<Vec<(usize, u64)>> {
    let mut lines = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty());
    match lines.next() {
        Some("N,value") => {}
        other => {
            return Err(Error::Parse(format!(
                "expected header N,value, got {other:?}"
            )))
        }
    }
    lines
        .map(|l| {
            let (n, v) = l
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad row '{l}'")))?;
            let n = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad N in '{l}'")))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad value in '{l}'")))?;
            Ok((n, v))
        })
        .collect()
}

/// Plain PBM: `P1`, `cols rows`, then one line of space-separated bits per
/// row. No trailing newline.
pub fn p1_bitmap(bits: &[u8], cols: usize, rows: usize) -> Result<String> {
    if cols == 0 || rows == 0 || bits.len() != cols * rows {
        return Err(Error::InvalidParameter(format!(
            "{} symbols do not fill a {cols}x{rows} grid",
            bits.len()
        )));
    }
    if let Some((position, &symbol)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
        return Err(Error::NonBinary { symbol, position });
    }
    let mut out = format!("P1\n{cols} {rows}");
    for row in bits.chunks(cols) {
        out.push('\n');
        let line: Vec<&str> = row
            .iter()
            .map(|&b| if b == 0 { "0" } else { "1" })
            .collect();
        out.push_str(&line.join(" "));
    }
    Ok(out)
}

/// Parses `COLSxROWS`.
pub fn parse_grid(text: &str) -> Result<(usize, usize)> {
    let (c, r) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("grid '{text}' is not COLSxROWS")))?;
    let c = c
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid '{text}'")))?;
    let r = r
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid '{text}'")))?;
    Ok((c, r))
}

/// Parses `p^r` or `p` into `(p, r)`.
pub fn parse_field(text: &str) -> Result<(u32, usize)> {
    let bad = || Error::Parse(format!("field '{text}' is not p^r"));
    match text.split_once('^') {
        Some((p, r)) => Ok((
            p.trim().parse().map_err(|_| bad())?,
            r.trim().parse().map_err(|_| bad())?,
        )),
        None => Ok((text.trim().parse().map_err(|_| bad())?, 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bitmap_format() {
        assert_eq!(p1_bitmap(&[0; 4], 2, 2).unwrap(), "P1\n2 2\n0 0\n0 0");
        assert_eq!(
            p1_bitmap(&[0, 1, 1, 0, 1, 0], 3, 2).unwrap(),
            "P1\n3 2\n0 1 1\n0 1 0"
        );
        assert!(p1_bitmap(&[0; 3], 2, 2).is_err());
        assert!(matches!(
            p1_bitmap(&[0, 2], 2, 1),
            Err(Error::NonBinary { .. })
        ));
    }

    #[test]
    fn csv_and_specs() {
        let csv = profile_csv(&[(10, 6), (11, 6)], &["connection 1,0,1".into()]);
        assert_eq!(csv, "N,value\n10,6\n11,6\n# connection 1,0,1\n");
        assert_eq!(parse_profile_csv(&csv).unwrap(), vec![(10, 6), (11, 6)]);
        assert!(parse_profile_csv("n,v\n1,2").is_err());
        assert_eq!(parse_grid("64x32").unwrap(), (64, 32));
        assert_eq!(parse_field("5^2").unwrap(), (5, 2));
        assert_eq!(parse_field("3").unwrap(), (3, 1));
        assert!(parse_field("q").is_err());
    }

    proptest! {
        #[test]
        fn sequence_round_trip(s in prop::collection::vec(0u8..36, 0..100)) {
            let text = format_sequence(&s).unwrap();
            prop_assert_eq!(parse_sequence(&text).unwrap(), s);
        }
    }
}
