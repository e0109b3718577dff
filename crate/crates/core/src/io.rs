//! Parity-check matrix files: the sparse alist format and a dense fallback of
//! `0`/`1` rows.
//!
//! alist layout, all indices 1-based:
//!
//! ```text
//! n m
//! max_col_degree max_row_degree
//! col_degree_1 … col_degree_n
//! row_degree_1 … row_degree_m
//! <n lines: checks of each column, 0-padded to max_col_degree>
//! <m lines: variables of each row, 0-padded to max_row_degree>
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::gf2::{BinaryMatrix, Gf2Error};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input after line {line}: {message}")]
    Truncated { line: usize, message: String },
    #[error("column and row lists disagree: {0}")]
    InconsistentAdjacency(String),
    #[error(transparent)]
    Matrix(#[from] Gf2Error),
}

/// Non-empty lines with their 1-based line numbers.
struct Lines<'a> {
    inner: Box<dyn Iterator<Item = (usize, &'a str)> + 'a>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Self {
            inner: it,
            last: 0,
        }
    }

    fn numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>), ParseError> {
        let Some((line, text)) = self.inner.next() else {
            return Err(ParseError::Truncated {
                line: self.last,
                message: format!("expected {what}"),
            });
        };
        self.last = line;
        let values = text
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("`{t}` is not a non-negative integer in {what}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((line, values))
    }

    fn exactly(&mut self, count: usize, what: &str) -> Result<(usize, Vec<usize>), ParseError> {
        let (line, v) = self.numbers(what)?;
        if v.len() != count {
            return Err(ParseError::Syntax {
                line,
                message: format!("expected {count} values for {what}, found {}", v.len()),
            });
        }
        Ok((line, v))
    }
}

/// Reads one adjacency list, dropping zero padding and checking bounds.
fn adjacency(
    lines: &mut Lines<'_>,
    degree: usize,
    max_degree: usize,
    bound: usize,
    what: &str,
) -> Result<Vec<usize>, ParseError> {
    if max_degree == 0 && degree == 0 {
        // an all-zero matrix writes its padded lists as empty lines
        return Ok(Vec::new());
    }
    let (line, values) = lines.numbers(what)?;
    if values.len() > max_degree.max(degree) {
        return Err(ParseError::Syntax {
            line,
            message: format!("{what} has {} entries, max degree is {max_degree}", values.len()),
        });
    }
    let mut out: Vec<usize> = values.iter().copied().filter(|&v| v != 0).collect();
    if let Some(&bad) = out.iter().find(|&&v| v > bound) {
        return Err(ParseError::Syntax {
            line,
            message: format!("index {bad} in {what} exceeds {bound}"),
        });
    }
    if out.len() != degree {
        return Err(ParseError::Syntax {
            line,
            message: format!("{what} lists {} entries, declared degree is {degree}", out.len()),
        });
    }
    out.iter_mut().for_each(|v| *v -= 1);
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != out.len() {
        return Err(ParseError::Syntax {
            line,
            message: format!("{what} repeats an index"),
        });
    }
    Ok(sorted)
}

pub fn parse_alist(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.exactly(2, "header `n m`")?;
    let (n, m) = (header[0], header[1]);
    if n == 0 || m == 0 {
        return Err(ParseError::Syntax {
            line,
            message: "n and m must be positive".into(),
        });
    }
    let (_, max) = lines.exactly(2, "maximum degrees")?;
    let (max_col, max_row) = (max[0], max[1]);
    let (_, col_deg) = lines.exactly(n, "column degrees")?;
    let (_, row_deg) = lines.exactly(m, "row degrees")?;
    let mut cols = Vec::with_capacity(n);
    for c in 0..n {
        cols.push(adjacency(&mut lines, col_deg[c], max_col, m, &format!("column {}", c + 1))?);
    }
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        rows.push(adjacency(&mut lines, row_deg[r], max_row, n, &format!("row {}", r + 1))?);
    }
    let mut h = BinaryMatrix::zeros(m, n)?;
    for (r, vars) in rows.iter().enumerate() {
        for &c in vars {
            h.set(r, c, true);
        }
    }
    for (c, checks) in cols.iter().enumerate() {
        for &r in checks {
            if !h.get(r, c) {
                return Err(ParseError::InconsistentAdjacency(format!(
                    "column {} lists row {} but row {} does not list column {}",
                    c + 1,
                    r + 1,
                    r + 1,
                    c + 1
                )));
            }
        }
        if h.column_weight(c) != checks.len() {
            return Err(ParseError::InconsistentAdjacency(format!(
                "column {} has {} entries in the row lists and {} in its own list",
                c + 1,
                h.column_weight(c),
                checks.len()
            )));
        }
    }
    Ok(h)
}

pub fn serialize_alist(h: &BinaryMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let cols: Vec<Vec<usize>> = (0..n).map(|c| h.column(c).support()).collect();
    let rows: Vec<Vec<usize>> = (0..m).map(|r| h.row_support(r)).collect();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let padded = |list: &[usize], width: usize| {
        join(&mut list.iter().map(|&i| i + 1).chain(std::iter::repeat(0).take(width - list.len())))
    };
    let mut s = String::new();
    let _ = writeln!(s, "{n} {m}");
    let _ = writeln!(s, "{max_col} {max_row}");
    let _ = writeln!(s, "{}", join(&mut cols.iter().map(Vec::len)));
    let _ = writeln!(s, "{}", join(&mut rows.iter().map(Vec::len)));
    for c in &cols {
        let _ = writeln!(s, "{}", padded(c, max_col));
    }
    for r in &rows {
        let _ = writeln!(s, "{}", padded(r, max_row));
    }
    s
}

/// Rows of `0`/`1` characters, optionally separated by spaces.
pub fn parse_dense(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for ch in line.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '0' => row.push(0),
                '1' => row.push(1),
                other => {
                    return Err(ParseError::Syntax {
                        line: i + 1,
                        message: format!("unexpected character `{other}` in dense matrix"),
                    })
                }
            }
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError::Syntax {
                    line: i + 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Truncated {
            line: 0,
            message: "empty matrix".into(),
        });
    }
    Ok(BinaryMatrix::from_rows(&rows)?)
}

/// True when every non-empty line holds the same number of `0`/`1` symbols and
/// nothing else.
fn looks_dense(text: &str) -> bool {
    let mut width = None;
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let symbols: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
        if !symbols.iter().all(|&c| c == '0' || c == '1') {
            return false;
        }
        match width {
            None => width = Some(symbols.len()),
            Some(w) if w != symbols.len() => return false,
            _ => {}
        }
    }
    width.is_some()
}

/// alist unless the text is a rectangle of `0`/`1` symbols.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix, ParseError> {
    if looks_dense(text) {
        parse_dense(text)
    } else {
        parse_alist(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{circulant, eg_point_hyperplane_h, hamming_simplex_h};
    use proptest::prelude::*;

    #[test]
    fn tiny_alist() {
        let h = parse_alist("2 1\n1 2\n1 1\n2\n1\n1\n1 2\n").unwrap();
        assert_eq!(h.to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn example1_round_trip() {
        let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).unwrap();
        let text = serialize_alist(&h);
        assert!(text.starts_with("7 7\n3 3\n3 3 3 3 3 3 3\n"));
        assert_eq!(parse_alist(&text).unwrap(), h);
        assert_eq!(parse_matrix(&text).unwrap(), h);
    }

    #[test]
    fn constructed_round_trips() {
        for h in [hamming_simplex_h(4).unwrap(), eg_point_hyperplane_h(3, 2).unwrap()] {
            assert_eq!(parse_alist(&serialize_alist(&h)).unwrap(), h);
        }
    }

    #[test]
    fn padding_is_optional() {
        let h = BinaryMatrix::from_rows(&[[1u8, 1, 0], [0, 1, 1]]).unwrap();
        let unpadded = "3 2\n2 2\n1 2 1\n2 2\n1\n1 2\n2\n1 2\n2 3\n";
        assert_eq!(parse_alist(unpadded).unwrap(), h);
    }

    #[test]
    fn truncated_input() {
        let h = circulant(&[1, 1, 0, 1, 0, 0, 0]).unwrap();
        let text = serialize_alist(&h);
        let cut: String = text.lines().take(9).map(|l| format!("{l}\n")).collect();
        assert!(matches!(parse_alist(&cut), Err(ParseError::Truncated { line: 9, .. })));
        assert!(matches!(parse_alist(""), Err(ParseError::Truncated { .. })));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert!(matches!(
            parse_alist("2 1\n1 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_alist("2 1\n1 2\n1 1\n2\n1\n3\n1 2\n"),
            Err(ParseError::Syntax { line: 6, .. })
        ));
    }

    #[test]
    fn inconsistent_lists() {
        // column 2 claims row 1 but row 1 only lists column 1
        let text = "2 1\n1 1\n1 1\n1\n1\n1\n1\n";
        assert!(matches!(parse_alist(text), Err(ParseError::InconsistentAdjacency(_))));
    }

    #[test]
    fn dense_fallback() {
        let h = parse_matrix("1101000\n0110100\n").unwrap();
        assert_eq!((h.rows(), h.cols()), (2, 7));
        assert_eq!(parse_matrix("1 0 1\n0 1 1\n").unwrap().to_rows(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(matches!(parse_dense("10\n1\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn random_round_trip(rows in proptest::collection::vec(proptest::collection::vec(0u8..2, 9), 1..7)) {
            let h = BinaryMatrix::from_rows(&rows).unwrap();
            // all-zero columns or rows still serialize with degree 0
            prop_assert_eq!(parse_alist(&serialize_alist(&h)).unwrap(), h);
        }
    }
}
