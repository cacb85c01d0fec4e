//! Plain-text code files.
//!
//! ```text
//! # ambient=8
//! 8 2
//! 11110000
//! 0000 1111
//! ```
//!
//! The first content line is `n k`, followed by `k` generator rows of `n`
//! bits. Whitespace inside rows is ignored and `#` starts a comment. A
//! comment of the form `# ambient=N` declares the ambient length and must
//! agree with `n`.

use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector};

#[derive(Clone, Debug, PartialEq)]
pub struct CodeFile {
    pub code: BinaryCode,
    /// Rows as written, before row reduction.
    pub rows: Vec<BitVector>,
    pub ambient: Option<usize>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_ambient(comment: &str, line: usize, column: usize) -> Result<Option<usize>> {
    let body = comment.trim_start_matches('#').trim();
    let Some(value) = body.strip_prefix("ambient=") else {
        return Ok(None);
    };
    value.trim().parse().map(Some).map_err(|_| {
        parse_err(
            line,
            column,
            format!("bad ambient length {:?}", value.trim()),
        )
    })
}

pub fn parse_code(text: &str) -> Result<CodeFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut ambient = None;
    let mut rows = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let (content, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some((pos, &raw[pos..]))),
            None => (raw, None),
        };
        if let Some((pos, c)) = comment {
            if let Some(a) = parse_ambient(c, line, pos + 1)? {
                ambient = Some(a);
            }
        }
        if content.trim().is_empty() {
            continue;
        }
        match header {
            None => {
                let mut fields = Vec::new();
                for (pos, tok) in tokens(content) {
                    let v: usize = tok.parse().map_err(|_| {
                        parse_err(line, pos + 1, format!("expected an integer, found {tok:?}"))
                    })?;
                    fields.push((pos, v));
                }
                if fields.len() != 2 {
                    let col = fields.get(2).map_or(1, |f| f.0 + 1);
                    return Err(parse_err(line, col, "header must be \"n k\""));
                }
                header = Some((fields[0].1, fields[1].1));
            }
            Some((n, k)) => {
                if rows.len() == k {
                    let col = content.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
                    return Err(parse_err(
                        line,
                        col,
                        format!("more than the declared {k} rows"),
                    ));
                }
                let mut bits = Vec::with_capacity(n);
                for (pos, ch) in content.char_indices() {
                    match ch {
                        '0' | '1' => {
                            if bits.len() == n {
                                return Err(parse_err(
                                    line,
                                    pos + 1,
                                    format!("row longer than {n} bits"),
                                ));
                            }
                            bits.push(ch == '1');
                        }
                        c if c.is_whitespace() => {}
                        c => {
                            return Err(parse_err(
                                line,
                                pos + 1,
                                format!("unexpected character {c:?}"),
                            ))
                        }
                    }
                }
                if bits.len() < n {
                    return Err(parse_err(
                        line,
                        content.trim_end().len() + 1,
                        format!("row has {} bits, expected {n}", bits.len()),
                    ));
                }
                rows.push(BitVector::from_bools(&bits));
            }
        }
    }
    let Some((n, k)) = header else {
        return Err(parse_err(last_line.max(1), 1, "missing \"n k\" header"));
    };
    if rows.len() < k {
        return Err(parse_err(
            last_line.max(1) + 1,
            1,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    if let Some(a) = ambient {
        if a != n {
            return Err(Error::LengthMismatch {
                expected: a,
                found: n,
            });
        }
    }
    let code = BinaryCode::new(n, rows.clone())?;
    Ok(CodeFile {
        code,
        rows,
        ambient,
    })
}

fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - s.as_ptr() as usize, tok))
}

/// Canonical form: `n k` with `k` the dimension, then the RREF basis.
pub fn write_code(code: &BinaryCode) -> String {
    let mut out = format!("{} {}\n", code.length(), code.dimension());
    for row in code.basis() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

/// As [`write_code`], preceded by an `# ambient=N` header.
pub fn write_subspace(code: &BinaryCode) -> String {
    format!("# ambient={}\n{}", code.length(), write_code(code))
}
