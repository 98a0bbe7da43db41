//! Text formats: rack tables, 2-cochains, Gauss codes and coloring dumps.
//!
//! All readers skip blank lines and `#` comments (whole-line or trailing) and
//! tolerate arbitrary runs of whitespace. Diagnostics carry 1-based line and
//! column numbers.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rackinv_core::{Cochain2, Coloring, GaussDiagram, RackError, RackTable};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error("Gauss code: {0}")]
    Link(#[from] rackinv_core::link::LinkError),
    /// The table is well formed but fails the rack axioms.
    #[error("{0}")]
    Rack(RackError),
}

impl FormatError {
    /// True for errors about the content's meaning rather than its syntax.
    pub fn is_domain(&self) -> bool {
        matches!(self, FormatError::Rack(_))
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn number(&self) -> Result<u64, FormatError> {
        self.text.parse().map_err(|_| {
            self.error(format!(
                "expected a non-negative integer, found {:?}",
                self.text
            ))
        })
    }
}

/// Content lines with comments removed, each split into tokens.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..col],
                        line: i + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_owned(),
        source,
    })
}

type Rows<'a> = Vec<Vec<(u64, Token<'a>)>>;

/// Reads a header line of `arity` integers followed by `n` rows of `n`
/// integers, where `n` is the first header value.
fn parse_square<'a>(
    text: &'a str,
    arity: usize,
    what: &str,
) -> Result<(Vec<u64>, Rows<'a>), FormatError> {
    let lines = lines(text);
    let mut it = lines.iter();
    let header = it
        .next()
        .ok_or_else(|| FormatError::Truncated(format!("missing {what} header")))?;
    if header.len() != arity {
        let tok = header.get(arity).unwrap_or(&header[0]);
        return Err(tok.error(format!("{what} header should have {arity} value(s)")));
    }
    let head = header
        .iter()
        .map(Token::number)
        .collect::<Result<Vec<_>, _>>()?;
    let n = head[0] as usize;
    if n == 0 {
        return Err(header[0].error("order must be positive"));
    }
    let mut rows = Vec::new();
    for r in 0..n {
        let line = it
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("expected {n} rows, found {r}")))?;
        if line.len() != n {
            let tok = line.get(n).unwrap_or(&line[line.len() - 1]);
            return Err(tok.error(format!(
                "row {} has {} entries, expected {n}",
                r + 1,
                line.len()
            )));
        }
        let row = line
            .iter()
            .map(|t| t.number().map(|v| (v, t.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if let Some(extra) = it.next() {
        return Err(extra[0].error(format!("unexpected content after {n} rows")));
    }
    Ok((head, rows))
}

pub fn parse_rack(text: &str) -> Result<RackTable, FormatError> {
    let (head, rows) = parse_square(text, 1, "rack")?;
    let n = head[0];
    if n > 255 {
        return Err(FormatError::Rack(RackError::TooLarge(n as usize)));
    }
    let mut table = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for (v, tok) in row {
            if v == 0 || v > n {
                return Err(tok.error(format!("entry {v} is outside 1..={n}")));
            }
            out.push(v as usize);
        }
        table.push(out);
    }
    RackTable::from_rows(&table).map_err(FormatError::Rack)
}

pub fn write_rack(rack: &RackTable) -> String {
    let mut out = format!("{}\n", rack.order());
    for row in rack.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_cochain(text: &str) -> Result<Cochain2, FormatError> {
    let (head, rows) = parse_square(text, 2, "cochain")?;
    let m = head[1];
    if !(2..=u32::MAX as u64).contains(&m) {
        let tok = &lines(text)[0][1];
        return Err(tok.error(format!(
            "modulus must be at least 2 and fit in 32 bits, got {m}"
        )));
    }
    let mut values = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for (v, tok) in row {
            if v >= m {
                return Err(tok.error(format!("residue {v} is not reduced mod {m}")));
            }
            out.push(v);
        }
        values.push(out);
    }
    Ok(Cochain2::from_rows(m as u32, &values).expect("shape and modulus checked"))
}

pub fn write_cochain(phi: &Cochain2) -> String {
    let mut out = format!("{} {}\n", phi.order(), phi.modulus());
    for row in phi.rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// A Gauss code may span several lines; they are joined before parsing.
pub fn parse_link(text: &str) -> Result<GaussDiagram, FormatError> {
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(body.parse()?)
}

pub fn write_link(diagram: &GaussDiagram) -> String {
    format!("{diagram}\n")
}

/// One coloring per line as `arc=color` pairs, arcs numbered from 1.
pub fn write_colorings(colorings: &[Coloring]) -> String {
    let mut out = String::new();
    for c in colorings {
        let _ = writeln!(out, "{c}");
    }
    out
}

pub fn load_rack(path: &Path) -> Result<RackTable, FormatError> {
    parse_rack(&read_file(path)?)
}

pub fn load_cochain(path: &Path) -> Result<Cochain2, FormatError> {
    parse_cochain(&read_file(path)?)
}

pub fn load_link(path: &Path) -> Result<GaussDiagram, FormatError> {
    parse_link(&read_file(path)?)
}
