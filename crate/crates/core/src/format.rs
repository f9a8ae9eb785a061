//! Plain-text file formats.
//!
//! ```text
//! sb <m> <n>          hc <n>          gf <p> <m> <n>     graph <nv> <ne>
//! 1 0 v               b 1 2           1 0 2              e 1 2
//! 0 1 1               b 1 3           0 1 1              e 2 2
//! ```
//!
//! Tokens are separated by whitespace and the file may end with one
//! newline. A line without tokens is only valid as a row of a matrix with
//! no columns. Printing produces the canonical form
//! (single spaces, one trailing newline), which every parser accepts.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::FieldMatrix;
use crate::graphs::Graph;
use crate::hereditary::HereditaryCollection;
use crate::matrix::SBMatrix;
use crate::semiring::SBElem;
use crate::subset::{ElementSet, MAX_GROUND};

/// Splits into lines, allowing a single trailing newline.
fn lines(text: &str) -> Result<Vec<&str>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err(Error::parse(1, "empty input"));
    }
    Ok(body.split('\n').collect())
}

fn number(token: &str, line: usize) -> Result<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(line, format!("expected a number, found `{token}`")));
    }
    if token.len() > 1 && token.starts_with('0') {
        return Err(Error::parse(line, format!("leading zero in `{token}`")));
    }
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("number `{token}` is too large")))
}

fn header(line: &str, keyword: &str, count: usize) -> Result<Vec<usize>> {
    let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
    if tokens.first() != Some(&keyword) {
        return Err(Error::parse(
            1,
            format!("expected header `{keyword}`, found `{}`", line.trim()),
        ));
    }
    if tokens.len() != count + 1 {
        return Err(Error::parse(
            1,
            format!("header `{keyword}` takes {count} numbers"),
        ));
    }
    tokens[1..].iter().map(|t| number(t, 1)).collect()
}

fn expect_rows(lines: &[&str], rows: usize) -> Result<()> {
    if lines.len() != rows + 1 {
        return Err(Error::parse(
            lines.len().min(rows + 2),
            format!("expected {rows} rows, found {}", lines.len() - 1),
        ));
    }
    Ok(())
}

fn row_tokens(line: &str, line_no: usize, expected: usize) -> Result<Vec<&str>> {
    let tokens: Vec<&str> = line.split_ascii_whitespace().collect();
    if tokens.len() != expected {
        return Err(Error::parse(
            line_no,
            format!("expected {expected} entries, found {}", tokens.len()),
        ));
    }
    Ok(tokens)
}

/// Parses an `sb` file. With `boolean` set, `v` entries are rejected.
pub fn parse_sb(text: &str, boolean: bool) -> Result<SBMatrix> {
    let lines = lines(text)?;
    let dims = header(lines[0], "sb", 2)?;
    let (m, n) = (dims[0], dims[1]);
    expect_rows(&lines, m)?;
    let mut data = Vec::with_capacity(m * n);
    for (i, line) in lines[1..].iter().enumerate() {
        for token in row_tokens(line, i + 2, n)? {
            let e = SBElem::from_token(token)
                .ok_or_else(|| Error::parse(i + 2, format!("invalid entry `{token}`")))?;
            if boolean && e == SBElem::Ghost {
                return Err(Error::parse(i + 2, "ghost entry `v` in a boolean matrix"));
            }
            data.push(e);
        }
    }
    SBMatrix::new(m, n, data)
}

pub fn print_sb(a: &SBMatrix) -> String {
    let mut out = format!("sb {} {}\n", a.rows(), a.cols());
    for row in a.row_iter() {
        let tokens: Vec<&str> = row.iter().map(|e| e.token()).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_gf(text: &str) -> Result<FieldMatrix> {
    let lines = lines(text)?;
    let dims = header(lines[0], "gf", 3)?;
    let (p, m, n) = (dims[0], dims[1], dims[2]);
    let p = u32::try_from(p).map_err(|_| Error::parse(1, "modulus too large"))?;
    expect_rows(&lines, m)?;
    let mut data = Vec::with_capacity(m * n);
    for (i, line) in lines[1..].iter().enumerate() {
        for token in row_tokens(line, i + 2, n)? {
            let v = number(token, i + 2)?;
            if v >= p as usize {
                return Err(Error::parse(i + 2, format!("entry {v} is not a residue modulo {p}")));
            }
            data.push(v as u32);
        }
    }
    FieldMatrix::new(p, m, n, data)
}

pub fn print_gf(a: &FieldMatrix) -> String {
    format!("gf {} {} {}\n{}", a.modulus(), a.rows(), a.cols(), a)
}

pub fn parse_hc(text: &str) -> Result<HereditaryCollection> {
    let lines = lines(text)?;
    let n = header(lines[0], "hc", 1)?[0];
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            found: n,
            limit: MAX_GROUND,
        });
    }
    let mut bases = Vec::new();
    for (i, line) in lines[1..].iter().enumerate() {
        let line_no = i + 2;
        let mut tokens = line.split_ascii_whitespace();
        if tokens.next() != Some("b") {
            return Err(Error::parse(line_no, "basis lines start with `b`"));
        }
        let mut basis = ElementSet::EMPTY;
        for token in tokens {
            let e = number(token, line_no)?;
            if e == 0 || e > n {
                return Err(Error::parse(line_no, format!("element {e} is outside 1..={n}")));
            }
            if basis.contains(e - 1) {
                return Err(Error::parse(line_no, format!("element {e} repeated")));
            }
            basis.insert(e - 1);
        }
        bases.push(basis);
    }
    HereditaryCollection::from_bases(n, bases)
}

pub fn print_hc(h: &HereditaryCollection) -> String {
    let mut out = format!("hc {}\n", h.ground_size());
    for b in h.bases() {
        out.push('b');
        for l in b.labels() {
            write!(out, " {l}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines = lines(text)?;
    let dims = header(lines[0], "graph", 2)?;
    let (nv, ne) = (dims[0], dims[1]);
    expect_rows(&lines, ne)?;
    let mut edges = Vec::with_capacity(ne);
    for (i, line) in lines[1..].iter().enumerate() {
        let line_no = i + 2;
        let tokens = row_tokens(line, line_no, 3)?;
        if tokens[0] != "e" {
            return Err(Error::parse(line_no, "edge lines start with `e`"));
        }
        let u = number(tokens[1], line_no)?;
        let v = number(tokens[2], line_no)?;
        for w in [u, v] {
            if w == 0 || w > nv {
                return Err(Error::parse(line_no, format!("vertex {w} is outside 1..={nv}")));
            }
        }
        edges.push((u - 1, v - 1));
    }
    Graph::new(nv, edges)
}

pub fn print_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// A matrix file of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixFile {
    Superboolean(SBMatrix),
    Field(FieldMatrix),
}

/// Dispatches on the header keyword.
pub fn parse_matrix(text: &str) -> Result<MatrixFile> {
    if text.starts_with("gf") {
        parse_gf(text).map(MatrixFile::Field)
    } else {
        parse_sb(text, false).map(MatrixFile::Superboolean)
    }
}
