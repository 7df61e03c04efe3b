//! Text formats.
//!
//! Words file: one word per line over `0`, `1`, `2`; blank lines and lines
//! starting with `#` are skipped.
//!
//! Graph file: a header line `n m`, then `m` lines `i j` with
//! `1 <= i < j <= n`; `#` comments and blank lines are skipped.

use std::collections::HashSet;
use std::io::{self, Write};

use thiserror::Error;

use crate::reduction::{gadget_words, threshold_base, Graph, ReductionError};
use crate::words::{Word, WordError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {source}")]
    Word { line: usize, source: WordError },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: ReductionError },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_words(text: &str) -> Result<Vec<Word>, FormatError> {
    content_lines(text)
        .map(|(line, l)| {
            l.parse()
                .map_err(|source| FormatError::Word { line, source })
        })
        .collect()
}

pub fn write_words<'a, W, I>(mut out: W, words: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Word>,
{
    for x in words {
        writeln!(out, "{x}")?;
    }
    Ok(())
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize), FormatError> {
    let syntax = |msg: &str| FormatError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let mut it = l.split_whitespace();
    let a = it.next().ok_or_else(|| syntax("expected two integers"))?;
    let b = it.next().ok_or_else(|| syntax("expected two integers"))?;
    if it.next().is_some() {
        return Err(syntax("trailing tokens"));
    }
    let a = a
        .parse()
        .map_err(|_| syntax(&format!("invalid integer {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| syntax(&format!("invalid integer {b:?}")))?;
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        msg: "missing header \"n m\"".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let mut last_line = hline;
    for (line, l) in lines {
        let (i, j) = parse_pair(line, l)?;
        let source = if i == 0 || i >= j || j > n {
            Some(ReductionError::BadEdge(i, j))
        } else if !seen.insert((i, j)) {
            Some(ReductionError::DuplicateEdge(i, j))
        } else {
            None
        };
        if let Some(source) = source {
            return Err(FormatError::Graph { line, source });
        }
        edges.push((i, j));
        last_line = line;
    }
    if edges.len() != m {
        return Err(FormatError::Syntax {
            line: last_line,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges).map_err(|source| FormatError::Graph {
        line: hline,
        source,
    })
}

pub fn write_graph<W: Write>(mut out: W, g: &Graph) -> io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.m())?;
    for (i, j) in g.edges() {
        writeln!(out, "{i} {j}")?;
    }
    Ok(())
}

/// Streams the reduced instance as a words file with a header comment.
pub fn write_instance<W: Write>(mut out: W, g: &Graph, k: Option<usize>) -> io::Result<usize> {
    let base = threshold_base(g.n());
    writeln!(out, "# n={} m={} threshold_base={}", g.n(), g.m(), base)?;
    if let Some(k) = k {
        writeln!(out, "# k={} threshold={}", k, base + k)?;
    }
    let mut count = 0;
    for x in gadget_words(g) {
        writeln!(out, "{x}")?;
        count += 1;
    }
    Ok(count)
}
