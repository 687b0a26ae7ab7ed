//! graph6 text encoding, as produced by nauty's `geng`/`showg`.
//!
//! Layout: the vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, each byte offset by 63.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push((n as u8 + 63) as char);
        } else {
            out.push('~');
            for shift in [12, 6, 0] {
                out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
            }
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            let row = self.row(j);
            for i in 0..j {
                acc = (acc << 1) | ((row >> i) & 1) as u8;
                k += 1;
                if k == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push(((acc << (6 - k)) + 63) as char);
        }
        out
    }

    /// Parses one graph6 line. A leading `>>graph6<<` header and trailing
    /// whitespace are accepted.
    pub fn from_graph6(line: &str) -> Result<Graph> {
        let base = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
        let bytes = line[base..].trim_end().as_bytes();
        let err = |i: usize, reason: String| Error::Parse { offset: base + i, reason };

        let byte = |i: usize| -> Result<u8> {
            match bytes.get(i) {
                None => Err(err(i, "unexpected end of line".into())),
                Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
                Some(&b) => Err(err(i, format!("byte 0x{b:02x} outside graph6 range"))),
            }
        };

        let (n, mut pos) = match bytes.first() {
            None => return Err(err(0, "empty line".into())),
            Some(b'~') => {
                if bytes.get(1) == Some(&b'~') {
                    return Err(err(1, format!("more than {MAX_VERTICES} vertices")));
                }
                let mut n = 0usize;
                for i in 1..4 {
                    n = (n << 6) | byte(i)? as usize;
                }
                (n, 4)
            }
            Some(_) => (byte(0)? as usize, 1),
        };
        if n > MAX_VERTICES {
            return Err(err(0, format!("{n} vertices exceeds the {MAX_VERTICES}-vertex cap")));
        }

        for i in pos..bytes.len() {
            byte(i)?;
        }
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if bytes.len() != pos + needed {
            return Err(err(
                bytes.len().min(pos + needed),
                format!("expected {needed} edge bytes for n = {n}, found {}", bytes.len() - pos),
            ));
        }

        let mut adj = vec![0u64; n];
        let mut cur = 0u8;
        let mut left = 0;
        for j in 1..n {
            for i in 0..j {
                if left == 0 {
                    cur = byte(pos)?;
                    pos += 1;
                    left = 6;
                }
                left -= 1;
                if (cur >> left) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }
}

/// Reads a graph6 file, one graph per line; blank lines are skipped.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let g = Graph::from_graph6(&line).map_err(|e| match e {
            Error::Parse { offset, reason } => Error::Parse {
                offset,
                reason: format!("{}:{}: {reason}", path.display(), lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

/// Writes graphs one per line, newline terminated.
pub fn write_graph6_file<'a, I>(path: impl AsRef<Path>, graphs: I) -> Result<()>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let path = path.as_ref();
    let mut buf = Vec::new();
    for g in graphs {
        buf.extend_from_slice(g.to_graph6().as_bytes());
        buf.push(b'\n');
    }
    let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(&buf).map_err(|e| Error::io(path, e))
}
