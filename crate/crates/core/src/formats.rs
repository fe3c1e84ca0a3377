//! graph6, edge lists and weight files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coherence::WeightMap;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 string; `line` is used in error positions.
pub fn parse_graph6_at(s: &str, line: usize) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s).trim_end();
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(line, i + 1, format!("byte {b:#04x} is outside the graph6 range")));
        }
    }
    let (n, start) = match bytes {
        [] => return Err(Error::parse(line, 1, "empty graph6 string")),
        [126, 126, ..] => return Err(Error::parse(line, 1, "graphs are limited to 64 vertices")),
        [126, a, b, c, ..] => {
            (((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63), 4)
        }
        [126, ..] => return Err(Error::parse(line, 2, "truncated size field")),
        [b, ..] => (*b as usize - 63, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(line, 1, format!("graphs are limited to {MAX_VERTICES} vertices, got {n}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != need {
        let col = start + body.len().min(need) + 1;
        return Err(Error::parse(line, col, format!("expected {need} data bytes for n = {n}, got {}", body.len())));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Error::parse(line, start + k / 6 + 1, "nonzero padding bits"));
    }
    Graph::from_rows(&rows)
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    parse_graph6_at(s.trim(), 1)
}

/// One graph6 string per nonblank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_at(l.trim(), i + 1))
        .collect()
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Nonblank lines with their 1-based numbers, `#` comments removed.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, (col, s): (usize, &str)) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(line, col, format!("`{s}` is not a nonnegative integer")))
}

/// First line `n m`, then `m` lines `u v`, zero-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `n m` header"))?;
    let hf = fields(header);
    if hf.len() != 2 {
        return Err(Error::parse(hl, 1, "header must be `n m`"));
    }
    let n = number(hl, hf[0])?;
    let m = number(hl, hf[1])?;
    if n > MAX_VERTICES {
        return Err(Error::parse(hl, hf[0].0, format!("graphs are limited to {MAX_VERTICES} vertices")));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines.by_ref().take(m) {
        let f = fields(l);
        if f.len() != 2 {
            return Err(Error::parse(ln, 1, "edge lines must be `u v`"));
        }
        let (u, v) = (number(ln, f[0])?, number(ln, f[1])?);
        if u >= n {
            return Err(Error::parse(ln, f[0].0, format!("vertex {u} is not below {n}")));
        }
        if v >= n {
            return Err(Error::parse(ln, f[1].0, format!("vertex {v} is not below {n}")));
        }
        if u == v {
            return Err(Error::parse(ln, f[0].0, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(Error::parse(hl, hf[1].0, format!("header announces {m} edges, found {}", edges.len())));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, 1, "trailing content after the last edge"));
    }
    Graph::new(n, &edges)
}

/// An edge list when the first content line has two fields, graph6
/// otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match content_lines(text).next() {
        Some((_, l)) if fields(l).len() == 2 => parse_edge_list(text),
        Some((ln, l)) => parse_graph6_at(l.trim(), ln),
        None => Err(Error::parse(1, 1, "no graph in input")),
    }
}

fn rational(line: usize, (col, s): (usize, &str)) -> Result<BigRational> {
    let bad = || Error::parse(line, col, format!("`{s}` is not a fraction p/q"));
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::parse(line, col, "zero denominator"));
    }
    if p < BigInt::zero() || q < BigInt::zero() {
        return Err(Error::parse(line, col, "weights are nonnegative"));
    }
    Ok(BigRational::new(p, q))
}

/// Header `n=<count>`, then one `index p/q` line per vertex. With
/// `normalized` the total must be exactly 1.
pub fn parse_weights(text: &str, normalized: bool) -> Result<WeightMap> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `n=<count>` header"))?;
    let header = header.trim();
    let n: usize = header
        .strip_prefix("n=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::parse(hl, 1, "header must be `n=<count>`"))?;
    let mut weights: Vec<Option<BigRational>> = vec![None; n];
    for (ln, l) in lines {
        let f = fields(l);
        if f.len() != 2 {
            return Err(Error::parse(ln, 1, "weight lines must be `index p/q`"));
        }
        let i = number(ln, f[0])?;
        if i >= n {
            return Err(Error::parse(ln, f[0].0, format!("index {i} is not below {n}")));
        }
        if weights[i].is_some() {
            return Err(Error::parse(ln, f[0].0, format!("index {i} given twice")));
        }
        weights[i] = Some(rational(ln, f[1])?);
    }
    if let Some(i) = weights.iter().position(Option::is_none) {
        return Err(Error::parse(hl, 1, format!("no weight for vertex {i}")));
    }
    let w = WeightMap::new(weights.into_iter().map(Option::unwrap).collect())?;
    if normalized && !w.is_normalized() {
        return Err(Error::parse(hl, 1, format!("weights total {}, not 1", w.total())));
    }
    Ok(w)
}
