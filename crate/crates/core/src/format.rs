//! graph6 and sparse6 encodings, plus a plain adjacency-list text form.
//!
//! Headers (`>>graph6<<`, `>>sparse6<<`) are accepted on input and never
//! written. Parse errors carry the byte offset of the offending character.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::limits::check_hard;

const BIAS: u8 = 63;
const G6_HEADER: &str = ">>graph6<<";
const S6_HEADER: &str = ">>sparse6<<";

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + BIAS) as char);
        }
    }
}

/// Decodes `N(n)` starting at `bytes[at]`; returns `(n, bytes used)`.
fn decode_order(bytes: &[u8], at: usize, base: usize) -> Result<(usize, usize)> {
    let get = |i: usize| -> Result<u64> {
        match bytes.get(at + i) {
            None => Err(Error::format(base + at + i, "truncated order field")),
            Some(&b) if !(BIAS..=126).contains(&b) => Err(Error::format(
                base + at + i,
                format!("byte {b:#04x} outside 63..=126"),
            )),
            Some(&b) => Ok((b - BIAS) as u64),
        }
    };
    let first = get(0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let (len, start) = if get(1)? == 63 { (6, 2) } else { (3, 1) };
    let mut n = 0u64;
    for i in 0..len {
        n = (n << 6) | get(start + i)?;
    }
    Ok((n as usize, start + len))
}

fn push_bits(bits_out: &[bool], out: &mut String) {
    for chunk in bits_out.chunks(6) {
        let mut v = 0u8;
        for i in 0..6 {
            v = (v << 1) | chunk.get(i).copied().unwrap_or(false) as u8;
        }
        out.push((v + BIAS) as char);
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut body = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            body.push(g.has_edge(i, j));
        }
    }
    push_bits(&body, &mut out);
    out
}

fn strip_header<'a>(s: &'a str, header: &str) -> (&'a str, usize) {
    match s.strip_prefix(header) {
        Some(rest) => (rest, header.len()),
        None => (s, 0),
    }
}

pub fn from_graph6(input: &str) -> Result<Graph> {
    let (s, base) = strip_header(input.trim_end_matches(['\n', '\r']), G6_HEADER);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::format(base, "empty graph6 string"));
    }
    let (n, used) = decode_order(bytes, 0, base)?;
    check_hard("graph6 input", n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[used..];
    if body.len() != need {
        let at = base + used + body.len().min(need);
        return Err(Error::format(
            at,
            format!(
                "expected {need} body bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut stream = Vec::with_capacity(need * 6);
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::format(
                base + used + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
        let v = b - BIAS;
        for k in (0..6).rev() {
            stream.push(v >> k & 1 == 1);
        }
    }
    if stream[nbits..].iter().any(|&b| b) {
        return Err(Error::format(
            base + used + need - 1,
            "nonzero padding bits",
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if stream[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Bits needed to write `n - 1` in binary.
fn sparse6_width(n: usize) -> usize {
    let mut k = 0;
    while k < usize::BITS as usize && (n.saturating_sub(1) >> k) > 0 {
        k += 1;
    }
    k
}

pub fn to_sparse6(g: &Graph) -> String {
    let n = g.order();
    let k = sparse6_width(n);
    let mut out = String::from(":");
    encode_order(n, &mut out);
    let mut stream: Vec<bool> = Vec::new();
    let push_x = |stream: &mut Vec<bool>, x: usize| {
        for b in (0..k).rev() {
            stream.push(x >> b & 1 == 1);
        }
    };
    let mut lastj = 0;
    for j in 0..n {
        for i in bits(g.neighbors(j)).filter(|&i| i < j) {
            if j == lastj {
                stream.push(false);
                push_x(&mut stream, i);
            } else {
                stream.push(true);
                if j > lastj + 1 {
                    push_x(&mut stream, j);
                    stream.push(false);
                }
                push_x(&mut stream, i);
                lastj = j;
            }
        }
    }
    let pad = (6 - stream.len() % 6) % 6;
    if pad > 0 {
        if k < 6 && pad > k && n >= 2 && lastj == n - 2 && n == 1 << k {
            stream.push(false);
            stream.extend(std::iter::repeat_n(true, pad - 1));
        } else {
            stream.extend(std::iter::repeat_n(true, pad));
        }
    }
    push_bits(&stream, &mut out);
    out
}

pub fn from_sparse6(input: &str) -> Result<Graph> {
    let (s, base) = strip_header(input.trim_end_matches(['\n', '\r']), S6_HEADER);
    let bytes = s.as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(Error::format(base, "sparse6 strings start with ':'"));
    }
    let (n, used) = decode_order(bytes, 1, base)?;
    check_hard("sparse6 input", n)?;
    let k = sparse6_width(n);
    let start = 1 + used;
    let mut stream = Vec::new();
    for (i, &b) in bytes[start..].iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Error::format(
                base + start + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
        for s in (0..6).rev() {
            stream.push((b - BIAS) >> s & 1 == 1);
        }
    }
    let mut g = Graph::empty(n)?;
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= stream.len() {
        let b = stream[pos];
        let x = stream[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| acc << 1 | bit as usize);
        let offset = base + start + pos / 6;
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Error::format(offset, format!("self-loop at vertex {v}")));
        } else if g.has_edge(x, v) {
            return Err(Error::format(offset, format!("repeated edge {x}-{v}")));
        } else {
            g.set_edge(x, v);
        }
    }
    Ok(g)
}

/// graph6 or sparse6, by leading character.
pub fn parse_any(s: &str) -> Result<Graph> {
    let t = s.trim();
    if t.starts_with(S6_HEADER) || t.starts_with(':') {
        from_sparse6(t)
    } else if t.starts_with('&') {
        Err(Error::format(0, "digraph6 is not supported"))
    } else {
        from_graph6(t)
    }
}

/// One line per vertex: `v: n1 n2 ...`.
pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.order() {
        let nbrs: Vec<String> = bits(g.neighbors(v)).map(|w| w.to_string()).collect();
        out.push_str(&format!("{v}: {}\n", nbrs.join(" ")));
    }
    out
}

pub fn from_adjacency_list(s: &str) -> Result<Graph> {
    let mut lists = Vec::new();
    let mut offset = 0;
    for line in s.lines() {
        let here = offset;
        offset += line.len() + 1;
        if line.trim().is_empty() {
            continue;
        }
        let (head, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::format(here, "expected `v: neighbours`"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::format(here, format!("bad vertex {:?}", head.trim())))?;
        if v != lists.len() {
            return Err(Error::format(here, format!("vertex {v} out of sequence")));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|_| Error::format(here, format!("bad neighbour {w:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        lists.push(nbrs);
    }
    let n = lists.len();
    let mut edges = Vec::new();
    for (v, nbrs) in lists.iter().enumerate() {
        for &w in nbrs {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
            if !lists[w].contains(&v) {
                return Err(Error::InvalidParameters(format!(
                    "edge {v}-{w} listed on one side only"
                )));
            }
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // standard examples: K4 is "C~", P3 (0-1-2) is "Bg", K1 is "@"
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(
            from_graph6(">>graph6<<C~").unwrap(),
            Graph::complete(4).unwrap()
        );
        // the format's own worked example: 5 vertices, edges 02 04 13 34
        let g = from_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
    }

    #[test]
    fn graph6_errors_report_offsets() {
        match from_graph6("C~~") {
            Err(Error::Format { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match from_graph6("C\u{1}") {
            Err(Error::Format { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            from_graph6("Q????????????"),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn sparse6_known_strings() {
        // the format's worked example: n = 7, edges 01 02 12 56
        let g = from_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (5, 6)]);
        assert_eq!(to_sparse6(&g), ":Fa@x^");
    }

    #[test]
    fn sparse6_padding_special_case() {
        // n = 4 = 2^2, last edge on vertex n-2 = 2
        let g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let s = to_sparse6(&g);
        assert_eq!(from_sparse6(&s).unwrap(), g);
        for n in 1..=16 {
            let path =
                Graph::from_edges(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()).unwrap();
            assert_eq!(from_sparse6(&to_sparse6(&path)).unwrap(), path);
            let head = Graph::from_edges(
                n,
                &(1..n.saturating_sub(1))
                    .map(|v| (v - 1, v))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(from_sparse6(&to_sparse6(&head)).unwrap(), head);
        }
    }

    #[test]
    fn adjacency_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 3), (2, 3)]).unwrap();
        let s = to_adjacency_list(&g);
        assert_eq!(s, "0: 1 3\n1: 0\n2: 3\n3: 0 2\n");
        assert_eq!(from_adjacency_list(&s).unwrap(), g);
        assert!(from_adjacency_list("0: 1\n1:\n").is_err());
    }
}
