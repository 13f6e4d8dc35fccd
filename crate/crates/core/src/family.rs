//! Named graph families and a one-line expression language over them.
//!
//! Vertex numbering is fixed so that graph6 output is reproducible:
//!
//! * `Path(n)`: `0 - 1 - ... - n-1`.
//! * `Cycle(n)`: the path plus `n-1 - 0`.
//! * `Star(n)`: centre `0`, leaves `1..n`.
//! * `CompleteBipartite(a, b)`, `CompleteMultipartite(parts)`: parts are
//!   consecutive blocks in the order given.
//! * `CompleteMinusEdge(n)`: `K_n` without the edge `0 - 1`.
//! * `DoubleStar(p, q)`: centres `0` and `1`, then the `p` pendants of `0`,
//!   then the `q` pendants of `1`.
//! * `DoubleStarlike(p, l, q)`: path `0..l`, then `p` pendants on `0`, then
//!   `q` pendants on `l-1`.
//!
//! Expressions: `K4-e + 3*K1`, `join(K4-e, 3K1)`, `complement(K{1,3} + K2 + K1)`,
//! `G(2,2,1) + S3`, `DS(2,2)`, `K{2,2,3}`, `(K{2,5})-e`. A trailing `-e`
//! deletes an edge and is accepted only when every edge deletion gives the
//! same graph up to isomorphism.

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::format;
use crate::graph::Graph;
use crate::limits::Limits;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMinusEdge(usize),
    CompleteMultipartite(Vec<usize>),
    DoubleStar(usize, usize),
    DoubleStarlike(usize, usize, usize),
    EmptyGraph(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::EmptyGraph(n) => *n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::DoubleStar(p, q) => p + q + 2,
            FamilySpec::DoubleStarlike(p, l, q) => p + l + q,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path(n) | FamilySpec::Star(n) | FamilySpec::Complete(n) if *n == 0 => {
                bad("order must be at least 1")
            }
            FamilySpec::Cycle(n) if *n < 3 => bad("a cycle needs at least 3 vertices"),
            FamilySpec::CompleteMinusEdge(n) if *n < 2 => bad("K_n - e needs n >= 2"),
            FamilySpec::CompleteBipartite(a, b) if *a == 0 || *b == 0 => {
                bad("part sizes must be positive")
            }
            FamilySpec::CompleteMultipartite(parts) if parts.is_empty() || parts.contains(&0) => {
                bad("part sizes must be positive")
            }
            FamilySpec::DoubleStar(p, q) if *p == 0 || *q == 0 => bad("p and q must be positive"),
            FamilySpec::DoubleStarlike(p, l, q) if *p == 0 || *q == 0 || *l < 2 => {
                bad("needs p, q >= 1 and l >= 2")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Star(n) => write!(f, "S{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K{{{a},{b}}}"),
            FamilySpec::CompleteMinusEdge(n) => write!(f, "K{n}-e"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "K{{{}}}", join(p)),
            FamilySpec::DoubleStar(p, q) => write!(f, "DS({p},{q})"),
            FamilySpec::DoubleStarlike(p, l, q) => write!(f, "G({p},{l},{q})"),
            FamilySpec::EmptyGraph(n) => write!(f, "E{n}"),
        }
    }
}

/// Builds a family member, checking the construction cap.
pub fn build(spec: &FamilySpec, limits: &Limits) -> Result<Graph> {
    spec.validate()?;
    limits.check_construction(&spec.to_string(), spec.order())?;
    build_unchecked(spec)
}

fn build_unchecked(spec: &FamilySpec) -> Result<Graph> {
    let n = spec.order();
    let mut edges = Vec::new();
    match spec {
        FamilySpec::Path(n) => edges.extend((1..*n).map(|v| (v - 1, v))),
        FamilySpec::Cycle(n) => {
            edges.extend((1..*n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        FamilySpec::Star(n) => edges.extend((1..*n).map(|v| (0, v))),
        FamilySpec::Complete(n) => return Graph::complete(*n),
        FamilySpec::CompleteMinusEdge(n) => return Graph::complete(*n)?.delete_edge(0, 1),
        FamilySpec::EmptyGraph(n) => return Graph::empty(*n),
        FamilySpec::CompleteBipartite(a, b) => {
            return build_unchecked(&FamilySpec::CompleteMultipartite(vec![*a, *b]))
        }
        FamilySpec::CompleteMultipartite(parts) => {
            let mut part_of = Vec::with_capacity(n);
            for (i, &s) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(i, s));
            }
            for j in 0..n {
                for i in 0..j {
                    if part_of[i] != part_of[j] {
                        edges.push((i, j));
                    }
                }
            }
        }
        FamilySpec::DoubleStar(p, q) => {
            edges.push((0, 1));
            edges.extend((0..*p).map(|i| (0, 2 + i)));
            edges.extend((0..*q).map(|i| (1, 2 + p + i)));
        }
        FamilySpec::DoubleStarlike(p, l, q) => {
            edges.extend((1..*l).map(|v| (v - 1, v)));
            edges.extend((0..*p).map(|i| (0, l + i)));
            edges.extend((0..*q).map(|i| (l - 1, l + p + i)));
        }
    }
    Graph::from_edges(n, &edges)
}

/// A parsed family expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Family(FamilySpec),
    Union(Vec<Expr>),
    Repeat(usize, Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
    Complement(Box<Expr>),
    MinusEdge(Box<Expr>),
}

impl Expr {
    pub fn order(&self) -> usize {
        match self {
            Expr::Family(f) => f.order(),
            Expr::Union(parts) => parts.iter().map(Expr::order).sum(),
            Expr::Repeat(r, e) => r * e.order(),
            Expr::Join(a, b) => a.order() + b.order(),
            Expr::Complement(e) | Expr::MinusEdge(e) => e.order(),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Graph> {
        limits.check_construction("family expression", self.order())?;
        self.eval()
    }

    fn eval(&self) -> Result<Graph> {
        match self {
            Expr::Family(f) => {
                f.validate()?;
                build_unchecked(f)
            }
            Expr::Union(parts) => parts
                .iter()
                .try_fold(Graph::empty(0)?, |acc, e| acc.disjoint_union(&e.eval()?)),
            Expr::Repeat(r, e) => e.eval()?.repeat(*r),
            Expr::Join(a, b) => a.eval()?.join(&b.eval()?),
            Expr::Complement(e) => Ok(e.eval()?.complement()),
            Expr::MinusEdge(e) => {
                let g = e.eval()?;
                let edges = g.edges();
                let Some(&(u, v)) = edges.first() else {
                    return Err(Error::InvalidParameters(
                        "-e applied to an edgeless graph".into(),
                    ));
                };
                let out = g.delete_edge(u, v)?;
                let key = canonical_key(&out);
                for &(a, b) in &edges[1..] {
                    if canonical_key(&g.delete_edge(a, b)?) != key {
                        return Err(Error::InvalidParameters(
                            "-e is ambiguous: the graph is not edge-transitive".into(),
                        ));
                    }
                }
                Ok(out)
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::expression(self.pos, msg))
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        let end = self.pos + w.len();
        if self.src.len() >= end && self.src[self.pos..end].eq_ignore_ascii_case(w.as_bytes()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn numbers(&mut self, open: u8, close: u8) -> Result<Vec<usize>> {
        self.expect(open)?;
        let mut out = vec![self.number()?];
        while self.eat(b',') {
            out.push(self.number()?);
        }
        self.expect(close)?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = vec![self.term()?];
        while self.eat(b'+') {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Union(parts)
        })
    }

    fn term(&mut self) -> Result<Expr> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let r = self.number()?;
            self.eat(b'*');
            let atom = self.atom()?;
            return Ok(Expr::Repeat(r, Box::new(atom)));
        }
        self.atom()
    }

    fn minus_edge(&mut self, e: Expr) -> Expr {
        let save = self.pos;
        if self.eat(b'-') && self.eat(b'e') {
            return Expr::MinusEdge(Box::new(e));
        }
        self.pos = save;
        e
    }

    fn atom(&mut self) -> Result<Expr> {
        if self.eat(b'(') {
            let e = self.expr()?;
            self.expect(b')')?;
            return Ok(self.minus_edge(e));
        }
        if self.eat_word("join") {
            self.expect(b'(')?;
            let a = self.expr()?;
            self.expect(b',')?;
            let b = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr::Join(Box::new(a), Box::new(b)));
        }
        if self.eat_word("complement") {
            self.expect(b'(')?;
            let a = self.expr()?;
            self.expect(b')')?;
            return Ok(Expr::Complement(Box::new(a)));
        }
        let spec = self.family()?;
        let e = Expr::Family(spec);
        Ok(self.minus_edge(e))
    }

    fn family(&mut self) -> Result<FamilySpec> {
        let start = self.pos;
        if self.eat_word("DS") {
            let v = self.numbers(b'(', b')')?;
            return match v[..] {
                [p, q] => Ok(FamilySpec::DoubleStar(p, q)),
                _ => {
                    self.pos = start;
                    self.err("DS takes two parameters")
                }
            };
        }
        let Some(c) = self.peek() else {
            return self.err("expected a graph");
        };
        self.pos += 1;
        if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
        }
        let spec = match c.to_ascii_uppercase() {
            b'K' if self.peek() == Some(b'{') => {
                let parts = self.numbers(b'{', b'}')?;
                if parts.len() == 2 {
                    FamilySpec::CompleteBipartite(parts[0], parts[1])
                } else {
                    FamilySpec::CompleteMultipartite(parts)
                }
            }
            b'K' => {
                let n = self.number()?;
                // K4-e is its own family so the removed edge is documented
                let save = self.pos;
                if self.eat(b'-') && self.eat(b'e') {
                    return Ok(FamilySpec::CompleteMinusEdge(n));
                }
                self.pos = save;
                FamilySpec::Complete(n)
            }
            b'P' => FamilySpec::Path(self.number()?),
            b'C' => FamilySpec::Cycle(self.number()?),
            b'S' => FamilySpec::Star(self.number()?),
            b'E' => FamilySpec::EmptyGraph(self.number()?),
            b'G' => match self.numbers(b'(', b')')?[..] {
                [p, l, q] => FamilySpec::DoubleStarlike(p, l, q),
                _ => {
                    self.pos = start;
                    return self.err("G takes three parameters (p, l, q)");
                }
            },
            _ => {
                self.pos = start;
                return self.err(format!("unknown family '{}'", c as char));
            }
        };
        Ok(spec)
    }
}

pub fn parse_family(s: &str) -> Result<Expr> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// A graph argument: `g6:<graph6>`, a headered or `:`-prefixed graph6 or
/// sparse6 string, or a family expression, falling back to bare graph6.
pub fn parse_graph(s: &str, limits: &Limits) -> Result<Graph> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("g6:") {
        return format::from_graph6(rest);
    }
    if let Some(rest) = t.strip_prefix("s6:") {
        return format::from_sparse6(rest);
    }
    if t.starts_with(">>") || t.starts_with(':') {
        return format::parse_any(t);
    }
    match parse_family(t) {
        Ok(e) => e.build(limits),
        Err(family_err) => format::from_graph6(t).map_err(|_| family_err),
    }
}
