//! Isomorph-free generation of graphs with declarative filters.
//!
//! Graphs grow one vertex at a time. A child is kept only when its new
//! vertex is, up to automorphism, the vertex a fixed label-invariant rule
//! would delete (a minimum-degree vertex, ties broken by neighbour degree
//! sum and then by canonical position). Neighbourhoods of the new vertex are
//! taken one per orbit of the parent's automorphism group on subsets. Each
//! isomorphism class then appears exactly once, with no dedup pass.
//!
//! Edge-count windows, degree ceilings and the hereditary properties
//! (bipartite, forest, at most one cycle per component) prune the search;
//! connectivity, exact degree sequences and spectral predicates are checked
//! on finished graphs.

use crate::canon::{canonicalize, Canon, CanonKey};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};
use crate::limits::Limits;
use crate::linalg::{compare_real_rooted, real_rooted_counts};
use crate::spectra::{charpoly, MatrixKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl Comparison {
    pub fn holds(self, ord: Ordering) -> bool {
        match self {
            Comparison::Lt => ord == Ordering::Less,
            Comparison::Le => ord != Ordering::Greater,
            Comparison::Gt => ord == Ordering::Greater,
            Comparison::Ge => ord != Ordering::Less,
            Comparison::Eq => ord == Ordering::Equal,
            Comparison::Ne => ord != Ordering::Equal,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Comparison::Lt => "<",
            Comparison::Le => "<=",
            Comparison::Gt => ">",
            Comparison::Ge => ">=",
            Comparison::Eq => "==",
            Comparison::Ne => "!=",
        }
    }
}

/// An exact condition on one spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralPredicate {
    /// The `rank`-th largest eigenvalue (1-based) compared with `value`.
    Root {
        kind: MatrixKind,
        rank: usize,
        op: Comparison,
        value: BigRational,
    },
    /// Multiplicity of the integer `eigenvalue` compared with `count`.
    Multiplicity {
        kind: MatrixKind,
        eigenvalue: i64,
        op: Comparison,
        count: usize,
    },
}

impl SpectralPredicate {
    pub fn gamma(rank: usize, op: Comparison, value: BigRational) -> Self {
        SpectralPredicate::Root {
            kind: MatrixKind::SignlessLaplacian,
            rank,
            op,
            value,
        }
    }

    pub fn holds(&self, g: &Graph) -> bool {
        match self {
            SpectralPredicate::Root {
                kind,
                rank,
                op,
                value,
            } => compare_real_rooted(&charpoly(g, *kind), *rank, value)
                .is_ok_and(|ord| op.holds(ord)),
            SpectralPredicate::Multiplicity {
                kind,
                eigenvalue,
                op,
                count,
            } => {
                let at = BigRational::from_integer(BigInt::from(*eigenvalue));
                op.holds(real_rooted_counts(&charpoly(g, *kind), &at).1.cmp(count))
            }
        }
    }

    /// Conjunction separated by `and`, `&&` or `;`.
    pub fn parse_all(s: &str) -> Result<Vec<SpectralPredicate>> {
        s.replace("&&", ";")
            .replace(" and ", ";")
            .split(';')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for SpectralPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralPredicate::Root {
                kind,
                rank,
                op,
                value,
            } => write!(f, "{}{rank} {} {value}", kind.symbol(), op.symbol()),
            SpectralPredicate::Multiplicity {
                kind,
                eigenvalue,
                op,
                count,
            } => write!(f, "mult{kind}({eigenvalue}) {} {count}", op.symbol()),
        }
    }
}

impl Serialize for SpectralPredicate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `7`, `-3`, `32/5` or `6.25` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Predicate(format!("{t:?} is not a rational number"));
    if let Some((a, b)) = t.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(Error::Predicate("zero denominator".into()));
        }
        return Ok(BigRational::new(a, b));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    Ok(BigRational::from(t.parse::<BigInt>().map_err(|_| bad())?))
}

impl FromStr for SpectralPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let ops = [
            ("<=", Comparison::Le),
            (">=", Comparison::Ge),
            ("==", Comparison::Eq),
            ("!=", Comparison::Ne),
            ("<", Comparison::Lt),
            (">", Comparison::Gt),
            ("=", Comparison::Eq),
        ];
        let (at, sym, op) = ops
            .iter()
            .filter_map(|&(sym, op)| t.find(sym).map(|i| (i, sym, op)))
            .min_by_key(|&(i, sym, _)| (i, std::cmp::Reverse(sym.len())))
            .ok_or_else(|| Error::Predicate(format!("no comparison operator in {t:?}")))?;
        let lhs = t[..at].trim().to_ascii_lowercase();
        let rhs = t[at + sym.len()..].trim();
        if let Some(rest) = lhs.strip_prefix("mult") {
            let (k, arg) = rest.split_once('(').ok_or_else(|| {
                Error::Predicate(format!("expected multK(eigenvalue) in {lhs:?}"))
            })?;
            let kind: MatrixKind = k
                .parse()
                .map_err(|_| Error::Predicate(format!("unknown matrix {k:?}")))?;
            let arg = arg
                .strip_suffix(')')
                .ok_or_else(|| Error::Predicate(format!("unclosed '(' in {lhs:?}")))?;
            let eigenvalue = arg
                .trim()
                .parse()
                .map_err(|_| Error::Predicate(format!("eigenvalue {arg:?} must be an integer")))?;
            let count = rhs
                .parse()
                .map_err(|_| Error::Predicate(format!("multiplicity {rhs:?} must be a count")))?;
            return Ok(SpectralPredicate::Multiplicity {
                kind,
                eigenvalue,
                op,
                count,
            });
        }
        let split = lhs
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Predicate(format!("expected e.g. gamma1 in {lhs:?}")))?;
        let kind = match lhs[..split].trim_end_matches('_') {
            "gamma" | "q" => MatrixKind::SignlessLaplacian,
            "mu" | "l" => MatrixKind::Laplacian,
            "lambda" | "a" => MatrixKind::Adjacency,
            other => {
                return Err(Error::Predicate(format!(
                    "unknown eigenvalue symbol {other:?}"
                )))
            }
        };
        let rank: usize = lhs[split..]
            .parse()
            .map_err(|_| Error::Predicate(format!("bad rank in {lhs:?}")))?;
        if rank == 0 {
            return Err(Error::Predicate("eigenvalue ranks start at 1".into()));
        }
        Ok(SpectralPredicate::Root {
            kind,
            rank,
            op,
            value: parse_rational(rhs)?,
        })
    }
}

/// Inclusive edge-count window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeRange {
    pub min: usize,
    pub max: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct EnumerationFilter {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size: Option<SizeRange>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub connected: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub bipartite: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub tree: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub unicyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_sequence: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub spectral: Vec<SpectralPredicate>,
}

impl EnumerationFilter {
    pub fn new(order: usize) -> Self {
        EnumerationFilter {
            order,
            ..Default::default()
        }
    }

    pub fn size(mut self, m: usize) -> Self {
        self.size = Some(SizeRange { min: m, max: m });
        self
    }

    pub fn size_range(mut self, min: usize, max: usize) -> Self {
        self.size = Some(SizeRange { min, max });
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn tree(mut self) -> Self {
        self.tree = true;
        self
    }

    pub fn unicyclic(mut self) -> Self {
        self.unicyclic = true;
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn degree_sequence(mut self, mut seq: Vec<usize>) -> Self {
        seq.sort_unstable_by(|a, b| b.cmp(a));
        self.degree_sequence = Some(seq);
        self
    }

    pub fn spectral(mut self, p: SpectralPredicate) -> Self {
        self.spectral.push(p);
        self
    }

    pub fn validate(&self, limits: &Limits) -> Result<()> {
        limits.check_enumeration("enumeration", self.order)?;
        if !self.spectral.is_empty() {
            limits.check_spectral("enumeration with a spectral predicate", self.order)?;
        }
        if let Some(seq) = &self.degree_sequence {
            if seq.len() != self.order {
                return Err(Error::InvalidParameters(format!(
                    "degree sequence has {} entries for order {}",
                    seq.len(),
                    self.order
                )));
            }
        }
        if let Some(r) = self.size {
            if r.min > r.max {
                return Err(Error::InvalidParameters(format!(
                    "empty edge range {}..={}",
                    r.min, r.max
                )));
            }
        }
        for p in &self.spectral {
            if let SpectralPredicate::Root { rank, .. } = p {
                if *rank > self.order {
                    return Err(Error::RankOutOfRange {
                        rank: *rank,
                        available: self.order,
                    });
                }
            }
        }
        Ok(())
    }

    /// The whole filter evaluated on one graph.
    pub fn accepts(&self, g: &Graph) -> bool {
        let m = g.size();
        g.order() == self.order
            && self.size.is_none_or(|r| (r.min..=r.max).contains(&m))
            && (!self.connected || g.is_connected())
            && (!self.bipartite || g.is_bipartite())
            && (!self.tree || g.is_tree())
            && (!self.unicyclic || g.is_unicyclic())
            && self
                .max_degree
                .is_none_or(|d| (0..g.order()).all(|v| g.degree(v) <= d))
            && self
                .degree_sequence
                .as_ref()
                .is_none_or(|s| *s == g.degree_sequence())
            && self.spectral.iter().all(|p| p.holds(g))
    }
}

impl fmt::Display for EnumerationFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.order)?;
        match self.size {
            Some(SizeRange { min, max }) if min == max => write!(f, " m={min}")?,
            Some(SizeRange { min, max }) => write!(f, " m={min}..={max}")?,
            None => {}
        }
        for (on, name) in [
            (self.connected, "connected"),
            (self.bipartite, "bipartite"),
            (self.tree, "tree"),
            (self.unicyclic, "unicyclic"),
        ] {
            if on {
                write!(f, " {name}")?;
            }
        }
        if let Some(d) = self.max_degree {
            write!(f, " maxdeg={d}")?;
        }
        if let Some(s) = &self.degree_sequence {
            write!(f, " degrees={s:?}")?;
        }
        for p in &self.spectral {
            write!(f, " [{p}]")?;
        }
        Ok(())
    }
}

/// Erdős–Gallai test on a degree sequence.
pub fn is_graphical(seq: &[usize]) -> bool {
    let mut d = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    if n == 0 {
        return true;
    }
    if d[0] >= n {
        return false;
    }
    let mut lhs = 0;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Search parameters derived from a filter.
#[derive(Debug, Clone)]
struct Plan {
    n: usize,
    m_lo: usize,
    m_hi: usize,
    dmax: usize,
    bipartite: bool,
    forest: bool,
    pseudoforest: bool,
    /// Lower bound on the degree of the last vertex added (the minimum degree).
    last_min: usize,
    last_exact: Option<usize>,
    complemented: bool,
}

impl Plan {
    fn from_filter(f: &EnumerationFilter) -> Option<Plan> {
        let n = f.order;
        let total = n * n.saturating_sub(1) / 2;
        let (mut lo, mut hi) = f.size.map_or((0, total), |r| (r.min, r.max.min(total)));
        let mut dmax = n.saturating_sub(1);
        if let Some(d) = f.max_degree {
            dmax = dmax.min(d);
        }
        if f.tree {
            lo = lo.max(n.saturating_sub(1));
            hi = hi.min(n.saturating_sub(1));
        }
        if f.unicyclic {
            lo = lo.max(n);
            hi = hi.min(n);
        }
        let mut last_min = usize::from(f.connected && n >= 2);
        let mut last_exact = None;
        if let Some(seq) = &f.degree_sequence {
            if !is_graphical(seq) {
                return None;
            }
            let m = seq.iter().sum::<usize>() / 2;
            lo = lo.max(m);
            hi = hi.min(m);
            dmax = dmax.min(seq.first().copied().unwrap_or(0));
            let min = seq.last().copied().unwrap_or(0);
            last_min = last_min.max(min);
            last_exact = Some(min);
        }
        if lo > hi {
            return None;
        }
        let mut plan = Plan {
            n,
            m_lo: lo,
            m_hi: hi,
            dmax,
            bipartite: f.bipartite || f.tree,
            forest: f.tree,
            pseudoforest: f.unicyclic,
            last_min,
            last_exact,
            complemented: false,
        };
        let structural = f.bipartite || f.tree || f.unicyclic || f.max_degree.is_some();
        if !structural && lo + hi > total {
            // dense window: generate complements
            plan.m_lo = total - hi;
            plan.m_hi = total - lo;
            plan.dmax = n.saturating_sub(1);
            plan.last_min = 0;
            plan.last_exact = None;
            if let Some(seq) = &f.degree_sequence {
                let max = seq.first().copied().unwrap_or(0);
                let min = seq.last().copied().unwrap_or(0);
                plan.dmax = n - 1 - min;
                plan.last_exact = Some(n - 1 - max);
                plan.last_min = n - 1 - max;
            }
            plan.complemented = true;
        }
        Some(plan)
    }

    /// Most edges vertices `from..n` can still add.
    fn potential(&self, from: usize) -> usize {
        (from..self.n).map(|j| j.min(self.dmax)).sum()
    }
}

fn find(parent: &mut [u16], mut x: usize) -> usize {
    while parent[x] as usize != x {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x
}

/// One neighbourhood per orbit of the generators' group acting on subsets.
fn subset_representatives(k: usize, gens: &[Vec<usize>]) -> Vec<VertexSet> {
    let count = 1usize << k;
    if gens.is_empty() {
        return (0..count).map(|s| s as VertexSet).collect();
    }
    let mut parent: Vec<u16> = (0..count).map(|s| s as u16).collect();
    for g in gens {
        for s in 0..count {
            let mut img = 0usize;
            for v in bits(s as VertexSet) {
                img |= 1 << g[v];
            }
            let (a, b) = (find(&mut parent, s), find(&mut parent, img));
            if a != b {
                parent[a.max(b)] = a.min(b) as u16;
            }
        }
    }
    (0..count)
        .filter(|&s| find(&mut parent, s) == s)
        .map(|s| s as VertexSet)
        .collect()
}

fn hereditary_ok(plan: &Plan, g: &Graph) -> bool {
    (!plan.bipartite || g.is_bipartite())
        && (!plan.forest || g.is_forest())
        && (!plan.pseudoforest || g.is_pseudoforest())
}

/// Is the last vertex of `child` the canonical deletion? Returns the
/// canonical labeling when one had to be computed.
fn accept(child: &Graph) -> (bool, Option<Canon>) {
    let n = child.order();
    let k = n - 1;
    let deg = child.degrees();
    let d = deg[k];
    let nds = |v: usize| bits(child.neighbors(v)).map(|w| deg[w]).sum::<usize>();
    let target = nds(k);
    let mut class: VertexSet = 0;
    for v in 0..n {
        if deg[v] == d {
            let s = nds(v);
            if s > target {
                return (false, None);
            }
            if s == target {
                class |= 1 << v;
            }
        }
    }
    if class == 1 << k {
        return (true, None);
    }
    let canon = canonicalize(child);
    let w = bits(class).max_by_key(|&v| canon.labeling[v]).unwrap();
    (canon.same_orbit(k, w), Some(canon))
}

/// Depth-first extension of `g` up to `stop` vertices.
fn extend(
    plan: &Plan,
    g: Graph,
    canon: Option<Canon>,
    stop: usize,
    sink: &mut dyn FnMut(Graph, Option<Canon>),
) {
    let k = g.order();
    if k == stop {
        sink(g, canon);
        return;
    }
    let gens = match canon {
        Some(c) => c.generators,
        None => canonicalize(&g).generators,
    };
    let last = k + 1 == plan.n;
    let e = g.size();
    let deg = g.degrees();
    let pot = plan.potential(k + 1);
    for s in subset_representatives(k, &gens) {
        let d = s.count_ones() as usize;
        if d > plan.dmax || e + d > plan.m_hi || e + d + pot < plan.m_lo {
            continue;
        }
        if last && (d < plan.last_min || plan.last_exact.is_some_and(|x| x != d)) {
            continue;
        }
        let degree_ok = (0..k).all(|u| {
            let du = deg[u] + (s >> u & 1) as usize;
            du >= d && du <= plan.dmax
        });
        if !degree_ok {
            continue;
        }
        let mut rows = [0 as VertexSet; crate::MAX_ORDER];
        rows[..k].copy_from_slice(g.rows());
        for u in bits(s) {
            rows[u] |= 1 << k;
        }
        rows[k] = s;
        let child = Graph::from_rows_unchecked(k + 1, rows);
        if !hereditary_ok(plan, &child) {
            continue;
        }
        let (ok, c) = accept(&child);
        if ok {
            extend(plan, child, c, stop, sink);
        }
    }
}

/// Runs the search, folding accepted graphs per work unit in a
/// deterministic order, then merging the unit results in order.
fn run<A, I, F, M>(
    filter: &EnumerationFilter,
    limits: &Limits,
    identity: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, Graph) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    filter.validate(limits)?;
    let Some(plan) = Plan::from_filter(filter) else {
        return Ok(identity());
    };
    let n = plan.n;
    let finish = |acc: &mut A, g: Graph| {
        let g = if plan.complemented { g.complement() } else { g };
        if filter.accepts(&g) {
            fold(acc, g);
        }
    };
    if n == 0 {
        let mut acc = identity();
        finish(&mut acc, Graph::empty(0)?);
        return Ok(acc);
    }
    let root = Graph::empty(1)?;
    if plan.potential(1) < plan.m_lo {
        return Ok(identity());
    }
    let split = n.saturating_sub(3).max(1);
    let mut frontier = Vec::new();
    extend(&plan, root, None, split, &mut |g, c| frontier.push((g, c)));
    let result = frontier
        .into_par_iter()
        .map(|(g, c)| {
            let mut acc = identity();
            extend(&plan, g, c, n, &mut |h, _| finish(&mut acc, h));
            acc
        })
        .reduce(&identity, &merge);
    Ok(result)
}

/// Every isomorphism class passing the filter, canonically labeled, in
/// ascending canonical order.
pub fn enumerate(filter: &EnumerationFilter, limits: &Limits) -> Result<Vec<Graph>> {
    let mut keys: Vec<CanonKey> = run(
        filter,
        limits,
        Vec::new,
        |acc: &mut Vec<CanonKey>, g| acc.push(canonicalize(&g).key),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    keys.sort_unstable();
    Ok(keys.into_iter().map(|k| k.graph()).collect())
}

/// Number of classes passing the filter, without storing them.
pub fn count(filter: &EnumerationFilter, limits: &Limits) -> Result<u64> {
    run(filter, limits, || 0u64, |acc, _| *acc += 1, |a, b| a + b)
}

/// Calls `f` once per class (as generated, not relabeled), in parallel.
pub fn for_each<F>(filter: &EnumerationFilter, limits: &Limits, f: F) -> Result<()>
where
    F: Fn(&Graph) + Sync + Send,
{
    run(filter, limits, || (), |_, g| f(&g), |_, _| ())
}

/// All classes with exactly this degree sequence; empty if it is not graphical.
pub fn realizations(seq: &[usize], limits: &Limits) -> Result<Vec<Graph>> {
    enumerate(
        &EnumerationFilter::new(seq.len()).degree_sequence(seq.to_vec()),
        limits,
    )
}

/// Exact rational `a/b`.
pub fn ratio(a: i64, b: i64) -> BigRational {
    if b == 1 {
        BigRational::from(BigInt::from(a))
    } else {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_counts() {
        let expect = [1, 1, 2, 4, 11, 34, 156];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(
                count(&EnumerationFilter::new(n), &lim()).unwrap(),
                c,
                "n={n}"
            );
        }
    }

    #[test]
    fn small_class_counts() {
        assert_eq!(
            count(&EnumerationFilter::new(5).size(8), &lim()).unwrap(),
            2
        );
        assert_eq!(
            count(&EnumerationFilter::new(6).size(11), &lim()).unwrap(),
            9
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(realizations(&[3, 2, 2, 1], &lim()).unwrap().len(), 1);
        let c4 = realizations(&[2, 2, 2, 2], &lim()).unwrap();
        assert_eq!(c4.len(), 1);
        assert!(c4[0].is_unicyclic());
        assert!(realizations(&[3, 3, 1, 1], &lim()).unwrap().is_empty());
        assert!(!is_graphical(&[3, 3, 1, 1]));
        assert!(is_graphical(&[0, 0]));
        assert!(!is_graphical(&[1]));
    }

    #[test]
    fn tree_counts() {
        // trees on 1..=10 vertices
        let expect = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &c) in expect.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                count(&EnumerationFilter::new(n).tree(), &lim()).unwrap(),
                c,
                "n={n}"
            );
        }
    }

    #[test]
    fn predicates_parse() {
        let p: SpectralPredicate = "gamma1 > 32/5".parse().unwrap();
        assert_eq!(p, SpectralPredicate::gamma(1, Comparison::Gt, ratio(32, 5)));
        assert_eq!(p.to_string(), "gamma1 > 32/5");
        let m: SpectralPredicate = "multQ(3) >= 3".parse().unwrap();
        assert_eq!(m.to_string(), "multQ(3) >= 3");
        assert_eq!(
            SpectralPredicate::parse_all("mu2 <= 4 and lambda1 != 2")
                .unwrap()
                .len(),
            2
        );
        assert!("gamma0 > 1".parse::<SpectralPredicate>().is_err());
        assert!("delta1 > 1".parse::<SpectralPredicate>().is_err());
        assert_eq!(parse_rational("6.25").unwrap(), ratio(25, 4));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            count(&EnumerationFilter::new(11), &lim()),
            Err(Error::CapExceeded { cap: 10, .. })
        ));
        let f = EnumerationFilter::new(10).spectral("gamma1 > 3".parse().unwrap());
        assert!(matches!(
            count(&f, &lim()),
            Err(Error::CapExceeded { cap: 9, .. })
        ));
    }
}
