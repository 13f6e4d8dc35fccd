//! Graph matrices and their spectra.

use crate::error::Error;
use crate::graph::Graph;
use crate::linalg::{charpoly_i64, default_width, exact_number, IntMatrix, IntPoly, RootIsolation};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::SignlessLaplacian,
    ];

    pub fn letter(self) -> char {
        match self {
            MatrixKind::Adjacency => 'A',
            MatrixKind::Laplacian => 'L',
            MatrixKind::SignlessLaplacian => 'Q',
        }
    }

    /// Conventional eigenvalue symbol: lambda, mu, gamma.
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "lambda",
            MatrixKind::Laplacian => "mu",
            MatrixKind::SignlessLaplacian => "gamma",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(MatrixKind::Adjacency),
            "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "q" | "signless" | "signless-laplacian" | "signlesslaplacian" => {
                Ok(MatrixKind::SignlessLaplacian)
            }
            other => Err(Error::InvalidParameters(format!(
                "unknown matrix kind {other:?} (expected A, L or Q)"
            ))),
        }
    }
}

impl Serialize for MatrixKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.letter().to_string())
    }
}

/// Row-major entries of the chosen matrix.
pub fn matrix_entries(g: &Graph, kind: MatrixKind) -> Vec<i64> {
    let n = g.order();
    let mut out = vec![0i64; n * n];
    let off = match kind {
        MatrixKind::Laplacian => -1,
        _ => 1,
    };
    for i in 0..n {
        if kind != MatrixKind::Adjacency {
            out[i * n + i] = g.degree(i) as i64;
        }
        for j in crate::graph::bits(g.neighbors(i)) {
            out[i * n + j] = off;
        }
    }
    out
}

pub fn matrix(g: &Graph, kind: MatrixKind) -> IntMatrix {
    let n = g.order();
    let e = matrix_entries(g, kind);
    IntMatrix::from_fn(n, |i, j| BigInt::from(e[i * n + j]))
}

pub fn charpoly(g: &Graph, kind: MatrixKind) -> IntPoly {
    charpoly_i64(g.order(), &matrix_entries(g, kind))
}

/// Nullity of `M - lambda I` for the chosen matrix.
pub fn integer_eigenvalue_multiplicity(g: &Graph, kind: MatrixKind, lambda: i64) -> usize {
    matrix(g, kind).integer_eigenvalue_multiplicity(&BigInt::from(lambda))
}

pub fn are_cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    g.order() == h.order() && charpoly(g, kind) == charpoly(h, kind)
}

/// Product of the nonzero roots of a characteristic polynomial: if
/// `p = x^k q` with `q(0) != 0`, it is `(-1)^(deg q) q(0)`.
pub fn nonzero_root_product(p: &IntPoly) -> BigInt {
    let Some(d) = p.degree() else {
        return BigInt::zero();
    };
    match p.lowest_nonzero() {
        Some((k, c)) if (d - k) % 2 == 1 => -c.clone(),
        Some((_, c)) => c.clone(),
        None => BigInt::zero(),
    }
}

#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub kind: MatrixKind,
    pub n: usize,
    pub m: usize,
    pub charpoly: IntPoly,
    pub roots: RootIsolation,
    /// Multiplicity of 0 as an L-eigenvalue: the number of components.
    pub components: Option<usize>,
    /// Multiplicity of 0 as a Q-eigenvalue: the number of bipartite components.
    pub bipartite_components: Option<usize>,
    pub nonzero_product: BigInt,
}

impl SpectrumReport {
    /// Compares the `k`-th largest eigenvalue (1-based) with `q`.
    pub fn compare(&mut self, k: usize, q: &BigRational) -> crate::Result<Ordering> {
        self.roots.compare(k, q)
    }
}

pub fn spectrum(g: &Graph, kind: MatrixKind) -> SpectrumReport {
    let charpoly = charpoly(g, kind);
    let mut roots = RootIsolation::new(&charpoly);
    roots.refine_all(&default_width());
    let zero_mult = || integer_eigenvalue_multiplicity(g, kind, 0);
    SpectrumReport {
        kind,
        n: g.order(),
        m: g.size(),
        nonzero_product: nonzero_root_product(&charpoly),
        components: (kind == MatrixKind::Laplacian).then(zero_mult),
        bipartite_components: (kind == MatrixKind::SignlessLaplacian).then(zero_mult),
        charpoly,
        roots,
    }
}

pub fn nonzero_product(report: &SpectrumReport) -> BigInt {
    report.nonzero_product.clone()
}

impl Serialize for SpectrumReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("charpoly", &self.charpoly)?;
        map.serialize_entry("charpoly_text", &self.charpoly.to_string())?;
        map.serialize_entry("roots", &self.roots)?;
        if let Some(c) = self.components {
            map.serialize_entry("components", &c)?;
        }
        if let Some(c) = self.bipartite_components {
            map.serialize_entry("bipartite_components", &c)?;
        }
        map.serialize_entry("nonzero_product", &exact_number(&self.nonzero_product))?;
        map.end()
    }
}
