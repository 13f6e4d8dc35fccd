//! Exhaustive cospectral-mate search over same-(n, m) graphs.

use crate::error::Result;
use crate::report::{ReportBuilder, VerificationReport, Witness};
use dqspec_core::canon::canonical_key;
use dqspec_core::enumerate::{enumerate, for_each, EnumerationFilter};
use dqspec_core::{charpoly, to_graph6, Graph, IntPoly, Limits, MatrixKind};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Graphs of one (n, m) grouped by characteristic polynomial, each group in
/// canonical order.
pub type CharpolyClasses = HashMap<IntPoly, Vec<Graph>>;

/// Orders above this are streamed instead of cached.
const CACHE_ORDER: usize = 9;

/// Memoizes charpoly classes so repeated searches in one (n, m) slice share
/// a single sweep.
pub struct SearchSpace {
    limits: Limits,
    cache: Mutex<HashMap<(usize, usize, MatrixKind), Arc<CharpolyClasses>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MateSearchResult {
    pub target: String,
    pub kind: MatrixKind,
    pub charpoly: IntPoly,
    pub order: usize,
    pub size: usize,
    pub mates: Vec<String>,
    pub exhaustive: bool,
    #[serde(skip)]
    pub mate_graphs: Vec<Graph>,
}

impl MateSearchResult {
    pub fn is_empty(&self) -> bool {
        self.mates.is_empty()
    }
}

impl SearchSpace {
    pub fn new(limits: Limits) -> Self {
        SearchSpace {
            limits,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Every graph of order `n` and size `m`, grouped by `kind` charpoly.
    pub fn classes(&self, n: usize, m: usize, kind: MatrixKind) -> Result<Arc<CharpolyClasses>> {
        self.limits.check_spectral("cospectral search", n)?;
        if let Some(hit) = self.cache.lock().unwrap().get(&(n, m, kind)) {
            return Ok(hit.clone());
        }
        let graphs = enumerate(&EnumerationFilter::new(n).size(m), &self.limits)?;
        let polys: Vec<IntPoly> = graphs.par_iter().map(|g| charpoly(g, kind)).collect();
        let mut classes = CharpolyClasses::new();
        for (p, g) in polys.into_iter().zip(graphs) {
            classes.entry(p).or_default().push(g);
        }
        let classes = Arc::new(classes);
        if n <= CACHE_ORDER {
            self.cache
                .lock()
                .unwrap()
                .entry((n, m, kind))
                .or_insert_with(|| classes.clone());
        }
        Ok(classes)
    }

    /// All graphs (up to isomorphism) sharing `g`'s `kind` charpoly, `g`'s
    /// own class included, in canonical order.
    pub fn cospectral_class(&self, g: &Graph, kind: MatrixKind) -> Result<Vec<Graph>> {
        let (n, m) = (g.order(), g.size());
        let p = charpoly(g, kind);
        if n <= CACHE_ORDER {
            let classes = self.classes(n, m, kind)?;
            return Ok(classes.get(&p).cloned().unwrap_or_default());
        }
        self.limits.check_spectral("cospectral search", n)?;
        let found = Mutex::new(Vec::new());
        for_each(&EnumerationFilter::new(n).size(m), &self.limits, |h| {
            if charpoly(h, kind) == p {
                found.lock().unwrap().push(*h);
            }
        })?;
        let mut found = found.into_inner().unwrap();
        found.sort_by_key(canonical_key);
        Ok(found)
    }

    pub fn mates(&self, g: &Graph, kind: MatrixKind) -> Result<MateSearchResult> {
        let own = canonical_key(g);
        let mate_graphs: Vec<Graph> = self
            .cospectral_class(g, kind)?
            .into_iter()
            .filter(|h| canonical_key(h) != own)
            .collect();
        Ok(MateSearchResult {
            target: to_graph6(g),
            kind,
            charpoly: charpoly(g, kind),
            order: g.order(),
            size: g.size(),
            mates: mate_graphs.iter().map(to_graph6).collect(),
            exhaustive: true,
            mate_graphs,
        })
    }

    /// Pass iff `g` has no `kind`-cospectral mate of its order.
    pub fn determined_by(&self, g: &Graph, kind: MatrixKind) -> Result<VerificationReport> {
        let claim = match kind {
            MatrixKind::Adjacency => "DS",
            MatrixKind::Laplacian => "DLS",
            MatrixKind::SignlessLaplacian => "DQS",
        };
        let mut b = ReportBuilder::new(claim, json!({ "graph": to_graph6(g) }));
        let found = self.mates(g, kind)?;
        b.checked(1);
        for h in &found.mate_graphs {
            b.fail(Witness::new(
                h,
                format!("{}-cospectral mate", kind.letter()),
            ));
        }
        Ok(b.finish())
    }
}

pub fn cospectral_mates(
    space: &SearchSpace,
    g: &Graph,
    kind: MatrixKind,
) -> Result<MateSearchResult> {
    space.mates(g, kind)
}

pub fn is_dqs_desk(space: &SearchSpace, g: &Graph) -> Result<VerificationReport> {
    space.determined_by(g, MatrixKind::SignlessLaplacian)
}

pub fn is_dls_desk(space: &SearchSpace, g: &Graph) -> Result<VerificationReport> {
    space.determined_by(g, MatrixKind::Laplacian)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dqspec_core::parse_graph;

    fn g(s: &str) -> Graph {
        parse_graph(s, &Limits::default()).unwrap()
    }

    #[test]
    fn k5_has_no_mates() {
        let space = SearchSpace::new(Limits::default());
        assert!(space
            .mates(&g("K5"), MatrixKind::SignlessLaplacian)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn triangle_plus_edge_plus_vertex_has_star_mate() {
        let space = SearchSpace::new(Limits::default());
        let r = space
            .mates(&g("K3 + K2 + K1"), MatrixKind::SignlessLaplacian)
            .unwrap();
        assert_eq!(r.mate_graphs.len(), 1);
        assert!(dqspec_core::is_isomorphic(
            &r.mate_graphs[0],
            &g("K{1,3} + K2")
        ));
        assert!(!is_dqs_desk(&space, &g("K3 + K2 + K1")).unwrap().passed());
        assert!(space
            .mates(&g("K3 + K2 + K1"), MatrixKind::Laplacian)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn uncached_order_streams_the_same_answer() {
        let limits = Limits {
            spectral: 10,
            ..Limits::default()
        };
        let space = SearchSpace::new(limits);
        let target = g("K3 + K2 + 5*K1");
        let r = space.mates(&target, MatrixKind::SignlessLaplacian).unwrap();
        assert_eq!(r.mate_graphs.len(), 1);
        assert!(dqspec_core::is_isomorphic(
            &r.mate_graphs[0],
            &g("K{1,3} + K2 + 4*K1")
        ));
    }
}
