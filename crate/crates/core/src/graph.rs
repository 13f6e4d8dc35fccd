//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! A [`Graph`] is a value type: `n` adjacency bitrows of 16 bits each. All
//! operations return new graphs; nothing mutates a graph after construction.

use crate::error::{Error, Result};
use crate::limits::{check_hard, MAX_ORDER};
use crate::linalg::IntMatrix;
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;

/// Bitset over vertex indices.
pub type VertexSet = u16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    rows: [VertexSet; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` is the empty graph).
    pub fn empty(n: usize) -> Result<Graph> {
        check_hard("graph", n)?;
        Ok(Graph {
            n: n as u8,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw bitrows; rows must be symmetric and loop-free.
    pub fn from_rows(n: usize, rows: &[VertexSet]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(Error::InvalidParameters(format!(
                "expected {n} rows, got {}",
                rows.len()
            )));
        }
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & (1 << v) != 0 {
                return Err(Error::InvalidParameters(format!("row {v} out of range")));
            }
            g.rows[v] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::InvalidParameters("rows are not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: [VertexSet; MAX_ORDER]) -> Graph {
        Graph { n: n as u8, rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.rows[..self.n as usize]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted non-increasing, `d_1 >= d_2 >= ...`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.size());
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_mask(&self) -> VertexSet {
        full_mask(self.order())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Block-diagonal union; `self` keeps indices `0..n`, `other` is shifted by `n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let total = n + other.order();
        check_hard("disjoint union", total)?;
        let mut g = *self;
        g.n = total as u8;
        for v in 0..other.order() {
            g.rows[n + v] = other.rows[v] << n;
        }
        Ok(g)
    }

    /// `r` disjoint copies of `self`; zero copies give the empty graph.
    pub fn repeat(&self, r: usize) -> Result<Graph> {
        check_hard("repetition", self.order() * r)?;
        let mut g = Graph::empty(0)?;
        for _ in 0..r {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.order();
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(n);
        let right = full_mask(g.order()) & !left;
        for v in 0..n {
            g.rows[v] |= right;
        }
        for v in n..g.order() {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = self.vertex_mask();
        for v in 0..self.order() {
            g.rows[v] = !self.rows[v] & all & !(1 << v);
        }
        g
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    /// Removes vertex `v`; higher indices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep = self.vertex_mask() & !(1 << v);
        Ok(self.induced(keep))
    }

    /// Subgraph induced by `set`, relabelled `0..|set|` in increasing order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = bits(set).collect();
        let mut rows = [0; MAX_ORDER];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate() {
                if self.has_edge(u, w) {
                    rows[i] |= 1 << j;
                }
            }
        }
        Graph::from_rows_unchecked(verts.len(), rows)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen: VertexSet = 0;
        if perm.len() != n {
            return Err(Error::InvalidParameters("permutation length".into()));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = [0; MAX_ORDER];
        for u in 0..n {
            for w in bits(self.rows[u]) {
                rows[perm[u]] |= 1 << perm[w];
            }
        }
        Ok(Graph::from_rows_unchecked(n, rows))
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn reach(&self, start: usize) -> VertexSet {
        let mut seen: VertexSet = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0) == self.vertex_mask()
    }

    /// A proper 2-colouring as the set of "colour 1" vertices, if one exists.
    pub fn two_coloring(&self) -> Option<VertexSet> {
        let mut ones: VertexSet = 0;
        for comp in self.components() {
            let start = comp.trailing_zeros() as usize;
            let mut colored: VertexSet = 1 << start;
            let mut frontier: VertexSet = 1 << start;
            let mut side = false;
            let mut sides = [1 << start, 0];
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.rows[v];
                }
                next &= !colored;
                side = !side;
                sides[side as usize] |= next;
                colored |= next;
                frontier = next;
            }
            for v in bits(comp) {
                let s = if sides[0] >> v & 1 == 1 { 0 } else { 1 };
                if self.rows[v] & sides[s] != 0 {
                    return None;
                }
            }
            ones |= sides[1];
        }
        Some(ones)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Per-component structure, degree sequence and global counts.
    pub fn structure(&self) -> StructureFacts {
        let components: Vec<ComponentFacts> = self
            .components()
            .into_iter()
            .map(|c| ComponentFacts::of(self, c))
            .collect();
        StructureFacts {
            order: self.order(),
            size: self.size(),
            degree_sequence: self.degree_sequence(),
            component_count: components.len(),
            bipartite_component_count: components.iter().filter(|c| c.is_bipartite).count(),
            components,
        }
    }

    /// Every component has at most one cycle (hereditary under vertex deletion).
    pub fn is_pseudoforest(&self) -> bool {
        self.components().into_iter().all(|c| {
            let sub = self.induced(c);
            sub.size() <= sub.order()
        })
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size() + 1 == self.order()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.order() && self.order() >= 3
    }

    /// Connected, one cycle, and that cycle has odd length.
    pub fn is_odd_unicyclic(&self) -> bool {
        self.is_unicyclic() && cycle_core(self, self.vertex_mask()).count_ones() % 2 == 1
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for (u, v) in self.edges() {
            t += (self.rows[u] & self.rows[v]).count_ones() as usize;
        }
        t / 3
    }

    /// Exact number of spanning trees, via a Laplacian cofactor.
    pub fn spanning_tree_count(&self) -> BigInt {
        let n = self.order();
        if n <= 1 {
            return BigInt::from(n);
        }
        let lap = crate::spectra::matrix(self, crate::spectra::MatrixKind::Laplacian);
        let minor = IntMatrix::from_fn(n - 1, |i, j| lap.get(i + 1, j + 1).clone());
        minor.determinant()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order(), self.edges())
    }
}

/// Vertices left after repeatedly stripping vertices of degree at most one.
///
/// For a unicyclic component this is exactly the vertex set of its cycle.
pub fn cycle_core(g: &Graph, within: VertexSet) -> VertexSet {
    let mut alive = within;
    loop {
        let leaves: VertexSet = bits(alive)
            .filter(|&v| (g.rows[v] & alive).count_ones() <= 1)
            .fold(0, |acc, v| acc | 1 << v);
        if leaves == 0 {
            return alive;
        }
        alive &= !leaves;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentFacts {
    pub vertices: Vec<usize>,
    pub order: usize,
    pub size: usize,
    pub is_tree: bool,
    pub is_unicyclic: bool,
    pub is_odd_unicyclic: bool,
    pub is_bipartite: bool,
    /// Connected bipartite with both colour classes of equal size.
    pub is_balanced_bipartite: bool,
}

impl ComponentFacts {
    fn of(g: &Graph, comp: VertexSet) -> ComponentFacts {
        let sub = g.induced(comp);
        let coloring = sub.two_coloring();
        let order = sub.order();
        let size = sub.size();
        let is_unicyclic = size == order && order >= 3;
        let is_balanced_bipartite = match coloring {
            Some(ones) => 2 * ones.count_ones() as usize == order,
            None => false,
        };
        ComponentFacts {
            vertices: bits(comp).collect(),
            order,
            size,
            is_tree: size + 1 == order,
            is_unicyclic,
            is_odd_unicyclic: is_unicyclic
                && cycle_core(&sub, sub.vertex_mask()).count_ones() % 2 == 1,
            is_bipartite: coloring.is_some(),
            is_balanced_bipartite,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureFacts {
    pub order: usize,
    pub size: usize,
    pub degree_sequence: Vec<usize>,
    pub components: Vec<ComponentFacts>,
    pub component_count: usize,
    pub bipartite_component_count: usize,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> VertexSet {
    if n >= 16 {
        u16::MAX
    } else {
        (1u16 << n) - 1
    }
}

/// Iterates the set bits of `set` in increasing order.
#[inline]
pub fn bits(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut s = set;
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        Graph::from_edges(n, &e).unwrap()
    }

    fn star(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn complete_graph_size() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
    }

    #[test]
    fn union_of_two_k2() {
        let k2 = Graph::complete(2).unwrap();
        let g = k2.disjoint_union(&k2).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (4, 2, 2));
    }

    #[test]
    fn star_plus_isolated() {
        let g = star(4).disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!((g.order(), g.size(), g.components().len()), (6, 3, 3));
    }

    #[test]
    fn join_k2_with_two_isolated_is_k4_minus_edge() {
        let g = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(2).unwrap())
            .unwrap();
        assert_eq!(g.size(), 5);
        assert!(!g.has_edge(2, 3));
        assert_eq!(g.degree_sequence(), vec![3, 3, 2, 2]);
    }

    #[test]
    fn join_with_empty_graph_is_identity() {
        let g = cycle(5);
        assert_eq!(g.join(&Graph::empty(0).unwrap()).unwrap(), g);
        assert_eq!(g.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), g);
    }

    #[test]
    fn complement_basics() {
        assert_eq!(
            Graph::complete(5).unwrap().complement(),
            Graph::empty(5).unwrap()
        );
        let c5 = cycle(5).complement();
        assert!(c5.is_regular() && c5.degree(0) == 2 && c5.is_connected());
    }

    #[test]
    fn delete_edge_errors_on_non_edge() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.delete_edge(0, 1).unwrap(), Graph::empty(2).unwrap());
        assert_eq!(
            Graph::empty(2).unwrap().delete_edge(0, 1),
            Err(Error::NotAnEdge(0, 1))
        );
        let k4e = Graph::complete(4).unwrap().delete_edge(0, 3).unwrap();
        assert_eq!(k4e.degree_sequence(), vec![3, 3, 2, 2]);
    }

    #[test]
    fn structure_flags() {
        let c3 = cycle(3).structure();
        assert!(c3.components[0].is_odd_unicyclic && !c3.components[0].is_bipartite);
        let c4 = cycle(4).structure();
        let c = &c4.components[0];
        assert!(c.is_unicyclic && !c.is_odd_unicyclic && c.is_bipartite && c.is_balanced_bipartite);

        let g = star(4)
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap()
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        let s = g.structure();
        assert_eq!(s.component_count, 3);
        assert_eq!(s.bipartite_component_count, 3);
        let balanced: Vec<bool> = s
            .components
            .iter()
            .map(|c| c.is_balanced_bipartite)
            .collect();
        assert_eq!(balanced, vec![false, true, false]);
    }

    #[test]
    fn odd_unicyclic_with_tails() {
        // triangle 0-1-2 with a path 2-3-4 hanging off
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert!(g.is_odd_unicyclic());
        let h = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        assert!(h.is_unicyclic() && !h.is_odd_unicyclic());
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(
            Graph::complete(4).unwrap().spanning_tree_count(),
            BigInt::from(16)
        );
        assert_eq!(path(6).spanning_tree_count(), BigInt::from(1));
        assert_eq!(star(5).spanning_tree_count(), BigInt::from(1));
        assert_eq!(cycle(5).spanning_tree_count(), BigInt::from(5));
        let disconnected = path(3).disjoint_union(&path(2)).unwrap();
        assert_eq!(disconnected.spanning_tree_count(), BigInt::from(0));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::empty(10).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn relabel_and_induced() {
        let p = path(4);
        let q = p.relabel(&[3, 1, 0, 2]).unwrap();
        assert_eq!(q.size(), 3);
        assert!(q.has_edge(3, 1) && q.has_edge(1, 0) && q.has_edge(0, 2));
        assert_eq!(p.delete_vertex(0).unwrap(), path(3));
    }
}
