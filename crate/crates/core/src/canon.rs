//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualize each vertex of the first non-singleton cell,
//! recurse. Leaves are discrete partitions; the leaf whose relabeled
//! adjacency rows compare greatest is canonical. Leaves that produce equal
//! rows yield automorphisms, which prune siblings in the same orbit.

use crate::graph::{bits, full_mask, Graph, VertexSet};
use crate::limits::MAX_ORDER;
use serde::Serialize;
use std::fmt;

/// Relabeled adjacency rows of the canonical leaf; equal keys mean isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: u8,
    rows: [u16; MAX_ORDER],
}

impl CanonKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// `n` followed by each row as two big-endian bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 2 * self.order());
        out.push(self.n);
        for r in &self.rows[..self.order()] {
            out.extend_from_slice(&r.to_be_bytes());
        }
        out
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.order(), self.rows)
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({:04x?})", &self.rows[..self.order()])
    }
}

impl Serialize for CanonKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let hex: String = self.to_bytes().iter().map(|b| format!("{b:02x}")).collect();
        s.serialize_str(&hex)
    }
}

#[derive(Debug, Clone)]
pub struct Canon {
    pub key: CanonKey,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphism group generators (`g[v]` is the image of `v`).
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the least vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Canon {
    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

type Perm = [u8; MAX_ORDER];

struct Leaf {
    key: [u16; MAX_ORDER],
    /// position -> vertex
    lab: Perm,
    path: Vec<u8>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Perm>,
}

/// Splits cells by neighbor counts into splitters until the partition is
/// equitable. Fragments are ordered by increasing count.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>, mut stack: Vec<VertexSet>, n: usize) {
    while let Some(w) = stack.pop() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x.count_ones() == 1 {
                i += 1;
                continue;
            }
            let mut by_count = [0 as VertexSet; MAX_ORDER + 1];
            let (mut lo, mut hi) = (usize::MAX, 0);
            for v in bits(x) {
                let c = (g.neighbors(v) & w).count_ones() as usize;
                by_count[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let frags: Vec<VertexSet> = by_count[lo..=hi]
                .iter()
                .copied()
                .filter(|&f| f != 0)
                .collect();
            let k = frags.len();
            cells.splice(i..=i, frags.iter().copied());
            stack.extend(frags);
            i += k;
        }
    }
}

fn leaf_key(g: &Graph, lab: &Perm, n: usize) -> [u16; MAX_ORDER] {
    let mut pos = [0u8; MAX_ORDER];
    for (p, &v) in lab[..n].iter().enumerate() {
        pos[v as usize] = p as u8;
    }
    let mut key = [0u16; MAX_ORDER];
    for (p, &v) in lab[..n].iter().enumerate() {
        let mut row = 0u16;
        for w in bits(g.neighbors(v as usize)) {
            row |= 1 << pos[w];
        }
        key[p] = row;
    }
    key
}

fn find(parent: &mut [u8], mut x: usize) -> usize {
    while parent[x] as usize != x {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x
}

impl Search<'_> {
    /// Explores the subtree at `cells`; `Some(level)` asks the caller chain
    /// to unwind to the node at depth `level`.
    fn dfs(&mut self, cells: &[VertexSet], path: &mut Vec<u8>) -> Option<usize> {
        let n = self.n;
        if cells.len() == n {
            return self.leaf(cells, path);
        }
        let t = cells.iter().position(|c| c.count_ones() > 1).unwrap();
        let target = cells[t];
        let depth = path.len();
        let mut explored: VertexSet = 0;
        for v in bits(target) {
            if explored != 0 && self.equivalent_to_explored(v, explored, path) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child, vec![1 << v], n);
            path.push(v as u8);
            let unwind = self.dfs(&child, path);
            path.pop();
            if let Some(level) = unwind {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Is `v` in the orbit of an explored sibling under the known
    /// automorphisms that fix the current path pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: VertexSet, path: &[u8]) -> bool {
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        let mut any = false;
        for g in &self.gens {
            if path.iter().all(|&p| g[p as usize] == p) {
                any = true;
                for x in 0..self.n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x] as usize));
                    if a != b {
                        parent[a.max(b)] = a.min(b) as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        bits(explored).any(|u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[u8]) -> Option<usize> {
        let n = self.n;
        let mut lab = [0u8; MAX_ORDER];
        for (p, c) in cells.iter().enumerate() {
            lab[p] = c.trailing_zeros() as u8;
        }
        let key = leaf_key(self.g, &lab, n);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                key,
                lab,
                path: path.to_vec(),
            };
            self.best = Some(Leaf {
                key,
                lab,
                path: path.to_vec(),
            });
            self.first = Some(leaf);
            return None;
        };
        if key == first.key {
            self.gens.push(compose(&first.lab, &lab, n));
            let common = first
                .path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_mut().unwrap();
        match key.cmp(&best.key) {
            std::cmp::Ordering::Equal => {
                self.gens.push(compose(&best.lab, &lab, n));
            }
            std::cmp::Ordering::Greater => {
                *best = Leaf {
                    key,
                    lab,
                    path: path.to_vec(),
                };
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }
}

/// The automorphism sending `a[p]` to `b[p]` for every position `p`.
fn compose(a: &Perm, b: &Perm, n: usize) -> Perm {
    let mut out: Perm = std::array::from_fn(|i| i as u8);
    for p in 0..n {
        out[a[p] as usize] = b[p];
    }
    out
}

pub fn canonicalize(g: &Graph) -> Canon {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        gens: Vec::new(),
    };
    if n == 0 {
        return Canon {
            key: CanonKey {
                n: 0,
                rows: [0; MAX_ORDER],
            },
            labeling: Vec::new(),
            generators: Vec::new(),
            orbits: Vec::new(),
        };
    }
    let mut cells = vec![full_mask(n)];
    refine(g, &mut cells, vec![full_mask(n)], n);
    search.dfs(&cells, &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    let mut labeling = vec![0; n];
    for p in 0..n {
        labeling[best.lab[p] as usize] = p;
    }
    let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
    for g in &search.gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g[x] as usize));
            if a != b {
                parent[a.max(b)] = a.min(b) as u8;
            }
        }
    }
    let orbits = (0..n).map(|v| find(&mut parent, v)).collect();
    Canon {
        key: CanonKey {
            n: n as u8,
            rows: best.key,
        },
        labeling,
        generators: search
            .gens
            .iter()
            .map(|p| p[..n].iter().map(|&x| x as usize).collect())
            .collect(),
        orbits,
    }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canonicalize(g).key
}

/// Relabeling-invariant byte string; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical_key(g).to_bytes()
}

pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_key(g).graph()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_key(g) == canonical_key(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()).unwrap()
    }

    /// All permutations of 0..n (Heap's algorithm).
    fn perms(n: usize) -> Vec<Vec<usize>> {
        let mut a: Vec<usize> = (0..n).collect();
        let mut out = vec![a.clone()];
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(a.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    fn brute_orbits(g: &Graph) -> Vec<usize> {
        let n = g.order();
        let auts: Vec<_> = perms(n)
            .into_iter()
            .filter(|p| g.relabel(p).unwrap() == *g)
            .collect();
        (0..n)
            .map(|v| auts.iter().map(|p| p[v]).min().unwrap())
            .collect()
    }

    #[test]
    fn relabeled_path_is_isomorphic() {
        let p4 = path(4);
        let q = p4.relabel(&[2, 0, 3, 1]).unwrap();
        assert!(is_isomorphic(&p4, &q));
        assert_eq!(canonical_form(&p4), canonical_form(&q));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
    }

    #[test]
    fn orbits_of_small_graphs() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let c = canonicalize(&g);
        assert_eq!(c.orbits, vec![0, 1, 2, 1, 4]);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(canonicalize(&k4).orbits, vec![0; 4]);
        assert_eq!(canonicalize(&Graph::empty(6).unwrap()).orbits, vec![0; 6]);
    }

    #[test]
    fn orbits_match_brute_force_on_all_5_vertex_graphs() {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(5, &edges).unwrap();
            let c = canonicalize(&g);
            assert_eq!(c.orbits, brute_orbits(&g), "{g:?}");
            for gen in &c.generators {
                assert_eq!(g.relabel(gen).unwrap(), g);
            }
            assert_eq!(g.relabel(&c.labeling).unwrap(), c.key.graph());
        }
    }

    #[test]
    fn canonical_bytes_layout() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(canonical_form(&k2), vec![2, 0, 2, 0, 1]);
    }
}
