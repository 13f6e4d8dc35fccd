//! The lemma catalog: each entry is an exact predicate over one graph class,
//! swept exhaustively up to a maximum order.

use crate::error::{Result, VerifyError};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use dqspec_core::canon::canonical_key;
use dqspec_core::enumerate::{enumerate, EnumerationFilter};
use dqspec_core::linalg::{compare_real_rooted, real_rooted_counts};
use dqspec_core::spectra::nonzero_root_product;
use dqspec_core::{
    build, charpoly, matrix, CanonKey, FamilySpec, Graph, IntMatrix, IntPoly, Limits, MatrixKind,
    RealRoot, RootIsolation, MAX_ORDER,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// `Err` carries the reason a graph refutes the lemma.
pub type Check = std::result::Result<(), String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    All,
    Connected,
    Trees,
    Unicyclic,
}

impl GraphClass {
    fn filter(self, n: usize) -> EnumerationFilter {
        let f = EnumerationFilter::new(n);
        match self {
            GraphClass::All => f,
            GraphClass::Connected => f.connected(),
            GraphClass::Trees => f.tree(),
            GraphClass::Unicyclic => f.unicyclic(),
        }
    }
}

pub trait Lemma: Send + Sync {
    fn id(&self) -> &'static str;
    fn aliases(&self) -> &'static [&'static str];
    fn statement(&self) -> &'static str;
    fn class(&self) -> GraphClass;
    fn min_order(&self) -> usize {
        1
    }
    fn default_max_order(&self) -> usize {
        7
    }
    fn check(&self, g: &Graph) -> Check;
}

fn q(g: &Graph) -> IntPoly {
    charpoly(g, MatrixKind::SignlessLaplacian)
}

fn l(g: &Graph) -> IntPoly {
    charpoly(g, MatrixKind::Laplacian)
}

fn rat(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `k`-th largest root of a charpoly against `v`; `k` is always in range here.
fn cmp(p: &IntPoly, k: usize, v: &BigRational) -> Ordering {
    compare_real_rooted(p, k, v).expect("rank within degree")
}

fn mult(p: &IntPoly, v: i64) -> usize {
    real_rooted_counts(p, &rat(v)).1
}

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

/// Family builds here only need the hard limit.
pub(crate) fn family(spec: FamilySpec) -> Graph {
    let wide = Limits {
        construction: MAX_ORDER,
        ..Limits::default()
    };
    build(&spec, &wide).expect("family within the hard limit")
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    g.is_tree() && (n <= 2 || g.degree_sequence()[0] == n - 1)
}

struct L1;
impl Lemma for L1 {
    fn id(&self) -> &'static str {
        "L1_gamma1_bound"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["l1"]
    }
    fn statement(&self) -> &'static str {
        "gamma1 >= 4m/n, with equality iff G is regular"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn check(&self, g: &Graph) -> Check {
        let bound = BigRational::new(BigInt::from(4 * g.size()), BigInt::from(g.order()));
        match cmp(&q(g), 1, &bound) {
            Ordering::Less => Err(format!("gamma1 < {bound}")),
            Ordering::Equal => ensure(g.is_regular(), || "equality but not regular".into()),
            Ordering::Greater => ensure(!g.is_regular(), || "regular but strict".into()),
        }
    }
}

struct L2;
impl Lemma for L2 {
    fn id(&self) -> &'static str {
        "L2_mu1_bound"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["l2"]
    }
    fn statement(&self) -> &'static str {
        "connected G: mu1 <= n"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn check(&self, g: &Graph) -> Check {
        ensure(cmp(&l(g), 1, &rat(g.order())) != Ordering::Greater, || {
            "mu1 > n".into()
        })
    }
}

struct Lq;
impl Lemma for Lq {
    fn id(&self) -> &'static str {
        "LQ_bipartite_equal"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["lq"]
    }
    fn statement(&self) -> &'static str {
        "bipartite G: Q-spectrum equals L-spectrum"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn check(&self, g: &Graph) -> Check {
        ensure(!g.is_bipartite() || q(g) == l(g), || {
            "bipartite with different L and Q charpolys".into()
        })
    }
}

/// Keys of the double starlike trees `G(p, l, q)`, `p, q >= 1`, of order `n`.
fn starlike_keys(n: usize, lens: &[usize]) -> Vec<CanonKey> {
    let mut keys = Vec::new();
    for &len in lens {
        for p in 1..n {
            for q in 1..=p {
                if p + q + len == n {
                    keys.push(canonical_key(&family(FamilySpec::DoubleStarlike(
                        p, len, q,
                    ))));
                }
            }
        }
    }
    keys
}

struct Mull;
impl Lemma for Mull {
    fn id(&self) -> &'static str {
        "MULL_tree_mult"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["mull"]
    }
    fn statement(&self) -> &'static str {
        "tree T: m_L(1) = n-4 iff T is a double star; m_L(1) = n-5 iff T is G(p,3,q) or G(p,4,q)"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Trees
    }
    fn min_order(&self) -> usize {
        4
    }
    fn default_max_order(&self) -> usize {
        9
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let m1 = mult(&l(g), 1);
        let key = canonical_key(g);
        let double_star = starlike_keys(n, &[2]).contains(&key);
        ensure((m1 + 4 == n) == double_star, || {
            format!("m_L(1) = {m1}, double star: {double_star}")
        })?;
        if n >= 5 {
            let longer = starlike_keys(n, &[3, 4]).contains(&key);
            ensure((m1 + 5 == n) == longer, || {
                format!("m_L(1) = {m1}, G(p,3,q) or G(p,4,q): {longer}")
            })?;
        }
        Ok(())
    }
}

/// Largest Q-root of `g`, isolated.
fn gamma1(p: &IntPoly) -> RealRoot {
    RootIsolation::new(p)
        .nth_largest(1)
        .expect("nonempty spectrum")
        .clone()
}

/// `true` iff the largest root of the real-rooted `h` is below `top`.
fn strictly_below(h: &IntPoly, top: &mut RealRoot) -> bool {
    if let Some(v) = top.exact() {
        return cmp(h, 1, v) == Ordering::Less;
    }
    let lo = top.lower().clone();
    let (_, at, above) = real_rooted_counts(h, &lo);
    if at + above == 0 {
        return true;
    }
    gamma1(h).cmp_root(top) == Ordering::Less
}

struct P;
impl Lemma for P {
    fn id(&self) -> &'static str {
        "P_subgraph_strict"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["p"]
    }
    fn statement(&self) -> &'static str {
        "H a proper subgraph of connected G: gamma1(H) < gamma1(G) (edge and vertex deletions)"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn min_order(&self) -> usize {
        2
    }
    fn check(&self, g: &Graph) -> Check {
        let mut top = gamma1(&q(g));
        top.refine_to(&BigRational::new(1.into(), BigInt::from(1u64 << 20)));
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).expect("edge");
            ensure(strictly_below(&q(&h), &mut top), || {
                format!("deleting edge {u}-{v} does not lower gamma1")
            })?;
        }
        for v in 0..g.order() {
            let h = g.delete_vertex(v).expect("vertex");
            ensure(strictly_below(&q(&h), &mut top), || {
                format!("deleting vertex {v} does not lower gamma1")
            })?;
        }
        Ok(())
    }
}

struct Pro;
impl Lemma for Pro {
    fn id(&self) -> &'static str {
        "PRO_product"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["pro"]
    }
    fn statement(&self) -> &'static str {
        "connected bipartite G: p+(G) = p-(G) = n tau(G)"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn check(&self, g: &Graph) -> Check {
        if !g.is_bipartite() {
            return Ok(());
        }
        let target = BigInt::from(g.order()) * g.spanning_tree_count();
        let (pl, pq) = (nonzero_root_product(&l(g)), nonzero_root_product(&q(g)));
        ensure(pl == target && pq == target, || {
            format!("p- = {pl}, p+ = {pq}, n tau = {target}")
        })
    }
}

struct D4;
impl Lemma for D4 {
    fn id(&self) -> &'static str {
        "D4_det_unicyclic"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["d4"]
    }
    fn statement(&self) -> &'static str {
        "det Q(G) = 4 iff G is odd unicyclic"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn check(&self, g: &Graph) -> Check {
        let det: BigInt = matrix(g, MatrixKind::SignlessLaplacian).determinant();
        let four = det == BigInt::from(4);
        ensure(four == g.is_odd_unicyclic(), || format!("det Q = {det}"))
    }
}

struct Dlsa;
impl Lemma for Dlsa {
    fn id(&self) -> &'static str {
        "DLSA_mu2_d2"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["dlsa"]
    }
    fn statement(&self) -> &'static str {
        "connected G, n >= 3: mu2 >= d2"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn min_order(&self) -> usize {
        3
    }
    fn check(&self, g: &Graph) -> Check {
        let d2 = g.degree_sequence()[1];
        ensure(cmp(&l(g), 2, &rat(d2)) != Ordering::Less, || {
            format!("mu2 < d2 = {d2}")
        })
    }
}

struct Dl1;
impl Lemma for Dl1 {
    fn id(&self) -> &'static str {
        "DL1_tree_second_smallest"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["dl1"]
    }
    fn statement(&self) -> &'static str {
        "tree T, n >= 3: mu_{n-1} <= 1, with equality iff T is the star"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Trees
    }
    fn min_order(&self) -> usize {
        3
    }
    fn default_max_order(&self) -> usize {
        9
    }
    fn check(&self, g: &Graph) -> Check {
        match cmp(&l(g), g.order() - 1, &rat(1)) {
            Ordering::Greater => Err("mu_{n-1} > 1".into()),
            Ordering::Equal => ensure(is_star(g), || "mu_{n-1} = 1 for a non-star".into()),
            Ordering::Less => ensure(!is_star(g), || "star with mu_{n-1} < 1".into()),
        }
    }
}

struct Tree;
impl Lemma for Tree {
    fn id(&self) -> &'static str {
        "TREE_mu1_star"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["tree"]
    }
    fn statement(&self) -> &'static str {
        "tree T, n >= 2: mu1 = n iff T is the star"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Trees
    }
    fn min_order(&self) -> usize {
        2
    }
    fn default_max_order(&self) -> usize {
        9
    }
    fn check(&self, g: &Graph) -> Check {
        let top = cmp(&l(g), 1, &rat(g.order())) == Ordering::Equal;
        ensure(top == is_star(g), || {
            format!("mu1 = n: {top}, star: {}", is_star(g))
        })
    }
}

struct Siam;
impl Lemma for Siam {
    fn id(&self) -> &'static str {
        "SIAM_integer_divides"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["siam"]
    }
    fn statement(&self) -> &'static str {
        "tree T: an integer L-eigenvalue mu > 1 divides n and is simple"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Trees
    }
    fn default_max_order(&self) -> usize {
        9
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let p = l(g);
        // every L-eigenvalue is at most 2 * max degree
        for mu in 2..=2 * n as i64 {
            let k = mult(&p, mu);
            if k > 0 {
                ensure(n as i64 % mu == 0 && k == 1, || {
                    format!("eigenvalue {mu} with multiplicity {k}")
                })?;
            }
        }
        Ok(())
    }
}

struct Kcdas;
impl Lemma for Kcdas {
    fn id(&self) -> &'static str {
        "KCDAS_gamman_dn"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["kcdas"]
    }
    fn statement(&self) -> &'static str {
        "connected G, n >= 2: gamma_n < d_n"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn min_order(&self) -> usize {
        2
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let dn = g.degree_sequence()[n - 1];
        ensure(cmp(&q(g), n, &rat(dn)) == Ordering::Less, || {
            format!("gamma_n >= d_n = {dn}")
        })
    }
}

struct U2;
impl Lemma for U2 {
    fn id(&self) -> &'static str {
        "U2_unicyclic_mult"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["u2"]
    }
    fn statement(&self) -> &'static str {
        "unicyclic U: an integer Q-eigenvalue lambda > 1 has multiplicity at most 2"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Unicyclic
    }
    fn min_order(&self) -> usize {
        3
    }
    fn default_max_order(&self) -> usize {
        8
    }
    fn check(&self, g: &Graph) -> Check {
        let p = q(g);
        for lambda in 2..=2 * g.order() as i64 {
            let k = mult(&p, lambda);
            ensure(k <= 2, || {
                format!("eigenvalue {lambda} with multiplicity {k}")
            })?;
        }
        Ok(())
    }
}

/// The graphs of order `n >= 4` said to have a Q-eigenvalue of multiplicity `n-2`.
fn named_mul_graphs(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![
        (format!("K{n}-e"), family(FamilySpec::CompleteMinusEdge(n))),
        (format!("S{n}"), family(FamilySpec::Star(n))),
    ];
    if n.is_multiple_of(2) {
        let h = n / 2;
        out.push((
            format!("K{{{h},{h}}}"),
            family(FamilySpec::CompleteBipartite(h, h)),
        ));
    }
    if n == 7 {
        let k3 = family(FamilySpec::Complete(3));
        let s4 = family(FamilySpec::Star(4));
        let k1 = family(FamilySpec::Complete(1));
        out.push((
            "complement(K3+S4)".into(),
            k3.disjoint_union(&s4).unwrap().complement(),
        ));
        out.push((
            "complement(K1+2K3)".into(),
            k1.disjoint_union(&k3.repeat(2).unwrap())
                .unwrap()
                .complement(),
        ));
    }
    out
}

struct Mul;
impl Lemma for Mul {
    fn id(&self) -> &'static str {
        "MUL_multiplicity_n_minus_2"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["mul"]
    }
    fn statement(&self) -> &'static str {
        "connected G, n >= 4: some Q-eigenvalue has multiplicity n-2 iff G is K_n-e, S_n, \
         K_{n/2,n/2}, complement(K3+S4) or complement(K1+2K3)"
    }
    fn class(&self) -> GraphClass {
        GraphClass::Connected
    }
    fn min_order(&self) -> usize {
        4
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let has = q(g)
            .square_free_decomposition()
            .iter()
            .any(|(f, k)| *k == n - 2 && f.degree().unwrap_or(0) > 0);
        let key = canonical_key(g);
        let named = named_mul_graphs(n)
            .into_iter()
            .find(|(_, h)| canonical_key(h) == key)
            .map(|(name, _)| name);
        ensure(has == named.is_some(), || {
            format!("multiplicity n-2: {has}, named graph: {named:?}")
        })
    }
}

struct Ljv;
impl Lemma for Ljv {
    fn id(&self) -> &'static str {
        "LJV_gamma2_bound"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["ljv"]
    }
    fn statement(&self) -> &'static str {
        "n >= 2: gamma2 <= n-2; gamma_{k+1} = n-2 iff the complement has at least k balanced \
         bipartite components or at least k+1 bipartite components"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn min_order(&self) -> usize {
        2
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let p = q(g);
        let top = rat(n as i64 - 2);
        ensure(cmp(&p, 2, &top) != Ordering::Greater, || {
            "gamma2 > n-2".into()
        })?;
        let (balanced, bipartite) = ljv_counts(g);
        for k in 1..n {
            let lhs = cmp(&p, k + 1, &top) == Ordering::Equal;
            let rhs = balanced >= k || bipartite > k;
            ensure(lhs == rhs, || {
                format!("k = {k}: gamma_(k+1) = n-2 is {lhs}, complement condition is {rhs}")
            })?;
        }
        Ok(())
    }
}

/// Balanced bipartite and bipartite component counts of the complement.
fn ljv_counts(g: &Graph) -> (usize, usize) {
    let facts = g.complement().structure();
    let balanced = facts
        .components
        .iter()
        .filter(|c| c.is_balanced_bipartite)
        .count();
    (balanced, facts.bipartite_component_count)
}

/// Graphs of order `n` on which the literal "exactly k" reading of the
/// complement condition disagrees with the spectrum.
pub fn ljv_literal_reading_failures(n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    let graphs = enumerate(&EnumerationFilter::new(n), limits)?;
    Ok(graphs
        .into_par_iter()
        .filter(|g| {
            let p = q(g);
            let top = rat(n as i64 - 2);
            let (balanced, bipartite) = ljv_counts(g);
            (1..n).any(|k| {
                let lhs = cmp(&p, k + 1, &top) == Ordering::Equal;
                lhs != (balanced == k || bipartite == k + 1)
            })
        })
        .collect())
}

struct Jldn;
impl Lemma for Jldn {
    fn id(&self) -> &'static str {
        "JLDN_dn1_bound"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["jldn"]
    }
    fn statement(&self) -> &'static str {
        "n >= 2: d_{n-1} >= gamma_{n-1} - 1, and equality forces d_{n-1} = d_n"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn min_order(&self) -> usize {
        2
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let d = g.degree_sequence();
        match cmp(&q(g), n - 1, &rat(d[n - 2] as i64 + 1)) {
            Ordering::Greater => Err(format!("gamma_(n-1) > d_(n-1) + 1 = {}", d[n - 2] + 1)),
            Ordering::Equal => ensure(d[n - 2] == d[n - 1], || {
                "equality with d_(n-1) != d_n".into()
            }),
            Ordering::Less => Ok(()),
        }
    }
}

struct Jld3;
impl Lemma for Jld3 {
    fn id(&self) -> &'static str {
        "JLD3_gamma3_bound"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["jld3"]
    }
    fn statement(&self) -> &'static str {
        "n >= 3: gamma3 >= d3 - sqrt(2)"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn min_order(&self) -> usize {
        3
    }
    fn check(&self, g: &Graph) -> Check {
        let d3 = g.degree_sequence()[2] as i64;
        let p = q(g);
        // 7/5 < sqrt(2) < 3/2
        let frac = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        if cmp(&p, 3, &(rat(d3) - frac(7, 5))) != Ordering::Less {
            return Ok(());
        }
        if cmp(&p, 3, &(rat(d3) - frac(3, 2))) == Ordering::Less {
            return Err(format!("gamma3 < d3 - 3/2 with d3 = {d3}"));
        }
        let mut bound = RealRoot::sqrt(2).reflect(&BigInt::from(d3));
        let mut iso = RootIsolation::new(&p);
        let g3 = iso.nth_largest_mut(3).expect("n >= 3");
        ensure(g3.cmp_root(&mut bound) != Ordering::Less, || {
            format!("gamma3 < d3 - sqrt(2) with d3 = {d3}")
        })
    }
}

struct Jlh;
impl Lemma for Jlh {
    fn id(&self) -> &'static str {
        "JLH_weyl"
    }
    fn aliases(&self) -> &'static [&'static str] {
        &["jlh"]
    }
    fn statement(&self) -> &'static str {
        "Weyl inequalities for M = Q(G) + Q(complement G) = (n-2)I + J, both directions"
    }
    fn class(&self) -> GraphClass {
        GraphClass::All
    }
    fn default_max_order(&self) -> usize {
        6
    }
    fn check(&self, g: &Graph) -> Check {
        let n = g.order();
        let qa = matrix(g, MatrixKind::SignlessLaplacian);
        let qb = matrix(&g.complement(), MatrixKind::SignlessLaplacian);
        let sum = IntMatrix::from_fn(n, |i, j| qa.get(i, j) + qb.get(i, j));
        // theta(M): 2n-2 once, n-2 the remaining n-1 times
        let theta: Vec<i64> = (0..n)
            .map(|i| {
                if i == 0 {
                    2 * n as i64 - 2
                } else {
                    n as i64 - 2
                }
            })
            .collect();
        let expected = theta.iter().fold(IntPoly::one(), |acc, &t| {
            &acc * &IntPoly::linear_root(&BigInt::from(t))
        });
        ensure(sum.charpoly() == expected, || {
            "Q(G) + Q(complement) is not (n-2)I + J".into()
        })?;
        let a = RootIsolation::new(&qa.charpoly()).expanded();
        let b = RootIsolation::new(&qb.charpoly()).expanded();
        for i in 1..=n {
            for j in 1..=n {
                let (mut x, mut y) = (a[i - 1].clone(), b[j - 1].clone());
                // sign of x + y - c, exactly: compare y with c - x
                let mut vs = |c: i64| y.cmp_root(&mut x.reflect(&BigInt::from(c)));
                if i + j - 1 <= n {
                    let c = theta[i + j - 2];
                    ensure(vs(c) != Ordering::Less, || {
                        format!("theta_{}(M) > theta_{i}(N) + theta_{j}(P)", i + j - 1)
                    })?;
                }
                if i + j > n {
                    let c = theta[i + j - n - 1];
                    ensure(vs(c) != Ordering::Greater, || {
                        format!("theta_{i}(N) + theta_{j}(P) > theta_{}(M)", i + j - n)
                    })?;
                }
            }
        }
        Ok(())
    }
}

/// Registry of every lemma predicate, looked up by id or alias.
pub struct LemmaCatalog {
    lemmas: Vec<Box<dyn Lemma>>,
}

impl LemmaCatalog {
    pub fn standard() -> Self {
        LemmaCatalog {
            lemmas: vec![
                Box::new(L1),
                Box::new(L2),
                Box::new(Lq),
                Box::new(Mull),
                Box::new(P),
                Box::new(Pro),
                Box::new(D4),
                Box::new(Dlsa),
                Box::new(Dl1),
                Box::new(Tree),
                Box::new(Siam),
                Box::new(Kcdas),
                Box::new(U2),
                Box::new(Mul),
                Box::new(Ljv),
                Box::new(Jldn),
                Box::new(Jld3),
                Box::new(Jlh),
            ],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Lemma> {
        self.lemmas.iter().map(|b| b.as_ref())
    }

    pub fn len(&self) -> usize {
        self.lemmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lemmas.is_empty()
    }

    pub fn get(&self, name: &str) -> Result<&dyn Lemma> {
        let key = name.to_ascii_lowercase();
        self.iter()
            .find(|l| l.id().to_ascii_lowercase() == key || l.aliases().contains(&key.as_str()))
            .ok_or_else(|| VerifyError::UnknownClaim(name.to_string()))
    }
}

/// Sweeps every graph of the lemma's class with order in
/// `min_order..=max_order`.
pub fn verify_lemma(
    lemma: &dyn Lemma,
    max_order: usize,
    limits: &Limits,
) -> Result<VerificationReport> {
    limits.check_spectral(lemma.id(), max_order)?;
    let mut b = ReportBuilder::new(
        lemma.id(),
        json!({ "min_order": lemma.min_order(), "max_order": max_order, "class": lemma.class() }),
    );
    b.note(lemma.statement());
    let mut per_order = BTreeMap::new();
    for n in lemma.min_order()..=max_order {
        let graphs = enumerate(&lemma.class().filter(n), limits)?;
        let failures: Vec<Witness> = graphs
            .par_iter()
            .filter_map(|g| lemma.check(g).err().map(|why| Witness::new(g, why)))
            .collect();
        b.checked(graphs.len() as u64);
        per_order.insert(n, graphs.len());
        for w in failures {
            b.fail(w);
        }
    }
    b.detail("graphs_per_order", per_order);
    Ok(b.finish())
}
