//! Enumeration counts checked against oracles that share no code with the
//! generator: Pólya counting over cycle types, and labeled brute force with
//! a minimum-over-all-permutations canonical code.

use dqspec_core::enumerate::{count, enumerate, for_each, EnumerationFilter};
use dqspec_core::{Graph, Limits};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of unlabeled graphs on `n` vertices with `m` edges, for every `m`.
fn polya_counts(n: usize) -> Vec<u128> {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut total = vec![0u128; pairs + 1];
    for lambda in partitions(n, n) {
        // permutations with this cycle type: n! / prod(a^k_a k_a!)
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &a in &lambda {
            *mult.entry(a).or_default() += 1;
        }
        let z: u128 = mult
            .iter()
            .map(|(&a, &k)| (a as u128).pow(k as u32) * factorial(k))
            .product();
        let perms = factorial(n) / z;
        // cycle lengths of the induced permutation on pairs
        let mut cycles = Vec::new();
        for (i, &a) in lambda.iter().enumerate() {
            if a % 2 == 1 {
                cycles.extend(std::iter::repeat_n(a, (a - 1) / 2));
            } else {
                cycles.extend(std::iter::repeat_n(a, (a - 2) / 2));
                cycles.push(a / 2);
            }
            for &b in &lambda[i + 1..] {
                let g = gcd(a, b);
                cycles.extend(std::iter::repeat_n(a * b / g, g));
            }
        }
        let mut poly = vec![0u128; pairs + 1];
        poly[0] = 1;
        for c in cycles {
            for e in (c..=pairs).rev() {
                poly[e] += poly[e - c];
            }
        }
        for (t, p) in total.iter_mut().zip(poly) {
            *t += perms * p;
        }
    }
    total.into_iter().map(|t| t / factorial(n)).collect()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest upper-triangle bit code over all relabelings.
fn brute_code(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> u64 {
    let index = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        b * (b - 1) / 2 + a
    };
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << index(p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

fn labeled_classes(n: usize) -> BTreeMap<u64, Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = all_perms(n);
    let mut classes = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let code = brute_code(&edges, &perms);
        classes
            .entry(code)
            .or_insert_with(|| Graph::from_edges(n, &edges).unwrap());
    }
    classes
}

fn code_of(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    brute_code(&g.edges(), perms)
}

#[test]
fn polya_oracle_reproduces_known_totals() {
    let totals: Vec<u128> = (4..=10).map(|n| polya_counts(n).iter().sum()).collect();
    assert_eq!(totals, vec![11, 34, 156, 1044, 12346, 274668, 12005168]);
}

#[test]
fn counts_by_order_and_size_match_polya_up_to_8() {
    let limits = Limits::default();
    for n in 1..=8 {
        let oracle = polya_counts(n);
        for (m, &expected) in oracle.iter().enumerate() {
            let got = count(&EnumerationFilter::new(n).size(m), &limits).unwrap();
            assert_eq!(got as u128, expected, "n={n} m={m}");
        }
    }
}

#[test]
fn unfiltered_total_at_9() {
    let got = count(&EnumerationFilter::new(9), &Limits::default()).unwrap();
    assert_eq!(got, 274668);
}

#[test]
fn enumeration_equals_labeled_brute_force_up_to_6() {
    let limits = Limits::default();
    for n in 1..=6 {
        let perms = all_perms(n);
        let oracle: BTreeSet<u64> = labeled_classes(n).into_keys().collect();
        let listed = enumerate(&EnumerationFilter::new(n), &limits).unwrap();
        let codes: Vec<u64> = listed.iter().map(|g| code_of(g, &perms)).collect();
        let distinct: BTreeSet<u64> = codes.iter().copied().collect();
        assert_eq!(distinct.len(), codes.len(), "duplicate class at n={n}");
        assert_eq!(distinct, oracle, "n={n}");
    }
}

#[test]
fn filter_pushdown_is_sound_up_to_6() {
    let limits = Limits::default();
    for n in 1..=6 {
        let all = enumerate(&EnumerationFilter::new(n), &limits).unwrap();
        let total = n * (n - 1) / 2;
        let mut filters = vec![
            EnumerationFilter::new(n).connected(),
            EnumerationFilter::new(n).bipartite(),
            EnumerationFilter::new(n).tree(),
            EnumerationFilter::new(n).unicyclic(),
            EnumerationFilter::new(n).max_degree(2),
            EnumerationFilter::new(n).bipartite().connected(),
            EnumerationFilter::new(n).size_range(total / 2, total),
            EnumerationFilter::new(n)
                .connected()
                .size_range(total.saturating_sub(3), total),
            EnumerationFilter::new(n).spectral("gamma1 > 4".parse().unwrap()),
            EnumerationFilter::new(n).spectral("multL(1) >= 2".parse().unwrap()),
        ];
        for m in 0..=total {
            filters.push(EnumerationFilter::new(n).size(m));
            filters.push(EnumerationFilter::new(n).size(m).connected());
            filters.push(EnumerationFilter::new(n).size(m).bipartite());
        }
        for g in &all {
            filters.push(EnumerationFilter::new(n).degree_sequence(g.degree_sequence()));
        }
        for f in filters {
            let expected: Vec<Graph> = all.iter().copied().filter(|g| f.accepts(g)).collect();
            let got = enumerate(&f, &limits).unwrap();
            assert_eq!(got, expected, "filter {f}");
        }
    }
}

#[test]
fn connected_and_structured_counts() {
    let limits = Limits::default();
    // connected graphs, n = 1..=8
    let connected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &c) in connected.iter().enumerate() {
        let f = EnumerationFilter::new(i + 1).connected();
        assert_eq!(count(&f, &limits).unwrap(), c, "connected n={}", i + 1);
    }
    // connected unicyclic graphs, n = 3..=9
    let unicyclic = [1, 2, 5, 13, 33, 89, 240];
    for (i, &c) in unicyclic.iter().enumerate() {
        let f = EnumerationFilter::new(i + 3).unicyclic();
        assert_eq!(count(&f, &limits).unwrap(), c, "unicyclic n={}", i + 3);
    }
    // bipartite graphs (not necessarily connected), n = 1..=8
    let bipartite = [1, 2, 3, 7, 13, 35, 88, 303];
    for (i, &c) in bipartite.iter().enumerate() {
        let f = EnumerationFilter::new(i + 1).bipartite();
        assert_eq!(count(&f, &limits).unwrap(), c, "bipartite n={}", i + 1);
    }
}

#[test]
fn tree_filter_is_connected_with_n_minus_1_edges() {
    let limits = Limits::default();
    for n in 1..=8 {
        let trees = enumerate(&EnumerationFilter::new(n).tree(), &limits).unwrap();
        let other = enumerate(&EnumerationFilter::new(n).size(n - 1).connected(), &limits).unwrap();
        assert_eq!(trees, other, "n={n}");
    }
}

#[test]
fn output_is_sorted_distinct_and_deterministic() {
    let limits = Limits::default();
    let f = EnumerationFilter::new(7).size(9);
    let a = enumerate(&f, &limits).unwrap();
    let b = enumerate(&f, &limits).unwrap();
    assert_eq!(a, b);
    let keys: Vec<_> = a.iter().map(dqspec_core::canon::canonical_key).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let seen = Mutex::new(0usize);
    for_each(&f, &limits, |_| *seen.lock().unwrap() += 1).unwrap();
    assert_eq!(*seen.lock().unwrap(), a.len());
}
