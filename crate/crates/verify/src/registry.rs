//! Named verifiers and the full suite behind `verify all`.

use crate::claims;
use crate::closed_forms::{full_grid, remark_dr1_check, verify_closed_forms};
use crate::error::{Result, VerifyError};
use crate::lemmas::{verify_lemma, LemmaCatalog};
use crate::report::VerificationReport;
use crate::search::SearchSpace;
use crate::theorems;

/// Parameters shared by every verifier in a suite run.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Upper bound on the order of exhaustive sweeps; each verifier keeps its
    /// own default below it.
    pub max_order: Option<usize>,
}

impl SuiteOptions {
    fn bound(&self, default: usize) -> usize {
        self.max_order.map_or(default, |m| m.min(default))
    }
}

pub trait Verifier: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>>;
}

struct ClosedForms;
impl Verifier for ClosedForms {
    fn name(&self) -> &'static str {
        "closed-forms"
    }
    fn description(&self) -> &'static str {
        "predicted against computed Q-charpolys over every grid, and the double star root bounds"
    }
    fn run(&self, space: &SearchSpace, _: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        let mut out = vec![verify_closed_forms(&full_grid(), space.limits())?];
        for p in 1..=5 {
            for q in 1..=p {
                out.push(remark_dr1_check(p, q, space.limits())?);
            }
        }
        Ok(out)
    }
}

struct Lemmas;
impl Verifier for Lemmas {
    fn name(&self) -> &'static str {
        "lemmas"
    }
    fn description(&self) -> &'static str {
        "every lemma of the catalog at its default order"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        LemmaCatalog::standard()
            .iter()
            .map(|l| verify_lemma(l, opts.bound(l.default_max_order()), space.limits()))
            .collect()
    }
}

struct Join;
impl Verifier for Join {
    fn name(&self) -> &'static str {
        "join"
    }
    fn description(&self) -> &'static str {
        "(K_{n-a} - e) v aK1 mates for n = 7, 8, 9"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        (7..=opts.bound(9))
            .map(|n| theorems::verify_join_theorem(space, n))
            .collect()
    }
}

/// `(n, r)` pairs checked for `K_n + K2 + rK1`.
pub const KN_K2_CASES: [(usize, usize); 12] = [
    (4, 0),
    (4, 1),
    (4, 2),
    (4, 3),
    (5, 0),
    (5, 1),
    (5, 2),
    (6, 0),
    (6, 1),
    (7, 0),
    (3, 1),
    (3, 2),
];

struct KnK2;
impl Verifier for KnK2 {
    fn name(&self) -> &'static str {
        "kn-k2"
    }
    fn description(&self) -> &'static str {
        "K_n + K2 + rK1 is DQS for n >= 4; the n = 3 mate"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        KN_K2_CASES
            .iter()
            .filter(|(n, r)| n + 2 + r <= opts.bound(usize::MAX))
            .map(|&(n, r)| theorems::verify_kn_k2(space, n, r))
            .collect()
    }
}

/// `(n, r)` pairs checked for the structure theorem.
pub const STRUCTURE_CASES: [(usize, usize); 6] = [(4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (6, 0)];

struct Structure;
impl Verifier for Structure {
    fn name(&self) -> &'static str {
        "structure"
    }
    fn description(&self) -> &'static str {
        "conclusion shapes for the Q-class of G + K2 + rK1"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        STRUCTURE_CASES
            .iter()
            .filter(|(n, r)| n + 2 + r <= opts.bound(usize::MAX))
            .map(|&(n, r)| theorems::verify_structure_theorem(space, n, r))
            .collect()
    }
}

struct Unions;
impl Verifier for Unions {
    fn name(&self) -> &'static str {
        "unions"
    }
    fn description(&self) -> &'static str {
        "double star and odd unicyclic union theorems up to total order 9"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        theorems::union_theorem_reports(space, opts.bound(9))
    }
}

struct Counterexample;
impl Verifier for Counterexample {
    fn name(&self) -> &'static str {
        "counterexample"
    }
    fn description(&self) -> &'static str {
        "H1 + 2K2 and G + C4 + K1 are Q-cospectral"
    }
    fn run(&self, space: &SearchSpace, _: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        Ok(vec![theorems::verify_counterexample(space)?])
    }
}

struct Claims;
impl Verifier for Claims {
    fn name(&self) -> &'static str {
        "claims"
    }
    fn description(&self) -> &'static str {
        "class counts, bipartite searches, degree sequence searches and named spectra"
    }
    fn run(&self, space: &SearchSpace, _: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        claims::verify_claims(space.limits())
    }
}

struct Exactness;
impl Verifier for Exactness {
    fn name(&self) -> &'static str {
        "exactness"
    }
    fn description(&self) -> &'static str {
        "trace identity, spanning tree product, determinant criterion and class counts"
    }
    fn run(&self, space: &SearchSpace, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
        Ok(vec![claims::exactness_properties(
            space.limits(),
            opts.bound(7),
        )?])
    }
}

/// Ordered registry of verifiers.
pub struct Suite {
    verifiers: Vec<Box<dyn Verifier>>,
}

impl Suite {
    pub fn standard() -> Self {
        Suite {
            verifiers: vec![
                Box::new(ClosedForms),
                Box::new(Lemmas),
                Box::new(Join),
                Box::new(KnK2),
                Box::new(Structure),
                Box::new(Unions),
                Box::new(Counterexample),
                Box::new(Claims),
                Box::new(Exactness),
            ],
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Verifier> {
        self.verifiers.iter().map(|v| v.as_ref())
    }

    pub fn get(&self, name: &str) -> Result<&dyn Verifier> {
        self.iter()
            .find(|v| v.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| VerifyError::UnknownClaim(name.to_string()))
    }

    pub fn run_all(
        &self,
        space: &SearchSpace,
        opts: &SuiteOptions,
    ) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for v in self.iter() {
            out.extend(v.run(space, opts)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_resolvable() {
        let s = Suite::standard();
        let mut names: Vec<_> = s.iter().map(|v| v.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 9);
        assert_eq!(s.get("Join").unwrap().name(), "join");
        assert!(s.get("missing").is_err());
    }

    #[test]
    fn bound_never_exceeds_defaults() {
        let o = SuiteOptions { max_order: Some(7) };
        assert_eq!(o.bound(9), 7);
        assert_eq!(o.bound(6), 6);
        assert_eq!(SuiteOptions::default().bound(9), 9);
    }
}
