//! Certified real roots: Sturm chains, isolating intervals, exact comparisons.
//!
//! A [`RealRoot`] is either an exact rational or an open interval `(lo, hi)`
//! holding exactly one root of its square-free defining polynomial, with
//! that polynomial nonzero at `hi`. Every comparison is decided by Sturm
//! counts and sign evaluations at rationals; nothing here rounds.

use super::poly::IntPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Sturm sequence of a square-free polynomial, each member scaled to a
/// primitive integer polynomial (positive scaling keeps sign variations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// `p` must be square-free and of positive degree.
    pub fn new(p: &IntPoly) -> SturmChain {
        let mut a = p.primitive_part();
        let mut b = a.derivative().primitive_part();
        let mut seq = vec![a.clone()];
        while !b.is_zero() {
            seq.push(b.clone());
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let mut r = a.pseudo_rem(&b);
            // prem scales by lc(b)^(delta+1); keep the sign of the true remainder
            if b.leading().unwrap().is_negative() && delta.is_multiple_of(2) {
                r = -&r;
            }
            a = b;
            b = -&r.primitive_part_keep_sign();
        }
        SturmChain { seq }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.seq[0]
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(positive)))
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// All real roots, ascending.
    pub fn isolate(self: &Arc<Self>) -> Vec<RealRoot> {
        let p = self.poly();
        let mut out = Vec::new();
        let Some(lc) = p.leading() else {
            return out;
        };
        if p.degree() == Some(0) {
            return out;
        }
        let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap();
        let lc = lc.abs();
        let bound = BigInt::one() + (&max + &lc - BigInt::one()) / &lc;
        let lo = BigRational::from(-bound.clone());
        let hi = BigRational::from(bound);
        let (vlo, vhi) = (self.variations_at(&lo), self.variations_at(&hi));
        let mut stack = vec![(lo, vlo, hi, vhi)];
        while let Some((lo, vlo, hi, vhi)) = stack.pop() {
            let c = vlo - vhi;
            if c == 0 {
                continue;
            }
            if c == 1 {
                let loc = if p.sign_at(&hi) == Ordering::Equal {
                    RootLocation::Exact(hi)
                } else {
                    RootLocation::Interval { lo, hi }
                };
                out.push(RealRoot {
                    chain: Arc::clone(self),
                    loc,
                });
                continue;
            }
            let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            let vmid = self.variations_at(&mid);
            // upper half first so the ascending result pops in order
            stack.push((mid.clone(), vmid, hi, vhi));
            stack.push((lo, vlo, mid, vmid));
        }
        out.sort_by(|a, b| a.lower().cmp(b.lower()));
        out
    }
}

trait KeepSign {
    fn primitive_part_keep_sign(&self) -> IntPoly;
}

impl KeepSign for IntPoly {
    /// Divide by the positive content only.
    fn primitive_part_keep_sign(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.coeffs().iter().map(|c| c / &g).collect())
    }
}

/// Where a [`RealRoot`] currently lies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(BigRational),
    /// The root lies strictly inside `(lo, hi)`.
    Interval {
        lo: BigRational,
        hi: BigRational,
    },
}

#[derive(Clone)]
pub struct RealRoot {
    chain: Arc<SturmChain>,
    loc: RootLocation,
}

impl fmt::Debug for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.loc {
            RootLocation::Exact(v) => write!(f, "RealRoot({v} of {})", self.poly()),
            RootLocation::Interval { lo, hi } => {
                write!(f, "RealRoot(({lo}, {hi}) of {})", self.poly())
            }
        }
    }
}

fn two() -> BigRational {
    BigRational::from(BigInt::from(2))
}

impl RealRoot {
    pub fn rational(v: BigRational) -> RealRoot {
        let p = IntPoly::new(vec![-v.numer().clone(), v.denom().clone()]);
        RealRoot {
            chain: Arc::new(SturmChain::new(&p)),
            loc: RootLocation::Exact(v),
        }
    }

    pub fn integer(v: impl Into<BigInt>) -> RealRoot {
        RealRoot::rational(BigRational::from(v.into()))
    }

    /// The unique root of `p` in the open interval `(lo, hi)`.
    pub fn in_interval(p: &IntPoly, lo: BigRational, hi: BigRational) -> Result<RealRoot> {
        let sqf = square_free_part(p).ok_or_else(|| {
            Error::InvalidParameters("a root needs a polynomial of positive degree".into())
        })?;
        if lo >= hi {
            return Err(Error::InvalidParameters(format!(
                "empty interval ({lo}, {hi})"
            )));
        }
        let chain = Arc::new(SturmChain::new(&sqf));
        let inside = chain.count_between(&lo, &hi);
        let at_hi = chain.poly().sign_at(&hi) == Ordering::Equal;
        let open_count = inside - at_hi as usize;
        if open_count != 1 {
            return Err(Error::InvalidParameters(format!(
                "({lo}, {hi}) holds {open_count} distinct roots of {p}, expected 1"
            )));
        }
        if !at_hi {
            return Ok(RealRoot {
                chain,
                loc: RootLocation::Interval { lo, hi },
            });
        }
        // hi is another root; walk lo up until a midpoint separates them
        let mut lo = lo;
        loop {
            let mid = (&lo + &hi) / two();
            if chain.poly().sign_at(&mid) == Ordering::Equal {
                return Ok(RealRoot {
                    chain,
                    loc: RootLocation::Exact(mid),
                });
            }
            if chain.count_between(&lo, &mid) == 1 {
                return Ok(RealRoot {
                    chain,
                    loc: RootLocation::Interval { lo, hi: mid },
                });
            }
            lo = mid;
        }
    }

    /// The positive square root of `k`.
    pub fn sqrt(k: u64) -> RealRoot {
        let p = IntPoly::new(vec![-BigInt::from(k), BigInt::zero(), BigInt::one()]);
        let hi = BigRational::from(BigInt::from(k.max(1) + 1));
        RealRoot::in_interval(&p, BigRational::zero(), hi).expect("x^2 - k has one positive root")
    }

    /// Square-free, primitive defining polynomial.
    pub fn poly(&self) -> &IntPoly {
        self.chain.poly()
    }

    pub fn location(&self) -> &RootLocation {
        &self.loc
    }

    pub fn exact(&self) -> Option<&BigRational> {
        match &self.loc {
            RootLocation::Exact(v) => Some(v),
            RootLocation::Interval { .. } => None,
        }
    }

    pub fn lower(&self) -> &BigRational {
        match &self.loc {
            RootLocation::Exact(v) => v,
            RootLocation::Interval { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match &self.loc {
            RootLocation::Exact(v) => v,
            RootLocation::Interval { hi, .. } => hi,
        }
    }

    pub fn width(&self) -> BigRational {
        self.upper() - self.lower()
    }

    /// Midpoint as a float, for display only.
    pub fn approx(&self) -> f64 {
        let mid = (self.lower() + self.upper()) / two();
        mid.to_f64().unwrap_or(f64::NAN)
    }

    /// Halve the interval once (or land exactly on the root).
    pub fn bisect(&mut self) {
        let RootLocation::Interval { lo, hi } = &self.loc else {
            return;
        };
        let mid = (lo + hi) / two();
        self.loc = if self.poly().sign_at(&mid) == Ordering::Equal {
            RootLocation::Exact(mid)
        } else if self.chain.count_between(lo, &mid) == 1 {
            RootLocation::Interval {
                lo: lo.clone(),
                hi: mid,
            }
        } else {
            RootLocation::Interval {
                lo: mid,
                hi: hi.clone(),
            }
        };
    }

    pub fn refine_to(&mut self, width: &BigRational) {
        while &self.width() > width {
            self.bisect();
        }
    }

    /// The root as an integer, if it is one.
    pub fn as_integer(&mut self) -> Option<BigInt> {
        self.refine_to(&BigRational::new(BigInt::one(), BigInt::from(2)));
        match &self.loc {
            RootLocation::Exact(v) => v.is_integer().then(|| v.to_integer()),
            RootLocation::Interval { lo, hi } => {
                let k: BigInt = lo.floor().to_integer() + 1;
                let kq = BigRational::from(k.clone());
                (&kq < hi && self.poly().sign_at(&kq) == Ordering::Equal).then_some(k)
            }
        }
    }

    /// Compares the root with `q`, tightening the interval on the way.
    pub fn cmp_rational(&mut self, q: &BigRational) -> Ordering {
        let (lo, hi) = match &self.loc {
            RootLocation::Exact(v) => return v.cmp(q),
            RootLocation::Interval { lo, hi } => (lo, hi),
        };
        if q <= lo {
            return Ordering::Greater;
        }
        if q >= hi {
            return Ordering::Less;
        }
        if self.poly().sign_at(q) == Ordering::Equal {
            self.loc = RootLocation::Exact(q.clone());
            return Ordering::Equal;
        }
        if self.chain.count_between(lo, q) == 1 {
            self.loc = RootLocation::Interval {
                lo: lo.clone(),
                hi: q.clone(),
            };
            Ordering::Less
        } else {
            self.loc = RootLocation::Interval {
                lo: q.clone(),
                hi: hi.clone(),
            };
            Ordering::Greater
        }
    }

    pub fn cmp_integer(&mut self, k: i64) -> Ordering {
        self.cmp_rational(&BigRational::from(BigInt::from(k)))
    }

    /// Exact comparison of two real algebraic numbers.
    pub fn cmp_root(&mut self, other: &mut RealRoot) -> Ordering {
        let mut equality_checked = false;
        loop {
            if let RootLocation::Exact(v) = &self.loc {
                let v = v.clone();
                return other.cmp_rational(&v).reverse();
            }
            if let RootLocation::Exact(v) = &other.loc {
                let v = v.clone();
                return self.cmp_rational(&v);
            }
            if self.upper() <= other.lower() {
                return Ordering::Less;
            }
            if other.upper() <= self.lower() {
                return Ordering::Greater;
            }
            if !equality_checked {
                equality_checked = true;
                let g = self.poly().gcd(other.poly());
                if g.degree().unwrap_or(0) > 0 {
                    let lo = self.lower().max(other.lower()).clone();
                    let hi = self.upper().min(other.upper()).clone();
                    if SturmChain::new(&g).count_between(&lo, &hi) > 0 {
                        return Ordering::Equal;
                    }
                }
            }
            self.bisect();
            other.bisect();
        }
    }

    /// `c - self` as a root of `p(c - x)`.
    pub fn reflect(&mut self, c: &BigInt) -> RealRoot {
        let q = self.poly().reflect(c);
        let cq = BigRational::from(c.clone());
        // the new upper end is c - lo, so lo must not be a root of p
        while let RootLocation::Interval { lo, .. } = &self.loc {
            if self.poly().sign_at(lo) != Ordering::Equal {
                break;
            }
            self.bisect();
        }
        let loc = match &self.loc {
            RootLocation::Exact(v) => RootLocation::Exact(&cq - v),
            RootLocation::Interval { lo, hi } => RootLocation::Interval {
                lo: &cq - hi,
                hi: &cq - lo,
            },
        };
        RealRoot {
            chain: Arc::new(SturmChain::new(&q)),
            loc,
        }
    }
}

/// `p / gcd(p, p')`, primitive; `None` for constants and zero.
pub fn square_free_part(p: &IntPoly) -> Option<IntPoly> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let g = p.gcd(&p.derivative());
    Some(
        p.primitive_part()
            .div_exact(&g)
            .expect("gcd divides p")
            .primitive_part(),
    )
}

#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub root: RealRoot,
    pub multiplicity: usize,
}

/// All real roots of a polynomial with multiplicities, largest first.
#[derive(Debug, Clone, Default)]
pub struct RootIsolation {
    roots: Vec<IsolatedRoot>,
}

/// Isolating-interval width used for reports: 2^-40.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 40)
}

impl RootIsolation {
    pub fn new(p: &IntPoly) -> RootIsolation {
        let mut all: Vec<IsolatedRoot> = Vec::new();
        for (factor, mult) in p.square_free_decomposition() {
            let chain = Arc::new(SturmChain::new(&factor));
            for root in chain.isolate() {
                all.push(IsolatedRoot {
                    root,
                    multiplicity: mult,
                });
            }
        }
        // insertion sort, descending; factors are coprime so no ties
        for i in 1..all.len() {
            let mut j = i;
            while j > 0 {
                let (left, right) = all.split_at_mut(j);
                let a = &mut left[j - 1].root;
                let b = &mut right[0].root;
                if a.cmp_root(b) == Ordering::Less {
                    all.swap(j - 1, j);
                    j -= 1;
                } else {
                    break;
                }
            }
        }
        RootIsolation { roots: all }
    }

    pub fn roots(&self) -> &[IsolatedRoot] {
        &self.roots
    }

    pub fn distinct(&self) -> usize {
        self.roots.len()
    }

    /// Number of real roots counted with multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn refine_all(&mut self, width: &BigRational) {
        for r in &mut self.roots {
            r.root.refine_to(width);
        }
    }

    fn index_of_rank(&self, k: usize) -> Result<usize> {
        let available = self.total_multiplicity();
        if k == 0 || k > available {
            return Err(Error::RankOutOfRange { rank: k, available });
        }
        let mut seen = 0;
        for (i, r) in self.roots.iter().enumerate() {
            seen += r.multiplicity;
            if seen >= k {
                return Ok(i);
            }
        }
        unreachable!()
    }

    /// The `k`-th largest root (1-based, counted with multiplicity).
    pub fn nth_largest(&self, k: usize) -> Result<&RealRoot> {
        Ok(&self.roots[self.index_of_rank(k)?].root)
    }

    pub fn nth_largest_mut(&mut self, k: usize) -> Result<&mut RealRoot> {
        let i = self.index_of_rank(k)?;
        Ok(&mut self.roots[i].root)
    }

    /// Compares the `k`-th largest root with `q`.
    pub fn compare(&mut self, k: usize, q: &BigRational) -> Result<Ordering> {
        Ok(self.nth_largest_mut(k)?.cmp_rational(q))
    }

    /// Multiplicity of the rational `q` as a root (0 if not a root).
    pub fn multiplicity_of(&mut self, q: &BigRational) -> usize {
        for r in &mut self.roots {
            if r.root.cmp_rational(q) == Ordering::Equal {
                return r.multiplicity;
            }
        }
        0
    }

    /// Roots repeated by multiplicity, largest first.
    pub fn expanded(&self) -> Vec<RealRoot> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.root.clone(), r.multiplicity))
            .collect()
    }

    /// Integer roots with multiplicities, largest first.
    pub fn integer_roots(&mut self) -> Vec<(BigInt, usize)> {
        self.roots
            .iter_mut()
            .filter_map(|r| r.root.as_integer().map(|k| (k, r.multiplicity)))
            .collect()
    }
}

pub fn isolate_real_roots(p: &IntPoly) -> RootIsolation {
    RootIsolation::new(p)
}

/// Compares the `k`-th largest real root of `p` (with multiplicity) to `q`.
pub fn compare_root(p: &IntPoly, k: usize, q: &BigRational) -> Result<Ordering> {
    RootIsolation::new(p).compare(k, q)
}

/// Roots of `p` below, at and above `q`, with multiplicity.
///
/// Only valid when every root of `p` is real, as for the characteristic
/// polynomial of a symmetric matrix: Descartes' bound is then exact.
pub fn real_rooted_counts(p: &IntPoly, q: &BigRational) -> (usize, usize, usize) {
    let Some(d) = p.degree() else {
        return (0, 0, 0);
    };
    let shifted = p.shift_to(q);
    let at = shifted.zero_root_multiplicity();
    let rest = IntPoly::new(shifted.coeffs()[at..].to_vec());
    let above = rest.sign_variations();
    (d - at - above, at, above)
}

/// Compares the `k`-th largest root of a real-rooted `p` with `q`, without
/// isolating anything.
pub fn compare_real_rooted(p: &IntPoly, k: usize, q: &BigRational) -> Result<Ordering> {
    let available = p.degree().unwrap_or(0);
    if k == 0 || k > available {
        return Err(Error::RankOutOfRange { rank: k, available });
    }
    let (_, at, above) = real_rooted_counts(p, q);
    Ok(if above >= k {
        Ordering::Greater
    } else if above + at >= k {
        Ordering::Equal
    } else {
        Ordering::Less
    })
}

#[derive(Serialize)]
struct RootJson {
    lo: String,
    hi: String,
    mult: usize,
    exact: bool,
    approx: f64,
}

impl Serialize for RootIsolation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<RootJson> = self
            .roots
            .iter()
            .map(|r| RootJson {
                lo: r.root.lower().to_string(),
                hi: r.root.upper().to_string(),
                mult: r.multiplicity,
                exact: r.root.exact().is_some(),
                approx: round_sig(r.root.approx(), 10),
            })
            .collect();
        rows.serialize(s)
    }
}

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: i32) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let scale = 10f64.powi(digits - 1 - x.abs().log10().floor() as i32);
    (x * scale).round() / scale
}
