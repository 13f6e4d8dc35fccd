//! Closed-form signless Laplacian spectra, each checked against a direct
//! characteristic polynomial computation.

use crate::error::{Result, VerifyError};
use crate::report::{ReportBuilder, VerificationReport, Witness};
use dqspec_core::linalg::compare_real_rooted;
use dqspec_core::{build, charpoly, FamilySpec, Graph, IntPoly, Limits, MatrixKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClosedFormId {
    /// The double star with `p` and `q` pendants.
    DoubleStarQ {
        p: usize,
        q: usize,
    },
    /// `(K_{n-alpha} - e) v alpha K1`.
    JoinCliqueMinusEdge {
        n: usize,
        alpha: usize,
    },
    /// Complement of `K_{1,3} + K2 + (n-6) K1`.
    ComplementStarK2 {
        n: usize,
    },
    /// Complement of `(K_{2,4} - e) + (n-6) K1`.
    ComplementK24MinusE {
        n: usize,
    },
    CompleteMultipartiteQ {
        parts: Vec<usize>,
    },
}

/// Rational eigenvalues with multiplicities and a monic residual factor
/// holding the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedSpectrum {
    #[serde(serialize_with = "exact_pairs")]
    pub rational: Vec<(BigInt, usize)>,
    pub residual: IntPoly,
}

fn exact_pairs<S: serde::Serializer>(v: &[(BigInt, usize)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (e, k) in v {
        seq.serialize_element(&(dqspec_core::linalg::exact_number(e), k))?;
    }
    seq.end()
}

impl PredictedSpectrum {
    pub fn order(&self) -> usize {
        self.rational.iter().map(|(_, k)| k).sum::<usize>() + self.residual.degree().unwrap_or(0)
    }

    /// Sum of all predicted eigenvalues with multiplicity.
    pub fn trace(&self) -> BigInt {
        let d = self.residual.degree().unwrap_or(0);
        let residual_sum = if d == 0 {
            BigInt::from(0)
        } else {
            -self.residual.coeff(d - 1)
        };
        self.rational
            .iter()
            .map(|(e, k)| e * BigInt::from(*k))
            .sum::<BigInt>()
            + residual_sum
    }

    pub fn charpoly(&self) -> IntPoly {
        self.rational
            .iter()
            .fold(self.residual.clone(), |acc, (e, k)| {
                &acc * &IntPoly::linear_root(e).pow(*k)
            })
    }
}

fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_i64s(coeffs)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl ClosedFormId {
    pub fn family(&self) -> &'static str {
        match self {
            ClosedFormId::DoubleStarQ { .. } => "DoubleStarQ",
            ClosedFormId::JoinCliqueMinusEdge { .. } => "JoinCliqueMinusEdge",
            ClosedFormId::ComplementStarK2 { .. } => "ComplementStarK2",
            ClosedFormId::ComplementK24MinusE { .. } => "ComplementK24MinusE",
            ClosedFormId::CompleteMultipartiteQ { .. } => "CompleteMultipartiteQ",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            ClosedFormId::DoubleStarQ { p, q } => p + q + 2,
            ClosedFormId::JoinCliqueMinusEdge { n, .. }
            | ClosedFormId::ComplementStarK2 { n }
            | ClosedFormId::ComplementK24MinusE { n } => *n,
            ClosedFormId::CompleteMultipartiteQ { parts } => parts.iter().sum(),
        }
    }

    /// Edge count read off the definition, without building anything.
    pub fn size(&self) -> usize {
        match self {
            ClosedFormId::DoubleStarQ { p, q } => p + q + 1,
            ClosedFormId::JoinCliqueMinusEdge { n, alpha } => {
                pairs(n - alpha) - 1 + alpha * (n - alpha)
            }
            ClosedFormId::ComplementStarK2 { n } => pairs(*n) - 4,
            ClosedFormId::ComplementK24MinusE { n } => pairs(*n) - 7,
            ClosedFormId::CompleteMultipartiteQ { parts } => {
                let n: usize = parts.iter().sum();
                (n * n - parts.iter().map(|p| p * p).sum::<usize>()) / 2
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(VerifyError::range(self.to_string(), reason));
        match self {
            ClosedFormId::DoubleStarQ { p, q } if *p < 1 || *q < 1 => bad("p, q >= 1"),
            ClosedFormId::JoinCliqueMinusEdge { n, alpha } if *alpha < 1 || *n < alpha + 3 => {
                bad("alpha >= 1 and n - alpha >= 3")
            }
            ClosedFormId::ComplementStarK2 { n } | ClosedFormId::ComplementK24MinusE { n }
                if *n < 6 =>
            {
                bad("n >= 6")
            }
            ClosedFormId::CompleteMultipartiteQ { parts }
                if parts.is_empty() || parts.contains(&0) =>
            {
                bad("parts must be positive")
            }
            _ => Ok(()),
        }
    }

    pub fn graph(&self, limits: &Limits) -> Result<Graph> {
        self.validate()?;
        limits.check_construction(&self.to_string(), self.order())?;
        let g = match self {
            ClosedFormId::DoubleStarQ { p, q } => build(&FamilySpec::DoubleStar(*p, *q), limits)?,
            ClosedFormId::JoinCliqueMinusEdge { n, alpha } => {
                build(&FamilySpec::CompleteMinusEdge(n - alpha), limits)?
                    .join(&Graph::empty(*alpha)?)?
            }
            ClosedFormId::ComplementStarK2 { n } => build(&FamilySpec::Star(4), limits)?
                .disjoint_union(&Graph::complete(2)?)?
                .disjoint_union(&Graph::empty(n - 6)?)?
                .complement(),
            ClosedFormId::ComplementK24MinusE { n } => {
                build(&FamilySpec::CompleteBipartite(2, 4), limits)?
                    .delete_edge(0, 2)?
                    .disjoint_union(&Graph::empty(n - 6)?)?
                    .complement()
            }
            ClosedFormId::CompleteMultipartiteQ { parts } => {
                build(&FamilySpec::CompleteMultipartite(parts.clone()), limits)?
            }
        };
        Ok(g)
    }

    /// The predicted spectrum, exactly as the closed form states it.
    pub fn predict(&self) -> Result<PredictedSpectrum> {
        self.validate()?;
        let spectrum = match *self {
            ClosedFormId::DoubleStarQ { p, q } => {
                let (p, q) = (p as i64, q as i64);
                PredictedSpectrum {
                    rational: vec![(int(1), (p + q - 2) as usize), (int(0), 1)],
                    residual: poly(&[-p - q - 2, p * q + 2 * p + 2 * q + 5, -p - q - 4, 1]),
                }
            }
            ClosedFormId::JoinCliqueMinusEdge { n, alpha } => {
                let (n, a) = (n as i64, alpha as i64);
                PredictedSpectrum {
                    rational: vec![
                        (int(n - a), (a - 1) as usize),
                        (int(n - 2), (n - a - 2) as usize),
                    ],
                    residual: poly(&[
                        -2 * (n - a - 2) * (n * n - (a + 3) * n + 4 * a),
                        2 * a * a - 6 * a * n + 5 * n * n + 10 * a - 16 * n + 12,
                        2 * a - 4 * n + 6,
                        1,
                    ]),
                }
            }
            ClosedFormId::ComplementStarK2 { n } => {
                let n = n as i64;
                PredictedSpectrum {
                    rational: vec![(int(n - 3), 2), (int(n - 2), (n - 5) as usize)],
                    residual: poly(&[
                        -2 * n * n * n + 22 * n * n - 84 * n + 120,
                        5 * n * n - 34 * n + 60,
                        -4 * n + 12,
                        1,
                    ]),
                }
            }
            ClosedFormId::ComplementK24MinusE { n } => {
                let n = n as i64;
                PredictedSpectrum {
                    rational: vec![(int(n - 4), 2), (int(n - 2), (n - 6) as usize)],
                    residual: poly(&[
                        2 * n.pow(4) - 34 * n.pow(3) + 220 * n * n - 644 * n + 708,
                        -7 * n.pow(3) + 86 * n * n - 360 * n + 522,
                        9 * n * n - 70 * n + 140,
                        -5 * n + 18,
                        1,
                    ]),
                }
            }
            ClosedFormId::CompleteMultipartiteQ { ref parts } => multipartite(parts),
        };
        Ok(spectrum)
    }
}

/// `(1 - sum n_i / (x - n + 2 n_i)) prod (x - n + n_i)^(n_i - 1) (x - n + 2 n_i)`
/// with the denominators cleared into the residual factor.
fn multipartite(parts: &[usize]) -> PredictedSpectrum {
    let n: i64 = parts.iter().map(|&p| p as i64).sum();
    let shifted = |ni: i64| poly(&[2 * ni - n, 1]);
    let mut residual: IntPoly = parts
        .iter()
        .fold(IntPoly::one(), |acc, &ni| &acc * &shifted(ni as i64));
    for (i, &ni) in parts.iter().enumerate() {
        let others = parts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(IntPoly::constant(int(ni as i64)), |acc, (_, &nj)| {
                &acc * &shifted(nj as i64)
            });
        residual = &residual - &others;
    }
    let rational = parts
        .iter()
        .filter(|&&ni| ni > 1)
        .map(|&ni| (int(n - ni as i64), ni - 1))
        .collect();
    PredictedSpectrum { rational, residual }
}

impl fmt::Display for ClosedFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormId::DoubleStarQ { p, q } => write!(f, "DoubleStarQ({p},{q})"),
            ClosedFormId::JoinCliqueMinusEdge { n, alpha } => {
                write!(f, "JoinCliqueMinusEdge({n},{alpha})")
            }
            ClosedFormId::ComplementStarK2 { n } => write!(f, "ComplementStarK2({n})"),
            ClosedFormId::ComplementK24MinusE { n } => write!(f, "ComplementK24MinusE({n})"),
            ClosedFormId::CompleteMultipartiteQ { parts } => {
                let s: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "CompleteMultipartiteQ({})", s.join(","))
            }
        }
    }
}

impl FromStr for ClosedFormId {
    type Err = VerifyError;

    /// `DoubleStarQ(2,2)`, `JoinCliqueMinusEdge(7,3)`, `CompleteMultipartiteQ(2,2,3)`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || VerifyError::UnknownClaim(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(unknown)?;
        let args = s[open + 1..].strip_suffix(')').ok_or_else(unknown)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?;
        let id = match (s[..open].to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("doublestarq", &[p, q]) => ClosedFormId::DoubleStarQ { p, q },
            ("joincliqueminusedge", &[n, alpha]) => ClosedFormId::JoinCliqueMinusEdge { n, alpha },
            ("complementstark2", &[n]) => ClosedFormId::ComplementStarK2 { n },
            ("complementk24minuse", &[n]) => ClosedFormId::ComplementK24MinusE { n },
            ("completemultipartiteq", parts) => ClosedFormId::CompleteMultipartiteQ {
                parts: parts.to_vec(),
            },
            _ => return Err(unknown()),
        };
        id.validate()?;
        Ok(id)
    }
}

pub const FAMILIES: [&str; 5] = [
    "DoubleStarQ",
    "JoinCliqueMinusEdge",
    "ComplementStarK2",
    "ComplementK24MinusE",
    "CompleteMultipartiteQ",
];

fn partitions(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for first in (1..=max.min(n)).rev() {
        prefix.push(first);
        partitions(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// The default verification grid of one family (case-insensitive name).
pub fn grid(family: &str) -> Result<Vec<ClosedFormId>> {
    let ids = match family.to_ascii_lowercase().as_str() {
        "doublestarq" => (1..=5)
            .flat_map(|p| (1..=p).map(move |q| ClosedFormId::DoubleStarQ { p, q }))
            .collect(),
        "joincliqueminusedge" => (6..=12)
            .flat_map(|n| {
                (1..=n - 4).map(move |alpha| ClosedFormId::JoinCliqueMinusEdge { n, alpha })
            })
            .collect(),
        "complementstark2" => (6..=12)
            .map(|n| ClosedFormId::ComplementStarK2 { n })
            .collect(),
        "complementk24minuse" => (6..=12)
            .map(|n| ClosedFormId::ComplementK24MinusE { n })
            .collect(),
        "completemultipartiteq" => {
            let mut out = Vec::new();
            for n in 1..=8 {
                partitions(n, n, &mut Vec::new(), &mut out);
            }
            out.into_iter()
                .map(|parts| ClosedFormId::CompleteMultipartiteQ { parts })
                .collect()
        }
        _ => return Err(VerifyError::UnknownClaim(family.to_string())),
    };
    Ok(ids)
}

/// Every family's grid.
pub fn full_grid() -> Vec<ClosedFormId> {
    FAMILIES
        .iter()
        .flat_map(|f| grid(f).expect("known family"))
        .collect()
}

/// Trace identity on the prediction alone: the eigenvalues sum to `2m` and
/// their count is `n`.
pub fn trace_consistent(id: &ClosedFormId) -> Result<bool> {
    let p = id.predict()?;
    Ok(p.order() == id.order() && p.trace() == BigInt::from(2 * id.size()))
}

/// Builds the graph, computes its Q-charpoly and compares it with the
/// expanded prediction.
pub fn verify_closed_form(id: &ClosedFormId, limits: &Limits) -> Result<VerificationReport> {
    let mut b = ReportBuilder::new(id.family(), json!({ "id": id.to_string() }));
    let predicted = id.predict()?;
    let g = id.graph(limits)?;
    let expected = predicted.charpoly();
    let computed = charpoly(&g, MatrixKind::SignlessLaplacian);
    b.require(trace_consistent(id)?, || {
        Witness::new(&g, "trace identity fails")
    });
    let equal = expected == computed;
    b.require(equal, || {
        Witness::new(&g, format!("{id}: charpoly differs"))
    });
    if !equal {
        b.detail("predicted", &expected)
            .detail("computed", &computed);
    }
    Ok(b.finish())
}

/// Runs a list of closed forms into one report.
pub fn verify_closed_forms(ids: &[ClosedFormId], limits: &Limits) -> Result<VerificationReport> {
    let names: Vec<String> = ids.iter().map(ToString::to_string).collect();
    let mut b = ReportBuilder::new("closed-forms", json!({ "ids": names }));
    for id in ids {
        let r = verify_closed_form(id, limits)?;
        b.absorb(&r);
    }
    Ok(b.finish())
}

/// Interval claims on the double-star cubic: with `p >= q`, the largest
/// root lies in `(p+2, p+3)`, the second in `[q+1, q+2)`, and the second
/// equals `q+1` exactly when `p = q`.
pub fn remark_dr1_check(p: usize, q: usize, limits: &Limits) -> Result<VerificationReport> {
    if q < 1 || p < q {
        return Err(VerifyError::range("remark_dr1", "p >= q >= 1"));
    }
    let id = ClosedFormId::DoubleStarQ { p, q };
    let cubic = id.predict()?.residual;
    let g = id.graph(limits)?;
    let at = |v: usize| BigRational::from_integer(BigInt::from(v));
    let cmp = |k: usize, v: usize| compare_real_rooted(&cubic, k, &at(v));
    let mut b = ReportBuilder::new("remark_dr1", json!({ "p": p, "q": q }));
    let first = cmp(1, p + 2)? == Ordering::Greater && cmp(1, p + 3)? == Ordering::Less;
    b.require(first, || Witness::new(&g, "gamma1 outside (p+2, p+3)"));
    let lower = cmp(2, q + 1)?;
    let second = lower != Ordering::Less && cmp(2, q + 2)? == Ordering::Less;
    b.require(second, || Witness::new(&g, "gamma2 outside [q+1, q+2)"));
    b.require((lower == Ordering::Equal) == (p == q), || {
        Witness::new(&g, "gamma2 = q+1 does not match p = q")
    });
    // the cubic's top two roots are the top two of the whole spectrum
    let full = charpoly(&g, MatrixKind::SignlessLaplacian);
    let agrees = compare_real_rooted(&full, 2, &at(q + 1))? == lower;
    b.require(agrees, || {
        Witness::new(&g, "cubic disagrees with the full spectrum")
    });
    Ok(b.finish())
}
