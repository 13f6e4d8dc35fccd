//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `c_0 + c_1 x + ... + c_d x^d`, stored constant term first with no
/// trailing zero coefficients. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> IntPoly {
        IntPoly::new(vec![c])
    }

    pub fn x() -> IntPoly {
        IntPoly::from_i64s(&[0, 1])
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> IntPoly {
        IntPoly::new(vec![-r.clone(), BigInt::one()])
    }

    /// `prod (x - r)^mult` over the given integer roots.
    pub fn from_integer_roots<'a>(roots: impl IntoIterator<Item = (&'a BigInt, usize)>) -> IntPoly {
        roots.into_iter().fold(IntPoly::one(), |acc, (r, m)| {
            &acc * &IntPoly::linear_root(r).pow(m)
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Multiplicity of 0 as a root (number of vanishing low-order coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// The lowest-order nonzero coefficient, if any.
    pub fn lowest_nonzero(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from(c.clone())
            })
    }

    /// Sign of `p(x)` computed without fractions: `p(a/b) b^d` has the sign of
    /// `p(a/b)` whenever `b > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let (a, b) = (x.numer(), x.denom());
        debug_assert!(b.is_positive());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        // Horner in a with the b-powers folded in from the top.
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * a + c * &bpow;
            if i > 0 {
                bpow *= b;
            }
        }
        let _ = d;
        acc.sign_ordering()
    }

    /// Sign of `p(x)` as `x -> +inf` (`positive = true`) or `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match (self.leading(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = lc.sign_ordering();
                if positive || d % 2 == 0 {
                    s
                } else {
                    s.reverse()
                }
            }
            _ => Ordering::Equal,
        }
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = rd - dd;
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * c;
            }
            r = IntPoly::new(next);
        }
        r
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// over the integers.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let Some(sd) = self.degree() else {
            return Some(IntPoly::zero());
        };
        if sd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Yun's square-free decomposition: pairs `(f_i, i)` with every `f_i`
    /// square-free, primitive, pairwise coprime, of positive degree, and
    /// `self = c * prod f_i^i` for a constant `c`.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = f.derivative();
        let b = f.gcd(&df);
        let mut c = f.div_exact(&b).expect("gcd divides f");
        let mut d = &df.div_exact(&b).expect("gcd divides f'") - &c.derivative();
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = c.gcd(&d);
            c = c.div_exact(&a).expect("gcd divides c");
            d = &d.div_exact(&a).expect("gcd divides d") - &c.derivative();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// `p(c - x)`, as a primitive polynomial with positive leading coefficient.
    pub fn reflect(&self, c: &BigInt) -> IntPoly {
        let lin = IntPoly::new(vec![c.clone(), -BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, a| {
                &(&acc * &lin) + &IntPoly::constant(a.clone())
            })
            .primitive_part()
    }

    /// `b^d p((x + a) / b)` for `q = a / b`: every root `r` moves to `b r - a`,
    /// so the sign of a root relative to `q` becomes its sign relative to 0.
    pub fn shift_to(&self, q: &BigRational) -> IntPoly {
        let (a, b) = (q.numer(), q.denom());
        let lin = IntPoly::new(vec![a.clone(), BigInt::one()]);
        let d = self.coeffs.len().saturating_sub(1);
        let mut scale = BigInt::one();
        let mut acc = IntPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = &(&acc * &lin) + &IntPoly::constant(c * &scale);
            if i > 0 {
                scale *= b;
            }
        }
        debug_assert!(acc.is_zero() || acc.coeffs.len() == d + 1);
        acc
    }

    /// Sign changes in the nonzero coefficients.
    pub fn sign_variations(&self) -> usize {
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| c.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Coefficients as decimal strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Serialized as a JSON array of exact integers, constant term first.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&exact_number(c))?;
        }
        seq.end()
    }
}

/// A BigInt as an exact JSON number.
pub fn exact_number(c: &BigInt) -> serde_json::Number {
    c.to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers")
}
