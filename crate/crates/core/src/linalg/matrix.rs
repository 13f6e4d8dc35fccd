//! Square integer matrices: characteristic polynomial, determinant, rank.

use super::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, |i, j| BigInt::from((i == j) as i32))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> IntMatrix {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        IntMatrix { n, data }
    }

    /// Row-major square input; `None` if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Option<IntMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self - lambda * I`.
    pub fn shift(&self, lambda: &BigInt) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.data[i * self.n + i] -= lambda;
        }
        out
    }

    pub fn rows_i64(&self) -> Option<Vec<i64>> {
        self.data.iter().map(|c| c.to_i64()).collect()
    }

    /// `det(xI - M)`, monic of degree `n`.
    ///
    /// Division-free Berkowitz. Runs in checked `i128` when the entries fit
    /// and restarts in `BigInt` on overflow.
    pub fn charpoly(&self) -> IntPoly {
        if let Some(small) = self.rows_i64() {
            return charpoly_i64(self.n, &small);
        }
        let top = berkowitz::<BigInt>(self.n, |i, j| self.get(i, j).clone())
            .expect("BigInt arithmetic does not overflow");
        IntPoly::new(top.into_iter().rev().collect())
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = !sign;
            }
            let pivot = m[k * n + k].clone();
            for i in k + 1..n {
                let lead = m[i * n + k].clone();
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &pivot - &lead * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = pivot;
        }
        let d = m[n * n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Rank over the rationals by fraction-free elimination with row pivoting.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.data.clone();
        let mut prev = BigInt::one();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !m[i * n + col].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..n {
                    m.swap(r * n + j, p * n + j);
                }
            }
            let pivot = m[r * n + col].clone();
            for i in r + 1..n {
                let lead = m[i * n + col].clone();
                for j in col + 1..n {
                    let v = (&m[i * n + j] * &pivot - &lead * &m[r * n + j]) / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + col] = BigInt::zero();
            }
            prev = pivot;
            r += 1;
            if r == n {
                break;
            }
        }
        r
    }

    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Geometric multiplicity of the integer eigenvalue `lambda`, i.e. the
    /// nullity of `M - lambda I`. For symmetric `M` this is also the
    /// algebraic multiplicity.
    pub fn integer_eigenvalue_multiplicity(&self, lambda: &BigInt) -> usize {
        self.shift(lambda).nullity()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        write!(f, "IntMatrix{rows:?}")
    }
}

/// Characteristic polynomial of a row-major `n x n` matrix of small entries.
pub fn charpoly_i64(n: usize, entries: &[i64]) -> IntPoly {
    debug_assert_eq!(entries.len(), n * n);
    let top = match berkowitz::<i128>(n, |i, j| entries[i * n + j] as i128) {
        Some(v) => v.into_iter().map(BigInt::from).collect::<Vec<_>>(),
        None => berkowitz::<BigInt>(n, |i, j| BigInt::from(entries[i * n + j]))
            .expect("BigInt arithmetic does not overflow"),
    };
    IntPoly::new(top.into_iter().rev().collect())
}

/// Exact ring arithmetic; `None` signals overflow.
trait Ring: Clone + Sized {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Ring for i128 {
    fn r_zero() -> Self {
        0
    }
    fn r_one() -> Self {
        1
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Ring for BigInt {
    fn r_zero() -> Self {
        Zero::zero()
    }
    fn r_one() -> Self {
        One::one()
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Berkowitz's algorithm; coefficients highest degree first.
fn berkowitz<T: Ring>(n: usize, at: impl Fn(usize, usize) -> T) -> Option<Vec<T>> {
    let mut p = vec![T::r_one()];
    for r in 0..n {
        // q = [1, -a, -RC, -RAC, ..., -R A^(r-1) C] for the leading (r+1)x(r+1) block
        let mut q = Vec::with_capacity(r + 2);
        q.push(T::r_one());
        q.push(at(r, r).neg()?);
        let mut col: Vec<T> = (0..r).map(|i| at(i, r)).collect();
        for k in 0..r {
            if k > 0 {
                let mut next = Vec::with_capacity(r);
                for i in 0..r {
                    let mut s = T::r_zero();
                    for (j, c) in col.iter().enumerate() {
                        s = s.add(&at(i, j).mul(c)?)?;
                    }
                    next.push(s);
                }
                col = next;
            }
            let mut s = T::r_zero();
            for (j, c) in col.iter().enumerate() {
                s = s.add(&at(r, j).mul(c)?)?;
            }
            q.push(s.neg()?);
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = T::r_zero();
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                s = s.add(&q[i - j].mul(pj)?)?;
            }
            next.push(s);
        }
        p = next;
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn charpoly_of_q_k2() {
        assert_eq!(
            m(&[&[1, 1], &[1, 1]]).charpoly(),
            IntPoly::from_i64s(&[0, -2, 1])
        );
    }

    #[test]
    fn q_of_triangle() {
        let q = m(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        // (x-4)(x-1)^2 = x^3 - 6x^2 + 9x - 4
        assert_eq!(q.charpoly(), IntPoly::from_i64s(&[-4, 9, -6, 1]));
        // hand expansion: 2(4-1) - 1(2-1) + 1(1-2) = 4
        assert_eq!(q.determinant(), BigInt::from(4));
    }

    #[test]
    fn determinant_with_pivoting() {
        let a = m(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]);
        // 0*(0) - 2*(3-0) + 1*(3-0) = -3
        assert_eq!(a.determinant(), BigInt::from(-3));
        assert_eq!(IntMatrix::zeros(0).determinant(), BigInt::one());
    }

    #[test]
    fn rank_and_multiplicity() {
        // L(S_6): star with centre 0
        let n = 6;
        let l = IntMatrix::from_fn(n, |i, j| {
            BigInt::from(match (i, j) {
                (0, 0) => 5,
                (a, b) if a == b => 1,
                (0, _) | (_, 0) => -1,
                _ => 0,
            })
        });
        assert_eq!(l.integer_eigenvalue_multiplicity(&BigInt::from(1)), 4);
        assert_eq!(l.integer_eigenvalue_multiplicity(&BigInt::from(0)), 1);
        assert_eq!(l.integer_eigenvalue_multiplicity(&BigInt::from(6)), 1);
        assert_eq!(l.integer_eigenvalue_multiplicity(&BigInt::from(2)), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = 1i64 << 40;
        let a = m(&[&[big, big, 0], &[big, big, big], &[0, big, big]]);
        let via_small = a.charpoly();
        let via_big = IntPoly::new(
            berkowitz::<BigInt>(3, |i, j| a.get(i, j).clone())
                .unwrap()
                .into_iter()
                .rev()
                .collect(),
        );
        assert_eq!(via_small, via_big);
        assert_eq!(via_small.coeff(0), -a.determinant());
    }
}
