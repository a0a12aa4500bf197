//! Exact scalars and square-matrix algebra over an arbitrary integer type.
//!
//! Everything here is parameterised by [`ExactInt`]; the crate root fixes
//! the default instantiation to [`num_bigint::BigInt`] because fraction-free
//! intermediates outgrow machine words quickly.

use std::fmt::{self, Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer types the exact algebra can run over.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every ExactInt holds the i64 range")
    }
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Builds the reduced fraction `num/den` with a positive denominator.
pub fn reduce<I: ExactInt>(num: I, den: I) -> Result<Ratio<I>> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Ratio::new(num, den))
}

/// Parses `"p/q"` or `"p"` (optional leading sign, surrounding whitespace ignored).
pub fn parse_ratio<I: ExactInt>(s: &str) -> Result<Ratio<I>> {
    let s = s.trim();
    let parse = |t: &str| -> Result<I> {
        let t = t.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        I::from_str_radix(t, 10)
            .map_err(|_| Error::InvalidInput(format!("cannot parse `{s}` as a rational")))
    };
    match s.split_once('/') {
        Some((p, q)) => reduce(parse(p)?, parse(q)?),
        None => Ok(Ratio::from_integer(parse(s)?)),
    }
}

/// Formats a rational as `"p"` when integral and `"p/q"` otherwise.
pub fn format_ratio<I: ExactInt>(r: &Ratio<I>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T: Clone + Zero + std::ops::Mul<Output = T>> Matrix<T> {
    /// Matrix product; errors when the dimensions disagree.
    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        Ok(Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }
}

impl<I: ExactInt> Matrix<I> {
    pub fn to_rational(&self) -> Matrix<Ratio<I>> {
        self.map(|x| Ratio::from_integer(x.clone()))
    }
}

impl<I: ExactInt> Matrix<Ratio<I>> {
    /// True when every denominator is 1.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(Ratio::is_integer)
    }

    pub fn to_integral(&self) -> Option<Matrix<I>> {
        self.is_integral().then(|| self.map(Ratio::to_integer))
    }
}

impl<T: Debug> Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.n.max(1)).take(self.n))
            .finish()
    }
}

/// Fraction-free forward elimination on an `n × width` row-major array.
///
/// Leaves the leading `n × n` block upper triangular; every division is
/// exact. Returns the row-swap parity, or `None` when a pivot column is
/// entirely zero.
fn bareiss_eliminate<I: ExactInt>(a: &mut [Vec<I>], n: usize) -> Option<bool> {
    let width = a.first().map_or(0, Vec::len);
    let mut odd = false;
    let mut prev = I::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, pivot);
            odd = !odd;
        }
        for i in k + 1..n {
            for j in k + 1..width {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
            a[i][k] = I::zero();
        }
        prev = a[k][k].clone();
    }
    Some(odd)
}

/// Exact determinant by Bareiss elimination.
pub fn det<I: ExactInt>(m: &Matrix<I>) -> I {
    let n = m.dim();
    if n == 0 {
        return I::one();
    }
    let mut a = m.to_rows();
    match bareiss_eliminate(&mut a, n) {
        None => I::zero(),
        Some(odd) => {
            let d = a[n - 1][n - 1].clone();
            if odd {
                -d
            } else {
                d
            }
        }
    }
}

/// Exact inverse: fraction-free elimination on `[M | I]`, then rational
/// back-substitution.
pub fn invert<I: ExactInt>(m: &Matrix<I>) -> Result<Matrix<Ratio<I>>> {
    let n = m.dim();
    let mut a: Vec<Vec<I>> = m
        .rows()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.to_vec();
            r.extend((0..n).map(|j| if i == j { I::one() } else { I::zero() }));
            r
        })
        .collect();
    bareiss_eliminate(&mut a, n).ok_or(Error::SingularMatrix)?;
    if n > 0 && a[n - 1][n - 1].is_zero() {
        return Err(Error::SingularMatrix);
    }

    let mut inv = vec![vec![Ratio::zero(); n]; n];
    for col in 0..n {
        for i in (0..n).rev() {
            let mut acc = Ratio::from_integer(a[i][n + col].clone());
            for j in i + 1..n {
                acc = acc - Ratio::from_integer(a[i][j].clone()) * inv[j][col].clone();
            }
            inv[i][col] = acc / Ratio::from_integer(a[i][i].clone());
        }
    }
    Matrix::from_rows(inv)
}

/// Exact matrix-vector product `M v`.
pub fn apply<I: ExactInt>(m: &Matrix<Ratio<I>>, v: &[I]) -> Result<Vec<Ratio<I>>> {
    if v.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: v.len(),
        });
    }
    Ok(m.rows()
        .map(|row| {
            row.iter().zip(v).fold(Ratio::zero(), |acc, (a, b)| {
                acc + a.clone() * Ratio::from_integer(b.clone())
            })
        })
        .collect())
}

/// Exact dot product of an integer vector with a rational one.
pub fn inner<I: ExactInt>(u: &[I], w: &[Ratio<I>]) -> Result<Ratio<I>> {
    if u.len() != w.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: w.len(),
        });
    }
    Ok(u.iter().zip(w).fold(Ratio::zero(), |acc, (a, b)| {
        acc + Ratio::from_integer(a.clone()) * b.clone()
    }))
}
