//! Exact integer linear algebra on exponent lattices.
//!
//! Everything here works with arbitrary-precision integers; rational steps
//! (unit-row solving, kernels) go through [`crate::linalg`] over `Q`.

mod smith;

pub use smith::{coset_decomposition, smith_normal_form, CosetDecomposition, SmithForm};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Field, Scalar};
use crate::linalg;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds from machine-integer rows; all rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_mul(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.rows {
            return Err(Error::Shape(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        Ok((0..self.cols)
            .map(|j| v.iter().enumerate().map(|(i, x)| x * self.get(i, j)).sum())
            .collect())
    }

    pub(crate) fn rational_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows_iter()
            .map(|r| r.iter().map(|x| Field::Rational.from_bigint(x)).collect())
            .collect()
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        linalg::rank(self.rational_rows(), self.cols, Field::Rational)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.rows_iter().map(|r| r.to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Solution of `s · t = m · e_i` with the least positive multiplier `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitRowSolution {
    pub multiplier: BigInt,
    pub row: Vec<BigInt>,
}

/// Finds the integer row vector `s` and least `m > 0` with `s · t = m e_i`.
///
/// The rational solution `f` of `f · t = e_i` is unique, so the admissible
/// multipliers are exactly the multiples of the lcm of its denominators.
pub fn solve_unit_row(t: &IntMatrix, i: usize) -> Result<UnitRowSolution> {
    if !t.is_square() {
        return Err(Error::Shape(format!("{}x{} is not square", t.rows, t.cols)));
    }
    let n = t.rows;
    if i >= n {
        return Err(Error::Shape(format!(
            "unit index {i} out of range for size {n}"
        )));
    }
    if det(t)?.is_zero() {
        return Err(Error::Singular(format!("{t} has determinant 0")));
    }
    // f · t = e_i  <=>  t^T f^T = e_i^T; solve via an augmented echelon form.
    let q = Field::Rational;
    let tt = t.transpose();
    let rows: Vec<Vec<Scalar>> = tt
        .rows_iter()
        .enumerate()
        .map(|(r, row)| {
            let mut v: Vec<Scalar> = row.iter().map(|x| q.from_bigint(x)).collect();
            v.push(if r == i { q.one() } else { q.zero() });
            v
        })
        .collect();
    let e = linalg::row_echelon(rows, n + 1, q);
    let f: Vec<_> = e
        .rows
        .iter()
        .map(|r| r[n].as_rational().expect("rational field").clone())
        .collect();
    let m = f.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let row = f
        .iter()
        .map(|x| (x * num_rational::BigRational::from_integer(m.clone())).to_integer())
        .collect();
    Ok(UnitRowSolution { multiplier: m, row })
}

/// Primitive integer basis of `{x ∈ Q^c : m x = 0}`, one vector per free column.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    linalg::nullspace(m.rational_rows(), m.cols, Field::Rational)
        .into_iter()
        .map(|v| {
            let rats: Vec<_> = v
                .iter()
                .map(|s| s.as_rational().expect("rational field").clone())
                .collect();
            primitive(&rats)
        })
        .collect()
}

/// Clears denominators and divides by the content; the zero vector maps to zero.
pub(crate) fn primitive(v: &[num_rational::BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * num_rational::BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
