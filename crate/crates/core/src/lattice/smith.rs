//! Smith normal form and the coset structure of subgroups of `Z^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};
use crate::laurent::ExponentVector;

/// `left · m · right = diag(invariants, 0, …)` with `left`, `right` unimodular
/// and each invariant dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    left: Vec<Vec<BigInt>>,
    right: Vec<Vec<BigInt>>,
    right_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.left.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in self.a.iter_mut().chain(self.right.iter_mut()) {
            r.swap(i, j);
        }
        self.right_inv.swap(i, j);
    }

    /// row_i += k · row_j
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.left] {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                *x += k * s;
            }
        }
    }

    /// col_i += k · col_j; the inverse receives row_j -= k · row_i.
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        for m in [&mut self.a, &mut self.right] {
            for r in m.iter_mut() {
                let s = r[j].clone();
                r[i] += k * s;
            }
        }
        let src = self.right_inv[i].clone();
        for (x, s) in self.right_inv[j].iter_mut().zip(&src) {
            *x -= k * s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for m in [&mut self.a, &mut self.left] {
            for x in m[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
}

fn to_matrix(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    let r = rows.len();
    IntMatrix::new(r, cols, rows.into_iter().flatten().collect()).expect("consistent shape")
}

fn identity_rows(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut w = Work {
        a: m.rows_iter().map(|r| r.to_vec()).collect(),
        left: identity_rows(rows),
        right: identity_rows(cols),
        right_inv: identity_rows(cols),
    };
    let mut invariants = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if w.a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(w, invariants, cols);
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.add_row(i, t, &-q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.add_col(j, t, &-q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            let piv = w.a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[i][j].is_multiple_of(&piv)));
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        invariants.push(w.a[t][t].clone());
    }
    finish(w, invariants, cols)
}

fn finish(w: Work, invariants: Vec<BigInt>, cols: usize) -> SmithForm {
    let rows = w.left.len();
    SmithForm {
        invariants,
        left: to_matrix(w.left, rows),
        right: to_matrix(w.right, cols),
        right_inv: to_matrix(w.right_inv, cols),
    }
}

/// A subgroup `H ⊂ Z^n` given by generators, with canonical coset
/// representatives.
///
/// With `left · G · right = D`, the rows of `right_inv` form a basis of
/// `Z^n` in which `H` is `⊕ d_i Z` on the first `rank` coordinates. A vector's
/// representative reduces those coordinates into `[0, d_i)` and keeps the
/// remaining ones.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    ambient: usize,
    generators: IntMatrix,
    smith: SmithForm,
}

/// Smith-form description of the subgroup generated by `generators`.
pub fn coset_decomposition(generators: &[ExponentVector], n: usize) -> Result<CosetDecomposition> {
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::Shape(format!(
            "generator {:?} does not have length {n}",
            g.0
        )));
    }
    let entries = generators
        .iter()
        .flat_map(|g| g.iter().map(|&x| BigInt::from(x)))
        .collect();
    let gens = IntMatrix::new(generators.len(), n, entries)?;
    let smith = smith_normal_form(&gens);
    Ok(CosetDecomposition {
        ambient: n,
        generators: gens,
        smith,
    })
}

impl CosetDecomposition {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn smith(&self) -> &SmithForm {
        &self.smith
    }

    /// `[Z^n : H]`, or `None` when `H` has lower rank (infinitely many cosets).
    pub fn index(&self) -> Option<BigInt> {
        (self.smith.rank() == self.ambient).then(|| self.smith.invariants.iter().product())
    }

    fn coordinates(&self, v: &[i64]) -> Vec<BigInt> {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.smith.right.left_mul(&v).expect("ambient length")
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let z = self.coordinates(v);
        let r = self.smith.rank();
        z.iter().enumerate().all(|(i, zi)| {
            if i < r {
                zi.is_multiple_of(&self.smith.invariants[i])
            } else {
                zi.is_zero()
            }
        })
    }

    /// Canonical representative of `v + H`; zero exactly for members of `H`.
    pub fn representative(&self, v: &[i64]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ambient);
        let mut z = self.coordinates(v);
        for (zi, d) in z.iter_mut().zip(&self.smith.invariants) {
            *zi = zi.mod_floor(d);
        }
        self.smith.right_inv.left_mul(&z).expect("ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    #[test]
    fn smith_identity_holds() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        let s = smith_normal_form(&a);
        assert_eq!(
            s.invariants,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let d = s.left.mul(&a).unwrap().mul(&s.right).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j {
                    s.invariants[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(d.get(i, j), &want);
            }
        }
        assert_eq!(s.right.mul(&s.right_inv).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn parity_subgroup() {
        let h = coset_decomposition(&[ev(&[1, 1]), ev(&[1, -1])], 2).unwrap();
        assert!(h.contains(&[2, 0]));
        assert!(!h.contains(&[1, 0]));
        assert_eq!(h.index(), Some(BigInt::from(2)));
    }

    #[test]
    fn full_lattice_has_trivial_representatives() {
        let gens: Vec<_> = (0..3).map(|i| ExponentVector::unit(3, i)).collect();
        let h = coset_decomposition(&gens, 3).unwrap();
        for v in [[1, -2, 5], [0, 0, 0], [7, 7, -7]] {
            assert!(h.contains(&v));
            assert!(h.representative(&v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn kuroda_rows_subgroup() {
        let gens = [
            ev(&[-1, 1, 1, 0]),
            ev(&[1, -1, 1, 0]),
            ev(&[1, 1, -1, 0]),
            ev(&[0, 0, 0, 1]),
        ];
        let h = coset_decomposition(&gens, 4).unwrap();
        assert!(h.contains(&[-1, 1, 1, 0]));
        assert_eq!(h.index(), Some(BigInt::from(4)));
    }

    #[test]
    fn empty_generators_give_trivial_subgroup() {
        let h = coset_decomposition(&[], 2).unwrap();
        assert!(h.contains(&[0, 0]));
        assert!(!h.contains(&[0, 1]));
        assert_eq!(h.index(), None);
        assert_eq!(
            h.representative(&[3, -4]),
            vec![BigInt::from(3), BigInt::from(-4)]
        );
    }

    #[test]
    fn shape_errors() {
        assert!(coset_decomposition(&[ev(&[1, 2, 3])], 2).is_err());
    }
}
