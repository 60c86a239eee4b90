//! Dense exact linear algebra over a [`Field`].
//!
//! Rows are `Vec<Scalar>`; elimination skips zero entries, which keeps the
//! mostly sparse coefficient matrices built from polynomial expansions cheap.

use crate::laurent::{Field, Scalar};

/// A matrix in reduced row-echelon form: zero rows dropped, pivots equal to
/// one, pivot columns strictly increasing. The reduced form of a row space is
/// unique, which is what makes it usable as a canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub field: Field,
    pub ncols: usize,
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Subtracts pivot-row multiples so `v` has zeros in all pivot columns.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (j, r) in row.iter().enumerate().skip(pc) {
                if !r.is_zero() {
                    v[j] = &v[j] - &(&f * r);
                }
            }
        }
    }

    /// Row-space membership.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }
}

/// Reduced row-echelon form of the given rows.
pub fn row_echelon(mut rows: Vec<Vec<Scalar>>, ncols: usize, field: Field) -> Echelon {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut pivots = Vec::new();
    let mut next = 0;
    for c in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][c].inv();
        if !inv.is_one() {
            for x in rows[next].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let nz: Vec<usize> = (c..ncols).filter(|&j| !rows[next][j].is_zero()).collect();
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        }
        pivots.push(c);
        next += 1;
    }
    rows.truncate(next);
    Echelon {
        field,
        ncols,
        rows,
        pivots,
    }
}

pub fn rank(rows: Vec<Vec<Scalar>>, ncols: usize, field: Field) -> usize {
    row_echelon(rows, ncols, field).rank()
}

/// Basis of `{x : M x = 0}` for the matrix with the given rows.
pub fn nullspace(rows: Vec<Vec<Scalar>>, ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let e = row_echelon(rows, ncols, field);
    let mut is_pivot = vec![false; ncols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![field.zero(); ncols];
            x[f] = field.one();
            for (row, &pc) in e.rows.iter().zip(&e.pivots) {
                x[pc] = -&row[f];
            }
            x
        })
        .collect()
}

/// Basis of `{μ : Σ μ_i row_i = 0}`.
pub fn left_nullspace(rows: &[Vec<Scalar>], ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let m = rows.len();
    let augmented: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.extend((0..m).map(|k| if k == i { field.one() } else { field.zero() }));
            a
        })
        .collect();
    let e = row_echelon(augmented, ncols + m, field);
    e.rows
        .into_iter()
        .zip(e.pivots)
        .filter(|(_, pc)| *pc >= ncols)
        .map(|(r, _)| r[ncols..].to_vec())
        .collect()
}

/// Canonical basis of the intersection of two row spaces.
pub fn intersect(u: &Echelon, w: &Echelon) -> Echelon {
    assert_eq!(
        u.ncols, w.ncols,
        "intersecting spaces of different dimension"
    );
    let field = u.field;
    let remainders: Vec<Vec<Scalar>> = w
        .rows
        .iter()
        .map(|r| {
            let mut v = r.clone();
            u.reduce(&mut v);
            v
        })
        .collect();
    let combos = left_nullspace(&remainders, u.ncols, field);
    let vectors = combos
        .into_iter()
        .map(|mu| {
            let mut acc = vec![field.zero(); u.ncols];
            for (m, row) in mu.iter().zip(&w.rows) {
                if m.is_zero() {
                    continue;
                }
                for (a, r) in acc.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *a = &*a + &(m * r);
                    }
                }
            }
            acc
        })
        .collect();
    row_echelon(vectors, u.ncols, field)
}
