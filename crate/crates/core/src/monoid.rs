//! Affine monoids of lattice points in rational cones.
//!
//! For a `t × n` integer matrix `U` (rows are the exponent vectors of Laurent
//! monomials `M_1, …, M_t`) the monoid of interest is
//! `S = {β ∈ Z^t : βU ≥ 0}`: exactly the exponents for which `M^β` is an
//! honest polynomial monomial. Gordan's lemma makes `S` finitely generated,
//! and for a pointed cone its minimal generating set (the Hilbert basis) is
//! unique.
//!
//! The Hilbert basis is computed by
//! 1. enumerating the extreme rays from the inequality description,
//! 2. enumerating lattice points of the closed parallelepipeds spanned by
//!    linearly independent ray subsets (every irreducible element lies in
//!    one of them),
//! 3. sieving candidates in order of the positive grading `Σ_j (βU)_j`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, IntMatrix};
use crate::laurent::{ExponentVector, Field, Scalar};
use crate::linalg;

/// Laurent monomials `M_1, …, M_t` in `n` variables, given by exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraGens {
    nvars: usize,
    monomials: Vec<ExponentVector>,
}

impl SubalgebraGens {
    pub fn new(nvars: usize, monomials: Vec<ExponentVector>) -> Result<Self> {
        let mut seen = HashSet::new();
        for m in &monomials {
            if m.len() != nvars {
                return Err(Error::Shape(format!(
                    "monomial {:?} does not have {nvars} exponents",
                    m.0
                )));
            }
            if !seen.insert(m) {
                return Err(Error::Usage(format!("duplicate monomial {:?}", m.0)));
            }
        }
        Ok(SubalgebraGens { nvars, monomials })
    }

    pub fn from_rows<R: AsRef<[i64]>>(nvars: usize, rows: &[R]) -> Result<Self> {
        Self::new(
            nvars,
            rows.iter()
                .map(|r| ExponentVector::from(r.as_ref()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// The `t × n` exponent matrix `U`.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let entries = self
            .monomials
            .iter()
            .flat_map(|m| m.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(self.monomials.len(), self.nvars, entries).expect("validated shape")
    }
}

/// Minimal generating set of `S = {β : βU ≥ 0}`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub matrix: IntMatrix,
    pub elements: Vec<Vec<i64>>,
}

fn small_matrix(u: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    u.rows_iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::Usage(format!("matrix entry {x} is too large")))
                })
                .collect()
        })
        .collect()
}

fn times(beta: &[i64], u: &[Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|j| beta.iter().zip(u).map(|(b, r)| b * r[j]).sum())
        .collect()
}

fn in_cone(beta: &[i64], u: &[Vec<i64>], n: usize) -> bool {
    (0..n).all(|j| beta.iter().zip(u).map(|(b, r)| b * r[j]).sum::<i64>() >= 0)
}

/// True iff every coordinate of `βU` is nonnegative.
pub fn cone_membership(u: &IntMatrix, beta: &[i64]) -> Result<bool> {
    if beta.len() != u.nrows() {
        return Err(Error::Shape(format!(
            "β has length {} but U has {} rows",
            beta.len(),
            u.nrows()
        )));
    }
    Ok(in_cone(beta, &small_matrix(u)?, u.ncols()))
}

/// Fails with a line direction when `{β : βU ≥ 0}` is not pointed.
fn ensure_pointed(u: &IntMatrix) -> Result<()> {
    if u.rank() == u.nrows() {
        return Ok(());
    }
    let dir = integer_kernel(&u.transpose())
        .into_iter()
        .next()
        .expect("rank deficiency gives a kernel vector");
    Err(Error::Lineality {
        direction: dir.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect(),
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Primitive generators of the extreme rays of the pointed cone `βU ≥ 0`.
pub fn extreme_rays(u: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    ensure_pointed(u)?;
    let (t, n) = (u.nrows(), u.ncols());
    if t == 0 {
        return Ok(Vec::new());
    }
    let small = small_matrix(u)?;
    let cols = u.transpose();
    let mut rays = BTreeSet::new();
    for subset in combinations(n, t - 1) {
        let rows: Vec<&[BigInt]> = subset.iter().map(|&j| cols.row(j)).collect();
        let entries = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        let tight = IntMatrix::new(subset.len(), t, entries)?;
        let kernel = integer_kernel(&tight);
        if kernel.len() != 1 {
            continue;
        }
        let r: Vec<i64> = kernel[0]
            .iter()
            .map(|x| {
                x.to_i64()
                    .ok_or_else(|| Error::Usage("ray too large".into()))
            })
            .collect::<Result<_>>()?;
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        if in_cone(&r, &small, n) {
            rays.insert(r);
        } else if in_cone(&neg, &small, n) {
            rays.insert(neg);
        }
    }
    Ok(rays.into_iter().collect())
}

fn rank_i64(rows: &[&Vec<i64>], ncols: usize) -> usize {
    let q = Field::Rational;
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q.from_i64(x)).collect())
        .collect();
    linalg::rank(rows, ncols, q)
}

/// Hilbert basis of `S = {β ∈ Z^t : βU ≥ 0}` for a pointed cone.
pub fn hilbert_basis(u: &IntMatrix) -> Result<HilbertBasis> {
    let rays = extreme_rays(u)?;
    let small = small_matrix(u)?;
    let (t, n) = (u.nrows(), u.ncols());
    let all: Vec<&Vec<i64>> = rays.iter().collect();
    let dim = rank_i64(&all, t);

    let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
    for subset in combinations(rays.len(), dim) {
        let chosen: Vec<&Vec<i64>> = subset.iter().map(|&i| &rays[i]).collect();
        if rank_i64(&chosen, t) < dim {
            continue;
        }
        let lo: Vec<i64> = (0..t)
            .map(|c| chosen.iter().map(|r| r[c].min(0)).sum())
            .collect();
        let hi: Vec<i64> = (0..t)
            .map(|c| chosen.iter().map(|r| r[c].max(0)).sum())
            .collect();
        let mut point = lo.clone();
        loop {
            if point.iter().any(|&x| x != 0) && in_cone(&point, &small, n) {
                candidates.insert(point.clone());
            }
            // odometer step over the box
            let mut c = 0;
            while c < t {
                if point[c] < hi[c] {
                    point[c] += 1;
                    break;
                }
                point[c] = lo[c];
                c += 1;
            }
            if c == t {
                break;
            }
        }
    }

    let grade = |b: &[i64]| times(b, &small, n).iter().sum::<i64>();
    let mut ordered: Vec<(i64, Vec<i64>)> =
        candidates.into_iter().map(|b| (grade(&b), b)).collect();
    ordered.sort();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for (_, x) in ordered {
        let reducible = basis.iter().any(|h| {
            let diff: Vec<i64> = x.iter().zip(h).map(|(a, b)| a - b).collect();
            in_cone(&diff, &small, n)
        });
        if !reducible {
            basis.push(x);
        }
    }
    basis.sort();
    Ok(HilbertBasis {
        matrix: u.clone(),
        elements: basis,
    })
}

/// Result of a subalgebra membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `β ≥ 0` with `βU = target`.
    Member(Vec<i64>),
    /// No witness exists. Decided exactly (the monomials are independent, so
    /// a witness would be the unique rational solution).
    NotMember,
    /// Exhaustive search with every `β_i ≤ bound` found nothing.
    NotFoundWithin(i64),
}

impl Membership {
    pub fn witness(&self) -> Option<&[i64]> {
        match self {
            Membership::Member(b) => Some(b),
            _ => None,
        }
    }
}

/// Is `X^target` in `K[M_1, …, M_t]`?
///
/// Independent monomials admit at most one exponent vector `β`, found by an
/// exact rational solve. Otherwise the search is exhaustive over
/// `0 ≤ β_i ≤ (Σ_j |target_j|) · max |U|`, and a miss reports that bound.
pub fn monomial_membership(gens: &SubalgebraGens, target: &ExponentVector) -> Result<Membership> {
    if target.len() != gens.nvars {
        return Err(Error::Shape(format!(
            "target has {} exponents, expected {}",
            target.len(),
            gens.nvars
        )));
    }
    let t = gens.monomials.len();
    if target.is_zero() {
        return Ok(Membership::Member(vec![0; t]));
    }
    let u: Vec<Vec<i64>> = gens.monomials.iter().map(|m| m.0.clone()).collect();
    if alg_independence(gens) {
        return Ok(solve_unique(&u, target));
    }
    let max_entry = u.iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    let bound = target.iter().map(|x| x.abs()).sum::<i64>() * max_entry;
    let nonneg = u.iter().flatten().all(|&x| x >= 0);
    let mut beta = vec![0; t];
    let found = search(&u, &mut beta, 0, target.0.clone(), bound, nonneg);
    Ok(match found {
        true => Membership::Member(beta),
        false => Membership::NotFoundWithin(bound),
    })
}

fn solve_unique(u: &[Vec<i64>], target: &ExponentVector) -> Membership {
    let q = Field::Rational;
    let t = u.len();
    let n = target.len();
    // βU = target  <=>  U^T β = target
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let mut r: Vec<Scalar> = (0..t).map(|i| q.from_i64(u[i][j])).collect();
            r.push(q.from_i64(target[j]));
            r
        })
        .collect();
    let e = linalg::row_echelon(rows, t + 1, q);
    if e.pivots.contains(&t) {
        return Membership::NotMember;
    }
    let mut beta = Vec::with_capacity(t);
    for r in &e.rows {
        let x = r[t].as_rational().expect("rational");
        if !x.is_integer() {
            return Membership::NotMember;
        }
        match x.to_integer().to_i64() {
            Some(v) if v >= 0 => beta.push(v),
            _ => return Membership::NotMember,
        }
    }
    Membership::Member(beta)
}

fn search(
    u: &[Vec<i64>],
    beta: &mut [i64],
    i: usize,
    residual: Vec<i64>,
    bound: i64,
    nonneg: bool,
) -> bool {
    if i == u.len() {
        return residual.iter().all(|&x| x == 0);
    }
    let mut res = residual;
    for k in 0..=bound {
        if nonneg && res.iter().any(|&x| x < 0) {
            return false;
        }
        beta[i] = k;
        if search(u, beta, i + 1, res.clone(), bound, nonneg) {
            return true;
        }
        for (r, x) in res.iter_mut().zip(&u[i]) {
            *r -= x;
        }
    }
    beta[i] = 0;
    false
}

/// `a^i b^j c^k ∈ K[ab, bc, ca]` iff `i + j + k` is even and `i, j, k`
/// satisfy the triangle inequalities.
pub fn triangle_criterion(i: u64, j: u64, k: u64) -> bool {
    (i + j + k).is_multiple_of(2) && i + j >= k && j + k >= i && i + k >= j
}

/// Laurent monomials are algebraically independent iff their exponent
/// matrix has full row rank.
pub fn alg_independence(gens: &SubalgebraGens) -> bool {
    gens.exponent_matrix().rank() == gens.monomials.len()
}

/// Exponents of the monomial generators of `K(M_1, …, M_t) ∩ K[X]`, that is
/// `βU` for `β` in the Hilbert basis of `U`, in lexicographic order.
pub fn intersection_generators(gens: &SubalgebraGens) -> Result<Vec<ExponentVector>> {
    let u = gens.exponent_matrix();
    let rank = u.rank();
    if rank < gens.monomials.len() {
        return Err(Error::Dependent {
            rank,
            count: gens.monomials.len(),
        });
    }
    let hb = hilbert_basis(&u)?;
    let small = small_matrix(&u)?;
    let mut out: Vec<ExponentVector> = hb
        .elements
        .iter()
        .map(|b| ExponentVector(times(b, &small, gens.nvars)))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    /// Irreducible elements of S inside the box, by brute force.
    fn brute_irreducibles(u: &[Vec<i64>], n: usize, radius: i64) -> BTreeSet<Vec<i64>> {
        let t = u.len();
        let mut pts = vec![vec![]];
        for _ in 0..t {
            pts = pts
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (-radius..=radius).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let s: BTreeSet<Vec<i64>> = pts
            .into_iter()
            .filter(|p| p.iter().any(|&x| x != 0) && in_cone(p, u, n))
            .collect();
        s.iter()
            .filter(|x| {
                !s.iter().any(|y| {
                    let z: Vec<i64> = x.iter().zip(y.iter()).map(|(a, b)| a - b).collect();
                    s.contains(&z)
                })
            })
            .cloned()
            .collect()
    }

    #[test]
    fn cone_membership_examples() {
        let u = m(&[&[1, 1], &[1, -1]]);
        assert!(cone_membership(&u, &[1, 1]).unwrap());
        assert!(cone_membership(&u, &[0, 0]).unwrap());
        assert!(!cone_membership(&u, &[0, 1]).unwrap());
        assert!(matches!(cone_membership(&u, &[1]), Err(Error::Shape(_))));
    }

    #[test]
    fn worked_hilbert_basis() {
        let u = vec![vec![1, 1], vec![1, -1]];
        let hb = hilbert_basis(&IntMatrix::from_rows(&u).unwrap()).unwrap();
        let want: BTreeSet<Vec<i64>> = brute_irreducibles(&u, 2, 4);
        assert_eq!(
            want,
            [vec![1, 0], vec![1, 1], vec![1, -1]].into_iter().collect()
        );
        assert_eq!(hb.elements.iter().cloned().collect::<BTreeSet<_>>(), want);
    }

    #[test]
    fn identity_and_negative_line() {
        let hb = hilbert_basis(&IntMatrix::identity(3)).unwrap();
        assert_eq!(
            hb.elements,
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
        let hb = hilbert_basis(&m(&[&[-1]])).unwrap();
        assert_eq!(hb.elements, vec![vec![-1]]);
    }

    #[test]
    fn non_pointed_cone_is_rejected() {
        let err = hilbert_basis(&m(&[&[1, 0], &[2, 0]])).unwrap_err();
        match err {
            Error::Lineality { direction } => {
                assert_eq!(direction[0] + 2 * direction[1], 0);
                assert!(direction.iter().any(|&x| x != 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn membership_in_ab_bc_ca() {
        let g = SubalgebraGens::from_rows(3, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        let w = monomial_membership(&g, &ExponentVector(vec![2, 2, 2])).unwrap();
        assert_eq!(w.witness(), Some(&[1, 1, 1][..]));
        let w = monomial_membership(&g, &ExponentVector(vec![0, 0, 0])).unwrap();
        assert_eq!(w.witness(), Some(&[0, 0, 0][..]));
        let w = monomial_membership(&g, &ExponentVector(vec![2, 0, 0])).unwrap();
        assert_eq!(w, Membership::NotMember);
    }

    #[test]
    fn membership_search_for_dependent_generators() {
        // X1 and X1^2: X1^5 = X1 * (X1^2)^2 is found by search
        let g = SubalgebraGens::from_rows(1, &[[1], [2]]).unwrap();
        let w = monomial_membership(&g, &ExponentVector(vec![5])).unwrap();
        let b = w.witness().unwrap();
        assert_eq!(b[0] + 2 * b[1], 5);
        let w = monomial_membership(&g, &ExponentVector(vec![-1])).unwrap();
        assert_eq!(w, Membership::NotFoundWithin(2));
    }

    #[test]
    fn triangle_examples() {
        assert!(triangle_criterion(1, 1, 0));
        assert!(!triangle_criterion(1, 1, 1));
        assert!(!triangle_criterion(2, 0, 0));
    }

    #[test]
    fn independence() {
        assert!(alg_independence(
            &SubalgebraGens::from_rows(2, &[[1, 1], [1, -1]]).unwrap()
        ));
        assert!(!alg_independence(
            &SubalgebraGens::from_rows(1, &[[1], [2]]).unwrap()
        ));
        assert!(alg_independence(
            &SubalgebraGens::from_rows(3, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap()
        ));
        assert!(SubalgebraGens::from_rows(2, &[[1, 1], [1, 1]]).is_err());
    }

    #[test]
    fn generator_pipeline() {
        let g = SubalgebraGens::from_rows(2, &[[1, 1], [1, -1]]).unwrap();
        let gens = intersection_generators(&g).unwrap();
        let exps: Vec<Vec<i64>> = gens.into_iter().map(|e| e.0).collect();
        assert_eq!(exps, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);

        let g = SubalgebraGens::from_rows(1, &[[1]]).unwrap();
        assert_eq!(
            intersection_generators(&g).unwrap(),
            vec![ExponentVector(vec![1])]
        );

        let g = SubalgebraGens::from_rows(2, &[[1, -1]]).unwrap();
        assert!(intersection_generators(&g).unwrap().is_empty());

        let g = SubalgebraGens::from_rows(1, &[[1], [2]]).unwrap();
        assert!(matches!(
            intersection_generators(&g),
            Err(Error::Dependent { rank: 1, count: 2 })
        ));
    }
}
