//! The derivation `E = Σ ∂/∂Y_i` and its kernel on polynomial rings.
//!
//! `E` lowers degree by one, so its kernel splits degree by degree and each
//! slice is a null space over the monomial basis. The kernel is compared
//! against the algebra generated by `Y_n − Y_i`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{weighted_monomials, ExponentVector, Field, LaurentPoly};
use crate::linalg::{self, Echelon};

/// `E(f) = Σ_i ∂f/∂Y_i`.
pub fn apply_e(f: &LaurentPoly) -> LaurentPoly {
    (0..f.nvars()).fold(LaurentPoly::zero(f.nvars(), f.field()), |acc, i| {
        &acc + &f.partial_derivative(i)
    })
}

/// True iff `E(f) = 0`.
pub fn kernel_check(f: &LaurentPoly) -> bool {
    apply_e(f).is_zero()
}

/// Kernel of `E` in one homogeneous degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSlice {
    pub degree: usize,
    /// Canonical (reduced echelon) basis of the kernel slice.
    pub basis: Vec<LaurentPoly>,
    /// Dimension of the span of products of `Y_n − Y_i` in this degree.
    pub generated_dim: usize,
    /// The two spaces coincide.
    pub matches_generators: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub nvars: usize,
    pub field: Field,
    pub slices: Vec<KernelSlice>,
}

impl KernelBasis {
    /// Dimension of the kernel in degrees `≤ d`.
    pub fn dim(&self) -> usize {
        self.slices.iter().map(|s| s.basis.len()).sum()
    }

    pub fn matches_generators(&self) -> bool {
        self.slices.iter().all(|s| s.matches_generators)
    }

    pub fn basis(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.slices.iter().flat_map(|s| s.basis.iter())
    }
}

fn coefficient_rows(
    polys: &[LaurentPoly],
    index: &HashMap<&ExponentVector, usize>,
    field: Field,
) -> Vec<Vec<crate::Scalar>> {
    polys
        .iter()
        .map(|p| {
            let mut row = vec![field.zero(); index.len()];
            for (e, c) in p.terms() {
                row[index[e]] = c.clone();
            }
            row
        })
        .collect()
}

fn to_polys(e: &Echelon, monos: &[ExponentVector], nvars: usize, field: Field) -> Vec<LaurentPoly> {
    e.rows
        .iter()
        .map(|r| {
            LaurentPoly::from_terms(nvars, field, monos.iter().cloned().zip(r.iter().cloned()))
                .expect("consistent shape")
        })
        .collect()
}

fn kernel_slice(nvars: usize, k: usize, field: Field) -> KernelSlice {
    let ones = vec![1; nvars];
    let monos = weighted_monomials(&ones, k as i64);
    let lower = weighted_monomials(&ones, k as i64 - 1);
    let lower_index: HashMap<&ExponentVector, usize> =
        lower.iter().enumerate().map(|(i, e)| (e, i)).collect();

    // Column j of the matrix of E is E(monos[j]) in the lower basis.
    let mut rows = vec![vec![field.zero(); monos.len()]; lower.len()];
    for (j, m) in monos.iter().enumerate() {
        let image = apply_e(&LaurentPoly::monomial(m.clone(), field.one()));
        for (e, c) in image.terms() {
            rows[lower_index[e]][j] = c.clone();
        }
    }
    let null = linalg::nullspace(rows, monos.len(), field);
    let kernel = linalg::row_echelon(null, monos.len(), field);

    // products of g_i = Y_n − Y_i of total degree k
    let yn = LaurentPoly::variable(nvars, nvars - 1, field);
    let gens: Vec<LaurentPoly> = (0..nvars - 1)
        .map(|i| &yn - &LaurentPoly::variable(nvars, i, field))
        .collect();
    let products: Vec<LaurentPoly> = weighted_monomials(&vec![1; nvars - 1], k as i64)
        .iter()
        .map(|e| {
            e.iter()
                .zip(&gens)
                .fold(LaurentPoly::one(nvars, field), |acc, (&a, g)| {
                    &acc * &g.pow(a as u32)
                })
        })
        .collect();
    let index: HashMap<&ExponentVector, usize> =
        monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let generated = linalg::row_echelon(
        coefficient_rows(&products, &index, field),
        monos.len(),
        field,
    );

    KernelSlice {
        degree: k,
        basis: to_polys(&kernel, &monos, nvars, field),
        generated_dim: generated.rank(),
        matches_generators: generated == kernel,
    }
}

/// Kernel of `E` on `K[Y₁, …, Y_nvars]` in degrees `≤ d`.
///
/// Only characteristic 0 is accepted: over `F_p`, `Y_i^p` is a constant of
/// `E` and the kernel is larger than the algebra of the `Y_n − Y_i`.
pub fn kernel_degree_basis_in(nvars: usize, d: usize, field: Field) -> Result<KernelBasis> {
    if field != Field::Rational {
        return Err(Error::Precondition(format!(
            "kernel bases need characteristic 0, got {field}"
        )));
    }
    if nvars == 0 {
        return Err(Error::Usage("need at least one variable".into()));
    }
    let slices = (0..=d)
        .into_par_iter()
        .map(|k| kernel_slice(nvars, k, field))
        .collect();
    Ok(KernelBasis {
        nvars,
        field,
        slices,
    })
}

/// Kernel of `E` on `K[Y₁, Y₂, Y₃, Y₄]` in degrees `≤ d`.
pub fn kernel_degree_basis(d: usize, field: Field) -> Result<KernelBasis> {
    kernel_degree_basis_in(4, d, field)
}

/// Every support vector with a positive last exponent has a positive sum of
/// the remaining exponents.
pub fn support_property_check(f: &LaurentPoly) -> Result<bool> {
    if !f.is_polynomial() {
        return Err(Error::Precondition(
            "support property is defined for polynomials only".into(),
        ));
    }
    let n = f.nvars();
    if n == 0 {
        return Ok(true);
    }
    Ok(f.support()
        .iter()
        .filter(|e| e[n - 1] > 0)
        .all(|e| e[..n - 1].iter().sum::<i64>() > 0))
}
