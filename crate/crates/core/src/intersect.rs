//! Degree-by-degree intersections of graded subalgebras.
//!
//! A subalgebra generated by weighted-homogeneous elements of positive degree
//! is spanned in degree `d` by the products of generators of total degree
//! `d`. Intersecting two such algebras in degree `d` is then an intersection
//! of two finite-dimensional coefficient spaces, done exactly and returned in
//! reduced echelon form (lexicographic monomial order), so bases are
//! canonical and reproducible.
//!
//! The Kuroda engine works in the Y-coordinates of a [`KurodaInstance`]:
//! `K[π]` is spanned by products of the `π_i` written in `Y`, and an element
//! lies in `K[X]` exactly when its coefficients on the Y-monomials whose
//! X-image has a negative exponent vanish (the substitution is injective on
//! monomials because `det T ≠ 0`).

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kuroda::KurodaInstance;
use crate::lattice::{coset_decomposition, CosetDecomposition};
use crate::laurent::{weighted_monomials, ExponentVector, Field, LaurentPoly, Scalar};
use crate::linalg::{self, Echelon};

/// One degree of an intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSlice {
    pub degree: i64,
    /// Dimension of the first algebra in this degree.
    pub dim_a: usize,
    /// Dimension of the second algebra in this degree.
    pub dim_b: usize,
    /// Canonical basis of the intersection in the working coordinates.
    pub basis: Vec<LaurentPoly>,
    /// The same basis written in `X` (identical to `basis` unless the
    /// report was computed in Y-coordinates).
    pub in_x: Vec<LaurentPoly>,
}

impl DegreeSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIntersectionReport {
    pub field: Field,
    pub weights: Vec<i64>,
    pub dmax: i64,
    /// Degrees `0..=dmax`.
    pub slices: Vec<DegreeSlice>,
    /// `(degree, count)` of elements not generated by lower degrees.
    pub new_generators: Vec<(i64, usize)>,
}

impl GradedIntersectionReport {
    pub fn slice(&self, d: i64) -> Option<&DegreeSlice> {
        self.slices.iter().find(|s| s.degree == d)
    }

    /// Nonconstant basis elements, in `X`.
    pub fn nonconstant_elements(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.slices
            .iter()
            .filter(|s| s.degree > 0)
            .flat_map(|s| s.in_x.iter())
    }
}

/// Generators with their degrees, and a cache of their products.
struct ProductSpan<'a> {
    gens: &'a [LaurentPoly],
    degrees: Vec<i64>,
    cache: HashMap<ExponentVector, LaurentPoly>,
}

impl<'a> ProductSpan<'a> {
    fn new(gens: &'a [LaurentPoly], weights: &[i64], label: &str) -> Result<Self> {
        let mut degrees = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let d = g.homogeneous_degree(weights).ok_or_else(|| {
                Error::Grading(format!(
                    "{label} generator {} ({g}) is not homogeneous",
                    i + 1
                ))
            })?;
            if d <= 0 {
                return Err(Error::Grading(format!(
                    "{label} generator {} ({g}) has degree {d}; degrees must be positive",
                    i + 1
                )));
            }
            degrees.push(d);
        }
        Ok(ProductSpan {
            gens,
            degrees,
            cache: HashMap::new(),
        })
    }

    fn product(&mut self, e: &ExponentVector, nvars: usize, field: Field) -> LaurentPoly {
        if let Some(p) = self.cache.get(e) {
            return p.clone();
        }
        let p = match e.iter().position(|&a| a > 0) {
            None => LaurentPoly::one(nvars, field),
            Some(i) => {
                let mut prev = e.clone();
                prev.0[i] -= 1;
                let lower = self.product(&prev, nvars, field);
                &lower * &self.gens[i]
            }
        };
        self.cache.insert(e.clone(), p.clone());
        p
    }

    /// All products of total degree `d`.
    fn products(&mut self, d: i64, nvars: usize, field: Field) -> Vec<LaurentPoly> {
        if self.gens.is_empty() {
            return if d == 0 {
                vec![LaurentPoly::one(nvars, field)]
            } else {
                Vec::new()
            };
        }
        weighted_monomials(&self.degrees.clone(), d)
            .iter()
            .map(|e| self.product(e, nvars, field))
            .collect()
    }
}

/// Column index over the union of supports, in lexicographic order.
fn column_index<'a, I: IntoIterator<Item = &'a LaurentPoly>>(polys: I) -> Vec<ExponentVector> {
    let set: BTreeSet<ExponentVector> = polys.into_iter().flat_map(|p| p.support()).collect();
    set.into_iter().collect()
}

fn echelon_of(polys: &[LaurentPoly], cols: &[ExponentVector], field: Field) -> Echelon {
    let index: HashMap<&ExponentVector, usize> =
        cols.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![field.zero(); cols.len()];
            for (e, c) in p.terms() {
                row[index[e]] = c.clone();
            }
            row
        })
        .collect();
    linalg::row_echelon(rows, cols.len(), field)
}

fn polys_of(e: &Echelon, cols: &[ExponentVector], nvars: usize) -> Vec<LaurentPoly> {
    e.rows
        .iter()
        .map(|r| {
            LaurentPoly::from_terms(nvars, e.field, cols.iter().cloned().zip(r.iter().cloned()))
                .expect("consistent shape")
        })
        .collect()
}

fn common_ring(polys: &[&LaurentPoly]) -> Result<Option<(usize, Field)>> {
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    let ring = (first.nvars(), first.field());
    if polys.iter().any(|p| (p.nvars(), p.field()) != ring) {
        return Err(Error::Usage("generators live in different rings".into()));
    }
    Ok(Some(ring))
}

/// Intersection of `K[gens_a]` and `K[gens_b]` in degrees `0..=dmax`.
pub fn graded_intersection(
    gens_a: &[LaurentPoly],
    gens_b: &[LaurentPoly],
    weights: &[i64],
    dmax: i64,
) -> Result<GradedIntersectionReport> {
    let all: Vec<&LaurentPoly> = gens_a.iter().chain(gens_b).collect();
    let (nvars, field) =
        common_ring(&all)?.ok_or_else(|| Error::Usage("no generators given".into()))?;
    if weights.len() != nvars {
        return Err(Error::Shape(format!(
            "{} weights for {nvars} variables",
            weights.len()
        )));
    }
    let mut span_a = ProductSpan::new(gens_a, weights, "A")?;
    let mut span_b = ProductSpan::new(gens_b, weights, "B")?;
    let mut slices = Vec::new();
    for d in 0..=dmax {
        let pa = span_a.products(d, nvars, field);
        let pb = span_b.products(d, nvars, field);
        let cols = column_index(pa.iter().chain(&pb));
        let ea = echelon_of(&pa, &cols, field);
        let eb = echelon_of(&pb, &cols, field);
        let meet = linalg::intersect(&ea, &eb);
        let basis = polys_of(&meet, &cols, nvars);
        slices.push(DegreeSlice {
            degree: d,
            dim_a: ea.rank(),
            dim_b: eb.rank(),
            in_x: basis.clone(),
            basis,
        });
    }
    let mut report = GradedIntersectionReport {
        field,
        weights: weights.to_vec(),
        dmax,
        slices,
        new_generators: Vec::new(),
    };
    report.new_generators = minimal_generator_degrees(&report);
    Ok(report)
}

fn require_invertible(inst: &KurodaInstance) -> Result<()> {
    if inst.det_t().is_zero() {
        return Err(Error::Precondition(format!(
            "det T = 0 for {}; the π are not independent",
            inst.t_matrix()
        )));
    }
    Ok(())
}

/// Y-monomials whose X-image has a negative exponent.
fn negative_in_x(inst: &KurodaInstance, e: &ExponentVector) -> bool {
    let images = inst.y_images();
    let n = inst.n();
    let mut x = vec![0i64; n];
    for (k, img) in e.iter().zip(images) {
        if *k == 0 {
            continue;
        }
        let (v, _) = img.as_monomial().expect("monomial image");
        for (xi, vi) in x.iter_mut().zip(v.iter()) {
            *xi += k * vi;
        }
    }
    x.iter().any(|&a| a < 0)
}

/// `K[π] ∩ K[X]` in Y-degrees `0..=d_max`.
///
/// `dim_a` counts independent `π`-products, `dim_b` the Y-monomials that are
/// polynomials in `X`.
pub fn kuroda_intersection_basis(
    inst: &KurodaInstance,
    d_max: i64,
) -> Result<GradedIntersectionReport> {
    require_invertible(inst)?;
    let field = inst.field();
    let weights = inst.y_weights().to_vec();
    let ny = weights.len();
    let pi = inst.pi_in_y();
    let slices: Vec<DegreeSlice> = (0..=d_max)
        .into_par_iter()
        .map(|d| -> Result<DegreeSlice> {
            let mut span = ProductSpan::new(pi, &weights, "π")?;
            let products = span.products(d, ny, field);
            let cols = weighted_monomials(&weights, d);
            let ea = echelon_of(&products, &cols, field);
            let bad: Vec<usize> = (0..cols.len())
                .filter(|&j| negative_in_x(inst, &cols[j]))
                .collect();
            let restricted: Vec<Vec<Scalar>> = ea
                .rows
                .iter()
                .map(|r| bad.iter().map(|&j| r[j].clone()).collect())
                .collect();
            let combos = linalg::left_nullspace(&restricted, bad.len(), field);
            let vectors: Vec<Vec<Scalar>> = combos
                .iter()
                .map(|mu| {
                    let mut acc = vec![field.zero(); cols.len()];
                    for (m, row) in mu.iter().zip(&ea.rows) {
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
            let meet = linalg::row_echelon(vectors, cols.len(), field);
            let basis = polys_of(&meet, &cols, ny);
            let in_x = basis
                .iter()
                .map(|b| b.substitute(inst.y_images()))
                .collect::<Result<Vec<_>>>()?;
            Ok(DegreeSlice {
                degree: d,
                dim_a: ea.rank(),
                dim_b: cols.len() - bad.len(),
                basis,
                in_x,
            })
        })
        .collect::<Result<_>>()?;
    let mut report = GradedIntersectionReport {
        field,
        weights,
        dmax: d_max,
        slices,
        new_generators: Vec::new(),
    };
    report.new_generators = minimal_generator_degrees(&report);
    Ok(report)
}

/// For each degree `d ≥ 1`, the number of basis elements not in the span of
/// products `I_j · I_{d−j}` with `1 ≤ j ≤ d/2`; degrees with no new
/// elements are omitted. Elements above the report's bound are not seen.
pub fn minimal_generator_degrees(report: &GradedIntersectionReport) -> Vec<(i64, usize)> {
    let field = report.field;
    let by_degree: HashMap<i64, &DegreeSlice> =
        report.slices.iter().map(|s| (s.degree, s)).collect();
    let mut out: Vec<(i64, usize)> = report
        .slices
        .par_iter()
        .filter(|s| s.degree > 0 && !s.basis.is_empty())
        .map(|s| {
            let d = s.degree;
            let mut products = Vec::new();
            for j in 1..=d / 2 {
                let (Some(lo), Some(hi)) = (by_degree.get(&j), by_degree.get(&(d - j))) else {
                    continue;
                };
                for a in &lo.basis {
                    for b in &hi.basis {
                        products.push(a * b);
                    }
                }
            }
            let cols = column_index(s.basis.iter().chain(&products));
            let rank = echelon_of(&products, &cols, field).rank();
            (d, s.basis.len() - rank)
        })
        .filter(|&(_, k)| k > 0)
        .collect();
    out.sort();
    out
}

/// `f` lies in the linear span of `basis`.
pub fn in_span(basis: &[LaurentPoly], f: &LaurentPoly) -> bool {
    let cols = column_index(basis.iter().chain([f]));
    let e = echelon_of(basis, &cols, f.field());
    let target = echelon_of(std::slice::from_ref(f), &cols, f.field());
    target.rows.first().is_none_or(|row| e.contains(row))
}

/// Outcome of checking the coset decomposition of `Z^n` over a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub ok: bool,
    pub checked: usize,
    /// Distinct representatives met in the box.
    pub cosets: usize,
    /// `[Z^n : H]`, when finite.
    pub index: Option<BigInt>,
    pub failures: Vec<String>,
}

/// Membership in the row lattice of independent generators, decided by a
/// rational solve and an integrality test.
fn member_by_solve(gens: &[ExponentVector], v: &[i64]) -> bool {
    let q = Field::Rational;
    let t = gens.len();
    let n = v.len();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let mut r: Vec<Scalar> = gens.iter().map(|g| q.from_i64(g[j])).collect();
            r.push(q.from_i64(v[j]));
            r
        })
        .collect();
    let e = linalg::row_echelon(rows, t + 1, q);
    if e.pivots.contains(&t) {
        return false;
    }
    e.rows
        .iter()
        .all(|r| r[t].as_rational().expect("rational").is_integer())
}

fn box_points(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut pts = vec![Vec::new()];
    for _ in 0..n {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts
}

/// Checks every `v ∈ [−B, B]^n` against the coset decomposition of `H`:
/// `v − rep(v) ∈ H`, `rep` is idempotent and constant on `v + H`, and
/// distinct representatives are pairwise incongruent.
pub fn freeness_check_subgroup(
    gens: &[ExponentVector],
    n: usize,
    bound: i64,
) -> Result<FreenessReport> {
    let h: CosetDecomposition = coset_decomposition(gens, n)?;
    if h.smith().rank() < gens.len() {
        return Err(Error::Precondition(
            "subgroup generators are dependent".into(),
        ));
    }
    let small =
        |v: Vec<BigInt>| -> Vec<i64> { v.iter().map(|x| x.to_i64().expect("small")).collect() };
    let points = box_points(n, bound);
    let results: Vec<(Vec<i64>, Vec<String>)> = points
        .par_iter()
        .map(|v| {
            let mut fails = Vec::new();
            let r = small(h.representative(v));
            let diff: Vec<i64> = v.iter().zip(&r).map(|(a, b)| a - b).collect();
            if !member_by_solve(gens, &diff) {
                fails.push(format!("{v:?} - rep {r:?} is not in H"));
            }
            if small(h.representative(&r)) != r {
                fails.push(format!("rep is not idempotent at {v:?}"));
            }
            for g in gens {
                let w: Vec<i64> = v.iter().zip(g.iter()).map(|(a, b)| a + b).collect();
                if small(h.representative(&w)) != r {
                    fails.push(format!("rep({v:?} + {:?}) differs", g.0));
                }
            }
            (r, fails)
        })
        .collect();
    let mut failures: Vec<String> = results.iter().flat_map(|(_, f)| f.clone()).collect();
    let reps: BTreeSet<Vec<i64>> = results.into_iter().map(|(r, _)| r).collect();
    let reps: Vec<Vec<i64>> = reps.into_iter().collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            let d: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if member_by_solve(gens, &d) {
                failures.push(format!("representatives {a:?} and {b:?} are congruent"));
            }
        }
    }
    Ok(FreenessReport {
        ok: failures.is_empty(),
        checked: points.len(),
        cosets: reps.len(),
        index: h.index(),
        failures,
    })
}

/// [`freeness_check_subgroup`] for the subgroup spanned by the rows of `T`
/// (padded with 0) and `e_n`.
pub fn freeness_coset_check(inst: &KurodaInstance, bound: i64) -> Result<FreenessReport> {
    require_invertible(inst)?;
    freeness_check_subgroup(&inst.subgroup_generators(), inst.n(), bound)
}

/// Monomials of weighted degree `1..=d_max` lying in the span of products of
/// `gens`.
pub fn monomials_in_span(
    gens: &[LaurentPoly],
    weights: &[i64],
    d_max: i64,
) -> Result<Vec<ExponentVector>> {
    let refs: Vec<&LaurentPoly> = gens.iter().collect();
    let Some((nvars, field)) = common_ring(&refs)? else {
        return Ok(Vec::new());
    };
    let mut span = ProductSpan::new(gens, weights, "generator")?;
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    for d in 1..=d_max {
        let products = span.products(d, nvars, field);
        let cols = column_index(&products);
        let e = echelon_of(&products, &cols, field);
        for (j, c) in cols.iter().enumerate() {
            let mut unit = vec![field.zero(); cols.len()];
            unit[j] = field.one();
            if e.contains(&unit) && seen.insert(c.clone()) {
                found.push(c.clone());
            }
        }
    }
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitsReport {
    pub ok: bool,
    pub degree_bound: i64,
    /// Y-monomials found in the span (should be none).
    pub offending: Vec<ExponentVector>,
}

/// No nonconstant monomial lies in `K[π]` up to degree `d_max`.
///
/// `K[π]` is graded, so a monomial in it lies in a single homogeneous
/// component, and monomials in `X` correspond one to one with monomials in
/// `Y`.
pub fn no_monomial_units_check(inst: &KurodaInstance, d_max: i64) -> Result<UnitsReport> {
    require_invertible(inst)?;
    let offending = monomials_in_span(inst.pi_in_y(), inst.y_weights(), d_max)?;
    Ok(UnitsReport {
        ok: offending.is_empty(),
        degree_bound: d_max,
        offending,
    })
}
