//! Kuroda instances: the polynomials `π_i` built from `(γ, δ)` data, the
//! conditions (*) and (**), and the certificate polynomials `f₀` and `G`.
//!
//! Two families are supported.
//!
//! *Three-variable* (`n = 3`, 2×2 `δ`):
//! `π₁ = X₁^{δ21}X₂^{-δ22} − X₁^{-δ11}X₂^{δ12}`, `π₂ = X₃^γ − X₁^{-δ11}X₂^{δ12}`,
//! `π₃ = 2X₁^{δ21−δ11}X₂^{δ12−δ22} − X₁^{-2δ11}X₂^{2δ12}`.
//!
//! *General* (`n ≥ 4`, `(n−1) × n` `δ`):
//! `π_i = X_n^{γ_i} − X^{r_i}` where `r_i` is row `i` of `δ` with the
//! diagonal entry negated.
//!
//! Both are also expressed in Y-coordinates, monomials `Y_j ↦ X^{…}` with
//! each `π_i` a polynomial in `Y`. In the general family
//! `Y_i = X^{r_i}` for `i < n` and `Y_n = X_n^g` with `g = gcd(γ_i)`, so
//! `π_i = Y_n^{γ_i/g} − Y_i`; giving `Y_i` weight `γ_i/g` and `Y_n` weight 1
//! makes every `π_i` homogeneous. In the three-variable family
//! `Y₁ = X₁^{-δ11}X₂^{δ12}`, `Y₂ = X₁^{δ21}X₂^{-δ22}`, `Y₃ = X₃^γ`, and
//! `π = (Y₂ − Y₁, Y₃ − Y₁, 2Y₁Y₂ − Y₁²)` with unit weights.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{det, solve_unit_row, IntMatrix, UnitRowSolution};
use crate::laurent::{ExponentVector, Field, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KurodaInstance {
    n: usize,
    gamma: Vec<i64>,
    delta: Vec<Vec<i64>>,
    field: Field,
    t: IntMatrix,
    y_images: Vec<LaurentPoly>,
    y_weights: Vec<i64>,
    pi_y: Vec<LaurentPoly>,
    pi: Vec<LaurentPoly>,
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

impl KurodaInstance {
    /// `gamma` is either a single value or one per `π_i`. For `n = 3`, `delta`
    /// is 2×2. For `n ≥ 4` it is `(n−1) × n`, or `(n−1) × (n−1)` with the
    /// `X_n` exponents taken as 0.
    pub fn new(n: usize, gamma: &[i64], delta: &[Vec<i64>], field: Field) -> Result<Self> {
        if n < 3 {
            return Err(Error::Validation(format!("n = {n}; need n ≥ 3")));
        }
        let m = n - 1;
        if delta.len() != m {
            return Err(Error::Validation(format!(
                "delta has {} rows, expected {m}",
                delta.len()
            )));
        }
        let width_ok = |r: &Vec<i64>| r.len() == m || (n > 3 && r.len() == n);
        if let Some(i) = delta.iter().position(|r| !width_ok(r)) {
            return Err(Error::Validation(format!(
                "delta row {} has {} entries",
                i + 1,
                delta[i].len()
            )));
        }
        let delta: Vec<Vec<i64>> = delta
            .iter()
            .map(|r| {
                let mut r = r.clone();
                if n > 3 {
                    r.resize(n, 0);
                }
                r
            })
            .collect();
        for (i, row) in delta.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let min = if j < m { 1 } else { 0 };
                if v < min {
                    return Err(Error::Validation(format!(
                        "delta[{}][{}] = {v}, must be ≥ {min}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let gamma: Vec<i64> = match gamma.len() {
            1 => vec![gamma[0]; if n == 3 { 1 } else { m }],
            k if n > 3 && k == m => gamma.to_vec(),
            k => {
                return Err(Error::Validation(format!("gamma has {k} entries")));
            }
        };
        if let Some(g) = gamma.iter().find(|&&g| g < 1) {
            return Err(Error::Validation(format!("gamma = {g}, must be ≥ 1")));
        }

        let t_rows: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { -delta[i][j] } else { delta[i][j] })
                    .collect()
            })
            .collect();
        let t = IntMatrix::from_rows(&t_rows)?;

        let (y_images, y_weights, pi_y) = if n == 3 {
            three_variable_coordinates(&t_rows, gamma[0], field)?
        } else {
            general_coordinates(n, &t_rows, &delta, &gamma, field)?
        };
        let pi = pi_y
            .iter()
            .map(|p| p.substitute(&y_images))
            .collect::<Result<Vec<_>>>()?;
        Ok(KurodaInstance {
            n,
            gamma,
            delta,
            field,
            t,
            y_images,
            y_weights,
            pi_y,
            pi,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn delta(&self) -> &[Vec<i64>] {
        &self.delta
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_three_variable(&self) -> bool {
        self.n == 3
    }

    /// The square matrix with `−δ_ii` on the diagonal and `δ_ij` elsewhere.
    pub fn t_matrix(&self) -> &IntMatrix {
        &self.t
    }

    pub fn det_t(&self) -> BigInt {
        det(&self.t).expect("square")
    }

    /// The `π_i` as Laurent polynomials in `X₁ … X_n`.
    pub fn pi(&self) -> &[LaurentPoly] {
        &self.pi
    }

    /// The `π_i` as polynomials in the Y-coordinates.
    pub fn pi_in_y(&self) -> &[LaurentPoly] {
        &self.pi_y
    }

    /// Monomial images `Y_j ↦ X^{…}`.
    pub fn y_images(&self) -> &[LaurentPoly] {
        &self.y_images
    }

    pub fn y_weights(&self) -> &[i64] {
        &self.y_weights
    }

    /// Weighted degree of each `π_i` in the Y-grading.
    pub fn pi_weights(&self) -> Vec<i64> {
        self.pi_y
            .iter()
            .map(|p| p.homogeneous_degree(&self.y_weights).expect("homogeneous"))
            .collect()
    }

    /// Rows of `T` padded with a zero `X_n` exponent, followed by `e_n`.
    pub fn subgroup_generators(&self) -> Vec<ExponentVector> {
        let mut gens: Vec<ExponentVector> = self
            .t
            .rows_iter()
            .map(|r| {
                let mut v: Vec<i64> = r.iter().map(|x| x.to_i64().expect("small")).collect();
                v.push(0);
                ExponentVector(v)
            })
            .collect();
        gens.push(ExponentVector::unit(self.n, self.n - 1));
        gens
    }

    /// `ξ_i = δ_ii / (δ_ii + min_{j≠i} δ_ji)`; general family only.
    pub fn xi(&self) -> Result<Vec<BigRational>> {
        if self.is_three_variable() {
            return Err(Error::Precondition(
                "ξ is defined for the general family".into(),
            ));
        }
        Ok(xi_values(&self.delta))
    }
}

fn monomial(exps: Vec<i64>, field: Field) -> LaurentPoly {
    LaurentPoly::monomial(ExponentVector(exps), field.one())
}

fn three_variable_coordinates(
    t: &[Vec<i64>],
    gamma: i64,
    field: Field,
) -> Result<(Vec<LaurentPoly>, Vec<i64>, Vec<LaurentPoly>)> {
    let images = vec![
        monomial(vec![t[0][0], t[0][1], 0], field),
        monomial(vec![t[1][0], t[1][1], 0], field),
        monomial(vec![0, 0, gamma], field),
    ];
    let y = |i| LaurentPoly::variable(3, i, field);
    let (y1, y2, y3) = (y(0), y(1), y(2));
    let two = field.from_i64(2);
    let pi3 = (&y1 * &y2).scale(&two).checked_sub(&y1.pow(2))?;
    Ok((images, vec![1, 1, 1], vec![&y2 - &y1, &y3 - &y1, pi3]))
}

fn general_coordinates(
    n: usize,
    t: &[Vec<i64>],
    delta: &[Vec<i64>],
    gamma: &[i64],
    field: Field,
) -> Result<(Vec<LaurentPoly>, Vec<i64>, Vec<LaurentPoly>)> {
    let g = gamma.iter().fold(0i64, |a, &b| a.gcd(&b));
    let mut images: Vec<LaurentPoly> = t
        .iter()
        .zip(delta)
        .map(|(r, d)| {
            let mut e = r.clone();
            e.push(d[n - 1]);
            monomial(e, field)
        })
        .collect();
    let mut last = vec![0; n];
    last[n - 1] = g;
    images.push(monomial(last, field));
    let mut weights: Vec<i64> = gamma.iter().map(|c| c / g).collect();
    weights.push(1);
    let yn = LaurentPoly::variable(n, n - 1, field);
    let pi = gamma
        .iter()
        .enumerate()
        .map(|(i, c)| &yn.pow((c / g) as u32) - &LaurentPoly::variable(n, i, field))
        .collect();
    Ok((images, weights, pi))
}

/// `ξ_i` for a square (or wider) `δ` block.
pub fn xi_values(delta: &[Vec<i64>]) -> Vec<BigRational> {
    let m = delta.len();
    (0..m)
        .map(|i| {
            let min_col = (0..m)
                .filter(|&j| j != i)
                .map(|j| delta[j][i])
                .min()
                .unwrap_or(0);
            rat(delta[i][i], delta[i][i] + min_col)
        })
        .collect()
}

/// The value `δ11/(δ11+δ21) + δ22/(δ22+δ12)` of condition (**).
pub fn starstar_value(delta: &[Vec<i64>]) -> BigRational {
    rat(delta[0][0], delta[0][0] + delta[1][0]) + rat(delta[1][1], delta[1][1] + delta[0][1])
}

/// Exact value of a condition and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionValue {
    pub value: BigRational,
    pub holds: bool,
}

/// Condition (*): `ξ₁ + ξ₂ + ξ₃ < 1`.
pub fn check_star(inst: &KurodaInstance) -> Result<ConditionValue> {
    if inst.n != 4 {
        return Err(Error::Precondition(format!(
            "condition (*) needs n = 4, got n = {}",
            inst.n
        )));
    }
    let value: BigRational = inst.xi()?.into_iter().sum();
    let holds = value < BigRational::one();
    Ok(ConditionValue { value, holds })
}

/// Condition (**): `δ11/(δ11+δ21) + δ22/(δ22+δ12) < 1/2`.
pub fn check_starstar(inst: &KurodaInstance) -> Result<ConditionValue> {
    if !inst.is_three_variable() {
        return Err(Error::Precondition(format!(
            "condition (**) needs n = 3, got n = {}",
            inst.n
        )));
    }
    let value = starstar_value(&inst.delta);
    let holds = value < rat(1, 2);
    Ok(ConditionValue { value, holds })
}

/// One scanned `δ` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub delta: Vec<Vec<i64>>,
    pub value: BigRational,
    pub det: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub bound: i64,
    pub instances: usize,
    /// Condition holds but `det T = 0`.
    pub violations: Vec<ScanEntry>,
    /// `det T ≠ 0` but the condition fails.
    pub converse: Vec<ScanEntry>,
}

/// Scans every `δ` block with entries in `[1, bound]` (`δ_i4 = 0` for
/// `n = 4`) and checks that the condition forces `det T ≠ 0`.
pub fn implication_scan(n: usize, bound: i64) -> Result<ScanReport> {
    let m = match n {
        3 => 2,
        4 => 3,
        _ => return Err(Error::Usage(format!("scan supports n = 3 or 4, got {n}"))),
    };
    if bound < 1 {
        return Err(Error::Usage(format!("scan bound {bound} must be ≥ 1")));
    }
    let cells = (m * m) as u32;
    let total = (bound as u64)
        .checked_pow(cells)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| Error::Usage(format!("scan box with bound {bound} is too large")))?;
    let entries: Vec<(bool, ScanEntry)> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let mut k = idx;
            let delta: Vec<Vec<i64>> = (0..m)
                .map(|_| {
                    (0..m)
                        .map(|_| {
                            let v = (k % bound as u64) as i64 + 1;
                            k /= bound as u64;
                            v
                        })
                        .collect()
                })
                .collect();
            let t: Vec<Vec<i64>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| if i == j { -delta[i][j] } else { delta[i][j] })
                        .collect()
                })
                .collect();
            let d = det(&IntMatrix::from_rows(&t).expect("square")).expect("square");
            let (value, holds) = if n == 3 {
                let v = starstar_value(&delta);
                let h = v < rat(1, 2);
                (v, h)
            } else {
                let v: BigRational = xi_values(&delta).into_iter().sum();
                let h = v < BigRational::one();
                (v, h)
            };
            let entry = ScanEntry {
                delta,
                value,
                det: d.clone(),
            };
            if holds && d.is_zero() {
                Some((true, entry))
            } else if !holds && !d.is_zero() {
                Some((false, entry))
            } else {
                None
            }
        })
        .collect();
    let (violations, converse): (Vec<_>, Vec<_>) = entries.into_iter().partition(|(v, _)| *v);
    Ok(ScanReport {
        n,
        bound,
        instances: total as usize,
        violations: violations.into_iter().map(|(_, e)| e).collect(),
        converse: converse.into_iter().map(|(_, e)| e).collect(),
    })
}

/// `p = p₁ + p₂ + p₃` with every `p_i ≥ pξ_i` and `p_i ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents {
    pub p: i64,
    pub parts: [i64; 3],
}

fn ceil_i64(x: &BigRational) -> i64 {
    x.ceil().to_integer().to_i64().expect("small")
}

/// Least `p` with `p(1 − Σξ) ≥ 3`; `p₁, p₂` are `⌈pξ_i⌉` (at least 1) and
/// `p₃` takes the remainder.
pub fn lemma31_find_p(xi: &[BigRational]) -> Result<Exponents> {
    if xi.len() != 3 {
        return Err(Error::Shape(format!(
            "expected three ratios, got {}",
            xi.len()
        )));
    }
    if let Some(x) = xi
        .iter()
        .find(|x| !x.is_positive() || **x >= BigRational::one())
    {
        return Err(Error::Precondition(format!("ratio {x} is not in (0, 1)")));
    }
    let sum: BigRational = xi.iter().sum();
    let slack = BigRational::one() - &sum;
    if !slack.is_positive() {
        return Err(Error::Condition(format!("ξ₁ + ξ₂ + ξ₃ = {sum} is not < 1")));
    }
    let p = ceil_i64(&(BigRational::from_integer(3.into()) / slack));
    let pq = BigRational::from_integer(p.into());
    let p1 = ceil_i64(&(&pq * &xi[0])).max(1);
    let p2 = ceil_i64(&(&pq * &xi[1])).max(1);
    let p3 = p - p1 - p2;
    if p3 < 1 || BigRational::from_integer(p3.into()) < &pq * &xi[2] {
        return Err(Error::Condition(format!(
            "no split of p = {p} satisfies the bounds"
        )));
    }
    Ok(Exponents {
        p,
        parts: [p1, p2, p3],
    })
}

/// Splits `d = p̄₂ + p̄₃` with the strict bounds `p̄₂ > p̄ξ₂`, `p̄₃ > p̄ξ₃`,
/// taking `p̄₂` as small as possible.
pub fn split_strict(d: i64, pbar: i64, xi2: &BigRational, xi3: &BigRational) -> Result<(i64, i64)> {
    let pq = BigRational::from_integer(pbar.into());
    let p2 = (&pq * xi2).floor().to_integer().to_i64().expect("small") + 1;
    let p3 = d - p2;
    if BigRational::from_integer(p3.into()) <= &pq * xi3 {
        return Err(Error::Condition(format!(
            "d = {d} cannot be split strictly above p̄ξ for p̄ = {pbar}"
        )));
    }
    Ok((p2, p3))
}

/// A product of `Y`-binomials and its image in `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub in_y: LaurentPoly,
    pub in_x: LaurentPoly,
}

impl Certificate {
    pub fn is_polynomial(&self) -> bool {
        self.in_x.is_polynomial()
    }

    /// Every support vector has nonnegative `X₂` and `X₃` exponents.
    pub fn x2_x3_nonnegative(&self) -> bool {
        self.in_x.support().iter().all(|e| e[1] >= 0 && e[2] >= 0)
    }
}

fn require_n4(inst: &KurodaInstance) -> Result<()> {
    if inst.n != 4 {
        return Err(Error::Precondition(format!(
            "certificate polynomials need n = 4, got n = {}",
            inst.n
        )));
    }
    Ok(())
}

fn y_product(inst: &KurodaInstance, factors: &[((usize, usize), i64)]) -> Result<Certificate> {
    let mut acc = LaurentPoly::one(inst.n, inst.field);
    for &((a, b), e) in factors {
        if e < 0 {
            return Err(Error::Usage(format!("negative exponent {e}")));
        }
        let ya = LaurentPoly::variable(inst.n, a, inst.field);
        let yb = LaurentPoly::variable(inst.n, b, inst.field);
        acc = &acc * &(&ya - &yb).pow(e as u32);
    }
    let in_x = acc.substitute(&inst.y_images)?;
    Ok(Certificate { in_y: acc, in_x })
}

/// `f₀ = (Y₃−Y₂)^{p₁} (Y₃−Y₁)^{p₂} (Y₂−Y₁)^{p₃}`.
pub fn build_f0(inst: &KurodaInstance, p1: i64, p2: i64, p3: i64) -> Result<Certificate> {
    require_n4(inst)?;
    y_product(inst, &[((2, 1), p1), ((2, 0), p2), ((1, 0), p3)])
}

/// `G = (Y₃−Y₂)^s (Y₃−Y₁)^{p̄₂} (Y₂−Y₁)^{p̄₃} (Y₄−Y₁)^e`.
pub fn build_g(
    inst: &KurodaInstance,
    s: i64,
    pbar2: i64,
    pbar3: i64,
    e: i64,
) -> Result<Certificate> {
    require_n4(inst)?;
    y_product(
        inst,
        &[((2, 1), s), ((2, 0), pbar2), ((1, 0), pbar3), ((3, 0), e)],
    )
}

/// Outcome of the three polynomial identities behind the integrality of
/// `X₃^γ` over `K[π₁, π₂, π₃]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    /// `π₂ − π₁ + X₁^{δ21}X₂^{−δ22} = X₃^γ`
    pub shift: bool,
    /// `π₁² + π₃ = X₁^{2δ21}X₂^{−2δ22}`
    pub square: bool,
    /// `X₃^{2γ} + 2(π₁−π₂)X₃^γ + (π₁−π₂)² − (π₁² + π₃) = 0`
    pub integral: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.shift && self.square && self.integral
    }
}

/// Checks the identities for the instance's own `π`.
pub fn verify_t214(inst: &KurodaInstance) -> Result<IdentityCheck> {
    verify_t214_with(inst, inst.pi())
}

/// Checks the identities with caller-supplied `π₁, π₂, π₃` (used for
/// mutation controls).
pub fn verify_t214_with(inst: &KurodaInstance, pi: &[LaurentPoly]) -> Result<IdentityCheck> {
    if !inst.is_three_variable() || pi.len() != 3 {
        return Err(Error::Precondition(
            "identities need the three-variable family".into(),
        ));
    }
    let f = inst.field;
    let d = &inst.delta;
    let x3g = monomial(vec![0, 0, inst.gamma[0]], f);
    let y2 = monomial(vec![d[1][0], -d[1][1], 0], f);
    let (p1, p2, p3) = (&pi[0], &pi[1], &pi[2]);
    let shift = p2
        .checked_sub(p1)?
        .checked_add(&y2)?
        .checked_sub(&x3g)?
        .is_zero();
    let sq = p1.pow(2).checked_add(p3)?;
    let square = sq.checked_sub(&y2.pow(2))?.is_zero();
    let diff = p1.checked_sub(p2)?;
    let integral = x3g
        .pow(2)
        .checked_add(&(&diff * &x3g).scale(&f.from_i64(2)))?
        .checked_add(&diff.pow(2))?
        .checked_sub(&sq)?
        .is_zero();
    Ok(IdentityCheck {
        shift,
        square,
        integral,
    })
}

/// Unit-row witness `M₁^{s₁} ⋯ M_{n−1}^{s_{n−1}} = X_i^{m}` for the Laurent
/// monomials `M_j = X^{row j of T}`, with the identity re-checked by
/// substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitRowWitness {
    pub index: usize,
    pub solution: UnitRowSolution,
    pub verified: bool,
}

pub fn unit_row_witness(inst: &KurodaInstance, i: usize) -> Result<UnitRowWitness> {
    let solution = solve_unit_row(&inst.t, i)?;
    let m = inst.n - 1;
    let exps: Vec<i64> = solution
        .row
        .iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::Usage("unit-row solution too large".into()))
        })
        .collect::<Result<_>>()?;
    let product = monomial(exps, inst.field);
    let images: Vec<LaurentPoly> = inst
        .t
        .rows_iter()
        .map(|r| {
            monomial(
                r.iter().map(|x| x.to_i64().expect("small")).collect(),
                inst.field,
            )
        })
        .collect();
    let lhs = product.substitute(&images)?;
    let mut target = vec![0; m];
    target[i] = solution
        .multiplier
        .to_i64()
        .ok_or_else(|| Error::Usage("multiplier too large".into()))?;
    let verified = lhs == monomial(target, inst.field);
    Ok(UnitRowWitness {
        index: i,
        solution,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    pub(crate) fn ones4() -> KurodaInstance {
        KurodaInstance::new(4, &[1], &vec![vec![1; 3]; 3], q()).unwrap()
    }

    pub(crate) fn off3() -> KurodaInstance {
        let d = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        KurodaInstance::new(4, &[1], &d, q()).unwrap()
    }

    #[test]
    fn general_family_pi() {
        let inst = ones4();
        let want = LaurentPoly::from_int_terms(4, q(), &[(1, &[0, 0, 0, 1]), (-1, &[-1, 1, 1, 0])])
            .unwrap();
        assert_eq!(inst.pi()[0], want);
        assert_eq!(inst.det_t(), BigInt::from(4));
        assert_eq!(inst.pi_weights(), vec![1, 1, 1]);
    }

    #[test]
    fn three_variable_pi() {
        let inst = KurodaInstance::new(3, &[1], &[vec![1, 1], vec![1, 1]], q()).unwrap();
        let want =
            LaurentPoly::from_int_terms(3, q(), &[(2, &[0, 0, 0]), (-1, &[-2, 2, 0])]).unwrap();
        assert_eq!(inst.pi()[2], want);
        assert_eq!(inst.pi_weights(), vec![1, 1, 2]);

        // π₁ from the closed formula with unequal δ
        let inst = KurodaInstance::new(3, &[2], &[vec![2, 1], vec![1, 3]], q()).unwrap();
        let want =
            LaurentPoly::from_int_terms(3, q(), &[(1, &[1, -3, 0]), (-1, &[-2, 1, 0])]).unwrap();
        assert_eq!(inst.pi()[0], want);
    }

    #[test]
    fn validation_names_the_entry() {
        let err = KurodaInstance::new(4, &[1], &[vec![0, 1, 1], vec![1, 1, 1], vec![1, 1, 1]], q())
            .unwrap_err();
        assert!(matches!(err, Error::Validation(ref s) if s.contains("delta[1][1]")));
        assert!(KurodaInstance::new(4, &[0], &vec![vec![1; 3]; 3], q()).is_err());
        assert!(
            KurodaInstance::new(4, &[1], &[vec![1, 1, 1, -1], vec![1; 4], vec![1; 4]], q())
                .is_err()
        );
        let with_x4 =
            KurodaInstance::new(4, &[1], &[vec![1, 1, 1, 2], vec![1; 4], vec![1; 4]], q());
        assert!(with_x4.is_ok());
    }

    #[test]
    fn unequal_gamma_grading() {
        let inst = KurodaInstance::new(4, &[2, 4, 6], &vec![vec![1; 3]; 3], q()).unwrap();
        assert_eq!(inst.y_weights(), &[1, 2, 3, 1]);
        assert_eq!(inst.pi_weights(), vec![1, 2, 3]);
        let want = LaurentPoly::from_int_terms(4, q(), &[(1, &[0, 0, 0, 4]), (-1, &[1, -1, 1, 0])])
            .unwrap();
        assert_eq!(inst.pi()[1], want);
    }

    #[test]
    fn star_values() {
        let c = check_star(&ones4()).unwrap();
        assert_eq!((c.value, c.holds), (rat(3, 2), false));
        let c = check_star(&off3()).unwrap();
        assert_eq!((c.value, c.holds), (rat(3, 4), true));
        let d = vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]];
        let c = check_star(&KurodaInstance::new(4, &[1], &d, q()).unwrap()).unwrap();
        assert_eq!((c.value, c.holds), (BigRational::one(), false));
    }

    #[test]
    fn starstar_values() {
        let inst = KurodaInstance::new(3, &[1], &[vec![3, 1], vec![1, 1]], q()).unwrap();
        let c = check_starstar(&inst).unwrap();
        assert_eq!((c.value, c.holds), (rat(5, 4), false));
        assert_eq!(inst.det_t(), BigInt::from(2));
        let inst = KurodaInstance::new(3, &[1], &[vec![1, 9], vec![9, 1]], q()).unwrap();
        let c = check_starstar(&inst).unwrap();
        assert_eq!((c.value, c.holds), (rat(1, 5), true));
        let inst = KurodaInstance::new(3, &[1], &[vec![1, 1], vec![1, 1]], q()).unwrap();
        assert!(!check_starstar(&inst).unwrap().holds);
        assert!(check_star(&inst).is_err());
    }

    #[test]
    fn scan_examples() {
        let r = implication_scan(3, 1).unwrap();
        assert_eq!(r.instances, 1);
        assert!(r.violations.is_empty() && r.converse.is_empty());
        let r = implication_scan(3, 3).unwrap();
        assert!(r
            .converse
            .iter()
            .any(|e| e.delta == vec![vec![3, 1], vec![1, 1]] && e.det == BigInt::from(2)));
        let r = implication_scan(4, 2).unwrap();
        assert_eq!(r.instances, 512);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn find_p_examples() {
        let e = lemma31_find_p(&[rat(1, 4), rat(1, 4), rat(1, 4)]).unwrap();
        assert_eq!((e.p, e.parts), (12, [3, 3, 6]));
        let e = lemma31_find_p(&[rat(1, 8), rat(1, 8), rat(1, 8)]).unwrap();
        assert_eq!((e.p, e.parts), (5, [1, 1, 3]));
        assert!(matches!(
            lemma31_find_p(&[rat(1, 2), rat(1, 4), rat(1, 4)]),
            Err(Error::Condition(_))
        ));
    }

    #[test]
    fn f0_and_g() {
        let inst = off3();
        let f0 = build_f0(&inst, 3, 3, 6).unwrap();
        assert!(f0.is_polynomial());
        let one = build_f0(&inst, 0, 0, 0).unwrap();
        assert_eq!(one.in_x, LaurentPoly::one(4, q()));
        let bad = build_f0(&ones4(), 1, 1, 1).unwrap();
        assert!(!bad.is_polynomial());

        let g = build_g(&inst, 3, 3, 6, 0).unwrap();
        assert_eq!(g, f0);
        let g = build_g(&inst, 3, 3, 6, 1).unwrap();
        assert!(g.x2_x3_nonnegative());
        assert_eq!(
            build_g(&inst, 0, 0, 0, 0).unwrap().in_x,
            LaurentPoly::one(4, q())
        );
    }

    #[test]
    fn strict_split() {
        // p̄ = 12, ξ = 1/4: p̄₂ = 4 > 3 and p̄₃ = 4 > 3
        assert_eq!(split_strict(8, 12, &rat(1, 4), &rat(1, 4)).unwrap(), (4, 4));
        assert!(split_strict(7, 12, &rat(1, 4), &rat(1, 4)).is_err());
    }

    #[test]
    fn identities_and_mutation() {
        let inst = KurodaInstance::new(3, &[1], &[vec![1, 1], vec![1, 1]], q()).unwrap();
        assert!(verify_t214(&inst).unwrap().holds());
        let inst = KurodaInstance::new(3, &[2], &[vec![2, 1], vec![1, 3]], q()).unwrap();
        assert!(verify_t214(&inst).unwrap().holds());
        let mut pi = inst.pi().to_vec();
        let d = inst.delta();
        pi[2] = LaurentPoly::from_int_terms(
            3,
            q(),
            &[
                (3, &[d[1][0] - d[0][0], d[0][1] - d[1][1], 0]),
                (-1, &[-2 * d[0][0], 2 * d[0][1], 0]),
            ],
        )
        .unwrap();
        assert!(!verify_t214_with(&inst, &pi).unwrap().holds());
    }

    #[test]
    fn unit_rows() {
        for i in 0..3 {
            let w = unit_row_witness(&off3(), i).unwrap();
            assert!(w.verified);
            assert!(w.solution.multiplier > BigInt::zero());
        }
        let singular = KurodaInstance::new(3, &[1], &[vec![1, 1], vec![1, 1]], q()).unwrap();
        assert!(matches!(
            unit_row_witness(&singular, 0),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn xi_matches_star() {
        let inst = off3();
        assert_eq!(inst.xi().unwrap(), vec![rat(1, 4); 3]);
    }
}
