//! Sparse multivariate Laurent polynomials over exact coefficient fields.
//!
//! A [`LaurentPoly`] is a finite map from integer exponent vectors (entries
//! may be negative) to nonzero field elements. Terms are always iterated in
//! ascending lexicographic order of their exponent vectors, which is also the
//! order used by the text serialization.

mod scalar;
mod text;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

pub use scalar::{rational_sign, Field, Scalar};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Integer exponent tuple of a Laurent monomial. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when every coordinate is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(a, w)| a * w).sum()
    }
}

impl Deref for ExponentVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector(v.to_vec())
    }
}

/// Element of `K[X_1^{±1}, …, X_n^{±1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize, field: Field) -> Self {
        LaurentPoly {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Self::constant(nvars, field.one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// `c · X^exps`; the zero polynomial when `c` is zero.
    pub fn monomial(exps: ExponentVector, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero(exps.len(), c.field());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `X_{i+1}` (zero-based index `i`).
    pub fn variable(nvars: usize, i: usize, field: Field) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), field.one())
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Scalar)>,
    {
        let mut p = LaurentPoly::zero(nvars, field);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Usage(format!(
                    "exponent vector of length {} in a ring with {nvars} variables",
                    e.len()
                )));
            }
            if c.field() != field {
                return Err(Error::Usage(format!(
                    "coefficient over {} in a polynomial over {field}",
                    c.field()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, field: Field, terms: &[(i64, &[i64])]) -> Result<Self> {
        Self::from_terms(
            nvars,
            field,
            terms
                .iter()
                .map(|(c, e)| (ExponentVector::from(*e), field.from_i64(*c))),
        )
    }

    fn add_term(&mut self, e: ExponentVector, c: Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Scalar> {
        self.terms.get(e)
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    /// The single term, if the polynomial has exactly one.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Exactly the exponent vectors carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// True iff no exponent in the support is negative, i.e. `f ∈ K[X]`.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonnegative())
    }

    fn compatible(&self, other: &LaurentPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Usage(format!(
                "ambient mismatch: {} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        if self.field != other.field {
            return Err(Error::Usage(format!(
                "field mismatch: {} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.compatible(other)?;
        if let Some(p) = self.integer_mul(other) {
            return Ok(p);
        }
        let mut acc: HashMap<ExponentVector, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let prod = ca * cb;
                let key = ea.add(eb);
                match acc.get_mut(&key) {
                    Some(c) => *c = &*c + &prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            field: self.field,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// Product over `Q` with integer coefficients, accumulated in `BigInt`
    /// to skip the gcd work of rational arithmetic. `None` otherwise.
    fn integer_mul(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        fn ints(p: &LaurentPoly) -> Option<Vec<(&ExponentVector, &BigInt)>> {
            p.terms
                .iter()
                .map(|(e, c)| match c {
                    Scalar::Rational(r) if r.is_integer() => Some((e, r.numer())),
                    _ => None,
                })
                .collect()
        }
        let (a, b) = (ints(self)?, ints(other)?);
        let mut acc: HashMap<ExponentVector, BigInt> = HashMap::with_capacity(a.len() * b.len());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let prod = *ca * *cb;
                *acc.entry(ea.add(eb)).or_default() += prod;
            }
        }
        Some(LaurentPoly {
            nvars: self.nvars,
            field: self.field,
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, Scalar::Rational(BigRational::from_integer(c))))
                .collect(),
        })
    }

    pub fn pow(&self, mut k: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut out = LaurentPoly::one(self.nvars, self.field);
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars, self.field);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Image under the monomial homomorphism `Y_j ↦ images[j]`.
    ///
    /// `self` lives over the `Y` variables; each image must be a single
    /// Laurent term over a common `X` ring with the same field.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.nvars {
            return Err(Error::Usage(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let Some(first) = images.first() else {
            // no variables: f is a constant
            return Ok(self.clone());
        };
        let target_n = first.nvars;
        let mut monos = Vec::with_capacity(images.len());
        for (j, img) in images.iter().enumerate() {
            if img.nvars != target_n || img.field != self.field {
                return Err(Error::Usage(format!("image {j} lives in a different ring")));
            }
            let (e, c) = img.as_monomial().ok_or_else(|| {
                Error::Usage(format!(
                    "image {j} is not a monomial; only monomial substitution is supported"
                ))
            })?;
            monos.push((e.clone(), c.clone()));
        }
        let mut out = LaurentPoly::zero(target_n, self.field);
        for (b, c) in &self.terms {
            let mut exp = ExponentVector::zero(target_n);
            let mut coef = c.clone();
            for (k, (e, ci)) in b.iter().zip(&monos) {
                if *k == 0 {
                    continue;
                }
                exp = exp.add(&e.scale(*k));
                if !ci.is_one() {
                    let base = if *k < 0 { ci.inv() } else { ci.clone() };
                    coef = &coef * &base.pow(k.unsigned_abs());
                }
            }
            out.add_term(exp, coef);
        }
        Ok(out)
    }

    /// `∂f/∂X_{i+1}`, term by term; exponents may be negative.
    pub fn partial_derivative(&self, i: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars, self.field);
        for (e, c) in &self.terms {
            let a = e[i];
            if a == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.0[i] -= 1;
            out.add_term(e2, c * &self.field.from_i64(a));
        }
        out
    }

    /// Splits `f` into weighted-homogeneous parts keyed by weighted degree.
    pub fn grade_by(&self, weights: &[i64]) -> Result<BTreeMap<i64, LaurentPoly>> {
        if weights.len() != self.nvars {
            return Err(Error::Shape(format!(
                "{} weights for {} variables",
                weights.len(),
                self.nvars
            )));
        }
        let mut parts: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            parts
                .entry(e.dot(weights))
                .or_insert_with(|| LaurentPoly::zero(self.nvars, self.field))
                .terms
                .insert(e.clone(), c.clone());
        }
        Ok(parts)
    }

    /// The weighted degree if `f` is nonzero and weighted-homogeneous.
    pub fn homogeneous_degree(&self, weights: &[i64]) -> Option<i64> {
        let mut degs = self.terms.keys().map(|e| e.dot(weights));
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }
}

/// All nonnegative exponent vectors of weighted degree `d`, in ascending
/// lexicographic order. Weights must be positive.
pub fn weighted_monomials(weights: &[i64], d: i64) -> Vec<ExponentVector> {
    fn go(weights: &[i64], i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if i == weights.len() {
            if left == 0 {
                out.push(ExponentVector(cur.clone()));
            }
            return;
        }
        for a in 0..=left / weights[i] {
            cur.push(a);
            go(weights, i + 1, left - a * weights[i], cur, out);
            cur.pop();
        }
    }
    assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
    let mut out = Vec::new();
    if d >= 0 {
        go(weights, 0, d, &mut Vec::new(), &mut out);
    }
    out
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on mismatched rings; see [`LaurentPoly::checked_add`].
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(&self.field.from_i64(-1))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with_prefix("X"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn p(n: usize, terms: &[(i64, &[i64])]) -> LaurentPoly {
        LaurentPoly::from_int_terms(n, Q, terms).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = p(2, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(&a * &b, p(2, &[(1, &[2, 0]), (-1, &[0, 2])]));
    }

    #[test]
    fn laurent_cancellation() {
        let x = p(1, &[(1, &[1])]);
        let xinv = p(1, &[(1, &[-1])]);
        assert_eq!(&x * &xinv, LaurentPoly::one(1, Q));
    }

    #[test]
    fn square_of_binomial_ratio() {
        let f = p(2, &[(1, &[1, -1]), (-1, &[-1, 1])]);
        let sq = f.pow(2);
        assert_eq!(sq, p(2, &[(1, &[2, -2]), (-2, &[0, 0]), (1, &[-2, 2])]));
        let supp: Vec<_> = sq.support().into_iter().map(|e| e.0).collect();
        assert_eq!(supp, vec![vec![-2, 2], vec![0, 0], vec![2, -2]]);
    }

    #[test]
    fn mismatched_rings_are_errors() {
        let a = LaurentPoly::one(2, Q);
        let b = LaurentPoly::one(3, Q);
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
        let c = LaurentPoly::one(2, Field::Prime(5));
        assert!(matches!(a.checked_mul(&c), Err(Error::Usage(_))));
    }

    #[test]
    fn substitution_examples() {
        // Y4 - Y1 with Y1 = X1^-1 X2 X3, Y4 = X4
        let f = p(4, &[(1, &[0, 0, 0, 1]), (-1, &[1, 0, 0, 0])]);
        let imgs = vec![
            p(4, &[(1, &[-1, 1, 1, 0])]),
            p(4, &[(1, &[1, -1, 1, 0])]),
            p(4, &[(1, &[1, 1, -1, 0])]),
            p(4, &[(1, &[0, 0, 0, 1])]),
        ];
        let img = f.substitute(&imgs).unwrap();
        assert_eq!(img, p(4, &[(1, &[0, 0, 0, 1]), (-1, &[-1, 1, 1, 0])]));
        let supp: Vec<_> = img.support().into_iter().map(|e| e.0).collect();
        assert_eq!(supp, vec![vec![-1, 1, 1, 0], vec![0, 0, 0, 1]]);

        // identity substitution
        let ids: Vec<_> = (0..4).map(|i| LaurentPoly::variable(4, i, Q)).collect();
        assert_eq!(f.substitute(&ids).unwrap(), f);

        // colliding images cancel
        let g = p(2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let same = vec![p(2, &[(1, &[1, -1])]), p(2, &[(1, &[1, -1])])];
        assert!(g.substitute(&same).unwrap().is_zero());
    }

    #[test]
    fn substitution_rejects_non_monomials() {
        let f = LaurentPoly::variable(1, 0, Q);
        let img = p(1, &[(1, &[1]), (1, &[0])]);
        assert!(matches!(f.substitute(&[img]), Err(Error::Usage(_))));
    }

    #[test]
    fn substitution_with_coefficients_and_inverse_powers() {
        // Y^-2 with Y = 2X  ->  1/4 X^-2
        let f = p(1, &[(1, &[-2])]);
        let img = p(1, &[(2, &[1])]);
        let out = f.substitute(&[img]).unwrap();
        assert_eq!(out.to_string(), "1/4 * X1^-2");
    }

    #[test]
    fn polynomial_detection() {
        assert!(!p(2, &[(1, &[-1, 1])]).is_polynomial());
        assert!(p(2, &[(5, &[0, 0])]).is_polynomial());
        assert!(LaurentPoly::zero(3, Q).is_polynomial());
    }

    #[test]
    fn derivatives() {
        let x2 = p(1, &[(1, &[2])]);
        assert_eq!(x2.partial_derivative(0), p(1, &[(2, &[1])]));
        let xinv = p(1, &[(1, &[-1])]);
        assert_eq!(xinv.partial_derivative(0), p(1, &[(-1, &[-2])]));
        let f2 = LaurentPoly::from_int_terms(1, Field::Prime(2), &[(1, &[2])]).unwrap();
        assert!(f2.partial_derivative(0).is_zero());
    }

    #[test]
    fn grading() {
        let f = p(2, &[(1, &[2, 0]), (1, &[1, 1])]);
        let g = f.grade_by(&[1, 1]).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&2], f);

        // x - a^2 over (a, b, c, x) with weights (1, 1, 1, 2)
        let h = p(4, &[(1, &[0, 0, 0, 1]), (-1, &[2, 0, 0, 0])]);
        let g = h.grade_by(&[1, 1, 1, 2]).unwrap();
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![2]);

        let k = p(2, &[(1, &[1, 0]), (1, &[0, 2])]);
        let g = k.grade_by(&[1, 1]).unwrap();
        assert_eq!(g[&1], p(2, &[(1, &[1, 0])]));
        assert_eq!(g[&2], p(2, &[(1, &[0, 2])]));
        assert!(k.grade_by(&[1]).is_err());
    }

    #[test]
    fn weighted_monomial_counts() {
        assert_eq!(weighted_monomials(&[1, 1, 1, 1], 3).len(), 20);
        assert_eq!(weighted_monomials(&[1, 1, 1, 2], 2).len(), 7);
        assert_eq!(weighted_monomials(&[2], 3), Vec::<ExponentVector>::new());
        assert_eq!(
            weighted_monomials(&[1, 1], 0),
            vec![ExponentVector(vec![0, 0])]
        );
        let m = weighted_monomials(&[1, 2], 4);
        assert!(m.windows(2).all(|w| w[0] < w[1]));
    }
}
