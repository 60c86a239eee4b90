//! Line-oriented text form of Laurent polynomials.
//!
//! A nonzero polynomial is written as its terms in ascending lexicographic
//! exponent order, joined by ` + `. Each term is `coef * X1^e1 X2^e2 … Xn^en`
//! with every variable listed (zero exponents included), so the arity is
//! explicit. Rational coefficients print as `p` or `p/q`, residues as their
//! representative in `[0, p)`. The zero polynomial is `0`.

use super::{ExponentVector, Field, LaurentPoly};
use crate::error::{Error, Result};

impl LaurentPoly {
    /// Serializes with variables named `<prefix>1 … <prefix>n`.
    pub fn to_text_with_prefix(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&c.to_string());
            if self.nvars() > 0 {
                out.push_str(" *");
                for (i, a) in e.iter().enumerate() {
                    out.push_str(&format!(" {prefix}{}^{a}", i + 1));
                }
            }
        }
        out
    }

    /// Parses the text form. The variable prefix may be any run of ASCII
    /// letters, but indices must run `1..=nvars` in order.
    pub fn from_text(text: &str, nvars: usize, field: Field) -> Result<LaurentPoly> {
        let text = text.trim();
        if text == "0" {
            return Ok(LaurentPoly::zero(nvars, field));
        }
        let mut terms = Vec::new();
        for term in text.split(" + ") {
            let (coef, vars) = match term.split_once(" * ") {
                Some((c, v)) => (c.trim(), Some(v)),
                None => (term.trim(), None),
            };
            let c = field.parse_scalar(coef)?;
            let exps = match vars {
                None if nvars == 0 => Vec::new(),
                None => {
                    return Err(Error::Parse(format!("term {term:?} lists no variables")));
                }
                Some(v) => parse_vars(v, nvars)?,
            };
            terms.push((ExponentVector(exps), c));
        }
        LaurentPoly::from_terms(nvars, field, terms)
    }
}

fn parse_vars(s: &str, nvars: usize) -> Result<Vec<i64>> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    if toks.len() != nvars {
        return Err(Error::Parse(format!(
            "expected {nvars} variables in {s:?}, found {}",
            toks.len()
        )));
    }
    toks.iter()
        .enumerate()
        .map(|(i, tok)| {
            let bad = || Error::Parse(format!("bad variable token {tok:?}"));
            let (name, exp) = tok.split_once('^').ok_or_else(bad)?;
            let idx_start = name.find(|ch: char| ch.is_ascii_digit()).ok_or_else(bad)?;
            let (prefix, idx) = name.split_at(idx_start);
            if prefix.is_empty() || !prefix.chars().all(|ch| ch.is_ascii_alphabetic()) {
                return Err(bad());
            }
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx != i + 1 {
                return Err(Error::Parse(format!(
                    "variable {tok:?} out of order; expected index {}",
                    i + 1
                )));
            }
            exp.parse::<i64>().map_err(|_| bad())
        })
        .collect()
}
