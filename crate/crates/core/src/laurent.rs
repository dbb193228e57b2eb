//! Exact Laurent polynomials in one variable `A` with `i64` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "TermList", into = "TermList")]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

/// Wire form: `{"terms": [[exponent, coefficient], ...]}`, exponents ascending.
#[derive(Serialize, Deserialize)]
struct TermList {
    terms: Vec<(i64, i64)>,
}

impl From<TermList> for LaurentPolynomial {
    fn from(t: TermList) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in t.terms {
            p.add_term(e, c);
        }
        p
    }
}

impl From<LaurentPolynomial> for TermList {
    fn from(p: LaurentPolynomial) -> Self {
        TermList {
            terms: p.coeffs.into_iter().collect(),
        }
    }
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coefficient * A^exponent`.
    pub fn monomial(coefficient: i64, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    fn checked_add_term(&mut self, exponent: i64, coefficient: i64) -> Result<()> {
        if coefficient == 0 {
            return Ok(());
        }
        let slot = self.coeffs.entry(exponent).or_insert(0);
        *slot = slot
            .checked_add(coefficient)
            .ok_or(Error::CoefficientOverflow)?;
        if *slot == 0 {
            self.coeffs.remove(&exponent);
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `A^exponent` (0 when absent).
    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs, exponents ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// `max_degree - min_degree`; 0 for a monomial.
    pub fn span(&self) -> Result<u64> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => Ok((hi - lo) as u64),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// Multiply by `A^k`.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitute `A -> A^-1`.
    pub fn inverted(&self) -> Self {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// `self * factor`, failing on overflow.
    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        let mut out = Self::zero();
        for (&e, &c) in &self.coeffs {
            out.checked_add_term(e, c.checked_mul(factor).ok_or(Error::CoefficientOverflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.checked_add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                out.checked_add_term(
                    e1 + e2,
                    c1.checked_mul(c2).ok_or(Error::CoefficientOverflow)?,
                )?;
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, exp: u32) -> Result<Self> {
        let mut out = Self::one();
        for _ in 0..exp {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Highest degree first, e.g. `-A^5 - A^-3 + A^-7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (mag, e) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("A")?,
                (1, _) => write!(f, "A^{e}")?,
                (_, 1) => write!(f, "{mag}A")?,
                _ => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_squared() {
        let d = LaurentPolynomial::delta();
        let d2 = &d * &d;
        assert_eq!(d2, LaurentPolynomial::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(d.checked_pow(2).unwrap(), d2);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPolynomial::from_terms([(3, 2), (1, -1)]);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.term_count(), 0);
        assert_eq!(q.span(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn span_and_degrees() {
        let p = LaurentPolynomial::from_terms([(-7, 1), (-3, -1), (5, -1)]);
        assert_eq!(p.span().unwrap(), 12);
        assert_eq!(p.max_degree(), Some(5));
        assert_eq!(LaurentPolynomial::monomial(-1, 3).span().unwrap(), 0);
        assert_eq!(p.inverted().max_degree(), Some(7));
        assert_eq!(p.shifted(2).min_degree(), Some(-5));
    }

    #[test]
    fn display() {
        let p = LaurentPolynomial::from_terms([(-7, 1), (-3, -1), (5, -1), (0, 3), (1, 2)]);
        assert_eq!(p.to_string(), "-A^5 + 2A + 3 - A^-3 + A^-7");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let p = LaurentPolynomial::from_terms([(4, -1), (-4, 2)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[[-4,2],[4,-1]]}"#);
        let back: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn overflow_is_reported() {
        let big = LaurentPolynomial::monomial(i64::MAX, 0);
        assert_eq!(big.checked_add(&big), Err(Error::CoefficientOverflow));
        assert_eq!(big.checked_scale(2), Err(Error::CoefficientOverflow));
    }
}
