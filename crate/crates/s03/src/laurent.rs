//! Laurent polynomials over an arbitrary exact coefficient ring.
//!
//! The spectral parameter x enters every formula through s = x^(1/2), so a
//! matrix entry like (x+1)/√(2x) is the genuine Laurent polynomial
//! (s + s⁻¹)/√2. Two-variable identities use `Laurent<Laurent<K>>`, the
//! outer variable being s = x^(1/2) and the inner t = y^(1/2).

use crate::scalar::{Field, FieldK, Ring};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial Σ cₖ·sᵏ with exact coefficients and no stored zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Laurent<T> {
    coeffs: BTreeMap<i64, T>,
}

pub type LaurentK = Laurent<FieldK>;
/// Two-variable Laurent polynomials; coefficients of the outer variable are
/// Laurent polynomials in the inner one.
pub type Laurent2 = Laurent<LaurentK>;

impl<T: Ring> Laurent<T> {
    pub fn new() -> Self {
        Laurent {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::term(0, c)
    }

    pub fn term(exp: i64, c: T) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Laurent { coeffs }
    }

    /// The variable itself, s.
    pub fn var() -> Self {
        Self::term(1, T::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::new();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.coeffs.insert(exp, s);
                }
            }
        }
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.coeffs.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &T)> {
        self.coeffs.iter()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.coeffs.contains_key(&0))
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    /// Multiply by sᵏ (shift every exponent).
    pub fn shifted(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        let mut out = Self::new();
        for (e, a) in &self.coeffs {
            out.add_term(*e, a.clone() * c.clone());
        }
        out
    }

    /// Formal derivative d/ds.
    pub fn derivative(&self) -> Self {
        let mut out = Self::new();
        for (e, c) in &self.coeffs {
            out.add_term(e - 1, c.clone() * T::from_int(*e));
        }
        out
    }

    pub fn map_coeffs<U: Ring>(&self, f: impl Fn(&T) -> U) -> Laurent<U> {
        let mut out = Laurent::new();
        for (e, c) in &self.coeffs {
            out.add_term(*e, f(c));
        }
        out
    }
}

impl<T: Ring> Default for Laurent<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Field> Laurent<T> {
    /// Exact substitution s = s0. Fails only when a negative exponent meets
    /// s0 = 0.
    pub fn eval(&self, s0: &T) -> Result<T, crate::scalar::DivisionByZero> {
        let mut acc = T::zero();
        let inv = if self.min_degree().map_or(false, |m| m < 0) {
            Some(s0.inverse().ok_or(crate::scalar::DivisionByZero)?)
        } else {
            None
        };
        for (e, c) in &self.coeffs {
            let base = if *e >= 0 {
                power(s0, *e as u64)
            } else {
                power(inv.as_ref().unwrap(), (-*e) as u64)
            };
            acc = acc + c.clone() * base;
        }
        Ok(acc)
    }
}

fn power<T: Ring>(b: &T, mut n: u64) -> T {
    let mut acc = T::one();
    let mut base = b.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        base = base.clone() * base;
        n >>= 1;
    }
    acc
}

impl<T: Ring> Add for Laurent<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (e, c) in rhs.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl<T: Ring> Sub for Laurent<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for Laurent<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<T: Ring> Mul for Laurent<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Ring> Zero for Laurent<T> {
    fn zero() -> Self {
        Self::new()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Laurent<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }
}

impl<T: Ring> Ring for Laurent<T> {
    fn from_int(n: i64) -> Self {
        Self::constant(T::from_int(n))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if *e == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*s^{}", c, e)?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})*s^{}", c, e)?;
        }
        Ok(())
    }
}

/// Lift a one-variable Laurent polynomial in s to a two-variable one.
pub fn to_outer(p: &LaurentK) -> Laurent2 {
    p.map_coeffs(|c| LaurentK::constant(c.clone()))
}

/// Lift a one-variable Laurent polynomial, renaming its variable to the
/// inner variable t.
pub fn to_inner(p: &LaurentK) -> Laurent2 {
    let mut out = Laurent2::new();
    for (e, c) in p.terms() {
        out.add_term(0, LaurentK::term(*e, c.clone()));
    }
    out
}
