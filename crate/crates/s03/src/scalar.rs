//! Exact scalars: Gaussian rationals and the field Q(i, √2).
//!
//! Every number in this crate is an element of K = Q(i)[√2], stored as
//! `u + v*√2` with `u`, `v` Gaussian rationals. The representation is
//! canonical (rationals in lowest terms, positive denominators), so
//! equality is plain structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Commutative ring with exact equality. `from_int` is total.
pub trait Ring:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    fn from_int(n: i64) -> Self;
}

/// Ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "division by zero")
    }
}

impl std::error::Error for DivisionByZero {}

/// A Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussRational {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re² + im²` as a rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(GaussRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRational { re, im }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Ring for GaussRational {
    fn from_int(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

impl Field for GaussRational {
    fn inverse(&self) -> Option<Self> {
        GaussRational::inverse(self)
    }
}

/// An element of K = Q(i)[√2], the value `u + v*√2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldK {
    pub u: GaussRational,
    pub v: GaussRational,
}

impl FieldK {
    pub fn new(u: GaussRational, v: GaussRational) -> Self {
        FieldK { u, v }
    }

    pub fn from_int(n: i64) -> Self {
        FieldK {
            u: GaussRational::from_int(n),
            v: GaussRational::zero(),
        }
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        FieldK {
            u: GaussRational::ratio(p, q),
            v: GaussRational::zero(),
        }
    }

    pub fn i() -> Self {
        FieldK {
            u: GaussRational::i(),
            v: GaussRational::zero(),
        }
    }

    pub fn sqrt2() -> Self {
        FieldK {
            u: GaussRational::zero(),
            v: GaussRational::one(),
        }
    }

    /// 1/√2 = (1/2)·√2.
    pub fn inv_sqrt2() -> Self {
        FieldK {
            u: GaussRational::zero(),
            v: GaussRational::ratio(1, 2),
        }
    }

    /// i·√2.
    pub fn i_sqrt2() -> Self {
        FieldK {
            u: GaussRational::zero(),
            v: GaussRational::i(),
        }
    }

    /// Complex conjugation (fixes √2, sends i to −i).
    pub fn conj(&self) -> Self {
        FieldK {
            u: self.u.conj(),
            v: self.v.conj(),
        }
    }

    /// True when the value lies in Q (no i, no √2 part).
    pub fn is_rational(&self) -> bool {
        self.u.is_real() && self.v.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.u.re.clone())
        } else {
            None
        }
    }

    /// `(u + v√2)⁻¹ = (u − v√2)/(u² − 2v²)`; the denominator is a nonzero
    /// Gaussian rational whenever the element is nonzero, since √2 ∉ Q(i).
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let two = GaussRational::from_int(2);
        let d = self.u.clone() * self.u.clone() - two * self.v.clone() * self.v.clone();
        let d_inv = d.inverse().expect("u^2 - 2v^2 cannot vanish for nonzero u + v*sqrt2");
        Some(FieldK {
            u: self.u.clone() * d_inv.clone(),
            v: -(self.v.clone() * d_inv),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        rhs.inverse()
            .map(|r| self.clone() * r)
            .ok_or(DivisionByZero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = FieldK::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl fmt::Debug for FieldK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Add for FieldK {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        FieldK {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
        }
    }
}

impl Sub for FieldK {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        FieldK {
            u: self.u - rhs.u,
            v: self.v - rhs.v,
        }
    }
}

impl Mul for FieldK {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (u1 + v1√2)(u2 + v2√2) = (u1u2 + 2 v1v2) + (u1v2 + v1u2)√2
        let two = GaussRational::from_int(2);
        let u = self.u.clone() * rhs.u.clone() + two * self.v.clone() * rhs.v.clone();
        let v = self.u * rhs.v + self.v * rhs.u;
        FieldK { u, v }
    }
}

impl Neg for FieldK {
    type Output = Self;
    fn neg(self) -> Self {
        FieldK {
            u: -self.u,
            v: -self.v,
        }
    }
}

impl Div for FieldK {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in FieldK")
    }
}

impl Zero for FieldK {
    fn zero() -> Self {
        FieldK {
            u: GaussRational::zero(),
            v: GaussRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

impl One for FieldK {
    fn one() -> Self {
        FieldK {
            u: GaussRational::one(),
            v: GaussRational::zero(),
        }
    }
    fn is_one(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }
}

impl Ring for FieldK {
    fn from_int(n: i64) -> Self {
        FieldK::from_int(n)
    }
}

impl Field for FieldK {
    fn inverse(&self) -> Option<Self> {
        FieldK::inverse(self)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_gauss(g: &GaussRational) -> String {
    if g.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    if !g.re.is_zero() {
        out.push_str(&fmt_rational(&g.re));
    }
    if !g.im.is_zero() {
        if !out.is_empty() {
            if g.im.is_negative() {
                out.push('-');
                out.push_str(&fmt_rational(&-g.im.clone()));
            } else {
                out.push('+');
                out.push_str(&fmt_rational(&g.im));
            }
        } else {
            out.push_str(&fmt_rational(&g.im));
        }
        out.push_str("*i");
    }
    out
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_gauss(self))
    }
}

/// Canonical rendering `a+b*i+(c+d*i)*sqrt2`, with zero parts omitted.
impl fmt::Display for FieldK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", fmt_gauss(&self.u));
        }
        let group = format!("({})*sqrt2", fmt_gauss(&self.v));
        if self.u.is_zero() {
            write!(f, "{}", group)
        } else {
            write!(f, "{}+{}", fmt_gauss(&self.u), group)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.bytes[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn parse_rational(&mut self) -> Result<BigRational, ParseScalarError> {
        let start = self.pos;
        if self.eat(b'-') || self.eat(b'+') {}
        let digits_start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ParseScalarError(format!(
                "expected digits at offset {}",
                self.pos
            )));
        }
        let numer: BigInt = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| ParseScalarError(format!("{e}")))?;
        let denom = if self.eat(b'/') {
            let d_start = self.pos;
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
            }
            if self.pos == d_start {
                return Err(ParseScalarError("expected denominator digits".into()));
            }
            std::str::from_utf8(&self.bytes[d_start..self.pos])
                .unwrap()
                .parse()
                .map_err(|e| ParseScalarError(format!("{e}")))?
        } else {
            BigInt::one()
        };
        if denom.is_zero() {
            return Err(ParseScalarError("zero denominator".into()));
        }
        Ok(BigRational::new(numer, denom))
    }

    /// One term of a Gaussian rational: `r` or `r*i`, with leading sign.
    fn parse_gauss_term(&mut self) -> Result<GaussRational, ParseScalarError> {
        let r = self.parse_rational()?;
        if self.eat_str("*i") {
            Ok(GaussRational::new(BigRational::zero(), r))
        } else {
            Ok(GaussRational::new(r, BigRational::zero()))
        }
    }

    fn parse_gauss(&mut self) -> Result<GaussRational, ParseScalarError> {
        let mut acc = self.parse_gauss_term()?;
        while matches!(self.peek(), Some(b'+') | Some(b'-')) {
            // A '+'/'-' here may also start the sqrt2 group; only consume it
            // if a bare term follows (not an opening parenthesis).
            let save = self.pos;
            let neg = self.bytes[self.pos] == b'-';
            self.pos += 1;
            if self.peek() == Some(b'(') {
                self.pos = save;
                break;
            }
            let t = self.parse_gauss_term()?;
            acc = if neg { acc - t } else { acc + t };
        }
        Ok(acc)
    }
}

impl FromStr for FieldK {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser::new(&compact);
        let mut u = GaussRational::zero();
        let mut v = GaussRational::zero();
        // either "(g)*sqrt2", "g", or "g+(g)*sqrt2"
        if p.peek() != Some(b'(') {
            u = p.parse_gauss()?;
            if p.peek().is_some() && !p.eat(b'+') {
                return Err(ParseScalarError(format!("trailing input in {compact:?}")));
            }
        }
        if p.peek() == Some(b'(') {
            p.eat(b'(');
            v = p.parse_gauss()?;
            if !p.eat(b')') || !p.eat_str("*sqrt2") {
                return Err(ParseScalarError(format!(
                    "malformed sqrt2 group in {compact:?}"
                )));
            }
        }
        if p.pos != p.bytes.len() {
            return Err(ParseScalarError(format!("trailing input in {compact:?}")));
        }
        Ok(FieldK::new(u, v))
    }
}

impl FromStr for GaussRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k: FieldK = s.parse()?;
        if !k.v.is_zero() {
            return Err(ParseScalarError("unexpected sqrt2 part".into()));
        }
        Ok(k.u)
    }
}

/// Parse a plain rational "p" or "p/q".
pub fn parse_rational(s: &str) -> Result<BigRational, ParseScalarError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser::new(&compact);
    let r = p.parse_rational()?;
    if p.pos != p.bytes.len() {
        return Err(ParseScalarError(format!("trailing input in {compact:?}")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(FieldK::sqrt2() * FieldK::sqrt2(), FieldK::from_int(2));
    }

    #[test]
    fn inverse_of_one_is_one() {
        assert_eq!(FieldK::one().inverse().unwrap(), FieldK::one());
    }

    #[test]
    fn inverse_of_sqrt2() {
        // (0 + 1·√2)⁻¹ = 0 + (1/2)√2
        assert_eq!(FieldK::sqrt2().inverse().unwrap(), FieldK::inv_sqrt2());
    }

    #[test]
    fn inverse_of_one_plus_i() {
        // (1+i)⁻¹ = (1−i)/2
        let one_plus_i = FieldK::one() + FieldK::i();
        let expected = FieldK::ratio(1, 2) - FieldK::ratio(1, 2) * FieldK::i();
        assert_eq!(one_plus_i.inverse().unwrap(), expected);
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(FieldK::zero().inverse().is_none());
        assert!(FieldK::zero().checked_div(&FieldK::zero()).is_err());
    }

    #[test]
    fn display_round_trip_spot() {
        for s in [
            "0",
            "1",
            "-3/2",
            "1*i",
            "2-1*i",
            "(1)*sqrt2",
            "(-1/2+1*i)*sqrt2",
            "1/2-3*i+(-1+2/7*i)*sqrt2",
        ] {
            let v: FieldK = s.parse().unwrap();
            assert_eq!(v.to_string(), s, "canonical form mismatch");
        }
    }

    fn arb_rational() -> impl Strategy<Value = BigRational> {
        (-40i64..40, 1i64..12)
            .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    fn arb_fieldk() -> impl Strategy<Value = FieldK> {
        (arb_rational(), arb_rational(), arb_rational(), arb_rational()).prop_map(
            |(a, b, c, d)| FieldK::new(GaussRational::new(a, b), GaussRational::new(c, d)),
        )
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_fieldk(), b in arb_fieldk(), c in arb_fieldk()) {
            // associativity and commutativity
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            // distributivity
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
        }

        #[test]
        fn exact_inverses(a in arb_fieldk()) {
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(a * inv, FieldK::one());
            }
        }

        #[test]
        fn text_round_trip(a in arb_fieldk()) {
            let s = a.to_string();
            let back: FieldK = s.parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
