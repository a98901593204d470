use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{parse_bigint, GaussianRational, Ring};
use crate::error::{Error, Result};

/// Element of Z[t^±1]: a sparse Laurent polynomial with arbitrary-precision
/// integer coefficients.
///
/// The coefficient map is canonical: no stored coefficient is zero and the
/// zero polynomial is the empty map, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c.into(), 0)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `c · t^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Unit test for Z[t^±1]: returns the inverse when `self = ±t^k`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (&exp, c) = self.coeffs.iter().next().unwrap();
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -exp))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Exact substitution `t ↦ t0` over Q(i). Requires `t0 ≠ 0` since
    /// negative exponents invert.
    pub fn eval(&self, t0: &GaussianRational) -> Result<GaussianRational> {
        if Ring::is_zero(t0) {
            return Err(Error::EvalAtZero);
        }
        let mut acc = GaussianRational::zero();
        for (&exp, c) in &self.coeffs {
            let coeff = GaussianRational::from_rational(super::Rational::from(c.clone()));
            acc = Ring::add(&acc, &Ring::mul(&coeff, &t0.pow(exp)?));
        }
        Ok(acc)
    }

    /// Exact power with nonnegative exponent.
    pub fn pow(&self, exp: u32) -> LaurentPoly {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (&exp, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if exp == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

impl Ring for LaurentPoly {
    const NAME: &'static str = "laurent";

    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        self.unit_inverse()
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        exact_div(self, rhs)
    }

    fn parse(text: &str) -> Result<Self> {
        parse_laurent(text)
    }
}

/// Exact division in Z[t^±1]; `None` when `b` does not divide `a`.
///
/// Both operands are shifted to ordinary polynomials first; the quotient is
/// reconstructed with the exponent offset. Long division from the top works
/// here because when the division is exact, each intermediate remainder is
/// still a multiple of `b`.
fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if Ring::is_zero(b) {
        return None;
    }
    if Ring::is_zero(a) {
        return Some(LaurentPoly::zero());
    }
    let shift = a.min_exp().unwrap() - b.min_exp().unwrap();
    let mut rem: BTreeMap<i64, BigInt> =
        a.coeffs.iter().map(|(&e, c)| (e - a.min_exp().unwrap(), c.clone())).collect();
    let bb: BTreeMap<i64, BigInt> =
        b.coeffs.iter().map(|(&e, c)| (e - b.min_exp().unwrap(), c.clone())).collect();
    let (&b_deg, b_lead) = bb.iter().next_back().unwrap();
    let mut quot = LaurentPoly::zero();
    while !rem.is_empty() {
        let (&r_deg, r_lead) = rem.iter().next_back().unwrap();
        if r_deg < b_deg {
            return None;
        }
        if !(r_lead % b_lead).is_zero() {
            return None;
        }
        let q = r_lead / b_lead;
        let q_exp = r_deg - b_deg;
        for (&e, c) in &bb {
            let e2 = e + q_exp;
            let entry = rem.entry(e2).or_insert_with(BigInt::zero);
            *entry -= c * &q;
            if entry.is_zero() {
                rem.remove(&e2);
            }
        }
        quot.add_term(q_exp + shift, q);
    }
    Some(quot)
}

/// Laurent polynomial grammar: terms separated by `+`/`-`;
/// term = `[coeff][t[^exp]]`; `exp` may be negative.
fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0usize;
    let n = chars.len();
    let mut out = LaurentPoly::zero();
    let skip_ws = |i: &mut usize| {
        while *i < n && chars[*i].is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == n {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut first = true;
    while i < n {
        // sign / separator
        let mut negative = false;
        if chars[i] == '+' || chars[i] == '-' {
            negative = chars[i] == '-';
            i += 1;
            skip_ws(&mut i);
        } else if !first {
            return Err(Error::Parse(format!("expected `+` or `-` at `{}`", &text[..])));
        }
        first = false;
        // coefficient digits
        let start = i;
        while i < n && chars[i].is_ascii_digit() {
            i += 1;
        }
        let digits: String = chars[start..i].iter().collect();
        // optional t[^exp]
        let mut exp: i64 = 0;
        let mut has_t = false;
        if i < n && chars[i] == 't' {
            has_t = true;
            exp = 1;
            i += 1;
            if i < n && chars[i] == '^' {
                i += 1;
                let estart = i;
                if i < n && chars[i] == '-' {
                    i += 1;
                }
                while i < n && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let etxt: String = chars[estart..i].iter().collect();
                exp = etxt
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
            }
        }
        if digits.is_empty() && !has_t {
            return Err(Error::Parse(format!("bad term in `{text}`")));
        }
        let mut coeff = if digits.is_empty() { BigInt::one() } else { parse_bigint(&digits)? };
        if negative {
            coeff = -coeff;
        }
        out.add_term(exp, coeff);
        skip_ws(&mut i);
    }
    Ok(out)
}
