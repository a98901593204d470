use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{format_rational, format_rational_abs, parse_rational, Field, Rational, Ring};
use crate::error::{Error, Result};

/// Element of Q(i): an exact Gaussian rational `re + im·i`.
///
/// Both parts are kept reduced, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `p/q` as a real Gaussian rational.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_rational(Rational::new(p.into(), q.into()))
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::from_integer(1.into()) }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²` (a rational, zero iff self is zero).
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact power with integer exponent; negative exponents invert.
    ///
    /// Errors when raising zero to a negative power.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            let inv = self.inverse().ok_or(Error::DivisionByZero)?;
            return inv.pow(-exp);
        }
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        Ok(acc)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*i", format_rational(&self.re), sign, format_rational_abs(&self.im))
    }
}

impl Ring for GaussianRational {
    const NAME: &'static str = "gaussian";

    fn zero() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::zero() }
    }

    fn one() -> Self {
        GaussianRational { re: Rational::from_integer(1.into()), im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
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
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    fn parse(text: &str) -> Result<Self> {
        parse_gaussian(text)
    }
}

impl Field for GaussianRational {}

/// Accepts `p`, `p/q`, `p/q+r/s*i`, `p/q-r/s*i`, and the pure-imaginary
/// `r/s*i` / `-r/s*i`.
fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let imag_part = |s: &str| -> Result<Rational> {
        let body = s
            .strip_suffix("*i")
            .or_else(|| s.strip_suffix('i'))
            .ok_or_else(|| Error::Parse(format!("bad imaginary part `{s}`")))?;
        if body.is_empty() || body == "-" {
            // bare `i` / `-i`
            let one = Rational::from_integer(1.into());
            return Ok(if body == "-" { -one } else { one });
        }
        parse_rational(body)
    };
    if let Some(split) = t[1..].rfind(['+', '-']).map(|p| p + 1) {
        let (head, tail) = t.split_at(split);
        if tail.ends_with('i') {
            let re = parse_rational(head)?;
            let sign = &tail[..1];
            let mut im = imag_part(&tail[1..])?;
            if sign == "-" {
                im = -im;
            }
            return Ok(GaussianRational::new(re, im));
        }
    }
    if t.ends_with('i') {
        return Ok(GaussianRational::new(Rational::zero(), imag_part(&t)?));
    }
    Ok(GaussianRational::from_rational(parse_rational(&t)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        GaussianRational::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-3/4", "3/5+4/5*i", "1-2*i", "0+1*i", "0-1/3*i"] {
            let v = g(s);
            assert_eq!(GaussianRational::parse(&v.to_string()).unwrap(), v, "{s}");
        }
        assert_eq!(g("2*i"), GaussianRational::new(Rational::zero(), Rational::from_integer(2.into())));
        assert_eq!(g(" 1/2 + 1/3*i "), g("1/2+1/3*i"));
        assert!(GaussianRational::parse("1/0").is_err());
        assert!(GaussianRational::parse("").is_err());
        assert!(GaussianRational::parse("x+1*i").is_err());
    }

    #[test]
    fn field_arithmetic() {
        let a = g("3/5+4/5*i");
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, GaussianRational::one());
        assert_eq!(a.norm(), Rational::from_integer(1.into()));
        assert!(GaussianRational::zero().inverse().is_none());
        assert_eq!(g("1-2*i").conjugate(), g("1+2*i"));
    }

    #[test]
    fn powers() {
        let i = GaussianRational::i();
        assert_eq!(i.pow(2).unwrap(), GaussianRational::from_int(-1));
        assert_eq!(i.pow(-1).unwrap(), g("0-1*i"));
        assert_eq!(g("1/2").pow(-2).unwrap(), g("4"));
        assert!(GaussianRational::zero().pow(-1).is_err());
    }
}
