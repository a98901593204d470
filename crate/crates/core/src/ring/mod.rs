//! Exact scalar arithmetic: arbitrary-precision rationals, Gaussian
//! rationals Q(i), and Laurent polynomials Z[t^±1].
//!
//! Gaussian rationals stand in for the complex field: every check downstream
//! is algebraic, so working in the exact subfield Q(i) of C removes all
//! tolerance questions. Scalar string grammars (used verbatim in CLI flags
//! and JSON payloads):
//!
//! * rationals: `p` or `p/q`, e.g. `-3/4`;
//! * Gaussian rationals: `p/q` or `p/q+r/s*i`, e.g. `3/5+4/5*i`, `1-2*i`;
//! * Laurent polynomials: terms joined by `+`/`-`, term = `[coeff][t[^exp]]`,
//!   e.g. `2t^-1 + 1 - 3t^2`, `t`, `-1`.

mod gaussian;
mod laurent;

pub use gaussian::GaussianRational;
pub use laurent::LaurentPoly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Exact rational number; reduced, denominator positive.
pub type Rational = BigRational;

/// Scalar ring interface shared by `Z[t^±1]` and `Q(i)`.
///
/// Matrices, representations, and relation checks are generic over this
/// trait, so a ring mismatch is a type error rather than a runtime one.
pub trait Ring:
    Clone + PartialEq + Eq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Ring tag used in JSON payloads (`"laurent"` or `"gaussian"`).
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn inverse(&self) -> Option<Self>;

    /// Exact division: `Some(q)` with `self = q * rhs`, else `None`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Parses the ring's string grammar.
    fn parse(text: &str) -> Result<Self>;
}

/// Marker for rings in which every nonzero element is a unit.
pub trait Field: Ring {}

pub(crate) fn parse_bigint(text: &str) -> Result<BigInt> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty integer".into()));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
}

/// Parses `p` or `p/q` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        None => Ok(Rational::from(parse_bigint(t)?)),
        Some((p, q)) => {
            let num = parse_bigint(p)?;
            let den = parse_bigint(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{t}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Canonical rational rendering: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn format_rational_abs(r: &Rational) -> String {
    format_rational(&r.abs())
}
