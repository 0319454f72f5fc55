//! Exact one-variable Laurent polynomials over the integers.
//!
//! Alexander polynomials are only defined up to multiplication by units
//! `±t^k`, so besides ring arithmetic this module provides a canonical
//! representative ([`LaurentPoly::canonical`]) and unit equivalence
//! ([`LaurentPoly::equiv`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `sum_i coeffs[i] * t^(min_degree + i)`.
///
/// Invariant: `coeffs` is empty iff the polynomial is zero, and otherwise
/// its first and last entries are nonzero. A zero polynomial always has
/// `min_degree == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(min_degree: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { min_degree, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_degree: i64, coeffs: &[i64]) -> Self {
        Self::new(min_degree, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(0, vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    fn normalize(&mut self) {
        let Some(last) = self.coeffs.iter().rposition(|c| !c.is_zero()) else {
            self.coeffs.clear();
            self.min_degree = 0;
            return;
        };
        self.coeffs.truncate(last + 1);
        let first = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if first > 0 {
            self.coeffs.drain(..first);
            self.min_degree += first as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_degree == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Exponent of the highest term; `None` for zero.
    pub fn max_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_degree + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero outside the stored range).
    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.min_degree;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Width of the support, `max_degree - min_degree`; zero for the zero polynomial.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `t^k * self`
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `t = x`; rational because of negative exponents.
    pub fn eval(&self, x: i64) -> Result<BigRational> {
        if x == 0 {
            return Err(Error::EvalAtZero);
        }
        // Horner on the polynomial part, then apply t^min_degree.
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        let md = self.min_degree;
        let scale = num_traits::pow(x.clone(), md.unsigned_abs() as usize);
        Ok(if md >= 0 {
            BigRational::from_integer(acc * scale)
        } else {
            BigRational::new(acc, scale)
        })
    }

    /// Unit-normal representative: lowest exponent zero, positive top coefficient.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let negate = self.coeffs.last().unwrap().is_negative();
        let coeffs = if negate {
            self.coeffs.iter().map(|c| -c).collect()
        } else {
            self.coeffs.clone()
        };
        LaurentPoly { min_degree: 0, coeffs }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn equiv(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`, or `None` when the
    /// division leaves a remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let qlen = rem.len() - dlen + 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.min_degree - divisor.min_degree, quot))
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other { -other } else { other.clone() };
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().unwrap().max(other.max_degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_degree - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.min_degree - lo) as usize + i];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::new(lo, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.min_degree + other.min_degree, coeffs)
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a.mul_impl(b));

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing degree, e.g. `2t^2 - 5t + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let k = self.min_degree + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if k == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// JSON form `{"min_degree": int, "coeffs": [int]}`, with coefficients as
// exact JSON integers of any size.

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    min_degree: i64,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Number::from(v),
                None => serde_json::Number::from_str(&c.to_string())
                    .expect("decimal integer is a valid JSON number"),
            })
            .collect();
        LaurentRepr { min_degree: self.min_degree, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::new(repr.min_degree, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(min, c)
    }

    /// -2t^2 + 5t - 2
    fn pretzel_factor() -> LaurentPoly {
        p(0, &[-2, 5, -2])
    }

    #[test]
    fn normalizes_on_construction() {
        let a = p(-3, &[0, 0, 1, 2, 0]);
        assert_eq!(a.min_degree(), -1);
        assert_eq!(a.coeffs(), &[BigInt::from(1), BigInt::from(2)]);
        let z = p(5, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.min_degree(), 0);
    }

    #[test]
    fn mul_examples() {
        // Expanded by hand: (-2t^2+5t-2)^2 = 4t^4 - 20t^3 + 33t^2 - 20t + 4.
        let sq = pretzel_factor() * pretzel_factor();
        assert_eq!(sq, p(0, &[4, -20, 33, -20, 4]));
        assert_eq!(pretzel_factor() * LaurentPoly::one(), pretzel_factor());
        assert!((LaurentPoly::t() * p(-1, &[1])).is_one());
        assert!((pretzel_factor() * LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn mul_degree_bounds() {
        let a = p(-2, &[1, 0, 3]);
        let b = p(1, &[2, 7]);
        let ab = &a * &b;
        assert_eq!(ab.min_degree(), a.min_degree() + b.min_degree());
        assert_eq!(ab.max_degree(), Some(a.max_degree().unwrap() + b.max_degree().unwrap()));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(pretzel_factor().pow(1), pretzel_factor());
        assert!(pretzel_factor().pow(0).is_one());
        assert!(LaurentPoly::zero().pow(0).is_one());
        assert_eq!(pretzel_factor().pow(2), p(0, &[4, -20, 33, -20, 4]));
    }

    #[test]
    fn eval_examples() {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(pretzel_factor().eval(1).unwrap(), r(1));
        assert_eq!(pretzel_factor().eval(-1).unwrap(), r(-9));
        assert_eq!(LaurentPoly::zero().eval(7).unwrap(), r(0));
        // 2t^-1 at t=2 is 1; t^-2 at t = -2 is 1/4.
        assert_eq!(p(-1, &[2]).eval(2).unwrap(), r(1));
        assert_eq!(
            p(-2, &[1]).eval(-2).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(4))
        );
        assert_eq!(p(-1, &[1, 1]).eval(0), Err(Error::EvalAtZero));
    }

    #[test]
    fn eval_rejects_zero() {
        assert_eq!(p(0, &[3, 1]).eval(0), Err(Error::EvalAtZero));
        assert_eq!(LaurentPoly::zero().eval(0), Err(Error::EvalAtZero));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(pretzel_factor().canonical(), p(0, &[2, -5, 2]));
        assert!(p(7, &[-1]).canonical().is_one());
        assert!(p(-4, &[1]).canonical().is_one());
        assert_eq!(p(0, &[2, -5, 2]).canonical(), p(0, &[2, -5, 2]));
        assert!(LaurentPoly::zero().canonical().is_zero());
    }

    #[test]
    fn equiv_examples() {
        assert!(pretzel_factor().equiv(&p(-1, &[2, -5, 2])));
        assert!(pretzel_factor().equiv(&pretzel_factor()));
        assert!(!LaurentPoly::one().equiv(&p(0, &[1, -1, 1])));
    }

    #[test]
    fn div_exact_recovers_factors() {
        let a = p(-1, &[3, 0, -2, 5]);
        let b = p(2, &[1, -1]);
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&a), Some(b));
        assert_eq!(p(0, &[1, 1]).div_exact(&p(0, &[2])), None);
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&p(0, &[1, 1])), None);
        assert_eq!(a.div_exact(&LaurentPoly::zero()), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(0, &[2, -5, 2]).to_string(), "2t^2 - 5t + 2");
        assert_eq!(pretzel_factor().to_string(), "-2t^2 + 5t - 2");
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(-1, &[2, -5, 2]).to_string(), "2t - 5 + 2t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }

    #[test]
    fn json_form() {
        let a = p(-1, &[2, -5, 2]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"min_degree":-1,"coeffs":[2,-5,2]}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);

        let big = LaurentPoly::constant(BigInt::from(10).pow(30u32));
        let js = serde_json::to_string(&big).unwrap();
        assert_eq!(js, r#"{"min_degree":0,"coeffs":[1000000000000000000000000000000]}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&js).unwrap(), big);
    }

    #[test]
    fn deserialize_normalizes() {
        let a: LaurentPoly = serde_json::from_str(r#"{"min_degree":0,"coeffs":[0,1,0]}"#).unwrap();
        assert_eq!(a, LaurentPoly::t());
    }
}
