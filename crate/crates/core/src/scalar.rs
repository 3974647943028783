//! Exact Gaussian rationals and the small field abstraction shared with the
//! floating-point flow code.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

pub type Rational = BigRational;

/// `p/q` as a rational.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_integer(BigInt::from(n)))
    }

    /// `(a/b) + (c/d) i` from machine integers.
    pub fn from_ratios(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(rat(a, b), rat(c, d))
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
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

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// |a|², exact.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { re: &self.re * k, im: &self.im * k }
    }

    /// Multiplication by i.
    pub fn times_i(&self) -> Self {
        Self { re: -&self.im, im: self.re.clone() }
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(&self.re * &o.re);
        }
        GaussianRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the underlying rationals.
    fn div(self, o: &GaussianRational) -> GaussianRational {
        let inv = o.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign for GaussianRational {
    fn add_assign(&mut self, o: GaussianRational) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl SubAssign for GaussianRational {
    fn sub_assign(&mut self, o: GaussianRational) {
        self.re -= o.re;
        self.im -= o.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, o: &GaussianRational) {
        *self = &*self * o;
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let bad = || ParseError::Scalar(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = num.strip_prefix('+').unwrap_or(num);
    let n: BigInt = num.parse().map_err(|_| bad())?;
    if den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Parses `"3/5"`, `"-2"` into a rational.
pub fn parse_rational_str(s: &str) -> Result<Rational, ParseError> {
    parse_rational(&s.chars().filter(|c| !c.is_whitespace()).collect::<String>())
}

impl FromStr for GaussianRational {
    type Err = ParseError;

    /// Grammar: `re`, `im*i`, `re+im*i`, `re-im*i` where each part is
    /// `p` or `p/q`; a bare `i`/`-i` stands for a unit coefficient.
    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseError::Scalar(raw.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(&s).map(Self::real).map_err(|_| bad());
        };
        let split = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im_part = match im_part.strip_suffix('*') {
            Some(p) => {
                if p.is_empty() || p == "+" || p == "-" {
                    return Err(bad());
                }
                p
            }
            None => match im_part {
                "" | "+" | "-" => im_part,
                _ => return Err(bad()),
            },
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            p => parse_rational(p).map_err(|_| bad())?,
        };
        let re = if re_part.is_empty() { Rational::zero() } else { parse_rational(re_part).map_err(|_| bad())? };
        Ok(Self { re, im })
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let mag = self.im.abs();
        let neg = self.im.is_negative();
        let coef = if mag.is_one() { String::new() } else { format!("{mag}*") };
        if self.re.is_zero() {
            write!(f, "{}{}i", if neg { "-" } else { "" }, coef)
        } else {
            write!(f, "{}{}{}i", self.re, if neg { "-" } else { "+" }, coef)
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a rational as its `p/q` string.
pub mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Arithmetic on references, as required by the generic tensor kernels.
pub trait RefArith<S>:
    Add<Self, Output = S> + Sub<Self, Output = S> + Mul<Self, Output = S> + Neg<Output = S> + Sized
{
}

impl<T, S> RefArith<S> for T where T: Add<T, Output = S> + Sub<T, Output = S> + Mul<T, Output = S> + Neg<Output = S> {}

/// Scalar field used by the tensor kernels: exact Gaussian rationals or
/// double-precision complex numbers.
pub trait Field:
    Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
    fn conj(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    /// Magnitude used for pivot selection.
    fn magnitude(&self) -> f64;
    fn from_exact(x: &GaussianRational) -> Self;
    fn from_rational(x: &Rational) -> Self {
        Self::from_exact(&GaussianRational::real(x.clone()))
    }
}

impl Field for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn magnitude(&self) -> f64 {
        self.norm_sqr().to_f64().unwrap_or(f64::INFINITY)
    }
    fn from_exact(x: &GaussianRational) -> Self {
        x.clone()
    }
}

impl Field for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn inverse(&self) -> Option<Self> {
        if self.norm_sqr() == 0.0 {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn from_exact(x: &GaussianRational) -> Self {
        x.to_complex64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        assert_eq!(g("3"), GaussianRational::from_int(3));
        assert_eq!(g("0"), GaussianRational::zero());
        assert_eq!(g("-1/2*i"), GaussianRational::from_ratios(0, 1, -1, 2));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("3/5+4/5*i"), GaussianRational::from_ratios(3, 5, 4, 5));
        assert_eq!(g("1-i"), GaussianRational::from_ratios(1, 1, -1, 1));
        assert_eq!(g("-2/4+6*i"), GaussianRational::from_ratios(-1, 2, 6, 1));
        assert_eq!(g(" 1 + 2*i "), GaussianRational::from_ratios(1, 1, 2, 1));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "1/0", "i*2", "1+*i", "abc", "1//2", "2i", "1/-2", "+"] {
            assert!(s.parse::<GaussianRational>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(g("2/4").to_string(), "1/2");
        assert_eq!(g("-1/2*i").to_string(), "-1/2*i");
        assert_eq!(g("1*i").to_string(), "i");
        assert_eq!(g("3/5-4/5*i").to_string(), "3/5-4/5*i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn field_ops() {
        let a = g("1+2*i");
        let b = g("3-i");
        assert_eq!(&a * &b, g("5+5*i"));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), GaussianRational::one());
        assert_eq!(a.norm_sqr(), rat(5, 1));
        assert!(GaussianRational::zero().inv().is_none());
    }
}
