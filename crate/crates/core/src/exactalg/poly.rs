//! Dense univariate integer polynomials.
//!
//! The same type carries polynomials in `q` (the occurrence-counting
//! generating functions) and in `x` (the `c_{r,l}` coefficients); the
//! variable name only matters when rendering.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// The polynomial `c * var^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Poly::from_coeffs(coeffs)
    }

    /// Coefficients in ascending power order; trailing zeros are dropped.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_rational(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + BigRational::from_integer(c.clone()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divide every coefficient by `c`, failing unless all divisions are exact.
    pub fn div_exact_const(&self, c: &BigInt) -> Result<Poly> {
        if c.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            let (quot, rem) = a.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {a} of power {k} is not divisible by {c}"
                )));
            }
            out.push(quot);
        }
        Ok(Poly::from_coeffs(out))
    }

    /// Exact polynomial division by a divisor whose constant term is `±1`.
    ///
    /// The quotient is built from the low end as a power series and then
    /// checked by multiplying back, so a non-divisible input is an error
    /// rather than a silently truncated result.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let lead = divisor.coeff(0);
        if !lead.abs().is_one() {
            return Err(Error::NonUnitDivisor {
                constant: lead.to_string(),
            });
        }
        let (Some(deg_a), Some(deg_b)) = (self.degree(), divisor.degree()) else {
            return Ok(Poly::zero());
        };
        if deg_a < deg_b {
            return Err(Error::InexactDivision(format!(
                "degree {deg_a} dividend by degree {deg_b} divisor"
            )));
        }
        let len = deg_a - deg_b + 1;
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); len];
        for k in 0..len {
            let qk = &rem[k] * &lead;
            if !qk.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &qk * b;
                }
            }
            quot[k] = qk;
        }
        let quot = Poly::from_coeffs(quot);
        if &(&quot * divisor) != self {
            return Err(Error::InexactDivision(
                "polynomial is not a multiple of the divisor".into(),
            ));
        }
        Ok(quot)
    }

    /// Canonical JSON form: decimal-string coefficients in ascending order.
    pub fn to_json(&self, var: &str) -> Value {
        json!({
            "var": var,
            "coeffs": self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    }

    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let body = match k {
                0 => mag.to_string(),
                1 if mag.is_one() => var.to_string(),
                1 => format!("{mag}{var}"),
                _ if mag.is_one() => format!("{var}^{k}"),
                _ => format!("{mag}{var}^{k}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("q"))
    }
}

impl From<i64> for Poly {
    fn from(c: i64) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, rhs: &Poly) -> Poly { (&self).$f(rhs) }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = Poly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_evaluation() {
        let p = Poly::from_i64s(&[4, 2]);
        let q = Poly::from_i64s(&[-1, 1]);
        assert_eq!(&p * &q, Poly::from_i64s(&[-4, 2, 2]));
        assert_eq!(&p - &p, Poly::zero());
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(6));
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(4));
        assert_eq!(q.pow(3), Poly::from_i64s(&[-1, 3, -3, 1]));
        assert_eq!(Poly::from_i64s(&[1, 5, 3]).derivative(), Poly::from_i64s(&[5, 6]));
    }

    #[test]
    fn exact_division() {
        let t = Poly::from_i64s(&[1, -2]);
        let s = Poly::from_i64s(&[1, -1]);
        let c = Poly::from_i64s(&[3, -2]);
        let prod = &(&c * &t) * &s;
        assert_eq!(prod.div_exact(&(&s * &t)).unwrap(), c);
        assert!(Poly::from_i64s(&[1, 1]).div_exact(&t).is_err());
        assert!(Poly::from_i64s(&[2, 1]).div_exact(&Poly::from_i64s(&[2, 1])).is_err());
        assert_eq!(
            Poly::from_i64s(&[4, 6]).div_exact_const(&BigInt::from(2)).unwrap(),
            Poly::from_i64s(&[2, 3])
        );
        assert!(Poly::from_i64s(&[4, 5]).div_exact_const(&BigInt::from(2)).is_err());
    }

    #[test]
    fn rendering() {
        let p = Poly::from_i64s(&[4, 2]);
        assert_eq!(p.to_json("q").to_string(), r#"{"coeffs":["4","2"],"var":"q"}"#);
        assert_eq!(Poly::from_i64s(&[3, -6, 2]).display("x"), "3 - 6x + 2x^2");
        assert_eq!(Poly::from_i64s(&[0, -1]).display("q"), "-q");
    }
}
