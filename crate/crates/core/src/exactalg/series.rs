//! Truncated power series in `x` over the integers.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};

/// A power series known exactly through `x^order`.
///
/// Binary operations return a series of the smaller of the two orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XSeries {
    // always `order + 1` entries
    coeffs: Vec<BigInt>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        XSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        XSeries::constant(BigInt::one(), order)
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = XSeries::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// `c * x^k`, which is zero when `k > order`.
    pub fn monomial(c: impl Into<BigInt>, k: usize, order: usize) -> Self {
        let mut s = XSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c.into();
        }
        s
    }

    /// Coefficients beyond `order` are discarded; missing ones are zero.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = BigInt>, order: usize) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, BigInt::zero());
        XSeries { coeffs: c }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        XSeries::from_coeffs(p.coeffs().iter().cloned(), order)
    }

    /// `1 - x`.
    pub fn s(order: usize) -> Self {
        XSeries::from_poly(&Poly::from_i64s(&[1, -1]), order)
    }

    /// `1 - 2x`.
    pub fn t(order: usize) -> Self {
        XSeries::from_poly(&Poly::from_i64s(&[1, -2]), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        XSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        XSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = XSeries::zero(order);
        for i in k..=order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Divide by `x^k`. The low `k` coefficients must vanish; the result is
    /// known only through `x^(order - k)`.
    pub fn div_x_power(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot divide an order-{} series by x^{k}",
                self.order()
            )));
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!(
                "coefficient of x^{i} is nonzero, series not divisible by x^{k}"
            )));
        }
        Ok(XSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn div_const(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            let (quot, rem) = a.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "coefficient {a} of x^{k} is not divisible by {c}"
                )));
            }
            out.push(quot);
        }
        Ok(XSeries { coeffs: out })
    }

    /// Exact quotient `self / divisor`; the divisor must have constant term `±1`.
    pub fn div_exact(&self, divisor: &XSeries) -> Result<Self> {
        let lead = divisor.coeffs[0].clone();
        if !lead.abs().is_one() {
            return Err(Error::NonUnitDivisor {
                constant: lead.to_string(),
            });
        }
        let order = self.order().min(divisor.order());
        let mut quot = vec![BigInt::zero(); order + 1];
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &divisor.coeffs[i];
                if !b.is_zero() {
                    acc -= b * &quot[k - i];
                }
            }
            // lead is ±1, so multiplying is the same as dividing
            quot[k] = acc * &lead;
        }
        Ok(XSeries { coeffs: quot })
    }

    pub fn inverse(&self) -> Result<Self> {
        XSeries::one(self.order()).div_exact(self)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = XSeries::one(self.order());
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

    /// Truncate to a polynomial, dropping the truncation information.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

/// Exact series quotient `a / b` for a unit `b`.
pub fn series_div_exact(a: &XSeries, b: &XSeries) -> Result<XSeries> {
    a.div_exact(b)
}

impl<'a> Add<&'a XSeries> for &'a XSeries {
    type Output = XSeries;
    fn add(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Sub<&'a XSeries> for &'a XSeries {
    type Output = XSeries;
    fn sub(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        XSeries {
            coeffs: (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl<'a> Mul<&'a XSeries> for &'a XSeries {
    type Output = XSeries;
    fn mul(self, rhs: &XSeries) -> XSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        XSeries { coeffs: out }
    }
}

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr<XSeries> for XSeries {
            type Output = XSeries;
            fn $f(self, rhs: XSeries) -> XSeries { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a XSeries> for XSeries {
            type Output = XSeries;
            fn $f(self, rhs: &XSeries) -> XSeries { (&self).$f(rhs) }
        }
        impl<'a> $tr<XSeries> for &'a XSeries {
            type Output = XSeries;
            fn $f(self, rhs: XSeries) -> XSeries { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        -&self
    }
}
