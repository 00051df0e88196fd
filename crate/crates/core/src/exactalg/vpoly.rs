//! Polynomials in `v` whose coefficients are truncated series in `x`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{XSeries, XVPoly};
use crate::error::{Error, Result};

/// `sum_k coeffs[k] * v^k`, every coefficient truncated at the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPoly {
    coeffs: Vec<XSeries>,
    order: usize,
}

impl VPoly {
    pub fn zero(order: usize) -> Self {
        VPoly {
            coeffs: Vec::new(),
            order,
        }
    }

    pub fn constant(c: XSeries) -> Self {
        let order = c.order();
        VPoly::from_coeffs(vec![c], order)
    }

    /// `c * v^k`.
    pub fn monomial(c: XSeries, k: usize) -> Self {
        let order = c.order();
        let mut coeffs = vec![XSeries::zero(order); k];
        coeffs.push(c);
        VPoly::from_coeffs(coeffs, order)
    }

    /// Truncates every coefficient to `order` and drops vanishing top terms.
    pub fn from_coeffs(coeffs: Vec<XSeries>, order: usize) -> Self {
        let mut coeffs: Vec<XSeries> = coeffs.into_iter().map(|c| c.truncate(order)).collect();
        while coeffs.last().is_some_and(XSeries::is_zero) {
            coeffs.pop();
        }
        VPoly { coeffs, order }
    }

    /// Embed an integer polynomial in `(x, v)`.
    pub fn from_xv(p: &XVPoly, order: usize) -> Self {
        VPoly::from_coeffs(
            (0..=p.v_degree().unwrap_or(0))
                .map(|k| XSeries::from_poly(&p.v_coeff(k), order))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[XSeries] {
        &self.coeffs
    }

    /// Coefficient series of `v^k`.
    pub fn coeff(&self, k: usize) -> XSeries {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| XSeries::zero(self.order))
    }

    pub fn truncate(&self, order: usize) -> Self {
        VPoly::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        VPoly::from_coeffs(self.coeffs.iter().map(|s| s.scale(c)).collect(), self.order)
    }

    pub fn mul_series(&self, s: &XSeries) -> Self {
        let order = self.order.min(s.order());
        VPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect(), order)
    }

    /// Multiply by `v^k`.
    pub fn shift_v(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![XSeries::zero(self.order); k];
        coeffs.extend(self.coeffs.iter().cloned());
        VPoly {
            coeffs,
            order: self.order,
        }
    }

    /// Multiply by `x^k`.
    pub fn shift_x(&self, k: usize) -> Self {
        VPoly::from_coeffs(self.coeffs.iter().map(|c| c.shift_up(k)).collect(), self.order)
    }

    /// Substitute a series for `v`.
    pub fn substitute(&self, w: &XSeries) -> XSeries {
        let order = self.order.min(w.order());
        self.coeffs
            .iter()
            .rev()
            .fold(XSeries::zero(order), |acc, c| &(&acc * w) + c)
    }

    /// The series obtained by setting `v = 1`.
    pub fn at_v_one(&self) -> XSeries {
        self.coeffs
            .iter()
            .fold(XSeries::zero(self.order), |acc, c| &acc + c)
    }

    /// Exact quotient by the kernel `1 - s v`; see [`vpoly_div_kernel`].
    pub fn div_kernel(&self, s: &XSeries, vdeg: usize) -> Result<VPoly> {
        vpoly_div_kernel(self, s, vdeg)
    }
}

/// Divide `b` by `1 - s*v` as polynomials in `v` over the series ring.
///
/// Long division runs from the top degree; the leading divisor coefficient
/// `-s` must be a unit. The remainder must vanish and the quotient degree
/// must not exceed `vdeg`; the result is re-multiplied to confirm.
pub fn vpoly_div_kernel(b: &VPoly, s: &XSeries, vdeg: usize) -> Result<VPoly> {
    let order = b.order.min(s.order());
    let neg_s = -&s.truncate(order);
    let Some(top) = b.degree() else {
        return Ok(VPoly::zero(order));
    };
    let mut rem: Vec<XSeries> = b.coeffs.iter().map(|c| c.truncate(order)).collect();
    let mut quot = vec![XSeries::zero(order); top];
    for k in (1..=top).rev() {
        let qk = rem[k].div_exact(&neg_s)?;
        rem[k - 1] = &rem[k - 1] - &qk;
        quot[k - 1] = qk;
    }
    if !rem[0].is_zero() {
        return Err(Error::KernelRemainder);
    }
    let quot = VPoly::from_coeffs(quot, order);
    if let Some(d) = quot.degree() {
        if d > vdeg {
            return Err(Error::DegreeBound {
                found: d,
                bound: vdeg,
            });
        }
    }
    let kernel = VPoly::from_coeffs(vec![XSeries::one(order), neg_s], order);
    if &kernel * &quot != b.truncate(order) {
        return Err(Error::KernelRemainder);
    }
    Ok(quot)
}

/// Substitute the series `w` for `v` in `p`.
pub fn substitute_v_with_series(p: &VPoly, w: &XSeries) -> XSeries {
    p.substitute(w)
}

impl<'a> Add<&'a VPoly> for &'a VPoly {
    type Output = VPoly;
    fn add(self, rhs: &VPoly) -> VPoly {
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        VPoly::from_coeffs(
            (0..n).map(|k| &self.coeff(k).truncate(order) + &rhs.coeff(k).truncate(order)).collect(),
            order,
        )
    }
}

impl<'a> Sub<&'a VPoly> for &'a VPoly {
    type Output = VPoly;
    fn sub(self, rhs: &VPoly) -> VPoly {
        let order = self.order.min(rhs.order);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        VPoly::from_coeffs(
            (0..n).map(|k| &self.coeff(k).truncate(order) - &rhs.coeff(k).truncate(order)).collect(),
            order,
        )
    }
}

impl<'a> Mul<&'a VPoly> for &'a VPoly {
    type Output = VPoly;
    fn mul(self, rhs: &VPoly) -> VPoly {
        let order = self.order.min(rhs.order);
        if self.is_zero() || rhs.is_zero() {
            return VPoly::zero(order);
        }
        let mut out = vec![XSeries::zero(order); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        VPoly::from_coeffs(out, order)
    }
}

impl Neg for &VPoly {
    type Output = VPoly;
    fn neg(self) -> VPoly {
        VPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr<VPoly> for VPoly {
            type Output = VPoly;
            fn $f(self, rhs: VPoly) -> VPoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a VPoly> for VPoly {
            type Output = VPoly;
            fn $f(self, rhs: &VPoly) -> VPoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<VPoly> for &'a VPoly {
            type Output = VPoly;
            fn $f(self, rhs: VPoly) -> VPoly { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);
