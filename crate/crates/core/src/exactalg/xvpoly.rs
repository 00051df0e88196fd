//! Bivariate integer polynomials in `(x, v)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::{Poly, VPoly};
use crate::error::{Error, Result};

/// Extra truncated coefficients required beyond the claimed x-degree, so a
/// vanishing tail is actually observed rather than assumed.
pub const GUARD_MARGIN: usize = 8;

/// Stored as one polynomial in `x` per power of `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XVPoly {
    by_v: Vec<Poly>,
}

impl XVPoly {
    pub fn zero() -> Self {
        XVPoly { by_v: Vec::new() }
    }

    pub fn from_x_poly(p: Poly) -> Self {
        XVPoly::from_v_coeffs(vec![p])
    }

    /// `by_v[k]` is the coefficient of `v^k`.
    pub fn from_v_coeffs(mut by_v: Vec<Poly>) -> Self {
        while by_v.last().is_some_and(Poly::is_zero) {
            by_v.pop();
        }
        XVPoly { by_v }
    }

    /// From a row-major matrix indexed by (power of x, power of v).
    pub fn from_matrix(rows: &[Vec<BigInt>]) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        XVPoly::from_v_coeffs(
            (0..width)
                .map(|j| {
                    Poly::from_coeffs(
                        rows.iter()
                            .map(|row| row.get(j).cloned().unwrap_or_default())
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.by_v.is_empty()
    }

    pub fn v_degree(&self) -> Option<usize> {
        self.by_v.len().checked_sub(1)
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.by_v.iter().filter_map(Poly::degree).max()
    }

    /// Coefficient of `v^k` as a polynomial in `x`.
    pub fn v_coeff(&self, k: usize) -> Poly {
        self.by_v.get(k).cloned().unwrap_or_default()
    }

    pub fn v_coeffs(&self) -> &[Poly] {
        &self.by_v
    }

    /// Coefficient of `x^i v^j`.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.by_v.get(j).map(|p| p.coeff(i)).unwrap_or_default()
    }

    /// Row-major matrix: `rows[i][j]` is the coefficient of `x^i v^j`.
    pub fn to_matrix(&self) -> Vec<Vec<BigInt>> {
        let (Some(dx), Some(dv)) = (self.x_degree(), self.v_degree()) else {
            return Vec::new();
        };
        (0..=dx)
            .map(|i| (0..=dv).map(|j| self.coeff(i, j)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .to_matrix()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        json!({ "vars": ["x", "v"], "coeffs": rows })
    }

    /// Substitute a polynomial in `x` for `v`.
    pub fn eval_v(&self, w: &Poly) -> Poly {
        self.by_v
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * w) + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        XVPoly::from_v_coeffs(self.by_v.iter().map(|p| p.scale(c)).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift_v(&self, k: usize) -> Self {
        if self.is_zero() {
            return XVPoly::zero();
        }
        let mut by_v = vec![Poly::zero(); k];
        by_v.extend(self.by_v.iter().cloned());
        XVPoly { by_v }
    }

    pub fn to_vpoly(&self, order: usize) -> VPoly {
        VPoly::from_xv(self, order)
    }
}

/// Multiply the series `g` by `pre_factor`, strip `x^divide_x_power` and the
/// constant `divide_const`, and return the result as an integer polynomial.
///
/// Every step is checked: each coefficient series must be divisible by the
/// power of `x` and by the constant, and every coefficient of `x` past
/// `degree_bound_x` (up to the truncation order) must vanish.
pub fn xvpoly_extract_from_series(
    g: &VPoly,
    pre_factor: &XVPoly,
    divide_x_power: usize,
    divide_const: &BigInt,
    degree_bound_x: usize,
) -> Result<XVPoly> {
    let needed = divide_x_power + degree_bound_x + GUARD_MARGIN;
    if g.order() < needed {
        return Err(Error::InvalidArgument(format!(
            "series order {} is below the required {needed}",
            g.order()
        )));
    }
    let product = &pre_factor.to_vpoly(g.order()) * g;
    let mut by_v = Vec::new();
    for (j, series) in product.coeffs().iter().enumerate() {
        let stripped = series.div_x_power(divide_x_power)?.div_const(divide_const)?;
        if let Some(i) = (degree_bound_x + 1..=stripped.order()).find(|&i| !stripped.coeff(i).is_zero()) {
            return Err(Error::NonzeroTail {
                x_power: i,
                v_power: j,
            });
        }
        by_v.push(Poly::from_coeffs(stripped.coeffs()[..=degree_bound_x].to_vec()));
    }
    Ok(XVPoly::from_v_coeffs(by_v))
}

impl<'a> Add<&'a XVPoly> for &'a XVPoly {
    type Output = XVPoly;
    fn add(self, rhs: &XVPoly) -> XVPoly {
        let n = self.by_v.len().max(rhs.by_v.len());
        XVPoly::from_v_coeffs((0..n).map(|k| &self.v_coeff(k) + &rhs.v_coeff(k)).collect())
    }
}

impl<'a> Sub<&'a XVPoly> for &'a XVPoly {
    type Output = XVPoly;
    fn sub(self, rhs: &XVPoly) -> XVPoly {
        let n = self.by_v.len().max(rhs.by_v.len());
        XVPoly::from_v_coeffs((0..n).map(|k| &self.v_coeff(k) - &rhs.v_coeff(k)).collect())
    }
}

impl<'a> Mul<&'a XVPoly> for &'a XVPoly {
    type Output = XVPoly;
    fn mul(self, rhs: &XVPoly) -> XVPoly {
        if self.is_zero() || rhs.is_zero() {
            return XVPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.by_v.len() + rhs.by_v.len() - 1];
        for (i, a) in self.by_v.iter().enumerate() {
            for (j, b) in rhs.by_v.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XVPoly::from_v_coeffs(out)
    }
}

impl Neg for &XVPoly {
    type Output = XVPoly;
    fn neg(self) -> XVPoly {
        XVPoly {
            by_v: self.by_v.iter().map(|p| -p).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr<XVPoly> for XVPoly {
            type Output = XVPoly;
            fn $f(self, rhs: XVPoly) -> XVPoly { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a XVPoly> for XVPoly {
            type Output = XVPoly;
            fn $f(self, rhs: &XVPoly) -> XVPoly { (&self).$f(rhs) }
        }
        impl<'a> $tr<XVPoly> for &'a XVPoly {
            type Output = XVPoly;
            fn $f(self, rhs: XVPoly) -> XVPoly { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);
