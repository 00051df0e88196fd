//! Exact algebra: integer polynomials, truncated integer power series,
//! polynomials in `v` over those series, bivariate integer polynomials and
//! rationals.
//!
//! Every division the rest of the crate needs is by a unit series, a power of
//! `x` or a small constant, and each is checked for exactness.

mod poly;
mod series;
mod vpoly;
mod xvpoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

pub use poly::Poly;
pub use series::{series_div_exact, XSeries};
pub use vpoly::{substitute_v_with_series, vpoly_div_kernel, VPoly};
pub use xvpoly::{xvpoly_extract_from_series, XVPoly, GUARD_MARGIN};

/// A polynomial in `q`.
pub type QPoly = Poly;

/// Binomial coefficient with `C(m, k) = 0` outside `0 <= k <= m`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || m < 0 || k > m {
        return BigInt::from(0);
    }
    let k = k.min(m - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `H_n = 1 + 1/2 + ... + 1/n`.
pub fn harmonic(n: u64) -> Rational {
    (1..=n).fold(Rational::from_integer(0.into()), |acc, k| {
        acc + Rational::new(1.into(), k.into())
    })
}
