//! Occurrence generating functions `g_n` and `g_n(1k)` as exact polynomials
//! in `q`, computed from their recurrences.
//!
//! - `g_n = sum_{j=1}^{n-1} b_{n,j} (q-1)^{j-1} g_{n-j}`, `g_1 = 1`;
//! - `g_n(12) = 2 g_{n-1}` and, for `3 <= k <= n`,
//!   `g_n(1k) = sum_{j=1}^{k-1} a_{k,j} (q-1)^{j-1} g_{n-j}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, harmonic, Poly, QPoly, Rational};

/// Binomial coefficient extended with `C(m, -1) = 1` iff `m = -1`.
///
/// This is the reading under which the `j = 1` term of the `b_{n,j}` sum
/// collapses to the constant `n`.
fn binomial_ext(m: i64, k: i64) -> BigInt {
    if k == -1 {
        return if m == -1 { BigInt::one() } else { BigInt::zero() };
    }
    binomial(m, k)
}

fn exact_integer(r: &Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::InexactDivision(format!("{} = {r} is not an integer", what())))
    }
}

fn check_b_indices(n: usize, j: usize) -> Result<()> {
    if n < 2 || j == 0 || j >= n {
        return Err(Error::InvalidArgument(format!(
            "b_(n,j) needs n >= 2 and 1 <= j <= n-1, got n = {n}, j = {j}"
        )));
    }
    Ok(())
}

/// The summation formula for `b_{n,j}`, evaluated literally with exact
/// rational terms; valid for every `j` under the extended binomial.
fn b_poly_by_formula(n: usize, j: usize) -> Result<QPoly> {
    let (ni, ji) = (n as i64, j as i64);
    let coeffs = (0..=ni - 1 - ji)
        .map(|k| {
            let weight = binomial_ext(ji + k - 2, ji - 2) * binomial(ni - 2 - k, ji - 1);
            let term = Rational::new(BigInt::from(ni - 1 + ji - k) * weight, BigInt::from(ji));
            exact_integer(&term, || format!("coefficient of q^{k} in b_({n},{j})"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

/// `b_{n,j}` as a polynomial in `q`. For `j = 1` this is the constant `n`.
pub fn b_poly(n: usize, j: usize) -> Result<QPoly> {
    check_b_indices(n, j)?;
    if j == 1 {
        return Ok(Poly::constant(n as i64));
    }
    b_poly_by_formula(n, j)
}

/// `b_{n,j}` from the manifestly integral rewriting
/// `sum_k C(j+k-2, j-2) (C(n-k-2, j-1) + C(n-k-1, j)) q^k`.
pub fn b_poly_integer_form(n: usize, j: usize) -> Result<QPoly> {
    check_b_indices(n, j)?;
    let (ni, ji) = (n as i64, j as i64);
    Ok(Poly::from_coeffs(
        (0..=ni - 1 - ji)
            .map(|k| {
                binomial_ext(ji + k - 2, ji - 2)
                    * (binomial(ni - k - 2, ji - 1) + binomial(ni - k - 1, ji))
            })
            .collect(),
    ))
}

/// The literal summation at `j = 1`, for comparison with the `b_{n,1} = n`
/// shortcut.
pub fn b_poly_literal(n: usize, j: usize) -> Result<QPoly> {
    check_b_indices(n, j)?;
    b_poly_by_formula(n, j)
}

/// The `a_{k,j}` table.
#[derive(Clone, Debug)]
pub struct ATable {
    // rows[k][j], k >= 2, 0 <= j <= k
    rows: Vec<Vec<QPoly>>,
}

impl ATable {
    pub fn new(k_max: usize) -> Self {
        let k_max = k_max.max(3);
        let mut rows: Vec<Vec<QPoly>> = vec![Vec::new(); 2];
        rows.push(vec![Poly::zero(), Poly::one(), Poly::zero()]);
        rows.push(vec![Poly::zero(), Poly::one(), Poly::constant(2), Poly::zero()]);
        let one_plus_q = Poly::from_i64s(&[1, 1]);
        let q = Poly::from_i64s(&[0, 1]);
        for k in 4..=k_max {
            let row: Vec<QPoly> = (0..=k)
                .map(|j| {
                    let get = |kk: usize, jj: usize| rows[kk].get(jj).cloned().unwrap_or_default();
                    let mut a = &one_plus_q * &get(k - 1, j) - &q * &get(k - 2, j);
                    if j >= 1 {
                        a = a + get(k - 1, j - 1);
                    }
                    a
                })
                .collect();
            rows.push(row);
        }
        ATable { rows }
    }

    pub fn k_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `a_{k,j}`; zero outside the stored range.
    pub fn get(&self, k: usize, j: i64) -> QPoly {
        if k < 2 || k > self.k_max() || j < 0 {
            return Poly::zero();
        }
        self.rows[k].get(j as usize).cloned().unwrap_or_default()
    }
}

/// `g_n` and `g_n(1k)` for `n <= n_max`.
#[derive(Clone, Debug)]
pub struct GTable {
    n_max: usize,
    g: Vec<QPoly>,
    // g1k[n][k], 2 <= k <= n
    g1k: Vec<Vec<QPoly>>,
    a: ATable,
}

impl GTable {
    pub fn new(n_max: usize) -> Result<Self> {
        if n_max == 0 {
            return Err(Error::InvalidArgument("n_max must be positive".into()));
        }
        let q_minus_1 = Poly::from_i64s(&[-1, 1]);
        let powers: Vec<QPoly> = (0..n_max as u32).map(|e| q_minus_1.pow(e)).collect();

        let mut g = vec![Poly::zero(), Poly::one()];
        for n in 2..=n_max {
            let mut acc = Poly::zero();
            for j in 1..n {
                acc = acc + &(&b_poly(n, j)? * &powers[j - 1]) * &g[n - j];
            }
            g.push(acc);
        }

        let a = ATable::new(n_max);
        let mut g1k = vec![Vec::new(); 2];
        for n in 2..=n_max {
            let mut row = vec![Poly::zero(), Poly::zero(), g[n - 1].scale(&BigInt::from(2))];
            for k in 3..=n {
                let mut acc = Poly::zero();
                for j in 1..k {
                    acc = acc + &(&a.get(k, j as i64) * &powers[j - 1]) * &g[n - j];
                }
                row.push(acc);
            }
            g1k.push(row);
        }
        Ok(GTable { n_max, g, g1k, a })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn a_table(&self) -> &ATable {
        &self.a
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.n_max {
            return Err(Error::InvalidArgument(format!(
                "n = {n} outside the table range 1..={}",
                self.n_max
            )));
        }
        Ok(())
    }

    pub fn g(&self, n: usize) -> Result<&QPoly> {
        self.check_n(n)?;
        Ok(&self.g[n])
    }

    /// `g_n(1k)` for `2 <= k <= n`.
    pub fn g1k(&self, n: usize, k: usize) -> Result<&QPoly> {
        self.check_n(n)?;
        if k < 2 || k > n {
            return Err(Error::InvalidArgument(format!(
                "g_n(1k) needs 2 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        Ok(&self.g1k[n][k])
    }

    /// Coefficient of `q^r` in `g_n`, or in `g_n(1k)` when `k` is given.
    /// Prefixes that no flattened permutation can have count zero.
    pub fn coeff(&self, n: usize, r: usize, k: Option<usize>) -> Result<BigInt> {
        self.check_n(n)?;
        match k {
            None => Ok(self.g[n].coeff(r)),
            Some(k) if k < 2 || k > n => Ok(BigInt::zero()),
            Some(k) => Ok(self.g1k[n][k].coeff(r)),
        }
    }

    /// Structural invariants: base values, total mass `n!`, nonnegative
    /// coefficients, the split over second letters and `g_n(12) = 2 g_{n-1}`.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::IdentityViolated(msg));
        if self.g[1] != Poly::one() {
            return fail("g_1 != 1".into());
        }
        if self.n_max >= 2 && self.g[2] != Poly::constant(2) {
            return fail("g_2 != 2".into());
        }
        for n in 1..=self.n_max {
            let gn = &self.g[n];
            if gn.eval(&BigInt::one()) != factorial(n as u64) {
                return fail(format!("g_{n}(1) != {n}!"));
            }
            if gn.coeffs().iter().any(Signed::is_negative) {
                return fail(format!("g_{n} has a negative coefficient"));
            }
            if n >= 2 {
                let split = (2..=n).fold(Poly::zero(), |acc, k| acc + &self.g1k[n][k]);
                if &split != gn {
                    return fail(format!("sum_k g_{n}(1k) != g_{n}"));
                }
                if self.g1k[n][2] != self.g[n - 1].scale(&BigInt::from(2)) {
                    return fail(format!("g_{n}(12) != 2 g_{}", n - 1));
                }
                for k in 2..=n {
                    if self.g1k[n][k].coeffs().iter().any(Signed::is_negative) {
                        return fail(format!("g_{n}(1{k}) has a negative coefficient"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Every `g_{n,r}(1k)` with `r >= 1` is even.
    pub fn check_evenness(&self) -> Result<()> {
        let two = BigInt::from(2);
        for n in 2..=self.n_max {
            for k in 2..=n {
                for (r, c) in self.g1k[n][k].coeffs().iter().enumerate().skip(1) {
                    if !c.is_multiple_of(&two) {
                        return Err(Error::IdentityViolated(format!(
                            "g_({n},{r})(1{k}) = {c} is odd"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Right side of `g_n(1i) = g_{n-1} + sum_{j<i} (q^{i-j} - 1) g_{n-1}(1j)`.
    pub fn g1i_from_previous(&self, n: usize, i: usize) -> Result<QPoly> {
        self.check_n(n)?;
        if i < 3 || i > n {
            return Err(Error::InvalidArgument(format!("need 3 <= i <= n, got i = {i}")));
        }
        let mut acc = self.g[n - 1].clone();
        for j in 2..i {
            let factor = &Poly::monomial(1, i - j) - &Poly::one();
            acc = acc + &factor * &self.g1k[n - 1][j];
        }
        Ok(acc)
    }

    /// Right side of the three-term recurrence
    /// `g_n(1k) = (1+q) g_n(1(k-1)) - q g_n(1(k-2)) - (1-q) g_{n-1}(1(k-1))`, `5 <= k <= n`.
    pub fn g1k_three_term(&self, n: usize, k: usize) -> Result<QPoly> {
        self.check_n(n)?;
        if k < 5 || k > n {
            return Err(Error::InvalidArgument(format!("need 5 <= k <= n, got k = {k}")));
        }
        Ok(&Poly::from_i64s(&[1, 1]) * &self.g1k[n][k - 1]
            - &Poly::from_i64s(&[0, 1]) * &self.g1k[n][k - 2]
            - &Poly::from_i64s(&[1, -1]) * &self.g1k[n - 1][k - 1])
    }

    /// `g_n(13) = g_{n-1} - 2(1-q) g_{n-2}` for `n >= 3`.
    pub fn g13_direct(&self, n: usize) -> Result<QPoly> {
        self.check_n(n)?;
        if n < 3 {
            return Err(Error::InvalidArgument("g_n(13) needs n >= 3".into()));
        }
        Ok(&self.g[n - 1] - &(&Poly::from_i64s(&[2, -2]) * &self.g[n - 2]))
    }

    /// `g_n(14) = g_{n-1} - (1-q)(3+2q) g_{n-2} + 2(1-q)^2 g_{n-3}` for `n >= 4`.
    pub fn g14_direct(&self, n: usize) -> Result<QPoly> {
        self.check_n(n)?;
        if n < 4 {
            return Err(Error::InvalidArgument("g_n(14) needs n >= 4".into()));
        }
        let one_minus_q = Poly::from_i64s(&[1, -1]);
        Ok(&self.g[n - 1] - &(&(&one_minus_q * &Poly::from_i64s(&[3, 2])) * &self.g[n - 2])
            + (&one_minus_q.pow(2).scale(&BigInt::from(2)) * &self.g[n - 3]))
    }

    /// `g_n'(1) / n!`.
    pub fn average(&self, n: usize) -> Result<Rational> {
        let gn = self.g(n)?;
        Ok(Rational::new(gn.derivative().eval(&BigInt::one()), factorial(n as u64)))
    }
}

pub fn g_table(n_max: usize) -> Result<GTable> {
    GTable::new(n_max)
}

/// `g_n(1k)` for `2 <= k <= n`.
pub fn g1k_poly(n: usize, k: usize) -> Result<QPoly> {
    GTable::new(n)?.g1k(n, k).cloned()
}

/// Coefficient of `q^r` in `g_n` or `g_n(1k)`.
pub fn coeff_g(n: usize, r: usize, k: Option<usize>) -> Result<BigInt> {
    GTable::new(n)?.coeff(n, r, k)
}

/// Closed form `(n^2 + 3n + 8)/12 - H_n`.
pub fn average_closed_form(n: usize) -> Rational {
    let n_int = BigInt::from(n);
    Rational::new(&n_int * &n_int + BigInt::from(3) * &n_int + 8, BigInt::from(12)) - harmonic(n as u64)
}

/// Average number of occurrences over `S_n`, computed from `g_n'(1)` and
/// checked against the harmonic-number closed form.
pub fn average_occurrences(n: usize) -> Result<Rational> {
    let avg = GTable::new(n)?.average(n)?;
    let closed = average_closed_form(n);
    if avg != closed {
        return Err(Error::IdentityViolated(format!(
            "average for n = {n}: g_n'(1)/n! = {avg}, closed form = {closed}"
        )));
    }
    Ok(avg)
}

/// Avoider counts `f_1..=f_n_max` from the recurrence at `q = 0`,
/// each checked against `2^{n-1}`.
pub fn avoider_counts(n_max: usize) -> Result<Vec<BigInt>> {
    let mut f = vec![BigInt::zero(), BigInt::one()];
    for n in 2..=n_max {
        let mut acc = BigInt::zero();
        for j in 1..n {
            let (ni, ji) = (n as i64, j as i64);
            let c = Rational::new(BigInt::from(ni - 1 + ji) * binomial(ni - 2, ji - 1), BigInt::from(ji));
            let c = exact_integer(&c, || format!("q = 0 weight for n = {n}, j = {j}"))?;
            let term = c * &f[n - j];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        f.push(acc);
    }
    for (n, fn_) in f.iter().enumerate().skip(1) {
        let expected = BigInt::one() << (n - 1);
        if *fn_ != expected {
            return Err(Error::IdentityViolated(format!("f_{n} = {fn_}, expected 2^{}", n - 1)));
        }
    }
    f.remove(0);
    Ok(f)
}

/// Number of permutations of length `n` whose flattening avoids 13-2.
pub fn avoider_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    Ok(avoider_counts(n)?.pop().unwrap())
}

// Polynomials in y with coefficients in Z[q], indexed by power of y.
type QyPoly = Vec<QPoly>;

fn qy_add(a: &QyPoly, b: &QyPoly) -> QyPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| &a.get(i).cloned().unwrap_or_default() + &b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn qy_mul(a: &QyPoly, b: &QyPoly) -> QyPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Poly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn qy_neg(a: &QyPoly) -> QyPoly {
    a.iter().map(|p| -p).collect()
}

fn qy_get(a: &QyPoly, i: usize) -> QPoly {
    a.get(i).cloned().unwrap_or_default()
}

/// Outcome of comparing the rational closed form of `A(x, y)` with the
/// `a_{k,j}` recurrence and with the `b_{n,j}` formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormReport {
    pub a_checked: usize,
    pub b_checked: usize,
    pub first_mismatch: Option<String>,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Expand `A(x,y) = (1 - qx + xy) / ((1-x)(1-qx) - xy)` through `x^order`
/// and compare `[x^{k-2} y^{j-1}]` with `a_{k,j}` for `k <= k_max`. The
/// partial sums over `k <= n` (the coefficients of `B(1, y, z)`) are
/// compared with `b_{n,j}` for `j >= 2`.
pub fn verify_a_closed_form(k_max: usize, order: usize) -> Result<ClosedFormReport> {
    if k_max < 2 || order < k_max - 2 {
        return Err(Error::InvalidArgument(format!(
            "need k_max >= 2 and order >= k_max - 2, got k_max = {k_max}, order = {order}"
        )));
    }
    let q = Poly::from_i64s(&[0, 1]);
    let one = Poly::one();
    // numerator 1 + (y - q) x
    let numer: Vec<QyPoly> = vec![vec![one.clone()], vec![-&q, one.clone()]];
    // denominator (1 - x)(1 - qx) - xy = 1 - (1 + q + y) x + q x^2
    let denom: Vec<QyPoly> = vec![
        vec![one.clone()],
        vec![Poly::from_i64s(&[-1, -1]), -&one],
        vec![q.clone()],
    ];
    let mut series: Vec<QyPoly> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut acc = numer.get(m).cloned().unwrap_or_default();
        for i in 1..=m.min(denom.len() - 1) {
            acc = qy_add(&acc, &qy_neg(&qy_mul(&denom[i], &series[m - i])));
        }
        series.push(acc);
    }

    let a = ATable::new(k_max);
    let mut report = ClosedFormReport {
        a_checked: 0,
        b_checked: 0,
        first_mismatch: None,
    };
    'outer: for k in 2..=k_max {
        let row = &series[k - 2];
        for j in 1..=row.len().max(k) {
            let expected = a.get(k, j as i64);
            if qy_get(row, j - 1) != expected {
                report.first_mismatch = Some(format!("a_({k},{j})"));
                break 'outer;
            }
            report.a_checked += 1;
        }
    }
    if report.first_mismatch.is_some() {
        return Ok(report);
    }
    'outer_b: for n in 3..=k_max {
        for j in 2..n {
            let partial = (2..=n).fold(Poly::zero(), |acc, k| acc + qy_get(&series[k - 2], j - 1));
            if partial != b_poly(n, j)? {
                report.first_mismatch = Some(format!("b_({n},{j})"));
                break 'outer_b;
            }
            report.b_checked += 1;
        }
    }
    Ok(report)
}
