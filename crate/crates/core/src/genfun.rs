//! The kernel-method pipeline for a fixed number `r` of occurrences.
//!
//! `G_r(x, v) = sum_{n >= r+3} sum_i g_{n,r}(1i) v^{i-2} x^n` is computed as a
//! polynomial in `v` over truncated integer series in `x`. Each `G_r` comes
//! from the solved kernel equation: a bracket built from the finite boundary
//! data and the lower `G_j` is divided exactly by `1 - s v` (`s = 1 - x`,
//! `t = 1 - 2x`). From `G_r` the integer polynomial
//! `P_r = s^{2r-1} t^{r+1} G_r / (2 x^{r+3})` is extracted and split into the
//! `c_{r,l}(x)` of `P_r = 2 c_{r,0} + sum_l c_{r,l} s^{l-1} t^l v^l`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{xvpoly_extract_from_series, Poly, Rational, VPoly, XSeries, XVPoly};
use crate::permcore::Enumerator;
use crate::recurrence::GTable;
use crate::verify::Check;

/// Largest `r` the pipeline accepts.
pub const R_LIMIT: usize = 8;

/// Default truncation order for a pipeline reaching `r_max`: `P_r` has
/// x-degree at most `4r + 2` once the `x^{r+3}` is restored, and eight
/// guard coefficients confirm the tail vanishes.
pub fn default_order(r_max: usize) -> usize {
    4 * r_max + 10
}

/// The finitely many small counts the kernel equation for `G_r` depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryData {
    pub r: usize,
    /// `top_row[i - 2] = g_{r+2,r}(1i)` for `2 <= i <= r+2`.
    pub top_row: Vec<BigInt>,
    /// `inner[n][j][k - 2] = g_{n+3,j}(1k)` for `0 <= j <= n <= r-2`, `2 <= k <= j+2`.
    pub inner: Vec<Vec<Vec<BigInt>>>,
}

impl BoundaryData {
    pub fn from_table(r: usize, table: &GTable) -> Result<Self> {
        let top_row = (2..=r + 2)
            .map(|i| table.coeff(r + 2, r, Some(i)))
            .collect::<Result<_>>()?;
        let inner = (0..r.saturating_sub(1))
            .map(|n| {
                (0..=n)
                    .map(|j| (2..=j + 2).map(|k| table.coeff(n + 3, j, Some(k))).collect())
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(BoundaryData { r, top_row, inner })
    }

    pub fn top(&self, i: usize) -> &BigInt {
        &self.top_row[i - 2]
    }

    pub fn inner(&self, n: usize, j: usize, k: usize) -> &BigInt {
        &self.inner[n][j][k - 2]
    }

    /// Compare every entry with brute-force enumeration.
    pub fn cross_check_oracle(&self, enumerator: &Enumerator) -> Result<()> {
        let r = self.r;
        let tables = enumerator.second_letter_tables(r + 2)?;
        for i in 2..=r + 2 {
            let oracle = BigInt::from(tables[i].count(r));
            if &oracle != self.top(i) {
                return Err(Error::IdentityViolated(format!(
                    "g_({},{r})(1{i}): recurrence {} vs oracle {oracle}",
                    r + 2,
                    self.top(i)
                )));
            }
        }
        for (n, block) in self.inner.iter().enumerate() {
            let tables = enumerator.second_letter_tables(n + 3)?;
            for (j, row) in block.iter().enumerate() {
                for (k, value) in row.iter().enumerate().map(|(k, v)| (k + 2, v)) {
                    let oracle = BigInt::from(tables[k].count(j));
                    if &oracle != value {
                        return Err(Error::IdentityViolated(format!(
                            "g_({},{j})(1{k}): recurrence {value} vs oracle {oracle}",
                            n + 3
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Positivity of every `g_{r+2,r}(1i)`.
    pub fn top_row_positive(&self) -> bool {
        self.top_row.iter().all(|c| c > &BigInt::zero())
    }

    /// Every entry with occurrence count at least one is even.
    pub fn even(&self) -> bool {
        let two = BigInt::from(2);
        let top_ok = self.r == 0 || self.top_row.iter().all(|c| c.is_multiple_of(&two));
        let inner_ok = self.inner.iter().all(|block| {
            block
                .iter()
                .enumerate()
                .skip(1)
                .all(|(_, row)| row.iter().all(|c| c.is_multiple_of(&two)))
        });
        top_ok && inner_ok
    }
}

/// `T_h(x, v) = 1 - (1 - 2x)(1 - v) sum_{k<h} (1 - x)^k v^k`.
pub fn t_poly(h: usize) -> XVPoly {
    assert!(h >= 1, "T_h needs h >= 1");
    let s = Poly::from_i64s(&[1, -1]);
    let t = Poly::from_i64s(&[1, -2]);
    let geometric = XVPoly::from_v_coeffs((0..h as u32).map(|k| s.pow(k)).collect());
    let one_minus_v = XVPoly::from_v_coeffs(vec![Poly::one(), Poly::constant(-1)]);
    let one = XVPoly::from_x_poly(Poly::one());
    &one - &(&(&XVPoly::from_x_poly(t) * &one_minus_v) * &geometric)
}

/// `c_{r,0}, ..., c_{r,r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CTable {
    pub r: usize,
    pub c: Vec<Poly>,
}

impl CTable {
    /// Split `P_r` into its `c_{r,l}` with checked-exact divisions.
    pub fn decompose(r: usize, p: &XVPoly) -> Result<Self> {
        let s = Poly::from_i64s(&[1, -1]);
        let t = Poly::from_i64s(&[1, -2]);
        let mut c = vec![p.v_coeff(0).div_exact_const(&BigInt::from(2))?];
        for l in 1..=r {
            let divisor = &s.pow(l as u32 - 1) * &t.pow(l as u32);
            c.push(p.v_coeff(l).div_exact(&divisor).map_err(|e| {
                Error::InexactDivision(format!("[v^{l}]P_{r} by s^{}t^{l}: {e}", l - 1))
            })?);
        }
        let table = CTable { r, c };
        if &table.recompose() != p {
            return Err(Error::IdentityViolated(format!(
                "P_{r} has terms beyond v^{r}"
            )));
        }
        Ok(table)
    }

    /// `2 c_{r,0} + sum_l c_{r,l} s^{l-1} t^l v^l`.
    pub fn recompose(&self) -> XVPoly {
        let s = Poly::from_i64s(&[1, -1]);
        let t = Poly::from_i64s(&[1, -2]);
        let mut by_v = vec![self.c[0].scale(&BigInt::from(2))];
        for (l, c) in self.c.iter().enumerate().skip(1) {
            by_v.push(&(c * &s.pow(l as u32 - 1)) * &t.pow(l as u32));
        }
        XVPoly::from_v_coeffs(by_v)
    }

    /// `c_{r,0}(1/2)`.
    pub fn c0_at_half(&self) -> Rational {
        self.c[0].eval_rational(&Rational::new(1.into(), 2.into()))
    }

    /// The structural claims about the `c_{r,l}`: the value at one half,
    /// and the degrees (exact for `r >= 4`, upper bounds below that).
    pub fn structure_checks(&self) -> Vec<Check> {
        let r = self.r;
        let mut checks = Vec::new();
        let expected = Rational::new(BigInt::one(), BigInt::one() << (r - 1));
        let at_half = self.c0_at_half();
        checks.push(Check::new(
            format!("c_({r},0)(1/2) = 2^(1-{r})"),
            at_half == expected,
            format!("{at_half}"),
        ));
        for (l, c) in self.c.iter().enumerate() {
            let bound = if l == 0 { 3 * r - 1 } else { 3 * r - 2 * l };
            let deg = c.degree();
            let (passed, relation) = if r >= 4 {
                (deg == Some(bound), "=")
            } else {
                (deg.is_some_and(|d| d <= bound), "<=")
            };
            checks.push(Check::new(
                format!("deg c_({r},{l}) {relation} {bound}"),
                passed,
                format!("degree {}", deg.map_or("-inf".to_string(), |d| d.to_string())),
            ));
        }
        checks
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "c": self.c.iter().map(|p| p.to_json("x")).collect::<Vec<_>>(),
        })
    }
}

/// `G_r = numerator / ((1-x)^{s_power} (1-2x)^{t_power})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    pub r: usize,
    pub numerator: XVPoly,
    pub s_power: u32,
    pub t_power: u32,
}

impl RationalGF {
    pub fn expand(&self, order: usize) -> Result<VPoly> {
        let denom = &XSeries::s(order).pow(self.s_power) * &XSeries::t(order).pow(self.t_power);
        Ok(self.numerator.to_vpoly(order).mul_series(&denom.inverse()?))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "r": self.r,
            "numerator": self.numerator.to_json(),
            "denominator": { "s": "1-x", "s_power": self.s_power, "t": "1-2x", "t_power": self.t_power },
        })
    }
}

/// Both routes to `H~_r / (1 - s v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtildeRoutes {
    pub expanded: VPoly,
    pub divided: VPoly,
}

impl HtildeRoutes {
    pub fn agree(&self) -> bool {
        self.expanded == self.divided
    }
}

fn v_monomial(c: XSeries, k: usize) -> VPoly {
    VPoly::monomial(c, k)
}

/// Memoised pipeline computing `G_0, ..., G_r` at a common truncation order.
#[derive(Clone, Debug)]
pub struct KernelPipeline {
    order: usize,
    r_max: usize,
    table: GTable,
    boundaries: Vec<BoundaryData>,
    g: Vec<VPoly>,
}

impl KernelPipeline {
    pub fn new(r_max: usize) -> Result<Self> {
        KernelPipeline::with_order(r_max, default_order(r_max))
    }

    pub fn with_order(r_max: usize, order: usize) -> Result<Self> {
        if r_max > R_LIMIT {
            return Err(Error::InvalidArgument(format!(
                "r = {r_max} exceeds the pipeline limit {R_LIMIT}"
            )));
        }
        if order < r_max + 3 {
            return Err(Error::InvalidArgument(format!(
                "order {order} is too small for r = {r_max}"
            )));
        }
        let table = GTable::new(r_max + 2)?;
        let boundaries = (0..=r_max)
            .map(|r| BoundaryData::from_table(r, &table))
            .collect::<Result<_>>()?;
        Ok(KernelPipeline {
            order,
            r_max,
            table,
            boundaries,
            g: Vec::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if r > self.r_max {
            return Err(Error::InvalidArgument(format!(
                "r = {r} beyond this pipeline's r_max = {}",
                self.r_max
            )));
        }
        Ok(())
    }

    fn s(&self) -> XSeries {
        XSeries::s(self.order)
    }

    fn t(&self) -> XSeries {
        XSeries::t(self.order)
    }

    fn s_inv(&self) -> XSeries {
        self.s().inverse().expect("1 - x is a unit")
    }

    fn t_inv(&self) -> XSeries {
        self.t().inverse().expect("1 - 2x is a unit")
    }

    fn x_pow(&self, k: usize) -> XSeries {
        XSeries::monomial(1, k, self.order)
    }

    fn constant(&self, c: impl Into<BigInt>) -> XSeries {
        XSeries::constant(c, self.order)
    }

    /// `c0 + c1 v` with integer constants.
    fn linear_v(&self, c0: i64, c1: i64) -> VPoly {
        VPoly::from_coeffs(vec![self.constant(c0), self.constant(c1)], self.order)
    }

    /// The recurrence table the boundary data was read from.
    pub fn g_table(&self) -> &GTable {
        &self.table
    }

    pub fn boundary_data(&self, r: usize) -> Result<&BoundaryData> {
        self.check_r(r)?;
        Ok(&self.boundaries[r])
    }

    /// `H_r(x, v)` as an integer polynomial.
    pub fn h_poly(&self, r: usize) -> Result<XVPoly> {
        let b = self.boundary_data(r)?;
        let x_r = Poly::monomial(1, r);
        let at_one: BigInt = b.top_row.iter().sum();
        let two_minus_v = XVPoly::from_v_coeffs(vec![Poly::constant(2), Poly::constant(-1)]);
        let one_minus_v = XVPoly::from_v_coeffs(vec![Poly::one(), Poly::constant(-1)]);

        let a_part = two_minus_v.scale(&at_one) * XVPoly::from_x_poly(x_r.clone());
        let top = XVPoly::from_v_coeffs(b.top_row.iter().map(|c| Poly::constant(c.clone())).collect());
        let b_part = -&(top.shift_v(1) * XVPoly::from_x_poly(x_r));

        let mut inner_sum = XVPoly::zero();
        for (n, block) in b.inner.iter().enumerate() {
            for (j, row) in block.iter().enumerate() {
                let g_nj = XVPoly::from_v_coeffs(row.iter().map(|c| Poly::constant(c.clone())).collect());
                inner_sum = &inner_sum + &(g_nj.shift_v(r - j) * XVPoly::from_x_poly(Poly::monomial(1, n)));
            }
        }
        let c_part = -&(&(one_minus_v * XVPoly::from_x_poly(Poly::monomial(1, 1))) * &inner_sum);
        Ok(&(&a_part + &b_part) + &c_part)
    }

    pub fn h_r(&self, r: usize) -> Result<VPoly> {
        Ok(self.h_poly(r)?.to_vpoly(self.order))
    }

    /// `H~_r = H_r(x, v) - (2 - v) s t^{-1} H_r(x, 1/s)`.
    pub fn htilde(&self, r: usize) -> Result<VPoly> {
        let h = self.h_r(r)?;
        let at_kernel_root = h.substitute(&self.s_inv());
        let correction = self
            .linear_v(2, -1)
            .mul_series(&(&(&self.s() * &self.t_inv()) * &at_kernel_root));
        Ok(&h - &correction)
    }

    /// `H~_r / (1 - s v)` by exact kernel division of [`Self::htilde`].
    pub fn htilde_over_kernel_divided(&self, r: usize) -> Result<VPoly> {
        self.htilde(r)?.div_kernel(&self.s(), r)
    }

    /// `H~_r / (1 - s v)` from its expansion in boundary data, geometric
    /// partial sums and the `T_h` polynomials.
    pub fn htilde_over_kernel_expanded(&self, r: usize) -> Result<VPoly> {
        let b = self.boundary_data(r)?;
        let order = self.order;
        let (s, t, s_inv, t_inv) = (self.s(), self.t(), self.s_inv(), self.t_inv());
        let sv = v_monomial(s.clone(), 1);

        let mut first = VPoly::zero(order);
        for i in 2..=r + 2 {
            let g = b.top(i);
            if g.is_zero() {
                continue;
            }
            let mut geometric = VPoly::zero(order);
            let mut power = VPoly::constant(XSeries::one(order));
            for _ in 0..=i - 2 {
                geometric = &geometric + &power;
                power = &power * &sv;
            }
            let bracket = &VPoly::constant(XSeries::one(order)) + &geometric.mul_series(&t);
            first = &first + &bracket.mul_series(&s_inv.pow(i as u32 - 1).scale(g));
        }
        let first = first.mul_series(&(&self.x_pow(r) * &t_inv));

        let mut second = VPoly::zero(order);
        for (n, block) in b.inner.iter().enumerate() {
            for (j, row) in block.iter().enumerate() {
                for (k, g) in row.iter().enumerate().map(|(k, g)| (k + 2, g)) {
                    if g.is_zero() {
                        continue;
                    }
                    let h = r - j + k - 2;
                    let weight = (&self.x_pow(n + 1) * &s_inv.pow(h as u32)).scale(g);
                    second = &second + &t_poly(h).to_vpoly(order).mul_series(&weight);
                }
            }
        }
        let second = second.mul_series(&t_inv);
        Ok(&first - &second)
    }

    pub fn htilde_routes(&self, r: usize) -> Result<HtildeRoutes> {
        Ok(HtildeRoutes {
            expanded: self.htilde_over_kernel_expanded(r)?,
            divided: self.htilde_over_kernel_divided(r)?,
        })
    }

    /// `H~_r / (1 - s v)`, required to agree between both routes.
    pub fn htilde_over_kernel(&self, r: usize) -> Result<VPoly> {
        let routes = self.htilde_routes(r)?;
        if !routes.agree() {
            return Err(Error::IdentityViolated(format!(
                "the two expressions for H~_{r}/(1 - sv) differ"
            )));
        }
        Ok(routes.divided)
    }

    /// `G_r(x, v)`, computing and caching every lower `G_j` on the way.
    pub fn g_series(&mut self, r: usize) -> Result<&VPoly> {
        self.check_r(r)?;
        while self.g.len() <= r {
            let next = self.compute_g(self.g.len())?;
            self.g.push(next);
        }
        Ok(&self.g[r])
    }

    fn compute_g(&self, r: usize) -> Result<VPoly> {
        let order = self.order;
        let s = self.s();
        if r == 0 {
            let g0 = self.htilde(0)?.div_kernel(&s, 0)?.shift_x(3);
            let closed = VPoly::constant(self.x_pow(3).scale(&BigInt::from(4)).div_exact(&self.t())?);
            if g0 != closed {
                return Err(Error::IdentityViolated("G_0 != 4x^3/t".into()));
            }
            return Ok(g0);
        }
        let (t_inv, s_inv) = (self.t_inv(), self.s_inv());
        let one_minus_v = self.linear_v(1, -1);
        let two_minus_v = self.linear_v(2, -1);

        // (4x^4/t) ((1-v) v^r + x (2-v) / (s^r t))
        let g0_part = &one_minus_v.shift_v(r)
            + &two_minus_v.mul_series(&(&(&self.x_pow(1) * &s_inv.pow(r as u32)) * &t_inv));
        let mut bracket = g0_part.mul_series(&(&self.x_pow(4) * &t_inv).scale(&BigInt::from(4)));

        bracket = &bracket + &self.htilde(r)?.shift_x(3);

        let mut lower = VPoly::zero(order);
        for j in 1..r {
            let gj = &self.g[j];
            let at_root = gj.substitute(&s_inv);
            let weight = &(&(&self.x_pow(1) * &at_root) * &s_inv.pow((r - j) as u32)) * &t_inv;
            lower = &lower + &(&one_minus_v * &gj.shift_v(r - j));
            lower = &lower + &two_minus_v.mul_series(&weight);
        }
        bracket = &bracket + &lower.shift_x(1);

        bracket.div_kernel(&s, r)
    }

    /// `(1 - v + v x) G_r(x, v)` and the right side of its recurrence,
    /// `x(1-v) sum_{j<r} v^{r-j} G_j + x(2-v) G_r(x,1) + x^3 H_r`.
    pub fn kernel_equation_sides(&mut self, r: usize) -> Result<(VPoly, VPoly)> {
        self.g_series(r)?;
        let order = self.order;
        let kernel = VPoly::from_coeffs(
            vec![XSeries::one(order), XSeries::from_poly(&Poly::from_i64s(&[-1, 1]), order)],
            order,
        );
        let lhs = &kernel * &self.g[r];
        let mut sum = VPoly::zero(order);
        for j in 0..r {
            sum = &sum + &self.g[j].shift_v(r - j);
        }
        let rhs = &(&(&self.linear_v(1, -1) * &sum).shift_x(1)
            + &self.linear_v(2, -1).mul_series(&self.g[r].at_v_one()).shift_x(1))
            + &self.h_r(r)?.shift_x(3);
        Ok((lhs, rhs))
    }

    /// `G_r(x, 1)` and `(x/t) sum_{j<r} s^{j-r} G_j(x, 1/s) - (x^2 s / t) H_r(x, 1/s)`.
    pub fn kernel_root_sides(&mut self, r: usize) -> Result<(XSeries, XSeries)> {
        self.g_series(r)?;
        let (s_inv, t_inv) = (self.s_inv(), self.t_inv());
        let mut sum = XSeries::zero(self.order);
        for j in 0..r {
            sum = &sum + &(&s_inv.pow((r - j) as u32) * &self.g[j].substitute(&s_inv));
        }
        let rhs = &(&(&self.x_pow(1) * &t_inv) * &sum)
            - &(&(&(&self.x_pow(2) * &self.s()) * &t_inv) * &self.h_r(r)?.substitute(&s_inv));
        Ok((self.g[r].at_v_one(), rhs))
    }

    /// `P_r(x, v)` for `r >= 1`.
    pub fn p_poly(&mut self, r: usize) -> Result<XVPoly> {
        if r == 0 {
            return Err(Error::InvalidArgument("P_r is defined for r >= 1".into()));
        }
        let g = self.g_series(r)?.clone();
        let s = Poly::from_i64s(&[1, -1]);
        let t = Poly::from_i64s(&[1, -2]);
        let pre = XVPoly::from_x_poly(&s.pow(2 * r as u32 - 1) * &t.pow(r as u32 + 1));
        xvpoly_extract_from_series(&g, &pre, r + 3, &BigInt::from(2), 3 * r - 1)
    }

    /// The `c_{r,l}` decomposition of `P_r`; every structural claim must hold.
    pub fn c_table(&mut self, r: usize) -> Result<CTable> {
        let table = CTable::decompose(r, &self.p_poly(r)?)?;
        if let Some(bad) = table.structure_checks().into_iter().find(|c| !c.passed) {
            return Err(Error::IdentityViolated(format!("{} ({})", bad.claim, bad.detail)));
        }
        Ok(table)
    }

    /// `G_r` as a rational function, re-expanded and compared with the series.
    pub fn rational_gf(&mut self, r: usize) -> Result<RationalGF> {
        let gf = if r == 0 {
            RationalGF {
                r,
                numerator: XVPoly::from_x_poly(Poly::monomial(4, 3)),
                s_power: 0,
                t_power: 1,
            }
        } else {
            let p = self.p_poly(r)?;
            RationalGF {
                r,
                numerator: (&p * &XVPoly::from_x_poly(Poly::monomial(2, r + 3))),
                s_power: 2 * r as u32 - 1,
                t_power: r as u32 + 1,
            }
        };
        if gf.expand(self.order)? != *self.g_series(r)? {
            return Err(Error::IdentityViolated(format!(
                "re-expanded rational form of G_{r} differs from the series"
            )));
        }
        Ok(gf)
    }

    /// Compare `[x^n v^{i-2}] G_r` with `g_{n,r}(1i)` from `table` for
    /// `n <= min(order, table.n_max())`, and confirm nothing below `x^{r+3}`.
    pub fn compare_with_table(&mut self, r: usize, table: &GTable) -> Result<usize> {
        let g = self.g_series(r)?.clone();
        let n_top = self.order.min(table.n_max());
        let mut compared = 0;
        for n in 0..=n_top {
            for i in 2..=r + 2 {
                let series_value = g.coeff(i - 2).coeff(n);
                let expected = if n >= r + 3 {
                    table.coeff(n, r, Some(i))?
                } else {
                    BigInt::zero()
                };
                if series_value != expected {
                    return Err(Error::IdentityViolated(format!(
                        "[x^{n} v^{}]G_{r} = {series_value}, expected g_({n},{r})(1{i}) = {expected}",
                        i - 2
                    )));
                }
                compared += 1;
            }
        }
        Ok(compared)
    }
}

/// Boundary data for `r`, read from the recurrence and cross-checked by
/// brute force when `r + 2 <= 9`.
pub fn boundary_data(r: usize) -> Result<BoundaryData> {
    let pipeline = KernelPipeline::with_order(r, r + 3)?;
    let data = pipeline.boundary_data(r)?.clone();
    let enumerator = Enumerator::new(9, true);
    if r + 2 <= enumerator.limit {
        data.cross_check_oracle(&enumerator)?;
    }
    Ok(data)
}

/// `H_r(x, v)` truncated at `order`.
pub fn h_r(r: usize, order: usize) -> Result<VPoly> {
    KernelPipeline::with_order(r, order.max(r + 3))?
        .h_r(r)
        .map(|h| h.truncate(order))
}

/// `H~_r / (1 - s v)` at `order`, with both routes required to agree.
pub fn htilde_over_kernel(r: usize, order: usize) -> Result<VPoly> {
    KernelPipeline::with_order(r, order)?.htilde_over_kernel(r)
}

/// `G_r(x, v)` truncated at `order`.
pub fn g_series(r: usize, order: usize) -> Result<VPoly> {
    KernelPipeline::with_order(r, order)?.g_series(r).cloned()
}

/// `P_r(x, v)` at the default truncation order.
pub fn p_poly(r: usize) -> Result<XVPoly> {
    KernelPipeline::new(r)?.p_poly(r)
}

pub fn c_table(r: usize) -> Result<CTable> {
    KernelPipeline::new(r)?.c_table(r)
}

pub fn rational_gf(r: usize) -> Result<RationalGF> {
    KernelPipeline::new(r)?.rational_gf(r)
}

/// Itemised check of every structural claim about `c_{r,l}` for `1 <= r <= r_max`,
/// plus positivity of the top boundary row (both from the counts and from
/// explicit witnesses) for `r >= 4`.
pub fn verify_c_structure(r_max: usize) -> Result<Vec<Check>> {
    let mut pipeline = KernelPipeline::new(r_max)?;
    let mut checks = Vec::new();
    for r in 1..=r_max {
        let p = match pipeline.p_poly(r) {
            Ok(p) => p,
            Err(e) => {
                checks.push(Check::new(format!("P_{r} is an integer polynomial"), false, e.to_string()));
                continue;
            }
        };
        checks.push(Check::new(
            format!("P_{r} is an integer polynomial with deg_v = {r}"),
            p.v_degree() == Some(r),
            format!("deg_v = {:?}, deg_x = {:?}", p.v_degree(), p.x_degree()),
        ));
        match CTable::decompose(r, &p) {
            Ok(table) => {
                checks.push(Check::new(format!("c_({r},l) are integer polynomials"), true, String::new()));
                checks.extend(table.structure_checks());
            }
            Err(e) => checks.push(Check::new(format!("c_({r},l) are integer polynomials"), false, e.to_string())),
        }
        if r >= 4 {
            let b = pipeline.boundary_data(r)?;
            checks.push(Check::new(
                format!("g_({},{r})(1(l+2)) >= 1 for 0 <= l <= {r}", r + 2),
                b.top_row_positive(),
                format!("{:?}", b.top_row.iter().map(ToString::to_string).collect::<Vec<_>>()),
            ));
            let witnesses_ok = (0..=r).all(|i| {
                crate::permcore::witness_word(r, i)
                    .map(|w| crate::permcore::count_13_2(&w) == r && w.letters()[1] as usize == i + 2)
                    .unwrap_or(false)
            });
            checks.push(Check::new(
                format!("witness words of length {} with {r} occurrences exist for every second letter", r + 2),
                witnesses_ok,
                String::new(),
            ));
        }
    }
    Ok(checks)
}

/// Published `c_{r,l}(x)` for `1 <= r <= 5`, ascending coefficients.
pub fn known_c_table(r: usize) -> Option<CTable> {
    let rows: &[&[i64]] = match r {
        1 => &[&[1], &[3, -2]],
        2 => &[&[3, -6, 2], &[5, -10, 4], &[10, -15, 6]],
        3 => &[
            &[12, -52, 78, -48, 12],
            &[18, -76, 112, -68, 16],
            &[27, -95, 128, -94, 40, -8],
            &[35, -84, 70, -20],
        ],
        4 => &[
            &[68, -544, 2011, -4854, 8938, -12986, 14422, -11780, 6800, -2624, 608, -64],
            &[88, -636, 1995, -3754, 5074, -5430, 4562, -2816, 1168, -288, 32],
            &[122, -770, 2123, -3506, 3940, -3072, 1584, -480, 64],
            &[140, -691, 1434, -1665, 1151, -448, 76],
            &[126, -420, 540, -315, 70],
        ],
        5 => &[
            &[
                473, -5812, 34630, -134895, 384546, -838332, 1416868, -1859729, 1888165, -1468200,
                858300, -365200, 106800, -19200, 1600,
            ],
            &[
                559, -6222, 32664, -109535, 265560, -490864, 701932, -773549, 648879, -406058,
                183512, -56608, 10672, -928,
            ],
            &[
                690, -6656, 29713, -82642, 160896, -229588, 242120, -186355, 101592, -37128, 8160,
                -816,
            ],
            &[771, -6237, 22806, -50268, 74031, -75151, 52111, -23586, 6276, -744],
            &[693, -4316, 11679, -18049, 17237, -10148, 3396, -496],
            &[462, -1980, 3465, -3080, 1386, -252],
        ],
        _ => return None,
    };
    Some(CTable {
        r,
        c: rows.iter().map(|c| Poly::from_i64s(c)).collect(),
    })
}
