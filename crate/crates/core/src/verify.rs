//! Itemised verification suites over all three computation routes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactalg::Poly;
use crate::genfun::{known_c_table, verify_c_structure, KernelPipeline};
use crate::permcore::{
    witness_word, count_13_2, flatten, one_to_two_pair, max_occurrences, max_pattern_perm,
    min_length_for, Enumerator, Permutation,
};
use crate::recurrence::{
    average_closed_form, average_occurrences, avoider_counts, b_poly, b_poly_integer_form,
    b_poly_literal, verify_a_closed_form, GTable,
};

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(claim: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            claim: claim.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn from_result<T>(claim: impl Into<String>, r: Result<T>) -> Self {
        match r {
            Ok(_) => Check::new(claim, true, ""),
            Err(e) => Check::new(claim, false, e.to_string()),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.claim)
        } else {
            write!(f, "{tag} {} [{}]", self.claim, self.detail)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Recurrences,
    Series,
    Supplementary,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sec2" => Ok(Suite::Recurrences),
            "sec3" => Ok(Suite::Series),
            "appendices" => Ok(Suite::Supplementary),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

/// Sizes used by the suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    /// Largest `r` for the generating-function checks.
    pub r_max: usize,
    /// Largest `n` compared against brute force.
    pub n_oracle: usize,
    /// Largest `n` for the polynomial recurrence identities.
    pub n_recurrence: usize,
    pub enumerator: Enumerator,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            r_max: 5,
            n_oracle: 8,
            n_recurrence: 12,
            enumerator: Enumerator::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "claim": c.claim,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {failed} failed", self.checks.len())
    }
}

pub fn run(suite: Suite, config: &SuiteConfig) -> Result<Report> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Recurrences | Suite::All) {
        checks.extend(recurrence_checks(config)?);
    }
    if matches!(suite, Suite::Series | Suite::All) {
        checks.extend(series_checks(config)?);
    }
    if matches!(suite, Suite::Supplementary | Suite::All) {
        checks.extend(supplementary_checks(config)?);
    }
    Ok(Report { checks })
}

/// Brute force against the recurrence, per second letter, for `n <= n_max`.
pub fn oracle_agreement(table: &GTable, enumerator: &Enumerator, n_max: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=n_max.min(table.n_max()) {
        let full = enumerator.distribution(n, &[])?;
        let g = table.g(n)?;
        let ok = (0..=g.degree().unwrap_or(0).max(full.dense().len()))
            .all(|r| BigInt::from(full.count(r)) == g.coeff(r));
        checks.push(Check::new(format!("g_{n} equals the brute-force distribution"), ok, ""));
        if n >= 2 {
            let tables = enumerator.second_letter_tables(n)?;
            let ok = (2..=n).all(|k| {
                let gk = table.g1k(n, k).unwrap();
                let len = gk.coeffs().len().max(tables[k].dense().len());
                (0..len).all(|r| BigInt::from(tables[k].count(r)) == gk.coeff(r))
            });
            checks.push(Check::new(
                format!("g_{n}(1k) equals the brute-force distribution for 2 <= k <= {n}"),
                ok,
                "",
            ));
        }
    }
    Ok(checks)
}

fn recurrence_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let n_rec = config.n_recurrence.max(4);
    let table = GTable::new(n_rec)?;
    let mut checks = vec![Check::from_result("g_n table invariants", table.validate())];

    checks.push(Check::new(
        "g_1 = 1, g_2 = 2, g_3 = 4 + 2q",
        table.g(1)? == &Poly::one()
            && table.g(2)? == &Poly::constant(2)
            && table.g(3)? == &Poly::from_i64s(&[4, 2]),
        "",
    ));
    checks.push(Check::new(
        "g_3(12) = 4, g_3(13) = 2q",
        table.g1k(3, 2)? == &Poly::constant(4) && table.g1k(3, 3)? == &Poly::from_i64s(&[0, 2]),
        "",
    ));

    checks.extend(oracle_agreement(&table, &config.enumerator, config.n_oracle)?);

    let mut b_ok = true;
    for n in 2..=n_rec {
        for j in 1..n {
            b_ok &= b_poly(n, j)? == b_poly_integer_form(n, j)? && b_poly(n, j)? == b_poly_literal(n, j)?;
        }
    }
    checks.push(Check::new(
        format!("b_(n,j) formula agrees with its integer form for n <= {n_rec}"),
        b_ok,
        "",
    ));

    let report = verify_a_closed_form(15, 15)?;
    checks.push(Check::new(
        "A(x,y) closed form matches a_(k,j) and its partial sums match b_(n,j)",
        report.passed(),
        report.first_mismatch.unwrap_or_default(),
    ));

    let mut g1i_ok = true;
    let mut g1k_ok = true;
    for n in 3..=n_rec {
        for i in 3..=n {
            g1i_ok &= &table.g1i_from_previous(n, i)? == table.g1k(n, i)?;
        }
        for k in 5..=n {
            g1k_ok &= &table.g1k_three_term(n, k)? == table.g1k(n, k)?;
        }
    }
    checks.push(Check::new(
        format!("g_n(1i) = g_(n-1) + sum_(j<i) (q^(i-j) - 1) g_(n-1)(1j) for 3 <= i <= n <= {n_rec}"),
        g1i_ok,
        "",
    ));
    checks.push(Check::new(
        format!("three-term recurrence for g_n(1k), 5 <= k <= n <= {n_rec}"),
        g1k_ok,
        "",
    ));
    let mut ini_ok = true;
    for n in 3..=n_rec {
        ini_ok &= &table.g13_direct(n)? == table.g1k(n, 3)?;
        if n >= 4 {
            ini_ok &= &table.g14_direct(n)? == table.g1k(n, 4)?;
        }
    }
    checks.push(Check::new("closed expressions for g_n(13) and g_n(14)", ini_ok, ""));

    let mut avg_ok = true;
    for n in 1..=25 {
        avg_ok &= average_occurrences(n).is_ok_and(|a| a == average_closed_form(n));
    }
    checks.push(Check::new(
        "average occurrences = (n^2 + 3n + 8)/12 - H_n for n <= 25",
        avg_ok,
        "",
    ));

    checks.push(Check::from_result("avoiders f_n = 2^(n-1) for n <= 30", avoider_counts(30)));

    checks.push(one_to_two_check(6.min(config.enumerator.limit)));
    checks.push(Check::from_result(
        format!("g_(n,r)(1k) is even for r >= 1, n <= {n_rec}"),
        table.check_evenness(),
    ));
    Ok(checks)
}

/// The one-to-two map from `S_{n-1}` onto permutations whose flattening
/// starts `1, 2`, preserving the occurrence count, for every `n <= n_max`.
pub fn one_to_two_check(n_max: usize) -> Check {
    let mut ok = true;
    let mut detail = String::new();
    for n in 2..=n_max {
        let mut images = std::collections::BTreeSet::new();
        let mut count = 0usize;
        let mut sigma: Vec<u32> = (1..n as u32).collect();
        loop {
            let s = Permutation::new(sigma.clone()).unwrap();
            let c = count_13_2(&flatten(&s));
            let (a, b) = one_to_two_pair(&s);
            for p in [a, b] {
                let f = flatten(&p);
                if f.letters()[..2] != [1, 2] || count_13_2(&f) != c {
                    ok = false;
                    detail = format!("{s} -> {p}");
                }
                images.insert(p.letters().to_vec());
                count += 1;
            }
            if !next_permutation(&mut sigma) {
                break;
            }
        }
        // injective, and the image size equals the number of flattenings starting 1,2
        let target = 2 * (1..n).product::<usize>();
        if images.len() != count || images.len() != target {
            ok = false;
            detail = format!("n = {n}: {} images from {count} values, expected {target}", images.len());
        }
    }
    Check::new(
        format!("one-to-two map onto flattenings starting 1,2 for n <= {n_max}"),
        ok,
        detail,
    )
}

fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn series_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let r_max = config.r_max;
    let mut checks = Vec::new();

    // maximal count and its extremal word
    let mut max_ok = true;
    for n in 1..=50 {
        max_ok &= count_13_2(&max_pattern_perm(n)) == max_occurrences(n);
    }
    checks.push(Check::new("1,n,2,n-1,... attains the maximal count for n <= 50", max_ok, ""));
    let n_exh = config.n_oracle.min(config.enumerator.limit);
    let mut exhaustive_ok = true;
    for n in 1..=n_exh {
        let dist = config.enumerator.distribution(n, &[])?;
        exhaustive_ok &= dist.counts.keys().next_back() == Some(&max_occurrences(n));
    }
    checks.push(Check::new(
        format!("maximal count confirmed exhaustively for n <= {n_exh}"),
        exhaustive_ok,
        "",
    ));
    let min_ok = (0..=100).all(|r: usize| {
        let n = min_length_for(r) as f64;
        r == 0 || n >= 1.0 + 2.0 * (r as f64).sqrt()
    });
    checks.push(Check::new("min_length_for(r) >= 1 + 2 sqrt(r) for r <= 100", min_ok, ""));

    let mut pipeline = KernelPipeline::new(r_max)?;
    let table = GTable::new(pipeline.order().max(12))?;
    for r in 0..=r_max {
        checks.push(Check::from_result(
            format!("G_{r} series matches g_(n,{r})(1i) from the recurrence"),
            pipeline.compare_with_table(r, &table),
        ));
        let g = pipeline.g_series(r)?.clone();
        let two = BigInt::from(2);
        let even = r == 0
            || g.coeffs().iter().all(|c| c.coeffs().iter().all(|a| (a % &two).is_zero()));
        checks.push(Check::new(format!("G_{r} coefficients are even"), even, ""));
        let starts = g.coeffs().iter().filter_map(|c| c.valuation()).min() == Some(r + 3);
        checks.push(Check::new(format!("G_{r} starts at x^{}", r + 3), starts, ""));

        let (lhs, rhs) = pipeline.kernel_equation_sides(r)?;
        checks.push(Check::new(format!("kernel equation for G_{r}"), lhs == rhs, ""));
        let (lhs, rhs) = pipeline.kernel_root_sides(r)?;
        checks.push(Check::new(format!("G_{r}(x,1) from the kernel root"), lhs == rhs, ""));
        checks.push(Check::from_result(
            format!("rational form of G_{r} re-expands to the series"),
            pipeline.rational_gf(r),
        ));
        if r >= 1 {
            let computed = pipeline.c_table(r);
            if let Some(known) = known_c_table(r) {
                let (ok, detail) = match &computed {
                    Ok(c) => (c == &known, String::new()),
                    Err(e) => (false, e.to_string()),
                };
                checks.push(Check::new(format!("c_({r},l) match the published table"), ok, detail));
            }
        }
    }
    checks.extend(verify_c_structure(r_max)?);
    Ok(checks)
}

fn supplementary_checks(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let f = avoider_counts(30)?;
    let doubling = f.windows(2).all(|w| w[1] == &w[0] * 2);
    checks.push(Check::new("f_(n+1) = 2 f_n for the avoiders", doubling, ""));
    let n_or = config.n_oracle.min(config.enumerator.limit);
    let mut oracle_ok = true;
    for n in 1..=n_or {
        oracle_ok &= BigInt::from(config.enumerator.distribution(n, &[])?.count(0)) == f[n - 1];
    }
    checks.push(Check::new(format!("avoider counts match brute force for n <= {n_or}"), oracle_ok, ""));

    let r_max = config.r_max.max(1);
    let pipeline = KernelPipeline::new(r_max)?;
    for r in 0..=r_max {
        let (ok, detail) = match pipeline.htilde_routes(r) {
            Ok(routes) => (routes.agree(), String::new()),
            Err(e) => (false, e.to_string()),
        };
        checks.push(Check::new(format!("both expressions for H~_{r}/(1 - sv) agree"), ok, detail));
    }

    let mut witness_ok = true;
    let mut detail = String::new();
    for r in 4..=12 {
        for i in 0..=r {
            let w = witness_word(r, i)?;
            if count_13_2(&w) != r || w.letters()[1] as usize != i + 2 || w.letters()[0] != 1 {
                witness_ok = false;
                detail = format!("r = {r}, i = {i}: {w}");
            }
        }
    }
    checks.push(Check::new("witness words have exactly r occurrences for 4 <= r <= 12", witness_ok, detail));
    let b_pos = (4..=r_max).all(|r| {
        pipeline
            .boundary_data(r)
            .map(|b| b.top_row_positive())
            .unwrap_or(false)
    });
    checks.push(Check::new(
        format!("g_(r+2,r)(1i) >= 1 for 4 <= r <= {r_max}"),
        b_pos,
        "",
    ));
    Ok(checks)
}
