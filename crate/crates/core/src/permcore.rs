//! Permutations, standard cycle form, flattening and 13-2 occurrence counts.
//!
//! This is the brute-force layer: [`distribution`] walks all of `S_n` and is
//! the oracle every other route is checked against.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 10;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            let i = a as usize;
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!("letter {a} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("letter {a} repeated")));
            }
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of the letter `a`.
    pub fn apply(&self, a: u32) -> u32 {
        self.0[a as usize - 1]
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Accepts comma/space separated letters, or a bare digit string when
    /// every letter is a single digit (`"71564328"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Vec<u32> = if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::InvalidPermutation(e.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidPermutation(format!("bad letter {c:?}"))))
                .collect::<Result<_>>()?
        };
        Permutation::new(letters)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Cycles with each cycle led by its minimum, ordered by increasing leaders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleForm(Vec<Vec<u32>>);

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.0
    }

    /// Read the cycles back as a function.
    pub fn to_permutation(&self) -> Permutation {
        permutation_from_cycles(&self.0)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            let parts: Vec<String> = c.iter().map(u32::to_string).collect();
            let sep = if c.iter().any(|&a| a > 9) { "," } else { "" };
            write!(f, "({})", parts.join(sep))?;
        }
        Ok(())
    }
}

fn permutation_from_cycles(cycles: &[Vec<u32>]) -> Permutation {
    let n: usize = cycles.iter().map(Vec::len).sum();
    let mut letters = vec![0u32; n];
    for c in cycles {
        for (i, &a) in c.iter().enumerate() {
            letters[a as usize - 1] = c[(i + 1) % c.len()];
        }
    }
    Permutation(letters)
}

pub fn standard_cycle_form(p: &Permutation) -> CycleForm {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut a = start;
        while !seen[a as usize] {
            seen[a as usize] = true;
            cycle.push(a);
            a = p.apply(a);
        }
        cycles.push(cycle);
    }
    CycleForm(cycles)
}

/// Concatenate the cycles of the standard cycle form.
pub fn flatten(p: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(p.len());
    let mut seen = vec![false; p.len() + 1];
    flatten_into(&p.0, &mut seen, &mut out);
    Permutation(out)
}

// Allocation-free flattening for the enumeration loop; `seen` must have
// length `p.len() + 1`.
fn flatten_into(p: &[u32], seen: &mut [bool], out: &mut Vec<u32>) {
    out.clear();
    seen.fill(false);
    for start in 1..=p.len() as u32 {
        let mut a = start;
        while !seen[a as usize] {
            seen[a as usize] = true;
            out.push(a);
            a = p[a as usize - 1];
        }
    }
}

/// Number of index pairs `i < j` with `p[i-1] < p[j] < p[i]` (1-based, `i >= 2`).
pub fn count_13_2(p: &Permutation) -> usize {
    count_letters(&p.0)
}

fn count_letters(p: &[u32]) -> usize {
    let mut total = 0;
    for i in 1..p.len() {
        let (lo, hi) = (p[i - 1], p[i]);
        if lo < hi {
            total += p[i + 1..].iter().filter(|&&c| lo < c && c < hi).count();
        }
    }
    total
}

/// Maximum number of 13-2 occurrences in a flattened permutation of length `n`.
pub fn max_occurrences(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n * n.saturating_sub(2) / 4
    } else {
        (n - 1) * (n - 1) / 4
    }
}

/// Distribution of occurrence counts, `counts[r]` = number of permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceTable {
    pub n: usize,
    pub prefix: Vec<u32>,
    pub counts: BTreeMap<usize, BigUint>,
}

impl OccurrenceTable {
    fn from_raw(n: usize, prefix: Vec<u32>, raw: &[u64]) -> Self {
        let counts = raw
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(r, &c)| (r, BigUint::from(c)))
            .collect();
        OccurrenceTable { n, prefix, counts }
    }

    pub fn count(&self, r: usize) -> BigUint {
        self.counts.get(&r).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().fold(BigUint::zero(), |acc, c| acc + c)
    }

    /// Counts as a dense vector indexed by `r`, trailing zeros dropped.
    pub fn dense(&self) -> Vec<BigUint> {
        let len = self.counts.keys().next_back().map_or(0, |&r| r + 1);
        (0..len).map(|r| self.count(r)).collect()
    }
}

/// Brute-force enumerator over `S_n`.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    pub limit: usize,
    pub parallel: bool,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            limit: DEFAULT_ENUMERATION_LIMIT,
            parallel: false,
        }
    }
}

impl Enumerator {
    pub fn new(limit: usize, parallel: bool) -> Self {
        Enumerator { limit, parallel }
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        if n > self.limit {
            return Err(Error::LimitExceeded { n, limit: self.limit });
        }
        Ok(())
    }

    /// Fold over the flattening of every permutation of length `n`.
    ///
    /// The permutations are split by their first letter; each block is
    /// folded separately and the blocks are merged with `merge`.
    pub fn fold<T, F, M>(&self, n: usize, init: impl Fn() -> T + Sync, f: F, merge: M) -> Result<T>
    where
        T: Send,
        F: Fn(&mut T, &[u32]) + Sync,
        M: Fn(T, T) -> T + Sync,
    {
        self.check(n)?;
        let block = |first: u32| {
            let mut acc = init();
            let mut perm: Vec<u32> = std::iter::once(first)
                .chain((1..=n as u32).filter(|&a| a != first))
                .collect();
            let mut seen = vec![false; n + 1];
            let mut flat = Vec::with_capacity(n);
            loop {
                flatten_into(&perm, &mut seen, &mut flat);
                f(&mut acc, &flat);
                if !next_permutation(&mut perm[1..]) {
                    break;
                }
            }
            acc
        };
        let firsts = 1..=n as u32;
        let result = if self.parallel {
            firsts.into_par_iter().map(block).reduce(&init, &merge)
        } else {
            firsts.map(block).fold(init(), &merge)
        };
        Ok(result)
    }

    /// Occurrence distribution over permutations whose flattening starts
    /// with `prefix` (empty prefix: no restriction).
    pub fn distribution(&self, n: usize, prefix: &[u32]) -> Result<OccurrenceTable> {
        self.check(n)?;
        validate_prefix(n, prefix)?;
        let width = max_occurrences(n) + 1;
        let raw = self.fold(
            n,
            || vec![0u64; width],
            |acc, flat| {
                if flat.starts_with(prefix) {
                    acc[count_letters(flat)] += 1;
                }
            },
            merge_counts,
        )?;
        Ok(OccurrenceTable::from_raw(n, prefix.to_vec(), &raw))
    }

    /// All tables `g_n(1k)` at once: entry `k` has prefix `[1, k]` for
    /// `2 <= k <= n`; entries 0 and 1 hold the unrestricted table.
    pub fn second_letter_tables(&self, n: usize) -> Result<Vec<OccurrenceTable>> {
        self.check(n)?;
        let width = max_occurrences(n) + 1;
        let raw = self.fold(
            n,
            || vec![vec![0u64; width]; n + 1],
            |acc, flat| {
                let k = flat.get(1).map_or(1, |&a| a as usize);
                acc[k][count_letters(flat)] += 1;
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = merge_counts(std::mem::take(x), y);
                }
                a
            },
        )?;
        let total: Vec<u64> = (0..width).map(|r| raw.iter().map(|row| row[r]).sum()).collect();
        let mut tables = vec![OccurrenceTable::from_raw(n, vec![1], &total); 2];
        for (k, row) in raw.iter().enumerate().skip(2) {
            tables.push(OccurrenceTable::from_raw(n, vec![1, k as u32], row));
        }
        Ok(tables)
    }
}

fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn validate_prefix(n: usize, prefix: &[u32]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for &a in prefix {
        let i = a as usize;
        if i == 0 || i > n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(format!(
                "prefix {prefix:?} is not a sequence of distinct letters in 1..={n}"
            )));
        }
    }
    Ok(())
}

/// Lexicographic successor in place; false when `p` was the last arrangement.
fn next_permutation(p: &mut [u32]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// [`Enumerator::distribution`] with the default limit, single-threaded.
pub fn distribution(n: usize, prefix: &[u32]) -> Result<OccurrenceTable> {
    Enumerator::default().distribution(n, prefix)
}

/// The one-to-two map behind `g_n(12) = 2 g_{n-1}`.
///
/// Shifting every letter of `sigma` up by one, `pi` puts the fixed point
/// `(1)` in front of the shifted cycles and `pi'` inserts `1` at the head of
/// the first shifted cycle.
pub fn one_to_two_pair(sigma: &Permutation) -> (Permutation, Permutation) {
    let shifted: Vec<Vec<u32>> = standard_cycle_form(sigma)
        .0
        .into_iter()
        .map(|c| c.into_iter().map(|a| a + 1).collect())
        .collect();

    let mut with_fixed = vec![vec![1]];
    with_fixed.extend(shifted.iter().cloned());

    let mut merged = shifted;
    merged[0].insert(0, 1);

    (
        permutation_from_cycles(&with_fixed),
        permutation_from_cycles(&merged),
    )
}

/// The interleaved word `1, n, 2, n-1, 3, ...`.
pub fn max_pattern_perm(n: usize) -> Permutation {
    assert!(n >= 1, "length must be positive");
    let (mut lo, mut hi) = (1u32, n as u32);
    let mut letters = Vec::with_capacity(n);
    while lo <= hi {
        letters.push(lo);
        if lo != hi {
            letters.push(hi);
        }
        lo += 1;
        hi -= 1;
    }
    Permutation(letters)
}

/// Smallest length whose maximal occurrence count reaches `r`.
pub fn min_length_for(r: usize) -> usize {
    (1..).find(|&n| max_occurrences(n) >= r).unwrap()
}

/// A flattened word of length `r + 2` starting `1, i + 2` with exactly `r`
/// occurrences of 13-2.
pub fn witness_word(r: usize, i: usize) -> Result<Permutation> {
    if r < 4 || i > r {
        return Err(Error::InvalidArgument(format!(
            "witness needs r >= 4 and 0 <= i <= r, got r = {r}, i = {i}"
        )));
    }
    let n = (r + 2) as u32;
    let second = (i + 2) as u32;
    let mut letters = vec![1, second];
    if i == r {
        letters.extend((2..=n - 1).rev());
        return Ok(Permutation(letters));
    }
    let rest: Vec<u32> = (2..=n).filter(|&a| a != second).collect();
    let (a, b, c) = (rest[0], rest[1], rest[2]);
    letters.extend(rest[3..].iter().rev());
    letters.extend([a, c, b]);
    Ok(Permutation(letters))
}
