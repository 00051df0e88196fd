//! Naive reference implementations used by the integration tests. They share
//! no code with the library: cycles are traced by hand, occurrences counted
//! by a direct triple loop, and permutations listed by recursion.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// Every permutation of `1..=n`, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for a in 0..used.len() {
            if !used[a] {
                used[a] = true;
                prefix.push(a as u32 + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[a] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Cycles of `p` (one-line notation), each started at its minimum, by increasing minima.
pub fn cycles(p: &[u32]) -> Vec<Vec<u32>> {
    let n = p.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut a = p[start as usize - 1];
        while a != start {
            cycle.push(a);
            seen[a as usize] = true;
            a = p[a as usize - 1];
        }
        out.push(cycle);
    }
    out
}

pub fn flat(p: &[u32]) -> Vec<u32> {
    cycles(p).concat()
}

/// Occurrences of the vincular 13-2: positions `i < j` (0-based, `i >= 1`)
/// with `w[i-1] < w[j] < w[i]`.
pub fn occurrences(w: &[u32]) -> usize {
    let mut c = 0;
    for i in 1..w.len() {
        for j in i + 1..w.len() {
            if w[i - 1] < w[j] && w[j] < w[i] {
                c += 1;
            }
        }
    }
    c
}

/// One-line notation of the permutation whose cycles are `cs`.
pub fn from_cycles(n: usize, cs: &[Vec<u32>]) -> Vec<u32> {
    let mut p = vec![0; n];
    for c in cs {
        for (idx, &a) in c.iter().enumerate() {
            p[a as usize - 1] = c[(idx + 1) % c.len()];
        }
    }
    p
}

/// Brute-force tables for length `n`: `by_second[k][r]` counts permutations
/// whose flattening starts `1, k` with `r` occurrences (`k = 0` holds the
/// unrestricted distribution).
pub struct Brute {
    pub n: usize,
    pub by_second: Vec<BTreeMap<usize, u64>>,
}

impl Brute {
    pub fn new(n: usize) -> Self {
        let mut by_second = vec![BTreeMap::new(); n + 1];
        for p in all_perms(n) {
            let w = flat(&p);
            let r = occurrences(&w);
            *by_second[0].entry(r).or_insert(0) += 1;
            if n >= 2 {
                *by_second[w[1] as usize].entry(r).or_insert(0) += 1;
            }
        }
        Brute { n, by_second }
    }

    pub fn total(&self, r: usize) -> u64 {
        self.by_second[0].get(&r).copied().unwrap_or(0)
    }

    pub fn with_second(&self, k: usize, r: usize) -> u64 {
        self.by_second[k].get(&r).copied().unwrap_or(0)
    }

    pub fn max_r(&self) -> usize {
        self.by_second[0].keys().next_back().copied().unwrap_or(0)
    }
}

#[test]
fn oracle_self_check() {
    assert_eq!(flat(&[7, 1, 5, 6, 4, 3, 2, 8]), vec![1, 7, 2, 3, 5, 4, 6, 8]);
    assert_eq!(occurrences(&[1, 7, 2, 3, 5, 4, 6, 8]), 6);
    let b = Brute::new(3);
    assert_eq!((b.total(0), b.total(1)), (4, 2));
    assert_eq!(from_cycles(3, &[vec![1], vec![2, 3]]), vec![1, 3, 2]);
}
