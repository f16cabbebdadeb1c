//! Independent oracles shared by the integration tests. None of them calls the
//! recursions under test.

#![allow(dead_code)]

use std::collections::BTreeMap;

use springer::partition::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `n! / ∏_t λ_t!`, the index of the Young subgroup `S_λ` in `S_n`.
pub fn multinomial_oracle(lambda: &Partition) -> u128 {
    let fact = |n: u32| (1..=n as u128).product::<u128>();
    fact(lambda.size()) / lambda.parts().iter().map(|&x| fact(x)).product::<u128>()
}

/// Pascal's triangle, with zero outside `0 ≤ k ≤ n`.
pub fn pascal(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for t in 1..row.len() {
            next[t] = row[t - 1] + row[t];
        }
        row = next;
    }
    row[k as usize]
}

/// Number of standard Young tableaux of shape `lambda`, by removing corners.
pub fn syt_count(rows: &[u32]) -> u64 {
    if rows.iter().all(|&r| r == 0) {
        return 1;
    }
    let mut total = 0;
    for t in 0..rows.len() {
        let is_corner = rows[t] > 0 && rows.get(t + 1).is_none_or(|&next| next < rows[t]);
        if is_corner {
            let mut smaller = rows.to_vec();
            smaller[t] -= 1;
            total += syt_count(&smaller);
        }
    }
    total
}

/// Polynomials in `nvars` commuting variables, as exponent vector to coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u32>, i128>,
}

impl Poly {
    pub fn one(nvars: usize) -> Self {
        Poly { nvars, terms: [(vec![0; nvars], 1)].into_iter().collect() }
    }

    /// `h_k`: every monomial of degree `k` with coefficient 1.
    pub fn complete(nvars: usize, k: u32) -> Self {
        fn go(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, i128>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.insert(cur.clone(), 1);
                return;
            }
            for e in 0..=left {
                cur[pos] = e;
                go(pos + 1, left - e, cur, out);
            }
        }
        let mut terms = BTreeMap::new();
        go(0, k, &mut vec![0; nvars], &mut terms);
        Poly { nvars, terms }
    }

    /// `m_μ`: every distinct rearrangement of `μ` padded with zeros.
    pub fn monomial(nvars: usize, mu: &Partition) -> Self {
        let mut padded: Vec<u32> = mu.parts().to_vec();
        assert!(padded.len() <= nvars);
        padded.resize(nvars, 0);
        padded.sort();
        let mut terms = BTreeMap::new();
        loop {
            terms.insert(padded.clone(), 1);
            // next lexicographic permutation
            let Some(i) = (0..nvars.saturating_sub(1)).rev().find(|&i| padded[i] < padded[i + 1]) else { break };
            let j = (i + 1..nvars).rev().find(|&j| padded[j] > padded[i]).unwrap();
            padded.swap(i, j);
            padded[i + 1..].reverse();
        }
        Poly { nvars, terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms: BTreeMap<Vec<u32>, i128> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_default() += ca * cb;
            }
        }
        terms.retain(|_, c| *c != 0);
        Poly { nvars: self.nvars, terms }
    }

    /// Coefficient of `m_λ` in a symmetric polynomial: the coefficient of `x^λ`.
    pub fn m_coeff(&self, lambda: &Partition) -> i128 {
        let mut e = lambda.parts().to_vec();
        e.resize(self.nvars, 0);
        self.terms.get(&e).copied().unwrap_or(0)
    }
}
