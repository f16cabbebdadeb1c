//! Symmetric functions in the monomial basis, used to check the type-A
//! branching rule `Res h_λ = Σ r_i h_{λ^i}` independently of the Euler recursion.
//!
//! Under the pairing `⟨h_λ, m_μ⟩ = δ_{λμ}`, the inner product with `h_λ` is a
//! coefficient lookup in the m-basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// A homogeneous symmetric function `Σ c_μ m_μ`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFunc {
    pub degree: u32,
    #[serde(with = "coeff_list")]
    pub coeffs: BTreeMap<Partition, BigInt>,
}

mod coeff_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        partition: Partition,
        #[serde(with = "crate::json")]
        coeff: BigInt,
    }

    pub fn serialize<S: Serializer>(m: &BTreeMap<Partition, BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = m.iter().map(|(p, c)| Entry { partition: p.clone(), coeff: c.clone() }).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Partition, BigInt>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?.into_iter().map(|e| (e.partition, e.coeff)).collect())
    }
}

impl SymFunc {
    pub fn zero(degree: u32) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// `m_μ`
    pub fn monomial(mu: &Partition) -> Self {
        SymFunc { degree: mu.size(), coeffs: [(mu.clone(), BigInt::one())].into_iter().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mu: Partition, c: BigInt) {
        match self.coeffs.entry(mu) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Distinct rearrangements `α` of `mu` (padded with zeros to `bound.len()`) with `α ≤ bound` entrywise.
fn count_dominated_arrangements(mu: &Partition, bound: &[u32]) -> u64 {
    if mu.len() > bound.len() {
        return 0;
    }
    let mut pool: BTreeMap<u32, u32> = mu.mults();
    let zeros = (bound.len() - mu.len()) as u32;
    if zeros > 0 {
        pool.insert(0, zeros);
    }
    fn go(pos: usize, bound: &[u32], pool: &mut BTreeMap<u32, u32>) -> u64 {
        if pos == bound.len() {
            return 1;
        }
        let choices: Vec<u32> = pool.iter().filter(|(&v, &c)| c > 0 && v <= bound[pos]).map(|(&v, _)| v).collect();
        let mut total = 0;
        for v in choices {
            *pool.get_mut(&v).expect("present") -= 1;
            total += go(pos + 1, bound, pool);
            *pool.get_mut(&v).expect("present") += 1;
        }
        total
    }
    go(0, bound, &mut pool)
}

/// `f · h_k`, using `m_μ h_k = Σ_λ #{α ∈ S·μ : α ≤ λ} m_λ`.
pub fn mul_hk(f: &SymFunc, k: u32) -> SymFunc {
    let degree = f.degree + k;
    let mut out = SymFunc::zero(degree);
    let targets = partitions_of(degree);
    for (mu, c) in &f.coeffs {
        for lambda in &targets {
            let n = count_dominated_arrangements(mu, lambda.parts());
            if n > 0 {
                out.add_term(lambda.clone(), c * BigInt::from(n));
            }
        }
    }
    out
}

/// `h_λ = ∏_t h_{λ_t}` in the monomial basis.
pub fn h_to_m(lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::monomial(&Partition::empty());
    for &part in lambda.parts() {
        f = mul_hk(&f, part);
    }
    f
}

/// `f · h_1` by the single-box rule:
/// `m_μ h_1 = Σ_{r'_i ≥ 1} (r'_{i+1} + 1) m_{μ: i → i+1} + (r'_1 + 1) m_{μ ∪ (1)}`.
pub fn mul_h1(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(f.degree + 1);
    for (mu, c) in &f.coeffs {
        let mults = mu.mults();
        for &i in mults.keys() {
            let r_next = mults.get(&(i + 1)).copied().unwrap_or(0);
            let mut m = mults.clone();
            *m.get_mut(&i).expect("present") -= 1;
            *m.entry(i + 1).or_insert(0) += 1;
            out.add_term(Partition::from_mults(&m), c * BigInt::from(r_next + 1));
        }
        let r1 = mults.get(&1).copied().unwrap_or(0);
        let mut m = mults.clone();
        *m.entry(1).or_insert(0) += 1;
        out.add_term(Partition::from_mults(&m), c * BigInt::from(r1 + 1));
    }
    out
}

/// `⟨h_λ, f⟩`, the coefficient of `m_λ` in `f`.
pub fn inner_h(lambda: &Partition, f: &SymFunc) -> Result<BigInt> {
    if lambda.size() != f.degree {
        return Err(Error::DegreeMismatch { expected: lambda.size(), found: f.degree });
    }
    Ok(f.coeff(lambda))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingReport {
    pub checked: u64,
    pub failures: Vec<String>,
}

impl BranchingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for all `λ ⊢ m ≤ max_n` and `μ, ν ⊢ m - 1`:
/// `⟨h_λ, m_μ h_1⟩ = r_i` if `μ = λ^i` and `0` otherwise, and
/// `⟨h_λ, h_ν h_1⟩ = Σ_i r_i ⟨h_{λ^i}, h_ν⟩`.
pub fn verify_branching(max_n: u32) -> BranchingReport {
    let mut report = BranchingReport::default();
    for m in 1..=max_n {
        let smaller = partitions_of(m - 1);
        let h_smaller: Vec<SymFunc> = smaller.iter().map(h_to_m).collect();
        let h1_monomial: Vec<SymFunc> = smaller.iter().map(|mu| mul_h1(&SymFunc::monomial(mu))).collect();
        let h1_h: Vec<SymFunc> = h_smaller.iter().map(mul_h1).collect();
        for lambda in partitions_of(m) {
            let removals: Vec<(Partition, u32)> = lambda
                .mults()
                .into_iter()
                .map(|(i, r)| (lambda.remove_box(i).expect("part present"), r))
                .collect();
            for (idx, mu) in smaller.iter().enumerate() {
                report.checked += 1;
                let lhs = h1_monomial[idx].coeff(&lambda);
                let rhs = removals.iter().find(|(child, _)| child == mu).map_or(0, |(_, r)| *r);
                if lhs != BigInt::from(rhs) && report.failures.len() < 16 {
                    report.failures.push(format!("<h{lambda}, m{mu} h_1> = {lhs}, expected {rhs}"));
                }

                report.checked += 1;
                let nu = mu;
                let lhs = h1_h[idx].coeff(&lambda);
                let rhs: BigInt =
                    removals.iter().map(|(child, r)| BigInt::from(*r) * h_smaller[idx].coeff(child)).sum();
                if lhs != rhs && report.failures.len() < 16 {
                    report.failures.push(format!("<h{lambda}, h{nu} h_1> = {lhs}, expected {rhs}"));
                }
            }
        }
    }
    report
}
