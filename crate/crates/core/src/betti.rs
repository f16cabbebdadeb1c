//! Graded multiplicities: Betti numbers split by component-group character.
//!
//! Type A uses the row-by-row box recursion. Types B/C/D are covered only for
//! the partition families where the stratification sequences split degree by
//! degree; everything else is refused with [`Error::OutOfScope`].
//!
//! The B/C/D recursion runs on graded traces `T_k(λ, z) = tr(z, H^{2k}(λ))` for
//! every `z ∈ Ã_λ`, and the isotypic table is recovered at the end.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::agroup::{hadamard_multiplicities, push_h, push_v, shape_of, AElement, MultiplicityVector, Subgroup};
use crate::cache::{limit_from_env, Memo};
use crate::error::{Error, Result};
use crate::euler::is_base;
use crate::partition::{validate, GroupType, OrbitLabel, Partition};

/// Multiplicities per even cohomological degree. Odd degrees are always zero and never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTable {
    pub degrees: BTreeMap<u32, MultiplicityVector>,
}

impl GradedTable {
    /// Total Betti number `h^{2k}` for `k = 0, 1, ...`.
    pub fn poincare(&self) -> Vec<BigInt> {
        let top = self.degrees.keys().next_back().map_or(0, |d| d / 2);
        (0..=top)
            .map(|k| self.degrees.get(&(2 * k)).map(MultiplicityVector::total).unwrap_or_default())
            .collect()
    }

    /// Sum over all degrees and characters (all characters are one-dimensional).
    pub fn mass(&self) -> BigInt {
        self.degrees.values().map(MultiplicityVector::total).sum()
    }

    /// Per-character sums over all degrees.
    pub fn column_sums(&self) -> BTreeMap<String, BigInt> {
        let mut out: BTreeMap<String, BigInt> = BTreeMap::new();
        for row in self.degrees.values() {
            for (name, v) in row.iter() {
                *out.entry(name.clone()).or_default() += v;
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BcdCase {
    A1,
    A2,
    A3,
    A4,
    B1,
    B2,
    OutOfScope,
}

impl fmt::Display for BcdCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BcdCase::A1 => "a1",
            BcdCase::A2 => "a2",
            BcdCase::A3 => "a3",
            BcdCase::A4 => "a4",
            BcdCase::B1 => "b1",
            BcdCase::B2 => "b2",
            BcdCase::OutOfScope => "out_of_scope",
        })
    }
}

/// `Σ_i q^{i-1} P(λ^{λ_i})` over rows `i`, with `P(()) = 1`.
pub fn type_a_poincare(lambda: &Partition) -> Vec<BigInt> {
    fn go(l: &Partition, memo: &mut HashMap<Partition, Vec<BigInt>>) -> Vec<BigInt> {
        if l.is_empty() {
            return vec![BigInt::one()];
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let mut acc: Vec<BigInt> = Vec::new();
        for (row, &part) in l.parts().iter().enumerate() {
            let child = go(&l.remove_box(part).expect("part present"), memo);
            add_shifted(&mut acc, row, &child, &BigInt::one());
        }
        memo.insert(l.clone(), acc.clone());
        acc
    }
    go(lambda, &mut HashMap::new())
}

pub fn betti_type_a(lambda: &Partition) -> GradedTable {
    let degrees = type_a_poincare(lambda)
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (2 * k as u32, MultiplicityVector([("+".to_string(), v)].into_iter().collect())))
        .collect();
    GradedTable { degrees }
}

fn add_shifted(acc: &mut Vec<BigInt>, shift: usize, vec: &[BigInt], coeff: &BigInt) {
    if coeff.is_zero() {
        return;
    }
    if acc.len() < shift + vec.len() {
        acc.resize(shift + vec.len(), BigInt::zero());
    }
    for (k, v) in vec.iter().enumerate() {
        acc[shift + k] += coeff * v;
    }
}

/// Case predicate on an arbitrary partition (no validity requirement), as needed
/// for the `(a3)` look-ahead on `λ^1`.
fn classify_raw(group: GroupType, lambda: &Partition) -> BcdCase {
    let Some(par) = group.generator_parity() else {
        return BcdCase::OutOfScope;
    };
    let (first, second) = match group {
        GroupType::C => (BcdCase::B1, BcdCase::B2),
        _ => (BcdCase::A1, BcdCase::A2),
    };
    let Ok(xi) = lambda.xi_min_part() else {
        return first;
    };
    let mults = lambda.mults();
    let special_at_most_one_except = |skip: u32| mults.iter().all(|(&i, &r)| i % 2 != par || i == skip || r <= 1);
    if xi % 2 != par && special_at_most_one_except(0) {
        return first;
    }
    let r_xi = mults[&xi];
    if xi % 2 == par && xi > 1 && special_at_most_one_except(xi) && (1..=3).contains(&r_xi) {
        return second;
    }
    if group == GroupType::C || xi != 1 {
        return BcdCase::OutOfScope;
    }
    if r_xi == 1 {
        let rest = lambda.remove_box(1).expect("r_1 = 1");
        return match classify_raw(group, &rest) {
            BcdCase::A1 | BcdCase::A2 => BcdCase::A3,
            _ => BcdCase::OutOfScope,
        };
    }
    if special_at_most_one_except(1) {
        BcdCase::A4
    } else {
        BcdCase::OutOfScope
    }
}

/// Which graded recursion covers `(group, λ)`.
pub fn classify_bcd(group: GroupType, lambda: &Partition) -> Result<BcdCase> {
    if group == GroupType::A || !validate(group, lambda) {
        return Err(Error::InvalidLabel { group, partition: lambda.clone() });
    }
    Ok(classify_raw(group, lambda))
}

type Key = (GroupType, Partition, AElement);
/// Graded traces, or the first partition that escaped the covered families.
type Traces = std::result::Result<Vec<BigInt>, Partition>;

#[derive(Debug, Default)]
pub struct BettiEngine {
    cache: Memo<Key, Traces>,
}

impl BettiEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache_limit(limit: Option<usize>) -> Self {
        BettiEngine { cache: Memo::new(limit) }
    }

    pub fn from_env() -> Self {
        Self::with_cache_limit(limit_from_env())
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// `tr(z, H^{2k}(λ))` for `k = 0, 1, ...` (trailing zeros trimmed).
    pub fn graded_traces(&self, group: GroupType, lambda: &Partition, z: &AElement) -> Result<Vec<BigInt>> {
        let shape = shape_of(group, lambda)?;
        if group == GroupType::A {
            shape.check(z, lambda)?;
            return Ok(type_a_poincare(lambda));
        }
        shape.check(z, lambda)?;
        self.traces(group, lambda, z)?.map_err(|escaped| Error::OutOfScope {
            group,
            partition: escaped,
            root: lambda.clone(),
        })
    }

    /// Graded isotypic table over `A_λ` or `Ã_λ`.
    pub fn betti_bcd_over(&self, group: GroupType, lambda: &Partition, over: Subgroup) -> Result<GradedTable> {
        if group == GroupType::A {
            return Err(Error::InvalidLabel { group, partition: lambda.clone() });
        }
        let shape = shape_of(group, lambda)?;
        let elements = shape.elements(over);
        let mut per_element = BTreeMap::new();
        for z in &elements {
            per_element.insert(z.clone(), self.graded_traces(group, lambda, z)?);
        }
        let top = per_element.values().map(Vec::len).max().unwrap_or(0);
        let mut degrees = BTreeMap::new();
        for k in 0..top {
            let values: BTreeMap<AElement, BigInt> = per_element
                .iter()
                .map(|(z, t)| (z.clone(), t.get(k).cloned().unwrap_or_default()))
                .collect();
            let row = hadamard_multiplicities(&shape, &values, over).map_err(|e| match e {
                Error::NonIntegralMultiplicity(msg) => {
                    Error::NonIntegralMultiplicity(format!("{group} {lambda} degree {}: {msg}", 2 * k))
                }
                other => other,
            })?;
            if row.total().is_zero() {
                continue;
            }
            degrees.insert(2 * k as u32, row);
        }
        Ok(GradedTable { degrees })
    }

    pub fn betti_bcd(&self, group: GroupType, lambda: &Partition) -> Result<GradedTable> {
        self.betti_bcd_over(group, lambda, Subgroup::A)
    }

    fn traces(&self, group: GroupType, lambda: &Partition, z: &AElement) -> Result<Traces> {
        match self.traces_inner(group, lambda, z) {
            Ok(t) => Ok(Ok(t)),
            Err(Fail::Escaped(p)) => Ok(Err(p)),
            Err(Fail::Error(e)) => Err(e),
        }
    }

    fn traces_inner(&self, group: GroupType, lambda: &Partition, z: &AElement) -> std::result::Result<Vec<BigInt>, Fail> {
        if is_base(group, lambda) {
            return Ok(vec![BigInt::one()]);
        }
        let key = (group, lambda.clone(), z.clone());
        let v = match self.cache.get(&key) {
            Some(v) => v,
            None => {
                let v = match self.compute(group, lambda, z) {
                    Ok(t) => Ok(t),
                    Err(Fail::Escaped(p)) => Err(p),
                    Err(e) => return Err(e),
                };
                self.cache.put(key, &v);
                v
            }
        };
        v.map_err(Fail::Escaped)
    }

    fn compute(&self, group: GroupType, lambda: &Partition, z: &AElement) -> std::result::Result<Vec<BigInt>, Fail> {
        let mut case = classify_raw(group, lambda);
        let mut xi = lambda.xi_min_part()?;
        if case == BcdCase::A3 {
            let rest = lambda.remove_box(1)?;
            case = classify_raw(group, &rest);
            xi = rest.xi_min_part()?;
        }
        if case == BcdCase::OutOfScope {
            return Err(Fail::Escaped(lambda.clone()));
        }
        let shape = shape_of(group, lambda)?;
        let mults = lambda.mults();
        let d = |i: u32| lambda.d_index(i) as usize;

        // (traces at the pushed element, traces at the pushed element times τ_i)
        let h_traces = |i: u32| -> std::result::Result<(Vec<BigInt>, Vec<BigInt>), Fail> {
            let child = lambda.remove_h(i)?;
            let cshape = shape_of(group, &child)?;
            let y = push_h(&shape, &cshape, z, i);
            let tau = cshape.normalize(&[i, i - 2]);
            Ok((self.traces_inner(group, &child, &y)?, self.traces_inner(group, &child, &y.mul(&tau))?))
        };
        let h_plain = |i: u32| -> std::result::Result<Vec<BigInt>, Fail> {
            let child = lambda.remove_h(i)?;
            let cshape = shape_of(group, &child)?;
            self.traces_inner(group, &child, &push_h(&shape, &cshape, z, i))
        };
        let v_traces = |i: u32| -> std::result::Result<Vec<BigInt>, Fail> {
            let child = lambda.remove_v(i)?;
            let cshape = shape_of(group, &child)?;
            self.traces_inner(group, &child, &push_v(&shape, &cshape, z, i))
        };

        // twice the graded trace, so τ-fixed averages stay integral
        let mut acc: Vec<BigInt> = Vec::new();
        let one = BigInt::one();
        let two = BigInt::from(2);

        for (&i, &r) in mults.iter() {
            if !group.is_special_part(i) {
                let t = v_traces(i)?;
                for j in 0..r as usize {
                    add_shifted(&mut acc, d(i) + j, &t, &two);
                }
            }
        }
        // special parts of multiplicity one above `floor` contribute plain horizontal terms
        let lone_h = |acc: &mut Vec<BigInt>, floor: u32| -> std::result::Result<(), Fail> {
            for (&i, &r) in mults.iter() {
                if group.is_special_part(i) && i > floor && r == 1 {
                    add_shifted(acc, d(i), &h_plain(i)?, &two);
                }
            }
            Ok(())
        };

        match case {
            BcdCase::A1 | BcdCase::B1 => lone_h(&mut acc, 1)?,
            BcdCase::A2 | BcdCase::B2 => {
                let r = mults[&xi];
                let dx = d(xi);
                if r == 1 {
                    lone_h(&mut acc, xi - 1)?;
                } else {
                    lone_h(&mut acc, xi)?;
                    let (t1, t2) = h_traces(xi)?;
                    let mut fixed2 = Vec::new();
                    add_shifted(&mut fixed2, 0, &t1, &one);
                    add_shifted(&mut fixed2, 0, &t2, &one);
                    let tv = v_traces(xi)?;
                    if r == 2 {
                        let s = BigInt::from(z.sgn(xi));
                        add_shifted(&mut acc, dx + 1, &fixed2, &one);
                        add_shifted(&mut acc, dx, &fixed2, &-&s);
                        add_shifted(&mut acc, dx, &tv, &((&one + &s) * 2));
                    } else {
                        add_shifted(&mut acc, dx + 2, &fixed2, &one);
                        add_shifted(&mut acc, dx + 1, &fixed2, &-&one);
                        add_shifted(&mut acc, dx + 1, &t1, &two);
                        add_shifted(&mut acc, dx, &tv, &two);
                        add_shifted(&mut acc, dx + 1, &tv, &two);
                    }
                }
            }
            BcdCase::A4 => {
                lone_h(&mut acc, 1)?;
                let r1 = mults[&1] as usize;
                let tv = v_traces(1)?;
                for j in 0..=(r1 - 2) {
                    add_shifted(&mut acc, d(1) + j, &tv, &two);
                }
                if r1.is_multiple_of(2) {
                    add_shifted(&mut acc, d(1) + (r1 - 2) / 2, &tv, &(BigInt::from(z.sgn(1)) * 2));
                }
            }
            BcdCase::A3 | BcdCase::OutOfScope => unreachable!("resolved above"),
        }

        let mut out = Vec::with_capacity(acc.len());
        for v in acc {
            let (q, rem) = v.div_rem(&two);
            if !rem.is_zero() {
                return Err(Fail::Error(Error::NonIntegralMultiplicity(format!(
                    "odd doubled graded trace for {group} {lambda} at {z}"
                ))));
            }
            out.push(q);
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        Ok(out)
    }
}

enum Fail {
    Escaped(Partition),
    Error(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Error(e)
    }
}

pub fn global() -> &'static BettiEngine {
    static ENGINE: OnceLock<BettiEngine> = OnceLock::new();
    ENGINE.get_or_init(BettiEngine::from_env)
}

pub fn betti_bcd(group: GroupType, lambda: &Partition) -> Result<GradedTable> {
    global().betti_bcd(group, lambda)
}

/// Graded table for any label: the box recursion in type A, the covered
/// families in types B/C/D.
pub fn betti(label: &OrbitLabel) -> Result<GradedTable> {
    match label.group {
        GroupType::A => Ok(betti_type_a(&label.partition)),
        g => betti_bcd(g, &label.partition),
    }
}

/// Coefficients of `Σ_k h^{2k} q^k`.
pub fn poincare_polynomial(label: &OrbitLabel) -> Result<Vec<BigInt>> {
    match label.group {
        GroupType::A => Ok(type_a_poincare(&label.partition)),
        g => Ok(global().graded_traces(g, &label.partition, &AElement::identity())?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn type_a_examples() {
        assert_eq!(type_a_poincare(&p("2,1")), ints(&[1, 2]));
        assert_eq!(type_a_poincare(&p("5")), ints(&[1]));
        assert_eq!(type_a_poincare(&p("1,1")), ints(&[1, 1]));
        assert_eq!(type_a_poincare(&p("2,2")), ints(&[1, 3, 2]));
        let t = betti_type_a(&p("2,1"));
        assert_eq!(t.degrees.keys().copied().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(t.degrees[&2].get("+"), BigInt::from(2));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_bcd(GroupType::B, &p("3,1,1")).unwrap(), BcdCase::A4);
        assert_eq!(classify_bcd(GroupType::B, &p("3,3,3,3,1")).unwrap(), BcdCase::OutOfScope);
        assert_eq!(classify_bcd(GroupType::C, &p("4,4,2")).unwrap(), BcdCase::OutOfScope);
        assert_eq!(classify_bcd(GroupType::C, &p("2,2")).unwrap(), BcdCase::B2);
        assert_eq!(classify_bcd(GroupType::C, &p("3,3")).unwrap(), BcdCase::B1);
        assert_eq!(classify_bcd(GroupType::D, &p("3,1")).unwrap(), BcdCase::A3);
        assert_eq!(classify_bcd(GroupType::D, &p("4,4")).unwrap(), BcdCase::A1);
        assert_eq!(classify_bcd(GroupType::B, &p("5,5,5")).unwrap(), BcdCase::A2);
        assert_eq!(
            classify_bcd(GroupType::B, &p("2,1")).unwrap_err(),
            Error::InvalidLabel { group: GroupType::B, partition: p("2,1") }
        );
        assert!(classify_bcd(GroupType::A, &p("2")).is_err());
    }

    #[test]
    fn graded_examples() {
        let e = BettiEngine::new();
        let t = e.betti_bcd(GroupType::B, &p("3,1,1")).unwrap();
        assert_eq!(t.degrees[&0].get("++"), BigInt::from(1));
        assert_eq!(t.degrees[&0].get("+\u{2212}"), BigInt::from(0));
        assert_eq!(t.degrees[&2].get("++"), BigInt::from(2));
        assert_eq!(t.degrees[&2].get("+\u{2212}"), BigInt::from(1));

        let t = e.betti_bcd(GroupType::C, &p("2,2")).unwrap();
        assert_eq!(t.degrees[&0].get("+"), BigInt::from(1));
        assert_eq!(t.degrees[&2].get("+"), BigInt::from(2));
        assert_eq!(t.degrees[&2].get("\u{2212}"), BigInt::from(1));

        assert_eq!(e.graded_traces(GroupType::B, &p("1,1,1"), &AElement::identity()).unwrap(), ints(&[1, 1]));
        assert_eq!(
            e.graded_traces(GroupType::B, &p("3,1,1"), &AElement::from_generators(&[1, 3])).unwrap(),
            ints(&[1, 1])
        );
    }

    #[test]
    fn out_of_scope_names_the_escape() {
        let e = BettiEngine::new();
        match e.betti_bcd(GroupType::C, &p("6,4,2")) {
            Err(Error::OutOfScope { partition, root, .. }) => {
                assert_eq!(partition, p("4,4,2"));
                assert_eq!(root, p("6,4,2"));
            }
            other => panic!("expected OutOfScope, got {other:?}"),
        }
        assert!(matches!(e.betti_bcd(GroupType::B, &p("3,3,3,3,1")), Err(Error::OutOfScope { .. })));
    }

    #[test]
    fn poincare_examples() {
        let l = OrbitLabel::unsigned(GroupType::A, p("2,2")).unwrap();
        assert_eq!(poincare_polynomial(&l).unwrap(), ints(&[1, 3, 2]));
        let l = OrbitLabel::unsigned(GroupType::C, p("6,4,2")).unwrap();
        assert!(matches!(poincare_polynomial(&l), Err(Error::OutOfScope { .. })));
    }
}
