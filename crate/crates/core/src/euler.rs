//! Twisted Euler characteristics `E(λ, z)`: the alternating trace of `z ∈ Ã_λ`
//! on the cohomology of the Springer fiber, computed by the one-step
//! restriction recursion and memoized.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::agroup::{
    hadamard_multiplicities, push_h, push_v, shape_of, AElement, MultiplicityVector, Subgroup,
};
use crate::cache::{limit_from_env, Memo};
use crate::error::{Error, Result};
use crate::partition::{validate, GroupType, OrbitLabel, Partition};

type Key = (GroupType, Partition, AElement);

/// Recursion floor: labels with no one-step restriction.
pub fn is_base(group: GroupType, lambda: &Partition) -> bool {
    match group {
        GroupType::A => lambda.is_empty(),
        GroupType::B => lambda.size() <= 1,
        GroupType::C => lambda.is_empty(),
        GroupType::D => lambda.size() <= 2,
    }
}

/// Memoizing evaluator. Results never depend on whether or how much is cached.
#[derive(Debug, Default)]
pub struct Engine {
    cache: Memo<Key, BigInt>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `Some(0)` disables memoization entirely.
    pub fn with_cache_limit(limit: Option<usize>) -> Self {
        Engine { cache: Memo::new(limit) }
    }

    pub fn from_env() -> Self {
        Self::with_cache_limit(limit_from_env())
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn clear(&self) {
        self.cache.clear();
    }

    /// `E(λ, z)` for a valid label and a normalized `z ∈ Ã_λ`.
    pub fn twisted_euler(&self, group: GroupType, lambda: &Partition, z: &AElement) -> Result<BigInt> {
        let shape = shape_of(group, lambda)?;
        shape.check(z, lambda)?;
        Ok(self.eval(group, lambda, z))
    }

    pub fn euler_char(&self, label: &OrbitLabel) -> Result<BigInt> {
        self.twisted_euler(label.group, &label.partition, &AElement::identity())
    }

    /// `E(λ, z)` for every `z` in the chosen subgroup.
    pub fn twisted_values(
        &self,
        group: GroupType,
        lambda: &Partition,
        over: Subgroup,
    ) -> Result<BTreeMap<AElement, BigInt>> {
        let shape = shape_of(group, lambda)?;
        Ok(shape
            .elements(over)
            .into_iter()
            .map(|z| {
                let v = self.eval(group, lambda, &z);
                (z, v)
            })
            .collect())
    }

    pub fn multiplicities(&self, label: &OrbitLabel, over: Subgroup) -> Result<MultiplicityVector> {
        let shape = shape_of(label.group, &label.partition)?;
        let values = self.twisted_values(label.group, &label.partition, over)?;
        hadamard_multiplicities(&shape, &values, over)
    }

    fn eval(&self, group: GroupType, lambda: &Partition, z: &AElement) -> BigInt {
        if group == GroupType::A {
            return type_a_closed_form(lambda);
        }
        if is_base(group, lambda) {
            return BigInt::one();
        }
        let key = (group, lambda.clone(), z.clone());
        if let Some(v) = self.cache.get(&key) {
            return v;
        }
        let v = self.compute(group, lambda, z);
        self.cache.put(key, &v);
        v
    }

    fn compute(&self, group: GroupType, lambda: &Partition, z: &AElement) -> BigInt {
        let shape = shape_of(group, lambda).expect("recursion stays within valid labels");
        let mut total = BigInt::zero();
        let v_term = |i: u32, coeff: i64, total: &mut BigInt| {
            if coeff != 0 {
                let child = lambda.remove_v(i).expect("r_i >= 2 for vertical dominoes");
                let cshape = shape_of(group, &child).expect("vertical domino keeps the label valid");
                let y = push_v(&shape, &cshape, z, i);
                *total += BigInt::from(coeff) * self.eval(group, &child, &y);
            }
        };
        for (&i, &r) in lambda.mults().iter() {
            let r = r as i64;
            if !group.is_special_part(i) {
                v_term(i, r, &mut total);
                continue;
            }
            let sgn = z.sgn(i) as i64;
            if i == 1 {
                let coeff = if r % 2 == 1 { r - 1 } else { r - 1 + sgn };
                v_term(1, coeff, &mut total);
                continue;
            }
            let child = lambda.remove_h(i).expect("r_i >= 1");
            let cshape = shape_of(group, &child).expect("horizontal domino at a special part keeps the label valid");
            let y = push_h(&shape, &cshape, z, i);
            if r % 2 == 1 {
                total += self.eval(group, &child, &y);
                v_term(i, r - 1, &mut total);
            } else {
                if sgn == -1 {
                    // (1 - sgn_i) times the τ_i-fixed average is the plain sum of both traces.
                    let tau = cshape.normalize(&[i, i - 2]);
                    total += self.eval(group, &child, &y);
                    total += self.eval(group, &child, &y.mul(&tau));
                }
                v_term(i, r - 1 + sgn, &mut total);
            }
        }
        total
    }
}

/// Process-wide engine, sized from `SPRINGER_CACHE_LIMIT`.
pub fn global() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::from_env)
}

pub fn twisted_euler(group: GroupType, lambda: &Partition, z: &AElement) -> Result<BigInt> {
    global().twisted_euler(group, lambda, z)
}

pub fn euler_char(label: &OrbitLabel) -> Result<BigInt> {
    global().euler_char(label)
}

pub fn multiplicities(label: &OrbitLabel, over: Subgroup) -> Result<MultiplicityVector> {
    global().multiplicities(label, over)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n! / ∏_i (i!)^{r_i}`.
pub fn type_a_closed_form(lambda: &Partition) -> BigInt {
    let denom = lambda.parts().iter().fold(BigInt::one(), |acc, &p| acc * factorial(p));
    factorial(lambda.size()) / denom
}

/// `EC(λ) = Σ_i r_i EC(λ^i)` with `EC(()) = 1`.
pub fn type_a_recursive(lambda: &Partition) -> BigInt {
    fn go(l: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if l.is_empty() {
            return BigInt::one();
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (&i, &r) in l.mults().iter() {
            total += BigInt::from(r) * go(&l.remove_box(i).expect("part present"), memo);
        }
        memo.insert(l.clone(), total.clone());
        total
    }
    go(lambda, &mut HashMap::new())
}

/// One step of the untwisted identity: children with their integer coefficients.
/// Types B/C/D use `Σ_{i≥2, r_i odd} EC(λ^{h,i}) + Σ_{r_i≥2} 2⌊r_i/2⌋ EC(λ^{v,i})`;
/// type A uses `Σ r_i EC(λ^i)`. Bases have no children.
pub fn weak_step(group: GroupType, lambda: &Partition) -> Vec<(Partition, BigInt)> {
    let mut out = Vec::new();
    if is_base(group, lambda) {
        return out;
    }
    for (&i, &r) in lambda.mults().iter() {
        if group == GroupType::A {
            out.push((lambda.remove_box(i).expect("part present"), BigInt::from(r)));
            continue;
        }
        if i >= 2 && r % 2 == 1 {
            out.push((lambda.remove_h(i).expect("part present"), BigInt::one()));
        }
        if r >= 2 {
            out.push((lambda.remove_v(i).expect("r_i >= 2"), BigInt::from(2 * (r / 2))));
        }
    }
    out
}

/// Euler characteristic from the untwisted identity alone.
pub fn euler_weak(group: GroupType, lambda: &Partition) -> Result<BigInt> {
    if !validate(group, lambda) {
        return Err(Error::InvalidLabel { group, partition: lambda.clone() });
    }
    fn go(g: GroupType, l: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if is_base(g, l) {
            return BigInt::one();
        }
        if let Some(v) = memo.get(l) {
            return v.clone();
        }
        let total = weak_step(g, l).iter().map(|(c, k)| k * go(g, c, memo)).sum::<BigInt>();
        memo.insert(l.clone(), total.clone());
        total
    }
    Ok(go(group, lambda, &mut HashMap::new()))
}

fn render_sum(terms: &BTreeMap<Partition, BigInt>) -> String {
    terms
        .iter()
        .rev()
        .map(|(p, c)| if c.is_one() { format!("EC{p}") } else { format!("{c}EC{p}") })
        .collect::<Vec<_>>()
        .join("+")
}

/// Unrolls the untwisted identity level by level until every term has size at most
/// `stop_size` or is a recursion base. One line per level, terms in reverse
/// lexicographic order; the last line ends with `=<EC(λ)>`.
pub fn trace_weak(group: GroupType, lambda: &Partition, stop_size: u32) -> Result<Vec<String>> {
    let total = euler_weak(group, lambda)?;
    let mut current: BTreeMap<Partition, BigInt> = [(lambda.clone(), BigInt::one())].into_iter().collect();
    let mut lines = Vec::new();
    let expandable = |p: &Partition| p.size() > stop_size && !is_base(group, p);
    while current.keys().any(expandable) {
        let mut next = BTreeMap::new();
        for (p, c) in &current {
            if expandable(p) {
                for (child, k) in weak_step(group, p) {
                    *next.entry(child).or_insert_with(BigInt::zero) += c * k;
                }
            } else {
                *next.entry(p.clone()).or_insert_with(BigInt::zero) += c;
            }
        }
        next.retain(|_, c| !c.is_zero());
        lines.push(render_sum(&next));
        current = next;
    }
    match lines.last_mut() {
        Some(last) => last.push_str(&format!("={total}")),
        None => lines.push(format!("{}={total}", render_sum(&current))),
    }
    Ok(lines)
}
