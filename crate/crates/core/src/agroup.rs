//! Component groups of classical nilpotent orbits as elementary abelian 2-groups.
//!
//! The extended group `Ã_λ` is generated by involutions `z_i`, one per part size
//! `i` of the generator parity. Elements are stored as their support: the sorted
//! set of generators appearing an odd number of times. For B and D the ordinary
//! component group `A_λ` is the subgroup of even-size supports; for A and C it is
//! all of `Ã_λ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{is_very_even, validate, GroupType, Partition};

/// Name of the minus sign in character strings.
pub const MINUS: char = '\u{2212}';

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AElement(Vec<u32>);

impl AElement {
    pub fn identity() -> Self {
        AElement(Vec::new())
    }

    /// Product `z_{a_1} z_{a_2} ...` of the listed generators; repeats cancel.
    pub fn from_generators(raw: &[u32]) -> Self {
        let mut set = BTreeSet::new();
        for &i in raw {
            if !set.insert(i) {
                set.remove(&i);
            }
        }
        AElement(set.into_iter().collect())
    }

    pub fn support(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// `sgn_i(z)`: `-1` if `z_i` occurs in `z`, else `+1`.
    pub fn sgn(&self, i: u32) -> i32 {
        if self.contains(i) {
            -1
        } else {
            1
        }
    }

    /// Product in the ambient group (symmetric difference of supports).
    pub fn mul(&self, other: &AElement) -> AElement {
        let a: BTreeSet<u32> = self.0.iter().copied().collect();
        let b: BTreeSet<u32> = other.0.iter().copied().collect();
        AElement(a.symmetric_difference(&b).copied().collect())
    }
}

impl fmt::Display for AElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("id");
        }
        for i in &self.0 {
            write!(f, "z_{i}")?;
        }
        Ok(())
    }
}

impl FromStr for AElement {
    type Err = Error;

    /// Accepts `id`, `z_1z_3`, `1,3` or the empty string. Repeated generators cancel.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "id" {
            return Ok(AElement::identity());
        }
        let body = s.replace("z_", ",").replace('z', ",");
        let mut set = BTreeSet::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: u32 = tok
                .trim_matches(|c| c == '{' || c == '}')
                .parse()
                .map_err(|_| Error::Parse(format!("bad component group element {s:?}")))?;
            if !set.insert(i) {
                set.remove(&i);
            }
        }
        Ok(AElement(set.into_iter().collect()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subgroup {
    /// `A_λ`
    A,
    /// `Ã_λ`
    Atilde,
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Subgroup::A),
            "Atilde" | "atilde" | "Ã" | "tilde" => Ok(Subgroup::Atilde),
            other => Err(Error::Parse(format!("unknown subgroup {other:?} (expected A or Atilde)"))),
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subgroup::A => "A",
            Subgroup::Atilde => "Atilde",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AGroupShape {
    pub group: GroupType,
    /// Sorted generator part sizes.
    pub gens: Vec<u32>,
    pub a_rank: u32,
}

/// A character of `Ã_λ`, given by the set of generators it sends to `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ACharacter {
    pub minus: BTreeSet<u32>,
}

impl ACharacter {
    pub fn trivial() -> Self {
        ACharacter { minus: BTreeSet::new() }
    }

    pub fn value(&self, z: &AElement) -> i32 {
        if z.support().iter().filter(|i| self.minus.contains(i)).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `+`/`−` string over the sorted generators; `+` when there are none.
    pub fn name(&self, shape: &AGroupShape) -> String {
        if shape.gens.is_empty() {
            return "+".into();
        }
        shape
            .gens
            .iter()
            .map(|i| if self.minus.contains(i) { MINUS } else { '+' })
            .collect()
    }
}

impl AGroupShape {
    fn generator_parity_parts(group: GroupType, lambda: &Partition) -> Vec<u32> {
        match group.generator_parity() {
            None => Vec::new(),
            Some(par) => lambda.distinct_parts().into_iter().filter(|i| i % 2 == par).collect(),
        }
    }

    /// Number of elements of the chosen subgroup.
    pub fn order(&self, over: Subgroup) -> usize {
        let rank = match over {
            Subgroup::Atilde => self.gens.len() as u32,
            Subgroup::A => self.a_rank,
        };
        1usize << rank
    }

    pub fn contains(&self, z: &AElement) -> bool {
        z.support().iter().all(|i| self.gens.binary_search(i).is_ok())
    }

    pub fn in_a(&self, z: &AElement) -> bool {
        self.contains(z)
            && match self.group {
                GroupType::B | GroupType::D => z.support().len().is_multiple_of(2),
                _ => true,
            }
    }

    /// Rejects elements that are not normalized members of `Ã_λ`.
    pub fn check(&self, z: &AElement, partition: &Partition) -> Result<()> {
        let sorted = z.support().windows(2).all(|w| w[0] < w[1]);
        if sorted && self.contains(z) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                group: self.group,
                partition: partition.clone(),
                element: z.to_string(),
            })
        }
    }

    /// Drops sizes that are not generators and cancels repeated ones.
    pub fn normalize(&self, raw: &[u32]) -> AElement {
        let mut set = BTreeSet::new();
        for &i in raw {
            if self.gens.binary_search(&i).is_ok() && !set.insert(i) {
                set.remove(&i);
            }
        }
        AElement(set.into_iter().collect())
    }

    /// Elements of the chosen subgroup, identity first.
    pub fn elements(&self, over: Subgroup) -> Vec<AElement> {
        let n = self.gens.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let support: Vec<u32> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| self.gens[b]).collect();
            let z = AElement(support);
            if over == Subgroup::Atilde || self.in_a(&z) {
                out.push(z);
            }
        }
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Characters of the chosen subgroup, trivial first. For `A_λ` in types B and D,
    /// each character is represented by the `Ã_λ`-character that is `+` at the
    /// smallest generator.
    pub fn characters(&self, over: Subgroup) -> Vec<ACharacter> {
        let free: &[u32] = match (over, self.group) {
            (Subgroup::A, GroupType::B | GroupType::D) if !self.gens.is_empty() => &self.gens[1..],
            _ => &self.gens,
        };
        let n = free.len();
        let mut out: Vec<ACharacter> = (0u64..(1u64 << n))
            .map(|mask| ACharacter {
                minus: (0..n).filter(|b| mask >> b & 1 == 1).map(|b| free[b]).collect(),
            })
            .collect();
        out.sort();
        out
    }

    /// Canonical `A_λ` representative of an `Ã_λ` character.
    pub fn restrict_to_a(&self, chi: &ACharacter) -> ACharacter {
        match (self.group, self.gens.first()) {
            (GroupType::B | GroupType::D, Some(first)) if chi.minus.contains(first) => ACharacter {
                minus: self.gens.iter().copied().filter(|i| !chi.minus.contains(i)).collect(),
            },
            _ => chi.clone(),
        }
    }
}

pub fn shape_of(group: GroupType, lambda: &Partition) -> Result<AGroupShape> {
    if !validate(group, lambda) {
        return Err(Error::InvalidLabel { group, partition: lambda.clone() });
    }
    let gens = if is_very_even(group, lambda)? {
        Vec::new()
    } else {
        AGroupShape::generator_parity_parts(group, lambda)
    };
    let a_rank = match group {
        GroupType::A | GroupType::C => gens.len() as u32,
        GroupType::B | GroupType::D => gens.len().saturating_sub(1) as u32,
    };
    Ok(AGroupShape { group, gens, a_rank })
}

pub fn normalize(shape: &AGroupShape, raw: &[u32]) -> AElement {
    shape.normalize(raw)
}

/// Image of `z` under the horizontal-domino relabelling `z_i ↦ z'_{i-2}`, other generators fixed.
pub fn push_h(parent: &AGroupShape, child: &AGroupShape, z: &AElement, i: u32) -> AElement {
    debug_assert!(parent.contains(z));
    let raw: Vec<u32> = z.support().iter().map(|&a| if a == i { i - 2 } else { a }).collect();
    child.normalize(&raw)
}

/// Image of `z` under the vertical-domino relabelling `z_a ↦ z'_a`.
pub fn push_v(parent: &AGroupShape, child: &AGroupShape, z: &AElement, _i: u32) -> AElement {
    debug_assert!(parent.contains(z));
    child.normalize(z.support())
}

/// Isotypic multiplicities, keyed by character name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiplicityVector(#[serde(with = "crate::json::map")] pub BTreeMap<String, BigInt>);

impl MultiplicityVector {
    pub fn get(&self, name: &str) -> BigInt {
        self.0.get(name).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &BigInt)> {
        self.0.iter()
    }
}

/// Character inner products `|Γ|^{-1} Σ_z φ(z) values(z)` over `Γ = A_λ` or `Ã_λ`.
pub fn hadamard_multiplicities(
    shape: &AGroupShape,
    values: &BTreeMap<AElement, BigInt>,
    over: Subgroup,
) -> Result<MultiplicityVector> {
    let elements = shape.elements(over);
    let order = BigInt::from(elements.len());
    let mut out = BTreeMap::new();
    for chi in shape.characters(over) {
        let mut acc = BigInt::zero();
        for z in &elements {
            let v = values
                .get(z)
                .ok_or_else(|| Error::Inconsistent(format!("no value supplied for element {z}")))?;
            if chi.value(z) == 1 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        let name = chi.name(shape);
        if !(&acc % &order).is_zero() || acc.is_negative() {
            return Err(Error::NonIntegralMultiplicity(format!("{name}: {acc}/{order}")));
        }
        out.insert(name, acc / &order);
    }
    Ok(MultiplicityVector(out))
}
