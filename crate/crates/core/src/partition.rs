//! Integer partitions as orbit labels, and the box / domino removals the
//! restriction recursions are built from.
//!
//! A partition is stored as a weakly decreasing list of positive parts. The
//! multiplicity view `r_i` (number of parts equal to `i`) is derived on demand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds `(1^{r_1} 2^{r_2} ...)` from a multiplicity map; zero multiplicities are ignored.
    pub fn from_mults(mults: &BTreeMap<u32, u32>) -> Self {
        let mut parts = Vec::new();
        for (&part, &r) in mults.iter().rev() {
            if part > 0 {
                parts.extend(std::iter::repeat_n(part, r as usize));
            }
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `r_i`, the number of parts equal to `i`.
    pub fn mult(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn mults(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Distinct part sizes in increasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.0.iter().rev().copied().collect();
        v.dedup();
        v
    }

    /// Replaces `count` parts equal to `from` by parts equal to `to` (dropping them if `to == 0`).
    fn replace(&self, from: u32, to: u32, count: usize) -> Partition {
        let mut parts = Vec::with_capacity(self.0.len());
        let mut left = count;
        for &p in &self.0 {
            if p == from && left > 0 {
                left -= 1;
                if to > 0 {
                    parts.push(to);
                }
            } else {
                parts.push(p);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `λ^i`: one box removed from a row of length `i`.
    pub fn remove_box(&self, i: u32) -> Result<Partition> {
        if self.mult(i) == 0 {
            return Err(Error::MissingPart { partition: self.clone(), part: i });
        }
        Ok(self.replace(i, i - 1, 1))
    }

    /// `λ^{h,i}`: a horizontal domino removed from a row of length `i`.
    pub fn remove_h(&self, i: u32) -> Result<Partition> {
        if i < 2 {
            return Err(Error::PartTooSmall { part: i });
        }
        if self.mult(i) == 0 {
            return Err(Error::MissingPart { partition: self.clone(), part: i });
        }
        Ok(self.replace(i, i - 2, 1))
    }

    /// `λ^{v,i}`: a vertical domino removed from two rows of length `i`.
    pub fn remove_v(&self, i: u32) -> Result<Partition> {
        if self.mult(i) < 2 {
            return Err(Error::MissingPart { partition: self.clone(), part: i });
        }
        Ok(self.replace(i, i - 1, 2))
    }

    /// `d_i = Σ_{j>i} r_j`, the number of rows strictly longer than `i`.
    pub fn d_index(&self, i: u32) -> u32 {
        self.0.iter().filter(|&&p| p > i).count() as u32
    }

    /// `ξ`, the smallest part.
    pub fn xi_min_part(&self) -> Result<u32> {
        self.0.last().copied().ok_or(Error::EmptyPartition)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `6,4,2`, `(6,4,2)` or `2,4,6` (input is sorted). The empty string and `()` give `()`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// The classical group: A = GL_n, B = SO_{2n+1}, C = Sp_{2n}, D = SO_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupType {
    A,
    B,
    C,
    D,
}

impl GroupType {
    pub const ALL: [GroupType; 4] = [GroupType::A, GroupType::B, GroupType::C, GroupType::D];

    /// Size `|λ|` of the partitions labelling orbits in rank `n`.
    pub fn label_size(self, n: u32) -> u32 {
        match self {
            GroupType::A => n,
            GroupType::B => 2 * n + 1,
            GroupType::C | GroupType::D => 2 * n,
        }
    }

    /// Parity (0 = even, 1 = odd) of the part sizes that index component group
    /// generators, and of the parts whose removal involves horizontal dominoes.
    /// `None` for type A.
    pub fn generator_parity(self) -> Option<u32> {
        match self {
            GroupType::A => None,
            GroupType::C => Some(0),
            GroupType::B | GroupType::D => Some(1),
        }
    }

    pub fn is_special_part(self, i: u32) -> bool {
        self.generator_parity() == Some(i % 2)
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::C => "C",
            GroupType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" | "GL" => Ok(GroupType::A),
            "B" | "SO_ODD" => Ok(GroupType::B),
            "C" | "SP" => Ok(GroupType::C),
            "D" | "SO_EVEN" => Ok(GroupType::D),
            other => Err(Error::Parse(format!("unknown group type {other:?}"))),
        }
    }
}

/// Distinguishes the two type-D orbits sharing a very even partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "\u{2212}" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitLabel {
    pub group: GroupType,
    pub partition: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
}

impl OrbitLabel {
    pub fn new(group: GroupType, partition: Partition, sign: Option<Sign>) -> Result<Self> {
        if !validate(group, &partition) {
            return Err(Error::InvalidLabel { group, partition });
        }
        if sign.is_some() && !is_very_even(group, &partition)? {
            return Err(Error::InvalidLabel { group, partition });
        }
        Ok(OrbitLabel { group, partition, sign })
    }

    pub fn unsigned(group: GroupType, partition: Partition) -> Result<Self> {
        Self::new(group, partition, None)
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.group, self.partition)?;
        if let Some(s) = self.sign {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether `lambda` labels a nilpotent orbit of `group`.
pub fn validate(group: GroupType, lambda: &Partition) -> bool {
    let n = lambda.size();
    let mults = lambda.mults();
    // parts of this parity must come with even multiplicity
    let paired_parity = match group {
        GroupType::A => return true,
        GroupType::B => {
            if n.is_multiple_of(2) {
                return false;
            }
            0
        }
        GroupType::C => {
            if n % 2 == 1 {
                return false;
            }
            1
        }
        GroupType::D => {
            if n % 2 == 1 {
                return false;
            }
            0
        }
    };
    mults.iter().all(|(&i, &r)| i % 2 != paired_parity || r % 2 == 0)
}

/// Type D labels whose parts are all even; these label two orbits (`+` / `-`).
pub fn is_very_even(group: GroupType, lambda: &Partition) -> Result<bool> {
    if !validate(group, lambda) {
        return Err(Error::InvalidLabel { group, partition: lambda.clone() });
    }
    Ok(group == GroupType::D && !lambda.is_empty() && lambda.parts().iter().all(|p| p % 2 == 0))
}

/// All partitions of `n` in reverse lexicographic order, starting from `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Orbit labels of `group` in rank `n`, in reverse lexicographic order.
pub fn enumerate(group: GroupType, n: u32) -> Vec<Partition> {
    partitions_of(group.label_size(n))
        .into_iter()
        .filter(|p| validate(group, p))
        .collect()
}
