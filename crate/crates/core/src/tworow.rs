//! Closed-form graded multiplicities for two-row orbits, and their comparison
//! against the graded recursions.
//!
//! Labels are `(i, j)` with `i ≥ j`; in type B the orbit is `(i, j, 1)`.
//! Character names follow the usual two-row conventions: type B uses pairs of
//! signs `(φ(z_i z_j), φ(z_j z_1))`; type C uses `Id`/`sgn` of the quotient of
//! `A_λ` by the image of `-I`; types A and D have a single column `h`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::agroup::{shape_of, MultiplicityVector, Subgroup, MINUS};
use crate::betti::{betti_type_a, BettiEngine, GradedTable};
use crate::error::{Error, Result};
use crate::partition::{GroupType, Partition};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

fn exact_div(num: BigInt, den: i64, what: impl FnOnce() -> String) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegralMultiplicity(what()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRowLabel {
    pub group: GroupType,
    pub i: u32,
    pub j: u32,
}

impl TwoRowLabel {
    pub fn new(group: GroupType, i: u32, j: u32) -> Result<Self> {
        let label = TwoRowLabel { group, i, j };
        let ok = i >= j
            && match group {
                GroupType::A => true,
                GroupType::B | GroupType::D => j >= 1 && (i == j || (i % 2 == 1 && j % 2 == 1)),
                GroupType::C => i == j || (i.is_multiple_of(2) && j.is_multiple_of(2)),
            };
        if ok {
            Ok(label)
        } else {
            Err(Error::InvalidLabel { group, partition: label.raw_partition() })
        }
    }

    fn raw_partition(&self) -> Partition {
        let mut parts = vec![self.i, self.j];
        if self.group == GroupType::B {
            parts.push(1);
        }
        parts.retain(|&p| p > 0);
        Partition::new(parts).expect("positive parts")
    }

    /// The orbit partition: `(i, j)`, or `(i, j, 1)` in type B.
    pub fn partition(&self) -> Partition {
        self.raw_partition()
    }

    /// Column names of the table, in display order.
    pub fn columns(&self) -> Vec<String> {
        match self.group {
            GroupType::A | GroupType::D => vec!["h".into()],
            GroupType::B => ["++", "+-", "-+", "--"].iter().map(|s| s.replace('-', &MINUS.to_string())).collect(),
            GroupType::C => vec!["Id".into(), "sgn".into()],
        }
    }

    /// Highest cohomological degree any column can be nonzero in.
    pub fn top_degree(&self) -> u32 {
        match self.group {
            GroupType::A => (2 * self.j).max(self.j + 2),
            _ => self.j + 2,
        }
    }
}

/// `h^{2k}` for `GL_{i+j}` and the orbit `(i, j)`.
pub fn gl_two_row(i: u32, j: u32, k: u32) -> BigInt {
    if k > j || j > i {
        return BigInt::zero();
    }
    let n = (i + j) as i64;
    binom(n, k as i64) - binom(n, k as i64 - 1)
}

/// `(h_{++}, h_{+-}, h_{-+}, h_{--})` in degree `2k` for `SO_{2n+1}` and the orbit `(i, j, 1)`.
///
/// For `i = j` even the form is `C(i,k) + C(i,k-2)` for `k ≤ i/2` and
/// `C(i-1,i/2) + C(i-1,i/2-2)` at `k = i/2 + 1`, the form forced by the graded recursion.
pub fn b_two_row(i: u32, j: u32, k: u32) -> Result<[BigInt; 4]> {
    TwoRowLabel::new(GroupType::B, i, j)?;
    let zero = BigInt::zero;
    if 2 * k > j + 2 {
        return Ok([zero(), zero(), zero(), zero()]);
    }
    let (i64_, j64, k64) = (i as i64, j as i64, k as i64);
    let out = if i > j && j > 1 {
        let half = (i64_ + j64) / 2;
        let minus_plus = if 2 * k == j + 1 {
            exact_div(
                BigInt::from(i64_ - j64) * binom((i64_ + j64 + 2) / 2, (j64 + 1) / 2),
                i64_ + j64 + 2,
                || format!("B two-row ({i},{j},1) at degree {}", 2 * k),
            )?
        } else {
            zero()
        };
        [binom(half, k64), binom(half, k64 - 2), minus_plus, zero()]
    } else if i == j && i % 2 == 1 && i > 1 {
        [binom(i64_, k64), binom(i64_, k64 - 2), zero(), zero()]
    } else if i > 1 && j == 1 {
        let minus_plus = if k == 1 { BigInt::from((i - 1) / 2) } else { zero() };
        [binom((i64_ + 1) / 2, k64), zero(), minus_plus, zero()]
    } else if i == j && i.is_multiple_of(2) {
        let h = if 2 * k <= i {
            binom(i64_, k64) + binom(i64_, k64 - 2)
        } else {
            binom(i64_ - 1, i64_ / 2) + binom(i64_ - 1, i64_ / 2 - 2)
        };
        [h, zero(), zero(), zero()]
    } else {
        // (1,1,1)
        [if k <= 1 { BigInt::one() } else { zero() }, zero(), zero(), zero()]
    };
    Ok(out)
}

/// `(h_Id, h_sgn)` in degree `2k` for `Sp_{2n}` and the orbit `(i, j)`.
pub fn c_two_row(i: u32, j: u32, k: u32) -> Result<(BigInt, BigInt)> {
    TwoRowLabel::new(GroupType::C, i, j)?;
    let f = (i.div_ceil(2) + j.div_ceil(2)) as i64;
    let k64 = k as i64;
    let id = if 2 * k <= j {
        binom(f, k64)
    } else if 2 * k == j + 1 {
        exact_div(binom(f, k64), 2, || format!("C two-row ({i},{j}) at degree {}", 2 * k))?
    } else {
        BigInt::zero()
    };
    let sgn = if i.is_multiple_of(2) && j.is_multiple_of(2) && 2 * k <= j {
        binom(((i + j) / 2) as i64, k64 - 1)
    } else {
        BigInt::zero()
    };
    Ok((id, sgn))
}

/// `h^{2k}` for `SO_{2n}` and the orbit `(i, j)`.
pub fn d_two_row(i: u32, j: u32, k: u32) -> Result<BigInt> {
    TwoRowLabel::new(GroupType::D, i, j)?;
    let half = ((i + j) / 2) as i64;
    if 2 * k < j {
        Ok(binom(half, k as i64))
    } else if 2 * k == j {
        exact_div(binom(half, k as i64), 2, || format!("D two-row ({i},{j}) at degree {}", 2 * k))
    } else {
        Ok(BigInt::zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoRowRow {
    pub degree: u32,
    #[serde(with = "crate::json::map")]
    pub values: BTreeMap<String, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoRowTable {
    pub label: TwoRowLabel,
    pub partition: Partition,
    pub columns: Vec<String>,
    pub rows: Vec<TwoRowRow>,
}

impl TwoRowTable {
    fn new(label: TwoRowLabel) -> Self {
        TwoRowTable { label, partition: label.partition(), columns: label.columns(), rows: Vec::new() }
    }

    /// Column sums over all degrees.
    pub fn totals(&self) -> BTreeMap<String, BigInt> {
        let mut out: BTreeMap<String, BigInt> = self.columns.iter().map(|c| (c.clone(), BigInt::zero())).collect();
        for row in &self.rows {
            for (c, v) in &row.values {
                *out.entry(c.clone()).or_default() += v;
            }
        }
        out
    }
}

/// The closed forms over `0 ≤ 2k ≤ j + 2` (`0 ≤ k ≤ j` in type A).
pub fn closed_form_table(label: TwoRowLabel) -> Result<TwoRowTable> {
    let TwoRowLabel { group, i, j } = TwoRowLabel::new(label.group, label.i, label.j)?;
    let mut table = TwoRowTable::new(label);
    let cols = label.columns();
    for k in 0..=label.top_degree() / 2 {
        let values: Vec<BigInt> = match group {
            GroupType::A => vec![gl_two_row(i, j, k)],
            GroupType::B => b_two_row(i, j, k)?.to_vec(),
            GroupType::C => {
                let (a, b) = c_two_row(i, j, k)?;
                vec![a, b]
            }
            GroupType::D => vec![d_two_row(i, j, k)?],
        };
        table.rows.push(TwoRowRow { degree: 2 * k, values: cols.iter().cloned().zip(values).collect() });
    }
    Ok(table)
}

/// Sorts an `A_λ`-isotypic row into the two-row columns.
fn project_row(label: TwoRowLabel, row: &MultiplicityVector) -> Result<BTreeMap<String, BigInt>> {
    let lambda = label.partition();
    let shape = shape_of(label.group, &lambda)?;
    let cols = label.columns();
    let mut out: BTreeMap<String, BigInt> = cols.iter().map(|c| (c.clone(), BigInt::zero())).collect();
    let characters = shape.characters(Subgroup::A);
    let lookup: BTreeMap<String, _> = characters.iter().map(|c| (c.name(&shape), c)).collect();
    for (name, mult) in row.iter() {
        let chi = lookup
            .get(name)
            .ok_or_else(|| Error::Inconsistent(format!("unknown character {name} for {lambda}")))?;
        let col = match label.group {
            GroupType::A => "h".to_string(),
            GroupType::B => {
                let a = chi.value(&shape.normalize(&[label.i, label.j]));
                let b = chi.value(&shape.normalize(&[label.j, 1]));
                let sign = |v: i32| if v == 1 { '+' } else { MINUS };
                [sign(a), sign(b)].iter().collect()
            }
            GroupType::C => {
                let minus_i = shape.normalize(lambda.parts());
                if chi.value(&minus_i) == -1 {
                    if !mult.is_zero() {
                        return Err(Error::Inconsistent(format!(
                            "{lambda}: character {name} is nontrivial on -I but has multiplicity {mult}"
                        )));
                    }
                    continue;
                }
                if chi.value(&shape.normalize(&[label.i])) == 1 { "Id" } else { "sgn" }.to_string()
            }
            GroupType::D => {
                if !chi.minus.is_empty() {
                    if !mult.is_zero() {
                        return Err(Error::Inconsistent(format!(
                            "{lambda}: character {name} should not occur but has multiplicity {mult}"
                        )));
                    }
                    continue;
                }
                "h".to_string()
            }
        };
        *out.entry(col).or_default() += mult;
    }
    Ok(out)
}

/// Graded recursion output for the same label, in the closed-form layout.
pub fn recursion_table_with(engine: &BettiEngine, label: TwoRowLabel) -> Result<TwoRowTable> {
    let label = TwoRowLabel::new(label.group, label.i, label.j)?;
    let lambda = label.partition();
    let graded: GradedTable = match label.group {
        GroupType::A => betti_type_a(&lambda),
        g => engine.betti_bcd(g, &lambda)?,
    };
    let mut table = TwoRowTable::new(label);
    let top = label.top_degree().max(graded.degrees.keys().next_back().copied().unwrap_or(0));
    let empty = MultiplicityVector::default();
    for degree in (0..=top).step_by(2) {
        let row = graded.degrees.get(&degree).unwrap_or(&empty);
        table.rows.push(TwoRowRow { degree, values: project_row(label, row)? });
    }
    Ok(table)
}

pub fn recursion_table(label: TwoRowLabel) -> Result<TwoRowTable> {
    recursion_table_with(crate::betti::global(), label)
}

/// Multiplicities of the whole cohomology, in the closed-form layout.
pub fn project_multiplicities(label: TwoRowLabel, mults: &MultiplicityVector) -> Result<BTreeMap<String, BigInt>> {
    project_row(label, mults)
}

/// All admissible two-row labels of `group` with `i + j ≤ max_sum`.
pub fn admissible_labels(group: GroupType, max_sum: u32) -> Vec<TwoRowLabel> {
    let mut out = Vec::new();
    for s in 0..=max_sum {
        for j in 0..=s / 2 {
            if let Ok(l) = TwoRowLabel::new(group, s - j, j) {
                out.push(l);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn gl_examples() {
        assert_eq!(gl_two_row(2, 2, 2), b(2));
        assert_eq!(gl_two_row(5, 0, 0), b(1));
        assert_eq!(gl_two_row(2, 1, 1), b(2));
        assert_eq!(gl_two_row(2, 1, 2), b(0));
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_two_row(1, 1, 0).unwrap(), [b(1), b(0), b(0), b(0)]);
        assert_eq!(b_two_row(1, 1, 1).unwrap(), [b(1), b(0), b(0), b(0)]);
        assert_eq!(b_two_row(3, 1, 1).unwrap(), [b(2), b(0), b(1), b(0)]);
        assert_eq!(b_two_row(5, 3, 2).unwrap(), [b(6), b(1), b(2), b(0)]);
        assert!(b_two_row(4, 2, 0).is_err());
    }

    #[test]
    fn c_examples() {
        assert_eq!(c_two_row(2, 2, 1).unwrap(), (b(2), b(1)));
        assert_eq!(c_two_row(2, 0, 0).unwrap(), (b(1), b(0)));
        assert_eq!(c_two_row(3, 3, 2).unwrap(), (b(3), b(0)));
        assert!(c_two_row(3, 1, 0).is_err());
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_two_row(3, 3, 1).unwrap(), b(3));
        assert_eq!(d_two_row(1, 1, 0).unwrap(), b(1));
        assert!(matches!(d_two_row(4, 0, 0), Err(Error::InvalidLabel { .. })));
        assert_eq!(d_two_row(2, 2, 1).unwrap(), b(1));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), b(6));
        assert_eq!(binom(4, -1), b(0));
        assert_eq!(binom(4, 5), b(0));
        assert_eq!(binom(0, 0), b(1));
    }

    #[test]
    fn small_tables_agree() {
        for g in [GroupType::A, GroupType::B, GroupType::C, GroupType::D] {
            for label in admissible_labels(g, 8) {
                let closed = closed_form_table(label).unwrap();
                let rec = recursion_table(label).unwrap();
                assert_eq!(closed.rows, rec.rows, "{g} ({},{})", label.i, label.j);
            }
        }
    }
}
