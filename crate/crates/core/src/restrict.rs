//! One-step restriction of the Springer representation to the next smaller
//! Weyl group, as a formal sum whose coefficients are affine in the `sgn_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::agroup::{push_h, push_v, shape_of, AElement};
use crate::error::{Error, Result};
use crate::euler::{global, is_base, Engine};
use crate::partition::{is_very_even, GroupType, OrbitLabel, Partition, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Removal {
    Box { part: u32 },
    H { part: u32 },
    V { part: u32 },
}

impl Removal {
    pub fn part(&self) -> u32 {
        match *self {
            Removal::Box { part } | Removal::H { part } | Removal::V { part } => part,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalTerm {
    pub target: OrbitLabel,
    pub removal: Removal,
    /// Only the `τ_i`-fixed part of the target's cohomology contributes.
    pub tau_fixed: bool,
    pub coeff_const: i64,
    /// Coefficient of `sgn_i`, keyed by `i`.
    pub coeff_sgn: BTreeMap<u32, i64>,
}

impl FormalTerm {
    fn plain(target: OrbitLabel, removal: Removal, coeff: i64) -> Self {
        FormalTerm { target, removal, tau_fixed: false, coeff_const: coeff, coeff_sgn: BTreeMap::new() }
    }

    /// `c₀ + Σ c_i sgn_i(z)`.
    pub fn coeff_at(&self, z: &AElement) -> i64 {
        self.coeff_const + self.coeff_sgn.iter().map(|(&i, &c)| c * z.sgn(i) as i64).sum::<i64>()
    }

    fn render_coeff(&self) -> String {
        let nonzero: Vec<(u32, i64)> =
            self.coeff_sgn.iter().filter(|(_, &c)| c != 0).map(|(&i, &c)| (i, c)).collect();
        if nonzero.is_empty() {
            return if self.coeff_const == 1 { String::new() } else { self.coeff_const.to_string() };
        }
        let mut s = String::from("(");
        if self.coeff_const != 0 {
            s.push_str(&self.coeff_const.to_string());
        }
        for (k, (i, c)) in nonzero.into_iter().enumerate() {
            let lead = k == 0 && self.coeff_const == 0;
            match (c.signum(), c.abs()) {
                (1, 1) if lead => {}
                (1, 1) => s.push('+'),
                (-1, 1) => s.push('-'),
                (1, a) if lead => s.push_str(&a.to_string()),
                (1, a) => s.push_str(&format!("+{a}")),
                (_, a) => s.push_str(&format!("-{a}")),
            }
            s.push_str(&format!("sgn_{i}"));
        }
        s.push(')');
        s
    }
}

fn render_label(label: &OrbitLabel) -> String {
    match label.sign {
        Some(s) => format!("TSp{}{s}", label.partition),
        None => format!("TSp{}", label.partition),
    }
}

impl fmt::Display for FormalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.render_coeff(), render_label(&self.target))?;
        if self.tau_fixed {
            write!(f, "^{{tau_{}}}", self.removal.part())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalSum {
    pub source: OrbitLabel,
    pub terms: Vec<FormalTerm>,
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|_{{W'}} = ", render_label(&self.source))?;
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The part `e` (odd, `r_e = 2`) whose vertical domino leaves a very even type-D label.
fn very_even_v_part(lambda: &Partition) -> Option<u32> {
    lambda.mults().into_iter().find_map(|(i, r)| {
        let child = if r >= 2 { lambda.remove_v(i).ok()? } else { return None };
        is_very_even(GroupType::D, &child).ok()?.then_some(i)
    })
}

/// The one-step restriction of `TSp(label)`.
pub fn expand(label: &OrbitLabel) -> Result<FormalSum> {
    let group = label.group;
    let lambda = &label.partition;
    shape_of(group, lambda)?;
    if is_base(group, lambda) {
        return Err(Error::RankTooSmall(lambda.clone()));
    }
    let target = |p: Partition, sign: Option<Sign>| OrbitLabel::new(group, p, sign);
    let pair_part = if group == GroupType::D && !is_very_even(group, lambda)? {
        very_even_v_part(lambda)
    } else {
        None
    };
    let mut terms = Vec::new();
    let mults = lambda.mults();
    for (&i, &r) in mults.iter().rev() {
        let r = r as i64;
        if group == GroupType::A {
            terms.push(FormalTerm::plain(target(lambda.remove_box(i)?, None)?, Removal::Box { part: i }, r));
            continue;
        }
        let v = |coeff_const: i64, sgn: i64| -> Result<Option<FormalTerm>> {
            if coeff_const == 0 && sgn == 0 {
                return Ok(None);
            }
            let mut t = FormalTerm::plain(target(lambda.remove_v(i)?, None)?, Removal::V { part: i }, coeff_const);
            if sgn != 0 {
                t.coeff_sgn.insert(i, sgn);
            }
            Ok(Some(t))
        };
        if !group.is_special_part(i) {
            terms.extend(v(r, 0)?);
            continue;
        }
        if i >= 2 {
            let h_target = target(lambda.remove_h(i)?, None)?;
            if r % 2 == 1 {
                terms.push(FormalTerm::plain(h_target, Removal::H { part: i }, 1));
            } else {
                let mut t = FormalTerm::plain(h_target, Removal::H { part: i }, 1);
                t.tau_fixed = true;
                t.coeff_sgn.insert(i, -1);
                terms.push(t);
            }
        }
        if pair_part == Some(i) {
            let child = lambda.remove_v(i)?;
            for s in [Sign::Plus, Sign::Minus] {
                terms.push(FormalTerm::plain(target(child.clone(), Some(s))?, Removal::V { part: i }, 1));
            }
        } else if r % 2 == 1 {
            terms.extend(v(r - 1, 0)?);
        } else {
            terms.extend(v(r - 1, 1)?);
        }
    }
    Ok(FormalSum { source: label.clone(), terms })
}

/// Value of the restricted character at `(id, z)` through the twisted Euler characteristics
/// of the targets, using the global engine.
pub fn evaluate_at_identity(sum: &FormalSum, z: &AElement) -> Result<BigInt> {
    evaluate_with(global(), sum, z)
}

/// As [`evaluate_at_identity`] with an explicit engine. A `±` pair is swapped by
/// `z_e`, so both members contribute zero under elements with `sgn_e = -1`.
pub fn evaluate_with(engine: &Engine, sum: &FormalSum, z: &AElement) -> Result<BigInt> {
    let group = sum.source.group;
    let lambda = &sum.source.partition;
    let shape = shape_of(group, lambda)?;
    shape.check(z, lambda)?;
    // twice the value, so τ-fixed halves stay integral
    let mut doubled = BigInt::zero();
    for term in &sum.terms {
        let coeff = term.coeff_at(z);
        if coeff == 0 {
            continue;
        }
        let child = &term.target.partition;
        let cshape = shape_of(group, child)?;
        let i = term.removal.part();
        let y = match term.removal {
            Removal::Box { .. } => AElement::identity(),
            Removal::H { .. } => push_h(&shape, &cshape, z, i),
            Removal::V { .. } => push_v(&shape, &cshape, z, i),
        };
        let twice_value = if term.tau_fixed {
            let tau = cshape.normalize(&[i, i.saturating_sub(2)]);
            engine.twisted_euler(group, child, &y)? + engine.twisted_euler(group, child, &y.mul(&tau))?
        } else if term.target.sign.is_some() && z.sgn(i) == -1 {
            BigInt::zero()
        } else {
            engine.twisted_euler(group, child, &y)? * 2
        };
        doubled += BigInt::from(coeff) * twice_value;
    }
    let (value, rem) = doubled.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::NonIntegralMultiplicity(format!("{doubled}/2 evaluating {}", sum.source)));
    }
    Ok(value)
}
