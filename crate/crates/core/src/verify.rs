//! Invariant suites run by `springer verify`. Each suite collects failures
//! instead of stopping at the first one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::agroup::{shape_of, ACharacter, Subgroup};
use crate::betti::{betti_type_a, classify_bcd, BcdCase, BettiEngine};
use crate::error::{Error, Result};
use crate::euler::{euler_weak, is_base, type_a_closed_form, type_a_recursive, Engine};
use crate::exctables::{orbit_euler, table, ExcGroup};
use crate::partition::{partitions_of, validate, GroupType, OrbitLabel};
use crate::restrict::{evaluate_with, expand};
use crate::symfunc::{mul_h1, mul_hk, verify_branching, SymFunc};
use crate::tworow::{admissible_labels, closed_form_table, project_multiplicities, recursion_table_with};

/// Failure messages kept per suite; the count is always exact.
const MAX_REPORTED: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Recursion,
    Tworow,
    Symfunc,
    Exc,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Recursion, Suite::Tworow, Suite::Symfunc, Suite::Exc];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Recursion => "recursion",
            Suite::Tworow => "tworow",
            Suite::Symfunc => "symfunc",
            Suite::Exc => "exc",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}; expected recursion, tworow, symfunc or exc")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: u32,
    pub checked: u64,
    pub failed: u64,
    /// Labels the graded recursion does not reach; not failures.
    pub skipped: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, max_n: u32) -> Self {
        SuiteReport { suite, max_n, checked: 0, failed: 0, skipped: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_REPORTED {
            self.failures.push(msg);
        }
    }

    /// Records `Err` as a failure and returns the value otherwise.
    fn ok<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub fn run(suite: Suite, max_n: u32) -> SuiteReport {
    match suite {
        Suite::Recursion => recursion(max_n),
        Suite::Tworow => tworow(max_n),
        Suite::Symfunc => symfunc(max_n),
        Suite::Exc => exc(max_n),
    }
}

/// For all labels with `|λ| ≤ max_n`: type-A recursion against the closed form;
/// in types B/C/D the weak identity, restriction round-trip at every `z ∈ Ã_λ`,
/// integral multiplicities over `A_λ` and `Ã_λ`, and graded sanity where the
/// graded recursion applies.
pub fn recursion(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Recursion, max_n);
    let engine = Engine::new();
    let betti = BettiEngine::new();
    for size in 1..=max_n {
        for lambda in partitions_of(size) {
            let closed = type_a_closed_form(&lambda);
            report.check(type_a_recursive(&lambda) == closed, || format!("A {lambda}: box recursion differs from n!/∏ r_i!"));
            report.check(betti_type_a(&lambda).mass() == closed, || format!("A {lambda}: graded mass differs from n!/∏ r_i!"));
            for group in [GroupType::B, GroupType::C, GroupType::D] {
                if validate(group, &lambda) {
                    check_label(&mut report, &engine, &betti, group, &lambda);
                }
            }
        }
    }
    report
}

fn check_label(report: &mut SuiteReport, engine: &Engine, betti: &BettiEngine, group: GroupType, lambda: &crate::partition::Partition) {
    let name = || format!("{group} {lambda}");
    let Some(label) = report.ok(OrbitLabel::new(group, lambda.clone(), None), name) else { return };
    let Some(ec) = report.ok(engine.euler_char(&label), name) else { return };
    if let Some(weak) = report.ok(euler_weak(group, lambda), name) {
        report.check(weak == ec, || format!("{group} {lambda}: weak identity gives {weak}, recursion {ec}"));
    }
    let Some(shape) = report.ok(shape_of(group, lambda), name) else { return };
    if !is_base(group, lambda) {
        if let Some(sum) = report.ok(expand(&label), name) {
            for z in shape.elements(Subgroup::Atilde) {
                let direct = engine.twisted_euler(group, lambda, &z);
                let via = evaluate_with(engine, &sum, &z);
                report.check(matches!((&direct, &via), (Ok(a), Ok(b)) if a == b), || {
                    format!("{group} {lambda} z={z}: restriction gives {via:?}, recursion {direct:?}")
                });
            }
        }
    }
    let mut over_a = None;
    for over in [Subgroup::A, Subgroup::Atilde] {
        let m = engine.multiplicities(&label, over);
        report.check(m.is_ok(), || format!("{group} {lambda} over {over}: {:?}", m.as_ref().err()));
        if let Ok(m) = m {
            report.check(m.total() <= ec, || format!("{group} {lambda} over {over}: total {} exceeds {ec}", m.total()));
            if over == Subgroup::A {
                over_a = Some(m);
            }
        }
    }
    match classify_bcd(group, lambda) {
        Ok(BcdCase::OutOfScope) => report.skipped += 1,
        Ok(_) => match betti.betti_bcd(group, lambda) {
            Ok(t) => {
                let h0 = t.degrees.get(&0);
                let trivial = ACharacter::trivial().name(&shape);
                let h0_ok = h0.is_some_and(|row| row.total().is_one() && row.get(&trivial).is_one());
                report.check(h0_ok, || format!("{group} {lambda}: h^0 is not the trivial character once"));
                report.check(t.degrees.keys().all(|d| d % 2 == 0), || format!("{group} {lambda}: odd degree present"));
                report.check(t.mass() == ec, || format!("{group} {lambda}: graded mass {} vs euler {ec}", t.mass()));
                if let Some(m) = &over_a {
                    let sums = t.column_sums();
                    let agree = m.iter().map(|(k, _)| k).chain(sums.keys()).all(|k| {
                        sums.get(k).cloned().unwrap_or_default() == m.get(k)
                    });
                    report.check(agree, || format!("{group} {lambda}: graded column sums differ from multiplicities"));
                }
            }
            Err(Error::OutOfScope { .. }) => report.skipped += 1,
            Err(e) => report.fail(format!("{group} {lambda}: {e}")),
        },
        Err(e) => report.fail(format!("{group} {lambda}: {e}")),
    }
}

/// For all admissible two-row labels with `i + j ≤ max_n`: closed forms against
/// the graded recursion row by row, and column totals against the ungraded
/// multiplicities and Euler characteristic.
pub fn tworow(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Tworow, max_n);
    let engine = Engine::new();
    let betti = BettiEngine::new();
    for group in GroupType::ALL {
        for label in admissible_labels(group, max_n) {
            let name = || format!("{group} ({},{})", label.i, label.j);
            let Some(closed) = report.ok(closed_form_table(label), name) else { continue };
            let Some(rec) = report.ok(recursion_table_with(&betti, label), name) else { continue };
            report.check(closed.rows == rec.rows, || format!("{}: closed form and recursion tables differ", name()));
            let Some(orbit) = report.ok(OrbitLabel::new(group, label.partition(), None), name) else { continue };
            let totals = closed.totals();
            if let Some(ec) = report.ok(engine.euler_char(&orbit), name) {
                let sum: BigInt = totals.values().sum();
                report.check(sum == ec, || format!("{}: closed-form total {sum} vs euler {ec}", name()));
            }
            let projected = engine
                .multiplicities(&orbit, Subgroup::A)
                .and_then(|m| project_multiplicities(label, &m));
            if let Some(p) = report.ok(projected, name) {
                report.check(p == totals, || format!("{}: column totals {totals:?} vs multiplicities {p:?}", name()));
            }
        }
    }
    report
}

/// The branching identities for `|λ| ≤ max_n`, and the single-box rule against
/// the general `h_k` product for degrees below `max_n`.
pub fn symfunc(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Symfunc, max_n);
    let branching = verify_branching(max_n);
    report.checked += branching.checked;
    for f in branching.failures {
        report.fail(f);
    }
    for d in 0..max_n {
        for mu in partitions_of(d) {
            let f = SymFunc::monomial(&mu);
            report.check(mul_h1(&f) == mul_hk(&f, 1), || format!("m{mu} h_1: single-box rule differs from h_k product"));
        }
    }
    report
}

/// Embedded tables: ingest checks, `A_0` gives `|W|`, regular orbits give 1.
/// `max_n` is unused.
pub fn exc(max_n: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Exc, max_n);
    for g in ExcGroup::ALL {
        let t = table(g);
        report.check(!t.orbits.is_empty(), || format!("{g}: empty table"));
        let a0 = orbit_euler(g, "A_0");
        report.check(a0.as_ref().ok() == Some(&g.weyl_order()), || format!("{g} A_0: {a0:?}, expected {}", g.weyl_order()));
        let reg = orbit_euler(g, g.regular_orbit());
        report.check(reg.as_ref().ok() == Some(&1), || format!("{g} {}: {reg:?}, expected 1", g.regular_orbit()));
        for o in &t.orbits {
            let e = orbit_euler(g, &o.orbit);
            report.check(e.as_ref().is_ok_and(|&v| v >= 1 && v <= g.weyl_order()), || format!("{g} {}: euler {e:?}", o.orbit));
        }
    }
    report
}
