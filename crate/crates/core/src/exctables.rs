//! Multiplicities of component-group characters in the cohomology of Springer
//! fibers for exceptional groups, embedded as TSV tables.
//!
//! Each orbit is a Bala–Carter label; its component group is trivial or `S_n`
//! with `n ≤ 5`, and characters of `S_n` are written as concatenated partitions
//! (`"21"`), with `"."` for the trivial group.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExcGroup {
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl ExcGroup {
    pub const ALL: [ExcGroup; 5] = [ExcGroup::E6, ExcGroup::E7, ExcGroup::E8, ExcGroup::F4, ExcGroup::G2];

    pub fn weyl_order(self) -> u64 {
        match self {
            ExcGroup::E6 => 51_840,
            ExcGroup::E7 => 2_903_040,
            ExcGroup::E8 => 696_729_600,
            ExcGroup::F4 => 1_152,
            ExcGroup::G2 => 12,
        }
    }

    /// Bala–Carter label of the regular orbit, whose Springer fiber is a point.
    pub fn regular_orbit(self) -> &'static str {
        match self {
            ExcGroup::E6 => "E_6",
            ExcGroup::E7 => "E_7",
            ExcGroup::E8 => "E_8",
            ExcGroup::F4 => "F_4",
            ExcGroup::G2 => "G_2",
        }
    }

    fn source(self) -> &'static str {
        match self {
            ExcGroup::E6 => include_str!("../data/E6.tsv"),
            ExcGroup::E7 => include_str!("../data/E7.tsv"),
            ExcGroup::E8 => include_str!("../data/E8.tsv"),
            ExcGroup::F4 => include_str!("../data/F4.tsv"),
            ExcGroup::G2 => include_str!("../data/G2.tsv"),
        }
    }
}

impl fmt::Display for ExcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExcGroup::E6 => "E6",
            ExcGroup::E7 => "E7",
            ExcGroup::E8 => "E8",
            ExcGroup::F4 => "F4",
            ExcGroup::G2 => "G2",
        })
    }
}

impl FromStr for ExcGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !matches!(c, '_' | ' ' | '$')).collect::<String>().to_ascii_uppercase();
        ExcGroup::ALL
            .into_iter()
            .find(|g| g.to_string() == key)
            .ok_or_else(|| Error::Parse(format!("unknown exceptional group {s:?}; expected one of E6, E7, E8, F4, G2")))
    }
}

/// Component group `A_N`: trivial or a symmetric group `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentGroup {
    Trivial,
    Symmetric(u32),
}

impl ComponentGroup {
    /// `n` with `A_N ≅ S_n`; the trivial group is `S_1`.
    pub fn degree(self) -> u32 {
        match self {
            ComponentGroup::Trivial => 1,
            ComponentGroup::Symmetric(n) => n,
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Trivial => f.write_str("."),
            ComponentGroup::Symmetric(n) => write!(f, "S{n}"),
        }
    }
}

impl FromStr for ComponentGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "." {
            return Ok(ComponentGroup::Trivial);
        }
        match s.strip_prefix('S').and_then(|n| n.parse::<u32>().ok()) {
            Some(n) if (2..=5).contains(&n) => Ok(ComponentGroup::Symmetric(n)),
            _ => Err(Error::Parse(format!("component group {s:?} is not '.', S2, S3, S4 or S5"))),
        }
    }
}

impl Serialize for ComponentGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ComponentGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// One table row: the multiplicity of `phi` in the cohomology of the Springer fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcRow {
    pub group: ExcGroup,
    pub orbit: String,
    pub a_group: ComponentGroup,
    pub phi: String,
    pub mult: u64,
}

impl ExcRow {
    /// The partition naming `phi`; `"."` is the partition `(1)` of the trivial group.
    pub fn phi_partition(&self) -> Result<Partition> {
        parse_phi(&self.phi)
    }
}

/// Parses a character label: `"."` or concatenated single-digit parts such as `"211"`.
pub fn parse_phi(s: &str) -> Result<Partition> {
    if s == "." {
        return Ok(Partition::new(vec![1]).expect("nonzero part"));
    }
    let parts: Option<Vec<u32>> = s.chars().map(|c| c.to_digit(10).filter(|&d| d > 0)).collect();
    let parts = parts.filter(|p| !p.is_empty()).ok_or_else(|| Error::BadLabel(format!("character label {s:?}")))?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadLabel(format!("character label {s:?} is not weakly decreasing")));
    }
    Partition::new(parts)
}

fn phi_label(p: &Partition) -> String {
    p.parts().iter().map(u32::to_string).collect()
}

/// Dimension of the `S_n`-irrep labelled by `phi`, by the hook length formula.
pub fn irrep_dim(n: u32, phi: &Partition) -> Result<u64> {
    if phi.size() != n || n == 0 || n > 20 {
        return Err(Error::BadLabel(format!("{phi} is not a partition of {n} with 1 <= {n} <= 20")));
    }
    let parts = phi.parts();
    let mut hooks: u64 = 1;
    for (r, &row) in parts.iter().enumerate() {
        for c in 0..row as usize {
            let arm = row as usize - c - 1;
            let leg = parts[r + 1..].iter().filter(|&&p| p as usize > c).count();
            hooks *= (arm + leg + 1) as u64;
        }
    }
    let factorial: u64 = (1..=n as u64).product();
    Ok(factorial / hooks)
}

/// Canonical key for an orbit label: whitespace, `$`, `_` and braces are dropped,
/// prime marks become ASCII apostrophes and tildes become a leading `~`.
pub fn normalize_orbit(s: &str) -> String {
    let mut t = s.replace("\\tilde", "~").replace("tilde", "~");
    t = t.replace(['\u{2033}', '"'], "''").replace(['\u{2032}', '\u{2019}', '`'], "'");
    let mut out = String::new();
    for c in t.chars() {
        match c {
            c if c.is_whitespace() => {}
            '$' | '_' | '{' | '}' => {}
            '\u{303}' => {
                // combining tilde follows its letter
                if let Some(last) = out.pop() {
                    out.push('~');
                    out.push(last);
                }
            }
            'Ã' => out.push_str("~A"),
            c => out.push(c),
        }
    }
    out
}

/// All rows for one orbit, in table order.
#[derive(Debug, Clone)]
pub struct OrbitRows {
    pub orbit: String,
    pub a_group: ComponentGroup,
    pub rows: Vec<ExcRow>,
}

#[derive(Debug, Clone)]
pub struct ExcTable {
    pub group: ExcGroup,
    pub orbits: Vec<OrbitRows>,
    index: BTreeMap<String, usize>,
}

impl ExcTable {
    pub fn row_count(&self) -> usize {
        self.orbits.iter().map(|o| o.rows.len()).sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &ExcRow> {
        self.orbits.iter().flat_map(|o| o.rows.iter())
    }

    pub fn orbit(&self, label: &str) -> Result<&OrbitRows> {
        let key = normalize_orbit(label);
        if let Some(&i) = self.index.get(&key) {
            return Ok(&self.orbits[i]);
        }
        let suggestion = self
            .orbits
            .iter()
            .map(|o| (strsim::normalized_damerau_levenshtein(&key, &normalize_orbit(&o.orbit)), &o.orbit))
            .filter(|(score, _)| *score >= 0.4)
            .max_by(|a, b| a.0.total_cmp(&b.0))
            .map(|(_, o)| o.clone());
        Err(Error::UnknownOrbit { group: self.group.to_string(), orbit: label.to_string(), suggestion })
    }
}

fn ingest_error(group: ExcGroup, line: usize, msg: impl fmt::Display) -> Error {
    Error::Inconsistent(format!("{group} table line {line}: {msg}"))
}

/// Parses and checks one table: header, well-formed rows, contiguous orbits with
/// a single component group, character sets equal to the partitions of `n`, and
/// the trivial character having the largest multiplicity.
pub fn parse_table(group: ExcGroup, text: &str) -> Result<ExcTable> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, h)) if h.split('\t').collect::<Vec<_>>() == ["group", "orbit", "a_group", "phi", "mult"] => {}
        _ => return Err(ingest_error(group, 1, "missing header group/orbit/a_group/phi/mult")),
    }
    let mut orbits: Vec<OrbitRows> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for (n, line) in lines {
        let ln = n + 1;
        let cols: Vec<&str> = line.split('\t').collect();
        let [g, orbit, a_group, phi, mult] = cols[..] else {
            return Err(ingest_error(group, ln, format!("expected 5 columns, found {}", cols.len())));
        };
        if g.parse::<ExcGroup>().ok() != Some(group) {
            return Err(ingest_error(group, ln, format!("row belongs to {g}")));
        }
        let a_group: ComponentGroup = a_group.parse().map_err(|e| ingest_error(group, ln, e))?;
        let mult: u64 = mult.parse().map_err(|_| ingest_error(group, ln, format!("bad multiplicity {mult:?}")))?;
        let phi_ok = match a_group {
            ComponentGroup::Trivial => phi == ".",
            ComponentGroup::Symmetric(k) => parse_phi(phi).is_ok_and(|p| p.size() == k),
        };
        if !phi_ok {
            return Err(ingest_error(group, ln, format!("character {phi:?} does not belong to {a_group}")));
        }
        let row = ExcRow { group, orbit: orbit.to_string(), a_group, phi: phi.to_string(), mult };
        let key = normalize_orbit(orbit);
        match orbits.last_mut() {
            Some(last) if last.orbit == orbit => {
                if last.a_group != a_group {
                    return Err(ingest_error(group, ln, format!("orbit {orbit} changes component group")));
                }
                if last.rows.iter().any(|r| r.phi == row.phi) {
                    return Err(ingest_error(group, ln, format!("duplicate character {phi} for {orbit}")));
                }
                last.rows.push(row);
            }
            _ => {
                if index.insert(key, orbits.len()).is_some() {
                    return Err(ingest_error(group, ln, format!("orbit {orbit} is repeated or clashes after normalization")));
                }
                orbits.push(OrbitRows { orbit: orbit.to_string(), a_group, rows: vec![row] });
            }
        }
    }
    for o in &orbits {
        let expected: BTreeSet<String> = match o.a_group {
            ComponentGroup::Trivial => [".".to_string()].into(),
            ComponentGroup::Symmetric(k) => partitions_of(k).iter().map(phi_label).collect(),
        };
        let found: BTreeSet<String> = o.rows.iter().map(|r| r.phi.clone()).collect();
        if found != expected {
            return Err(Error::Inconsistent(format!("{group} {}: characters {found:?}, expected {expected:?}", o.orbit)));
        }
        let trivial = o.rows.iter().find(|r| r.phi == "." || parse_phi(&r.phi).is_ok_and(|p| p.len() == 1));
        let top = trivial.map(|r| r.mult).unwrap_or(0);
        if o.rows.iter().any(|r| r.mult > top) {
            return Err(Error::Inconsistent(format!(
                "{group} {}: a nontrivial character has larger multiplicity than the trivial one",
                o.orbit
            )));
        }
    }
    Ok(ExcTable { group, orbits, index })
}

/// The embedded table for `group`, parsed and checked once.
pub fn table(group: ExcGroup) -> &'static ExcTable {
    static TABLES: OnceLock<Vec<ExcTable>> = OnceLock::new();
    let all = TABLES.get_or_init(|| {
        ExcGroup::ALL
            .iter()
            .map(|&g| parse_table(g, g.source()).unwrap_or_else(|e| panic!("embedded table is corrupt: {e}")))
            .collect()
    });
    &all[ExcGroup::ALL.iter().position(|&g| g == group).expect("listed group")]
}

/// `(phi, mult)` for every character of `A_N`, in table order.
pub fn query(group: ExcGroup, orbit: &str) -> Result<Vec<(String, u64)>> {
    Ok(table(group).orbit(orbit)?.rows.iter().map(|r| (r.phi.clone(), r.mult)).collect())
}

/// `Σ_φ dim(φ) · mult(φ)`, the Euler characteristic of the Springer fiber.
pub fn orbit_euler(group: ExcGroup, orbit: &str) -> Result<u64> {
    let o = table(group).orbit(orbit)?;
    let n = o.a_group.degree();
    o.rows.iter().map(|r| Ok(irrep_dim(n, &r.phi_partition()?)? * r.mult)).sum()
}
