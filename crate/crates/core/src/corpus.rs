//! The built-in group corpus: named constructions and permutation data
//! files, each with a hard order check at load time.

use crate::caps::Caps;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::groupfile::parse_group_text;
use crate::lie::{LieFamily, LieSpec, VerdictInput};
use crate::matgroup::{parse_spec, permutation_image};
use crate::perm::Permutation;
use crate::Result;
use num_bigint::BigUint;

/// How a corpus entry is produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    /// Alternating group on n points.
    Alternating(u32),
    /// Symmetric group on n points.
    Symmetric(u32),
    /// A classical matrix-group spec string, e.g. `PSL(2,19)`.
    Classical(&'static str),
    /// An embedded permutation data file.
    DataFile(&'static str),
}

/// One registry row.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: CorpusSource,
    pub degree: usize,
    pub expected_order: u64,
    pub simple: bool,
    /// Lie-type tag for predictor cross-checks, where the permutation
    /// group realizes the universal group of the spec.
    pub lie: Option<LieSpec>,
    /// Input for the classification verdict oracle.
    pub verdict: VerdictInput,
    /// Requires `--allow-large` (exceeds the default analysis budget).
    pub large: bool,
}

fn lie(family: LieFamily, twist: u32, q: u64) -> Option<LieSpec> {
    Some(LieSpec::new(family, twist, q).expect("corpus Lie tags are admissible"))
}

/// The corpus registry.
pub fn registry() -> Vec<CorpusEntry> {
    use CorpusSource::*;
    use VerdictInput::{Alternating as VAlt, Lie as VLie, NoneOfThese};
    vec![
        CorpusEntry { name: "A5", source: Alternating(5), degree: 5, expected_order: 60, simple: true, lie: None, verdict: VAlt(5), large: false },
        CorpusEntry { name: "A6", source: Alternating(6), degree: 6, expected_order: 360, simple: true, lie: None, verdict: VAlt(6), large: false },
        CorpusEntry { name: "A7", source: Alternating(7), degree: 7, expected_order: 2520, simple: true, lie: None, verdict: VAlt(7), large: false },
        CorpusEntry { name: "A8", source: Alternating(8), degree: 8, expected_order: 20160, simple: true, lie: None, verdict: VAlt(8), large: false },
        CorpusEntry { name: "A9", source: Alternating(9), degree: 9, expected_order: 181440, simple: true, lie: None, verdict: VAlt(9), large: false },
        CorpusEntry { name: "S3", source: Symmetric(3), degree: 3, expected_order: 6, simple: false, lie: None, verdict: NoneOfThese("S3".into()), large: false },
        CorpusEntry { name: "S4", source: Symmetric(4), degree: 4, expected_order: 24, simple: false, lie: None, verdict: NoneOfThese("S4".into()), large: false },
        CorpusEntry { name: "S5", source: Symmetric(5), degree: 5, expected_order: 120, simple: false, lie: None, verdict: NoneOfThese("S5".into()), large: false },
        CorpusEntry { name: "S6", source: Symmetric(6), degree: 6, expected_order: 720, simple: false, lie: None, verdict: NoneOfThese("S6".into()), large: false },
        CorpusEntry { name: "S7", source: Symmetric(7), degree: 7, expected_order: 5040, simple: false, lie: None, verdict: NoneOfThese("S7".into()), large: false },
        CorpusEntry { name: "PSL2_7", source: Classical("PSL(2,7)"), degree: 8, expected_order: 168, simple: true, lie: lie(LieFamily::A(1), 1, 7), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 7).unwrap()), large: false },
        CorpusEntry { name: "PSL2_8", source: Classical("PSL(2,8)"), degree: 9, expected_order: 504, simple: true, lie: lie(LieFamily::A(1), 1, 8), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 8).unwrap()), large: false },
        CorpusEntry { name: "PSL2_11", source: Classical("PSL(2,11)"), degree: 12, expected_order: 660, simple: true, lie: lie(LieFamily::A(1), 1, 11), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 11).unwrap()), large: false },
        CorpusEntry { name: "PSL2_13", source: Classical("PSL(2,13)"), degree: 14, expected_order: 1092, simple: true, lie: lie(LieFamily::A(1), 1, 13), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 13).unwrap()), large: false },
        CorpusEntry { name: "PSL2_19", source: Classical("PSL(2,19)"), degree: 20, expected_order: 3420, simple: true, lie: lie(LieFamily::A(1), 1, 19), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 19).unwrap()), large: false },
        CorpusEntry { name: "SL2_19", source: Classical("SL(2,19):vectors"), degree: 360, expected_order: 6840, simple: false, lie: lie(LieFamily::A(1), 1, 19), verdict: VLie(LieSpec::new(LieFamily::A(1), 1, 19).unwrap()), large: false },
        CorpusEntry { name: "SL3_4", source: Classical("SL(3,4):vectors"), degree: 63, expected_order: 60480, simple: false, lie: lie(LieFamily::A(2), 1, 4), verdict: VLie(LieSpec::new(LieFamily::A(2), 1, 4).unwrap()), large: false },
        CorpusEntry { name: "PSL3_4", source: Classical("PSL(3,4)"), degree: 21, expected_order: 20160, simple: true, lie: None, verdict: VLie(LieSpec::new(LieFamily::A(2), 1, 4).unwrap()), large: false },
        CorpusEntry { name: "U3_3", source: Classical("SU(3,3):isotropic"), degree: 28, expected_order: 6048, simple: true, lie: lie(LieFamily::A(2), 2, 3), verdict: VLie(LieSpec::new(LieFamily::A(2), 2, 3).unwrap()), large: false },
        CorpusEntry { name: "Sp4_3", source: Classical("Sp(4,3):vectors"), degree: 80, expected_order: 51840, simple: false, lie: lie(LieFamily::C(2), 1, 3), verdict: VLie(LieSpec::new(LieFamily::C(2), 1, 3).unwrap()), large: false },
        CorpusEntry { name: "Sz8", source: DataFile("sz8"), degree: 65, expected_order: 29120, simple: true, lie: lie(LieFamily::B(2), 2, 8), verdict: VLie(LieSpec::new(LieFamily::B(2), 2, 8).unwrap()), large: false },
        CorpusEntry { name: "M11", source: DataFile("m11"), degree: 11, expected_order: 7920, simple: true, lie: None, verdict: NoneOfThese("M11".into()), large: false },
        CorpusEntry { name: "M12", source: DataFile("m12"), degree: 12, expected_order: 95040, simple: true, lie: None, verdict: NoneOfThese("M12".into()), large: false },
    ]
}

/// Looks up a registry entry by name (case-insensitive).
pub fn entry(name: &str) -> Option<CorpusEntry> {
    registry()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
}

fn embedded_file(key: &str) -> Option<&'static str> {
    match key {
        "sz8" => Some(include_str!("../data/sz8.grp")),
        "m11" => Some(include_str!("../data/m11.grp")),
        "m12" => Some(include_str!("../data/m12.grp")),
        _ => None,
    }
}

fn alternating_group(n: u32) -> Result<GeneratedGroup> {
    let n = n as usize;
    if n < 3 {
        return Err(Error::Input("alternating groups start at n = 3".into()));
    }
    let three_cycle = Permutation::from_cycles(n, &[vec![0, 1, 2]])?;
    let long = if n % 2 == 1 {
        Permutation::from_cycles(n, &[(0..n).collect()])?
    } else {
        Permutation::from_cycles(n, &[(1..n).collect()])?
    };
    GeneratedGroup::from_generators(vec![three_cycle, long], n)
}

fn symmetric_group(n: u32) -> Result<GeneratedGroup> {
    let n = n as usize;
    if n < 2 {
        return Err(Error::Input("symmetric groups start at n = 2".into()));
    }
    let swap = Permutation::from_cycles(n, &[vec![0, 1]])?;
    let cycle = Permutation::from_cycles(n, &[(0..n).collect()])?;
    GeneratedGroup::from_generators(vec![swap, cycle], n)
}

/// Builds an entry's group and verifies degree and order exactly.
pub fn load_entry(entry: &CorpusEntry, caps: &Caps) -> Result<GeneratedGroup> {
    let group = match &entry.source {
        CorpusSource::Alternating(n) => alternating_group(*n)?,
        CorpusSource::Symmetric(n) => symmetric_group(*n)?,
        CorpusSource::Classical(spec_text) => {
            let (spec, action) = parse_spec(spec_text)?;
            permutation_image(&spec, action, caps)?.group
        }
        CorpusSource::DataFile(key) => {
            let text = embedded_file(key).ok_or_else(|| {
                Error::Input(format!("no embedded data file for {key:?}"))
            })?;
            parse_group_text(text)?
        }
    };
    if group.degree() != entry.degree {
        return Err(Error::Verification(format!(
            "{}: degree {} differs from the registered {}",
            entry.name,
            group.degree(),
            entry.degree
        )));
    }
    if group.order() != &BigUint::from(entry.expected_order) {
        return Err(Error::Verification(format!(
            "{}: order {} differs from the registered {}",
            entry.name,
            group.order(),
            entry.expected_order
        )));
    }
    Ok(group)
}

/// Loads a corpus group by name.
pub fn load(name: &str, caps: &Caps) -> Result<(GeneratedGroup, CorpusEntry)> {
    let entry = entry(name)
        .ok_or_else(|| Error::Input(format!("unknown corpus entry {name:?}")))?;
    let group = load_entry(&entry, caps)?;
    Ok((group, entry))
}

/// Resolves a group spec: a corpus name, a classical spec string such as
/// `SL(2,19)`, or a path to a group text file.
pub fn resolve_group(spec: &str, caps: &Caps) -> Result<(GeneratedGroup, Option<CorpusEntry>)> {
    if let Some(entry) = entry(spec) {
        let group = load_entry(&entry, caps)?;
        return Ok((group, Some(entry)));
    }
    if spec.contains('(') {
        let (mspec, action) = parse_spec(spec)?;
        return Ok((permutation_image(&mspec, action, caps)?.group, None));
    }
    let path = std::path::Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok((parse_group_text(&text)?, None));
    }
    Err(Error::Input(format!(
        "cannot resolve group spec {spec:?}: not a corpus name, classical spec, or file"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads_with_its_registered_order() {
        let caps = Caps::default();
        for entry in registry() {
            let group = load_entry(&entry, &caps)
                .unwrap_or_else(|e| panic!("loading {}: {e}", entry.name));
            assert_eq!(group.order_u64(), Some(entry.expected_order), "{}", entry.name);
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert!(entry("a9").is_some());
        assert!(entry("sz8").is_some());
        assert!(entry("nope").is_none());
    }

    #[test]
    fn resolve_accepts_classical_specs() {
        let caps = Caps::default();
        let (g, e) = resolve_group("SL(2,3)", &caps).unwrap();
        assert!(e.is_none());
        assert_eq!(g.order_u64(), Some(24));
    }
}
