//! Strong closure, ω̄S, minimal strongly closed subgroups, the 𝒪_A(G)
//! operator, and fusion-control verdicts.
//!
//! A subgroup `A ≤ S` (S Sylow) is *strongly closed* when `a^G ∩ S ⊆ A`
//! for every `a ∈ A`. Failures are always reported with a concrete
//! [`FusionWitness`] — a triple `(a, b, g)` with `a^g = b` that replays by
//! multiplication.

use crate::caps::Caps;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::perm::Permutation;
use crate::sylow::p_part;
use crate::Result;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A concrete fusion witness: `a^conjugator = b`, with `b` violating the
/// closure or control property under test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionWitness {
    pub a: Permutation,
    pub b: Permutation,
    pub conjugator: Permutation,
}

impl FusionWitness {
    /// Replays the witness by direct multiplication.
    pub fn validates(&self) -> bool {
        self.a.conjugated_by(&self.conjugator) == self.b
    }
}

/// Serializable form of a witness (cycle notation).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessSummary {
    pub a: String,
    pub b: String,
    pub conjugator: String,
}

impl From<&FusionWitness> for WitnessSummary {
    fn from(w: &FusionWitness) -> Self {
        WitnessSummary {
            a: w.a.to_string(),
            b: w.b.to_string(),
            conjugator: w.conjugator.to_string(),
        }
    }
}

/// Tests whether `A` is strongly closed in `S` with respect to `G`.
///
/// On failure returns a witness `b ∈ (a^G ∩ S) \ A`.
pub fn is_strongly_closed(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    a: &GeneratedGroup,
    caps: &Caps,
) -> Result<std::result::Result<(), FusionWitness>> {
    if !s.contains_subgroup(a) {
        return Err(Error::NotSubgroup("A".into(), "S".into()));
    }
    let census_caps = relax_for_subgroup(caps, a)?;
    let mut processed: HashSet<Permutation> = HashSet::new();
    for x in a.elements(&census_caps)? {
        if processed.contains(&x) {
            continue;
        }
        let class = g.class_of(&x, caps)?;
        for (k, member) in class.members.iter().enumerate() {
            if s.contains(member) {
                if !a.contains(member) {
                    return Ok(Err(FusionWitness {
                        a: x.clone(),
                        b: member.clone(),
                        conjugator: class.conjugators[k].clone(),
                    }));
                }
                processed.insert(member.clone());
            }
        }
    }
    Ok(Ok(()))
}

/// Element enumeration inside a p-subgroup is bounded by the p-group cap.
fn relax_for_subgroup(caps: &Caps, sub: &GeneratedGroup) -> Result<Caps> {
    match sub.order_u64() {
        Some(n) if n <= caps.max_pgroup.max(caps.max_elements) => Ok(Caps {
            max_elements: caps.max_pgroup.max(caps.max_elements),
            ..*caps
        }),
        _ => Err(Error::cap(
            "p-subgroup enumeration",
            sub.order(),
            caps.max_pgroup,
            crate::caps::ENV_MAX_PGROUP,
        )),
    }
}

/// The smallest strongly closed subgroup of `S` containing `X`: the least
/// fixpoint of `A ↦ ⟨A ∪ (a^G ∩ S for a ∈ A)⟩`.
pub fn strong_closure(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    seed: &[Permutation],
    caps: &Caps,
) -> Result<GeneratedGroup> {
    for x in seed {
        if !s.contains(x) {
            return Err(Error::NotSubgroup("⟨X⟩".into(), "S".into()));
        }
    }
    let mut current = s.generated(seed)?;
    loop {
        let census_caps = relax_for_subgroup(caps, &current)?;
        let mut new_members: Vec<Permutation> = Vec::new();
        let mut processed: HashSet<Permutation> = HashSet::new();
        for x in current.elements(&census_caps)? {
            if processed.contains(&x) {
                continue;
            }
            let class = g.class_of(&x, caps)?;
            for member in &class.members {
                if s.contains(member) {
                    processed.insert(member.clone());
                    if !current.contains(member) {
                        new_members.push(member.clone());
                    }
                }
            }
        }
        if new_members.is_empty() {
            return Ok(current);
        }
        let mut gens = current.generators().to_vec();
        gens.extend(new_members);
        current = s.generated(&gens)?;
    }
}

/// `ω̄S`: the smallest strongly closed subgroup containing `Ω₁(S)`.
pub fn omega_bar(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<GeneratedGroup> {
    let census_caps = relax_for_subgroup(caps, s)?;
    let omega1_gens: Vec<Permutation> = s
        .elements(&census_caps)?
        .into_iter()
        .filter(|x| !x.is_identity() && x.order() == p)
        .collect();
    strong_closure(g, s, &omega1_gens, caps)
}

/// Minimal strongly closed subgroups: the inclusion-minimal members of
/// `{strong_closure(⟨z⟩)}` over one `z` per G-class of order-p elements
/// meeting `S`. Any nontrivial strongly closed subgroup contains an
/// order-p element, hence one of these closures, so the list is complete.
pub fn minimal_strongly_closed(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<Vec<GeneratedGroup>> {
    let census_caps = relax_for_subgroup(caps, s)?;
    let mut closures: Vec<GeneratedGroup> = Vec::new();
    let mut processed: HashSet<Permutation> = HashSet::new();
    for z in s.elements(&census_caps)? {
        if z.order() != p || processed.contains(&z) {
            continue;
        }
        // mark the whole class ∩ S as seen
        let class = g.class_of(&z, caps)?;
        for member in &class.members {
            if s.contains(member) {
                processed.insert(member.clone());
            }
        }
        let closure = strong_closure(g, s, &[z], caps)?;
        closures.push(closure);
    }
    // keep inclusion-minimal, deduplicated
    let mut minimal: Vec<GeneratedGroup> = Vec::new();
    for c in &closures {
        if closures
            .iter()
            .any(|d| d.order() < c.order() && c.contains_subgroup(d))
        {
            continue;
        }
        if !minimal.iter().any(|m| m.same_group_as(c)) {
            minimal.push(c.clone());
        }
    }
    Ok(minimal)
}

/// Enumerates all normal subgroups of `G` as joins of normal closures of
/// conjugacy classes (every normal subgroup is such a join).
pub fn normal_subgroups(g: &GeneratedGroup, caps: &Caps) -> Result<Vec<GeneratedGroup>> {
    let table = g.conjugacy(caps)?;
    let mut subgroups: Vec<GeneratedGroup> = vec![GeneratedGroup::trivial(g.degree())];
    let mut seeds: Vec<GeneratedGroup> = Vec::new();
    for rep in &table.representatives {
        if rep.is_identity() {
            continue;
        }
        let n = g.normal_closure(std::slice::from_ref(rep))?;
        if !subgroups.iter().any(|m| m.same_group_as(&n)) {
            subgroups.push(n.clone());
        }
        seeds.push(n);
    }
    // close under pairwise joins
    let mut k = 0;
    while k < subgroups.len() {
        let current = subgroups[k].clone();
        k += 1;
        for seed in &seeds {
            if current.contains_subgroup(seed) {
                continue;
            }
            let mut gens = current.generators().to_vec();
            gens.extend_from_slice(seed.generators());
            let join = g.generated(&gens)?;
            if !subgroups.iter().any(|m| m.same_group_as(&join)) {
                subgroups.push(join);
            }
        }
    }
    subgroups.sort_by(|x, y| x.order().cmp(y.order()));
    Ok(subgroups)
}

/// `O_(p′)(G)`: the largest normal subgroup of order prime to `p`,
/// computed as the join of all normal p′-subgroups.
pub fn o_p_prime(g: &GeneratedGroup, p: u64, caps: &Caps) -> Result<GeneratedGroup> {
    let normals = normal_subgroups(g, caps)?;
    let mut gens: Vec<Permutation> = Vec::new();
    for n in &normals {
        if padic_is_zero(n, p) {
            gens.extend_from_slice(n.generators());
        }
    }
    let join = g.generated(&gens)?;
    debug_assert!(padic_is_zero(&join, p), "join of normal p′-subgroups is p′");
    Ok(join)
}

fn padic_is_zero(n: &GeneratedGroup, p: u64) -> bool {
    use num_bigint::BigUint;
    !(n.order() % BigUint::from(p)).is_zero()
}

/// `𝒪_A(G)`: the unique largest normal subgroup `N` with `A ∩ N` a Sylow
/// p-subgroup of `N`. Computed over the enumerated normal subgroup lattice;
/// the defining join property is re-verified on the result.
pub fn script_o(
    g: &GeneratedGroup,
    a: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<GeneratedGroup> {
    let normals = normal_subgroups(g, caps)?;
    let mut qualifying: Vec<&GeneratedGroup> = Vec::new();
    for n in &normals {
        if a_meets_as_sylow(a, n, p, caps)? {
            qualifying.push(n);
        }
    }
    let mut gens: Vec<Permutation> = Vec::new();
    for n in &qualifying {
        gens.extend_from_slice(n.generators());
    }
    let join = g.generated(&gens)?;
    // the paper guarantees join-closedness; this check guards bugs, not math
    if !a_meets_as_sylow(a, &join, p, caps)? {
        return Err(Error::Verification(
            "join of qualifying normal subgroups failed the Sylow-intersection check".into(),
        ));
    }
    Ok(join)
}

/// `A ∩ N ∈ Syl_p(N)`, i.e. `|A ∩ N| = |N|_p`.
fn a_meets_as_sylow(
    a: &GeneratedGroup,
    n: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<bool> {
    let caps = relax_for_subgroup(caps, a)?;
    let meet = a.intersection(n, &caps)?;
    Ok(meet.order() == &p_part(n.order(), p))
}

/// Fusion-control checking modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FusionMode {
    /// Class intersections with S agree for G and H.
    Element,
    /// Element mode plus, per cyclic `P ≤ S` and realizable map, an
    /// explicit `h ∈ H` inducing the same conjugation map `P → S`.
    Cyclic,
    /// The same for every subgroup `P ≤ S` (subgroup-enumeration cap).
    Subset,
}

/// Does `H` control (strong) fusion in `S` with respect to `G`?
///
/// Requires `S ≤ H ≤ G`. On failure returns a witness: a pair fused in `G`
/// but not conjugate under `H` (element/cyclic modes), or a subgroup map
/// realized in `G` but by no element of `H` (subset mode).
pub fn fusion_control(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    h: &GeneratedGroup,
    mode: FusionMode,
    caps: &Caps,
) -> Result<std::result::Result<(), FusionWitness>> {
    if !h.contains_subgroup(s) {
        return Err(Error::NotSubgroup("S".into(), "H".into()));
    }
    if !g.contains_subgroup(h) {
        return Err(Error::NotSubgroup("H".into(), "G".into()));
    }
    let census_caps = relax_for_subgroup(caps, s)?;
    // element level: for one a per G-class meeting S, a^G ∩ S = a^H ∩ S
    let mut processed: HashSet<Permutation> = HashSet::new();
    for x in s.elements(&census_caps)? {
        if processed.contains(&x) {
            continue;
        }
        let class_g = g.class_of(&x, caps)?;
        let class_h = h.class_of(&x, caps)?;
        for (k, member) in class_g.members.iter().enumerate() {
            if s.contains(member) {
                processed.insert(member.clone());
                if !class_h.contains(member) {
                    return Ok(Err(FusionWitness {
                        a: x.clone(),
                        b: member.clone(),
                        conjugator: class_g.conjugators[k].clone(),
                    }));
                }
            }
        }
    }
    match mode {
        FusionMode::Element => Ok(Ok(())),
        FusionMode::Cyclic => cyclic_mode_check(g, s, h, caps),
        FusionMode::Subset => subset_mode_check(g, s, h, caps),
    }
}

/// For each cyclic `P = ⟨a⟩ ≤ S` and each `b ∈ a^G ∩ S`, exhibits `h ∈ H`
/// with `a^h = b`; then `g = c·h` with `c = g·h⁻¹ ∈ C_G(P)` realizes the
/// factorization through the centralizer.
fn cyclic_mode_check(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    h: &GeneratedGroup,
    caps: &Caps,
) -> Result<std::result::Result<(), FusionWitness>> {
    let census_caps = relax_for_subgroup(caps, s)?;
    let mut seen_cyclic: HashSet<Permutation> = HashSet::new();
    for a in s.elements(&census_caps)? {
        if a.is_identity() || seen_cyclic.contains(&a) {
            continue;
        }
        // one generator per cyclic subgroup: mark the generator set of ⟨a⟩
        let ord = a.order();
        for k in 1..ord {
            if num_integer::gcd(k, ord) == 1 {
                seen_cyclic.insert(a.pow(k));
            }
        }
        let class_g = g.class_of(&a, caps)?;
        let class_h = h.class_of(&a, caps)?;
        for member in &class_g.members {
            if !s.contains(member) {
                continue;
            }
            // the induced map ⟨a⟩ → S is determined by a ↦ member
            match class_h.witness_for(member) {
                Some(hw) => {
                    debug_assert_eq!(&a.conjugated_by(hw), member);
                }
                None => {
                    let gw = class_g.witness_for(member).expect("member of class_g");
                    return Ok(Err(FusionWitness {
                        a: a.clone(),
                        b: member.clone(),
                        conjugator: gw.clone(),
                    }));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Full strong-fusion check: every conjugation map `P → S` (P ≤ S, induced
/// by some `g ∈ G`) is induced by some `h ∈ H`.
fn subset_mode_check(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    h: &GeneratedGroup,
    caps: &Caps,
) -> Result<std::result::Result<(), FusionWitness>> {
    let subgroups = all_subgroups(s, caps)?;
    let g_elements = g.elements(caps)?;
    for p_sub in &subgroups {
        if p_sub.is_trivial() {
            continue;
        }
        let p_elements = p_sub.elements(caps)?;
        // collect the conjugation maps realized in G and in H, keyed by the
        // image tuple of P's element list
        let mut maps_g: HashSet<Vec<Permutation>> = HashSet::new();
        let mut maps_h: HashSet<Vec<Permutation>> = HashSet::new();
        let mut witness_for_map: Vec<(Vec<Permutation>, Permutation)> = Vec::new();
        for conj in &g_elements {
            let images: Option<Vec<Permutation>> = p_elements
                .iter()
                .map(|x| {
                    let y = x.conjugated_by(conj);
                    s.contains(&y).then_some(y)
                })
                .collect();
            if let Some(images) = images {
                if h.contains(conj) {
                    maps_h.insert(images.clone());
                } else if maps_g.insert(images.clone()) {
                    witness_for_map.push((images, conj.clone()));
                }
            }
        }
        for (images, conj) in &witness_for_map {
            if !maps_h.contains(images) {
                let a = p_elements
                    .iter()
                    .find(|x| !x.is_identity())
                    .cloned()
                    .unwrap_or_else(|| s.identity());
                return Ok(Err(FusionWitness {
                    b: a.conjugated_by(conj),
                    a,
                    conjugator: conj.clone(),
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// Enumerates every subgroup of the p-group `s` by closing the trivial
/// subgroup under one-element extensions. Capped at `|S| ≤ 81` by default
/// (the subgroup-enumeration cap is the square root of the p-group cap).
pub fn all_subgroups(s: &GeneratedGroup, caps: &Caps) -> Result<Vec<GeneratedGroup>> {
    let cap = subgroup_enumeration_cap(caps);
    match s.order_u64() {
        Some(n) if n <= cap => {}
        _ => {
            return Err(Error::cap(
                "p-group for subgroup enumeration",
                s.order(),
                cap,
                crate::caps::ENV_MAX_PGROUP,
            ))
        }
    }
    let census_caps = relax_for_subgroup(caps, s)?;
    let elements = s.elements(&census_caps)?;
    let key_of = |g: &GeneratedGroup| -> Vec<Permutation> {
        let mut elems: Vec<Permutation> = g
            .elements(&census_caps)
            .expect("subgroup of a capped p-group")
            .into_iter()
            .collect();
        elems.sort();
        elems
    };
    let mut subgroups: Vec<GeneratedGroup> = vec![GeneratedGroup::trivial(s.degree())];
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    seen.insert(key_of(&subgroups[0]));
    let mut k = 0;
    while k < subgroups.len() {
        let current = subgroups[k].clone();
        k += 1;
        for x in &elements {
            if current.contains(x) {
                continue;
            }
            let mut gens = current.generators().to_vec();
            gens.push(x.clone());
            let bigger = s.generated(&gens)?;
            if seen.insert(key_of(&bigger)) {
                subgroups.push(bigger);
            }
        }
    }
    subgroups.sort_by(|x, y| x.order().cmp(y.order()));
    Ok(subgroups)
}

/// Subgroup enumeration is capped at 81 under the default p-group cap,
/// scaling with `max_pgroup` when the user raises it.
fn subgroup_enumeration_cap(caps: &Caps) -> u64 {
    (caps.max_pgroup as f64).sqrt().floor() as u64
}

/// Brute-force list of all strongly closed subgroups of `S`: every
/// subgroup is tested with [`is_strongly_closed`].
pub fn all_strongly_closed_brute(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    caps: &Caps,
) -> Result<Vec<GeneratedGroup>> {
    let mut list = Vec::new();
    for sub in all_subgroups(s, caps)? {
        if is_strongly_closed(g, s, &sub, caps)?.is_ok() {
            list.push(sub);
        }
    }
    Ok(list)
}

/// Per-analysis record of one strongly closed subgroup.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StronglyClosedEntry {
    pub order: String,
    pub generators: Vec<String>,
    /// `A ≤ 𝒪_A(G)`, i.e. A is Sylow in its normal closure.
    pub sylow_in_normal_closure: bool,
    pub script_o_order: String,
}

/// Serializable closure report for one `(G, p)` analysis.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClosureReport {
    pub p: u64,
    pub sylow_order: String,
    pub omega_bar_order: String,
    pub omega_bar_equals_sylow: bool,
    /// All strongly closed subgroups when `|S|` is under the subgroup
    /// enumeration cap, otherwise the computable sublist (see `complete`).
    pub strongly_closed: Vec<StronglyClosedEntry>,
    pub complete: bool,
    pub minimal_orders: Vec<String>,
    pub fusion_control_sylow_normalizer: bool,
    pub fusion_witness: Option<WitnessSummary>,
}
