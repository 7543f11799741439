//! Sylow subgroups and p-group profiles.
//!
//! Construction is by normalizer ascent: seed with the p-part of the first
//! p-element in enumeration order, then repeatedly find a p-element of
//! `N_G(P)/P` and lift it, until the full p-part of `|G|` is reached. Runs
//! are reproducible because the seed and every lift are chosen
//! deterministically.
//!
//! Profiles are census-based: the p-group is enumerated (cap
//! `SC_MAX_PGROUP`) and its center, Ω₁, Frattini subgroup, exponent and
//! abelian invariants are read off the element list.

use crate::caps::Caps;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::perm::Permutation;
use crate::Result;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Multiplicity of `p` in `n`.
pub fn padic_valuation(n: &BigUint, p: u64) -> u32 {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// `p`-part of `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    BigUint::from(p).pow(padic_valuation(n, p))
}

/// The p-part of a single element: `g^m` where `m` is the p′-part of its
/// order; the result has order `p^νₚ(ord g)`.
pub fn element_p_part(g: &Permutation, p: u64) -> Permutation {
    let mut m = g.order();
    while m % p == 0 {
        m /= p;
    }
    g.pow(m)
}

/// Constructs a Sylow p-subgroup of `G`.
///
/// Returns the trivial group when `p ∤ |G|`.
pub fn sylow_subgroup(g: &GeneratedGroup, p: u64, caps: &Caps) -> Result<GeneratedGroup> {
    let target = p_part(g.order(), p);
    if target.is_one() {
        return Ok(GeneratedGroup::trivial(g.degree()));
    }
    // deterministic seed: p-part of the first element of order divisible by p
    let seed = g
        .elements(caps)?
        .into_iter()
        .find(|x| x.order() % p == 0)
        .map(|x| element_p_part(&x, p))
        .expect("p divides |G|, so a p-element exists");
    let mut current = g.generated(&[seed])?;
    while current.order() < &target {
        let normalizer = g.normalizer(&current, caps)?;
        // P < S Sylow forces p | |N_G(P) : P|: lift a p-element of N/P
        let quotient = normalizer.coset_action(&current, caps)?;
        let lift = quotient_p_element(&normalizer, &quotient, p, caps)?;
        let mut gens = current.generators().to_vec();
        gens.push(lift);
        let next = g.generated(&gens)?;
        debug_assert!(next.order() > current.order());
        current = next;
    }
    debug_assert_eq!(&p_part(current.order(), p), current.order());
    Ok(current)
}

/// Finds a p-element of `N` with nontrivial image in `N/P`.
fn quotient_p_element(
    normalizer: &GeneratedGroup,
    quotient: &crate::group::CosetActionImage,
    p: u64,
    caps: &Caps,
) -> Result<Permutation> {
    for h in normalizer.elements(caps)? {
        if h.order() % p != 0 {
            continue;
        }
        let candidate = element_p_part(&h, p);
        if !quotient.action.map(&candidate).is_identity() {
            return Ok(candidate);
        }
    }
    Err(Error::Verification(
        "normalizer ascent found no p-element above P".into(),
    ))
}

/// Census-based profile of a finite p-group.
#[derive(Debug)]
pub struct PGroupProfile {
    pub p: u64,
    pub order: BigUint,
    pub group: GeneratedGroup,
    pub center: GeneratedGroup,
    /// Subgroup generated by the elements of order dividing p.
    pub omega1: GeneratedGroup,
    /// Frattini subgroup `Φ(S) = S′·Sᵖ`.
    pub frattini: GeneratedGroup,
    pub derived: GeneratedGroup,
    pub exponent: u64,
    pub abelian: bool,
    /// Invariant factors (prime powers, descending) when abelian.
    pub abelian_invariants: Option<Vec<u64>>,
    /// `(rank, exponent)` when abelian with all invariants equal.
    pub homocyclic: Option<(usize, u64)>,
    /// `Z(S) = Φ(S) = S′ ≠ 1` with S non-abelian: special p-group.
    pub special: bool,
}

/// Serializable summary of a profile.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PGroupSummary {
    pub p: u64,
    pub order: String,
    pub center_order: String,
    pub omega1_order: String,
    pub frattini_order: String,
    pub exponent: u64,
    pub abelian: bool,
    pub abelian_invariants: Option<Vec<u64>>,
    pub homocyclic: Option<(usize, u64)>,
    pub special: bool,
}

impl PGroupProfile {
    pub fn summary(&self) -> PGroupSummary {
        PGroupSummary {
            p: self.p,
            order: self.order.to_string(),
            center_order: self.center.order().to_string(),
            omega1_order: self.omega1.order().to_string(),
            frattini_order: self.frattini.order().to_string(),
            exponent: self.exponent,
            abelian: self.abelian,
            abelian_invariants: self.abelian_invariants.clone(),
            homocyclic: self.homocyclic,
            special: self.special,
        }
    }
}

/// Computes the profile of a p-group `s` by element census.
pub fn p_group_profile(s: &GeneratedGroup, p: u64, caps: &Caps) -> Result<PGroupProfile> {
    let order = s.order().clone();
    if order != p_part(&order, p) {
        return Err(Error::Input(format!(
            "group of order {order} is not a {p}-group"
        )));
    }
    match order.to_u64() {
        Some(n) if n <= caps.max_pgroup => {}
        _ => {
            return Err(Error::cap(
                "p-group for census profile",
                &order,
                caps.max_pgroup,
                crate::caps::ENV_MAX_PGROUP,
            ))
        }
    }
    let census_caps = Caps {
        max_elements: caps.max_pgroup.max(caps.max_elements),
        ..*caps
    };
    let elements = s.elements(&census_caps)?;
    let center = s.center(&census_caps)?;
    let omega1_gens: Vec<Permutation> = elements
        .iter()
        .filter(|x| !x.is_identity() && x.order() == p)
        .cloned()
        .collect();
    let omega1 = s.generated(&omega1_gens)?;
    let derived = s.derived_subgroup()?;
    // Φ(S) = S′·Sᵖ for p-groups
    let mut frattini_gens: Vec<Permutation> = derived.generators().to_vec();
    frattini_gens.extend(elements.iter().map(|x| x.pow(p)).filter(|x| !x.is_identity()));
    let frattini = s.generated(&frattini_gens)?;
    let exponent = elements.iter().map(|x| x.order()).max().unwrap_or(1);
    let abelian = s
        .generators()
        .iter()
        .enumerate()
        .all(|(i, a)| s.generators()[i + 1..].iter().all(|b| a.then(b) == b.then(a)));
    let abelian_invariants = abelian.then(|| abelian_invariants_from_census(&elements, p));
    let homocyclic = abelian_invariants.as_ref().and_then(|inv| {
        let first = *inv.first()?;
        inv.iter().all(|&e| e == first).then_some((inv.len(), first))
    });
    let special = !abelian
        && !center.is_trivial()
        && center.same_group_as(&frattini)
        && center.same_group_as(&derived);
    Ok(PGroupProfile {
        p,
        order,
        group: s.clone(),
        center,
        omega1,
        frattini,
        derived,
        exponent,
        abelian,
        abelian_invariants,
        homocyclic,
        special,
    })
}

/// Invariant factors of an abelian p-group from its element-order census.
///
/// With `c_k = log_p #{x : x^(p^k) = 1}`, the number of invariant factors
/// of exponent ≥ p^k is `c_k − c_(k−1)`; the factor multiset follows by
/// differencing.
fn abelian_invariants_from_census(elements: &[Permutation], p: u64) -> Vec<u64> {
    let log_p = |n: u64| -> u32 {
        let mut k = 0;
        let mut m = 1u64;
        while m < n {
            m *= p;
            k += 1;
        }
        k
    };
    let max_k = elements.iter().map(|x| log_p(x.order())).max().unwrap_or(0) as usize;
    // counts[k] = #{x : ord(x) divides p^k}
    let mut counts = vec![0u64; max_k + 1];
    for x in elements {
        let k = log_p(x.order()) as usize;
        for c in counts.iter_mut().skip(k) {
            *c += 1;
        }
    }
    let at_least: Vec<u32> = (1..=max_k)
        .map(|k| log_p(counts[k]) - log_p(counts[k - 1]))
        .collect();
    let mut factors = Vec::new();
    for k in 1..=max_k {
        let this = at_least[k - 1];
        let next = if k < max_k { at_least[k] } else { 0 };
        for _ in 0..this.saturating_sub(next) {
            factors.push(p.pow(k as u32));
        }
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    factors
}

/// Homocyclic invariants: present iff the group is abelian with all
/// invariant factors equal.
pub fn homocyclic_invariants(
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<Option<(usize, u64)>> {
    Ok(p_group_profile(s, p, caps)?.homocyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{parse_spec, permutation_image, MatrixAction};
    use crate::perm::parse_cycles;

    fn caps() -> Caps {
        Caps::default()
    }

    fn group(degree: usize, gens: &[&str]) -> GeneratedGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect();
        GeneratedGroup::from_generators(gens, degree).unwrap()
    }

    #[test]
    fn sylow2_of_s4_is_dihedral_8() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let s = sylow_subgroup(&s4, 2, &caps()).unwrap();
        assert_eq!(s.order_u64(), Some(8));
        let profile = p_group_profile(&s, 2, &caps()).unwrap();
        assert!(!profile.abelian);
        assert_eq!(profile.exponent, 4);
        assert_eq!(profile.center.order_u64(), Some(2));
    }

    #[test]
    fn sylow3_of_a9_has_order_81() {
        let a9 = group(9, &["(0 1 2)", "(0 1 2 3 4 5 6 7 8)"]);
        assert_eq!(a9.order_u64(), Some(181440));
        let s = sylow_subgroup(&a9, 3, &caps()).unwrap();
        assert_eq!(s.order_u64(), Some(81));
    }

    #[test]
    fn sylow3_of_psl2_19_is_cyclic_9() {
        let (spec, action) = parse_spec("PSL(2,19)").unwrap();
        let r = permutation_image(&spec, action, &caps()).unwrap();
        let s = sylow_subgroup(&r.group, 3, &caps()).unwrap();
        assert_eq!(s.order_u64(), Some(9));
        let profile = p_group_profile(&s, 3, &caps()).unwrap();
        assert!(profile.abelian);
        assert_eq!(profile.homocyclic, Some((1, 9))); // cyclic of order 9
    }

    #[test]
    fn sylow_for_p_not_dividing_order_is_trivial() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let s = sylow_subgroup(&s4, 5, &caps()).unwrap();
        assert!(s.is_trivial());
    }

    #[test]
    fn u3_3_sylow3_is_special_of_type_3_1_2() {
        let (spec, action) = parse_spec("SU(3,3):isotropic").unwrap();
        let r = permutation_image(&spec, action, &caps()).unwrap();
        let s = sylow_subgroup(&r.group, 3, &caps()).unwrap();
        assert_eq!(s.order_u64(), Some(27));
        let profile = p_group_profile(&s, 3, &caps()).unwrap();
        assert!(profile.special, "Z(S) = Φ(S) = S′");
        assert_eq!(profile.center.order_u64(), Some(3));
        assert_eq!(profile.derived.order_u64(), Some(3));
    }

    #[test]
    fn homocyclic_detection() {
        // Z5 × Z5 on 10 points
        let g = group(10, &["(0 1 2 3 4)", "(5 6 7 8 9)"]);
        let profile = p_group_profile(&g, 5, &caps()).unwrap();
        assert_eq!(profile.homocyclic, Some((2, 5)));
        assert_eq!(profile.abelian_invariants, Some(vec![5, 5]));
        // Z9 × Z3: abelian but not homocyclic
        let g = group(12, &["(0 1 2 3 4 5 6 7 8)", "(9 10 11)"]);
        let profile = p_group_profile(&g, 3, &caps()).unwrap();
        assert!(profile.abelian);
        assert_eq!(profile.abelian_invariants, Some(vec![9, 3]));
        assert_eq!(profile.homocyclic, None);
        // Z25 × Z25 on 50 points: rank 2, exponent 25
        let g = group(
            50,
            &[
                "(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 24)",
                "(25 26 27 28 29 30 31 32 33 34 35 36 37 38 39 40 41 42 43 44 45 46 47 48 49)",
            ],
        );
        let profile = p_group_profile(&g, 5, &caps()).unwrap();
        assert_eq!(profile.homocyclic, Some((2, 25)));
    }

    #[test]
    fn sylow3_of_sl3_4_not_homocyclic() {
        let (spec, _) = parse_spec("SL(3,4)").unwrap();
        let r = permutation_image(&spec, MatrixAction::NonzeroVectors, &caps()).unwrap();
        let s = sylow_subgroup(&r.group, 3, &caps()).unwrap();
        assert_eq!(s.order_u64(), Some(27));
        let profile = p_group_profile(&s, 3, &caps()).unwrap();
        assert!(!profile.abelian);
        assert_eq!(profile.homocyclic, None);
    }

    #[test]
    fn sylow_conjugacy_for_small_groups() {
        // an independently placed Sylow subgroup is conjugate to the first
        let a6 = group(6, &["(0 1 2)", "(1 2 3 4 5)"]);
        let s1 = sylow_subgroup(&a6, 3, &caps()).unwrap();
        let g = parse_cycles("(0 5)(1 4)", 6).unwrap();
        let s2 = GeneratedGroup::conjugate_subgroup(&s1, &g).unwrap();
        let conjugator = a6.elements(&caps()).unwrap().into_iter().find(|c| {
            s1.generators()
                .iter()
                .all(|x| s2.contains(&x.conjugated_by(c)))
        });
        assert!(conjugator.is_some());
    }

    #[test]
    fn sylow_normalizer_index_is_one_mod_p() {
        for (degree, gens, p) in [
            (4usize, vec!["(0 1 2 3)", "(0 1)"], 2u64),
            (5, vec!["(0 1 2 3 4)", "(0 1)"], 5),
            (6, vec!["(0 1 2)", "(1 2 3 4 5)"], 3),
        ] {
            let g = group(degree, &gens);
            let s = sylow_subgroup(&g, p, &caps()).unwrap();
            let n = g.normalizer(&s, &caps()).unwrap();
            let index = g.order() / n.order();
            assert_eq!((index % BigUint::from(p)).to_u64(), Some(1), "index ≡ 1 mod p");
        }
    }

    #[test]
    fn profile_cap_refusal() {
        let g = group(10, &["(0 1 2 3 4)", "(5 6 7 8 9)"]);
        let tight = Caps::default().with_max_pgroup(10);
        assert!(p_group_profile(&g, 5, &tight).unwrap_err().is_refusal());
    }
}
