//! Finitely generated permutation groups with exact order and membership.
//!
//! [`GeneratedGroup`] is immutable after construction: the stabilizer chain
//! is built eagerly, so order and membership queries never mutate shared
//! state and values can be shared freely across threads.
//!
//! Normalizers, centralizers and centers are computed by brute element
//! scans under the [`Caps`] element cap — backtrack search is deliberately
//! out of scope at desk scale.

use crate::bsgs::StabChain;
use crate::caps::Caps;
use crate::error::Error;
use crate::perm::Permutation;
use crate::Result;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::collections::HashMap;

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
}

impl GeneratedGroup {
    /// Builds the group generated by `gens` on `degree` points.
    ///
    /// An empty generator list yields the trivial group.
    pub fn from_generators(gens: Vec<Permutation>, degree: usize) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let chain = StabChain::new(degree, &gens);
        let order = chain.order();
        Ok(GeneratedGroup {
            degree,
            gens,
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup::from_generators(Vec::new(), degree).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as `u64` when it fits (it always does under the element cap).
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == BigUint::from(1u32)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_subgroup(&self, other: &GeneratedGroup) -> bool {
        other.degree == self.degree && other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups of the symmetric group.
    pub fn same_group_as(&self, other: &GeneratedGroup) -> bool {
        self.order == other.order && self.contains_subgroup(other)
    }

    fn ensure_under_cap(&self, caps: &Caps, what: &str) -> Result<u64> {
        match self.order_u64() {
            Some(n) if n <= caps.max_elements => Ok(n),
            _ => Err(Error::cap(
                what,
                &self.order,
                caps.max_elements,
                crate::caps::ENV_MAX_ELEMENTS,
            )),
        }
    }

    /// Enumerates all elements, refusing when `|G|` exceeds the element cap.
    /// Each element is yielded exactly once, in a deterministic order.
    pub fn elements(&self, caps: &Caps) -> Result<Vec<Permutation>> {
        self.ensure_under_cap(caps, "group for element enumeration")?;
        Ok(self.chain.elements().collect())
    }

    /// The full conjugation orbit of `g` under the group, with a conjugating
    /// element recorded per member (`g^(witness) = member`).
    pub fn class_of(&self, g: &Permutation, caps: &Caps) -> Result<ConjClass> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(g.degree(), self.degree));
        }
        let mut members = vec![g.clone()];
        let mut conjugators = vec![self.identity()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(g.clone(), 0);
        let mut k = 0;
        while k < members.len() {
            let current = members[k].clone();
            let word = conjugators[k].clone();
            k += 1;
            for s in &self.gens {
                let next = current.conjugated_by(s);
                if !index.contains_key(&next) {
                    if members.len() as u64 >= caps.max_elements {
                        return Err(Error::cap(
                            format!("conjugacy class of {g}"),
                            format!("> {}", members.len()),
                            caps.max_elements,
                            crate::caps::ENV_MAX_ELEMENTS,
                        ));
                    }
                    index.insert(next.clone(), members.len());
                    members.push(next);
                    conjugators.push(word.then(s));
                }
            }
        }
        Ok(ConjClass {
            members,
            conjugators,
            index,
        })
    }

    /// Full conjugacy class table; requires `|G|` under the element cap.
    pub fn conjugacy(&self, caps: &Caps) -> Result<ConjugacyClassTable> {
        self.ensure_under_cap(caps, "group for conjugacy class table")?;
        let mut reps: Vec<Permutation> = Vec::new();
        let mut sizes: Vec<u64> = Vec::new();
        let mut class_index: HashMap<Permutation, usize> = HashMap::new();
        for g in self.chain.elements() {
            if class_index.contains_key(&g) {
                continue;
            }
            let class = self.class_of(&g, caps)?;
            let id = reps.len();
            sizes.push(class.members.len() as u64);
            for member in &class.members {
                class_index.insert(member.clone(), id);
            }
            reps.push(g);
        }
        // class equation: sizes sum to |G| and each divides it
        debug_assert_eq!(
            BigUint::from(sizes.iter().sum::<u64>()),
            self.order,
            "class sizes sum to the group order"
        );
        debug_assert!(sizes
            .iter()
            .all(|&s| (&self.order % BigUint::from(s)).to_u64() == Some(0)));
        Ok(ConjugacyClassTable {
            representatives: reps,
            sizes,
            class_index,
        })
    }

    /// Centralizer `{h ∈ G : hg = gh}` by element scan.
    pub fn centralizer(&self, g: &Permutation, caps: &Caps) -> Result<GeneratedGroup> {
        self.ensure_under_cap(caps, "group for centralizer scan")?;
        let mut sub = SubgroupCollector::new(self.degree);
        for h in self.chain.elements() {
            if h.then(g) == g.then(&h) {
                sub.insert(h);
            }
        }
        Ok(sub.into_group())
    }

    /// Center `Z(G)`: elements commuting with every generator.
    pub fn center(&self, caps: &Caps) -> Result<GeneratedGroup> {
        self.ensure_under_cap(caps, "group for center scan")?;
        let mut sub = SubgroupCollector::new(self.degree);
        for h in self.chain.elements() {
            if self.gens.iter().all(|s| h.then(s) == s.then(&h)) {
                sub.insert(h);
            }
        }
        Ok(sub.into_group())
    }

    /// Normalizer `N_G(H) = {g ∈ G : H^g = H}` by element scan.
    pub fn normalizer(&self, h: &GeneratedGroup, caps: &Caps) -> Result<GeneratedGroup> {
        if h.degree != self.degree {
            return Err(Error::DegreeMismatch(h.degree, self.degree));
        }
        self.ensure_under_cap(caps, "group for normalizer scan")?;
        let mut sub = SubgroupCollector::new(self.degree);
        for g in self.chain.elements() {
            if h.gens.iter().all(|x| h.contains(&x.conjugated_by(&g))) {
                sub.insert(g);
            }
        }
        Ok(sub.into_group())
    }

    /// Subgroup generated by `elements` inside this group's symmetric group.
    pub fn generated(&self, elements: &[Permutation]) -> Result<GeneratedGroup> {
        GeneratedGroup::from_generators(elements.to_vec(), self.degree)
    }

    /// Intersection `A ∩ B`, by membership-filtering the smaller operand's
    /// elements (the element cap applies to that operand).
    pub fn intersection(&self, other: &GeneratedGroup, caps: &Caps) -> Result<GeneratedGroup> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch(other.degree, self.degree));
        }
        let (small, big) = if self.order <= other.order {
            (self, other)
        } else {
            (other, self)
        };
        small.ensure_under_cap(caps, "smaller operand of intersection")?;
        let mut sub = SubgroupCollector::new(self.degree);
        for g in small.chain.elements() {
            if big.contains(&g) {
                sub.insert(g);
            }
        }
        Ok(sub.into_group())
    }

    /// Normal closure `⟨X^G⟩`.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<GeneratedGroup> {
        for x in seed {
            if x.degree() != self.degree {
                return Err(Error::DegreeMismatch(x.degree(), self.degree));
            }
        }
        let mut closure = SubgroupCollector::new(self.degree);
        let mut queue: Vec<Permutation> = Vec::new();
        for x in seed {
            if closure.insert(x.clone()) {
                queue.push(x.clone());
            }
        }
        while let Some(x) = queue.pop() {
            for s in &self.gens {
                let conj = x.conjugated_by(s);
                if closure.insert(conj.clone()) {
                    queue.push(conj);
                }
            }
        }
        Ok(closure.into_group())
    }

    /// Derived subgroup `[G, G]`: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> Result<GeneratedGroup> {
        let mut commutators = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                // [a,b] = a⁻¹ b⁻¹ a b
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators)
    }

    /// True when `n` is a normal subgroup of `self`.
    pub fn is_normal(&self, n: &GeneratedGroup) -> bool {
        self.contains_subgroup(n)
            && self
                .gens
                .iter()
                .all(|g| n.gens.iter().all(|x| n.contains(&x.conjugated_by(g))))
    }

    /// Conjugate subgroup `H^g = ⟨gens(H)^g⟩`.
    pub fn conjugate_subgroup(h: &GeneratedGroup, g: &Permutation) -> Result<GeneratedGroup> {
        let gens = h.gens.iter().map(|x| x.conjugated_by(g)).collect();
        GeneratedGroup::from_generators(gens, h.degree)
    }

    /// Action on the right cosets of a **normal** subgroup `n`, returning the
    /// image group on `|G : N|` points together with the epimorphism.
    ///
    /// The kernel of the action equals `n` exactly when `n` is normal, which
    /// is checked up front.
    pub fn coset_action(&self, n: &GeneratedGroup, caps: &Caps) -> Result<CosetActionImage> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let index = (&self.order / &n.order)
            .to_usize()
            .filter(|&i| i <= caps.max_degree)
            .ok_or_else(|| {
                Error::cap(
                    "coset space",
                    &self.order / &n.order,
                    caps.max_degree,
                    crate::caps::ENV_MAX_DEGREE,
                )
            })?;
        // Cosets are identified by their least member, minimized over the
        // enumerated kernel; |N|·|G:N| = |G| keeps this within desk scale.
        let kernel_elements = n.elements(caps)?;
        let canon = |g: &Permutation| -> Permutation {
            kernel_elements
                .iter()
                .map(|k| k.then(g))
                .min()
                .expect("kernel is nonempty")
        };
        let mut reps: Vec<Permutation> = Vec::new();
        let mut rep_index: HashMap<Permutation, usize> = HashMap::new();
        let id_rep = canon(&self.identity());
        rep_index.insert(id_rep.clone(), 0);
        reps.push(id_rep);
        let mut k = 0;
        while k < reps.len() {
            let rep = reps[k].clone();
            k += 1;
            for s in &self.gens {
                let next = canon(&rep.then(s));
                if !rep_index.contains_key(&next) {
                    rep_index.insert(next.clone(), reps.len());
                    reps.push(next);
                }
            }
        }
        debug_assert_eq!(reps.len(), index);
        let action = CosetAction {
            kernel_elements,
            reps,
            rep_index,
        };
        let image_gens: Vec<Permutation> = self.gens.iter().map(|s| action.map(s)).collect();
        let image = GeneratedGroup::from_generators(image_gens, index)?;
        Ok(CosetActionImage { action, image })
    }
}

/// A conjugation orbit with per-member conjugating witnesses.
pub struct ConjClass {
    /// Orbit members; `members[0]` is the seed element.
    pub members: Vec<Permutation>,
    /// `seed^(conjugators[k]) = members[k]`, replayable by multiplication.
    pub conjugators: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl ConjClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Conjugator for a member, when present.
    pub fn witness_for(&self, member: &Permutation) -> Option<&Permutation> {
        self.index.get(member).map(|&k| &self.conjugators[k])
    }
}

/// Conjugacy classes of a fully enumerated group.
pub struct ConjugacyClassTable {
    pub representatives: Vec<Permutation>,
    pub sizes: Vec<u64>,
    class_index: HashMap<Permutation, usize>,
}

impl ConjugacyClassTable {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    /// Index of the class containing `g`, when `g` is in the group.
    pub fn class_of_element(&self, g: &Permutation) -> Option<usize> {
        self.class_index.get(g).copied()
    }
}

/// The coset action `G → Sym(G : N)` for a normal subgroup `N`.
pub struct CosetAction {
    kernel_elements: Vec<Permutation>,
    reps: Vec<Permutation>,
    rep_index: HashMap<Permutation, usize>,
}

/// Coset action together with its image group.
pub struct CosetActionImage {
    pub action: CosetAction,
    pub image: GeneratedGroup,
}

impl CosetAction {
    /// Image permutation of `g` on coset points.
    pub fn map(&self, g: &Permutation) -> Permutation {
        let images: Vec<usize> = self
            .reps
            .iter()
            .map(|rep| {
                let product = rep.then(g);
                let target = self
                    .kernel_elements
                    .iter()
                    .map(|k| k.then(&product))
                    .min()
                    .expect("kernel is nonempty");
                self.rep_index[&target]
            })
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }
}

/// Incrementally collects elements into a subgroup, keeping only the
/// elements that actually enlarge the group as generators.
pub(crate) struct SubgroupCollector {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
}

impl SubgroupCollector {
    pub fn new(degree: usize) -> Self {
        SubgroupCollector {
            degree,
            gens: Vec::new(),
            chain: StabChain::new(degree, &[]),
        }
    }

    /// Returns true when `g` was new (and is now a recorded generator).
    pub fn insert(&mut self, g: Permutation) -> bool {
        if self.chain.contains(&g) {
            return false;
        }
        self.gens.push(g);
        self.chain = StabChain::new(self.degree, &self.gens);
        true
    }

    pub fn into_group(self) -> GeneratedGroup {
        let order = self.chain.order();
        GeneratedGroup {
            degree: self.degree,
            gens: self.gens,
            chain: self.chain,
            order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    pub(crate) fn group(degree: usize, gens: &[&str]) -> GeneratedGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect();
        GeneratedGroup::from_generators(gens, degree).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn s5_has_order_120() {
        let g = group(5, &["(0 1 2 3 4)", "(0 1)"]);
        assert_eq!(g.order_u64(), Some(120));
    }

    #[test]
    fn trivial_group_has_order_one() {
        let g = GeneratedGroup::trivial(3);
        assert_eq!(g.order_u64(), Some(1));
        assert_eq!(g.elements(&caps()).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_cap_refusal_names_sizes() {
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let tight = Caps::default().with_max_elements(10);
        let err = a4.elements(&tight).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("12") && msg.contains("10"), "got: {msg}");
    }

    #[test]
    fn s3_class_sizes() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let table = s3.conjugacy(&caps()).unwrap();
        let mut sizes = table.sizes.clone();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        let total: u64 = table.sizes.iter().sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn a6_three_cycle_class_size_40() {
        let a6 = group(6, &["(0 1 2)", "(1 2 3 4 5)"]);
        assert_eq!(a6.order_u64(), Some(360));
        let x = parse_cycles("(0 1 2)", 6).unwrap();
        let class = a6.class_of(&x, &caps()).unwrap();
        assert_eq!(class.len(), 40);
        // witnesses replay by multiplication
        for (k, member) in class.members.iter().enumerate() {
            assert_eq!(&x.conjugated_by(&class.conjugators[k]), member);
        }
    }

    #[test]
    fn class_of_identity_is_singleton() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let class = s4.class_of(&s4.identity(), &caps()).unwrap();
        assert_eq!(class.len(), 1);
    }

    #[test]
    fn center_of_s3_is_trivial() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let z = s3.center(&caps()).unwrap();
        assert!(z.is_trivial());
    }

    #[test]
    fn normalizer_of_sylow3_in_a4_is_sylow3() {
        // n_3(A4) = 4, so |N_G(P)| = 12/4 = 3.
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let p = group(4, &["(0 1 2)"]);
        let n = a4.normalizer(&p, &caps()).unwrap();
        assert_eq!(n.order_u64(), Some(3));
        assert!(n.same_group_as(&p));
    }

    #[test]
    fn centralizer_contains_generated_cyclic() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let g = parse_cycles("(0 1 2 3)", 4).unwrap();
        let c = s4.centralizer(&g, &caps()).unwrap();
        assert!(c.contains(&g));
        assert_eq!(c.order_u64(), Some(4)); // ⟨(0 1 2 3)⟩ is self-centralizing
    }

    #[test]
    fn normal_closure_of_double_transposition_in_a4() {
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let x = parse_cycles("(0 1)(2 3)", 4).unwrap();
        let v = a4.normal_closure(&[x]).unwrap();
        assert_eq!(v.order_u64(), Some(4)); // the Klein four-group
        assert!(a4.is_normal(&v));
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let d = s4.derived_subgroup().unwrap();
        assert_eq!(d.order_u64(), Some(12));
    }

    #[test]
    fn intersection_of_sylow2_s4_with_a4() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        // a Sylow 2-subgroup of S4: dihedral of order 8
        let d8 = group(4, &["(0 1 2 3)", "(0 2)"]);
        assert_eq!(d8.order_u64(), Some(8));
        let meet = d8.intersection(&a4, &caps()).unwrap();
        assert_eq!(meet.order_u64(), Some(4));
        assert!(s4.contains_subgroup(&meet));
    }

    #[test]
    fn coset_action_s4_mod_a4() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let ca = s4.coset_action(&a4, &caps()).unwrap();
        assert_eq!(ca.image.order_u64(), Some(2));
        // kernel of the action equals N: members map to the identity
        let x = parse_cycles("(0 1 2)", 4).unwrap();
        assert!(ca.action.map(&x).is_identity());
        let odd = parse_cycles("(0 1)", 4).unwrap();
        assert!(!ca.action.map(&odd).is_identity());
        // epimorphism: map respects products on a sample
        let a = parse_cycles("(0 1)", 4).unwrap();
        let b = parse_cycles("(1 2 3)", 4).unwrap();
        assert_eq!(
            ca.action.map(&a.then(&b)),
            ca.action.map(&a).then(&ca.action.map(&b))
        );
    }

    #[test]
    fn coset_action_by_trivial_subgroup_is_regular() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let t = GeneratedGroup::trivial(3);
        let ca = s3.coset_action(&t, &caps()).unwrap();
        assert_eq!(ca.action.coset_count(), 6);
        assert_eq!(ca.image.order_u64(), Some(6));
    }

    #[test]
    fn coset_action_a4_mod_klein_has_order_3() {
        let a4 = group(4, &["(0 1 2)", "(1 2 3)"]);
        let klein = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let ca = a4.coset_action(&klein, &caps()).unwrap();
        assert_eq!(ca.image.order_u64(), Some(3));
    }

    #[test]
    fn coset_action_requires_normality() {
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let s3 = group(4, &["(0 1 2)", "(0 1)"]);
        assert!(matches!(
            s4.coset_action(&s3, &caps()),
            Err(Error::NotNormal)
        ));
    }

    mod proptests {
        use super::*;
        use proptest::prelude::*;
        use std::collections::HashSet;

        /// Independent oracle: close a generator set under multiplication.
        fn naive_closure(gens: &[Permutation], degree: usize) -> HashSet<Permutation> {
            let mut set: HashSet<Permutation> = HashSet::new();
            set.insert(Permutation::identity(degree));
            let mut queue: Vec<Permutation> = vec![Permutation::identity(degree)];
            while let Some(g) = queue.pop() {
                for s in gens {
                    let next = g.then(s);
                    if set.insert(next.clone()) {
                        queue.push(next);
                    }
                }
            }
            set
        }

        fn perm_from_seed(seed: &[u8], degree: usize) -> Permutation {
            let mut images: Vec<usize> = (0..degree).collect();
            images.sort_by_key(|&i| (seed.get(i).copied().unwrap_or(0), i));
            Permutation::from_images(images).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            /// BSGS order and enumeration agree with brute multiplication
            /// closure for arbitrary small generator sets.
            #[test]
            fn prop_bsgs_order_matches_naive_closure(
                a in proptest::collection::vec(0u8..6, 6),
                b in proptest::collection::vec(0u8..6, 6),
            ) {
                let degree = 6;
                let gens = vec![perm_from_seed(&a, degree), perm_from_seed(&b, degree)];
                let group = GeneratedGroup::from_generators(gens.clone(), degree).unwrap();
                let oracle = naive_closure(&gens, degree);
                prop_assert_eq!(group.order_u64(), Some(oracle.len() as u64));
                let enumerated: HashSet<Permutation> =
                    group.elements(&Caps::default()).unwrap().into_iter().collect();
                prop_assert_eq!(enumerated, oracle);
            }

            /// Class equation on arbitrary small groups.
            #[test]
            fn prop_class_equation(
                a in proptest::collection::vec(0u8..5, 5),
                b in proptest::collection::vec(0u8..5, 5),
            ) {
                let degree = 5;
                let gens = vec![perm_from_seed(&a, degree), perm_from_seed(&b, degree)];
                let group = GeneratedGroup::from_generators(gens, degree).unwrap();
                let table = group.conjugacy(&Caps::default()).unwrap();
                let total: u64 = table.sizes.iter().sum();
                prop_assert_eq!(Some(total), group.order_u64());
                for &s in &table.sizes {
                    prop_assert_eq!(group.order_u64().unwrap() % s, 0);
                }
            }
        }
    }

    #[test]
    fn order_equals_brute_count_small_groups() {
        for (degree, gens) in [
            (5usize, vec!["(0 1 2 3 4)", "(0 1)"]),
            (6, vec!["(0 1 2)", "(1 2 3 4 5)"]),
            (7, vec!["(0 1 2 3 4 5 6)", "(0 1 2)"]),
            (4, vec!["(0 1)(2 3)", "(0 2)(1 3)"]),
        ] {
            let g = group(degree, &gens);
            let elems = g.elements(&caps()).unwrap();
            assert_eq!(BigUint::from(elems.len()), *g.order());
            let set: std::collections::HashSet<_> = elems.iter().collect();
            assert_eq!(set.len(), elems.len());
            // membership ⇔ appears in enumeration
            for e in &elems {
                assert!(g.contains(e));
            }
        }
    }
}
