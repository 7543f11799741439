//! Extension groups `1 → E → G → R → 1` with explicit 2-cocycles.
//!
//! Elements are symbolic pairs `(e, r)` multiplied by
//! `(e₁, r₁)·(e₂, r₂) = (e₁ + r₁∘e₂ + c(r₁, r₂), r₁·r₂)`, where `∘` is the
//! module's left action and `c` is the stored cocycle — identically zero
//! for split extensions. Keeping elements symbolic is what makes the
//! dim-120 coinduced modules tractable; a permutation realization exists
//! only for small cross-checks.
//!
//! The coinduced construction transfers the carry cocycle
//! `c₀(xⁱ, xʲ) = ⌊(i+j)/p⌋` of `Z/p²` across a transversal of `X\R`:
//! with `τ_i·r = x^(a)·τ_(i·r)` the transferred value is
//! `c(r, s)[i] = c₀(φ(i,r), φ(i·r, s))`. The index bookkeeping is fixed by
//! construction-time validation (the 2-cocycle identity plus the order
//! profile below), which certifies the cohomology class up to coboundary.

use crate::caps::Caps;
use crate::closure::omega_bar;
use crate::error::Error;
use crate::fpmod::{FpMatrix, FpModule};
use crate::group::GeneratedGroup;
use crate::perm::Permutation;
use crate::sylow::sylow_subgroup;
use crate::Result;
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// An element `(e, r)` of an extension group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElement {
    pub e: Vec<u8>,
    pub r: Permutation,
}

/// Transversal data for the cosets `X\R`, `|X| = p`.
#[derive(Debug, Clone)]
pub struct Transversal {
    pub p: u64,
    /// Generator of X.
    pub x: Permutation,
    /// Coset representatives; `reps[0]` represents the coset `X` itself.
    pub reps: Vec<Permutation>,
    x_powers: Vec<Permutation>,
    power_of: HashMap<Permutation, usize>,
    key_to_index: HashMap<Permutation, usize>,
    /// Per-element factor tables for small R: `r ↦ (i ↦ (power, target))`
    /// flattened as parallel vectors; makes cocycle evaluation O(dim).
    tables: HashMap<Permutation, ElementTable>,
}

#[derive(Debug, Clone)]
struct ElementTable {
    coset_images: Vec<u16>,
    x_powers: Vec<u8>,
}

impl Transversal {
    /// Builds the right-coset table of `X = ⟨x⟩` in `R`.
    pub fn new(r: &GeneratedGroup, x: &Permutation, p: u64, caps: &Caps) -> Result<Transversal> {
        if x.order() != p {
            return Err(Error::Input(format!(
                "transversal element must have order {p}, got {}",
                x.order()
            )));
        }
        if !r.contains(x) {
            return Err(Error::NotSubgroup("⟨x⟩".into(), "R".into()));
        }
        let mut x_powers = Vec::with_capacity(p as usize);
        let mut power_of = HashMap::new();
        let mut acc = r.identity();
        for k in 0..p as usize {
            x_powers.push(acc.clone());
            power_of.insert(acc.clone(), k);
            acc = acc.then(x);
        }
        let canon = |g: &Permutation| -> Permutation {
            x_powers.iter().map(|xp| xp.then(g)).min().expect("nonempty")
        };
        let index_bound = r
            .order_u64()
            .map(|n| (n / p) as usize)
            .filter(|&n| n <= caps.max_degree)
            .ok_or_else(|| {
                Error::cap(
                    "coset space X\\R",
                    r.order() / BigUint::from(p),
                    caps.max_degree,
                    crate::caps::ENV_MAX_DEGREE,
                )
            })?;
        let mut reps = vec![r.identity()];
        let mut key_to_index = HashMap::new();
        key_to_index.insert(canon(&r.identity()), 0);
        let mut k = 0;
        while k < reps.len() {
            let rep = reps[k].clone();
            k += 1;
            for s in r.generators() {
                let next = rep.then(s);
                let key = canon(&next);
                if !key_to_index.contains_key(&key) {
                    key_to_index.insert(key, reps.len());
                    reps.push(next);
                }
            }
        }
        debug_assert_eq!(reps.len(), index_bound);
        let mut transversal = Transversal {
            p,
            x: x.clone(),
            reps,
            x_powers,
            power_of,
            key_to_index,
            tables: HashMap::new(),
        };
        // factor tables for every element of a small R: the cocycle and the
        // pair multiplication then run in O(dim) per call
        if let Some(n) = r.order_u64().filter(|&n| n <= 2_000) {
            let mut tables = HashMap::with_capacity(n as usize);
            for g in r.elements(caps)? {
                let mut coset_images = Vec::with_capacity(transversal.reps.len());
                let mut powers = Vec::with_capacity(transversal.reps.len());
                for i in 0..transversal.reps.len() {
                    let (a, j) = transversal.factor_slow(i, &g);
                    coset_images.push(j as u16);
                    powers.push(a as u8);
                }
                tables.insert(
                    g,
                    ElementTable {
                        coset_images,
                        x_powers: powers,
                    },
                );
            }
            transversal.tables = tables;
        }
        Ok(transversal)
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    /// Index of the coset `X·g`.
    pub fn coset_index(&self, g: &Permutation) -> usize {
        let key = self
            .x_powers
            .iter()
            .map(|xp| xp.then(g))
            .min()
            .expect("nonempty");
        self.key_to_index[&key]
    }

    /// Decomposes `g = x^a · reps[j]`, returning `(a, j)`.
    pub fn decompose(&self, g: &Permutation) -> (usize, usize) {
        let j = self.coset_index(g);
        let u = g.then(&self.reps[j].inverse());
        let a = *self
            .power_of
            .get(&u)
            .expect("g lies in the coset of its representative");
        (a, j)
    }

    /// The factor `φ(i, r)`: with `τ_i·r = x^a·τ_j`, returns `(a, j)`.
    pub fn factor(&self, i: usize, r: &Permutation) -> (usize, usize) {
        if let Some(table) = self.tables.get(r) {
            return (table.x_powers[i] as usize, table.coset_images[i] as usize);
        }
        self.factor_slow(i, r)
    }

    fn factor_slow(&self, i: usize, r: &Permutation) -> (usize, usize) {
        self.decompose(&self.reps[i].then(r))
    }

    /// The permutation induced by `r` on coset indices.
    pub fn coset_perm(&self, r: &Permutation) -> Permutation {
        if let Some(table) = self.tables.get(r) {
            let images: Vec<usize> = table.coset_images.iter().map(|&j| j as usize).collect();
            return Permutation::from_images(images).expect("coset action is a permutation");
        }
        let images: Vec<usize> = (0..self.reps.len())
            .map(|i| self.factor_slow(i, r).1)
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    }
}

#[derive(Debug)]
enum ExtKind {
    /// Zero cocycle; the module acts over R's own domain.
    Split,
    /// Shapiro-transferred carry cocycle over the coset module.
    Coinduced(Transversal),
}

/// An extension of `R` by an `F_p`-module `E`.
#[derive(Debug)]
pub struct ExtensionGroup {
    pub r: GeneratedGroup,
    pub module: FpModule,
    kind: ExtKind,
}

impl ExtensionGroup {
    /// The split extension `E ⋊ R` (zero cocycle).
    pub fn split(r: GeneratedGroup, module: FpModule) -> ExtensionGroup {
        ExtensionGroup {
            r,
            module,
            kind: ExtKind::Split,
        }
    }

    /// The coinduced extension for `X = ⟨x⟩ ≤ R` of order `p`: the module
    /// is the permutation module on `X\R` and the cocycle is the Shapiro
    /// transfer of the carry cocycle presenting `Z/p²`.
    pub fn coinduced(r: GeneratedGroup, x: &Permutation, p: u64, caps: &Caps) -> Result<ExtensionGroup> {
        let transversal = Transversal::new(&r, x, p, caps)?;
        let dim = transversal.coset_count();
        let coset_gens: Vec<Permutation> = r
            .generators()
            .iter()
            .map(|g| transversal.coset_perm(g))
            .collect();
        let coset_group = GeneratedGroup::from_generators(coset_gens, dim)?;
        let points: Vec<usize> = (0..dim).collect();
        let module = FpModule::perm_module(&coset_group, &points, p)?;
        Ok(ExtensionGroup {
            r,
            module,
            kind: ExtKind::Coinduced(transversal),
        })
    }

    /// `|G| = p^dim · |R|`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.module.p).pow(self.module.dim as u32) * self.r.order()
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement {
            e: vec![0; self.module.dim],
            r: self.r.identity(),
        }
    }

    /// The module permutation argument for the left action of `r`.
    fn action_perm(&self, r: &Permutation) -> Permutation {
        match &self.kind {
            ExtKind::Split => r.clone(),
            ExtKind::Coinduced(t) => t.coset_perm(r),
        }
    }

    /// Left action `r∘e`.
    pub fn act(&self, r: &Permutation, e: &[u8]) -> Vec<u8> {
        self.module.apply_left(&self.action_perm(r), e)
    }

    /// Cocycle value `c(r, s)` as a module vector.
    pub fn cocycle(&self, r: &Permutation, s: &Permutation) -> Vec<u8> {
        match &self.kind {
            ExtKind::Split => vec![0; self.module.dim],
            ExtKind::Coinduced(t) => {
                let p = t.p;
                (0..t.coset_count())
                    .map(|i| {
                        let (a, j) = t.factor(i, r);
                        let (b, _) = t.factor(j, s);
                        // carry cocycle of Z/p²
                        u8::from(a + b >= p as usize)
                    })
                    .collect()
            }
        }
    }

    /// `(e₁, r₁)·(e₂, r₂) = (e₁ + r₁∘e₂ + c(r₁, r₂), r₁·r₂)`.
    pub fn multiply(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let p = self.module.p;
        let acted = self.act(&a.r, &b.e);
        let carry = self.cocycle(&a.r, &b.r);
        let e: Vec<u8> = a
            .e
            .iter()
            .zip(acted.iter())
            .zip(carry.iter())
            .map(|((&x, &y), &z)| ((x as u64 + y as u64 + z as u64) % p) as u8)
            .collect();
        ExtElement {
            e,
            r: a.r.then(&b.r),
        }
    }

    pub fn inverse(&self, a: &ExtElement) -> ExtElement {
        let p = self.module.p;
        let rinv = a.r.inverse();
        // (e, r)(f, r⁻¹) = (e + r∘f + c(r, r⁻¹), 1) = identity
        let carry = self.cocycle(&a.r, &rinv);
        let neg: Vec<u8> = a
            .e
            .iter()
            .zip(carry.iter())
            .map(|(&x, &z)| ((2 * p - x as u64 - z as u64) % p) as u8)
            .collect();
        let f = self.act(&rinv, &neg);
        let inv = ExtElement { e: f, r: rinv };
        debug_assert_eq!(self.multiply(a, &inv), self.identity());
        inv
    }

    /// Multiplicative order of an element (a multiple of `ord(r)`, dividing
    /// `p·ord(r)`).
    pub fn element_order(&self, a: &ExtElement) -> u64 {
        let mut acc = a.clone();
        let mut k = 1u64;
        let bound = self.module.p * a.r.order();
        while acc != self.identity() {
            acc = self.multiply(&acc, a);
            k += 1;
            assert!(k <= bound, "element order exceeds p·ord(r)");
        }
        k
    }

    /// Projection `(e, r) ↦ r` (the epimorphism onto R).
    pub fn project(&self, a: &ExtElement) -> Permutation {
        a.r.clone()
    }

    /// Minimum element order over the coset `rE`, for `r` of order p (or
    /// the identity): `(e, r)^p = (N_r(e) + C_r, 1)`, so the minimum is `p`
    /// iff `N_r e = −C_r` is solvable, else `p²`. The coset is never
    /// enumerated.
    pub fn coset_min_order(&self, r: &Permutation) -> Result<CosetOrderReport> {
        if r.is_identity() {
            return Ok(CosetOrderReport {
                min_order: 1,
                norm_constant: vec![0; self.module.dim],
                solution: Some(vec![0; self.module.dim]),
                e1_component_nonzero: false,
            });
        }
        let p = self.module.p;
        if r.order() != p {
            return Err(Error::Input(format!(
                "coset order analysis requires an element of order {p}, got {}",
                r.order()
            )));
        }
        // N_r = Σ_{i<p} (action of r)^i
        let action = self.module.matrix_of(&self.action_perm(r));
        let mut norm = FpMatrix::identity(p, self.module.dim);
        let mut power = FpMatrix::identity(p, self.module.dim);
        for _ in 1..p {
            power = power.mul(&action);
            norm = norm.add(&power);
        }
        // C_r = Σ_{i=1}^{p−1} c(rⁱ, r)
        let mut constant = vec![0u8; self.module.dim];
        let mut ri = r.clone();
        for _ in 1..p {
            let c = self.cocycle(&ri, r);
            for (acc, &v) in constant.iter_mut().zip(&c) {
                *acc = ((*acc as u64 + v as u64) % p) as u8;
            }
            ri = ri.then(r);
        }
        let target: Vec<u8> = constant.iter().map(|&v| ((p - v as u64) % p) as u8).collect();
        let solution = norm.solve(&target);
        let min_order = if solution.is_some() { p } else { p * p };
        // is the E₁-component (x-fixed coordinates) of C_r nonzero?
        let e1_nonzero = match &self.kind {
            ExtKind::Split => false,
            ExtKind::Coinduced(t) => (0..t.coset_count()).any(|i| {
                let (_, j) = t.factor(i, r);
                j == i && constant[i] != 0
            }),
        };
        Ok(CosetOrderReport {
            min_order,
            norm_constant: constant,
            solution,
            e1_component_nonzero: e1_nonzero,
        })
    }

    /// Verifies the 2-cocycle identity
    /// `c(r,s) + c(rs,t) = r∘c(s,t) + c(r,st)`.
    ///
    /// Exhaustive over all of R³ when `|R| ≤ 64`; otherwise all triples of
    /// generator pairwise products plus `samples` seeded random triples.
    pub fn verify_cocycle_identity(&self, samples: u64, caps: &Caps) -> Result<CocycleCheck> {
        let order = self.r.order_u64().unwrap_or(u64::MAX);
        let exhaustive = order <= 64;
        let mut checked = 0u64;
        let check = |r: &Permutation, s: &Permutation, t: &Permutation| -> bool {
            let lhs1 = self.cocycle(r, s);
            let lhs2 = self.cocycle(&r.then(s), t);
            let rhs1 = self.act(r, &self.cocycle(s, t));
            let rhs2 = self.cocycle(r, &s.then(t));
            let p = self.module.p;
            (0..self.module.dim).all(|i| {
                (lhs1[i] as u64 + lhs2[i] as u64) % p == (rhs1[i] as u64 + rhs2[i] as u64) % p
            })
        };
        if exhaustive {
            let elements = self.r.elements(caps)?;
            for r in &elements {
                for s in &elements {
                    for t in &elements {
                        if !check(r, s, t) {
                            return Err(Error::Verification(format!(
                                "2-cocycle identity fails at ({r}, {s}, {t})"
                            )));
                        }
                        checked += 1;
                    }
                }
            }
        } else {
            // generator products: closed small neighborhood of the identity
            let mut words: Vec<Permutation> = vec![self.r.identity()];
            words.extend(self.r.generators().iter().cloned());
            let base = words.clone();
            for a in &base {
                for b in &base {
                    let w = a.then(b);
                    if !words.contains(&w) {
                        words.push(w);
                    }
                }
            }
            for r in &words {
                for s in &words {
                    for t in &words {
                        if !check(r, s, t) {
                            return Err(Error::Verification(format!(
                                "2-cocycle identity fails at ({r}, {s}, {t})"
                            )));
                        }
                        checked += 1;
                    }
                }
            }
            // seeded random triples via random subproducts of generators
            let mut rng = ChaCha8Rng::seed_from_u64(0x5c10_5e00);
            let gens = self.r.generators();
            let random_element = |rng: &mut ChaCha8Rng| -> Permutation {
                let mut g = self.r.identity();
                for _ in 0..12 {
                    let k = rng.gen_range(0..gens.len());
                    g = g.then(&gens[k]);
                }
                g
            };
            while checked < samples {
                let r = random_element(&mut rng);
                let s = random_element(&mut rng);
                let t = random_element(&mut rng);
                if !check(&r, &s, &t) {
                    return Err(Error::Verification(format!(
                        "2-cocycle identity fails at ({r}, {s}, {t})"
                    )));
                }
                checked += 1;
            }
        }
        Ok(CocycleCheck {
            triples_checked: checked,
            exhaustive,
        })
    }

    /// Normalization `c(1, r) = c(r, 1) = 0` on the generators.
    pub fn check_normalized(&self) -> bool {
        let id = self.r.identity();
        self.r.generators().iter().all(|g| {
            self.cocycle(&id, g).iter().all(|&v| v == 0)
                && self.cocycle(g, &id).iter().all(|&v| v == 0)
        })
    }

    /// All `p^dim · |R|` elements — for small cross-checks only.
    pub fn all_elements(&self, caps: &Caps) -> Result<Vec<ExtElement>> {
        let order = self
            .order()
            .try_into()
            .ok()
            .filter(|&n: &u64| n <= caps.max_elements);
        if order.is_none() {
            return Err(Error::cap(
                "extension group enumeration",
                self.order(),
                caps.max_elements,
                crate::caps::ENV_MAX_ELEMENTS,
            ));
        }
        let p = self.module.p as u64;
        let dim = self.module.dim;
        let vectors = (p as u128).pow(dim as u32) as u64;
        let mut out = Vec::new();
        for r in self.r.elements(caps)? {
            for code in 0..vectors {
                let mut e = vec![0u8; dim];
                let mut c = code;
                for digit in e.iter_mut() {
                    *digit = (c % p) as u8;
                    c /= p;
                }
                out.push(ExtElement { e, r: r.clone() });
            }
        }
        Ok(out)
    }

    /// Regular permutation realization on the element list (degree `|G|`).
    pub fn regular_realization(&self, caps: &Caps) -> Result<GeneratedGroup> {
        let elements = self.all_elements(caps)?;
        let index: HashMap<&ExtElement, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        // generators: (0, r_gen) for R's generators and (e_basis, 1)
        let mut ext_gens: Vec<ExtElement> = Vec::new();
        for g in self.r.generators() {
            ext_gens.push(ExtElement {
                e: vec![0; self.module.dim],
                r: g.clone(),
            });
        }
        for k in 0..self.module.dim {
            let mut e = vec![0u8; self.module.dim];
            e[k] = 1;
            ext_gens.push(ExtElement {
                e,
                r: self.r.identity(),
            });
        }
        let mut perm_gens = Vec::new();
        for g in &ext_gens {
            let images: Vec<usize> = elements
                .iter()
                .map(|a| index[&self.multiply(a, g)])
                .collect();
            perm_gens.push(Permutation::from_images(images)?);
        }
        GeneratedGroup::from_generators(perm_gens, elements.len())
    }
}

/// Result of a coset order analysis.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CosetOrderReport {
    pub min_order: u64,
    /// The accumulated cocycle sum `C_r`.
    pub norm_constant: Vec<u8>,
    /// A solution of `N_r e = −C_r` when one exists.
    pub solution: Option<Vec<u8>>,
    /// Whether `C_r` has a nonzero coordinate on an r-fixed coset (the E₁
    /// component).
    pub e1_component_nonzero: bool,
}

/// Outcome of a cocycle identity verification.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CocycleCheck {
    pub triples_checked: u64,
    pub exhaustive: bool,
}

/// Machine-checked preconditions of the split-extension fusion example.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Prop41Preconditions {
    pub generated_by_order_p: bool,
    pub omega_bar_t_order: String,
    pub sylow_t_order: String,
    pub omega_bar_proper: bool,
    pub action_quotient_order: String,
    pub action_quotient_not_p_group: bool,
}

/// Report for the split-extension fusion-failure construction.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Prop41Report {
    pub p: u64,
    pub module_dim: usize,
    pub extension_order: String,
    pub preconditions: Prop41Preconditions,
    /// ω̄S ≠ S certified through the quotient image: ω̄(S/E) = ω̄T ≠ T in R.
    pub omega_bar_s_proper: bool,
    /// Witness: a T-fixed module vector moved off the fixed space by `r`.
    pub witness_vector: Vec<u8>,
    pub witness_r: String,
    pub witness_image: Vec<u8>,
    /// The witness conjugation replayed in pair arithmetic.
    pub replay_ok: bool,
}

/// Checks the preconditions and produces the fusion-failure witness for a
/// split extension `E ⋊ R`.
pub fn verify_prop41(
    r: &GeneratedGroup,
    module: &FpModule,
    p: u64,
    caps: &Caps,
) -> Result<Prop41Report> {
    // (a) R is generated by its order-p elements
    let order_p_reps = class_reps_of_order(r, p, caps)?;
    let generated = r.normal_closure(&order_p_reps)?;
    let generated_by_order_p = generated.order() == r.order();

    // (b) ω̄T ≠ T for T Sylow in R — this is the quotient-image
    // certification of ω̄S ≠ S, computed in R ≅ G/E
    let t = sylow_subgroup(r, p, caps)?;
    let omega_t = omega_bar(r, &t, p, caps)?;
    let omega_bar_proper = omega_t.order() < t.order();

    // (c) R/C_R(E) is not a p-group
    let kernel_order = action_kernel_order(r, module, caps)?;
    let quotient_order = r.order() / &kernel_order;
    let not_p_group = quotient_order != crate::sylow::p_part(&quotient_order, p);

    let preconditions = Prop41Preconditions {
        generated_by_order_p,
        omega_bar_t_order: omega_t.order().to_string(),
        sylow_t_order: t.order().to_string(),
        omega_bar_proper,
        action_quotient_order: quotient_order.to_string(),
        action_quotient_not_p_group: not_p_group,
    };
    if !(generated_by_order_p && omega_bar_proper && not_p_group) {
        return Err(Error::Verification(format!(
            "split-extension preconditions fail: {preconditions:?}"
        )));
    }

    // fusion-failure witness: z fixed by T, r∘z outside the fixed space;
    // valid because G-fusion inside E is the R-orbit while N_G(S)
    // preserves fixed_points(E, T) = Z(S) ∩ E
    let fixed = module.fixed_points(t.generators());
    let ext = ExtensionGroup::split(r.clone(), module.clone());
    let mut witness: Option<(Vec<u8>, Permutation, Vec<u8>)> = None;
    'outer: for z in &fixed {
        for g in r.elements(caps)? {
            let image = ext.act(&g, z);
            if !in_span(module.p, &image, &fixed) {
                witness = Some((z.clone(), g, image));
                break 'outer;
            }
        }
    }
    let (z, g, image) =
        witness.ok_or_else(|| Error::Verification("no fusion-failure witness found".into()))?;
    // replay: conjugating (z, 1) by (0, g⁻¹) yields (g∘z, 1)
    let zed = ExtElement {
        e: z.clone(),
        r: r.identity(),
    };
    let conj = ExtElement {
        e: vec![0; module.dim],
        r: g.inverse(),
    };
    let conjugated = ext.multiply(&ext.multiply(&ext.inverse(&conj), &zed), &conj);
    let replay_ok = conjugated.r.is_identity() && conjugated.e == image;

    Ok(Prop41Report {
        p,
        module_dim: module.dim,
        extension_order: ext.order().to_string(),
        preconditions,
        omega_bar_s_proper: omega_bar_proper,
        witness_vector: z,
        witness_r: g.to_string(),
        witness_image: image,
        replay_ok,
    })
}

fn in_span(p: u64, v: &[u8], basis: &[Vec<u8>]) -> bool {
    let reduced = FpMatrix::row_space_basis(p, basis);
    let mut all: Vec<Vec<u8>> = reduced.clone();
    all.push(v.to_vec());
    FpMatrix::row_space_basis(p, &all).len() == reduced.len()
}

/// One representative per conjugacy class of order-p elements.
fn class_reps_of_order(r: &GeneratedGroup, p: u64, caps: &Caps) -> Result<Vec<Permutation>> {
    let mut reps = Vec::new();
    let mut seen: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    for g in r.elements(caps)? {
        if g.order() != p || seen.contains(&g) {
            continue;
        }
        for member in r.class_of(&g, caps)?.members {
            seen.insert(member);
        }
        reps.push(g);
    }
    Ok(reps)
}

/// `|C_R(E)|`: the kernel of the module action.
fn action_kernel_order(r: &GeneratedGroup, module: &FpModule, caps: &Caps) -> Result<BigUint> {
    let mut kernel_gens = Vec::new();
    for g in r.elements(caps)? {
        if module.matrix_of(&g).is_identity() {
            kernel_gens.push(g);
        }
    }
    Ok(r.generated(&kernel_gens)?.order().clone())
}

/// Per-Z data in a coinduced-extension report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Prop42ZReport {
    pub z: String,
    pub not_conjugate_to_x: bool,
    pub coset_min_order: u64,
    /// All ⟨z⟩-orbits on the coset basis are regular (length p): the
    /// module is free over Z, so the extension of Z by E splits.
    pub module_free_over_z: bool,
    pub split_witness: Option<Vec<u8>>,
}

/// Report for the coinduced ("half-split") construction.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Prop42Report {
    pub p: u64,
    pub module_dim: usize,
    pub extension_order: String,
    pub cocycle_check: CocycleCheck,
    pub cocycle_normalized: bool,
    /// Every element of the coset xE has order p²: the extension of X by E
    /// does not split.
    pub x_coset_min_order: u64,
    /// The norm constant's E₁ (x-fixed-coset) component is nonzero.
    pub x_norm_constant_in_e1: bool,
    /// E = E₁ ⊕ E₂ over X: dim E₁ = #x-fixed cosets, E₂ free.
    pub e1_dim: usize,
    pub e2_free_rank: usize,
    pub z_reports: Vec<Prop42ZReport>,
}

/// Builds the coinduced extension for `(R, X = ⟨x⟩)` and verifies the
/// nonsplit-over-X / split-over-Z profile.
pub fn verify_prop42(
    r: &GeneratedGroup,
    x: &Permutation,
    z_list: &[Permutation],
    p: u64,
    samples: u64,
    caps: &Caps,
) -> Result<(ExtensionGroup, Prop42Report)> {
    let ext = ExtensionGroup::coinduced(r.clone(), x, p, caps)?;
    let cocycle_check = ext.verify_cocycle_identity(samples, caps)?;
    let cocycle_normalized = ext.check_normalized();

    let x_report = ext.coset_min_order(x)?;
    if x_report.min_order != p * p {
        return Err(Error::Verification(format!(
            "coset xE has an element of order {}, expected p² = {}",
            x_report.min_order,
            p * p
        )));
    }
    // E = E₁ ⊕ E₂ over X; when X is normal in R the coset action of x is
    // trivial and E = E₁ outright
    let x_coset_perm = match &ext.kind {
        ExtKind::Coinduced(t) => t.coset_perm(x),
        ExtKind::Split => unreachable!("coinduced constructor"),
    };
    let (e1_dim, e2_free_rank) = if x_coset_perm.is_identity() {
        (ext.module.dim, 0)
    } else {
        let x_profile = ext.module.restriction_profile(&x_coset_perm)?;
        (
            x_profile
                .fixed_basis_indices
                .as_ref()
                .map(|v| v.len())
                .unwrap_or(0),
            x_profile.free_orbit_count.unwrap_or(0),
        )
    };

    let x_class = r.class_of(x, caps)?;
    let mut z_reports = Vec::new();
    for z in z_list {
        if z.order() != p {
            return Err(Error::Input(format!("z must have order {p}")));
        }
        // ⟨z⟩ conjugate to ⟨x⟩ iff some generator z^k is in x's class
        let mut conjugate = false;
        let mut zk = z.clone();
        for _ in 1..p {
            if x_class.contains(&zk) {
                conjugate = true;
            }
            zk = zk.then(z);
        }
        let z_order_report = ext.coset_min_order(z)?;
        let z_coset_perm = match &ext.kind {
            ExtKind::Coinduced(t) => t.coset_perm(z),
            ExtKind::Split => unreachable!(),
        };
        if z_coset_perm.is_identity() {
            // z would lie in the core of X, hence in X itself
            return Err(Error::Input(format!("z = {z} acts trivially on X\\R")));
        }
        let z_profile = ext.module.restriction_profile(&z_coset_perm)?;
        let free = z_profile.is_free
            && z_profile
                .fixed_basis_indices
                .as_ref()
                .map(|v| v.is_empty())
                .unwrap_or(false);
        if !conjugate && z_order_report.min_order != p {
            return Err(Error::Verification(format!(
                "coset zE should contain order-{p} elements for z = {z}"
            )));
        }
        z_reports.push(Prop42ZReport {
            z: z.to_string(),
            not_conjugate_to_x: !conjugate,
            coset_min_order: z_order_report.min_order,
            module_free_over_z: free,
            split_witness: z_order_report.solution,
        });
    }

    let report = Prop42Report {
        p,
        module_dim: ext.module.dim,
        extension_order: ext.order().to_string(),
        cocycle_check,
        cocycle_normalized,
        x_coset_min_order: x_report.min_order,
        x_norm_constant_in_e1: x_report.e1_component_nonzero,
        e1_dim,
        e2_free_rank,
        z_reports,
    };
    Ok((ext, report))
}
