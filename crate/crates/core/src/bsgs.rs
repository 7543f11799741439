//! Deterministic Schreier–Sims: base and strong generating set.
//!
//! The chain is built eagerly on construction, without randomization.
//! Strong generators are stored at the deepest level whose earlier base
//! points they all fix, so the generator set of the level-k stabilizer is
//! the union of the generator lists of levels k and deeper. Verification
//! proceeds bottom-up: a level is closed only once every one of its
//! Schreier generators sifts to the identity through the (already
//! verified) deeper levels, which is exactly the hypothesis of Schreier's
//! lemma and makes the order product exact.

use crate::perm::Permutation;
use num_bigint::BigUint;
use num_traits::One;

/// One level of the stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Orbit of `base` under this level's stabilizer, in BFS discovery order.
    orbit: Vec<usize>,
    /// `transversal[pt]` maps `base ↦ pt`; indexed by point.
    transversal: Vec<Option<Permutation>>,
    /// Strong generators stored at this level: each fixes the base points
    /// of all shallower levels.
    gens: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            orbit: vec![base],
            transversal,
            gens: Vec::new(),
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds the chain from generators (identity generators are dropped).
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Permutation> = gens
            .iter()
            .filter(|g| {
                assert_eq!(g.degree(), degree, "degree mismatch");
                !g.is_identity()
            })
            .cloned()
            .collect();
        if gens.is_empty() {
            return chain;
        }
        let base = gens
            .iter()
            .filter_map(|g| g.min_moved_point())
            .min()
            .expect("non-identity generators move points");
        chain.levels.push(Level::new(base, degree));
        chain.levels[0].gens = gens;
        chain.verify();
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Exact group order: the product of orbit sizes along the chain.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    /// Membership test by sifting.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g.clone(), 0).is_none()
    }

    /// Strips `g` through levels `from..`; `None` means `g` sifted to the
    /// identity, `Some((residue, depth))` is the stuck residue and the level
    /// it failed at (`depth == levels.len()` when the chain ran out).
    fn sift_from(&self, mut g: Permutation, from: usize) -> Option<(Permutation, usize)> {
        for (k, level) in self.levels.iter().enumerate().skip(from) {
            let image = g.apply(level.base);
            match &level.transversal[image] {
                Some(u) => {
                    // residue g·u⁻¹ fixes this base point
                    g = g.then(&u.inverse());
                }
                None => return Some((g, k)),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some((g, self.levels.len()))
        }
    }

    /// Bottom-up verification: recompute orbits and sift every Schreier
    /// generator, inserting nontrivial residues at their natural depth and
    /// resuming from there.
    fn verify(&mut self) {
        let mut i = self.levels.len() - 1;
        loop {
            match self.verify_level(i) {
                Some(depth) => i = depth,
                None => {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Rebuilds the orbit at `level` and checks its Schreier generators.
    /// On the first failure, inserts the residue and returns its depth.
    fn verify_level(&mut self, level: usize) -> Option<usize> {
        self.rebuild_orbit(level);
        let gens = self.stabilizer_gens(level);
        let mut idx = 0;
        while idx < self.levels[level].orbit.len() {
            let pt = self.levels[level].orbit[idx];
            idx += 1;
            let u = self.levels[level].transversal[pt]
                .clone()
                .expect("orbit point has a transversal element");
            for s in &gens {
                let target = s.apply(pt);
                let w = self.levels[level].transversal[target]
                    .as_ref()
                    .expect("orbit is closed under stabilizer generators");
                // Schreier generator u·s·w⁻¹ fixes this level's base
                let schreier = u.then(s).then(&w.inverse());
                if schreier.is_identity() {
                    continue;
                }
                if let Some((residue, depth)) = self.sift_from(schreier, level + 1) {
                    let depth = self.insert(residue, depth);
                    return Some(depth);
                }
            }
        }
        None
    }

    /// Records a sifted residue at `depth`, creating the level if needed.
    fn insert(&mut self, residue: Permutation, depth: usize) -> usize {
        if depth == self.levels.len() {
            let base = residue
                .min_moved_point()
                .expect("nontrivial residue moves a point");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[depth].gens.push(residue);
        depth
    }

    /// Generators of the level-k stabilizer: all strong generators stored
    /// at level k or deeper.
    fn stabilizer_gens(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Recomputes the orbit and transversal at `level` by BFS under the
    /// stabilizer generators, in deterministic discovery order.
    fn rebuild_orbit(&mut self, level: usize) {
        let gens = self.stabilizer_gens(level);
        let base = self.levels[level].base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut idx = 0;
        while idx < orbit.len() {
            let pt = orbit[idx];
            idx += 1;
            let u = transversal[pt].clone().expect("orbit point");
            for s in &gens {
                let target = s.apply(pt);
                if transversal[target].is_none() {
                    transversal[target] = Some(u.then(s));
                    orbit.push(target);
                }
            }
        }
        self.levels[level].orbit = orbit;
        self.levels[level].transversal = transversal;
    }

    /// Enumerates all group elements in a fixed deterministic order:
    /// mixed-radix products `u_(L−1)·…·u_1·u_0` with transversal entries
    /// taken in orbit-point order at each level.
    pub fn elements(&self) -> ElementIter<'_> {
        ElementIter {
            chain: self,
            counters: vec![0; self.levels.len()],
            done: false,
        }
    }

    /// Base points along the chain.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }
}

/// Deterministic element stream for [`StabChain::elements`].
pub struct ElementIter<'a> {
    chain: &'a StabChain,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for ElementIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut g = Permutation::identity(self.chain.degree);
        // deepest level first, so that sifting recovers the counters
        for (k, level) in self.chain.levels.iter().enumerate().rev() {
            let pt = level.orbit[self.counters[k]];
            let u = level.transversal[pt].as_ref().expect("transversal");
            g = g.then(u);
        }
        // increment the mixed-radix counter (level 0 fastest)
        self.done = true;
        for (k, level) in self.chain.levels.iter().enumerate() {
            self.counters[k] += 1;
            if self.counters[k] < level.orbit.len() {
                self.done = false;
                break;
            }
            self.counters[k] = 0;
        }
        Some(g)
    }
}
