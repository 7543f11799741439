//! Modules over prime fields with a group action.
//!
//! Everything here is dense row-reduction over `F_p` at desk scale
//! (dimensions into the low hundreds); there is deliberately no sparse
//! machinery and no MeatAxe — irreducibility is brute-force spin over all
//! nonzero vectors, capped at dimension 6.
//!
//! Action convention: the stored matrices give a **left** action compatible
//! with the crate's left-to-right composition, which for a permutation
//! action on basis points reads `(g∘v)[i] = v[g(i)]`. For conjugation
//! modules the matrix of `g` is the coordinate map of `x ↦ x^(g⁻¹)`; all
//! consumers (fixed spaces, spins, norm maps) are insensitive to that
//! inverse, and the convention is what makes extension cocycles associate.

use crate::caps::Caps;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::perm::Permutation;
use crate::Result;
use std::collections::HashMap;
use std::fmt;

/// Dense matrix over `F_p` (`p < 256`).
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<u8>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix({}×{} mod {})", self.rows, self.cols, self.p)
    }
}

impl FpMatrix {
    pub fn zero(p: u64, rows: usize, cols: usize) -> FpMatrix {
        FpMatrix {
            p,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> FpMatrix {
        let mut m = FpMatrix::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.entries[i * self.cols + j] = v % self.p as u8;
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.p;
        let mut out = FpMatrix::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j) as u64;
                    if b == 0 {
                        continue;
                    }
                    let cur = out.get(i, j) as u64;
                    out.set(i, j, ((cur + a * b) % p) as u8);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.entries.iter_mut().zip(&other.entries) {
            *a = ((*a as u64 + b as u64) % self.p) as u8;
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for j in 0..self.cols {
                    acc += self.get(i, j) as u64 * v[j] as u64;
                }
                (acc % p) as u8
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == FpMatrix::identity(self.p, self.rows)
    }

    /// Row-reduced echelon basis of the row space of `rows`.
    pub fn row_space_basis(p: u64, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
        let mut basis: Vec<Vec<u8>> = Vec::new();
        for row in rows {
            let mut r = row.clone();
            reduce_against(p, &mut r, &basis);
            if r.iter().any(|&x| x != 0) {
                normalize_pivot(p, &mut r);
                basis.push(r);
                basis.sort_by_key(|v| v.iter().position(|&x| x != 0).unwrap_or(v.len()));
                // re-reduce for a clean echelon form
                let snapshot = basis.clone();
                basis.clear();
                for mut s in snapshot {
                    reduce_against(p, &mut s, &basis);
                    if s.iter().any(|&x| x != 0) {
                        normalize_pivot(p, &mut s);
                        basis.push(s);
                    }
                }
                basis.sort_by_key(|v| v.iter().position(|&x| x != 0).unwrap_or(v.len()));
            }
        }
        basis
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        FpMatrix::row_space_basis(self.p, &rows).len()
    }

    /// Basis of the (right) null space `{v : M v = 0}`.
    pub fn null_space(&self) -> Vec<Vec<u8>> {
        let p = self.p;
        // reduce the rows, track pivot columns
        let rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect();
        let basis = FpMatrix::row_space_basis(p, &rows);
        let pivots: Vec<usize> = basis
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("nonzero basis row"))
            .collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut nulls = Vec::new();
        for &fc in &free {
            let mut v = vec![0u8; self.cols];
            v[fc] = 1;
            // back-substitute: pivot var = −Σ free coefficients
            for (row, &pc) in basis.iter().zip(&pivots) {
                let coeff = row[fc] as u64;
                if coeff != 0 {
                    v[pc] = ((p - coeff % p) % p) as u8;
                }
            }
            nulls.push(v);
        }
        nulls
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(b.len(), self.rows);
        let p = self.p;
        // eliminate on the augmented rows
        let mut aug: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| {
                let mut r: Vec<u8> = (0..self.cols).map(|j| self.get(i, j)).collect();
                r.push(b[i]);
                r
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut row = 0;
        for col in 0..self.cols {
            let pivot = (row..aug.len()).find(|&r| aug[r][col] != 0);
            let Some(pr) = pivot else { continue };
            aug.swap(row, pr);
            let inv = mod_inv(aug[row][col] as u64, p);
            for x in aug[row].iter_mut() {
                *x = ((*x as u64 * inv) % p) as u8;
            }
            for r in 0..aug.len() {
                if r != row && aug[r][col] != 0 {
                    let factor = aug[r][col] as u64;
                    for c in 0..=self.cols {
                        let sub = (factor * aug[row][c] as u64) % p;
                        aug[r][c] = ((aug[r][c] as u64 + p - sub) % p) as u8;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == aug.len() {
                break;
            }
        }
        // inconsistent row: 0 … 0 | nonzero
        for r in &aug {
            if r[..self.cols].iter().all(|&x| x == 0) && r[self.cols] != 0 {
                return None;
            }
        }
        let mut x = vec![0u8; self.cols];
        for &(r, c) in &pivots {
            x[c] = aug[r][self.cols];
        }
        Some(x)
    }
}

fn reduce_against(p: u64, row: &mut Vec<u8>, basis: &[Vec<u8>]) {
    for b in basis {
        let pivot = b.iter().position(|&x| x != 0).expect("nonzero basis row");
        let coeff = row[pivot] as u64;
        if coeff != 0 {
            // basis rows are pivot-normalized to 1
            for (r, &bv) in row.iter_mut().zip(b) {
                let sub = (coeff * bv as u64) % p;
                *r = ((*r as u64 + p - sub) % p) as u8;
            }
        }
    }
}

fn normalize_pivot(p: u64, row: &mut [u8]) {
    let pivot = row.iter().position(|&x| x != 0).expect("nonzero row");
    let inv = mod_inv(row[pivot] as u64, p);
    for r in row.iter_mut() {
        *r = ((*r as u64 * inv) % p) as u8;
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// How module basis indices transform under the acting group.
#[derive(Debug, Clone)]
enum ActionSource {
    /// Basis = the listed ambient points; index i maps to the index of
    /// `g(points[i])`.
    Points { points: Vec<usize>, position: HashMap<usize, usize> },
    /// Basis = blocks of ambient points (e.g. projective classes).
    Blocks { blocks: Vec<Vec<usize>>, block_of: HashMap<usize, usize> },
    /// Basis = a minimal generating set of an elementary abelian p-group;
    /// the action is by conjugation.
    Conjugation {
        coordinates: HashMap<Permutation, Vec<u8>>,
        basis: Vec<Permutation>,
    },
}

/// A finite-dimensional `F_p`-module with a designated group action.
#[derive(Debug, Clone)]
pub struct FpModule {
    pub p: u64,
    pub dim: usize,
    pub labels: Vec<String>,
    /// Matrices of the acting group's generators, parallel to `acting_gens`.
    pub generator_action: Vec<FpMatrix>,
    pub acting_gens: Vec<Permutation>,
    source: ActionSource,
}

impl FpModule {
    /// The `F_p`-permutation module of `r` acting on `points` (a subset of
    /// its domain, closed under the action).
    pub fn perm_module(r: &GeneratedGroup, points: &[usize], p: u64) -> Result<FpModule> {
        let position: HashMap<usize, usize> =
            points.iter().enumerate().map(|(i, &pt)| (pt, i)).collect();
        for g in r.generators() {
            for &pt in points {
                if !position.contains_key(&g.apply(pt)) {
                    return Err(Error::Input(format!(
                        "action does not preserve the point set: {pt} ↦ {}",
                        g.apply(pt)
                    )));
                }
            }
        }
        let source = ActionSource::Points {
            points: points.to_vec(),
            position,
        };
        let labels = points.iter().map(|pt| format!("pt{pt}")).collect();
        Ok(Self::from_source(p, points.len(), labels, r.generators().to_vec(), source))
    }

    /// Permutation module on blocks of ambient points (the blocks must be
    /// permuted by the action, e.g. projective classes of vectors).
    pub fn block_module(r: &GeneratedGroup, blocks: Vec<Vec<usize>>, p: u64) -> Result<FpModule> {
        let mut block_of = HashMap::new();
        for (i, block) in blocks.iter().enumerate() {
            for &pt in block {
                block_of.insert(pt, i);
            }
        }
        for g in r.generators() {
            for block in &blocks {
                let target = block_of.get(&g.apply(block[0])).copied();
                for &pt in block {
                    if block_of.get(&g.apply(pt)).copied() != target {
                        return Err(Error::Input("action does not permute the blocks".into()));
                    }
                }
            }
        }
        let dim = blocks.len();
        let labels = (0..dim).map(|i| format!("blk{i}")).collect();
        let source = ActionSource::Blocks { blocks, block_of };
        Ok(Self::from_source(p, dim, labels, r.generators().to_vec(), source))
    }

    /// The conjugation module of acting generators on an elementary abelian
    /// p-group `e`: coordinates are taken over a greedily chosen minimal
    /// generating set.
    pub fn conjugation_module(
        e: &GeneratedGroup,
        acting_gens: &[Permutation],
        p: u64,
        caps: &Caps,
    ) -> Result<FpModule> {
        let elements = e.elements(&Caps {
            max_elements: caps.max_pgroup.max(caps.max_elements),
            ..*caps
        })?;
        for x in &elements {
            if !x.is_identity() && x.order() != p {
                return Err(Error::Input("group is not elementary abelian".into()));
            }
        }
        // greedy basis with full coordinate table by closure
        let mut basis: Vec<Permutation> = Vec::new();
        let mut coordinates: HashMap<Permutation, Vec<u8>> = HashMap::new();
        coordinates.insert(e.identity(), Vec::new());
        for x in &elements {
            if coordinates.contains_key(x) {
                continue;
            }
            // x is independent of the current basis: extend every known
            // coordinate vector by the new axis
            basis.push(x.clone());
            let snapshot: Vec<(Permutation, Vec<u8>)> = coordinates
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            coordinates.clear();
            for (elem, coord) in snapshot {
                let mut power = e.identity();
                for k in 0..p {
                    let mut full = coord.clone();
                    full.push(k as u8);
                    coordinates.insert(elem.then(&power), full);
                    power = power.then(x);
                }
            }
        }
        let dim = basis.len();
        for v in coordinates.values_mut() {
            v.resize(dim, 0);
        }
        // pad earlier coordinates: vectors recorded before later basis
        // extensions were already resized above
        let labels = basis.iter().map(|b| b.to_string()).collect();
        let source = ActionSource::Conjugation {
            coordinates,
            basis,
        };
        Ok(Self::from_source(p, dim, labels, acting_gens.to_vec(), source))
    }

    fn from_source(
        p: u64,
        dim: usize,
        labels: Vec<String>,
        acting_gens: Vec<Permutation>,
        source: ActionSource,
    ) -> FpModule {
        let mut module = FpModule {
            p,
            dim,
            labels,
            generator_action: Vec::new(),
            acting_gens,
            source,
        };
        module.generator_action = module
            .acting_gens
            .iter()
            .map(|g| module.matrix_of(g))
            .collect();
        module
    }

    /// Index image under `g` for index-style sources.
    fn index_image(&self, g: &Permutation, i: usize) -> usize {
        match &self.source {
            ActionSource::Points { points, position } => position[&g.apply(points[i])],
            ActionSource::Blocks { blocks, block_of } => block_of[&g.apply(blocks[i][0])],
            ActionSource::Conjugation { .. } => unreachable!("conjugation has no index action"),
        }
    }

    /// The left-action matrix of an arbitrary element of the acting group.
    pub fn matrix_of(&self, g: &Permutation) -> FpMatrix {
        match &self.source {
            ActionSource::Conjugation {
                coordinates, basis, ..
            } => {
                // coordinate map of x ↦ x^(g⁻¹)
                let ginv = g.inverse();
                let mut m = FpMatrix::zero(self.p, self.dim, self.dim);
                for (j, b) in basis.iter().enumerate() {
                    let image = b.conjugated_by(&ginv);
                    let coord = coordinates
                        .get(&image)
                        .expect("conjugation preserves the module group");
                    for (i, &c) in coord.iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            }
            _ => {
                // (g∘v)[i] = v[g(i)]
                let mut m = FpMatrix::zero(self.p, self.dim, self.dim);
                for i in 0..self.dim {
                    m.set(i, self.index_image(g, i), 1);
                }
                m
            }
        }
    }

    /// Applies the left action of `g` to a vector without building the
    /// matrix (index sources permute entries).
    pub fn apply_left(&self, g: &Permutation, v: &[u8]) -> Vec<u8> {
        match &self.source {
            ActionSource::Conjugation { .. } => self.matrix_of(g).apply(v),
            _ => (0..self.dim).map(|i| v[self.index_image(g, i)]).collect(),
        }
    }

    /// Basis of the common fixed space of the given acting elements
    /// (pass a subgroup's generators; the empty list fixes everything).
    pub fn fixed_points(&self, acting: &[Permutation]) -> Vec<Vec<u8>> {
        if acting.is_empty() {
            return (0..self.dim)
                .map(|i| {
                    let mut v = vec![0u8; self.dim];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        // stack (M_h − I) and take the null space
        let mut stacked = FpMatrix::zero(self.p, self.dim * acting.len(), self.dim);
        for (k, h) in acting.iter().enumerate() {
            let m = self.matrix_of(h);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let mut v = m.get(i, j) as u64;
                    if i == j {
                        v = (v + self.p - 1) % self.p;
                    }
                    stacked.set(k * self.dim + i, j, v as u8);
                }
            }
        }
        stacked.null_space()
    }

    /// Is the action of every generator trivial?
    pub fn action_is_trivial(&self) -> bool {
        self.generator_action.iter().all(|m| m.is_identity())
    }

    /// Restriction data for an order-p element `x`.
    pub fn restriction_profile(&self, x: &Permutation) -> Result<RestrictionProfile> {
        if x.order() != self.p {
            return Err(Error::Input(format!(
                "restriction element must have order {}, got {}",
                self.p,
                x.order()
            )));
        }
        let m = self.matrix_of(x);
        let mut norm = FpMatrix::identity(self.p, self.dim);
        let mut power = FpMatrix::identity(self.p, self.dim);
        for _ in 1..self.p {
            power = power.mul(&m);
            norm = norm.add(&power);
        }
        let fixed = self.fixed_points(std::slice::from_ref(x));
        let fixed_dim = fixed.len();
        let norm_rank = norm.rank();
        // orbit decomposition for index sources
        let (fixed_indices, free_orbits) = match &self.source {
            ActionSource::Conjugation { .. } => (None, None),
            _ => {
                let mut seen = vec![false; self.dim];
                let mut fixed_idx = Vec::new();
                let mut orbits = 0usize;
                for start in 0..self.dim {
                    if seen[start] {
                        continue;
                    }
                    let mut orbit = vec![start];
                    seen[start] = true;
                    let mut cur = self.index_image(x, start);
                    while cur != start {
                        seen[cur] = true;
                        orbit.push(cur);
                        cur = self.index_image(x, cur);
                    }
                    if orbit.len() == 1 {
                        fixed_idx.push(start);
                    } else {
                        orbits += 1;
                    }
                }
                (Some(fixed_idx), Some(orbits))
            }
        };
        let is_free = self.dim % self.p as usize == 0
            && norm_rank == self.dim / self.p as usize
            && fixed_dim == self.dim / self.p as usize;
        Ok(RestrictionProfile {
            fixed_dim,
            norm_rank,
            is_free,
            fixed_basis_indices: fixed_indices,
            free_orbit_count: free_orbits,
            norm: NormData {
                matrix: norm,
                fixed_space: fixed,
            },
        })
    }

    /// Smallest invariant subspace containing `v` (spin), as an echelon
    /// basis.
    pub fn spin(&self, v: &[u8]) -> Vec<Vec<u8>> {
        let mut basis = FpMatrix::row_space_basis(self.p, &[v.to_vec()]);
        let mut queue: Vec<Vec<u8>> = basis.clone();
        while let Some(w) = queue.pop() {
            for m in &self.generator_action {
                let image = m.apply(&w);
                let mut reduced = image.clone();
                reduce_against(self.p, &mut reduced, &basis);
                if reduced.iter().any(|&x| x != 0) {
                    basis = FpMatrix::row_space_basis(
                        self.p,
                        &basis
                            .iter()
                            .cloned()
                            .chain(std::iter::once(image.clone()))
                            .collect::<Vec<_>>(),
                    );
                    queue.push(image);
                }
            }
        }
        basis
    }

    /// Orbit of `v` under the generator matrices together with its spin.
    pub fn orbit_and_span(&self, v: &[u8], caps: &Caps) -> Result<(Vec<Vec<u8>>, Vec<Vec<u8>>)> {
        let mut orbit: Vec<Vec<u8>> = vec![v.to_vec()];
        let mut seen: std::collections::HashSet<Vec<u8>> = orbit.iter().cloned().collect();
        let mut k = 0;
        while k < orbit.len() {
            let w = orbit[k].clone();
            k += 1;
            for m in &self.generator_action {
                let image = m.apply(&w);
                if seen.insert(image.clone()) {
                    if orbit.len() as u64 >= caps.max_elements {
                        return Err(Error::cap(
                            "vector orbit",
                            orbit.len(),
                            caps.max_elements,
                            crate::caps::ENV_MAX_ELEMENTS,
                        ));
                    }
                    orbit.push(image);
                }
            }
        }
        let spin = self.spin(v);
        Ok((orbit, spin))
    }

    /// Brute irreducibility: every nonzero vector must spin to the whole
    /// module. Capped at dimension 6 and `p^dim ≤ 3⁶` vectors.
    pub fn is_irreducible_brute(&self) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        let count = (self.p as u64).checked_pow(self.dim as u32);
        match count {
            Some(c) if self.dim <= 6 && c <= 729 => {}
            _ => {
                return Err(Error::cap(
                    "vector space for brute irreducibility",
                    format!("{}^{}", self.p, self.dim),
                    "3^6",
                    crate::caps::ENV_MAX_PGROUP,
                ))
            }
        }
        let total = (self.p as u64).pow(self.dim as u32);
        for code in 1..total {
            let mut v = vec![0u8; self.dim];
            let mut c = code;
            for digit in v.iter_mut() {
                *digit = (c % self.p) as u8;
                c /= self.p;
            }
            if self.spin(&v).len() < self.dim {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Norm-map data for an order-p action.
#[derive(Debug, Clone)]
pub struct NormData {
    /// `N_x = Σ_(i<p) (x-action)^i`.
    pub matrix: FpMatrix,
    /// Basis of the fixed space of `x`.
    pub fixed_space: Vec<Vec<u8>>,
}

/// Result of restricting a module to an order-p element.
#[derive(Debug)]
pub struct RestrictionProfile {
    pub fixed_dim: usize,
    pub norm_rank: usize,
    /// Free as an `F_p⟨x⟩`-module.
    pub is_free: bool,
    /// For permutation-style modules: the x-fixed basis indices (spanning
    /// the trivial summand E₁).
    pub fixed_basis_indices: Option<Vec<usize>>,
    /// For permutation-style modules: the number of nontrivial ⟨x⟩-orbits.
    pub free_orbit_count: Option<usize>,
    pub norm: NormData,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn caps() -> Caps {
        Caps::default()
    }

    fn group(degree: usize, gens: &[&str]) -> GeneratedGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| parse_cycles(s, degree).unwrap()).collect();
        GeneratedGroup::from_generators(gens, degree).unwrap()
    }

    #[test]
    fn s3_natural_module_dimensions() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let m = FpModule::perm_module(&s3, &[0, 1, 2], 3).unwrap();
        assert_eq!(m.dim, 3);
        // fixed space of the whole group: the all-ones line
        let fixed = m.fixed_points(s3.generators());
        assert_eq!(fixed.len(), 1);
        // trivial subgroup fixes everything
        assert_eq!(m.fixed_points(&[]).len(), 3);
    }

    #[test]
    fn action_matrices_compose_left_to_right() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let m = FpModule::perm_module(&s3, &[0, 1, 2], 3).unwrap();
        let a = parse_cycles("(0 1 2)", 3).unwrap();
        let b = parse_cycles("(0 1)", 3).unwrap();
        let ab = a.then(&b);
        assert_eq!(
            m.matrix_of(&ab),
            m.matrix_of(&a).mul(&m.matrix_of(&b)),
            "M(a·b) = M(a)·M(b)"
        );
    }

    #[test]
    fn regular_z3_module_is_free_of_rank_one() {
        let z3 = group(3, &["(0 1 2)"]);
        let m = FpModule::perm_module(&z3, &[0, 1, 2], 3).unwrap();
        let x = parse_cycles("(0 1 2)", 3).unwrap();
        let profile = m.restriction_profile(&x).unwrap();
        assert!(profile.is_free);
        assert_eq!(profile.fixed_dim, 1); // the orbit-sum line
        assert_eq!(profile.norm_rank, 1);
        assert_eq!(profile.free_orbit_count, Some(1));
        // N_x · M_x = N_x and im(N_x) ⊆ fixed space
        let norm = &profile.norm.matrix;
        assert_eq!(norm.mul(&m.matrix_of(&x)), norm.clone());
    }

    #[test]
    fn fixed_dim_equals_orbit_count_on_perm_modules() {
        let a6 = group(6, &["(0 1 2)", "(1 2 3 4 5)"]);
        let m = FpModule::perm_module(&a6, &[0, 1, 2, 3, 4, 5], 3).unwrap();
        for label in ["(0 1 2)", "(0 1 2)(3 4 5)"] {
            let x = parse_cycles(label, 6).unwrap();
            let profile = m.restriction_profile(&x).unwrap();
            let orbit_count =
                profile.fixed_basis_indices.as_ref().unwrap().len() + profile.free_orbit_count.unwrap();
            assert_eq!(profile.fixed_dim, orbit_count, "{label}");
            // orbit criterion agrees with the norm-rank criterion
            let orbit_free = profile.fixed_basis_indices.as_ref().unwrap().is_empty();
            assert_eq!(profile.is_free, orbit_free, "{label}");
        }
    }

    #[test]
    fn restriction_rejects_wrong_order() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let m = FpModule::perm_module(&s3, &[0, 1, 2], 3).unwrap();
        let t = parse_cycles("(0 1)", 3).unwrap();
        assert!(m.restriction_profile(&t).is_err());
    }

    #[test]
    fn orbit_and_span_of_basis_vector() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let m = FpModule::perm_module(&s3, &[0, 1, 2], 3).unwrap();
        let (orbit, spin) = m.orbit_and_span(&[1, 0, 0], &caps()).unwrap();
        // the basis vectors form one orbit; the spin is the whole module
        assert_eq!(orbit.len(), 3);
        assert_eq!(spin.len(), 3);
        // spin contains the seed vector
        let mut r = vec![1, 0, 0];
        reduce_against(3, &mut r, &spin);
        assert!(r.iter().all(|&x| x == 0));
    }

    #[test]
    fn spin_is_invariant_and_contains_vector() {
        let s3 = group(3, &["(0 1 2)", "(0 1)"]);
        let m = FpModule::perm_module(&s3, &[0, 1, 2], 3).unwrap();
        let v = vec![1, 0, 0];
        let spin = m.spin(&v);
        // v reduces to zero against its spin
        let mut r = v.clone();
        reduce_against(3, &mut r, &spin);
        assert!(r.iter().all(|&x| x == 0));
        // invariance: images of basis vectors stay in the span
        for b in &spin {
            for g in &m.generator_action {
                let mut image = g.apply(b);
                reduce_against(3, &mut image, &spin);
                assert!(image.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn trivial_action_on_dim_2_is_reducible() {
        let t = group(4, &["(0 1)(2 3)"]);
        // module on 2 fixed points of a transposition pair... use explicit
        // trivial action: identity generators on 2 points
        let z = GeneratedGroup::from_generators(vec![], 2).unwrap();
        let m = FpModule::perm_module(&z, &[0, 1], 3).unwrap();
        assert!(!m.is_irreducible_brute().unwrap());
        let _ = t;
    }

    #[test]
    fn dimension_one_is_irreducible() {
        let z = GeneratedGroup::from_generators(vec![], 1).unwrap();
        let m = FpModule::perm_module(&z, &[0], 3).unwrap();
        assert!(m.is_irreducible_brute().unwrap());
    }

    #[test]
    fn irreducibility_cap_refusal() {
        let z = GeneratedGroup::from_generators(vec![], 8).unwrap();
        let m = FpModule::perm_module(&z, &[0, 1, 2, 3, 4, 5, 6, 7], 3).unwrap();
        assert!(m.is_irreducible_brute().unwrap_err().is_refusal());
    }

    #[test]
    fn conjugation_module_of_klein_group() {
        // V4 ⊲ S4, conjugation action of Sylow-2 normalizer on V4
        let s4 = group(4, &["(0 1 2 3)", "(0 1)"]);
        let v4 = group(4, &["(0 1)(2 3)", "(0 2)(1 3)"]);
        let m = FpModule::conjugation_module(&v4, s4.generators(), 2, &caps()).unwrap();
        assert_eq!(m.dim, 2);
        // S4 permutes the three involutions transitively: irreducible F2-module
        assert!(m.is_irreducible_brute().unwrap());
        // composition law holds on the conjugation source too
        let a = &s4.generators()[0];
        let b = &s4.generators()[1];
        assert_eq!(m.matrix_of(&a.then(b)), m.matrix_of(a).mul(&m.matrix_of(b)));
    }

    #[test]
    fn solve_and_null_space() {
        // over F3: x + 2y = 1, 2x + y = 2 ⇒ x = 1, y = 0
        let mut m = FpMatrix::zero(3, 2, 2);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 1);
        let x = m.solve(&[1, 2]).unwrap();
        assert_eq!(m.apply(&x), vec![1, 2]);
        // singular system with no solution
        let mut s = FpMatrix::zero(3, 2, 2);
        s.set(0, 0, 1);
        s.set(0, 1, 1);
        s.set(1, 0, 2);
        s.set(1, 1, 2);
        assert!(s.solve(&[1, 0]).is_none());
        assert_eq!(s.null_space().len(), 1);
        // null space vectors actually die
        for v in s.null_space() {
            assert!(s.apply(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn block_module_from_scalar_classes() {
        // Z4 = ⟨(0 1 2 3)⟩ acting on 4 points; blocks {0,2},{1,3} are
        // permuted, giving a 2-dimensional quotient module
        let z4 = group(4, &["(0 1 2 3)"]);
        let m = FpModule::block_module(&z4, vec![vec![0, 2], vec![1, 3]], 3).unwrap();
        assert_eq!(m.dim, 2);
        let g = parse_cycles("(0 1 2 3)", 4).unwrap();
        let v = m.apply_left(&g, &[1, 0]);
        assert_eq!(v, vec![0, 1]);
    }
}
