//! Classical matrix groups realized as permutation groups.
//!
//! Matrices act on **row** vectors, `v ↦ v·M`, so that the matrix product
//! `M₁·M₂` induces the left-to-right composition of the two point
//! permutations — the same convention the rest of the crate uses.
//!
//! Generator choices: SL via super/subdiagonal transvections over a field
//! basis, GL adds one primitive scalar in the corner, Sp₄ via symplectic
//! transvections, SU₃ via the unipotent root subgroup and the Weyl
//! reflection. Every realization is validated against the classical order
//! formula, so an under-generating set cannot slip through.

pub mod field;

pub use field::FieldSpec;

use crate::caps::Caps;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::perm::Permutation;
use crate::Result;
use num_bigint::BigUint;
use num_traits::One;
use std::collections::HashMap;

/// A square matrix over `F_q`, entries row-major in field encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub n: usize,
    pub entries: Vec<usize>,
}

impl Matrix {
    pub fn identity(n: usize) -> Matrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix, f: &FieldSpec) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix {
            n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, b)));
                }
            }
        }
        out
    }

    /// Row action `v ↦ v·M`.
    pub fn apply_row(&self, v: &[usize], f: &FieldSpec) -> Vec<usize> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for j in 0..n {
                let m = self.get(i, j);
                if m != 0 {
                    out[j] = f.add(out[j], f.mul(vi, m));
                }
            }
        }
        out
    }

    pub fn determinant(&self, f: &FieldSpec) -> usize {
        // Gaussian elimination over F_q
        let n = self.n;
        let mut m = self.clone();
        let mut det = 1;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m.get(r, col) != 0);
            let pivot = match pivot {
                Some(r) => r,
                None => return 0,
            };
            if pivot != col {
                for j in 0..n {
                    let a = m.get(col, j);
                    let b = m.get(pivot, j);
                    m.set(col, j, b);
                    m.set(pivot, j, a);
                }
                det = f.neg(det);
            }
            let lead = m.get(col, col);
            det = f.mul(det, lead);
            let lead_inv = f.inv(lead);
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), lead_inv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        det
    }

    /// Entry-wise image under `x ↦ x^k` (used for Hermitian conjugation).
    pub fn power_entries(&self, k: u64, f: &FieldSpec) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|&e| f.pow(e, k)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut out = Matrix {
            n,
            entries: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }
}

/// Supported classical families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Gl(usize),
    Sl(usize),
    Psl(usize),
    Sp4,
    Su3,
}

/// A classical group specification: family over `F_q` (the SU₃ matrices
/// live over `F_(q²)` internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroupSpec {
    pub family: Family,
    pub q: usize,
}

/// Point actions for [`permutation_image`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixAction {
    /// All nonzero row vectors (always faithful).
    NonzeroVectors,
    /// Projective points; kernel is the scalar subgroup.
    ProjectivePoints,
    /// Isotropic projective points of the stored form (SU₃ only).
    IsotropicPoints,
}

/// Parses corpus spec strings such as `SL(2,19)`, `PSL(3,4)`,
/// `SU(3,3):isotropic`, `Sp(4,3)`.
pub fn parse_spec(text: &str) -> Result<(MatrixGroupSpec, MatrixAction)> {
    let (head, action) = match text.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a.trim())),
        None => (text.trim(), None),
    };
    let open = head
        .find('(')
        .ok_or_else(|| Error::Parse(format!("bad group spec {text:?}")))?;
    let close = head
        .rfind(')')
        .ok_or_else(|| Error::Parse(format!("bad group spec {text:?}")))?;
    let name = head[..open].trim();
    let args: Vec<usize> = head[open + 1..close]
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad argument in {text:?}")))
        })
        .collect::<Result<_>>()?;
    if args.len() != 2 {
        return Err(Error::Parse(format!("expected NAME(n,q) in {text:?}")));
    }
    let (dim, q) = (args[0], args[1]);
    let family = match (name.to_ascii_uppercase().as_str(), dim) {
        ("GL", n) => Family::Gl(n),
        ("SL", n) => Family::Sl(n),
        ("PSL", n) => Family::Psl(n),
        ("SP", 4) => Family::Sp4,
        ("SU", 3) => Family::Su3,
        (other, n) => {
            return Err(Error::Unsupported(format!(
                "matrix family {other}({n},·) is not supported"
            )))
        }
    };
    let action = match action {
        None => default_action(&family),
        Some("vectors") => MatrixAction::NonzeroVectors,
        Some("projective") => MatrixAction::ProjectivePoints,
        Some("isotropic") => MatrixAction::IsotropicPoints,
        Some(other) => return Err(Error::Parse(format!("unknown action {other:?}"))),
    };
    Ok((MatrixGroupSpec { family, q }, action))
}

fn default_action(family: &Family) -> MatrixAction {
    match family {
        Family::Psl(_) => MatrixAction::ProjectivePoints,
        Family::Su3 => MatrixAction::IsotropicPoints,
        _ => MatrixAction::NonzeroVectors,
    }
}

/// The classical order of the **matrix** group (before any action kernel).
pub fn classical_order(spec: &MatrixGroupSpec) -> BigUint {
    let q = BigUint::from(spec.q);
    let one = BigUint::one();
    let qp = |k: u32| q.pow(k);
    match spec.family {
        Family::Gl(n) => {
            let mut order = BigUint::one();
            for k in 0..n as u32 {
                order *= qp(n as u32) - qp(k);
            }
            order
        }
        Family::Sl(n) | Family::Psl(n) => {
            let gl = classical_order(&MatrixGroupSpec {
                family: Family::Gl(n),
                q: spec.q,
            });
            let sl = gl / (&q - &one);
            match spec.family {
                Family::Sl(_) => sl,
                _ => sl / BigUint::from(num_integer::gcd(n, spec.q - 1)),
            }
        }
        Family::Sp4 => qp(4) * (qp(2) - &one) * (qp(4) - &one),
        Family::Su3 => qp(3) * (qp(2) - &one) * (qp(3) + &one),
    }
}

/// The matrix dimension and the field the matrices live over.
fn matrix_field(spec: &MatrixGroupSpec) -> Result<(usize, FieldSpec)> {
    let (p, n_ext) = split_prime_power(spec.q)?;
    match &spec.family {
        Family::Gl(n) | Family::Sl(n) | Family::Psl(n) => {
            if *n < 2 {
                return Err(Error::Unsupported("dimension must be ≥ 2".into()));
            }
            Ok((*n, FieldSpec::new(p, n_ext)?))
        }
        Family::Sp4 => Ok((4, FieldSpec::new(p, n_ext)?)),
        // SU₃(q) matrices have entries in F_(q²)
        Family::Su3 => Ok((3, FieldSpec::new(p, 2 * n_ext)?)),
    }
}

fn split_prime_power(q: usize) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::Input(format!("{q} is not a prime power")));
    }
    let mut p = 2usize;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut n = 0;
            while m % p == 0 {
                m /= p;
                n += 1;
            }
            if m != 1 {
                return Err(Error::Input(format!("{q} is not a prime power")));
            }
            return Ok((p as u64, n));
        }
        p += 1;
    }
    Ok((q as u64, 1))
}

/// Generator matrices for a classical family, together with the stored
/// bilinear/Hermitian form where one applies.
#[derive(Debug)]
pub struct ClassicalGenerators {
    pub matrices: Vec<Matrix>,
    pub field: FieldSpec,
    pub dim: usize,
    /// Form matrix for Sp₄ (alternating) and SU₃ (Hermitian).
    pub form: Option<Matrix>,
}

/// Builds generators: SL via elementary transvections over a field basis,
/// GL with an extra primitive scalar generator, Sp₄ via symplectic
/// transvections, SU₃ via root-subgroup elements and the Weyl reflection.
pub fn classical_generators(spec: &MatrixGroupSpec) -> Result<ClassicalGenerators> {
    let (dim, f) = matrix_field(spec)?;
    match &spec.family {
        Family::Sl(_) | Family::Psl(_) => {
            let matrices = sl_generators(dim, &f);
            Ok(ClassicalGenerators {
                matrices,
                field: f,
                dim,
                form: None,
            })
        }
        Family::Gl(_) => {
            let mut matrices = sl_generators(dim, &f);
            let mut scalar = Matrix::identity(dim);
            scalar.set(0, 0, f.primitive_element());
            matrices.push(scalar);
            Ok(ClassicalGenerators {
                matrices,
                field: f,
                dim,
                form: None,
            })
        }
        Family::Sp4 => {
            let form = symplectic_form(&f);
            let matrices = sp4_generators(&f, &form);
            Ok(ClassicalGenerators {
                matrices,
                field: f,
                dim,
                form: Some(form),
            })
        }
        Family::Su3 => {
            let form = hermitian_form();
            let matrices = su3_generators(spec.q, &f)?;
            Ok(ClassicalGenerators {
                matrices,
                field: f,
                dim,
                form: Some(form),
            })
        }
    }
}

/// Field basis `1, x, x², …` as encoded elements.
fn field_basis(f: &FieldSpec) -> Vec<usize> {
    (0..f.n).map(|k| (f.p as usize).pow(k as u32)).collect()
}

fn sl_generators(n: usize, f: &FieldSpec) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        for &b in &field_basis(f) {
            let mut up = Matrix::identity(n);
            up.set(i, i + 1, b);
            gens.push(up);
            let mut down = Matrix::identity(n);
            down.set(i + 1, i, b);
            gens.push(down);
        }
    }
    gens
}

/// Alternating form: B(e_i, e_(3−i)) = 1 for i < 2, −1 for i ≥ 2.
fn symplectic_form(f: &FieldSpec) -> Matrix {
    let mut form = Matrix {
        n: 4,
        entries: vec![0; 16],
    };
    form.set(0, 3, 1);
    form.set(1, 2, 1);
    form.set(2, 1, f.neg(1));
    form.set(3, 0, f.neg(1));
    form
}

/// Symplectic transvection `x ↦ x + λ·B(x, v)·v` as a row-action matrix.
fn symplectic_transvection(v: &[usize], lambda: usize, form: &Matrix, f: &FieldSpec) -> Matrix {
    let n = v.len();
    let mut m = Matrix::identity(n);
    for i in 0..n {
        // B(e_i, v) = Σ_j F[i][j] v[j]
        let mut b = 0;
        for j in 0..n {
            b = f.add(b, f.mul(form.get(i, j), v[j]));
        }
        let coeff = f.mul(lambda, b);
        for j in 0..n {
            let cur = m.get(i, j);
            m.set(i, j, f.add(cur, f.mul(coeff, v[j])));
        }
    }
    m
}

fn sp4_generators(f: &FieldSpec, form: &Matrix) -> Vec<Matrix> {
    // transvection directions: all nonzero 0/1 vectors; the order check
    // downstream guarantees this set generates
    let mut gens = Vec::new();
    for mask in 1u32..16 {
        let v: Vec<usize> = (0..4).map(|k| ((mask >> k) & 1) as usize).collect();
        for &b in &field_basis(f) {
            let t = symplectic_transvection(&v, b, form, f);
            if t != Matrix::identity(4) {
                gens.push(t);
            }
        }
    }
    gens
}

/// Hermitian form: the antidiagonal identity.
fn hermitian_form() -> Matrix {
    let mut form = Matrix {
        n: 3,
        entries: vec![0; 9],
    };
    form.set(0, 2, 1);
    form.set(1, 1, 1);
    form.set(2, 0, 1);
    form
}

/// SU₃(q) generators over `F_(q²)` (row convention): the lower unitriangular
/// root elements u(a,b) with trace condition Tr(b) = −N(a), plus the Weyl
/// element antidiag(1, −1, 1).
fn su3_generators(q: usize, f: &FieldSpec) -> Result<Vec<Matrix>> {
    let q0 = q as u64; // conjugation is x ↦ x^q
    let conj = |x: usize| f.pow(x, q0);
    let trace = |x: usize| f.add(x, conj(x));
    let norm = |x: usize| f.mul(x, conj(x));

    // b0 with Tr(b0) = 1, by deterministic scan
    let b0 = (0..f.q)
        .find(|&x| trace(x) == 1)
        .ok_or_else(|| Error::Verification("trace is surjective".into()))?;

    // u(a, b): rows [[1,0,0],[a,1,0],[b,−ā,1]] with Tr(b) + N(a) = 0
    let u = |a: usize, b: usize| -> Matrix {
        let mut m = Matrix::identity(3);
        m.set(1, 0, a);
        m.set(2, 0, b);
        m.set(2, 1, f.neg(conj(a)));
        m
    };

    let mut gens = Vec::new();
    for &a in &field_basis(f) {
        // b = −N(a)·b0 satisfies the trace condition
        let b = f.neg(f.mul(norm(a), b0));
        gens.push(u(a, b));
    }
    // central root elements u(0, c), one per nonzero trace-zero c (at most
    // q − 1 of them at the field sizes the degree cap admits)
    for c in 1..f.q {
        if trace(c) == 0 {
            gens.push(u(0, c));
        }
    }
    // Weyl element: antidiag(1, −1, 1), det 1, form-preserving
    let mut w = Matrix {
        n: 3,
        entries: vec![0; 9],
    };
    w.set(0, 2, 1);
    w.set(1, 1, f.neg(1));
    w.set(2, 0, 1);
    gens.push(w);
    Ok(gens)
}

/// A matrix group realized as a permutation group on explicit points.
#[derive(Debug)]
pub struct Realization {
    pub spec: MatrixGroupSpec,
    pub action: MatrixAction,
    pub group: GeneratedGroup,
    /// Generator matrices, parallel to `group.generators()`.
    pub matrices: Vec<Matrix>,
    /// The point vectors, in index order.
    pub points: Vec<Vec<usize>>,
    pub field: FieldSpec,
    /// Order of the matrix group (the permutation image divides it).
    pub matrix_group_order: BigUint,
}

impl Realization {
    /// Groups the points of a vector action into projective classes
    /// (scalar orbits), for building projective modules over this group.
    pub fn projective_blocks(&self) -> Result<Vec<Vec<usize>>> {
        if self.action != MatrixAction::NonzeroVectors {
            return Err(Error::Input(
                "projective blocks need the nonzero-vectors action".into(),
            ));
        }
        let index: HashMap<&Vec<usize>, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; self.points.len()];
        for start in 0..self.points.len() {
            if assigned[start] {
                continue;
            }
            let mut block = Vec::new();
            for lambda in 1..self.field.q {
                let scaled: Vec<usize> = self.points[start]
                    .iter()
                    .map(|&c| self.field.mul(c, lambda))
                    .collect();
                let idx = index[&scaled];
                if !assigned[idx] {
                    assigned[idx] = true;
                    block.push(idx);
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Ok(blocks)
    }
}

/// Builds the permutation image of a classical group under the given action.
pub fn permutation_image(
    spec: &MatrixGroupSpec,
    action: MatrixAction,
    caps: &Caps,
) -> Result<Realization> {
    let generators = classical_generators(spec)?;
    let f = &generators.field;
    let dim = generators.dim;
    let points: Vec<Vec<usize>> = match action {
        MatrixAction::NonzeroVectors => nonzero_vectors(dim, f),
        MatrixAction::ProjectivePoints => projective_points(dim, f),
        MatrixAction::IsotropicPoints => {
            let form = generators
                .form
                .as_ref()
                .ok_or_else(|| Error::Input("isotropic action needs a stored form".into()))?;
            if !matches!(spec.family, Family::Su3) {
                return Err(Error::Unsupported(
                    "isotropic-points action is defined for SU₃ only".into(),
                ));
            }
            let conj_pow = spec.q as u64;
            projective_points(dim, f)
                .into_iter()
                .filter(|v| hermitian_value(v, v, form, f, conj_pow) == 0)
                .collect()
        }
    };
    if points.len() > caps.max_degree {
        return Err(Error::cap(
            format!("point set for {spec:?}"),
            points.len(),
            caps.max_degree,
            crate::caps::ENV_MAX_DEGREE,
        ));
    }
    let index: HashMap<Vec<usize>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let canonical = |mut v: Vec<usize>| -> Vec<usize> {
        if action != MatrixAction::NonzeroVectors {
            let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero point");
            if lead != 1 {
                let inv = f.inv(lead);
                for c in v.iter_mut() {
                    *c = f.mul(*c, inv);
                }
            }
        }
        v
    };
    let mut perm_gens = Vec::new();
    for m in &generators.matrices {
        let images: Vec<usize> = points
            .iter()
            .map(|v| {
                let w = canonical(m.apply_row(v, f));
                *index
                    .get(&w)
                    .expect("the action preserves the point set")
            })
            .collect();
        perm_gens.push(Permutation::from_images(images)?);
    }
    let group = GeneratedGroup::from_generators(perm_gens, points.len())?;
    Ok(Realization {
        spec: spec.clone(),
        action,
        group,
        matrices: generators.matrices,
        points,
        field: generators.field,
        matrix_group_order: classical_order(spec),
    })
}

fn nonzero_vectors(dim: usize, f: &FieldSpec) -> Vec<Vec<usize>> {
    let mut points = Vec::new();
    let total = (f.q as u64).pow(dim as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(dim);
        let mut c = code;
        for _ in 0..dim {
            v.push((c % f.q as u64) as usize);
            c /= f.q as u64;
        }
        points.push(v);
    }
    points
}

fn projective_points(dim: usize, f: &FieldSpec) -> Vec<Vec<usize>> {
    nonzero_vectors(dim, f)
        .into_iter()
        .filter(|v| v.iter().copied().find(|&c| c != 0) == Some(1))
        .collect()
}

/// Hermitian value `u F v̄ᵀ` with conjugation `x ↦ x^conj_pow`.
fn hermitian_value(u: &[usize], v: &[usize], form: &Matrix, f: &FieldSpec, conj_pow: u64) -> usize {
    let mut acc = 0;
    for i in 0..u.len() {
        if u[i] == 0 {
            continue;
        }
        for j in 0..v.len() {
            let fij = form.get(i, j);
            if fij == 0 || v[j] == 0 {
                continue;
            }
            acc = f.add(acc, f.mul(u[i], f.mul(fij, f.pow(v[j], conj_pow))));
        }
    }
    acc
}

/// Checks `M F Mᵀ = F` (alternating) or `M F M̄ᵀ = F` (Hermitian, when
/// `conj_pow > 1`) under the row convention.
pub fn preserves_form(m: &Matrix, form: &Matrix, f: &FieldSpec, conj_pow: u64) -> bool {
    let mc = if conj_pow > 1 {
        m.power_entries(conj_pow, f)
    } else {
        m.clone()
    };
    m.mul(form, f).mul(&mc.transpose(), f) == *form
}
