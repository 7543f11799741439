//! Permutations on the points `0..degree`.
//!
//! Composition is **left-to-right** throughout the crate:
//! `(g.then(h))(ω) = h(g(ω))`, i.e. `g` acts first. Conjugation follows the
//! same reading, `a^g = g⁻¹·a·g`, so that `a^(g·h) = (a^g)^h`. Every module
//! in the crate inherits this convention; mixing conventions is the classic
//! way to wreck cocycle bookkeeping downstream.

use crate::error::Error;
use crate::Result;
use std::fmt;

/// Point indices are stored as `u16`; degrees must stay below this bound.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection on `{0, …, degree−1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} out of range");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image vector, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("degree {n} out of range")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    ///
    /// Cycles need not actually be disjoint; later cycles are applied after
    /// earlier ones (left-to-right), but input from the group file format is
    /// always disjoint.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {pt} out of range for degree {degree}"
                    )));
                }
                let next = cycle[(k + 1) % cycle.len()];
                images[pt] = next;
            }
            let one = Permutation::from_images(images)?;
            perm = perm.then(&one);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self · other` under the left-to-right convention: `self` acts first.
    ///
    /// Panics on degree mismatch; use [`Permutation::compose`] at the public
    /// surface where the degrees are not structurally guaranteed equal.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let images = self
            .images
            .iter()
            .map(|&x| other.images[x as usize])
            .collect();
        Permutation { images }
    }

    /// `self · other` with a degree check: `(g·h)(ω) = h(g(ω))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Conjugate `self^g = g⁻¹·self·g`.
    pub fn conjugated_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹·a·g)(ω) = g(a(g⁻¹(ω))); computed in one pass.
        assert_eq!(self.degree(), g.degree(), "degree mismatch");
        let mut images = vec![0u16; self.images.len()];
        for i in 0..self.images.len() {
            // point g(i) maps to g(self(i))
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                pt = self.images[pt] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// `self^k` for `k ≥ 0`, by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    /// Nontrivial cycles, each rotated to start at its least point, sorted
    /// by that point. Used for display and the group file format.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut cycles = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt);
                pt = self.images[pt] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Smallest point moved, or `None` for the identity.
    pub fn min_moved_point(&self) -> Option<usize> {
        (0..self.images.len()).find(|&i| self.images[i] as usize != i)
    }

    /// Raw image slice (read-only).
    pub fn images(&self) -> &[u16] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses cycle notation like `(0 1 2)(3 4)`, with points separated by
/// spaces or commas. `()` denotes the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let text = text.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    if text.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        if !rest[..open].trim().is_empty() {
            return Err(Error::Parse(format!("stray text before '(' in {text:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unmatched '(' in {text:?}")))?;
        let inner = &rest[open + 1..close];
        let points: Vec<usize> = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<_>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = rest[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // (0 1)·(1 2) = (0 2 1): image chase 0→1→2, 1→0→0, 2→2→1.
        let a = parse_cycles("(0 1)", 3).unwrap();
        let b = parse_cycles("(1 2)", 3).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, parse_cycles("(0 2 1)", 3).unwrap());
    }

    #[test]
    fn inverse_law_and_identity_law() {
        let g = parse_cycles("(0 3 1)(2 4)", 5).unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&g).unwrap(), g);
        assert_eq!(g.compose(&id).unwrap(), g);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn conjugation_composes() {
        let a = parse_cycles("(0 1 2)", 5).unwrap();
        let g = parse_cycles("(0 3)(1 4)", 5).unwrap();
        let h = parse_cycles("(2 3 4)", 5).unwrap();
        let gh = g.then(&h);
        assert_eq!(a.conjugated_by(&gh), a.conjugated_by(&g).conjugated_by(&h));
        // a^g = g⁻¹ a g computed longhand
        let longhand = g.inverse().then(&a).then(&g);
        assert_eq!(a.conjugated_by(&g), longhand);
    }

    #[test]
    fn orders() {
        assert_eq!(parse_cycles("(0 1 2)(3 4)", 5).unwrap().order(), 6);
        assert_eq!(Permutation::identity(4).order(), 1);
    }

    #[test]
    fn cycle_roundtrip_display() {
        let g = parse_cycles("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(g.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        let back = parse_cycles(&g.to_string(), 6).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn pow_matches_iterated_product() {
        let g = parse_cycles("(0 1 2 3 4)(5 6)", 7).unwrap();
        let mut acc = Permutation::identity(7);
        for k in 0..12u64 {
            assert_eq!(g.pow(k), acc);
            acc = acc.then(&g);
        }
    }

    proptest! {
        #[test]
        fn prop_group_laws(seed in proptest::collection::vec(0usize..100, 2..40)) {
            // Build two permutations of equal degree from sorting seeds.
            let n = seed.len();
            let mut a: Vec<usize> = (0..n).collect();
            a.sort_by_key(|&i| (seed[i], i));
            let mut b: Vec<usize> = (0..n).collect();
            b.sort_by_key(|&i| (seed[n - 1 - i], i));
            let g = perm(&a);
            let h = perm(&b);
            // associativity against a third element
            let k = g.then(&h);
            prop_assert_eq!(g.then(&h).then(&k), g.then(&h.then(&k)));
            // inverse and identity
            prop_assert!(g.then(&g.inverse()).is_identity());
            prop_assert!(g.inverse().then(&g).is_identity());
            // (gh)⁻¹ = h⁻¹g⁻¹
            prop_assert_eq!(g.then(&h).inverse(), h.inverse().then(&g.inverse()));
            // order divides degree! is too slow to check; order of g^k divides order of g
            let o = g.order();
            prop_assert!(g.pow(o).is_identity());
        }
    }
}
