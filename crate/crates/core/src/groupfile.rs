//! The group text format.
//!
//! ```text
//! # comment lines start with '#'
//! degree 65
//! (0 1 2)(3 4)
//! (5 6 7 8 9)
//! ```
//!
//! Line 1 (after comments/blank lines) is `degree N`; every subsequent
//! nonempty, non-comment line is one generator in disjoint-cycle notation
//! over 0-based points.

use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::perm::{parse_cycles, Permutation};
use crate::Result;

/// Parses the group text format.
pub fn parse_group_text(text: &str) -> Result<GeneratedGroup> {
    let mut degree: Option<usize> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = line.strip_prefix("degree").ok_or_else(|| {
                    Error::Parse(format!("line {}: expected `degree N`, got {line:?}", lineno + 1))
                })?;
                let n: usize = rest.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad degree in {line:?}", lineno + 1))
                })?;
                degree = Some(n);
            }
            Some(n) => {
                let g = parse_cycles(line, n).map_err(|e| {
                    Error::Parse(format!("line {}: {e}", lineno + 1))
                })?;
                gens.push(g);
            }
        }
    }
    let degree = degree.ok_or_else(|| Error::Parse("missing `degree N` line".into()))?;
    GeneratedGroup::from_generators(gens, degree)
}

/// Writes a group in the text format, one generator per line.
pub fn write_group_text(group: &GeneratedGroup, header_comments: &[&str]) -> String {
    let mut out = String::new();
    for c in header_comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("degree {}\n", group.degree()));
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_roundtrip() {
        let text = "# symmetric group on five points\ndegree 5\n(0 1 2 3 4)\n(0 1)\n";
        let g = parse_group_text(text).unwrap();
        assert_eq!(g.order_u64(), Some(120));
        let written = write_group_text(&g, &["symmetric group on five points"]);
        let again = parse_group_text(&written).unwrap();
        assert!(g.same_group_as(&again));
    }

    #[test]
    fn rejects_missing_degree() {
        assert!(parse_group_text("(0 1 2)\n").is_err());
        assert!(parse_group_text("# only comments\n").is_err());
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(parse_group_text("degree 3\n(0 5)\n").is_err());
    }
}
