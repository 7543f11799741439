//! Desk-scale resource caps.
//!
//! Every enumeration-based operation takes a [`Caps`] value and refuses —
//! with an explicit [`crate::Error::CapExceeded`] naming the size and the
//! cap — rather than silently grinding on an oversized input. The defaults
//! cover the whole built-in corpus; the environment variables
//! `SC_MAX_ELEMENTS`, `SC_MAX_PGROUP` and `SC_MAX_DEGREE` (and CLI flags)
//! override them.

/// Environment variable overriding [`Caps::max_elements`].
pub const ENV_MAX_ELEMENTS: &str = "SC_MAX_ELEMENTS";
/// Environment variable overriding [`Caps::max_pgroup`].
pub const ENV_MAX_PGROUP: &str = "SC_MAX_PGROUP";
/// Environment variable overriding [`Caps::max_degree`].
pub const ENV_MAX_DEGREE: &str = "SC_MAX_DEGREE";

/// Resource caps for enumeration-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order (or orbit/class size) that may be enumerated.
    pub max_elements: u64,
    /// Largest p-group order for census-based profiles and subgroup
    /// enumeration of Sylow subgroups.
    pub max_pgroup: u64,
    /// Largest permutation degree (also bounds coset-action indices).
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: 1_000_000,
            max_pgroup: 6561, // 3^8
            max_degree: 10_000,
        }
    }
}

impl Caps {
    /// Defaults adjusted by the `SC_*` environment variables, when set.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(v) = read_env_u64(ENV_MAX_ELEMENTS) {
            caps.max_elements = v;
        }
        if let Some(v) = read_env_u64(ENV_MAX_PGROUP) {
            caps.max_pgroup = v;
        }
        if let Some(v) = read_env_u64(ENV_MAX_DEGREE) {
            caps.max_degree = v as usize;
        }
        caps
    }

    pub fn with_max_elements(mut self, v: u64) -> Self {
        self.max_elements = v;
        self
    }

    pub fn with_max_pgroup(mut self, v: u64) -> Self {
        self.max_pgroup = v;
        self
    }

    pub fn with_max_degree(mut self, v: usize) -> Self {
        self.max_degree = v;
        self
    }
}

fn read_env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok().and_then(|s| s.trim().parse().ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let caps = Caps::default();
        assert_eq!(caps.max_elements, 1_000_000);
        assert_eq!(caps.max_pgroup, 6561);
        assert_eq!(caps.max_degree, 10_000);
    }
}
