//! Exact computation with strongly closed subgroups of finite groups.
//!
//! The crate is organized around a small permutation-group kernel
//! ([`perm`], [`bsgs`], [`group`]) on top of which sit:
//!
//! * [`sylow`] — Sylow subgroup construction and p-group profiles
//!   (center, Ω₁, Frattini subgroup, exponent, homocyclic invariants);
//! * [`closure`] — strong-closure testing and the closure fixpoint, ω̄S,
//!   minimal strongly closed subgroups, the 𝒪_A(G) operator, and
//!   fusion-control verdicts with replayable witnesses;
//! * [`matgroup`] — finite fields and classical matrix groups realized as
//!   permutation groups (SL/GL/PSL, Sp₄, SU₃);
//! * [`fpmod`] — modules over prime fields with a group action: permutation
//!   modules, fixed points, norm maps, restriction profiles, brute
//!   irreducibility;
//! * [`lie`] — cyclotomic Sylow-shape prediction for Lie-type groups in
//!   cross characteristic and the classification verdict oracle;
//! * [`ext`] — split and 2-cocycle extension groups, including the
//!   coinduced ("half-split") construction;
//! * [`corpus`], [`analyze`], [`report`] — the built-in group corpus,
//!   orchestrated analyses, and serializable reports.
//!
//! All computations are exact (integer orders are arbitrary precision) and
//! deterministic: the same inputs produce the same reports, byte for byte.

pub mod analyze;
pub mod bsgs;
pub mod caps;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod ext;
pub mod fpmod;
pub mod group;
pub mod groupfile;
pub mod lie;
pub mod matgroup;
pub mod perm;
pub mod report;
pub mod sylow;

pub use caps::Caps;

pub use error::Error;
pub use group::{ConjugacyClassTable, CosetAction, GeneratedGroup};
pub use perm::Permutation;


/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
