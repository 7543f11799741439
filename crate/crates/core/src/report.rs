//! Serializable analysis reports.
//!
//! Reports are deterministic: field order is fixed by the struct layout,
//! every embedded group quantity is computed with deterministic
//! enumeration, and the timing field is kept out of round-trip
//! comparisons. JSON round-trips byte-identically modulo `timing_ms`.

use crate::closure::{ClosureReport, WitnessSummary};
use crate::lie::{SylowShape, Verdict};
use crate::sylow::PGroupSummary;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Group identity block of a report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupMeta {
    pub name: String,
    pub degree: usize,
    pub order: String,
}

/// A report section that may have been refused under the caps.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Section<T> {
    Ok { value: T },
    Refused { reason: String },
}

impl<T> Section<T> {
    pub fn from_result(result: crate::Result<T>) -> crate::Result<Section<T>> {
        match result {
            Ok(value) => Ok(Section::Ok { value }),
            Err(e) if e.is_refusal() => Ok(Section::Refused {
                reason: e.to_string(),
            }),
            Err(e) => Err(e),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Section::Ok { value } => Some(value),
            Section::Refused { .. } => None,
        }
    }
}

/// Normalizer comparisons for the strongly closed subgroups found.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct NormalizerReport {
    pub sylow_normalizer_order: String,
    pub per_subgroup: Vec<SubgroupNormalizer>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SubgroupNormalizer {
    pub subgroup_order: String,
    pub normalizer_order: String,
    pub equals_sylow_normalizer: bool,
}

/// Predictor-versus-brute comparison for a Lie-tagged group.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub spec: String,
    pub p: u64,
    pub predicted: SylowShape,
    /// Brute profile data; absent when the spec is not realizable at desk
    /// scale (then the report is predictor-only and flagged).
    pub brute: Option<PGroupSummary>,
    pub predictor_only: bool,
    pub agree: Option<bool>,
}

/// The full per-(G, p) analysis report.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AnalysisReport {
    pub group: GroupMeta,
    pub p: u64,
    pub profile: Section<PGroupSummary>,
    pub closure: Section<ClosureReport>,
    pub normalizers: Section<NormalizerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lie_crosscheck: Option<CrosscheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl AnalysisReport {
    /// The report with timing removed, for byte-identical comparisons.
    pub fn without_timing(mut self) -> AnalysisReport {
        self.timing_ms = None;
        self
    }
}

/// Verdict-versus-brute agreement for one corpus entry.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationCheck {
    pub group: GroupMeta,
    pub p: u64,
    pub verdict: Verdict,
    /// Brute finding: a proper nontrivial strongly closed subgroup that is
    /// not Sylow in its normal closure.
    pub brute_has_proper: Option<bool>,
    pub brute_orders: Vec<String>,
    pub agree: Option<bool>,
}

fn fmt_witness(f: &mut fmt::Formatter<'_>, w: &WitnessSummary) -> fmt::Result {
    writeln!(
        f,
        "    witness: {}^{} = {} (replayable)",
        w.a, w.conjugator, w.b
    )
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (degree {}, order {}), p = {}",
            self.group.name, self.group.degree, self.group.order, self.p
        )?;
        match &self.profile {
            Section::Ok { value } => {
                writeln!(
                    f,
                    "  Sylow {}-subgroup: order {}, exponent {}, Z = {}, Ω₁ = {}, Φ = {}",
                    value.p,
                    value.order,
                    value.exponent,
                    value.center_order,
                    value.omega1_order,
                    value.frattini_order
                )?;
                let kind = if value.special {
                    "special".to_string()
                } else if let Some((r, e)) = value.homocyclic {
                    format!("homocyclic rank {r} exponent {e}")
                } else if value.abelian {
                    format!("abelian {:?}", value.abelian_invariants.as_deref().unwrap_or(&[]))
                } else {
                    "non-abelian".to_string()
                };
                writeln!(f, "  shape: {kind}")?;
            }
            Section::Refused { reason } => writeln!(f, "  profile refused: {reason}")?,
        }
        match &self.closure {
            Section::Ok { value } => {
                writeln!(
                    f,
                    "  ω̄S order {} ({})",
                    value.omega_bar_order,
                    if value.omega_bar_equals_sylow {
                        "= S"
                    } else {
                        "≠ S"
                    }
                )?;
                let orders: Vec<&str> =
                    value.strongly_closed.iter().map(|e| e.order.as_str()).collect();
                writeln!(
                    f,
                    "  strongly closed orders{}: {}",
                    if value.complete { "" } else { " (partial)" },
                    orders.join(", ")
                )?;
                writeln!(f, "  minimal strongly closed orders: {}", value.minimal_orders.join(", "))?;
                for entry in &value.strongly_closed {
                    writeln!(
                        f,
                        "    A of order {}: 𝒪_A(G) order {}, A {} Sylow in ⟨A^G⟩",
                        entry.order,
                        entry.script_o_order,
                        if entry.sylow_in_normal_closure { "is" } else { "is not" }
                    )?;
                }
                writeln!(
                    f,
                    "  N_G(S) controls fusion in S: {}",
                    value.fusion_control_sylow_normalizer
                )?;
                if let Some(w) = &value.fusion_witness {
                    fmt_witness(f, w)?;
                }
            }
            Section::Refused { reason } => writeln!(f, "  closure analysis refused: {reason}")?,
        }
        match &self.normalizers {
            Section::Ok { value } => {
                writeln!(f, "  |N_G(S)| = {}", value.sylow_normalizer_order)?;
                for n in &value.per_subgroup {
                    writeln!(
                        f,
                        "  |N_G(A)| = {} for |A| = {}{}",
                        n.normalizer_order,
                        n.subgroup_order,
                        if n.equals_sylow_normalizer {
                            " (= N_G(S))"
                        } else {
                            ""
                        }
                    )?;
                }
            }
            Section::Refused { reason } => writeln!(f, "  normalizers refused: {reason}")?,
        }
        if let Some(cc) = &self.lie_crosscheck {
            writeln!(
                f,
                "  predictor: {} at p={} → Sylow order {}{}",
                cc.spec,
                cc.p,
                cc.predicted.order,
                match cc.agree {
                    Some(true) => ", agrees with the brute profile",
                    Some(false) => ", DISAGREES with the brute profile",
                    None => " (predictor-only)",
                }
            )?;
        }
        if let Some(ms) = self.timing_ms {
            writeln!(f, "  elapsed: {ms} ms")?;
        }
        Ok(())
    }
}

impl fmt::Display for ClassificationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} at p = {}: verdict {}",
            self.group.name,
            self.p,
            if self.verdict.has_proper_strongly_closed {
                "has a proper strongly closed subgroup"
            } else {
                "no proper strongly closed subgroup"
            }
        )?;
        for shape in &self.verdict.shapes {
            writeln!(f, "  admissible: {} (order {})", shape.description, shape.order)?;
        }
        match (self.brute_has_proper, self.agree) {
            (Some(found), Some(agree)) => writeln!(
                f,
                "  brute search: {} — {}",
                if found { "found" } else { "none found" },
                if agree { "AGREES" } else { "MISMATCH" }
            ),
            _ => writeln!(f, "  brute search skipped under caps"),
        }
    }
}
