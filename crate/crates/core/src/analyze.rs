//! Orchestrated analyses: Sylow profile, strong-closure report, normalizer
//! comparisons, predictor cross-checks, and classification verification.

use crate::caps::Caps;
use crate::closure::{
    all_strongly_closed_brute, fusion_control, is_strongly_closed, minimal_strongly_closed,
    omega_bar, script_o, ClosureReport, FusionMode, StronglyClosedEntry, WitnessSummary,
};
use crate::corpus::CorpusEntry;
use crate::error::Error;
use crate::group::GeneratedGroup;
use crate::lie::{strongly_closed_verdict, sylow_shape, LieFamily, LieSpec, VerdictInput};
use crate::matgroup::{parse_spec, permutation_image};
use crate::report::{
    AnalysisReport, ClassificationCheck, CrosscheckReport, GroupMeta, NormalizerReport, Section,
    SubgroupNormalizer,
};
use crate::sylow::{p_group_profile, sylow_subgroup};
use crate::Result;

/// Runs the full per-(G, p) analysis.
///
/// Cap refusals inside a section are recorded in the report rather than
/// aborting the whole analysis.
pub fn analyze(
    name: &str,
    group: &GeneratedGroup,
    entry: Option<&CorpusEntry>,
    p: u64,
    caps: &Caps,
) -> Result<AnalysisReport> {
    let start = std::time::Instant::now();
    let meta = GroupMeta {
        name: name.to_string(),
        degree: group.degree(),
        order: group.order().to_string(),
    };
    let s = sylow_subgroup(group, p, caps)?;
    let profile = Section::from_result(p_group_profile(&s, p, caps).map(|pr| pr.summary()))?;
    let closure = Section::from_result(closure_report(group, &s, p, caps))?;
    let normalizers = Section::from_result(normalizer_report(group, &s, p, caps))?;
    let lie_crosscheck = match entry.and_then(|e| e.lie) {
        Some(spec) if spec.q % p != 0 => Some(crosscheck_against(&spec, p, &s, caps)?),
        _ => None,
    };
    Ok(AnalysisReport {
        group: meta,
        p,
        profile,
        closure,
        normalizers,
        lie_crosscheck,
        timing_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn closure_report(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<ClosureReport> {
    let omega = omega_bar(g, s, p, caps)?;
    let minimal = minimal_strongly_closed(g, s, p, caps)?;
    // the complete list when the subgroup-enumeration cap admits it;
    // otherwise the computable sublist {1, minimal…, ω̄S, S}
    let (mut list, complete) = match all_strongly_closed_brute(g, s, caps) {
        Ok(list) => (list, true),
        Err(e) if e.is_refusal() => {
            let mut list = vec![GeneratedGroup::trivial(g.degree())];
            for m in &minimal {
                list.push(m.clone());
            }
            list.push(omega.clone());
            list.push(s.clone());
            list.retain({
                // dedupe by group equality, preserving order-sorted layout
                let mut kept: Vec<GeneratedGroup> = Vec::new();
                move |candidate| {
                    if kept.iter().any(|k| k.same_group_as(candidate)) {
                        false
                    } else {
                        kept.push(candidate.clone());
                        true
                    }
                }
            });
            list.sort_by(|a, b| a.order().cmp(b.order()));
            (list, false)
        }
        Err(e) => return Err(e),
    };
    // every listed subgroup must pass the closure test
    for a in &list {
        if is_strongly_closed(g, s, a, caps)?.is_err() {
            return Err(Error::Verification(format!(
                "listed subgroup of order {} is not strongly closed",
                a.order()
            )));
        }
    }
    list.sort_by(|a, b| a.order().cmp(b.order()));
    let mut entries = Vec::new();
    for a in &list {
        let o = script_o(g, a, p, caps)?;
        entries.push(StronglyClosedEntry {
            order: a.order().to_string(),
            generators: a.generators().iter().map(|x| x.to_string()).collect(),
            sylow_in_normal_closure: o.contains_subgroup(a),
            script_o_order: o.order().to_string(),
        });
    }
    let n_s = g.normalizer(s, caps)?;
    let control = fusion_control(g, s, &n_s, FusionMode::Element, caps)?;
    Ok(ClosureReport {
        p,
        sylow_order: s.order().to_string(),
        omega_bar_order: omega.order().to_string(),
        omega_bar_equals_sylow: omega.order() == s.order(),
        strongly_closed: entries,
        complete,
        minimal_orders: minimal.iter().map(|m| m.order().to_string()).collect(),
        fusion_control_sylow_normalizer: control.is_ok(),
        fusion_witness: control.err().as_ref().map(WitnessSummary::from),
    })
}

fn normalizer_report(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Result<NormalizerReport> {
    let n_s = g.normalizer(s, caps)?;
    let minimal = minimal_strongly_closed(g, s, p, caps)?;
    let mut per_subgroup = Vec::new();
    for a in &minimal {
        let n_a = g.normalizer(a, caps)?;
        per_subgroup.push(SubgroupNormalizer {
            subgroup_order: a.order().to_string(),
            normalizer_order: n_a.order().to_string(),
            equals_sylow_normalizer: n_a.same_group_as(&n_s),
        });
    }
    Ok(NormalizerReport {
        sylow_normalizer_order: n_s.order().to_string(),
        per_subgroup,
    })
}

/// Is the Lie spec realizable as a corpus-scale permutation group?
fn realize(spec: &LieSpec, caps: &Caps) -> Result<Option<GeneratedGroup>> {
    let text = match (spec.family, spec.twist) {
        (LieFamily::A(1), 1) => format!("SL(2,{})", spec.q),
        (LieFamily::A(2), 1) => format!("SL(3,{})", spec.q),
        (LieFamily::A(2), 2) => format!("SU(3,{}):isotropic", spec.q),
        (LieFamily::B(2), 1) | (LieFamily::C(2), 1) => format!("Sp(4,{}):vectors", spec.q),
        _ => return Ok(None),
    };
    let (mspec, action) = parse_spec(&text)?;
    match permutation_image(&mspec, action, caps) {
        Ok(real) => Ok(Some(real.group)),
        Err(e) if e.is_refusal() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Predictor-versus-brute cross-check for a Lie spec at `p`.
pub fn crosscheck(spec: &LieSpec, p: u64, caps: &Caps) -> Result<CrosscheckReport> {
    let predicted = sylow_shape(spec, p)?;
    match realize(spec, caps)? {
        Some(group) => {
            let s = sylow_subgroup(&group, p, caps)?;
            crosscheck_with_brute(spec, p, &s, predicted, caps)
        }
        None => Ok(CrosscheckReport {
            spec: spec.display_name(),
            p,
            predicted,
            brute: None,
            predictor_only: true,
            agree: None,
        }),
    }
}

/// Cross-check against an already-constructed Sylow subgroup.
fn crosscheck_against(
    spec: &LieSpec,
    p: u64,
    s: &GeneratedGroup,
    caps: &Caps,
) -> Result<CrosscheckReport> {
    let predicted = sylow_shape(spec, p)?;
    crosscheck_with_brute(spec, p, s, predicted, caps)
}

fn crosscheck_with_brute(
    spec: &LieSpec,
    p: u64,
    s: &GeneratedGroup,
    predicted: crate::lie::SylowShape,
    caps: &Caps,
) -> Result<CrosscheckReport> {
    let brute = p_group_profile(s, p, caps)?.summary();
    let mut agree = predicted.order == brute.order;
    if let Some(structure) = &predicted.structure {
        agree &= structure.abelian == brute.abelian;
        let predicted_homocyclic = structure
            .homocyclic
            .map(|(r, e)| (r as usize, e));
        if structure.abelian {
            agree &= predicted_homocyclic == brute.homocyclic;
        }
    }
    Ok(CrosscheckReport {
        spec: spec.display_name(),
        p,
        predicted,
        brute: Some(brute),
        predictor_only: false,
        agree: Some(agree),
    })
}

/// Verifies the classification verdict against a brute strong-closure
/// search: the verdict must agree with the existence of a proper
/// nontrivial strongly closed subgroup that is not Sylow in its normal
/// closure.
pub fn verify_classification(
    name: &str,
    group: &GeneratedGroup,
    verdict_input: &VerdictInput,
    p: u64,
    caps: &Caps,
) -> Result<ClassificationCheck> {
    let verdict = strongly_closed_verdict(verdict_input, p)?;
    let meta = GroupMeta {
        name: name.to_string(),
        degree: group.degree(),
        order: group.order().to_string(),
    };
    let s = sylow_subgroup(group, p, caps)?;
    let brute = match all_strongly_closed_brute(group, &s, caps) {
        Ok(list) => Some(list),
        Err(e) if e.is_refusal() => None,
        Err(e) => return Err(e),
    };
    let (brute_has_proper, brute_orders, agree) = match brute {
        None => (None, Vec::new(), None),
        Some(list) => {
            let mut orders = Vec::new();
            let mut found = false;
            for a in &list {
                if a.is_trivial() || a.order() == s.order() {
                    continue;
                }
                let o = script_o(group, a, p, caps)?;
                if !o.contains_subgroup(a) {
                    // A is not Sylow in its normal closure
                    found = true;
                    orders.push(a.order().to_string());
                }
            }
            let mut agree = found == verdict.has_proper_strongly_closed;
            if found && verdict.has_proper_strongly_closed {
                // every found order must be admissible per the verdict
                let admissible: Vec<&str> =
                    verdict.shapes.iter().map(|s| s.order.as_str()).collect();
                agree &= orders.iter().all(|o| admissible.contains(&o.as_str()));
            }
            (Some(found), orders, Some(agree))
        }
    };
    Ok(ClassificationCheck {
        group: meta,
        p,
        verdict,
        brute_has_proper,
        brute_orders,
        agree,
    })
}
