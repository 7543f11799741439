//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured time and failing hard otherwise. Tolerances are
//! exact (integer equality) unless stated; time budgets are asserted.
//!
//! Run with `cargo test --test acceptance` (add `-- --nocapture` to see
//! the PASS lines inline).

use num_bigint::BigUint;
use sclose_core::analyze::crosscheck;
use sclose_core::caps::Caps;
use sclose_core::closure::{
    all_strongly_closed_brute, fusion_control, is_strongly_closed, minimal_strongly_closed,
    normal_subgroups, omega_bar, script_o, FusionMode,
};
use sclose_core::corpus;
use sclose_core::ext::{verify_prop41, verify_prop42};
use sclose_core::fpmod::FpModule;
use sclose_core::group::GeneratedGroup;
use sclose_core::lie::{
    sylow_shape, table3a_embedded, table3a_rows, LieFamily, LieSpec, Table3AFamily,
};
use sclose_core::matgroup::{parse_spec, permutation_image, MatrixAction};
use sclose_core::sylow::{p_group_profile, p_part, sylow_subgroup};
use std::time::{Duration, Instant};

fn caps() -> Caps {
    Caps::default()
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn begin(name: &'static str, budget_secs: u64) -> Criterion {
        Criterion {
            name,
            budget: Duration::from_secs(budget_secs),
            start: Instant::now(),
        }
    }

    fn pass(self) {
        let elapsed = self.start.elapsed();
        println!(
            "PASS {} ({} ms, budget {} s)",
            self.name,
            elapsed.as_millis(),
            self.budget.as_secs()
        );
        assert!(
            elapsed <= self.budget,
            "{} exceeded its time budget: {} ms",
            self.name,
            elapsed.as_millis()
        );
    }
}

#[test]
fn criterion_01_u3_3_profile_closure_and_control() {
    let c = Criterion::begin("criterion 1: U3(3) at p=3", 1);
    let caps = caps();
    let (g, _) = corpus::load("U3_3", &caps).unwrap();
    assert_eq!(g.order_u64(), Some(6048));
    assert_eq!(g.degree(), 28);
    let s = sylow_subgroup(&g, 3, &caps).unwrap();
    let profile = p_group_profile(&s, 3, &caps).unwrap();
    assert_eq!(profile.order, BigUint::from(27u32));
    assert!(profile.special, "S is special of type 3^(1+2)");
    assert_eq!(profile.center.order_u64(), Some(3));
    // all strongly closed subgroups: exactly 1, Z(S), S
    let list = all_strongly_closed_brute(&g, &s, &caps).unwrap();
    let orders: Vec<u64> = list.iter().map(|a| a.order_u64().unwrap()).collect();
    assert_eq!(orders, vec![1, 3, 27]);
    assert!(list[1].same_group_as(&profile.center));
    // N_G(S) = N_G(Z(S)) of order 216
    let n_s = g.normalizer(&s, &caps).unwrap();
    let n_z = g.normalizer(&profile.center, &caps).unwrap();
    assert_eq!(n_s.order_u64(), Some(216));
    assert!(n_s.same_group_as(&n_z));
    // N_G(S) controls fusion in S
    let control = fusion_control(&g, &s, &n_s, FusionMode::Element, &caps).unwrap();
    assert!(control.is_ok());
    c.pass();
}

#[test]
fn criterion_02_sz8_center_is_omega_bar() {
    let c = Criterion::begin("criterion 2: Sz(8) at p=2", 5);
    let caps = caps();
    let (g, _) = corpus::load("Sz8", &caps).unwrap();
    assert_eq!(g.order_u64(), Some(29120));
    let s = sylow_subgroup(&g, 2, &caps).unwrap();
    let profile = p_group_profile(&s, 2, &caps).unwrap();
    assert_eq!(profile.order, BigUint::from(64u32));
    // Ω₁(S) = Z(S) of order 8
    assert_eq!(profile.center.order_u64(), Some(8));
    assert!(profile.omega1.same_group_as(&profile.center));
    // ω̄S = Z(S) ≠ S, and Z(S) is strongly closed
    let omega = omega_bar(&g, &s, 2, &caps).unwrap();
    assert!(omega.same_group_as(&profile.center));
    assert!(omega.order() < s.order());
    assert!(is_strongly_closed(&g, &s, &profile.center, &caps)
        .unwrap()
        .is_ok());
    // N_G(S) has order 448 = 2^6·7 with cyclic odd part of order 7
    let n = g.normalizer(&s, &caps).unwrap();
    assert_eq!(n.order_u64(), Some(448));
    let odd_part = 448u64 >> 448u64.trailing_zeros().min(6); // 448 / 64
    assert_eq!(odd_part, 7);
    let has_order_7 = n
        .elements(&caps)
        .unwrap()
        .iter()
        .any(|x| x.order() == 7);
    assert!(has_order_7, "the odd part is cyclic of order 7");
    c.pass();
}

#[test]
fn criterion_03_psl2_19_cyclic_sylow() {
    let c = Criterion::begin("criterion 3: PSL2(19) at p=3", 1);
    let caps = caps();
    let (g, _) = corpus::load("PSL2_19", &caps).unwrap();
    let s = sylow_subgroup(&g, 3, &caps).unwrap();
    let profile = p_group_profile(&s, 3, &caps).unwrap();
    assert_eq!(profile.homocyclic, Some((1, 9)), "S cyclic of order 9");
    // strongly closed: exactly {1, Z3, S}
    let list = all_strongly_closed_brute(&g, &s, &caps).unwrap();
    let orders: Vec<u64> = list.iter().map(|a| a.order_u64().unwrap()).collect();
    assert_eq!(orders, vec![1, 3, 9]);
    // N_G(Ω₁(S)) = N_G(S)
    let n_omega = g.normalizer(&profile.omega1, &caps).unwrap();
    let n_s = g.normalizer(&s, &caps).unwrap();
    assert!(n_omega.same_group_as(&n_s));
    c.pass();
}

#[test]
fn criterion_04_a9_minimal_is_sylow() {
    let c = Criterion::begin("criterion 4: A9 at p=3", 30);
    let caps = caps();
    let (g, _) = corpus::load("A9", &caps).unwrap();
    assert_eq!(g.order_u64(), Some(181440));
    let s = sylow_subgroup(&g, 3, &caps).unwrap();
    assert_eq!(s.order_u64(), Some(81));
    // every order-3 class closes to S, so S is the unique minimal strongly
    // closed subgroup and no proper nontrivial one exists
    let minimal = minimal_strongly_closed(&g, &s, 3, &caps).unwrap();
    assert_eq!(minimal.len(), 1);
    assert!(minimal[0].same_group_as(&s));
    c.pass();
}

#[test]
fn criterion_05_predictor_a10_q243_p5() {
    let c = Criterion::begin("criterion 5: predictor A10(3^5) at p=5", 1);
    let start = Instant::now();
    let spec = LieSpec::new(LieFamily::A(10), 1, 243).unwrap();
    let shape = sylow_shape(&spec, 5).unwrap();
    let s = shape.structure.expect("structural prediction");
    assert_eq!(s.homocyclic, Some((2, 25)), "type (25, 25)");
    assert_eq!(shape.order, "625");
    assert!(
        start.elapsed() < Duration::from_millis(10),
        "prediction must be immediate"
    );
    c.pass();
}

#[test]
fn criterion_06_table3a_regenerates_bit_exact() {
    let c = Criterion::begin("criterion 6: Table 3A regeneration", 1);
    for family in Table3AFamily::all() {
        for &p in family.primes() {
            let computed = table3a_rows(family, p).unwrap();
            let embedded = table3a_embedded(family, p);
            assert_eq!(
                computed,
                embedded,
                "{} at p = {p}",
                family.display_name()
            );
        }
    }
    c.pass();
}

#[test]
fn criterion_07_predictor_brute_agreement() {
    let c = Criterion::begin("criterion 7: predictor vs brute profiles", 60);
    let caps = caps();
    // full structural agreement for the odd-p cases
    for (family, twist, q, p) in [(LieFamily::A(1), 1, 19, 3), (LieFamily::A(2), 1, 4, 3)] {
        let spec = LieSpec::new(family, twist, q).unwrap();
        let report = crosscheck(&spec, p, &caps).unwrap();
        assert_eq!(report.agree, Some(true), "{} at p={p}", report.spec);
    }
    // order agreement for the p = 2 cases
    for (family, twist, q, expected) in [
        (LieFamily::A(2), 2, 3, 32u64),  // SU3(3) at p=2
        (LieFamily::C(2), 1, 3, 128u64), // Sp4(3) at p=2
    ] {
        let spec = LieSpec::new(family, twist, q).unwrap();
        let report = crosscheck(&spec, 2, &caps).unwrap();
        assert_eq!(report.predicted.order, expected.to_string());
        assert_eq!(report.agree, Some(true), "{} order check", report.spec);
        let brute = report.brute.unwrap();
        assert_eq!(brute.order, expected.to_string());
    }
    c.pass();
}

#[test]
fn criterion_08_coinduced_a6_half_split() {
    let c = Criterion::begin("criterion 8: coinduced A6 extension", 60);
    let caps = caps();
    let (a6, _) = corpus::load("A6", &caps).unwrap();
    let x = sclose_core::perm::parse_cycles("(0 1 2)", 6).unwrap();
    let z = sclose_core::perm::parse_cycles("(0 1 2)(3 4 5)", 6).unwrap();
    let (ext, report) = verify_prop42(&a6, &x, &[z], 3, 100_000, &caps).unwrap();
    assert_eq!(ext.module.dim, 120);
    assert!(
        report.cocycle_check.triples_checked >= 100_000,
        "at least 1e5 sampled triples"
    );
    assert_eq!(report.x_coset_min_order, 9, "xE is all order 9");
    assert!(report.x_norm_constant_in_e1, "norm constant meets E1");
    let zr = &report.z_reports[0];
    assert!(zr.not_conjugate_to_x);
    assert_eq!(zr.coset_min_order, 3, "zE contains order-3 elements");
    assert!(zr.module_free_over_z, "all Z-orbits on cosets are regular");
    c.pass();
}

#[test]
fn criterion_09_split_sl2_19_fusion_failure() {
    let c = Criterion::begin("criterion 9: split SL2(19) extension", 30);
    let caps = caps();
    let (spec, _) = parse_spec("SL(2,19)").unwrap();
    let real = permutation_image(&spec, MatrixAction::NonzeroVectors, &caps).unwrap();
    let blocks = real.projective_blocks().unwrap();
    let module = FpModule::block_module(&real.group, blocks, 3).unwrap();
    let report = verify_prop41(&real.group, &module, 3, &caps).unwrap();
    assert!(report.preconditions.generated_by_order_p);
    assert!(report.preconditions.omega_bar_proper, "ω̄T ≠ T");
    assert!(report.preconditions.action_quotient_not_p_group);
    assert!(report.replay_ok, "witness replays by multiplication");
    c.pass();
}

/// The strongly closed subgroups used for the 𝒪-operator and quotient
/// persistence sweeps: the brute list under the subgroup cap, otherwise
/// the computable sublist.
fn strongly_closed_list(
    g: &GeneratedGroup,
    s: &GeneratedGroup,
    p: u64,
    caps: &Caps,
) -> Vec<GeneratedGroup> {
    match all_strongly_closed_brute(g, s, caps) {
        Ok(list) => list,
        Err(e) if e.is_refusal() => {
            let mut list = vec![GeneratedGroup::trivial(g.degree())];
            list.extend(minimal_strongly_closed(g, s, p, caps).unwrap());
            list.push(omega_bar(g, s, p, caps).unwrap());
            list.push(s.clone());
            let mut kept: Vec<GeneratedGroup> = Vec::new();
            for cand in list {
                if !kept.iter().any(|k| k.same_group_as(&cand)) {
                    kept.push(cand);
                }
            }
            kept
        }
        Err(e) => panic!("{e}"),
    }
}

fn small_corpus() -> Vec<&'static str> {
    corpus::registry()
        .iter()
        .filter(|e| e.expected_order <= 100_000)
        .map(|e| e.name)
        .collect()
}

fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

#[test]
fn criterion_10_script_o_suite() {
    let c = Criterion::begin("criterion 10: script-O operator suite", 600);
    let caps = caps();
    for name in small_corpus() {
        let (g, _) = corpus::load(name, &caps).unwrap();
        let normals = normal_subgroups(&g, &caps).unwrap();
        for p in primes_dividing(g.order_u64().unwrap()) {
            let s = sylow_subgroup(&g, p, &caps).unwrap();
            for a in strongly_closed_list(&g, &s, p, &caps) {
                let n = script_o(&g, &a, p, &caps).unwrap();
                // A ∩ N is Sylow in N
                let meet = a.intersection(&n, &caps).unwrap();
                assert_eq!(
                    meet.order(),
                    &p_part(n.order(), p),
                    "{name} p={p} |A|={}: A ∩ 𝒪 is Sylow in 𝒪",
                    a.order()
                );
                // maximal among the enumerated normal subgroups
                for m in &normals {
                    let meet_m = a.intersection(m, &caps).unwrap();
                    if meet_m.order() == &p_part(m.order(), p) {
                        assert!(
                            n.contains_subgroup(m),
                            "{name} p={p}: a qualifying normal subgroup escapes 𝒪"
                        );
                    }
                }
                // O_{p'}(G/𝒪) = 1, via the correspondence theorem: every
                // normal M ⊋ 𝒪 has p | |M : 𝒪|
                for m in &normals {
                    if m.contains_subgroup(&n) && m.order() != n.order() {
                        let index = m.order() / n.order();
                        assert!(
                            (&index % BigUint::from(p)) == BigUint::from(0u32),
                            "{name} p={p}: O_p'(G/𝒪) would be nontrivial"
                        );
                    }
                }
            }
        }
    }
    c.pass();
}

#[test]
fn criterion_11_quotient_persistence() {
    let c = Criterion::begin("criterion 11: strong closure passes to quotients", 600);
    let caps = caps();
    for name in small_corpus() {
        let (g, _) = corpus::load(name, &caps).unwrap();
        let normals = normal_subgroups(&g, &caps).unwrap();
        for p in primes_dividing(g.order_u64().unwrap()) {
            let s = sylow_subgroup(&g, p, &caps).unwrap();
            for a in strongly_closed_list(&g, &s, p, &caps) {
                for n in &normals {
                    if n.is_trivial() {
                        // G/1 ≅ G: already certified by construction
                        continue;
                    }
                    if n.order() == g.order() {
                        continue; // trivial quotient
                    }
                    let quotient = match g.coset_action(n, &caps) {
                        Ok(q) => q,
                        Err(e) if e.is_refusal() => continue, // over the degree cap
                        Err(e) => panic!("{name}: {e}"),
                    };
                    let image_a_gens: Vec<_> =
                        a.generators().iter().map(|x| quotient.action.map(x)).collect();
                    let image_s_gens: Vec<_> =
                        s.generators().iter().map(|x| quotient.action.map(x)).collect();
                    let image_a = quotient.image.generated(&image_a_gens).unwrap();
                    let image_s = quotient.image.generated(&image_s_gens).unwrap();
                    // SN/N is Sylow in G/N
                    assert_eq!(
                        image_s.order(),
                        &p_part(quotient.image.order(), p),
                        "{name} p={p}: image of S is Sylow"
                    );
                    let verdict =
                        is_strongly_closed(&quotient.image, &image_s, &image_a, &caps).unwrap();
                    assert!(
                        verdict.is_ok(),
                        "{name} p={p} |A|={} |N|={}: image must stay strongly closed",
                        a.order(),
                        n.order()
                    );
                }
            }
        }
    }
    c.pass();
}

#[test]
fn criterion_12_irreducible_normalizer_action() {
    let c = Criterion::begin("criterion 12: N_G(S) irreducible on Ω₁(S)", 10);
    let caps = caps();
    for (name, p) in [("PSL2_19", 3u64), ("PSL2_7", 7), ("PSL3_4", 3)] {
        let (g, _) = corpus::load(name, &caps).unwrap();
        let s = sylow_subgroup(&g, p, &caps).unwrap();
        let profile = p_group_profile(&s, p, &caps).unwrap();
        assert!(profile.abelian, "{name}: S abelian");
        assert!(profile.homocyclic.is_some(), "{name}: S homocyclic");
        let n = g.normalizer(&s, &caps).unwrap();
        let module =
            FpModule::conjugation_module(&profile.omega1, n.generators(), p, &caps).unwrap();
        assert!(
            !module.action_is_trivial(),
            "{name}: N_G(S) acts nontrivially on Ω₁(S)"
        );
        assert!(
            module.is_irreducible_brute().unwrap(),
            "{name}: irreducible by brute subspace scan"
        );
    }
    c.pass();
}
