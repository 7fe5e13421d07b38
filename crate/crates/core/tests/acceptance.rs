//! The release gate: twelve structural claims about the dimension-p² types,
//! each verified end to end with exact arithmetic and zero tolerance. Every
//! test prints one `[criterion NN] ...: PASS/FAIL` line before asserting, so
//! a red run still names each broken claim.

use hopf_core::analysis::{self, GrouplikeMode, DEFAULT_BRUTEFORCE_CAP};
use hopf_core::classify::{self, Fingerprint};
use hopf_core::families::{self, FamilyId, FamilyKind};
use hopf_core::field::FieldSpec;
use hopf_core::hopf::HopfAlgebra;
use hopf_core::Error;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: u64 = DEFAULT_BRUTEFORCE_CAP;

/// (p, q) pairs for the regime of characteristic different from p: the
/// smallest prime q with q ≡ 1 mod p, so primitive p-th roots exist.
const PQ: [(u64, u64); 3] = [(2, 3), (3, 7), (5, 11)];

fn conclude(n: u32, what: &str, pass: bool, details: &str) {
    if pass {
        println!("[criterion {n:02}] {what}: PASS");
    } else {
        println!("[criterion {n:02}] {what}: FAIL ({details})");
    }
    assert!(pass, "[criterion {n:02}] {what}: FAIL ({details})");
}

fn char_p_ids(p: u64) -> Vec<FamilyId> {
    families::all_char_p(p).unwrap()
}

fn char_ne_p_ids(p: u64, q: u64) -> Vec<FamilyId> {
    families::all_char_ne_p(p, &FieldSpec::prime(q).unwrap()).unwrap()
}

fn build(id: &FamilyId) -> HopfAlgebra {
    families::build(id).unwrap()
}

fn grouplikes(h: &HopfAlgebra) -> analysis::GrouplikeGroup {
    analysis::grouplikes(h, &GrouplikeMode::Auto { cap: CAP }).unwrap()
}

fn p11_dim(h: &HopfAlgebra) -> usize {
    let unit = h.unit_element();
    analysis::skew_primitives(h, &unit, &unit).unwrap().dim()
}

fn pairwise_distinct(rows: &[(String, Fingerprint)]) -> Option<(String, String)> {
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if rows[i].1 == rows[j].1 {
                return Some((rows[i].0.clone(), rows[j].0.clone()));
            }
        }
    }
    None
}

#[test]
fn criterion_01_axiom_completeness() {
    let mut failures = Vec::new();
    for p in [2, 3, 5] {
        for id in char_p_ids(p) {
            if !build(&id).verify_axioms().all_pass() {
                failures.push(format!("{} at p={p}", id.display_name()));
            }
        }
    }
    for (p, q) in PQ {
        for id in char_ne_p_ids(p, q) {
            if !build(&id).verify_axioms().all_pass() {
                failures.push(format!("{} at (p={p}, q={q})", id.display_name()));
            }
        }
    }
    conclude(
        1,
        "every family member satisfies all six Hopf axiom groups",
        failures.is_empty(),
        &failures.join(", "),
    );
}

#[test]
fn criterion_02_type_counts() {
    let equal_p = classify::calibration_rows(3, None, CAP).unwrap();
    let f7 = FieldSpec::prime(7).unwrap();
    let away = classify::calibration_rows(3, Some(&f7), CAP).unwrap();
    let collision = pairwise_distinct(&equal_p).or_else(|| pairwise_distinct(&away));
    let pass = equal_p.len() == 14 && away.len() == 4 && collision.is_none();
    conclude(
        2,
        "14 distinct types in characteristic p and p+1 = 4 away from it",
        pass,
        &format!(
            "equal-p rows: {}, away rows: {}, collision: {:?}",
            equal_p.len(),
            away.len(),
            collision
        ),
    );
}

#[test]
fn criterion_03_b4_is_the_unique_fully_noncommutative_type() {
    let mut details = Vec::new();
    let mut pass = true;
    for p in [2, 3, 5] {
        let both_non: Vec<String> = char_p_ids(p)
            .iter()
            .filter_map(|id| {
                let fl = analysis::structure_flags(&build(id));
                (!fl.commutative && !fl.cocommutative).then(|| id.display_name())
            })
            .collect();
        if both_non != ["b4"] {
            pass = false;
            details.push(format!("p={p}: {both_non:?}"));
        }
    }
    conclude(
        3,
        "B4 is the only type that is neither commutative nor cocommutative",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_04_antipode_orders() {
    let mut details = Vec::new();
    let mut pass = true;
    for p in [2u64, 3, 5] {
        for id in char_p_ids(p) {
            let h = build(&id);
            let ord = analysis::antipode_order(&h, None).unwrap();
            let fl = analysis::structure_flags(&h);
            if id.kind() == FamilyKind::B4 && ord != 2 * p as usize {
                pass = false;
                details.push(format!("b4 at p={p} has antipode order {ord}"));
            }
            if (fl.commutative || fl.cocommutative) && ord > 2 {
                pass = false;
                details.push(format!(
                    "{} at p={p} has antipode order {ord} > 2",
                    id.display_name()
                ));
            }
        }
    }
    for (p, q) in PQ {
        for id in char_ne_p_ids(p, q) {
            let h = build(&id);
            let ord = analysis::antipode_order(&h, None).unwrap();
            let fl = analysis::structure_flags(&h);
            if (fl.commutative || fl.cocommutative) && ord > 2 {
                pass = false;
                details.push(format!(
                    "{} at (p={p}, q={q}) has antipode order {ord} > 2",
                    id.display_name()
                ));
            }
        }
    }
    conclude(
        4,
        "B4 has antipode order 2p; every (co)commutative type has order at most 2",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_05_primitive_space_dimensions() {
    let mut details = Vec::new();
    let mut pass = true;
    for (p, q) in PQ {
        for id in char_ne_p_ids(p, q) {
            let d = p11_dim(&build(&id));
            if d != 0 {
                pass = false;
                details.push(format!(
                    "{} at (p={p}, q={q}): dim P(1,1) = {d}, want 0",
                    id.display_name()
                ));
            }
        }
    }
    for p in [2, 3, 5] {
        for id in char_p_ids(p) {
            let d = p11_dim(&build(&id));
            let name = id.display_name();
            let ok = if name.starts_with('a') {
                (1..=2).contains(&d)
            } else {
                d <= 1
            };
            if !ok {
                pass = false;
                details.push(format!("{name} at p={p}: dim P(1,1) = {d}"));
            }
        }
    }
    conclude(
        5,
        "primitive spaces are 0 away from char p, at most 1 for group/B types, 1 or 2 for A types",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_06_quantum_binomial_vanishing() {
    let mut details = Vec::new();
    let mut pass = true;
    for (p, q) in PQ {
        let f = FieldSpec::prime(q).unwrap();
        for omega in families::primitive_pth_roots(&f, p).unwrap() {
            for i in 1..p {
                if !analysis::quantum_binomial(&f, p, i, &omega).is_zero() {
                    pass = false;
                    details.push(format!("({p} choose {i}) at omega={} is nonzero", f.scalar_string(&omega)));
                }
            }
            for i in [0, p] {
                if analysis::quantum_binomial(&f, p, i, &omega) != f.one() {
                    pass = false;
                    details.push(format!("({p} choose {i}) at omega={} is not 1", f.scalar_string(&omega)));
                }
            }
            let id = FamilyId::taft(p, f.clone(), omega.clone()).unwrap();
            let checks = analysis::frobenius_binomial_identity(&id, &build(&id)).unwrap();
            if !analysis::all_pass(&checks) {
                pass = false;
                let failed: Vec<&str> = checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| c.name.as_str())
                    .collect();
                details.push(format!(
                    "binomial battery on {} over F_{q}: failed {:?}",
                    id.display_name(),
                    failed
                ));
            }
        }
    }
    conclude(
        6,
        "quantum binomials vanish strictly inside row p and the twisted power identity holds with its controls",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_07_adjoint_identities() {
    let mut details = Vec::new();
    let mut pass = true;
    for p in [2, 3, 5, 7] {
        let checks = analysis::adjoint_matrix_identity(p).unwrap();
        if !analysis::all_pass(&checks) {
            pass = false;
            details.push(format!("adjoint battery failed at p={p}"));
        }
    }
    for p in [2u64, 3, 5] {
        let id = FamilyId::char_p(FamilyKind::B4, p).unwrap();
        let h = build(&id);
        let x = h.basis_element(1);
        let g = h.basis_element(p as usize);
        let got = analysis::ad_power(&h, &x, &g, p as usize - 1);
        let want = h.sub(&g, &h.unit_element());
        if got != want {
            pass = false;
            details.push(format!("(ad x)^(p-1)(g) != g - 1 at p={p}"));
        }
    }
    for p in [2, 3] {
        let id = FamilyId::char_p(FamilyKind::B4, p).unwrap();
        let checks = analysis::delta_xp_identity(&id, &build(&id)).unwrap();
        if !analysis::all_pass(&checks) {
            pass = false;
            details.push(format!("coproduct p-power battery failed at p={p}"));
        }
    }
    conclude(
        7,
        "the adjoint matrix identities, (ad x)^(p-1)(g) = g-1, and the coproduct p-power identities hold",
        pass,
        &details.join("; "),
    );
}

fn check_filtration_dims(
    pass: &mut bool,
    details: &mut Vec<String>,
    name: String,
    h: &HopfAlgebra,
    want: &[usize],
) {
    let g = grouplikes(h);
    match analysis::coradical_filtration(h, &g) {
        Ok(filt) => {
            if filt.dims != want {
                *pass = false;
                details.push(format!("{name}: dims {:?}, want {want:?}", filt.dims));
            }
            // frozen dims are cross-checked against the degree-one dimension
            // identity
            let tw = analysis::taft_wilson_check(h, &g, &filt).unwrap();
            if !tw.pass {
                *pass = false;
                details.push(format!("{name}: degree-one identity fails"));
            }
        }
        Err(e) => {
            *pass = false;
            details.push(format!("{name}: {e}"));
        }
    }
}

#[test]
fn criterion_08_coradical_filtrations() {
    let mut details = Vec::new();
    let mut pass = true;

    // group algebras: coradical is everything, one level
    for (p, q) in PQ {
        let f = FieldSpec::prime(q).unwrap();
        for id in [
            FamilyId::group_cp2(p, f.clone()).unwrap(),
            FamilyId::group_cpxcp(p, f.clone()).unwrap(),
        ] {
            check_filtration_dims(
                &mut pass,
                &mut details,
                format!("{} over F_{q}", id.display_name()),
                &build(&id),
                &[(p * p) as usize],
            );
        }
    }
    for p in [2usize, 3] {
        for kind in [FamilyKind::GroupCp2, FamilyKind::GroupCpxCp] {
            let id = FamilyId::char_p(kind, p as u64).unwrap();
            check_filtration_dims(
                &mut pass,
                &mut details,
                format!("{} char p={p}", id.display_name()),
                &build(&id),
                &[p * p],
            );
        }
    }

    // Taft at p=3 climbs 3, 6, 9
    let f7 = FieldSpec::prime(7).unwrap();
    let omega = families::primitive_pth_roots(&f7, 3).unwrap()[0].clone();
    let id = FamilyId::taft(3, f7, omega).unwrap();
    check_filtration_dims(
        &mut pass,
        &mut details,
        "taft p=3".to_string(),
        &build(&id),
        &[3, 6, 9],
    );

    // A types are connected: dim H_0 = 1, and the chain exhausts the algebra
    for p in [2usize, 3] {
        for id in char_p_ids(p as u64) {
            let name = id.display_name();
            if !name.starts_with('a') {
                continue;
            }
            let h = build(&id);
            let g = grouplikes(&h);
            let filt = analysis::coradical_filtration(&h, &g).unwrap();
            if filt.dims.first() != Some(&1) || filt.dims.last() != Some(&(p * p)) {
                pass = false;
                details.push(format!("{name} at p={p}: dims {:?}", filt.dims));
            }
        }
    }

    // B types: dims computed once, frozen here, and re-checked against the
    // degree-one identity inside the helper
    for (p, want) in [(2usize, vec![2, 4]), (3, vec![3, 6, 9])] {
        for kind in [FamilyKind::B1, FamilyKind::B2, FamilyKind::B3, FamilyKind::B4] {
            let id = FamilyId::char_p(kind, p as u64).unwrap();
            check_filtration_dims(
                &mut pass,
                &mut details,
                format!("{} at p={p}", id.display_name()),
                &build(&id),
                &want,
            );
        }
    }

    conclude(
        8,
        "coradical filtrations have the expected level dimensions and exhaust each algebra",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_09_degree_one_dimension_identity() {
    let mut details = Vec::new();
    let mut pass = true;
    let mut check = |label: String, h: &HopfAlgebra| {
        let g = grouplikes(h);
        let filt = analysis::coradical_filtration(h, &g).unwrap();
        let tw = analysis::taft_wilson_check(h, &g, &filt).unwrap();
        if !tw.pass {
            pass = false;
            details.push(format!("{label}: {}", tw.details));
        }
    };
    for p in [2, 3] {
        for id in char_p_ids(p) {
            check(format!("{} at p={p}", id.display_name()), &build(&id));
        }
    }
    for (p, q) in [(2, 3), (3, 7)] {
        for id in char_ne_p_ids(p, q) {
            check(format!("{} at (p={p}, q={q})", id.display_name()), &build(&id));
        }
    }
    conclude(
        9,
        "H_1 decomposes as H_0 plus skew primitives, in dimension, for every type",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_10_classifier_round_trip() {
    let mut details = Vec::new();
    let mut pass = true;

    for p in [2u64, 3] {
        for id in char_p_ids(p) {
            let name = id.display_name();
            let h = build(&id);
            let verdict = match classify::classify(&h, CAP) {
                Ok(v) => v,
                Err(e) => {
                    pass = false;
                    details.push(format!("{name} at p={p}: {e}"));
                    continue;
                }
            };
            if verdict.matched.as_deref() != Some(name.as_str()) || !verdict.calibration_distinct
            {
                pass = false;
                details.push(format!(
                    "{name} at p={p}: matched {:?}",
                    verdict.matched
                ));
                continue;
            }
            // stability: 20 seeded random basis permutations must not move
            // the fingerprint, and spot re-classifications must re-match
            let reference = classify::fingerprint(&h, CAP).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(0xACCE97 + p);
            for trial in 0..20 {
                let mut perm: Vec<usize> = (0..h.dim()).collect();
                perm.shuffle(&mut rng);
                let moved = h.permute_basis(&perm).unwrap();
                if classify::fingerprint(&moved, CAP).unwrap() != reference {
                    pass = false;
                    details.push(format!("{name} at p={p}: fingerprint moved under {perm:?}"));
                    break;
                }
                if trial < 3 {
                    let v = classify::classify(&moved, CAP).unwrap();
                    if v.matched.as_deref() != Some(name.as_str()) {
                        pass = false;
                        details.push(format!(
                            "{name} at p={p}: permuted copy classified as {:?}",
                            v.matched
                        ));
                        break;
                    }
                }
            }
        }
    }

    // away from the characteristic
    for (p, q) in [(2, 3), (3, 7)] {
        for id in char_ne_p_ids(p, q) {
            let name = id.display_name();
            let v = classify::classify(&build(&id), CAP).unwrap();
            if v.matched.as_deref() != Some(name.as_str()) {
                pass = false;
                details.push(format!(
                    "{name} at (p={p}, q={q}): matched {:?}",
                    v.matched
                ));
            }
        }
    }

    // p = 5: the full table stays distinct and every member finds itself
    let rows = classify::calibration_rows(5, None, CAP).unwrap();
    if let Some((a, b)) = pairwise_distinct(&rows) {
        pass = false;
        details.push(format!("p=5 calibration collision: {a} vs {b}"));
    }
    for id in char_p_ids(5) {
        let fp = classify::fingerprint(&build(&id), CAP).unwrap();
        let name = id.display_name();
        let hits: Vec<&str> = rows
            .iter()
            .filter(|(_, r)| *r == fp)
            .map(|(n, _)| n.as_str())
            .collect();
        if hits != [name.as_str()] {
            pass = false;
            details.push(format!("{name} at p=5 matches {hits:?}"));
        }
    }
    let b4 = classify::classify(&build(&FamilyId::char_p(FamilyKind::B4, 5).unwrap()), CAP)
        .unwrap();
    if b4.matched.as_deref() != Some("b4") {
        pass = false;
        details.push(format!("b4 at p=5: matched {:?}", b4.matched));
    }

    // a perturbed input must be rejected at the axiom gate, not misfiled
    let mut bad = build(&FamilyId::char_p(FamilyKind::B4, 3).unwrap())
        .to_json();
    let entry = &mut bad["mult"][1][1][2];
    *entry = serde_json::json!(if entry == &serde_json::json!(1) { 2 } else { 1 });
    let bad = HopfAlgebra::from_json(&bad).unwrap();
    match classify::classify(&bad, CAP) {
        Err(Error::AxiomsFailed(_)) => {}
        other => {
            pass = false;
            details.push(format!("perturbed b4 produced {other:?}"));
        }
    }

    conclude(
        10,
        "classification round-trips every type and is stable under random basis permutations",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_11_duality() {
    let mut details = Vec::new();
    let mut pass = true;
    let mut check = |label: String, h: &HopfAlgebra| {
        let d = h.dual();
        if !d.verify_axioms().all_pass() {
            pass = false;
            details.push(format!("{label}: dual fails axioms"));
        }
        if !d.dual().same_tensors(h) {
            pass = false;
            details.push(format!("{label}: double dual differs"));
        }
        let hf = analysis::structure_flags(h);
        let df = analysis::structure_flags(&d);
        if hf.commutative != df.cocommutative || hf.cocommutative != df.commutative {
            pass = false;
            details.push(format!("{label}: flags do not swap"));
        }
    };
    for p in [2, 3, 5] {
        for id in char_p_ids(p) {
            check(format!("{} at p={p}", id.display_name()), &build(&id));
        }
    }
    for (p, q) in PQ {
        for id in char_ne_p_ids(p, q) {
            check(format!("{} at (p={p}, q={q})", id.display_name()), &build(&id));
        }
    }
    conclude(
        11,
        "duals satisfy the axioms, double duals return the original, and the flags swap",
        pass,
        &details.join("; "),
    );
}

#[test]
fn criterion_12_conjugation_characters() {
    let mut details = Vec::new();
    let mut pass = true;

    // Taft: conjugating the canonical witness by g recovers omega exactly
    for (p, q) in PQ {
        let f = FieldSpec::prime(q).unwrap();
        for omega in families::primitive_pth_roots(&f, p).unwrap() {
            let id = FamilyId::taft(p, f.clone(), omega.clone()).unwrap();
            let h = build(&id);
            let g_like = grouplikes(&h);
            let unit = h.unit_element();
            let g = h.basis_element(p as usize);
            let witness = analysis::canonical_character_witness(&h, &g_like, &unit, &g).unwrap();
            let ch = analysis::conjugation_character(&h, &g_like, &unit, &g, &witness).unwrap();
            let g_idx = g_like.index_of(&g).unwrap();
            if ch.additive || ch.values[g_idx] != omega {
                pass = false;
                details.push(format!(
                    "{} over F_{q}: value at g is {}, want {}",
                    id.display_name(),
                    f.scalar_string(&ch.values[g_idx]),
                    f.scalar_string(&omega)
                ));
            }
            if !analysis::character_laws_hold(&h, &g_like, &ch) {
                pass = false;
                details.push(format!("{} over F_{q}: laws fail", id.display_name()));
            }
        }
    }

    // B4: the additive character takes the value 1 at g; B3: identically 0
    for p in [2u64, 3, 5] {
        for (kind, expect_one) in [(FamilyKind::B4, true), (FamilyKind::B3, false)] {
            let id = FamilyId::char_p(kind, p).unwrap();
            let h = build(&id);
            let f = h.field().clone();
            let g_like = grouplikes(&h);
            let unit = h.unit_element();
            let g = h.basis_element(p as usize);
            let witness = analysis::canonical_character_witness(&h, &g_like, &unit, &g).unwrap();
            let ch = analysis::conjugation_character(&h, &g_like, &unit, &g, &witness).unwrap();
            if !ch.additive {
                pass = false;
                details.push(format!("{} at p={p}: regime is not additive", id.display_name()));
                continue;
            }
            let g_idx = g_like.index_of(&g).unwrap();
            let ok = if expect_one {
                ch.values[g_idx] == f.one()
            } else {
                ch.values.iter().all(|v| v.is_zero())
            };
            if !ok {
                pass = false;
                details.push(format!(
                    "{} at p={p}: values {:?}",
                    id.display_name(),
                    ch.values.iter().map(|v| f.scalar_string(v)).collect::<Vec<_>>()
                ));
            }
            if !analysis::character_laws_hold(&h, &g_like, &ch) {
                pass = false;
                details.push(format!("{} at p={p}: laws fail", id.display_name()));
            }
        }
    }

    conclude(
        12,
        "conjugation characters recover omega on Taft, 1 on B4, and vanish on B3",
        pass,
        &details.join("; "),
    );
}
