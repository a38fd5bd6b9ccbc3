mod common;

use qloc_core::code_geometry::{extract_interactions, is_long, Embedding};
use qloc_core::constructions::{
    build_embedded_concatenation, build_locality_construction, build_surface_code, concatenate, direct_sum, pad_code,
    pad_embedding, plan_locality,
};
use qloc_core::corpus::{corpus, four_two_two, random_code, trivial_code};
use qloc_core::pauli_algebra::{code_distance, find_logical_up_to, StabilizerCode};

fn gens_of(code: &StabilizerCode) -> Vec<String> {
    code.generators().iter().map(|g| g.to_string()).collect()
}

fn all_commute(code: &StabilizerCode) -> bool {
    let g = gens_of(code);
    g.iter().all(|a| g.iter().all(|b| common::commute(a.as_bytes(), b.as_bytes())))
}

#[test]
fn surface_code_parameters() {
    for m in 2..=4 {
        let s = build_surface_code(m).unwrap();
        assert_eq!((s.code.n(), s.code.k()), (m * m, 1));
        assert_eq!(code_distance(&s.code, None).unwrap().exact(), Some(m), "m = {m}");
        let oracle = common::Oracle::new(m * m, gens_of(&s.code));
        assert_eq!(oracle.k(), 1);
    }
    let s = build_surface_code(5).unwrap();
    assert_eq!(code_distance(&s.code, Some(5)).unwrap().exact(), Some(5));
    let its = extract_interactions(&s.code, &s.embedding).unwrap();
    let max = its.iter().map(|i| i.length).fold(0.0, f64::max);
    assert!((max - 2f64.sqrt()).abs() < 1e-9);
    assert!(build_surface_code(1).is_err());
}

#[test]
fn concatenation_with_trivial_inner_is_identity() {
    let outer = build_surface_code(3).unwrap().code;
    let c = concatenate(&trivial_code(), &outer).unwrap();
    assert_eq!(gens_of(&c), gens_of(&outer));
    let back = concatenate(&four_two_two(), &trivial_code()).unwrap();
    assert_eq!(gens_of(&back), gens_of(&four_two_two()));
}

#[test]
fn four_two_two_into_surface() {
    let outer = build_surface_code(3).unwrap().code;
    let c = concatenate(&four_two_two(), &outer).unwrap();
    assert_eq!((c.n(), c.k()), (36, 2));
    assert!(all_commute(&c));
    assert_eq!(
        36 - common::rank(common::symplectic_rows(&gens_of(&c))),
        2
    );
    assert!(find_logical_up_to(&c, 5).is_none());
}

#[test]
fn concatenation_multiplies_parameters() {
    let codes: Vec<_> = corpus(6, 1, 41)
        .into_iter()
        .filter(|c| c.code.k() >= 1)
        .collect();
    let mut pairs = 0;
    for inner in &codes {
        for outer in codes.iter().step_by(3) {
            let (n1, n2) = (inner.code.n(), outer.code.n());
            if n1 * n2 > 24 {
                continue;
            }
            let c = concatenate(&inner.code, &outer.code).unwrap();
            assert!(all_commute(&c));
            assert_eq!(c.k(), inner.code.k() * outer.code.k());
            let d1 = code_distance(&inner.code, None).unwrap().bound();
            let d2 = code_distance(&outer.code, None).unwrap().bound();
            let w = (d1 * d2 - 1).min(4);
            assert!(
                find_logical_up_to(&c, w).is_none(),
                "{} into {}: logical below weight {}",
                inner.name,
                outer.name,
                d1 * d2
            );
            pairs += 1;
        }
    }
    assert!(pairs >= 10, "{pairs}");
}

#[test]
fn concatenation_rejects_inner_without_logicals() {
    let inner = StabilizerCode::from_strs(1, &["Z"]).unwrap();
    assert!(concatenate(&inner, &four_two_two()).is_err());
}

#[test]
fn direct_sum_adds_dimension() {
    let c = direct_sum(&four_two_two(), 3).unwrap();
    assert_eq!((c.n(), c.k()), (12, 6));
    assert_eq!(code_distance(&c, None).unwrap().exact(), Some(2));
}

fn interaction_multiset(code: &StabilizerCode, emb: &Embedding) -> Vec<(usize, usize, usize, u64)> {
    let mut v: Vec<_> = extract_interactions(code, emb)
        .unwrap()
        .into_iter()
        .map(|i| (i.qubit_a, i.qubit_b, i.generator_index, i.length.to_bits()))
        .collect();
    v.sort();
    v
}

#[test]
fn padding_preserves_parameters_and_interactions() {
    for c in corpus(10, 1, 9).into_iter().filter(|c| c.code.n() >= 2) {
        for r in [1, 2, 4] {
            if c.code.n() + r > 14 {
                continue;
            }
            let p = pad_code(&c.code, r).unwrap();
            let e = pad_embedding(&c.embedding, r).unwrap();
            assert_eq!(p.n(), c.code.n() + r);
            assert_eq!(p.k(), c.code.k());
            assert_eq!(p.rank(), c.code.rank() + r);
            if c.code.k() > 0 {
                assert_eq!(
                    code_distance(&p, None).unwrap().exact(),
                    code_distance(&c.code, None).unwrap().exact(),
                    "{} r = {r}",
                    c.name
                );
            }
            assert_eq!(interaction_multiset(&p, &e), interaction_multiset(&c.code, &c.embedding));
        }
    }
    let s = build_surface_code(3).unwrap();
    let p = pad_code(&s.code, 3).unwrap();
    assert_eq!((p.n(), p.k()), (12, 1));
    assert_eq!(code_distance(&p, None).unwrap().exact(), Some(3));
    assert!(pad_code(&s.code, 0).is_err());
}

#[test]
fn locality_build_has_no_long_interactions() {
    let b = build_embedded_concatenation(&four_two_two(), 3, 40.0, 1).unwrap();
    let c = &b.embedded.code;
    assert_eq!((c.n(), c.k()), (36, 2));
    let its = extract_interactions(c, &b.embedded.embedding).unwrap();
    assert!(its.iter().all(|i| !is_long(i.length, 40.0)));
    assert!(b.embedded.embedding.min_distance().unwrap() >= 1.0 - 1e-9);
    assert_eq!(b.report.long_interactions, 0);
    assert!(b.report.max_interaction_length < 40.0);

    let two = build_embedded_concatenation(&four_two_two(), 3, 40.0, 2).unwrap();
    assert_eq!(two.embedded.code.k(), 4);

    let plain = build_embedded_concatenation(&trivial_code(), 4, 2.0, 1).unwrap();
    assert!(plain.report.max_interaction_length <= 2f64.sqrt() + 1e-9);
}

#[test]
fn locality_build_needs_room_for_blocks() {
    // A 16-qubit inner block needs extent 3, which fits only once ell >= 30.
    let inner = random_code(16, 2, 40, 1).unwrap();
    assert!(build_embedded_concatenation(&inner, 2, 20.0, 1).is_err());
    assert!(build_embedded_concatenation(&inner, 2, 30.0, 1).is_ok());
}

#[test]
fn locality_plan_scales_as_quarter_power() {
    let small = plan_locality(10_000, 10_000, 100, &four_two_two(), None, 100.0).unwrap();
    let large = plan_locality(100_000_000, 100_000_000, 10_000, &four_two_two(), None, 100.0).unwrap();
    assert!((large.ell / small.ell - 10.0).abs() < 1e-9);
    assert!(plan_locality(100, 1, 1, &four_two_two(), None, 100.0).is_err());
    let b = build_locality_construction(10_000, 10_000, 100, &four_two_two(), None, 100.0).unwrap();
    assert_eq!(b.report.long_interactions, 0);
}
