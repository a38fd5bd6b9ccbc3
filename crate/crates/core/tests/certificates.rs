mod common;

use proptest::prelude::*;
use qloc_core::code_geometry::{Embedding, Rectangle};
use qloc_core::correctability::{
    build_partition, certify_recursive, grow_square, verify_certificate, CertBuilder, Certificate, Constants, Context,
};
use qloc_core::corpus::{corpus, CorpusCode};
use qloc_core::pauli_algebra::{code_distance, is_correctable, QubitSet, StabilizerCode};

fn gens_of(code: &StabilizerCode) -> Vec<String> {
    code.generators().iter().map(|g| g.to_string()).collect()
}

fn distance_for(code: &StabilizerCode) -> usize {
    if code.k() == 0 {
        code.n() + 1
    } else {
        code_distance(code, None).unwrap().bound()
    }
}

fn check(code: &StabilizerCode, cert: &Certificate, what: &str) {
    let v = verify_certificate(code, cert);
    assert!(v.valid, "{what}: {v:?}");
    let oracle = common::Oracle::new(code.n(), gens_of(code));
    let root = cert.root_set();
    assert!(oracle.correctable(root.members()), "{what}: root {:?}", root.members());
    assert!(is_correctable(code, &root).unwrap().correctable);
    assert_eq!(&Certificate::from_json(&cert.to_json()).unwrap(), cert);
}

fn bounding(c: &CorpusCode) -> Rectangle {
    let b = Rectangle::bounding(c.embedding.points().iter().copied()).unwrap();
    Rectangle::new(b.x_lo - 1.0, b.x_hi + 1.0, b.y_lo - 1.0, b.y_hi + 1.0).unwrap()
}

#[test]
fn emitted_certificates_are_sound() {
    let mut emitted = 0;
    for c in corpus(10, 1, 17) {
        let d = distance_for(&c.code);
        for ell in [0.5, 1.0, 1.5, 2.5] {
            let ctx = Context::new(&c.code, &c.embedding, ell, d, Constants::default()).unwrap();
            if let Ok(cert) = certify_recursive(&ctx, &bounding(&c)).unwrap() {
                check(&c.code, &cert, &format!("{} recursive ell = {ell}", c.name));
                emitted += 1;
            }
            if ell >= 1.0 {
                for p in c.embedding.points() {
                    let sq = Rectangle::square(*p, 1.0);
                    if let Ok(Ok(cert)) = grow_square(&ctx, &sq) {
                        check(&c.code, &cert, &format!("{} grow ell = {ell}", c.name));
                        emitted += 1;
                    }
                }
                if let Ok(p) = build_partition(&ctx, Some(5.0 * ell)) {
                    for cert in [&p.cert_a, &p.cert_b].into_iter().flatten() {
                        check(&c.code, cert, &format!("{} partition ell = {ell}", c.name));
                        emitted += 1;
                    }
                }
            }
        }
    }
    assert!(emitted > 100, "{emitted}");
}

#[test]
fn recursive_cover_of_all_qubits_fails_with_logical_qubits() {
    for c in corpus(10, 1, 23).into_iter().filter(|c| c.code.k() >= 1) {
        let d = distance_for(&c.code);
        for ell in [0.5, 1.0, 2.0] {
            let ctx = Context::new(&c.code, &c.embedding, ell, d, Constants::default()).unwrap();
            let r = certify_recursive(&ctx, &bounding(&c)).unwrap();
            assert!(r.is_err(), "{} ell = {ell}: all qubits certified", c.name);
        }
    }
}

#[test]
fn partition_on_large_product_state() {
    let n = 24 * 24;
    let gens: Vec<String> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 'Z' } else { 'I' }).collect())
        .collect();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    let code = StabilizerCode::from_strs(n, &refs).unwrap();
    let emb = Embedding::lattice(24, 24);
    let ctx = Context::new(&code, &emb, 1.0, 100, Constants::default()).unwrap();
    let p = build_partition(&ctx, Some(8.0)).unwrap();
    assert_eq!(p.a.len() + p.b.len() + p.c.len(), n);
    assert!(p.a.is_disjoint(&p.b) && p.a.is_disjoint(&p.c) && p.b.is_disjoint(&p.c));
    let (ca, cb) = (p.cert_a.unwrap(), p.cert_b.unwrap());
    assert!(verify_certificate(&code, &ca).valid && verify_certificate(&code, &cb).valid);
    assert_eq!(ca.root_set(), p.a);
    assert_eq!(cb.root_set(), p.b);
}

#[test]
fn partition_rejects_small_ell() {
    let c = &corpus(4, 1, 1)[1];
    let ctx = Context::new(&c.code, &c.embedding, 0.5, 2, Constants::default()).unwrap();
    assert!(build_partition(&ctx, Some(4.0)).is_err());
}

// Random derivations over small codes: whenever the verifier accepts, the
// root must be correctable.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn verifier_is_sound(code_ix in 0usize..1000, ops in proptest::collection::vec((0u8..4, any::<u32>(), any::<u32>()), 1..12)) {
        let codes = corpus(6, 1, 5);
        let c = &codes[code_ix % codes.len()];
        let n = c.code.n();
        let d = distance_for(&c.code);
        let mut b = CertBuilder::new(d);
        let mut ids = Vec::new();
        for (op, x, y) in ops {
            let set: QubitSet = (0..n).filter(|q| x >> q & 1 == 1).collect();
            let id = match (op, ids.len()) {
                (_, 0) | (0, _) => b.leaf(set),
                (1, m) => {
                    let parent = ids[y as usize % m];
                    b.subset(set.intersection(&b.root_of(parent)), parent)
                }
                (2, m) => b.union(vec![ids[x as usize % m], ids[y as usize % m]]),
                (_, m) => b.expansion(ids[x as usize % m], ids[y as usize % m]),
            };
            ids.push(id);
        }
        let root = *ids.last().unwrap();
        let cert = b.finish(root);
        if verify_certificate(&c.code, &cert).valid {
            let oracle = common::Oracle::new(n, gens_of(&c.code));
            prop_assert!(oracle.correctable(cert.root_set().members()));
        }
    }
}
