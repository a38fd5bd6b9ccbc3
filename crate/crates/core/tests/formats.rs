use proptest::prelude::*;
use qloc_core::code_geometry::Embedding;
use qloc_core::corpus::{corpus, random_code};
use qloc_core::formats::{parse_code, parse_embedding, write_code, write_embedding};
use qloc_core::Error;

#[test]
fn corpus_round_trips() {
    for c in corpus(12, 1, 3) {
        let text = write_code(&c.code, Some(3));
        let back = parse_code(&text).unwrap();
        assert_eq!(back.code.generators(), c.code.generators(), "{}", c.name);
        assert_eq!(write_code(&back.code, back.claimed_d), text);
        let e = write_embedding(&c.embedding);
        assert_eq!(parse_embedding(&e).unwrap(), c.embedding);
    }
}

proptest! {
    #[test]
    fn random_codes_round_trip(n in 1usize..40, seed in any::<u64>()) {
        let code = random_code(n, n / 3, 2 * n, seed).unwrap();
        let back = parse_code(&write_code(&code, None)).unwrap();
        prop_assert_eq!(back.code.generators(), code.generators());
        prop_assert_eq!(back.claimed_d, None);
    }

    #[test]
    fn floats_round_trip(xs in proptest::collection::vec(-1e6f64..1e6, 1..20)) {
        let pts: Vec<[f64; 2]> = xs.iter().enumerate().map(|(i, &x)| [x, 3.0 * i as f64]).collect();
        let e = Embedding::new(pts).unwrap();
        let back = parse_embedding(&write_embedding(&e)).unwrap();
        prop_assert_eq!(back.points(), e.points());
    }
}

#[test]
fn non_commuting_pair_is_named() {
    match parse_code(r#"{"n": 2, "generators": ["XX", "ZI"]}"#) {
        Err(Error::NonCommuting { a: 0, b: 1 }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn bad_letter_located() {
    match parse_code("{\"n\": 2,\n\"generators\": [\"XQ\"]}") {
        Err(Error::Parse { line: 2, message, .. }) => assert!(message.contains("generator 0"), "{message}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_fields_rejected() {
    assert!(parse_code(r#"{"n": 1, "generators": [], "k": 1}"#).is_err());
}
