use num_bigint::{BigInt, BigUint};
use num_traits::One;

use vcpath_core::{PathClass, PlainFamily, Region, StepFilter};
use vcpath_dp::plain::{filtered_motzkin, triangle};
use vcpath_dp::sequence;
use vcpath_oeis::{
    apply_transform, compare, compare_terms, fetch_bfile, FetchConfig, Fetched, OeisError,
    SequenceRef, Source, Transform, BUNDLED_SEQUENCES,
};

fn fetch_offline(a_number: &str) -> Fetched {
    fetch_bfile(a_number, &FetchConfig::offline()).unwrap()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&n| BigInt::from(n)).collect()
}

fn to_bigints(v: Vec<BigUint>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

#[test]
fn every_bundled_sequence_parses_with_thirty_terms() {
    for a_number in BUNDLED_SEQUENCES {
        let fetched = fetch_offline(a_number);
        assert_eq!(fetched.source, Source::Bundled, "{a_number}");
        assert_eq!(fetched.terms.len(), 30, "{a_number}");
    }
}

#[test]
fn bundled_motzkin_numbers_match_frozen_values() {
    let frozen: [i64; 21] = [
        1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634, 310572, 853467,
        2356779, 6536382, 18199284, 50852019,
    ];
    let values = fetch_offline("A001006").values();
    assert_eq!(&values[..21], &ints(&frozen)[..]);
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut v = BigUint::one();
    for i in 0..k {
        v = v * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    v
}

#[test]
fn bundled_central_trinomials_satisfy_the_binomial_identity() {
    let values = fetch_offline("A002426").values();
    for (n, v) in values.iter().enumerate() {
        let mut sum = BigUint::from(0u32);
        for k in 0..=(n / 2) {
            sum += binomial(n, 2 * k) * binomial(2 * k, k);
        }
        assert_eq!(v, &BigInt::from(sum), "term {n}");
    }
}

#[test]
fn snapshots_match_independent_plain_counts() {
    let motzkin = triangle(PlainFamily::Motzkin, 59).column(0);
    let trinomial = triangle(PlainFamily::GrandMotzkin, 58).column(0);
    assert_eq!(fetch_offline("A001006").values(), to_bigints(motzkin[..30].to_vec()));
    assert_eq!(fetch_offline("A002426").values(), to_bigints(trinomial[..30].to_vec()));

    let even_m: Vec<BigUint> = (0..30).map(|n| motzkin[2 * n].clone()).collect();
    let odd_m: Vec<BigUint> = (0..30).map(|n| motzkin[2 * n + 1].clone()).collect();
    let even_t: Vec<BigUint> = (0..30).map(|n| trinomial[2 * n].clone()).collect();
    assert_eq!(fetch_offline("A026945").values(), to_bigints(even_m));
    assert_eq!(fetch_offline("A099250").values(), to_bigints(odd_m));
    assert_eq!(fetch_offline("A082758").values(), to_bigints(even_t));

    // Flat-filtered interleaves: flats sit at positions of the same parity
    // as the length.
    for (a_number, region) in [("A214938", Region::Quarter), ("A026520", Region::Half)] {
        let no_odd = filtered_motzkin(region, StepFilter::NoFlatAtOdd, 29);
        let no_even = filtered_motzkin(region, StepFilter::NoFlatAtEven, 29);
        let expected: Vec<BigInt> = (0..30)
            .map(|len| {
                let table = if len % 2 == 0 { &no_odd } else { &no_even };
                BigInt::from(table.get(len, 0).clone())
            })
            .collect();
        assert_eq!(fetch_offline(a_number).values(), expected, "{a_number}");
    }
}

#[test]
fn bisection_snapshots_are_bisections_of_their_parents() {
    let cases = [
        ("A001006", Transform::BisectEven, "A026945"),
        ("A001006", Transform::BisectOdd, "A099250"),
        ("A002426", Transform::BisectEven, "A082758"),
    ];
    for (parent, transform, child) in cases {
        let parent_values = fetch_offline(parent).values();
        let bisected = apply_transform(&parent_values, &transform);
        let child_values = fetch_offline(child).values();
        assert_eq!(&child_values[..bisected.len()], &bisected[..], "{child}");
    }
}

#[test]
fn table_correspondences_hold_offline() {
    let cases = [
        ("mwr", "A001006", Transform::BisectEven),
        ("mw", "A001006", Transform::BisectOdd),
        ("gmwr", "A002426", Transform::BisectEven),
        ("gmw", "A002426", Transform::BisectOdd),
        ("dwr", "A214938", Transform::BisectEven),
        ("dw", "A214938", Transform::BisectOdd),
        ("gdwr", "A026520", Transform::BisectEven),
        ("gdw", "A026520", Transform::BisectOdd),
        ("mwr", "A026945", Transform::Identity),
        ("mw", "A099250", Transform::Identity),
        ("gmwr", "A082758", Transform::Identity),
    ];
    let config = FetchConfig::offline();
    for (id, a_number, transform) in cases {
        let class = PathClass::from_id(id).unwrap();
        let computed = to_bigints(sequence(class, 0, 16));
        let reference = SequenceRef::new(a_number, transform).unwrap();
        let report = compare(&computed, &reference, &config).unwrap();
        assert!(report.first_mismatch.is_none(), "{id} vs {report}");
        assert!(report.matched_terms >= 15, "{id} vs {report}");
        assert_eq!(report.offset_shift, 0, "{id} vs {report}");
        assert_eq!(report.source, Source::Bundled);
    }
}

#[test]
fn alignment_absorbs_leading_offset_differences() {
    let fetched = Fetched {
        a_number: "A000000".to_string(),
        terms: vec![
            (0, BigInt::from(1)),
            (1, BigInt::from(1)),
            (2, BigInt::from(2)),
            (3, BigInt::from(4)),
            (4, BigInt::from(9)),
        ],
        source: Source::Bundled,
    };
    let report = compare_terms(&ints(&[2, 4, 9]), &Transform::Identity, &fetched);
    assert_eq!(report.offset_shift, 2);
    assert_eq!(report.matched_terms, 3);
    assert!(report.first_mismatch.is_none());

    let report = compare_terms(&ints(&[1, 1, 3]), &Transform::Identity, &fetched);
    assert_eq!(report.offset_shift, 0);
    assert_eq!(report.matched_terms, 2);
    assert_eq!(
        report.first_mismatch,
        Some((2, BigInt::from(2), BigInt::from(3)))
    );

    let report = compare_terms(&ints(&[1, 1, 2, 4, 9, 99]), &Transform::Identity, &fetched);
    assert_eq!(report.matched_terms, 5);
    assert!(report.first_mismatch.is_none(), "running out of reference terms is not a mismatch");
}

#[test]
fn cache_is_preferred_offline_and_missing_sequences_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("b999999.txt"), "0 5\n1 7\n").unwrap();
    std::fs::write(dir.path().join("b001006.txt"), "0 99\n").unwrap();
    let config = FetchConfig {
        cache_dir: Some(dir.path().to_path_buf()),
        allow_network: false,
    };
    let fetched = fetch_bfile("A999999", &config).unwrap();
    assert_eq!(fetched.source, Source::Cache);
    assert_eq!(fetched.values(), ints(&[5, 7]));

    // A planted cache entry overrides the bundled snapshot.
    let fetched = fetch_bfile("A001006", &config).unwrap();
    assert_eq!(fetched.source, Source::Cache);
    assert_eq!(fetched.values(), ints(&[99]));

    let err = fetch_bfile("A876543", &config).unwrap_err();
    assert!(matches!(err, OeisError::Unavailable { .. }));
}

#[test]
fn reports_render_their_source_and_alignment() {
    let report = compare(
        &ints(&[1, 1, 2, 4]),
        &SequenceRef::new("A001006", Transform::Identity).unwrap(),
        &FetchConfig::offline(),
    )
    .unwrap();
    let line = report.to_string();
    assert!(line.contains("A001006"), "{line}");
    assert!(line.contains("bundled"), "{line}");
    assert!(line.contains("shift +0"), "{line}");
}
