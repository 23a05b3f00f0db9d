use vcpath_core::{
    check_filter, format_path, parse_path, validate, CoreError, Family, Leading, LatticePath,
    PathClass, PlainFamily, Region, StepFilter, StepVector,
};

fn class(family: Family, region: Region, leading: Leading) -> PathClass {
    PathClass::new(family, region, leading)
}

#[test]
fn single_vertical_is_valid_when_leading_is_free() {
    let p = LatticePath::new(vec![StepVector::new(0, 1)]);
    let c = class(Family::MotzkinW, Region::Half, Leading::Free);
    assert_eq!(validate(&p, c), Ok(true));
    let r = class(Family::MotzkinW, Region::Half, Leading::Restricted);
    assert_eq!(validate(&p, r), Ok(false));
}

#[test]
fn consecutive_verticals_are_invalid_in_every_class() {
    let p = LatticePath::new(vec![StepVector::new(0, 1), StepVector::new(0, 1)]);
    for c in PathClass::all() {
        if c.family == Family::SchroderW {
            continue; // (0,1) is not a SchroderW step; the analogue is below
        }
        assert_eq!(validate(&p, c), Ok(false), "class {c}");
    }
    let p2 = LatticePath::new(vec![StepVector::new(0, 2), StepVector::new(0, -2)]);
    let c2 = class(Family::SchroderW, Region::Half, Leading::Free);
    assert_eq!(validate(&p2, c2), Ok(false));
}

#[test]
fn quarter_plane_rejects_negative_vertices() {
    let p = LatticePath::new(vec![StepVector::new(1, -1)]);
    assert_eq!(
        validate(&p, class(Family::MotzkinW, Region::Quarter, Leading::Free)),
        Ok(false)
    );
    assert_eq!(
        validate(&p, class(Family::MotzkinW, Region::Half, Leading::Free)),
        Ok(true)
    );
}

#[test]
fn foreign_step_is_an_error_not_a_false() {
    let p = LatticePath::new(vec![StepVector::new(2, 0)]);
    let err = validate(&p, class(Family::MotzkinW, Region::Half, Leading::Free));
    assert_eq!(
        err,
        Err(CoreError::ForeignStep {
            step: StepVector::new(2, 0)
        })
    );
}

#[test]
fn parse_motzkin_letters() {
    let p = parse_path("FUd", Family::MotzkinW).unwrap();
    assert_eq!(
        p.steps(),
        &[
            StepVector::new(1, 0),
            StepVector::new(1, 1),
            StepVector::new(0, -1)
        ]
    );
}

#[test]
fn parse_schroder_letters() {
    let p = parse_path("UHu", Family::SchroderW).unwrap();
    assert_eq!(
        p.steps(),
        &[
            StepVector::new(1, 1),
            StepVector::new(2, 0),
            StepVector::new(0, 2)
        ]
    );
}

#[test]
fn parse_rejects_unknown_and_foreign_characters() {
    assert_eq!(
        parse_path("x", Family::MotzkinW),
        Err(CoreError::UnknownChar { ch: 'x', pos: 0 })
    );
    // 'F' names a step, but not one DyckW has.
    assert!(matches!(
        parse_path("UF", Family::DyckW),
        Err(CoreError::CharNotInFamily { ch: 'F', pos: 1, .. })
    ));
    // Vertical letters are not plain-family steps.
    assert!(matches!(
        parse_path("u", PlainFamily::Motzkin),
        Err(CoreError::CharNotInFamily { ch: 'u', pos: 0, .. })
    ));
    // 'H' belongs to the Schröder alphabet only.
    assert!(matches!(
        parse_path("H", Family::MotzkinW),
        Err(CoreError::CharNotInFamily { ch: 'H', pos: 0, .. })
    ));
}

#[test]
fn endpoint_sums_components() {
    assert_eq!(LatticePath::empty().endpoint(), (0, 0));
    let p = LatticePath::new(vec![StepVector::new(1, 1), StepVector::new(0, -1)]);
    assert_eq!(p.endpoint(), (1, 0));
    let q = LatticePath::new(vec![StepVector::new(2, 0), StepVector::new(1, -1)]);
    assert_eq!(q.endpoint(), (3, -1));
}

#[test]
fn flat_parity_filters() {
    let ufd = parse_path("UFD", PlainFamily::Motzkin).unwrap();
    assert!(check_filter(&ufd, StepFilter::NoFlatAtOdd));
    assert!(!check_filter(&ufd, StepFilter::NoFlatAtEven));
    let fud = parse_path("FUD", PlainFamily::Motzkin).unwrap();
    assert!(!check_filter(&fud, StepFilter::NoFlatAtOdd));
    assert!(check_filter(&fud, StepFilter::NoFlatAtEven));
}

#[test]
fn smooth_filter_accepts_bisected_flats_and_equal_pairs() {
    let uh = parse_path("UH", PlainFamily::Delannoy).unwrap();
    assert!(check_filter(&uh, StepFilter::SmoothAtColumns { residue: 2 }));
    // Column 2 sits between U and D: a direction change.
    let uudd = parse_path("UUDD", PlainFamily::Delannoy).unwrap();
    assert!(!check_filter(&uudd, StepFilter::SmoothAtColumns { residue: 2 }));
    // Column 2 sits between the two U's of "UUU": smooth.
    let uuu = parse_path("UUU", PlainFamily::Delannoy).unwrap();
    assert!(check_filter(&uuu, StepFilter::SmoothAtColumns { residue: 2 }));
    // Width-2 paths have one required column for residue 1, namely x = 1.
    let ud = parse_path("UD", PlainFamily::Delannoy).unwrap();
    assert!(!check_filter(&ud, StepFilter::SmoothAtColumns { residue: 1 }));
    let uu = parse_path("UU", PlainFamily::Delannoy).unwrap();
    assert!(check_filter(&uu, StepFilter::SmoothAtColumns { residue: 1 }));
    let h = parse_path("H", PlainFamily::Delannoy).unwrap();
    assert!(check_filter(&h, StepFilter::SmoothAtColumns { residue: 1 }));
}

#[test]
fn schroderw_steps_preserve_endpoint_parity() {
    for &s in Family::SchroderW.steps() {
        assert_eq!((s.dx + s.dy).rem_euclid(2), 0, "step {s}");
    }
    for &s in PlainFamily::Delannoy.steps() {
        assert_eq!((s.dx + s.dy).rem_euclid(2), 0, "step {s}");
    }
}

#[test]
fn class_ids_round_trip() {
    for c in PathClass::all() {
        assert_eq!(PathClass::from_id(c.id()), Some(c));
    }
    assert_eq!(PathClass::from_id("nope"), None);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn motzkinw_string() -> impl Strategy<Value = String> {
        proptest::collection::vec(
            proptest::sample::select(vec!['F', 'U', 'D', 'u', 'd']),
            0..14,
        )
        .prop_map(|cs| cs.into_iter().collect())
    }

    fn schroderw_string() -> impl Strategy<Value = String> {
        proptest::collection::vec(
            proptest::sample::select(vec!['U', 'D', 'H', 'u', 'd']),
            0..14,
        )
        .prop_map(|cs| cs.into_iter().collect())
    }

    proptest! {
        /// format_path ∘ parse_path is the identity on well-formed strings.
        #[test]
        fn parse_format_round_trip_motzkin(s in motzkinw_string()) {
            let p = parse_path(&s, Family::MotzkinW).unwrap();
            prop_assert_eq!(format_path(&p).unwrap(), s);
        }

        #[test]
        fn parse_format_round_trip_schroder(s in schroderw_string()) {
            let p = parse_path(&s, Family::SchroderW).unwrap();
            prop_assert_eq!(format_path(&p).unwrap(), s);
        }

        /// Every prefix of a valid path is valid for the same class with the
        /// leading restriction kept (the first step does not move).
        #[test]
        fn validity_is_monotone_under_truncation(s in motzkinw_string()) {
            for c in [
                PathClass::new(Family::MotzkinW, Region::Half, Leading::Free),
                PathClass::new(Family::MotzkinW, Region::Quarter, Leading::Restricted),
            ] {
                let p = parse_path(&s, Family::MotzkinW).unwrap();
                if validate(&p, c).unwrap() {
                    for k in 0..=p.len() {
                        let prefix = LatticePath::new(p.steps()[..k].to_vec());
                        prop_assert!(validate(&prefix, c).unwrap());
                    }
                }
            }
        }
    }
}
