use proptest::prelude::*;
use realgrass::algebra::{coeff::rat_text, Int, Rat};
use realgrass::systems::Family;
use realgrass::verifier::{verify_instance, InstanceSpec, Verdict, VerificationReport};

fn spec(m: usize, p: usize, pts: &[Rat]) -> InstanceSpec {
    let mut s = InstanceSpec::new(Family::Hypersurface, m, p);
    s.points = pts.iter().map(rat_text).collect();
    s
}

fn consistent(r: &VerificationReport) -> bool {
    if r.verdict != Verdict::AllReal {
        return true;
    }
    let d = r.expected_value();
    d.is_some()
        && r.real_roots == d
        && r.eliminant_degree == d
        && r.quotient_dimension == d
        && r.multiplicity_free == Some(true)
        && r.intervals.len() == d.unwrap()
}

fn points(k: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::btree_set(-15i64..=15, k).prop_map(|s| s.into_iter().map(Int::from).map(Rat::from_integer).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn translation_invariance_22(pts in points(4), c in (-9i64..=9, 1i64..=4)) {
        let c = Rat::new(Int::from(c.0), Int::from(c.1));
        let a = verify_instance(&spec(2, 2, &pts)).unwrap();
        let moved: Vec<Rat> = pts.iter().map(|x| x + &c).collect();
        let b = verify_instance(&spec(2, 2, &moved)).unwrap();
        prop_assert_eq!(a.verdict, Verdict::AllReal);
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.real_roots, b.real_roots);
        prop_assert!(consistent(&a) && consistent(&b));
    }

    #[test]
    fn translation_invariance_23(pts in points(6), c in (-5i64..=5, 1i64..=3)) {
        let c = Rat::new(Int::from(c.0), Int::from(c.1));
        let a = verify_instance(&spec(2, 3, &pts)).unwrap();
        let moved: Vec<Rat> = pts.iter().map(|x| x + &c).collect();
        let b = verify_instance(&spec(2, 3, &moved)).unwrap();
        prop_assert_eq!(a.verdict, Verdict::AllReal);
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.real_roots, b.real_roots);
        prop_assert!(consistent(&a) && consistent(&b));
    }

    #[test]
    fn reports_are_deterministic(pts in points(4)) {
        let s = spec(2, 2, &pts);
        let a = verify_instance(&s).unwrap().without_timings().to_json();
        let b = verify_instance(&s).unwrap().without_timings().to_json();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn deterministic_from_text() {
    let text = "family = \"total-positivity\"\nm = 2\np = 2\ndata = [\"J1^4\"]\nflags = [{ tp = { seed = 11 } }, { tp = { seed = 12 } }]\n";
    let s = InstanceSpec::from_text(text).unwrap();
    let a = verify_instance(&s).unwrap();
    let b = verify_instance(&InstanceSpec::from_text(text).unwrap()).unwrap();
    assert_eq!(a.without_timings().to_json(), b.without_timings().to_json());
    assert!(consistent(&a));
}
