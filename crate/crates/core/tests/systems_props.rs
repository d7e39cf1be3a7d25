use proptest::prelude::*;
use realgrass::algebra::{Int, Rat};
use realgrass::schubert::{SchubertCondition, SchubertData};
use realgrass::systems::build::minor_count;
use realgrass::systems::{
    build_conjecture_ii, build_schubert_system, osculating_full, psi_poly, tp_check, BuildOptions, ChartSpec, FlagPoint, FlagSpec,
};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-15i64..=15, 1i64..=6).prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

fn arb_positive() -> impl Strategy<Value = Rat> {
    (1i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn group_law(n in 1usize..=7, s in arb_rat(), t in arb_rat()) {
        let lhs = osculating_full(n, &s).mul(&osculating_full(n, &t)).unwrap();
        prop_assert_eq!(lhs, osculating_full(n, &(s + t)));
    }

    #[test]
    fn osculating_is_totally_positive(n in 1usize..=6, s in arb_positive()) {
        prop_assert!(tp_check(&osculating_full(n, &s)).unwrap());
    }

    #[test]
    fn hypersurface_data_matches_direct_build(
        (m, p) in prop::sample::select(vec![(2usize, 2usize), (2, 3), (3, 2)]),
        pts in prop::collection::btree_set(-20i64..=20, 6),
    ) {
        let pts: Vec<FlagPoint> = pts.into_iter().take(m * p).map(FlagPoint::int).collect();
        let flags: Vec<FlagSpec> = pts.iter().cloned().map(FlagSpec::Osculating).collect();
        let a = build_schubert_system(&SchubertData::hypersurface(m, p), &flags, &ChartSpec::AffineIpX, &BuildOptions::default()).unwrap();
        let b = build_conjecture_ii(m, p, &pts, &BuildOptions::default()).unwrap();
        prop_assert_eq!(a.canonical(), b.canonical());
    }
}

#[test]
fn psi_divides_exactly() {
    for m in 2..=4 {
        for p in 2..=4 {
            let (q, vars) = psi_poly(m, p).unwrap_or_else(|e| panic!("({}, {}): {}", m, p, e));
            assert_eq!(vars.len(), m * p - 1);
            assert!(!q.is_zero());
        }
    }
}

#[test]
fn pair_chart_sizes() {
    let cases: [(usize, usize, &[&str]); 4] =
        [(2, 2, &["J1^4"]), (4, 2, &["J2^4"]), (3, 3, &["J2", "J2", "J1^5"]), (3, 3, &["135", "135", "J1^3"])];
    for (m, p, items) in cases {
        let data = SchubertData::parse(items, m, p).unwrap();
        let (a, b) = (&data.conditions[0], &data.conditions[1]);
        let mut flags = vec![FlagSpec::Osculating(FlagPoint::Infinity), FlagSpec::Osculating(FlagPoint::int(0))];
        for k in 2..data.conditions.len() {
            flags.push(FlagSpec::Osculating(FlagPoint::Param(format!("s{}", k))));
        }
        let sys = build_schubert_system(&data, &flags, &ChartSpec::pair(a, b), &BuildOptions::default()).unwrap();
        assert_eq!(sys.nvars(), m * p - a.codim() - b.codim(), "{:?}", items);
        let want: usize = data.conditions[2..].iter().map(|c| minor_count(c, true)).sum();
        assert_eq!(sys.equations.len(), want, "{:?}", items);
    }
    let j1 = SchubertCondition::pieri(2, 2, 1).unwrap();
    assert_eq!(minor_count(&j1, true), 1);
}
