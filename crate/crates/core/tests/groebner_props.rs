use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use realgrass::algebra::{Int, Poly};
use realgrass::groebner::{
    buchberger, eliminant, is_zero_dimensional, lex_eliminant, proportional, shape_check, Budget, GroebnerBasis, MonomialOrder,
};
use realgrass::systems::{build_conjecture_ii, BuildOptions, FlagPoint};

fn instance(m: usize, p: usize, pts: &[i64]) -> Vec<Poly<Int>> {
    let pts: Vec<FlagPoint> = pts.iter().take(m * p).map(|&s| FlagPoint::int(s)).collect();
    build_conjecture_ii(m, p, &pts, &BuildOptions::default()).unwrap().integer_equations()
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    prop::sample::select(vec![(2usize, 2usize), (2, 3), (3, 2)])
}

fn points() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-12i64..=12, 6).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn buchberger_output_is_reduced_and_unique((m, p) in shape(), pts in points(), seed in any::<u64>()) {
        let eqs = instance(m, p, &pts);
        let order = MonomialOrder::degrevlex_natural(m * p);
        let gb = buchberger(&eqs, &order, &Budget::unlimited()).unwrap();
        prop_assert!(gb.verify_s_pairs());
        prop_assert!(gb.is_reduced());
        let mut shuffled = eqs.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let other = buchberger(&shuffled, &order, &Budget::unlimited()).unwrap();
        prop_assert_eq!(other.generators(), gb.generators());
    }

    #[test]
    fn eliminant_degrees((m, p) in shape(), pts in points()) {
        let n = m * p;
        let gb: GroebnerBasis<Int> = buchberger(&instance(m, p, &pts), &MonomialOrder::degrevlex_natural(n), &Budget::unlimited()).unwrap();
        let (zero_dim, dim) = is_zero_dimensional(&gb);
        prop_assert!(zero_dim);
        let dim = dim.unwrap();
        let degs: Vec<usize> = (0..n).map(|v| eliminant(&gb, v).unwrap().degree()).collect();
        prop_assert!(degs.iter().all(|&d| d <= dim), "{:?} vs {}", degs, dim);
        prop_assert!(degs.contains(&dim), "{:?} vs {}", degs, dim);
    }

    #[test]
    fn lex_basis_agrees_with_eliminant(pts in points()) {
        let eqs = instance(2, 2, &pts);
        let lex = MonomialOrder::lex_natural(4);
        let v = lex.least_var();
        let gb = buchberger(&eqs, &lex, &Budget::unlimited()).unwrap();
        if shape_check(&gb, v) {
            let from_lex = lex_eliminant(&gb, v).unwrap();
            let drl = buchberger(&eqs, &MonomialOrder::degrevlex_natural(4), &Budget::unlimited()).unwrap();
            let e = eliminant(&drl, v).unwrap();
            prop_assert!(proportional(&from_lex.to_poly(0), &e.to_poly(0)));
        }
    }
}
