use proptest::prelude::*;
use realgrass::algebra::{symmetrize_primitive, Coeff, Field, Int, Matrix, Monomial, ParamScalar, Poly, Rat};

fn poly_from(terms: &[(Vec<u32>, i64)]) -> Poly<Int> {
    Poly::from_terms(terms.iter().map(|(e, c)| (Monomial::from_exps(e), Int::from(*c))).collect())
}

fn arb_poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = Poly<Int>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -6i64..=6), 0..=max_terms).prop_map(|t| poly_from(&t))
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rat::new(Int::from(n), Int::from(d)))
}

fn arb_ratfunc() -> impl Strategy<Value = ParamScalar> {
    (arb_poly(2, 4), arb_poly(2, 3)).prop_map(|(n, d)| {
        let d = if d.is_zero() { Poly::one() } else { d };
        ParamScalar::new(n, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in arb_poly(3, 5), g in arb_poly(3, 5), h in arb_poly(3, 5)) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(h.mul(&f.add(&g)), h.mul(&f).add(&h.mul(&g)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn det_fraction_free_matches_cofactor(
        n in 1usize..=5,
        entries in prop::collection::vec((-4i64..=4, 0u32..2, 0u32..2), 25),
    ) {
        let data: Vec<Poly<Int>> = entries[..n * n]
            .iter()
            .map(|(c, a, b)| poly_from(&[(vec![*a, *b], *c)]))
            .collect();
        let m = Matrix::new(n, n, data);
        prop_assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn symmetrization_is_invariant(f in arb_poly(4, 4), i in 0usize..4, j in 0usize..4) {
        let s = symmetrize_primitive(&f, &[0, 1, 2, 3]).poly();
        let mut swap: Vec<usize> = (0..4).collect();
        swap.swap(i, j);
        prop_assert_eq!(s.rename(&swap), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn param_scalar_agrees_with_rationals(a in arb_ratfunc(), b in arb_ratfunc(), x in arb_rat(), y in arb_rat()) {
        let pt = [x, y];
        let (va, vb) = match (a.eval(&pt), b.eval(&pt)) {
            (Some(u), Some(v)) => (u, v),
            _ => return Ok(()),
        };
        prop_assert_eq!(Coeff::add(&a, &b).eval(&pt), Some(&va + &vb));
        prop_assert_eq!(Coeff::sub(&a, &b).eval(&pt), Some(&va - &vb));
        prop_assert_eq!(Coeff::mul(&a, &b).eval(&pt), Some(&va * &vb));
        if !Coeff::is_zero(&b) && !Coeff::is_zero(&vb) {
            if let Some(q) = Field::div(&a, &b).eval(&pt) {
                prop_assert_eq!(q, &va / &vb);
            }
        }
    }
}
