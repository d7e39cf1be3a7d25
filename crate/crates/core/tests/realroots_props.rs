use proptest::prelude::*;
use realgrass::algebra::{elementary_symmetric_poly, parse_qpoly, Int, Poly, Rat, UniPoly};
use realgrass::realroots::{count_all_real_roots, isolate_real_roots, squarefree_factors, verify_identity, RhsTerm, SturmChain};

fn q(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn arb_uni() -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(-20i64..=20, 2..=9).prop_map(|mut c| {
        if *c.last().unwrap() == 0 {
            *c.last_mut().unwrap() = 1;
        }
        UniPoly::new(c.into_iter().map(|x| q(x, 1)).collect())
    })
}

/// `prod (x - r)^e`.
fn from_roots(roots: &[(Rat, usize)]) -> UniPoly<Rat> {
    let mut g = UniPoly::constant(q(1, 1));
    for (r, e) in roots {
        for _ in 0..*e {
            g = g.mul(&UniPoly::new(vec![-r.clone(), q(1, 1)]));
        }
    }
    g
}

fn compose_linear(g: &UniPoly<Rat>, scale: &Rat, shift: &Rat) -> UniPoly<Rat> {
    let lin = UniPoly::new(vec![shift.clone(), scale.clone()]);
    let mut acc = UniPoly::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(&lin).add(&UniPoly::constant(c.clone()));
    }
    acc
}

fn arb_roots() -> impl Strategy<Value = Vec<(Rat, usize)>> {
    prop::collection::btree_map(-8i64..=8, 1usize..=3, 1..=5).prop_map(|m| m.into_iter().map(|(r, e)| (q(r, 2), e)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(80))]

    #[test]
    fn sturm_matches_isolation(g in arb_uni()) {
        prop_assert_eq!(count_all_real_roots(&g), isolate_real_roots(&g, None).len());
    }

    #[test]
    fn count_is_affine_invariant(g in arb_uni(), c in arb_rat(), l in (1i64..=7, 1i64..=3)) {
        let n = count_all_real_roots(&g);
        prop_assert_eq!(count_all_real_roots(&compose_linear(&g, &q(1, 1), &c)), n);
        prop_assert_eq!(count_all_real_roots(&compose_linear(&g, &q(l.0, l.1), &q(0, 1))), n);
    }

    #[test]
    fn squarefree_bookkeeping(roots in arb_roots(), extra in arb_uni()) {
        let g = from_roots(&roots).mul(&extra);
        let parts = squarefree_factors(&g);
        let total: usize = parts.iter().map(|(f, k)| f.degree() * k).sum();
        prop_assert_eq!(total, g.degree());
        let excess: usize = parts.iter().map(|(f, k)| f.degree() * (k - 1)).sum();
        prop_assert_eq!(g.squarefree().degree() + excess, g.degree());
        prop_assert_eq!(SturmChain::new(&g).squarefree_degree(), g.squarefree().degree());
    }

    #[test]
    fn discriminant_detects_repeats(roots in arb_roots()) {
        let g = from_roots(&roots);
        let repeated = roots.iter().any(|(_, e)| *e > 1);
        let common = UniPoly::gcd(&g, &g.derivative()).degree() > 0;
        prop_assert_eq!(common, repeated);
        prop_assert_eq!(g.discriminant() == q(0, 1), common);
    }
}

fn permuted(p: &Poly<Rat>, perm: &[usize]) -> Poly<Rat> {
    p.rename(perm)
}

#[test]
fn identity_check_is_stable_under_permutations() {
    let vars = ["s", "t", "u", "v"];
    let group = [0usize, 1, 2, 3];
    let e = |i| elementary_symmetric_poly::<Rat>(&group, i).unwrap();
    let lhs = e(2).mul(&e(2)).scale(&q(16, 1)).sub(&e(1).mul(&e(3)).scale(&q(48, 1))).add(&e(4).scale(&q(192, 1)));
    let sq = |a: &str| parse_qpoly(a, &vars).unwrap();
    let squares = [sq("(s-t)^2*(u-v)^2"), sq("(s-u)^2*(t-v)^2"), sq("(s-v)^2*(t-u)^2")];
    let rhs = |perm: &[usize], k: usize| -> Vec<RhsTerm> {
        squares[..k].iter().map(|f| RhsTerm::Product { coeff: q(8, 1), factors: vec![permuted(f, perm)] }).collect()
    };
    let mut perm: Vec<usize> = group.to_vec();
    let mut checked = 0;
    // every permutation of four letters, by Heap's algorithm
    let mut c = [0usize; 4];
    let mut visit = |perm: &[usize]| {
        let l = permuted(&lhs, perm);
        assert!(verify_identity(&l, &rhs(perm, 3), &group).exact);
        assert!(!verify_identity(&l, &rhs(perm, 2), &group).holds);
        checked += 1;
    };
    visit(&perm);
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    assert_eq!(checked, 24);
}
