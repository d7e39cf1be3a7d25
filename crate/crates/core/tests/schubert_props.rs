use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realgrass::algebra::{colex_subsets, Int};
use realgrass::schubert::{d_closed_form, intersection_number, SchubertCondition, SchubertData};

fn all_conditions(m: usize, p: usize) -> Vec<SchubertCondition> {
    colex_subsets(m + p, p)
        .into_iter()
        .map(|s| SchubertCondition::new(m, p, s.iter().map(|i| i + 1).collect()).unwrap())
        .collect()
}

/// Random nontrivial conditions whose codimensions add up to `total`.
fn fill(rng: &mut ChaCha8Rng, m: usize, p: usize, total: usize) -> Vec<SchubertCondition> {
    let pool = all_conditions(m, p);
    let mut out = Vec::new();
    let mut rem = total;
    while rem > 0 {
        let fits: Vec<&SchubertCondition> = pool.iter().filter(|c| c.codim() > 0 && c.codim() <= rem).collect();
        let c = (*fits.choose(rng).unwrap()).clone();
        rem -= c.codim();
        out.push(c);
    }
    out
}

fn shape(rng: &mut ChaCha8Rng, max_mp: usize) -> (usize, usize) {
    loop {
        let m = rng.gen_range(1..=5);
        let p = rng.gen_range(1..=5);
        if m * p <= max_mp {
            return (m, p);
        }
    }
}

fn random_data(seed: u64, max_mp: usize) -> SchubertData {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, p) = shape(&mut rng, max_mp);
    SchubertData::new(m, p, fill(&mut rng, m, p, m * p)).unwrap()
}

fn number(m: usize, p: usize, conds: Vec<SchubertCondition>) -> Int {
    intersection_number(&SchubertData::new(m, p, conds).unwrap()).unwrap()
}

#[test]
fn closed_form_is_symmetric() {
    for m in 1..=8 {
        for p in 1..=8 {
            assert_eq!(d_closed_form(m, p), d_closed_form(p, m), "({}, {})", m, p);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reorder_and_duality(seed in any::<u64>()) {
        let d = random_data(seed, 10);
        let n = intersection_number(&d).unwrap();
        let mut conds = d.conditions.clone();
        conds.reverse();
        prop_assert_eq!(&number(d.m, d.p, conds), &n);
        let dual = d.dual_perp();
        prop_assert_eq!((dual.m, dual.p), (d.p, d.m));
        prop_assert_eq!(intersection_number(&dual).unwrap(), n);
    }

    #[test]
    fn pieri_recursion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, p) = shape(&mut rng, 10);
        let pool = all_conditions(m, p);
        let first = (*pool.iter().filter(|c| c.codim() < m * p).collect::<Vec<_>>().choose(&mut rng).unwrap()).clone();
        let a = rng.gen_range(1..=m.min(m * p - first.codim()));
        let rest = fill(&mut rng, m, p, m * p - first.codim() - a);
        let mut lhs = vec![first.clone(), SchubertCondition::pieri(m, p, a).unwrap()];
        lhs.extend(rest.iter().cloned());
        let mut sum = Int::from(0);
        for b in first.pieri_successors(a) {
            let mut conds = vec![b];
            conds.extend(rest.iter().cloned());
            sum += number(m, p, conds);
        }
        prop_assert_eq!(number(m, p, lhs), sum);
    }

    #[test]
    fn plus_embedding(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, p) = loop {
            let s = shape(&mut rng, 10);
            if s.0 * (s.1 + 1) <= 10 {
                break s;
            }
        };
        let d = SchubertData::new(m, p, fill(&mut rng, m, p, m * p)).unwrap();
        let mut up: Vec<SchubertCondition> = d.conditions.iter().map(|c| c.plus_embed()).collect();
        up.push(SchubertCondition::pieri(m, p + 1, m).unwrap());
        prop_assert_eq!(number(m, p + 1, up), intersection_number(&d).unwrap());
    }
}
