//! Intersection numbers of Pieri data by recursive Pieri expansion.

use super::condition::{SchubertCondition, SchubertData};
use crate::algebra::Int;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// `1` when `a_i + g_{p+1-i} = m+p+1` for every `i`, else `0`.
pub fn dual_pair_number(a: &SchubertCondition, g: &SchubertCondition) -> Int {
    let n = a.m + a.p + 1;
    let p = a.p;
    if (0..p).all(|i| a.alpha[i] + g.alpha[p - 1 - i] == n) {
        Int::one()
    } else {
        Int::zero()
    }
}

/// `d(a, J_k, rest) = Σ_{a <_k b} d(b, rest)` down to a two-condition duality test.
pub fn intersection_number_pieri(data: &SchubertData) -> Result<Int> {
    let (m, p) = (data.m, data.p);
    let total: usize = data.conditions.iter().map(|c| c.codim()).sum();
    if total != m * p {
        return Err(Error::Argument(format!("codimensions sum to {}, expected {}", total, m * p)));
    }
    let mut others = Vec::new();
    let mut pieri = Vec::new();
    for c in &data.conditions {
        if c.is_identity() {
            continue;
        }
        match c.pieri_index() {
            Some(a) => pieri.push(a),
            None => others.push(c.clone()),
        }
    }
    if others.len() > 2 {
        return Err(Error::Unsupported(format!("{} conditions are not Pieri conditions", others.len())));
    }
    while others.len() < 2 {
        others.push(SchubertCondition::identity(m, p));
    }
    let last = others.pop().expect("two entries");
    let first = others.pop().expect("two entries");
    let mut memo = HashMap::new();
    Ok(expand(&first, &pieri, &last, &mut memo))
}

fn expand(
    a: &SchubertCondition,
    pieri: &[usize],
    last: &SchubertCondition,
    memo: &mut HashMap<(Vec<usize>, usize), Int>,
) -> Int {
    if pieri.is_empty() {
        return dual_pair_number(a, last);
    }
    let key = (a.alpha.clone(), pieri.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = Int::zero();
    for b in a.pieri_successors(pieri[0]) {
        acc += expand(&b, &pieri[1..], last, memo);
    }
    memo.insert(key, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::numbers::d_closed_form;

    #[test]
    fn hypersurface_matches_closed_form() {
        for (m, p) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (2, 5)] {
            let d = SchubertData::hypersurface(m, p);
            assert_eq!(intersection_number_pieri(&d).unwrap(), d_closed_form(m, p));
        }
    }

    #[test]
    fn dual_pair() {
        let a = SchubertCondition::new(2, 2, vec![1, 3]).unwrap();
        let g = SchubertCondition::new(2, 2, vec![2, 4]).unwrap();
        let d = SchubertData::new(2, 2, vec![a.clone(), g.clone(), g.clone()]).unwrap_err();
        assert!(matches!(d, Error::Argument(_)));
        let a2 = SchubertCondition::new(2, 2, vec![2, 3]).unwrap();
        let b2 = SchubertCondition::new(2, 2, vec![1, 4]).unwrap();
        let one = SchubertData::new(2, 2, vec![a2.clone(), a2.clone()]).unwrap();
        assert_eq!(intersection_number_pieri(&one).unwrap(), Int::one());
        let zero = SchubertData::new(2, 2, vec![a2, b2]).unwrap();
        assert_eq!(intersection_number_pieri(&zero).unwrap(), Int::zero());
        let _ = (a, g);
    }

    #[test]
    fn rejects_non_pieri() {
        let c = SchubertCondition::new(3, 3, vec![1, 3, 5]).unwrap();
        let d = SchubertData::parse(&["135^3", "J3"], 3, 3);
        let d = d.unwrap_or_else(|_| SchubertData { m: 3, p: 3, conditions: vec![c.clone(); 3] });
        assert!(matches!(intersection_number_pieri(&d), Err(Error::Unsupported(_)) | Err(Error::Argument(_))));
    }
}
