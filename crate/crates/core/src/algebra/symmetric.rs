//! Elementary symmetric functions and symmetrization over a group of variables.

use super::coeff::{Coeff, Int};
use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `e_i(vals)`, with `e_0 = 1`.
pub fn elementary_symmetric<C: Coeff>(vals: &[C], i: usize) -> Result<C> {
    if i > vals.len() {
        return Err(Error::Argument(format!("e_{} of {} values", i, vals.len())));
    }
    // e[k] after processing a prefix; standard product expansion
    let mut e = vec![C::zero(); i + 1];
    e[0] = C::one();
    for v in vals {
        for k in (1..=i).rev() {
            let t = e[k - 1].mul(v);
            e[k].add_assign(&t);
        }
    }
    Ok(e.swap_remove(i))
}

/// `e_i` as a polynomial in the listed variables.
pub fn elementary_symmetric_poly<C: Coeff>(vars: &[usize], i: usize) -> Result<Poly<C>> {
    let xs: Vec<Poly<C>> = vars.iter().map(|&v| Poly::var(v)).collect();
    elementary_symmetric(&xs, i)
}

/// Outcome of a symmetrization: the group sum can cancel completely.
#[derive(Clone, Debug, PartialEq)]
pub enum Symmetrized {
    Zero,
    Primitive(Poly<Int>),
}

impl Symmetrized {
    pub fn is_zero(&self) -> bool {
        matches!(self, Symmetrized::Zero)
    }

    pub fn poly(&self) -> Poly<Int> {
        match self {
            Symmetrized::Zero => Poly::zero(),
            Symmetrized::Primitive(p) => p.clone(),
        }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Divide by integer content and make the lex-leading coefficient positive.
pub fn primitive_lex(p: &Poly<Int>) -> Poly<Int> {
    if p.is_zero() {
        return p.clone();
    }
    let lead = p
        .terms()
        .iter()
        .max_by(|a, b| a.0.cmp_lex(&b.0))
        .map(|t| t.1.clone())
        .expect("nonzero");
    let q = p.primitive();
    // primitive() fixes the grlex-leading sign; flip if the lex leader disagrees
    let lex_neg = lead.is_negative() != p.is_negative();
    if lex_neg {
        q.neg()
    } else {
        q
    }
}

/// Sum of `f` over all permutations of `group`, as a primitive integer polynomial.
pub fn symmetrize_primitive(f: &Poly<Int>, group: &[usize]) -> Symmetrized {
    if group.is_empty() {
        return if f.is_zero() { Symmetrized::Zero } else { Symmetrized::Primitive(primitive_lex(f)) };
    }
    let n = f.nvars().max(group.iter().max().map(|g| g + 1).unwrap_or(0));
    let mut terms: Vec<(Monomial, Int)> = Vec::new();
    for perm in permutations(group.len()) {
        let mut map: Vec<usize> = (0..n).collect();
        for (k, &g) in group.iter().enumerate() {
            map[g] = group[perm[k]];
        }
        for (m, c) in f.terms() {
            terms.push((m.rename(&map), c.clone()));
        }
    }
    let s = Poly::from_terms(terms);
    if s.is_zero() {
        Symmetrized::Zero
    } else {
        Symmetrized::Primitive(primitive_lex(&s))
    }
}

/// The monomial `Π vars[k]^w[k]`.
pub fn weight_monomial(vars: &[usize], w: &[u32]) -> Monomial {
    let n = vars.iter().max().map(|v| v + 1).unwrap_or(0);
    let mut e = vec![0u32; n];
    for (k, &v) in vars.iter().enumerate() {
        e[v] += w[k];
    }
    Monomial::from_exps(&e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_int_poly;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn elementary_values() {
        let v = ints(&[1, 2, 3, 4]);
        assert_eq!(elementary_symmetric(&v, 2).unwrap(), Int::from(35));
        assert_eq!(elementary_symmetric(&v, 4).unwrap(), Int::from(24));
        assert_eq!(elementary_symmetric(&v, 0).unwrap(), Int::from(1));
        assert!(elementary_symmetric(&v, 5).is_err());
    }

    #[test]
    fn symmetrization_cases() {
        let names = ["s", "t"];
        let f = parse_int_poly("s - t", &names).unwrap();
        assert!(symmetrize_primitive(&f, &[0, 1]).is_zero());
        let g = parse_int_poly("s^2*t", &names).unwrap();
        let want = parse_int_poly("s^2*t + s*t^2", &names).unwrap();
        assert_eq!(symmetrize_primitive(&g, &[0, 1]).poly(), want);
        let h = parse_int_poly("-4*s*t", &names).unwrap();
        assert_eq!(symmetrize_primitive(&h, &[]).poly(), parse_int_poly("s*t", &names).unwrap());
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }
}
