//! Polynomial identities: discriminants, symmetrized-square combinations, explicit factorizations.

use crate::algebra::symmetric::{permutations, primitive_lex, symmetrize_primitive, Symmetrized};
use crate::algebra::unipoly::as_univariate;
use crate::algebra::{Coeff, Int, Monomial, Poly, Rat};
use std::collections::HashSet;

/// Discriminant of `g` in variable `var`, primitive with positive leading coefficient.
pub fn discriminant_in(g: &Poly<Int>, var: usize) -> Poly<Int> {
    as_univariate(g, var).discriminant().primitive()
}

/// Discriminant of `g` in `var`, unnormalized (`(-1)^(n(n-1)/2) Res(g, g') / lc`).
pub fn discriminant_raw(g: &Poly<Int>, var: usize) -> Poly<Int> {
    as_univariate(g, var).discriminant()
}

/// The base product `Π x_k^{w_k} Π_{i<j} (x_i - x_j)^{w_ij}` for a weight vector of
/// length `k + k(k-1)/2`; pairs are taken in lexicographic order.
pub fn weight_product(w: &[u32], vars: &[usize]) -> Poly<Int> {
    let k = vars.len();
    assert_eq!(w.len(), k + k * (k - 1) / 2, "weight vector length");
    let mut e = vec![0u32; vars.iter().max().map(|v| v + 1).unwrap_or(0)];
    for (i, &v) in vars.iter().enumerate() {
        e[v] += w[i];
    }
    let mut p = Poly::term(Monomial::from_exps(&e), Int::from(1));
    let mut idx = k;
    for i in 0..k {
        for j in i + 1..k {
            if w[idx] > 0 {
                let d = Poly::<Int>::var(vars[i]).sub(&Poly::var(vars[j]));
                p = p.mul(&d.pow(w[idx]));
            }
            idx += 1;
        }
    }
    p
}

/// `A_w`: primitive part of the symmetrization of the weight product.
pub fn a_w(w: &[u32], vars: &[usize]) -> Symmetrized {
    symmetrize_primitive(&weight_product(w, vars), vars)
}

/// Parse a weight string such as `2220222224`.
pub fn parse_weights(s: &str) -> Option<Vec<u32>> {
    s.chars().map(|c| c.to_digit(10)).collect()
}

/// Number of distinct base products in the symmetric-group orbit of `w`.
pub fn orbit_size(w: &[u32], k: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for perm in permutations(k) {
        let mut img = vec![0u32; w.len()];
        for i in 0..k {
            img[perm[i]] = w[i];
        }
        for (pi, &(i, j)) in pairs.iter().enumerate() {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            let q = pairs.iter().position(|&x| x == (a, b)).expect("pair");
            img[k + q] = w[k + pi];
        }
        seen.insert(img);
    }
    seen.len()
}

/// One summand of an identity's right-hand side.
#[derive(Clone, Debug)]
pub enum RhsTerm {
    /// `coeff * A_w` over the given group variables.
    Aw { coeff: Rat, w: Vec<u32> },
    /// `coeff * p`.
    Explicit { coeff: Rat, p: Poly<Rat> },
    /// `coeff * Π factors`.
    Product { coeff: Rat, factors: Vec<Poly<Rat>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    /// Equal after both sides are made primitive.
    pub holds: bool,
    /// Equal as written.
    pub exact: bool,
    /// Terms in `lhs - rhs` as written.
    pub residual_terms: usize,
}

/// Expand the right-hand side.
pub fn expand_rhs(rhs: &[RhsTerm], group: &[usize]) -> Poly<Rat> {
    let mut acc = Poly::<Rat>::zero();
    for t in rhs {
        match t {
            RhsTerm::Aw { coeff, w } => {
                let a = a_w(w, group).poly().to_rat();
                acc = acc.add(&a.scale(coeff));
            }
            RhsTerm::Explicit { coeff, p } => acc = acc.add(&p.scale(coeff)),
            RhsTerm::Product { coeff, factors } => {
                let p = factors.iter().fold(Poly::constant(coeff.clone()), |a, f| a.mul(f));
                acc = acc.add(&p);
            }
        }
    }
    acc
}

/// Compare `lhs` with an expanded right-hand side.
pub fn verify_identity(lhs: &Poly<Rat>, rhs: &[RhsTerm], group: &[usize]) -> IdentityCheck {
    let r = expand_rhs(rhs, group);
    let diff = lhs.sub(&r);
    let holds = if lhs.is_zero() || r.is_zero() {
        lhs.is_zero() && r.is_zero()
    } else {
        primitive_lex(&lhs.to_primitive_int().1) == primitive_lex(&r.to_primitive_int().1)
    };
    IdentityCheck { holds, exact: diff.is_zero(), residual_terms: diff.len() }
}

/// Whether `p` lies in the rational span of `terms`, by solving for the coefficients.
pub fn in_span(p: &Poly<Rat>, terms: &[Poly<Rat>]) -> Option<Vec<Rat>> {
    use std::collections::BTreeMap;
    let mut monos: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let n = p.nvars().max(terms.iter().map(|t| t.nvars()).max().unwrap_or(0));
    for q in std::iter::once(p).chain(terms) {
        for (m, _) in q.terms() {
            let k = monos.len();
            monos.entry(m.exps_padded(n)).or_insert(k);
        }
    }
    let rows = monos.len();
    let cols = terms.len();
    // augmented matrix [T | p]
    let mut a = vec![vec![Rat::zero(); cols + 1]; rows];
    for (j, t) in terms.iter().enumerate() {
        for (m, c) in t.terms() {
            a[monos[&m.exps_padded(n)]][j] = c.clone();
        }
    }
    for (m, c) in p.terms() {
        a[monos[&m.exps_padded(n)]][cols] = c.clone();
    }
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, pr);
        let inv = Rat::from_integer(Int::from(1)) / &a[r][c];
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..=cols {
                    let v = &a[r][k] * &f;
                    a[i][k] -= v;
                }
            }
        }
        piv_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) {
        return None;
    }
    let mut sol = vec![Rat::zero(); cols];
    for (i, &c) in piv_cols.iter().enumerate() {
        sol[c] = a[i][cols].clone();
    }
    Some(sol)
}
