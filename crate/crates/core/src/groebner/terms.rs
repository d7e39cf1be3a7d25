//! Term lists sorted by a monomial order, in internal variable numbering.

use super::order::MonomialOrder;
use crate::algebra::{Coeff, Domain, Monomial, Poly};
use std::cmp::Ordering;

pub(crate) type Terms<D> = Vec<(Monomial, D)>;

pub(crate) fn from_poly<D: Coeff>(p: &Poly<D>, ord: &MonomialOrder, map: &[usize]) -> Terms<D> {
    let mut v: Terms<D> = p.terms().iter().map(|(m, c)| (m.rename(map), c.clone())).collect();
    v.sort_by(|a, b| ord.cmp_internal(&b.0, &a.0));
    v
}

pub(crate) fn to_poly<D: Coeff>(t: &[(Monomial, D)], back: &[usize]) -> Poly<D> {
    Poly::from_terms(t.iter().map(|(m, c)| (m.rename(back), c.clone())).collect())
}

/// `a*x - b*q*y` merged in order; `a` of `None` means 1.
pub(crate) fn axpy<D: Coeff>(
    a: Option<&D>,
    x: &[(Monomial, D)],
    b: &D,
    q: &Monomial,
    y: &[(Monomial, D)],
    ord: &MonomialOrder,
) -> Terms<D> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mut yj: Option<Monomial> = y.first().map(|t| t.0.mul(q));
    let sx = |c: &D| match a {
        Some(a) => c.mul(a),
        None => c.clone(),
    };
    while i < x.len() {
        let Some(ym) = yj.as_ref() else { break };
        match ord.cmp_internal(&x[i].0, ym) {
            Ordering::Greater => {
                out.push((x[i].0.clone(), sx(&x[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((yj.take().unwrap(), y[j].1.mul(b).neg()));
                j += 1;
                yj = y.get(j).map(|t| t.0.mul(q));
            }
            Ordering::Equal => {
                let c = sx(&x[i].1).sub(&y[j].1.mul(b));
                if !c.is_zero() {
                    out.push((x[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                yj = y.get(j).map(|t| t.0.mul(q));
            }
        }
    }
    for t in &x[i..] {
        out.push((t.0.clone(), sx(&t.1)));
    }
    if let Some(ym) = yj {
        out.push((ym, y[j].1.mul(b).neg()));
        for t in &y[j + 1..] {
            out.push((t.0.mul(q), t.1.mul(b).neg()));
        }
    }
    out
}

/// Gcd of all coefficients, sign-normalized.
pub(crate) fn content<D: Domain>(t: &[(Monomial, D)]) -> D {
    let mut g = D::zero();
    for (_, c) in t {
        g = if g.is_zero() { c.clone() } else { g.gcd(c) };
        if g.is_one() {
            break;
        }
    }
    if g.is_negative() {
        g.neg()
    } else {
        g
    }
}

/// Divide by content and make the leading coefficient positive; returns the divisor used.
pub(crate) fn make_primitive<D: Domain>(t: &mut Terms<D>) -> D {
    if t.is_empty() {
        return D::one();
    }
    let mut g = content(t);
    if t[0].1.is_negative() {
        g = g.neg();
    }
    if !g.is_one() {
        for x in t.iter_mut() {
            x.1 = x.1.div_exact(&g).expect("content divides");
        }
    }
    g
}
