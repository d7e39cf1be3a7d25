//! Quotient-ring linear algebra: standard monomials, multiplication maps, eliminants.

use super::basis::GroebnerBasis;
use super::terms::Terms;
use crate::algebra::unipoly::univariate_of;
use crate::algebra::{Coeff, Domain, Monomial, Poly, UniPoly};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};

/// Standard monomials (external numbering, ascending in the basis order), or `None`
/// when the quotient is infinite-dimensional.
pub fn standard_monomials<D: Domain>(gb: &GroebnerBasis<D>) -> Option<Vec<Monomial>> {
    let (ok, _) = is_zero_dimensional(gb);
    if !ok {
        return None;
    }
    let lms: Vec<&Monomial> = gb.internal().iter().map(|t| &t[0].0).collect();
    let n = gb.nvars();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack = vec![Monomial::one()];
    if lms.iter().any(|l| l.is_one()) {
        return Some(Vec::new());
    }
    seen.insert(Monomial::one());
    while let Some(m) = stack.pop() {
        for v in 0..n {
            let x = m.mul(&Monomial::var(v));
            if !seen.contains(&x) && !lms.iter().any(|l| l.divides(&x)) {
                seen.insert(x.clone());
                stack.push(x);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| gb.order().cmp_internal(a, b));
    Some(out.into_iter().map(|m| m.rename(gb.back_map())).collect())
}

/// Whether every variable has a pure power among the leading monomials, and the
/// quotient dimension when it does.
pub fn is_zero_dimensional<D: Domain>(gb: &GroebnerBasis<D>) -> (bool, Option<usize>) {
    if gb.is_unit_ideal() {
        return (true, Some(0));
    }
    let n = gb.nvars();
    let lms: Vec<&Monomial> = gb.internal().iter().map(|t| &t[0].0).collect();
    for v in 0..n {
        let pure = lms.iter().any(|l| l.support().all(|u| u == v) && l.exp(v) > 0);
        if !pure {
            return (false, None);
        }
    }
    // count by enumeration
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack = vec![Monomial::one()];
    seen.insert(Monomial::one());
    while let Some(m) = stack.pop() {
        for v in 0..n {
            let x = m.mul(&Monomial::var(v));
            if !seen.contains(&x) && !lms.iter().any(|l| l.divides(&x)) {
                seen.insert(x.clone());
                stack.push(x);
            }
        }
    }
    (true, Some(seen.len()))
}

/// Normal form of a monomial as a coordinate vector over the fraction field.
fn coords<D: Domain>(gb: &GroebnerBasis<D>, m: Monomial, index: &HashMap<Monomial, usize>) -> Vec<D::Frac> {
    let (r, mult, content): (Terms<D>, D, D) = gb.reduce_internal(vec![(m, D::one())]);
    let s = D::frac(&content, &mult);
    let mut v = vec![D::Frac::zero(); index.len()];
    for (mm, c) in r {
        let k = *index.get(&mm).expect("remainder lies on standard monomials");
        v[k] = c.to_frac().mul(&s);
    }
    v
}

/// Minimal polynomial of `var` in the quotient ring, primitive with positive leading coefficient.
///
/// Built from the multiplication-by-`var` matrix on the standard monomials, scaled to have
/// entries in `D`: the Krylov sequence of `1` is eliminated fraction-free, with content
/// removal, until it becomes dependent.
pub fn eliminant<D: Domain>(gb: &GroebnerBasis<D>, var: usize) -> Result<UniPoly<D>> {
    if var >= gb.nvars() {
        return Err(Error::Argument(format!("variable {} out of range", var)));
    }
    let std = standard_monomials(gb).ok_or_else(|| Error::Argument("ideal is not zero-dimensional".into()))?;
    if std.is_empty() {
        return Err(Error::Argument("unit ideal has no eliminant".into()));
    }
    let imap = gb.fwd_map();
    let internal: Vec<Monomial> = std.iter().map(|m| m.rename(imap)).collect();
    let index: HashMap<Monomial, usize> = internal.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let n = internal.len();
    let xv = Monomial::var(imap[var]);

    // columns of L * M with a common denominator L
    let frac_cols: Vec<Vec<D::Frac>> = internal.iter().map(|m| coords(gb, m.mul(&xv), &index)).collect();
    let mut l = D::one();
    for c in frac_cols.iter().flatten() {
        if !c.is_zero() {
            let (_, d) = D::frac_parts(c);
            let g = l.gcd(&d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    let lf = l.to_frac();
    let cols: Vec<Vec<D>> = frac_cols
        .iter()
        .map(|col| col.iter().map(|c| D::frac_parts(&c.mul(&lf)).0).collect())
        .collect();

    let one_idx = *index.get(&Monomial::one()).expect("1 is standard");
    let mut cur = vec![D::zero(); n];
    cur[one_idx] = D::one();
    let mut rows: Vec<(Vec<D>, usize, Vec<D>)> = Vec::new();
    for k in 0..=n {
        let mut w = cur.clone();
        let mut expr = vec![D::zero(); k + 1];
        expr[k] = D::one();
        for (rv, p, re) in &rows {
            if w[*p].is_zero() {
                continue;
            }
            let g = rv[*p].gcd(&w[*p]);
            let a = rv[*p].div_exact(&g).expect("gcd divides");
            let b = w[*p].div_exact(&g).expect("gcd divides");
            combine(&mut w, &a, &b, rv);
            expr.resize(expr.len().max(re.len()), D::zero());
            combine(&mut expr, &a, &b, re);
            remove_content(&mut w, &mut expr);
        }
        match w.iter().position(|c| !c.is_zero()) {
            None => {
                // sum expr_k u_k = 0 with u_k = L^k v_k
                let mut pw = D::one();
                let mut c = Vec::with_capacity(expr.len());
                for e in &expr {
                    c.push(e.mul(&pw));
                    pw = pw.mul(&l);
                }
                return Ok(primitive_uni(UniPoly::new(c)));
            }
            Some(p) => rows.push((w, p, expr)),
        }
        let mut next = vec![D::zero(); n];
        for (b, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, x) in next.iter_mut().zip(&cols[b]) {
                if !x.is_zero() {
                    a.add_assign(&c.mul(x));
                }
            }
        }
        cur = next;
    }
    Err(Error::Internal("Krylov sequence did not become dependent".into()))
}

/// `w <- a w - b r`.
fn combine<D: Domain>(w: &mut [D], a: &D, b: &D, r: &[D]) {
    let a_one = a.is_one();
    for (i, x) in w.iter_mut().enumerate() {
        let rx = r.get(i);
        let scaled = if a_one || x.is_zero() { x.clone() } else { x.mul(a) };
        *x = match rx {
            Some(y) if !y.is_zero() => scaled.sub(&b.mul(y)),
            _ => scaled,
        };
    }
}

fn remove_content<D: Domain>(w: &mut [D], e: &mut [D]) {
    let mut g = D::zero();
    for x in w.iter().chain(e.iter()) {
        if x.is_zero() {
            continue;
        }
        g = if g.is_zero() { x.clone() } else { g.gcd(x) };
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in w.iter_mut().chain(e.iter_mut()) {
        if !x.is_zero() {
            *x = x.div_exact(&g).expect("content divides");
        }
    }
}

/// Clear denominators of a fraction-field coefficient list and remove content.
pub fn primitive_from_frac<D: Domain>(c: &[D::Frac]) -> UniPoly<D> {
    let mut l = D::one();
    for x in c {
        if x.is_zero() {
            continue;
        }
        let (_, d) = D::frac_parts(x);
        let g = l.gcd(&d);
        l = l.mul(&d.div_exact(&g).expect("gcd divides"));
    }
    let lf = l.to_frac();
    let ints: Vec<D> = c
        .iter()
        .map(|x| {
            let (n, d) = D::frac_parts(&x.mul(&lf));
            debug_assert!(d.is_one());
            n
        })
        .collect();
    primitive_uni(UniPoly::new(ints))
}

/// Divide by the coefficient gcd and make the leading coefficient positive.
pub fn primitive_uni<D: Domain>(u: UniPoly<D>) -> UniPoly<D> {
    if u.is_zero() {
        return u;
    }
    let mut g = D::zero();
    for x in u.coeffs() {
        if x.is_zero() {
            continue;
        }
        g = if g.is_zero() { x.clone() } else { g.gcd(x) };
        if g.is_one() {
            break;
        }
    }
    if g.is_negative() {
        g = g.neg();
    }
    if u.lc().is_negative() {
        g = g.neg();
    }
    if g.is_one() {
        return u;
    }
    UniPoly::new(u.coeffs().iter().map(|x| x.div_exact(&g).expect("content divides")).collect())
}

/// The generator of a lex basis that lies in `k[var]`, when there is one.
pub fn lex_eliminant<D: Domain>(gb: &GroebnerBasis<D>, var: usize) -> Option<UniPoly<D>> {
    gb.generators()
        .iter()
        .find(|g| g.vars_used().iter().all(|&v| v == var) && g.uses_var(var))
        .and_then(|g| univariate_of(g, var))
        .map(primitive_uni)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShapeReport {
    pub holds: bool,
    /// Variable carrying the univariate generator when the basis has shape form.
    pub variable: Option<usize>,
}

fn shape_in<D: Domain>(gens: &[Poly<D>], n: usize, var: usize, dim: usize) -> bool {
    if gens.len() != n {
        return false;
    }
    let mut have_uni = false;
    let mut covered = vec![false; n];
    for g in gens {
        let used = g.vars_used();
        if used.iter().all(|&v| v == var) {
            if have_uni || g.degree_in(var) as usize != dim {
                return false;
            }
            have_uni = true;
            covered[var] = true;
            continue;
        }
        // c*u + f(var) with c a nonzero constant in the outer variables
        let others: Vec<usize> = used.iter().copied().filter(|&v| v != var).collect();
        if others.len() != 1 {
            return false;
        }
        let u = others[0];
        if g.degree_in(u) != 1 || covered[u] {
            return false;
        }
        let cs = g.coeffs_in(u);
        if !cs[1].is_constant() {
            return false;
        }
        covered[u] = true;
    }
    have_uni && covered.iter().all(|&c| c)
}

/// Whether the basis has the form `{g(var), u - f_u(var), ...}` with `deg g` the quotient dimension.
pub fn shape_check<D: Domain>(gb: &GroebnerBasis<D>, var: usize) -> bool {
    let (ok, dim) = is_zero_dimensional(gb);
    ok && shape_in(&gb.generators(), gb.nvars(), var, dim.unwrap_or(0))
}

/// Which variable, if any, carries the shape form.
pub fn shape_variable<D: Domain>(gb: &GroebnerBasis<D>) -> ShapeReport {
    let (ok, dim) = is_zero_dimensional(gb);
    if !ok {
        return ShapeReport { holds: false, variable: None };
    }
    let gens = gb.generators();
    let v = (0..gb.nvars()).find(|&v| shape_in(&gens, gb.nvars(), v, dim.unwrap_or(0)));
    ShapeReport { holds: v.is_some(), variable: v }
}
