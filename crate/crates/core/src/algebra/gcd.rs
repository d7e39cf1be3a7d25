//! Multivariate gcd over the integers.
//!
//! Recursive dense-in-one-variable scheme: strip monomial and integer content,
//! drop variables present in only one argument, certify gcd-freeness of a
//! variable by a random evaluation, and otherwise run a subresultant sequence
//! with coefficients in the remaining variables.

use super::coeff::{Int, Rat};
use super::monomial::Monomial;
use super::poly::Poly;
use super::unipoly::{as_univariate, from_univariate, UniPoly};
use num_integer::Integer;
use num_traits::{One, Signed};

type ZPoly = Poly<Int>;

/// Gcd with positive leading coefficient under graded lex.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let ci = Integer::gcd(&a.int_content(), &b.int_content());
    let a1 = strip(a, &ma);
    let b1 = strip(b, &mb);
    let g = gcd_primitive(&a1, &b1);
    normalize_sign(g.mul_term(&mg, &ci))
}

/// Gcd of several polynomials.
pub fn gcd_many<'a>(it: impl IntoIterator<Item = &'a ZPoly>) -> ZPoly {
    let mut g = ZPoly::zero();
    for p in it {
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide out a monomial factor and the integer content.
fn strip(p: &ZPoly, m: &Monomial) -> ZPoly {
    let q = if m.is_one() { p.clone() } else { p.div_monomial(m) };
    q.primitive()
}

fn normalize_sign(p: ZPoly) -> ZPoly {
    if p.is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Both arguments integer-primitive without monomial content.
fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_constant() || b.is_constant() {
        return ZPoly::one();
    }
    if a == b || *a == b.neg() {
        return normalize_sign(a.clone());
    }
    if a.len() == 1 || b.len() == 1 {
        // a lone term shares only monomial content, already removed
        return ZPoly::one();
    }
    let n = a.nvars().max(b.nvars());
    let in_a: Vec<bool> = (0..n).map(|v| a.uses_var(v)).collect();
    let in_b: Vec<bool> = (0..n).map(|v| b.uses_var(v)).collect();
    // variable present in exactly one side: the gcd lies in its coefficient ring
    for v in 0..n {
        if in_a[v] && !in_b[v] {
            return gcd(&content_in(a, v), b);
        }
        if in_b[v] && !in_a[v] {
            return gcd(a, &content_in(b, v));
        }
    }
    let shared: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    // cheapest main variable first
    let mut order = shared.clone();
    order.sort_by_key(|&v| a.degree_in(v).max(b.degree_in(v)));
    for &v in &order {
        if free_of_var_by_evaluation(a, b, v) {
            let ca = content_in(a, v);
            let cb = content_in(b, v);
            return gcd(&ca, &cb);
        }
    }
    let v = order[0];
    gcd_in_var(a, b, v)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &ZPoly, v: usize) -> ZPoly {
    let cs = p.coeffs_in(v);
    let mut nonzero: Vec<&ZPoly> = cs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    gcd_many(nonzero)
}

/// Certify `deg_v gcd(a, b) = 0` by specialising every other variable.
fn free_of_var_by_evaluation(a: &ZPoly, b: &ZPoly, v: usize) -> bool {
    let n = a.nvars().max(b.nvars());
    let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
    let ua = as_univariate(a, v);
    let ub = as_univariate(b, v);
    let la = ua.lc();
    let lb = ub.lc();
    // deterministic pseudo-random points
    let mut seed: u64 = 0x9e37_79b9_7f4a_7c15 ^ (v as u64);
    for _attempt in 0..3 {
        let point: Vec<(usize, Int)> = others
            .iter()
            .map(|&w| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (w, Int::from(((seed >> 33) % 1000) as i64 + 2))
            })
            .collect();
        if la.eval_partial(&point).is_zero() || lb.eval_partial(&point).is_zero() {
            continue;
        }
        let ea = specialise(&ua, &point);
        let eb = specialise(&ub, &point);
        let g = UniPoly::gcd(&ea, &eb);
        return g.degree() == 0;
    }
    false
}

fn specialise(u: &UniPoly<ZPoly>, point: &[(usize, Int)]) -> UniPoly<Rat> {
    UniPoly::new(
        u.coeffs()
            .iter()
            .map(|c| Rat::from_integer(c.eval_partial(point).constant_term()))
            .collect(),
    )
}

/// Gcd through a subresultant sequence in `v`.
fn gcd_in_var(a: &ZPoly, b: &ZPoly, v: usize) -> ZPoly {
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact_poly(&ca).expect("content divides");
    let pb = b.div_exact_poly(&cb).expect("content divides");
    let (ua, ub) = {
        let ua = as_univariate(&pa, v);
        let ub = as_univariate(&pb, v);
        if ua.degree() >= ub.degree() {
            (ua, ub)
        } else {
            (ub, ua)
        }
    };
    let seq = UniPoly::subresultant_prs(&ua, &ub);
    let last = seq.last().expect("nonempty").clone();
    let g = if last.degree() == 0 {
        ZPoly::one()
    } else {
        let gp = from_univariate(&last, v);
        let cont = content_in(&gp, v);
        let prim = gp.div_exact_poly(&cont).expect("content divides");
        prim.primitive()
    };
    normalize_sign(g.mul(&c))
}

/// Exact quotient and cofactors: returns `(g, a/g, b/g)`.
pub fn gcd_cofactors(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    let g = gcd(a, b);
    if g.is_zero() {
        return (g, ZPoly::zero(), ZPoly::zero());
    }
    let ca = a.div_exact_poly(&g).expect("gcd divides");
    let cb = b.div_exact_poly(&g).expect("gcd divides");
    (g, ca, cb)
}

/// True when `g` is a unit up to sign.
pub fn is_unit(g: &ZPoly) -> bool {
    g.is_constant() && One::is_one(&g.constant_term().abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_int_poly;

    fn p(s: &str) -> ZPoly {
        parse_int_poly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn common_factor() {
        let f = p("(x+y)^2*(x-z)");
        let g = p("(x+y)*(y+z)*3");
        assert_eq!(gcd(&f, &g), p("x+y"));
    }

    #[test]
    fn coprime_inputs() {
        assert_eq!(gcd(&p("x^2+y^2+1"), &p("x+y")), p("1"));
    }

    #[test]
    fn integer_and_monomial_content() {
        assert_eq!(gcd(&p("6*x^2*y"), &p("4*x*y^3")), p("2*x*y"));
        assert_eq!(gcd(&p("-2*x-2"), &p("0")), p("2*x+2"));
    }

    #[test]
    fn one_sided_variable() {
        assert_eq!(gcd(&p("(x+1)*(y+2)"), &p("(x+1)*(x+3)")), p("x+1"));
    }

    #[test]
    fn deep_common_factor() {
        let h = p("x*y*z + x^2 - 3*z + 1");
        let f = h.mul(&p("x - y + z^2"));
        let g = h.mul(&p("y^3 + 2*x*z - 1"));
        assert_eq!(gcd(&f, &g), h);
    }
}
