//! Dense univariate polynomials over a generic ring, with subresultant machinery.

use super::coeff::{Coeff, ExactDiv, Field, Int, Rat};
use super::poly::Poly;

/// Coefficients in ascending order, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<R> {
    c: Vec<R>,
}

impl<R: Coeff> UniPoly<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().map(|x| x.is_zero()).unwrap_or(false) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn constant(r: R) -> Self {
        Self::new(vec![r])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn deg(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree treating zero as degree 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c.iter().map(|x| x.neg()).collect())
    }

    pub fn scale(&self, r: &R) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(r)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j].add_assign(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.c.iter().cloned());
        Self::new(v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x.mul(&R::from_i64(i as i64)))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn prem(&self, d: &Self) -> Self {
        let dd = d.deg().expect("pseudo-division by zero");
        let mut r = self.clone();
        let Some(da) = r.deg() else { return r };
        if da < dd {
            return r;
        }
        let l = d.lc();
        let mut e = da - dd + 1;
        while let Some(dr) = r.deg() {
            if dr < dd {
                break;
            }
            let t = r.lc();
            // r = l*r - t*x^(dr-dd)*d
            let mut nc: Vec<R> = r.c.iter().map(|x| x.mul(&l)).collect();
            for (j, b) in d.c.iter().enumerate() {
                nc[j + dr - dd].sub_assign(&b.mul(&t));
            }
            nc.pop();
            r = Self::new(nc);
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&l.pow(e as u32));
        }
        r
    }

    pub fn to_poly(&self, var: usize) -> Poly<R> {
        let mut terms = Vec::new();
        for (k, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                terms.push((super::monomial::Monomial::var_pow(var, k as u32), a.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.c.iter().map(f).collect())
    }
}

impl<R: ExactDiv> UniPoly<R> {
    pub fn div_exact_scalar(&self, r: &R) -> Option<Self> {
        let mut v = Vec::with_capacity(self.c.len());
        for x in &self.c {
            v.push(x.div_exact(r)?);
        }
        Some(Self::new(v))
    }

    /// Subresultant remainder sequence starting `a, b` (requires `deg a >= deg b`).
    pub fn subresultant_prs(a: &Self, b: &Self) -> Vec<Self> {
        let mut seq = vec![a.clone(), b.clone()];
        if b.is_zero() {
            return seq;
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let delta = a.degree() - b.degree();
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            let divisor = g.mul(&h.pow(delta as u32));
            let nb = r.div_exact_scalar(&divisor).expect("subresultant division is exact");
            a = b;
            b = nb;
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta as u32)
                    .div_exact(&h.pow(delta as u32 - 1))
                    .expect("subresultant h update is exact")
            };
            seq.push(b.clone());
            if b.degree() == 0 {
                break;
            }
        }
        seq
    }

    /// Resultant by the subresultant algorithm.
    pub fn resultant(a: &Self, b: &Self) -> R {
        if a.is_zero() || b.is_zero() {
            return R::zero();
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut s = R::one();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
                s = s.neg();
            }
        }
        if b.degree() == 0 {
            return s.mul(&b.lc().pow(a.degree() as u32));
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let da = a.degree();
            let db = b.degree();
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                s = s.neg();
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return R::zero();
            }
            let divisor = g.mul(&h.pow(delta as u32));
            a = b;
            b = r.div_exact_scalar(&divisor).expect("exact");
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                g.pow(delta as u32).div_exact(&h.pow(delta as u32 - 1)).expect("exact")
            };
            if b.degree() == 0 {
                let da = a.degree() as u32;
                let num = b.lc().pow(da);
                let hh = if da == 0 {
                    num
                } else {
                    num.div_exact(&h.pow(da - 1)).expect("exact")
                };
                return s.mul(&hh);
            }
        }
    }

    /// `(-1)^(n(n-1)/2) Res(g, g') / lc(g)`.
    pub fn discriminant(&self) -> R {
        let n = self.degree();
        if n < 1 {
            return R::zero();
        }
        let r = Self::resultant(self, &self.derivative());
        let mut d = r.div_exact(&self.lc()).expect("discriminant division is exact");
        if (n * (n - 1) / 2) % 2 == 1 {
            d = d.neg();
        }
        d
    }
}

impl<F: Field> UniPoly<F> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc().inv();
        self.scale(&l)
    }

    /// Quotient and remainder over a field.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.deg().expect("division by zero");
        let mut r = self.clone();
        let Some(da) = r.deg() else { return (Self::zero(), r) };
        if da < dd {
            return (Self::zero(), r);
        }
        let linv = d.lc().inv();
        let mut q = vec![F::zero(); da - dd + 1];
        let mut rc = r.c.clone();
        for k in (dd..=da).rev() {
            let t = rc[k].mul(&linv);
            if t.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                rc[k - dd + j].sub_assign(&b.mul(&t));
            }
            q[k - dd] = t;
        }
        rc.truncate(dd);
        r = Self::new(rc);
        (Self::new(q), r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Squarefree part `g / gcd(g, g')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = Self::gcd(self, &self.derivative());
        self.divrem(&g).0.monic()
    }
}

impl UniPoly<Rat> {
    /// Integer polynomial with the same roots, primitive with positive leading coefficient.
    pub fn to_primitive_int(&self) -> UniPoly<Int> {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let l = super::coeff::lcm_denominators(self.c.iter());
        let ints: Vec<Int> = self.c.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        UniPoly::new(ints).primitive()
    }
}

impl UniPoly<Int> {
    pub fn content(&self) -> Int {
        self.c
            .iter()
            .fold(Int::from(0), |g, x| num_integer::Integer::gcd(&g, x))
    }

    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if num_traits::Signed::is_negative(&self.lc()) {
            g = -g;
        }
        Self::new(self.c.iter().map(|x| x / &g).collect())
    }

    pub fn to_rat(&self) -> UniPoly<Rat> {
        self.map(|x| Rat::from_integer(x.clone()))
    }
}

/// View a polynomial as univariate in `v` with coefficients in the other variables.
pub fn as_univariate<C: Coeff>(p: &Poly<C>, v: usize) -> UniPoly<Poly<C>> {
    UniPoly::new(p.coeffs_in(v))
}

/// Inverse of `as_univariate`.
pub fn from_univariate<C: Coeff>(u: &UniPoly<Poly<C>>, v: usize) -> Poly<C> {
    Poly::from_coeffs_in(v, u.coeffs())
}

/// A polynomial in a single variable `v` as a dense univariate polynomial.
pub fn univariate_of<C: Coeff>(p: &Poly<C>, v: usize) -> Option<UniPoly<C>> {
    let d = p.degree_in(v) as usize;
    let mut c = vec![C::zero(); d + 1];
    for (m, x) in p.terms() {
        let (k, rest) = m.split_var(v);
        if !rest.is_one() {
            return None;
        }
        c[k as usize] = x.clone();
    }
    Some(UniPoly::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rat;

    fn zp(v: &[i64]) -> UniPoly<Int> {
        UniPoly::new(v.iter().map(|&x| Int::from(x)).collect())
    }

    #[test]
    fn discriminant_of_quadratic() {
        // x^2 - 1 -> 4
        assert_eq!(zp(&[-1, 0, 1]).discriminant(), Int::from(4));
        // a x^2 + b x + c -> b^2 - 4ac
        assert_eq!(zp(&[5, 3, 2]).discriminant(), Int::from(9 - 40));
    }

    #[test]
    fn discriminant_of_cubic() {
        // x^3 + p x + q -> -4p^3 - 27q^2
        assert_eq!(zp(&[2, -3, 0, 1]).discriminant(), Int::from(-4 * -27 - 27 * 4));
    }

    #[test]
    fn resultant_matches_product_of_differences() {
        // (x-1)(x-2) and (x-3): Res = (1-3)(2-3) = 2
        let a = zp(&[2, -3, 1]);
        let b = zp(&[-3, 1]);
        assert_eq!(UniPoly::resultant(&a, &b), Int::from(2));
        // Res(x^2+1, x^2-2) = prod over roots of a of b(r) = (-1-2)^2 = 9
        assert_eq!(UniPoly::resultant(&zp(&[1, 0, 1]), &zp(&[-2, 0, 1])), Int::from(9));
    }

    #[test]
    fn field_gcd_and_squarefree() {
        let a = zp(&[-1, 1]).mul(&zp(&[-1, 1])).mul(&zp(&[2, 1])).to_rat();
        let s = a.squarefree();
        assert_eq!(s, zp(&[-2, 1, 1]).to_rat());
        let (q, r) = a.divrem(&zp(&[-1, 1]).to_rat());
        assert!(r.is_zero());
        assert_eq!(q.degree(), 2);
        assert_eq!(UniPoly::gcd(&a, &zp(&[2, 1]).to_rat()), UniPoly::new(vec![rat(2, 1), rat(1, 1)]));
    }

    #[test]
    fn prem_identity() {
        let a = zp(&[1, 2, 3, 4]);
        let d = zp(&[1, 2]);
        let r = a.prem(&d);
        // 2^3 * a(-1/2) = 8*(1 - 1 + 3/4 - 1/2) = 2
        assert_eq!(r, zp(&[2]));
    }
}
