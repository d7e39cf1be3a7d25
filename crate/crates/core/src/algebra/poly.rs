//! Sparse multivariate polynomials, terms kept in descending graded-lex order.

use super::coeff::{Coeff, Domain, ExactDiv, Int, Rat};
use super::monomial::Monomial;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

/// Integer polynomial.
pub type ZPoly = Poly<Int>;
/// Rational polynomial.
pub type QPoly = Poly<Rat>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        Poly { terms: vec![(Monomial::var(i), C::one())] }
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(mut v: Vec<(Monomial, C)>) -> Self {
        v.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            if let Some(last) = out.last_mut() {
                if last.0 == m {
                    last.1.add_assign(&c);
                    continue;
                }
            }
            out.push((m, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    /// Terms already sorted descending with distinct monomials and no zeros.
    pub fn from_sorted_terms(v: Vec<(Monomial, C)>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0].0.cmp_grlex(&w[1].0) == Ordering::Greater));
        Poly { terms: v }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::zero(),
        }
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|t| m.cmp_grlex(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    /// One past the largest variable index present.
    pub fn nvars(&self) -> usize {
        self.terms.iter().map(|t| t.0.len()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, v: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(v) > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        let n = self.nvars();
        (0..n).filter(|&v| self.uses_var(v)).collect()
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.lin_comb(&C::one(), o, &C::one())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.lin_comb(&C::one(), o, &C::one().neg())
    }

    /// `a*self + b*o` by merging.
    pub fn lin_comb(&self, a: &C, o: &Self, b: &C) -> Self {
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let a_one = a.is_one();
        let b_one = b.is_one();
        while i < x.len() && j < y.len() {
            match x[i].0.cmp_grlex(&y[j].0) {
                Ordering::Greater => {
                    let c = if a_one { x[i].1.clone() } else { x[i].1.mul(a) };
                    out.push((x[i].0.clone(), c));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if b_one { y[j].1.clone() } else { y[j].1.mul(b) };
                    out.push((y[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = if a_one { x[i].1.clone() } else { x[i].1.mul(a) };
                    if b_one {
                        c.add_assign(&y[j].1);
                    } else {
                        c.add_assign(&y[j].1.mul(b));
                    }
                    if !c.is_zero() {
                        out.push((x[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for t in &x[i..] {
            let c = if a_one { t.1.clone() } else { t.1.mul(a) };
            out.push((t.0.clone(), c));
        }
        for t in &y[j..] {
            let c = if b_one { t.1.clone() } else { t.1.mul(b) };
            out.push((t.0.clone(), c));
        }
        if !(a_one && b_one) {
            out.retain(|t| !t.1.is_zero());
        }
        Poly { terms: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out: Vec<(Monomial, C)> = self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect();
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out: Vec<(Monomial, C)> = self.terms.iter().map(|(x, y)| (x.mul(m), y.mul(c))).collect();
        out.retain(|t| !t.1.is_zero());
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * o.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let p = c1.mul(c2);
                match acc.get_mut(&m) {
                    Some(v) => v.add_assign(&p),
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut v: Vec<(Monomial, C)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        v.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        Poly { terms: v }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let v: Vec<(Monomial, D)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|t| !t.1.is_zero())
            .collect();
        Poly { terms: v }
    }

    /// Rename variables: variable `i` becomes `map[i]`.
    pub fn rename(&self, map: &[usize]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), c.clone())).collect())
    }

    /// Substitute constants for a subset of variables.
    pub fn eval_partial(&self, bind: &[(usize, C)]) -> Self {
        if bind.is_empty() {
            return self.clone();
        }
        let mut cache: HashMap<(usize, u32), C> = HashMap::new();
        let mut out = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut mm = m.clone();
            let mut cc = c.clone();
            for (v, val) in bind {
                let (k, rest) = mm.split_var(*v);
                if k > 0 {
                    let pw = cache.entry((*v, k)).or_insert_with(|| val.pow(k)).clone();
                    cc.mul_assign(&pw);
                    mm = rest;
                }
            }
            out.push((mm, cc));
        }
        Self::from_terms(out)
    }

    /// Full evaluation at a point indexed by variable.
    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in m.support() {
                t.mul_assign(&point[v].pow(m.exp(v)));
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Substitute polynomials for variables; `None` keeps a variable.
    pub fn substitute(&self, sub: &dyn Fn(usize) -> Option<Poly<C>>) -> Self {
        let mut cache: HashMap<(usize, u32), Poly<C>> = HashMap::new();
        let mut acc = Self::zero();
        let mut plain = Vec::new();
        for (m, c) in &self.terms {
            let mut keep = Monomial::one();
            let mut factor = Self::constant(c.clone());
            let mut touched = false;
            for v in m.support() {
                let k = m.exp(v);
                match sub(v) {
                    Some(p) => {
                        touched = true;
                        let pw = cache.entry((v, k)).or_insert_with(|| p.pow(k)).clone();
                        factor = factor.mul(&pw);
                    }
                    None => keep = keep.mul(&Monomial::var_pow(v, k)),
                }
            }
            if touched {
                acc = acc.add(&factor.mul_term(&keep, &C::one()));
            } else {
                plain.push((m.clone(), c.clone()));
            }
        }
        acc.add(&Self::from_terms(plain))
    }

    /// Coefficients with respect to variable `v`: entry `k` is the coefficient of `v^k`.
    pub fn coeffs_in(&self, v: usize) -> Vec<Poly<C>> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let (k, rest) = m.split_var(v);
            buckets[k as usize].push((rest, c.clone()));
        }
        // removing a variable preserves relative grlex order only within equal k
        buckets.into_iter().map(Self::from_terms).collect()
    }

    /// Inverse of `coeffs_in`.
    pub fn from_coeffs_in(v: usize, cs: &[Poly<C>]) -> Self {
        let mut out = Vec::new();
        for (k, p) in cs.iter().enumerate() {
            for (m, c) in &p.terms {
                let km = m.exp(v) + k as u32;
                out.push((m.with_var(v, km), c.clone()));
            }
        }
        Self::from_terms(out)
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let k = m.exp(v);
            if k > 0 {
                out.push((m.with_var(v, k - 1), c.mul(&C::from_i64(k as i64))));
            }
        }
        Self::from_terms(out)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((m, _)) => it.fold(m.clone(), |acc, (x, _)| acc.gcd(x)),
        }
    }

    /// Divide every term by a monomial dividing all of them.
    pub fn div_monomial(&self, d: &Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.div(d).expect("monomial divides"), c.clone())).collect())
    }

    /// Canonical text: `c * v1^e1*v2^e2 + ...` in descending order.
    pub fn to_text(&self, vars: &[String], params: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let simple = !c.text_is_compound();
            let neg = simple && c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            let ctext = mag.to_text(params);
            let ctext = if c.text_is_compound() { format!("({})", ctext) } else { ctext };
            let body = if m.is_one() {
                ctext
            } else if mag.is_one() {
                m.to_text(vars)
            } else {
                format!("{} * {}", ctext, m.to_text(vars))
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
                s.push_str(&body);
            } else {
                s.push_str(if neg { " - " } else { " + " });
                s.push_str(&body);
            }
        }
        s
    }

    /// Leading coefficient negative under graded lex.
    pub fn is_negative(&self) -> bool {
        self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false)
    }
}

impl<C: ExactDiv> Poly<C> {
    /// Exact quotient by multivariate division, `None` if not exact.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                out.push((m.div(dm)?, c.div_exact(dc)?));
            }
            return Some(Poly { terms: out });
        }
        let (dm, dc) = d.terms[0].clone();
        let tail = Poly { terms: d.terms[1..].to_vec() };
        let mut r = self.clone();
        let mut q: Vec<(Monomial, C)> = Vec::new();
        while let Some((m, c)) = r.terms.first().cloned() {
            let qm = m.div(&dm)?;
            let qc = c.div_exact(&dc)?;
            r.terms.remove(0);
            r = r.lin_comb(&C::one(), &tail.mul_term(&qm, &qc), &C::one().neg());
            q.push((qm, qc));
            if q.len() > 1_000_000 {
                return None;
            }
        }
        Some(Poly::from_terms(q))
    }
}

impl<C: Coeff> Coeff for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        Poly::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn from_int(n: &Int) -> Self {
        Poly::constant(C::from_int(n))
    }
    fn is_negative(&self) -> bool {
        Poly::is_negative(self)
    }
    fn to_text(&self, params: &[String]) -> String {
        Poly::to_text(self, params, &[])
    }
    fn weight(&self) -> usize {
        self.terms.iter().map(|t| 1 + t.1.weight()).sum()
    }
    fn text_is_compound(&self) -> bool {
        self.terms.len() > 1 || (self.terms.len() == 1 && !self.terms[0].0.is_one() && !self.terms[0].1.is_one())
            || (self.terms.len() == 1 && self.terms[0].1.is_negative())
    }
}

impl<C: ExactDiv> ExactDiv for Poly<C> {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        self.div_exact_poly(o)
    }
}

impl Domain for Poly<Int> {
    type Frac = super::ratfunc::RatFunc;
    fn gcd(&self, o: &Self) -> Self {
        super::gcd::gcd(self, o)
    }
    fn to_frac(&self) -> Self::Frac {
        super::ratfunc::RatFunc::from_poly(self.clone())
    }
    fn frac(num: &Self, den: &Self) -> Self::Frac {
        super::ratfunc::RatFunc::new(num.clone(), den.clone())
    }
    fn frac_parts(f: &Self::Frac) -> (Self, Self) {
        (f.num().clone(), f.den().clone())
    }
}

impl Poly<Int> {
    /// Gcd of the integer coefficients (non-negative).
    pub fn int_content(&self) -> Int {
        let mut g = <Int as Zero>::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, c);
            if One::is_one(&g) {
                break;
            }
        }
        g
    }

    /// Divide by integer content and make the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.int_content();
        if self.is_negative() {
            g = -g;
        }
        if One::is_one(&g) {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect() }
    }

    pub fn to_rat(&self) -> Poly<Rat> {
        self.map_coeffs(|c| Rat::from_integer(c.clone()))
    }
}

impl Poly<Rat> {
    /// Clear denominators and remove content; returns `(scale, p)` with `self = scale * p`.
    pub fn to_primitive_int(&self) -> (Rat, Poly<Int>) {
        if self.is_zero() {
            return (<Rat as One>::one(), Poly::zero());
        }
        let l = super::coeff::lcm_denominators(self.terms.iter().map(|t| &t.1));
        let ints: Poly<Int> = self.map_coeffs(|c| (c * Rat::from_integer(l.clone())).to_integer());
        let p = ints.primitive();
        // scale = self.lc / p.lc
        let scale = &self.terms[0].1 / Rat::from_integer(p.terms[0].1.clone());
        (scale, p)
    }

    /// Integer polynomial when all coefficients are integral.
    pub fn to_int_exact(&self) -> Option<Poly<Int>> {
        if self.terms.iter().all(|t| t.1.is_integer()) {
            Some(self.map_coeffs(|c| c.to_integer()))
        } else {
            None
        }
    }
}

/// Same polynomial up to a nonzero rational scalar.
pub fn proportional_q(a: &Poly<Rat>, b: &Poly<Rat>) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    a.to_primitive_int().1 == b.to_primitive_int().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly<Int> {
        Poly::var(i)
    }
    fn c(n: i64) -> Poly<Int> {
        Poly::constant(Int::from(n))
    }

    #[test]
    fn arithmetic() {
        let p = x(0).add(&c(1));
        let q = x(0).sub(&c(1));
        assert_eq!(p.mul(&q), x(0).mul(&x(0)).sub(&c(1)));
        assert_eq!(p.pow(3).coeff(&Monomial::var(0)), Int::from(3));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = x(0).add(&x(1)).pow(3);
        let b = x(0).add(&x(1));
        assert_eq!(a.div_exact_poly(&b), Some(b.pow(2)));
        assert_eq!(b.div_exact_poly(&x(0)), None);
    }

    #[test]
    fn coeffs_round_trip() {
        let p = x(0).mul(&x(1)).add(&x(1).pow(2)).add(&c(3)).mul(&x(2).add(&c(1)));
        let cs = p.coeffs_in(1);
        assert_eq!(Poly::from_coeffs_in(1, &cs), p);
    }

    #[test]
    fn text_form() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let p = x(0).pow(2).scale(&Int::from(3)).sub(&x(1)).add(&c(4));
        assert_eq!(p.to_text(&names, &[]), "3 * x^2 - y + 4");
    }

    #[test]
    fn primitive_normal_form() {
        let p = x(0).scale(&Int::from(-6)).add(&c(4));
        assert_eq!(p.primitive(), x(0).scale(&Int::from(3)).sub(&c(2)));
    }

    #[test]
    fn substitution() {
        // (x+y)^2 with y -> x gives 4x^2
        let p = x(0).add(&x(1)).pow(2);
        let q = p.substitute(&|v| if v == 1 { Some(x(0)) } else { None });
        assert_eq!(q, x(0).pow(2).scale(&Int::from(4)));
        let r = p.eval_partial(&[(1, Int::from(2))]);
        assert_eq!(r, x(0).add(&c(2)).pow(2));
    }
}
