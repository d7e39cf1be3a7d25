//! Fraction-free Buchberger with Gebauer-Möller pair criteria.

use super::order::MonomialOrder;
use super::terms::{axpy, from_poly, make_primitive, to_poly, Terms};
use crate::algebra::{Coeff, Domain, Int, Monomial, Poly, Rat, RatFunc};
use crate::error::{BudgetStats, Error, Result};
use std::time::{Duration, Instant};

/// Resource limits for one basis computation. `None` means unlimited.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_pairs: Option<usize>,
    pub max_terms: Option<usize>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_time(secs: u64) -> Self {
        Budget { max_time: Some(Duration::from_secs(secs)), ..Self::default() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub max_terms: usize,
    pub elapsed_ms: u128,
}

/// A reduced Gröbner basis, generators primitive with positive leading coefficient.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<D> {
    order: MonomialOrder,
    back: Vec<usize>,
    map: Vec<usize>,
    /// Internal numbering, each sorted descending; the basis is sorted by ascending leading monomial.
    polys: Vec<Terms<D>>,
    pub stats: GbStats,
}

/// `mult * f = content * r` modulo the ideal, with `r` fully reduced.
#[derive(Clone, Debug)]
pub struct Reduced<D> {
    pub r: Poly<D>,
    pub mult: D,
    pub content: D,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: u32,
    seq: usize,
}

struct Guard<'a> {
    budget: &'a Budget,
    start: Instant,
    stats: GbStats,
    pending: usize,
    basis_len: usize,
}

impl Guard<'_> {
    fn fail(&self, what: &str) -> Error {
        Error::Budget {
            what: what.to_string(),
            stats: BudgetStats {
                pairs_processed: self.stats.pairs_processed,
                pairs_pending: self.pending,
                basis_len: self.basis_len,
                max_terms: self.stats.max_terms,
                elapsed_ms: self.start.elapsed().as_millis(),
            },
        }
    }

    fn check_terms(&mut self, n: usize) -> Result<()> {
        self.stats.max_terms = self.stats.max_terms.max(n);
        if let Some(t) = self.budget.max_terms {
            if n > t {
                return Err(self.fail("term count"));
            }
        }
        Ok(())
    }

    fn check_time(&self) -> Result<()> {
        if let Some(t) = self.budget.max_time {
            if self.start.elapsed() > t {
                return Err(self.fail("wall time"));
            }
        }
        Ok(())
    }
}

/// Full fraction-free reduction: always the leftmost divisible term, first reducer in index order.
fn reduce_terms<D: Domain>(
    mut f: Terms<D>,
    reducers: &[&Terms<D>],
    ord: &MonomialOrder,
    mut guard: Option<&mut Guard>,
) -> Result<(Terms<D>, D, D)> {
    let mut mult = D::one();
    let mut content = D::one();
    let mut pos = 0;
    let mut steps = 0usize;
    while pos < f.len() {
        let m = &f[pos].0;
        let Some(g) = reducers.iter().find(|g| g[0].0.divides(m)) else {
            pos += 1;
            continue;
        };
        let q = m.div(&g[0].0).expect("divides");
        let a = &g[0].1;
        let c = &f[pos].1;
        let h = a.gcd(c);
        let a1 = a.div_exact(&h).expect("gcd divides");
        let c1 = c.div_exact(&h).expect("gcd divides");
        let scale = if a1.is_one() { None } else { Some(&a1) };
        let mut nf: Terms<D> = Vec::with_capacity(f.len() + g.len());
        for t in &f[..pos] {
            nf.push((t.0.clone(), match scale {
                Some(s) => t.1.mul(s),
                None => t.1.clone(),
            }));
        }
        nf.extend(axpy(scale, &f[pos + 1..], &c1, &q, &g[1..], ord));
        f = nf;
        if !a1.is_one() {
            mult.mul_assign(&a1);
        }
        steps += 1;
        if steps % 8 == 0 && scale.is_some() {
            let g = make_primitive(&mut f);
            if !g.is_one() {
                content.mul_assign(&g);
            }
        }
        if let Some(gd) = guard.as_deref_mut() {
            gd.check_terms(f.len())?;
            if steps % 64 == 0 {
                gd.check_time()?;
            }
        }
    }
    Ok((f, mult, content))
}

fn spoly<D: Domain>(f: &Terms<D>, g: &Terms<D>, lcm: &Monomial, ord: &MonomialOrder) -> Terms<D> {
    let (a, b) = (&f[0].1, &g[0].1);
    let h = a.gcd(b);
    let a1 = a.div_exact(&h).expect("gcd divides");
    let b1 = b.div_exact(&h).expect("gcd divides");
    let qf = lcm.div(&f[0].0).expect("lcm");
    let qg = lcm.div(&g[0].0).expect("lcm");
    // b1*qf*f - a1*qg*g, leading terms cancel
    let x: Terms<D> = f[1..].iter().map(|t| (t.0.mul(&qf), t.1.mul(&b1))).collect();
    axpy(None, &x, &a1, &qg, &g[1..], ord)
}

impl<D: Domain> GroebnerBasis<D> {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].len() == 1 && self.polys[0][0].0.is_one()
    }

    /// Generators in external numbering, ascending by leading monomial.
    pub fn generators(&self) -> Vec<Poly<D>> {
        self.polys.iter().map(|t| to_poly(t, &self.back)).collect()
    }

    /// Leading monomials in external numbering.
    pub fn staircase(&self) -> Vec<Monomial> {
        self.polys.iter().map(|t| t[0].0.rename(&self.back)).collect()
    }

    pub(crate) fn internal(&self) -> &[Terms<D>] {
        &self.polys
    }

    pub(crate) fn back_map(&self) -> &[usize] {
        &self.back
    }

    pub(crate) fn fwd_map(&self) -> &[usize] {
        &self.map
    }

    /// Leading term of `f` under this basis' order, external numbering.
    pub fn leading_monomial(&self, f: &Poly<D>) -> Option<Monomial> {
        let t = from_poly(f, &self.order, &self.map);
        t.first().map(|x| x.0.rename(&self.back))
    }

    pub(crate) fn reduce_internal(&self, f: Terms<D>) -> (Terms<D>, D, D) {
        let refs: Vec<&Terms<D>> = self.polys.iter().collect();
        reduce_terms(f, &refs, &self.order, None).expect("unbudgeted reduction")
    }

    /// Fraction-free remainder of `f`.
    pub fn reduce(&self, f: &Poly<D>) -> Reduced<D> {
        let (r, mult, content) = self.reduce_internal(from_poly(f, &self.order, &self.map));
        Reduced { r: to_poly(&r, &self.back), mult, content }
    }

    /// Normal form over the fraction field.
    pub fn normal_form(&self, f: &Poly<D>) -> Poly<D::Frac> {
        let red = self.reduce(f);
        let s = D::frac(&red.content, &red.mult);
        red.r.map_coeffs(|c| c.to_frac().mul(&s))
    }

    pub fn contains(&self, f: &Poly<D>) -> bool {
        self.reduce(f).r.is_zero()
    }

    /// Every S-polynomial of basis pairs reduces to zero (no criteria applied).
    pub fn verify_s_pairs(&self) -> bool {
        let refs: Vec<&Terms<D>> = self.polys.iter().collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let l = self.polys[i][0].0.lcm(&self.polys[j][0].0);
                let s = spoly(&self.polys[i], &self.polys[j], &l, &self.order);
                let (r, _, _) = reduce_terms(s, &refs, &self.order, None).expect("unbudgeted");
                if !r.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// No leading monomial divides any term of another generator.
    pub fn is_reduced(&self) -> bool {
        for (i, g) in self.polys.iter().enumerate() {
            for (j, h) in self.polys.iter().enumerate() {
                if i != j && h.iter().any(|t| g[0].0.divides(&t.0)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn dump(&self, vars: &[String], params: &[String]) -> Vec<String> {
        self.generators().iter().map(|g| g.to_text(vars, params)).collect()
    }
}

/// Reduced Gröbner basis of `gens` over the domain `D`.
pub fn buchberger<D: Domain>(gens: &[Poly<D>], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<D>> {
    order.validate()?;
    let n = order.nvars();
    if gens.iter().any(|g| g.nvars() > n) {
        return Err(Error::Argument("generator uses a variable outside the order".into()));
    }
    let map = order.to_internal();
    let back = order.priority.clone();
    let mut guard = Guard { budget, start: Instant::now(), stats: GbStats::default(), pending: 0, basis_len: 0 };

    let mut all: Vec<Terms<D>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq = 0usize;
    let unit = |order: &MonomialOrder, back: &[usize], map: &[usize], stats: GbStats| GroebnerBasis {
        order: order.clone(),
        back: back.to_vec(),
        map: map.to_vec(),
        polys: vec![vec![(Monomial::one(), D::one())]],
        stats,
    };

    let mut queue: Vec<Terms<D>> = gens.iter().filter(|g| !g.is_zero()).map(|g| from_poly(g, order, &map)).collect();
    // seed with smaller leading terms first
    queue.sort_by(|a, b| order.cmp_internal(&a[0].0, &b[0].0));
    let mut queue = queue.into_iter();
    loop {
        let next: Option<Terms<D>> = if let Some(g) = queue.next() {
            Some(g)
        } else {
            // normal strategy: least lcm degree, then creation order
            let best = pairs.iter().enumerate().min_by_key(|(_, p)| (p.deg, p.seq)).map(|(k, _)| k);
            match best {
                None => None,
                Some(k) => {
                    let p = pairs.swap_remove(k);
                    guard.stats.pairs_processed += 1;
                    if let Some(mx) = budget.max_pairs {
                        if guard.stats.pairs_processed > mx {
                            guard.pending = pairs.len();
                            return Err(guard.fail("pair count"));
                        }
                    }
                    guard.check_time()?;
                    Some(spoly(&all[p.i], &all[p.j], &p.lcm, order))
                }
            }
        };
        let Some(f) = next else { break };
        let reducers: Vec<&Terms<D>> = all.iter().zip(&active).filter(|(_, &a)| a).map(|(t, _)| t).collect();
        guard.pending = pairs.len();
        guard.basis_len = reducers.len();
        let (mut h, _, _) = reduce_terms(f, &reducers, order, Some(&mut guard))?;
        if h.is_empty() {
            guard.stats.zero_reductions += 1;
            continue;
        }
        make_primitive(&mut h);
        if h[0].0.is_one() {
            guard.stats.elapsed_ms = guard.start.elapsed().as_millis();
            return Ok(unit(order, &back, &map, guard.stats));
        }
        // Gebauer-Möller update
        let hk = all.len();
        let lh = h[0].0.clone();
        let cand: Vec<(usize, Monomial)> =
            (0..hk).filter(|&g| active[g]).map(|g| (g, all[g][0].0.lcm(&lh))).collect();
        let mut keep: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in cand.iter().enumerate() {
            let coprime = all[*g][0].0.coprime(&lh);
            let dominated = |o: &(usize, Monomial)| o.0 != *g && o.1.divides(l);
            let beaten = !coprime
                && (cand[k + 1..].iter().any(dominated) || keep.iter().any(dominated));
            if !beaten {
                keep.push((*g, l.clone()));
            }
        }
        // same-lcm duplicates: keep one, and drop all if one is coprime
        let mut chosen: Vec<(usize, Monomial)> = Vec::new();
        for (g, l) in keep.iter() {
            let group: Vec<&(usize, Monomial)> = keep.iter().filter(|o| &o.1 == l).collect();
            if group.iter().any(|o| all[o.0][0].0.coprime(&lh)) {
                continue;
            }
            if group[0].0 == *g {
                chosen.push((*g, l.clone()));
            }
        }
        pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && all[p.i][0].0.lcm(&lh) != p.lcm
                && all[p.j][0].0.lcm(&lh) != p.lcm)
        });
        for (g, l) in chosen {
            pairs.push(Pair { i: g, j: hk, deg: order.sugar_degree(&l), lcm: l, seq });
            seq += 1;
        }
        for g in 0..hk {
            if active[g] && lh.divides(&all[g][0].0) {
                active[g] = false;
            }
        }
        all.push(h);
        active.push(true);
    }

    // interreduce the surviving generators
    let mut basis: Vec<Terms<D>> = all.into_iter().zip(active).filter(|(_, a)| *a).map(|(t, _)| t).collect();
    basis.sort_by(|a, b| order.cmp_internal(&a[0].0, &b[0].0));
    let mut out: Vec<Terms<D>> = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&Terms<D>> = basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, t)| t).collect();
        let (lead, tail) = basis[k].split_first().expect("nonzero");
        let (mut r, mult, _) = reduce_terms(tail.to_vec(), &others, order, Some(&mut guard))?;
        let mut t: Terms<D> = vec![(lead.0.clone(), lead.1.mul(&mult))];
        t.append(&mut r);
        make_primitive(&mut t);
        out.push(t);
    }
    guard.stats.elapsed_ms = guard.start.elapsed().as_millis();
    Ok(GroebnerBasis { order: order.clone(), back, map, polys: out, stats: guard.stats })
}

/// Basis of a rational system: denominators are cleared first.
pub fn buchberger_q(gens: &[Poly<Rat>], order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<Int>> {
    let z: Vec<Poly<Int>> = gens.iter().map(|g| g.to_primitive_int().1).collect();
    buchberger(&z, order, budget)
}

/// Clear parameter denominators of a polynomial over rational functions.
pub fn clear_param_denominators(p: &Poly<RatFunc>) -> Poly<Poly<Int>> {
    let mut l = Poly::<Int>::one();
    for (_, c) in p.terms() {
        let d = c.den();
        if !d.is_one() {
            let g = crate::algebra::gcd::gcd(&l, d);
            l = l.mul(&d.div_exact_poly(&g).expect("gcd divides"));
        }
    }
    let lf = RatFunc::from_poly(l);
    p.map_coeffs(|c| {
        let v = c.mul(&lf);
        debug_assert!(v.is_poly());
        v.num().clone()
    })
}

/// Basis of a system with coefficients in a rational function field.
pub fn buchberger_params(
    gens: &[Poly<RatFunc>],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis<Poly<Int>>> {
    let z: Vec<Poly<Poly<Int>>> = gens.iter().map(clear_param_denominators).collect();
    buchberger(&z, order, budget)
}

/// Two bases agree generator by generator up to nonzero field scalars.
pub fn same_up_to_scalar<D: Domain>(a: &[Poly<D>], b: &[Poly<D>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| proportional(x, y))
}

/// Polynomials equal up to a nonzero scalar of the fraction field.
pub fn proportional<D: Domain>(x: &Poly<D>, y: &Poly<D>) -> bool {
    if x.is_zero() || y.is_zero() {
        return x.is_zero() && y.is_zero();
    }
    if x.len() != y.len() {
        return false;
    }
    let (lx, ly) = (&x.terms()[0].1, &y.terms()[0].1);
    // lx*y == ly*x
    x.terms().iter().zip(y.terms()).all(|(s, t)| s.0 == t.0 && s.1.mul(ly) == t.1.mul(lx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_int_poly;
    use crate::groebner::quotient::{eliminant, is_zero_dimensional, shape_check, shape_variable};

    fn zp(s: &str, names: &[&str]) -> Poly<Int> {
        parse_int_poly(s, names).unwrap()
    }

    #[test]
    fn trivial_basis() {
        let n = ["x"];
        let g = buchberger(&[zp("x^2 - 1", &n), zp("x - 1", &n)], &MonomialOrder::lex_natural(1), &Budget::unlimited())
            .unwrap();
        assert_eq!(g.generators(), vec![zp("x - 1", &n)]);
        assert!(g.verify_s_pairs());
    }

    #[test]
    fn not_zero_dimensional() {
        let n = ["x", "y"];
        let g = buchberger(&[zp("x - y", &n)], &MonomialOrder::lex_natural(2), &Budget::unlimited()).unwrap();
        assert_eq!(is_zero_dimensional(&g), (false, None));
        assert!(eliminant(&g, 0).is_err());
    }

    #[test]
    fn shape_of_simple_system() {
        let n = ["y", "x"];
        let g = buchberger(&[zp("x^2 - 1", &n), zp("y - x", &n)], &MonomialOrder::lex_natural(2), &Budget::unlimited())
            .unwrap();
        assert!(shape_check(&g, 1));
        assert_eq!(shape_variable(&g).variable, Some(1));
    }

    fn example_system(pts: &[i64]) -> Vec<Poly<Int>> {
        let n = ["x21", "x22", "x12", "x11"];
        pts.iter()
            .map(|s| {
                let t = format!(
                    "{s}^4 - 2*{s}^3*x21 + {s}^2*x22 - 3*{s}^2*x11 + 2*{s}*x12 + x11*x22 - x12*x21",
                    s = format!("({})", s)
                );
                zp(&t, &n)
            })
            .collect()
    }

    #[test]
    fn numeric_two_by_two() {
        let gens = example_system(&[1, 2, 3, 4]);
        let ord = MonomialOrder::lex_natural(4);
        let g = buchberger(&gens, &ord, &Budget::unlimited()).unwrap();
        assert!(g.verify_s_pairs() && g.is_reduced());
        assert_eq!(is_zero_dimensional(&g), (true, Some(2)));
        for f in &gens {
            assert!(g.contains(f));
        }
        // e = (10, 35, 50, 24): 12x^2 + 140x + 404 = 4(3x^2+35x+101)
        let e = eliminant(&g, 3).unwrap();
        assert_eq!(e.coeffs(), &[Int::from(101), Int::from(35), Int::from(3)]);
        let drl = buchberger(&gens, &MonomialOrder::degrevlex_natural(4), &Budget::unlimited()).unwrap();
        assert_eq!(eliminant(&drl, 3).unwrap(), e);
        let mut rev = gens.clone();
        rev.reverse();
        let g2 = buchberger(&rev, &ord, &Budget::unlimited()).unwrap();
        assert_eq!(g2.generators(), g.generators());
    }

    #[test]
    fn budget_is_enforced() {
        let gens = example_system(&[1, 2, 3, 4]);
        let b = Budget { max_pairs: Some(1), ..Budget::default() };
        match buchberger(&gens, &MonomialOrder::lex_natural(4), &b) {
            Err(Error::Budget { stats, .. }) => assert!(stats.pairs_processed >= 1),
            other => panic!("expected budget error, got {:?}", other.map(|g| g.len())),
        }
    }
}
