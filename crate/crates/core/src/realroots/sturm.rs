//! Sturm chains over the rationals and exact sign evaluation.

use crate::algebra::{Int, Rat, UniPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// An interval endpoint; counts use the half-open interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    PosInf,
    At(Rat),
}

/// Scale by a positive rational so that coefficients are coprime integers; signs are kept.
pub fn positive_primitive(p: &UniPoly<Rat>) -> UniPoly<Int> {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let l = p.coeffs().iter().fold(Int::one(), |a, c| a.lcm(c.denom()));
    let ints: Vec<Int> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(Int::zero(), |a, c| a.gcd(c));
    UniPoly::new(ints.into_iter().map(|c| c / &g).collect())
}

/// Sign of `p(a/b)` for `b > 0`, using integers only.
pub fn sign_at(p: &UniPoly<Int>, x: &Rat) -> Ordering {
    let (a, b) = (x.numer(), x.denom());
    let cs = p.coeffs();
    if cs.is_empty() {
        return Ordering::Equal;
    }
    // b^n p(a/b) = sum c_k a^k b^(n-k)
    let mut acc = cs[cs.len() - 1].clone();
    let mut bp = Int::one();
    for c in cs[..cs.len() - 1].iter().rev() {
        bp *= b;
        acc = acc * a + c * &bp;
    }
    acc.sign_cmp()
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for Int {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Sturm chain of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    pub chain: Vec<UniPoly<Int>>,
    /// The input had no repeated root, so the chain starts with the input itself.
    pub input_squarefree: bool,
}

/// Divide by the positive content.
fn drop_content(p: UniPoly<Int>) -> UniPoly<Int> {
    let g = p.coeffs().iter().fold(Int::zero(), |a, c| a.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    UniPoly::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// `p, p', -rem, ...` up to positive scalars, by primitive pseudo-remainders over the integers.
/// The last element is `gcd(p, p')` up to a constant.
fn sturm_sequence(p: UniPoly<Int>) -> Vec<UniPoly<Int>> {
    let d = drop_content(p.derivative());
    let mut seq = vec![p, d];
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.degree() == 0 {
            break;
        }
        // prem = lc(b)^k * rem with k = deg a - deg b + 1
        let k = a.degree() - b.degree() + 1;
        let r = a.prem(b);
        if r.is_zero() {
            break;
        }
        let flip = !(b.lc().is_negative() && k % 2 == 1);
        let r = if flip { r.neg() } else { r };
        seq.push(drop_content(r));
    }
    seq
}

impl SturmChain {
    pub fn new(g: &UniPoly<Rat>) -> Self {
        assert!(!g.is_zero(), "Sturm chain of the zero polynomial");
        let p = g.to_primitive_int();
        if p.degree() == 0 {
            return SturmChain { chain: vec![UniPoly::constant(Int::one())], input_squarefree: true };
        }
        let seq = sturm_sequence(p.clone());
        let last = seq.last().expect("nonempty");
        if last.degree() == 0 {
            return SturmChain { chain: seq, input_squarefree: true };
        }
        let q = p.to_rat().divrem(&last.to_rat()).0.to_primitive_int();
        let chain = if q.degree() == 0 { vec![q] } else { sturm_sequence(q) };
        SturmChain { chain, input_squarefree: false }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Degree of the squarefree part.
    pub fn squarefree_degree(&self) -> usize {
        self.chain[0].degree()
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    pub fn variations_at(&self, b: &Bound) -> usize {
        match b {
            Bound::At(x) => Self::variations(self.chain.iter().map(|p| sign_at(p, x))),
            Bound::PosInf => Self::variations(self.chain.iter().map(|p| p.lc().sign_cmp())),
            Bound::NegInf => Self::variations(self.chain.iter().map(|p| {
                let s = p.lc().sign_cmp();
                if p.degree() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            })),
        }
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let (a, b) = (self.variations_at(lo), self.variations_at(hi));
        a.saturating_sub(b)
    }
}

/// Distinct real roots of `g` in `(lo, hi]`.
pub fn count_real_roots(g: &UniPoly<Rat>, lo: &Bound, hi: &Bound) -> usize {
    SturmChain::new(g).count(lo, hi)
}

/// Distinct real roots on the whole line.
pub fn count_all_real_roots(g: &UniPoly<Rat>) -> usize {
    count_real_roots(g, &Bound::NegInf, &Bound::PosInf)
}

/// `1 + max|c_i| / |lc|`: every root has absolute value below this.
pub fn cauchy_bound(g: &UniPoly<Rat>) -> Rat {
    let lc = g.lc().abs();
    let n = g.degree();
    let mx = g.coeffs()[..n].iter().map(|c| c.abs()).max().unwrap_or_else(Rat::zero);
    Rat::one() + mx / lc
}

/// Squarefree decomposition `g = c * prod f_k^k` (Yun); returns `(f_k, k)` with nonconstant `f_k`.
pub fn squarefree_factors(g: &UniPoly<Rat>) -> Vec<(UniPoly<Rat>, usize)> {
    let mut out = Vec::new();
    if g.degree() == 0 {
        return out;
    }
    let d = g.derivative();
    let a0 = UniPoly::gcd(g, &d);
    let mut b = g.divrem(&a0).0;
    let mut c = d.divrem(&a0).0;
    let mut k = 1;
    loop {
        let dd = c.sub(&b.derivative());
        if b.degree() == 0 {
            break;
        }
        let a = UniPoly::gcd(&b, &dd);
        if a.degree() > 0 {
            out.push((a.monic(), k));
        }
        b = b.divrem(&a).0;
        c = dd.divrem(&a).0;
        k += 1;
    }
    out
}

/// True when `g` has no repeated root.
pub fn is_squarefree(g: &UniPoly<Rat>) -> bool {
    g.degree() == 0 || SturmChain::new(g).input_squarefree
}
