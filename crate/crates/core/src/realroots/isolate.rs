//! Root isolation by Sturm-count bisection and exact containment checks.

use super::sturm::{cauchy_bound, sign_at, Bound, SturmChain};
use crate::algebra::{rat_to_f64, Int, Rat, UniPoly};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Half-open rational interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo < hi, "empty interval");
        Interval { lo, hi }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(Int::from(2))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo < x && x <= &self.hi
    }

    /// Distance from a float to the closed interval.
    pub fn distance_to(&self, x: f64) -> f64 {
        let (a, b) = (rat_to_f64(&self.lo), rat_to_f64(&self.hi));
        if x < a {
            a - x
        } else if x > b {
            x - b
        } else {
            0.0
        }
    }

    pub fn to_strings(&self) -> (String, String) {
        (crate::algebra::coeff::rat_text(&self.lo), crate::algebra::coeff::rat_text(&self.hi))
    }
}

fn two() -> Rat {
    Rat::from_integer(Int::from(2))
}

/// Isolating intervals of the distinct real roots, ascending, each of width at most `width`.
/// The default width is `2^-20`; endpoints are dyadic.
pub fn isolate_real_roots(g: &UniPoly<Rat>, width: Option<&Rat>) -> Vec<Interval> {
    isolate_with_chain(&SturmChain::new(g), width)
}

/// As [`isolate_real_roots`], reusing a chain already built.
pub fn isolate_with_chain(chain: &SturmChain, width: Option<&Rat>) -> Vec<Interval> {
    if chain.squarefree_degree() == 0 {
        return Vec::new();
    }
    let b = dyadic_above(&cauchy_bound(&chain.chain[0].to_rat()));
    let w = width.cloned().unwrap_or_else(|| Rat::new(Int::one(), Int::from(1u64 << 20)));
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b.clone(), chain.count(&Bound::At(-b.clone()), &Bound::At(b.clone())))];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            let iv = refine(chain, Interval::new(lo, hi), &w);
            out.push(iv);
            continue;
        }
        let mid = (&lo + &hi) / two();
        let left = chain.count(&Bound::At(lo.clone()), &Bound::At(mid.clone()));
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    out.sort();
    out
}

/// Smallest power of two at least `x`, for `x > 0`.
fn dyadic_above(x: &Rat) -> Rat {
    let mut b = Rat::one();
    while &b < x {
        b = &b * two();
    }
    b
}

/// Shrink an interval holding exactly one root until its width is at most `w`.
pub fn refine(chain: &SturmChain, mut iv: Interval, w: &Rat) -> Interval {
    let p = &chain.chain[0];
    while &iv.width() > w {
        let mid = iv.mid();
        // sign test is cheaper than a full count and exact for a simple root
        let sm = sign_at(p, &mid);
        if sm == Ordering::Equal {
            let h = (iv.width() / Rat::from_integer(Int::from(4))).min(w / two());
            return Interval::new(&mid - &h, &mid + &h);
        }
        let sh = sign_at(p, &iv.hi);
        if sh == Ordering::Equal {
            // root sits at hi
            iv = Interval::new(mid, iv.hi);
            continue;
        }
        if sm == sh {
            iv = Interval::new(iv.lo, mid);
        } else {
            iv = Interval::new(mid, iv.hi);
        }
    }
    iv
}

/// Shrink isolating intervals of two polynomials until all are pairwise disjoint.
pub fn separate(ca: &SturmChain, a: &mut [Interval], cb: &SturmChain, b: &mut [Interval]) -> bool {
    for _ in 0..4096 {
        let mut clash = false;
        for x in a.iter_mut() {
            for y in b.iter_mut() {
                if x.lo < y.hi && y.lo < x.hi {
                    clash = true;
                    let wx = x.width() / two();
                    let wy = y.width() / two();
                    *x = refine(ca, x.clone(), &wx);
                    *y = refine(cb, y.clone(), &wy);
                }
            }
        }
        if !clash {
            return true;
        }
    }
    false
}

/// Exact comparison of `a + c*sqrt(d)` (with `d >= 0`) against a rational `r`.
pub fn cmp_surd(a: &Rat, c: &Rat, d: &Rat, r: &Rat) -> Ordering {
    // compare c*sqrt(d) with r - a
    let t = r - a;
    let lhs_sign = if c.is_zero() || d.is_zero() { Ordering::Equal } else if c.is_positive() { Ordering::Greater } else { Ordering::Less };
    let t_sign = if t.is_zero() { Ordering::Equal } else if t.is_positive() { Ordering::Greater } else { Ordering::Less };
    if lhs_sign != t_sign {
        return lhs_sign.cmp(&t_sign);
    }
    if lhs_sign == Ordering::Equal {
        return Ordering::Equal;
    }
    // same sign: compare squares, flipping for negatives
    let l2 = c * c * d;
    let t2 = &t * &t;
    let o = l2.cmp(&t2);
    if lhs_sign == Ordering::Greater {
        o
    } else {
        o.reverse()
    }
}

/// Whether `a + c*sqrt(d)` lies in `(lo, hi]`.
pub fn interval_contains_surd(iv: &Interval, a: &Rat, c: &Rat, d: &Rat) -> bool {
    cmp_surd(a, c, d, &iv.lo) == Ordering::Greater && cmp_surd(a, c, d, &iv.hi) != Ordering::Greater
}

/// Every float lies within `tol` of a distinct interval, matched in ascending order.
pub fn floats_match(ivs: &[Interval], xs: &[f64], tol: f64) -> bool {
    let mut xs = xs.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    ivs.len() == xs.len() && ivs.iter().zip(&xs).all(|(iv, x)| iv.distance_to(*x) <= tol)
}

/// Rational from a float given as a decimal literal.
pub fn rat_from_decimal(s: &str) -> Option<Rat> {
    crate::algebra::parse_rat(s)
}
