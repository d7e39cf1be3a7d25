//! Rational functions in parameter variables, kept in lowest terms.

use super::coeff::{Coeff, ExactDiv, Field, Int, Rat};
use super::gcd::gcd;
use super::poly::Poly;
use num_traits::{One, Signed};

type ZPoly = Poly<Int>;

/// `num / den` with `gcd(num, den) = 1` and `den` having positive leading coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: ZPoly,
    den: ZPoly,
}

/// Coefficient field for symbolic-parameter computations.
pub type ParamScalar = RatFunc;

impl RatFunc {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: ZPoly::one() };
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact_poly(&g).expect("gcd divides"), den.div_exact_poly(&g).expect("gcd divides"))
        };
        if d.is_negative() {
            n = n.neg();
            d = d.neg();
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatFunc { num: p, den: ZPoly::one() }
    }

    pub fn from_rat(r: &Rat) -> Self {
        Self::new(ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone()))
    }

    pub fn from_qpoly(p: &Poly<Rat>) -> Self {
        let (s, z) = p.to_primitive_int();
        Self::from_rat(&s).mul(&Self::from_poly(z))
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Substitute rational values for every parameter.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let n = self.num.to_rat().eval(point);
        let d = self.den.to_rat().eval(point);
        if d == Rat::from_integer(Int::from(0)) {
            None
        } else {
            Some(n / d)
        }
    }
}

impl Coeff for RatFunc {
    fn zero() -> Self {
        RatFunc { num: ZPoly::zero(), den: ZPoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: ZPoly::one(), den: ZPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: self.num.mul(&o.den).add(&o.num), den: o.den.clone() };
        }
        if o.den.is_one() {
            return RatFunc { num: o.num.mul(&self.den).add(&self.num), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        let da = self.den.div_exact_poly(&g).expect("divides");
        let db = o.den.div_exact_poly(&g).expect("divides");
        let num = self.num.mul(&db).add(&o.num.mul(&da));
        RatFunc::new(num, da.mul(&o.den))
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: ZPoly::one() };
        }
        // cross-cancel before multiplying
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact_poly(&g1).expect("divides");
        let d2 = o.den.div_exact_poly(&g1).expect("divides");
        let n2 = o.num.div_exact_poly(&g2).expect("divides");
        let d1 = self.den.div_exact_poly(&g2).expect("divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_int(n: &Int) -> Self {
        RatFunc::from_poly(ZPoly::constant(n.clone()))
    }
    fn is_negative(&self) -> bool {
        self.num.is_negative()
    }
    fn to_text(&self, params: &[String]) -> String {
        let n = self.num.to_text(params, &[]);
        if self.den.is_one() {
            n
        } else {
            let d = self.den.to_text(params, &[]);
            let nn = if self.num.len() > 1 { format!("({})", n) } else { n };
            let dd = if self.den.len() > 1 || !One::is_one(&self.den.leading_coeff().abs()) && !self.den.is_constant() {
                format!("({})", d)
            } else {
                d
            };
            format!("{}/{}", nn, dd)
        }
    }
    fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }
    fn text_is_compound(&self) -> bool {
        !self.den.is_one() || Coeff::text_is_compound(&self.num)
    }
}

impl ExactDiv for RatFunc {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            None
        } else {
            Some(self.div(o))
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.is_negative() {
            n = n.neg();
            d = d.neg();
        }
        RatFunc { num: n, den: d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_int_poly;

    fn p(s: &str) -> ZPoly {
        parse_int_poly(s, &["s", "t"]).unwrap()
    }

    #[test]
    fn lowest_terms() {
        let r = RatFunc::new(p("s^2 - t^2"), p("-2*s + 2*t"));
        assert_eq!(r.num(), &p("-s - t"));
        assert_eq!(r.den(), &p("2"));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(p("1"), p("s"));
        let b = RatFunc::new(p("1"), p("t"));
        let c = a.add(&b);
        assert_eq!(c, RatFunc::new(p("s + t"), p("s*t")));
        assert!(c.mul(&c.inv()).is_one());
        assert!(c.sub(&c).is_zero());
    }
}
