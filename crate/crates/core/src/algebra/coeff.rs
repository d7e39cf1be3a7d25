//! Coefficient contracts shared by every polynomial type.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Exact integer.
pub type Int = BigInt;
/// Exact rational with positive denominator in lowest terms.
pub type Rat = BigRational;

/// Commutative ring element with value semantics.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_int(n: &Int) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&Int::from(n))
    }
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    fn sub_assign(&mut self, o: &Self) {
        *self = self.sub(o);
    }
    fn mul_assign(&mut self, o: &Self) {
        *self = self.mul(o);
    }
    /// Sign of the leading part; used to pick a canonical associate.
    fn is_negative(&self) -> bool;
    /// Text using `params` for any inner variables.
    fn to_text(&self, params: &[String]) -> String;
    /// True when the text form is a sum and needs parentheses as a factor.
    fn text_is_compound(&self) -> bool;
    /// Rough size, used to prefer simple pivots.
    fn weight(&self) -> usize {
        1
    }

    fn pow(&self, e: u32) -> Self {
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
}

/// Ring in which exact quotients can be computed.
pub trait ExactDiv: Coeff {
    /// `Some(q)` with `q * o == self`, or `None` when `o` does not divide.
    fn div_exact(&self, o: &Self) -> Option<Self>;
}

/// Gcd domain with a fraction field.
pub trait Domain: ExactDiv {
    type Frac: Field;
    /// Gcd with canonical sign (non-negative leading part).
    fn gcd(&self, o: &Self) -> Self;
    fn to_frac(&self) -> Self::Frac;
    fn frac(num: &Self, den: &Self) -> Self::Frac;
    /// Numerator and denominator of a fraction, denominator canonical.
    fn frac_parts(f: &Self::Frac) -> (Self, Self);
}

/// Field.
pub trait Field: ExactDiv {
    fn inv(&self) -> Self;
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
}

impl Coeff for Int {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: &Int) -> Self {
        n.clone()
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_assign(&mut self, o: &Self) {
        *self *= o;
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_text(&self, _params: &[String]) -> String {
        self.to_string()
    }
    fn text_is_compound(&self) -> bool {
        false
    }
    fn weight(&self) -> usize {
        self.bits() as usize
    }
}

impl ExactDiv for Int {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl Domain for Int {
    type Frac = Rat;
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn to_frac(&self) -> Rat {
        Rat::from_integer(self.clone())
    }
    fn frac(num: &Self, den: &Self) -> Rat {
        Rat::new(num.clone(), den.clone())
    }
    fn frac_parts(f: &Rat) -> (Int, Int) {
        (f.numer().clone(), f.denom().clone())
    }
}

impl Coeff for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_int(n: &Int) -> Self {
        Rat::from_integer(n.clone())
    }
    fn add_assign(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign(&mut self, o: &Self) {
        *self -= o;
    }
    fn mul_assign(&mut self, o: &Self) {
        *self *= o;
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_text(&self, _params: &[String]) -> String {
        rat_text(self)
    }
    fn text_is_compound(&self) -> bool {
        false
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl ExactDiv for Rat {
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            None
        } else {
            Some(self / o)
        }
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// `n` or `n/d`.
pub fn rat_text(r: &Rat) -> String {
    if One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `n`, `-n`, `n/d`, or a decimal literal such as `-0.25`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: Int = n.trim().parse().ok()?;
        let d: Int = d.trim().parse().ok()?;
        if Zero::is_zero(&d) {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        let ip: Int = if ip.is_empty() { <Int as Zero>::zero() } else { ip.parse().ok()? };
        if !fp.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let scale = num_traits::pow(Int::from(10), fp.len());
        let f: Int = if fp.is_empty() { <Int as Zero>::zero() } else { fp.parse().ok()? };
        let v = Rat::new(ip * &scale + f, scale);
        return Some(if neg { -v } else { v });
    }
    let n: Int = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Rational from a pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Write `r` as `num/den` with the least positive common denominator of a list.
pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> Int {
    it.into_iter()
        .fold(<Int as One>::one(), |acc, r| Integer::lcm(&acc, r.denom()))
}

/// Approximate value for display.
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // scale down huge values
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// The numeric value of an integer as an `f64`.
pub fn int_to_f64(i: &Int) -> f64 {
    use num_traits::ToPrimitive;
    i.to_f64().unwrap_or(f64::NAN)
}

/// `|x|` for any signed value.
pub fn abs_rat(r: &Rat) -> Rat {
    r.abs()
}

/// Serde as a `"num/den"` string; integers and decimals are accepted on input.
pub mod rat_serde {
    use super::{parse_rat, rat_text, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_text(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let v = RatInput::deserialize(d)?;
        v.value().ok_or_else(|| serde::de::Error::custom("expected a rational literal"))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RatInput {
        Text(String),
        Int(i64),
        Float(f64),
    }

    impl RatInput {
        pub(crate) fn value(&self) -> Option<Rat> {
            match self {
                RatInput::Text(t) => parse_rat(t),
                RatInput::Int(i) => Some(Rat::from_integer((*i).into())),
                // floats go through their shortest decimal text
                RatInput::Float(f) => parse_rat(&format!("{}", f)),
            }
        }
    }
}

/// Serde for rational matrices as nested lists of strings.
pub mod rat_matrix_serde {
    use super::rat_serde::RatInput;
    use super::{rat_text, Rat};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
        let t: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(rat_text).collect()).collect();
        t.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        let v: Vec<Vec<RatInput>> = Vec::deserialize(d)?;
        v.iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.value().ok_or_else(|| serde::de::Error::custom("expected a rational literal")))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-5"), Some(rat(-5, 1)));
        assert_eq!(parse_rat("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn int_pow_and_gcd() {
        assert_eq!(Int::from(3).pow(4), Int::from(81));
        assert_eq!(Domain::gcd(&Int::from(-12), &Int::from(18)), Int::from(6));
        assert_eq!(Int::from(12).div_exact(&Int::from(5)), None);
    }
}
