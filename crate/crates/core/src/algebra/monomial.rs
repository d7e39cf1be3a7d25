//! Exponent vectors with trailing zeros trimmed, so the unit monomial needs no context.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

type Exps = SmallVec<[u16; 12]>;

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Monomial {
    e: Exps,
    deg: u32,
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.e.hash(state);
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.e.as_slice())
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        let mut e: Exps = SmallVec::from_elem(0, i + 1);
        e[i] = k as u16;
        Monomial { e, deg: k }
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut e: Exps = exps.iter().map(|&x| x as u16).collect();
        while e.last() == Some(&0) {
            e.pop();
        }
        let deg = exps.iter().sum();
        Monomial { e, deg }
    }

    fn from_raw(mut e: Exps) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        let deg = e.iter().map(|&x| x as u32).sum();
        Monomial { e, deg }
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.e.get(i).copied().unwrap_or(0) as u32
    }

    /// One past the largest variable index with a positive exponent.
    #[inline]
    pub fn len(&self) -> usize {
        self.e.len()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.e.is_empty()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u32 {
        self.e
            .iter()
            .enumerate()
            .map(|(i, &x)| x as u32 * w.get(i).copied().unwrap_or(1))
            .sum()
    }

    pub fn exps(&self) -> &[u16] {
        &self.e
    }

    /// Exponents padded to `n` entries.
    pub fn exps_padded(&self, n: usize) -> Vec<u32> {
        (0..n.max(self.e.len())).map(|i| self.exp(i)).collect()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (long, short) = if self.e.len() >= o.e.len() { (self, o) } else { (o, self) };
        let mut e = long.e.clone();
        for (i, &x) in short.e.iter().enumerate() {
            e[i] += x;
        }
        Monomial { e, deg: self.deg + o.deg }
    }

    /// True when `self` divides `o`.
    #[inline]
    pub fn divides(&self, o: &Monomial) -> bool {
        if self.deg > o.deg || self.e.len() > o.e.len() {
            return false;
        }
        self.e.iter().zip(o.e.iter()).all(|(a, b)| a <= b)
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        let mut e = self.e.clone();
        for (i, &x) in o.e.iter().enumerate() {
            e[i] -= x;
        }
        Some(Monomial::from_raw(e))
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let n = self.e.len().max(o.e.len());
        let e: Exps = (0..n).map(|i| self.exp(i).max(o.exp(i)) as u16).collect();
        Monomial::from_raw(e)
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let n = self.e.len().min(o.e.len());
        let e: Exps = (0..n).map(|i| self.exp(i).min(o.exp(i)) as u16).collect();
        Monomial::from_raw(e)
    }

    /// No variable in common.
    pub fn coprime(&self, o: &Monomial) -> bool {
        self.e.iter().zip(o.e.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        let e: Exps = self.e.iter().map(|&x| x * k as u16).collect();
        Monomial { e, deg: self.deg * k }
    }

    /// Apply `map[i]` to every variable index.
    pub fn rename(&self, map: &[usize]) -> Monomial {
        let n = self
            .e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, _)| map[i] + 1)
            .max()
            .unwrap_or(0);
        let mut e: Exps = SmallVec::from_elem(0, n);
        for (i, &x) in self.e.iter().enumerate() {
            if x > 0 {
                e[map[i]] += x;
            }
        }
        Monomial::from_raw(e)
    }

    /// Drop variable `v`, returning its exponent and the remaining monomial.
    pub fn split_var(&self, v: usize) -> (u32, Monomial) {
        let k = self.exp(v);
        if k == 0 {
            return (0, self.clone());
        }
        let mut e = self.e.clone();
        e[v] = 0;
        (k, Monomial::from_raw(e))
    }

    pub fn with_var(&self, v: usize, k: u32) -> Monomial {
        let mut e = self.e.clone();
        if e.len() <= v {
            e.resize(v + 1, 0);
        }
        e[v] = k as u16;
        Monomial::from_raw(e)
    }

    /// Graded lexicographic comparison (variable 0 most significant).
    pub fn cmp_grlex(&self, o: &Monomial) -> Ordering {
        match self.deg.cmp(&o.deg) {
            Ordering::Equal => self.cmp_lex(o),
            c => c,
        }
    }

    /// Pure lexicographic comparison with variable 0 most significant.
    pub fn cmp_lex(&self, o: &Monomial) -> Ordering {
        let n = self.e.len().max(o.e.len());
        for i in 0..n {
            let (a, b) = (self.exp(i), o.exp(i));
            if a != b {
                return a.cmp(&b);
            }
        }
        Ordering::Equal
    }

    /// Reverse lexicographic tie-break: the smaller exponent in the last differing variable wins.
    pub fn cmp_revlex_tail(&self, o: &Monomial) -> Ordering {
        let n = self.e.len().max(o.e.len());
        for i in (0..n).rev() {
            let (a, b) = (self.exp(i), o.exp(i));
            if a != b {
                return b.cmp(&a);
            }
        }
        Ordering::Equal
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i)
    }

    /// Text such as `x^2*y` with `names[i]` for variable `i`.
    pub fn to_text(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &x) in self.e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("v{}", i));
            if x == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{}^{}", name, x));
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimmed_equality() {
        assert_eq!(Monomial::from_exps(&[1, 0, 0]), Monomial::from_exps(&[1]));
        assert!(Monomial::one().is_one());
        let a = Monomial::from_exps(&[1, 2]);
        let b = Monomial::from_exps(&[0, 1, 3]);
        assert_eq!(a.mul(&b), Monomial::from_exps(&[1, 3, 3]));
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[1, 2, 3]));
        assert_eq!(a.gcd(&b), Monomial::from_exps(&[0, 1]));
        assert!(Monomial::from_exps(&[0, 1]).divides(&a));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert!(!a.coprime(&b));
        assert!(Monomial::var(0).coprime(&Monomial::var(3)));
    }

    #[test]
    fn orders() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        assert_eq!(x.cmp_grlex(&y), Ordering::Greater);
        assert_eq!(y.pow(2).cmp_grlex(&x), Ordering::Greater);
        // revlex: x*z vs y^2, last differing var is z; x*z has larger z so loses
        let xz = Monomial::from_exps(&[1, 0, 1]);
        assert_eq!(xz.cmp_revlex_tail(&y.pow(2)), Ordering::Less);
    }

    #[test]
    fn rename_and_split() {
        let m = Monomial::from_exps(&[2, 1]);
        assert_eq!(m.rename(&[1, 0]), Monomial::from_exps(&[1, 2]));
        assert_eq!(m.split_var(0), (2, Monomial::from_exps(&[0, 1])));
        assert_eq!(m.with_var(3, 4), Monomial::from_exps(&[2, 1, 0, 4]));
    }
}
