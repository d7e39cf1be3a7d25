//! Monomial orders with an explicit variable priority.

use crate::algebra::Monomial;
use crate::error::{Error, Result};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Degree reverse lex where variable `priority[k]` has weight `w[k]`.
    WeightedDegRevLex(Vec<u32>),
}

/// A term order. `priority[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(priority: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority }
    }

    pub fn degrevlex(priority: Vec<usize>) -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, priority }
    }

    pub fn weighted(priority: Vec<usize>, w: Vec<u32>) -> Self {
        MonomialOrder { kind: OrderKind::WeightedDegRevLex(w), priority }
    }

    /// Lex with variable 0 largest.
    pub fn lex_natural(n: usize) -> Self {
        Self::lex((0..n).collect())
    }

    pub fn degrevlex_natural(n: usize) -> Self {
        Self::degrevlex((0..n).collect())
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.priority.len();
        let mut seen = vec![false; n];
        for &v in &self.priority {
            if v >= n || seen[v] {
                return Err(Error::Argument(format!("priority {:?} is not a permutation", self.priority)));
            }
            seen[v] = true;
        }
        if let OrderKind::WeightedDegRevLex(w) = &self.kind {
            if w.len() != n || w.iter().any(|&x| x == 0) {
                return Err(Error::Argument("weights must be positive, one per variable".into()));
            }
        }
        Ok(())
    }

    /// Map external variable -> internal position.
    pub fn to_internal(&self) -> Vec<usize> {
        let mut inv = vec![0; self.priority.len()];
        for (k, &v) in self.priority.iter().enumerate() {
            inv[v] = k;
        }
        inv
    }

    /// The least variable (external index).
    pub fn least_var(&self) -> usize {
        *self.priority.last().expect("nonempty order")
    }

    pub fn describe(&self, names: &[String]) -> String {
        let vs: Vec<&str> = self.priority.iter().map(|&v| names.get(v).map(|s| s.as_str()).unwrap_or("?")).collect();
        let k = match &self.kind {
            OrderKind::Lex => "lex".to_string(),
            OrderKind::DegRevLex => "degrevlex".to_string(),
            OrderKind::WeightedDegRevLex(w) => format!("wdegrevlex{:?}", w),
        };
        format!("{} {}", k, vs.join(" > "))
    }

    /// Compare monomials already in internal numbering.
    #[inline]
    pub fn cmp_internal(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Lex => a.cmp_lex(b),
            OrderKind::DegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => a.cmp_revlex_tail(b),
                c => c,
            },
            OrderKind::WeightedDegRevLex(w) => match a.weighted_degree(w).cmp(&b.weighted_degree(w)) {
                Ordering::Equal => a.cmp_revlex_tail(b),
                c => c,
            },
        }
    }

    /// Compare monomials in external numbering.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let m = self.to_internal();
        self.cmp_internal(&a.rename(&m), &b.rename(&m))
    }

    /// Degree used by the pair-selection strategy.
    #[inline]
    pub fn sugar_degree(&self, m: &Monomial) -> u32 {
        match &self.kind {
            OrderKind::WeightedDegRevLex(w) => m.weighted_degree(w),
            _ => m.degree(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn lex_and_degrevlex() {
        let lex = MonomialOrder::lex_natural(3);
        assert_eq!(lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let drl = MonomialOrder::degrevlex_natural(3);
        // x*z < y^2 in degrevlex
        assert_eq!(drl.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(drl.cmp(&m(&[1, 1, 0]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn priority_reverses_roles() {
        let o = MonomialOrder::lex(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        assert!(MonomialOrder::lex(vec![0, 0]).validate().is_err());
    }
}
