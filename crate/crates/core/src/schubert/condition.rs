//! Schubert conditions and Schubert data.

use crate::error::{Error, Result};
use std::fmt;

/// Increasing sequence `1 <= a_1 < ... < a_p <= m+p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct SchubertCondition {
    pub m: usize,
    pub p: usize,
    pub alpha: Vec<usize>,
}

impl SchubertCondition {
    pub fn new(m: usize, p: usize, alpha: Vec<usize>) -> Result<Self> {
        if alpha.len() != p {
            return Err(Error::Argument(format!("condition {:?} needs {} entries", alpha, p)));
        }
        if alpha.first().map(|&a| a < 1).unwrap_or(false) || alpha.last().map(|&a| a > m + p).unwrap_or(false) {
            return Err(Error::Argument(format!("condition {:?} leaves [1, {}]", alpha, m + p)));
        }
        if alpha.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!("condition {:?} is not increasing", alpha)));
        }
        Ok(SchubertCondition { m, p, alpha })
    }

    /// The trivial condition `1 < 2 < ... < p`.
    pub fn identity(m: usize, p: usize) -> Self {
        SchubertCondition { m, p, alpha: (1..=p).collect() }
    }

    /// `J_a = 1 < 2 < ... < p-1 < p+a`.
    pub fn pieri(m: usize, p: usize, a: usize) -> Result<Self> {
        if a > m {
            return Err(Error::Argument(format!("J_{} needs a <= m = {}", a, m)));
        }
        let mut alpha: Vec<usize> = (1..p).collect();
        alpha.push(p + a);
        Ok(SchubertCondition { m, p, alpha })
    }

    /// `|a| = Σ (a_i - i)`.
    pub fn codim(&self) -> usize {
        self.alpha.iter().enumerate().map(|(i, &a)| a - (i + 1)).sum()
    }

    /// `Some(a)` when this is `J_a` with `a >= 1`.
    pub fn pieri_index(&self) -> Option<usize> {
        let p = self.p;
        if self.alpha[..p - 1].iter().enumerate().all(|(i, &a)| a == i + 1) && self.alpha[p - 1] > p {
            Some(self.alpha[p - 1] - p)
        } else {
            None
        }
    }

    pub fn is_pieri(&self) -> bool {
        self.pieri_index().is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.codim() == 0
    }

    /// Literal complement of the entries in `[1, m+p]`, a sequence of length `m`.
    ///
    /// This does not preserve codimension; see [`Self::dual_perp`].
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.m + self.p).filter(|x| !self.alpha.contains(x)).collect()
    }

    /// The dual condition for `Grass(m, m+p)`: the complement of `{m+p+1-a_i}`.
    ///
    /// Codimension is preserved, `J_1` maps to `J_1`, and applying it twice is the identity.
    pub fn dual_perp(&self) -> Self {
        let n = self.m + self.p;
        let flipped: Vec<usize> = self.alpha.iter().map(|a| n + 1 - a).collect();
        let alpha: Vec<usize> = (1..=n).filter(|x| !flipped.contains(x)).collect();
        SchubertCondition { m: self.p, p: self.m, alpha }
    }

    /// `1 < 1+a_1 < ... < 1+a_{p-1}`, from `(m, p-1)` to `(m, p)`.
    pub fn plus_embed(&self) -> Self {
        let mut alpha = vec![1];
        alpha.extend(self.alpha.iter().map(|a| a + 1));
        SchubertCondition { m: self.m, p: self.p + 1, alpha }
    }

    /// Indices `i` (0-based) of essential entries: `a_1 > 1` or `a_i - a_{i-1} > 1`.
    pub fn essential(&self) -> Vec<usize> {
        (0..self.p)
            .filter(|&i| if i == 0 { self.alpha[0] > 1 } else { self.alpha[i] - self.alpha[i - 1] > 1 })
            .collect()
    }

    /// All `b` with `a_1 <= b_1 < a_2 <= b_2 < ... < a_p <= b_p <= m+p` and `|b| = |a| + k`.
    pub fn pieri_successors(&self, k: usize) -> Vec<SchubertCondition> {
        let n = self.m + self.p;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.p);
        fn rec(a: &[usize], n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let i = cur.len();
            if i == a.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let hi = if i + 1 < a.len() { a[i + 1] - 1 } else { n };
            for b in a[i]..=hi {
                let d = b - a[i];
                if d > left {
                    break;
                }
                cur.push(b);
                rec(a, n, left - d, cur, out);
                cur.pop();
            }
        }
        let mut raw = Vec::new();
        rec(&self.alpha, n, k, &mut cur, &mut raw);
        for alpha in raw {
            out.push(SchubertCondition { m: self.m, p: self.p, alpha });
        }
        out
    }

    /// Parse `J2`, `135`, or `1,3,10`.
    pub fn parse(s: &str, m: usize, p: usize) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('J').or_else(|| s.strip_prefix('j')) {
            let a: usize = rest.parse().map_err(|_| Error::Parse(format!("bad Pieri condition `{}`", s)))?;
            return Self::pieri(m, p, a);
        }
        let alpha: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad condition `{}`", s)))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse(format!("bad condition `{}`", s)))?
        };
        Self::new(m, p, alpha)
    }

    pub fn label(&self) -> String {
        if let Some(a) = self.pieri_index() {
            return format!("J{}", a);
        }
        if self.m + self.p < 10 {
            self.alpha.iter().map(|a| a.to_string()).collect()
        } else {
            self.alpha.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for SchubertCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A list of conditions whose codimensions sum to `mp`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SchubertData {
    pub m: usize,
    pub p: usize,
    pub conditions: Vec<SchubertCondition>,
}

impl SchubertData {
    pub fn new(m: usize, p: usize, conditions: Vec<SchubertCondition>) -> Result<Self> {
        if conditions.iter().any(|c| c.m != m || c.p != p) {
            return Err(Error::Argument("conditions must share (m, p)".into()));
        }
        let total: usize = conditions.iter().map(|c| c.codim()).sum();
        if total != m * p {
            return Err(Error::Argument(format!("codimensions sum to {}, expected mp = {}", total, m * p)));
        }
        Ok(SchubertData { m, p, conditions })
    }

    /// `(J_1)^{mp}`.
    pub fn hypersurface(m: usize, p: usize) -> Self {
        let j1 = SchubertCondition::pieri(m, p, 1).expect("m >= 1");
        SchubertData { m, p, conditions: vec![j1; m * p] }
    }

    /// Parse items such as `J2^4`, `135^2`, `J1`.
    pub fn parse(items: &[&str], m: usize, p: usize) -> Result<Self> {
        let mut conds = Vec::new();
        for it in items {
            let it = it.trim().trim_matches(|c| c == '(' || c == ')');
            let (base, k) = match it.split_once('^') {
                Some((b, e)) => {
                    let b = b.trim_matches(|c| c == '(' || c == ')');
                    (b, e.parse::<usize>().map_err(|_| Error::Parse(format!("bad multiplicity in `{}`", it)))?)
                }
                None => (it, 1),
            };
            let c = SchubertCondition::parse(base, m, p)?;
            conds.extend(std::iter::repeat(c).take(k));
        }
        Self::new(m, p, conds)
    }

    /// At most two conditions are not Pieri conditions.
    pub fn is_pieri_data(&self) -> bool {
        self.conditions.iter().filter(|c| !c.is_pieri() && !c.is_identity()).count() <= 2
    }

    /// Every condition except possibly the first and last is a Pieri condition.
    pub fn is_pieri_data_ends(&self) -> bool {
        let n = self.conditions.len();
        self.conditions
            .iter()
            .enumerate()
            .all(|(i, c)| i == 0 || i + 1 == n || c.is_pieri() || c.is_identity())
    }

    pub fn dual_perp(&self) -> Self {
        SchubertData { m: self.p, p: self.m, conditions: self.conditions.iter().map(|c| c.dual_perp()).collect() }
    }

    pub fn label(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.conditions.len() {
            let mut j = i;
            while j < self.conditions.len() && self.conditions[j] == self.conditions[i] {
                j += 1;
            }
            let l = self.conditions[i].label();
            out.push(if j - i > 1 { format!("({})^{}", l, j - i) } else { format!("({})", l) });
            i = j;
        }
        out.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: usize, p: usize, a: &[usize]) -> SchubertCondition {
        SchubertCondition::new(m, p, a.to_vec()).unwrap()
    }

    #[test]
    fn codims() {
        assert_eq!(c(4, 2, &[1, 3]).codim(), 1);
        assert_eq!(SchubertCondition::identity(3, 3).codim(), 0);
        assert_eq!(SchubertCondition::pieri(4, 3, 2).unwrap().codim(), 2);
    }

    #[test]
    fn dualities() {
        assert_eq!(c(2, 2, &[1, 3]).complement(), vec![2, 4]);
        assert_eq!(SchubertCondition::identity(3, 2).complement(), vec![3, 4, 5]);
        assert_eq!(SchubertCondition::identity(3, 2).dual_perp(), SchubertCondition::identity(2, 3));
        assert_eq!(c(2, 2, &[1, 3]).dual_perp().codim(), 1);
        let j = SchubertCondition::pieri(3, 2, 1).unwrap();
        assert_eq!(j.dual_perp(), SchubertCondition::pieri(2, 3, 1).unwrap());
        let a = c(3, 2, &[1, 3]);
        assert_eq!(a.plus_embed(), c(3, 3, &[1, 2, 4]));
        assert_eq!(a.dual_perp().dual_perp(), a);
    }

    #[test]
    fn successors() {
        let mut s = c(2, 2, &[1, 3]).pieri_successors(1);
        s.sort();
        assert_eq!(s, vec![c(2, 2, &[1, 4]), c(2, 2, &[2, 3])]);
        assert!(c(2, 2, &[3, 4]).pieri_successors(1).is_empty());
    }

    #[test]
    fn parsing() {
        let d = SchubertData::parse(&["135^2", "J1^3"], 3, 3).unwrap();
        assert_eq!(d.conditions.len(), 5);
        assert_eq!(d.label(), "(135)^2,(J1)^3");
        assert!(SchubertData::parse(&["J1^3"], 3, 3).is_err());
        assert!(SchubertCondition::parse("31", 2, 2).is_err());
        assert!(d.is_pieri_data() && !d.is_pieri_data_ends());
        let e = SchubertData::parse(&["135", "J1^3", "135"], 3, 3).unwrap();
        assert!(e.is_pieri_data_ends());
    }

    #[test]
    fn essential_entries() {
        assert_eq!(c(3, 3, &[1, 3, 5]).essential(), vec![1, 2]);
        assert_eq!(SchubertCondition::pieri(4, 2, 2).unwrap().essential(), vec![1]);
        assert_eq!(c(2, 2, &[2, 3]).essential(), vec![0]);
    }
}
