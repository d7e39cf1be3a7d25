//! Osculating flags, the one-parameter group `exp(sN)`, and totally positive matrices.

use crate::algebra::{colex_subsets, Coeff, Int, Matrix, Poly, Rat};
use crate::error::{Error, Result};
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Where a flag osculates the rational normal curve.
/// Serialized as its text form: `"inf"`, `"3/2"`, `"s"`.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FlagPoint {
    Value(Rat),
    /// A named symbolic parameter.
    Param(String),
    Infinity,
}

impl FlagPoint {
    pub fn int(n: i64) -> Self {
        FlagPoint::Value(Rat::from_integer(Int::from(n)))
    }

    pub fn label(&self) -> String {
        match self {
            FlagPoint::Value(r) => crate::algebra::coeff::rat_text(r),
            FlagPoint::Param(s) => s.clone(),
            FlagPoint::Infinity => "inf".into(),
        }
    }

    /// `inf`, a rational literal, or a parameter name.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "oo" || s == "infinity" {
            return Ok(FlagPoint::Infinity);
        }
        if let Some(r) = crate::algebra::parse_rat(s) {
            return Ok(FlagPoint::Value(r));
        }
        if s.chars().next().map(|c| c.is_alphabetic()).unwrap_or(false) && s.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Ok(FlagPoint::Param(s.to_string()));
        }
        Err(Error::Parse(format!("bad flag point `{}`", s)))
    }
}

impl TryFrom<String> for FlagPoint {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        FlagPoint::parse(&s)
    }
}

impl From<FlagPoint> for String {
    fn from(p: FlagPoint) -> String {
        p.label()
    }
}

/// Full `n x n` osculating matrix with entries `binom(j-1, i-1) s^(j-i)` in terms of a ring element `s`.
pub fn osculating_full<C: Coeff>(n: usize, s: &C) -> Matrix<C> {
    let mut pw = vec![C::one()];
    for k in 1..n {
        pw.push(pw[k - 1].mul(s));
    }
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let b = binomial(Int::from(j), Int::from(i));
            m.set(i, j, C::from_int(&b).mul(&pw[j - i]));
        }
    }
    m
}

/// Rows `e_n, e_{n-1}, ...`: the flag osculating at infinity.
pub fn osculating_infinity<C: Coeff>(n: usize) -> Matrix<C> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, n - 1 - i, C::one());
    }
    m
}

/// Top `rows` rows of the osculating matrix at `s`, for `n = m + p`.
///
/// `sigma` is the polynomial standing for the point when it is not infinite.
pub fn osculating_matrix(n: usize, rows: usize, point: Option<&Poly<Rat>>) -> Result<Matrix<Poly<Rat>>> {
    if rows == 0 || rows > n {
        return Err(Error::Dimension(format!("{} rows of a {}-square flag", rows, n)));
    }
    let full = match point {
        Some(s) => osculating_full(n, s),
        None => osculating_infinity(n),
    };
    Ok(full.top_rows(rows))
}

/// `exp(sN)` with `N` having `1, 2, ..., n-1` on the superdiagonal, as a finite sum.
pub fn exp_sn(n: usize, s: &Rat) -> Matrix<Rat> {
    let mut nm: Matrix<Rat> = Matrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        nm.set(i, i + 1, s.mul(&Rat::from_integer(Int::from(i + 1))));
    }
    let mut acc = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..n {
        term = term.mul(&nm).expect("square");
        let inv = Rat::new(Int::from(1), (1..=k).fold(Int::from(1), |a, x| a * Int::from(x)));
        acc = acc.add(&term.map(|x| x.mul(&inv))).expect("square");
    }
    acc
}

/// `I + t E_{i,i+1}`.
pub fn elementary_factor(n: usize, i: usize, t: &Rat) -> Matrix<Rat> {
    let mut m = Matrix::identity(n);
    m.set(i, i + 1, t.clone());
    m
}

/// Seeded product of `factors` elementary factors with positive weights.
///
/// Indices cycle through a reduced word of the longest permutation, so at least
/// `n(n-1)/2` factors give a totally positive matrix.
pub fn tp_random(n: usize, seed: u64, factors: usize) -> Matrix<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word: Vec<usize> = (1..n).rev().flat_map(|k| 0..k).collect();
    let mut m = Matrix::identity(n);
    for f in 0..factors {
        if word.is_empty() {
            break;
        }
        let i = word[f % word.len()];
        let t = Rat::new(Int::from(rng.gen_range(1..=9)), Int::from(rng.gen_range(1..=5)));
        m = m.mul(&elementary_factor(n, i, &t)).expect("square");
    }
    m
}

/// A minor on rows `r` and columns `c` vanishes on every unipotent upper triangular matrix
/// exactly when some `r_k > c_k`.
pub fn minor_vanishes_identically(r: &[usize], c: &[usize]) -> bool {
    r.iter().zip(c).any(|(a, b)| a > b)
}

/// Every minor that does not vanish identically on unipotent matrices is positive.
pub fn tp_check(g: &Matrix<Rat>) -> Result<bool> {
    let n = g.rows();
    if g.cols() != n || !g.is_upper_unitriangular() {
        return Err(Error::Argument("total positivity is tested on unipotent upper triangular matrices".into()));
    }
    for k in 1..=n {
        let subsets = colex_subsets(n, k);
        for r in &subsets {
            for c in &subsets {
                if minor_vanishes_identically(r, c) {
                    continue;
                }
                let d = g.submatrix(r, c).det()?;
                if d <= Rat::from_integer(Int::from(0)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Inverse of a unipotent upper triangular matrix by back substitution.
pub fn unipotent_inverse(g: &Matrix<Rat>) -> Result<Matrix<Rat>> {
    let n = g.rows();
    if !g.is_upper_unitriangular() {
        return Err(Error::Argument("not unipotent upper triangular".into()));
    }
    let mut inv = Matrix::identity(n);
    for j in 0..n {
        for i in (0..j).rev() {
            let mut acc = Rat::from_integer(Int::from(0));
            for k in i + 1..=j {
                acc = acc.add(&g.get(i, k).mul(inv.get(k, j)));
            }
            inv.set(i, j, acc.neg());
        }
    }
    Ok(inv)
}

/// Specification of one flag in an instance.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagSpec {
    Osculating(FlagPoint),
    Explicit(#[serde(with = "crate::algebra::coeff::rat_matrix_serde")] Vec<Vec<Rat>>),
    /// Seeded totally positive factor applied on top of the previous flag.
    Tp { seed: u64, factors: Option<usize> },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn osculating_rows_are_scaled_derivatives() {
        let s = rat(3, 2);
        let k = osculating_full(5, &s);
        // row i (0-based) is the i-th derivative of (1, s, ..., s^4) divided by i!
        assert_eq!(k.get(1, 3), &rat(27, 4));
        assert_eq!(k.get(2, 4), &rat(27, 2));
        assert!(osculating_full(4, &rat(0, 1)) == Matrix::identity(4));
    }

    #[test]
    fn exp_matches_osculating() {
        for s in [rat(1, 1), rat(-2, 3), rat(5, 7)] {
            assert_eq!(exp_sn(6, &s), osculating_full(6, &s));
        }
    }

    #[test]
    fn total_positivity() {
        assert!(!tp_check(&Matrix::identity(4)).unwrap());
        assert!(tp_check(&exp_sn(4, &rat(1, 1))).unwrap());
        let a = tp_random(4, 7, 12);
        let b = tp_random(4, 8, 12);
        assert!(tp_check(&a).unwrap() && tp_check(&b).unwrap());
        assert!(tp_check(&a.mul(&b).unwrap()).unwrap());
        assert_eq!(elementary_factor(2, 0, &rat(3, 1)), Matrix::from_rows(vec![vec![rat(1, 1), rat(3, 1)], vec![rat(0, 1), rat(1, 1)]]));
        let bad = Matrix::from_rows(vec![vec![rat(2, 1)]]);
        assert!(tp_check(&bad).is_err());
    }

    #[test]
    fn inverse_of_unipotent() {
        let a = tp_random(5, 3, 20);
        let i = unipotent_inverse(&a).unwrap();
        assert_eq!(a.mul(&i).unwrap(), Matrix::identity(5));
    }
}
