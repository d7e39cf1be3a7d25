//! Dense matrices over a coefficient ring: products, fraction-free determinants, minors.

use super::coeff::{Coeff, ExactDiv};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix of polynomials.
pub type PolyMatrix<C> = Matrix<Poly<C>>;

impl<T: Coeff> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension("shape mismatch in addition".into()));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Rows of `self` above rows of `o`.
    pub fn vstack(&self, o: &Self) -> Result<Self> {
        if self.cols != o.cols {
            return Err(Error::Dimension("column mismatch in vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Ok(Matrix { rows: self.rows + o.rows, cols: self.cols, data })
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> Self {
        Matrix { rows: k, cols: self.cols, data: self.data[..k * self.cols].to_vec() }
    }

    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rs.len() * cs.len());
        for &i in rs {
            for &j in cs {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: rs.len(), cols: cs.len(), data }
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det_cofactor(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        Ok(cofactor(self, &(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..=i {
                let v = self.get(i, j);
                if i == j && !v.is_one() || i != j && !v.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn cofactor<T: Coeff>(m: &Matrix<T>, rs: &[usize], cs: &[usize]) -> T {
    if rs.is_empty() {
        return T::one();
    }
    if rs.len() == 1 {
        return m.get(rs[0], cs[0]).clone();
    }
    let mut acc = T::zero();
    for (k, &c) in cs.iter().enumerate() {
        let a = m.get(rs[0], c);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cs.iter().copied().filter(|&x| x != c).collect();
        let sub = cofactor(m, &rs[1..], &rest);
        let t = a.mul(&sub);
        if k % 2 == 0 {
            acc.add_assign(&t);
        } else {
            acc.sub_assign(&t);
        }
    }
    acc
}

impl<T: ExactDiv> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            // sparsest nonzero pivot in column k
            let piv = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| pivot_weight(&a[i][k]));
            let Some(p) = piv else { return Ok(T::zero()) };
            if p != k {
                a.swap(p, k);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = if prev.is_one() { v } else { v.div_exact(&prev).expect("Bareiss step is exact") };
                }
                a[i][k] = T::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { d.neg() } else { d })
    }

    /// All `k`-minors; row subsets outer, column subsets inner, both colex.
    pub fn minors(&self, k: usize) -> Result<Vec<T>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::Dimension(format!("minor size {} out of range for {}x{}", k, self.rows, self.cols)));
        }
        let mut out = Vec::new();
        for rs in colex_subsets(self.rows, k) {
            for cs in colex_subsets(self.cols, k) {
                out.push(self.submatrix(&rs, &cs).det()?);
            }
        }
        Ok(out)
    }

    /// Maximal minors of a wide or square matrix (all rows, colex columns).
    pub fn maximal_minors(&self) -> Result<Vec<T>> {
        let k = self.rows.min(self.cols);
        self.minors(k)
    }
}

fn pivot_weight<T: Coeff>(x: &T) -> usize {
    if x.is_one() {
        0
    } else {
        x.weight()
    }
}

/// `k`-subsets of `0..n` in colexicographic order.
pub fn colex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // colex successor: increase the lowest position that can move
        let mut i = 0;
        while i < k {
            let limit = if i + 1 < k { cur[i + 1] } else { n };
            if cur[i] + 1 < limit {
                cur[i] += 1;
                for (j, c) in cur.iter_mut().enumerate().take(i) {
                    *c = j;
                }
                break;
            }
            i += 1;
        }
        if i == k {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::{Int, Rat};
    use crate::algebra::parse::parse_qpoly;

    fn qp(s: &str) -> Poly<Rat> {
        parse_qpoly(s, &["s", "x11", "x12", "x21", "x22"]).unwrap()
    }

    #[test]
    fn colex_order() {
        assert_eq!(colex_subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(colex_subsets(4, 2)[3], vec![0, 3]);
        assert_eq!(colex_subsets(4, 4).len(), 1);
    }

    #[test]
    fn two_by_three_minors() {
        let m = Matrix::from_rows(vec![
            vec![qp("1"), qp("s"), qp("s^2")],
            vec![qp("0"), qp("1"), qp("2*s")],
        ]);
        let ms = m.minors(2).unwrap();
        assert_eq!(ms, vec![qp("1"), qp("2*s"), qp("s^2")]);
    }

    #[test]
    fn example_two_by_two_determinant() {
        let m = Matrix::from_rows(vec![
            vec![qp("1"), qp("s"), qp("s^2"), qp("s^3")],
            vec![qp("0"), qp("1"), qp("2*s"), qp("3*s^2")],
            vec![qp("1"), qp("0"), qp("x11"), qp("x12")],
            vec![qp("0"), qp("1"), qp("x21"), qp("x22")],
        ]);
        let expect = qp("s^4 - 2*s^3*x21 + s^2*x22 - 3*s^2*x11 + 2*s*x12 + x11*x22 - x12*x21");
        assert_eq!(m.det().unwrap(), expect);
        assert_eq!(m.det_cofactor().unwrap(), expect);
    }

    #[test]
    fn degenerate_sizes() {
        let e: Matrix<Int> = Matrix::zeros(0, 0);
        assert_eq!(e.det().unwrap(), Int::from(1));
        let r: Matrix<Int> = Matrix::zeros(2, 3);
        assert!(r.det().is_err());
        assert!(r.minors(3).is_err());
        assert_eq!(Matrix::<Int>::identity(5).det().unwrap(), Int::from(1));
    }

    #[test]
    fn integer_bareiss_matches_cofactor() {
        let m = Matrix::from_rows(vec![
            vec![Int::from(2), Int::from(-1), Int::from(3)],
            vec![Int::from(0), Int::from(4), Int::from(5)],
            vec![Int::from(7), Int::from(1), Int::from(-2)],
        ]);
        assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
    }
}
