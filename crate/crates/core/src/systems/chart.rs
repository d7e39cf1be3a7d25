//! Affine charts on the Grassmannian: `[I_p X]`, the pair charts attached to two
//! Schubert conditions at infinity and zero, and the reduced chart for the `psi` systems.

use crate::algebra::{Matrix, Poly, Rat};
use crate::error::{Error, Result};
use crate::schubert::SchubertCondition;

#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChartSpec {
    /// `[I_p | X]` with `X` a `p x m` block.
    AffineIpX,
    /// Conditions `alpha` at the flag at infinity and `beta` at the flag at zero.
    Pair { alpha: Vec<usize>, beta: Vec<usize> },
    /// The `(mp-2)`-dimensional chart of planes meeting `K(0)` and `K(inf)`.
    Psi,
}

impl ChartSpec {
    pub fn pair(alpha: &SchubertCondition, beta: &SchubertCondition) -> Self {
        ChartSpec::Pair { alpha: alpha.alpha.clone(), beta: beta.alpha.clone() }
    }

    pub fn label(&self) -> String {
        let seq = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            ChartSpec::AffineIpX => "affine".into(),
            ChartSpec::Pair { alpha, beta } => format!("pair[{}|{}]", seq(alpha), seq(beta)),
            ChartSpec::Psi => "psi".into(),
        }
    }
}

/// A `p x (m+p)` template: `Some(1)`, `Some(0)` or a free variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    One,
    Zero,
    Free,
}

/// Structure of the chart as an entry grid (0-based rows and columns).
pub fn chart_pattern(chart: &ChartSpec, m: usize, p: usize) -> Result<Vec<Vec<Entry>>> {
    let n = m + p;
    let mut g = vec![vec![Entry::Zero; n]; p];
    match chart {
        ChartSpec::AffineIpX => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = Entry::One;
                for e in row.iter_mut().skip(p) {
                    *e = Entry::Free;
                }
            }
        }
        ChartSpec::Pair { alpha, beta } => {
            let a = SchubertCondition::new(m, p, alpha.clone())?;
            let b = SchubertCondition::new(m, p, beta.clone())?;
            for i in 0..p {
                if a.alpha[i] + b.alpha[p - 1 - i] > n {
                    return Err(Error::Argument(format!(
                        "pair chart needs alpha_i + beta_(p+1-i) <= m+p; fails at i = {}",
                        i + 1
                    )));
                }
            }
            for (i, row) in g.iter_mut().enumerate() {
                let lo = a.alpha[i];
                let hi = n + 1 - b.alpha[p - 1 - i];
                row[lo - 1] = Entry::One;
                for e in row.iter_mut().take(hi).skip(lo) {
                    *e = Entry::Free;
                }
            }
        }
        ChartSpec::Psi => {
            if m < 2 || p < 2 {
                return Err(Error::Argument("psi chart needs m, p > 1".into()));
            }
            // 1-based (i, j): ones at j = i < p and (p, p+1); free between the zero bands
            for i in 1..=p {
                for j in 1..=n {
                    let e = if (j == i && i < p) || (i == p && j == p + 1) {
                        Entry::One
                    } else if i == 1 {
                        if j > 1 && j <= m {
                            Entry::Free
                        } else {
                            Entry::Zero
                        }
                    } else if i < p {
                        if j > i && j <= i + m {
                            Entry::Free
                        } else {
                            Entry::Zero
                        }
                    } else if j > p + 1 {
                        Entry::Free
                    } else {
                        Entry::Zero
                    };
                    g[i - 1][j - 1] = e;
                }
            }
        }
    }
    Ok(g)
}

/// Chart variable name for 1-based `(i, j)`.
pub fn var_name(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("x{}{}", i, j)
    } else {
        format!("x{}_{}", i, j)
    }
}

/// The chart matrix with free entries numbered row-major from `offset`, and their names.
pub fn chart_matrix(chart: &ChartSpec, m: usize, p: usize, offset: usize) -> Result<(Matrix<Poly<Rat>>, Vec<String>)> {
    let g = chart_pattern(chart, m, p)?;
    let n = m + p;
    // the [I_p X] chart names entries by their position in the X block
    let shift = if matches!(chart, ChartSpec::AffineIpX) { p } else { 0 };
    let mut names = Vec::new();
    let mut mat = Matrix::zeros(p, n);
    for i in 0..p {
        for j in 0..n {
            match g[i][j] {
                Entry::One => mat.set(i, j, Poly::one()),
                Entry::Zero => {}
                Entry::Free => {
                    mat.set(i, j, Poly::var(offset + names.len()));
                    names.push(var_name(i + 1, j + 1 - shift, n));
                }
            }
        }
    }
    Ok((mat, names))
}

/// Membership in the injective part of a pair chart: for each row `i = 2..p` some entry with
/// `beta_(p+1-i) <= m+p+1-j < beta_(p+2-i)` is nonzero.
///
/// Rows are indexed from 1; only `beta_2..beta_p` occur as upper bounds, so no sentinel
/// is consulted. `values[i][j]` is the numeric matrix.
pub fn in_injective_part(alpha: &[usize], beta: &[usize], m: usize, p: usize, values: &[Vec<Rat>]) -> Result<bool> {
    let chart = ChartSpec::Pair { alpha: alpha.to_vec(), beta: beta.to_vec() };
    chart_pattern(&chart, m, p)?;
    let n = m + p;
    let zero = Rat::from_integer(0.into());
    for i in 2..=p {
        let lo = beta[p - i];
        let hi = beta[p + 1 - i];
        let ok = (1..=n).any(|j| {
            let t = n + 1 - j;
            lo <= t && t < hi && values[i - 1][j - 1] != zero
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(chart: &ChartSpec, m: usize, p: usize) -> Vec<String> {
        chart_pattern(chart, m, p)
            .unwrap()
            .iter()
            .map(|r| r.iter().map(|e| match e { Entry::One => '1', Entry::Zero => '0', Entry::Free => '*' }).collect())
            .collect()
    }

    #[test]
    fn pair_chart_templates() {
        let c = ChartSpec::Pair { alpha: vec![1, 2, 3], beta: vec![1, 3, 4] };
        assert_eq!(render(&c, 4, 3), vec!["1***000", "01***00", "001****"]);
        let c = ChartSpec::Pair { alpha: vec![1, 3, 5], beta: vec![1, 3, 5] };
        assert_eq!(render(&c, 4, 3), vec!["1**0000", "001**00", "00001**"]);
        let (_, names) = chart_matrix(&c, 4, 3, 0).unwrap();
        assert_eq!(names, vec!["x12", "x13", "x24", "x25", "x36", "x37"]);
        assert!(chart_pattern(&ChartSpec::Pair { alpha: vec![3, 4], beta: vec![2, 4] }, 2, 2).is_err());
    }

    #[test]
    fn pair_chart_dimension() {
        for (a, b) in [(vec![1, 2, 5], vec![1, 2, 5]), (vec![1, 3, 5], vec![1, 3, 5]), (vec![1, 2, 4], vec![2, 3, 4])] {
            let sa = SchubertCondition::new(3, 3, a.clone()).unwrap();
            let sb = SchubertCondition::new(3, 3, b.clone()).unwrap();
            let (_, names) = chart_matrix(&ChartSpec::Pair { alpha: a, beta: b }, 3, 3, 0).unwrap();
            assert_eq!(names.len(), 9 - sa.codim() - sb.codim());
        }
    }

    #[test]
    fn psi_chart_shape() {
        assert_eq!(render(&ChartSpec::Psi, 4, 3), vec!["1***000", "01****0", "0001***"]);
        assert_eq!(render(&ChartSpec::Psi, 2, 3), vec!["1*000", "01**0", "0001*"]);
        for (m, p) in [(2, 2), (3, 2), (2, 4), (3, 3)] {
            let (_, names) = chart_matrix(&ChartSpec::Psi, m, p, 0).unwrap();
            assert_eq!(names.len(), m * p - 2);
        }
    }

    #[test]
    fn injective_part_example() {
        let one = Rat::from_integer(1.into());
        let zero = Rat::from_integer(0.into());
        let mut v = vec![vec![zero.clone(); 7]; 3];
        v[1][4] = one.clone();
        v[2][5] = one.clone();
        assert!(in_injective_part(&[1, 2, 3], &[1, 3, 4], 4, 3, &v).unwrap());
        v[2][5] = zero.clone();
        assert!(!in_injective_part(&[1, 2, 3], &[1, 3, 4], 4, 3, &v).unwrap());
    }
}
