//! The two-step flag manifold `F(2,3;5)` instance with osculating flags.
//!
//! Flags `X ⊂ Y` with `X` meeting `a, B, C`, `dim(Y ∩ A) >= 2`, and `Y` meeting `b, c`.

use super::flags::osculating_full;
use super::system::{Family, PolySystem, Provenance};
use crate::algebra::{coeff::rat_text, Int, Matrix, Poly, Rat};
use crate::error::Result;

/// Osculation points of the six flags: `a = K_2(a)`, `big_a = K_3(A)`, and so on.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct FlagCounterexamplePoints {
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub a: Rat,
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub big_a: Rat,
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub b: Rat,
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub big_b: Rat,
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub c: Rat,
    #[serde(with = "crate::algebra::coeff::rat_serde")]
    pub big_c: Rat,
}

fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

impl Default for FlagCounterexamplePoints {
    fn default() -> Self {
        FlagCounterexamplePoints { a: r(4), big_a: r(0), b: r(1), big_b: r(3), c: r(-5), big_c: r(-1) }
    }
}

impl FlagCounterexamplePoints {
    /// Moving `B` to `K_3(2)` makes all four solutions real.
    pub fn all_real_variant() -> Self {
        FlagCounterexamplePoints { big_b: r(2), ..Self::default() }
    }
}

pub const COUNTEREXAMPLE_VARS: [&str; 8] = ["x14", "x15", "x23", "x24", "x25", "x33", "x34", "x35"];

/// The `3 x 5` matrix whose rows span `Y`; its last two rows span `X`.
pub fn flag_chart() -> Matrix<Poly<Rat>> {
    let v = |i: usize| Poly::var(i);
    let (o, z) = (Poly::one(), Poly::zero());
    Matrix::from_rows(vec![
        vec![z.clone(), z.clone(), o.clone(), v(0), v(1)],
        vec![o.clone(), z.clone(), v(2), v(3), v(4)],
        vec![z.clone(), o, v(5), v(6), v(7)],
    ])
}

fn k(rows: usize, s: &Rat) -> Matrix<Poly<Rat>> {
    osculating_full(5, &Poly::constant(s.clone())).top_rows(rows)
}

/// The overdetermined system in the eight chart variables.
pub fn build_flag_counterexample(pts: &FlagCounterexamplePoints) -> Result<PolySystem> {
    let y = flag_chart();
    let x = y.submatrix(&[1, 2], &[0, 1, 2, 3, 4]);
    let mut eqs = vec![
        k(2, &pts.b).vstack(&y)?.det()?,
        k(2, &pts.c).vstack(&y)?.det()?,
        k(3, &pts.big_b).vstack(&x)?.det()?,
        k(3, &pts.big_c).vstack(&x)?.det()?,
    ];
    eqs.extend(k(2, &pts.a).vstack(&x)?.maximal_minors()?);
    eqs.extend(k(3, &pts.big_a).vstack(&y)?.minors(5)?);
    let mut prov = Provenance::new(Family::FlagCounterexample, 2, 3);
    prov.data = "F(2,3;5): X meets a,B,C; dim(Y∩A)>=2; Y meets b,c".into();
    prov.chart = "flag-3x5".into();
    prov.points = [&pts.a, &pts.big_a, &pts.b, &pts.big_b, &pts.c, &pts.big_c].iter().map(|v| rat_text(v)).collect();
    let mut sys = PolySystem {
        vars: COUNTEREXAMPLE_VARS.iter().map(|s| s.to_string()).collect(),
        params: Vec::new(),
        equations: std::mem::take(&mut eqs),
        provenance: prov,
    };
    sys.normalize();
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let sys = build_flag_counterexample(&FlagCounterexamplePoints::default()).unwrap();
        assert_eq!(sys.nvars(), 8);
        assert!(sys.equations.len() >= 8);
        assert!(sys.equations.iter().all(|e| e.nvars() <= 8));
    }
}
