//! The `m = p = 2`, `(J1)^4` system with flags in totally positive position, and the
//! minor identities behind its reality argument.
//!
//! In the chart `[[1,a,0,0],[0,0,1,b]]` the conditions at `F` and `H = G F` are
//! `f = F24 - b F23 - a F14 + ab F13` and the same with `H`, where `L_ij` is the minor of
//! a matrix on its first two rows and columns `i, j`.

use super::flags::{tp_check, tp_random};
use crate::algebra::{Coeff, Int, Matrix, Poly, Rat};
use crate::error::{Error, Result};
use crate::groebner::{buchberger_q, proportional, Budget, MonomialOrder};
use crate::realroots::count_all_real_roots;

/// Minor on the first two rows and 1-based columns `i, j`.
pub fn top_minor(g: &Matrix<Rat>, i: usize, j: usize) -> Rat {
    g.get(0, i - 1).mul(g.get(1, j - 1)).sub(&g.get(0, j - 1).mul(g.get(1, i - 1)))
}

/// `M24 - b M23 - a M14 + ab M13` in variables `a = 0`, `b = 1`.
pub fn chart_equation(g: &Matrix<Rat>) -> Poly<Rat> {
    let c = |x: Rat| Poly::constant(x);
    let a: Poly<Rat> = Poly::var(0);
    let b: Poly<Rat> = Poly::var(1);
    c(top_minor(g, 2, 4))
        .sub(&b.mul(&c(top_minor(g, 2, 3))))
        .sub(&a.mul(&c(top_minor(g, 1, 4))))
        .add(&a.mul(&b).mul(&c(top_minor(g, 1, 3))))
}

fn two_row_minor(rows: &[[Rat; 4]; 2], i: usize, j: usize) -> Rat {
    rows[0][i - 1].mul(&rows[1][j - 1]).sub(&rows[0][j - 1].mul(&rows[1][i - 1]))
}

/// Every quantity of the reality argument for one pair `F, G`.
#[derive(Clone, Debug)]
pub struct TpPairReport {
    pub f: Poly<Rat>,
    pub h: Poly<Rat>,
    /// The lex basis (`a > b`) is `{J14 - b J24 - a J34, J13 - b(J23+J14) + b^2 J24}` up to scalars.
    pub basis_shape: bool,
    /// `(J23+J14)^2 - 4 J13 J24 = (L23+L14)^2 - 4 L13 L24`.
    pub discriminant_identity: bool,
    /// `L24 = H12 H34`, read literally.
    pub l24_is_h12h34: bool,
    /// `L34 = H12 H34`, the identity the Plücker relation gives.
    pub l34_is_h12h34: bool,
    /// `Lambda(1) = -G12 G34`.
    pub lambda_one_is_minus_g: bool,
    pub lambda_one_negative: bool,
    pub real_solutions: usize,
}

/// Build and check everything for unipotent totally positive `F, G`.
pub fn tp_pair_report(f_mat: &Matrix<Rat>, g_mat: &Matrix<Rat>) -> Result<TpPairReport> {
    if f_mat.rows() != 4 || g_mat.rows() != 4 {
        return Err(Error::Dimension("this system uses 4x4 flags".into()));
    }
    if !tp_check(f_mat)? || !tp_check(g_mat)? {
        return Err(Error::Argument("flags must be totally positive".into()));
    }
    let h_mat = g_mat.mul(f_mat)?;
    let f = chart_equation(f_mat);
    let h = chart_equation(&h_mat);
    let fm = |i, j| top_minor(f_mat, i, j);
    let hm = |i, j| top_minor(&h_mat, i, j);
    let gm = |i, j| top_minor(g_mat, i, j);
    let jrows = [[fm(2, 4), fm(2, 3), fm(1, 4), fm(1, 3)], [hm(2, 4), hm(2, 3), hm(1, 4), hm(1, 3)]];
    let lrows = [[fm(1, 3), fm(1, 4), hm(1, 3), hm(1, 4)], [fm(2, 3), fm(2, 4), hm(2, 3), hm(2, 4)]];
    let jm = |i, j| two_row_minor(&jrows, i, j);
    let lm = |i, j| two_row_minor(&lrows, i, j);

    let c = |x: Rat| Poly::constant(x);
    let a: Poly<Rat> = Poly::var(0);
    let b: Poly<Rat> = Poly::var(1);
    let lin = c(jm(1, 4)).sub(&b.mul(&c(jm(2, 4)))).sub(&a.mul(&c(jm(3, 4))));
    let quad = c(jm(1, 3)).sub(&b.mul(&c(jm(2, 3).add(&jm(1, 4))))).add(&b.mul(&b).mul(&c(jm(2, 4))));
    let gb = buchberger_q(&[f.clone(), h.clone()], &MonomialOrder::lex(vec![0, 1]), &Budget::unlimited())?;
    let gens = gb.generators();
    let want = [lin, quad];
    let basis_shape = gens.len() == 2
        && want.iter().all(|w| {
            let wz = w.to_primitive_int().1;
            gens.iter().any(|g| proportional(g, &wz))
        });

    let four = Rat::from_integer(Int::from(4));
    let dj = jm(2, 3).add(&jm(1, 4)).pow(2).sub(&four.mul(&jm(1, 3)).mul(&jm(2, 4)));
    let dl = lm(2, 3).add(&lm(1, 4)).pow(2).sub(&four.mul(&lm(1, 3)).mul(&lm(2, 4)));
    let h12h34 = hm(1, 2).mul(&hm(3, 4));
    let lambda1 = lm(1, 3).sub(&lm(2, 3).add(&lm(1, 4))).add(&lm(2, 4));
    let quad_b = crate::algebra::unipoly::univariate_of(&want[1], 1).ok_or_else(|| Error::Internal("quadratic in b".into()))?;
    let real_solutions = count_all_real_roots(&quad_b);
    Ok(TpPairReport {
        f,
        h,
        basis_shape,
        discriminant_identity: dj == dl,
        l24_is_h12h34: lm(2, 4) == h12h34,
        l34_is_h12h34: lm(3, 4) == h12h34,
        lambda_one_is_minus_g: lambda1 == gm(1, 2).mul(&gm(3, 4)).neg(),
        lambda_one_negative: lambda1 < Rat::zero(),
        real_solutions,
    })
}

/// Seeded pair of totally positive `4 x 4` factors.
pub fn tp_pair(seed: u64) -> (Matrix<Rat>, Matrix<Rat>) {
    (tp_random(4, 2 * seed, 6), tp_random(4, 2 * seed + 1, 6))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_pair() {
        let (f, g) = tp_pair(3);
        let r = tp_pair_report(&f, &g).unwrap();
        assert!(r.basis_shape);
        assert!(r.discriminant_identity);
        assert!(r.l34_is_h12h34);
        assert_eq!(r.real_solutions, 2);
    }
}
