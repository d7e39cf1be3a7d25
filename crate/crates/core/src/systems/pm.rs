//! The polynomial `P_m(s; x) = sum_i (-1)^i (m-i+1) x^(m-i) e_i(s)` satisfied by the
//! coordinate of the line in the `p = 2` family, and its recursion.

use crate::algebra::{elementary_symmetric, Coeff, Int, Rat, UniPoly};
use crate::error::{Error, Result};
use crate::realroots::sturm::{count_all_real_roots, sign_at};
use std::cmp::Ordering;

/// Closed form in `x`.
pub fn pm_polynomial(s: &[Rat]) -> UniPoly<Rat> {
    let m = s.len();
    let mut c = vec![Rat::zero(); m + 1];
    for i in 0..=m {
        let e = elementary_symmetric(s, i).expect("i <= m");
        let k = Rat::from_integer(Int::from((m - i + 1) as i64));
        let v = e.mul(&k);
        c[m - i] = if i % 2 == 0 { v } else { v.neg() };
    }
    UniPoly::new(c)
}

/// `P_m = (x - s_m) P_(m-1) + x prod_(i<m) (x - s_i)` with `P_0 = 1`.
pub fn pm_recursion(s: &[Rat]) -> UniPoly<Rat> {
    let x = UniPoly::x();
    let mut p = UniPoly::constant(Rat::one());
    let mut prod = UniPoly::constant(Rat::one());
    for sm in s {
        let lin = x.sub(&UniPoly::constant(sm.clone()));
        p = lin.mul(&p).add(&x.mul(&prod));
        prod = prod.mul(&lin);
    }
    p
}

/// For `0 < s_1 < ... < s_m` (sorted here), whether the roots satisfy
/// `0 < r_1 < s_1 < r_2 < ... < r_m < s_m`.
///
/// Exact: `P_m` has `m` real roots and alternating nonzero signs at `0, s_1, ..., s_m`.
pub fn pm_interlaces(s: &[Rat]) -> Result<bool> {
    let mut t = s.to_vec();
    t.sort();
    if t.first().map(|x| *x <= Rat::zero()).unwrap_or(true) || t.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition("points must be positive and distinct".into()));
    }
    let p = pm_polynomial(&t);
    if count_all_real_roots(&p) != t.len() {
        return Ok(false);
    }
    let z = p.to_primitive_int();
    let mut prev = sign_at(&z, &Rat::zero());
    if prev == Ordering::Equal {
        return Ok(false);
    }
    for x in &t {
        let sg = sign_at(&z, x);
        if sg == Ordering::Equal || sg == prev {
            return Ok(false);
        }
        prev = sg;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn small_cases() {
        assert_eq!(pm_polynomial(&[rat(3, 1)]), UniPoly::new(vec![rat(-3, 1), rat(2, 1)]));
        let zero = vec![rat(0, 1); 4];
        assert_eq!(pm_polynomial(&zero), UniPoly::new(vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(5, 1)]));
        let s = [rat(1, 2), rat(-3, 1), rat(7, 5)];
        assert_eq!(pm_polynomial(&s), pm_recursion(&s));
        assert!(pm_interlaces(&[rat(1, 1), rat(2, 1), rat(5, 1)]).unwrap());
        assert!(pm_interlaces(&[rat(0, 1), rat(2, 1)]).is_err());
    }
}
