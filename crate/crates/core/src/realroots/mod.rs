//! Real-root counting and isolation, discriminants and identity verification.

pub mod identity;
pub mod interlace;
pub mod isolate;
pub mod sturm;

pub use identity::{a_w, discriminant_in, orbit_size, verify_identity, IdentityCheck, RhsTerm};
pub use interlace::check_interlace;
pub use isolate::{cmp_surd, floats_match, interval_contains_surd, isolate_real_roots, isolate_with_chain, Interval};
pub use sturm::{
    cauchy_bound, count_all_real_roots, count_real_roots, is_squarefree, squarefree_factors, Bound, SturmChain,
};

use crate::algebra::{Int, Rat, UniPoly};

/// Rational view of an integer polynomial.
pub fn to_q(u: &UniPoly<Int>) -> UniPoly<Rat> {
    u.to_rat()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_int_poly, rat, Poly};

    fn up(c: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(c.iter().map(|&x| rat(x, 1)).collect())
    }

    fn quartic() -> UniPoly<Rat> {
        up(&[27063, -117556, -5952, -10416, 32400])
    }

    #[test]
    fn counts() {
        assert_eq!(count_all_real_roots(&quartic()), 2);
        assert_eq!(count_all_real_roots(&up(&[1, 0, 1])), 0);
        // (x-1)^3
        let c = up(&[-1, 3, -3, 1]);
        assert_eq!(count_all_real_roots(&c), 1);
        let iv = isolate_real_roots(&c, None);
        assert_eq!(iv.len(), 1);
        assert!(iv[0].contains(&rat(1, 1)));
    }

    #[test]
    fn quartic_intervals() {
        let w = rat(1, 10000);
        let iv = isolate_real_roots(&quartic(), Some(&w));
        assert_eq!(iv.len(), 2);
        assert!(floats_match(&iv, &[0.227, 1.62], 1e-2));
    }

    #[test]
    fn surd_containment() {
        // x^2 - 16x + 45 has roots 8 +- sqrt(19)
        let g = up(&[45, -16, 1]);
        let iv = isolate_real_roots(&g, Some(&rat(1, 1000)));
        assert!(interval_contains_surd(&iv[0], &rat(8, 1), &rat(-1, 1), &rat(19, 1)));
        assert!(interval_contains_surd(&iv[1], &rat(8, 1), &rat(1, 1), &rat(19, 1)));
        assert!(!interval_contains_surd(&iv[1], &rat(8, 1), &rat(1, 1), &rat(11, 1)));
    }

    #[test]
    fn half_open_endpoints() {
        let g = up(&[-2, 1]);
        assert_eq!(count_real_roots(&g, &Bound::At(rat(1, 1)), &Bound::At(rat(2, 1))), 1);
        assert_eq!(count_real_roots(&g, &Bound::At(rat(2, 1)), &Bound::At(rat(3, 1))), 0);
    }

    #[test]
    fn discriminants() {
        let names = ["x", "e1", "e2", "e3", "e4"];
        let g = parse_int_poly("12*x^2 + 4*e2*x + e1*e3 - 4*e4", &names).unwrap();
        let want = parse_int_poly("e2^2 - 3*e1*e3 + 12*e4", &names).unwrap();
        assert!(crate::groebner::proportional(&discriminant_in(&g, 0), &want));
        let h = parse_int_poly("x^2 - 1", &names).unwrap();
        assert_eq!(identity::discriminant_raw(&h, 0), Poly::constant(Int::from(4)));
    }

    #[test]
    fn interlacing_simple() {
        assert!(check_interlace(&up(&[0, 1]), &up(&[-1, 1])).unwrap());
        // roots {1,3} and {2,4} alternate; {1,2} and {3,4} do not
        assert!(check_interlace(&up(&[3, -4, 1]), &up(&[8, -6, 1])).unwrap());
        assert!(!check_interlace(&up(&[2, -3, 1]), &up(&[12, -7, 1])).unwrap());
        assert!(check_interlace(&up(&[1, 0, 1]), &up(&[0, 1])).is_err());
    }

    #[test]
    fn squarefree_bookkeeping() {
        // (x-1)^2 (x+2)^3 x
        let a = up(&[-1, 1]);
        let b = up(&[2, 1]);
        let g = a.mul(&a).mul(&b).mul(&b).mul(&b).mul(&up(&[0, 1]));
        let f = squarefree_factors(&g);
        let extra: usize = f.iter().map(|(p, k)| p.degree() * (k - 1)).sum();
        assert_eq!(g.squarefree().degree() + extra, g.degree());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[2; 10], 4), 1);
        assert_eq!(orbit_size(&[4, 2, 2, 2, 2, 2, 2, 2, 2, 2], 4), 4);
    }
}
