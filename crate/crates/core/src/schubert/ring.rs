//! The ring `Q[h_1..h_m] / I` and socle-coefficient intersection numbers.

use super::condition::{SchubertCondition, SchubertData};
use crate::algebra::{Coeff, Domain, Int, Matrix, Monomial, Poly, Rat, ZPoly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, standard_monomials, Budget, GroebnerBasis, MonomialOrder};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// `det(h_{b_i - j})` with `h_0 = 1` and `h_k = 0` outside `0..=m`; variable `k-1` is `h_k`.
pub fn schur_h(beta: &[usize], m: usize) -> ZPoly {
    let r = beta.len();
    let h = |k: i64| -> ZPoly {
        if k == 0 {
            ZPoly::one()
        } else if k < 0 || k as usize > m {
            ZPoly::zero()
        } else {
            ZPoly::var(k as usize - 1)
        }
    };
    let rows: Vec<Vec<ZPoly>> = (0..r)
        .map(|i| (0..r).map(|j| h(beta[i] as i64 - (j as i64 + 1))).collect())
        .collect();
    Matrix::from_rows(rows).det().expect("square")
}

/// The cohomology ring of `Grass(p, m+p)` with a Gröbner basis of its ideal.
#[derive(Debug)]
pub struct CohomologyRing {
    pub m: usize,
    pub p: usize,
    pub ideal_gens: Vec<ZPoly>,
    pub gb: GroebnerBasis<Int>,
    /// Normal form of `h_m^p`: a scalar times the socle monomial.
    socle: (Monomial, Rat),
}

impl CohomologyRing {
    /// Generators `S_b` for `b` of length `p+1` with `1 < b_1` and `b_{p+1} <= m+p+1`.
    pub fn build(m: usize, p: usize) -> Result<Self> {
        if m == 0 || p == 0 {
            return Err(Error::Argument("m and p must be positive".into()));
        }
        let mut gens = Vec::new();
        for b in crate::algebra::colex_subsets(m + p, p + 1) {
            let beta: Vec<usize> = b.iter().map(|x| x + 2).collect();
            let s = schur_h(&beta, m);
            if !s.is_zero() {
                gens.push(s.primitive());
            }
        }
        let order = MonomialOrder::weighted((0..m).collect(), (1..=m as u32).collect());
        let gb = buchberger(&gens, &order, &Budget::unlimited())?;
        let hm = ZPoly::var(m - 1).pow(p as u32);
        let nf = gb.normal_form(&hm);
        let socle = match nf.terms() {
            [(mono, c)] => (mono.clone(), c.clone()),
            _ => return Err(Error::Internal(format!("normal form of h_m^p has {} terms", nf.len()))),
        };
        Ok(CohomologyRing { m, p, ideal_gens: gens, gb, socle })
    }

    /// Shared instance for `(m, p)`; built once even under concurrent queries.
    pub fn get(m: usize, p: usize) -> Result<Arc<CohomologyRing>> {
        type Slot = Arc<OnceLock<std::result::Result<Arc<CohomologyRing>, String>>>;
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Slot>>> = OnceLock::new();
        let slot = {
            let mut map = CACHE.get_or_init(Default::default).lock().expect("ring cache poisoned");
            map.entry((m, p)).or_default().clone()
        };
        slot.get_or_init(|| Self::build(m, p).map(Arc::new).map_err(|e| e.to_string()))
            .clone()
            .map_err(Error::Internal)
    }

    /// Dimension of the quotient as a vector space.
    pub fn dimension(&self) -> Option<usize> {
        standard_monomials(&self.gb).map(|v| v.len())
    }

    pub fn socle_monomial(&self) -> &Monomial {
        &self.socle.0
    }

    pub fn schur(&self, c: &SchubertCondition) -> ZPoly {
        schur_h(&c.alpha, self.m)
    }

    /// Normal form of a product, reducing after each factor.
    pub fn normal_form_product(&self, factors: &[ZPoly]) -> Poly<Rat> {
        let mut cur = ZPoly::one();
        let mut scale = Rat::one();
        for f in factors {
            let red = self.gb.reduce(&cur.mul(f));
            scale = scale.mul(&Int::frac(&red.content, &red.mult));
            cur = red.r;
            if cur.is_zero() {
                return Poly::zero();
            }
        }
        cur.map_coeffs(|c| Rat::from_integer(c.clone()).mul(&scale))
    }

    /// `d` with `d * h_m^p - Π S_a` in the ideal.
    pub fn intersection_number(&self, data: &SchubertData) -> Result<Int> {
        if data.m != self.m || data.p != self.p {
            return Err(Error::Argument("data and ring disagree on (m, p)".into()));
        }
        let total: usize = data.conditions.iter().map(|c| c.codim()).sum();
        if total != self.m * self.p {
            return Err(Error::Argument(format!("codimensions sum to {}, expected {}", total, self.m * self.p)));
        }
        let factors: Vec<ZPoly> = data.conditions.iter().filter(|c| !c.is_identity()).map(|c| self.schur(c)).collect();
        let nf = self.normal_form_product(&factors);
        let c = match nf.terms() {
            [] => Rat::zero(),
            [(mono, c)] if *mono == self.socle.0 => c.clone(),
            _ => return Err(Error::Internal("product does not reduce into the socle".into())),
        };
        let d = &c / &self.socle.1;
        if !d.is_integer() {
            return Err(Error::Internal(format!("non-integral socle coefficient {}", d)));
        }
        Ok(d.to_integer())
    }
}

/// Intersection number by normal-form reduction in the cohomology ring.
pub fn intersection_number(data: &SchubertData) -> Result<Int> {
    let total: usize = data.conditions.iter().map(|c| c.codim()).sum();
    if total != data.m * data.p {
        return Err(Error::Argument(format!("codimensions sum to {}, expected {}", total, data.m * data.p)));
    }
    CohomologyRing::get(data.m, data.p)?.intersection_number(data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_of_pieri_is_h() {
        let j = SchubertCondition::pieri(4, 3, 2).unwrap();
        assert_eq!(schur_h(&j.alpha, 4), ZPoly::var(1));
        assert!(schur_h(&[1, 2, 3], 4).is_one());
    }

    #[test]
    fn ring_dimension_is_binomial() {
        for (m, p, n) in [(1, 1, 2), (2, 1, 3), (2, 2, 6), (3, 2, 10), (2, 3, 10), (3, 3, 20)] {
            let r = CohomologyRing::get(m, p).unwrap();
            assert_eq!(r.dimension(), Some(n), "(m, p) = ({}, {})", m, p);
        }
    }

    #[test]
    fn small_numbers() {
        let d = SchubertData::hypersurface(2, 2);
        assert_eq!(intersection_number(&d).unwrap(), Int::from(2));
        let d = SchubertData::parse(&["J2^4"], 4, 2).unwrap();
        assert_eq!(intersection_number(&d).unwrap(), Int::from(3));
    }
}
