//! Interlacing of the real roots of two polynomials.

use super::isolate::{isolate_real_roots, separate, Interval};
use super::sturm::{count_all_real_roots, is_squarefree, SturmChain};
use crate::algebra::{Rat, UniPoly};
use crate::error::{Error, Result};

/// Whether the roots of `p` and `q` strictly alternate on the real line.
///
/// Both must be squarefree with only real roots.
pub fn check_interlace(p: &UniPoly<Rat>, q: &UniPoly<Rat>) -> Result<bool> {
    for (name, f) in [("first", p), ("second", q)] {
        if f.degree() == 0 {
            return Err(Error::Precondition(format!("{} polynomial is constant", name)));
        }
        if !is_squarefree(f) || count_all_real_roots(f) != f.degree() {
            return Err(Error::Precondition(format!("{} polynomial does not have simple real roots", name)));
        }
    }
    if UniPoly::gcd(p, q).degree() > 0 {
        return Ok(false);
    }
    let (cp, cq) = (SturmChain::new(p), SturmChain::new(q));
    let mut a = isolate_real_roots(p, None);
    let mut b = isolate_real_roots(q, None);
    if !separate(&cp, &mut a, &cq, &mut b) {
        return Err(Error::Internal("interval separation did not terminate".into()));
    }
    let mut all: Vec<(Interval, u8)> = a.into_iter().map(|i| (i, 0)).chain(b.into_iter().map(|i| (i, 1))).collect();
    all.sort_by(|x, y| x.0.lo.cmp(&y.0.lo));
    Ok(all.windows(2).all(|w| w[0].1 != w[1].1))
}
