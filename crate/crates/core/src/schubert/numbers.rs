//! Closed-form degree of the Grassmannian.

use crate::algebra::Int;
use num_traits::One;

fn factorial(n: usize) -> Int {
    (2..=n).fold(<Int as One>::one(), |acc, k| acc * Int::from(k))
}

/// `1! 2! ... (p-1)! (mp)! / (m! (m+1)! ... (m+p-1)!)`.
pub fn d_closed_form(m: usize, p: usize) -> Int {
    let mut num = factorial(m * p);
    for k in 1..p {
        num *= factorial(k);
    }
    let mut den = <Int as One>::one();
    for k in m..m + p {
        den *= factorial(k);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        for (m, p, d) in [(2, 2, 2u64), (4, 2, 14), (2, 4, 14), (2, 5, 42), (3, 4, 462), (7, 2, 429), (2, 8, 1430), (5, 1, 1)] {
            assert_eq!(d_closed_form(m, p), Int::from(d), "({}, {})", m, p);
        }
    }
}
