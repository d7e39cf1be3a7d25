//! Build, eliminate, certify.

use super::report::{EliminantAttempt, Expected, IntervalOut, Status, Timings, Verdict, VerificationReport};
use super::spec::InstanceSpec;
use crate::algebra::{coeff::rat_to_f64, Int, Rat, UniPoly};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, eliminant, is_zero_dimensional, Budget, GroebnerBasis, MonomialOrder};
use crate::realroots::{isolate_with_chain, SturmChain};
use crate::schubert::{d_closed_form, intersection_number, SchubertData};
use crate::systems::{Family, PolySystem};
use std::time::Instant;

/// Largest expected count solved without `allow_large`.
pub const DESK_LIMIT: usize = 64;

/// Solutions of the flag manifold instance, counted on the flag manifold itself.
const FLAG_COUNTEREXAMPLE_D: usize = 4;

/// Options for solving an already built system.
#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub order: MonomialOrder,
    pub eliminate_to: Option<usize>,
    pub budget: Budget,
    pub width: Option<Rat>,
}

impl SolveOptions {
    pub fn degrevlex(n: usize) -> Self {
        SolveOptions { order: MonomialOrder::degrevlex_natural(n), eliminate_to: None, budget: Budget::unlimited(), width: None }
    }
}

fn is_hypersurface_data(d: &SchubertData) -> bool {
    d.conditions.iter().all(|c| c.pieri_index() == Some(1))
}

/// Expected solution count from the closed form and the ring; a disagreement is an error.
pub fn expected_count(spec: &InstanceSpec) -> Result<Expected> {
    if spec.family == Family::FlagCounterexample {
        let d = FLAG_COUNTEREXAMPLE_D.to_string();
        return Ok(Expected { closed_form: None, ring: None, value: Some(d) });
    }
    let data = match spec.effective_data()? {
        Some(d) => d,
        None => return Ok(Expected::default()),
    };
    let ring = intersection_number(&data)?;
    let mut e = Expected { closed_form: None, ring: Some(ring.to_string()), value: Some(ring.to_string()) };
    if is_hypersurface_data(&data) {
        let c = d_closed_form(data.m, data.p);
        if c != ring {
            return Err(Error::Internal(format!("closed form {} and ring {} disagree for ({},{})", c, ring, data.m, data.p)));
        }
        e.closed_form = Some(c.to_string());
    }
    Ok(e)
}

/// Families whose published eliminant is in a fixed coordinate.
fn default_target(f: Family) -> Option<&'static str> {
    match f {
        Family::FlagCounterexample => Some("x14"),
        _ => None,
    }
}

/// Eliminant variables in retry order: the requested one, the last chart variable, then backwards.
pub fn retry_order(n: usize, first: Option<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = first.into_iter().collect();
    for v in (0..n).rev() {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn ms(t: Instant) -> u128 {
    t.elapsed().as_millis()
}

/// Run the whole pipeline on one instance.
pub fn verify_instance(spec: &InstanceSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    spec.validate()?;
    let mut rep = VerificationReport::empty(&spec.label());
    rep.expected = match expected_count(spec) {
        Ok(e) => e,
        Err(Error::Internal(msg)) => {
            rep.status = Status::Inconsistent;
            rep.verdict = Verdict::Internal;
            rep.error = Some(msg);
            return Ok(rep);
        }
        Err(e) => return Err(e),
    };
    if let Some(d) = rep.expected_value() {
        if d > DESK_LIMIT && !spec.allow_large {
            rep.status = Status::GuardRefused;
            rep.verdict = Verdict::Budget;
            rep.error = Some(format!("expected {} solutions exceeds the desk limit {}; set allow_large to override", d, DESK_LIMIT));
            return Ok(rep);
        }
    }
    let t = Instant::now();
    let sys = spec.build()?;
    let build_ms = ms(t);
    if !sys.is_numeric() {
        return Err(Error::Argument(format!("unbound parameters {:?}; give values under [params]", sys.params)));
    }
    let opts = SolveOptions {
        order: spec.monomial_order(&sys)?,
        eliminate_to: match spec.eliminate_to.as_deref().or(default_target(spec.family)) {
            Some(v) => Some(sys.var_index(v).ok_or_else(|| Error::Argument(format!("unknown variable `{}`", v)))?),
            None => None,
        },
        budget: spec.budget.budget(),
        width: spec.width()?,
    };
    let expected = rep.expected.clone();
    let mut out = solve(&sys, &opts, rep.expected_value());
    out.name = rep.name;
    out.expected = expected;
    if let Some(t) = out.timings.as_mut() {
        t.build_ms = build_ms;
        t.total_ms = ms(start);
    }
    Ok(out)
}

/// Gröbner basis, quotient dimension, eliminant with retries, Sturm certification.
pub fn solve(sys: &PolySystem, opts: &SolveOptions, expected: Option<usize>) -> VerificationReport {
    let mut rep = VerificationReport::empty(&sys.provenance.data);
    rep.expected.value = expected.map(|d| d.to_string());
    rep.provenance = Some(sys.provenance.clone());
    rep.warnings = sys.provenance.warnings.clone();
    let mut timings = Timings::default();
    let start = Instant::now();
    let eqs = sys.integer_equations();
    let t = Instant::now();
    let gb: GroebnerBasis<Int> = match buchberger(&eqs, &opts.order, &opts.budget) {
        Ok(g) => g,
        Err(e @ Error::Budget { .. }) => {
            rep.status = Status::BudgetExhausted;
            rep.verdict = Verdict::Budget;
            rep.error = Some(e.to_string());
            timings.groebner_ms = ms(t);
            rep.timings = Some(timings);
            return rep;
        }
        Err(e) => {
            rep.status = Status::Failed;
            rep.verdict = Verdict::Internal;
            rep.error = Some(e.to_string());
            rep.timings = Some(timings);
            return rep;
        }
    };
    timings.groebner_ms = ms(t);
    rep.basis_size = Some(gb.len());
    let (zero_dim, dim) = is_zero_dimensional(&gb);
    if gb.is_unit_ideal() {
        rep.status = Status::Complete;
        rep.verdict = Verdict::Degenerate;
        rep.quotient_dimension = Some(0);
        rep.warnings.push("the system has no solutions".into());
        rep.timings = Some(timings);
        return rep;
    }
    if !zero_dim {
        rep.status = Status::PositiveDimensional;
        rep.verdict = Verdict::Degenerate;
        rep.warnings.push("the solution set is positive dimensional".into());
        rep.timings = Some(timings);
        return rep;
    }
    let dim = dim.unwrap_or(0);
    rep.quotient_dimension = Some(dim);
    if let Some(d) = expected {
        if dim != d {
            rep.warnings.push(format!("quotient dimension {} differs from the expected {}", dim, d));
        }
    }

    let t = Instant::now();
    let mut best: Option<(usize, UniPoly<Int>)> = None;
    for v in retry_order(sys.nvars(), opts.eliminate_to) {
        let g = match eliminant(&gb, v) {
            Ok(g) => g,
            Err(e) => {
                rep.warnings.push(format!("eliminant in {} failed: {}", sys.vars[v], e));
                continue;
            }
        };
        rep.attempts.push(EliminantAttempt { variable: sys.vars[v].clone(), degree: g.degree() });
        let done = g.degree() == dim;
        if best.as_ref().map(|(_, b)| g.degree() > b.degree()).unwrap_or(true) {
            best = Some((v, g));
        }
        if done {
            break;
        }
    }
    timings.eliminant_ms = ms(t);
    let (v, g) = match best {
        Some(b) => b,
        None => {
            rep.status = Status::Failed;
            rep.verdict = Verdict::Internal;
            rep.error = Some("no eliminant could be computed".into());
            rep.timings = Some(timings);
            return rep;
        }
    };
    rep.eliminant_variable = Some(sys.vars[v].clone());
    rep.eliminant_degree = Some(g.degree());
    rep.eliminant = g.coeffs().iter().map(|c| c.to_string()).collect();
    let separating = g.degree() == dim;
    if !separating {
        rep.warnings.push(format!("no chart variable separates the solutions (best degree {} < {})", g.degree(), dim));
    }

    let t = Instant::now();
    let gq = g.to_rat();
    let chain = SturmChain::new(&gq);
    let squarefree = chain.input_squarefree;
    rep.sturm_length = Some(chain.len());
    let ivs = isolate_with_chain(&chain, opts.width.as_ref());
    rep.real_roots = Some(ivs.len());
    rep.intervals = ivs
        .iter()
        .map(|iv| {
            let (lo, hi) = iv.to_strings();
            IntervalOut { lo, hi, approx: rat_to_f64(&iv.mid()) }
        })
        .collect();
    timings.roots_ms = ms(t);
    let mult_free = squarefree && separating;
    rep.multiplicity_free = Some(mult_free);
    rep.shape_lemma = Some(mult_free);
    if !squarefree {
        rep.warnings.push("the eliminant has a repeated root".into());
    }

    let real = ivs.len();
    rep.status = Status::Complete;
    if real > g.degree() || g.degree() > dim {
        rep.verdict = Verdict::Internal;
        rep.status = Status::Inconsistent;
        rep.error = Some(format!("real {} / degree {} / dimension {} out of order", real, g.degree(), dim));
    } else if !mult_free || expected.map(|d| d != dim).unwrap_or(false) {
        rep.verdict = Verdict::Degenerate;
    } else if real == dim {
        rep.verdict = Verdict::AllReal;
    } else {
        rep.verdict = Verdict::NotAllReal;
    }
    timings.total_ms = ms(start);
    rep.timings = Some(timings);
    rep
}

/// Bézout number `p^(mp-2)` of the `psi` system: `mp-2` equations of degree `p`.
pub fn bezout_bound(m: usize, p: usize) -> Result<Int> {
    if m * p < 2 {
        return Err(Error::Argument("need mp >= 2".into()));
    }
    Ok(num_traits::pow(Int::from(p), m * p - 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn two_two_all_real() {
        let pts: Vec<Rat> = (1..=4).map(|i| rat(i, 1)).collect();
        let rep = verify_instance(&InstanceSpec::hypersurface(2, 2, &pts)).unwrap();
        assert_eq!(rep.verdict, Verdict::AllReal);
        assert_eq!(rep.quotient_dimension, Some(2));
        assert_eq!(rep.real_roots, Some(2));
        assert_eq!(rep.expected.closed_form.as_deref(), Some("2"));
    }

    #[test]
    fn counterexample_not_all_real() {
        let rep = verify_instance(&InstanceSpec::new(Family::FlagCounterexample, 0, 0)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotAllReal);
        assert_eq!(rep.real_roots, Some(2));
        assert_eq!(rep.eliminant_variable.as_deref(), Some("x14"));
    }

    #[test]
    fn guard_and_bezout() {
        let mut s = InstanceSpec::hypersurface(3, 4, &[]);
        s.points = (1..=12).map(|i| i.to_string()).collect();
        let rep = verify_instance(&s).unwrap();
        assert_eq!(rep.status, Status::GuardRefused);
        assert_eq!(rep.verdict.exit_code(), 2);
        assert_eq!(bezout_bound(7, 2).unwrap(), Int::from(4096));
        assert_eq!(bezout_bound(3, 4).unwrap(), Int::from(1048576));
        assert_eq!(bezout_bound(5, 1).unwrap(), Int::from(1));
    }

    #[test]
    fn repeated_point_is_degenerate() {
        let pts: Vec<Rat> = [1, 1, 2, 3].iter().map(|&i| rat(i, 1)).collect();
        let rep = verify_instance(&InstanceSpec::hypersurface(2, 2, &pts)).unwrap();
        assert_ne!(rep.verdict, Verdict::AllReal);
    }

    #[test]
    fn retry_sequence() {
        assert_eq!(retry_order(4, None), vec![3, 2, 1, 0]);
        assert_eq!(retry_order(4, Some(1)), vec![1, 3, 2, 0]);
    }
}
