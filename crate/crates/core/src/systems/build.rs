//! System builders: the hypersurface systems in the `[I_p X]` chart, general bases,
//! the reduced `psi` systems, minor systems for Schubert data, and totally positive flags.

use super::chart::{chart_matrix, ChartSpec};
use super::flags::{osculating_full, osculating_infinity, tp_check, tp_random, unipotent_inverse, FlagPoint, FlagSpec};
use super::system::{reduce_mod_points, Family, Layout, PolySystem, Provenance};
use crate::algebra::{Coeff, Int, Matrix, Poly, Rat};
use crate::error::{Error, Result};
use crate::schubert::{SchubertCondition, SchubertData};
use num_integer::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BuildOptions {
    /// Emit minors only for essential indices.
    pub prune: bool,
    /// Replace conditions sharing a shape at symbolic points by their remainders modulo
    /// `prod (sigma - s_i)`, with the elementary symmetric functions as parameters.
    pub symmetric: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { prune: true, symmetric: false }
    }
}

impl BuildOptions {
    pub fn symmetric() -> Self {
        BuildOptions { prune: true, symmetric: true }
    }
}

/// Which indices `i` (0-based) contribute minors for `alpha`.
pub fn minor_indices(c: &SchubertCondition, prune: bool) -> Vec<usize> {
    if prune {
        c.essential()
    } else {
        (0..c.p).filter(|&i| c.alpha[i] > i + 1).collect()
    }
}

/// Number of minors emitted for one condition, before zero and repeat removal.
pub fn minor_count(c: &SchubertCondition, prune: bool) -> usize {
    let n = c.m + c.p;
    minor_indices(c, prune)
        .into_iter()
        .map(|i| {
            let k = n + 1 - c.alpha[i];
            let r = k + i + 1;
            let a = binomial(k + c.p, r);
            let b = binomial(n, r);
            a * b
        })
        .sum()
}

/// The `(m+p+1+i-alpha_i)`-minors of the top `m+p+1-alpha_i` rows of `flag` stacked over `x`.
pub fn condition_minors(c: &SchubertCondition, flag: &Matrix<Poly<Rat>>, x: &Matrix<Poly<Rat>>, prune: bool) -> Result<Vec<Poly<Rat>>> {
    let n = c.m + c.p;
    if flag.rows() != n || flag.cols() != n || x.cols() != n || x.rows() != c.p {
        return Err(Error::Dimension("flag or chart has the wrong shape".into()));
    }
    let mut out = Vec::new();
    for i in minor_indices(c, prune) {
        let k = n + 1 - c.alpha[i];
        let r = k + i + 1;
        let stack = flag.top_rows(k).vstack(x)?;
        out.extend(stack.minors(r)?);
    }
    Ok(out)
}

/// Rows `P_j^(i)(s) / i!` for a basis `P_1..P_n` of polynomials in variable 0.
pub fn basis_flag(basis: &[Poly<Rat>], s: &Poly<Rat>) -> Result<Matrix<Poly<Rat>>> {
    let n = basis.len();
    let mut m = Matrix::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        if b.vars_used().iter().any(|&v| v != 0) {
            return Err(Error::Argument("basis polynomials must be univariate".into()));
        }
        let coeffs: Vec<Rat> = b.coeffs_in(0).iter().map(|c| c.constant_term()).collect();
        for i in 0..n {
            // Horner over k = deg..i of binom(k, i) c_k s^(k-i)
            let mut acc = Poly::zero();
            for k in (i..coeffs.len()).rev() {
                acc = acc.mul(s);
                if !coeffs[k].is_zero() {
                    let b = Rat::from_integer(binomial(Int::from(k), Int::from(i)));
                    acc = acc.add(&Poly::constant(coeffs[k].mul(&b)));
                }
            }
            m.set(i, j, acc);
        }
    }
    Ok(m)
}

/// First `n` Chebyshev polynomials of the first kind in variable 0.
pub fn chebyshev_basis(n: usize) -> Vec<Poly<Rat>> {
    let x: Poly<Rat> = Poly::var(0);
    let two = Poly::constant(Rat::from_integer(Int::from(2)));
    let mut out: Vec<Poly<Rat>> = vec![Poly::one(), x.clone()];
    while out.len() < n {
        let k = out.len();
        let next = two.mul(&x).mul(&out[k - 1]).sub(&out[k - 2]);
        out.push(next);
    }
    out.truncate(n);
    out
}

/// Monomials `1, s, ..., s^(n-1)` in variable 0.
pub fn monomial_basis(n: usize) -> Vec<Poly<Rat>> {
    (0..n).map(|k| Poly::var(0).pow(k as u32)).collect()
}

fn check_basis(basis: &[Poly<Rat>], n: usize) -> Result<()> {
    if basis.len() != n {
        return Err(Error::Argument(format!("basis needs {} polynomials, got {}", n, basis.len())));
    }
    let mut rows = Vec::new();
    for b in basis {
        if b.vars_used().iter().any(|&v| v != 0) || b.degree_in(0) as usize >= n {
            return Err(Error::Argument(format!("basis polynomials must be univariate of degree below {}", n)));
        }
        let mut c: Vec<Rat> = b.coeffs_in(0).iter().map(|c| c.constant_term()).collect();
        c.resize(n, Rat::zero());
        rows.push(c);
    }
    if Matrix::from_rows(rows).det()?.is_zero() {
        return Err(Error::Argument("basis polynomials are linearly dependent".into()));
    }
    Ok(())
}

/// How one condition's flag is produced.
#[derive(Clone, Debug)]
enum FlagSource {
    Fixed(Matrix<Poly<Rat>>),
    /// Osculating (or general-basis) flag at a named parameter.
    Symbolic { name: String, basis: Option<Vec<Poly<Rat>>> },
}

#[derive(Clone, Debug)]
struct Requirement {
    cond: SchubertCondition,
    flag: FlagSource,
}

fn flag_at(n: usize, basis: &Option<Vec<Poly<Rat>>>, s: &Poly<Rat>) -> Result<Matrix<Poly<Rat>>> {
    match basis {
        None => Ok(osculating_full(n, s)),
        Some(b) => basis_flag(b, s),
    }
}

fn constant_matrix(m: &Matrix<Rat>) -> Matrix<Poly<Rat>> {
    m.map(|x| Poly::constant(x.clone()))
}

fn point_source(n: usize, point: &FlagPoint, basis: &Option<Vec<Poly<Rat>>>) -> Result<FlagSource> {
    Ok(match point {
        FlagPoint::Value(r) => FlagSource::Fixed(flag_at(n, basis, &Poly::constant(r.clone()))?),
        FlagPoint::Param(name) => FlagSource::Symbolic { name: name.clone(), basis: basis.clone() },
        FlagPoint::Infinity => {
            if basis.is_some() {
                return Err(Error::Unsupported("general bases are evaluated at finite points only".into()));
            }
            FlagSource::Fixed(osculating_infinity(n))
        }
    })
}

/// Minors of every requirement against the chart, with symbolic points numbered after the chart.
fn assemble(
    m: usize,
    p: usize,
    chart: &ChartSpec,
    reqs: &[Requirement],
    opts: &BuildOptions,
    divide_sigma: bool,
    prov: &mut Provenance,
) -> Result<(Vec<String>, Vec<String>, Vec<Poly<Rat>>)> {
    let n = m + p;
    let (x, vars) = chart_matrix(chart, m, p, 0)?;
    let mut layout = Layout::new(vars.len());
    let sigma: Poly<Rat> = Poly::var(layout.sigma());
    let mut eqs = Vec::new();

    // groups of symbolic requirements sharing shape and basis
    let mut groups: Vec<(SchubertCondition, Option<Vec<Poly<Rat>>>, Vec<String>)> = Vec::new();
    for r in reqs {
        match &r.flag {
            FlagSource::Fixed(f) => eqs.extend(condition_minors(&r.cond, f, &x, opts.prune)?),
            FlagSource::Symbolic { name, basis } => {
                let slot = if opts.symmetric {
                    groups.iter().position(|g| g.0 == r.cond && &g.1 == basis && !g.2.contains(name))
                } else {
                    None
                };
                match slot {
                    Some(i) => groups[i].2.push(name.clone()),
                    None => groups.push((r.cond.clone(), basis.clone(), vec![name.clone()])),
                }
            }
        }
    }
    let mut names_seen: Vec<&String> = Vec::new();
    for g in &groups {
        for nm in &g.2 {
            if names_seen.contains(&nm) {
                prov.warnings.push(format!("parameter `{}` is used by more than one condition", nm));
            }
            names_seen.push(nm);
        }
    }
    let compressed = groups.iter().filter(|g| g.2.len() > 1).count();
    for (cond, basis, members) in &groups {
        let flag = flag_at(n, basis, &sigma)?;
        let mut template = condition_minors(cond, &flag, &x, opts.prune)?;
        if divide_sigma {
            for t in template.iter_mut() {
                *t = strip_sigma(t, layout.sigma());
            }
        }
        if members.len() == 1 {
            let v = layout.param(&members[0]);
            let s = layout.sigma();
            let pv: Poly<Rat> = Poly::var(v);
            for t in &template {
                eqs.push(t.substitute(&|i| if i == s { Some(pv.clone()) } else { None }));
            }
        } else {
            let suffix = if compressed == 1 { String::new() } else { format!("_{}", members.join("")) };
            let e: Vec<Poly<Rat>> = (1..=members.len()).map(|k| Poly::var(layout.param(&format!("e{}{}", k, suffix)))).collect();
            prov.symmetric_groups.push(members.clone());
            for t in &template {
                eqs.extend(reduce_mod_points(t, layout.sigma(), &e));
            }
        }
    }
    let eqs = layout.finish(eqs)?;
    Ok((vars, layout.params.clone(), eqs))
}

/// Remove the largest power of variable `v` dividing `f`.
fn strip_sigma(f: &Poly<Rat>, v: usize) -> Poly<Rat> {
    let k = f.monomial_content().exp(v);
    if k == 0 {
        return f.clone();
    }
    f.div_monomial(&crate::algebra::Monomial::var_pow(v, k))
}

fn finish_system(vars: Vec<String>, params: Vec<String>, eqs: Vec<Poly<Rat>>, prov: Provenance) -> PolySystem {
    let mut sys = PolySystem { vars, params, equations: eqs, provenance: prov };
    sys.normalize();
    sys
}

fn warn_repeats(points: &[FlagPoint], prov: &mut Provenance) {
    for i in 0..points.len() {
        for j in 0..i {
            if points[i] == points[j] {
                prov.warnings.push(format!("repeated point {} at positions {} and {}", points[i].label(), j + 1, i + 1));
            }
        }
    }
}

/// `phi_{m,p}(s; X)`: chart variables first, then the point as a variable when it is symbolic.
pub fn build_phi(m: usize, p: usize, s: &FlagPoint) -> Result<(Poly<Rat>, Vec<String>)> {
    if m == 0 || p == 0 {
        return Err(Error::Argument("m and p must be positive".into()));
    }
    let n = m + p;
    let (x, mut vars) = chart_matrix(&ChartSpec::AffineIpX, m, p, 0)?;
    let point = match s {
        FlagPoint::Value(r) => Poly::constant(r.clone()),
        FlagPoint::Param(name) => {
            vars.push(name.clone());
            Poly::var(m * p)
        }
        FlagPoint::Infinity => return Err(Error::Argument("phi is defined at finite points".into())),
    };
    let k = osculating_full(n, &point).top_rows(m);
    let d = k.vstack(&x)?.det()?;
    Ok((d, vars))
}

/// The hypersurface system at the points `1, ..., mp`.
pub fn build_conjecture_i(m: usize, p: usize) -> Result<PolySystem> {
    let pts: Vec<FlagPoint> = (1..=(m * p) as i64).map(FlagPoint::int).collect();
    build_conjecture_ii(m, p, &pts, &BuildOptions::default())
}

/// `phi(s_i; X) = 0` for each point.
pub fn build_conjecture_ii(m: usize, p: usize, points: &[FlagPoint], opts: &BuildOptions) -> Result<PolySystem> {
    hypersurface(m, p, points, None, opts, Family::Hypersurface)
}

/// The hypersurface system with `K(s)` rows `P_j^(i-1)(s) / (i-1)!` for a basis of polynomials.
pub fn build_conjecture_ii_prime(m: usize, p: usize, basis: &[Poly<Rat>], points: &[FlagPoint], opts: &BuildOptions) -> Result<PolySystem> {
    check_basis(basis, m + p)?;
    hypersurface(m, p, points, Some(basis.to_vec()), opts, Family::GeneralBasis)
}

fn hypersurface(
    m: usize,
    p: usize,
    points: &[FlagPoint],
    basis: Option<Vec<Poly<Rat>>>,
    opts: &BuildOptions,
    family: Family,
) -> Result<PolySystem> {
    if m < 1 || p < 1 {
        return Err(Error::Argument("m and p must be positive".into()));
    }
    if points.len() != m * p {
        return Err(Error::Argument(format!("{} points given, {} needed", points.len(), m * p)));
    }
    if points.iter().any(|x| *x == FlagPoint::Infinity) {
        return Err(Error::Argument("hypersurface systems use finite points".into()));
    }
    let n = m + p;
    let j1 = SchubertCondition::pieri(m, p, 1)?;
    let mut prov = Provenance::new(family, m, p);
    prov.data = format!("(J1)^{}", m * p);
    prov.chart = ChartSpec::AffineIpX.label();
    prov.points = points.iter().map(|x| x.label()).collect();
    warn_repeats(points, &mut prov);
    let reqs = points
        .iter()
        .map(|pt| Ok(Requirement { cond: j1.clone(), flag: point_source(n, pt, &basis)? }))
        .collect::<Result<Vec<_>>>()?;
    let (vars, params, eqs) = assemble(m, p, &ChartSpec::AffineIpX, &reqs, opts, false, &mut prov)?;
    Ok(finish_system(vars, params, eqs, prov))
}

/// `psi(s; X) = det([K(s); X]) / s` on the reduced chart, at `mp - 2` nonzero points.
pub fn build_conjecture_ii_doubleprime(m: usize, p: usize, points: &[FlagPoint], opts: &BuildOptions) -> Result<PolySystem> {
    if m < 2 || p < 2 {
        return Err(Error::Argument("the reduced chart needs m, p > 1".into()));
    }
    if points.len() + 2 != m * p {
        return Err(Error::Argument(format!("{} points given, {} needed", points.len(), m * p - 2)));
    }
    for pt in points {
        match pt {
            FlagPoint::Value(r) if r.is_zero() => return Err(Error::Argument("points must be nonzero".into())),
            FlagPoint::Infinity => return Err(Error::Argument("points must be finite".into())),
            _ => {}
        }
    }
    let n = m + p;
    let j1 = SchubertCondition::pieri(m, p, 1)?;
    let mut prov = Provenance::new(Family::Psi, m, p);
    prov.data = format!("(J1)^{}", m * p - 2);
    prov.chart = ChartSpec::Psi.label();
    prov.points = points.iter().map(|x| x.label()).collect();
    warn_repeats(points, &mut prov);
    let mut reqs = Vec::new();
    for pt in points {
        reqs.push(Requirement { cond: j1.clone(), flag: point_source(n, pt, &None)? });
    }
    // numeric points: divide by the point value (a unit); symbolic ones are divided in the template
    let (vars, params, eqs) = assemble(m, p, &ChartSpec::Psi, &reqs, opts, true, &mut prov)?;
    Ok(finish_system(vars, params, eqs, prov))
}

/// `psi` as a polynomial in the chart variables and the point (last variable), with the
/// exact quotient check `det = s * psi`.
pub fn psi_poly(m: usize, p: usize) -> Result<(Poly<Rat>, Vec<String>)> {
    let n = m + p;
    let (x, mut vars) = chart_matrix(&ChartSpec::Psi, m, p, 0)?;
    let s: Poly<Rat> = Poly::var(vars.len());
    vars.push("s".into());
    let d = osculating_full(n, &s).top_rows(m).vstack(&x)?.det()?;
    let q = d
        .div_exact_poly(&s)
        .ok_or_else(|| Error::Internal("det on the reduced chart is not divisible by s".into()))?;
    if q.mul(&s) != d {
        return Err(Error::Internal("inexact division by s".into()));
    }
    Ok((q, vars))
}

fn explicit_matrix(n: usize, rows: &[Vec<Rat>]) -> Result<Matrix<Rat>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension(format!("explicit flags must be {}x{}", n, n)));
    }
    let mm = Matrix::from_rows(rows.to_vec());
    if mm.det()?.is_zero() {
        return Err(Error::Argument("explicit flag matrix is singular".into()));
    }
    Ok(mm)
}

fn default_factors(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Minor equations for Schubert data with one flag per condition.
///
/// Pair charts consume a condition equal to `alpha` at the flag at infinity and one equal to
/// `beta` at `K(0)`; the reduced chart consumes `J1` at both.
pub fn build_schubert_system(data: &SchubertData, flags: &[FlagSpec], chart: &ChartSpec, opts: &BuildOptions) -> Result<PolySystem> {
    let (m, p) = (data.m, data.p);
    let n = m + p;
    if flags.len() != data.conditions.len() {
        return Err(Error::Argument(format!("{} flags for {} conditions", flags.len(), data.conditions.len())));
    }
    let is_inf = |f: &FlagSpec| matches!(f, FlagSpec::Osculating(FlagPoint::Infinity));
    let is_zero = |f: &FlagSpec| matches!(f, FlagSpec::Osculating(FlagPoint::Value(r)) if r.is_zero());
    let mut skip = vec![false; flags.len()];
    let mut take = |want: &[usize], at: &dyn Fn(&FlagSpec) -> bool, what: &str| -> Result<()> {
        let hit = (0..flags.len()).find(|&i| !skip[i] && data.conditions[i].alpha == want && at(&flags[i]));
        match hit {
            Some(i) => {
                skip[i] = true;
                Ok(())
            }
            None => Err(Error::Argument(format!("chart needs condition {:?} with a flag at {}", want, what))),
        }
    };
    let divide = match chart {
        ChartSpec::AffineIpX => false,
        ChartSpec::Pair { alpha, beta } => {
            take(alpha, &is_inf, "infinity")?;
            take(beta, &is_zero, "zero")?;
            false
        }
        ChartSpec::Psi => {
            let j1 = SchubertCondition::pieri(m, p, 1)?.alpha;
            take(&j1, &is_inf, "infinity")?;
            take(&j1, &is_zero, "zero")?;
            true
        }
    };
    let mut prov = Provenance::new(Family::Schubert, m, p);
    prov.data = data.label();
    prov.chart = chart.label();
    let mut reqs = Vec::new();
    let mut tp_prev: Matrix<Rat> = Matrix::identity(n);
    let mut pts = Vec::new();
    for (i, (c, f)) in data.conditions.iter().zip(flags).enumerate() {
        let flag = match f {
            FlagSpec::Osculating(pt) => {
                pts.push(pt.clone());
                prov.points.push(pt.label());
                point_source(n, pt, &None)?
            }
            FlagSpec::Explicit(rows) => {
                prov.points.push("matrix".into());
                FlagSource::Fixed(constant_matrix(&explicit_matrix(n, rows)?))
            }
            FlagSpec::Tp { seed, factors } => {
                prov.points.push(format!("tp{}", seed));
                tp_prev = tp_random(n, *seed, factors.unwrap_or_else(|| default_factors(n))).mul(&tp_prev)?;
                FlagSource::Fixed(constant_matrix(&tp_prev))
            }
        };
        if !skip[i] && !c.is_identity() {
            reqs.push(Requirement { cond: c.clone(), flag });
        }
    }
    warn_repeats(&pts, &mut prov);
    let (vars, params, eqs) = assemble(m, p, chart, &reqs, opts, divide, &mut prov)?;
    Ok(finish_system(vars, params, eqs, prov))
}

/// Minor equations for flags in totally positive position.
///
/// The first condition sits at the identity flag and the last at the flag at infinity; the
/// middle flags are cumulative products `g_k ... g_1` of totally positive factors, given
/// either by seed or as explicit cumulative matrices whose successive quotients are checked.
pub fn build_tp_system(data: &SchubertData, flags: &[FlagSpec], opts: &BuildOptions) -> Result<PolySystem> {
    let (m, p) = (data.m, data.p);
    let n = m + p;
    let k = data.conditions.len();
    if k < 2 || flags.len() + 2 != k {
        return Err(Error::Argument("give one flag per middle condition".into()));
    }
    let first = &data.conditions[0];
    let last = &data.conditions[k - 1];
    let chart = ChartSpec::pair(last, first);
    let mut prov = Provenance::new(Family::TotalPositivity, m, p);
    prov.data = data.label();
    prov.chart = chart.label();
    let mut prev: Matrix<Rat> = Matrix::identity(n);
    let mut reqs = Vec::new();
    for (c, f) in data.conditions[1..k - 1].iter().zip(flags) {
        let next = match f {
            FlagSpec::Tp { seed, factors } => {
                prov.points.push(format!("tp{}", seed));
                tp_random(n, *seed, factors.unwrap_or_else(|| default_factors(n))).mul(&prev)?
            }
            FlagSpec::Explicit(rows) => {
                prov.points.push("matrix".into());
                let g = explicit_matrix(n, rows)?;
                let q = g.mul(&unipotent_inverse(&prev)?)?;
                if !tp_check(&q)? {
                    return Err(Error::Argument("successive flag quotient is not totally positive".into()));
                }
                g
            }
            FlagSpec::Osculating(_) => return Err(Error::Argument("totally positive systems take tp or matrix flags".into())),
        };
        if !c.is_identity() {
            reqs.push(Requirement { cond: c.clone(), flag: FlagSource::Fixed(constant_matrix(&next)) });
        }
        prev = next;
    }
    let (vars, params, eqs) = assemble(m, p, &chart, &reqs, opts, false, &mut prov)?;
    Ok(finish_system(vars, params, eqs, prov))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_qpoly, rat};

    fn names(v: &[String]) -> Vec<&str> {
        v.iter().map(|s| s.as_str()).collect()
    }

    #[test]
    fn phi_two_two() {
        let (f, vars) = build_phi(2, 2, &FlagPoint::Param("s".into())).unwrap();
        let expect = parse_qpoly("s^4 - 2*s^3*x21 + s^2*x22 - 3*s^2*x11 + 2*s*x12 + x11*x22 - x12*x21", &names(&vars)).unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn osculating_equals_monomial_basis() {
        let pts: Vec<FlagPoint> = (1..=6).map(FlagPoint::int).collect();
        let a = build_conjecture_ii(2, 3, &pts, &BuildOptions::default()).unwrap();
        let b = build_conjecture_ii_prime(2, 3, &monomial_basis(5), &pts, &BuildOptions::default()).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        assert!(build_conjecture_ii_prime(2, 2, &[Poly::one(), Poly::one(), Poly::var(0), Poly::var(0).pow(3)], &pts[..4], &BuildOptions::default()).is_err());
    }

    #[test]
    fn schubert_hypersurface_matches() {
        let data = SchubertData::hypersurface(2, 2);
        let flags: Vec<FlagSpec> = (1..=4).map(|i| FlagSpec::Osculating(FlagPoint::int(i))).collect();
        let a = build_schubert_system(&data, &flags, &ChartSpec::AffineIpX, &BuildOptions::default()).unwrap();
        let b = build_conjecture_i(2, 2).unwrap();
        assert_eq!(a.canonical(), b.canonical());
    }

    #[test]
    fn symmetric_compression_of_four_points() {
        let pts: Vec<FlagPoint> = ["s", "t", "u", "v"].iter().map(|x| FlagPoint::Param(x.to_string())).collect();
        let sys = build_conjecture_ii(2, 2, &pts, &BuildOptions::symmetric()).unwrap();
        assert_eq!(sys.params, vec!["e1", "e2", "e3", "e4"]);
        assert_eq!(sys.equations.len(), 4);
        // at e = (10, 35, 50, 24) the compressed system has the same zeros as the points 1..4
        let bound = sys
            .bind_params(&[("e1".into(), rat(10, 1)), ("e2".into(), rat(35, 1)), ("e3".into(), rat(50, 1)), ("e4".into(), rat(24, 1))])
            .unwrap();
        let direct = build_conjecture_i(2, 2).unwrap();
        let gb_a = crate::groebner::buchberger_q(&bound.equations, &crate::groebner::MonomialOrder::lex_natural(4), &crate::groebner::Budget::unlimited()).unwrap();
        let gb_b = crate::groebner::buchberger_q(&direct.equations, &crate::groebner::MonomialOrder::lex_natural(4), &crate::groebner::Budget::unlimited()).unwrap();
        assert!(crate::groebner::same_up_to_scalar(&gb_a.generators(), &gb_b.generators()));
    }

    #[test]
    fn psi_divisibility() {
        for (m, p) in [(2, 2), (2, 3), (3, 3)] {
            let (q, vars) = psi_poly(m, p).unwrap();
            assert_eq!(vars.len(), m * p - 1);
            assert!(!q.is_zero());
        }
        assert!(build_conjecture_ii_doubleprime(2, 2, &[FlagPoint::int(0), FlagPoint::int(1)], &BuildOptions::default()).is_err());
    }

    #[test]
    fn pair_chart_counts() {
        let data = SchubertData::parse(&["J2^4"], 4, 2).unwrap();
        let j2 = data.conditions[0].clone();
        let flags = vec![
            FlagSpec::Osculating(FlagPoint::Infinity),
            FlagSpec::Osculating(FlagPoint::int(0)),
            FlagSpec::Osculating(FlagPoint::Param("s".into())),
            FlagSpec::Osculating(FlagPoint::Param("t".into())),
        ];
        let sys = build_schubert_system(&data, &flags, &ChartSpec::pair(&j2, &j2), &BuildOptions::default()).unwrap();
        assert_eq!(sys.nvars(), 8 - 2 * j2.codim());
        assert_eq!(sys.params, vec!["s", "t"]);
        assert_eq!(minor_count(&j2, true), 6);
        assert!(build_schubert_system(&data, &flags[..3], &ChartSpec::AffineIpX, &BuildOptions::default()).is_err());
    }

    #[test]
    fn chebyshev() {
        let t = chebyshev_basis(4);
        assert_eq!(t[3], parse_qpoly("4*s^3 - 3*s", &["s"]).unwrap());
        let f = basis_flag(&t, &Poly::constant(rat(1, 1))).unwrap();
        // T_3'(1)/1! = 9, T_3''(1)/2! = 12
        assert_eq!(f.get(1, 3), &Poly::constant(rat(9, 1)));
        assert_eq!(f.get(2, 3), &Poly::constant(rat(12, 1)));
    }
}
