//! Polynomial systems with named variables, parameters and a record of how they were built.

use crate::algebra::{Poly, Rat, ZPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `phi(s_i; X) = 0` in the `[I_p X]` chart.
    Hypersurface,
    /// Hypersurface system for a general polynomial basis of the curve.
    GeneralBasis,
    /// The reduced `psi` system on the `(mp-2)`-dimensional chart.
    Psi,
    /// Minor equations for general Schubert data with osculating flags.
    Schubert,
    /// Minor equations with totally positive flags.
    TotalPositivity,
    /// Two-step flag manifold counterexample.
    FlagCounterexample,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Provenance {
    pub family: Family,
    pub m: usize,
    pub p: usize,
    pub data: String,
    pub chart: String,
    pub points: Vec<String>,
    /// Parameters replaced by elementary symmetric functions, by group.
    pub symmetric_groups: Vec<Vec<String>>,
    pub warnings: Vec<String>,
}

impl Provenance {
    pub fn new(family: Family, m: usize, p: usize) -> Self {
        Provenance {
            family,
            m,
            p,
            data: String::new(),
            chart: String::new(),
            points: Vec::new(),
            symmetric_groups: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

/// Equations over `vars ++ params`: variable `i < vars.len()` is a chart variable, the rest parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySystem {
    pub vars: Vec<String>,
    pub params: Vec<String>,
    pub equations: Vec<Poly<Rat>>,
    pub provenance: Provenance,
}

impl PolySystem {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn is_numeric(&self) -> bool {
        self.params.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().chain(&self.params).cloned().collect()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name).map(|i| i + self.vars.len())
    }

    /// Replace some parameters by rational values; the others stay symbolic.
    pub fn bind_params(&self, values: &[(String, Rat)]) -> Result<PolySystem> {
        let nv = self.vars.len();
        let mut bind = Vec::new();
        for (name, v) in values {
            let i = self.param_index(name).ok_or_else(|| Error::Argument(format!("unknown parameter `{}`", name)))?;
            bind.push((i, v.clone()));
        }
        let keep: Vec<usize> = (0..self.params.len()).filter(|k| !bind.iter().any(|(i, _)| *i == nv + k)).collect();
        let mut map = vec![usize::MAX; nv + self.params.len()];
        for (i, slot) in map.iter_mut().enumerate().take(nv) {
            *slot = i;
        }
        for (j, &k) in keep.iter().enumerate() {
            map[nv + k] = nv + j;
        }
        let eqs = self
            .equations
            .iter()
            .map(|e| e.eval_partial(&bind).rename(&map))
            .collect();
        let mut out = PolySystem {
            vars: self.vars.clone(),
            params: keep.iter().map(|&k| self.params[k].clone()).collect(),
            equations: eqs,
            provenance: self.provenance.clone(),
        };
        out.normalize();
        Ok(out)
    }

    /// Integer-primitive equations with positive leading coefficient, zeros and repeats removed.
    pub fn normalize(&mut self) {
        let mut seen: Vec<ZPoly> = Vec::new();
        let mut out = Vec::new();
        for e in &self.equations {
            if e.is_zero() {
                continue;
            }
            let z = e.to_primitive_int().1.primitive();
            if !seen.contains(&z) {
                out.push(z.to_rat());
                seen.push(z);
            }
        }
        self.equations = out;
    }

    /// Equations as primitive integer polynomials, sorted for comparison across builders.
    pub fn canonical(&self) -> Vec<ZPoly> {
        let mut v: Vec<ZPoly> = self.equations.iter().map(|e| e.to_primitive_int().1.primitive()).collect();
        v.sort_by_key(|a| a.to_text(&self.names(), &[]));
        v.dedup();
        v
    }

    pub fn to_text(&self) -> Vec<String> {
        let names = self.names();
        self.equations.iter().map(|e| e.to_text(&names, &[])).collect()
    }

    /// Split parameters off into coefficient polynomials over the integers.
    pub fn integer_equations_with_params(&self) -> Vec<Poly<ZPoly>> {
        let nv = self.vars.len();
        let outer: Vec<usize> = (0..nv).collect();
        let params: Vec<usize> = (nv..nv + self.params.len()).collect();
        self.equations
            .iter()
            .map(|e| crate::algebra::parse::split_params(&e.to_primitive_int().1, &outer, &params))
            .collect()
    }

    pub fn integer_equations(&self) -> Vec<ZPoly> {
        self.equations.iter().map(|e| e.to_primitive_int().1).collect()
    }
}

/// Helper numbering: chart variables `0..nv`, a template point at `nv`, parameters after it.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub nv: usize,
    pub params: Vec<String>,
}

impl Layout {
    pub fn new(nv: usize) -> Self {
        Layout { nv, params: Vec::new() }
    }

    pub fn sigma(&self) -> usize {
        self.nv
    }

    pub fn param(&mut self, name: &str) -> usize {
        if let Some(i) = self.params.iter().position(|p| p == name) {
            return self.nv + 1 + i;
        }
        self.params.push(name.to_string());
        self.nv + self.params.len()
    }

    /// Renumber into `vars ++ params`, failing if the template point survived.
    pub fn finish(&self, eqs: Vec<Poly<Rat>>) -> Result<Vec<Poly<Rat>>> {
        let total = self.nv + 1 + self.params.len();
        let mut map: Vec<usize> = (0..total).collect();
        for k in 0..self.params.len() {
            map[self.nv + 1 + k] = self.nv + k;
        }
        map[self.nv] = usize::MAX;
        let mut out = Vec::with_capacity(eqs.len());
        for e in eqs {
            if e.uses_var(self.nv) {
                return Err(Error::Internal("template point left in an equation".into()));
            }
            out.push(e.rename(&map));
        }
        Ok(out)
    }
}

/// `f(sigma)` modulo `prod (sigma - s_i)`, the monic polynomial with coefficients `(-1)^k e_k`.
///
/// `e[k-1]` is the polynomial standing for `e_k`. The coefficients of the remainder in
/// `sigma` generate the same ideal as `f(s_1), ..., f(s_n)` when the points are distinct.
pub fn reduce_mod_points(f: &Poly<Rat>, sigma: usize, e: &[Poly<Rat>]) -> Vec<Poly<Rat>> {
    let n = e.len();
    let mut c = f.coeffs_in(sigma);
    // E(sigma) = sigma^n + sum_{k=1..n} (-1)^k e_k sigma^(n-k)
    let mut low: Vec<Poly<Rat>> = vec![Poly::zero(); n];
    for k in 1..=n {
        low[n - k] = if k % 2 == 0 { e[k - 1].clone() } else { e[k - 1].neg() };
    }
    while c.len() > n {
        let d = c.len() - 1;
        let top = c.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        for (j, l) in low.iter().enumerate() {
            if !l.is_zero() {
                let idx = d - n + j;
                c[idx] = c[idx].sub(&top.mul(l));
            }
        }
    }
    c.into_iter().filter(|x| !x.is_zero()).collect()
}
