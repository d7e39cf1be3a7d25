//! Instance specifications: what to build, how to solve it, and the limits to respect.

use crate::algebra::{parse_qpoly, parse_rat, Poly, Rat};
use crate::error::{Error, Result};
use crate::groebner::{Budget, MonomialOrder};
use crate::schubert::{SchubertCondition, SchubertData};
use crate::systems::{
    build_conjecture_ii, build_conjecture_ii_doubleprime, build_conjecture_ii_prime, build_flag_counterexample,
    build_schubert_system, build_tp_system, chebyshev_basis, monomial_basis, BuildOptions, ChartSpec, Family,
    FlagCounterexamplePoints, FlagPoint, FlagSpec, PolySystem,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Duration;

/// Polynomial basis for the curve in a general-basis instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisSpec {
    /// `"chebyshev"` or `"monomial"`.
    Named(String),
    /// Polynomials in `t`, lowest degree first.
    Explicit(Vec<String>),
}

impl BasisSpec {
    pub fn polys(&self, n: usize) -> Result<Vec<Poly<Rat>>> {
        match self {
            BasisSpec::Named(s) if s == "chebyshev" => Ok(chebyshev_basis(n)),
            BasisSpec::Named(s) if s == "monomial" => Ok(monomial_basis(n)),
            BasisSpec::Named(s) => Err(Error::Parse(format!("unknown basis `{}`", s))),
            BasisSpec::Explicit(v) => v.iter().map(|s| parse_qpoly(s, &["t"])).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    #[default]
    Degrevlex,
    Lex,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetSpec {
    pub time_secs: Option<u64>,
    pub max_terms: Option<usize>,
    pub max_pairs: Option<usize>,
}

impl BudgetSpec {
    pub fn budget(&self) -> Budget {
        Budget {
            max_pairs: self.max_pairs,
            max_terms: self.max_terms,
            max_time: self.time_secs.map(Duration::from_secs),
        }
    }
}

fn default_true() -> bool {
    true
}

/// One instance, as read from TOML or JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub family: Family,
    #[serde(default)]
    pub m: usize,
    #[serde(default)]
    pub p: usize,
    /// Schubert data items such as `"J1^4"` or `"135"`.
    #[serde(default)]
    pub data: Vec<String>,
    /// Osculation points: rationals, `inf`, or parameter names.
    #[serde(default)]
    pub points: Vec<String>,
    /// Explicit flags; overrides `points` for Schubert and total-positivity instances.
    #[serde(default)]
    pub flags: Vec<FlagSpec>,
    #[serde(default)]
    pub basis: Option<BasisSpec>,
    #[serde(default)]
    pub chart: Option<ChartSpec>,
    #[serde(default)]
    pub order: OrderName,
    /// Variable priority for the order, most significant first.
    #[serde(default)]
    pub var_order: Vec<String>,
    #[serde(default)]
    pub eliminate_to: Option<String>,
    #[serde(default)]
    pub symmetric: bool,
    #[serde(default = "default_true")]
    pub prune: bool,
    /// Values for symbolic parameters.
    #[serde(default)]
    pub params: BTreeMap<String, String>,
    #[serde(default)]
    pub budget: BudgetSpec,
    #[serde(default)]
    pub seed: Option<u64>,
    /// Lift the limit on the expected number of solutions.
    #[serde(default)]
    pub allow_large: bool,
    #[serde(default)]
    pub counterexample: Option<FlagCounterexamplePoints>,
    /// Isolating interval width, as a rational literal.
    #[serde(default)]
    pub width: Option<String>,
}

impl InstanceSpec {
    pub fn new(family: Family, m: usize, p: usize) -> Self {
        InstanceSpec {
            name: None,
            family,
            m,
            p,
            data: Vec::new(),
            points: Vec::new(),
            flags: Vec::new(),
            basis: None,
            chart: None,
            order: OrderName::Degrevlex,
            var_order: Vec::new(),
            eliminate_to: None,
            symmetric: false,
            prune: true,
            params: BTreeMap::new(),
            budget: BudgetSpec::default(),
            seed: None,
            allow_large: false,
            counterexample: None,
            width: None,
        }
    }

    /// Hypersurface instance with osculation points `1..=mp` shifted by nothing.
    pub fn hypersurface(m: usize, p: usize, points: &[Rat]) -> Self {
        let mut s = Self::new(Family::Hypersurface, m, p);
        s.points = points.iter().map(crate::algebra::coeff::rat_text).collect();
        s
    }

    /// Read TOML, or JSON when the text starts with `{`.
    pub fn from_text(text: &str) -> Result<Self> {
        let t = text.trim_start();
        if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
        }
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| {
            let fam = serde_json::to_value(self.family).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            format!("{}-m{}p{}", fam, self.m, self.p)
        })
    }

    pub fn options(&self) -> BuildOptions {
        BuildOptions { prune: self.prune, symmetric: self.symmetric }
    }

    pub fn flag_points(&self) -> Result<Vec<FlagPoint>> {
        self.points.iter().map(|s| FlagPoint::parse(s)).collect()
    }

    pub fn schubert_data(&self) -> Result<Option<SchubertData>> {
        if self.data.is_empty() {
            return Ok(None);
        }
        let items: Vec<&str> = self.data.iter().map(|s| s.as_str()).collect();
        SchubertData::parse(&items, self.m, self.p).map(Some)
    }

    /// Data actually solved: explicit data, or `(J1)^(mp)` for the hypersurface families.
    pub fn effective_data(&self) -> Result<Option<SchubertData>> {
        match self.family {
            Family::Hypersurface | Family::GeneralBasis | Family::Psi => Ok(Some(SchubertData::hypersurface(self.m, self.p))),
            Family::Schubert | Family::TotalPositivity => self.schubert_data(),
            Family::FlagCounterexample => Ok(None),
        }
    }

    fn flags(&self) -> Result<Vec<FlagSpec>> {
        if !self.flags.is_empty() {
            return Ok(self.flags.clone());
        }
        Ok(self.flag_points()?.into_iter().map(FlagSpec::Osculating).collect())
    }

    fn default_chart(&self, data: &SchubertData) -> Result<ChartSpec> {
        let pts = self.flag_points()?;
        if pts.len() >= 2 && pts[0] == FlagPoint::Infinity && pts[1] == FlagPoint::int(0) {
            return Ok(ChartSpec::pair(&data.conditions[0], &data.conditions[1]));
        }
        Ok(ChartSpec::AffineIpX)
    }

    /// Build the system, before parameter binding.
    pub fn build(&self) -> Result<PolySystem> {
        let opts = self.options();
        let mut sys = match self.family {
            Family::Hypersurface => build_conjecture_ii(self.m, self.p, &self.flag_points()?, &opts)?,
            Family::GeneralBasis => {
                let basis = self
                    .basis
                    .as_ref()
                    .ok_or_else(|| Error::Argument("general-basis instances need a basis".into()))?
                    .polys(self.m + self.p)?;
                build_conjecture_ii_prime(self.m, self.p, &basis, &self.flag_points()?, &opts)?
            }
            Family::Psi => build_conjecture_ii_doubleprime(self.m, self.p, &self.flag_points()?, &opts)?,
            Family::Schubert => {
                let data = self.schubert_data()?.ok_or_else(|| Error::Argument("schubert instances need data".into()))?;
                let chart = match &self.chart {
                    Some(c) => c.clone(),
                    None => self.default_chart(&data)?,
                };
                build_schubert_system(&data, &self.flags()?, &chart, &opts)?
            }
            Family::TotalPositivity => {
                let data = match self.schubert_data()? {
                    Some(d) => d,
                    None => SchubertData::hypersurface(self.m, self.p),
                };
                let mut flags = self.flags.clone();
                if flags.is_empty() {
                    let seed = self.seed.unwrap_or(0);
                    let k = data.conditions.len().saturating_sub(2) as u64;
                    flags = (0..k).map(|i| FlagSpec::Tp { seed: seed * k + i, factors: None }).collect();
                }
                build_tp_system(&data, &flags, &opts)?
            }
            Family::FlagCounterexample => {
                build_flag_counterexample(&self.counterexample.clone().unwrap_or_default())?
            }
        };
        if !self.params.is_empty() {
            let mut bind = Vec::new();
            for (k, v) in &self.params {
                let r = parse_rat(v).ok_or_else(|| Error::Parse(format!("bad value `{}` for `{}`", v, k)))?;
                bind.push((k.clone(), r));
            }
            sys = sys.bind_params(&bind)?;
        }
        Ok(sys)
    }

    /// The monomial order on the chart variables of `sys`.
    pub fn monomial_order(&self, sys: &PolySystem) -> Result<MonomialOrder> {
        let n = sys.nvars();
        let priority: Vec<usize> = if self.var_order.is_empty() {
            (0..n).collect()
        } else {
            self.var_order
                .iter()
                .map(|v| sys.var_index(v).ok_or_else(|| Error::Argument(format!("unknown variable `{}` in var_order", v))))
                .collect::<Result<_>>()?
        };
        let order = match self.order {
            OrderName::Degrevlex => MonomialOrder::degrevlex(priority),
            OrderName::Lex => MonomialOrder::lex(priority),
        };
        order.validate()?;
        Ok(order)
    }

    pub fn width(&self) -> Result<Option<Rat>> {
        self.width
            .as_ref()
            .map(|w| parse_rat(w).ok_or_else(|| Error::Parse(format!("bad width `{}`", w))))
            .transpose()
    }

    /// Basic consistency checks that do not need the system.
    pub fn validate(&self) -> Result<()> {
        if self.family != Family::FlagCounterexample && (self.m == 0 || self.p == 0) {
            return Err(Error::Argument("m and p must be positive".into()));
        }
        if let Some(d) = self.schubert_data()? {
            // parse already enforces the codimension sum
            let _ = d;
        }
        for c in &self.data {
            if c.trim().is_empty() {
                return Err(Error::Parse("empty Schubert condition".into()));
            }
        }
        if let Some(ChartSpec::Pair { alpha, beta }) = &self.chart {
            SchubertCondition::new(self.m, self.p, alpha.clone())?;
            SchubertCondition::new(self.m, self.p, beta.clone())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn toml_round_trip() {
        let text = r#"
family = "schubert"
m = 4
p = 2
data = ["J2^4"]
points = ["inf", "0", "1", "2"]
eliminate_to = "x12"
"#;
        let s = InstanceSpec::from_text(text).unwrap();
        assert_eq!(s.family, Family::Schubert);
        assert!(s.prune);
        let sys = s.build().unwrap();
        assert_eq!(sys.vars, vec!["x12", "x13", "x25", "x26"]);
        let back = InstanceSpec::from_text(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn flag_forms() {
        let text = r#"{"family":"total-positivity","m":2,"p":2,"data":["J1^4"],
            "flags":[{"tp":{"seed":3,"factors":null}},{"tp":{"seed":4,"factors":6}}]}"#;
        let s = InstanceSpec::from_text(text).unwrap();
        assert_eq!(s.flags.len(), 2);
        assert!(InstanceSpec::from_text("family = \"nope\"").is_err());
        let osc = InstanceSpec::from_text("family = \"schubert\"\nm = 2\np = 2\ndata = [\"J1^4\"]\nflags = [{ osculating = \"inf\" }, { osculating = \"0\" }, { osculating = \"3/2\" }, { osculating = \"s\" }]\n").unwrap();
        assert_eq!(osc.flags[2], FlagSpec::Osculating(FlagPoint::Value(rat(3, 2))));
        assert_eq!(osc.flags[3], FlagSpec::Osculating(FlagPoint::Param("s".into())));
        let back = InstanceSpec::from_text(&serde_json::to_string(&osc).unwrap()).unwrap();
        assert_eq!(back, osc);
    }
}
