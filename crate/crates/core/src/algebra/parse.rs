//! Polynomial expression parser: `+ - * ^`, parentheses, rational literals, identifiers.

use super::coeff::{parse_rat, Coeff, Int, Rat};
use super::poly::Poly;
use crate::error::{Error, Result};
use num_traits::ToPrimitive;

/// Ordered variable names; index in the table is the variable index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    frozen: bool,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        VarTable { names: names.iter().map(|s| s.as_ref().to_string()).collect(), frozen: true }
    }

    /// A table that grows as unknown identifiers are met.
    pub fn growable() -> Self {
        VarTable { names: Vec::new(), frozen: false }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn lookup(&mut self, name: &str) -> Result<usize> {
        if let Some(i) = self.index(name) {
            return Ok(i);
        }
        if self.frozen {
            return Err(Error::Parse(format!("unknown variable `{}`", name)));
        }
        self.names.push(name.to_string());
        Ok(self.names.len() - 1)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{}`", c)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a mut VarTable,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly<Rat>> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<Rat>> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat('/') {
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                let inv = Rat::from_integer(Int::from(1)) / d.constant_term();
                acc = acc.scale(&inv);
            } else if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Op('('))) {
                // implicit multiplication such as `2x` or `(a)(b)`
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly<Rat>> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    n.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent `{}`", n)))?
                }
                Some(Tok::Op('(')) => {
                    let p = self.atom()?;
                    if !p.is_constant() {
                        return Err(Error::Parse("exponent must be a constant".into()));
                    }
                    let c = p.constant_term();
                    if !c.is_integer() {
                        return Err(Error::Parse("exponent must be integral".into()));
                    }
                    c.to_integer()
                        .to_u32()
                        .ok_or_else(|| Error::Parse("exponent out of range".into()))?
                }
                _ => return Err(Error::Parse("missing exponent".into())),
            };
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly<Rat>> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let r = parse_rat(&n).ok_or_else(|| Error::Parse(format!("bad number `{}`", n)))?;
                Ok(Poly::constant(r))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self.vars.lookup(&name)?;
                Ok(Poly::var(i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Parse over the rationals; unknown identifiers extend a growable table.
pub fn parse_poly(s: &str, vars: &mut VarTable) -> Result<Poly<Rat>> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, vars };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Parse over a fixed list of names.
pub fn parse_qpoly(s: &str, names: &[&str]) -> Result<Poly<Rat>> {
    let mut t = VarTable::new(names);
    parse_poly(s, &mut t)
}

/// Parse a polynomial that must have integer coefficients.
pub fn parse_int_poly(s: &str, names: &[&str]) -> Result<Poly<Int>> {
    let q = parse_qpoly(s, names)?;
    q.to_int_exact().ok_or_else(|| Error::Parse("non-integral coefficient".into()))
}

/// Split variables into an outer polynomial with coefficients in the parameter variables.
///
/// `outer[i]` is the table index of outer variable `i`, `params[j]` that of parameter `j`.
pub fn split_params<C: Coeff>(p: &Poly<C>, outer: &[usize], params: &[usize]) -> Poly<Poly<C>> {
    use super::monomial::Monomial;
    let n = p.nvars();
    let mut omap = vec![usize::MAX; n.max(1)];
    let mut pmap = vec![usize::MAX; n.max(1)];
    for (i, &v) in outer.iter().enumerate() {
        if v < n {
            omap[v] = i;
        }
    }
    for (j, &v) in params.iter().enumerate() {
        if v < n {
            pmap[v] = j;
        }
    }
    let mut acc: std::collections::HashMap<Monomial, Vec<(Monomial, C)>> = std::collections::HashMap::new();
    for (m, c) in p.terms() {
        let mut oe = Vec::new();
        let mut pe = Vec::new();
        for v in m.support() {
            let k = m.exp(v);
            if omap[v] != usize::MAX {
                let i = omap[v];
                if oe.len() <= i {
                    oe.resize(i + 1, 0);
                }
                oe[i] = k;
            } else if pmap[v] != usize::MAX {
                let j = pmap[v];
                if pe.len() <= j {
                    pe.resize(j + 1, 0);
                }
                pe[j] = k;
            } else {
                panic!("variable {} is neither outer nor parameter", v);
            }
        }
        acc.entry(Monomial::from_exps(&oe))
            .or_default()
            .push((Monomial::from_exps(&pe), c.clone()));
    }
    Poly::from_terms(acc.into_iter().map(|(m, v)| (m, Poly::from_terms(v))).collect())
}

/// Flatten an outer polynomial over parameter polynomials into one table.
pub fn join_params<C: Coeff>(p: &Poly<Poly<C>>, outer: &[usize], params: &[usize]) -> Poly<C> {
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        let mo = m.rename(outer);
        for (pm, x) in c.terms() {
            out.push((mo.mul(&pm.rename(params)), x.clone()));
        }
    }
    Poly::from_terms(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rat;

    #[test]
    fn parses_display_style_expressions() {
        let p = parse_qpoly("12x^2 + 4*e2*x + e1*e3 - 4e4", &["x", "e1", "e2", "e3", "e4"]).unwrap();
        assert_eq!(p.len(), 4);
        let q = parse_qpoly("(s-t)^2 - (s^2 - 2*s*t + t^2)", &["s", "t"]).unwrap();
        assert!(q.is_zero());
        let r = parse_qpoly("7/2*x - 1/2", &["x"]).unwrap();
        assert_eq!(r.constant_term(), rat(-1, 2));
    }

    #[test]
    fn growable_table() {
        let mut t = VarTable::growable();
        let p = parse_poly("b*a + a", &mut t).unwrap();
        assert_eq!(t.names(), &["b".to_string(), "a".to_string()]);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_qpoly("x +", &["x"]).is_err());
        assert!(parse_qpoly("y", &["x"]).is_err());
        assert!(parse_qpoly("x^y", &["x", "y"]).is_err());
    }

    #[test]
    fn split_and_join_round_trip() {
        let p = parse_int_poly("e1*x^2 + 2*e2*x*y - 3", &["x", "y", "e1", "e2"]).unwrap();
        let s = split_params(&p, &[0, 1], &[2, 3]);
        assert_eq!(s.len(), 3);
        assert_eq!(join_params(&s, &[0, 1], &[2, 3]), p);
    }

    #[test]
    fn text_round_trip() {
        let names = ["x", "y"];
        let p = parse_qpoly("3*x^2*y - 1/2*y + 4", &names).unwrap();
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let t = p.to_text(&owned, &[]);
        assert_eq!(parse_qpoly(&t, &names).unwrap(), p);
    }
}
