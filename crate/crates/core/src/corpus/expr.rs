//! Expression language used by corpus checks and the CLI.
//!
//! ```text
//! D(I)  Dext(I)  colon(I, J)  sat(I[, J])  intersect(I, J)  sum(I, J)
//! prod(I, J)  pow(I, n)  bracket(I, q)  unm(I)  intclosure(I)  symb(P, n)
//! tr(I | M)  refl(I)  annext(I, i)  ext(I | M, i)  ann(M)  fitting(M, j)
//! minors(M, s)  resmap(I | M, i)  lastmap(I | M)  chi(I | M)  betti(I | M)
//! grade(I)  height(I)  dim(I)  in(f | v, I | E)  inrad(J, I)  frobmember(f, I[, e])
//! gaps(S)  frobenius(S)  conductor(S)  apery(S)  cond(S)  dual(E)  frobclosure(E, p[, e])
//! ```
//!
//! Literals: `(x, y^2)` ideals, `[x, 0; 0, y]` presentation matrices,
//! `{10, 11}` semigroup ideals, `'x*y'` polynomials, integers. The names `m`,
//! `R` and `S` denote the maximal ideal, the unit ideal and the semigroup.

use std::fmt;
use std::sync::Arc;

use serde_json::Value as Json;

use super::{CheckSpec, Context};
use crate::closures::{frobenius_power_membership, integral_closure_monomial, symbolic_power_dim1, DEFAULT_E_MAX};
use crate::divisorial::{divisorial, divisorial_via_ext};
use crate::error::{Error, Result};
use crate::homology::{annihilator, ext, fitting_ideal, minors, module_transpose, resolve, Matrix};
use crate::ideals::monomial::{monomial_generators, unmixed_part};
use crate::ideals::{grade, regular_sequence, Ideal};
use crate::poly::Polynomial;
use crate::semigroup::{parse_exponents, FracIdeal, NumericalSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Call(String, Vec<Expr>),
    Name(String),
    Int(i64),
    IdealLit(String),
    MatrixLit(String),
    SetLit(String),
    PolyLit(String),
}

const BUILTIN_NAMES: [&str; 3] = ["m", "R", "S"];

pub fn is_builtin_name(name: &str) -> bool {
    BUILTIN_NAMES.contains(&name)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{c}`")))
        }
    }

    /// Text between a bracket at `self.pos` and its partner, brackets excluded.
    fn delimited(&mut self, open: char, close: char) -> Result<&'a str> {
        let start = self.pos;
        let mut depth = 0;
        for (i, c) in self.text[start..].char_indices() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    self.pos = start + i + c.len_utf8();
                    return Ok(&self.text[start + 1..start + i]);
                }
            }
        }
        Err(Error::syntax(start, format!("unclosed `{open}`")))
    }

    fn expr(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            None => Err(Error::syntax(self.pos, "expected an expression")),
            Some('(') => Ok(Expr::IdealLit(self.delimited('(', ')')?.to_string())),
            Some('[') => Ok(Expr::MatrixLit(format!("[{}]", self.delimited('[', ']')?))),
            Some('{') => Ok(Expr::SetLit(self.delimited('{', '}')?.to_string())),
            Some('\'') => {
                let start = self.pos + 1;
                let end = self.text[start..]
                    .find('\'')
                    .ok_or_else(|| Error::syntax(self.pos, "unclosed quote"))?;
                self.pos = start + end + 1;
                Ok(Expr::PolyLit(self.text[start..start + end].to_string()))
            }
            Some(c) if c.is_ascii_digit() || c == '-' => {
                let start = self.pos;
                self.pos += 1;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                self.text[start..self.pos]
                    .parse()
                    .map(Expr::Int)
                    .map_err(|_| Error::syntax(start, "bad integer"))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name = self.text[start..self.pos].to_string();
                self.skip_ws();
                if self.peek() != Some('(') {
                    return Ok(Expr::Name(name));
                }
                self.pos += 1;
                let mut args = Vec::new();
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.pos += 1;
                    return Ok(Expr::Call(name, args));
                }
                loop {
                    args.push(self.expr()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => self.pos += 1,
                        _ => {
                            self.expect(')')?;
                            return Ok(Expr::Call(name, args));
                        }
                    }
                }
            }
            Some(c) => Err(Error::syntax(self.pos, format!("unexpected `{c}`"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(Error::syntax(p.pos, "trailing input"));
    }
    Ok(e)
}

fn collect_names(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Name(n) => out.push(n.clone()),
        Expr::Call(_, args) => args.iter().for_each(|a| collect_names(a, out)),
        _ => {}
    }
}

/// Argument keys whose string values are expressions.
pub const EXPR_KEYS: [&str; 6] = ["lhs", "rhs", "expr", "ideal", "exprs", "premises"];

fn json_exprs(v: &Json, out: &mut Vec<String>) {
    match v {
        Json::String(s) => out.push(s.clone()),
        Json::Array(items) => items.iter().for_each(|i| json_exprs(i, out)),
        Json::Object(map) => {
            for (k, v) in map {
                if EXPR_KEYS.contains(&k.as_str()) {
                    json_exprs(v, out);
                }
            }
        }
        _ => {}
    }
}

/// Bare names mentioned by the expressions of a check.
pub fn referenced_names(check: &CheckSpec) -> Vec<String> {
    let mut texts = Vec::new();
    json_exprs(&Json::Object(check.args.clone()), &mut texts);
    let mut names = Vec::new();
    for t in texts {
        if let Ok(e) = parse_expr(&t) {
            collect_names(&e, &mut names);
        }
    }
    names
}

#[derive(Clone, Debug)]
pub enum Value {
    Ideal(Ideal),
    /// A module, as the cokernel of its presentation matrix.
    Module(Matrix),
    Frac(FracIdeal),
    Semigroup(Arc<NumericalSemigroup>),
    Int(i64),
    Ints(Vec<i64>),
    Bool(bool),
    Poly(Polynomial),
}

impl Value {
    pub fn to_json(&self) -> Json {
        match self {
            Value::Int(v) => Json::from(*v),
            Value::Ints(v) => Json::from(v.clone()),
            Value::Bool(b) => Json::Bool(*b),
            other => Json::String(other.to_string()),
        }
    }

    fn type_name(&self) -> &'static str {
        match self {
            Value::Ideal(_) => "ideal",
            Value::Module(_) => "module",
            Value::Frac(_) => "semigroup ideal",
            Value::Semigroup(_) => "semigroup",
            Value::Int(_) => "integer",
            Value::Ints(_) => "integer list",
            Value::Bool(_) => "boolean",
            Value::Poly(_) => "polynomial",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ideal(i) => write!(f, "{i}"),
            Value::Module(m) => write!(f, "coker {m}"),
            Value::Frac(e) => write!(f, "{e}"),
            Value::Semigroup(s) => write!(f, "{s}"),
            Value::Int(v) => write!(f, "{v}"),
            Value::Ints(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
            Value::Bool(b) => write!(f, "{b}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

fn type_error(func: &str, v: &Value) -> Error {
    Error::Expression(format!("{func}: unexpected {} argument", v.type_name()))
}

impl Context {
    fn ring(&self) -> Result<&Arc<crate::ideals::AmbientRing>> {
        self.ring
            .as_ref()
            .ok_or_else(|| Error::Expression("this entry has no polynomial ring".into()))
    }

    fn semigroup(&self) -> Result<&Arc<NumericalSemigroup>> {
        self.semigroup
            .as_ref()
            .ok_or_else(|| Error::Expression("this entry has no semigroup".into()))
    }

    pub fn eval_str(&self, text: &str) -> Result<Value> {
        self.eval(&parse_expr(text)?)
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        match e {
            Expr::Int(v) => Ok(Value::Int(*v)),
            Expr::PolyLit(t) => Ok(Value::Poly(self.ring()?.parse_poly(t)?)),
            Expr::IdealLit(t) => Ok(Value::Ideal(self.ring()?.parse_ideal(t)?)),
            Expr::MatrixLit(t) => Ok(Value::Module(Matrix::parse(self.ring()?, t)?)),
            Expr::SetLit(t) => Ok(Value::Frac(FracIdeal::new(self.semigroup()?, &parse_exponents(t)?)?)),
            Expr::Name(n) => self.name(n),
            Expr::Call(f, args) => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>>>()?;
                self.call(f, vals)
            }
        }
    }

    fn name(&self, n: &str) -> Result<Value> {
        if let Some(i) = self.ideals.get(n) {
            return Ok(Value::Ideal(i.clone()));
        }
        if let Some(m) = self.modules.get(n) {
            return Ok(Value::Module(Matrix::parse(self.ring()?, m)?));
        }
        match n {
            "m" => match (&self.ring, &self.semigroup) {
                (Some(r), _) => Ok(Value::Ideal(r.maximal_ideal())),
                (None, Some(s)) => Ok(Value::Frac(FracIdeal::maximal(s))),
                _ => Err(Error::Expression("`m` needs a ring or a semigroup".into())),
            },
            "R" => match (&self.ring, &self.semigroup) {
                (Some(r), _) => Ok(Value::Ideal(r.unit_ideal())),
                (None, Some(s)) => Ok(Value::Frac(FracIdeal::unit(s))),
                _ => Err(Error::Expression("`R` needs a ring or a semigroup".into())),
            },
            "S" => Ok(Value::Semigroup(self.semigroup()?.clone())),
            _ => {
                let ring = self.ring()?;
                match ring.poly().var_index(n) {
                    Some(i) => Ok(Value::Poly(ring.var(i))),
                    None => Err(Error::Expression(format!("undefined name `{n}`"))),
                }
            }
        }
    }

    fn call(&self, f: &str, args: Vec<Value>) -> Result<Value> {
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::Expression(format!("{f} takes {n} argument(s), got {}", args.len())))
            }
        };
        let int = |v: &Value| -> Result<i64> {
            match v {
                Value::Int(i) => Ok(*i),
                other => Err(type_error(f, other)),
            }
        };
        let nat = |v: &Value| -> Result<u32> {
            u32::try_from(int(v)?).map_err(|_| Error::Expression(format!("{f}: expected a natural number")))
        };
        let ideal = |v: &Value| -> Result<Ideal> {
            match v {
                Value::Ideal(i) => Ok(i.clone()),
                Value::Poly(p) => Ideal::new(self.ring()?, vec![p.clone()]),
                other => Err(type_error(f, other)),
            }
        };
        let module = |v: &Value| -> Result<Matrix> {
            match v {
                Value::Module(m) => Ok(m.clone()),
                Value::Ideal(i) => Ok(Matrix::generator_row(i)),
                other => Err(type_error(f, other)),
            }
        };
        let frac = |v: &Value| -> Result<FracIdeal> {
            match v {
                Value::Frac(e) => Ok(e.clone()),
                other => Err(type_error(f, other)),
            }
        };
        let semigroup = |v: &Value| -> Result<Arc<NumericalSemigroup>> {
            match v {
                Value::Semigroup(s) => Ok(s.clone()),
                other => Err(type_error(f, other)),
            }
        };
        let ideal_or_frac = |a: &Value, b: &Value, on_ideal: &dyn Fn(Ideal, Ideal) -> Result<Ideal>,
                             on_frac: &dyn Fn(FracIdeal, FracIdeal) -> Result<FracIdeal>|
         -> Result<Value> {
            match a {
                Value::Frac(x) => Ok(Value::Frac(on_frac(x.clone(), frac(b)?)?)),
                _ => Ok(Value::Ideal(on_ideal(ideal(a)?, ideal(b)?)?)),
            }
        };
        match f {
            "D" => {
                arity(1)?;
                match &args[0] {
                    Value::Frac(e) => Ok(Value::Frac(e.divisorial())),
                    v => Ok(Value::Ideal(divisorial(&ideal(v)?)?.d)),
                }
            }
            "Dext" => {
                arity(1)?;
                Ok(Value::Ideal(divisorial_via_ext(&ideal(&args[0])?)?.d))
            }
            "colon" => {
                arity(2)?;
                Ok(Value::Ideal(ideal(&args[0])?.colon(&ideal(&args[1])?)?))
            }
            "sat" => {
                let i = ideal(&args[0])?;
                let j = match args.len() {
                    1 => i.ring().maximal_ideal(),
                    2 => ideal(&args[1])?,
                    _ => return Err(Error::Expression("sat takes 1 or 2 arguments".into())),
                };
                Ok(Value::Ideal(i.saturate(&j)?.0))
            }
            "intersect" => {
                arity(2)?;
                ideal_or_frac(&args[0], &args[1], &|a, b| a.intersect(&b), &|a, b| a.intersect(&b))
            }
            "sum" => {
                arity(2)?;
                ideal_or_frac(&args[0], &args[1], &|a, b| a.sum(&b), &|a, b| a.sum(&b))
            }
            "prod" => {
                arity(2)?;
                ideal_or_frac(&args[0], &args[1], &|a, b| a.product(&b), &|a, b| a.product(&b))
            }
            "pow" => {
                arity(2)?;
                let n = nat(&args[1])?;
                match &args[0] {
                    Value::Frac(e) => Ok(Value::Frac(e.power(n))),
                    v => Ok(Value::Ideal(ideal(v)?.power(n)?)),
                }
            }
            "bracket" => {
                arity(2)?;
                let q = u64::from(nat(&args[1])?);
                Ok(Value::Ideal(ideal(&args[0])?.frobenius_power(q)?))
            }
            "unm" => {
                arity(1)?;
                let i = ideal(&args[0])?;
                let gens = unmixed_part(&monomial_generators(&i)?)?;
                let poly = i.poly_ring().clone();
                Ok(Value::Ideal(Ideal::new(i.ring(), gens.into_iter().map(|m| poly.monomial(m)).collect())?))
            }
            "intclosure" => {
                arity(1)?;
                match &args[0] {
                    Value::Frac(e) => Ok(Value::Frac(e.integral_closure()?)),
                    v => Ok(Value::Ideal(integral_closure_monomial(&ideal(v)?)?)),
                }
            }
            "symb" => {
                arity(2)?;
                Ok(Value::Ideal(symbolic_power_dim1(&ideal(&args[0])?, nat(&args[1])?)?))
            }
            "tr" => {
                arity(1)?;
                match &args[0] {
                    Value::Frac(e) => Ok(Value::Frac(e.trace())),
                    Value::Module(m) => Ok(Value::Module(module_transpose(m))),
                    v => Ok(Value::Ideal(ideal(v)?.trace()?)),
                }
            }
            "refl" => {
                arity(1)?;
                match &args[0] {
                    Value::Frac(e) => Ok(Value::Frac(e.divisorial())),
                    v => {
                        let i = ideal(v)?;
                        let seq = regular_sequence(&i)?;
                        let x = seq.elements.first().ok_or(Error::NoRegularElement)?;
                        let principal = Ideal::new(i.ring(), vec![x.clone()])?;
                        Ok(Value::Ideal(principal.colon(&principal.colon(&i)?)?))
                    }
                }
            }
            "annext" => {
                arity(2)?;
                let m = module(&args[0])?;
                Ok(Value::Ideal(annihilator(&ext(&m, nat(&args[1])? as usize)?)?))
            }
            "ext" => {
                arity(2)?;
                let m = module(&args[0])?;
                Ok(Value::Module(ext(&m, nat(&args[1])? as usize)?))
            }
            "ann" => {
                arity(1)?;
                Ok(Value::Ideal(annihilator(&module(&args[0])?)?))
            }
            "fitting" => {
                arity(2)?;
                Ok(Value::Ideal(fitting_ideal(&module(&args[0])?, nat(&args[1])? as usize)?))
            }
            "minors" => {
                arity(2)?;
                Ok(Value::Ideal(minors(&module(&args[0])?, nat(&args[1])? as usize)?))
            }
            "resmap" | "lastmap" => {
                let m = module(&args[0])?;
                let res = resolve(&m, None)?;
                let i = if f == "lastmap" {
                    arity(1)?;
                    res.length()
                } else {
                    arity(2)?;
                    nat(&args[1])? as usize
                };
                res.map(i)
                    .cloned()
                    .map(Value::Module)
                    .ok_or_else(|| Error::Expression(format!("resolution has no map {i}")))
            }
            "chi" => {
                arity(1)?;
                Ok(Value::Int(resolve(&module(&args[0])?, None)?.euler_characteristic()))
            }
            "betti" => {
                arity(1)?;
                let res = resolve(&module(&args[0])?, None)?;
                if !res.minimal {
                    return Err(Error::NotMinimal);
                }
                Ok(Value::Ints(res.betti().into_iter().map(|b| b as i64).collect()))
            }
            "grade" => {
                arity(1)?;
                Ok(Value::Int(grade(&ideal(&args[0])?)? as i64))
            }
            "height" => {
                arity(1)?;
                Ok(Value::Int(ideal(&args[0])?.height()?.map_or(-1, |h| h as i64)))
            }
            "dim" => {
                arity(1)?;
                Ok(Value::Int(ideal(&args[0])?.dim()?.map_or(-1, |d| d as i64)))
            }
            "in" => {
                arity(2)?;
                match (&args[0], &args[1]) {
                    (Value::Int(v), Value::Frac(e)) => Ok(Value::Bool(e.contains(*v))),
                    (Value::Int(v), Value::Semigroup(s)) => Ok(Value::Bool(s.contains(*v))),
                    (Value::Poly(p), other) => Ok(Value::Bool(ideal(other)?.contains(p)?)),
                    (other, _) => Err(type_error(f, other)),
                }
            }
            "inrad" => {
                arity(2)?;
                let j = ideal(&args[0])?;
                let i = ideal(&args[1])?;
                for g in j.gens() {
                    if !i.radical_contains(g)? {
                        return Ok(Value::Bool(false));
                    }
                }
                Ok(Value::Bool(true))
            }
            "frobmember" => {
                let e_max = match args.len() {
                    2 => DEFAULT_E_MAX,
                    3 => nat(&args[2])?,
                    _ => return Err(Error::Expression("frobmember takes 2 or 3 arguments".into())),
                };
                let p = match &args[0] {
                    Value::Poly(p) => p.clone(),
                    other => return Err(type_error(f, other)),
                };
                let found = frobenius_power_membership(&p, &ideal(&args[1])?, e_max)?;
                Ok(Value::Int(found.map_or(-1, i64::from)))
            }
            "gaps" => {
                arity(1)?;
                let s = semigroup(&args[0])?;
                Ok(Value::Ints(s.gaps().into_iter().map(|g| g as i64).collect()))
            }
            "frobenius" => {
                arity(1)?;
                Ok(Value::Int(semigroup(&args[0])?.frobenius_number()))
            }
            "conductor" => {
                arity(1)?;
                Ok(Value::Int(semigroup(&args[0])?.conductor() as i64))
            }
            "apery" => {
                arity(1)?;
                let s = semigroup(&args[0])?;
                Ok(Value::Ints(s.apery_set().into_iter().map(|g| g as i64).collect()))
            }
            "cond" => {
                arity(1)?;
                Ok(Value::Frac(FracIdeal::conductor_ideal(&semigroup(&args[0])?)))
            }
            "dual" => {
                arity(1)?;
                Ok(Value::Frac(frac(&args[0])?.dual()))
            }
            "frobclosure" => {
                let e_max = match args.len() {
                    2 => DEFAULT_E_MAX,
                    3 => nat(&args[2])?,
                    _ => return Err(Error::Expression("frobclosure takes 2 or 3 arguments".into())),
                };
                let p = u64::from(nat(&args[1])?);
                Ok(Value::Frac(frac(&args[0])?.frobenius_closure(p, e_max)?))
            }
            "gens" => {
                arity(1)?;
                Ok(Value::Ints(frac(&args[0])?.generators().to_vec()))
            }
            _ => Err(Error::Expression(format!("unknown function `{f}`"))),
        }
    }
}

/// Relation between two values: `(a ⊆ b, b ⊆ a)` for ideals, equality otherwise.
pub fn containments(a: &Value, b: &Value) -> Result<(bool, bool)> {
    match (a, b) {
        (Value::Ideal(x), Value::Ideal(y)) => Ok((x.is_subset(y)?, y.is_subset(x)?)),
        (Value::Frac(x), Value::Frac(y)) => Ok((x.is_subset(y)?, y.is_subset(x)?)),
        (Value::Poly(p), Value::Ideal(y)) => {
            let x = Ideal::new(y.ring(), vec![p.clone()])?;
            Ok((x.is_subset(y)?, y.is_subset(&x)?))
        }
        (Value::Ideal(x), Value::Poly(p)) => {
            let y = Ideal::new(x.ring(), vec![p.clone()])?;
            Ok((x.is_subset(&y)?, y.is_subset(x)?))
        }
        _ => {
            let eq = a.to_json() == b.to_json();
            Ok((eq, eq))
        }
    }
}
