//! Multivariate polynomials over an exact field, monomial orders and the
//! polynomial text grammar.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};

pub use parse::{parse_generator_list, parse_polynomial};

/// Default Groebner pair budget.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;
/// Default seed string for the pseudo-random candidate stream.
pub const DEFAULT_SEED: &str = "0xD1V1";

/// Turns a seed string into a 64-bit seed: hexadecimal when it parses as such,
/// otherwise the FNV-1a hash of its bytes.
pub fn parse_seed(text: &str) -> u64 {
    let trimmed = text.trim();
    let digits = trimmed
        .strip_prefix("0x")
        .or_else(|| trimmed.strip_prefix("0X"))
        .unwrap_or(trimmed);
    if let Ok(v) = u64::from_str_radix(digits, 16) {
        return v;
    }
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in trimmed.bytes() {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Knobs shared by every computation in a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    pub pair_budget: usize,
    pub seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            pair_budget: DEFAULT_PAIR_BUDGET,
            seed: parse_seed(DEFAULT_SEED),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// The first `split` variables form a block compared first, each block by `inner`.
    Block { split: usize, inner: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn block(split: usize) -> MonomialOrder {
        MonomialOrder::Block {
            split,
            inner: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_slices(&a.0, &b.0)
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block { split, inner } => {
                let k = (*split).min(a.len());
                inner
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| inner.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { split, inner } => write!(f, "block({split}, {inner})"),
        }
    }
}

/// Dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.0[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * u64::from(w))
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut SmallVec<[u32; 8]> {
        &mut self.0
    }
}

/// A polynomial ring `k[x_1..x_n]` together with its monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
    config: EngineConfig,
}

impl PolyRing {
    pub fn new(vars: Vec<String>, field: Field, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        Self::with_config(vars, field, order, EngineConfig::default())
    }

    pub fn with_config(
        vars: Vec<String>,
        field: Field,
        order: MonomialOrder,
        config: EngineConfig,
    ) -> Result<Arc<PolyRing>> {
        for (i, v) in vars.iter().enumerate() {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::syntax(0, format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::syntax(0, format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing {
            vars,
            field,
            order,
            config,
        }))
    }

    /// Convenience constructor: `PolyRing::grevlex(&["x", "y"], Field::Rational)`.
    pub fn grevlex(vars: &[&str], field: Field) -> Arc<PolyRing> {
        Self::new(
            vars.iter().map(|s| s.to_string()).collect(),
            field,
            MonomialOrder::GrevLex,
        )
        .expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            order,
            ..self.clone()
        })
    }

    /// Same field and configuration, different variables and order.
    pub fn derive(&self, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        Self::with_config(vars, self.field, order, self.config)
    }

    pub fn with_engine_config(&self, config: EngineConfig) -> Arc<PolyRing> {
        Arc::new(PolyRing {
            config,
            ..self.clone()
        })
    }

    /// A variable name not yet used in this ring.
    pub fn fresh_var(&self, hint: &str) -> String {
        let mut name = hint.to_string();
        let mut k = 0;
        while self.vars.contains(&name) {
            k += 1;
            name = format!("{hint}{k}");
        }
        name
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> Polynomial {
        Polynomial::from_terms(
            self,
            vec![Term {
                coeff: c,
                mono: Monomial::one(self.nvars()),
            }],
        )
    }

    pub fn var(self: &Arc<Self>, index: usize) -> Polynomial {
        self.monomial(Monomial::var(self.nvars(), index, 1))
    }

    pub fn monomial(self: &Arc<Self>, mono: Monomial) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![Term {
                coeff: self.field.one(),
                mono,
            }],
        }
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        parse_polynomial(text, self)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mono: Monomial,
}

/// Canonical sparse polynomial: terms strictly descending in the ring order,
/// no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    /// Builds a canonical polynomial from arbitrary terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<Term>) -> Polynomial {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono {
                    last.coeff = last.coeff.add(&t.coeff);
                    continue;
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already sorted and combined.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lead_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous_for(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.mono.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Multiplication by `c * m`; order-preserving, so no re-sort.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul(c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("lead coefficient nonzero")),
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].coeff.neg() } else { b[j].coeff.clone() };
                    out.push(Term {
                        coeff: c,
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].coeff.sub(&b[j].coeff)
                    } else {
                        a[i].coeff.add(&b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: if negate { t.coeff.neg() } else { t.coeff.clone() },
            mono: t.mono.clone(),
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Maximal term under `order` (which may differ from the ring's own order).
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Scalar, Monomial)> {
        let t = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(&a.mono, &b.mono))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((t.coeff.clone(), t.mono.clone()))
    }

    /// The same polynomial in a ring whose variables include all variables
    /// occurring here (matched by name).
    pub fn rename_into(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for v in self.ring.vars() {
            map.push(target.var_index(v));
        }
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut m = Monomial::one(n);
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ring.vars()[i].clone()))?;
                m.exponents_mut()[j] += e;
            }
            terms.push(Term {
                coeff: t.coeff.clone(),
                mono: m,
            });
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        let lead = d.lead().ok_or(Error::DivisionByZero)?;
        let inv = lead.coeff.inv()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.lead() {
            let m = t.mono.div(&lead.mono).ok_or(Error::InexactDivision)?;
            let c = t.coeff.mul(&inv);
            rem = &rem - &d.mul_term(&c, &m);
            quot.push(Term { coeff: c, mono: m });
        }
        Ok(Polynomial::from_sorted_terms(&self.ring, quot))
    }

    /// Replace each variable `x_i` by `images[i]` (all in one target ring).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        let mut acc = target.zero();
        for t in &self.terms {
            let mut v = target.constant(t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    v = &v * &images[i].pow(u64::from(e));
                }
            }
            acc = &acc + &v;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return self.ring.zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = self.ring.zero();
        for t in &small.terms {
            acc = &acc + &big.mul_term(&t.coeff, &t.mono);
        }
        acc
    }
}

fn check_ring(f: &Polynomial, g: &Polynomial) -> Result<()> {
    if same_ring(&f.ring, &g.ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn poly_add(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_ring(f, g)?;
    Ok(f + g)
}

pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    check_ring(f, g)?;
    Ok(f * g)
}

pub fn poly_pow(f: &Polynomial, e: u64) -> Polynomial {
    f.pow(e)
}

pub fn leading_term(f: &Polynomial, order: &MonomialOrder) -> Result<(Scalar, Monomial)> {
    f.leading_term(order)
}

pub(crate) fn fmt_monomial(m: &Monomial, vars: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", vars[i])?;
        } else {
            write!(f, "{}^{}", vars[i], e)?;
        }
    }
    Ok(())
}

pub(crate) fn fmt_terms<'a>(
    terms: impl Iterator<Item = (&'a Scalar, &'a Monomial)>,
    vars: &[String],
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let mut first = true;
    for (c, m) in terms {
        let negative = c.is_negative();
        let abs = if negative { c.neg() } else { c.clone() };
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if m.is_one() {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            fmt_monomial(m, vars, f)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            self.terms.iter().map(|t| (&t.coeff, &t.mono)),
            self.ring.vars(),
            f,
        )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = (0..self.nvars()).map(|i| format!("x{i}")).collect();
        if self.is_one() {
            return write!(f, "1");
        }
        fmt_monomial(self, &vars, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_versus_grevlex() {
        let ring = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let f = ring.parse("x^2*y + x*y^3").unwrap();
        let (_, lt) = f.leading_term(&MonomialOrder::Lex).unwrap();
        assert_eq!(lt, m(&[2, 1]));
        let (_, lt) = f.leading_term(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(lt, m(&[1, 3]));
        let x = ring.parse("x").unwrap();
        for ord in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::block(1)] {
            assert_eq!(x.leading_term(&ord).unwrap().1, m(&[1, 0]));
        }
        assert_eq!(ring.zero().leading_term(&MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn grevlex_tie_break() {
        // x*z < y^2 in grevlex(x>y>z): the last variable with differing exponent decides.
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn arithmetic_examples() {
        let f2 = Field::prime(2).unwrap();
        let ring = PolyRing::grevlex(&["x", "y"], f2);
        let s = ring.parse("x + y").unwrap();
        assert_eq!(s.pow(2).to_string(), "x^2 + y^2");
        assert!((&s * &ring.zero()).is_zero());

        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let a = q.parse("x + y").unwrap();
        let b = q.parse("x - y").unwrap();
        assert_eq!((&a * &b).to_string(), "x^2 - y^2");
        assert_eq!(q.parse("x - y").unwrap().pow(2).to_string(), "x^2 - 2*x*y + y^2");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let b = PolyRing::grevlex(&["x", "z"], Field::Rational);
        let f = a.parse("x").unwrap();
        let g = b.parse("x").unwrap();
        assert_eq!(poly_add(&f, &g), Err(Error::RingMismatch));
        assert_eq!(poly_mul(&f, &g), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let q = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let f = q.parse("x^3 - x*y^2").unwrap();
        let d = q.parse("x + y").unwrap();
        assert_eq!(f.exact_div(&d).unwrap().to_string(), "x^2 - x*y");
        assert_eq!(q.parse("x^2 + 1").unwrap().exact_div(&d), Err(Error::InexactDivision));
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let ord = MonomialOrder::block(1);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xff"), 255);
        assert_eq!(parse_seed("D1"), 0xd1);
        assert_eq!(parse_seed("0xD1V1"), parse_seed("0xD1V1"));
        assert_ne!(parse_seed("0xD1V1"), parse_seed("0xD1V2"));
    }
}
