//! Ideals of polynomial rings and their quotients `k[x]/J`.
//!
//! An ideal of `k[x]/J` is stored through generators in `k[x]`; every
//! Groebner computation works with the lift `I + J`.

pub mod monomial;
mod regular;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::{ideal_groebner, ideal_reduce};
use crate::poly::{parse_generator_list, same_ring, Monomial, MonomialOrder, PolyRing, Polynomial};

pub use regular::{grade, regular_sequence, RegularSequence};

/// `k[x]` or a quotient `k[x]/J`.
#[derive(Debug)]
pub struct AmbientRing {
    poly: Arc<PolyRing>,
    relations: Vec<Polynomial>,
    relation_gb: OnceLock<Result<Vec<Polynomial>>>,
}

impl PartialEq for AmbientRing {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.poly, &other.poly) && self.relations == other.relations
    }
}

impl AmbientRing {
    pub fn polynomial(poly: Arc<PolyRing>) -> Arc<AmbientRing> {
        Arc::new(AmbientRing {
            poly,
            relations: Vec::new(),
            relation_gb: OnceLock::new(),
        })
    }

    pub fn quotient(poly: Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<AmbientRing>> {
        if relations.iter().any(|r| !same_ring(r.ring(), &poly)) {
            return Err(Error::RingMismatch);
        }
        let relations: Vec<Polynomial> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Arc::new(AmbientRing {
            poly,
            relations,
            relation_gb: OnceLock::new(),
        }))
    }

    pub fn poly(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    pub fn field(&self) -> Field {
        self.poly.field()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn is_polynomial(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn relation_gb(&self) -> Result<&[Polynomial]> {
        self.relation_gb
            .get_or_init(|| ideal_groebner(&self.poly, &self.relations))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    /// Canonical representative of `f` modulo the relations.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.is_polynomial() {
            return Ok(f.clone());
        }
        Ok(ideal_reduce(f, self.relation_gb()?))
    }

    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        self.poly.parse(text)
    }

    pub fn parse_ideal(self: &Arc<Self>, text: &str) -> Result<Ideal> {
        Ideal::new(self, parse_generator_list(text, &self.poly)?)
    }

    pub fn ideal(self: &Arc<Self>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|g| self.poly.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self, polys)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.poly.var(i)
    }

    pub fn unit_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::new(self, vec![self.poly.one()]).expect("same ring")
    }

    pub fn zero_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::new(self, Vec::new()).expect("same ring")
    }

    /// The ideal generated by all variables.
    pub fn maximal_ideal(self: &Arc<Self>) -> Ideal {
        let gens = (0..self.poly.nvars()).map(|i| self.poly.var(i)).collect();
        Ideal::new(self, gens).expect("same ring")
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string()).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

pub(crate) fn same_ambient(a: &Arc<AmbientRing>, b: &Arc<AmbientRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Debug)]
pub struct Ideal {
    ring: Arc<AmbientRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Result<Vec<Polynomial>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(v) = self.gb.get() {
            let _ = gb.set(v.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Generators are reduced modulo the relations; zero ones are dropped.
    pub fn new(ring: &Arc<AmbientRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_ring(g.ring(), ring.poly()) {
                return Err(Error::RingMismatch);
            }
            let g = ring.normal_form(&g)?.monic();
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        self.ring.poly()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators of the lift `I + J` in `k[x]`.
    pub fn lift_gens(&self) -> Vec<Polynomial> {
        let mut v = self.gens.clone();
        v.extend(self.ring.relations().iter().cloned());
        v
    }

    /// Reduced Groebner basis of the lift.
    pub fn gb(&self) -> Result<&[Polynomial]> {
        self.gb
            .get_or_init(|| ideal_groebner(self.ring.poly(), &self.lift_gens()))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    /// Canonical generators: reduced Groebner basis elements not in the
    /// relations, largest leading term first.
    pub fn canonical_gens(&self) -> Result<Vec<Polynomial>> {
        let gb = self.gb()?;
        let mut out: Vec<Polynomial> = if self.ring.is_polynomial() {
            gb.to_vec()
        } else {
            let rel = self.ring.relation_gb()?;
            gb.iter()
                .filter(|g| !ideal_reduce(g, rel).is_zero())
                .cloned()
                .collect()
        };
        out.reverse();
        Ok(out)
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ambient(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn derived(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, gens)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), self.ring.poly()) {
            return Err(Error::RingMismatch);
        }
        Ok(ideal_reduce(f, self.gb()?).is_zero())
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gb()? == other.gb()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.gb()?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        self.derived(g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        let ideal = self.derived(g)?;
        Ok(ideal.trimmed_if_monomial())
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = self.ring.unit_ideal();
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^[q]`, generated by `q`-th powers of the generators.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal> {
        let p = self.ring.field().characteristic();
        if p == 0 {
            return Err(Error::NotPrimeCharacteristic);
        }
        let mut t = q;
        while t > 1 && t.is_multiple_of(p) {
            t /= p;
        }
        if t != 1 || q == 0 {
            return Err(Error::NotPPower { q, p });
        }
        self.derived(self.gens.iter().map(|g| g.pow(q)).collect())
    }

    /// Replaces generators of a monomial-generated ideal by its minimal ones.
    fn trimmed_if_monomial(self) -> Ideal {
        if self.ring.is_polynomial() && self.gens.iter().all(|g| g.is_monomial()) {
            let monos: Vec<Monomial> = self
                .gens
                .iter()
                .map(|g| g.lead_monomial().unwrap().clone())
                .collect();
            let min = monomial::minimal_monomials(monos);
            let gens = min.into_iter().map(|m| self.ring.poly().monomial(m)).collect();
            return Ideal::new(&self.ring, gens).expect("same ring");
        }
        self
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        if self.ring.is_polynomial()
            && self.gens.iter().chain(&other.gens).all(|g| g.is_monomial())
        {
            return Ok(monomial::intersect_monomial(self, other));
        }
        let poly = self.ring.poly();
        let t = poly.fresh_var("t");
        let mut vars = vec![t];
        vars.extend(poly.vars().iter().cloned());
        let big = poly.derive(
            vars,
            MonomialOrder::Block {
                split: 1,
                inner: Box::new(poly.order().clone()),
            },
        )?;
        let tv = big.var(0);
        let one_minus_t = &big.one() - &tv;
        let mut gens = Vec::new();
        for g in self.lift_gens() {
            gens.push(&tv * &g.rename_into(&big)?);
        }
        for g in other.lift_gens() {
            gens.push(&one_minus_t * &g.rename_into(&big)?);
        }
        let gb = ideal_groebner(&big, &gens)?;
        let mut out = Vec::new();
        for g in gb {
            if g.terms().iter().all(|term| term.mono.exponents()[0] == 0) {
                out.push(g.rename_into(poly)?);
            }
        }
        self.derived(out)
    }

    /// `(I : f)`.
    pub fn colon_element(&self, f: &Polynomial) -> Result<Ideal> {
        let f = self.ring.normal_form(f)?;
        if f.is_zero() || self.contains(&f)? {
            return Ok(self.ring.unit_ideal());
        }
        if self.ring.is_polynomial() && f.is_monomial() && self.gens.iter().all(|g| g.is_monomial()) {
            return Ok(monomial::colon_monomial(self, f.lead_monomial().unwrap()));
        }
        let lifted = Ideal::new(&AmbientRing::polynomial(self.ring.poly().clone()), self.lift_gens())?;
        let principal = Ideal::new(lifted.ring(), vec![f.clone()])?;
        let meet = lifted.intersect(&principal)?;
        let quotients = meet
            .gens
            .iter()
            .map(|h| h.exact_div(&f))
            .collect::<Result<Vec<_>>>()?;
        self.derived(quotients)
    }

    /// `(I : K)`; the colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.ring.unit_ideal()))
    }

    /// `(I : K^inf)` together with the least `k` with `(I : K^k) = (I : K^{k+1})`.
    pub fn saturate(&self, other: &Ideal) -> Result<(Ideal, usize)> {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok((cur, k));
            }
            cur = next;
            k += 1;
        }
    }

    /// `tr(I) = x⁻¹·I·((x) : I)` for a regular element `x ∈ I`, computed as
    /// the colon `(I·((x) : I)) : x`.
    pub fn trace_with(&self, x: &Polynomial) -> Result<Ideal> {
        let principal = Ideal::new(&self.ring, vec![x.clone()])?;
        self.product(&principal.colon(self)?)?.colon_element(x)
    }

    /// Trace ideal, using the first element of a regular sequence in `I`.
    pub fn trace(&self) -> Result<Ideal> {
        let seq = regular_sequence(self)?;
        let x = seq.elements.first().ok_or(Error::NoRegularElement)?;
        self.trace_with(x)
    }

    /// `I ∩ k[remaining variables]`, as an ideal of the polynomial subring.
    pub fn eliminate(&self, names: &[&str]) -> Result<Ideal> {
        let poly = self.ring.poly();
        let mut elim = Vec::new();
        for n in names {
            let idx = poly
                .var_index(n)
                .ok_or_else(|| Error::UnknownVariable(n.to_string()))?;
            if !elim.contains(&idx) {
                elim.push(idx);
            }
        }
        let keep: Vec<String> = poly
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| !elim.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        let mut vars: Vec<String> = elim.iter().map(|&i| poly.vars()[i].clone()).collect();
        vars.extend(keep.iter().cloned());
        let big = poly.derive(vars, MonomialOrder::block(elim.len()))?;
        let gens = self
            .lift_gens()
            .iter()
            .map(|g| g.rename_into(&big))
            .collect::<Result<Vec<_>>>()?;
        let gb = ideal_groebner(&big, &gens)?;
        let order = match poly.order() {
            MonomialOrder::Block { .. } => MonomialOrder::GrevLex,
            o => o.clone(),
        };
        let sub = poly.derive(keep, order)?;
        let k = elim.len();
        let mut out = Vec::new();
        for g in gb {
            if g.terms().iter().all(|t| t.mono.exponents()[..k].iter().all(|&e| e == 0)) {
                out.push(g.rename_into(&sub)?);
            }
        }
        Ideal::new(&AmbientRing::polynomial(sub), out)
    }

    /// Krull dimension of `R/I`; `None` for the unit ideal.
    pub fn dim(&self) -> Result<Option<usize>> {
        if self.is_unit()? {
            return Ok(None);
        }
        let leads: Vec<Monomial> = self
            .gb()?
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect();
        Ok(Some(monomial::dimension_of_leads(&leads, self.ring.poly().nvars())))
    }

    /// Height, for ideals of a polynomial ring; `None` for the unit ideal.
    pub fn height(&self) -> Result<Option<usize>> {
        if !self.ring.is_polynomial() {
            return Err(Error::QuotientNotSupported);
        }
        Ok(self.dim()?.map(|d| self.ring.poly().nvars() - d))
    }

    /// Whether `f` lies in the radical, via the Rabinowitsch trick.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        let poly = self.ring.poly();
        let mut vars = poly.vars().to_vec();
        vars.push(poly.fresh_var("y"));
        let big = poly.derive(vars, MonomialOrder::GrevLex)?;
        let y = big.var(poly.nvars());
        let mut gens = self
            .lift_gens()
            .iter()
            .map(|g| g.rename_into(&big))
            .collect::<Result<Vec<_>>>()?;
        gens.push(&big.one() - &(&y * &f.rename_into(&big)?));
        let gb = ideal_groebner(&big, &gens)?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    /// The same generators in another ambient ring, matched by variable name.
    pub fn rename_into(&self, ring: &Arc<AmbientRing>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.rename_into(ring.poly()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.canonical_gens().unwrap_or_else(|_| self.gens.clone());
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(vars: &[&str]) -> Arc<AmbientRing> {
        AmbientRing::polynomial(PolyRing::grevlex(vars, Field::Rational))
    }

    #[test]
    fn intersection_and_colon() {
        let r = qq(&["x", "y"]);
        let a = r.parse_ideal("x").unwrap();
        let b = r.parse_ideal("y").unwrap();
        assert_eq!(a.intersect(&b).unwrap().to_string(), "(x*y)");
        let i = r.parse_ideal("x^2 + y^2, x*y").unwrap();
        let c = i.colon_element(&r.parse_poly("x").unwrap()).unwrap();
        assert!(c.contains(&r.parse_poly("y").unwrap()).unwrap());
        assert!(c.contains(&r.parse_poly("x^2 + y^2").unwrap()).unwrap());
    }

    #[test]
    fn colon_by_zero_is_unit() {
        let r = qq(&["x", "y"]);
        let i = r.parse_ideal("x").unwrap();
        assert!(i.colon(&r.zero_ideal()).unwrap().is_unit().unwrap());
    }

    #[test]
    fn saturation_exponent() {
        let r = qq(&["x", "y"]);
        let i = r.parse_ideal("x^3*y, x^2*y^2").unwrap();
        let (s, k) = i.saturate(&r.parse_ideal("x").unwrap()).unwrap();
        assert_eq!(s.to_string(), "(y)");
        assert_eq!(k, 3);
    }

    #[test]
    fn quotient_ring_colon() {
        let poly = PolyRing::grevlex(&["x", "y"], Field::Rational);
        let rels = parse_generator_list("x^2, x*y", &poly).unwrap();
        let r = AmbientRing::quotient(poly, rels).unwrap();
        let zero = r.zero_ideal();
        let ann_x = zero.colon_element(&r.parse_poly("x").unwrap()).unwrap();
        assert_eq!(ann_x.to_string(), "(x, y)");
    }

    #[test]
    fn dimension_and_height() {
        let r = qq(&["x", "y", "z"]);
        let i = r.parse_ideal("x*y, x*z").unwrap();
        assert_eq!(i.dim().unwrap(), Some(2));
        assert_eq!(i.height().unwrap(), Some(1));
        assert_eq!(r.unit_ideal().dim().unwrap(), None);
    }

    #[test]
    fn elimination_of_parametrisation() {
        let r = qq(&["t", "x", "y"]);
        let i = r.parse_ideal("x - t^2, y - t^3").unwrap();
        let e = i.eliminate(&["t"]).unwrap();
        assert_eq!(e.to_string(), "(x^3 - y^2)");
    }

    #[test]
    fn radical_membership() {
        let r = qq(&["x", "y"]);
        let i = r.parse_ideal("x^3, y^2").unwrap();
        assert!(i.radical_contains(&r.parse_poly("x + y").unwrap()).unwrap());
        assert!(!i.contains(&r.parse_poly("x + y").unwrap()).unwrap());
        assert!(!i.radical_contains(&r.parse_poly("x + 1").unwrap()).unwrap());
    }

    #[test]
    fn frobenius_power_checks() {
        let r = AmbientRing::polynomial(PolyRing::grevlex(&["x", "y"], Field::prime(3).unwrap()));
        let i = r.parse_ideal("x + y").unwrap();
        assert_eq!(i.frobenius_power(3).unwrap().to_string(), "(x^3 + y^3)");
        assert_eq!(i.frobenius_power(6).unwrap_err(), Error::NotPPower { q: 6, p: 3 });
        let q = qq(&["x"]).parse_ideal("x").unwrap();
        assert_eq!(q.frobenius_power(2).unwrap_err(), Error::NotPrimeCharacteristic);
    }

    #[test]
    fn trace_ideals() {
        let r = qq(&["x", "y"]);
        assert!(r.parse_ideal("x").unwrap().trace().unwrap().is_unit().unwrap());
        let m = r.maximal_ideal();
        assert!(m.trace().unwrap().equals(&m).unwrap());
        let i = r.parse_ideal("x^2, x*y").unwrap();
        let a = i.trace().unwrap();
        let b = i.trace_with(&r.parse_poly("x^2 + x*y").unwrap()).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(a.equals(&m).unwrap());
    }
}
