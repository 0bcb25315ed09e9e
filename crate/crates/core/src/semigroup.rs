//! Numerical semigroups and the monomial fractional ideals of their semigroup
//! rings `k[t^a : a ∈ S]`, handled as exponent sets.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    /// Membership of `0..conductor`.
    members: Vec<bool>,
    conductor: u64,
}

impl NumericalSemigroup {
    /// Sieves membership until `a_1` consecutive members appear (`a_1` the
    /// smallest generator); from there on every integer is a member.
    pub fn new(gens: &[u64]) -> Result<Arc<NumericalSemigroup>> {
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0u64, |acc, &g| acc.gcd(&g)) != 1 {
            return Err(Error::NotCoprime);
        }
        let a1 = gens[0] as usize;
        let mut members = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < a1 {
            n += 1;
            let m = gens
                .iter()
                .any(|&g| (g as usize) <= n && members[n - g as usize]);
            members.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let conductor = (n + 1 - a1) as u64;
        members.truncate(conductor as usize);
        let gens = minimal_semigroup_gens(&gens);
        Ok(Arc::new(NumericalSemigroup {
            gens,
            members,
            conductor,
        }))
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    pub fn contains(&self, v: i64) -> bool {
        v >= 0 && (v as u64 >= self.conductor || self.members[v as usize])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Largest gap, `-1` for the semigroup of all naturals.
    pub fn frobenius_number(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&v| !self.members[v as usize]).collect()
    }

    /// Least member in each residue class modulo the multiplicity.
    pub fn apery_set(&self) -> Vec<u64> {
        let m = self.multiplicity();
        (0..m)
            .map(|r| {
                (0..)
                    .map(|k| r + k * m)
                    .find(|&v| self.contains(v as i64))
                    .expect("cofinite")
            })
            .collect()
    }
}

fn minimal_semigroup_gens(gens: &[u64]) -> Vec<u64> {
    // g is redundant when g - h is representable by the generators before it.
    let mut out: Vec<u64> = Vec::new();
    for &g in gens {
        let mut reach = vec![false; g as usize + 1];
        reach[0] = true;
        for v in 1..=g as usize {
            reach[v] = out.iter().any(|&h| h as usize <= v && reach[v - h as usize]);
        }
        if !reach[g as usize] {
            out.push(g);
        }
    }
    out
}

/// A fractional ideal `E = ∪ (g + S)` given by minimal integer generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    semigroup: Arc<NumericalSemigroup>,
    gens: Vec<i64>,
}

impl FracIdeal {
    pub fn new(semigroup: &Arc<NumericalSemigroup>, gens: &[i64]) -> Result<FracIdeal> {
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut min: Vec<i64> = Vec::new();
        for g in sorted {
            if !min.iter().any(|&h| semigroup.contains(g - h)) {
                min.push(g);
            }
        }
        Ok(FracIdeal {
            semigroup: semigroup.clone(),
            gens: min,
        })
    }

    /// The ring itself, `t^0 R`.
    pub fn unit(semigroup: &Arc<NumericalSemigroup>) -> FracIdeal {
        FracIdeal::new(semigroup, &[0]).expect("nonempty")
    }

    /// The maximal ideal, generated by the semigroup generators.
    pub fn maximal(semigroup: &Arc<NumericalSemigroup>) -> FracIdeal {
        let gens: Vec<i64> = semigroup.generators().iter().map(|&g| g as i64).collect();
        FracIdeal::new(semigroup, &gens).expect("nonempty")
    }

    /// `[c, ∞)` with `c` the conductor of the semigroup.
    pub fn conductor_ideal(semigroup: &Arc<NumericalSemigroup>) -> FracIdeal {
        let c = semigroup.conductor() as i64;
        FracIdeal::from_predicate(semigroup, c, c, |_| true)
    }

    /// Builds the ideal whose elements are the `v ≥ lo` with `pred(v)`, all of
    /// `[tail, ∞)` included; the predicate must describe an `S`-stable set.
    fn from_predicate(
        semigroup: &Arc<NumericalSemigroup>,
        lo: i64,
        tail: i64,
        pred: impl Fn(i64) -> bool,
    ) -> FracIdeal {
        let a1 = semigroup.multiplicity() as i64;
        let member = |v: i64| v >= tail || (v >= lo && pred(v));
        let mut gens: Vec<i64> = Vec::new();
        for v in lo.min(tail)..tail + a1 {
            if member(v) && !gens.iter().any(|&g| semigroup.contains(v - g)) {
                gens.push(v);
            }
        }
        FracIdeal {
            semigroup: semigroup.clone(),
            gens,
        }
    }

    pub fn semigroup(&self) -> &Arc<NumericalSemigroup> {
        &self.semigroup
    }

    pub fn generators(&self) -> &[i64] {
        &self.gens
    }

    pub fn min(&self) -> i64 {
        self.gens[0]
    }

    pub fn contains(&self, v: i64) -> bool {
        self.gens.iter().any(|&g| self.semigroup.contains(v - g))
    }

    /// Least `t` with `[t, ∞) ⊆ E`.
    pub fn tail(&self) -> i64 {
        let mut t = self.min() + self.semigroup.conductor() as i64;
        while t > self.min() && self.contains(t - 1) {
            t -= 1;
        }
        t
    }

    /// Elements of `E` below its tail.
    pub fn elements_below_tail(&self) -> Vec<i64> {
        (self.min()..self.tail()).filter(|&v| self.contains(v)).collect()
    }

    fn check(&self, other: &FracIdeal) -> Result<()> {
        if self.semigroup == other.semigroup {
            Ok(())
        } else {
            Err(Error::SemigroupMismatch)
        }
    }

    pub fn is_subset(&self, other: &FracIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(self.gens.iter().all(|&g| other.contains(g)))
    }

    /// Whether the ideal lies inside the ring.
    pub fn is_integral(&self) -> bool {
        self.gens.iter().all(|&g| self.semigroup.contains(g))
    }

    pub fn sum(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(&other.gens);
        FracIdeal::new(&self.semigroup, &g)
    }

    /// Product: the Minkowski sum of generator sets.
    pub fn product(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check(other)?;
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a + b);
            }
        }
        FracIdeal::new(&self.semigroup, &g)
    }

    pub fn power(&self, n: u32) -> FracIdeal {
        let mut acc = FracIdeal::unit(&self.semigroup);
        for _ in 0..n {
            acc = acc.product(self).expect("same semigroup");
        }
        acc
    }

    pub fn intersect(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check(other)?;
        let lo = self.min().max(other.min());
        let tail = self.tail().max(other.tail());
        Ok(FracIdeal::from_predicate(&self.semigroup, lo, tail, |v| {
            self.contains(v) && other.contains(v)
        }))
    }

    /// `(R : I) = {v : v + E ⊆ S}`. Members satisfy `v ≥ -min E`, and every
    /// `v ≥ c - min E` qualifies, so only a finite window is scanned.
    pub fn dual(&self) -> FracIdeal {
        let s = &self.semigroup;
        let c = s.conductor() as i64;
        let m0 = self.min();
        let below = self.elements_below_tail();
        let tail = self.tail();
        FracIdeal::from_predicate(s, -m0, c - m0, |v| {
            below.iter().all(|&e| s.contains(v + e)) && (tail..c - v).all(|e| s.contains(v + e))
        })
    }

    /// `D(I) = (R : (R : I))`.
    pub fn divisorial(&self) -> FracIdeal {
        self.dual().dual()
    }

    /// `{s ∈ S : s ≥ min E}` for `I ⊆ R`.
    pub fn integral_closure(&self) -> Result<FracIdeal> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let s = self.semigroup.clone();
        let m0 = self.min();
        Ok(FracIdeal::from_predicate(&s, m0, m0.max(s.conductor() as i64), |v| s.contains(v)))
    }

    /// `tr(I) = I · (R : I)`.
    pub fn trace(&self) -> FracIdeal {
        self.product(&self.dual()).expect("same semigroup")
    }

    /// `{s ∈ S : p^e s ∈ p^e·gens + S for some e ≤ e_max}`.
    pub fn frobenius_closure(&self, p: u64, e_max: u32) -> Result<FracIdeal> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let s = self.semigroup.clone();
        let m0 = self.min();
        let tail = self.tail();
        Ok(FracIdeal::from_predicate(&s, m0, tail, |v| {
            s.contains(v)
                && (0..=e_max).any(|e| {
                    let q = (p as i64).pow(e);
                    self.gens.iter().any(|&g| s.contains(q * v - q * g))
                })
        }))
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let below = self.elements_below_tail();
        let tail = self.tail();
        if below.is_empty() {
            return write!(f, "[{tail},∞)");
        }
        let list: Vec<String> = below.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}} ∪ [{tail},∞)", list.join(","))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|v| v.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// Parses `{10,11,12,19}` or `10, 11, 12, 19` into integers.
pub fn parse_exponents(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(t);
    inner
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::syntax(0, format!("bad exponent `{}`", s.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s5614() -> Arc<NumericalSemigroup> {
        NumericalSemigroup::new(&[5, 6, 14]).unwrap()
    }

    #[test]
    fn gaps_of_5_6_14() {
        let s = s5614();
        assert_eq!(s.gaps(), vec![1, 2, 3, 4, 7, 8, 9, 13]);
        assert_eq!(s.frobenius_number(), 13);
        assert_eq!(s.conductor(), 14);
        assert_eq!(s.apery_set().len(), 5);
    }

    #[test]
    fn trivial_semigroups() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.conductor(), 2);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.conductor(), 0);
        assert_eq!(NumericalSemigroup::new(&[4, 6]).unwrap_err(), Error::NotCoprime);
        assert_eq!(NumericalSemigroup::new(&[]).unwrap_err(), Error::EmptyGenerators);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let s = s5614();
        let m = FracIdeal::maximal(&s);
        let m2 = m.power(2);
        assert_eq!(m2.generators(), &[10, 11, 12, 19]);
        assert_eq!(m2.to_string(), "{10,11,12} ∪ [15,∞)");
        assert_eq!(m2.dual().to_string(), "{0} ∪ [4,∞)");
        let d = m2.divisorial();
        assert_eq!(d.to_string(), "{10,11,12} ∪ [14,∞)");
        assert!(d.contains(14) && !m2.contains(14));
        assert_eq!(m2.integral_closure().unwrap(), d);
        assert_eq!(m2.frobenius_closure(2, 4).unwrap(), d);
    }

    #[test]
    fn duals_of_ring_and_principal() {
        let s = s5614();
        let r = FracIdeal::unit(&s);
        assert_eq!(r.dual(), r);
        let p = FracIdeal::new(&s, &[6]).unwrap();
        assert_eq!(p.divisorial(), p);
        assert_eq!(p.trace(), r);
        let c = FracIdeal::conductor_ideal(&s);
        assert_eq!(c.to_string(), "[14,∞)");
        assert_eq!(c.divisorial(), c);
    }

    #[test]
    fn exponent_literals() {
        assert_eq!(parse_exponents("{10,11, 12,19}").unwrap(), vec![10, 11, 12, 19]);
        assert!(parse_exponents("{1,a}").is_err());
    }
}
