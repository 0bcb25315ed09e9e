//! Combinatorics of monomial ideals.

use std::collections::BTreeSet;

use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Removes monomials divisible by another one in the list, and duplicates.
pub fn minimal_monomials(monos: Vec<Monomial>) -> Vec<Monomial> {
    let mut sorted = monos;
    sorted.sort_by_key(|m| (m.degree(), m.clone()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Minimal monomial generators, when the ideal is monomial in a polynomial ring.
pub fn monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    if !ideal.ring().is_polynomial() {
        return Err(Error::QuotientNotSupported);
    }
    let gb = ideal.gb()?;
    if !gb.iter().all(|g| g.is_monomial()) {
        return Err(Error::NotMonomial);
    }
    Ok(minimal_monomials(
        gb.iter().map(|g| g.lead_monomial().unwrap().clone()).collect(),
    ))
}

pub fn is_monomial_ideal(ideal: &Ideal) -> Result<bool> {
    match monomial_generators(ideal) {
        Ok(_) => Ok(true),
        Err(Error::NotMonomial) => Ok(false),
        Err(e) => Err(e),
    }
}

fn from_monomials(like: &Ideal, monos: Vec<Monomial>) -> Ideal {
    let poly = like.ring().poly();
    let gens = minimal_monomials(monos)
        .into_iter()
        .map(|m| poly.monomial(m))
        .collect();
    Ideal::new(like.ring(), gens).expect("same ring")
}

pub fn monomials_of(ideal: &Ideal) -> Vec<Monomial> {
    ideal
        .gens()
        .iter()
        .map(|g| g.lead_monomial().expect("nonzero").clone())
        .collect()
}

pub(crate) fn intersect_monomial(a: &Ideal, b: &Ideal) -> Ideal {
    let (ma, mb) = (monomials_of(a), monomials_of(b));
    let mut lcms = Vec::with_capacity(ma.len() * mb.len());
    for x in &ma {
        for y in &mb {
            lcms.push(x.lcm(y));
        }
    }
    from_monomials(a, lcms)
}

pub(crate) fn colon_monomial(a: &Ideal, f: &Monomial) -> Ideal {
    let quots = monomials_of(a)
        .iter()
        .map(|m| m.div(&m.gcd(f)).expect("gcd divides"))
        .collect();
    from_monomials(a, quots)
}

/// Dimension of `k[x]/(leads)`: the largest set of variables supporting no lead.
pub fn dimension_of_leads(leads: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for subset in 0u64..(1u64 << nvars) {
        let size = subset.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// An irreducible monomial ideal `(x_i^{a_i} : i in support)`, as sorted (var, exponent) pairs.
pub type Irreducible = Vec<(usize, u32)>;

fn irreducible_contains(q: &Irreducible, m: &Monomial) -> bool {
    q.iter().any(|&(i, e)| m.exponents()[i] >= e)
}

fn split(gens: Vec<Monomial>, out: &mut Vec<Irreducible>) {
    let gens = minimal_monomials(gens);
    match gens.iter().position(|m| m.support().count() > 1) {
        None => {
            let mut comp: Irreducible = gens
                .iter()
                .map(|m| {
                    let i = m.support().next().expect("non-constant");
                    (i, m.exponents()[i])
                })
                .collect();
            comp.sort();
            out.push(comp);
        }
        Some(k) => {
            let m = &gens[k];
            let i = m.support().next().unwrap();
            let a = m.exponents()[i];
            let power = Monomial::var(m.nvars(), i, a);
            let rest = m.div(&power).unwrap();
            let mut left = gens.clone();
            left[k] = power;
            let mut right = gens;
            right[k] = rest;
            split(left, out);
            split(right, out);
        }
    }
}

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
pub fn irreducible_decomposition(gens: &[Monomial]) -> Result<Vec<Irreducible>> {
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if gens.iter().any(|m| m.is_one()) {
        return Err(Error::UnitIdeal);
    }
    let mut comps = Vec::new();
    split(gens.to_vec(), &mut comps);
    comps.sort();
    comps.dedup();
    let nvars = gens[0].nvars();
    let as_monos = |q: &Irreducible| -> Vec<Monomial> {
        q.iter().map(|&(i, e)| Monomial::var(nvars, i, e)).collect()
    };
    let contained = |a: &Irreducible, b: &Irreducible| as_monos(a).iter().all(|m| irreducible_contains(b, m));
    let kept: Vec<Irreducible> = comps
        .iter()
        .filter(|b| !comps.iter().any(|a| a != *b && contained(a, b)))
        .cloned()
        .collect();
    Ok(kept)
}

/// A primary component: its associated prime (as a variable set) and generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub prime: BTreeSet<usize>,
    pub gens: Vec<Monomial>,
}

/// Primary decomposition obtained by merging irreducible components with equal radical.
pub fn primary_decomposition(gens: &[Monomial]) -> Result<Vec<PrimaryComponent>> {
    let irr = irreducible_decomposition(gens)?;
    let nvars = gens[0].nvars();
    let mut comps: Vec<PrimaryComponent> = Vec::new();
    for q in irr {
        let prime: BTreeSet<usize> = q.iter().map(|&(i, _)| i).collect();
        let monos: Vec<Monomial> = q.iter().map(|&(i, e)| Monomial::var(nvars, i, e)).collect();
        match comps.iter_mut().find(|c| c.prime == prime) {
            Some(c) => {
                let mut lcms = Vec::new();
                for x in &c.gens {
                    for y in &monos {
                        lcms.push(x.lcm(y));
                    }
                }
                c.gens = minimal_monomials(lcms);
            }
            None => comps.push(PrimaryComponent { prime, gens: monos }),
        }
    }
    comps.sort_by(|a, b| (a.prime.len(), &a.prime).cmp(&(b.prime.len(), &b.prime)));
    Ok(comps)
}

/// Intersection of the primary components of minimal height.
pub fn unmixed_part(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let comps = primary_decomposition(gens)?;
    let h = comps.iter().map(|c| c.prime.len()).min().expect("nonempty");
    let mut acc: Option<Vec<Monomial>> = None;
    for c in comps.iter().filter(|c| c.prime.len() == h) {
        acc = Some(match acc {
            None => c.gens.clone(),
            Some(a) => {
                let mut lcms = Vec::new();
                for x in &a {
                    for y in &c.gens {
                        lcms.push(x.lcm(y));
                    }
                }
                minimal_monomials(lcms)
            }
        });
    }
    Ok(acc.expect("nonempty"))
}
