//! Buchberger's algorithm over free modules `R^m` with a position-over-term
//! order (lower position index is larger). Ideals are the rank-one case.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Sparse vector of polynomials, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<ModTerm>,
}

fn cmp_pos_mono(ord: &MonomialOrder, pa: usize, ma: &Monomial, pb: usize, mb: &Monomial) -> Ordering {
    pb.cmp(&pa).then_with(|| ord.cmp(ma, mb))
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(ord: &MonomialOrder, mut terms: Vec<ModTerm>) -> Vector {
        terms.sort_by(|a, b| cmp_pos_mono(ord, b.pos, &b.mono, a.pos, &a.mono));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.pos == t.pos && last.mono == t.mono => {
                    last.coeff = last.coeff.add(&t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Vector { terms: out }
    }

    /// Vector whose `i`-th component is `components[i]`.
    pub fn from_components(components: &[Polynomial]) -> Vector {
        let mut terms = Vec::new();
        for (pos, f) in components.iter().enumerate() {
            terms.extend(f.terms().iter().map(|t| ModTerm {
                pos,
                mono: t.mono.clone(),
                coeff: t.coeff.clone(),
            }));
        }
        Vector { terms }
    }

    pub fn from_poly_at(f: &Polynomial, pos: usize) -> Vector {
        Vector {
            terms: f
                .terms()
                .iter()
                .map(|t| ModTerm {
                    pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn to_components(&self, ring: &Arc<PolyRing>, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<Term>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos].push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            });
        }
        buckets
            .into_iter()
            .map(|ts| Polynomial::from_sorted_terms(ring, ts))
            .collect()
    }

    pub fn component(&self, ring: &Arc<PolyRing>, pos: usize) -> Polynomial {
        let ts = self
            .terms
            .iter()
            .filter(|t| t.pos == pos)
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(ring, ts)
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    /// Largest position index used, plus one.
    pub fn rank_hint(&self) -> usize {
        self.terms.iter().map(|t| t.pos + 1).max().unwrap_or(0)
    }

    /// Moves every term by `delta` positions; terms landing below zero are dropped.
    pub fn shift(&self, delta: isize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter_map(|t| {
                    let p = t.pos as isize + delta;
                    (p >= 0).then(|| ModTerm {
                        pos: p as usize,
                        mono: t.mono.clone(),
                        coeff: t.coeff.clone(),
                    })
                })
                .collect(),
        }
    }

    /// Keeps only positions in `range`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.pos))
                .cloned()
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    pos: t.pos,
                    mono: t.mono.mul(m),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, ord: &MonomialOrder, f: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for t in f.terms() {
            acc = acc.add(ord, &self.mul_term(&t.coeff, &t.mono));
        }
        acc
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coeff.is_one() => self.scale(&t.coeff.inv().expect("nonzero lead")),
            _ => self.clone(),
        }
    }

    fn merge(&self, ord: &MonomialOrder, other: &Vector, negate: bool) -> Vector {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |t: &ModTerm| -> ModTerm {
            if negate {
                ModTerm {
                    pos: t.pos,
                    mono: t.mono.clone(),
                    coeff: t.coeff.neg(),
                }
            } else {
                t.clone()
            }
        };
        while i < a.len() && j < b.len() {
            match cmp_pos_mono(ord, a[i].pos, &a[i].mono, b[j].pos, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(sign(&b[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].coeff.sub(&b[j].coeff)
                    } else {
                        a[i].coeff.add(&b[j].coeff)
                    };
                    if !c.is_zero() {
                        out.push(ModTerm {
                            pos: a[i].pos,
                            mono: a[i].mono.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(sign));
        Vector { terms: out }
    }

    pub fn add(&self, ord: &MonomialOrder, other: &Vector) -> Vector {
        self.merge(ord, other, false)
    }

    pub fn sub(&self, ord: &MonomialOrder, other: &Vector) -> Vector {
        self.merge(ord, other, true)
    }

    /// `self - c * m * g` without materialising the product separately.
    fn sub_scaled(&self, ord: &MonomialOrder, c: &Scalar, m: &Monomial, g: &Vector) -> Vector {
        self.sub(ord, &g.mul_term(c, m))
    }
}

fn find_reducer<'a>(basis: &'a [Vector], pos: usize, mono: &Monomial) -> Option<&'a Vector> {
    basis.iter().find(|g| {
        let l = g.lead().expect("basis elements are nonzero");
        l.pos == pos && l.mono.divides(mono)
    })
}

/// Full normal form of `f` modulo `basis` (any generating set, leads used for division).
pub fn reduce(ord: &MonomialOrder, f: &Vector, basis: &[Vector]) -> Vector {
    let mut rem = f.clone();
    let mut done: Vec<ModTerm> = Vec::new();
    while let Some(t) = rem.terms.first() {
        match find_reducer(basis, t.pos, &t.mono) {
            Some(g) => {
                let l = g.lead().expect("nonzero");
                let m = t.mono.div(&l.mono).expect("divides");
                let c = t.coeff.div(&l.coeff).expect("nonzero lead");
                rem = rem.sub_scaled(ord, &c, &m, g);
            }
            None => {
                done.push(rem.terms.remove(0));
            }
        }
    }
    Vector { terms: done }
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    degree: u64,
}

/// Reduced Groebner basis of the submodule generated by `gens`, using the
/// order of `ring`. Output is monic and sorted ascending by leading term.
pub fn groebner_basis(ring: &Arc<PolyRing>, gens: &[Vector]) -> Result<Vec<Vector>> {
    let ord = ring.order().clone();
    let budget = ring.config().pair_budget;
    let rank_one = gens.iter().all(|g| g.terms.iter().all(|t| t.pos == 0));

    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    let mut pending: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    pending.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pos_mono(&ord, la.pos, &la.mono, lb.pos, &lb.mono)
    });

    let insert = |h: Vector, basis: &mut Vec<Vector>, pairs: &mut Vec<Pair>| {
        let k = basis.len();
        let hl = h.lead().expect("nonzero").clone();
        // Drop old pairs made redundant by the new lead (Gebauer-Moeller B_k).
        pairs.retain(|p| {
            if p.pos != hl.pos || !hl.mono.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].lead().unwrap().mono.lcm(&hl.mono);
            let lj = basis[p.j].lead().unwrap().mono.lcm(&hl.mono);
            li == p.lcm || lj == p.lcm
        });
        let mut fresh: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let gl = g.lead().unwrap();
            if gl.pos != hl.pos {
                continue;
            }
            let coprime = rank_one && gl.mono.is_coprime(&hl.mono);
            fresh.push((i, gl.mono.lcm(&hl.mono), coprime));
        }
        // M criterion: drop pairs whose lcm is strictly divisible by another new lcm.
        let lcms: Vec<Monomial> = fresh.iter().map(|f| f.1.clone()).collect();
        fresh.retain(|(_, l, _)| !lcms.iter().any(|o| o != l && o.divides(l)));
        // F criterion: one pair per lcm; a coprime pair kills the whole class.
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, l, c) in fresh {
            match kept.iter_mut().find(|k| k.1 == l) {
                Some(k) => k.2 |= c,
                None => kept.push((i, l, c)),
            }
        }
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            pairs.push(Pair {
                i,
                j: k,
                pos: hl.pos,
                degree: l.degree(),
                lcm: l,
            });
        }
        basis.push(h);
    };

    for g in pending.drain(..) {
        let r = reduce(&ord, &g, &basis);
        if !r.is_zero() {
            insert(r.monic(), &mut basis, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm degree, then order, then indices.
        let mut best = 0;
        for (idx, p) in pairs.iter().enumerate().skip(1) {
            let b = &pairs[best];
            let better = p
                .degree
                .cmp(&b.degree)
                .then_with(|| cmp_pos_mono(&ord, p.pos, &p.lcm, b.pos, &b.lcm))
                .then_with(|| (p.j, p.i).cmp(&(b.j, b.i)));
            if better == Ordering::Less {
                best = idx;
            }
        }
        let p = pairs.swap_remove(best);
        processed += 1;
        if processed > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        let (gi, gj) = (&basis[p.i], &basis[p.j]);
        let (li, lj) = (gi.lead().unwrap(), gj.lead().unwrap());
        let mi = p.lcm.div(&li.mono).unwrap();
        let mj = p.lcm.div(&lj.mono).unwrap();
        let s = gi
            .mul_term(&lj.coeff, &mi)
            .sub_scaled(&ord, &li.coeff, &mj, gj);
        let r = reduce(&ord, &s, &basis);
        if !r.is_zero() {
            insert(r.monic(), &mut basis, &mut pairs);
        }
    }

    Ok(interreduce(&ord, basis))
}

/// Minimalises, tail-reduces, normalises and sorts a Groebner basis.
fn interreduce(ord: &MonomialOrder, basis: Vec<Vector>) -> Vec<Vector> {
    let mut minimal: Vec<Vector> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let gl = g.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let hl = h.lead().unwrap();
            o != idx
                && hl.pos == gl.pos
                && hl.mono.divides(&gl.mono)
                && (hl.mono != gl.mono || o < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let g = &minimal[idx];
        let others: Vec<Vector> = minimal
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let head = Vector {
            terms: vec![g.terms[0].clone()],
        };
        let tail = Vector {
            terms: g.terms[1..].to_vec(),
        };
        out.push(head.add(ord, &reduce(ord, &tail, &others)).monic());
    }
    out.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pos_mono(ord, la.pos, &la.mono, lb.pos, &lb.mono)
    });
    out
}

/// Generators of the syzygy module of `gens` (vectors in `R^rank`), as
/// vectors in `R^{gens.len()}`.
pub fn syzygies(ring: &Arc<PolyRing>, gens: &[Vector], rank: usize) -> Result<Vec<Vector>> {
    let ord = ring.order();
    let lifted: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let unit = Vector {
                terms: vec![ModTerm {
                    pos: rank + i,
                    mono: Monomial::one(ring.nvars()),
                    coeff: ring.field().one(),
                }],
            };
            g.add(ord, &unit)
        })
        .collect();
    let gb = groebner_basis(ring, &lifted)?;
    Ok(gb
        .into_iter()
        .filter(|v| v.lead().unwrap().pos >= rank)
        .map(|v| v.shift(-(rank as isize)))
        .collect())
}

/// Reduced Groebner basis of the ideal generated by `gens` in their common ring.
pub fn ideal_groebner(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly_at(g, 0)).collect();
    Ok(groebner_basis(ring, &vs)?
        .into_iter()
        .map(|v| v.component(ring, 0))
        .collect())
}

/// Remainder of `f` on division by a Groebner basis of an ideal.
pub fn ideal_reduce(f: &Polynomial, gb: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let basis: Vec<Vector> = gb.iter().map(|g| Vector::from_poly_at(g, 0)).collect();
    reduce(ring.order(), &Vector::from_poly_at(f, 0), &basis).component(ring, 0)
}
