#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use divisor_lab::arith::{Field, Scalar};
use divisor_lab::ideals::{AmbientRing, Ideal};
use divisor_lab::poly::{PolyRing, Polynomial};
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn qq(vars: &[&str]) -> Arc<AmbientRing> {
    AmbientRing::polynomial(PolyRing::grevlex(vars, Field::Rational))
}

pub fn fp(p: u64, vars: &[&str]) -> Arc<AmbientRing> {
    AmbientRing::polynomial(PolyRing::grevlex(vars, Field::prime(p).unwrap()))
}

pub fn quotient(vars: &[&str], relations: &[&str]) -> Arc<AmbientRing> {
    let poly = PolyRing::grevlex(vars, Field::Rational);
    let rels = relations.iter().map(|r| poly.parse(r).unwrap()).collect();
    AmbientRing::quotient(poly, rels).unwrap()
}

pub fn ideal(r: &Arc<AmbientRing>, text: &str) -> Ideal {
    r.parse_ideal(text).unwrap()
}

pub fn poly(r: &Arc<AmbientRing>, text: &str) -> Polynomial {
    r.parse_poly(text).unwrap()
}

pub fn same(a: &Ideal, b: &Ideal) -> bool {
    a.equals(b).unwrap()
}

pub fn monomial_text(vars: &[&str], exps: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn random_exponents(rng: &mut ChaCha8Rng, n: usize, lo: u32, hi: u32) -> Vec<u32> {
    loop {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=hi)).collect();
        let d: u32 = e.iter().sum();
        if d >= lo && d <= hi {
            return e;
        }
    }
}

/// Proper monomial ideal in the first `n` variables, generators of degree in `[lo, hi]`.
pub fn random_monomial_ideal(rng: &mut ChaCha8Rng, r: &Arc<AmbientRing>, n: usize, lo: u32, hi: u32) -> Ideal {
    let k = rng.gen_range(1..=3);
    let gens: Vec<String> = (0..k)
        .map(|_| monomial_text(&VARS[..n], &random_exponents(rng, n, lo.max(1), hi)))
        .collect();
    ideal(r, &gens.join(", "))
}

/// Like `random_monomial_ideal` but always contains a pure power of every variable.
pub fn random_primary_monomial_ideal(rng: &mut ChaCha8Rng, r: &Arc<AmbientRing>, n: usize, hi: u32) -> Ideal {
    let mut gens: Vec<String> = (0..n)
        .map(|i| format!("{}^{}", VARS[i], rng.gen_range(2..=hi)))
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        gens.push(monomial_text(&VARS[..n], &random_exponents(rng, n, 2, hi)));
    }
    ideal(r, &gens.join(", "))
}

/// A monomial ideal plus one binomial `u - v` with coprime-ish random monomials.
pub fn random_binomial_ideal(rng: &mut ChaCha8Rng, r: &Arc<AmbientRing>, n: usize, hi: u32) -> Ideal {
    let mut gens: Vec<String> = Vec::new();
    for _ in 0..rng.gen_range(1..=2) {
        gens.push(monomial_text(&VARS[..n], &random_exponents(rng, n, 2, hi)));
    }
    let u = monomial_text(&VARS[..n], &random_exponents(rng, n, 1, hi));
    let v = monomial_text(&VARS[..n], &random_exponents(rng, n, 1, hi));
    if u != v {
        gens.push(format!("{u} - {v}"));
    }
    ideal(r, &gens.join(", "))
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn rational(c: &Scalar) -> BigRational {
    match c {
        Scalar::Rational(q) => q.clone(),
        Scalar::Prime { residue, .. } => BigRational::from_integer((*residue).into()),
    }
}

pub fn coefficients(f: &Polynomial) -> BTreeMap<Vec<u32>, BigRational> {
    f.terms()
        .iter()
        .map(|t| (t.mono.exponents().to_vec(), rational(&t.coeff)))
        .collect()
}

/// Rank of a family of sparse vectors over ℚ by Gaussian elimination.
pub fn rank<K: Ord + Clone>(vectors: &[BTreeMap<K, BigRational>]) -> usize {
    let mut pivots: Vec<(K, BTreeMap<K, BigRational>)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (key, row) in &pivots {
            if let Some(c) = v.get(key).cloned() {
                for (k, x) in row {
                    let e = v.entry(k.clone()).or_insert_with(BigRational::zero);
                    *e -= &c * x;
                }
                v.retain(|_, x| !x.is_zero());
            }
        }
        if let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            for x in v.values_mut() {
                *x /= &c;
            }
            pivots.push((k, v));
        }
    }
    pivots.len()
}

/// Degree-`d` part of a homogeneous ideal, spanned by monomial multiples of its generators.
pub fn graded_piece(gens: &[Polynomial], n: usize, d: u32) -> Vec<BTreeMap<Vec<u32>, BigRational>> {
    let mut out = Vec::new();
    for g in gens {
        let Some(dg) = g.total_degree() else { continue };
        if dg as u32 > d {
            continue;
        }
        for m in exponents_of_degree(n, d - dg as u32) {
            let shifted = coefficients(g)
                .into_iter()
                .map(|(e, c)| (e.iter().zip(&m).map(|(a, b)| a + b).collect(), c))
                .collect();
            out.push(shifted);
        }
    }
    out
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens`, by linear algebra only.
pub fn linear_algebra_member(f: &Polynomial, gens: &[Polynomial], n: usize) -> bool {
    if f.is_zero() {
        return true;
    }
    let d = f.total_degree().unwrap() as u32;
    let mut piece = graded_piece(gens, n, d);
    let r = rank(&piece);
    piece.push(coefficients(f));
    rank(&piece) == r
}
