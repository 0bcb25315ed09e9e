//! Closure operations: integral closure of monomial ideals, symbolic powers of
//! primes of dimension one, Frobenius closure membership.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ideals::monomial::{minimal_monomials, monomial_generators};
use crate::ideals::Ideal;
use crate::poly::{Monomial, Polynomial};

/// Default largest Frobenius exponent `e` tried in membership searches.
pub const DEFAULT_E_MAX: u32 = 4;

/// `conv(exponents) + R^n_{≥0}`, described by inequalities `a·v ≥ b` with `a ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonRegion {
    pub points: Vec<Vec<i64>>,
    pub facets: Vec<(Vec<i64>, i64)>,
}

/// Determinant of a small integer matrix by fraction-free elimination.
fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Vector orthogonal to the `n - 1` given vectors in `Z^n` (generalised cross product).
fn normal_vector(rows: &[Vec<i64>], n: usize) -> Vec<i64> {
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, &v)| v as i128)
                        .collect()
                })
                .collect();
            let d = int_det(minor);
            let signed = if c % 2 == 0 { d } else { -d };
            signed as i64
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl NewtonRegion {
    /// Facets are found among hyperplanes through `k ≥ 1` generator points and
    /// parallel to `n - k` coordinate rays: every facet of the region contains a
    /// vertex and is spanned by vertices and recession directions it contains.
    pub fn new(points: Vec<Vec<i64>>) -> NewtonRegion {
        let n = points.first().map_or(0, |p| p.len());
        let mut facets: Vec<(Vec<i64>, i64)> = Vec::new();
        for k in 1..=n.min(points.len()) {
            for pts in combinations(points.len(), k) {
                for rays in combinations(n, n - k) {
                    let base = &points[pts[0]];
                    let mut dirs: Vec<Vec<i64>> = pts[1..]
                        .iter()
                        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                        .collect();
                    for &r in &rays {
                        let mut e = vec![0; n];
                        e[r] = 1;
                        dirs.push(e);
                    }
                    let mut a = normal_vector(&dirs, n);
                    if a.iter().all(|&v| v == 0) {
                        continue;
                    }
                    if a.iter().any(|&v| v > 0) && a.iter().any(|&v| v < 0) {
                        continue;
                    }
                    if a.iter().all(|&v| v <= 0) {
                        a.iter_mut().for_each(|v| *v = -*v);
                    }
                    let g = a.iter().fold(0i64, |acc, &v| acc.gcd(&v));
                    a.iter_mut().for_each(|v| *v /= g);
                    let b: i64 = a.iter().zip(base).map(|(x, y)| x * y).sum();
                    let valid = points
                        .iter()
                        .all(|p| a.iter().zip(p).map(|(x, y)| x * y).sum::<i64>() >= b);
                    if valid && !facets.iter().any(|f| f.0 == a && f.1 == b) {
                        facets.push((a, b));
                    }
                }
            }
        }
        facets.sort();
        NewtonRegion { points, facets }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.iter().all(|&x| x >= 0)
            && self
                .facets
                .iter()
                .all(|(a, b)| a.iter().zip(v).map(|(x, y)| x * y).sum::<i64>() >= *b)
    }
}

fn exponents_i64(m: &Monomial) -> Vec<i64> {
    m.exponents().iter().map(|&e| i64::from(e)).collect()
}

fn region_of(ideal: &Ideal) -> Result<(NewtonRegion, Vec<Monomial>)> {
    let gens = monomial_generators(ideal)?;
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok((NewtonRegion::new(gens.iter().map(exponents_i64).collect()), gens))
}

/// Whether the monomial `f` lies in the integral closure of the monomial ideal `I`.
pub fn integral_closure_contains(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if !f.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let (region, _) = region_of(ideal)?;
    Ok(region.contains(&exponents_i64(f.lead_monomial().unwrap())))
}

/// Integral closure of a monomial ideal. Minimal generators lie in the box
/// `[0, M_1] × … × [0, M_n]`, `M_i` the largest `i`-th exponent of a generator:
/// a point of the region with `v_i > M_i` stays in the region after lowering `v_i`.
pub fn integral_closure_monomial(ideal: &Ideal) -> Result<Ideal> {
    let (region, gens) = region_of(ideal)?;
    let n = ideal.poly_ring().nvars();
    let bounds: Vec<u32> = (0..n)
        .map(|i| gens.iter().map(|g| g.exponents()[i]).max().unwrap_or(0))
        .collect();
    let mut found = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let v: Vec<i64> = cur.iter().map(|&e| i64::from(e)).collect();
        if region.contains(&v) {
            found.push(Monomial::from_exponents(&cur));
        }
        let mut i = 0;
        loop {
            if i == n {
                let poly = ideal.poly_ring();
                let gens = minimal_monomials(found)
                    .into_iter()
                    .map(|m| poly.monomial(m))
                    .collect();
                return Ideal::new(ideal.ring(), gens);
            }
            if cur[i] < bounds[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// `P^(n)` as `(P^n : m^∞)`, valid for primes with `dim R/P = 1`.
pub fn symbolic_power_dim1(prime: &Ideal, n: u32) -> Result<Ideal> {
    if !prime.ring().is_polynomial() {
        return Err(Error::QuotientNotSupported);
    }
    let dim = prime.dim()?.ok_or(Error::UnitIdeal)?;
    if dim != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: dim,
        });
    }
    let power = prime.power(n)?;
    Ok(power.saturate(&prime.ring().maximal_ideal())?.0)
}

/// Least `e ≤ e_max` with `f^{p^e} ∈ I^{[p^e]}`, if any.
pub fn frobenius_power_membership(f: &Polynomial, ideal: &Ideal, e_max: u32) -> Result<Option<u32>> {
    let p = ideal.ring().field().characteristic();
    if p == 0 {
        return Err(Error::NotPrimeCharacteristic);
    }
    let mut q = 1u64;
    for e in 0..=e_max {
        let bracket = ideal.frobenius_power(q)?;
        if bracket.contains(&f.pow(q))? {
            return Ok(Some(e));
        }
        q *= p;
    }
    Ok(None)
}
