//! Matrices over an ambient ring, free resolutions, Ext modules, annihilators
//! and Fitting ideals. Modules are finitely presented as cokernels.

mod det;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{syzygies, Vector};
use crate::ideals::{AmbientRing, Ideal};
use crate::poly::{same_ring, Polynomial};

pub use det::determinant;

/// A map `R^cols -> R^rows`; column `j` is the image of the `j`-th basis vector.
#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Arc<AmbientRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Matrix {
    pub fn new(ring: &Arc<AmbientRing>, entries: Vec<Vec<Polynomial>>, cols: usize) -> Result<Matrix> {
        let rows = entries.len();
        let mut reduced = Vec::with_capacity(rows);
        for row in entries {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            let mut r = Vec::with_capacity(cols);
            for e in row {
                if !same_ring(e.ring(), ring.poly()) {
                    return Err(Error::RingMismatch);
                }
                r.push(ring.normal_form(&e)?);
            }
            reduced.push(r);
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: reduced,
        })
    }

    pub fn zero(ring: &Arc<AmbientRing>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![vec![ring.poly().zero(); cols]; rows],
        }
    }

    pub fn from_columns(ring: &Arc<AmbientRing>, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Matrix> {
        let cols = columns.len();
        let mut entries = vec![Vec::with_capacity(cols); rows];
        for c in columns {
            if c.len() != rows {
                return Err(Error::Shape(format!("column of length {} for {rows} rows", c.len())));
            }
            for (r, e) in c.into_iter().enumerate() {
                entries[r].push(e);
            }
        }
        Matrix::new(ring, entries, cols)
    }

    /// The `1 x k` matrix of generators, presenting `R/I`.
    pub fn generator_row(ideal: &Ideal) -> Matrix {
        let gens = ideal.gens().to_vec();
        let cols = gens.len();
        Matrix::new(ideal.ring(), vec![gens], cols).expect("generators live in the ring")
    }

    /// Parses `[a, b; c, d]`: rows separated by `;`, entries by `,`.
    pub fn parse(ring: &Arc<AmbientRing>, text: &str) -> Result<Matrix> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::syntax(0, "matrix must be written as [a, b; c, d]"))?;
        let mut entries = Vec::new();
        let mut cols = None;
        for row in inner.split(';') {
            let parsed = row
                .split(',')
                .map(|e| ring.parse_poly(e))
                .collect::<Result<Vec<_>>>()?;
            match cols {
                None => cols = Some(parsed.len()),
                Some(c) if c != parsed.len() => {
                    return Err(Error::Shape("rows of different lengths".into()))
                }
                _ => {}
            }
            entries.push(parsed);
        }
        Matrix::new(ring, entries, cols.unwrap_or(0))
    }

    pub fn ring(&self) -> &Arc<AmbientRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|row| row[c].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let entries = (0..self.cols).map(|c| self.column(c)).collect();
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = vec![vec![self.ring.poly().zero(); other.cols]; self.rows];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                for k in 0..self.cols {
                    *e = &*e + &(&self.entries[i][k] * &other.entries[k][j]);
                }
            }
        }
        Matrix::new(&self.ring, entries, other.cols)
    }

    fn drop_row_col(&mut self, r: Option<usize>, c: Option<usize>) {
        if let Some(r) = r {
            self.entries.remove(r);
            self.rows -= 1;
        }
        if let Some(c) = c {
            for row in &mut self.entries {
                row.remove(c);
            }
            self.cols -= 1;
        }
    }

    fn unit_entry(&self) -> Option<(usize, usize)> {
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_unit() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Eliminates basis vector `r` of the target and `c` of the source using
    /// the unit entry at `(r, c)`.
    fn cancel(&mut self, r: usize, c: usize) -> Result<()> {
        let u = self.entries[r][c].lead_coeff().expect("unit").inv()?;
        let pivot_row = self.entries[r].clone();
        let pivot_col = self.column(c);
        for i in 0..self.rows {
            if i == r || pivot_col[i].is_zero() {
                continue;
            }
            let factor = pivot_col[i].scale(&u);
            for j in 0..self.cols {
                if j == c || pivot_row[j].is_zero() {
                    continue;
                }
                let v = &self.entries[i][j] - &(&factor * &pivot_row[j]);
                self.entries[i][j] = self.ring.normal_form(&v)?;
            }
        }
        self.drop_row_col(Some(r), Some(c));
        Ok(())
    }

    fn drop_zero_columns(&mut self) {
        let keep: Vec<usize> = (0..self.cols)
            .filter(|&c| self.entries.iter().any(|row| !row[c].is_zero()))
            .collect();
        if keep.len() == self.cols {
            return;
        }
        for row in &mut self.entries {
            *row = keep.iter().map(|&c| row[c].clone()).collect();
        }
        self.cols = keep.len();
    }

    /// A smaller presentation of the same cokernel: unit entries are used to
    /// eliminate generators and zero relations are dropped.
    pub fn pruned_presentation(&self) -> Result<Matrix> {
        let mut m = self.clone();
        m.drop_zero_columns();
        while let Some((r, c)) = m.unit_entry() {
            m.cancel(r, c)?;
            m.drop_zero_columns();
        }
        Ok(m)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// Generators of `ker(m)` as the columns of a matrix `R^k -> R^{m.cols()}`.
pub fn kernel(m: &Matrix) -> Result<Matrix> {
    let ring = m.ring();
    let poly = ring.poly();
    let mut vectors: Vec<Vector> = (0..m.cols())
        .map(|c| Vector::from_components(&m.column(c)))
        .collect();
    for rel in ring.relations() {
        for r in 0..m.rows() {
            vectors.push(Vector::from_poly_at(rel, r));
        }
    }
    let syz = syzygies(poly, &vectors, m.rows())?;
    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    for s in syz {
        let comps = s.restrict(0..m.cols()).to_components(poly, m.cols());
        let comps = comps
            .iter()
            .map(|c| ring.normal_form(c))
            .collect::<Result<Vec<_>>>()?;
        if comps.iter().any(|c| !c.is_zero()) && !columns.contains(&comps) {
            columns.push(comps);
        }
    }
    Matrix::from_columns(ring, m.cols(), columns)
}

/// Positive weights making every generator homogeneous, if a small search finds any.
fn grading_weights(polys: &[Polynomial], nvars: usize) -> Option<Vec<u32>> {
    let standard = vec![1; nvars];
    if polys.iter().all(|p| p.is_homogeneous_for(&standard)) {
        return Some(standard);
    }
    const MAX_WEIGHT: u32 = 6;
    if nvars == 0 || (MAX_WEIGHT as f64).powi(nvars as i32) > 60_000.0 {
        return None;
    }
    let mut w = vec![1u32; nvars];
    loop {
        if polys.iter().all(|p| p.is_homogeneous_for(&w)) {
            return Some(w);
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return None;
            }
            if w[i] < MAX_WEIGHT {
                w[i] += 1;
                break;
            }
            w[i] = 1;
            i += 1;
        }
    }
}

/// A free resolution `... -> F_2 -> F_1 -> F_0`, stored as the maps `d_1, d_2, ...`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub maps: Vec<Matrix>,
    /// Certified minimal: graded input and no unit entries left.
    pub minimal: bool,
    /// Weights witnessing the grading, when one was found.
    pub weights: Option<Vec<u32>>,
    /// True when the resolution stopped because its last kernel vanished.
    pub complete: bool,
}

impl Resolution {
    /// Ranks `b_0, b_1, ...`.
    pub fn betti(&self) -> Vec<usize> {
        let mut b = vec![self.maps.first().map_or(0, |m| m.rows())];
        b.extend(self.maps.iter().map(|m| m.cols()));
        while b.len() > 1 && *b.last().unwrap() == 0 {
            b.pop();
        }
        b
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn map(&self, i: usize) -> Option<&Matrix> {
        self.maps.get(i.checked_sub(1)?)
    }

    /// Index of the last nonzero map; trailing empty maps left by cancellation are skipped.
    pub fn length(&self) -> usize {
        self.maps.iter().rposition(|m| m.cols() > 0).map_or(0, |i| i + 1)
    }
}

/// Resolves `coker(presentation)` through homological degree `max_len`
/// (all the way when `None`; over a polynomial ring this always terminates).
pub fn resolve(presentation: &Matrix, max_len: Option<usize>) -> Result<Resolution> {
    let ring = presentation.ring().clone();
    if max_len.is_none() && !ring.is_polynomial() {
        return Err(Error::QuotientNotSupported);
    }
    let mut entries: Vec<Polynomial> = presentation.entries.iter().flatten().cloned().collect();
    entries.extend(ring.relations().iter().cloned());
    let weights = grading_weights(&entries, ring.poly().nvars());

    // One map past the requested length so that the last reported map is pruned too.
    let limit = max_len.map(|l| l + 1);
    let mut maps = vec![presentation.clone()];
    let mut complete = false;
    loop {
        if limit.is_some_and(|l| maps.len() >= l) {
            break;
        }
        let last = maps.last().unwrap();
        if last.cols() == 0 {
            complete = true;
            break;
        }
        let k = kernel(last)?;
        if k.cols() == 0 {
            complete = true;
            break;
        }
        maps.push(k);
    }

    // Gaussian cancellation of unit entries between consecutive maps.
    loop {
        let mut changed = false;
        for i in 0..maps.len() {
            if let Some((r, c)) = maps[i].unit_entry() {
                if i == 0 {
                    // A unit in the presentation removes a generator of the module.
                    maps[0].cancel(r, c)?;
                } else {
                    maps[i].cancel(r, c)?;
                    maps[i - 1].drop_row_col(None, Some(r));
                }
                if i + 1 < maps.len() {
                    maps[i + 1].drop_row_col(Some(c), None);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if let Some(l) = max_len {
        maps.truncate(l.max(1));
    }
    let minimal = weights.is_some()
        && maps.iter().all(|m| {
            m.entries
                .iter()
                .flatten()
                .all(|e| e.terms().iter().all(|t| !t.mono.is_one()))
        });
    Ok(Resolution {
        maps,
        minimal,
        weights,
        complete,
    })
}

/// Free resolution of `R/I`.
pub fn resolve_quotient(ideal: &Ideal, max_len: Option<usize>) -> Result<Resolution> {
    resolve(&Matrix::generator_row(ideal), max_len)
}

/// Presentation of `Ext^i(coker(presentation), R)`, pruned.
pub fn ext(presentation: &Matrix, i: usize) -> Result<Matrix> {
    let res = resolve(presentation, Some(i + 1))?;
    ext_from_resolution(&res, presentation.ring(), i)
}

/// `Ext^i(M, R)` read off a resolution of `M` that reaches degree `i + 1`.
pub fn ext_from_resolution(res: &Resolution, ring: &Arc<AmbientRing>, i: usize) -> Result<Matrix> {
    let betti = |j: usize| -> usize {
        if j == 0 {
            res.maps.first().map_or(0, |m| m.rows())
        } else {
            res.maps.get(j - 1).map_or(0, |m| m.cols())
        }
    };
    let bi = betti(i);
    if bi == 0 {
        return Ok(Matrix::zero(ring, 0, 0));
    }
    // Cocycles: kernel of d_{i+1}^T : R^{b_i} -> R^{b_{i+1}}.
    let cocycles = match res.maps.get(i) {
        Some(d) if d.cols() > 0 => kernel(&d.transpose())?,
        _ => identity(ring, bi),
    };
    let k = cocycles.cols();
    if k == 0 {
        return Ok(Matrix::zero(ring, 0, 0));
    }
    // Coboundaries: columns of d_i^T, i.e. rows of d_i.
    let mut columns: Vec<Vec<Polynomial>> = (0..k).map(|c| cocycles.column(c)).collect();
    if i > 0 {
        let d = &res.maps[i - 1];
        for r in 0..d.rows() {
            columns.push(d.entries[r].clone());
        }
    }
    let combined = Matrix::from_columns(ring, bi, columns)?;
    let rel = kernel(&combined)?;
    // Relations among the cocycle generators: the first k coordinates.
    let proj: Vec<Vec<Polynomial>> = (0..rel.cols())
        .map(|c| rel.column(c)[..k].to_vec())
        .filter(|c| c.iter().any(|e| !e.is_zero()))
        .collect();
    Matrix::from_columns(ring, k, proj)?.pruned_presentation()
}

fn identity(ring: &Arc<AmbientRing>, n: usize) -> Matrix {
    let poly = ring.poly();
    let entries = (0..n)
        .map(|r| (0..n).map(|c| if r == c { poly.one() } else { poly.zero() }).collect())
        .collect();
    Matrix {
        ring: ring.clone(),
        rows: n,
        cols: n,
        entries,
    }
}

/// `Ann(coker(presentation))`.
pub fn annihilator(presentation: &Matrix) -> Result<Ideal> {
    let ring = presentation.ring();
    let poly = ring.poly();
    let mut acc = ring.unit_ideal();
    for j in 0..presentation.rows() {
        // (im P : e_j) is the first coordinate of syz([e_j | P]).
        let mut unit = vec![poly.zero(); presentation.rows()];
        unit[j] = poly.one();
        let mut columns = vec![unit];
        columns.extend((0..presentation.cols()).map(|c| presentation.column(c)));
        let m = Matrix::from_columns(ring, presentation.rows(), columns)?;
        let k = kernel(&m)?;
        let gens: Vec<Polynomial> = (0..k.cols()).map(|c| k.get(0, c).clone()).collect();
        let colon = Ideal::new(ring, gens)?;
        acc = acc.intersect(&colon)?;
    }
    Ok(acc)
}

/// `Ann(Ext^i(R/I, R))`.
pub fn ext_annihilator(ideal: &Ideal, i: usize) -> Result<Ideal> {
    annihilator(&ext(&Matrix::generator_row(ideal), i)?)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Ideal of `s x s` minors.
pub fn minors(m: &Matrix, s: usize) -> Result<Ideal> {
    let ring = m.ring();
    if s == 0 {
        return Ok(ring.unit_ideal());
    }
    if s > m.rows() || s > m.cols() {
        return Ok(ring.zero_ideal());
    }
    let mut gens = Vec::new();
    for rs in subsets(m.rows(), s) {
        for cs in subsets(m.cols(), s) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m.entries[r][c].clone()).collect())
                .collect();
            gens.push(determinant(ring.poly(), &sub)?);
        }
    }
    Ideal::new(ring, gens)
}

/// `Fitt_j(coker(presentation))`: the ideal of `(rows - j)`-minors.
pub fn fitting_ideal(presentation: &Matrix, j: usize) -> Result<Ideal> {
    if j >= presentation.rows() {
        return Ok(presentation.ring().unit_ideal());
    }
    minors(presentation, presentation.rows() - j)
}

/// Presentation of the transpose `coker(P^T)`.
pub fn module_transpose(presentation: &Matrix) -> Matrix {
    presentation.transpose()
}
