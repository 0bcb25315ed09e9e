//! The higher divisorial ideal `D(I) = Ann(Ext^g(R/I, R))`, `g = grade(I)`.
//!
//! The colon route computes `(x̲ : (x̲ : I))` for a maximal regular sequence
//! `x̲ ⊆ I`; the Ext route computes the annihilator from a free resolution.

use crate::error::{Error, Result};
use crate::homology::ext_annihilator;
use crate::ideals::monomial::{monomial_generators, unmixed_part};
use crate::ideals::{regular_sequence, Ideal};
use crate::poly::Polynomial;
use crate::report::{CheckReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    ColonFormula,
    ExtAnnihilator,
}

#[derive(Clone, Debug)]
pub struct DivisorialResult {
    pub input: Ideal,
    pub grade: usize,
    pub sequence: Vec<Polynomial>,
    pub d: Ideal,
    pub route: Route,
    /// Set when both routes ran: whether they produced the same ideal.
    pub agreement: Option<bool>,
}

fn check_proper_nonzero(ideal: &Ideal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// `D(I)` by the colon formula; works in quotient rings.
pub fn divisorial(ideal: &Ideal) -> Result<DivisorialResult> {
    check_proper_nonzero(ideal)?;
    let seq = regular_sequence(ideal)?;
    let inner = seq.ideal.colon(ideal)?;
    let d = seq.ideal.colon(&inner)?;
    Ok(DivisorialResult {
        input: ideal.clone(),
        grade: seq.len(),
        sequence: seq.elements,
        d,
        route: Route::ColonFormula,
        agreement: None,
    })
}

/// `D(I)` as the annihilator of `Ext^g(R/I, R)`.
pub fn divisorial_via_ext(ideal: &Ideal) -> Result<DivisorialResult> {
    check_proper_nonzero(ideal)?;
    let seq = regular_sequence(ideal)?;
    let d = ext_annihilator(ideal, seq.len())?;
    Ok(DivisorialResult {
        input: ideal.clone(),
        grade: seq.len(),
        sequence: seq.elements,
        d,
        route: Route::ExtAnnihilator,
        agreement: None,
    })
}

/// Runs both routes; the returned ideal is the colon-route one.
pub fn divisorial_both(ideal: &Ideal) -> Result<DivisorialResult> {
    let mut colon = divisorial(ideal)?;
    let ext = ext_annihilator(ideal, colon.grade)?;
    colon.agreement = Some(ext.equals(&colon.d)?);
    Ok(colon)
}

/// The chain `D(I), D²(I), …, Dⁿ(I)` and the first index `k` with `D^{k+1}(I) = D^k(I)`.
pub fn iterate_divisorial(ideal: &Ideal, n: usize) -> Result<(Vec<Ideal>, Option<usize>)> {
    let mut chain: Vec<Ideal> = Vec::with_capacity(n);
    let mut stable = None;
    let mut cur = ideal.clone();
    for k in 1..=n {
        let next = divisorial(&cur)?.d;
        if stable.is_none() && k > 1 && next.equals(&cur)? {
            stable = Some(k - 1);
        }
        chain.push(next.clone());
        cur = next;
    }
    Ok((chain, stable))
}

/// `I**` for an ideal of grade one.
pub fn reflexive_closure_grade1(ideal: &Ideal) -> Result<Ideal> {
    let res = divisorial(ideal)?;
    if res.grade != 1 {
        return Err(Error::GradeMismatch {
            expected: 1,
            found: res.grade,
        });
    }
    Ok(res.d)
}

/// `I ⊆ D` and every generator of `D` lies in `rad(I)`.
pub fn sandwich_holds(ideal: &Ideal, d: &Ideal) -> Result<bool> {
    if !ideal.is_subset(d)? {
        return Ok(false);
    }
    for g in d.gens() {
        if !ideal.radical_contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(I) = D(I^unm)` and `I^unm ⊆ D(I) ⊆ rad(I)` for a monomial ideal.
pub fn check_unmixed_equality(ideal: &Ideal) -> Result<CheckReport> {
    let gens = monomial_generators(ideal)?;
    let poly = ideal.poly_ring();
    let unm = Ideal::new(
        ideal.ring(),
        unmixed_part(&gens)?.into_iter().map(|m| poly.monomial(m)).collect(),
    )?;
    let d = divisorial(ideal)?.d;
    let d_unm = divisorial(&unm)?.d;
    let equal = d.equals(&d_unm)?;
    let lower = unm.is_subset(&d)?;
    let upper = sandwich_holds(ideal, &d)?;
    Ok(CheckReport::new("unmixed_equality", Verdict::from_bool(equal && lower && upper))
        .with("unmixed", &unm)
        .with("D", &d)
        .with("D_unmixed", &d_unm))
}

/// `Ann(Ext^{d-1}(R/I, R)) = (I : m^∞)` when `dim R/I = 1`, `d` the number of variables.
pub fn check_saturation_identity(ideal: &Ideal) -> Result<CheckReport> {
    if !ideal.ring().is_polynomial() {
        return Err(Error::QuotientNotSupported);
    }
    let dim = ideal.dim()?.ok_or(Error::UnitIdeal)?;
    if dim != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: dim,
        });
    }
    let n = ideal.poly_ring().nvars();
    let ann = ext_annihilator(ideal, n - 1)?;
    let (sat, _) = ideal.saturate(&ideal.ring().maximal_ideal())?;
    Ok(CheckReport::new("saturation_identity", Verdict::from_bool(ann.equals(&sat)?))
        .with("ann_ext", &ann)
        .with("saturation", &sat))
}
