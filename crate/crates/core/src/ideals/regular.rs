//! Maximal regular sequences inside an ideal, found by search and certified
//! by colon computations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Ideal;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Random candidates tried per step after the structured ones.
const RANDOM_CANDIDATES: usize = 64;

/// A maximal regular sequence `x̲` in `I` together with the ideal `(x̲)`.
#[derive(Clone, Debug)]
pub struct RegularSequence {
    pub elements: Vec<Polynomial>,
    pub ideal: Ideal,
}

impl RegularSequence {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> crate::arith::Scalar {
    match field {
        Field::Rational => {
            let v = rng.gen_range(1..=7i64);
            field.from_i64(if rng.gen_bool(0.5) { v } else { -v })
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(1..p) as i64),
    }
}

fn candidates(ideal: &Ideal, step: usize) -> Vec<Polynomial> {
    let poly = ideal.poly_ring();
    let mut gens: Vec<Polynomial> = ideal.gens().to_vec();
    gens.sort_by_key(|g| (g.total_degree(), g.terms().len()));
    let mut out = gens.clone();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            out.push(&gens[i] + &gens[j]);
        }
    }
    let seed = poly.config().seed ^ (step as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = poly.nvars();
    for _ in 0..RANDOM_CANDIDATES {
        let mut f = poly.zero();
        for g in &gens {
            if rng.gen_bool(0.25) {
                continue;
            }
            let c = random_scalar(poly.field(), &mut rng);
            let m = if n > 0 && rng.gen_bool(0.3) {
                Monomial::var(n, rng.gen_range(0..n), 1)
            } else {
                Monomial::one(n)
            };
            f = &f + &g.mul_term(&c, &m);
        }
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

/// A maximal regular sequence in `I`. Maximality is certified by
/// `((x̲) : I) != (x̲)`, so an exhausted search is reported as an error and
/// never mistaken for a shorter grade.
pub fn regular_sequence(ideal: &Ideal) -> Result<RegularSequence> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let ring = ideal.ring();
    let mut elements: Vec<Polynomial> = Vec::new();
    let mut current = ring.zero_ideal();
    loop {
        if !ideal.is_subset(&current)? && current.colon(ideal)?.equals(&current)? {
            let mut found = None;
            for cand in candidates(ideal, elements.len()) {
                if current.contains(&cand)? {
                    continue;
                }
                if current.colon_element(&cand)?.equals(&current)? {
                    found = Some(cand);
                    break;
                }
            }
            match found {
                Some(f) => {
                    elements.push(f.clone());
                    let mut gens = current.gens().to_vec();
                    gens.push(f);
                    current = Ideal::new(ring, gens)?;
                }
                None => {
                    return Err(Error::RegularSequenceSearchExhausted {
                        partial: elements.iter().map(|e| e.to_string()).collect(),
                    })
                }
            }
        } else {
            return Ok(RegularSequence {
                elements,
                ideal: current,
            });
        }
    }
}

/// `grade(I)`, the common length of maximal regular sequences in `I`.
pub fn grade(ideal: &Ideal) -> Result<usize> {
    Ok(regular_sequence(ideal)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::AmbientRing;
    use crate::poly::{parse_generator_list, PolyRing};

    #[test]
    fn grade_matches_height_in_polynomial_ring() {
        let r = AmbientRing::polynomial(PolyRing::grevlex(&["x", "y", "z"], Field::Rational));
        for (text, h) in [("x, y", 2), ("x*y, x*z", 1), ("x, y, z", 3), ("x^2, y^2, x*y*z", 2)] {
            let i = r.parse_ideal(text).unwrap();
            assert_eq!(grade(&i).unwrap(), h, "{text}");
            assert_eq!(i.height().unwrap(), Some(h));
        }
    }

    #[test]
    fn depth_zero_quotient() {
        // Every element of (x, y) kills something; z does not.
        let poly = PolyRing::grevlex(&["x", "y", "z"], Field::Rational);
        let rels = parse_generator_list("x^2, x*y", &poly).unwrap();
        let r = AmbientRing::quotient(poly, rels).unwrap();
        assert_eq!(grade(&r.parse_ideal("x, y").unwrap()).unwrap(), 0);
        assert_eq!(grade(&r.parse_ideal("y").unwrap()).unwrap(), 0);
        assert_eq!(grade(&r.parse_ideal("z").unwrap()).unwrap(), 1);
        assert_eq!(grade(&r.maximal_ideal()).unwrap(), 1);
    }

    #[test]
    fn unit_ideal_has_no_grade() {
        let r = AmbientRing::polynomial(PolyRing::grevlex(&["x"], Field::Rational));
        assert_eq!(grade(&r.unit_ideal()), Err(Error::UnitIdeal));
    }
}
