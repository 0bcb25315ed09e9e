use crate::error::Result;
use crate::poly::{PolyRing, Polynomial};
use std::sync::Arc;

/// Determinant of a square matrix of polynomials; cofactor expansion for
/// tiny sizes, fraction-free Bareiss elimination otherwise.
pub fn determinant(ring: &Arc<PolyRing>, m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    match n {
        0 => Ok(ring.one()),
        1 => Ok(m[0][0].clone()),
        2 => Ok(&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])),
        _ => bareiss(ring, m.to_vec()),
    }
}

fn bareiss(ring: &Arc<PolyRing>, mut a: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = a.len();
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn cofactor(ring: &Arc<PolyRing>, m: &[Vec<Polynomial>]) -> Polynomial {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        let mut acc = ring.zero();
        for c in 0..m.len() {
            let minor: Vec<Vec<Polynomial>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let t = &m[0][c] * &cofactor(ring, &minor);
            acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let r = PolyRing::grevlex(&["x", "y", "z"], Field::Rational);
        let rows = [
            ["0", "x", "y", "1"],
            ["x", "y^2", "z", "2"],
            ["z", "x*y", "0", "x"],
            ["1", "y", "z^2", "x + y"],
        ];
        let m: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| row.iter().map(|t| r.parse(t).unwrap()).collect())
            .collect();
        assert_eq!(determinant(&r, &m).unwrap(), cofactor(&r, &m));
        let three: Vec<Vec<Polynomial>> = m[..3].iter().map(|row| row[..3].to_vec()).collect();
        assert_eq!(determinant(&r, &three).unwrap(), cofactor(&r, &three));
    }
}
