//! Fraction-free Gaussian elimination over Laurent polynomial rings.

use super::fraction::RingFraction;
use super::laurent::LaurentMPoly;
use crate::error::{Error, Result};

/// Solution of `M X = B` for several right-hand sides, as numerators over a
/// common denominator: `X[c][i] = numerators[c][i] / denominator`.
#[derive(Clone, Debug)]
pub struct SharedSolution {
    pub numerators: Vec<Vec<LaurentMPoly>>,
    pub denominator: LaurentMPoly,
}

impl SharedSolution {
    pub fn fractions(&self, col: usize) -> Vec<RingFraction> {
        self.numerators[col]
            .iter()
            .map(|n| RingFraction { num: n.clone(), den: self.denominator.clone() })
            .collect()
    }
}

fn eliminate(m: &[Vec<LaurentMPoly>], rhs: &[Vec<LaurentMPoly>]) -> Result<Vec<Vec<LaurentMPoly>>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::SizeMismatch("matrix must be square".into()));
    }
    if rhs.iter().any(|c| c.len() != n) {
        return Err(Error::SizeMismatch("right-hand side length".into()));
    }
    let ncols = n + rhs.len();
    let mut a: Vec<Vec<LaurentMPoly>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            row.extend(rhs.iter().map(|c| c[i].clone()));
            row
        })
        .collect();
    let mut prev = LaurentMPoly::one();
    for k in 0..n {
        let p = (k..n)
            .filter(|&p| !a[p][k].is_zero())
            .min_by_key(|&p| a[p][k].len())
            .ok_or(Error::SingularMatrix)?;
        a.swap(k, p);
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let f = std::mem::take(&mut row[k]);
            for j in (k + 1)..ncols {
                let mut v = &pivot_row[k] * &row[j];
                if !f.is_zero() && !pivot_row[j].is_zero() {
                    v = v - &f * &pivot_row[j];
                }
                row[j] = v.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(a)
}

/// Solves `M x = b` for every column `b` of `rhs`, returning numerators over
/// the last Bareiss pivot (the determinant up to sign).
pub fn bareiss_solve_multi(m: &[Vec<LaurentMPoly>], rhs: &[Vec<LaurentMPoly>]) -> Result<SharedSolution> {
    let n = m.len();
    let a = eliminate(m, rhs)?;
    let denominator = if n == 0 { LaurentMPoly::one() } else { a[n - 1][n - 1].clone() };
    let mut numerators = Vec::with_capacity(rhs.len());
    for c in 0..rhs.len() {
        let col = n + c;
        let mut x = vec![LaurentMPoly::zero(); n];
        for i in (0..n).rev() {
            let mut acc = &denominator * &a[i][col];
            for j in (i + 1)..n {
                if !a[i][j].is_zero() && !x[j].is_zero() {
                    acc = acc - &a[i][j] * &x[j];
                }
            }
            x[i] = acc.exact_div(&a[i][i])?;
        }
        numerators.push(x);
    }
    Ok(SharedSolution { numerators, denominator })
}

/// Solves `M x = rhs` exactly; each entry's denominator divides `det M`.
pub fn bareiss_solve(m: &[Vec<LaurentMPoly>], rhs: &[LaurentMPoly]) -> Result<Vec<RingFraction>> {
    let sol = bareiss_solve_multi(m, &[rhs.to_vec()])?;
    Ok(sol.fractions(0))
}

/// Determinant by fraction-free elimination (zero for singular input).
pub fn determinant(m: &[Vec<LaurentMPoly>]) -> Result<LaurentMPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LaurentMPoly::one());
    }
    // Track the sign of row swaps by redoing the pivot search.
    let mut a: Vec<Vec<LaurentMPoly>> = m.to_vec();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::SizeMismatch("matrix must be square".into()));
    }
    let mut prev = LaurentMPoly::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&p| !a[p][k].is_zero()) else {
            return Ok(LaurentMPoly::zero());
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in (k + 1)..n {
            let f = a[i][k].clone();
            for j in (k + 1)..n {
                let v = &a[k][k] * &a[i][j] - &f * &a[k][j];
                a[i][j] = v.exact_div(&prev)?;
            }
            a[i][k] = LaurentMPoly::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(if negate { -&a[n - 1][n - 1] } else { a[n - 1][n - 1].clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::laurent::poly;

    fn mat(rows: &[&[&str]]) -> Vec<Vec<LaurentMPoly>> {
        rows.iter().map(|r| r.iter().map(|s| poly(s)).collect()).collect()
    }

    #[test]
    fn identity_returns_rhs() {
        let m = mat(&[&["1", "0"], &["0", "1"]]);
        let rhs = vec![poly("q+t"), poly("3")];
        let x = bareiss_solve(&m, &rhs).unwrap();
        assert_eq!(x[0].to_poly().unwrap(), rhs[0]);
        assert_eq!(x[1].to_poly().unwrap(), rhs[1]);
    }

    #[test]
    fn one_by_one() {
        let x = bareiss_solve(&mat(&[&["q-1"]]), &[poly("q^2-1")]).unwrap();
        assert_eq!(x[0].to_poly().unwrap(), poly("q+1"));
    }

    #[test]
    fn two_by_two_macdonald_pattern() {
        // Columns are H_2 = s2 + q s11 and H_11 = s2 + t s11 in the s-basis.
        // Solving for s11 = c2 H_2 + c11 H_11 gives c2 = 1/(q-t), c11 = -1/(q-t).
        let m = mat(&[&["1", "1"], &["q", "t"]]);
        let x = bareiss_solve(&m, &[poly("0"), poly("1")]).unwrap();
        assert_eq!(x[0], RingFraction::new(poly("1"), poly("q-t")).unwrap());
        assert_eq!(x[1], RingFraction::new(poly("-1"), poly("q-t")).unwrap());
    }

    #[test]
    fn singular_is_reported() {
        let m = mat(&[&["q", "q^2"], &["1", "q"]]);
        assert!(matches!(bareiss_solve(&m, &[poly("1"), poly("1")]), Err(Error::SingularMatrix)));
        assert!(determinant(&m).unwrap().is_zero());
    }

    #[test]
    fn determinant_with_swap() {
        let m = mat(&[&["0", "1"], &["1", "0"]]);
        assert_eq!(determinant(&m).unwrap(), poly("-1"));
        let m = mat(&[&["q", "1", "0"], &["t", "q", "1"], &["0", "t", "q"]]);
        assert_eq!(determinant(&m).unwrap(), poly("q^3 - 2*q*t"));
    }
}
