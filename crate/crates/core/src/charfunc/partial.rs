//! Characteristic functions of partial Dyck paths.

use std::collections::{BTreeSet, HashMap};

use super::{attacks_equal, cell_pairs, check_cap, chi, inversions, m_basis, next_word};
use crate::combinat::partitions_up_to;
use crate::dpa::{VkElement, YExp};
use crate::dyck::{CellSet, DyckPath, PartialDyckPath};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Rational, Var};
use crate::symfunc::SymFunc;

fn check_sigma(pi: &PartialDyckPath, sigma: &[u32]) -> Result<()> {
    if sigma.len() != pi.k() {
        return Err(Error::LengthMismatch { expected: pi.k(), got: sigma.len() });
    }
    let distinct: BTreeSet<u32> = sigma.iter().copied().collect();
    if distinct.len() != sigma.len() || distinct.contains(&0) {
        return Err(Error::SigmaNotDistinct(sigma.iter().map(|&s| s as usize).collect()));
    }
    Ok(())
}

/// `chi'_sigma(pi) = sum_w q^{inv(pi,w)} z_w` over words on `N^k pi` with `w_i = sigma_i`
/// for `i <= k` and no equal letters on an area cell.
///
/// Letters up to `K = max(sigma)` are read as `y_1..y_K` (`Var::Y` in the coefficients);
/// larger letters form the symmetric `x`-part, returned in the monomial basis.
pub fn chi_sigma_prime(pi: &PartialDyckPath, sigma: &[u32]) -> Result<SymFunc> {
    check_sigma(pi, sigma)?;
    let full = pi.full();
    let n = full.size();
    check_cap(n)?;
    let k = pi.k();
    let big_k = sigma.iter().copied().max().unwrap_or(0);
    let cells = cell_pairs(&full.area_set());
    let free = n - k;
    let mut out = Vec::new();
    for lam in partitions_up_to(free as u32) {
        let alphabet = big_k + lam.len() as u32;
        let mut c = LaurentMPoly::zero();
        if alphabet == 0 {
            if free == 0 && !attacks_equal(&cells, sigma) {
                c = LaurentMPoly::q_pow(inversions(&cells, sigma) as i32);
            }
            out.push((lam, c));
            continue;
        }
        let mut w: Vec<u32> = sigma.to_vec();
        w.resize(n, 1);
        loop {
            let mut content = vec![0u32; lam.len()];
            for &l in &w[k..] {
                if l > big_k {
                    content[(l - big_k - 1) as usize] += 1;
                }
            }
            if content == lam.parts() && !attacks_equal(&cells, &w) {
                let mono: Vec<(Var, i32)> = {
                    let mut e = vec![0i32; big_k as usize];
                    for &l in &w {
                        if l <= big_k {
                            e[l as usize - 1] += 1;
                        }
                    }
                    e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, &x)| (Var::Y(i as u16 + 1), x)).collect()
                };
                c += &LaurentMPoly::monomial(&mono, Rational::from_int(1)).mul_monomial(&[(Var::Q, inversions(&cells, &w) as i32)]);
            }
            if !next_word(&mut w[k..], alphabet) {
                break;
            }
        }
        out.push((lam, c));
    }
    Ok(m_basis(out))
}

/// `chi_k(pi) in V_k`, the normalized `chi'_{Id_k}`:
/// `chi_k = sum_{S >= [k], w^S} q^A (q-1)^{|S|-k} chi(pi_S) prod_{i in S\[k]} y_{w_i}`,
/// where `w^S` labels the positions in `S` by `1..k` (with `w_i = i` for `i <= k`) and no
/// equal labels on an area cell, `A` counts area cells inside `S` that are inversions
/// plus area cells `(i,j)` with `i` outside `S` and `j` inside, and `pi_S` is the path
/// carried by the positions outside `S`.
pub fn chi_k(pi: &PartialDyckPath) -> Result<VkElement> {
    let full = pi.full();
    let n = full.size();
    check_cap(n)?;
    let k = pi.k();
    let cells = cell_pairs(&full.area_set());
    let mut cache: HashMap<Vec<usize>, SymFunc> = HashMap::new();
    let mut out = VkElement::zero(k);
    let q1 = LaurentMPoly::q() - LaurentMPoly::one();
    let rest: Vec<usize> = (k..n).collect();
    for mask in 0u64..1 << rest.len() {
        let extra: Vec<usize> = rest.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
        if k == 0 && !extra.is_empty() {
            continue;
        }
        let mut in_s = vec![false; n];
        for p in (0..k).chain(extra.iter().copied()) {
            in_s[p] = true;
        }
        let outside: Vec<usize> = (0..n).filter(|&p| !in_s[p]).collect();
        let restricted = match cache.get(&outside) {
            Some(f) => f.clone(),
            None => {
                let f = chi(&restrict(&full, &outside)?)?;
                cache.insert(outside.clone(), f.clone());
                f
            }
        };
        let mut labels: Vec<u32> = (0..n as u32).map(|i| if (i as usize) < k { i + 1 } else { 0 }).collect();
        let mut idx = vec![1u32; extra.len()];
        loop {
            for (e, &p) in extra.iter().enumerate() {
                labels[p] = idx[e];
            }
            let valid = cells.iter().all(|&(i, j)| !(in_s[i] && in_s[j] && labels[i] == labels[j]));
            if valid {
                let a = cells
                    .iter()
                    .filter(|&&(i, j)| (in_s[i] && in_s[j] && labels[i] > labels[j]) || (!in_s[i] && in_s[j]))
                    .count();
                let mut y = YExp::from_elem(0, k);
                for &p in &extra {
                    y[labels[p] as usize - 1] += 1;
                }
                let coeff = q1.pow(extra.len() as u32).mul_monomial(&[(Var::Q, a as i32)]);
                out.add_term(y, restricted.scale(&coeff));
            }
            if !next_word(&mut idx, k as u32) {
                break;
            }
        }
    }
    Ok(out)
}

/// The path whose area cells are those of `full` between the given positions, relabelled.
fn restrict(full: &DyckPath, positions: &[usize]) -> Result<DyckPath> {
    let index: HashMap<usize, usize> = positions.iter().enumerate().map(|(r, &p)| (p + 1, r + 1)).collect();
    let cells: CellSet = full
        .area_set()
        .into_iter()
        .filter_map(|(i, j)| Some((*index.get(&i)?, *index.get(&j)?)))
        .collect();
    DyckPath::from_area_set(positions.len(), &cells)
}
