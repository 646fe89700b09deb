//! Characteristic functions of Dyck paths and the combinatorial sides `D_alpha`.
//!
//! Every symmetric-function result is assembled in the monomial basis: the
//! coefficient of `m_lambda` is the word sum over the rearrangements of the
//! content `1^{lambda_1} 2^{lambda_2} ...`.

mod partial;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::combinat::{compact_words, partitions_of, permute_multiset, Composition, Partition};
use crate::dyck::{enumerate_paths, enumerate_paths_touch, CellSet, CornerWeight, DyckPath, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Rational, Var};
use crate::symfunc::{Basis, SymFunc};

pub use partial::{chi_k, chi_sigma_prime};

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > DEFAULT_CAP {
        return Err(Error::CapExceeded { n, cap: DEFAULT_CAP });
    }
    Ok(())
}

/// The letters `1^{lambda_1} 2^{lambda_2} ...` in weakly increasing order.
pub(crate) fn content_letters(content: &[u32]) -> Vec<u32> {
    content.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m as usize)).collect()
}

/// For every partition `lambda` of `n`, tallies `key(w)` over the words of content `lambda`.
fn tally_by_content<K, F>(n: usize, key: F) -> Vec<(Partition, BTreeMap<K, u64>)>
where
    K: Ord + Send,
    F: Fn(&[u32]) -> Option<K> + Sync,
{
    partitions_of(n as u32)
        .into_par_iter()
        .map(|lam| {
            let mut counts = BTreeMap::new();
            let mut letters = content_letters(lam.parts());
            permute_multiset(&mut letters, |w| {
                if let Some(k) = key(w) {
                    *counts.entry(k).or_insert(0u64) += 1;
                }
            });
            (lam, counts)
        })
        .collect()
}

/// Advances `w` to the next word over `1..=max` in lexicographic order; `false` after the last one.
pub(crate) fn next_word(w: &mut [u32], max: u32) -> bool {
    for p in (0..w.len()).rev() {
        if w[p] < max {
            w[p] += 1;
            return true;
        }
        w[p] = 1;
    }
    false
}

/// `sum_e c_e q^e`.
fn q_series(counts: &BTreeMap<usize, u64>) -> LaurentMPoly {
    counts
        .iter()
        .map(|(&e, &c)| LaurentMPoly::monomial(&[(Var::Q, e as i32)], Rational::from_int(c as i64)))
        .sum()
}

fn m_basis(entries: impl IntoIterator<Item = (Partition, LaurentMPoly)>) -> SymFunc {
    entries.into_iter().fold(SymFunc::zero(Basis::M), |acc, (lam, c)| acc.add(&SymFunc::term(Basis::M, lam, c)))
}

/// Area cells as 0-based index pairs.
fn cell_pairs(cells: &CellSet) -> Vec<(usize, usize)> {
    cells.iter().map(|&(i, j)| (i - 1, j - 1)).collect()
}

fn inversions(cells: &[(usize, usize)], w: &[u32]) -> usize {
    cells.iter().filter(|&&(i, j)| w[i] > w[j]).count()
}

fn attacks_equal(cells: &[(usize, usize)], w: &[u32]) -> bool {
    cells.iter().any(|&(i, j)| w[i] == w[j])
}

/// `chi(pi) = sum_w q^{inv(pi,w)} x_w`, with `inv` counting area cells `(i,j)` with `w_i > w_j`.
pub fn chi(pi: &DyckPath) -> Result<SymFunc> {
    let n = pi.size();
    check_cap(n)?;
    let cells = cell_pairs(&pi.area_set());
    let rows = tally_by_content(n, |w| Some(inversions(&cells, w)));
    Ok(m_basis(rows.into_iter().map(|(l, c)| (l, q_series(&c)))))
}

/// The word sum `sum q^{inv(pi,w)}` over words of the given content (any order of parts).
pub fn chi_monomial(pi: &DyckPath, content: &[u32]) -> Result<LaurentMPoly> {
    let total: u32 = content.iter().sum();
    if total as usize != pi.size() {
        return Err(Error::SizeMismatch(format!("content of size {total} for a path of size {}", pi.size())));
    }
    let cells = cell_pairs(&pi.area_set());
    let mut counts = BTreeMap::new();
    let mut letters = content_letters(content);
    permute_multiset(&mut letters, |w| *counts.entry(inversions(&cells, w)).or_insert(0u64) += 1);
    Ok(q_series(&counts))
}

/// `chi'(pi)`: the same sum restricted to words with `w_i != w_j` on every area cell.
pub fn chi_prime(pi: &DyckPath) -> Result<SymFunc> {
    let n = pi.size();
    check_cap(n)?;
    let cells = cell_pairs(&pi.area_set());
    let rows = tally_by_content(n, |w| (!attacks_equal(&cells, w)).then(|| inversions(&cells, w)));
    Ok(m_basis(rows.into_iter().map(|(l, c)| (l, q_series(&c)))))
}

fn check_weight_domain(pi: &DyckPath, wt: &CornerWeight) -> Result<Vec<(usize, usize)>> {
    let corners = pi.corners();
    if wt.len() != corners.len() || !corners.iter().all(|c| wt.contains_key(c)) {
        return Err(Error::WeightDomainMismatch);
    }
    Ok(cell_pairs(&corners))
}

/// `chi(pi, wt) = sum_w q^{inv} prod_{corners (i,j), w_i <= w_j} wt(i,j)`.
pub fn chi_weighted(pi: &DyckPath, wt: &CornerWeight) -> Result<SymFunc> {
    let n = pi.size();
    check_cap(n)?;
    let corners = check_weight_domain(pi, wt)?;
    let weights: Vec<&LaurentMPoly> = wt.values().collect();
    let cells = cell_pairs(&pi.area_set());
    let rows = tally_by_content(n, |w| {
        let mask = corners.iter().enumerate().fold(0u64, |m, (b, &(i, j))| if w[i] <= w[j] { m | 1 << b } else { m });
        Some((inversions(&cells, w), mask))
    });
    let mut products: BTreeMap<u64, LaurentMPoly> = BTreeMap::new();
    let mut out = Vec::new();
    for (lam, counts) in rows {
        let mut c = LaurentMPoly::zero();
        for (&(e, mask), &cnt) in &counts {
            let w = products
                .entry(mask)
                .or_insert_with(|| {
                    (0..weights.len()).filter(|b| mask >> b & 1 == 1).fold(LaurentMPoly::one(), |acc, b| acc * weights[b])
                })
                .clone();
            if w.is_zero() {
                continue;
            }
            c += &(w.mul_monomial(&[(Var::Q, e as i32)]).scale(&Rational::from_int(cnt as i64)));
        }
        out.push((lam, c));
    }
    Ok(m_basis(out))
}

/// The constant corner weight `c`.
pub fn constant_weight(pi: &DyckPath, c: &LaurentMPoly) -> CornerWeight {
    pi.corners().into_iter().map(|cell| (cell, c.clone())).collect()
}

/// `chi(pi, wt)` by turning corners inside out one at a time:
/// `chi(pi,wt) = ((q wt - 1) chi(pi,wt_1) + (1 - wt) chi(pi',wt_2)) / (q - 1)`.
pub fn chi_weighted_by_recursion(pi: &DyckPath, wt: &CornerWeight) -> Result<SymFunc> {
    check_weight_domain(pi, wt)?;
    let Some((&cell, w)) = wt.iter().find(|(_, w)| !w.is_one()) else {
        return chi(pi);
    };
    let mut wt1 = wt.clone();
    wt1.insert(cell, LaurentMPoly::one());
    let flipped = pi.flip_corners(&[cell].into())?;
    let wt2: CornerWeight =
        flipped.corners().into_iter().map(|c| (c, wt.get(&c).cloned().unwrap_or_else(LaurentMPoly::one))).collect();
    let q = LaurentMPoly::q();
    let a = chi_weighted_by_recursion(pi, &wt1)?.scale(&(&q * w - LaurentMPoly::one()));
    let b = chi_weighted_by_recursion(&flipped, &wt2)?.scale(&(LaurentMPoly::one() - w));
    let q1 = &q - &LaurentMPoly::one();
    a.add(&b).try_map_coeffs(|c| c.exact_div(&q1))
}

/// `chi(pi, 0)`: words with `w_i > w_j` on every corner, by direct enumeration.
pub fn chi_zero(pi: &DyckPath) -> Result<SymFunc> {
    chi_weighted(pi, &constant_weight(pi, &LaurentMPoly::zero()))
}

/// `chi(pi, 0) = (1-q)^{-|c|} sum_{S subset c} (-1)^{|S|} chi(pi_S)`, `pi_S` flipping the corners in `S`.
pub fn chi_zero_by_flips(pi: &DyckPath) -> Result<SymFunc> {
    let corners: Vec<(usize, usize)> = pi.corners().into_iter().collect();
    let mut total = SymFunc::zero(Basis::M);
    for mask in 0u64..1 << corners.len() {
        let s: CellSet = corners.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &c)| c).collect();
        let term = chi(&pi.flip_corners(&s)?)?;
        total = if s.len().is_multiple_of(2) { total.add(&term) } else { total.sub(&term) };
    }
    let d = (LaurentMPoly::one() - LaurentMPoly::q()).pow(corners.len() as u32);
    total.try_map_coeffs(|c| c.exact_div(&d))
}

/// Signed-alphabet evaluation of `chi(pi)[X - Y]` in `x_1..x_p`, `y_1..y_m`.
///
/// Letters are ordered `1 < 1bar < 2 < 2bar < ...`; an area cell is an inversion when
/// `w_i > w_j`, or `w_i = w_j` is a barred letter. A barred letter `ibar` has weight `-y_i`.
pub fn super_chi(pi: &DyckPath, max_pos: u16, max_neg: u16) -> LaurentMPoly {
    let n = pi.size();
    // code 2i for i, 2i+1 for ibar
    let mut alphabet: Vec<u32> = (1..=max_pos as u32).map(|i| 2 * i).collect();
    alphabet.extend((1..=max_neg as u32).map(|i| 2 * i + 1));
    alphabet.sort_unstable();
    if n == 0 {
        return LaurentMPoly::one();
    }
    if alphabet.is_empty() {
        return LaurentMPoly::zero();
    }
    let cells = cell_pairs(&pi.area_set());
    let letter = |c: u32| -> LaurentMPoly {
        if c.is_multiple_of(2) {
            LaurentMPoly::var(Var::X((c / 2) as u16))
        } else {
            -LaurentMPoly::var(Var::Y((c / 2) as u16))
        }
    };
    let mut idx = vec![1u32; n];
    let mut out = LaurentMPoly::zero();
    let mut w = vec![0u32; n];
    loop {
        for (p, &i) in idx.iter().enumerate() {
            w[p] = alphabet[i as usize - 1];
        }
        let inv = cells.iter().filter(|&&(i, j)| w[i] > w[j] || (w[i] == w[j] && w[i] % 2 == 1)).count();
        let term = w.iter().fold(LaurentMPoly::q_pow(inv as i32), |acc, &c| acc * letter(c));
        out += &term;
        if !next_word(&mut idx, alphabet.len() as u32) {
            return out;
        }
    }
}

/// `chibar(pi) = sum_w q^{dinv(pi,w)} x_w` over all words.
pub fn bar_chi(pi: &DyckPath) -> Result<SymFunc> {
    let n = pi.size();
    check_cap(n)?;
    let cells = cell_pairs(&pi.dinv_set());
    let rows = tally_by_content(n, |w| Some(inversions(&cells, w)));
    Ok(m_basis(rows.into_iter().map(|(l, c)| (l, q_series(&c)))))
}

fn t_pow(e: usize) -> LaurentMPoly {
    LaurentMPoly::var_pow(Var::T, e as i32)
}

/// `D_alpha = sum_{touch(pi) = alpha} t^{area(pi)} sum_{w in WP_pi} q^{dinv(pi,w)} x_w`.
pub fn d_alpha_dinv(alpha: &Composition) -> Result<SymFunc> {
    let n = alpha.size() as usize;
    check_cap(n)?;
    let mut total = SymFunc::zero(Basis::M);
    for pi in enumerate_paths_touch(alpha)? {
        total = total.add(&parking_sum(&pi));
    }
    Ok(total)
}

/// `t^{area(pi)} sum_{w in WP_pi} q^{dinv(pi,w)} x_w`.
fn parking_sum(pi: &DyckPath) -> SymFunc {
    let n = pi.size();
    let cells = cell_pairs(&pi.dinv_set());
    let x = pi.coarea_seq();
    let parking = |w: &[u32]| (1..n).all(|j| x[j - 1] != x[j] || w[j - 1] > w[j]);
    let rows = tally_by_content(n, |w| parking(w).then(|| inversions(&cells, w)));
    m_basis(rows.into_iter().map(|(l, c)| (l, q_series(&c)))).scale(&t_pow(pi.area()))
}

/// The full shuffle sum `sum_{pi in D_n} t^{area(pi)} sum_{w in WP_pi} q^{dinv(pi,w)} x_w`.
pub fn shuffle_sum(n: usize) -> Result<SymFunc> {
    check_cap(n)?;
    let mut total = SymFunc::zero(Basis::M);
    for pi in enumerate_paths(n)? {
        total = total.add(&parking_sum(&pi));
    }
    Ok(total)
}

/// `sum_{w in CW_n} q^{inv(pi,w)} (-1)^{max(w)} (1 - q^{#1s in w})` over compact words,
/// which equals `(q-1)^n` when `area(pi) = 0` and vanishes otherwise.
pub fn singleton_sum(pi: &DyckPath) -> Result<LaurentMPoly> {
    let n = pi.size();
    check_cap(n)?;
    let cells = cell_pairs(&pi.area_set());
    let mut total = LaurentMPoly::zero();
    for w in compact_words(n) {
        let max = w.iter().copied().max().unwrap_or(0);
        let ones = w.iter().filter(|&&x| x == 1).count() as i32;
        let term = LaurentMPoly::q_pow(inversions(&cells, &w) as i32) * (LaurentMPoly::one() - LaurentMPoly::q_pow(ones));
        total += &if max % 2 == 0 { term } else { -term };
    }
    Ok(total)
}

/// `D_alpha = sum_{touch'(pi) = alpha} t^{bounce(pi)} chi(pi, 0)`.
pub fn d_alpha_bounce(alpha: &Composition) -> Result<SymFunc> {
    let n = alpha.size() as usize;
    check_cap(n)?;
    let mut total = SymFunc::zero(Basis::M);
    for pi in enumerate_paths(n)? {
        if &pi.touch_prime() != alpha {
            continue;
        }
        total = total.add(&chi_zero(&pi)?.scale(&t_pow(pi.bounce())));
    }
    Ok(total)
}

#[cfg(test)]
mod tests;
