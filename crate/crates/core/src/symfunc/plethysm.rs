use std::collections::BTreeMap;

use super::{add_into, Basis, Coeffs, SymFunc};
use crate::combinat::Partition;
use crate::ring::{LaurentMPoly, Var};

/// A plethystic alphabet `x_coeff * X + pure`, with scalar Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetExpr {
    pub x_coeff: LaurentMPoly,
    pub pure: LaurentMPoly,
}

impl AlphabetExpr {
    pub fn new(x_coeff: LaurentMPoly, pure: LaurentMPoly) -> Self {
        AlphabetExpr { x_coeff, pure }
    }

    /// The plain alphabet `X`.
    pub fn x() -> Self {
        AlphabetExpr::new(LaurentMPoly::one(), LaurentMPoly::zero())
    }

    /// `c * X`.
    pub fn scaled_x(c: LaurentMPoly) -> Self {
        AlphabetExpr::new(c, LaurentMPoly::zero())
    }

    /// A scalar alphabet with no `X`.
    pub fn pure(p: LaurentMPoly) -> Self {
        AlphabetExpr::new(LaurentMPoly::zero(), p)
    }

    /// `X + shift`.
    pub fn x_plus(shift: LaurentMPoly) -> Self {
        AlphabetExpr::new(LaurentMPoly::one(), shift)
    }

    /// `p_n[A]` as `(coefficient of p_n, constant)`.
    fn adams(&self, n: u32) -> (LaurentMPoly, LaurentMPoly) {
        (self.x_coeff.frobenius(n), self.pure.frobenius(n))
    }
}

/// `f[A]`: every `p_n` replaced by `p_n[A]`. Returned in the power-sum basis.
pub(crate) fn plethysm(f: &SymFunc, a: &AlphabetExpr) -> SymFunc {
    let f = f.to_p();
    let mut adams: BTreeMap<u32, (LaurentMPoly, LaurentMPoly)> = BTreeMap::new();
    let mut out = Coeffs::new();
    for (lam, c) in f.coeffs() {
        let mut acc: Coeffs = [(Partition::empty(), c.clone())].into();
        for &k in lam.parts() {
            let (px, pp) = adams.entry(k).or_insert_with(|| a.adams(k)).clone();
            let mut next = Coeffs::new();
            for (nu, x) in &acc {
                if !px.is_zero() {
                    add_into(&mut next, nu.with_part(k), x * &px);
                }
                if !pp.is_zero() {
                    add_into(&mut next, nu.clone(), x * &pp);
                }
            }
            acc = next;
        }
        for (nu, x) in acc {
            add_into(&mut out, nu, x);
        }
    }
    SymFunc::from_coeffs(Basis::P, out)
}

/// `h_0[A], ..., h_max[A]`.
pub fn pexp(a: &AlphabetExpr, max_deg: u32) -> Vec<SymFunc> {
    (0..=max_deg).map(|n| SymFunc::h(&[n]).plethysm(a)).collect()
}

/// Collects `sum_j [z^{-j}] G * kernel(j)` where `G` has coefficients in `z`.
fn extract_z(g: &SymFunc, kernel: impl Fn(i32) -> Option<SymFunc>) -> SymFunc {
    let mut by_power: BTreeMap<i32, Coeffs> = BTreeMap::new();
    for (lam, c) in g.coeffs() {
        let Some((lo, hi)) = c.exp_range(Var::Z) else { continue };
        for e in lo..=hi {
            let part = c.coeff_of(Var::Z, e);
            if !part.is_zero() {
                add_into(by_power.entry(e).or_default(), lam.clone(), part);
            }
        }
    }
    let mut out = SymFunc::zero(Basis::P);
    for (e, coeffs) in by_power {
        if let Some(k) = kernel(-e) {
            out = out.add(&SymFunc::from_coeffs(Basis::P, coeffs).mul(&k));
        }
    }
    out
}

/// `F[X + c/z] Exp[+-zX] |_{z^r}`; `negate` selects `Exp[-zX]`.
pub fn z_vertex(f: &SymFunc, c: &LaurentMPoly, negate: bool, r: i32) -> SymFunc {
    let g = f.plethysm(&AlphabetExpr::x_plus(c.mul_monomial(&[(Var::Z, -1)])));
    extract_z(&g, |j| {
        let m = r + j;
        (m >= 0).then(|| {
            if negate {
                let e = SymFunc::e(&[m as u32]);
                if m % 2 == 1 {
                    e.neg()
                } else {
                    e
                }
            } else {
                SymFunc::h(&[m as u32])
            }
        })
    })
}

/// `B_r F = F[X - (q-1)/z] Exp[-zX] |_{z^r}`.
pub fn op_b(r: u32, f: &SymFunc) -> SymFunc {
    let shift = (LaurentMPoly::q() - LaurentMPoly::one()).mul_monomial(&[(Var::Z, -1)]).neg();
    let g = f.plethysm(&AlphabetExpr::x_plus(shift));
    // [z^m] Exp[-zX] = h_m[-X] = (-1)^m e_m
    extract_z(&g, |j| {
        let m = r as i32 + j;
        (m >= 0).then(|| {
            let e = SymFunc::e(&[m as u32]);
            if m % 2 == 1 {
                e.neg()
            } else {
                e
            }
        })
    })
}

/// `C_r F = -q^{1-r} F[X + (1/q - 1)/z] Exp[zX] |_{z^r}`.
pub fn op_c(r: i32, f: &SymFunc) -> SymFunc {
    let shift = (LaurentMPoly::q_pow(-1) - LaurentMPoly::one()).mul_monomial(&[(Var::Z, -1)]);
    let g = f.plethysm(&AlphabetExpr::x_plus(shift));
    let out = extract_z(&g, |j| {
        let m = r + j;
        (m >= 0).then(|| SymFunc::h(&[m as u32]))
    });
    out.scale(&-LaurentMPoly::q_pow(1 - r))
}

/// Evaluates `f` at `x_1..x_nx` minus `y_1..y_ny`: `p_k -> sum x_i^k - sum y_j^k`.
pub fn realize(f: &SymFunc, num_x: u16, num_y: u16) -> LaurentMPoly {
    let f = f.to_p();
    let mut pk: BTreeMap<u32, LaurentMPoly> = BTreeMap::new();
    let mut out = LaurentMPoly::zero();
    for (lam, c) in f.coeffs() {
        let mut term = c.clone();
        for &k in lam.parts() {
            let v = pk
                .entry(k)
                .or_insert_with(|| {
                    let mut s = LaurentMPoly::zero();
                    for i in 1..=num_x {
                        s += &LaurentMPoly::var_pow(Var::X(i), k as i32);
                    }
                    for j in 1..=num_y {
                        s -= &LaurentMPoly::var_pow(Var::Y(j), k as i32);
                    }
                    s
                })
                .clone();
            term = term * v;
            if term.is_zero() {
                break;
            }
        }
        out += &term;
    }
    out
}
