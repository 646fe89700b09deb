//! The operators `T_i`, `d_-`, `d_+`, `d_+^*`, `y_i` and `z_i` on `V_k`.

use std::collections::BTreeMap;

use super::vk::{VkElement, YExp};
use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Var};
use crate::symfunc::{Basis, SymFunc};

fn q_minus_1() -> LaurentMPoly {
    LaurentMPoly::q() - LaurentMPoly::one()
}

/// `Delta P = ((q-1) v P(u,v) + (v - q u) P(v,u)) / (v - u)` on a polynomial in `u`, `v`.
pub fn delta_op(p: &LaurentMPoly) -> Result<LaurentMPoly> {
    let u = LaurentMPoly::var(Var::U);
    let v = LaurentMPoly::var(Var::V);
    let tmp = LaurentMPoly::var(Var::W(u16::MAX));
    let swapped = p.substitute(Var::U, &tmp)?.substitute(Var::V, &u)?.substitute(Var::W(u16::MAX), &v)?;
    let num = q_minus_1() * &v * p + (&v - &(LaurentMPoly::q() * &u)) * swapped;
    num.exact_div(&(&v - &u))
}

/// `Delta* P = ((q-1) u P(u,v) + (v - q u) P(v,u)) / (v - u)`.
pub fn delta_star_op(p: &LaurentMPoly) -> Result<LaurentMPoly> {
    let u = LaurentMPoly::var(Var::U);
    let v = LaurentMPoly::var(Var::V);
    let tmp = LaurentMPoly::var(Var::W(u16::MAX));
    let swapped = p.substitute(Var::U, &tmp)?.substitute(Var::V, &u)?.substitute(Var::W(u16::MAX), &v)?;
    let num = q_minus_1() * &u * p + (&v - &(LaurentMPoly::q() * &u)) * swapped;
    num.exact_div(&(&v - &u))
}

/// `Delta*(u^a v^b)` as a list of `(a', b', coefficient)`:
/// `u^a v^a (q u h_{b-a-1}[u+v] - u v h_{b-a-2}[u+v])` for `a < b`, and
/// `u^b v^b (h_{a-b}[u+v] - q u h_{a-b-1}[u+v])` otherwise.
pub fn delta_star_monomial(a: u32, b: u32) -> Vec<(u32, u32, LaurentMPoly)> {
    let mut acc: BTreeMap<(u32, u32), LaurentMPoly> = BTreeMap::new();
    // adds c * u^du v^dv h_m[u+v]
    let mut add_h = |m: i64, du: u32, dv: u32, c: LaurentMPoly| {
        if m < 0 {
            return;
        }
        for i in 0..=m as u32 {
            let key = (du + i, dv + m as u32 - i);
            let e = acc.entry(key).or_insert_with(LaurentMPoly::zero);
            *e += &c;
        }
    };
    let (a64, b64) = (a as i64, b as i64);
    if a < b {
        add_h(b64 - a64 - 1, a + 1, a, LaurentMPoly::q());
        add_h(b64 - a64 - 2, a + 1, a + 1, LaurentMPoly::int(-1));
    } else {
        add_h(a64 - b64, b, b, LaurentMPoly::one());
        add_h(a64 - b64 - 1, b + 1, b, -LaurentMPoly::q());
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((x, y), c)| (x, y, c)).collect()
}

fn require_level(f: &VkElement) -> Result<()> {
    if f.level() == 0 {
        return Err(Error::LevelZero);
    }
    Ok(())
}

/// `T_i = Delta*` acting on `y_i, y_{i+1}`.
pub fn t_op(i: usize, f: &VkElement) -> Result<VkElement> {
    if i == 0 || i >= f.level() {
        return Err(Error::IndexOutOfRange { index: i, max: f.level().saturating_sub(1) });
    }
    let mut out = VkElement::zero(f.level());
    for (a, g) in f.terms() {
        for (x, y, c) in delta_star_monomial(a[i - 1], a[i]) {
            let mut b = a.clone();
            b[i - 1] = x;
            b[i] = y;
            out.add_term(b, g.scale(&c));
        }
    }
    Ok(out)
}

/// `T_i^{-1} = q^{-1} (T_i + q - 1)`.
pub fn t_inv_op(i: usize, f: &VkElement) -> Result<VkElement> {
    let t = t_op(i, f)?;
    Ok(t.add(&f.scale(&q_minus_1())).scale(&LaurentMPoly::q_pow(-1)))
}

/// `f[X + c y]` split by the power of `y`: `p_n -> p_n + c^{(n)} y^n` part by part.
fn shift_by_y(f: &SymFunc, c: &LaurentMPoly) -> BTreeMap<u32, SymFunc> {
    let mut frob: BTreeMap<u32, LaurentMPoly> = BTreeMap::new();
    let mut out: BTreeMap<u32, BTreeMap<Partition, LaurentMPoly>> = BTreeMap::new();
    for (lam, coeff) in f.to_p().coeffs() {
        // (power of y, remaining parts) -> coefficient
        let mut acc: BTreeMap<(u32, Partition), LaurentMPoly> = [((0, Partition::empty()), coeff.clone())].into();
        for &k in lam.parts() {
            let ck = frob.entry(k).or_insert_with(|| c.frobenius(k)).clone();
            let mut next: BTreeMap<(u32, Partition), LaurentMPoly> = BTreeMap::new();
            for ((e, nu), x) in acc {
                let keep = next.entry((e, nu.with_part(k))).or_insert_with(LaurentMPoly::zero);
                *keep += &x;
                if !ck.is_zero() {
                    let shift = next.entry((e + k, nu)).or_insert_with(LaurentMPoly::zero);
                    *shift += &(&x * &ck);
                }
            }
            acc = next;
        }
        for ((e, nu), x) in acc {
            if x.is_zero() {
                continue;
            }
            let slot = out.entry(e).or_default();
            let s = slot.entry(nu).or_insert_with(LaurentMPoly::zero);
            *s += &x;
        }
    }
    out.into_iter().map(|(e, cs)| (e, SymFunc::from_coeffs(Basis::P, cs))).collect()
}

/// `F[X + (q-1) y_{k+1}]` as an element of `V_{k+1}`.
fn raise(f: &VkElement) -> VkElement {
    let k = f.level();
    let mut out = VkElement::zero(k + 1);
    for (a, g) in f.terms() {
        for (e, h) in shift_by_y(g, &q_minus_1()) {
            let mut b = a.clone();
            b.push(e);
            out.add_term(b, h);
        }
    }
    out
}

/// `d_+ F = T_1 ... T_k (F[X + (q-1) y_{k+1}])`, from `V_k` to `V_{k+1}`.
pub fn d_plus(f: &VkElement) -> VkElement {
    let k = f.level();
    let mut g = raise(f);
    for i in (1..=k).rev() {
        g = t_op(i, &g).expect("index in range");
    }
    g
}

/// `d_+^* F = gamma F[X + (q-1) y_{k+1}]`, where `gamma` sends `y_i -> y_{i+1}`
/// and `y_{k+1} -> t y_1`.
pub fn d_plus_star(f: &VkElement) -> VkElement {
    let k = f.level();
    let mut out = VkElement::zero(k + 1);
    for (a, g) in raise(f).terms() {
        let mut b = YExp::with_capacity(k + 1);
        b.push(a[k]);
        b.extend(a[..k].iter().copied());
        out.add_term(b, g.scale(&LaurentMPoly::t().pow(a[k])));
    }
    out
}

/// `d_- F`: expand `F[X - (q-1) y_k]` in `y_k` and replace `y_k^i` by
/// `-h_{i+1}[-X] = (-1)^i e_{i+1}`. Maps `V_k` to `V_{k-1}`.
pub fn d_minus(f: &VkElement) -> Result<VkElement> {
    require_level(f)?;
    let k = f.level();
    let shift = -q_minus_1();
    let mut out = VkElement::zero(k - 1);
    for (a, g) in f.terms() {
        let base = a[k - 1];
        let rest: YExp = a[..k - 1].iter().copied().collect();
        for (j, h) in shift_by_y(g, &shift) {
            let i = base + j;
            let e = SymFunc::e(&[i + 1]);
            let e = if i % 2 == 1 { e.neg() } else { e };
            out.add_term(rest.clone(), h.mul(&e));
        }
    }
    Ok(out)
}

/// Multiplication by `y_i`.
pub fn y_op(i: usize, f: &VkElement) -> Result<VkElement> {
    if i == 0 || i > f.level() {
        return Err(Error::IndexOutOfRange { index: i, max: f.level() });
    }
    Ok(f.mul_y(i, 1))
}

/// `z_1 = q^{k-1}/(q^{-1}-1) (d_+^* d_- - d_- d_+^*) T_{k-1}^{-1} ... T_1^{-1}` and
/// `z_{i+1} = q^{-1} T_i z_i T_i`.
pub fn z_op(i: usize, f: &VkElement) -> Result<VkElement> {
    let k = f.level();
    if i == 0 || i > k {
        return Err(Error::IndexOutOfRange { index: i, max: k });
    }
    if i > 1 {
        let g = t_op(i - 1, f)?;
        let g = z_op(i - 1, &g)?;
        return Ok(t_op(i - 1, &g)?.scale(&LaurentMPoly::q_pow(-1)));
    }
    let mut g = f.clone();
    for j in 1..k {
        g = t_inv_op(j, &g)?;
    }
    let lhs = d_plus_star(&d_minus(&g)?);
    let rhs = d_minus(&d_plus_star(&g))?;
    // q^{k-1} / (q^{-1} - 1) = q^k / (1 - q)
    lhs.sub(&rhs).scale(&LaurentMPoly::q_pow(k as i32)).exact_div(&(LaurentMPoly::one() - LaurentMPoly::q()))
}

/// The commutator `[d_-, d_+] = d_- d_+ - d_+ d_-` on `V_k`, `k >= 1`.
pub fn commutator_minus_plus(f: &VkElement) -> Result<VkElement> {
    Ok(d_minus(&d_plus(f))?.sub(&d_plus(&d_minus(f)?)))
}

/// Named operators for word evaluation and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    DMinus,
    DPlus,
    DPlusStar,
    T(usize),
    TInv(usize),
    Y(usize),
    Z(usize),
}

impl Op {
    pub fn apply(&self, f: &VkElement) -> Result<VkElement> {
        match *self {
            Op::DMinus => d_minus(f),
            Op::DPlus => Ok(d_plus(f)),
            Op::DPlusStar => Ok(d_plus_star(f)),
            Op::T(i) => t_op(i, f),
            Op::TInv(i) => t_inv_op(i, f),
            Op::Y(i) => y_op(i, f),
            Op::Z(i) => z_op(i, f),
        }
    }
}

impl std::str::FromStr for Op {
    type Err = Error;
    fn from_str(s: &str) -> Result<Op> {
        let s = s.trim();
        let idx = |p: &str| -> Result<usize> { p.parse().map_err(|_| Error::Parse(format!("bad operator `{s}`"))) };
        Ok(match s {
            "d-" | "dm" => Op::DMinus,
            "d+" | "dp" => Op::DPlus,
            "d+*" | "dps" => Op::DPlusStar,
            _ if s.starts_with("Tinv") => Op::TInv(idx(&s[4..])?),
            _ if s.starts_with('T') => Op::T(idx(&s[1..])?),
            _ if s.starts_with('y') => Op::Y(idx(&s[1..])?),
            _ if s.starts_with('z') => Op::Z(idx(&s[1..])?),
            _ => return Err(Error::Parse(format!("unknown operator `{s}`"))),
        })
    }
}

/// Applies a word of operators, rightmost first.
pub fn apply_word(word: &[Op], f: &VkElement) -> Result<VkElement> {
    word.iter().rev().try_fold(f.clone(), |g, op| op.apply(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::poly;
    use crate::symfunc::sym;

    fn uv(a: u32, b: u32) -> LaurentMPoly {
        LaurentMPoly::var_pow(Var::U, a as i32) * LaurentMPoly::var_pow(Var::V, b as i32)
    }

    #[test]
    fn delta_star_closed_form() {
        for a in 0..=4 {
            for b in 0..=4 {
                let closed: LaurentMPoly = delta_star_monomial(a, b).into_iter().map(|(x, y, c)| c * uv(x, y)).sum();
                assert_eq!(closed, delta_star_op(&uv(a, b)).unwrap(), "a={a}, b={b}");
            }
        }
    }

    #[test]
    fn delta_star_quadratic() {
        let q = LaurentMPoly::q();
        for a in 0..=3 {
            for b in 0..=3 {
                let p = uv(a, b) + poly("u*v") * uv(b, a);
                let ds = delta_star_op(&p).unwrap();
                // (T + q)(T - 1) = 0, matching T^{-1} = q^{-1}(T + q - 1)
                let lhs = delta_star_op(&ds).unwrap() + (&q - &LaurentMPoly::one()) * &ds - &q * &p;
                assert!(lhs.is_zero(), "a={a}, b={b}");
                let d = delta_op(&p).unwrap();
                assert!((delta_op(&d).unwrap() + (LaurentMPoly::one() - &q) * &d - &q * &p).is_zero());
                assert_eq!(ds, &d + &(LaurentMPoly::one() - &q) * &p);
            }
        }
    }

    #[test]
    fn delta_small_values() {
        assert_eq!(delta_star_op(&poly("1")).unwrap(), poly("1"));
        assert_eq!(delta_star_op(&poly("u")).unwrap(), poly("(1-q)*u + v"));
        assert_eq!(delta_star_op(&poly("v")).unwrap(), poly("q*u"));
        assert_eq!(delta_op(&poly("u^2*v + u*v^2 + 3")).unwrap(), poly("q*(u^2*v + u*v^2 + 3)"));
        let t = t_op(1, &VkElement::y_monomial(&[1, 0])).unwrap();
        let expect = VkElement::y_monomial(&[1, 0]).scale(&poly("1-q")).add(&VkElement::y_monomial(&[0, 1]));
        assert_eq!(t, expect);
    }

    #[test]
    fn t_inverse() {
        let f = VkElement::y_monomial(&[2, 0, 1]).mul_sym(&sym("s[2,1]"));
        for i in 1..=2 {
            assert_eq!(t_inv_op(i, &t_op(i, &f).unwrap()).unwrap(), f);
            assert_eq!(t_op(i, &t_inv_op(i, &f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn small_d_values() {
        let one = VkElement::one(0);
        let f = d_minus(&d_plus(&one)).unwrap();
        assert_eq!(f.as_sym().unwrap(), sym("s[1]"));
        let g = d_plus(&d_plus(&VkElement::from_sym(0, sym("s[1]"))));
        let y = VkElement::y_monomial(&[1, 0]).add(&VkElement::y_monomial(&[0, 1]));
        let expect = VkElement::from_sym(2, sym("s[1]")).add(&y.scale(&poly("q-1")));
        assert_eq!(g, expect);
        assert!(d_minus(&one).is_err());
        let op: Op = "Tinv2".parse().unwrap();
        assert_eq!(op, Op::TInv(2));
    }
}
