//! Exact checks of the operator relations on spanning sets of `V_k`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::nalpha::{y_alpha, y_alpha_by_recursion};
use super::ops::{d_minus, d_plus, d_plus_star, t_inv_op, t_op, z_op};
use super::twisted::{spanning_set, twisted_product};
use super::vk::VkElement;
use crate::combinat::{compositions_of, partitions_of};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Var};
use crate::symfunc::SymFunc;

/// Groups of relations that can be checked together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Quadratic, braid and exchange relations between `T_i`, `d_-`, `d_+`.
    Dpa,
    /// The same relations for `T_i^{-1}`, `d_-`, `d_+^*` with `q -> 1/q`.
    Star,
    /// Relations tying `z_i`, `y_i` to `d_+`, `d_+^*`.
    AddRel,
    /// `[d_+, d_-]` written through `y_k` and `y_1`.
    Commutator,
    /// Commutation of `y_i` with `T_j`, `d_-`, `d_+`.
    AddingBack,
    /// The recursion producing `y_alpha` from `d_+^*` and `d_-`.
    RecY,
    /// Twisted products commute with the raising and lowering operators.
    Twisted,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Dpa, Suite::Star, Suite::AddRel, Suite::Commutator, Suite::AddingBack, Suite::RecY, Suite::Twisted];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Dpa => "dpa",
            Suite::Star => "star",
            Suite::AddRel => "addrel",
            Suite::Commutator => "commutator",
            Suite::AddingBack => "addingback",
            Suite::RecY => "recy",
            Suite::Twisted => "twisted",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown relation suite `{s}`")))
    }
}

/// Outcome of one relation over all its instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationOutcome {
    pub id: String,
    pub instances: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

type Pairs = Vec<(String, VkElement, VkElement)>;
type ElementRel = Box<dyn Fn(&VkElement) -> Result<Pairs> + Sync>;
type FixedRel = Box<dyn Fn() -> Result<Pairs> + Sync>;

enum Relation {
    /// Checked on every test element.
    OnElements(&'static str, ElementRel),
    /// A fixed list of instances.
    Fixed(&'static str, FixedRel),
}

fn q() -> LaurentMPoly {
    LaurentMPoly::q()
}

fn q1() -> LaurentMPoly {
    q() - LaurentMPoly::one()
}

/// `d_+ d_- - d_- d_+`.
fn comm(f: &VkElement) -> Result<VkElement> {
    Ok(d_plus(&d_minus(f)?).sub(&d_minus(&d_plus(f))?))
}

/// `d_+^* d_- - d_- d_+^*`.
fn comm_star(f: &VkElement) -> Result<VkElement> {
    Ok(d_plus_star(&d_minus(f)?).sub(&d_minus(&d_plus_star(f))?))
}

/// `T_1 T_2 ... T_j F` (rightmost first).
fn t_prefix(j: usize, f: &VkElement) -> Result<VkElement> {
    (1..=j).rev().try_fold(f.clone(), |g, i| t_op(i, &g))
}

/// `(T_1 ... T_j)^{-1} F = T_j^{-1} ... T_1^{-1} F`.
fn t_prefix_inv(j: usize, f: &VkElement) -> Result<VkElement> {
    (1..=j).try_fold(f.clone(), |g, i| t_inv_op(i, &g))
}

fn zero(k: usize) -> VkElement {
    VkElement::zero(k)
}

fn relations(suite: Suite, max_deg: u32) -> Vec<Relation> {
    use Relation::{Fixed, OnElements};
    match suite {
        Suite::Dpa => vec![
            OnElements(
                "(T_i - 1)(T_i + q) = 0",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k {
                        let g = t_op(i, f)?.add(&f.scale(&q()));
                        out.push((format!("i={i}"), t_op(i, &g)?.sub(&g), zero(k)));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
                Box::new(|f| braid(f, t_op)),
            ),
            OnElements(
                "T_i T_j = T_j T_i (|i-j| > 1)",
                Box::new(|f| far_commute(f, t_op)),
            ),
            OnElements(
                "T_i d_- = d_- T_i (i < k-1)",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k.saturating_sub(1) {
                        out.push((format!("i={i}"), t_op(i, &d_minus(f)?)?, d_minus(&t_op(i, f)?)?));
                    }
                    Ok(out)
                }),
            ),
            OnElements("d_+ T_i = T_{i+1} d_+", Box::new(|f| raise_exchange(f, t_op, d_plus))),
            OnElements(
                "T_1 d_+^2 = d_+^2",
                Box::new(|f| {
                    let g = d_plus(&d_plus(f));
                    Ok(vec![(String::new(), t_op(1, &g)?, g)])
                }),
            ),
            OnElements("d_-^2 T_{k-1} = d_-^2", Box::new(|f| lower_twice(f, t_op))),
            OnElements(
                "d_-(d_+d_- - d_-d_+) T_{k-1} = q (d_+d_- - d_-d_+) d_-",
                Box::new(|f| lower_commutator(f, t_op, comm, &q())),
            ),
            OnElements(
                "T_1 (d_+d_- - d_-d_+) d_+ = q d_+ (d_+d_- - d_-d_+)",
                Box::new(|f| raise_commutator(f, t_op, d_plus, comm, &q())),
            ),
            OnElements(
                "T_1 ... T_k T_i = T_{i+1} T_1 ... T_k",
                Box::new(|f| {
                    let l = f.level();
                    let mut out = Vec::new();
                    if l >= 3 {
                        let k = l - 1;
                        for i in 1..k {
                            out.push((format!("i={i}"), t_prefix(k, &t_op(i, f)?)?, t_op(i + 1, &t_prefix(k, f)?)?));
                        }
                    }
                    Ok(out)
                }),
            ),
        ],
        Suite::Star => vec![
            OnElements(
                "(T_i^* - 1)(T_i^* + 1/q) = 0",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k {
                        let g = t_inv_op(i, f)?.add(&f.scale(&LaurentMPoly::q_pow(-1)));
                        out.push((format!("i={i}"), t_inv_op(i, &g)?.sub(&g), zero(k)));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "T_i^* T_{i+1}^* T_i^* = T_{i+1}^* T_i^* T_{i+1}^*",
                Box::new(|f| braid(f, t_inv_op)),
            ),
            OnElements(
                "T_i^* T_j^* = T_j^* T_i^* (|i-j| > 1)",
                Box::new(|f| far_commute(f, t_inv_op)),
            ),
            OnElements(
                "T_i^* d_- = d_- T_i^* (i < k-1)",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k.saturating_sub(1) {
                        out.push((format!("i={i}"), t_inv_op(i, &d_minus(f)?)?, d_minus(&t_inv_op(i, f)?)?));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "d_+^* T_i^* = T_{i+1}^* d_+^*",
                Box::new(|f| raise_exchange(f, t_inv_op, d_plus_star)),
            ),
            OnElements(
                "T_1^* d_+^{*2} = d_+^{*2}",
                Box::new(|f| {
                    let g = d_plus_star(&d_plus_star(f));
                    Ok(vec![(String::new(), t_inv_op(1, &g)?, g)])
                }),
            ),
            OnElements("d_-^2 T_{k-1}^* = d_-^2", Box::new(|f| lower_twice(f, t_inv_op))),
            OnElements(
                "d_-(d_+^*d_- - d_-d_+^*) T_{k-1}^* = q^-1 (d_+^*d_- - d_-d_+^*) d_-",
                Box::new(|f| lower_commutator(f, t_inv_op, comm_star, &LaurentMPoly::q_pow(-1))),
            ),
            OnElements(
                "T_1^* (d_+^*d_- - d_-d_+^*) d_+^* = q^-1 d_+^* (d_+^*d_- - d_-d_+^*)",
                Box::new(|f| raise_commutator(f, t_inv_op, d_plus_star, comm_star, &LaurentMPoly::q_pow(-1))),
            ),
        ],
        Suite::AddRel => vec![
            OnElements(
                "z_{i+1} d_+ = d_+ z_i",
                Box::new(|f| {
                    let mut out = Vec::new();
                    for i in 1..=f.level() {
                        out.push((format!("i={i}"), z_op(i + 1, &d_plus(f))?, d_plus(&z_op(i, f)?)));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "y_{i+1} d_+^* = d_+^* y_i",
                Box::new(|f| {
                    let mut out = Vec::new();
                    for i in 1..=f.level() {
                        out.push((format!("i={i}"), d_plus_star(f).mul_y(i + 1, 1), d_plus_star(&f.mul_y(i, 1))));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "z_1 d_+ = -t q^{k+1} y_1 d_+^*",
                Box::new(|f| {
                    let k = f.level() as i32;
                    let c = LaurentMPoly::monomial(&[(Var::T, 1), (Var::Q, k + 1)], crate::ring::Rational::from_int(-1));
                    Ok(vec![(String::new(), z_op(1, &d_plus(f))?, d_plus_star(f).mul_y(1, 1).scale(&c))])
                }),
            ),
            OnElements(
                "z_i z_j = z_j z_i",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..=k {
                        for j in i + 1..=k {
                            out.push((format!("i={i} j={j}"), z_op(i, &z_op(j, f)?)?, z_op(j, &z_op(i, f)?)?));
                        }
                    }
                    Ok(out)
                }),
            ),
            Fixed(
                "d_+^{*m}(1) = d_+^m(1)",
                Box::new(move || {
                    let mut out = Vec::new();
                    let (mut a, mut b) = (VkElement::one(0), VkElement::one(0));
                    for m in 1..=max_deg.max(1) {
                        a = d_plus_star(&a);
                        b = d_plus(&b);
                        out.push((format!("m={m}"), a.clone(), b.clone()));
                    }
                    Ok(out)
                }),
            ),
        ],
        Suite::Commutator => vec![
            OnElements(
                "(d_+d_- - d_-d_+) F = (q-1) T_1 ... T_{k-1} (y_k F)",
                Box::new(|f| {
                    let k = f.level();
                    if k == 0 {
                        return Ok(vec![]);
                    }
                    Ok(vec![(String::new(), comm(f)?, t_prefix(k - 1, &f.mul_y(k, 1))?.scale(&q1()))])
                }),
            ),
            OnElements(
                "(d_+d_- - d_-d_+) F = (q-1) q^{k-1} y_1 T_1^{-1} ... T_{k-1}^{-1} F",
                Box::new(|f| {
                    let k = f.level();
                    if k == 0 {
                        return Ok(vec![]);
                    }
                    let mut g = f.clone();
                    for i in (1..k).rev() {
                        g = t_inv_op(i, &g)?;
                    }
                    let c = q1() * LaurentMPoly::q_pow(k as i32 - 1);
                    Ok(vec![(String::new(), comm(f)?, g.mul_y(1, 1).scale(&c))])
                }),
            ),
            OnElements(
                "y_i = q^-1 T_i y_{i+1} T_i",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k {
                        let rhs = t_op(i, &t_op(i, f)?.mul_y(i + 1, 1))?.scale(&LaurentMPoly::q_pow(-1));
                        out.push((format!("i={i}"), f.mul_y(i, 1), rhs));
                    }
                    Ok(out)
                }),
            ),
        ],
        Suite::AddingBack => vec![
            OnElements(
                "y_i T_j = T_j y_i (i not in {j, j+1})",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for j in 1..k {
                        for i in (1..=k).filter(|&i| i != j && i != j + 1) {
                            out.push((format!("i={i} j={j}"), t_op(j, f)?.mul_y(i, 1), t_op(j, &f.mul_y(i, 1))?));
                        }
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "y_i d_- = d_- y_i (i < k)",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..k {
                        out.push((format!("i={i}"), d_minus(f)?.mul_y(i, 1), d_minus(&f.mul_y(i, 1))?));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "d_+ y_i = (T_1 ... T_i) y_i (T_1 ... T_i)^{-1} d_+",
                Box::new(|f| {
                    let mut out = Vec::new();
                    for i in 1..=f.level() {
                        let g = t_prefix_inv(i, &d_plus(f))?.mul_y(i, 1);
                        out.push((format!("i={i}"), d_plus(&f.mul_y(i, 1)), t_prefix(i, &g)?));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "y_i y_j = y_j y_i",
                Box::new(|f| {
                    let k = f.level();
                    let mut out = Vec::new();
                    for i in 1..=k {
                        for j in i + 1..=k {
                            out.push((format!("i={i} j={j}"), f.mul_y(j, 1).mul_y(i, 1), f.mul_y(i, 1).mul_y(j, 1)));
                        }
                    }
                    Ok(out)
                }),
            ),
        ],
        Suite::RecY => vec![
            Fixed(
                "y_{1 alpha} = d_+^* y_alpha",
                Box::new(move || {
                    let mut out = Vec::new();
                    for n in 1..=max_deg {
                        for alpha in compositions_of(n).into_iter().filter(|a| a.parts()[0] == 1) {
                            let rest = crate::combinat::Composition(alpha.parts()[1..].to_vec());
                            out.push((alpha.to_string(), y_alpha(&alpha), d_plus_star(&y_alpha(&rest))));
                        }
                    }
                    Ok(out)
                }),
            ),
            Fixed(
                "y_{a alpha} = t^{1-a}/(q-1) (d_+^*d_- - d_-d_+^*) sum_beta q^{1-l(beta)} d_-^{l(beta)-1} y_{alpha beta}",
                Box::new(move || {
                    let mut out = Vec::new();
                    for n in 1..=max_deg {
                        for alpha in compositions_of(n).into_iter().filter(|a| a.parts()[0] > 1) {
                            out.push((alpha.to_string(), y_alpha(&alpha), y_alpha_by_recursion(&alpha)?));
                        }
                    }
                    Ok(out)
                }),
            ),
        ],
        Suite::Twisted => vec![
            OnElements(
                "d_+(F * G) = F * d_+ G",
                Box::new(|g| {
                    let mut out = Vec::new();
                    for (name, f) in twist_factors() {
                        out.push((name, d_plus(&twisted_product(&f, 0, g)?), twisted_product(&f, 0, &d_plus(g))?));
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "d_-(F *_m G) = F *_m d_- G (m < k)",
                Box::new(|g| {
                    let mut out = Vec::new();
                    for (name, f) in twist_factors() {
                        for m in 0..g.level() {
                            let lhs = d_minus(&twisted_product(&f, m, g)?)?;
                            out.push((format!("{name} m={m}"), lhs, twisted_product(&f, m, &d_minus(g)?)?));
                        }
                    }
                    Ok(out)
                }),
            ),
            OnElements(
                "d_+^*(F *_m G) = F *_{m+1} d_+^* G",
                Box::new(|g| {
                    let mut out = Vec::new();
                    for (name, f) in twist_factors() {
                        for m in 0..=g.level() {
                            let lhs = d_plus_star(&twisted_product(&f, m, g)?);
                            out.push((format!("{name} m={m}"), lhs, twisted_product(&f, m + 1, &d_plus_star(g))?));
                        }
                    }
                    Ok(out)
                }),
            ),
        ],
    }
}

fn twist_factors() -> Vec<(String, SymFunc)> {
    (1..=2).flat_map(partitions_of).map(|l| (format!("F=s{l}"), SymFunc::s(l.parts()))).collect()
}

type TOp = fn(usize, &VkElement) -> Result<VkElement>;
type Raise = fn(&VkElement) -> VkElement;
type Comm = fn(&VkElement) -> Result<VkElement>;

fn braid(f: &VkElement, t: TOp) -> Result<Pairs> {
    let k = f.level();
    let mut out = Vec::new();
    for i in 1..k.saturating_sub(1) {
        let lhs = t(i, &t(i + 1, &t(i, f)?)?)?;
        let rhs = t(i + 1, &t(i, &t(i + 1, f)?)?)?;
        out.push((format!("i={i}"), lhs, rhs));
    }
    Ok(out)
}

/// Also evaluated on `d_+ F`, so that level `k` already exercises `T_1 T_3` on `V_{k+1}`.
fn far_commute(f: &VkElement, t: TOp) -> Result<Pairs> {
    let mut out = Vec::new();
    for (tag, g) in [("", f.clone()), (" on d_+F", d_plus(f))] {
        let k = g.level();
        for i in 1..k {
            for j in i + 2..k {
                out.push((format!("i={i} j={j}{tag}"), t(i, &t(j, &g)?)?, t(j, &t(i, &g)?)?));
            }
        }
    }
    Ok(out)
}

fn raise_exchange(f: &VkElement, t: TOp, up: Raise) -> Result<Pairs> {
    let mut out = Vec::new();
    for i in 1..f.level() {
        out.push((format!("i={i}"), up(&t(i, f)?), t(i + 1, &up(f))?));
    }
    Ok(out)
}

fn lower_twice(f: &VkElement, t: TOp) -> Result<Pairs> {
    let k = f.level();
    if k < 2 {
        return Ok(vec![]);
    }
    let lhs = d_minus(&d_minus(&t(k - 1, f)?)?)?;
    Ok(vec![(String::new(), lhs, d_minus(&d_minus(f)?)?)])
}

fn lower_commutator(f: &VkElement, t: TOp, c: Comm, scalar: &LaurentMPoly) -> Result<Pairs> {
    let k = f.level();
    if k < 2 {
        return Ok(vec![]);
    }
    let lhs = d_minus(&c(&t(k - 1, f)?)?)?;
    Ok(vec![(String::new(), lhs, c(&d_minus(f)?)?.scale(scalar))])
}

fn raise_commutator(f: &VkElement, t: TOp, up: Raise, c: Comm, scalar: &LaurentMPoly) -> Result<Pairs> {
    if f.level() == 0 {
        return Ok(vec![]);
    }
    let lhs = t(1, &c(&up(f))?)?;
    Ok(vec![(String::new(), lhs, up(&c(f)?).scale(scalar))])
}

/// All words in `d_+`, `d_-` of length at most `len` applied to `1 in V_0`, keeping results of level `<= max_level`.
pub fn d_word_elements(len: usize, max_level: usize) -> Result<Vec<VkElement>> {
    let mut frontier = vec![VkElement::one(0)];
    let mut out = frontier.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for f in &frontier {
            next.push(d_plus(f));
            if f.level() > 0 {
                next.push(d_minus(f)?);
            }
        }
        out.extend(next.iter().filter(|f| f.level() <= max_level).cloned());
        frontier = next;
    }
    Ok(out)
}

/// The elements every relation is evaluated on: the twisted spanning sets of `V_0 .. V_k`
/// in degree `<= deg`, followed by the d-words of length `<= word_len` that land in level `<= k`.
pub fn test_elements(k: usize, deg: u32, word_len: usize) -> Result<Vec<VkElement>> {
    let mut out = Vec::new();
    for level in 0..=k {
        out.extend(spanning_set(level, deg)?);
    }
    out.extend(d_word_elements(word_len, k)?);
    Ok(out)
}

/// Checks every relation of `suite` on [`test_elements`]`(k, deg, word_len)`; fixed-instance
/// relations use `deg` as their size bound. Results are in a fixed order.
pub fn relation_check(suite: Suite, k: usize, deg: u32, word_len: usize) -> Result<Vec<RelationOutcome>> {
    let elements = test_elements(k, deg, word_len)?;
    relation_check_on(suite, &elements, deg)
}

/// As [`relation_check`] on a caller-supplied element list.
pub fn relation_check_on(suite: Suite, elements: &[VkElement], deg: u32) -> Result<Vec<RelationOutcome>> {
    let mut out = Vec::new();
    for rel in relations(suite, deg) {
        let (id, results): (&str, Vec<Result<Pairs>>) = match &rel {
            Relation::OnElements(id, check) => (id, elements.par_iter().map(check).collect()),
            Relation::Fixed(id, check) => (id, vec![check()]),
        };
        let mut instances = 0;
        let mut counterexample = None;
        for (idx, r) in results.into_iter().enumerate() {
            for (label, lhs, rhs) in r? {
                instances += 1;
                if counterexample.is_none() && lhs != rhs {
                    let at = match &rel {
                        Relation::OnElements(..) => format!("F = {}", elements[idx]),
                        Relation::Fixed(..) => String::new(),
                    };
                    counterexample = Some(format!("{label} {at}: lhs - rhs = {}", lhs.sub(&rhs)).trim().to_string());
                }
            }
        }
        out.push(RelationOutcome { id: id.to_string(), instances, pass: counterexample.is_none(), counterexample });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            for r in relation_check(suite, 3, 2, 4).unwrap() {
                assert!(r.pass, "{suite}: {} {:?}", r.id, r.counterexample);
                assert!(r.instances > 0, "{suite}: {} never exercised", r.id);
            }
        }
    }

    #[test]
    fn d_words_stay_in_range() {
        // 1, d_+(1), d_-d_+(1)
        let d = d_word_elements(2, 1).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d[2], VkElement::from_sym(0, SymFunc::s(&[1])));
    }
}
