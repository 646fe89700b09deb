//! Symmetric functions with Laurent polynomial coefficients.
//!
//! Elements carry a basis tag; arithmetic happens in power sums, where
//! products, plethysm and the Hall pairing are all diagonal or trivial.

mod appendix;
mod plethysm;
mod tables;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

pub use appendix::{h_neg_x_expansion, m_at_qminus1, m_qminus1_expansion, signed_composition_sum};
pub(crate) use appendix::{multinomial, q_multinomial};
pub use plethysm::{op_b, op_c, pexp, realize, z_vertex, AlphabetExpr};

use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    P = 0,
    H = 1,
    E = 2,
    M = 3,
    S = 4,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::H, Basis::E, Basis::M, Basis::S];

    pub fn name(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::M => "m",
            Basis::S => "s",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown basis `{s}`")))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) type Coeffs = BTreeMap<Partition, LaurentMPoly>;

pub(crate) fn add_into(map: &mut Coeffs, key: Partition, c: LaurentMPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// A finitely supported symmetric function `sum c_lambda b_lambda` in one of
/// the bases `p, h, e, m, s`.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    coeffs: Coeffs,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc { basis, coeffs: Coeffs::new() }
    }

    pub fn one() -> SymFunc {
        SymFunc::term(Basis::P, Partition::empty(), LaurentMPoly::one())
    }

    pub fn scalar(c: LaurentMPoly) -> SymFunc {
        SymFunc::term(Basis::P, Partition::empty(), c)
    }

    pub fn term(basis: Basis, lambda: Partition, c: LaurentMPoly) -> SymFunc {
        let mut coeffs = Coeffs::new();
        add_into(&mut coeffs, lambda, c);
        SymFunc { basis, coeffs }
    }

    pub fn basis_element(basis: Basis, parts: &[u32]) -> SymFunc {
        SymFunc::term(basis, Partition::new(parts.to_vec()), LaurentMPoly::one())
    }

    pub fn p(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::P, parts)
    }

    pub fn h(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::H, parts)
    }

    pub fn e(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::E, parts)
    }

    pub fn m(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::M, parts)
    }

    pub fn s(parts: &[u32]) -> SymFunc {
        SymFunc::basis_element(Basis::S, parts)
    }

    pub fn from_coeffs(basis: Basis, coeffs: impl IntoIterator<Item = (Partition, LaurentMPoly)>) -> SymFunc {
        let mut map = Coeffs::new();
        for (l, c) in coeffs {
            add_into(&mut map, l, c);
        }
        SymFunc { basis, coeffs: map }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, LaurentMPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentMPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Coefficient in the given basis, converting first if needed.
    pub fn coeff_in(&self, basis: Basis, parts: &[u32]) -> LaurentMPoly {
        self.convert(basis).coeff(&Partition::new(parts.to_vec()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<u32> {
        self.coeffs.keys().map(|l| l.size()).collect()
    }

    /// Largest degree present (0 for the zero function).
    pub fn max_degree(&self) -> u32 {
        self.coeffs.keys().map(|l| l.size()).max().unwrap_or(0)
    }

    pub fn degree_component(&self, n: u32) -> SymFunc {
        SymFunc {
            basis: self.basis,
            coeffs: self.coeffs.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Exact change of basis.
    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let mut p = Coeffs::new();
        if self.basis == Basis::P {
            p = self.coeffs.clone();
        } else {
            for (l, c) in &self.coeffs {
                let t = tables::tables(l.size());
                for (j, x) in &t.to_p(self.basis)[t.index[l]] {
                    add_into(&mut p, t.parts[*j].clone(), c.scale(x));
                }
            }
        }
        if target == Basis::P {
            return SymFunc { basis: Basis::P, coeffs: p };
        }
        let mut out = Coeffs::new();
        for (l, c) in &p {
            let t = tables::tables(l.size());
            for (j, x) in &t.p_to(target)[t.index[l]] {
                add_into(&mut out, t.parts[*j].clone(), c.scale(x));
            }
        }
        SymFunc { basis: target, coeffs: out }
    }

    pub fn to_p(&self) -> SymFunc {
        self.convert(Basis::P)
    }

    fn combine(&self, other: &SymFunc, negate: bool) -> SymFunc {
        let (a, b) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_p(), other.to_p())
        };
        let mut coeffs = a.coeffs;
        for (l, c) in b.coeffs {
            add_into(&mut coeffs, l, if negate { -c } else { c });
        }
        SymFunc { basis: a.basis, coeffs }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.combine(other, true)
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, c: &LaurentMPoly) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> SymFunc {
        self.map_coeffs(|x| x.scale(c))
    }

    /// Product, returned in the power-sum basis.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_p();
        let b = other.to_p();
        let mut coeffs = Coeffs::new();
        for (la, ca) in &a.coeffs {
            for (lb, cb) in &b.coeffs {
                add_into(&mut coeffs, la.union(lb), ca * cb);
            }
        }
        SymFunc { basis: Basis::P, coeffs }
    }

    pub fn pow(&self, n: u32) -> SymFunc {
        let mut out = SymFunc::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentMPoly) -> LaurentMPoly) -> SymFunc {
        SymFunc::from_coeffs(self.basis, self.coeffs.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&LaurentMPoly) -> Result<LaurentMPoly>) -> Result<SymFunc> {
        let mut out = Coeffs::new();
        for (l, c) in &self.coeffs {
            add_into(&mut out, l.clone(), f(c)?);
        }
        Ok(SymFunc { basis: self.basis, coeffs: out })
    }

    /// Applies `q -> 1/q`, `t -> 1/t` to the coefficients.
    pub fn bar(&self) -> Result<SymFunc> {
        self.try_map_coeffs(|c| c.bar())
    }

    /// Hall inner product; the p-basis is orthogonal with `<p_l, p_l> = z_l`.
    pub fn hall_inner(&self, other: &SymFunc) -> LaurentMPoly {
        let a = self.to_p();
        let b = other.to_p();
        let mut out = LaurentMPoly::zero();
        for (l, ca) in &a.coeffs {
            if let Some(cb) = b.coeffs.get(l) {
                out += &(ca * cb).scale(&l.z());
            }
        }
        out
    }

    /// `F[-X]`.
    pub fn omega(&self) -> SymFunc {
        let p = self.to_p();
        let coeffs = p
            .coeffs
            .into_iter()
            .map(|(l, c)| {
                let c = if l.len() % 2 == 1 { -c } else { c };
                (l, c)
            })
            .collect();
        SymFunc { basis: Basis::P, coeffs }
    }

    /// `bar(F)[-X]`.
    pub fn omega_bar(&self) -> Result<SymFunc> {
        self.omega().bar()
    }

    pub fn plethysm(&self, a: &AlphabetExpr) -> SymFunc {
        plethysm::plethysm(self, a)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(l, c)| json!({"partition": l.to_json(), "value": c.to_json()}))
            .collect();
        json!({"basis": self.basis.name(), "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<SymFunc> {
        let basis: Basis = v
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing `basis`".into()))?
            .parse()?;
        let items = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing `coeffs`".into()))?;
        let mut coeffs = Coeffs::new();
        for item in items {
            let l = Partition::from_json(item.get("partition").ok_or_else(|| Error::Parse("missing `partition`".into()))?)?;
            let c = LaurentMPoly::from_json(item.get("value").ok_or_else(|| Error::Parse("missing `value`".into()))?)?;
            add_into(&mut coeffs, l, c);
        }
        Ok(SymFunc { basis, coeffs })
    }
}

/// All partitions of `n` in the order used by the transition tables.
pub fn basis_index(n: u32) -> Vec<Partition> {
    partitions_of(n)
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            return self.coeffs == other.coeffs;
        }
        self.to_p().coeffs == other.to_p().coeffs
    }
}

impl Eq for SymFunc {}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (l, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
            if c.is_one() {
                write!(f, "{}[{}]", self.basis, parts.join(","))?;
            } else {
                write!(f, "({c})*{}[{}]", self.basis, parts.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! sym_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $m(self, rhs: &SymFunc) -> SymFunc {
                SymFunc::$m(self, rhs)
            }
        }
        impl std::ops::$tr<SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $m(self, rhs: SymFunc) -> SymFunc {
                SymFunc::$m(&self, &rhs)
            }
        }
    };
}

sym_binop!(Add, add);
sym_binop!(Sub, sub);
sym_binop!(Mul, mul);

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc::neg(self)
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(Basis::P), |a, b| a.add(&b))
    }
}

/// Parses `"c*s[2,1] + s[3]"`-style sums. Each term is `[(coeff)*]b[parts]`.
pub fn sym(s: &str) -> SymFunc {
    parse_sym(s).unwrap_or_else(|e| panic!("bad symmetric function literal `{s}`: {e}"))
}

pub fn parse_sym(s: &str) -> Result<SymFunc> {
    let mut out: Option<SymFunc> = None;
    let mut depth = 0i32;
    let mut start = 0;
    let bytes: Vec<char> = s.chars().collect();
    let mut pieces = Vec::new();
    for (i, &ch) in bytes.iter().enumerate() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '+' if depth == 0 => {
                pieces.push(bytes[start..i].iter().collect::<String>());
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(bytes[start..].iter().collect::<String>());
    for piece in pieces {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (coef, elem) = match piece.rfind('*') {
            Some(i) if piece[i + 1..].contains('[') => (piece[..i].trim(), piece[i + 1..].trim()),
            _ => ("1", piece),
        };
        let coef: LaurentMPoly = coef.trim_start_matches('(').trim_end_matches(')').parse()?;
        let open = elem.find('[').ok_or_else(|| Error::Parse(format!("bad term `{piece}`")))?;
        let basis: Basis = elem[..open].trim().parse()?;
        let inner = elem[open + 1..].trim_end_matches(']');
        let parts = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition in `{piece}`"))))
                .collect::<Result<Vec<_>>>()?
        };
        let term = SymFunc::term(basis, Partition::new(parts), coef);
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    Ok(out.unwrap_or_else(|| SymFunc::zero(Basis::P)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_up_to;
    use crate::ring::poly;
    use proptest::prelude::*;

    #[test]
    fn degree_one_bases_coincide() {
        let all: Vec<SymFunc> = Basis::ALL.iter().map(|&b| SymFunc::basis_element(b, &[1])).collect();
        for f in &all {
            assert_eq!(f, &all[0]);
        }
    }

    #[test]
    fn standard_values() {
        assert_eq!(SymFunc::h(&[2]).convert(Basis::S), SymFunc::s(&[2]));
        assert_eq!(SymFunc::e(&[2]).convert(Basis::S), SymFunc::s(&[1, 1]));
        assert_eq!(SymFunc::h(&[1, 1]).convert(Basis::S), sym("s[2] + s[1,1]"));
        assert_eq!(SymFunc::s(&[2, 1]).convert(Basis::M), sym("m[2,1] + 2*m[1,1,1]"));
        assert_eq!(SymFunc::p(&[2]).convert(Basis::M), SymFunc::m(&[2]));
        assert_eq!(SymFunc::p(&[1, 1]).convert(Basis::M), sym("m[2] + 2*m[1,1]"));
        assert_eq!(SymFunc::s(&[1, 1, 1]).convert(Basis::E), SymFunc::e(&[3]));
    }

    #[test]
    fn power_sum_expansion_of_small_chi() {
        let f = sym("m[3] + (1+2*q)*m[2,1] + (1+4*q+q^2)*m[1,1,1]");
        let expect = sym("(1/3*q^2-2/3*q+1/3)*p[3] + (-1/2*q^2+1/2)*p[2,1] + (1/6*q^2+2/3*q+1/6)*p[1,1,1]");
        assert_eq!(f.to_p(), expect.to_p());
        assert_eq!(f.to_p().coeff(&Partition::new(vec![3])), poly("(q^2-2*q+1)/3"));
        assert_eq!(f.hall_inner(&SymFunc::h(&[2, 1])), poly("1+2*q"));
        assert_eq!(f.hall_inner(&SymFunc::h(&[1, 1, 1])), poly("1+4*q+q^2"));
    }

    #[test]
    fn hall_pairing() {
        assert_eq!(SymFunc::p(&[2]).hall_inner(&SymFunc::p(&[2])), poly("2"));
        assert_eq!(SymFunc::p(&[1, 1]).hall_inner(&SymFunc::p(&[1, 1])), poly("2"));
        for n in 0..=5 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    let v = SymFunc::s(a.parts()).hall_inner(&SymFunc::s(b.parts()));
                    assert_eq!(v, LaurentMPoly::int((a == b) as i64));
                    let v = SymFunc::h(a.parts()).hall_inner(&SymFunc::m(b.parts()));
                    assert_eq!(v, LaurentMPoly::int((a == b) as i64));
                }
            }
        }
    }

    #[test]
    fn round_trips_to_degree_eight() {
        for lam in partitions_up_to(8) {
            for &b in &Basis::ALL {
                let f = SymFunc::basis_element(b, lam.parts());
                for &c in &Basis::ALL {
                    assert_eq!(f.convert(c).convert(b).coeffs(), f.coeffs(), "{b}{lam} via {c}");
                }
            }
        }
    }

    #[test]
    fn omega_and_bar() {
        assert_eq!(SymFunc::h(&[3]).omega(), SymFunc::e(&[3]).scale(&poly("-1")));
        assert_eq!(SymFunc::h(&[2]).omega(), SymFunc::e(&[2]));
        let f = sym("(q+t^2)*s[2,1] + q^-1*s[3]");
        assert_eq!(f.omega_bar().unwrap().omega_bar().unwrap(), f);
        assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn json_round_trip() {
        let f = sym("(q+t)*s[2,1] + s[3] + 7*s[]");
        let v = f.to_json();
        assert_eq!(v["basis"], "s");
        let g = SymFunc::from_json(&v).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.basis(), Basis::S);
    }

    fn arb_sym(max_deg: u32) -> impl Strategy<Value = SymFunc> {
        let parts = partitions_up_to(max_deg);
        let len = parts.len();
        (proptest::collection::vec((0..len, -3i64..4, 0i32..3), 1..5), 0usize..5).prop_map(move |(terms, b)| {
            SymFunc::from_coeffs(
                Basis::ALL[b],
                terms.into_iter().map(|(i, c, e)| {
                    (parts[i].clone(), LaurentMPoly::monomial(&[(crate::ring::Var::Q, e)], Rational::from_int(c)))
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn product_is_commutative_and_distributive(f in arb_sym(3), g in arb_sym(3), h in arb_sym(2)) {
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        }

        #[test]
        fn conversions_are_linear(f in arb_sym(5), g in arb_sym(5), b in 0usize..5) {
            let b = Basis::ALL[b];
            prop_assert_eq!(f.add(&g).convert(b), f.convert(b).add(&g.convert(b)));
        }
    }
}
