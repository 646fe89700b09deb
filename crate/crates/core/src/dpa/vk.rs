use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::combinat::{json_u32_list, Partition};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Var};
use crate::symfunc::{Basis, SymFunc};

/// Exponent vector of a monomial `y_1^{a_1} ... y_k^{a_k}`.
pub type YExp = SmallVec<[u32; 6]>;

/// An element of `V_k = Sym[X] (x) Q[y_1..y_k]`, stored as a map from
/// y-monomials to symmetric functions (kept in the power-sum basis).
#[derive(Clone)]
pub struct VkElement {
    k: usize,
    terms: BTreeMap<YExp, SymFunc>,
}

impl VkElement {
    pub fn zero(k: usize) -> Self {
        VkElement { k, terms: BTreeMap::new() }
    }

    /// The constant `1` in `V_k`.
    pub fn one(k: usize) -> Self {
        VkElement::from_sym(k, SymFunc::one())
    }

    /// A y-free element of `V_k`.
    pub fn from_sym(k: usize, f: SymFunc) -> Self {
        let mut out = VkElement::zero(k);
        out.add_term(YExp::from_elem(0, k), f);
        out
    }

    /// `y^a` in `V_{len(a)}`.
    pub fn y_monomial(a: &[u32]) -> Self {
        let mut out = VkElement::zero(a.len());
        out.add_term(a.iter().copied().collect(), SymFunc::one());
        out
    }

    /// Reads a symmetric function whose coefficients involve `y_1..y_k`
    /// (as `Var::Y(i)`) and splits those coefficients by y-monomial.
    pub fn from_y_symfunc(k: usize, f: &SymFunc) -> Result<Self> {
        let f = f.to_p();
        let mut out = VkElement::zero(k);
        for (lam, c) in f.coeffs() {
            let vars = c.vars().to_vec();
            let mut pos: Vec<Option<usize>> = Vec::with_capacity(vars.len());
            for v in &vars {
                pos.push(match v {
                    Var::Y(i) if (1..=k as u16).contains(i) => Some(*i as usize - 1),
                    Var::Y(i) => return Err(Error::VariableOutOfScope(format!("y{i} at level {k}"))),
                    _ => None,
                });
            }
            let rest: Vec<Var> = vars.iter().copied().filter(|v| !matches!(v, Var::Y(_))).collect();
            let mut blocks: BTreeMap<YExp, Vec<(Vec<i32>, crate::ring::Rational)>> = BTreeMap::new();
            for (e, x) in c.terms() {
                let mut ye = YExp::from_elem(0, k);
                let mut re = Vec::with_capacity(rest.len());
                for (idx, &ex) in e.iter().enumerate() {
                    match pos[idx] {
                        Some(p) => {
                            if ex < 0 {
                                return Err(Error::VariableOutOfScope("negative power of y".into()));
                            }
                            ye[p] = ex as u32;
                        }
                        None => re.push(ex),
                    }
                }
                blocks.entry(ye).or_default().push((re, x.clone()));
            }
            for (ye, ts) in blocks {
                let coeff = LaurentMPoly::from_terms(&rest, ts)?;
                out.add_term(ye, SymFunc::term(Basis::P, lam.clone(), coeff));
            }
        }
        Ok(out)
    }

    /// The same element as a symmetric function with `Var::Y(i)` in the coefficients.
    pub fn to_y_symfunc(&self) -> SymFunc {
        self.terms
            .iter()
            .map(|(a, f)| {
                let mono: Vec<(Var, i32)> =
                    a.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (Var::Y(i as u16 + 1), e as i32)).collect();
                f.scale(&LaurentMPoly::monomial(&mono, crate::ring::Rational::from_int(1)))
            })
            .sum()
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<YExp, SymFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `y^a f`.
    pub fn add_term(&mut self, a: YExp, f: SymFunc) {
        debug_assert_eq!(a.len(), self.k);
        if f.is_zero() {
            return;
        }
        let f = f.to_p();
        match self.terms.get_mut(&a) {
            Some(g) => {
                let s = g.add(&f);
                if s.is_zero() {
                    self.terms.remove(&a);
                } else {
                    *g = s;
                }
            }
            None => {
                self.terms.insert(a, f);
            }
        }
    }

    fn check_level(&self, other: &VkElement) {
        assert_eq!(self.k, other.k, "adding elements of different levels");
    }

    pub fn add(&self, other: &VkElement) -> VkElement {
        self.check_level(other);
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.add_term(a.clone(), f.clone());
        }
        out
    }

    pub fn sub(&self, other: &VkElement) -> VkElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> VkElement {
        self.map_sym(|f| f.neg())
    }

    pub fn scale(&self, c: &LaurentMPoly) -> VkElement {
        self.map_sym(|f| f.scale(c))
    }

    /// Multiplies by a symmetric function.
    pub fn mul_sym(&self, g: &SymFunc) -> VkElement {
        self.map_sym(|f| f.mul(g))
    }

    /// Product of two elements of the same level.
    pub fn mul(&self, other: &VkElement) -> VkElement {
        self.check_level(other);
        let mut out = VkElement::zero(self.k);
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                let ab: YExp = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                out.add_term(ab, f.mul(g));
            }
        }
        out
    }

    /// Multiplication by `y_i^e` (1-based `i`).
    pub fn mul_y(&self, i: usize, e: u32) -> VkElement {
        let mut out = VkElement::zero(self.k);
        for (a, f) in &self.terms {
            let mut a = a.clone();
            a[i - 1] += e;
            out.terms.insert(a, f.clone());
        }
        out
    }

    pub fn map_sym(&self, f: impl Fn(&SymFunc) -> SymFunc) -> VkElement {
        let mut out = VkElement::zero(self.k);
        for (a, g) in &self.terms {
            out.add_term(a.clone(), f(g));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&LaurentMPoly) -> Result<LaurentMPoly>) -> Result<VkElement> {
        let mut out = VkElement::zero(self.k);
        for (a, g) in &self.terms {
            out.add_term(a.clone(), g.try_map_coeffs(&f)?);
        }
        Ok(out)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div(&self, d: &LaurentMPoly) -> Result<VkElement> {
        self.try_map_coeffs(|c| c.exact_div(d))
    }

    pub fn bar(&self) -> Result<VkElement> {
        self.try_map_coeffs(|c| c.bar())
    }

    /// The X-part of a y-free element.
    pub fn as_sym(&self) -> Result<SymFunc> {
        let mut out = SymFunc::zero(Basis::P);
        for (a, f) in &self.terms {
            if a.iter().any(|&e| e > 0) {
                return Err(Error::VariableOutOfScope("element depends on y".into()));
            }
            out = out.add(f);
        }
        Ok(out)
    }

    /// Total degree (X-degree plus y-degree) of every term.
    pub fn degrees(&self) -> std::collections::BTreeSet<u32> {
        let mut out = std::collections::BTreeSet::new();
        for (a, f) in &self.terms {
            let ya: u32 = a.iter().sum();
            for d in f.degrees() {
                out.insert(ya + d);
            }
        }
        out
    }

    /// Flattened `(partition, y-exponent, coefficient)` triples in the given basis.
    pub fn flat_terms(&self, basis: Basis) -> Vec<(Partition, YExp, LaurentMPoly)> {
        let mut out = Vec::new();
        for (a, f) in &self.terms {
            for (l, c) in f.convert(basis).coeffs() {
                out.push((l.clone(), a.clone(), c.clone()));
            }
        }
        out.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        out
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .flat_terms(Basis::S)
            .into_iter()
            .map(|(l, a, c)| json!({"partition": l.to_json(), "yexp": a.to_vec(), "value": c.to_json()}))
            .collect();
        json!({"k": self.k, "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<VkElement> {
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing `k`".into()))? as usize;
        let items = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing `coeffs`".into()))?;
        let mut out = VkElement::zero(k);
        for item in items {
            let l = Partition::from_json(item.get("partition").ok_or_else(|| Error::Parse("missing `partition`".into()))?)?;
            let a = json_u32_list(item.get("yexp").ok_or_else(|| Error::Parse("missing `yexp`".into()))?)?;
            if a.len() != k {
                return Err(Error::LengthMismatch { expected: k, got: a.len() });
            }
            let c = LaurentMPoly::from_json(item.get("value").ok_or_else(|| Error::Parse("missing `value`".into()))?)?;
            out.add_term(a.into_iter().collect(), SymFunc::term(Basis::S, l, c));
        }
        Ok(out)
    }
}

impl PartialEq for VkElement {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.terms == other.terms
    }
}

impl Eq for VkElement {}

impl fmt::Display for VkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (V_{})", self.k);
        }
        let mut first = true;
        for (a, g) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let y: Vec<String> = a
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("y{}", i + 1) } else { format!("y{}^{e}", i + 1) })
                .collect();
            let y = if y.is_empty() { "1".to_string() } else { y.join("*") };
            write!(f, "{y}*({})", g.convert(Basis::S))?;
        }
        write!(f, " (V_{})", self.k)
    }
}

impl fmt::Debug for VkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::ops::Add<&VkElement> for &VkElement {
    type Output = VkElement;
    fn add(self, rhs: &VkElement) -> VkElement {
        VkElement::add(self, rhs)
    }
}

impl std::ops::Sub<&VkElement> for &VkElement {
    type Output = VkElement;
    fn sub(self, rhs: &VkElement) -> VkElement {
        VkElement::sub(self, rhs)
    }
}
