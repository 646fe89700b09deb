//! Multivariate Laurent polynomials over `Q` with dense exponent vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::{Error, Result};

/// A scalar variable. The derived order is the fixed variable order used for
/// exponent vectors and for the graded-lex monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    T,
    Y(u16),
    Z,
    U,
    V,
    X(u16),
    /// Free symbolic parameters (symbolic corner weights and the like).
    W(u16),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => write!(f, "q"),
            Var::T => write!(f, "t"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z => write!(f, "z"),
            Var::U => write!(f, "u"),
            Var::V => write!(f, "v"),
            Var::X(i) => write!(f, "x{i}"),
            Var::W(i) => write!(f, "w{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        let idx = |rest: &str| -> Result<u16> {
            rest.parse::<u16>()
                .map_err(|_| Error::Parse(format!("unknown variable `{s}`")))
        };
        match s {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "z" => Ok(Var::Z),
            "u" => Ok(Var::U),
            "v" => Ok(Var::V),
            _ if s.starts_with('y') => Ok(Var::Y(idx(&s[1..])?)),
            _ if s.starts_with('x') => Ok(Var::X(idx(&s[1..])?)),
            _ if s.starts_with('w') => Ok(Var::W(idx(&s[1..])?)),
            _ => Err(Error::Parse(format!("unknown variable `{s}`"))),
        }
    }
}

pub type Exps = SmallVec<[i32; 4]>;
pub type VarList = SmallVec<[Var; 4]>;

/// Graded lexicographic comparison of exponent vectors.
pub fn mono_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// A Laurent polynomial in an ordered list of variables.
///
/// Terms are stored sorted by decreasing graded-lex order, without zero
/// coefficients, so structural equality on a shared variable list is
/// mathematical equality.
#[derive(Clone)]
pub struct LaurentMPoly {
    vars: VarList,
    terms: Vec<(Exps, Rational)>,
}

type Term = (Exps, Rational);

fn sort_and_combine(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort_unstable_by(|x, y| mono_cmp(&y.0, &x.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1 += &c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|t| !t.1.is_zero());
    out
}

fn merge(a: &[Term], b: &[Term], sign_b: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match mono_cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if sign_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if sign_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    for t in &b[j..] {
        let c = if sign_b { -&t.1 } else { t.1.clone() };
        out.push((t.0.clone(), c));
    }
    out
}

fn union_vars(a: &VarList, b: &VarList) -> VarList {
    let mut out: VarList = a.iter().chain(b.iter()).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

impl LaurentMPoly {
    pub fn zero() -> Self {
        LaurentMPoly { vars: VarList::new(), terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentMPoly { vars: VarList::new(), terms: vec![(Exps::new(), c)] }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    /// `coeff * prod v^e` over the given factors.
    pub fn monomial(factors: &[(Var, i32)], coeff: Rational) -> Self {
        let mut pairs: Vec<(Var, i32)> = Vec::new();
        for &(v, e) in factors {
            match pairs.iter_mut().find(|(w, _)| *w == v) {
                Some(p) => p.1 += e,
                None => pairs.push((v, e)),
            }
        }
        pairs.sort_unstable();
        let vars: VarList = pairs.iter().map(|p| p.0).collect();
        let exps: Exps = pairs.iter().map(|p| p.1).collect();
        if coeff.is_zero() {
            return LaurentMPoly { vars, terms: Vec::new() };
        }
        LaurentMPoly { vars, terms: vec![(exps, coeff)] }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(&[(v, 1)], Rational::one())
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(&[(v, e)], Rational::one())
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::var_pow(Var::Q, e)
    }

    /// Builds a polynomial from raw terms over `vars` (any order, duplicates allowed).
    pub fn from_terms(vars: &[Var], terms: Vec<(Vec<i32>, Rational)>) -> Result<Self> {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by_key(|&i| vars[i]);
        let sorted: VarList = order.iter().map(|&i| vars[i]).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate variable".into()));
        }
        let mut out = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::LengthMismatch { expected: vars.len(), got: e.len() });
            }
            out.push((order.iter().map(|&i| e[i]).collect::<Exps>(), c));
        }
        Ok(LaurentMPoly { vars: sorted, terms: sort_and_combine(out) })
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].1.is_one()
            && self.terms[0].0.iter().all(|&e| e == 0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|t| t.1.clone())
            .unwrap_or_default()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.terms[0].0.iter().all(|&e| e == 0) => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// Re-expresses over a superset of the current variables.
    pub fn align_to(&self, vars: &VarList) -> LaurentMPoly {
        if self.vars == *vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("align_to needs a superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Exps = smallvec::smallvec![0; vars.len()];
                for (k, &x) in e.iter().enumerate() {
                    ne[map[k]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        // Inserting zero columns preserves graded-lex order.
        LaurentMPoly { vars: vars.clone(), terms }
    }

    fn aligned(&self, other: &LaurentMPoly) -> (LaurentMPoly, LaurentMPoly) {
        let vars = union_vars(&self.vars, &other.vars);
        (self.align_to(&vars), other.align_to(&vars))
    }

    /// Drops variables that occur with exponent zero in every term.
    pub fn compact(&self) -> LaurentMPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&k| self.terms.iter().any(|(e, _)| e[k] != 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: VarList = keep.iter().map(|&k| self.vars[k]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (keep.iter().map(|&k| e[k]).collect::<Exps>(), c.clone()))
            .collect();
        LaurentMPoly { vars, terms: sort_and_combine(terms) }
    }

    pub fn add(&self, other: &LaurentMPoly) -> LaurentMPoly {
        if self.is_zero() && self.vars.is_empty() {
            return other.clone();
        }
        if other.is_zero() && other.vars.is_empty() {
            return self.clone();
        }
        if self.vars == other.vars {
            return LaurentMPoly { vars: self.vars.clone(), terms: merge(&self.terms, &other.terms, false) };
        }
        let (a, b) = self.aligned(other);
        LaurentMPoly { terms: merge(&a.terms, &b.terms, false), vars: a.vars }
    }

    pub fn sub(&self, other: &LaurentMPoly) -> LaurentMPoly {
        if self.vars == other.vars {
            return LaurentMPoly { vars: self.vars.clone(), terms: merge(&self.terms, &other.terms, true) };
        }
        let (a, b) = self.aligned(other);
        LaurentMPoly { terms: merge(&a.terms, &b.terms, true), vars: a.vars }
    }

    pub fn neg(&self) -> LaurentMPoly {
        LaurentMPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentMPoly) -> LaurentMPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentMPoly { vars: union_vars(&self.vars, &other.vars), terms: Vec::new() };
        }
        if let Some(c) = other.as_constant() {
            if other.vars.is_empty() || self.vars == other.vars {
                return self.scale(&c);
            }
        }
        if let Some(c) = self.as_constant() {
            if self.vars.is_empty() || self.vars == other.vars {
                return other.scale(&c);
            }
        }
        let (a, b) = if self.vars == other.vars {
            (self.clone(), other.clone())
        } else {
            self.aligned(other)
        };
        let mut prods = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                prods.push((e, ca * cb));
            }
        }
        LaurentMPoly { terms: sort_and_combine(prods), vars: a.vars }
    }

    pub fn scale(&self, c: &Rational) -> LaurentMPoly {
        if c.is_zero() {
            return LaurentMPoly { vars: self.vars.clone(), terms: Vec::new() };
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentMPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentMPoly {
        let mut out = LaurentMPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Applies `f` to every exponent vector (must be injective on the support).
    fn map_exps(&self, f: impl Fn(&Exps) -> Exps) -> LaurentMPoly {
        let terms = self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect();
        LaurentMPoly { vars: self.vars.clone(), terms: sort_and_combine(terms) }
    }

    /// Conjugation `q -> 1/q`, `t -> 1/t`.
    pub fn bar(&self) -> Result<LaurentMPoly> {
        for (k, v) in self.vars.iter().enumerate() {
            if !matches!(v, Var::Q | Var::T) && self.terms.iter().any(|(e, _)| e[k] != 0) {
                return Err(Error::VariableOutOfScope(v.to_string()));
            }
        }
        Ok(self.map_exps(|e| e.iter().map(|x| -x).collect()))
    }

    /// The Adams operation `p_n`: every variable raised to the `n`-th power.
    pub fn frobenius(&self, n: u32) -> LaurentMPoly {
        assert!(n >= 1, "frobenius power needs n >= 1");
        if n == 1 {
            return self.clone();
        }
        let n = n as i32;
        // Scaling all exponents by n preserves the order.
        LaurentMPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| x * n).collect(), c.clone())).collect(),
        }
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, var: Var, k: i32) -> LaurentMPoly {
        let Some(pos) = self.vars.iter().position(|&v| v == var) else {
            return if k == 0 { self.clone() } else { LaurentMPoly::zero() };
        };
        let vars: VarList = self.vars.iter().copied().filter(|&v| v != var).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[pos] == k)
            .map(|(e, c)| {
                let ne: Exps = e.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, &x)| x).collect();
                (ne, c.clone())
            })
            .collect();
        LaurentMPoly { vars, terms: sort_and_combine(terms) }
    }

    /// Smallest and largest exponent of `var` over the support.
    pub fn exp_range(&self, var: Var) -> Option<(i32, i32)> {
        let pos = self.vars.iter().position(|&v| v == var);
        let mut it = self.terms.iter().map(|(e, _)| pos.map(|p| e[p]).unwrap_or(0));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Multiplies by a monomial given as `(var, exponent)` pairs.
    pub fn mul_monomial(&self, factors: &[(Var, i32)]) -> LaurentMPoly {
        self.mul(&LaurentMPoly::monomial(factors, Rational::one()))
    }

    /// Substitutes `var -> value` where `value` is any Laurent polynomial; only
    /// nonnegative powers of `var` are allowed unless `value` is a monomial.
    pub fn substitute(&self, var: Var, value: &LaurentMPoly) -> Result<LaurentMPoly> {
        let Some(pos) = self.vars.iter().position(|&v| v == var) else {
            return Ok(self.clone());
        };
        let rest: VarList = self.vars.iter().copied().filter(|&v| v != var).collect();
        let mut out = LaurentMPoly::zero();
        for (e, c) in &self.terms {
            let ne: Exps = e.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, &x)| x).collect();
            let base = LaurentMPoly { vars: rest.clone(), terms: vec![(ne, c.clone())] };
            let p = e[pos];
            let factor = if p >= 0 {
                value.pow(p as u32)
            } else {
                LaurentMPoly::one().exact_div(&value.pow((-p) as u32))?
            };
            out = out.add(&base.mul(&factor));
        }
        Ok(out)
    }

    /// Exact quotient `self / b`; `InexactDivision` if `b` does not divide `self`.
    pub fn exact_div(&self, b: &LaurentMPoly) -> Result<LaurentMPoly> {
        if b.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        let (a, b) = self.aligned(b);
        if a.is_zero() {
            return Ok(a);
        }
        let n = a.vars.len();
        if b.terms.len() == 1 {
            let (be, bc) = &b.terms[0];
            let inv = bc.recip();
            let terms = a
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(be.iter()).map(|(x, y)| x - y).collect::<Exps>(), c * &inv))
                .collect();
            return Ok(LaurentMPoly { vars: a.vars, terms });
        }
        let min_exps = |p: &LaurentMPoly| -> Exps {
            (0..n).map(|k| p.terms.iter().map(|(e, _)| e[k]).min().unwrap_or(0)).collect()
        };
        let amin = min_exps(&a);
        let bmin = min_exps(&b);
        let shift = |p: &LaurentMPoly, s: &Exps| -> LaurentMPoly {
            LaurentMPoly {
                vars: p.vars.clone(),
                terms: p
                    .terms
                    .iter()
                    .map(|(e, c)| (e.iter().zip(s.iter()).map(|(x, y)| x - y).collect(), c.clone()))
                    .collect(),
            }
        };
        let big_a = shift(&a, &amin);
        let big_b = shift(&b, &bmin);
        let (lt_e, lt_c) = big_b.terms[0].clone();
        let lt_inv = lt_c.recip();
        let mut r = big_a;
        let mut quot: Vec<Term> = Vec::new();
        while let Some((re, rc)) = r.terms.first() {
            let qe: Exps = re.iter().zip(lt_e.iter()).map(|(x, y)| x - y).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(Error::InexactDivision(format!("{self} / {b}")));
            }
            let qc = rc * &lt_inv;
            let sub: Vec<Term> = big_b
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(qe.iter()).map(|(x, y)| x + y).collect(), c * &qc))
                .collect();
            r.terms = merge(&r.terms, &sub, true);
            quot.push((qe, qc));
        }
        let back: Exps = amin.iter().zip(bmin.iter()).map(|(x, y)| y - x).collect();
        let q = LaurentMPoly { vars: a.vars.clone(), terms: sort_and_combine(quot) };
        Ok(shift(&q, &back))
    }

    /// Divides when exact, otherwise returns `None`.
    pub fn try_div(&self, b: &LaurentMPoly) -> Option<LaurentMPoly> {
        self.exact_div(b).ok()
    }

    pub fn to_json(&self) -> Value {
        let vars: Vec<String> = self.vars.iter().map(|v| v.to_string()).collect();
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e.to_vec(), "coeff": c.to_string()}))
            .collect();
        json!({"vars": vars, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<LaurentMPoly> {
        let bad = |m: &str| Error::Parse(format!("polynomial json: {m}"));
        let vars: Vec<Var> = v
            .get("vars")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing vars"))?
            .iter()
            .map(|x| x.as_str().ok_or_else(|| bad("var name")).and_then(str::parse))
            .collect::<Result<_>>()?;
        let mut terms = Vec::new();
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let exp: Vec<i32> = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("exp"))?
                .iter()
                .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(|| bad("exponent")))
                .collect::<Result<_>>()?;
            let coeff: Rational = match t.get("coeff") {
                Some(Value::String(s)) => s.parse()?,
                Some(Value::Number(n)) => n.as_i64().map(Rational::from_int).ok_or_else(|| bad("coeff"))?,
                _ => return Err(bad("coeff")),
            };
            terms.push((exp, coeff));
        }
        LaurentMPoly::from_terms(&vars, terms)
    }
}

impl PartialEq for LaurentMPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl Eq for LaurentMPoly {}

impl Default for LaurentMPoly {
    fn default() -> Self {
        LaurentMPoly::zero()
    }
}

impl From<Rational> for LaurentMPoly {
    fn from(c: Rational) -> Self {
        LaurentMPoly::constant(c)
    }
}

impl From<i64> for LaurentMPoly {
    fn from(n: i64) -> Self {
        LaurentMPoly::int(n)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<&LaurentMPoly> for &LaurentMPoly {
            type Output = LaurentMPoly;
            fn $m(self, rhs: &LaurentMPoly) -> LaurentMPoly {
                LaurentMPoly::$m(self, rhs)
            }
        }
        impl std::ops::$tr<LaurentMPoly> for LaurentMPoly {
            type Output = LaurentMPoly;
            fn $m(self, rhs: LaurentMPoly) -> LaurentMPoly {
                LaurentMPoly::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&LaurentMPoly> for LaurentMPoly {
            type Output = LaurentMPoly;
            fn $m(self, rhs: &LaurentMPoly) -> LaurentMPoly {
                LaurentMPoly::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<LaurentMPoly> for &LaurentMPoly {
            type Output = LaurentMPoly;
            fn $m(self, rhs: LaurentMPoly) -> LaurentMPoly {
                LaurentMPoly::$m(self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl std::ops::Neg for &LaurentMPoly {
    type Output = LaurentMPoly;
    fn neg(self) -> LaurentMPoly {
        LaurentMPoly::neg(self)
    }
}

impl std::ops::Neg for LaurentMPoly {
    type Output = LaurentMPoly;
    fn neg(self) -> LaurentMPoly {
        LaurentMPoly::neg(&self)
    }
}

impl std::ops::AddAssign<&LaurentMPoly> for LaurentMPoly {
    fn add_assign(&mut self, rhs: &LaurentMPoly) {
        *self = LaurentMPoly::add(self, rhs);
    }
}

impl std::ops::SubAssign<&LaurentMPoly> for LaurentMPoly {
    fn sub_assign(&mut self, rhs: &LaurentMPoly) {
        *self = LaurentMPoly::sub(self, rhs);
    }
}

impl std::iter::Sum for LaurentMPoly {
    fn sum<I: Iterator<Item = LaurentMPoly>>(iter: I) -> LaurentMPoly {
        iter.fold(LaurentMPoly::zero(), |a, b| a.add(&b))
    }
}

impl fmt::Display for LaurentMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| if x == 1 { v.to_string() } else { format!("{v}^{x}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// A small expression parser: `3/2*q^2*t^-1 - (1+q)^2`.

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn err(&self, m: &str) -> Error {
        Error::Parse(format!("{m} at byte {} of `{}`", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn expr(&mut self) -> Result<LaurentMPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentMPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.exact_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn factor(&mut self) -> Result<LaurentMPoly> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                e
            }
            Some(b'-') => {
                self.pos += 1;
                self.factor()?.neg()
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                LaurentMPoly::constant(txt.parse()?)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                LaurentMPoly::var(name.parse()?)
            }
            _ => return Err(self.err("unexpected input")),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            if e >= 0 {
                Ok(base.pow(e as u32))
            } else {
                LaurentMPoly::one().exact_div(&base.pow((-e) as u32))
            }
        } else {
            Ok(base)
        }
    }
}

impl FromStr for LaurentMPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<LaurentMPoly> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}

/// Parses a polynomial literal; panics on malformed input (for tests and constants).
pub fn poly(s: &str) -> LaurentMPoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal `{s}`: {e}"))
}
