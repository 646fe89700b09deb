use std::fmt;

use serde_json::{json, Value};

use super::laurent::LaurentMPoly;
use crate::error::{Error, Result};

/// A quotient of Laurent polynomials. Not reduced; equality is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct RingFraction {
    pub num: LaurentMPoly,
    pub den: LaurentMPoly,
}

impl RingFraction {
    pub fn new(num: LaurentMPoly, den: LaurentMPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InexactDivision("zero denominator".into()));
        }
        Ok(RingFraction { num, den })
    }

    pub fn from_poly(p: LaurentMPoly) -> Self {
        RingFraction { num: p, den: LaurentMPoly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RingFraction) -> RingFraction {
        if self.den == o.den {
            return RingFraction { num: &self.num + &o.num, den: self.den.clone() };
        }
        RingFraction { num: &self.num * &o.den + &o.num * &self.den, den: &self.den * &o.den }
    }

    pub fn neg(&self) -> RingFraction {
        RingFraction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &RingFraction) -> RingFraction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RingFraction) -> RingFraction {
        RingFraction { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn mul_poly(&self, p: &LaurentMPoly) -> RingFraction {
        RingFraction { num: &self.num * p, den: self.den.clone() }
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Result<LaurentMPoly> {
        self.num.exact_div(&self.den)
    }

    /// Cancels the denominator when it divides the numerator.
    pub fn simplify(&self) -> RingFraction {
        match self.num.exact_div(&self.den) {
            Ok(p) => RingFraction::from_poly(p),
            Err(_) => self.clone(),
        }
    }

    pub fn bar(&self) -> Result<RingFraction> {
        Ok(RingFraction { num: self.num.bar()?, den: self.den.bar()? })
    }

    pub fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
}

impl PartialEq for RingFraction {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RingFraction {}

impl fmt::Display for RingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RingFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
