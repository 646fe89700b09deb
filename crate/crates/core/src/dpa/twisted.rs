//! Twisted products `F *_m G = F[X + (q-1)(t sum_{i<=m} y_i + sum_{i>m} y_i)] G`.

use super::vk::VkElement;
use crate::combinat::{partitions_of, weak_compositions};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Var};
use crate::symfunc::{AlphabetExpr, SymFunc};

/// `F *_m G` for `F in Sym` and `G in V_k`, `m <= k`.
pub fn twisted_product(f: &SymFunc, m: usize, g: &VkElement) -> Result<VkElement> {
    let k = g.level();
    if m > k {
        return Err(Error::IndexOutOfRange { index: m, max: k });
    }
    let mut shift = LaurentMPoly::zero();
    for i in 1..=k {
        let y = LaurentMPoly::var(Var::Y(i as u16));
        shift += &if i <= m { y * LaurentMPoly::t() } else { y };
    }
    let shift = shift * (LaurentMPoly::q() - LaurentMPoly::one());
    let lifted = VkElement::from_y_symfunc(k, &f.plethysm(&AlphabetExpr::x_plus(shift)))?;
    Ok(lifted.mul(g))
}

/// The spanning set `{s_lambda * y^a : |lambda| + |a| <= deg}` of `V_k`.
pub fn spanning_set(k: usize, deg: u32) -> Result<Vec<VkElement>> {
    let mut out = Vec::new();
    for d in 0..=deg {
        for j in 0..=d {
            for lam in partitions_of(j) {
                let s = SymFunc::s(lam.parts());
                for a in weak_compositions(d - j, k) {
                    out.push(twisted_product(&s, 0, &VkElement::y_monomial(&a))?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpa::{d_minus, d_plus, d_plus_star};
    use crate::symfunc::sym;

    #[test]
    fn twisted_laws() {
        let fs = [sym("s[1]"), sym("s[2]").sub(&sym("q*s[1,1]"))];
        for k in 0..=2 {
            for g in spanning_set(k, 2).unwrap() {
                for f in &fs {
                    for m in 0..=k {
                        let fg = twisted_product(f, m, &g).unwrap();
                        if m == 0 {
                            assert_eq!(d_plus(&fg), twisted_product(f, 0, &d_plus(&g)).unwrap());
                        }
                        if m < k {
                            assert_eq!(d_minus(&fg).unwrap(), twisted_product(f, m, &d_minus(&g).unwrap()).unwrap());
                        }
                        assert_eq!(d_plus_star(&fg), twisted_product(f, m + 1, &d_plus_star(&g)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn spanning_set_sizes() {
        assert_eq!(spanning_set(0, 3).unwrap().len(), 1 + 1 + 2 + 3);
        assert_eq!(spanning_set(1, 1).unwrap().len(), 1 + 2);
    }
}
