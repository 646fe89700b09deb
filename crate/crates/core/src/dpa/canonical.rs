//! The basis `y^a B_lambda(1)` of `V_k` and the antilinear involution `N`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::ops::{d_minus, z_op};
use super::vk::{VkElement, YExp};
use crate::combinat::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::ring::{bareiss_solve_multi, LaurentMPoly};
use crate::symfunc::{op_b, Basis, SymFunc};

/// One term `coeff * y^yexp * B_{lambda_1} ... B_{lambda_m}(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTerm {
    pub yexp: YExp,
    pub lambda: Partition,
    pub coeff: LaurentMPoly,
}

/// `B_{lambda_1} B_{lambda_2} ... B_{lambda_m}(1)`, innermost operator `B_{lambda_m}`.
pub fn b_lambda(lambda: &Partition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("cache lock").get(lambda) {
        return f.clone();
    }
    let f = lambda.parts().iter().rev().fold(SymFunc::one(), |f, &r| op_b(r, &f)).convert(Basis::S);
    cache.lock().expect("cache lock").insert(lambda.clone(), f.clone());
    f
}

type Matrix = Arc<Vec<Vec<LaurentMPoly>>>;

/// `inv[lambda][mu]`: the coefficient of `B_lambda(1)` in `s_mu`, both indexed by `partitions_of(d)`.
fn b_inverse(d: u32) -> Result<Matrix> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Matrix>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("cache lock").get(&d) {
        return Ok(m.clone());
    }
    let parts = partitions_of(d);
    let cols: Vec<SymFunc> = parts.iter().map(b_lambda).collect();
    let m: Vec<Vec<LaurentMPoly>> =
        parts.iter().map(|mu| cols.iter().map(|c| c.coeff(mu)).collect()).collect();
    let unit: Vec<Vec<LaurentMPoly>> = (0..parts.len())
        .map(|j| (0..parts.len()).map(|i| if i == j { LaurentMPoly::one() } else { LaurentMPoly::zero() }).collect())
        .collect();
    let sol = bareiss_solve_multi(&m, &unit)?;
    // sol.numerators[mu][lambda] / den; transpose into inv[lambda][mu]
    let mut inv = vec![vec![LaurentMPoly::zero(); parts.len()]; parts.len()];
    for (mu, col) in sol.numerators.iter().enumerate() {
        for (lam, x) in col.iter().enumerate() {
            inv[lam][mu] = x.exact_div(&sol.denominator)?;
        }
    }
    let inv = Arc::new(inv);
    cache.lock().expect("cache lock").insert(d, inv.clone());
    Ok(inv)
}

/// Expands `f` in the basis `y^a B_lambda(1)`, ordered by `(|a|, a)` and then by `(|lambda|, lambda)`.
pub fn canonical_expand(f: &VkElement) -> Result<Vec<CanonicalTerm>> {
    let mut out = Vec::new();
    for (a, g) in f.terms() {
        let g = g.convert(Basis::S);
        for d in g.degrees() {
            let inv = b_inverse(d)?;
            let parts = partitions_of(d);
            let comp: Vec<LaurentMPoly> = parts.iter().map(|mu| g.coeff(mu)).collect();
            for (lam, row) in parts.iter().zip(inv.iter()) {
                let mut c = LaurentMPoly::zero();
                for (x, y) in row.iter().zip(&comp) {
                    if !x.is_zero() && !y.is_zero() {
                        c += &(x * y);
                    }
                }
                if !c.is_zero() {
                    out.push(CanonicalTerm { yexp: a.clone(), lambda: lam.clone(), coeff: c });
                }
            }
        }
    }
    out.sort_by(|x, y| {
        let ka = (x.yexp.iter().sum::<u32>(), &x.yexp, x.lambda.size(), &x.lambda);
        let kb = (y.yexp.iter().sum::<u32>(), &y.yexp, y.lambda.size(), &y.lambda);
        ka.cmp(&kb)
    });
    Ok(out)
}

/// Inverse of [`canonical_expand`].
pub fn canonical_reconstruct(k: usize, terms: &[CanonicalTerm]) -> VkElement {
    let mut out = VkElement::zero(k);
    for t in terms {
        out.add_term(t.yexp.clone(), b_lambda(&t.lambda).scale(&t.coeff));
    }
    out
}

/// `N(y^a B_lambda(1)) = (-1)^m d_-^m z^a z_{k+1}^{lambda_1 - 1} ... z_{k+m}^{lambda_m - 1}(1)`.
fn basis_image(a: &YExp, lambda: &Partition) -> Result<VkElement> {
    static CACHE: OnceLock<Mutex<HashMap<(YExp, Partition), VkElement>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (a.clone(), lambda.clone());
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let exps: Vec<u32> = a.iter().copied().chain(lambda.parts().iter().map(|&l| l - 1)).collect();
    let mut g = VkElement::one(exps.len());
    for (i, &e) in exps.iter().enumerate() {
        for _ in 0..e {
            g = z_op(i + 1, &g)?;
        }
    }
    for _ in 0..lambda.len() {
        g = d_minus(&g)?.neg();
    }
    cache.lock().expect("cache lock").insert(key, g.clone());
    Ok(g)
}

/// The involution `N` of `V_k`: antilinear (`q -> 1/q`, `t -> 1/t` on coefficients), with
/// `N(1) = 1`, `N T_i = T_i^{-1} N`, `N d_- = d_- N`, `N d_+ = d_+^* N` and `N y_i = z_i N`.
pub fn involution_n(f: &VkElement) -> Result<VkElement> {
    let mut out = VkElement::zero(f.level());
    for t in canonical_expand(f)? {
        let c = t.coeff.bar().map_err(|e| Error::AssertionFailure(format!("coefficient outside Q(q,t): {e}")))?;
        out = out.add(&basis_image(&t.yexp, &t.lambda)?.scale(&c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{compositions_of, Composition};
    use crate::dpa::{n_alpha, spanning_set, y_alpha};
    use crate::ring::poly;
    use crate::symfunc::sym;

    #[test]
    fn small_expansions() {
        let y = VkElement::y_monomial(&[2, 1]);
        let e = canonical_expand(&y).unwrap();
        assert_eq!(e, vec![CanonicalTerm { yexp: [2, 1].into_iter().collect(), lambda: Partition::empty(), coeff: LaurentMPoly::one() }]);
        let s1 = VkElement::from_sym(0, sym("s[1]"));
        let e = canonical_expand(&s1).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].lambda, Partition::new(vec![1]));
        assert_eq!(e[0].coeff, LaurentMPoly::int(-1));
    }

    #[test]
    fn round_trip() {
        for k in 0..=2 {
            for f in spanning_set(k, 4).unwrap() {
                let f = f.scale(&poly("q^-1 + 2*t"));
                let back = canonical_reconstruct(k, &canonical_expand(&f).unwrap());
                assert_eq!(back, f);
            }
        }
    }

    #[test]
    fn involution_on_y_alpha() {
        assert_eq!(involution_n(&VkElement::one(0)).unwrap(), VkElement::one(0));
        for n in 1..=4 {
            for alpha in compositions_of(n) {
                let lhs = involution_n(&y_alpha(&alpha)).unwrap();
                let e = (alpha.size() - alpha.len() as u32) as i32;
                assert_eq!(lhs, n_alpha(&alpha).unwrap().scale(&LaurentMPoly::q_pow(e)), "{alpha}");
            }
        }
        let _ = Composition::parse("1").unwrap();
    }

    #[test]
    fn involution_squares_to_identity() {
        for k in 0..=1 {
            for f in spanning_set(k, 3).unwrap() {
                let f = f.scale(&poly("q + t^-1"));
                assert_eq!(involution_n(&involution_n(&f).unwrap()).unwrap(), f, "{f}");
            }
        }
    }
}
