//! The elements `N_alpha in V_{l(alpha)}` and the monomials `y_alpha`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::ops::{commutator_minus_plus, d_minus, d_plus, d_plus_star};
use super::vk::VkElement;
use crate::combinat::{compositions_of, Composition};
use crate::error::Result;
use crate::ring::{LaurentMPoly, Var};
use crate::symfunc::SymFunc;

fn cache() -> &'static Mutex<HashMap<Vec<u32>, VkElement>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, VkElement>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn q_minus_1() -> LaurentMPoly {
    LaurentMPoly::q() - LaurentMPoly::one()
}

/// `N_alpha`, from `N_() = 1`, `N_{1,alpha} = d_+ N_alpha` and
/// `N_{a,alpha} = t^{a-1}/(q-1) [d_-, d_+] sum_{beta |= a-1} d_-^{l(beta)-1} N_{alpha beta}`.
pub fn n_alpha(alpha: &Composition) -> Result<VkElement> {
    if let Some(v) = cache().lock().expect("cache lock").get(alpha.parts()) {
        return Ok(v.clone());
    }
    let parts = alpha.parts();
    let value = match parts.split_first() {
        None => VkElement::one(0),
        Some((1, rest)) => d_plus(&n_alpha(&Composition(rest.to_vec()))?),
        Some((&a, rest)) => {
            let rest = Composition(rest.to_vec());
            let mut sum = VkElement::zero(rest.len() + 1);
            for beta in compositions_of(a - 1) {
                let mut g = n_alpha(&rest.concat(&beta))?;
                for _ in 1..beta.len() {
                    g = d_minus(&g)?;
                }
                sum = sum.add(&g);
            }
            commutator_minus_plus(&sum)?
                .exact_div(&q_minus_1())?
                .scale(&LaurentMPoly::var_pow(Var::T, a as i32 - 1))
        }
    };
    cache().lock().expect("cache lock").insert(parts.to_vec(), value.clone());
    Ok(value)
}

/// `D_alpha = d_-^{l(alpha)} N_alpha`.
pub fn d_alpha_operator(alpha: &Composition) -> Result<SymFunc> {
    let mut f = n_alpha(alpha)?;
    while f.level() > 0 {
        f = d_minus(&f)?;
    }
    f.as_sym()
}

/// `y_alpha = y_1^{alpha_1 - 1} ... y_l^{alpha_l - 1} in V_l`.
pub fn y_alpha(alpha: &Composition) -> VkElement {
    let a: Vec<u32> = alpha.parts().iter().map(|&x| x - 1).collect();
    VkElement::y_monomial(&a)
}

/// `y_{a,alpha}` through the starred recursion: `y_{1 alpha} = d_+^* y_alpha` and
/// `y_{a alpha} = t^{1-a}/(q-1) (d_+^* d_- - d_- d_+^*) sum_{beta |= a-1} q^{1-l(beta)} d_-^{l(beta)-1} y_{alpha beta}`.
pub fn y_alpha_by_recursion(alpha: &Composition) -> Result<VkElement> {
    let parts = alpha.parts();
    let Some((&a, rest)) = parts.split_first() else {
        return Ok(VkElement::one(0));
    };
    let rest = Composition(rest.to_vec());
    if a == 1 {
        return Ok(d_plus_star(&y_alpha(&rest)));
    }
    let mut sum = VkElement::zero(rest.len() + 1);
    for beta in compositions_of(a - 1) {
        let mut g = y_alpha(&rest.concat(&beta));
        for _ in 1..beta.len() {
            g = d_minus(&g)?;
        }
        sum = sum.add(&g.scale(&LaurentMPoly::q_pow(1 - beta.len() as i32)));
    }
    let comm = d_plus_star(&d_minus(&sum)?).sub(&d_minus(&d_plus_star(&sum))?);
    Ok(comm.exact_div(&q_minus_1())?.scale(&LaurentMPoly::var_pow(Var::T, 1 - a as i32)))
}
