//! Characteristic functions as d-words applied to `1`.

use super::ops::{commutator_minus_plus, d_minus, d_plus};
use super::vk::VkElement;
use crate::dyck::{DyckPath, Step};
use crate::error::Result;
use crate::ring::LaurentMPoly;
use crate::symfunc::SymFunc;

/// `chi(pi) = d_{e_1} ... d_{e_2n}(1)`, with `d_+` for an East step and `d_-` for a North step.
pub fn chi_via_word(pi: &DyckPath) -> Result<SymFunc> {
    let mut f = VkElement::one(0);
    for s in pi.steps().iter().rev() {
        f = match s {
            Step::E => d_plus(&f),
            Step::N => d_minus(&f)?,
        };
    }
    f.as_sym()
}

/// `chi(pi, 0)`: as [`chi_via_word`], but every corner (an East step followed by a North
/// step) is replaced by `[d_-, d_+] / (q - 1)`.
pub fn chi0_via_word(pi: &DyckPath) -> Result<SymFunc> {
    let steps = pi.steps();
    let q1 = LaurentMPoly::q() - LaurentMPoly::one();
    let mut f = VkElement::one(0);
    let mut p = steps.len();
    while p > 0 {
        p -= 1;
        f = match steps[p] {
            Step::N if p > 0 && steps[p - 1] == Step::E => {
                p -= 1;
                commutator_minus_plus(&f)?.exact_div(&q1)?
            }
            Step::N => d_minus(&f)?,
            Step::E => d_plus(&f),
        };
    }
    f.as_sym()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfunc::{chi, chi_zero};
    use crate::dyck::enumerate_paths;
    use crate::symfunc::sym;

    #[test]
    fn example_words() {
        let pi: DyckPath = "NNEENE".parse().unwrap();
        assert_eq!(chi_via_word(&pi).unwrap(), sym("s[3] + (1+q)*s[2,1] + q*s[1,1,1]"));
        assert_eq!(chi0_via_word(&pi).unwrap(), sym("s[2,1] + q*s[1,1,1]"));
        assert_eq!(chi_via_word(&DyckPath::empty()).unwrap(), SymFunc::one());
    }

    #[test]
    fn words_match_enumeration() {
        for n in 0..=4 {
            for pi in enumerate_paths(n).unwrap() {
                assert_eq!(chi_via_word(&pi).unwrap(), chi(&pi).unwrap(), "{pi}");
                assert_eq!(chi0_via_word(&pi).unwrap(), chi_zero(&pi).unwrap(), "{pi}");
                if pi.corners().is_empty() {
                    assert_eq!(chi0_via_word(&pi).unwrap(), chi_via_word(&pi).unwrap());
                }
            }
        }
    }
}
