//! Closed-form expansions of `h_m[-X]`, `m_nu[q-1]` and `m_lambda[(q-1)X]`.

use super::{add_into, Basis, Coeffs, SymFunc};
use crate::combinat::{compatibility_split, compositions_of, partitions_of, rearrangements, Composition, Partition};
use crate::ring::{LaurentMPoly, Rational};

/// `h_m[-X] = sum_{alpha |= m} (-1)^{l(alpha)} h_alpha`, in the h-basis.
pub fn h_neg_x_expansion(m: u32) -> SymFunc {
    let mut coeffs = Coeffs::new();
    for alpha in compositions_of(m) {
        let sign = if alpha.len() % 2 == 0 { 1 } else { -1 };
        add_into(&mut coeffs, alpha.sorted(), LaurentMPoly::int(sign));
    }
    SymFunc::from_coeffs(Basis::H, coeffs)
}

/// `(-1)^{l(alpha)} (1 - q^{alpha_1})`, the weight of one rearrangement.
fn block_weight(alpha: &Composition) -> LaurentMPoly {
    let w = LaurentMPoly::one() - LaurentMPoly::q_pow(alpha.parts()[0] as i32);
    if alpha.len() % 2 == 1 {
        -w
    } else {
        w
    }
}

/// `m_nu[q-1] = (-1)^{l(nu)} sum_{alpha in R(nu)} (1 - q^{alpha_1})`.
pub fn m_at_qminus1(nu: &Partition) -> LaurentMPoly {
    if nu.is_empty() {
        return LaurentMPoly::one();
    }
    rearrangements(nu).iter().map(block_weight).sum()
}

/// `m_lambda[(q-1)X] = sum_mu m_mu sum_{alpha in R(lambda), compatible with mu}
/// prod_i (-1)^{l(alpha^i)} (1 - q^{alpha^i_1})`, in the m-basis.
pub fn m_qminus1_expansion(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    let alphas = rearrangements(lambda);
    let mut coeffs = Coeffs::new();
    for mu in partitions_of(n) {
        let mut c = LaurentMPoly::zero();
        for alpha in &alphas {
            if let Some(blocks) = compatibility_split(alpha, &mu).expect("sizes agree") {
                c += &blocks.iter().fold(LaurentMPoly::one(), |acc, b| acc * block_weight(b));
            }
        }
        add_into(&mut coeffs, mu, c);
    }
    SymFunc::from_coeffs(Basis::M, coeffs)
}

/// `q`-multinomial `[n; alpha]_q` as a polynomial in `q`.
pub(crate) fn q_multinomial(alpha: &[u32]) -> LaurentMPoly {
    fn q_factorial(n: u32) -> LaurentMPoly {
        (1..=n).fold(LaurentMPoly::one(), |acc, k| {
            acc * (0..k).map(|i| LaurentMPoly::q_pow(i as i32)).sum::<LaurentMPoly>()
        })
    }
    let n: u32 = alpha.iter().sum();
    let den = alpha.iter().fold(LaurentMPoly::one(), |acc, &a| acc * q_factorial(a));
    q_factorial(n).exact_div(&den).expect("q-multinomials are polynomials")
}

/// `sum_{alpha |= n} (-1)^{l(alpha)} (1 - q^{alpha_1}) * coefficient(alpha)`.
pub fn signed_composition_sum(n: u32, coefficient: impl Fn(&Composition) -> LaurentMPoly) -> LaurentMPoly {
    compositions_of(n).iter().map(|a| block_weight(a) * coefficient(a)).sum()
}

/// The ordinary multinomial `n! / prod alpha_i!`.
pub(crate) fn multinomial(alpha: &[u32]) -> Rational {
    let n: u32 = alpha.iter().sum();
    alpha.iter().fold(crate::ring::rational::factorial(n as u64), |acc, &a| {
        acc * crate::ring::rational::factorial(a as u64).recip()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_up_to;
    use crate::ring::poly;
    use crate::symfunc::AlphabetExpr;

    #[test]
    fn h_of_minus_x() {
        let minus = AlphabetExpr::scaled_x(poly("-1"));
        assert_eq!(h_neg_x_expansion(2), SymFunc::h(&[1, 1]).sub(&SymFunc::h(&[2])));
        for m in 0..=7 {
            assert_eq!(h_neg_x_expansion(m), SymFunc::h(&[m]).plethysm(&minus));
        }
    }

    #[test]
    fn m_at_q_minus_one() {
        assert_eq!(m_at_qminus1(&Partition::new(vec![1])), poly("q-1"));
        let a = AlphabetExpr::pure(poly("q-1"));
        for lam in partitions_up_to(6) {
            let oracle = SymFunc::m(lam.parts()).plethysm(&a);
            assert_eq!(SymFunc::scalar(m_at_qminus1(&lam)), oracle, "{lam}");
        }
    }

    #[test]
    fn m_of_q_minus_one_x() {
        let a = AlphabetExpr::scaled_x(poly("q-1"));
        for lam in partitions_up_to(6) {
            assert_eq!(m_qminus1_expansion(&lam), SymFunc::m(lam.parts()).plethysm(&a), "{lam}");
        }
    }

    #[test]
    fn q_binomial_identities() {
        for n in 1..=8u32 {
            let plain = signed_composition_sum(n, |a| LaurentMPoly::constant(multinomial(a.parts())));
            assert_eq!(plain, (LaurentMPoly::q() - LaurentMPoly::one()).pow(n));
            // at n = 1 the maximal area is 0, so only the first identity applies
            let quantum = signed_composition_sum(n, |a| q_multinomial(a.parts()));
            assert_eq!(quantum.is_zero(), n >= 2, "n = {n}");
        }
    }
}
