use super::*;
use crate::combinat::{compositions_of, partitions_up_to};
use crate::dpa::{d_minus, d_plus, VkElement};
use crate::dyck::{enumerate_partial, PartialDyckPath};
use crate::ring::poly;
use crate::symfunc::{realize, sym, AlphabetExpr};

fn path(s: &str) -> DyckPath {
    s.parse().unwrap()
}

fn all_paths(max: usize) -> Vec<DyckPath> {
    (0..=max).flat_map(|n| enumerate_paths(n).unwrap()).collect()
}

#[test]
fn worked_values() {
    let f = chi(&path("NNENEE")).unwrap();
    assert_eq!(f, sym("m[3] + (1+2*q)*m[2,1] + (1+4*q+q^2)*m[1,1,1]"));
    assert_eq!(f, sym("s[3] + 2*q*s[2,1] + q^2*s[1,1,1]"));
    assert_eq!(chi(&path("NNEENE")).unwrap(), sym("s[3] + (q+1)*s[2,1] + q*s[1,1,1]"));
    assert_eq!(chi(&DyckPath::empty()).unwrap(), SymFunc::one());
    assert_eq!(chi(&path("NE")).unwrap(), SymFunc::p(&[1]));
}

#[test]
fn chi_at_zero_weight() {
    let pi = path("NNEENE");
    let expect = sym("s[2,1] + q*s[1,1,1]");
    assert_eq!(chi_zero(&pi).unwrap(), expect);
    assert_eq!(chi_zero(&pi).unwrap(), sym("m[2,1] + (2+q)*m[1,1,1]"));
    assert_eq!(chi_zero_by_flips(&pi).unwrap(), expect);
    let flipped = pi.flip_corners(&pi.corners()).unwrap();
    assert_eq!(flipped, path("NNENEE"));
    let by_hand = chi(&pi).unwrap().sub(&chi(&flipped).unwrap()).try_map_coeffs(|c| c.exact_div(&poly("1-q")));
    assert_eq!(by_hand.unwrap(), expect);
}

#[test]
fn chi_zero_two_ways() {
    for pi in all_paths(5) {
        let direct = chi_zero(&pi).unwrap();
        assert_eq!(direct, chi_zero_by_flips(&pi).unwrap(), "{pi}");
        if pi.corners().is_empty() {
            assert_eq!(direct, chi(&pi).unwrap());
        }
    }
}

#[test]
fn unit_weight_is_plain_chi() {
    for pi in all_paths(5) {
        let one = constant_weight(&pi, &LaurentMPoly::one());
        assert_eq!(chi_weighted(&pi, &one).unwrap(), chi(&pi).unwrap(), "{pi}");
    }
}

#[test]
fn corner_recursion_with_symbolic_weights() {
    for pi in all_paths(5) {
        let wt: CornerWeight =
            pi.corners().into_iter().enumerate().map(|(i, c)| (c, LaurentMPoly::var(Var::W(i as u16 + 1)))).collect();
        let direct = chi_weighted(&pi, &wt).unwrap();
        assert_eq!(direct, chi_weighted_by_recursion(&pi, &wt).unwrap(), "{pi}");
    }
}

#[test]
fn weight_domain_is_checked() {
    let pi = path("NNEENE");
    assert_eq!(chi_weighted(&pi, &CornerWeight::new()), Err(Error::WeightDomainMismatch));
    let wrong: CornerWeight = [((1, 2), LaurentMPoly::one())].into();
    assert_eq!(chi_weighted(&pi, &wrong), Err(Error::WeightDomainMismatch));
    assert!(matches!(chi(&DyckPath::full(11)), Err(Error::CapExceeded { n: 11, cap: 10 })));
}

#[test]
fn superization() {
    let s = super_chi(&path("NNENEE"), 1, 1);
    let c = s.coeff_of(Var::X(1), 1).coeff_of(Var::Y(1), 2);
    assert_eq!(c, poly("q^2 + 2*q"));
    for pi in all_paths(4) {
        let f = chi(&pi).unwrap();
        for (p, m) in [(2, 0), (1, 1), (2, 1), (1, 2)] {
            assert_eq!(super_chi(&pi, p, m), realize(&f, p, m), "{pi} ({p},{m})");
        }
    }
}

#[test]
fn super_route_to_q_minus_one_plethysm() {
    // (q-1)X = qX - X: positive letters weigh q x_i, barred letters x_i
    let a = AlphabetExpr::scaled_x(poly("q-1"));
    for pi in all_paths(5) {
        let mut s = super_chi(&pi, 2, 2);
        for i in 1..=2 {
            s = s.substitute(Var::X(i), &LaurentMPoly::var(Var::X(i)).mul_monomial(&[(Var::Q, 1)])).unwrap();
            s = s.substitute(Var::Y(i), &LaurentMPoly::var(Var::X(i))).unwrap();
        }
        assert_eq!(s, realize(&chi(&pi).unwrap().plethysm(&a), 2, 0), "{pi}");
        let via_prime = realize(&chi_prime(&pi).unwrap(), 2, 0) * poly("q-1").pow(pi.size() as u32);
        assert_eq!(s, via_prime, "{pi}");
    }
}

#[test]
fn symmetry_of_word_sums() {
    for n in 1..=6u32 {
        for pi in enumerate_paths(n as usize).unwrap() {
            for c in compositions_of(n) {
                let sorted = chi_monomial(&pi, c.sorted().parts()).unwrap();
                assert_eq!(chi_monomial(&pi, c.parts()).unwrap(), sorted, "{pi} {c}");
            }
        }
    }
}

#[test]
fn reversal_concatenation_and_omega_bar() {
    for pi in all_paths(5) {
        let f = chi(&pi).unwrap();
        assert_eq!(chi(&pi.op()).unwrap(), f, "{pi}");
        let n = pi.size() as u32;
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let expect = f.scale(&LaurentMPoly::q_pow(-(pi.area() as i32)).scale(&Rational::from_int(sign)));
        assert_eq!(f.omega_bar().unwrap(), expect, "{pi}");
    }
    for a in all_paths(3) {
        for b in all_paths(2) {
            let ab = a.concat(&b);
            assert_eq!(chi(&ab).unwrap(), chi(&a).unwrap().mul(&chi(&b).unwrap()), "{a} {b}");
        }
    }
}

#[test]
fn no_attack_identity() {
    let a = AlphabetExpr::scaled_x(poly("q-1"));
    for pi in all_paths(5) {
        let lhs = chi(&pi).unwrap().plethysm(&a);
        let rhs = chi_prime(&pi).unwrap().scale(&poly("q-1").pow(pi.size() as u32));
        assert_eq!(lhs, rhs, "{pi}");
    }
    // without area cells there is nothing to avoid
    for n in 0..=4 {
        let s = DyckPath::staircase(n);
        assert_eq!(chi_prime(&s).unwrap(), chi(&s).unwrap());
    }
}

#[test]
fn compact_word_singleton_sum() {
    for n in 1..=5usize {
        for pi in enumerate_paths(n).unwrap() {
            let expect = if pi.area() == 0 { poly("q-1").pow(n as u32) } else { LaurentMPoly::zero() };
            assert_eq!(singleton_sum(&pi).unwrap(), expect, "{pi}");
        }
    }
}

#[test]
fn d_alpha_values() {
    let a12 = Composition::parse("1,2").unwrap();
    let expect = sym("t*s[2,1] + q*t*s[1,1,1]");
    assert_eq!(d_alpha_dinv(&a12).unwrap(), expect);
    assert_eq!(d_alpha_bounce(&a12).unwrap(), expect);
    assert_eq!(d_alpha_dinv(&Composition::parse("1").unwrap()).unwrap(), sym("s[1]"));
    assert_eq!(d_alpha_dinv(&Composition::parse("2").unwrap()).unwrap(), sym("t*s[1,1]"));
    for n in 1..=4 {
        for alpha in compositions_of(n) {
            assert_eq!(d_alpha_dinv(&alpha).unwrap(), d_alpha_bounce(&alpha).unwrap(), "{alpha}");
        }
    }
}

#[test]
fn bar_chi_is_chi_of_zeta() {
    assert_eq!(bar_chi(&path("NE")).unwrap(), SymFunc::p(&[1]));
    for pi in all_paths(5) {
        assert_eq!(bar_chi(&pi).unwrap(), chi(&pi.zeta()).unwrap(), "{pi}");
    }
    for n in 1..=4 {
        assert_eq!(bar_chi(&DyckPath::staircase(n)).unwrap(), chi(&DyckPath::full(n)).unwrap());
    }
}

#[test]
fn partial_chi_level_zero() {
    for pi in all_paths(4) {
        let p = PartialDyckPath::new(0, pi.steps().to_vec()).unwrap();
        assert_eq!(chi_k(&p).unwrap(), VkElement::from_sym(0, chi(&pi).unwrap()), "{pi}");
    }
}

#[test]
fn partial_chi_matches_no_attack_sum() {
    let a = AlphabetExpr::scaled_x(poly("q-1"));
    for k in 0..=2usize {
        for n in k..=k + 3 {
            for p in enumerate_partial(k, n).unwrap() {
                let ident: Vec<u32> = (1..=k as u32).collect();
                let prime = chi_sigma_prime(&p, &ident).unwrap();
                let lhs = chi_k(&p).unwrap().map_sym(|f| f.plethysm(&a));
                let lhs = (1..=k).fold(lhs, |acc, i| acc.mul_y(i, 1));
                let rhs = VkElement::from_y_symfunc(k, &prime).unwrap().scale(&poly("q-1").pow((n - k) as u32));
                assert_eq!(lhs, rhs, "{p}");
            }
        }
    }
}

#[test]
fn partial_chi_recursions() {
    for k in 0..=2usize {
        for n in k..=k + 4 {
            for p in enumerate_partial(k, n).unwrap() {
                let f = chi_k(&p).unwrap();
                assert_eq!(chi_k(&p.prepend_e()).unwrap(), d_plus(&f), "E{p}");
                if k > 0 {
                    assert_eq!(chi_k(&p.prepend_n().unwrap()).unwrap(), d_minus(&f).unwrap(), "N{p}");
                }
            }
        }
    }
}

#[test]
fn sigma_validation() {
    let p = PartialDyckPath::parse(2, "ENEE").unwrap();
    assert!(matches!(chi_sigma_prime(&p, &[1, 1]), Err(Error::SigmaNotDistinct(_))));
    assert!(matches!(chi_sigma_prime(&p, &[1]), Err(Error::LengthMismatch { .. })));
    assert!(chi_sigma_prime(&p, &[3, 1]).is_ok());
}

#[test]
fn partition_coverage() {
    // every partition of n appears in chi of the staircase (coefficient = multinomial)
    for lam in partitions_up_to(5) {
        let n = lam.size() as usize;
        let c = chi(&DyckPath::staircase(n)).unwrap().coeff(&lam);
        let fact = |m: u32| crate::ring::rational::factorial(m as u64);
        let multinomial = lam.parts().iter().fold(fact(lam.size()), |acc, &m| acc * fact(m).recip());
        assert_eq!(c, LaurentMPoly::constant(multinomial), "{lam}");
    }
}
