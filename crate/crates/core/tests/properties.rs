use compshuffle::charfunc::{chi, d_alpha_bounce, d_alpha_dinv};
use compshuffle::combinat::Composition;
use compshuffle::dpa::{d_minus, d_plus, involution_n, spanning_set, VkElement};
use compshuffle::dyck::DyckPath;
use compshuffle::macdonald::{nabla, nabla_c};
use compshuffle::ring::{poly, LaurentMPoly};
use compshuffle::symfunc::{Basis, SymFunc};
use proptest::prelude::*;

/// A Dyck path from arbitrary steps: `a_1 = 0`, `a_{i+1} <= a_i + 1`.
fn dyck(max: usize) -> impl Strategy<Value = DyckPath> {
    prop::collection::vec(0usize..4, 0..=max).prop_map(|raw| {
        let mut a: Vec<usize> = Vec::with_capacity(raw.len());
        for r in raw {
            let cap = a.last().map_or(0, |&x| x + 1);
            a.push(r.min(cap));
        }
        DyckPath::from_area_seq(&a).unwrap()
    })
}

fn composition(max: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 1..=max as usize)
        .prop_filter("bounded size", move |v| v.iter().sum::<u32>() <= max)
        .prop_map(|v| Composition::new(v).unwrap())
}

fn scalar() -> impl Strategy<Value = LaurentMPoly> {
    prop::sample::select(vec!["1", "q", "t", "q - t", "2*q^-1 + t^2", "-3/2*q*t"]).prop_map(poly)
}

fn symfunc() -> impl Strategy<Value = SymFunc> {
    let terms = prop::collection::vec((prop::sample::select(vec![vec![2u32], vec![1, 1], vec![3], vec![2, 1]]), scalar()), 1..4);
    terms.prop_map(|ts| ts.into_iter().fold(SymFunc::zero(Basis::S), |acc, (l, c)| acc.add(&SymFunc::s(&l).scale(&c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zeta_is_a_bijection_transporting_statistics(pi in dyck(10)) {
        let img = pi.zeta();
        prop_assert_eq!(img.zeta_inverse(), pi.clone());
        prop_assert_eq!(pi.dinv(), img.area());
        prop_assert_eq!(pi.area(), img.bounce());
        prop_assert_eq!(pi.touch(), img.touch_prime());
    }

    #[test]
    fn chi_is_multiplicative_under_concatenation(a in dyck(3), b in dyck(3)) {
        prop_assert_eq!(chi(&a.concat(&b)).unwrap(), chi(&a).unwrap().mul(&chi(&b).unwrap()));
    }

    #[test]
    fn shuffle_identity_on_random_compositions(alpha in composition(5)) {
        let d = d_alpha_dinv(&alpha).unwrap();
        prop_assert_eq!(&d, &d_alpha_bounce(&alpha).unwrap());
        prop_assert_eq!(&d, &nabla_c(&alpha).unwrap());
    }

    #[test]
    fn nabla_is_linear(f in symfunc(), g in symfunc(), c in scalar()) {
        let lhs = nabla(&f.add(&g.scale(&c))).unwrap();
        let rhs = nabla(&f).unwrap().add(&nabla(&g).unwrap().scale(&c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symfunc_json_round_trip(f in symfunc(), basis in prop::sample::select(Basis::ALL.to_vec())) {
        let f = f.convert(basis);
        prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn involution_is_antilinear_and_squares_to_one(i in 0usize..6, j in 0usize..6, c in scalar()) {
        let basis = spanning_set(1, 2).unwrap();
        let (f, g) = (&basis[i % basis.len()], &basis[j % basis.len()]);
        let v = f.add(&g.scale(&c));
        let nv = involution_n(&v).unwrap();
        let expect = involution_n(f).unwrap().add(&involution_n(g).unwrap().scale(&c.bar().unwrap()));
        prop_assert_eq!(&nv, &expect);
        prop_assert_eq!(involution_n(&nv).unwrap(), v);
    }

    #[test]
    fn vk_json_round_trip_after_raising_and_lowering(f in symfunc()) {
        let v = d_plus(&d_plus(&VkElement::from_sym(0, f)));
        let w = d_minus(&v).unwrap();
        prop_assert_eq!(VkElement::from_json(&v.to_json()).unwrap(), v);
        prop_assert_eq!(VkElement::from_json(&w.to_json()).unwrap(), w);
    }
}
