//! Verification suites: every identity checked exhaustively and exactly, grouped into reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::charfunc::{
    chi, chi_prime, chi_zero, d_alpha_bounce, d_alpha_dinv, shuffle_sum, singleton_sum, super_chi,
};
use crate::combinat::{compositions_of, partitions_up_to, Composition, Partition};
use crate::dpa::{
    b_lambda, chi0_via_word, chi_via_word, d_alpha_operator, d_minus, d_plus, d_plus_star, involution_n, n_alpha,
    relation_check, spanning_set, y_alpha, Suite, VkElement,
};
use crate::dyck::{enumerate_paths, DyckPath};
use crate::error::Result;
use crate::macdonald::{c_word, d1_op, d1_star_op, macdonald_table, nabla, nabla_c, script_n_v0};
use crate::ring::{poly, LaurentMPoly, Rational, Var};
use crate::symfunc::{
    h_neg_x_expansion, m_qminus1_expansion, multinomial, op_b, q_multinomial, signed_composition_sum, sym,
    AlphabetExpr, Basis, SymFunc,
};

/// Result of one identity over all of its instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub instances: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// A named group of checks. JSON output omits the wall time so that reports are reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, u64>,
    pub results: Vec<CheckOutcome>,
    /// The first failing instance over all results.
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    fn new(suite: &str, params: &[(&str, u64)], results: Vec<CheckOutcome>, start: Instant) -> Self {
        let counterexample = results.iter().find_map(|r| r.counterexample.as_ref().map(|c| format!("{}: {c}", r.id)));
        VerificationReport {
            suite: suite.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            results,
            counterexample,
            wall_time: start.elapsed(),
        }
    }

    pub fn pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Aligned table for reading in a terminal.
    pub fn to_text(&self) -> String {
        let width = self.results.iter().map(|r| r.id.chars().count()).max().unwrap_or(0);
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut out = format!("suite {} [{}]\n", self.suite, params.join(" "));
        for r in &self.results {
            let status = if r.pass { "pass" } else { "FAIL" };
            out += &format!("  {status}  {:<width$}  {:>8}\n", r.id, r.instances);
            if let Some(c) = &r.counterexample {
                out += &format!("        counterexample: {c}\n");
            }
        }
        out += &format!("  {} in {:.2}s\n", if self.pass() { "all pass" } else { "FAILED" }, self.wall_time.as_secs_f64());
        out
    }

    /// Concatenates several reports into one, prefixing result ids with the sub-suite name.
    pub fn combine(suite: &str, params: &[(&str, u64)], parts: Vec<VerificationReport>, start: Instant) -> Self {
        let results = parts
            .into_iter()
            .flat_map(|p| {
                let name = p.suite;
                p.results.into_iter().map(move |mut r| {
                    r.id = format!("{name}: {}", r.id);
                    r
                })
            })
            .collect();
        VerificationReport::new(suite, params, results, start)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Outcome of one check on one instance.
enum Outcome {
    Skip,
    Pass,
    Fail(String),
}

fn cmp<T: PartialEq + Debug>(at: impl fmt::Display, lhs: Result<T>, rhs: Result<T>) -> Outcome {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => Outcome::Pass,
        (Ok(a), Ok(b)) => Outcome::Fail(format!("{at}: {a:?} != {b:?}")),
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(format!("{at}: error {e}")),
    }
}

fn truth(at: impl fmt::Display, ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(at.to_string())
    }
}

/// Runs `check` on every item in parallel (each returning one outcome per id) and merges in item order.
fn run<I: Sync>(ids: &[&str], items: &[I], check: impl Fn(&I) -> Vec<Outcome> + Sync) -> Vec<CheckOutcome> {
    let per_item: Vec<Vec<Outcome>> = items.par_iter().map(&check).collect();
    let mut out: Vec<CheckOutcome> =
        ids.iter().map(|id| CheckOutcome { id: id.to_string(), instances: 0, pass: true, counterexample: None }).collect();
    for outcomes in per_item {
        assert_eq!(outcomes.len(), ids.len(), "one outcome per check");
        for (slot, o) in out.iter_mut().zip(outcomes) {
            match o {
                Outcome::Skip => {}
                Outcome::Pass => slot.instances += 1,
                Outcome::Fail(msg) => {
                    slot.instances += 1;
                    slot.pass = false;
                    slot.counterexample.get_or_insert(msg);
                }
            }
        }
    }
    out
}

fn single(id: &str, o: Outcome) -> CheckOutcome {
    run(&[id], &[()], |_| vec![match &o {
        Outcome::Skip => Outcome::Skip,
        Outcome::Pass => Outcome::Pass,
        Outcome::Fail(m) => Outcome::Fail(m.clone()),
    }])
    .remove(0)
}

fn all_paths(n: usize) -> Result<Vec<DyckPath>> {
    let mut out = Vec::new();
    for m in 0..=n {
        out.extend(enumerate_paths(m)?);
    }
    Ok(out)
}

fn sign(n: u32) -> LaurentMPoly {
    LaurentMPoly::int(if n.is_multiple_of(2) { 1 } else { -1 })
}

/// For every `alpha |= n`: `D_alpha` (dinv form) = `D_alpha` (bounce form) = `d_-^l N_alpha` = `nabla C_alpha(1)`.
pub fn verify_shuffle(n: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let alphas = compositions_of(n);
    let results = run(
        &["dinv form = bounce form", "dinv form = d_-^l N_alpha", "dinv form = nabla C_alpha(1)"],
        &alphas,
        |alpha| {
            let dinv = d_alpha_dinv(alpha);
            let Ok(dinv) = dinv else {
                let msg = format!("{alpha}: {}", dinv.unwrap_err());
                return vec![Outcome::Fail(msg.clone()), Outcome::Fail(msg.clone()), Outcome::Fail(msg)];
            };
            vec![
                cmp(alpha, Ok(dinv.clone()), d_alpha_bounce(alpha)),
                cmp(alpha, Ok(dinv.clone()), d_alpha_operator(alpha)),
                cmp(alpha, Ok(dinv), nabla_c(alpha)),
            ]
        },
    );
    Ok(VerificationReport::new("shuffle", &[("n", n as u64)], results, start))
}

/// The running example `x = (1,2,2,2,3,3,7,7)`.
pub fn running_example() -> DyckPath {
    DyckPath::from_area_seq(&[0, 0, 1, 2, 2, 3, 0, 1]).expect("valid area sequence")
}

fn cells(v: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    v.iter().copied().collect()
}

/// The worked values: statistics of the running example and its image, characteristic
/// functions of small paths, `D_(1,2)` and `N_(3,1)`.
pub fn verify_examples() -> Result<VerificationReport> {
    let start = Instant::now();
    let pi = running_example();
    let img = pi.zeta();
    let w = [9, 5, 2, 1, 5, 2, 3, 2];
    let nnenee: DyckPath = "NNENEE".parse()?;
    let nneene: DyckPath = "NNEENE".parse()?;
    let p_expansion = SymFunc::from_coeffs(
        Basis::P,
        [
            (Partition::new(vec![3]), poly("q^2 - 2*q + 1").scale(&Rational::new(1, 3))),
            (Partition::new(vec![2, 1]), poly("1 - q^2").scale(&Rational::new(1, 2))),
            (Partition::new(vec![1, 1, 1]), poly("q^2 + 4*q + 1").scale(&Rational::new(1, 6))),
        ],
    );
    let b = |word: &[u32]| word.iter().rev().fold(SymFunc::one(), |f, &r| op_b(r, &f));
    let n31 = VkElement::y_monomial(&[2, 0])
        .scale(&poly("q*t^3"))
        .sub(&VkElement::y_monomial(&[1, 0]).mul_sym(&sym("e[1]")).scale(&poly("q*t^2")));
    let alpha31 = Composition(vec![3, 1]);
    let checks: Vec<(&str, Outcome)> = vec![
        ("running example: area = 9", cmp("area", Ok(pi.area()), Ok(9))),
        ("running example: dinv = 8", cmp("dinv", Ok(pi.dinv()), Ok(8))),
        ("running example: touch = (1,5,2)", cmp("touch", Ok(pi.touch()), Ok(Composition(vec![1, 5, 2])))),
        ("running example: w is word parking", cmp("parking", pi.is_word_parking(&w), Ok(true))),
        ("running example: dinv(pi, w) = 5", cmp("dinv_pw", pi.dinv_pw(&w), Ok(5))),
        (
            "zeta image: area set",
            cmp(
                "Area",
                Ok(img.area_set()),
                Ok(cells(&[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)])),
            ),
        ),
        ("zeta image: corners", cmp("corners", Ok(img.corners()), Ok(cells(&[(2, 4), (3, 5), (4, 6), (7, 8)])))),
        ("zeta image: bounce sequence", cmp("bounce", Ok(img.bounce_seq()), Ok(vec![0, 0, 0, 1, 1, 2, 2, 3]))),
        (
            "chi(NNENEE) in the m basis",
            cmp("m", chi(&nnenee), Ok(sym("m[3] + (1+2*q)*m[2,1] + (1+4*q+q^2)*m[1,1,1]"))),
        ),
        ("chi(NNENEE) in the p basis", cmp("p", chi(&nnenee), Ok(p_expansion))),
        (
            "[x1 y1^2] chi(NNENEE)[X-Y] = q^2+2q",
            cmp(
                "superization",
                Ok(super_chi(&nnenee, 1, 1).coeff_of(Var::X(1), 1).coeff_of(Var::Y(1), 2)),
                Ok(poly("q^2 + 2*q")),
            ),
        ),
        ("chi(NNEENE)", cmp("chi", chi(&nneene), Ok(sym("s[3] + (q+1)*s[2,1] + q*s[1,1,1]")))),
        ("chi(NNEENE, 0)", cmp("chi0", chi_zero(&nneene), Ok(sym("s[2,1] + q*s[1,1,1]")))),
        ("D_(1,2)", cmp("D", d_alpha_dinv(&Composition(vec![1, 2])), Ok(sym("t*s[2,1] + q*t*s[1,1,1]")))),
        ("N_(3,1)", cmp("N", n_alpha(&alpha31), Ok(n31))),
        (
            "d_-^2 N_(3,1) = q t^3 B_3 B_1(1) + q t^2 B_2 B_1 B_1(1)",
            cmp(
                "D",
                d_alpha_operator(&alpha31),
                Ok(b(&[3, 1]).scale(&poly("q*t^3")).add(&b(&[2, 1, 1]).scale(&poly("q*t^2")))),
            ),
        ),
    ];
    let results = checks.into_iter().map(|(id, o)| single(id, o)).collect();
    Ok(VerificationReport::new("examples", &[], results, start))
}

/// `chi(pi)` from d-words for all paths of size `<= n_chi`; the commutator form of
/// `chi(pi, 0)` for size `<= n_chi0`.
pub fn verify_words(n_chi: usize, n_chi0: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let paths = all_paths(n_chi.max(n_chi0))?;
    let results = run(&["chi via d-word = chi", "chi(pi,0) via commutator word = chi(pi,0)"], &paths, |pi| {
        vec![
            if pi.size() <= n_chi { cmp(pi, chi_via_word(pi), chi(pi)) } else { Outcome::Skip },
            if pi.size() <= n_chi0 { cmp(pi, chi0_via_word(pi), chi_zero(pi)) } else { Outcome::Skip },
        ]
    });
    Ok(VerificationReport::new("words", &[("n", n_chi as u64), ("n0", n_chi0 as u64)], results, start))
}

/// `w'` with `w'_{sigma_i} = w_i`.
fn transport(sigma: &[usize], w: &[u32]) -> Vec<u32> {
    let mut out = vec![0; w.len()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s - 1] = w[i];
    }
    out
}

/// The zeta map on all paths of size `<= n`: bijectivity, statistic transport, parking
/// transport (brute force on words for size `<= n_words`) and the touch' set recursion
/// for size `<= n_rec`.
pub fn verify_zeta(n: usize, n_words: usize, n_rec: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let paths = all_paths(n)?;
    let ids = [
        "zeta_inverse(zeta(pi)) = pi",
        "zeta(zeta_inverse(pi)) = pi",
        "dinv(pi) = area(zeta pi)",
        "area(pi) = bounce(zeta pi)",
        "touch(pi) = touch'(zeta pi)",
        "b_{sigma_i} = a_i",
        "sigma(Dinv(pi)) = Area(zeta pi) as ordered pairs",
        "sigma(column pairs of pi) = corners(zeta pi)",
        "w in WP_pi iff sigma(w) in WP'_{zeta pi}",
        "dinv(pi, w) = inv(zeta pi, sigma(w))",
    ];
    let mut results = run(&ids, &paths, |pi| {
        let img = pi.zeta();
        let sigma = pi.reading_order();
        let a = pi.area_seq();
        let b = img.bounce_seq();
        let x = pi.coarea_seq();
        let mapped: BTreeSet<(usize, usize)> = pi.dinv_set().iter().map(|&(i, j)| (sigma[i - 1], sigma[j - 1])).collect();
        let columns: BTreeSet<(usize, usize)> =
            (1..x.len()).filter(|&j| x[j - 1] == x[j]).map(|j| (sigma[j - 1], sigma[j])).collect();
        let words = if pi.size() <= n_words && pi.size() > 0 {
            let size = pi.size();
            let mut w = vec![1u32; size];
            let mut first_bad: [Option<String>; 2] = [None, None];
            loop {
                let wp = transport(&sigma, &w);
                let ok = (|| -> Result<[bool; 2]> {
                    Ok([pi.is_word_parking(&w)? == img.wp_prime_check(&wp)?, pi.dinv_pw(&w)? == img.inv_pw(&wp)?])
                })();
                match ok {
                    Ok(flags) => {
                        for (slot, f) in first_bad.iter_mut().zip(flags) {
                            if !f && slot.is_none() {
                                *slot = Some(format!("{pi} w={w:?}"));
                            }
                        }
                    }
                    Err(e) => first_bad = [Some(e.to_string()), Some(e.to_string())],
                }
                if !crate::charfunc::next_word(&mut w, size as u32) {
                    break;
                }
            }
            first_bad.map(|b| match b {
                None => Outcome::Pass,
                Some(m) => Outcome::Fail(m),
            })
        } else {
            [Outcome::Skip, Outcome::Skip]
        };
        let [wp, dw] = words;
        vec![
            cmp(pi, Ok(img.zeta_inverse()), Ok(pi.clone())),
            cmp(pi, Ok(pi.zeta_inverse().zeta()), Ok(pi.clone())),
            cmp(pi, Ok(pi.dinv()), Ok(img.area())),
            cmp(pi, Ok(pi.area()), Ok(img.bounce())),
            cmp(pi, Ok(pi.touch()), Ok(img.touch_prime())),
            truth(pi, (0..a.len()).all(|i| b[sigma[i] - 1] == a[i])),
            cmp(pi, Ok(mapped), Ok(img.area_set())),
            cmp(pi, Ok(columns), Ok(img.corners())),
            wp,
            dw,
        ]
    });
    let images: BTreeSet<DyckPath> = paths.iter().map(DyckPath::zeta).collect();
    results.push(single("zeta is injective", cmp("images", Ok(images.len()), Ok(paths.len()))));
    results.push(touch_prime_recursion(n_rec)?);
    Ok(VerificationReport::new(
        "zeta",
        &[("n", n as u64), ("n_words", n_words as u64), ("n_rec", n_rec as u64)],
        results,
        start,
    ))
}

/// `D'_{a,alpha} = disjoint union over beta |= a-1 of gamma_{l(alpha)}(D'_{alpha beta})`.
fn touch_prime_recursion(n: usize) -> Result<CheckOutcome> {
    let mut by_touch: BTreeMap<Composition, BTreeSet<DyckPath>> = BTreeMap::new();
    for pi in all_paths(n)? {
        by_touch.entry(pi.touch_prime()).or_default().insert(pi);
    }
    let mut targets = Vec::new();
    for m in 1..=n as u32 {
        targets.extend(compositions_of(m));
    }
    Ok(run(&["D'_{a,alpha} = union of gamma_l(D'_{alpha beta})"], &targets, |full| {
        let a = full.parts()[0];
        let alpha = Composition(full.parts()[1..].to_vec());
        let mut union = BTreeSet::new();
        let mut count = 0;
        for beta in compositions_of(a - 1) {
            let ab = alpha.concat(&beta);
            for p in by_touch.get(&ab).into_iter().flatten() {
                match p.gamma_r(alpha.len()) {
                    Ok(g) => {
                        union.insert(g);
                        count += 1;
                    }
                    Err(e) => return vec![Outcome::Fail(format!("{full}: {e}"))],
                }
            }
        }
        let lhs = by_touch.get(full).cloned().unwrap_or_default();
        vec![truth(format!("{full}"), count == union.len() && union == lhs)]
    })
    .remove(0))
}

/// Every relation suite on the spanning sets of `V_0 .. V_k` in degree `<= deg`, plus
/// d-words of length `<= word_len` applied to `1`.
pub fn verify_relations(k: usize, deg: u32, word_len: usize) -> Result<VerificationReport> {
    verify_relation_suites(&Suite::ALL, k, deg, word_len)
}

/// [`verify_relations`] restricted to the given suites.
pub fn verify_relation_suites(suites: &[Suite], k: usize, deg: u32, word_len: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    for &suite in suites {
        for r in relation_check(suite, k, deg, word_len)? {
            results.push(CheckOutcome {
                id: format!("{suite}: {}", r.id),
                instances: r.instances,
                pass: r.pass,
                counterexample: r.counterexample,
            });
        }
    }
    Ok(VerificationReport::new(
        "relations",
        &[("k", k as u64), ("deg", deg as u64), ("words", word_len as u64)],
        results,
        start,
    ))
}

/// The involution: its values on `y_alpha` for `|alpha| <= n`, `N^2 = Id` on spanning sets
/// of `V_0 .. V_k` in degree `<= deg`, agreement with `nabla omega-bar` on `B_lambda(1)`, and
/// the `D_1` relations in degree `<= deg`.
pub fn verify_involution(n: u32, k: usize, deg: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    let mut alphas = Vec::new();
    for m in 1..=n {
        alphas.extend(compositions_of(m));
    }
    results.extend(run(&["N(y_alpha) = q^{|alpha|-l(alpha)} N_alpha"], &alphas, |alpha| {
        let e = (alpha.size() - alpha.len() as u32) as i32;
        vec![cmp(alpha, involution_n(&y_alpha(alpha)), n_alpha(alpha).map(|v| v.scale(&LaurentMPoly::q_pow(e))))]
    }));
    results.push(single("N(1) = 1", cmp("1", involution_n(&VkElement::one(0)), Ok(VkElement::one(0)))));
    let mut elements = Vec::new();
    for level in 0..=k {
        elements.extend(spanning_set(level, deg)?);
    }
    results.extend(run(&["N^2 = Id"], &elements, |f| {
        let f = f.scale(&poly("q + t^-1"));
        vec![cmp(&f, involution_n(&f).and_then(|g| involution_n(&g)), Ok(f.clone()))]
    }));
    let lambdas: Vec<Partition> = partitions_up_to(deg).into_iter().filter(|l| !l.is_empty()).collect();
    results.extend(run(&["N = nabla omega-bar on V_0"], &lambdas, |lam| {
        let f = b_lambda(lam);
        vec![cmp(lam, involution_n(&VkElement::from_sym(0, f.clone())).and_then(|v| v.as_sym()), script_n_v0(&f))]
    }));
    let schur: Vec<Partition> = partitions_up_to(deg.saturating_sub(1));
    results.extend(run(
        &[
            "D_1 = -d_- d_+^*",
            "multiplication by e_1 = d_- d_+",
            "omega-bar D_1 = D_1^* omega-bar",
            "N D_1 = -e_1 N",
        ],
        &schur,
        |lam| {
            let f = SymFunc::s(lam.parts());
            let v = VkElement::from_sym(0, f.clone());
            let via_d = d_minus(&d_plus_star(&v)).and_then(|g| g.as_sym()).map(|g| g.neg());
            let e1 = d_minus(&d_plus(&v)).and_then(|g| g.as_sym());
            let lhs = f.omega_bar().map(|_| d1_op(&f)).and_then(|g| g.omega_bar());
            let rhs = f.omega_bar().map(|g| d1_star_op(&g));
            let n_d1 = script_n_v0(&d1_op(&f));
            let e1_n = script_n_v0(&f).map(|g| g.mul(&sym("e[1]")).neg());
            vec![
                cmp(lam, Ok(d1_op(&f)), via_d),
                cmp(lam, Ok(f.mul(&sym("e[1]"))), e1),
                cmp(lam, lhs, rhs),
                cmp(lam, n_d1, e1_n),
            ]
        },
    ));
    Ok(VerificationReport::new("involution", &[("n", n as u64), ("k", k as u64), ("deg", deg as u64)], results, start))
}

/// `chi(pi)[(q-1)X] = (q-1)^n chi'(pi)` and the `m_lambda[(q-1)X]` closed form up to size
/// `n`; the compact word sum up to `n_singleton`; the two composition sums up to `n_qbinom`.
pub fn verify_appendix(n: usize, n_singleton: usize, n_qbinom: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let a = AlphabetExpr::scaled_x(poly("q-1"));
    let q1 = poly("q-1");
    let paths = all_paths(n.max(n_singleton))?;
    let mut results = run(
        &["chi(pi)[(q-1)X] = (q-1)^n chi'(pi)", "compact word sum = (q-1)^n [area(pi) = 0]"],
        &paths,
        |pi| {
            let size = pi.size() as u32;
            vec![
                if pi.size() <= n {
                    cmp(pi, chi(pi).map(|f| f.plethysm(&a)), chi_prime(pi).map(|f| f.scale(&q1.pow(size))))
                } else {
                    Outcome::Skip
                },
                if pi.size() <= n_singleton && pi.size() > 0 {
                    let expect = if pi.area() == 0 { q1.pow(size) } else { LaurentMPoly::zero() };
                    cmp(pi, singleton_sum(pi), Ok(expect))
                } else {
                    Outcome::Skip
                },
            ]
        },
    );
    let lambdas = partitions_up_to(n as u32);
    results.extend(run(&["m_lambda[(q-1)X] closed form = plethysm"], &lambdas, |lam| {
        vec![cmp(lam, Ok(m_qminus1_expansion(lam)), Ok(SymFunc::m(lam.parts()).plethysm(&a)))]
    }));
    let sizes: Vec<u32> = (1..=n_qbinom).collect();
    results.extend(run(
        &["sum (-1)^l (1-q^a_1) multinomial = (q-1)^n", "sum (-1)^l (1-q^a_1) q-multinomial = 0 (n >= 2)"],
        &sizes,
        |&m| {
            let plain = signed_composition_sum(m, |c| LaurentMPoly::constant(multinomial(c.parts())));
            let quantum = signed_composition_sum(m, |c| q_multinomial(c.parts()));
            vec![
                cmp(m, Ok(plain), Ok(q1.pow(m))),
                if m >= 2 { cmp(m, Ok(quantum), Ok(LaurentMPoly::zero())) } else { Outcome::Skip },
            ]
        },
    ));
    Ok(VerificationReport::new(
        "appendix",
        &[("n", n as u64), ("n_singleton", n_singleton as u64), ("n_qbinom", n_qbinom as u64)],
        results,
        start,
    ))
}

/// Full rank of the `H_mu` up to degree `n_rank`, `nabla e_2`, `(-1)^n nabla e_n` against the
/// shuffle sum up to `n_nabla`, and `sum_alpha C_alpha(1) = h_n[-X]` up to `n_csum`.
pub fn verify_macdonald(n_rank: u32, n_nabla: u32, n_csum: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    let ranks: Vec<u32> = (1..=n_rank).collect();
    results.extend(run(&["H_mu linearly independent"], &ranks, |&m| {
        vec![match macdonald_table(m).and_then(|t| t.determinant()) {
            Ok(d) => truth(format!("n={m}"), !d.is_zero()),
            Err(e) => Outcome::Fail(format!("n={m}: {e}")),
        }]
    }));
    results.push(single(
        "nabla e_2 = s_2 + (q+t) s_11 = shuffle sum",
        match (nabla(&SymFunc::e(&[2])), shuffle_sum(2)) {
            (Ok(a), Ok(b)) => truth(format!("{a:?} / {b:?}"), a == sym("s[2] + (q+t)*s[1,1]") && a == b),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
        },
    ));
    let sizes: Vec<u32> = (1..=n_nabla.max(n_csum)).collect();
    results.extend(run(&["(-1)^n nabla e_n = shuffle sum", "sum_alpha C_alpha(1) = h_n[-X]"], &sizes, |&m| {
        vec![
            if m <= n_nabla {
                cmp(m, nabla(&SymFunc::e(&[m])).map(|f| f.scale(&sign(m))), shuffle_sum(m as usize))
            } else {
                Outcome::Skip
            },
            if m <= n_csum {
                let total = compositions_of(m).iter().fold(SymFunc::zero(Basis::P), |acc, a| acc.add(&c_word(a)));
                cmp(m, Ok(total), Ok(h_neg_x_expansion(m)))
            } else {
                Outcome::Skip
            },
        ]
    }));
    Ok(VerificationReport::new(
        "macdonald",
        &[("n_rank", n_rank as u64), ("n_nabla", n_nabla as u64), ("n_csum", n_csum as u64)],
        results,
        start,
    ))
}

/// Every suite with sizes derived from `maxn`, `maxk`, `maxdeg`, in a fixed order.
pub fn verify_all(maxn: u32, maxk: usize, maxdeg: u32) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = maxn as usize;
    let mut parts = vec![verify_examples()?];
    for m in 1..=maxn {
        parts.push(verify_shuffle(m)?);
    }
    parts.push(verify_words(n, n)?);
    parts.push(verify_zeta(n, n.min(5), n)?);
    parts.push(verify_relations(maxk, maxdeg, 2 * maxdeg as usize)?);
    parts.push(verify_involution(maxn, maxk, maxdeg)?);
    parts.push(verify_appendix(n, n, maxn)?);
    parts.push(verify_macdonald(maxn, maxn, maxn)?);
    for p in parts.iter_mut().filter(|p| p.suite == "shuffle") {
        p.suite = format!("shuffle n={}", p.params["n"]);
    }
    Ok(VerificationReport::combine(
        "all",
        &[("n", maxn as u64), ("k", maxk as u64), ("deg", maxdeg as u64)],
        parts,
        start,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_shuffle_instance() {
        let r = verify_shuffle(1).unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!(r.results[0].instances, 1);
        let r = verify_shuffle(2).unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!(r.results[2].instances, 2);
    }

    #[test]
    fn examples_pass() {
        let r = verify_examples().unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn small_profiles_pass() {
        for r in [
            verify_words(3, 3).unwrap(),
            verify_zeta(4, 3, 4).unwrap(),
            verify_appendix(3, 3, 4).unwrap(),
            verify_macdonald(3, 3, 3).unwrap(),
            verify_involution(2, 1, 2).unwrap(),
        ] {
            assert!(r.pass(), "{r}");
            assert!(r.results.iter().all(|c| c.instances > 0), "{r}");
        }
    }

    #[test]
    fn report_json_is_stable() {
        let a = verify_words(2, 2).unwrap().to_json();
        let b = verify_words(2, 2).unwrap().to_json();
        assert_eq!(a, b);
        assert_eq!(a["suite"], "words");
        assert!(a.get("wall_time").is_none());
    }

    #[test]
    fn failures_are_reported() {
        let out = run(&["always equal"], &[1, 2, 3], |&i| vec![cmp(i, Ok(i), Ok(if i == 2 { 0 } else { i }))]);
        assert!(!out[0].pass);
        assert_eq!(out[0].instances, 3);
        assert_eq!(out[0].counterexample.as_deref(), Some("2: 2 != 0"));
    }
}
