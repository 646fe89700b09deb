//! Acceptance gate: the eight criteria at full size, exact equality throughout.
//!
//! Each criterion prints one `PASS`/`FAIL` line; run with `--nocapture` to see them.

use std::time::Instant;

use compshuffle::verify::{
    verify_appendix, verify_examples, verify_involution, verify_macdonald, verify_relations, verify_shuffle,
    verify_words, verify_zeta, VerificationReport,
};

fn gate(number: u32, title: &str, reports: Vec<VerificationReport>, extra: impl FnOnce(&[VerificationReport]) -> Result<(), String>) {
    let start = Instant::now();
    let mut problems: Vec<String> = Vec::new();
    for r in &reports {
        if !r.pass() {
            problems.push(r.to_text());
        }
        for c in &r.results {
            if c.instances == 0 {
                problems.push(format!("{}: {} was never exercised", r.suite, c.id));
            }
        }
    }
    if let Err(e) = extra(&reports) {
        problems.push(e);
    }
    let checks: usize = reports.iter().flat_map(|r| &r.results).map(|c| c.instances).sum();
    let secs: f64 = reports.iter().map(|r| r.wall_time.as_secs_f64()).sum::<f64>() + start.elapsed().as_secs_f64();
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number} {status}: {title} ({checks} checks, {secs:.1}s)");
    assert!(problems.is_empty(), "criterion {number} failed:\n{}", problems.join("\n"));
}

fn count(reports: &[VerificationReport], id: &str) -> usize {
    reports.iter().flat_map(|r| &r.results).filter(|c| c.id == id).map(|c| c.instances).sum()
}

fn expect(what: &str, got: usize, want: usize) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: {got} instances, expected {want}"))
    }
}

#[test]
fn criterion_1_shuffle_theorem() {
    let reports = (1..=5).map(|n| verify_shuffle(n).unwrap()).collect();
    gate(1, "nabla C_alpha(1) = D_alpha (dinv, bounce, d_-^l N_alpha) for |alpha| <= 5", reports, |r| {
        expect("compositions", count(r, "dinv form = nabla C_alpha(1)"), 1 + 2 + 4 + 8 + 16)
    });
}

#[test]
fn criterion_2_worked_examples() {
    gate(2, "worked values", vec![verify_examples().unwrap()], |_| Ok(()));
}

#[test]
fn criterion_3_d_words() {
    gate(3, "chi via d-words for n <= 6, chi(pi,0) for n <= 5", vec![verify_words(6, 5).unwrap()], |r| {
        expect("paths", count(r, "chi via d-word = chi"), 1 + 1 + 2 + 5 + 14 + 42 + 132)?;
        expect("paths", count(r, "chi(pi,0) via commutator word = chi(pi,0)"), 1 + 1 + 2 + 5 + 14 + 42)
    });
}

#[test]
fn criterion_4_zeta() {
    gate(4, "zeta map for n <= 8, touch' recursion for n <= 7", vec![verify_zeta(8, 5, 7).unwrap()], |r| {
        expect("paths", count(r, "dinv(pi) = area(zeta pi)"), 1 + 1 + 2 + 5 + 14 + 42 + 132 + 429 + 1430)
    });
}

#[test]
fn criterion_5_relations() {
    gate(5, "all relation suites on V_0..V_3, degree <= 4, d-words of length <= 6", vec![verify_relations(3, 4, 6).unwrap()], |_| Ok(()));
}

#[test]
fn criterion_6_involution() {
    gate(6, "involution N on V_k, k <= 2, degree <= 4", vec![verify_involution(5, 2, 4).unwrap()], |r| {
        expect("compositions", count(r, "N(y_alpha) = q^{|alpha|-l(alpha)} N_alpha"), 1 + 2 + 4 + 8 + 16)
    });
}

#[test]
fn criterion_7_appendix() {
    gate(7, "no-attack plethysm, singleton sums, composition sums", vec![verify_appendix(6, 5, 8).unwrap()], |r| {
        expect("q-binomial sizes", count(r, "sum (-1)^l (1-q^a_1) multinomial = (q-1)^n"), 8)
    });
}

#[test]
fn criterion_8_macdonald() {
    gate(8, "H basis rank n <= 6, nabla e_n, sum of C_alpha(1)", vec![verify_macdonald(6, 5, 6).unwrap()], |r| {
        expect("ranks", count(r, "H_mu linearly independent"), 6)
    });
}
