//! Dyck paths, their statistics, and the bijections between the area/dinv and
//! bounce/area pictures.

mod partial;
mod path;

pub use partial::{enumerate_partial, PartialDyckPath};
pub use path::{pi_mu, wt_mu, CellSet, CornerWeight, DyckPath, Step};

use crate::combinat::Composition;
use crate::error::{Error, Result};

/// Largest size enumerated by default.
pub const DEFAULT_CAP: usize = 10;

fn check_cap(n: usize) -> Result<()> {
    if n > DEFAULT_CAP {
        return Err(Error::CapExceeded { n, cap: DEFAULT_CAP });
    }
    Ok(())
}

/// All Dyck paths of size `n`, lexicographic with `N < E`.
pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    check_cap(n)?;
    Ok(paths_unchecked(n))
}

pub(crate) fn paths_unchecked(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, up: usize, h: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if up == n && h == 0 {
            out.push(DyckPath::new(cur.clone()).expect("valid by construction"));
            return;
        }
        if up < n {
            cur.push(Step::N);
            rec(n, up + 1, h + 1, cur, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(Step::E);
            rec(n, up, h - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Paths with the given touch composition: concatenations `N pi_i E` with `|pi_i| = alpha_i - 1`.
pub fn enumerate_paths_touch(alpha: &Composition) -> Result<Vec<DyckPath>> {
    check_cap(alpha.size() as usize)?;
    let mut out = vec![DyckPath::empty()];
    for &a in alpha.parts() {
        let blocks: Vec<DyckPath> = paths_unchecked(a as usize - 1)
            .into_iter()
            .map(|p| {
                let mut steps = vec![Step::N];
                steps.extend_from_slice(p.steps());
                steps.push(Step::E);
                DyckPath::new(steps).expect("prime block")
            })
            .collect();
        out = out.iter().flat_map(|p| blocks.iter().map(move |b| p.concat(b))).collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::compositions_of;
    use proptest::prelude::*;

    #[test]
    fn catalan_counts() {
        let c: Vec<usize> = (0..=7).map(|n| enumerate_paths(n).unwrap().len()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert!(matches!(enumerate_paths(11), Err(Error::CapExceeded { n: 11, cap: 10 })));
    }

    #[test]
    fn touch_classes_partition_paths() {
        for n in 1..=6u32 {
            let mut total = 0;
            for alpha in compositions_of(n) {
                let ps = enumerate_paths_touch(&alpha).unwrap();
                assert!(ps.iter().all(|p| p.touch() == alpha));
                total += ps.len();
            }
            assert_eq!(total, enumerate_paths(n as usize).unwrap().len());
        }
    }

    #[test]
    fn zeta_is_bijective_and_transports_statistics() {
        for n in 0..=7 {
            let paths = enumerate_paths(n).unwrap();
            let mut images: Vec<DyckPath> = paths.iter().map(|p| p.zeta()).collect();
            for (p, z) in paths.iter().zip(&images) {
                assert_eq!(z.zeta_inverse(), *p);
                assert_eq!(z.area(), p.dinv());
                assert_eq!(z.bounce(), p.area());
                assert_eq!(z.touch_prime(), p.touch());
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len(), paths.len());
        }
    }

    #[test]
    fn psi_and_gamma_inverses() {
        for n in 0..=6 {
            for p in enumerate_paths(n).unwrap() {
                let l = p.touch().len();
                for r in 0..=l {
                    let q = p.psi_r(r).unwrap();
                    assert_eq!(q.psi_bar().unwrap(), p);
                    let mut expect = vec![p.touch().parts()[r..].iter().sum::<u32>() + 1];
                    expect.extend_from_slice(&p.touch().parts()[..r]);
                    assert_eq!(q.touch().parts(), expect.as_slice());
                }
                assert!(p.psi_r(l + 1).is_err());
                let z = p.zeta();
                let lz = z.leading_north();
                for r in 0..=lz {
                    assert_eq!(z.gamma_r(r).unwrap().gamma_bar().unwrap(), z);
                }
                assert!(z.gamma_r(lz + 1).is_err());
            }
        }
    }

    proptest! {
        #[test]
        fn op_and_concat(n in 0usize..8, m in 0usize..6, i in 0usize..1000, j in 0usize..1000) {
            let ps = enumerate_paths(n).unwrap();
            let qs = enumerate_paths(m).unwrap();
            let p = &ps[i % ps.len()];
            let q = &qs[j % qs.len()];
            prop_assert_eq!(p.op().op(), p.clone());
            prop_assert_eq!(p.op().area(), p.area());
            let c = p.concat(q);
            prop_assert_eq!(c.area(), p.area() + q.area());
            prop_assert_eq!(c.touch(), p.touch().concat(&q.touch()));
        }

        #[test]
        fn flipping_corners_lowers_area(n in 1usize..8, i in 0usize..2000, mask in 0u32..256) {
            let ps = enumerate_paths(n).unwrap();
            let p = &ps[i % ps.len()];
            let s: CellSet = p.corners().into_iter().enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1).map(|(_, c)| c).collect();
            let f = p.flip_corners(&s).unwrap();
            let mut expect = p.area_set();
            expect.extend(s.iter().copied());
            prop_assert_eq!(f.area_set(), expect);
        }
    }
}
