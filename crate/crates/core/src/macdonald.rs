//! Modified Macdonald polynomials, `nabla`, and the operators `D_1`, `D_1^*`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use serde_json::{json, Value};

use crate::charfunc::{check_cap, chi_weighted};
use crate::combinat::{partitions_of, Composition, Partition};
use crate::dyck::{pi_mu, wt_mu};
use crate::error::{Error, Result};
use crate::ring::{bareiss_solve_multi, determinant, LaurentMPoly, Rational, RingFraction, Var};
use crate::symfunc::{op_c, z_vertex, Basis, SymFunc};

/// Tag written into cache files; tables with another tag are recomputed.
pub const CACHE_VERSION: &str = concat!("compshuffle-", env!("CARGO_PKG_VERSION"), "-H1");

/// Environment variable naming the cache directory when none is set explicitly.
pub const CACHE_ENV: &str = "SHUFFLE_CACHE_DIR";

/// `H_mu = q^{-n(mu') + binom(mu_1, 2)} t^{n(mu)} chi(pi_mu, wt_mu)`, in the Schur basis.
pub fn macdonald_h(mu: &Partition) -> Result<SymFunc> {
    let n = mu.size();
    let table = macdonald_table(n)?;
    let idx = table.basis.iter().position(|l| l == mu).expect("partition of n");
    Ok(table.h[idx].clone())
}

fn compute_h(mu: &Partition) -> Result<SymFunc> {
    check_cap(mu.size() as usize)?;
    if mu.is_empty() {
        return Ok(SymFunc::one());
    }
    let mu1 = mu.parts()[0] as i64;
    let qe = -(mu.conjugate().n_stat() as i64) + mu1 * (mu1 - 1) / 2;
    let c = LaurentMPoly::monomial(&[(Var::Q, qe as i32), (Var::T, mu.n_stat() as i32)], Rational::one());
    Ok(chi_weighted(&pi_mu(mu), &wt_mu(mu))?.scale(&c).convert(Basis::S))
}

/// All `H_mu` for `mu |- n`, with the data needed to expand in them.
#[derive(Debug)]
pub struct MacdonaldTable {
    pub n: u32,
    /// `partitions_of(n)`; indexes both the Schur basis and the `H_mu`.
    pub basis: Vec<Partition>,
    /// `H_mu` in the Schur basis.
    pub h: Vec<SymFunc>,
    inverse: OnceLock<(Vec<Vec<LaurentMPoly>>, LaurentMPoly)>,
}

impl MacdonaldTable {
    pub fn build(n: u32) -> Result<MacdonaldTable> {
        check_cap(n as usize)?;
        let basis = partitions_of(n);
        let h = basis.iter().map(compute_h).collect::<Result<Vec<_>>>()?;
        Ok(MacdonaldTable { n, basis, h, inverse: OnceLock::new() })
    }

    /// `m[nu][mu]`: the coefficient of `s_nu` in `H_mu`.
    pub fn matrix(&self) -> Vec<Vec<LaurentMPoly>> {
        self.basis.iter().map(|nu| self.h.iter().map(|f| f.coeff(nu)).collect()).collect()
    }

    pub fn determinant(&self) -> Result<LaurentMPoly> {
        determinant(&self.matrix())
    }

    /// Numerators `inv[mu][nu]` over a common denominator: `s_nu = sum_mu inv[mu][nu] / den * H_mu`.
    fn inverse(&self) -> Result<&(Vec<Vec<LaurentMPoly>>, LaurentMPoly)> {
        if let Some(v) = self.inverse.get() {
            return Ok(v);
        }
        let size = self.basis.len();
        let unit: Vec<Vec<LaurentMPoly>> = (0..size)
            .map(|j| (0..size).map(|i| if i == j { LaurentMPoly::one() } else { LaurentMPoly::zero() }).collect())
            .collect();
        let sol = bareiss_solve_multi(&self.matrix(), &unit)?;
        let mut inv = vec![vec![LaurentMPoly::zero(); size]; size];
        for (nu, col) in sol.numerators.iter().enumerate() {
            for (mu, x) in col.iter().enumerate() {
                inv[mu][nu] = x.clone();
            }
        }
        let _ = self.inverse.set((inv, sol.denominator));
        Ok(self.inverse.get().expect("just set"))
    }

    /// Numerators of `f = sum_mu c_mu H_mu` over the shared denominator.
    fn expand_numerators(&self, f: &SymFunc) -> Result<(Vec<LaurentMPoly>, LaurentMPoly)> {
        let (inv, den) = self.inverse()?;
        let f = f.convert(Basis::S);
        let comp: Vec<LaurentMPoly> = self.basis.iter().map(|nu| f.coeff(nu)).collect();
        let nums = inv
            .iter()
            .map(|row| {
                let mut acc = LaurentMPoly::zero();
                for (x, y) in row.iter().zip(&comp) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += &(x * y);
                    }
                }
                acc
            })
            .collect();
        Ok((nums, den.clone()))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            self.basis.iter().zip(&self.h).map(|(mu, f)| json!({"mu": mu.to_json(), "H": f.to_json()})).collect();
        json!({"version": CACHE_VERSION, "n": self.n, "table": rows})
    }

    pub fn from_json(v: &Value) -> Result<MacdonaldTable> {
        if v.get("version").and_then(Value::as_str) != Some(CACHE_VERSION) {
            return Err(Error::Parse("cache version mismatch".into()));
        }
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing `n`".into()))? as u32;
        let rows = v.get("table").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing `table`".into()))?;
        let basis = partitions_of(n);
        let mut found: HashMap<Partition, SymFunc> = HashMap::new();
        for r in rows {
            let mu = Partition::from_json(r.get("mu").ok_or_else(|| Error::Parse("missing `mu`".into()))?)?;
            let f = SymFunc::from_json(r.get("H").ok_or_else(|| Error::Parse("missing `H`".into()))?)?;
            found.insert(mu, f.convert(Basis::S));
        }
        let h = basis
            .iter()
            .map(|mu| found.remove(mu).ok_or_else(|| Error::Parse(format!("missing H for {mu}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(MacdonaldTable { n, basis, h, inverse: OnceLock::new() })
    }
}

fn cache_dir_slot() -> &'static RwLock<Option<PathBuf>> {
    static DIR: OnceLock<RwLock<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(|| RwLock::new(std::env::var_os(CACHE_ENV).map(PathBuf::from)))
}

/// Sets (or clears) the directory used to persist Macdonald tables.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir_slot().write().expect("cache dir lock") = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    cache_dir_slot().read().expect("cache dir lock").clone()
}

fn cache_file(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("H_n{n}.json"))
}

fn load_or_build(n: u32) -> Result<MacdonaldTable> {
    let Some(dir) = cache_dir() else {
        return MacdonaldTable::build(n);
    };
    let path = cache_file(&dir, n);
    if let Ok(text) = fs::read_to_string(&path) {
        // unreadable or stale entries are rebuilt
        if let Ok(t) = serde_json::from_str::<Value>(&text).map_err(|e| Error::Parse(e.to_string())).and_then(|v| MacdonaldTable::from_json(&v)) {
            if t.n == n {
                return Ok(t);
            }
        }
    }
    let table = MacdonaldTable::build(n)?;
    fs::create_dir_all(&dir).map_err(|e| Error::Io(e.to_string()))?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, table.to_json().to_string()).map_err(|e| Error::Io(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(table)
}

/// The table for degree `n`, built once per process (and persisted when a cache directory is set).
pub fn macdonald_table(n: u32) -> Result<Arc<MacdonaldTable>> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<MacdonaldTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    let mut guard = tables.lock().expect("table lock");
    if let Some(t) = guard.get(&n) {
        return Ok(t.clone());
    }
    let t = Arc::new(load_or_build(n)?);
    guard.insert(n, t.clone());
    Ok(t)
}

/// `f = sum_mu c_mu H_mu` for homogeneous `f` of degree `n`.
pub fn expand_in_h(f: &SymFunc, n: u32) -> Result<BTreeMap<Partition, RingFraction>> {
    if f.degrees().iter().any(|&d| d != n) {
        return Err(Error::SizeMismatch(format!("expected a homogeneous function of degree {n}")));
    }
    let table = macdonald_table(n)?;
    let (nums, den) = table.expand_numerators(f)?;
    Ok(table
        .basis
        .iter()
        .zip(nums)
        .filter(|(_, c)| !c.is_zero())
        .map(|(mu, c)| (mu.clone(), RingFraction { num: c, den: den.clone() }.simplify()))
        .collect())
}

/// `H_mu[-1] = (-1)^{|mu|} q^{n(mu')} t^{n(mu)}`.
pub fn nabla_eigenvalue(mu: &Partition) -> LaurentMPoly {
    let sign = if mu.size().is_multiple_of(2) { 1 } else { -1 };
    LaurentMPoly::monomial(
        &[(Var::Q, mu.conjugate().n_stat() as i32), (Var::T, mu.n_stat() as i32)],
        Rational::from_int(sign),
    )
}

/// `nabla`, diagonal on the `H_mu`. Fails with `InexactDivision` if the result leaves the Laurent ring.
pub fn nabla(f: &SymFunc) -> Result<SymFunc> {
    let mut out = SymFunc::zero(Basis::S);
    for d in f.degrees() {
        let table = macdonald_table(d)?;
        let (nums, den) = table.expand_numerators(&f.degree_component(d))?;
        let mut acc = SymFunc::zero(Basis::S);
        for ((mu, h), c) in table.basis.iter().zip(&table.h).zip(nums) {
            if !c.is_zero() {
                acc = acc.add(&h.scale(&(c * nabla_eigenvalue(mu))));
            }
        }
        out = out.add(&acc.try_map_coeffs(|c| c.exact_div(&den))?);
    }
    Ok(out)
}

/// `C_{alpha_1} ... C_{alpha_l}(1)`, innermost `C_{alpha_l}`.
pub fn c_word(alpha: &Composition) -> SymFunc {
    alpha.parts().iter().rev().fold(SymFunc::one(), |f, &r| op_c(r as i32, &f))
}

/// `nabla C_alpha(1)`.
pub fn nabla_c(alpha: &Composition) -> Result<SymFunc> {
    check_cap(alpha.size() as usize)?;
    nabla(&c_word(alpha))
}

/// The involution restricted to `V_0`: `nabla omega-bar`.
pub fn script_n_v0(f: &SymFunc) -> Result<SymFunc> {
    nabla(&f.omega_bar()?)
}

/// `(D_1 F)[X] = F[X + (1-q)(1-t)/u] Exp[-uX] |_{u^1}`.
pub fn d1_op(f: &SymFunc) -> SymFunc {
    let c = (LaurentMPoly::one() - LaurentMPoly::q()) * (LaurentMPoly::one() - LaurentMPoly::t());
    z_vertex(f, &c, true, 1)
}

/// `(D_1^* F)[X] = F[X - (1-1/q)(1-1/t)/u] Exp[uX] |_{u^1}`.
pub fn d1_star_op(f: &SymFunc) -> SymFunc {
    let c = (LaurentMPoly::one() - LaurentMPoly::q_pow(-1)) * (LaurentMPoly::one() - LaurentMPoly::var_pow(Var::T, -1));
    z_vertex(f, &-c, false, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfunc::{d_alpha_dinv, shuffle_sum};
    use crate::combinat::compositions_of;
    use crate::symfunc::sym;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn small_macdonald() {
        assert_eq!(macdonald_h(&part(&[1])).unwrap(), sym("s[1]"));
        assert_eq!(macdonald_h(&part(&[2])).unwrap(), sym("s[2] + q*s[1,1]"));
        assert_eq!(macdonald_h(&part(&[1, 1])).unwrap(), sym("s[2] + t*s[1,1]"));
        assert_eq!(macdonald_h(&part(&[2, 1])).unwrap(), sym("s[3] + (q+t)*s[2,1] + q*t*s[1,1,1]"));
        assert_eq!(macdonald_h(&part(&[3])).unwrap(), sym("s[3] + (q+q^2)*s[2,1] + q^3*s[1,1,1]"));
        assert_eq!(macdonald_h(&part(&[1, 1, 1])).unwrap(), sym("s[3] + (t+t^2)*s[2,1] + t^3*s[1,1,1]"));
    }

    #[test]
    fn expansion_in_h() {
        let e = expand_in_h(&sym("s[2] + q*s[1,1]"), 2).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[&part(&[2])].to_poly().unwrap(), LaurentMPoly::one());
        let e = expand_in_h(&sym("s[1,1]"), 2).unwrap();
        let qt = LaurentMPoly::q() - LaurentMPoly::t();
        assert_eq!(e[&part(&[2])], RingFraction::new(LaurentMPoly::one(), qt.clone()).unwrap().simplify());
        assert_eq!(e[&part(&[1, 1])], RingFraction::new(LaurentMPoly::int(-1), qt).unwrap().simplify());
        assert!(expand_in_h(&sym("s[1]"), 2).is_err());
    }

    #[test]
    fn nabla_values() {
        assert_eq!(nabla(&sym("s[1]")).unwrap(), sym("s[1]").neg());
        let h2 = sym("s[2] + q*s[1,1]");
        assert_eq!(nabla(&h2).unwrap(), h2.scale(&LaurentMPoly::q()));
        assert_eq!(nabla(&sym("e[2]")).unwrap(), sym("s[2] + (q+t)*s[1,1]"));
        assert_eq!(nabla_c(&Composition(vec![1])).unwrap(), sym("s[1]"));
        assert_eq!(nabla_c(&Composition(vec![2])).unwrap(), sym("t*s[1,1]"));
    }

    #[test]
    fn shuffle_small() {
        for n in 1..=3u32 {
            let sign = LaurentMPoly::int(if n % 2 == 0 { 1 } else { -1 });
            assert_eq!(nabla(&SymFunc::e(&[n])).unwrap().scale(&sign), shuffle_sum(n as usize).unwrap());
            for alpha in compositions_of(n) {
                assert_eq!(nabla_c(&alpha).unwrap(), d_alpha_dinv(&alpha).unwrap(), "{alpha}");
            }
        }
    }

    #[test]
    fn d1_values() {
        assert_eq!(d1_op(&SymFunc::one()), sym("e[1]").neg());
        assert_eq!(d1_star_op(&SymFunc::one()), sym("h[1]"));
        for lam in crate::combinat::partitions_up_to(3) {
            let f = SymFunc::s(lam.parts());
            assert_eq!(d1_op(&f).omega_bar().unwrap(), d1_star_op(&f.omega_bar().unwrap()), "{lam}");
        }
    }

    #[test]
    fn table_json_round_trip() {
        let t = macdonald_table(3).unwrap();
        let back = MacdonaldTable::from_json(&t.to_json()).unwrap();
        assert_eq!(back.h, t.h);
        let mut stale = t.to_json();
        stale["version"] = json!("other");
        assert!(MacdonaldTable::from_json(&stale).is_err());
    }
}
