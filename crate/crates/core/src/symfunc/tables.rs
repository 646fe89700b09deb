//! Per-degree transition matrices between the five classical bases, expressed
//! through power sums.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::Basis;
use crate::combinat::{partitions_of, Partition};
use crate::ring::Rational;

/// Sparse rows: `rows[i]` lists `(j, c)` with `b_i = sum c * target_j`.
pub(crate) type SparseMat = Vec<Vec<(usize, Rational)>>;

pub(crate) struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_p: [SparseMat; 5],
    from_p: [SparseMat; 5],
}

impl DegreeTables {
    pub fn to_p(&self, b: Basis) -> &SparseMat {
        &self.to_p[b as usize]
    }

    pub fn p_to(&self, b: Basis) -> &SparseMat {
        &self.from_p[b as usize]
    }
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<DegreeTables>>>> = OnceLock::new();

/// Transition tables for degree `n`, built once and shared.
pub(crate) fn tables(n: u32) -> Arc<DegreeTables> {
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().expect("table lock").get(&n) {
        return t.clone();
    }
    let built = Arc::new(build(n));
    lock.write().expect("table lock").entry(n).or_insert(built).clone()
}

fn sign_of(lambda: &Partition) -> Rational {
    if (lambda.size() as usize - lambda.len()).is_multiple_of(2) {
        Rational::from_int(1)
    } else {
        Rational::from_int(-1)
    }
}

/// `h_k` (or `e_k` when `signed`) as a power-sum expansion.
fn complete_in_p(k: u32, signed: bool) -> BTreeMap<Partition, Rational> {
    partitions_of(k)
        .into_iter()
        .map(|l| {
            let mut c = l.z().recip();
            if signed {
                c = c * sign_of(&l);
            }
            (l, c)
        })
        .collect()
}

fn product(a: &BTreeMap<Partition, Rational>, b: &BTreeMap<Partition, Rational>) -> BTreeMap<Partition, Rational> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            *out.entry(la.union(lb)).or_default() += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn to_sparse(rows: Vec<BTreeMap<Partition, Rational>>, index: &HashMap<Partition, usize>) -> SparseMat {
    rows.into_iter()
        .map(|r| {
            let mut v: Vec<(usize, Rational)> = r.into_iter().map(|(l, c)| (index[&l], c)).collect();
            v.sort_by_key(|x| x.0);
            v
        })
        .collect()
}

fn dense(m: &SparseMat, n: usize) -> Vec<Vec<Rational>> {
    let mut d = vec![vec![Rational::from_int(0); n]; n];
    for (i, row) in m.iter().enumerate() {
        for (j, c) in row {
            d[i][*j] = c.clone();
        }
    }
    d
}

fn sparse(d: Vec<Vec<Rational>>) -> SparseMat {
    d.into_iter()
        .map(|row| row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        .collect()
}

/// Gauss-Jordan inverse over `Q`.
fn invert(m: &SparseMat) -> SparseMat {
    let n = m.len();
    let mut a = dense(m, n);
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| Rational::from_int((i == j) as i64)).collect()).collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &piv;
            inv[col][j] = &inv[col][j] * &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                if !a[col][j].is_zero() {
                    let v = &a[col][j] * &f;
                    a[r][j] -= &v;
                }
                if !inv[col][j].is_zero() {
                    let v = &inv[col][j] * &f;
                    inv[r][j] -= &v;
                }
            }
        }
    }
    sparse(inv)
}

fn transpose_scaled(m: &SparseMat, scale: impl Fn(usize, usize) -> Rational) -> SparseMat {
    let mut out: SparseMat = vec![Vec::new(); m.len()];
    for (i, row) in m.iter().enumerate() {
        for (j, c) in row {
            out[*j].push((i, c * &scale(i, *j)));
        }
    }
    out
}

/// Jacobi-Trudi `s_lambda = det(h_{lambda_i - i + j})`, as signed h-products.
fn schur_in_h(lambda: &Partition) -> BTreeMap<Partition, Rational> {
    let l = lambda.len();
    let parts = lambda.parts();
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    fn rec(
        row: usize,
        parts: &[u32],
        used: &mut Vec<bool>,
        perm_sign: i64,
        cur: &mut Vec<u32>,
        out: &mut BTreeMap<Partition, Rational>,
    ) {
        let l = parts.len();
        if row == l {
            *out.entry(Partition::new(cur.clone())).or_default() += &Rational::from_int(perm_sign);
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            let idx = parts[row] as i64 - row as i64 + col as i64;
            if idx < 0 {
                continue;
            }
            // sign of the partial permutation: count used columns to the right
            let inversions = used[col + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { perm_sign } else { -perm_sign };
            used[col] = true;
            cur.push(idx as u32);
            rec(row + 1, parts, used, s, cur, out);
            cur.pop();
            used[col] = false;
        }
    }
    rec(0, parts, &mut vec![false; l], 1, &mut Vec::with_capacity(l), &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

fn build(n: u32) -> DegreeTables {
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let len = parts.len();

    let mut h_cache: HashMap<u32, BTreeMap<Partition, Rational>> = HashMap::new();
    let mut e_cache: HashMap<u32, BTreeMap<Partition, Rational>> = HashMap::new();
    let mut prod_of = |lam: &Partition, signed: bool| {
        let cache = if signed { &mut e_cache } else { &mut h_cache };
        let mut acc: BTreeMap<Partition, Rational> = [(Partition::empty(), Rational::from_int(1))].into();
        for &k in lam.parts() {
            let f = cache.entry(k).or_insert_with(|| complete_in_p(k, signed));
            acc = product(&acc, f);
        }
        acc
    };
    let h_rows: Vec<_> = parts.iter().map(|l| prod_of(l, false)).collect();
    let e_rows: Vec<_> = parts.iter().map(|l| prod_of(l, true)).collect();
    let h2p = to_sparse(h_rows, &index);
    let e2p = to_sparse(e_rows, &index);

    let s2p: SparseMat = parts
        .iter()
        .map(|l| {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (hl, c) in schur_in_h(l) {
                for (j, x) in &h2p[index[&hl]] {
                    *acc.entry(*j).or_default() += &(&c * x);
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();

    let p2h = invert(&h2p);
    let p2e = invert(&e2p);
    let z: Vec<Rational> = parts.iter().map(|l| l.z()).collect();
    // <s_lambda, s_mu> = delta, so p_mu = sum_lambda z_mu [p_mu]s_lambda * s_lambda
    let p2s = transpose_scaled(&s2p, |_, j| z[j].clone());
    // <p_lambda, h_mu> = z_lambda [p_lambda] h_mu gives the m-coefficients of p_lambda
    let p2m = transpose_scaled(&h2p, |_, j| z[j].clone());
    // m_lambda = sum_mu <m_lambda, p_mu> p_mu / z_mu and <m_lambda, p_mu> = [h_lambda] p_mu
    let m2p = transpose_scaled(&p2h, |i, _| z[i].recip());
    let id: SparseMat = (0..len).map(|i| vec![(i, Rational::from_int(1))]).collect();

    DegreeTables {
        parts,
        index,
        to_p: [id.clone(), h2p, e2p, m2p, s2p],
        from_p: [id, p2h, p2e, p2m, p2s],
    }
}
