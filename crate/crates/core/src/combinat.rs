//! Partitions, compositions and the enumeration primitives built on them.

use std::cmp::Ordering;
use std::fmt;

use serde_json::Value;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ring::Rational;

pub type Parts = SmallVec<[u32; 8]>;

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is graded reverse-lex: smaller size first, then the lexicographically
/// larger partition first, so `(2) < (1,1) < (3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Parts);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts.into_iter().collect())
    }

    /// Wraps parts that are already weakly decreasing and positive.
    pub fn from_sorted(parts: &[u32]) -> Partition {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0));
        Partition(parts.iter().copied().collect())
    }

    pub fn empty() -> Partition {
        Partition(Parts::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        let parts = (1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// `n(mu) = sum (i-1) mu_i`.
    pub fn n_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// Arm and leg of the cell in 1-based `(row, col)`, rows counted from the longest part.
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(u32, u32)> {
        if row == 0 || col == 0 || row > self.len() || col as u32 > self.0[row - 1] {
            return Err(Error::CellOutsideDiagram(row, col));
        }
        let arm = self.0[row - 1] - col as u32;
        let leg = self.0.iter().filter(|&&p| p >= col as u32).count() as u32 - row as u32;
        Ok((arm, leg))
    }

    /// Multiplicities `m_i` of each part size `i >= 1` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.0.first().map_or(1, |&p| p as usize + 1)];
        for &p in &self.0 {
            m[p as usize] += 1;
        }
        m
    }

    /// `z_lambda = prod i^{m_i} m_i!`, the squared norm of `p_lambda`.
    pub fn z(&self) -> Rational {
        let mut out = num_bigint::BigInt::from(1);
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                out *= num_bigint::BigInt::from(i as u64) * num_bigint::BigInt::from(k);
            }
        }
        Rational::from(out)
    }

    /// Union of parts (the partition of the product `p_self p_other`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Parts = Parts::with_capacity(self.len() + other.len());
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        Partition(parts)
    }

    /// Adds one part of size `k`.
    pub fn with_part(&self, k: u32) -> Partition {
        let pos = self.0.iter().position(|&p| p < k).unwrap_or(self.0.len());
        let mut parts = self.0.clone();
        parts.insert(pos, k);
        Partition(parts)
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.0.to_vec())
    }

    pub fn from_json(v: &Value) -> Result<Partition> {
        let parts = json_u32_list(v)?;
        let p = Partition::new(parts.clone());
        if p.parts() != parts.as_slice() {
            return Err(Error::Parse(format!("not a partition: {parts:?}")));
        }
        Ok(p)
    }
}

pub(crate) fn json_u32_list(v: &Value) -> Result<Vec<u32>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an integer array".into()))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| Error::Parse("expected integer".into())))
        .collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<&[u32]> for Partition {
    fn from(p: &[u32]) -> Self {
        Partition::new(p.to_vec())
    }
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> Partition {
        Partition::new(self.0.clone())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn prepend(&self, a: u32) -> Composition {
        let mut v = vec![a];
        v.extend_from_slice(&self.0);
        Composition(v)
    }

    /// Parses `"3,1"` (empty string is the empty composition).
    pub fn parse(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad composition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n`, in reverse-lex order (largest first).
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_sorted(cur));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, graded.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All compositions of `n`, in lexicographic order.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    fn rec(n: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in 1..=n {
            cur.push(p);
            rec(n - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Nonnegative integer vectors of length `len` summing to `n`, lexicographically decreasing.
pub fn weak_compositions(n: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in weak_compositions(n - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Distinct rearrangements of the parts of `nu`, lexicographic.
pub fn rearrangements(nu: &Partition) -> Vec<Composition> {
    let mut letters: Vec<u32> = nu.parts().to_vec();
    letters.sort_unstable();
    let mut out = Vec::new();
    permute_multiset(&mut letters, |w| out.push(Composition(w.to_vec())));
    out
}

/// Words with `content[i]` copies of letter `i+1`, lexicographic.
pub fn multiset_permutations(content: &[u32]) -> Vec<Vec<u32>> {
    let mut letters: Vec<u32> = content
        .iter()
        .enumerate()
        .flat_map(|(i, &c)| std::iter::repeat_n(i as u32 + 1, c as usize))
        .collect();
    let mut out = Vec::new();
    permute_multiset(&mut letters, |w| out.push(w.to_vec()));
    out
}

/// Calls `f` on every distinct permutation of `letters` (which must be sorted ascending),
/// in lexicographic order.
pub fn permute_multiset(letters: &mut [u32], mut f: impl FnMut(&[u32])) {
    if letters.is_empty() {
        f(letters);
        return;
    }
    loop {
        f(letters);
        // next_permutation
        let n = letters.len();
        let Some(i) = (0..n - 1).rev().find(|&i| letters[i] < letters[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| letters[j] > letters[i]).unwrap();
        letters.swap(i, j);
        letters[i + 1..].reverse();
    }
}

/// The unique split of `alpha` into consecutive blocks of sizes `mu_1, mu_2, ...`, if any.
pub fn compatibility_split(alpha: &Composition, mu: &Partition) -> Result<Option<Vec<Composition>>> {
    if alpha.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{alpha}| != |{mu}|")));
    }
    let mut blocks = Vec::with_capacity(mu.len());
    let mut it = alpha.parts().iter().copied().peekable();
    for &target in mu.parts() {
        let mut block = Vec::new();
        let mut sum = 0;
        while sum < target {
            match it.next() {
                Some(p) => {
                    sum += p;
                    block.push(p);
                }
                None => return Ok(None),
            }
        }
        if sum != target {
            return Ok(None);
        }
        blocks.push(Composition(block));
    }
    Ok(Some(blocks))
}

/// Ordered set partitions of `{0..n}` written as compact words: every value in
/// `1..=max` occurs and `max` ranges over `1..=n`.
pub fn compact_words(n: usize) -> Vec<Vec<u32>> {
    fn rec(n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            let m = cur.iter().copied().max().unwrap_or(0);
            if (1..=m).all(|v| cur.contains(&v)) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..=n as u32 {
            cur.push(v);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[u32]) -> Partition {
        Partition::new(x.to_vec())
    }

    #[test]
    fn conjugate_and_nstat() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=8 {
            for mu in partitions_of(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
            }
        }
        assert_eq!(p(&[2]).n_stat(), 0);
        assert_eq!(p(&[1, 1]).n_stat(), 1);
        assert_eq!(p(&[3, 1]).n_stat(), 1);
    }

    #[test]
    fn arm_leg_examples() {
        assert_eq!(p(&[1]).arm_leg(1, 1).unwrap(), (0, 0));
        assert_eq!(p(&[2, 1]).arm_leg(1, 1).unwrap(), (1, 1));
        assert_eq!(p(&[3, 2]).arm_leg(1, 1).unwrap(), (2, 1));
        assert!(matches!(p(&[2, 1]).arm_leg(2, 2), Err(Error::CellOutsideDiagram(2, 2))));
    }

    #[test]
    fn enumeration_counts() {
        let c3: Vec<Vec<u32>> = compositions_of(3).into_iter().map(|c| c.0).collect();
        assert_eq!(c3, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        for n in 1..=8 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let r: Vec<Vec<u32>> = rearrangements(&p(&[2, 1])).into_iter().map(|c| c.0).collect();
        assert_eq!(r, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(rearrangements(&p(&[3, 2, 1])).len(), 6);
        assert_eq!(multiset_permutations(&[2, 1]), vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
        // Fubini numbers
        let f: Vec<usize> = (1..=4).map(|n| compact_words(n).len()).collect();
        assert_eq!(f, vec![1, 3, 13, 75]);
    }

    #[test]
    fn compatibility_examples() {
        let a = Composition(vec![2, 1, 1, 2]);
        let s = compatibility_split(&a, &p(&[3, 3])).unwrap().unwrap();
        assert_eq!(s, vec![Composition(vec![2, 1]), Composition(vec![1, 2])]);
        assert_eq!(compatibility_split(&Composition(vec![2, 2]), &p(&[3, 1])).unwrap(), None);
        assert_eq!(
            compatibility_split(&Composition(vec![3]), &p(&[3])).unwrap().unwrap(),
            vec![Composition(vec![3])]
        );
        assert!(compatibility_split(&Composition(vec![3]), &p(&[2])).is_err());
    }

    #[test]
    fn ordering_is_graded_reverse_lex() {
        let mut v = vec![p(&[1, 1, 1]), p(&[3]), p(&[1]), p(&[2, 1]), p(&[1, 1]), p(&[2])];
        v.sort();
        assert_eq!(v, vec![p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[2]).z(), Rational::from_int(2));
        assert_eq!(p(&[1, 1]).z(), Rational::from_int(2));
        assert_eq!(p(&[2, 2, 1]).z(), Rational::from_int(8));
    }
}
