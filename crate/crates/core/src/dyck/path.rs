use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};
use crate::ring::{LaurentMPoly, Rational, Var};

/// Cells `(i, j)` addressed by their top-right corner: column `i`, row `j`, both 1-based.
pub type CellSet = BTreeSet<(usize, usize)>;

/// Weights attached to the corners of a path.
pub type CornerWeight = BTreeMap<(usize, usize), LaurentMPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// A lattice path from `(0,0)` to `(n,n)` with unit North/East steps staying
/// weakly above the diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<DyckPath> {
        let mut h: i64 = 0;
        for s in &steps {
            h += if *s == Step::N { 1 } else { -1 };
            if h < 0 {
                return Err(Error::Parse("path dips below the diagonal".into()));
            }
        }
        if h != 0 {
            return Err(Error::Parse("path does not end on the diagonal".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> DyckPath {
        DyckPath::default()
    }

    /// `N^n E^n`.
    pub fn full(n: usize) -> DyckPath {
        let mut steps = vec![Step::N; n];
        steps.extend(std::iter::repeat_n(Step::E, n));
        DyckPath { steps }
    }

    /// `(NE)^n`.
    pub fn staircase(n: usize) -> DyckPath {
        DyckPath { steps: (0..n).flat_map(|_| [Step::N, Step::E]).collect() }
    }

    /// Builds the path with the given area sequence.
    pub fn from_area_seq(a: &[usize]) -> Result<DyckPath> {
        if let Some(&first) = a.first() {
            if first != 0 {
                return Err(Error::Parse(format!("area sequence must start with 0: {a:?}")));
            }
        }
        if a.windows(2).any(|w| w[1] > w[0] + 1) {
            return Err(Error::Parse(format!("invalid area sequence {a:?}")));
        }
        let x: Vec<usize> = a.iter().enumerate().map(|(j, &aj)| j + 1 - aj).collect();
        Ok(DyckPath::from_coarea(&x))
    }

    /// Builds the path from a valid coarea sequence `x`.
    fn from_coarea(x: &[usize]) -> DyckPath {
        let n = x.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut col = 0;
        for &xj in x {
            while col < xj - 1 {
                steps.push(Step::E);
                col += 1;
            }
            steps.push(Step::N);
        }
        while col < n {
            steps.push(Step::E);
            col += 1;
        }
        DyckPath { steps }
    }

    /// The unique path whose area cells are exactly `cells`, if one exists.
    pub fn from_area_set(n: usize, cells: &CellSet) -> Result<DyckPath> {
        let mut a = vec![0usize; n];
        for &(i, j) in cells {
            if i == 0 || i >= j || j > n {
                return Err(Error::AssertionFailure(format!("cell ({i},{j}) is not an area cell")));
            }
            a[j - 1] += 1;
        }
        for j in 1..=n {
            for i in (j - a[j - 1])..j {
                if !cells.contains(&(i, j)) {
                    return Err(Error::AssertionFailure(format!("row {j} of the cell set is not left-closed")));
                }
            }
        }
        DyckPath::from_area_seq(&a).map_err(|e| Error::AssertionFailure(e.to_string()))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of North steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `x_j`, the column of the cell right of the `j`-th North step (1-based).
    pub fn coarea_seq(&self) -> Vec<usize> {
        let mut x = Vec::with_capacity(self.size());
        let mut col = 0;
        for s in &self.steps {
            match s {
                Step::N => x.push(col + 1),
                Step::E => col += 1,
            }
        }
        x
    }

    pub fn area_seq(&self) -> Vec<usize> {
        self.coarea_seq().iter().enumerate().map(|(j, &x)| j + 1 - x).collect()
    }

    pub fn area(&self) -> usize {
        self.area_seq().iter().sum()
    }

    pub fn area_set(&self) -> CellSet {
        let mut out = CellSet::new();
        for (j0, &x) in self.coarea_seq().iter().enumerate() {
            let j = j0 + 1;
            for i in x..j {
                out.insert((i, j));
            }
        }
        out
    }

    /// Whether the cell `(i, j)` lies under the path (rows outside `1..=n` count as under).
    pub fn is_under(&self, i: usize, j: usize) -> bool {
        if j == 0 || j > self.size() {
            return true;
        }
        i >= self.coarea_seq()[j - 1]
    }

    pub fn dinv_set(&self) -> CellSet {
        let a = self.area_seq();
        let n = a.len();
        let mut out = CellSet::new();
        for j in 0..n {
            for jp in 0..n {
                if (j < jp && a[j] == a[jp]) || (jp < j && a[jp] == a[j] + 1) {
                    out.insert((j + 1, jp + 1));
                }
            }
        }
        out
    }

    pub fn dinv(&self) -> usize {
        self.dinv_set().len()
    }

    /// Gaps between successive diagonal touch points.
    pub fn touch(&self) -> Composition {
        let a = self.area_seq();
        let zeros: Vec<usize> = (0..a.len()).filter(|&j| a[j] == 0).collect();
        let mut parts = Vec::with_capacity(zeros.len());
        for (idx, &z) in zeros.iter().enumerate() {
            let next = zeros.get(idx + 1).copied().unwrap_or(a.len());
            parts.push((next - z) as u32);
        }
        Composition(parts)
    }

    fn check_len(&self, w: &[u32]) -> Result<()> {
        if w.len() != self.size() {
            return Err(Error::LengthMismatch { expected: self.size(), got: w.len() });
        }
        Ok(())
    }

    /// Word parking condition: labels strictly decrease up each column.
    pub fn is_word_parking(&self, w: &[u32]) -> Result<bool> {
        self.check_len(w)?;
        let x = self.coarea_seq();
        Ok((1..x.len()).all(|j| x[j - 1] != x[j] || w[j - 1] > w[j]))
    }

    pub fn dinv_pw(&self, w: &[u32]) -> Result<usize> {
        self.check_len(w)?;
        Ok(self.dinv_set().iter().filter(|&&(j, jp)| w[j - 1] > w[jp - 1]).count())
    }

    /// Reading order permutation: `sigma_i < sigma_j` iff `(a_i, i) < (a_j, j)`.
    pub fn reading_order(&self) -> Vec<usize> {
        let a = self.area_seq();
        let mut idx: Vec<usize> = (0..a.len()).collect();
        idx.sort_by_key(|&i| (a[i], i));
        let mut sigma = vec![0; a.len()];
        for (rank, &i) in idx.iter().enumerate() {
            sigma[i] = rank + 1;
        }
        sigma
    }

    /// The zeta map: the area set of the image is the reading-order image of the dinv set.
    pub fn zeta(&self) -> DyckPath {
        let sigma = self.reading_order();
        let cells: CellSet = self.dinv_set().iter().map(|&(i, j)| (sigma[i - 1], sigma[j - 1])).collect();
        DyckPath::from_area_set(self.size(), &cells).expect("attack relations form a Dyck path")
    }

    /// Inverse of [`DyckPath::zeta`], by recursion on the size.
    pub fn zeta_inverse(&self) -> DyckPath {
        if self.is_empty() {
            return DyckPath::empty();
        }
        let l = self.leading_north();
        let inner = self.gamma_bar().expect("nonempty").zeta_inverse();
        inner.psi_r(l - 1).expect("touch composition has at least l-1 parts")
    }

    /// Bounce sequence `b`, with `b_i` the bounce block containing the diagonal cell `(i,i)`.
    pub fn bounce_seq(&self) -> Vec<usize> {
        let n = self.size();
        // heights[c] = number of N steps before the (c+1)-th E step
        let mut heights = Vec::with_capacity(n);
        let mut nn = 0;
        for s in &self.steps {
            match s {
                Step::N => nn += 1,
                Step::E => heights.push(nn),
            }
        }
        let mut b = vec![0; n];
        let (mut x, mut block) = (0, 0);
        while x < n {
            let h = heights[x];
            for cell in b.iter_mut().take(h).skip(x) {
                *cell = block;
            }
            x = h;
            block += 1;
        }
        b
    }

    pub fn bounce(&self) -> usize {
        self.bounce_seq().iter().sum()
    }

    /// Cells above the path whose South and East neighbours are under it.
    pub fn corners(&self) -> CellSet {
        let x = self.coarea_seq();
        (2..=x.len()).filter(|&j| x[j - 2] < x[j - 1]).map(|j| (x[j - 1] - 1, j)).collect()
    }

    /// Flips every corner in `s` inside out.
    pub fn flip_corners(&self, s: &CellSet) -> Result<DyckPath> {
        let corners = self.corners();
        let mut x = self.coarea_seq();
        for c in s {
            if !corners.contains(c) {
                return Err(Error::WeightDomainMismatch);
            }
            x[c.1 - 1] -= 1;
        }
        Ok(DyckPath::from_coarea(&x))
    }

    /// Number of leading North steps.
    pub fn leading_north(&self) -> usize {
        self.steps.iter().take_while(|&&s| s == Step::N).count()
    }

    /// Step indices (in `self.steps`) of the touch points, including the origin.
    fn touch_step_indices(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut h: i64 = 0;
        for (idx, s) in self.steps.iter().enumerate() {
            h += if *s == Step::N { 1 } else { -1 };
            if h == 0 {
                out.push(idx + 1);
            }
        }
        out
    }

    /// Split at the `r`-th touch point as `pi2 pi1` and return `N pi1 E pi2`.
    pub fn psi_r(&self, r: usize) -> Result<DyckPath> {
        let touches = self.touch_step_indices();
        let l = touches.len() - 1;
        if r > l {
            return Err(Error::IndexOutOfRange { index: r, max: l });
        }
        let (pi2, pi1) = self.steps.split_at(touches[r]);
        let mut steps = Vec::with_capacity(self.steps.len() + 2);
        steps.push(Step::N);
        steps.extend_from_slice(pi1);
        steps.push(Step::E);
        steps.extend_from_slice(pi2);
        Ok(DyckPath { steps })
    }

    /// Left inverse of every `psi_r`: `N pi1 E pi2 -> pi2 pi1`.
    pub fn psi_bar(&self) -> Result<DyckPath> {
        if self.is_empty() {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let first = self.touch_step_indices()[1];
        let pi1 = &self.steps[1..first - 1];
        let mut steps = self.steps[first..].to_vec();
        steps.extend_from_slice(pi1);
        Ok(DyckPath { steps })
    }

    /// `N^l E rest -> N^{r+1} E N^{l-r} E rest`.
    pub fn gamma_r(&self, r: usize) -> Result<DyckPath> {
        if self.is_empty() {
            if r != 0 {
                return Err(Error::IndexOutOfRange { index: r, max: 0 });
            }
            return Ok(DyckPath { steps: vec![Step::N, Step::E] });
        }
        let l = self.leading_north();
        if r > l {
            return Err(Error::IndexOutOfRange { index: r, max: l });
        }
        let rest = &self.steps[l + 1..];
        let mut steps = vec![Step::N; r + 1];
        steps.push(Step::E);
        steps.extend(std::iter::repeat_n(Step::N, l - r));
        steps.push(Step::E);
        steps.extend_from_slice(rest);
        Ok(DyckPath { steps })
    }

    /// `N^l E rest -> N^{l-1} rest`: removes the first column of area cells.
    pub fn gamma_bar(&self) -> Result<DyckPath> {
        if self.is_empty() {
            return Err(Error::IndexOutOfRange { index: 0, max: 0 });
        }
        let l = self.leading_north();
        let mut steps = vec![Step::N; l - 1];
        steps.extend_from_slice(&self.steps[l + 1..]);
        Ok(DyckPath { steps })
    }

    /// Touch composition read off the image side: differences of `bounce(gamma_r)`.
    pub fn touch_prime(&self) -> Composition {
        if self.is_empty() {
            return Composition::default();
        }
        let l = self.leading_north();
        let t: Vec<usize> = (0..=l).map(|r| self.gamma_r(r).expect("r <= l").bounce()).collect();
        Composition(t.windows(2).map(|w| (w[0] - w[1]) as u32).collect())
    }

    /// Labels must decrease across every corner.
    pub fn wp_prime_check(&self, w: &[u32]) -> Result<bool> {
        self.check_len(w)?;
        Ok(self.corners().iter().all(|&(i, j)| w[i - 1] > w[j - 1]))
    }

    pub fn inv_pw(&self, w: &[u32]) -> Result<usize> {
        self.check_len(w)?;
        Ok(self.area_set().iter().filter(|&&(i, j)| w[i - 1] > w[j - 1]).count())
    }

    /// Reverse the step sequence and swap N with E.
    pub fn op(&self) -> DyckPath {
        let steps = self.steps.iter().rev().map(|s| if *s == Step::N { Step::E } else { Step::N }).collect();
        DyckPath { steps }
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "path": self.to_string(),
            "area": self.area(),
            "dinv": self.dinv(),
            "bounce": self.bounce(),
            "touch": self.touch().to_json(),
        })
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

pub(crate) fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.trim()
        .chars()
        .map(|c| match c {
            'N' | 'n' => Ok(Step::N),
            'E' | 'e' => Ok(Step::E),
            _ => Err(Error::Parse(format!("unexpected character `{c}` in path"))),
        })
        .collect()
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Accepts an NE-string or a comma-separated area sequence.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let a = s
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad area sequence `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            return DyckPath::from_area_seq(&a);
        }
        DyckPath::new(parse_steps(s)?)
    }
}

/// Cells of `mu` in reading order: rows from the top (`l`) down to 1, left to right.
fn mu_reading_cells(mu: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::with_capacity(mu.size() as usize);
    for i in (1..=mu.len()).rev() {
        for j in 1..=mu.parts()[i - 1] as usize {
            cells.push((i, j));
        }
    }
    cells
}

/// The path whose area cells are the attack pairs of the reading order of `mu`.
pub fn pi_mu(mu: &Partition) -> DyckPath {
    let cells = mu_reading_cells(mu);
    let pos: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(m, &c)| (c, m)).collect();
    let mut area = CellSet::new();
    for (m1, &(i, j)) in cells.iter().enumerate() {
        let stop = if i == 1 { cells.len() } else { pos[&(i - 1, j)] };
        for m2 in (m1 + 1)..stop {
            area.insert((m1 + 1, m2 + 1));
        }
    }
    DyckPath::from_area_set(cells.len(), &area).expect("attack relations of a diagram form a Dyck path")
}

/// Corner weights `q^arm t^(-1-leg)` for the corners of [`pi_mu`], one per vertical cell pair.
pub fn wt_mu(mu: &Partition) -> CornerWeight {
    let cells = mu_reading_cells(mu);
    let pos: BTreeMap<(usize, usize), usize> = cells.iter().enumerate().map(|(m, &c)| (c, m + 1)).collect();
    let mut wt = CornerWeight::new();
    for &(i, j) in &cells {
        if i > 1 {
            let (arm, leg) = mu.arm_leg(i, j).expect("cell in diagram");
            let w = LaurentMPoly::monomial(&[(Var::Q, arm as i32), (Var::T, -1 - leg as i32)], Rational::one());
            wt.insert((pos[&(i, j)], pos[&(i - 1, j)]), w);
        }
    }
    wt
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> DyckPath {
        DyckPath::from_area_seq(&[0, 0, 1, 2, 2, 3, 0, 1]).unwrap()
    }

    #[test]
    fn running_example_statistics() {
        let p = running();
        assert_eq!(p.coarea_seq(), vec![1, 2, 2, 2, 3, 3, 7, 7]);
        assert_eq!(p.area(), 9);
        let area: CellSet =
            [(2, 3), (2, 4), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (7, 8)].into_iter().collect();
        assert_eq!(p.area_set(), area);
        let dinv: CellSet =
            [(1, 2), (1, 7), (2, 7), (3, 8), (4, 5), (7, 3), (8, 4), (8, 5)].into_iter().collect();
        assert_eq!(p.dinv_set(), dinv);
        assert_eq!(p.dinv(), 8);
        assert_eq!(p.touch(), Composition(vec![1, 5, 2]));
        let w = [9, 5, 2, 1, 5, 2, 3, 2];
        assert!(p.is_word_parking(&w).unwrap());
        assert_eq!(p.dinv_pw(&w).unwrap(), 5);
        assert_eq!(p.reading_order(), vec![1, 2, 4, 6, 7, 8, 3, 5]);
    }

    #[test]
    fn running_example_zeta() {
        let p = running();
        let z = p.zeta();
        let area: CellSet =
            [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)].into_iter().collect();
        assert_eq!(z.area_set(), area);
        let corners: CellSet = [(2, 4), (3, 5), (4, 6), (7, 8)].into_iter().collect();
        assert_eq!(z.corners(), corners);
        assert_eq!(z.bounce_seq(), vec![0, 0, 0, 1, 1, 2, 2, 3]);
        assert_eq!(z.bounce(), 9);
        assert_eq!(z.zeta_inverse(), p);
        assert_eq!(z.touch_prime(), Composition(vec![1, 5, 2]));
        let wp = [9, 5, 3, 2, 2, 1, 5, 2];
        let sigma = p.reading_order();
        let w = [9, 5, 2, 1, 5, 2, 3, 2];
        let mut transported = [0; 8];
        for i in 0..8 {
            transported[sigma[i] - 1] = w[i];
        }
        assert_eq!(transported, wp);
        assert_eq!(z.inv_pw(&wp).unwrap(), 5);
        assert!(z.wp_prime_check(&wp).unwrap());
    }

    #[test]
    fn small_cases() {
        for n in 0..6 {
            let st = DyckPath::staircase(n);
            assert_eq!(st.area(), 0);
            assert_eq!(st.dinv(), n * n.saturating_sub(1) / 2);
            assert_eq!(st.coarea_seq(), (1..=n).collect::<Vec<_>>());
            assert_eq!(st.zeta(), DyckPath::full(n));
            let full = DyckPath::full(n);
            assert_eq!(full.area_seq(), (0..n).collect::<Vec<_>>());
            assert_eq!(full.dinv(), 0);
            assert!(full.bounce_seq().iter().all(|&b| b == 0));
            assert_eq!(full.reading_order(), (1..=n).collect::<Vec<_>>());
        }
        assert_eq!(DyckPath::full(3).touch(), Composition(vec![3]));
        let p: DyckPath = "NNEENE".parse().unwrap();
        assert_eq!(p.touch_prime(), Composition(vec![1, 2]));
        assert!(!DyckPath::full(2).is_word_parking(&[1, 1]).unwrap());
        assert!(matches!(p.dinv_pw(&[1]), Err(Error::LengthMismatch { .. })));
        assert_eq!(DyckPath::empty().zeta(), DyckPath::empty());
        assert_eq!(DyckPath::empty().zeta_inverse(), DyckPath::empty());
        assert_eq!(DyckPath::empty().gamma_r(0).unwrap().to_string(), "NE");
    }

    #[test]
    fn parse_forms() {
        let a: DyckPath = "0,1,1".parse().unwrap();
        assert_eq!(a.to_string(), "NNENEE");
        assert!("NEE".parse::<DyckPath>().is_err());
        assert!("ENNE".parse::<DyckPath>().is_err());
        assert!("0,2".parse::<DyckPath>().is_err());
    }

    #[test]
    fn corners_match_direct_scan() {
        for p in crate::dyck::enumerate_paths(6).unwrap() {
            let n = p.size();
            let mut scan = CellSet::new();
            for j in 1..=n {
                for i in 1..=n {
                    if !p.is_under(i, j) && p.is_under(i, j - 1) && p.is_under(i + 1, j) {
                        scan.insert((i, j));
                    }
                }
            }
            assert_eq!(p.corners(), scan, "{p}");
        }
    }

    #[test]
    fn pi_mu_small() {
        assert_eq!(pi_mu(&Partition::new(vec![1])).to_string(), "NE");
        assert!(wt_mu(&Partition::new(vec![1])).is_empty());
        let p11 = Partition::new(vec![1, 1]);
        let p = pi_mu(&p11);
        assert_eq!(p.to_string(), "NENE");
        let wt = wt_mu(&p11);
        assert_eq!(wt.keys().copied().collect::<CellSet>(), p.corners());
        assert_eq!(wt[&(1, 2)], crate::ring::poly("t^-1"));
        for n in 1..=6 {
            for mu in crate::combinat::partitions_of(n) {
                let p = pi_mu(&mu);
                assert_eq!(wt_mu(&mu).keys().copied().collect::<CellSet>(), p.corners(), "{mu}");
            }
        }
    }
}
