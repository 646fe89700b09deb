use std::fmt;

use super::path::{parse_steps, CellSet, DyckPath, Step};
use crate::error::{Error, Result};

/// A path from `(0,k)` to `(n,n)`, identified with the full path `N^k steps`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialDyckPath {
    k: usize,
    steps: Vec<Step>,
}

impl PartialDyckPath {
    pub fn new(k: usize, steps: Vec<Step>) -> Result<Self> {
        let mut full = vec![Step::N; k];
        full.extend_from_slice(&steps);
        DyckPath::new(full)?;
        Ok(PartialDyckPath { k, steps })
    }

    pub fn parse(k: usize, s: &str) -> Result<Self> {
        Self::new(k, parse_steps(s)?)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The full path `N^k pi`.
    pub fn full(&self) -> DyckPath {
        let mut full = vec![Step::N; self.k];
        full.extend_from_slice(&self.steps);
        DyckPath::new(full).expect("checked at construction")
    }

    pub fn size(&self) -> usize {
        self.full().size()
    }

    pub fn area_set(&self) -> CellSet {
        self.full().area_set()
    }

    pub fn area(&self) -> usize {
        self.full().area()
    }

    /// `E pi`, a path from `(0, k+1)`.
    pub fn prepend_e(&self) -> PartialDyckPath {
        let mut steps = vec![Step::E];
        steps.extend_from_slice(&self.steps);
        PartialDyckPath { k: self.k + 1, steps }
    }

    /// `N pi`, a path from `(0, k-1)`.
    pub fn prepend_n(&self) -> Result<PartialDyckPath> {
        if self.k == 0 {
            return Err(Error::LevelZero);
        }
        let mut steps = vec![Step::N];
        steps.extend_from_slice(&self.steps);
        Ok(PartialDyckPath { k: self.k - 1, steps })
    }
}

impl fmt::Display for PartialDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.k)?;
        for s in &self.steps {
            f.write_str(if *s == Step::N { "N" } else { "E" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partial paths from `(0,k)` to `(n,n)`.
pub fn enumerate_partial(k: usize, n: usize) -> Result<Vec<PartialDyckPath>> {
    if k > n {
        return Ok(Vec::new());
    }
    Ok(super::enumerate_paths(n)?
        .into_iter()
        .filter(|p| p.leading_north() >= k)
        .map(|p| PartialDyckPath { k, steps: p.steps()[k..].to_vec() })
        .collect())
}
