use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition, parts in non-increasing order, all parts positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be positive: {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "partition parts must be non-increasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(n - i, 1^i)`.
    pub fn hook(n: usize, i: usize) -> Self {
        assert!(i < n, "hook leg must be smaller than n");
        let mut parts = vec![n - i];
        parts.extend(std::iter::repeat_n(1, i));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().take_while(|&&p| p > j).count())
                .collect(),
        )
    }

    /// `sum (i - 1) * lambda_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Beta-set with `len` beads: `lambda_i + len - i` for `i = 1..len`,
    /// listed in decreasing order.
    pub fn beta_set(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.len());
        (0..len).map(|i| self.part(i) + len - 1 - i).collect()
    }

    pub fn from_beta_set(beta: &[usize]) -> Self {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let len = b.len();
        Partition::from_unsorted(
            b.iter()
                .enumerate()
                .map(|(i, &x)| x + i + 1 - len)
                .collect(),
        )
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Hook-length count of standard tableaux of this shape.
    pub fn hook_length_dimension(&self) -> u128 {
        let n = self.size() as u128;
        let conj = self.conjugate();
        let factorial: u128 = (1..=n).product();
        let mut hooks: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= ((row - j) + (conj.part(j) - i) - 1) as u128;
            }
        }
        factorial / hooks
    }
}

/// The `n` hooks `(n - i, 1^i)`, `i = 0..n-1`.
pub fn hook_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::EmptyInput("hook partitions of 0".into()));
    }
    Ok((0..n).map(|i| Partition::hook(n, i)).collect())
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition `{s}`")))?;
        Partition::new(parts)
    }
}

/// A standard Young tableau, stored as the (row, column) of each entry
/// `1..=n` (index 0 holds entry 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    cells: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn position(&self, entry: usize) -> (usize, usize) {
        self.cells[entry - 1]
    }

    /// `column - row` of the box holding `entry`.
    pub fn content(&self, entry: usize) -> i64 {
        let (r, c) = self.position(entry);
        c as i64 - r as i64
    }

    /// Tableau with entries `i` and `i + 1` exchanged; `None` when the
    /// result is not standard.
    pub fn swap(&self, i: usize) -> Option<Self> {
        let (a, b) = (self.position(i), self.position(i + 1));
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Some(StandardTableau { cells })
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }
}

/// All standard tableaux of the given shape, in a fixed order.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut filled = vec![0usize; shape.len()];
    let mut cells = Vec::with_capacity(n);
    fn rec(
        shape: &Partition,
        filled: &mut [usize],
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<StandardTableau>,
        n: usize,
    ) {
        if cells.len() == n {
            out.push(StandardTableau {
                cells: cells.clone(),
            });
            return;
        }
        for r in 0..filled.len() {
            let c = filled[r];
            let fits_row = c < shape.part(r);
            let fits_above = r == 0 || filled[r - 1] > c;
            if fits_row && fits_above {
                filled[r] += 1;
                cells.push((r, c));
                rec(shape, filled, cells, out, n);
                cells.pop();
                filled[r] -= 1;
            }
        }
    }
    rec(shape, &mut filled, &mut cells, &mut out, n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hooks_small() {
        let h = hook_partitions(3).unwrap();
        assert_eq!(
            h,
            vec![
                Partition::new(vec![3]).unwrap(),
                Partition::new(vec![2, 1]).unwrap(),
                Partition::new(vec![1, 1, 1]).unwrap(),
            ]
        );
        assert_eq!(
            hook_partitions(1).unwrap(),
            vec![Partition::new(vec![1]).unwrap()]
        );
        assert!(matches!(hook_partitions(0), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn hooks_of_five_match_filtered_enumeration() {
        // oracle: all partitions of 5 whose second part is at most 1
        let mut filtered: Vec<Partition> = Partition::all(5)
            .into_iter()
            .filter(|p| p.part(1) <= 1)
            .collect();
        filtered.sort_by_key(|p| std::cmp::Reverse(p.part(0)));
        let hooks = hook_partitions(5).unwrap();
        assert_eq!(hooks.len(), 5);
        assert_eq!(hooks, filtered);
        for (i, h) in hooks.iter().enumerate() {
            assert_eq!(h.part(0), 5 - i);
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=11).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::new(vec![]).unwrap().size(), 0);
    }

    #[test]
    fn conjugate_and_statistics() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![2, 1, 1]).unwrap());
        assert_eq!(p.n_statistic(), 1);
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).unwrap().n_statistic(), 6);
    }

    #[test]
    fn beta_sets_round_trip() {
        for p in Partition::all(6) {
            for extra in 0..3 {
                let beta = p.beta_set(p.len() + extra);
                assert_eq!(Partition::from_beta_set(&beta), p);
            }
        }
    }

    #[test]
    fn tableaux_counts_match_hook_lengths() {
        for n in 1..=7 {
            for p in Partition::all(n) {
                assert_eq!(
                    standard_tableaux(&p).len() as u128,
                    p.hook_length_dimension(),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let p: Partition = "(3,2,2)".parse().unwrap();
        assert_eq!(p.to_string(), "(3,2,2)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }
}
