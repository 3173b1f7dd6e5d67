use std::fmt;
use std::str::FromStr;

use super::{Bipartition, Partition};
use crate::error::{Error, Result};

/// Which classical series a symbol parametrizes: type B symbols have one
/// more entry on top than on the bottom, type D symbols have rows of equal
/// length (and unordered rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolType {
    B,
    D,
}

/// Two-row array of strictly increasing non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Row entries `part_i + (i - 1)` for a partition padded to `len` parts,
/// smallest part first.
fn row_from_partition(p: &Partition, len: usize) -> Vec<usize> {
    (0..len).map(|i| p.part(len - 1 - i) + i).collect()
}

fn partition_from_row(row: &[usize]) -> Partition {
    Partition::from_unsorted(row.iter().enumerate().map(|(i, &x)| x - i).collect())
}

impl Symbol {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        if !strictly_increasing(&top) || !strictly_increasing(&bottom) {
            return Err(Error::InvalidLabel(format!(
                "symbol rows must be strictly increasing: {top:?}/{bottom:?}"
            )));
        }
        let defect = top.len() as i64 - bottom.len() as i64;
        if defect != 0 && defect != 1 {
            return Err(Error::InvalidLabel(format!(
                "symbol defect must be 0 or 1: {top:?}/{bottom:?}"
            )));
        }
        Ok(Symbol { top, bottom })
    }

    /// Symbol of a bipartition in the given series, normalized; for type D
    /// the lexicographically larger row is put on top.
    pub fn from_bipartition(bp: &Bipartition, kind: SymbolType) -> Self {
        let (a, b) = (bp.alpha(), bp.beta());
        let sym = match kind {
            SymbolType::B => {
                let m = (a.len().saturating_sub(1)).max(b.len());
                Symbol {
                    top: row_from_partition(a, m + 1),
                    bottom: row_from_partition(b, m),
                }
            }
            SymbolType::D => {
                let m = a.len().max(b.len());
                Symbol {
                    top: row_from_partition(a, m),
                    bottom: row_from_partition(b, m),
                }
            }
        };
        sym.normalize()
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn kind(&self) -> SymbolType {
        if self.top.len() == self.bottom.len() {
            SymbolType::D
        } else {
            SymbolType::B
        }
    }

    /// Number of bottom entries for type B (`m` in `2m + 1` entries), row
    /// length for type D.
    pub fn size_parameter(&self) -> usize {
        self.bottom.len()
    }

    /// Identical rows (type D only); such symbols stand for split pairs.
    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// Prepends 0 to both rows and increments every old entry, `k` times.
    pub fn shift(&self, k: usize) -> Self {
        let lift =
            |row: &[usize]| -> Vec<usize> { (0..k).chain(row.iter().map(|x| x + k)).collect() };
        Symbol {
            top: lift(&self.top),
            bottom: lift(&self.bottom),
        }
    }

    /// Removes a common leading 0 from both rows as long as possible; type D
    /// rows are then ordered with the lexicographically larger row on top.
    pub fn normalize(&self) -> Self {
        let mut top = self.top.clone();
        let mut bottom = self.bottom.clone();
        while top.first() == Some(&0) && bottom.first() == Some(&0) {
            top.remove(0);
            bottom.remove(0);
            top.iter_mut().for_each(|x| *x -= 1);
            bottom.iter_mut().for_each(|x| *x -= 1);
        }
        if top.len() == bottom.len() && top < bottom {
            std::mem::swap(&mut top, &mut bottom);
        }
        Symbol { top, bottom }
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    pub fn to_bipartition(&self) -> Bipartition {
        Bipartition::new(
            partition_from_row(&self.top),
            partition_from_row(&self.bottom),
        )
    }

    /// Rank `n` of the group whose representation the symbol labels.
    pub fn rank(&self) -> usize {
        self.to_bipartition().size()
    }

    /// All entries of both rows, sorted.
    pub fn entries(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }

    /// Entries that occur in exactly one row.
    pub fn singles(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .top
            .iter()
            .filter(|x| !self.bottom.contains(x))
            .chain(self.bottom.iter().filter(|x| !self.top.contains(x)))
            .copied()
            .collect();
        out.sort_unstable();
        out
    }

    /// Interlacing test for special symbols: for type B
    /// `t1 <= b1 <= t2 <= ... <= bm <= t(m+1)`; for type D either row may
    /// lead.
    pub fn is_interlacing(&self) -> bool {
        fn interlaces(first: &[usize], second: &[usize]) -> bool {
            let mut merged = Vec::with_capacity(first.len() + second.len());
            for i in 0..first.len().max(second.len()) {
                if let Some(x) = first.get(i) {
                    merged.push(*x);
                }
                if let Some(y) = second.get(i) {
                    merged.push(*y);
                }
            }
            merged.windows(2).all(|w| w[0] <= w[1])
        }
        match self.kind() {
            SymbolType::B => interlaces(&self.top, &self.bottom),
            SymbolType::D => {
                interlaces(&self.top, &self.bottom) || interlaces(&self.bottom, &self.top)
            }
        }
    }
}

/// Sum of `min(x, y)` over unordered pairs of positions of a multiset.
fn pair_min_sum(sorted: &[usize]) -> usize {
    let n = sorted.len();
    sorted
        .iter()
        .enumerate()
        .map(|(k, &x)| x * (n - 1 - k))
        .sum()
}

/// Lusztig's `a`-invariant of a symbol: the pairwise-minimum statistic
/// minus the same statistic on the symbol `0..m / 0..m-1` (type B) or
/// `0..m-1 / 0..m-1` (type D) of equal size.
pub fn a_value(symbol: &Symbol) -> usize {
    let m = symbol.size_parameter();
    let mut base: Vec<usize> = match symbol.kind() {
        SymbolType::B => (0..=m).chain(0..m).collect(),
        SymbolType::D => (0..m).chain(0..m).collect(),
    };
    base.sort_unstable();
    pair_min_sum(&symbol.entries()) - pair_min_sum(&base)
}

/// Sorted entries of the normalized symbol; equal keys mean the same
/// family (split symbols additionally carry their sign, see
/// [`crate::label`]).
pub fn family_key(symbol: &Symbol) -> Vec<usize> {
    symbol.normalize().entries()
}

fn fmt_row(row: &[usize]) -> String {
    row.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", fmt_row(&self.top), fmt_row(&self.bottom))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    /// Reads `"1,2,4/0,1"`; an empty row is written as nothing (`"4/"`).
    fn from_str(s: &str) -> Result<Self> {
        let (t, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("symbol `{s}` lacks a `/`")))?;
        let row = |r: &str| -> Result<Vec<usize>> {
            if r.trim().is_empty() {
                return Ok(Vec::new());
            }
            r.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad symbol entry in `{s}`")))
                })
                .collect()
        };
        Symbol::new(row(t)?, row(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::new(
            Partition::new(a.to_vec()).unwrap(),
            Partition::new(b.to_vec()).unwrap(),
        )
    }

    #[test]
    fn exterior_powers_of_b() {
        // Lambda^i of B_n is ((n - i), (1^i))
        let n = 5;
        for i in 0..=n {
            let label = bp(&[n - i][..usize::from(i < n)], &vec![1; i]);
            let s = Symbol::from_bipartition(&label, SymbolType::B);
            let mut top: Vec<usize> = (0..i).collect();
            top.push(n);
            let bottom: Vec<usize> = (1..=i).collect();
            assert_eq!(s, Symbol::new(top, bottom).unwrap(), "i = {i}");
        }
    }

    #[test]
    fn pulled_back_hooks_and_their_twists() {
        let n = 4;
        for i in 0..n {
            let hook = Partition::hook(n, i);
            let plain = Symbol::from_bipartition(
                &Bipartition::new(hook.clone(), Partition::empty()),
                SymbolType::B,
            );
            let mut top: Vec<usize> = (1..=i).collect();
            top.push(n);
            assert_eq!(plain, Symbol::new(top, (0..i).collect()).unwrap());
            let twisted = Symbol::from_bipartition(
                &Bipartition::new(Partition::empty(), hook),
                SymbolType::B,
            );
            let mut bottom: Vec<usize> = (1..=i).collect();
            bottom.push(n);
            assert_eq!(twisted, Symbol::new((0..i + 2).collect(), bottom).unwrap());
        }
    }

    #[test]
    fn trivial_symbols() {
        let triv = bp(&[4], &[]);
        assert_eq!(
            Symbol::from_bipartition(&triv, SymbolType::B).to_string(),
            "4/"
        );
        assert_eq!(
            Symbol::from_bipartition(&triv, SymbolType::D).to_string(),
            "4/0"
        );
    }

    #[test]
    fn family_keys() {
        assert_eq!(family_key(&sym("1,4/0")), vec![0, 1, 4]);
        assert_eq!(family_key(&sym("1,4/0")), family_key(&sym("0,1/4")));
        assert_eq!(family_key(&sym("1,4/0,2")), family_key(&sym("2,4/0,1")));
        assert_eq!(family_key(&sym("1,4/0,2")), vec![0, 1, 2, 4]);
        assert_eq!(family_key(&sym("1,4/0,2")), family_key(&sym("1,4/0,2")));
    }

    #[test]
    fn normalization() {
        let s = sym("0,2,5/0,3");
        assert_eq!(s.normalize(), sym("1,4/2"));
        assert_eq!(s.normalize().normalize(), s.normalize());
        assert_eq!(sym("0,1/2,3").normalize(), sym("2,3/0,1"));
    }

    #[test]
    fn a_values_of_extremes() {
        for n in 1..=8usize {
            let triv = Symbol::from_bipartition(&bp(&[n], &[]), SymbolType::B);
            assert_eq!(a_value(&triv), 0);
            let sign = Symbol::from_bipartition(&bp(&[], &vec![1; n]), SymbolType::B);
            assert_eq!(a_value(&sign), n * n);
            if n >= 2 {
                let d_sign = Symbol::from_bipartition(&bp(&vec![1; n], &[]), SymbolType::D);
                assert_eq!(a_value(&d_sign), n * n - n);
            }
        }
    }

    #[test]
    fn bipartition_round_trip() {
        for n in 0..=6 {
            for b in Bipartition::all(n) {
                let s = Symbol::from_bipartition(&b, SymbolType::B);
                assert_eq!(s.to_bipartition(), b);
                assert_eq!(s.rank(), n);
            }
        }
    }

    #[test]
    fn rejects_bad_rows() {
        assert!("2,1/0".parse::<Symbol>().is_err());
        assert!("1,2,3/0".parse::<Symbol>().is_err());
        assert!("1,2".parse::<Symbol>().is_err());
    }
}
