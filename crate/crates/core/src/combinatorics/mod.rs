//! Partitions, bipartitions and symbols, plus the invariants used to group
//! irreducible representations into families.

mod partition;
mod symbol;

use std::fmt;

pub use partition::{hook_partitions, standard_tableaux, Partition, StandardTableau};
pub use symbol::{a_value, family_key, Symbol, SymbolType};

/// Ordered pair of partitions `(alpha, beta)`; labels an irreducible
/// representation of the hyperoctahedral group of rank `|alpha| + |beta|`.
/// `(lambda, ())` is the pull-back of `lambda` from the symmetric group and
/// `((), lambda)` is its twist by the sign character of the last generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    alpha: Partition,
    beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn size(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    pub fn swapped(&self) -> Self {
        Bipartition::new(self.beta.clone(), self.alpha.clone())
    }

    /// All bipartitions of `n`, ordered by `|alpha|` descending and then by
    /// the partition orders.
    pub fn all(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for a in Partition::all(k) {
                for b in Partition::all(n - k) {
                    out.push(Bipartition::new(a.clone(), b));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// The finite group attached to a family, recorded as the symmetric groups
/// `S_1..S_5` or an elementary abelian 2-group `(Z/2)^d` with `d >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyGroup {
    S(u8),
    Elementary2(u32),
}

impl FamilyGroup {
    /// `(Z/2)^d`, folding `d = 0, 1` into `S_1, S_2`.
    pub fn elementary(d: u32) -> Self {
        match d {
            0 => FamilyGroup::S(1),
            1 => FamilyGroup::S(2),
            _ => FamilyGroup::Elementary2(d),
        }
    }

    /// Number of nonzero Coxeter traces a ladder cell with this group
    /// carries: 1, 2, 4, 6, 10 for `S_1..S_5`.
    pub fn ladder_count(&self) -> Option<usize> {
        match self {
            FamilyGroup::S(1) => Some(1),
            FamilyGroup::S(2) => Some(2),
            FamilyGroup::S(3) => Some(4),
            FamilyGroup::S(4) => Some(6),
            FamilyGroup::S(5) => Some(10),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyGroup::S(k) => write!(f, "S{k}"),
            FamilyGroup::Elementary2(d) => write!(f, "(Z/2)^{d}"),
        }
    }
}

impl std::str::FromStr for FamilyGroup {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "S1" => Ok(FamilyGroup::S(1)),
            "S2" => Ok(FamilyGroup::S(2)),
            "S3" => Ok(FamilyGroup::S(3)),
            "S4" => Ok(FamilyGroup::S(4)),
            "S5" => Ok(FamilyGroup::S(5)),
            _ => Err(crate::Error::Parse(format!("unknown family group `{s}`"))),
        }
    }
}

/// Family group of the family containing a classical symbol: `2d + 1`
/// singles give `(Z/2)^d` in type B, `2d` singles give `(Z/2)^(d-1)` in
/// type D. Degenerate symbols have trivial group.
pub fn family_group(symbol: &Symbol) -> FamilyGroup {
    let s = symbol.singles().len() as u32;
    match symbol.kind() {
        SymbolType::B => FamilyGroup::elementary((s - 1) / 2),
        SymbolType::D if s == 0 => FamilyGroup::S(1),
        SymbolType::D => FamilyGroup::elementary(s / 2 - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartition_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| Bipartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36, 65]);
    }

    #[test]
    fn family_groups_of_small_symbols() {
        let g = |s: &str| family_group(&s.parse().unwrap());
        assert_eq!(g("4/"), FamilyGroup::S(1));
        assert_eq!(g("1,4/0"), FamilyGroup::S(2));
        assert_eq!(g("5/0"), FamilyGroup::S(1));
        assert_eq!(g("1,4/0,2"), FamilyGroup::S(2));
        assert_eq!(g("1,2/1,2"), FamilyGroup::S(1));
        assert_eq!(g("0,2,4/1,3"), FamilyGroup::Elementary2(2));
        assert_eq!(FamilyGroup::S(5).ladder_count(), Some(10));
    }
}
