//! Labels of irreducible representations and the invariants attached to
//! them.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{
    a_value, family_group, family_key, Bipartition, FamilyGroup, Partition, Symbol, SymbolType,
};
use crate::error::{Error, Result};
use crate::groups::{CoxeterDatum, CoxeterType};
use crate::noncrystal::DihedralLabel;

/// Which half of a split pair of type D representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitSign {
    Plus,
    Minus,
}

impl fmt::Display for SplitSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitSign::Plus => "+",
            SplitSign::Minus => "-",
        })
    }
}

/// Irreducible representation of a type D group: an unordered pair of
/// partitions, stored in the order of the normalized symbol rows, plus a
/// sign when the two partitions coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DLabel {
    pair: Bipartition,
    split: Option<SplitSign>,
}

impl DLabel {
    pub fn new(pair: Bipartition, split: Option<SplitSign>) -> Result<Self> {
        let equal = pair.alpha() == pair.beta();
        if equal != split.is_some() {
            return Err(Error::InvalidLabel(format!(
                "type D label {pair}: a split sign is required exactly when both partitions agree"
            )));
        }
        let canonical = Symbol::from_bipartition(&pair, SymbolType::D).to_bipartition();
        Ok(DLabel {
            pair: canonical,
            split,
        })
    }

    pub fn pair(&self) -> &Bipartition {
        &self.pair
    }

    pub fn split(&self) -> Option<SplitSign> {
        self.split
    }

    pub fn symbol(&self) -> Symbol {
        Symbol::from_bipartition(&self.pair, SymbolType::D)
    }

    pub fn rank(&self) -> usize {
        self.pair.size()
    }

    /// Every irreducible representation of the type D group of rank `n`.
    pub fn all(n: usize) -> Vec<DLabel> {
        let mut out = Vec::new();
        for bp in Bipartition::all(n) {
            let canonical = Symbol::from_bipartition(&bp, SymbolType::D).to_bipartition();
            if canonical != bp {
                continue;
            }
            if bp.alpha() == bp.beta() {
                for s in [SplitSign::Plus, SplitSign::Minus] {
                    out.push(DLabel {
                        pair: bp.clone(),
                        split: Some(s),
                    });
                }
            } else {
                out.push(DLabel {
                    pair: bp,
                    split: None,
                });
            }
        }
        out
    }
}

impl fmt::Display for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())?;
        if let Some(s) = self.split {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrLabel {
    A(Partition),
    B(Bipartition),
    D(DLabel),
    Dihedral(DihedralLabel),
    /// Exceptional types: `d_b` (dimension, b-invariant), with a prime for
    /// the second of two such representations.
    Named(String),
}

impl IrrLabel {
    pub fn d(pair: Bipartition) -> Result<Self> {
        Ok(IrrLabel::D(DLabel::new(pair, None)?))
    }

    /// The exterior power `Λ^i` of the reflection representation.
    pub fn exterior_power(datum: &CoxeterDatum, i: usize) -> Result<Self> {
        let r = datum.rank();
        if i > r {
            return Err(Error::InvalidInput(format!("Λ^{i} of a rank {r} group")));
        }
        let ones = |k: usize| Partition::new(vec![1; k]).unwrap();
        let row = |k: usize| Partition::from_unsorted(vec![k]);
        match datum.family() {
            CoxeterType::A => Ok(IrrLabel::A(Partition::hook(r + 1, i))),
            CoxeterType::B => Ok(IrrLabel::B(Bipartition::new(row(r - i), ones(i)))),
            CoxeterType::D => IrrLabel::d(Bipartition::new(ones(i), row(r - i))),
            CoxeterType::I2(m) => Ok(IrrLabel::Dihedral(match i {
                0 => DihedralLabel::one(0),
                1 => DihedralLabel::Two(1),
                _ => DihedralLabel::one(m),
            })),
            other => Err(Error::Capability(format!(
                "exterior power labels of type {other} are not computed"
            ))),
        }
    }

    /// Tensor product with the sign representation, for types A and B and
    /// non-split labels of type D.
    pub fn sign_twist(&self) -> Result<Self> {
        match self {
            IrrLabel::A(p) => Ok(IrrLabel::A(p.conjugate())),
            IrrLabel::B(bp) => Ok(IrrLabel::B(Bipartition::new(
                bp.beta().conjugate(),
                bp.alpha().conjugate(),
            ))),
            IrrLabel::D(d) if d.split.is_none() => IrrLabel::d(Bipartition::new(
                d.pair.alpha().conjugate(),
                d.pair.beta().conjugate(),
            )),
            other => Err(Error::Capability(format!("sign twist of {other}"))),
        }
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::A(p) => write!(f, "{p}"),
            IrrLabel::B(bp) => write!(f, "{}", Symbol::from_bipartition(bp, SymbolType::B)),
            IrrLabel::D(d) => write!(f, "{d}"),
            IrrLabel::Dihedral(d) => write!(f, "{d}"),
            IrrLabel::Named(s) => f.write_str(s),
        }
    }
}

impl FromStr for IrrLabel {
    type Err = Error;

    /// Partitions `(3,1)`, symbols `1,4/0` (defect decides B or D; a
    /// trailing `+`/`-` marks a split half), anything else as a name.
    /// Dihedral labels share their names with exceptional ones and are
    /// never produced here.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            return Ok(IrrLabel::A(s.parse()?));
        }
        if s.contains('/') {
            let (body, split) = match s.chars().last() {
                Some('+') => (&s[..s.len() - 1], Some(SplitSign::Plus)),
                Some('-') => (&s[..s.len() - 1], Some(SplitSign::Minus)),
                _ => (s, None),
            };
            let sym: Symbol = body.parse()?;
            let bp = sym.to_bipartition();
            return match sym.kind() {
                SymbolType::B if split.is_none() => Ok(IrrLabel::B(bp)),
                SymbolType::B => Err(Error::InvalidLabel(format!("`{s}`: type B is never split"))),
                SymbolType::D => Ok(IrrLabel::D(DLabel::new(bp, split)?)),
            };
        }
        Ok(IrrLabel::Named(s.to_string()))
    }
}

/// Normalized symbol of a type B or D label.
pub fn symbol_of_label(label: &IrrLabel, kind: SymbolType) -> Result<Symbol> {
    match (label, kind) {
        (IrrLabel::B(bp), SymbolType::B) => Ok(Symbol::from_bipartition(bp, SymbolType::B)),
        (IrrLabel::D(d), SymbolType::D) => Ok(d.symbol()),
        _ => Err(Error::InvalidLabel(format!(
            "{label} has no symbol of type {kind:?}"
        ))),
    }
}

/// Canonical family (two-sided cell) key of a classical label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKey {
    /// Type A families are singletons.
    Partition(Partition),
    Entries(Vec<usize>),
    Split(Vec<usize>, SplitSign),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellInvariants {
    pub a_value: usize,
    pub b_value: usize,
    pub f_value: u64,
    pub family_key: FamilyKey,
    pub family_group: FamilyGroup,
}

fn b_statistic(bp: &Bipartition, kind: SymbolType) -> usize {
    let (a, b) = (bp.alpha(), bp.beta());
    let tail = match kind {
        SymbolType::B => b.size(),
        SymbolType::D => a.size().min(b.size()),
    };
    2 * a.n_statistic() + 2 * b.n_statistic() + tail
}

/// `a`, `b`, `f`, family key and family group of a classical label.
pub fn invariants(label: &IrrLabel) -> Result<CellInvariants> {
    match label {
        IrrLabel::A(p) => Ok(CellInvariants {
            a_value: p.n_statistic(),
            b_value: p.n_statistic(),
            f_value: 1,
            family_key: FamilyKey::Partition(p.clone()),
            family_group: FamilyGroup::S(1),
        }),
        IrrLabel::B(bp) => {
            let sym = Symbol::from_bipartition(bp, SymbolType::B);
            let d = (sym.singles().len() as u32 - 1) / 2;
            Ok(CellInvariants {
                a_value: a_value(&sym),
                b_value: b_statistic(bp, SymbolType::B),
                f_value: 1 << d,
                family_key: FamilyKey::Entries(family_key(&sym)),
                family_group: family_group(&sym),
            })
        }
        IrrLabel::D(dl) => {
            let sym = dl.symbol();
            let singles = sym.singles().len() as u32;
            let key = match dl.split {
                Some(s) => FamilyKey::Split(family_key(&sym), s),
                None => FamilyKey::Entries(family_key(&sym)),
            };
            Ok(CellInvariants {
                a_value: a_value(&sym),
                b_value: b_statistic(dl.pair(), SymbolType::D),
                f_value: if singles == 0 {
                    1
                } else {
                    1 << (singles / 2 - 1)
                },
                family_key: key,
                family_group: family_group(&sym),
            })
        }
        other => Err(Error::Capability(format!(
            "invariants of {other} are only available from stored tables"
        ))),
    }
}

pub fn a_value_of(label: &IrrLabel) -> Result<usize> {
    invariants(label).map(|i| i.a_value)
}

pub fn b_value_of(label: &IrrLabel) -> Result<usize> {
    invariants(label).map(|i| i.b_value)
}

pub fn f_value_of(label: &IrrLabel) -> Result<u64> {
    invariants(label).map(|i| i.f_value)
}

/// `a` of the sign twist; for split labels this equals `a` of the other
/// split pair, which has the same symbol up to the sign.
pub fn twisted_a_value(label: &IrrLabel) -> Result<usize> {
    match label {
        IrrLabel::D(d) if d.split.is_some() => {
            let conj = d.pair.alpha().conjugate();
            let bp = Bipartition::new(conj.clone(), conj);
            a_value_of(&IrrLabel::D(DLabel::new(bp, d.split)?))
        }
        other => a_value_of(&other.sign_twist()?),
    }
}

/// Every irreducible representation of a classical group, in a fixed
/// order.
pub fn classical_labels(datum: &CoxeterDatum) -> Result<Vec<IrrLabel>> {
    let r = datum.rank();
    match datum.family() {
        CoxeterType::A => Ok(Partition::all(r + 1).into_iter().map(IrrLabel::A).collect()),
        CoxeterType::B => Ok(Bipartition::all(r).into_iter().map(IrrLabel::B).collect()),
        CoxeterType::D => Ok(DLabel::all(r).into_iter().map(IrrLabel::D).collect()),
        other => Err(Error::Capability(format!("type {other} is not classical"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn symbols_of_exterior_powers() {
        let n = 6;
        let d = CoxeterDatum::d(n);
        let l0 = IrrLabel::exterior_power(&d, 0).unwrap();
        assert_eq!(
            symbol_of_label(&l0, SymbolType::D).unwrap().to_string(),
            "6/0"
        );
        for j in 1..=n {
            let lj = IrrLabel::exterior_power(&d, j).unwrap();
            let mut top: Vec<usize> = (1..j).collect();
            top.push(j);
            let mut bottom: Vec<usize> = (0..j - 1).collect();
            bottom.push(n - 1);
            let expect = Symbol::new(top, bottom).unwrap().normalize();
            assert_eq!(
                symbol_of_label(&lj, SymbolType::D).unwrap(),
                expect,
                "j = {j}"
            );
        }
        let b = CoxeterDatum::b(3);
        let l0 = IrrLabel::exterior_power(&b, 0).unwrap();
        assert_eq!(
            symbol_of_label(&l0, SymbolType::B).unwrap().to_string(),
            "3/"
        );
    }

    #[test]
    fn mismatched_kind_is_rejected() {
        let l = IrrLabel::B(Bipartition::new(p(&[2]), p(&[1])));
        assert!(matches!(
            symbol_of_label(&l, SymbolType::D),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn d_label_counts() {
        // |Irr(D_n)| = (|Irr(B_n)| + 3 * #{split pairs}) / 2
        let counts: Vec<usize> = (2..=6).map(|n| DLabel::all(n).len()).collect();
        assert_eq!(counts, vec![4, 5, 13, 18, 37]);
    }

    #[test]
    fn split_sign_required_iff_equal() {
        let same = Bipartition::new(p(&[1]), p(&[1]));
        assert!(DLabel::new(same.clone(), None).is_err());
        assert!(DLabel::new(same, Some(SplitSign::Plus)).is_ok());
        let diff = Bipartition::new(p(&[1]), p(&[2]));
        assert!(DLabel::new(diff.clone(), Some(SplitSign::Plus)).is_err());
        // the unordered pair is canonicalised
        let swapped = DLabel::new(diff.swapped(), None).unwrap();
        assert_eq!(DLabel::new(diff, None).unwrap(), swapped);
    }

    #[test]
    fn parse_and_print() {
        for s in ["(3,1)", "1,4/0", "1,4/0,2", "1,2/1,2+", "512_11", "1'_3"] {
            let l: IrrLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert!("1,4/0+".parse::<IrrLabel>().is_err());
    }

    #[test]
    fn f_values() {
        let n = 4;
        for bp in Bipartition::all(n) {
            let f = f_value_of(&IrrLabel::B(bp)).unwrap();
            assert!(f.is_power_of_two());
        }
        let b_mid: IrrLabel = "1,4/0".parse().unwrap();
        assert_eq!(f_value_of(&b_mid).unwrap(), 2);
        let d_mid: IrrLabel = "1,4/0,2".parse().unwrap();
        assert_eq!(f_value_of(&d_mid).unwrap(), 2);
        assert_eq!(f_value_of(&IrrLabel::A(p(&[2, 2]))).unwrap(), 1);
    }

    #[test]
    fn a_and_b_of_trivial_and_sign() {
        for n in 2..=6 {
            let triv = IrrLabel::A(p(&[n]));
            assert_eq!(invariants(&triv).unwrap().a_value, 0);
            let sign = IrrLabel::A(p(&vec![1; n]));
            assert_eq!(b_value_of(&sign).unwrap(), n * (n - 1) / 2);
        }
    }
}
