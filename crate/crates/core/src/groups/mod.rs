//! Finite Coxeter groups of types A, B, D realised as signed permutation
//! groups, with Coxeter elements, lengths and the longest element.

mod signed_perm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use signed_perm::{SignedCycleType, SignedPermutation};

/// Largest rank for which brute-force enumeration of the group is allowed.
pub const ENUMERATION_RANK_LIMIT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoxeterType {
    A,
    B,
    D,
    I2(u32),
    H3,
    H4,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CoxeterType {
    pub fn is_classical(&self) -> bool {
        matches!(self, CoxeterType::A | CoxeterType::B | CoxeterType::D)
    }

    pub fn is_exceptional_weyl(&self) -> bool {
        matches!(
            self,
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 | CoxeterType::F4 | CoxeterType::G2
        )
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self,
            CoxeterType::A | CoxeterType::D | CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8
        )
    }

    pub fn fixed_rank(&self) -> Option<usize> {
        match self {
            CoxeterType::I2(_) | CoxeterType::G2 => Some(2),
            CoxeterType::H3 => Some(3),
            CoxeterType::H4 | CoxeterType::F4 => Some(4),
            CoxeterType::E6 => Some(6),
            CoxeterType::E7 => Some(7),
            CoxeterType::E8 => Some(8),
            _ => None,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::I2(m) => write!(f, "I2({m})"),
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => CoxeterType::A,
            "B" | "C" => CoxeterType::B,
            "D" => CoxeterType::D,
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "E6" => CoxeterType::E6,
            "E7" => CoxeterType::E7,
            "E8" => CoxeterType::E8,
            "F4" => CoxeterType::F4,
            "G2" => CoxeterType::G2,
            _ => {
                let m = s
                    .strip_prefix("I2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|m| m.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown Coxeter type `{s}`")))?;
                CoxeterType::I2(m)
            }
        })
    }
}

/// An irreducible finite Coxeter group: family, rank, Coxeter number and
/// number of positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterDatum {
    family: CoxeterType,
    rank: usize,
}

/// Sequence of generator indices (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Positive root as a sparse integer vector over `e_1..e_n`.
type Root = Vec<(usize, i32)>;

impl CoxeterDatum {
    pub fn new(family: CoxeterType, rank: usize) -> Result<Self> {
        let ok = match family {
            CoxeterType::A | CoxeterType::B => rank >= 1,
            CoxeterType::D => rank >= 4,
            CoxeterType::I2(m) => rank == 2 && m >= 3,
            other => Some(rank) == other.fixed_rank(),
        };
        if !ok {
            return Err(Error::InvalidInput(format!(
                "no Coxeter group of type {family} and rank {rank}"
            )));
        }
        Ok(CoxeterDatum { family, rank })
    }

    pub fn a(rank: usize) -> Self {
        CoxeterDatum::new(CoxeterType::A, rank).expect("valid A rank")
    }

    pub fn b(rank: usize) -> Self {
        CoxeterDatum::new(CoxeterType::B, rank).expect("valid B rank")
    }

    pub fn d(rank: usize) -> Self {
        CoxeterDatum::new(CoxeterType::D, rank).expect("valid D rank")
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        CoxeterDatum::new(CoxeterType::I2(m), 2)
    }

    pub fn family(&self) -> CoxeterType {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coxeter_number(&self) -> usize {
        let r = self.rank;
        match self.family {
            CoxeterType::A => r + 1,
            CoxeterType::B => 2 * r,
            CoxeterType::D => 2 * r - 2,
            CoxeterType::I2(m) => m as usize,
            CoxeterType::H3 => 10,
            CoxeterType::H4 => 30,
            CoxeterType::E6 => 12,
            CoxeterType::E7 => 18,
            CoxeterType::E8 => 30,
            CoxeterType::F4 => 12,
            CoxeterType::G2 => 6,
        }
    }

    /// Number of positive roots, `l(w0)`.
    pub fn nu(&self) -> usize {
        self.coxeter_number() * self.rank / 2
    }

    /// Number of points the signed permutations act on.
    pub fn degree(&self) -> Result<usize> {
        match self.family {
            CoxeterType::A => Ok(self.rank + 1),
            CoxeterType::B | CoxeterType::D => Ok(self.rank),
            other => Err(Error::Capability(format!(
                "type {other} has no signed permutation model"
            ))),
        }
    }

    /// Coxeter matrix entry `m(s_i, s_j)` (1-based indices).
    pub fn coxeter_matrix_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let n = self.rank;
        match self.family {
            CoxeterType::A => {
                if hi == lo + 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::B => {
                if hi == lo + 1 {
                    if hi == n {
                        4
                    } else {
                        3
                    }
                } else {
                    2
                }
            }
            CoxeterType::D => {
                if hi == n {
                    if lo == n - 2 {
                        3
                    } else {
                        2
                    }
                } else if hi == lo + 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::I2(m) => m,
            _ => panic!("Coxeter matrix only tabulated for A, B, D and I2"),
        }
    }

    pub fn generators(&self) -> Result<Vec<SignedPermutation>> {
        let deg = self.degree()?;
        let swap = |i: usize| {
            let mut img: Vec<i32> = (1..=deg as i32).collect();
            img.swap(i - 1, i);
            SignedPermutation::from_images(img).unwrap()
        };
        let mut gens: Vec<SignedPermutation> = (1..deg).map(swap).collect();
        match self.family {
            CoxeterType::A => {}
            CoxeterType::B => {
                let mut img: Vec<i32> = (1..=deg as i32).collect();
                img[deg - 1] = -(deg as i32);
                gens.push(SignedPermutation::from_images(img).unwrap());
            }
            CoxeterType::D => {
                let mut img: Vec<i32> = (1..=deg as i32).collect();
                img[deg - 1] = -(deg as i32);
                let s_n = SignedPermutation::from_images(img).unwrap();
                let s_last = &gens[deg - 2];
                gens.push(s_n.compose(s_last).compose(&s_n));
            }
            _ => unreachable!(),
        }
        Ok(gens)
    }

    /// Checks `(s_i s_j)^m(i,j) = 1` with `m(i,j)` the exact order, for all
    /// pairs of emitted generators.
    pub fn verify_generators(&self) -> Result<()> {
        let gens = self.generators()?;
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                let m = self.coxeter_matrix_entry(i + 1, j + 1) as usize;
                let prod = gens[i].compose(&gens[j]);
                if prod.order() != m {
                    return Err(Error::Consistency(format!(
                        "{self}: order of s{} s{} is {}, expected {m}",
                        i + 1,
                        j + 1,
                        prod.order()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn word_element(&self, word: &[usize]) -> Result<SignedPermutation> {
        let gens = self.generators()?;
        let mut acc = SignedPermutation::identity(self.degree()?);
        for &i in word {
            let g = gens
                .get(i.wrapping_sub(1))
                .ok_or_else(|| Error::InvalidOrder(format!("generator index {i} out of range")))?;
            acc = acc.compose(g);
        }
        Ok(acc)
    }

    /// Product of all simple reflections in the given order (1-based
    /// indices, each exactly once).
    pub fn coxeter_element(&self, order: &[usize]) -> Result<SignedPermutation> {
        let mut seen = vec![false; self.rank];
        for &i in order {
            if i == 0 || i > self.rank || seen[i - 1] {
                return Err(Error::InvalidOrder(format!(
                    "{order:?} is not a permutation of 1..={}",
                    self.rank
                )));
            }
            seen[i - 1] = true;
        }
        if order.len() != self.rank {
            return Err(Error::InvalidOrder(format!(
                "{order:?} is not a permutation of 1..={}",
                self.rank
            )));
        }
        self.word_element(order)
    }

    pub fn natural_order(&self) -> Vec<usize> {
        (1..=self.rank).collect()
    }

    fn simple_roots(&self) -> Result<Vec<Root>> {
        let deg = self.degree()?;
        let mut roots: Vec<Root> = (0..deg - 1).map(|i| vec![(i, 1), (i + 1, -1)]).collect();
        match self.family {
            CoxeterType::A => {}
            CoxeterType::B => roots.push(vec![(deg - 1, 1)]),
            CoxeterType::D => roots.push(vec![(deg - 2, 1), (deg - 1, 1)]),
            _ => unreachable!(),
        }
        Ok(roots)
    }

    /// Positive roots: those whose first nonzero coordinate is positive.
    fn positive_roots(&self) -> Result<Vec<Root>> {
        let deg = self.degree()?;
        let mut roots = Vec::new();
        for i in 0..deg {
            for j in i + 1..deg {
                roots.push(vec![(i, 1), (j, -1)]);
                if self.family != CoxeterType::A {
                    roots.push(vec![(i, 1), (j, 1)]);
                }
            }
            if self.family == CoxeterType::B {
                roots.push(vec![(i, 1)]);
            }
        }
        Ok(roots)
    }

    /// Coxeter length: number of positive roots sent to negative roots.
    pub fn length(&self, g: &SignedPermutation) -> Result<usize> {
        Ok(self
            .positive_roots()?
            .iter()
            .filter(|r| root_is_negative(&act_on_root(g, r)))
            .count())
    }

    /// Reduced word obtained by stripping right descents.
    pub fn reduced_word(&self, g: &SignedPermutation) -> Result<ReducedWord> {
        let gens = self.generators()?;
        let simple = self.simple_roots()?;
        let mut cur = g.clone();
        let mut rev = Vec::new();
        while !cur.is_identity() {
            let i = simple
                .iter()
                .position(|a| root_is_negative(&act_on_root(&cur, a)))
                .ok_or_else(|| Error::Consistency("non-identity element without descent".into()))?;
            cur = cur.compose(&gens[i]);
            rev.push(i + 1);
        }
        rev.reverse();
        Ok(ReducedWord(rev))
    }

    pub fn longest_element(&self) -> Result<SignedPermutation> {
        let deg = self.degree()? as i32;
        let images: Vec<i32> = match self.family {
            CoxeterType::A => (1..=deg).rev().collect(),
            CoxeterType::B => (1..=deg).map(|i| -i).collect(),
            CoxeterType::D => (1..=deg)
                .map(|i| if deg % 2 == 1 && i == deg { i } else { -i })
                .collect(),
            _ => unreachable!(),
        };
        Ok(SignedPermutation::from_images(images).unwrap())
    }

    /// Every element of the group, by direct enumeration of the signed
    /// permutation model. Limited to rank [`ENUMERATION_RANK_LIMIT`].
    pub fn elements(&self) -> Result<Vec<SignedPermutation>> {
        if self.rank > ENUMERATION_RANK_LIMIT {
            return Err(Error::Capability(format!(
                "enumeration of {self} exceeds rank {ENUMERATION_RANK_LIMIT}"
            )));
        }
        let deg = self.degree()?;
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (1..=deg).collect();
        let signed = self.family != CoxeterType::A;
        permutations(&mut perm, 0, &mut |p| {
            if !signed {
                out.push(SignedPermutation::from_permutation(p).unwrap());
                return;
            }
            for mask in 0u32..(1 << deg) {
                if self.family == CoxeterType::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let images = p
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        if mask >> i & 1 == 1 {
                            -(x as i32)
                        } else {
                            x as i32
                        }
                    })
                    .collect();
                out.push(SignedPermutation::from_images(images).unwrap());
            }
        });
        Ok(out)
    }

    pub fn order(&self) -> Result<usize> {
        let deg = self.degree()?;
        let fact: usize = (1..=deg).product();
        Ok(match self.family {
            CoxeterType::A => fact,
            CoxeterType::B => fact << deg,
            CoxeterType::D => fact << (deg - 1),
            _ => unreachable!(),
        })
    }

    /// Size of the centralizer of `g`, by enumeration.
    pub fn centralizer_order(&self, g: &SignedPermutation) -> Result<usize> {
        let elems = self.elements()?;
        Ok(elems
            .iter()
            .filter(|x| x.compose(g) == g.compose(x))
            .count())
    }

    /// Some `x` with `x g x^-1 = target`, by enumeration.
    pub fn find_conjugator(
        &self,
        g: &SignedPermutation,
        target: &SignedPermutation,
    ) -> Result<Option<SignedPermutation>> {
        Ok(self
            .elements()?
            .into_iter()
            .find(|x| x.compose(g) == target.compose(x)))
    }

    /// Bipartite Coxeter word `a b`, with `a` and `b` products of mutually
    /// commuting generators, and the checks that make it balanced.
    pub fn balanced_coxeter_word(&self) -> Result<BalancedWord> {
        let n = self.rank;
        // parity classes of the Dynkin diagram; in type D the two branch
        // nodes n-1 and n share a class
        let class = |i: usize| -> usize {
            if self.family == CoxeterType::D && i == n {
                (n - 1) % 2
            } else {
                i % 2
            }
        };
        let a: Vec<usize> = (1..=n).filter(|&i| class(i) == 1).collect();
        let b: Vec<usize> = (1..=n).filter(|&i| class(i) == 0).collect();
        for block in [&a, &b] {
            for &i in block {
                for &j in block {
                    if i != j && self.coxeter_matrix_entry(i, j) != 2 {
                        return Err(Error::Consistency(format!(
                            "{self}: s{i} and s{j} do not commute"
                        )));
                    }
                }
            }
        }
        let word: Vec<usize> = a.iter().chain(&b).copied().collect();
        let w = self.coxeter_element(&word)?;
        let h = self.coxeter_number();
        let w0 = self.longest_element()?;
        let nu = self.nu();
        let lw = self.length(&w)?;
        if h % 2 == 0 {
            if w.pow(h / 2) != w0 || lw * h / 2 != nu || self.length(&w0)? != nu {
                return Err(Error::Consistency(format!(
                    "{self}: w^(h/2) != w0 for the bipartite Coxeter word"
                )));
            }
        } else {
            let ea = self.word_element(&a)?;
            let eb = self.word_element(&b)?;
            let alt = |first: &SignedPermutation, second: &SignedPermutation| {
                (0..=n).fold(
                    SignedPermutation::identity(self.degree().unwrap()),
                    |acc, k| acc.compose(if k % 2 == 0 { first } else { second }),
                )
            };
            let ok = self.length(&ea)? == n / 2
                && self.length(&eb)? == n / 2
                && alt(&ea, &eb) == w0
                && alt(&eb, &ea) == w0
                && self.length(&w0)? == (n + 1) * n / 2;
            if !ok {
                return Err(Error::Consistency(format!(
                    "{self}: bipartite factorisation of w0 fails"
                )));
            }
        }
        Ok(BalancedWord {
            word: ReducedWord(word),
            a,
            b,
            h,
        })
    }
}

/// Bipartite Coxeter word and its two commuting blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedWord {
    pub word: ReducedWord,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub h: usize,
}

fn act_on_root(g: &SignedPermutation, root: &Root) -> Root {
    root.iter()
        .map(|&(i, c)| {
            let img = g.images()[i];
            let j = img.unsigned_abs() as usize - 1;
            (j, if img > 0 { c } else { -c })
        })
        .collect()
}

fn root_is_negative(root: &Root) -> bool {
    root.iter()
        .filter(|(_, c)| *c != 0)
        .min_by_key(|(i, _)| *i)
        .is_some_and(|(_, c)| *c < 0)
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

impl fmt::Display for CoxeterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            CoxeterType::A | CoxeterType::B | CoxeterType::D => {
                write!(f, "{:?}{}", self.family, self.rank)
            }
            other => write!(f, "{other}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_invariants() {
        for r in 1..=10 {
            for d in [CoxeterDatum::a(r), CoxeterDatum::b(r)] {
                assert_eq!(d.coxeter_number() * d.rank(), 2 * d.nu());
            }
        }
        assert_eq!(CoxeterDatum::a(4).nu(), 10);
        assert_eq!(CoxeterDatum::b(4).nu(), 16);
        assert_eq!(CoxeterDatum::d(5).nu(), 20);
        assert_eq!(CoxeterDatum::d(5).coxeter_number(), 8);
        assert_eq!(CoxeterDatum::dihedral(7).unwrap().nu(), 7);
        assert!(CoxeterDatum::new(CoxeterType::D, 3).is_err());
        assert!(CoxeterDatum::new(CoxeterType::E7, 6).is_err());
        assert!(CoxeterDatum::dihedral(2).is_err());
    }

    #[test]
    fn b2_generators() {
        let g = CoxeterDatum::b(2).generators().unwrap();
        assert_eq!(g[0].images(), &[2, 1]);
        assert_eq!(g[1].images(), &[1, -2]);
    }

    #[test]
    fn d4_last_generator_is_conjugated_swap() {
        let g = CoxeterDatum::d(4).generators().unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g[3].images(), &[1, 2, -4, -3]);
    }

    #[test]
    fn relations_hold() {
        for r in 1..=7 {
            CoxeterDatum::a(r).verify_generators().unwrap();
            CoxeterDatum::b(r).verify_generators().unwrap();
        }
        for r in 4..=8 {
            CoxeterDatum::d(r).verify_generators().unwrap();
        }
    }

    #[test]
    fn a2_braid_relation() {
        let d = CoxeterDatum::a(2);
        let g = d.generators().unwrap();
        assert!(g[0].compose(&g[1]).pow(3).is_identity());
    }

    #[test]
    fn coxeter_element_shapes() {
        let b = CoxeterDatum::b(5);
        let w = b.coxeter_element(&b.natural_order()).unwrap();
        assert_eq!(w.cycle_type(), SignedCycleType::new(vec![], vec![5]));
        let d = CoxeterDatum::d(5);
        let w = d.coxeter_element(&d.natural_order()).unwrap();
        assert_eq!(w.cycle_type(), SignedCycleType::new(vec![], vec![4, 1]));
        assert_eq!(w.order(), 8);
        let a = CoxeterDatum::a(4);
        let w = a.coxeter_element(&[3, 1, 4, 2]).unwrap();
        assert_eq!(w.cycle_type(), SignedCycleType::new(vec![5], vec![]));
    }

    #[test]
    fn bad_orders_are_rejected() {
        let b = CoxeterDatum::b(3);
        assert!(matches!(
            b.coxeter_element(&[1, 1, 2]),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            b.coxeter_element(&[1, 2]),
            Err(Error::InvalidOrder(_))
        ));
        assert!(matches!(
            b.coxeter_element(&[1, 2, 4]),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn longest_elements() {
        let b = CoxeterDatum::b(4);
        let w0 = b.longest_element().unwrap();
        assert_eq!(w0.images(), &[-1, -2, -3, -4]);
        assert_eq!(b.length(&w0).unwrap(), 16);
        let a = CoxeterDatum::a(2);
        assert_eq!(a.length(&a.longest_element().unwrap()).unwrap(), 3);
        for n in 4..=7 {
            let d = CoxeterDatum::d(n);
            assert_eq!(d.length(&d.longest_element().unwrap()).unwrap(), d.nu());
        }
    }

    #[test]
    fn lengths_agree_with_reduced_words() {
        for d in [CoxeterDatum::a(3), CoxeterDatum::b(3), CoxeterDatum::d(4)] {
            for g in d.elements().unwrap() {
                let word = d.reduced_word(&g).unwrap();
                assert_eq!(word.len(), d.length(&g).unwrap());
                assert_eq!(d.word_element(word.letters()).unwrap(), g);
            }
        }
    }

    #[test]
    fn d4_longest_length_by_breadth_first_search() {
        // oracle: BFS in the Cayley graph; the deepest layer is {w0}
        let d = CoxeterDatum::d(4);
        let gens = d.generators().unwrap();
        let mut dist = std::collections::HashMap::new();
        let id = SignedPermutation::identity(4);
        dist.insert(id.clone(), 0usize);
        let mut frontier = vec![id];
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &gens {
                    let h = g.compose(s);
                    if !dist.contains_key(&h) {
                        dist.insert(h.clone(), depth + 1);
                        next.push(h);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            depth += 1;
            frontier = next;
        }
        assert_eq!(dist.len(), d.order().unwrap());
        assert_eq!(depth, 12);
        assert_eq!(frontier, vec![d.longest_element().unwrap()]);
    }

    #[test]
    fn centralizers() {
        let b = CoxeterDatum::b(3);
        let w = b.coxeter_element(&b.natural_order()).unwrap();
        assert_eq!(b.centralizer_order(&w).unwrap(), 6);
        let a = CoxeterDatum::a(2);
        assert_eq!(
            a.centralizer_order(&SignedPermutation::identity(3))
                .unwrap(),
            6
        );
        let d = CoxeterDatum::d(4);
        let w = d.coxeter_element(&d.natural_order()).unwrap();
        assert_eq!(d.centralizer_order(&w).unwrap(), 6);
        assert!(matches!(
            CoxeterDatum::b(7).centralizer_order(&SignedPermutation::identity(7)),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn element_counts() {
        for d in [CoxeterDatum::a(3), CoxeterDatum::b(3), CoxeterDatum::d(5)] {
            assert_eq!(d.elements().unwrap().len(), d.order().unwrap());
        }
    }

    #[test]
    fn balanced_words() {
        let bw = CoxeterDatum::b(3).balanced_coxeter_word().unwrap();
        assert_eq!(bw.h, 6);
        let a2 = CoxeterDatum::a(2).balanced_coxeter_word().unwrap();
        assert_eq!((a2.a.clone(), a2.b.clone()), (vec![1], vec![2]));
        let a3 = CoxeterDatum::a(3);
        let bw = a3.balanced_coxeter_word().unwrap();
        let w = a3.coxeter_element(bw.word.letters()).unwrap();
        assert_eq!(w.pow(2), a3.longest_element().unwrap());
        for r in 1..=8 {
            CoxeterDatum::a(r).balanced_coxeter_word().unwrap();
            CoxeterDatum::b(r).balanced_coxeter_word().unwrap();
        }
        for r in 4..=8 {
            CoxeterDatum::d(r).balanced_coxeter_word().unwrap();
        }
    }
}
