use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// Permutation of `{1..n, 1'..n'}` commuting with `i <-> i'`, stored as the
/// images of `1..n`: `images[i-1] = j` means `i -> j` and `i' -> j'`,
/// `images[i-1] = -j` means `i -> j'` and `i' -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

/// Cycle type of a signed permutation: lengths of positive and negative
/// cycles of the underlying permutation of `1..n`, each sorted decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedCycleType {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

impl SignedCycleType {
    pub fn new(mut positive: Vec<usize>, mut negative: Vec<usize>) -> Self {
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        SignedCycleType { positive, negative }
    }

    pub fn weight(&self) -> usize {
        self.positive.iter().chain(&self.negative).sum()
    }

    /// All cycles positive and of even length: the classes of `W_n` that
    /// split in the index-two subgroup of type D.
    pub fn is_very_even(&self) -> bool {
        self.negative.is_empty() && self.positive.iter().all(|l| l % 2 == 0)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "[{}|{}]", list(&self.positive), list(&self.negative))
    }
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    /// Returns `None` unless the absolute values form a permutation of
    /// `1..n`.
    pub fn from_images(images: Vec<i32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return None;
            }
            seen[a - 1] = true;
        }
        Some(SignedPermutation { images })
    }

    /// Unsigned permutation from images of `1..n`.
    pub fn from_permutation(perm: &[usize]) -> Option<Self> {
        SignedPermutation::from_images(perm.iter().map(|&x| x as i32).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Image of a signed point (`-i` encodes `i'`).
    pub fn apply(&self, x: i32) -> i32 {
        let img = self.images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            img
        } else {
            -img
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            let a = x.unsigned_abs() as usize - 1;
            images[a] = if x > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        SignedPermutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(SignedPermutation::identity(self.degree()), |acc, _| {
            acc.compose(self)
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.negative_count() == 0
    }

    /// Least `k >= 1` with `self^k = 1`, by repeated multiplication.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// The permutation of the `2n` points `1..n, 1'..n'`, indexed
    /// `0..n` for unprimed and `n..2n` for primed points.
    pub fn full_permutation(&self) -> Vec<usize> {
        let n = self.degree();
        let idx = |x: i32| -> usize {
            if x > 0 {
                x as usize - 1
            } else {
                n + (-x) as usize - 1
            }
        };
        (0..2 * n)
            .map(|p| {
                let x = if p < n {
                    p as i32 + 1
                } else {
                    -((p - n) as i32 + 1)
                };
                idx(self.apply(x))
            })
            .collect()
    }

    pub fn cycle_type(&self) -> SignedCycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut sign = 1;
            let mut x = start as i32;
            loop {
                seen[x.unsigned_abs() as usize - 1] = true;
                let y = self.images[x.unsigned_abs() as usize - 1];
                if y < 0 {
                    sign = -sign;
                }
                len += 1;
                x = y.abs();
                if x as usize == start {
                    break;
                }
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        SignedCycleType::new(pos, neg)
    }

    /// Cycles on the `2n` points, as lists of signed points starting from
    /// their smallest unprimed member.
    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let n = self.degree() as i32;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let points = (1..=n).chain((1..=n).map(|x| -x));
        for start in points {
            if seen.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl Mul for &SignedPermutation {
    type Output = SignedPermutation;
    fn mul(self, rhs: &SignedPermutation) -> SignedPermutation {
        self.compose(rhs)
    }
}

impl fmt::Display for SignedPermutation {
    /// Cycle notation with primes, e.g. `(1 2 3 4 1′ 2′ 3′ 4′)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c
                .iter()
                .map(|&x| {
                    if x > 0 {
                        x.to_string()
                    } else {
                        format!("{}′", -x)
                    }
                })
                .collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn negative_four_cycle_prints_as_eight_cycle() {
        let g = sp(&[2, 3, 4, -1]);
        assert_eq!(g.to_string(), "(1 2 3 4 1′ 2′ 3′ 4′)");
        assert_eq!(g.cycle_type(), SignedCycleType::new(vec![], vec![4]));
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn commutes_with_priming() {
        let g = sp(&[-3, 1, 2, -4]);
        let full = g.full_permutation();
        let n = 4;
        let prime = |p: usize| if p < n { p + n } else { p - n };
        for p in 0..2 * n {
            assert_eq!(full[prime(p)], prime(full[p]));
        }
    }

    #[test]
    fn inverse_and_composition() {
        let g = sp(&[-3, 1, 2, -4]);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        let h = sp(&[2, 1, -3, 4]);
        // (g∘h)(1) = g(h(1)) = g(2) = 1
        assert_eq!(g.compose(&h).apply(1), 1);
        assert_eq!(g.pow(g.order()), SignedPermutation::identity(4));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(SignedPermutation::from_images(vec![1, -1]).is_none());
        assert!(SignedPermutation::from_images(vec![0, 1]).is_none());
        assert!(SignedPermutation::from_images(vec![3, 1]).is_none());
    }

    #[test]
    fn identity_has_order_one() {
        assert_eq!(SignedPermutation::identity(5).order(), 1);
        assert_eq!(SignedPermutation::identity(3).to_string(), "()");
    }
}
