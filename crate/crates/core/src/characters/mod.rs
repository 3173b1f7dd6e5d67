//! Character values of the symmetric, hyperoctahedral and type D groups,
//! Coxeter traces, and the grouping of nonzero traces by two-sided cell.

mod cells;

use crate::combinatorics::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::groups::{CoxeterDatum, CoxeterType, SignedCycleType, SignedPermutation};
use crate::label::{DLabel, IrrLabel};

pub use cells::{
    cell_decomposition, expected_gamma_sequence, expected_membership, expected_n_c, expected_p,
    special_membership, trace_report, Cell, CellDecomposition, CellIndex, Coefficient, EpsilonTerm,
    Membership, TraceEntry, TraceReport,
};

/// Largest rank the character engines accept.
pub const ENGINE_RANK_LIMIT: usize = 12;

/// Beads of `lambda` on an abacus with `len` runners' worth of positions,
/// in decreasing order.
fn beads(lambda: &Partition, len: usize) -> Vec<usize> {
    lambda.beta_set(len)
}

/// All ways to remove a rim hook of length `k`: the resulting partition and
/// the sign `(-1)^height`.
fn rim_hook_removals(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let set = beads(lambda, len);
    let mut out = Vec::new();
    for (idx, &x) in set.iter().enumerate() {
        if x < k || set.contains(&(x - k)) {
            continue;
        }
        let target = x - k;
        let height = set.iter().filter(|&&y| y > target && y < x).count();
        let mut moved = set.clone();
        moved[idx] = target;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_beta_set(&moved), sign));
    }
    out
}

/// Character of the irreducible `S_n`-module `lambda` at the class with
/// cycle lengths `mu`, by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &[usize]) -> Result<i64> {
    let total: usize = mu.iter().sum();
    if total != lambda.size() || mu.contains(&0) {
        return Err(Error::InvalidInput(format!(
            "cycle type {mu:?} does not match partition {lambda} of {}",
            lambda.size()
        )));
    }
    let mut cycles = mu.to_vec();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(mn_rec(lambda, &cycles))
}

fn mn_rec(lambda: &Partition, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    rim_hook_removals(lambda, k)
        .into_iter()
        .map(|(smaller, sign)| sign * mn_rec(&smaller, rest))
        .sum()
}

/// Trace of an `(n-1)`-cycle on the irreducible `S_n`-module `lambda`.
pub fn n_minus_one_cycle_trace(n: usize, lambda: &Partition) -> Result<i64> {
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "(n-1)-cycle trace needs n >= 3, got {n}"
        )));
    }
    mn_character(lambda, &[n - 1, 1])
}

/// Character of the irreducible hyperoctahedral module `(alpha, beta)` at a
/// signed cycle type: removing a cycle of length `k` strips a `k`-rim hook
/// from either component, with an extra sign for the `beta` side when the
/// cycle is negative.
pub fn hyperoctahedral_character(bp: &Bipartition, class: &SignedCycleType) -> Result<i64> {
    if bp.size() != class.weight() {
        return Err(Error::InvalidInput(format!(
            "class {class} has weight {}, label {bp} has size {}",
            class.weight(),
            bp.size()
        )));
    }
    let mut cycles: Vec<(usize, bool)> = class
        .positive
        .iter()
        .map(|&k| (k, false))
        .chain(class.negative.iter().map(|&k| (k, true)))
        .collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Ok(hyper_rec(bp.alpha(), bp.beta(), &cycles))
}

fn hyper_rec(alpha: &Partition, beta: &Partition, cycles: &[(usize, bool)]) -> i64 {
    let Some((&(k, negative), rest)) = cycles.split_first() else {
        return 1;
    };
    let from_alpha: i64 = rim_hook_removals(alpha, k)
        .into_iter()
        .map(|(a, s)| s * hyper_rec(&a, beta, rest))
        .sum();
    let from_beta: i64 = rim_hook_removals(beta, k)
        .into_iter()
        .map(|(b, s)| s * hyper_rec(alpha, &b, rest))
        .sum();
    from_alpha + if negative { -from_beta } else { from_beta }
}

/// Character of a type D irreducible at a class of the index-two subgroup,
/// given by its signed cycle type. Non-split labels restrict the
/// hyperoctahedral character; a split half takes half of it, which is only
/// determined away from the classes with all cycles positive and even.
pub fn d_character(label: &DLabel, class: &SignedCycleType) -> Result<i64> {
    if class.negative.len() % 2 == 1 {
        return Err(Error::InvalidInput(format!(
            "class {class} lies outside the type D subgroup"
        )));
    }
    let restricted = hyperoctahedral_character(label.pair(), class)?;
    if label.split().is_none() {
        return Ok(restricted);
    }
    if class.is_very_even() {
        return Err(Error::Capability(format!(
            "split character {label} at the split class {class}"
        )));
    }
    if restricted % 2 != 0 {
        return Err(Error::Consistency(format!(
            "odd restricted value {restricted} for split label {label}"
        )));
    }
    Ok(restricted / 2)
}

/// Class of the Coxeter element used throughout: an `n`-cycle for
/// `A_{n-1}`, a negative `n`-cycle for `B_n`, a negative `(n-1)`-cycle
/// times a negative 1-cycle for `D_n`.
pub fn coxeter_class(datum: &CoxeterDatum) -> Result<SignedCycleType> {
    let r = datum.rank();
    match datum.family() {
        CoxeterType::A => Ok(SignedCycleType::new(vec![r + 1], vec![])),
        CoxeterType::B => Ok(SignedCycleType::new(vec![], vec![r])),
        CoxeterType::D => Ok(SignedCycleType::new(vec![], vec![r - 1, 1])),
        other => Err(Error::Capability(format!(
            "no signed cycle type for type {other}"
        ))),
    }
}

/// Character value of a classical label at a signed class.
pub fn character_at(
    datum: &CoxeterDatum,
    label: &IrrLabel,
    class: &SignedCycleType,
) -> Result<i64> {
    if datum.rank() > ENGINE_RANK_LIMIT {
        return Err(Error::Capability(format!(
            "rank {} exceeds the engine limit {ENGINE_RANK_LIMIT}",
            datum.rank()
        )));
    }
    match (datum.family(), label) {
        (CoxeterType::A, IrrLabel::A(p)) => {
            if !class.negative.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "{class} is not a permutation class"
                )));
            }
            mn_character(p, &class.positive)
        }
        (CoxeterType::B, IrrLabel::B(bp)) => hyperoctahedral_character(bp, class),
        (CoxeterType::D, IrrLabel::D(d)) => d_character(d, class),
        _ => Err(Error::InvalidLabel(format!(
            "{label} is not a label of {datum}"
        ))),
    }
}

/// Character value at a group element.
pub fn character_of_element(
    datum: &CoxeterDatum,
    label: &IrrLabel,
    g: &SignedPermutation,
) -> Result<i64> {
    character_at(datum, label, &g.cycle_type())
}

/// Trace of the Coxeter element (natural generator order) on `label`.
pub fn coxeter_trace(datum: &CoxeterDatum, label: &IrrLabel) -> Result<i64> {
    character_at(datum, label, &coxeter_class(datum)?)
}

/// Trace of the `D_n` Coxeter element on `label`.
pub fn d_type_coxeter_trace(n: usize, label: &IrrLabel) -> Result<i64> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "type D needs rank >= 4, got {n}"
        )));
    }
    coxeter_trace(&CoxeterDatum::d(n), label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::standard_tableaux;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hooks_at_the_long_cycle() {
        for n in 1..=9 {
            for i in 0..n {
                let expect = if i % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::hook(n, i), &[n]).unwrap(), expect);
            }
        }
        assert_eq!(mn_character(&p(&[2, 2]), &[4]).unwrap(), 0);
        assert!(mn_character(&p(&[2, 2]), &[3]).is_err());
    }

    #[test]
    fn identity_values_count_tableaux() {
        for n in 1..=6 {
            for lam in Partition::all(n) {
                let dim = mn_character(&lam, &vec![1; n]).unwrap();
                assert_eq!(dim as usize, standard_tableaux(&lam).len());
            }
        }
        assert_eq!(mn_character(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 2);
    }

    #[test]
    fn trivial_character_is_one() {
        for mu in Partition::all(6) {
            assert_eq!(mn_character(&p(&[6]), mu.parts()).unwrap(), 1);
        }
    }

    #[test]
    fn shorter_cycle_ladder() {
        // 'Λ^i = (n-i-1, 2, 1^(i-1)) for 1 <= i <= n-3, 'Λ^0 = (n), 'Λ^(n-2) = (1^n)
        for n in 3..=8 {
            let mut ladder = vec![p(&[n])];
            for i in 1..=n - 3 {
                let mut parts = vec![n - i - 1, 2];
                parts.extend(vec![1; i - 1]);
                ladder.push(Partition::from_unsorted(parts));
            }
            ladder.push(p(&vec![1; n]));
            for lam in Partition::all(n) {
                let t = n_minus_one_cycle_trace(n, &lam).unwrap();
                match ladder.iter().position(|l| *l == lam) {
                    Some(i) => assert_eq!(t, if i % 2 == 0 { 1 } else { -1 }, "{lam}"),
                    None => assert_eq!(t, 0, "{lam}"),
                }
            }
        }
        assert!(n_minus_one_cycle_trace(2, &p(&[2])).is_err());
    }

    #[test]
    fn hyperoctahedral_ladders() {
        let n = 5;
        let class = SignedCycleType::new(vec![], vec![n]);
        for i in 0..n {
            let plain = Bipartition::new(Partition::hook(n, i), Partition::empty());
            let twisted = Bipartition::new(Partition::empty(), Partition::hook(n, i));
            let s = if i % 2 == 0 { 1 } else { -1 };
            assert_eq!(hyperoctahedral_character(&plain, &class).unwrap(), s);
            assert_eq!(hyperoctahedral_character(&twisted, &class).unwrap(), -s);
        }
        let triv = Bipartition::new(p(&[4]), Partition::empty());
        for c in [
            SignedCycleType::new(vec![2, 1], vec![1]),
            SignedCycleType::new(vec![], vec![2, 2]),
        ] {
            assert_eq!(hyperoctahedral_character(&triv, &c).unwrap(), 1);
        }
    }

    #[test]
    fn d_split_labels_vanish_at_coxeter_class() {
        for n in [4, 6, 8] {
            for d in DLabel::all(n).into_iter().filter(|d| d.split().is_some()) {
                assert_eq!(d_type_coxeter_trace(n, &IrrLabel::D(d)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn very_even_split_values_are_refused() {
        let d = DLabel::all(4)
            .into_iter()
            .find(|d| d.split().is_some())
            .unwrap();
        let class = SignedCycleType::new(vec![2, 2], vec![]);
        assert!(matches!(d_character(&d, &class), Err(Error::Capability(_))));
    }
}
