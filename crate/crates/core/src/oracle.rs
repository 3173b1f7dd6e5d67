//! Brute-force cross-checks that share no code path with the character
//! engines: wedge powers of explicit reflection matrices, orthogonality
//! over enumerated conjugacy classes, centralizers, symmetric powers.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::characters::{character_of_element, coxeter_trace};
use crate::combinatorics::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactnum::{int, Rational};
use crate::groups::{CoxeterDatum, CoxeterType, SignedCycleType, SignedPermutation};
use crate::label::{b_value_of, classical_labels, DLabel, IrrLabel};

/// Largest rank for the wedge-power oracle.
pub const WEDGE_RANK_LIMIT: usize = 5;

type IntMatrix = Vec<Vec<i64>>;

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Cartan matrix entry `<α_i^∨, α_j>` for the crystallographic types;
/// the double bond of `B_n` sits between nodes `n-1` and `n`.
fn cartan(datum: &CoxeterDatum, i: usize, j: usize) -> i64 {
    if i == j {
        return 2;
    }
    match datum.coxeter_matrix_entry(i, j) {
        2 => 0,
        3 => -1,
        4 if i == datum.rank() => -1,
        4 => -2,
        m => panic!("no Cartan entry for bond {m}"),
    }
}

/// Matrices of the simple reflections on the root lattice:
/// `s_i(α_j) = α_j - <α_i^∨, α_j> α_i`.
pub fn reflection_matrices(datum: &CoxeterDatum) -> Result<Vec<IntMatrix>> {
    if !datum.family().is_classical() {
        return Err(Error::Capability(format!(
            "no root basis model for {datum}"
        )));
    }
    let r = datum.rank();
    Ok((1..=r)
        .map(|i| {
            let mut m = identity(r);
            for j in 1..=r {
                m[i - 1][j - 1] -= cartan(datum, i, j);
            }
            m
        })
        .collect())
}

fn determinant(m: &[Vec<i64>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= pivot.clone();
        for r in c + 1..n {
            let factor = &a[r][c] / &pivot;
            if factor.is_zero() {
                continue;
            }
            for k in c..n {
                let sub = &factor * &a[c][k];
                a[r][k] -= sub;
            }
        }
    }
    det
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The matrix of `Λ^k g` in the basis of `k`-subsets: entries are `k × k`
/// minors.
pub fn wedge_matrix(g: &IntMatrix, k: usize) -> Vec<Vec<Rational>> {
    let idx = subsets(g.len(), k);
    idx.iter()
        .map(|rows| {
            idx.iter()
                .map(|cols| {
                    let minor: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|&c| g[r][c]).collect())
                        .collect();
                    determinant(&minor)
                })
                .collect()
        })
        .collect()
}

/// Compares `tr(w, Λ^i)` from the wedge matrices of `s_1 ⋯ s_r` with the
/// character engine, for every `i`.
pub fn wedge_power_check(datum: &CoxeterDatum) -> Result<Vec<(usize, i64)>> {
    if datum.rank() > WEDGE_RANK_LIMIT {
        return Err(Error::Capability(format!(
            "wedge-power oracle is limited to rank {WEDGE_RANK_LIMIT}"
        )));
    }
    let refl = reflection_matrices(datum)?;
    let w = refl
        .iter()
        .fold(identity(datum.rank()), |acc, s| mat_mul(&acc, s));
    let mut out = Vec::new();
    for i in 0..=datum.rank() {
        let wm = wedge_matrix(&w, i);
        let tr: Rational = (0..wm.len()).fold(Rational::zero(), |a, k| a + wm[k][k].clone());
        let tr = crate::exactnum::rational_to_i64(&tr).expect("integral matrix");
        let engine = coxeter_trace(datum, &IrrLabel::exterior_power(datum, i)?)?;
        if tr != engine {
            return Err(Error::Verification(format!(
                "{datum}: Λ^{i} has wedge trace {tr}, engine trace {engine}"
            )));
        }
        out.push((i, tr));
    }
    Ok(out)
}

/// Conjugacy classes of a finite group given by its elements, by orbit
/// computation.
pub fn conjugacy_classes(elements: &[SignedPermutation]) -> Vec<Vec<SignedPermutation>> {
    let mut seen: HashMap<SignedPermutation, ()> = HashMap::new();
    let mut classes = Vec::new();
    for g in elements {
        if seen.contains_key(g) {
            continue;
        }
        let mut class: Vec<SignedPermutation> = Vec::new();
        for x in elements {
            let c = x.compose(g).compose(&x.inverse());
            if seen.insert(c.clone(), ()).is_none() {
                class.push(c);
            }
        }
        classes.push(class);
    }
    classes
}

/// Elements of `S_n`, `W_n` or `W'_n` for small `n`, any `n >= 1`.
fn small_group(family: CoxeterType, n: usize) -> Result<Vec<SignedPermutation>> {
    let all_b = |n: usize| CoxeterDatum::b(n).elements();
    Ok(match family {
        CoxeterType::A => CoxeterDatum::b(n)
            .elements()?
            .into_iter()
            .filter(|g| g.is_unsigned())
            .collect(),
        CoxeterType::B => all_b(n)?,
        CoxeterType::D => all_b(n)?
            .into_iter()
            .filter(|g| g.negative_count() % 2 == 0)
            .collect(),
        other => return Err(Error::Capability(format!("no small model of type {other}"))),
    })
}

fn class_value(
    cache: &mut BTreeMap<(usize, SignedCycleType), i64>,
    key: usize,
    class: &SignedCycleType,
    f: impl FnOnce() -> Result<i64>,
) -> Result<i64> {
    if let Some(&v) = cache.get(&(key, class.clone())) {
        return Ok(v);
    }
    let v = f()?;
    cache.insert((key, class.clone()), v);
    Ok(v)
}

/// Gram matrix `(1/|G|) Σ_C |C| χ_i(C) χ_j(C)` over classes found by
/// enumeration.
fn gram(
    classes: &[Vec<SignedPermutation>],
    order: usize,
    chars: &[Vec<i64>],
) -> Vec<Vec<Rational>> {
    let n = chars.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s: i64 = classes
                        .iter()
                        .enumerate()
                        .map(|(c, cl)| cl.len() as i64 * chars[i][c] * chars[j][c])
                        .sum();
                    Rational::new(s.into(), (order as i64).into())
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub group: String,
    pub classes: usize,
    pub characters: usize,
}

/// Row orthogonality of the full character table of `S_n` or `W_n`; for
/// `W'_n` the restrictions of `W_n` characters must have Gram matrix
/// `diag(1 or 2)`, with 2 exactly for `α = β`, and the split halves are
/// checked against each other away from the classes where they differ.
pub fn orthogonality_check(family: CoxeterType, n: usize) -> Result<OrthogonalityReport> {
    let elements = small_group(family, n)?;
    let classes = conjugacy_classes(&elements);
    let order = elements.len();
    let mut cache = BTreeMap::new();
    let (labels, expected_diag): (Vec<IrrLabel>, Vec<i64>) = match family {
        CoxeterType::A => {
            let l: Vec<IrrLabel> = Partition::all(n).into_iter().map(IrrLabel::A).collect();
            let d = vec![1; l.len()];
            (l, d)
        }
        CoxeterType::B => {
            let l: Vec<IrrLabel> = Bipartition::all(n).into_iter().map(IrrLabel::B).collect();
            let d = vec![1; l.len()];
            (l, d)
        }
        CoxeterType::D => {
            // one W_n label per unordered pair
            let mut l = Vec::new();
            let mut d = Vec::new();
            for bp in Bipartition::all(n) {
                if bp.alpha() <= bp.beta() {
                    d.push(if bp.alpha() == bp.beta() { 2 } else { 1 });
                    l.push(IrrLabel::B(bp));
                }
            }
            (l, d)
        }
        _ => unreachable!(),
    };
    let mut chars = Vec::new();
    for (k, label) in labels.iter().enumerate() {
        let mut row = Vec::new();
        for cl in &classes {
            let g = &cl[0];
            let ct = g.cycle_type();
            let v = class_value(&mut cache, k, &ct, || match label {
                IrrLabel::A(p) => crate::characters::mn_character(p, &ct.positive),
                IrrLabel::B(bp) => crate::characters::hyperoctahedral_character(bp, &ct),
                _ => unreachable!(),
            })?;
            row.push(v);
        }
        chars.push(row);
    }
    let g = gram(&classes, order, &chars);
    for (i, row) in g.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let want = if i == j {
                int(expected_diag[i])
            } else {
                Rational::zero()
            };
            if *x != want {
                return Err(Error::Verification(format!(
                    "{family}{n}: <{}, {}> = {x}, expected {want}",
                    labels[i], labels[j]
                )));
            }
        }
    }
    if family == CoxeterType::D {
        split_half_check(n, &classes)?;
    }
    Ok(OrthogonalityReport {
        group: format!("{family}{n}"),
        classes: classes.len(),
        characters: labels.len(),
    })
}

/// The two halves of a split pair agree away from the very-even classes
/// and sum to the restricted character.
fn split_half_check(n: usize, classes: &[Vec<SignedPermutation>]) -> Result<()> {
    if n < 2 {
        return Ok(());
    }
    let datum = CoxeterDatum::b(n);
    for d in DLabel::all(n).into_iter().filter(|d| d.split().is_some()) {
        for cl in classes {
            let ct = cl[0].cycle_type();
            if ct.is_very_even() {
                continue;
            }
            let half = crate::characters::d_character(&d, &ct)?;
            let full = character_of_element(&datum, &IrrLabel::B(d.pair().clone()), &cl[0])?;
            if 2 * half != full {
                return Err(Error::Verification(format!("split half {d} at {ct}")));
            }
        }
    }
    Ok(())
}

/// Order of the centralizer of the Coxeter element, by enumeration; equals
/// `h` when the theory holds.
pub fn coxeter_centralizer(datum: &CoxeterDatum) -> Result<usize> {
    let w = datum.coxeter_element(&datum.natural_order())?;
    datum.centralizer_order(&w)
}

/// An element of `W_n` outside `W'_n` commuting with the `D_n` Coxeter
/// element: conjugation by it swaps the split halves and fixes the
/// Coxeter class, so the halves take equal values there.
pub fn split_swap_witness(n: usize) -> Result<SignedPermutation> {
    let d = CoxeterDatum::d(n);
    let w = d.coxeter_element(&d.natural_order())?;
    CoxeterDatum::b(n)
        .elements()?
        .into_iter()
        .find(|x| x.negative_count() % 2 == 1 && x.compose(&w) == w.compose(x))
        .ok_or_else(|| {
            Error::Verification(format!(
                "no odd element centralizes the D{n} Coxeter element"
            ))
        })
}

/// `det(1 - t g)` on the reflection representation, as integer
/// coefficients, from explicit reflection matrices.
fn char_series_denominator(g: &IntMatrix) -> Vec<i64> {
    // coefficient of t^k is (-1)^k tr Λ^k g
    (0..=g.len())
        .map(|k| {
            let wm = wedge_matrix(g, k);
            let tr: Rational = (0..wm.len()).fold(Rational::zero(), |a, i| a + wm[i][i].clone());
            let tr = crate::exactnum::rational_to_i64(&tr).expect("integral matrix");
            if k % 2 == 0 {
                tr
            } else {
                -tr
            }
        })
        .collect()
}

/// Power series `1 / p(t)` up to degree `deg`, for `p(0) = 1`.
fn invert_series(p: &[i64], deg: usize) -> Vec<i64> {
    let mut out = vec![0i64; deg + 1];
    out[0] = 1;
    for k in 1..=deg {
        let mut s = 0;
        for j in 1..=k.min(p.len() - 1) {
            s -= p[j] * out[k - j];
        }
        out[k] = s;
    }
    out
}

/// The smallest `b` such that the label occurs in the `b`-th symmetric
/// power of the reflection representation, from the graded character
/// `1 / det(1 - t g)` averaged over the enumerated group.
pub fn b_value_by_symmetric_powers(datum: &CoxeterDatum, label: &IrrLabel) -> Result<usize> {
    let refl = reflection_matrices(datum)?;
    let gens = datum.generators()?;
    let deg = datum.nu();
    // word for each element, by breadth-first search over the generators
    let mut mats: HashMap<SignedPermutation, IntMatrix> = HashMap::new();
    let id = SignedPermutation::identity(datum.degree()?);
    mats.insert(id.clone(), identity(datum.rank()));
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in frontier {
            let gm = mats[&g].clone();
            for (s, sm) in gens.iter().zip(&refl) {
                let h = g.compose(s);
                if !mats.contains_key(&h) {
                    mats.insert(h.clone(), mat_mul(&gm, sm));
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    let order = mats.len() as i64;
    let mut acc = vec![0i64; deg + 1];
    let mut series_cache: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    for (g, m) in &mats {
        let chi = character_of_element(datum, label, g)?;
        if chi == 0 {
            continue;
        }
        let den = char_series_denominator(m);
        let s = series_cache
            .entry(den.clone())
            .or_insert_with(|| invert_series(&den, deg));
        for k in 0..=deg {
            acc[k] += chi * s[k];
        }
    }
    for (k, &a) in acc.iter().enumerate() {
        if a % order != 0 {
            return Err(Error::Verification(format!(
                "{datum}: multiplicity of {label} in S^{k} is not an integer"
            )));
        }
        if a != 0 {
            return Ok(k);
        }
    }
    Err(Error::Verification(format!(
        "{label} occurs in no symmetric power up to {deg}"
    )))
}

/// Compares every closed-form `b`-value of a small group with the
/// symmetric-power oracle; split labels of type D are skipped because
/// their characters are not computed at every class.
pub fn b_value_check(datum: &CoxeterDatum) -> Result<usize> {
    let mut checked = 0;
    for label in classical_labels(datum)? {
        if matches!(&label, IrrLabel::D(d) if d.split().is_some()) {
            continue;
        }
        let want = b_value_of(&label)?;
        let got = b_value_by_symmetric_powers(datum, &label)?;
        if got != want {
            return Err(Error::Verification(format!(
                "{datum}: b-value of {label} is {got} by symmetric powers, {want} by formula"
            )));
        }
        checked += 1;
    }
    Ok(checked)
}
