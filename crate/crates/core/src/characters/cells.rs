use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use super::coxeter_trace;
use crate::combinatorics::FamilyGroup;
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_i64, Cyclotomic, Rational};
use crate::groups::{CoxeterDatum, CoxeterType};
use crate::label::{classical_labels, invariants, twisted_a_value, FamilyKey, IrrLabel};

/// Cell `c_i` (integral `i`) or one of the exceptional cells `c^{k/2}`;
/// stored as twice the index so that both order by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellIndex {
    twice: usize,
}

impl CellIndex {
    pub fn ladder(i: usize) -> Self {
        CellIndex { twice: 2 * i }
    }

    pub fn half(k: usize) -> Self {
        assert!(k % 2 == 1, "exceptional cells have half-integral index");
        CellIndex { twice: k }
    }

    pub fn is_ladder(&self) -> bool {
        self.twice % 2 == 0
    }

    pub fn ladder_index(&self) -> Option<usize> {
        self.is_ladder().then_some(self.twice / 2)
    }

    pub fn twice(&self) -> usize {
        self.twice
    }

    /// Exponent `2r - 2i` attached to the cell.
    pub fn exponent(&self, rank: usize) -> i64 {
        2 * rank as i64 - self.twice as i64
    }

    fn to_json(self) -> Value {
        match self.ladder_index() {
            Some(i) => json!(i),
            None => json!(self.to_string()),
        }
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ladder_index() {
            Some(i) => write!(f, "{i}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

impl FromStr for CellIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cell index `{s}`"));
        match s.split_once('/') {
            Some((k, "2")) => {
                let k: usize = k.parse().map_err(|_| bad())?;
                if k % 2 == 0 {
                    return Err(bad());
                }
                Ok(CellIndex::half(k))
            }
            Some(_) => Err(bad()),
            None => Ok(CellIndex::ladder(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// A coefficient of an ε-term: an integer for Weyl groups, a cyclotomic
/// number in general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Int(i64),
    Cyclotomic(Cyclotomic),
}

impl Coefficient {
    pub fn to_cyclotomic(&self) -> Cyclotomic {
        match self {
            Coefficient::Int(n) => Cyclotomic::from_int(*n),
            Coefficient::Cyclotomic(c) => c.clone(),
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Coefficient::Int(n) => Some(*n),
            Coefficient::Cyclotomic(c) => c.to_integer(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.to_cyclotomic().is_zero()
    }

    pub fn to_json(&self) -> Value {
        match self {
            Coefficient::Int(n) => json!(n),
            Coefficient::Cyclotomic(c) => match c.to_integer() {
                Some(n) => json!(n),
                None => json!(self.to_string()),
            },
        }
    }
}

/// Writes `±(z^j + z^-j)` as `z{m}^j + z{m}^{m-j}` (or its negative),
/// returning the sign separately; `None` for other shapes.
fn real_pair(c: &Cyclotomic) -> Option<(bool, String)> {
    let m = c.conductor();
    let power = |k: u32| {
        if k == 1 {
            format!("z{m}")
        } else {
            format!("z{m}^{k}")
        }
    };
    let pair = |j: u32| Cyclotomic::zeta_pow(m, j as i64) + Cyclotomic::zeta_pow(m, -(j as i64));
    let text = |j: u32| format!("{} + {}", power(j), power(m - j));
    // prefer an unsigned pair: ζ^3 + ζ^5 over -(ζ + ζ^7) when m = 8
    if let Some(j) = (1..=m / 2).find(|&j| *c == pair(j)) {
        return Some((false, text(j)));
    }
    (1..=m / 2)
        .find(|&j| *c == -pair(j))
        .map(|j| (true, text(j)))
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(n) => write!(f, "{n}"),
            Coefficient::Cyclotomic(c) => {
                if let Some(n) = c.to_integer() {
                    return write!(f, "{n}");
                }
                match real_pair(c) {
                    Some((false, text)) => f.write_str(&text),
                    Some((true, text)) => write!(f, "-{}", text.replace(" + ", " - ")),
                    None => write!(f, "{c}"),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonTerm {
    pub label: IrrLabel,
    pub coeff: Coefficient,
    /// `f_E`, when known.
    pub f: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub label: IrrLabel,
    pub trace: i64,
    pub cell: Option<CellIndex>,
    /// Exponent of the Hecke trace, `2(ν - a_E + a_{E!})/h`, for nonzero
    /// traces of classical labels; `2r - 2i` for stored tables.
    pub m: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceReport {
    pub family: CoxeterType,
    pub rank: usize,
    pub h: usize,
    pub entries: Vec<TraceEntry>,
    /// Whether `entries` lists every irreducible (computed types) or only
    /// the nonzero ones (stored tables).
    pub complete: bool,
}

fn type_name(family: CoxeterType) -> String {
    family.to_string()
}

impl TraceReport {
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.trace != 0).count()
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.entries.iter().map(|e| e.trace * e.trace).sum()
    }

    pub fn trace_of(&self, label: &IrrLabel) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| &e.label == label)
            .map(|e| e.trace)
    }

    /// Traces in `{-1, 0, 1}`, `Σ tr² = h`, `h` nonzero traces, and the two
    /// exponent formulas agree on every nonzero trace.
    pub fn check(&self) -> Result<()> {
        if let Some(e) = self.entries.iter().find(|e| e.trace.abs() > 1) {
            return Err(Error::Verification(format!(
                "trace {} on {} is not in {{-1, 0, 1}}",
                e.trace, e.label
            )));
        }
        if self.sum_of_squares() != self.h as i64 {
            return Err(Error::Verification(format!(
                "sum of squared traces {} differs from h = {}",
                self.sum_of_squares(),
                self.h
            )));
        }
        if self.nonzero_count() != self.h {
            return Err(Error::Verification(format!(
                "{} nonzero traces, expected h = {}",
                self.nonzero_count(),
                self.h
            )));
        }
        for e in self.entries.iter().filter(|e| e.trace != 0) {
            let cell = e.cell.ok_or_else(|| {
                Error::Verification(format!("nonzero trace on {} outside every cell", e.label))
            })?;
            if e.m != Some(cell.exponent(self.rank)) {
                return Err(Error::Verification(format!(
                    "exponent {:?} of {} differs from 2r - 2i = {}",
                    e.m,
                    e.label,
                    cell.exponent(self.rank)
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "label": e.label.to_string(),
                    "trace": e.trace,
                    "cell": e.cell.map(CellIndex::to_json),
                    "m": e.m,
                })
            })
            .collect();
        json!({
            "type": type_name(self.family),
            "rank": self.rank,
            "h": self.h,
            "entries": entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,trace,cell,m\n");
        for e in &self.entries {
            out.push_str(&format!(
                "\"{}\",{},{},{}\n",
                e.label,
                e.trace,
                e.cell.map(|c| c.to_string()).unwrap_or_default(),
                e.m.map(|m| m.to_string()).unwrap_or_default()
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}{} h={} nonzero={} sum(tr^2)={}\n",
            type_name(self.family),
            if self.family.fixed_rank().is_some() {
                String::new()
            } else {
                self.rank.to_string()
            },
            self.h,
            self.nonzero_count(),
            self.sum_of_squares()
        );
        for e in &self.entries {
            let cell = e.cell.map(|c| format!(" c{c}")).unwrap_or_default();
            let m = e.m.map(|m| format!(" m={m}")).unwrap_or_default();
            out.push_str(&format!("{:>3}  {}{}{}\n", e.trace, e.label, cell, m));
        }
        out
    }
}

/// Ladder cell index of each classical family key: the cell of `Λ^i`.
fn ladder_keys(datum: &CoxeterDatum) -> Result<BTreeMap<FamilyKey, usize>> {
    let mut out = BTreeMap::new();
    for i in 0..=datum.rank() {
        let key = invariants(&IrrLabel::exterior_power(datum, i)?)?.family_key;
        if out.insert(key, i).is_some() {
            return Err(Error::Consistency(format!(
                "{datum}: two exterior powers share a family"
            )));
        }
    }
    Ok(out)
}

fn classical_trace_report(datum: &CoxeterDatum) -> Result<TraceReport> {
    let keys = ladder_keys(datum)?;
    let (nu, h) = (datum.nu() as i64, datum.coxeter_number() as i64);
    let mut entries = Vec::new();
    for label in classical_labels(datum)? {
        let trace = coxeter_trace(datum, &label)?;
        let inv = invariants(&label)?;
        let cell = keys.get(&inv.family_key).map(|&i| CellIndex::ladder(i));
        let m = if trace == 0 {
            None
        } else {
            let twice = 2 * (nu - inv.a_value as i64 + twisted_a_value(&label)? as i64);
            if twice % h != 0 {
                return Err(Error::Verification(format!(
                    "2(ν - a + a!) = {twice} is not divisible by h = {h} for {label}"
                )));
            }
            Some(twice / h)
        };
        entries.push(TraceEntry {
            label,
            trace,
            cell,
            m,
        });
    }
    Ok(TraceReport {
        family: datum.family(),
        rank: datum.rank(),
        h: h as usize,
        entries,
        complete: true,
    })
}

/// Coxeter traces on every irreducible (classical types), or the stored
/// nonzero traces (exceptional Weyl groups).
pub fn trace_report(datum: &CoxeterDatum) -> Result<TraceReport> {
    match datum.family() {
        f if f.is_classical() => classical_trace_report(datum),
        f if f.is_exceptional_weyl() => crate::tables::trace_report(f),
        other => Err(Error::Capability(format!(
            "type {other} has non-integral traces; use the dihedral or stored H-type data"
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub index: CellIndex,
    pub gamma: Option<FamilyGroup>,
    /// All members of the family (empty for stored tables).
    pub members: Vec<IrrLabel>,
    pub epsilon: Vec<EpsilonTerm>,
    pub p: Option<Rational>,
    pub special: Option<IrrLabel>,
}

impl Cell {
    pub fn n_c(&self) -> usize {
        self.epsilon.iter().filter(|t| !t.coeff.is_zero()).count()
    }

    pub fn contains_term(&self, label: &IrrLabel) -> bool {
        self.epsilon
            .iter()
            .any(|t| &t.label == label && !t.coeff.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecomposition {
    pub family: CoxeterType,
    pub rank: usize,
    pub h: usize,
    pub cells: Vec<Cell>,
    /// Nonzero terms in families that are neither ladder nor exceptional
    /// cells; always empty when the theory holds.
    pub stray: Vec<EpsilonTerm>,
}

/// `n_c` predicted from the family group.
pub fn expected_n_c(gamma: FamilyGroup) -> Option<usize> {
    gamma.ladder_count()
}

/// The integer `p_i` predicted for a ladder cell.
pub fn expected_p(gamma: FamilyGroup, simply_laced: bool, i: usize) -> Option<i64> {
    let alt = if i % 2 == 0 { 1 } else { -1 };
    match gamma {
        FamilyGroup::S(1) => Some(alt),
        FamilyGroup::S(2) if simply_laced => Some(0),
        FamilyGroup::S(2) => Some(alt),
        FamilyGroup::S(3) if simply_laced => Some(0),
        FamilyGroup::S(3) => Some(1),
        FamilyGroup::S(4) | FamilyGroup::S(5) => Some(0),
        _ => None,
    }
}

/// The sequence of family groups along `c_0, ..., c_r`.
pub fn expected_gamma_sequence(datum: &CoxeterDatum) -> Option<Vec<FamilyGroup>> {
    let r = datum.rank();
    let s = |v: &[u8]| v.iter().map(|&k| FamilyGroup::S(k)).collect::<Vec<_>>();
    Some(match datum.family() {
        CoxeterType::A => vec![FamilyGroup::S(1); r + 1],
        CoxeterType::B => (0..=r)
            .map(|i| FamilyGroup::S(if i == 0 || i == r { 1 } else { 2 }))
            .collect(),
        CoxeterType::D => (0..=r)
            .map(|i| FamilyGroup::S(if i <= 1 || i + 1 >= r { 1 } else { 2 }))
            .collect(),
        CoxeterType::E6 => s(&[1, 1, 2, 3, 2, 1, 1]),
        CoxeterType::E7 => s(&[1, 1, 2, 3, 3, 2, 1, 1]),
        CoxeterType::E8 => s(&[1, 1, 2, 3, 5, 3, 2, 1, 1]),
        CoxeterType::F4 => s(&[1, 2, 4, 2, 1]),
        CoxeterType::G2 => s(&[1, 3, 1]),
        _ => return None,
    })
}

/// Whether the special member and `Λ^i` carry nonzero traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Membership {
    pub special_in_x: bool,
    pub lambda_in_x: bool,
}

pub fn expected_membership(gamma: FamilyGroup, simply_laced: bool) -> Option<Membership> {
    let m = |special_in_x, lambda_in_x| Membership {
        special_in_x,
        lambda_in_x,
    };
    match gamma {
        FamilyGroup::S(1) => Some(m(true, true)),
        FamilyGroup::S(2) if simply_laced => Some(m(true, false)),
        FamilyGroup::S(2) => Some(m(false, false)),
        FamilyGroup::S(3) if simply_laced => Some(m(false, true)),
        FamilyGroup::S(3) => Some(m(true, true)),
        FamilyGroup::S(4) | FamilyGroup::S(5) => Some(m(true, true)),
        _ => None,
    }
}

impl CellDecomposition {
    pub fn cell(&self, index: CellIndex) -> Option<&Cell> {
        self.cells.iter().find(|c| c.index == index)
    }

    pub fn total_terms(&self) -> usize {
        self.cells.iter().map(Cell::n_c).sum::<usize>() + self.stray.len()
    }

    /// Nonzero-term counts per cell, the family-group sequence, and integrality and
    /// values of `p_i`.
    pub fn check(&self) -> Result<()> {
        if !self.stray.is_empty() {
            return Err(Error::Verification(format!(
                "nonzero terms outside the ladder cells: {}",
                self.stray
                    .iter()
                    .map(|t| t.label.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        let datum = CoxeterDatum::new(self.family, self.rank)?;
        let simply_laced = self.family.is_simply_laced();
        if let Some(seq) = expected_gamma_sequence(&datum) {
            let got: Vec<Option<FamilyGroup>> = self
                .cells
                .iter()
                .filter(|c| c.index.is_ladder())
                .map(|c| c.gamma)
                .collect();
            let want: Vec<Option<FamilyGroup>> = seq.into_iter().map(Some).collect();
            if got != want {
                return Err(Error::Verification(format!(
                    "family groups {got:?} differ from the expected sequence {want:?}"
                )));
            }
        }
        for cell in &self.cells {
            let want = match (cell.index.is_ladder(), cell.gamma) {
                (true, Some(g)) => expected_n_c(g),
                (false, _) => Some(2),
                (true, None) => None,
            };
            if let Some(want) = want {
                if cell.n_c() != want {
                    return Err(Error::Verification(format!(
                        "cell c{}: {} nonzero terms, expected {want}",
                        cell.index,
                        cell.n_c()
                    )));
                }
            }
            if let (Some(i), Some(g), Some(p)) = (cell.index.ladder_index(), cell.gamma, &cell.p) {
                let p_int = rational_to_i64(p)
                    .ok_or_else(|| Error::Verification(format!("p_{i} = {p} is not an integer")))?;
                if let Some(want) = expected_p(g, simply_laced, i) {
                    if p_int != want {
                        return Err(Error::Verification(format!(
                            "p_{i} = {p_int}, expected {want} for family group {g}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                let eps: Vec<Value> = c
                    .epsilon
                    .iter()
                    .filter(|t| !t.coeff.is_zero())
                    .map(|t| json!({"label": t.label.to_string(), "sign": t.coeff.to_json()}))
                    .collect();
                json!({
                    "index": c.index.to_json(),
                    "gamma": c.gamma.map(|g| g.to_string()),
                    "p": c.p.as_ref().and_then(rational_to_i64),
                    "epsilon": eps,
                    "special": c.special.as_ref().map(|s| s.to_string()),
                })
            })
            .collect();
        json!({
            "type": type_name(self.family),
            "rank": self.rank,
            "h": self.h,
            "cells": cells,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("cell,label,sign\n");
        for c in &self.cells {
            for t in c.epsilon.iter().filter(|t| !t.coeff.is_zero()) {
                out.push_str(&format!("{},\"{}\",\"{}\"\n", c.index, t.label, t.coeff));
            }
        }
        out
    }

    /// One line per cell in the usual display style, e.g.
    /// `c1: -1,4/0 - 0,1/4`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let mut line = String::new();
            for (k, t) in c.epsilon.iter().filter(|t| !t.coeff.is_zero()).enumerate() {
                line.push_str(&render_term(&t.coeff, &t.label.to_string(), k == 0));
            }
            let gamma = c.gamma.map(|g| format!(" [{g}]")).unwrap_or_default();
            out.push_str(&format!("c{}{}: {}\n", c.index, gamma, line));
        }
        out
    }
}

fn render_term(coeff: &Coefficient, label: &str, first: bool) -> String {
    let sep = |neg: bool| match (first, neg) {
        (true, true) => "-".to_string(),
        (true, false) => String::new(),
        (false, true) => " - ".to_string(),
        (false, false) => " + ".to_string(),
    };
    match coeff.as_int() {
        Some(1) => format!("{}{label}", sep(false)),
        Some(-1) => format!("{}{label}", sep(true)),
        Some(n) if n < 0 => format!("{}{}*{label}", sep(true), -n),
        Some(n) => format!("{}{n}*{label}", sep(false)),
        None => match real_pair(&coeff.to_cyclotomic()) {
            Some((neg, text)) => format!("{}({text}){label}", sep(neg)),
            None => format!("{}({coeff}){label}", sep(false)),
        },
    }
}

fn classical_cell_decomposition(datum: &CoxeterDatum) -> Result<CellDecomposition> {
    let report = classical_trace_report(datum)?;
    let keys = ladder_keys(datum)?;
    let mut by_key: BTreeMap<FamilyKey, Vec<(IrrLabel, i64)>> = BTreeMap::new();
    for e in &report.entries {
        let key = invariants(&e.label)?.family_key;
        by_key
            .entry(key)
            .or_default()
            .push((e.label.clone(), e.trace));
    }
    let mut cells = Vec::new();
    let mut stray = Vec::new();
    for (key, members) in &by_key {
        let term = |label: &IrrLabel, trace: i64| -> Result<EpsilonTerm> {
            Ok(EpsilonTerm {
                label: label.clone(),
                coeff: Coefficient::Int(trace),
                f: Some(invariants(label)?.f_value),
            })
        };
        let Some(&i) = keys.get(key) else {
            for (label, trace) in members.iter().filter(|(_, t)| *t != 0) {
                stray.push(term(label, *trace)?);
            }
            continue;
        };
        let mut epsilon = Vec::new();
        let mut p = Rational::zero();
        for (label, trace) in members.iter().filter(|(_, t)| *t != 0) {
            let t = term(label, *trace)?;
            p += Rational::from_integer((*trace).into())
                / Rational::from_integer(t.f.unwrap().into());
            epsilon.push(t);
        }
        epsilon.sort_by_key(|t| t.label.to_string());
        let specials: Vec<&IrrLabel> = members
            .iter()
            .map(|(l, _)| l)
            .filter(|l| {
                invariants(l)
                    .map(|v| v.a_value == v.b_value)
                    .unwrap_or(false)
            })
            .collect();
        if specials.len() != 1 {
            return Err(Error::Consistency(format!(
                "{datum}: cell c{i} has {} special members",
                specials.len()
            )));
        }
        let gamma = invariants(&members[0].0)?.family_group;
        let mut member_labels: Vec<IrrLabel> = members.iter().map(|(l, _)| l.clone()).collect();
        member_labels.sort_by_key(|l| l.to_string());
        cells.push(Cell {
            index: CellIndex::ladder(i),
            gamma: Some(gamma),
            members: member_labels,
            epsilon,
            p: Some(p),
            special: Some(specials[0].clone()),
        });
    }
    cells.sort_by_key(|c| c.index);
    if cells.len() != datum.rank() + 1 {
        return Err(Error::Consistency(format!(
            "{datum}: {} ladder cells found",
            cells.len()
        )));
    }
    Ok(CellDecomposition {
        family: datum.family(),
        rank: datum.rank(),
        h: datum.coxeter_number(),
        cells,
        stray,
    })
}

/// Groups the nonzero Coxeter traces by two-sided cell: computed for
/// types A, B, D and dihedral groups, read from stored tables otherwise.
pub fn cell_decomposition(datum: &CoxeterDatum) -> Result<CellDecomposition> {
    match datum.family() {
        f if f.is_classical() => classical_cell_decomposition(datum),
        f if f.is_exceptional_weyl() => crate::tables::cell_decomposition(f),
        CoxeterType::I2(m) => crate::noncrystal::dihedral_cell_decomposition(m),
        f @ (CoxeterType::H3 | CoxeterType::H4) => crate::noncrystal::h_cell_decomposition(f),
        _ => unreachable!(),
    }
}

/// Whether the special member `ρ_i` and `Λ^i` of the cell `c_i` carry
/// nonzero traces (classical types).
pub fn special_membership(datum: &CoxeterDatum, cell: CellIndex) -> Result<Membership> {
    let Some(i) = cell.ladder_index() else {
        return Err(Error::InvalidCell(format!("c{cell} is not a ladder cell")));
    };
    if i > datum.rank() {
        return Err(Error::InvalidCell(format!("{datum} has no cell c{i}")));
    }
    if !datum.family().is_classical() {
        return Err(Error::Capability(format!(
            "special members of type {} are not in the stored data",
            datum.family()
        )));
    }
    let dec = classical_cell_decomposition(datum)?;
    let c = dec
        .cell(cell)
        .ok_or_else(|| Error::InvalidCell(format!("{datum} has no cell c{i}")))?;
    let special = c
        .special
        .as_ref()
        .expect("classical cells record their special member");
    Ok(Membership {
        special_in_x: c.contains_term(special),
        lambda_in_x: c.contains_term(&IrrLabel::exterior_power(datum, i)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_index_text() {
        assert_eq!("7/2".parse::<CellIndex>().unwrap().to_string(), "7/2");
        assert_eq!("3".parse::<CellIndex>().unwrap(), CellIndex::ladder(3));
        assert!("4/2".parse::<CellIndex>().is_err());
        assert!(CellIndex::ladder(3) < CellIndex::half(7));
        assert!(CellIndex::half(7) < CellIndex::ladder(4));
        assert_eq!(CellIndex::half(7).exponent(7), 7);
    }

    #[test]
    fn a1_traces() {
        let r = trace_report(&CoxeterDatum::a(1)).unwrap();
        let t: Vec<i64> = r.entries.iter().map(|e| e.trace).collect();
        assert_eq!(t, vec![1, -1]);
        r.check().unwrap();
    }

    #[test]
    fn b4_and_d5_counts() {
        let b = trace_report(&CoxeterDatum::b(4)).unwrap();
        assert_eq!(b.nonzero_count(), 8);
        b.check().unwrap();
        let d = trace_report(&CoxeterDatum::d(5)).unwrap();
        assert_eq!(d.nonzero_count(), 8);
        d.check().unwrap();
    }

    #[test]
    fn b4_cells_text() {
        let dec = cell_decomposition(&CoxeterDatum::b(4)).unwrap();
        dec.check().unwrap();
        let text = dec.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "c0 [S1]: 4/");
        assert_eq!(lines[1], "c1 [S2]: -0,1/4 - 1,4/0");
        assert_eq!(lines[4], "c4 [S1]: 0,1,2,3,4/1,2,3,4");
    }

    #[test]
    fn d5_cells_text() {
        let dec = cell_decomposition(&CoxeterDatum::d(5)).unwrap();
        dec.check().unwrap();
        let text = dec.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "c1 [S1]: -4/1");
        assert_eq!(lines[2], "c2 [S2]: 1,4/0,2 - 2,4/0,1");
        assert_eq!(lines[3], "c3 [S2]: -1,2,4/0,1,3 + 1,3,4/0,1,2");
    }

    #[test]
    fn memberships() {
        let a = CoxeterDatum::a(4);
        let m = special_membership(&a, CellIndex::ladder(2)).unwrap();
        assert_eq!(m, expected_membership(FamilyGroup::S(1), true).unwrap());
        let d = CoxeterDatum::d(6);
        let m = special_membership(&d, CellIndex::ladder(3)).unwrap();
        assert_eq!(
            m,
            Membership {
                special_in_x: true,
                lambda_in_x: false
            }
        );
        let b = CoxeterDatum::b(5);
        let m = special_membership(&b, CellIndex::ladder(2)).unwrap();
        assert_eq!(
            m,
            Membership {
                special_in_x: false,
                lambda_in_x: false
            }
        );
        assert!(matches!(
            special_membership(&b, CellIndex::half(7)),
            Err(Error::InvalidCell(_))
        ));
    }
}
