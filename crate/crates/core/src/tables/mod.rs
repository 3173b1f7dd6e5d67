//! Stored Coxeter-element traces for the exceptional Weyl groups and for
//! `H3`, `H4`, with the identities that guard them.
//!
//! Each table is a line-oriented text file under `data/`:
//!
//! ```text
//! # comment
//! type E7
//! rank 7
//! h 18
//! gamma S1 S1 S2 S3 S3 S2 S1 S1     (family group of c_0, ..., c_r)
//! exceptional 7/2                    (half-integral cells, possibly none)
//! term <cell> <label> <trace> <f>    (f is `-` when not recorded)
//! identity <cell> <signed sum of 1/f, as displayed>
//! checksum sha256 <hex digest of every preceding byte>
//! ```
//!
//! Traces are integers or cyclotomic literals such as `z5+z5^4`. Terms
//! appear in display order.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use sha2::{Digest, Sha256};

use crate::characters::{
    expected_gamma_sequence, Cell, CellDecomposition, CellIndex, Coefficient, EpsilonTerm,
    TraceEntry, TraceReport,
};
use crate::combinatorics::FamilyGroup;
use crate::error::{Error, Result};
use crate::exactnum::{rational_to_i64, Cyclotomic, Rational};
use crate::groups::{CoxeterDatum, CoxeterType};
use crate::label::IrrLabel;

const E6: &str = include_str!("../../data/E6.txt");
const E7: &str = include_str!("../../data/E7.txt");
const E8: &str = include_str!("../../data/E8.txt");
const F4: &str = include_str!("../../data/F4.txt");
const G2: &str = include_str!("../../data/G2.txt");
const H3: &str = include_str!("../../data/H3.txt");
const H4: &str = include_str!("../../data/H4.txt");

/// Raw text of the stored table for a type.
pub fn source(family: CoxeterType) -> Result<&'static str> {
    Ok(match family {
        CoxeterType::E6 => E6,
        CoxeterType::E7 => E7,
        CoxeterType::E8 => E8,
        CoxeterType::F4 => F4,
        CoxeterType::G2 => G2,
        CoxeterType::H3 => H3,
        CoxeterType::H4 => H4,
        other => {
            return Err(Error::Capability(format!(
                "no stored table for type {other}"
            )))
        }
    })
}

pub const STORED_TYPES: [CoxeterType; 7] = [
    CoxeterType::E6,
    CoxeterType::E7,
    CoxeterType::E8,
    CoxeterType::F4,
    CoxeterType::G2,
    CoxeterType::H3,
    CoxeterType::H4,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoredTerm {
    pub cell: CellIndex,
    pub label: String,
    pub trace: Coefficient,
    pub f: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRecord {
    pub family: CoxeterType,
    pub rank: usize,
    pub h: usize,
    pub gamma: Option<Vec<FamilyGroup>>,
    pub exceptional_cells: Vec<CellIndex>,
    pub terms: Vec<StoredTerm>,
    /// Displayed sums of `±1/f` per cell, as signed fractions plus the
    /// stated total.
    pub identities: Vec<(CellIndex, Vec<Rational>, Rational)>,
}

impl ExceptionalRecord {
    pub fn cells(&self) -> BTreeMap<CellIndex, Vec<&StoredTerm>> {
        let mut out: BTreeMap<CellIndex, Vec<&StoredTerm>> = BTreeMap::new();
        for t in &self.terms {
            out.entry(t.cell).or_default().push(t);
        }
        out
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Splits off the trailing checksum line and compares it with the digest of
/// everything before it.
pub fn verify_checksum(text: &str) -> Result<()> {
    let body_end = text
        .trim_end_matches('\n')
        .rfind('\n')
        .map(|i| i + 1)
        .ok_or_else(|| Error::DataIntegrity("table has no checksum line".into()))?;
    let (body, last) = text.split_at(body_end);
    let stated = last
        .trim()
        .strip_prefix("checksum sha256 ")
        .ok_or_else(|| Error::DataIntegrity("last line is not a checksum".into()))?;
    let actual = hex(&Sha256::digest(body.as_bytes()));
    if stated != actual {
        return Err(Error::DataIntegrity(format!(
            "checksum mismatch: stated {stated}, computed {actual}"
        )));
    }
    Ok(())
}

fn parse_fraction_sum(s: &str) -> Result<(Vec<Rational>, Rational)> {
    let bad = || Error::Parse(format!("bad identity `{s}`"));
    let (lhs, rhs) = s.split_once('=').ok_or_else(bad)?;
    let parse_frac = |t: &str| -> Result<Rational> {
        let (n, d) = t.split_once('/').unwrap_or((t, "1"));
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Rational::new(n.into(), d.into()))
    };
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in lhs.char_indices().skip(1) {
        if c == '+' || c == '-' {
            terms.push(parse_frac(lhs[start..i].trim_start_matches('+'))?);
            start = i;
        }
    }
    terms.push(parse_frac(lhs[start..].trim_start_matches('+'))?);
    Ok((terms, parse_frac(rhs.trim())?))
}

/// Parses a table after checking its checksum.
pub fn parse(text: &str) -> Result<ExceptionalRecord> {
    verify_checksum(text)?;
    let mut family = None;
    let mut rank = None;
    let mut h = None;
    let mut gamma = None;
    let mut exceptional = None;
    let mut terms = Vec::new();
    let mut identities = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| Error::Parse(format!("line {}: {what}: `{line}`", n + 1));
        let mut words = line.split_whitespace();
        let key = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        match key {
            "type" => {
                family = Some(
                    rest.first()
                        .ok_or_else(|| bad("missing type"))?
                        .parse::<CoxeterType>()?,
                )
            }
            "rank" => {
                rank = Some(
                    rest.first()
                        .and_then(|r| r.parse().ok())
                        .ok_or_else(|| bad("bad rank"))?,
                )
            }
            "h" => {
                h = Some(
                    rest.first()
                        .and_then(|r| r.parse().ok())
                        .ok_or_else(|| bad("bad h"))?,
                )
            }
            "gamma" => {
                gamma = Some(
                    rest.iter()
                        .map(|g| g.parse::<FamilyGroup>())
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            "exceptional" => {
                exceptional = Some(
                    rest.iter()
                        .map(|c| c.parse::<CellIndex>())
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            "term" => {
                let [cell, label, trace, f] = rest[..] else {
                    return Err(bad("a term needs cell, label, trace, f"));
                };
                let trace = match trace.parse::<i64>() {
                    Ok(k) => Coefficient::Int(k),
                    Err(_) => Coefficient::Cyclotomic(trace.parse()?),
                };
                let f = match f {
                    "-" => None,
                    f => Some(f.parse().map_err(|_| bad("bad f-value"))?),
                };
                terms.push(StoredTerm {
                    cell: cell.parse()?,
                    label: label.to_string(),
                    trace,
                    f,
                });
            }
            "identity" => {
                let [cell, sum] = rest[..] else {
                    return Err(bad("an identity needs a cell and a sum"));
                };
                let (fracs, total) = parse_fraction_sum(sum)?;
                identities.push((cell.parse()?, fracs, total));
            }
            "checksum" => {}
            _ => return Err(bad("unknown record")),
        }
    }
    let missing = |what: &str| Error::Parse(format!("table has no `{what}` line"));
    Ok(ExceptionalRecord {
        family: family.ok_or_else(|| missing("type"))?,
        rank: rank.ok_or_else(|| missing("rank"))?,
        h: h.ok_or_else(|| missing("h"))?,
        gamma,
        exceptional_cells: exceptional.ok_or_else(|| missing("exceptional"))?,
        terms,
        identities,
    })
}

/// The stored record of a type, checksum verified.
pub fn load(family: CoxeterType) -> Result<ExceptionalRecord> {
    let rec = parse(source(family)?)?;
    if rec.family != family {
        return Err(Error::DataIntegrity(format!(
            "table for {family} declares type {}",
            rec.family
        )));
    }
    Ok(rec)
}

/// Nonzero Coxeter traces from the stored table of an exceptional Weyl
/// group, with `m = 2r - 2i`.
pub fn trace_report(family: CoxeterType) -> Result<TraceReport> {
    if !family.is_exceptional_weyl() {
        return Err(Error::Capability(format!(
            "type {family} has no integral stored trace report"
        )));
    }
    let rec = load(family)?;
    let entries = rec
        .terms
        .iter()
        .map(|t| {
            let trace = t.trace.as_int().ok_or_else(|| {
                Error::DataIntegrity(format!("{family}: trace of {} is not an integer", t.label))
            })?;
            Ok(TraceEntry {
                label: IrrLabel::Named(t.label.clone()),
                trace,
                cell: Some(t.cell),
                m: Some(t.cell.exponent(rec.rank)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceReport {
        family,
        rank: rec.rank,
        h: rec.h,
        entries,
        complete: false,
    })
}

/// Cells from the stored table. `p_i` is recomputed for ladder cells whose
/// f-values are all recorded.
pub fn cell_decomposition(family: CoxeterType) -> Result<CellDecomposition> {
    let rec = load(family)?;
    let mut cells = Vec::new();
    for (index, terms) in rec.cells() {
        let gamma = match (&rec.gamma, index.ladder_index()) {
            (Some(g), Some(i)) => g.get(i).copied(),
            _ => None,
        };
        let p = if index.is_ladder() && terms.iter().all(|t| t.f.is_some()) {
            let mut p = Rational::zero();
            for t in &terms {
                let tr = t.trace.as_int().ok_or_else(|| {
                    Error::DataIntegrity(format!("{family}: non-integral trace with an f-value"))
                })?;
                p += Rational::new(tr.into(), t.f.unwrap().into());
            }
            Some(p)
        } else {
            None
        };
        let epsilon: Vec<EpsilonTerm> = terms
            .iter()
            .map(|t| EpsilonTerm {
                label: IrrLabel::Named(t.label.clone()),
                coeff: t.trace.clone(),
                f: t.f,
            })
            .collect();
        cells.push(Cell {
            index,
            gamma,
            members: Vec::new(),
            epsilon,
            p,
            special: None,
        });
    }
    Ok(CellDecomposition {
        family,
        rank: rec.rank,
        h: rec.h,
        cells,
        stray: Vec::new(),
    })
}

/// Exceptional cells each type is known to have.
pub fn expected_exceptional_cells(family: CoxeterType) -> Vec<CellIndex> {
    match family {
        CoxeterType::E7 => vec![CellIndex::half(7)],
        CoxeterType::E8 => vec![CellIndex::half(7), CellIndex::half(9)],
        CoxeterType::H3 => vec![CellIndex::half(3)],
        CoxeterType::H4 => vec![CellIndex::half(3), CellIndex::half(5)],
        _ => Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalReport {
    pub family: CoxeterType,
    /// Names of the clauses that were checked, in order.
    pub clauses: Vec<String>,
    /// `p_i` per ladder cell.
    pub p_values: Vec<(usize, i64)>,
    /// Displayed identities whose stated total differs from the sum of
    /// their own terms.
    pub notes: Vec<String>,
}

fn dimension_of(label: &str) -> &str {
    label.split(['_', '\'']).next().unwrap_or(label)
}

/// Checks an exceptional Weyl group's table: the family-group sequence;
/// per-cell term counts (1, 2, 4, 6, 10 for `S1..S5`, 2 for exceptional
/// cells); `Σ tr² = h`; integrality and predicted values of `p_i`; the
/// displayed f-fraction sums; the exceptional-cell inventory, each such
/// cell holding two terms of equal dimension and opposite sign.
pub fn verify_exceptional(family: CoxeterType) -> Result<ExceptionalReport> {
    if !family.is_exceptional_weyl() {
        return Err(Error::InvalidInput(format!(
            "{family} is not an exceptional Weyl group"
        )));
    }
    let rec = load(family)?;
    let fail =
        |clause: &str, msg: String| Err(Error::DataIntegrity(format!("{family}: {clause}: {msg}")));
    let mut clauses = vec!["checksum".to_string()];
    let datum = CoxeterDatum::new(family, rec.rank)?;
    if rec.h != datum.coxeter_number() {
        return fail("coxeter number", format!("stored h = {}", rec.h));
    }

    let want_gamma = expected_gamma_sequence(&datum);
    if rec.gamma != want_gamma {
        return fail(
            "family groups",
            format!("{:?} vs {:?}", rec.gamma, want_gamma),
        );
    }
    clauses.push("family groups".into());

    let dec = cell_decomposition(family)?;
    if let Err(e) = dec.check() {
        return fail("cell counts and p-values", e.to_string());
    }
    let ladder: Vec<usize> = dec
        .cells
        .iter()
        .filter_map(|c| c.index.ladder_index())
        .collect();
    if ladder != (0..=rec.rank).collect::<Vec<_>>() {
        return fail("cell counts", format!("ladder cells {ladder:?}"));
    }
    clauses.push("cell counts".into());

    let report = trace_report(family)?;
    if let Err(e) = report.check() {
        return fail("sum of squares", e.to_string());
    }
    clauses.push("sum of squares".into());

    let mut p_values = Vec::new();
    for cell in &dec.cells {
        if let (Some(i), Some(p)) = (cell.index.ladder_index(), &cell.p) {
            match rational_to_i64(p) {
                Some(v) => p_values.push((i, v)),
                None => return fail("integrality", format!("p_{i} = {p}")),
            }
        } else if cell.index.is_ladder() {
            return fail(
                "integrality",
                format!("cell c{} lacks f-values", cell.index),
            );
        }
    }
    clauses.push("integrality".into());

    let mut notes = Vec::new();
    let cells = rec.cells();
    for (index, fracs, stated) in &rec.identities {
        let terms = cells.get(index).ok_or_else(|| {
            Error::DataIntegrity(format!("{family}: identity for empty cell c{index}"))
        })?;
        if terms.len() != fracs.len() {
            return fail(
                "identities",
                format!(
                    "c{index}: {} fractions for {} terms",
                    fracs.len(),
                    terms.len()
                ),
            );
        }
        // the displayed signs agree with the traces up to one global sign
        let mut global = None;
        for (t, q) in terms.iter().zip(fracs) {
            let tr = t.trace.as_int().unwrap_or(0);
            let f = t.f.unwrap_or(0);
            if q.abs() != Rational::new(1.into(), (f as i64).into()) || tr == 0 {
                return fail(
                    "identities",
                    format!("c{index}: {q} does not match 1/f of {}", t.label),
                );
            }
            let s = if q.is_positive() == (tr > 0) { 1 } else { -1 };
            if *global.get_or_insert(s) != s {
                return fail(
                    "identities",
                    format!("c{index}: sign pattern differs from the traces"),
                );
            }
        }
        let lhs: Rational = fracs.iter().cloned().fold(Rational::zero(), |a, b| a + b);
        let p = dec
            .cell(*index)
            .and_then(|c| c.p.clone())
            .unwrap_or_default();
        let signed = if global == Some(-1) {
            -lhs.clone()
        } else {
            lhs.clone()
        };
        if signed != p {
            return fail(
                "identities",
                format!("c{index}: displayed sum {lhs} vs p = {p}"),
            );
        }
        if lhs != *stated {
            notes.push(format!(
                "c{index}: the displayed terms sum to {lhs}, the stated total is {stated}"
            ));
        }
    }
    clauses.push("identities".into());

    let want = expected_exceptional_cells(family);
    if rec.exceptional_cells != want {
        return fail(
            "exceptional cells",
            format!("{:?} vs {want:?}", rec.exceptional_cells),
        );
    }
    for index in &want {
        let terms = cells.get(index).map(Vec::as_slice).unwrap_or(&[]);
        let ok = terms.len() == 2
            && dimension_of(&terms[0].label) == dimension_of(&terms[1].label)
            && terms[0].trace.as_int().map(|a| -a) == terms[1].trace.as_int();
        if !ok {
            return fail(
                "exceptional cells",
                format!("c{index} is not a pair ±(d - d')"),
            );
        }
    }
    let extra: Vec<CellIndex> = cells
        .keys()
        .filter(|c| !c.is_ladder() && !want.contains(c))
        .copied()
        .collect();
    if !extra.is_empty() {
        return fail("exceptional cells", format!("unexpected cells {extra:?}"));
    }
    clauses.push("exceptional cells".into());

    Ok(ExceptionalReport {
        family,
        clauses,
        p_values,
        notes,
    })
}

/// Exponent `m = 2r - 2i` implied for each stored term; for the
/// half-integral cells this is odd.
pub fn cell_exponents(family: CoxeterType) -> Result<Vec<(String, CellIndex, i64)>> {
    let rec = load(family)?;
    let mut out = Vec::new();
    for t in &rec.terms {
        let m = t.cell.exponent(rec.rank);
        if m < 0 || (m % 2 != 0) == t.cell.is_ladder() {
            return Err(Error::DataIntegrity(format!(
                "{family}: exponent {m} for {} in c{}",
                t.label, t.cell
            )));
        }
        out.push((t.label.clone(), t.cell, m));
    }
    Ok(out)
}

/// `Σ tr²` over a stored table, exactly.
pub fn square_sum(family: CoxeterType) -> Result<Cyclotomic> {
    let rec = load(family)?;
    Ok(rec.terms.iter().fold(Cyclotomic::zero(), |acc, t| {
        let c = t.trace.to_cyclotomic();
        acc + c.clone() * c
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_load() {
        for f in STORED_TYPES {
            let rec = load(f).unwrap();
            // integer traces: h nonzero terms of size one; the H tables
            // carry irrational terms instead
            let total = rec.terms.len();
            match f {
                CoxeterType::H3 => assert_eq!(total, 8),
                CoxeterType::H4 => assert_eq!(total, 24),
                _ => assert_eq!(total, rec.h, "{f}"),
            }
        }
    }

    #[test]
    fn tampering_is_detected() {
        let text =
            source(CoxeterType::G2)
                .unwrap()
                .replacen("term 1 2_2 1 2", "term 1 2_2 -1 2", 1);
        assert!(matches!(parse(&text), Err(Error::DataIntegrity(_))));
    }

    #[test]
    fn exceptional_suites_pass() {
        for f in [
            CoxeterType::E6,
            CoxeterType::E7,
            CoxeterType::E8,
            CoxeterType::F4,
            CoxeterType::G2,
        ] {
            let r = verify_exceptional(f).unwrap();
            assert_eq!(r.clauses.len(), 7, "{f}");
        }
    }

    #[test]
    fn e8_counts() {
        let dec = cell_decomposition(CoxeterType::E8).unwrap();
        let counts: Vec<usize> = dec.cells.iter().map(Cell::n_c).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 2, 10, 2, 4, 2, 1, 1]);
        let f4 = cell_decomposition(CoxeterType::F4).unwrap();
        assert_eq!(f4.cell(CellIndex::ladder(2)).unwrap().n_c(), 6);
    }

    #[test]
    fn g2_middle_cell_p_is_one() {
        let r = verify_exceptional(CoxeterType::G2).unwrap();
        assert_eq!(r.p_values, vec![(0, 1), (1, 1), (2, 1)]);
    }

    #[test]
    fn simply_laced_two_term_identity_is_noted() {
        let r = verify_exceptional(CoxeterType::E6).unwrap();
        assert_eq!(r.notes.len(), 2);
        assert!(verify_exceptional(CoxeterType::F4)
            .unwrap()
            .notes
            .is_empty());
    }

    #[test]
    fn exponents() {
        let e7 = cell_exponents(CoxeterType::E7).unwrap();
        let m: Vec<i64> = e7
            .iter()
            .filter(|(l, _, _)| l.starts_with("512"))
            .map(|x| x.2)
            .collect();
        assert_eq!(m, vec![7, 7]);
        let e6 = cell_exponents(CoxeterType::E6).unwrap();
        assert_eq!(e6[0], ("1_0".to_string(), CellIndex::ladder(0), 12));
        let e8 = cell_exponents(CoxeterType::E8).unwrap();
        assert!(e8
            .iter()
            .filter(|x| x.1 == CellIndex::ladder(4))
            .all(|x| x.2 == 8));
    }

    #[test]
    fn fraction_sums_parse() {
        let (t, s) = parse_fraction_sum("-1/6+1/2+1/3+1/3=1").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[0], Rational::new((-1).into(), 6.into()));
        assert_eq!(s, <Rational as num_traits::One>::one());
    }
}
