//! The invariant suite behind `coxtrace verify`: every check the library
//! can run on its own output, grouped by topic.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{
    cell_decomposition, character_of_element, coxeter_class, expected_membership,
    special_membership, trace_report, CellIndex,
};
use crate::combinatorics::{Bipartition, Partition, Symbol, SymbolType};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::groups::{CoxeterDatum, CoxeterType, ENUMERATION_RANK_LIMIT};
use crate::hecke::{
    dihedral_model, dihedral_module_trace, hecke_coxeter_trace, power_identity_check,
    seminormal_model,
};
use crate::label::{DLabel, IrrLabel};
use crate::noncrystal::{self, DihedralLabel};
use crate::oracle;
use crate::tables;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest rank for the classical computations.
    pub max_rank: usize,
    pub seed: u64,
    /// Random generator orders per type for the word-independence check.
    pub random_orders: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_rank: 8,
            seed: 0,
            random_orders: 20,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<String>) {
        let start = Instant::now();
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.outcomes.push(CheckOutcome {
            name: name.to_string(),
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        });
    }
}

/// Classical groups of each family up to the given ranks.
pub fn classical_data(max_a: usize, max_b: usize, max_d: usize) -> Vec<CoxeterDatum> {
    let mut out: Vec<CoxeterDatum> = (1..=max_a).map(CoxeterDatum::a).collect();
    out.extend((1..=max_b).map(CoxeterDatum::b));
    out.extend((4..=max_d).map(CoxeterDatum::d));
    out
}

/// Every Coxeter trace lies in `{-1, 0, 1}`.
pub fn macdonald(data: &[CoxeterDatum]) -> Result<String> {
    let mut count = 0;
    for d in data {
        let report = trace_report(d)?;
        if let Some(e) = report.entries.iter().find(|e| e.trace.abs() > 1) {
            return Err(Error::Verification(format!(
                "{d}: trace {} on {}",
                e.trace, e.label
            )));
        }
        count += report.entries.len();
    }
    Ok(format!("{count} traces over {} groups", data.len()))
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The nonzero traces with their predicted values: hooks for type A, the
/// two ladders `(λ, ∅)` and `(∅, λ)` over hooks `λ` for type B, and for
/// type D the induced modules `((n-1-i, 1^i), (1))` (value `(-1)^{i+1}`)
/// and the restrictions of `(n)`, `(n-i-1, 2, 1^{i-1})`, `(1^n)`
/// (value `(-1)^i`).
pub fn predicted_nonzero(datum: &CoxeterDatum) -> Result<Vec<(IrrLabel, i64)>> {
    let n = datum.rank();
    let ones = |k: usize| Partition::new(vec![1; k]).unwrap();
    Ok(match datum.family() {
        CoxeterType::A => (0..=n)
            .map(|i| (IrrLabel::A(Partition::hook(n + 1, i)), sign(i)))
            .collect(),
        CoxeterType::B => (0..n)
            .flat_map(|i| {
                let hook = Partition::hook(n, i);
                [
                    (
                        IrrLabel::B(Bipartition::new(hook.clone(), Partition::empty())),
                        sign(i),
                    ),
                    (
                        IrrLabel::B(Bipartition::new(Partition::empty(), hook)),
                        -sign(i),
                    ),
                ]
            })
            .collect(),
        CoxeterType::D => {
            let mut out = Vec::new();
            for i in 0..=n - 2 {
                let induced = Bipartition::new(Partition::hook(n - 1, i), ones(1));
                out.push((IrrLabel::D(DLabel::new(induced, None)?), -sign(i)));
                let lam = match i {
                    0 => Partition::hook(n, 0),
                    i if i == n - 2 => ones(n),
                    i => {
                        let mut parts = vec![n - i - 1, 2];
                        parts.extend(vec![1; i - 1]);
                        Partition::from_unsorted(parts)
                    }
                };
                out.push((
                    IrrLabel::D(DLabel::new(
                        Bipartition::new(lam, Partition::empty()),
                        None,
                    )?),
                    sign(i),
                ));
            }
            out
        }
        other => {
            return Err(Error::Capability(format!(
                "no ladder prediction for {other}"
            )))
        }
    })
}

/// Exactly `h` nonzero traces, equal to the predicted ladders, and
/// `Σ tr² = h`.
pub fn count_and_sign_laws(data: &[CoxeterDatum]) -> Result<String> {
    for d in data {
        let report = trace_report(d)?;
        report
            .check()
            .map_err(|e| Error::Verification(format!("{d}: {e}")))?;
        let mut got: Vec<(IrrLabel, i64)> = report
            .entries
            .iter()
            .filter(|e| e.trace != 0)
            .map(|e| (e.label.clone(), e.trace))
            .collect();
        let mut want = predicted_nonzero(d)?;
        got.sort();
        want.sort();
        if got != want {
            return Err(Error::Verification(format!(
                "{d}: nonzero traces differ from the predicted ladders"
            )));
        }
    }
    Ok(format!("{} groups", data.len()))
}

/// Cell counts, family-group sequences and `p_i` for computed and stored
/// types, plus special-member membership for the classical ones.
pub fn cell_laws(data: &[CoxeterDatum]) -> Result<String> {
    let mut cells = 0;
    for d in data {
        let dec = cell_decomposition(d)?;
        dec.check()
            .map_err(|e| Error::Verification(format!("{d}: {e}")))?;
        for c in &dec.cells {
            let i = c
                .index
                .ladder_index()
                .expect("classical cells are ladder cells");
            let gamma = c.gamma.expect("classical cells know their family group");
            let want =
                expected_membership(gamma, d.family().is_simply_laced()).ok_or_else(|| {
                    Error::Verification(format!("{d}: unexpected family group {gamma}"))
                })?;
            let got = special_membership(d, CellIndex::ladder(i))?;
            if got != want {
                return Err(Error::Verification(format!(
                    "{d}: c{i} membership {got:?}, expected {want:?}"
                )));
            }
            cells += 1;
        }
    }
    for f in [
        CoxeterType::E6,
        CoxeterType::E7,
        CoxeterType::E8,
        CoxeterType::F4,
        CoxeterType::G2,
    ] {
        let dec = tables::cell_decomposition(f)?;
        dec.check()
            .map_err(|e| Error::Verification(format!("{f}: {e}")))?;
        cells += dec.cells.len();
    }
    Ok(format!("{cells} cells"))
}

pub const GOLDEN_B4: &str = include_str!("../data/golden/B4.json");
pub const GOLDEN_D5: &str = include_str!("../data/golden/D5.json");

/// `(cell, label, sign)` triples of a decomposition JSON, sorted.
pub fn epsilon_triples(value: &serde_json::Value) -> Result<Vec<(String, String, String)>> {
    let bad = || Error::Parse("cell JSON lacks cells/epsilon".into());
    let mut out = Vec::new();
    for cell in value["cells"].as_array().ok_or_else(bad)? {
        for t in cell["epsilon"].as_array().ok_or_else(bad)? {
            out.push((
                cell["index"].to_string(),
                t["label"].to_string(),
                t["sign"].to_string(),
            ));
        }
    }
    out.sort();
    Ok(out)
}

/// The computed ε-lists of `B4` and `D5` agree term by term with the
/// stored golden tables.
pub fn golden_tables() -> Result<String> {
    for (datum, golden) in [
        (CoxeterDatum::b(4), GOLDEN_B4),
        (CoxeterDatum::d(5), GOLDEN_D5),
    ] {
        let golden: serde_json::Value =
            serde_json::from_str(golden).map_err(|e| Error::Parse(e.to_string()))?;
        let want = epsilon_triples(&golden)?;
        let got = epsilon_triples(&cell_decomposition(&datum)?.to_json())?;
        if got != want {
            return Err(Error::Verification(format!(
                "{datum}: computed cells {got:?} differ from golden {want:?}"
            )));
        }
    }
    Ok("B4, D5".into())
}

/// Monomial law, specialization, both exponent formulas and the power
/// identity for every `λ ⊢ n`, `2 <= n <= max_n`.
pub fn hecke_type_a(max_n: usize) -> Result<String> {
    let mut models = 0;
    for n in 2..=max_n {
        let order: Vec<usize> = (1..n).collect();
        for lam in Partition::all(n) {
            let model = seminormal_model(n, &lam)?;
            let rec = hecke_coxeter_trace(&model, &order)?;
            if rec.trace_poly.support_len() > 1 {
                return Err(Error::Verification(format!(
                    "{lam}: trace is not a monomial"
                )));
            }
            if !power_identity_check(&model)? {
                return Err(Error::Verification(format!(
                    "{lam}: T_w^h differs from T_w0^2"
                )));
            }
            models += 1;
        }
    }
    Ok(format!("{models} seminormal models"))
}

/// Every module of `I2(m)`, `3 <= m <= max_m`: relations, monomial trace
/// with coefficient the ordinary trace.
pub fn hecke_dihedral(max_m: u32) -> Result<String> {
    let mut models = 0;
    for m in 3..=max_m {
        for label in noncrystal::labels(m)? {
            let rec = dihedral_module_trace(m, &label)?;
            if rec.trace_poly.support_len() > 1 {
                return Err(Error::Verification(format!(
                    "I2({m}) {label}: not a monomial"
                )));
            }
            if let DihedralLabel::Two(j) = label {
                let want = Cyclotomic::zeta_pow(m, j as i64) + Cyclotomic::zeta_pow(m, -(j as i64));
                if rec.trace_at_1 != want {
                    return Err(Error::Verification(format!("I2({m}) 2_{j}: coefficient")));
                }
            }
            models += 1;
        }
    }
    Ok(format!("{models} dihedral modules"))
}

/// The middle dihedral cell written out from the closed form: `2_j` with
/// `ζ^j + ζ^{m-j}` for `1 <= j < m/2`, then `-1_p - 1'_p` when `m = 2p`.
pub fn dihedral_expected_middle(m: u32) -> Vec<(DihedralLabel, Cyclotomic)> {
    let mut out = Vec::new();
    let top = if m % 2 == 1 { (m - 1) / 2 } else { m / 2 - 1 };
    for j in 1..=top {
        let c = Cyclotomic::zeta_pow(m, j as i64) + Cyclotomic::zeta_pow(m, (m - j) as i64);
        out.push((DihedralLabel::Two(j), c));
    }
    if m % 2 == 0 {
        for prime in [false, true] {
            out.push((
                DihedralLabel::One { b: m / 2, prime },
                Cyclotomic::from_int(-1),
            ));
        }
    }
    out
}

/// Dihedral cells against the closed-form lists, orthogonality, the
/// expected failure of integrality, and the coincidences at `m = 3, 4, 6`.
pub fn dihedral_laws(max_m: u32) -> Result<String> {
    for m in 3..=max_m {
        let dec = noncrystal::dihedral_cell_decomposition(m)?;
        dec.check()?;
        let terms = |i: usize| -> Vec<(IrrLabel, Cyclotomic)> {
            dec.cell(CellIndex::ladder(i))
                .map(|c| {
                    c.epsilon
                        .iter()
                        .map(|t| (t.label.clone(), t.coeff.to_cyclotomic()))
                        .collect()
                })
                .unwrap_or_default()
        };
        let one = Cyclotomic::from_int(1);
        let want_middle: Vec<(IrrLabel, Cyclotomic)> = dihedral_expected_middle(m)
            .into_iter()
            .map(|(l, c)| (IrrLabel::Dihedral(l), c))
            .collect();
        if terms(0) != vec![(IrrLabel::Dihedral(DihedralLabel::one(0)), one.clone())]
            || terms(2) != vec![(IrrLabel::Dihedral(DihedralLabel::one(m)), one)]
            || terms(1) != want_middle
        {
            return Err(Error::Verification(format!(
                "I2({m}): cells differ from the closed form"
            )));
        }
        if m % 4 == 0 {
            let zero_term = terms(1)
                .into_iter()
                .find(|(l, _)| *l == IrrLabel::Dihedral(DihedralLabel::Two(m / 4)));
            if !zero_term.is_some_and(|(_, c)| num_traits::Zero::is_zero(&c)) {
                return Err(Error::Verification(format!(
                    "I2({m}): 2_{} should vanish",
                    m / 4
                )));
            }
        }
        if noncrystal::dihedral_square_sum(m)? != Cyclotomic::from_int(m as i64) {
            return Err(Error::Verification(format!("I2({m}): Σ tr² ≠ m")));
        }
        if noncrystal::macdonald_fails(m)? == [3, 4, 6].contains(&m) {
            return Err(Error::Verification(format!("I2({m}): integrality pattern")));
        }
    }
    for m in [3, 4, 6] {
        noncrystal::crystallographic_check(m)?;
    }
    Ok(format!("I2(3)..I2({max_m})"))
}

/// Wedge powers (rank <= 5), orthogonality (n <= 4), centralizers
/// (rank <= `max_rank`, capped by enumeration), the split-half witness and
/// symmetric-power `b`-values.
pub fn oracles(max_rank: usize) -> Result<String> {
    let wedge = max_rank.min(oracle::WEDGE_RANK_LIMIT);
    for d in classical_data(wedge, wedge, wedge) {
        oracle::wedge_power_check(&d)?;
    }
    for n in 1..=4 {
        for f in [CoxeterType::A, CoxeterType::B, CoxeterType::D] {
            oracle::orthogonality_check(f, n)?;
        }
    }
    let cent = max_rank.min(ENUMERATION_RANK_LIMIT);
    let mut centralizers = 0;
    for d in classical_data(cent, cent, cent) {
        let c = oracle::coxeter_centralizer(&d)?;
        if c != d.coxeter_number() {
            return Err(Error::Verification(format!(
                "{d}: centralizer order {c} ≠ h"
            )));
        }
        centralizers += 1;
    }
    oracle::split_swap_witness(4)?;
    for d in [CoxeterDatum::a(3), CoxeterDatum::b(3), CoxeterDatum::d(4)] {
        oracle::b_value_check(&d)?;
    }
    Ok(format!(
        "wedge ranks <= {wedge}, {centralizers} centralizers"
    ))
}

/// A uniformly random ordering of the generators.
pub fn random_order<R: Rng>(datum: &CoxeterDatum, rng: &mut R) -> Vec<usize> {
    let mut order = datum.natural_order();
    order.shuffle(rng);
    order
}

/// Traces do not depend on the order of the generators: every random
/// Coxeter element lies in the standard class and reproduces every trace;
/// the Hecke trace polynomials of type A agree across orders.
pub fn word_independence(data: &[CoxeterDatum], orders: usize, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for d in data {
        let report = trace_report(d)?;
        let class = coxeter_class(d)?;
        for _ in 0..orders {
            let order = random_order(d, &mut rng);
            let w = d.coxeter_element(&order)?;
            if w.cycle_type() != class {
                return Err(Error::Verification(format!(
                    "{d}: order {order:?} gives class {}",
                    w.cycle_type()
                )));
            }
            // class functions are evaluated at the element itself
            for e in report.entries.iter().step_by(1 + report.entries.len() / 16) {
                if character_of_element(d, &e.label, &w)? != e.trace {
                    return Err(Error::Verification(format!(
                        "{d}: {} depends on the order",
                        e.label
                    )));
                }
            }
        }
    }
    for n in 3..=5 {
        let datum = CoxeterDatum::a(n - 1);
        for lam in Partition::all(n) {
            let model = seminormal_model(n, &lam)?;
            let base = hecke_coxeter_trace(&model, &datum.natural_order())?;
            for _ in 0..orders.max(10) {
                let order = random_order(&datum, &mut rng);
                let rec = hecke_coxeter_trace(&model, &order)?;
                if rec.trace_poly != base.trace_poly {
                    return Err(Error::Verification(format!(
                        "{lam}: Hecke trace depends on the order {order:?}"
                    )));
                }
            }
        }
    }
    Ok(format!("{orders} orders per group"))
}

/// Normalizing a symbol is idempotent and undoes shifts.
pub fn normalization(samples: usize, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let n = rng.gen_range(1..=8);
        let all = Bipartition::all(n);
        let bp = &all[rng.gen_range(0..all.len())];
        for kind in [SymbolType::B, SymbolType::D] {
            let s: Symbol = Symbol::from_bipartition(bp, kind);
            let k = rng.gen_range(0..4);
            if s.normalize() != s || s.shift(k).normalize() != s {
                return Err(Error::Verification(format!("symbol {s} is not stable")));
            }
        }
    }
    Ok(format!("{samples} samples"))
}

/// Relations on every seminormal model with `n <= max_n` and every
/// dihedral module with `m <= max_m`.
pub fn hecke_relations(max_n: usize, max_m: u32) -> Result<String> {
    let mut count = 0;
    for n in 2..=max_n {
        for lam in Partition::all(n) {
            seminormal_model(n, &lam)?.verify_relations()?;
            count += 1;
        }
    }
    for m in 3..=max_m {
        for label in noncrystal::labels(m)? {
            dihedral_model(m, &label)?.verify_relations()?;
            count += 1;
        }
    }
    Ok(format!("{count} models"))
}

/// Checksums and all clauses for the stored tables.
pub fn stored_tables() -> Result<String> {
    let mut notes = 0;
    for f in [
        CoxeterType::E6,
        CoxeterType::E7,
        CoxeterType::E8,
        CoxeterType::F4,
        CoxeterType::G2,
    ] {
        notes += tables::verify_exceptional(f)?.notes.len();
        tables::cell_exponents(f)?;
    }
    for (f, h) in [(CoxeterType::H3, 10), (CoxeterType::H4, 30)] {
        let r = noncrystal::h_type_verify(f)?;
        if r.square_sum != Cyclotomic::from_int(h) {
            return Err(Error::Verification(format!(
                "{f}: Σ tr² = {}",
                r.square_sum
            )));
        }
    }
    Ok(format!(
        "7 tables, {notes} displayed identities with a misprinted total"
    ))
}

/// Runs everything.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let r = cfg.max_rank;
    let data = classical_data(r + 2, r, r);
    let mut report = SuiteReport::default();
    report.run("traces in {-1, 0, 1}", || macdonald(&data));
    report.run("count and sign laws", || count_and_sign_laws(&data));
    report.run("golden tables", golden_tables);
    report.run("cells, family groups and p_i", || cell_laws(&data));
    report.run("hecke type A", || hecke_type_a((r + 1).min(6)));
    report.run("hecke dihedral", || hecke_dihedral(12));
    report.run("dihedral cells", || dihedral_laws(24));
    report.run("oracles", || oracles(r));
    let small = classical_data(r.min(6), r.min(6), r.min(6));
    report.run("word independence", || {
        word_independence(&small, cfg.random_orders, cfg.seed)
    });
    report.run("symbol normalization", || normalization(200, cfg.seed));
    report.run("hecke relations", || hecke_relations((r + 1).min(6), 12));
    report.run("stored tables", stored_tables);
    report
}
