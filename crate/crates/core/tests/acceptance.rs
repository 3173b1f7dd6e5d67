//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines come out in order and unbuffered.

use std::process::ExitCode;
use std::time::Instant;

use coxtrace::characters::{cell_decomposition, expected_n_c, expected_p};
use coxtrace::error::{Error, Result};
use coxtrace::exactnum::rational_to_i64;
use coxtrace::groups::CoxeterType;
use coxtrace::tables;
use coxtrace::verify::{self, classical_data};

const EXCEPTIONAL: [CoxeterType; 5] = [
    CoxeterType::E6,
    CoxeterType::E7,
    CoxeterType::E8,
    CoxeterType::F4,
    CoxeterType::G2,
];

fn fail(msg: String) -> Error {
    Error::Verification(msg)
}

/// A1..A10, B1..B8, D4..D8.
fn classical() -> Vec<coxtrace::groups::CoxeterDatum> {
    classical_data(10, 8, 8)
}

fn macdonald() -> Result<String> {
    verify::macdonald(&classical())
}

fn count_and_sign() -> Result<String> {
    verify::count_and_sign_laws(&classical())
}

fn golden() -> Result<String> {
    verify::golden_tables()
}

fn cell_counts() -> Result<String> {
    let mut cells = 0;
    for d in classical() {
        let dec = cell_decomposition(&d)?;
        if !dec.stray.is_empty() {
            return Err(fail(format!("{d}: nonzero traces outside every c_i")));
        }
        for c in &dec.cells {
            let gamma = c
                .gamma
                .ok_or_else(|| fail(format!("{d}: cell without family group")))?;
            let n_c = c.epsilon.iter().filter(|t| !t.coeff.is_zero()).count();
            if Some(n_c) != expected_n_c(gamma) || !(1..=2).contains(&n_c) {
                return Err(fail(format!(
                    "{d}: c{} has {n_c} terms for {gamma}",
                    c.index
                )));
            }
            cells += 1;
        }
    }
    for f in EXCEPTIONAL {
        let rec = tables::load(f)?;
        let gamma = rec
            .gamma
            .clone()
            .ok_or_else(|| fail(format!("{f}: no family groups")))?;
        let by_cell = rec.cells();
        for (index, terms) in &by_cell {
            let want = match index.ladder_index() {
                Some(i) => expected_n_c(gamma[i]),
                None => Some(2),
            };
            if Some(terms.len()) != want {
                return Err(fail(format!("{f}: c{index} has {} terms", terms.len())));
            }
            cells += 1;
        }
        // cells outside the ladder and the exceptional list carry nothing
        let listed = by_cell.len();
        let expected = gamma.len() + rec.exceptional_cells.len();
        if listed != expected {
            return Err(fail(format!(
                "{f}: {listed} nonempty cells, expected {expected}"
            )));
        }
    }
    Ok(format!("{cells} cells"))
}

fn integrality() -> Result<String> {
    let mut checked = 0;
    for d in classical() {
        let dec = cell_decomposition(&d)?;
        let simply_laced = d.family().is_simply_laced();
        for c in &dec.cells {
            let i = c
                .index
                .ladder_index()
                .expect("classical cells are ladder cells");
            let p =
                c.p.as_ref()
                    .ok_or_else(|| fail(format!("{d}: c{i} has no p")))?;
            let p = rational_to_i64(p)
                .ok_or_else(|| fail(format!("{d}: p_{i} = {p} is not an integer")))?;
            let want = expected_p(c.gamma.unwrap(), simply_laced, i);
            if Some(p) != want {
                return Err(fail(format!("{d}: p_{i} = {p}, expected {want:?}")));
            }
            checked += 1;
        }
    }
    for f in EXCEPTIONAL {
        let report = tables::verify_exceptional(f)?;
        let gamma = tables::load(f)?.gamma.unwrap();
        for &(i, p) in &report.p_values {
            if Some(p) != expected_p(gamma[i], f.is_simply_laced(), i) {
                return Err(fail(format!("{f}: p_{i} = {p}")));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} cells"))
}

fn hecke() -> Result<String> {
    let a = verify::hecke_type_a(6)?;
    let i2 = verify::hecke_dihedral(12)?;
    Ok(format!("{a}; {i2}"))
}

fn dihedral() -> Result<String> {
    verify::dihedral_laws(24)
}

fn oracles() -> Result<String> {
    verify::oracles(6)
}

fn properties() -> Result<String> {
    let data = classical_data(6, 6, 6);
    let words = verify::word_independence(&data, 20, 2024)?;
    let norm = verify::normalization(500, 2024)?;
    let rel = verify::hecke_relations(6, 12)?;
    let tab = verify::stored_tables()?;
    Ok(format!("{words}; {norm}; {rel}; {tab}"))
}

type Criterion = (&'static str, fn() -> Result<String>);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 traces lie in {-1, 0, 1}", macdonald),
        ("2 nonzero-trace counts and sign ladders", count_and_sign),
        ("3 golden cell tables B4, D5", golden),
        ("4 nonzero terms per cell", cell_counts),
        ("5 integrality of p_i", integrality),
        ("6 Hecke monomial law", hecke),
        ("7 dihedral closed forms", dihedral),
        ("8 independent oracles", oracles),
        ("9 property suites", properties),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name} ({detail}; {:.1?})", t.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    println!(
        "{} of 9 criteria passed in {:.1?}",
        9 - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
