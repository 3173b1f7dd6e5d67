//! Noncrystallographic groups: dihedral groups in closed form, `H3` and
//! `H4` from stored data.

use std::fmt;

use num_traits::Zero;

use crate::characters::{
    cell_decomposition, Cell, CellDecomposition, CellIndex, Coefficient, EpsilonTerm,
};
use crate::error::{Error, Result};
use crate::exactnum::Cyclotomic;
use crate::groups::{CoxeterDatum, CoxeterType};
use crate::label::IrrLabel;
use crate::tables;

/// Irreducible representation of the dihedral group of order `2m`:
/// one-dimensional `1_b` (`b = 0` trivial, `b = m` sign, `b = m/2` the two
/// extra characters for even `m`, the second primed) or two-dimensional
/// `2_j`, `1 <= j < m/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralLabel {
    One { b: u32, prime: bool },
    Two(u32),
}

impl DihedralLabel {
    pub fn one(b: u32) -> Self {
        DihedralLabel::One { b, prime: false }
    }

    pub fn validate(&self, m: u32) -> Result<()> {
        if m < 3 {
            return Err(Error::InvalidInput(format!(
                "dihedral groups need m >= 3, got {m}"
            )));
        }
        let ok = match *self {
            DihedralLabel::One { b, prime } => {
                (!prime && (b == 0 || b == m)) || (m % 2 == 0 && b == m / 2)
            }
            DihedralLabel::Two(j) => j >= 1 && 2 * j < m,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!(
                "{self} is not a label of I2({m})"
            )))
        }
    }

    /// 0 for the trivial representation, 2 for the sign, 1 otherwise.
    pub fn cell_index(&self, m: u32) -> usize {
        match *self {
            DihedralLabel::One { b: 0, .. } => 0,
            DihedralLabel::One { b, .. } if b == m => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for DihedralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DihedralLabel::One { b, prime: false } => write!(f, "1_{b}"),
            DihedralLabel::One { b, prime: true } => write!(f, "1'_{b}"),
            DihedralLabel::Two(j) => write!(f, "2_{j}"),
        }
    }
}

/// All irreducibles of `I2(m)` in display order: `1_0`, `2_1, ...`, then
/// `1_p, 1'_p` for `m = 2p`, then the sign.
pub fn labels(m: u32) -> Result<Vec<DihedralLabel>> {
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "dihedral groups need m >= 3, got {m}"
        )));
    }
    let mut out = vec![DihedralLabel::one(0)];
    out.extend((1..).take_while(|j| 2 * j < m).map(DihedralLabel::Two));
    if m % 2 == 0 {
        out.push(DihedralLabel::One {
            b: m / 2,
            prime: false,
        });
        out.push(DihedralLabel::One {
            b: m / 2,
            prime: true,
        });
    }
    out.push(DihedralLabel::one(m));
    Ok(out)
}

/// Trace of the rotation `s1 s2` by `2π/m`.
pub fn dihedral_coxeter_trace(m: u32, label: &DihedralLabel) -> Result<Cyclotomic> {
    label.validate(m)?;
    Ok(match *label {
        DihedralLabel::Two(j) => {
            Cyclotomic::zeta_pow(m, j as i64) + Cyclotomic::zeta_pow(m, -(j as i64))
        }
        DihedralLabel::One { b, .. } if b == 0 || b == m => Cyclotomic::from_int(1),
        DihedralLabel::One { .. } => Cyclotomic::from_int(-1),
    })
}

/// Three cells: the trivial representation, everything of dimension two
/// together with `1_p, 1'_p`, and the sign. Zero coefficients are kept
/// in the list (they are filtered on output).
pub fn dihedral_cell_decomposition(m: u32) -> Result<CellDecomposition> {
    let mut cells: Vec<Cell> = (0..3)
        .map(|i| Cell {
            index: CellIndex::ladder(i),
            gamma: None,
            members: Vec::new(),
            epsilon: Vec::new(),
            p: None,
            special: None,
        })
        .collect();
    for label in labels(m)? {
        let trace = dihedral_coxeter_trace(m, &label)?;
        let coeff = match trace.to_integer() {
            Some(n) => Coefficient::Int(n),
            None => Coefficient::Cyclotomic(trace),
        };
        let cell = &mut cells[label.cell_index(m)];
        let label = IrrLabel::Dihedral(label);
        cell.members.push(label.clone());
        cell.epsilon.push(EpsilonTerm {
            label,
            coeff,
            f: None,
        });
    }
    Ok(CellDecomposition {
        family: CoxeterType::I2(m),
        rank: 2,
        h: m as usize,
        cells,
        stray: Vec::new(),
    })
}

/// `Σ tr²` over all irreducibles of `I2(m)`, exactly.
pub fn dihedral_square_sum(m: u32) -> Result<Cyclotomic> {
    let mut acc = Cyclotomic::zero();
    for label in labels(m)? {
        let t = dihedral_coxeter_trace(m, &label)?;
        acc = acc + t.clone() * t;
    }
    Ok(acc)
}

/// Whether some trace lies outside `{0, 1, -1}`.
pub fn macdonald_fails(m: u32) -> Result<bool> {
    for label in labels(m)? {
        let t = dihedral_coxeter_trace(m, &label)?;
        if !matches!(t.to_integer(), Some(-1..=1)) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn cell_values(cell: &Cell) -> Vec<Cyclotomic> {
    cell.epsilon
        .iter()
        .map(|t| t.coeff.to_cyclotomic())
        .filter(|c| !c.is_zero())
        .collect()
}

fn integer_values(values: &[Cyclotomic]) -> Option<Vec<i64>> {
    let mut v: Vec<i64> = values
        .iter()
        .map(Cyclotomic::to_integer)
        .collect::<Option<_>>()?;
    v.sort_unstable();
    Some(v)
}

/// For `m = 3, 4, 6`, compares the dihedral cells with those of `A2`, `B2`
/// and `G2`, cell by cell: the multisets of nonzero traces must agree (up
/// to one global sign per cell for `G2`, whose stored middle cell carries
/// the opposite signs).
pub fn crystallographic_check(m: u32) -> Result<()> {
    let (other, up_to_sign) = match m {
        3 => (CoxeterDatum::a(2), false),
        4 => (CoxeterDatum::b(2), false),
        6 => (CoxeterDatum::new(CoxeterType::G2, 2)?, true),
        _ => {
            return Err(Error::InvalidInput(format!(
                "I2({m}) is not a Weyl group of rank two"
            )))
        }
    };
    let dihedral = dihedral_cell_decomposition(m)?;
    let weyl = cell_decomposition(&other)?;
    for (a, b) in dihedral.cells.iter().zip(&weyl.cells) {
        let (va, vb) = (cell_values(a), cell_values(b));
        let (Some(ia), Some(ib)) = (integer_values(&va), integer_values(&vb)) else {
            return Err(Error::Verification(format!(
                "I2({m}) cell c{}: non-integral trace at a crystallographic m",
                a.index
            )));
        };
        let negated = {
            let mut v: Vec<i64> = ib.iter().map(|x| -x).collect();
            v.sort_unstable();
            v
        };
        if ia != ib && !(up_to_sign && ia == negated) {
            return Err(Error::Verification(format!(
                "I2({m}) cell c{} has traces {ia:?}, {other} has {ib:?}",
                a.index
            )));
        }
    }
    if dihedral.cells.len() != weyl.cells.len() {
        return Err(Error::Verification(format!(
            "I2({m}) and {other} have different cell counts"
        )));
    }
    Ok(())
}

/// Stored cells of `H3` or `H4`.
pub fn h_cell_decomposition(family: CoxeterType) -> Result<CellDecomposition> {
    match family {
        CoxeterType::H3 | CoxeterType::H4 => tables::cell_decomposition(family),
        other => Err(Error::InvalidInput(format!("{other} is not of type H"))),
    }
}

/// Outcome of the `H3`/`H4` checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTypeReport {
    pub family: CoxeterType,
    pub h: usize,
    pub square_sum: Cyclotomic,
    pub exceptional_cells: Vec<CellIndex>,
    pub terms_per_cell: Vec<(CellIndex, usize)>,
}

/// Checksum, `Σ tr² = h` in exact arithmetic, real traces, every ladder
/// cell `c_0, ..., c_r` nonempty, and the exceptional cells: one (`c^{3/2}`)
/// for `H3`, two (`c^{3/2}, c^{5/2}`) for `H4`, each with two terms.
pub fn h_type_verify(family: CoxeterType) -> Result<HTypeReport> {
    let dec = h_cell_decomposition(family)?;
    let datum = CoxeterDatum::new(family, dec.rank)?;
    let fail = |msg: String| Err(Error::DataIntegrity(format!("{family}: {msg}")));
    let mut square_sum = Cyclotomic::zero();
    for cell in &dec.cells {
        for t in &cell.epsilon {
            let c = t.coeff.to_cyclotomic();
            if !c.is_real() {
                return fail(format!("trace on {} is not real", t.label));
            }
            square_sum = square_sum + c.clone() * c;
        }
    }
    if square_sum != Cyclotomic::from_int(datum.coxeter_number() as i64) {
        return fail(format!(
            "sum of squared traces is {square_sum}, expected h = {}",
            datum.coxeter_number()
        ));
    }
    for i in 0..=dec.rank {
        if dec.cell(CellIndex::ladder(i)).map_or(0, Cell::n_c) == 0 {
            return fail(format!("cell c{i} is empty"));
        }
    }
    let exceptional: Vec<CellIndex> = dec
        .cells
        .iter()
        .map(|c| c.index)
        .filter(|c| !c.is_ladder())
        .collect();
    let want = match family {
        CoxeterType::H3 => vec![CellIndex::half(3)],
        _ => vec![CellIndex::half(3), CellIndex::half(5)],
    };
    if exceptional != want {
        return fail(format!(
            "exceptional cells {exceptional:?}, expected {want:?}"
        ));
    }
    for c in exceptional.iter().filter_map(|&i| dec.cell(i)) {
        if c.n_c() != 2 {
            return fail(format!(
                "exceptional cell c{} has {} terms",
                c.index,
                c.n_c()
            ));
        }
    }
    Ok(HTypeReport {
        family,
        h: dec.h,
        square_sum,
        exceptional_cells: exceptional,
        terms_per_cell: dec.cells.iter().map(|c| (c.index, c.n_c())).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_counts() {
        for m in 3..=24u32 {
            let want = if m % 2 == 0 { (m + 6) / 2 } else { (m + 3) / 2 };
            assert_eq!(labels(m).unwrap().len(), want as usize, "m = {m}");
        }
        assert!(labels(2).is_err());
        assert!(DihedralLabel::One { b: 2, prime: true }
            .validate(5)
            .is_err());
        assert!(DihedralLabel::Two(2).validate(4).is_err());
    }

    #[test]
    fn closed_form_values() {
        let t = dihedral_coxeter_trace(7, &DihedralLabel::Two(2)).unwrap();
        assert_eq!(t, Cyclotomic::zeta_pow(7, 2) + Cyclotomic::zeta_pow(7, 5));
        let t = dihedral_coxeter_trace(8, &DihedralLabel::Two(2)).unwrap();
        assert!(t.is_zero());
        for prime in [false, true] {
            let t = dihedral_coxeter_trace(10, &DihedralLabel::One { b: 5, prime }).unwrap();
            assert_eq!(t, Cyclotomic::from_int(-1));
        }
    }

    #[test]
    fn squares_sum_to_m() {
        for m in 3..=24u32 {
            assert_eq!(
                dihedral_square_sum(m).unwrap(),
                Cyclotomic::from_int(m as i64)
            );
            assert_eq!(
                macdonald_fails(m).unwrap(),
                ![3, 4, 6].contains(&m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn middle_cell_of_i2_4() {
        let dec = dihedral_cell_decomposition(4).unwrap();
        assert_eq!(dec.to_text(), "c0: 1_0\nc1: -1_2 - 1'_2\nc2: 1_4\n");
    }

    #[test]
    fn middle_cell_of_i2_7() {
        let dec = dihedral_cell_decomposition(7).unwrap();
        assert_eq!(
            dec.to_text().lines().nth(1).unwrap(),
            "c1: (z7 + z7^6)2_1 + (z7^2 + z7^5)2_2 + (z7^3 + z7^4)2_3"
        );
    }

    #[test]
    fn crystallographic_coincidence() {
        for m in [3, 4, 6] {
            crystallographic_check(m).unwrap();
        }
        assert!(crystallographic_check(5).is_err());
    }

    #[test]
    fn h_types() {
        let r3 = h_type_verify(CoxeterType::H3).unwrap();
        assert_eq!(r3.square_sum, Cyclotomic::from_int(10));
        assert_eq!(r3.exceptional_cells, vec![CellIndex::half(3)]);
        let r4 = h_type_verify(CoxeterType::H4).unwrap();
        assert_eq!(r4.square_sum, Cyclotomic::from_int(30));
        let c2 = r4
            .terms_per_cell
            .iter()
            .find(|(c, _)| *c == CellIndex::ladder(2))
            .unwrap();
        assert_eq!(c2.1, 14);
    }
}
