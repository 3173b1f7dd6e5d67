//! Iwahori–Hecke algebra modules with `T_s² = (v²-1) T_s + v²` and the
//! monomial law for traces of Coxeter elements.
//!
//! Matrices are written in `q = v²`; traces are converted back to Laurent
//! polynomials in `v` at the end.

mod matrix;
mod qfrac;

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::characters::character_of_element;
use crate::combinatorics::{standard_tableaux, Partition, StandardTableau};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Laurent, Poly, Rational, Ring};
use crate::groups::CoxeterDatum;
use crate::label::{a_value_of, twisted_a_value, IrrLabel};
use crate::noncrystal::DihedralLabel;

pub use matrix::Matrix;
pub use qfrac::QFraction;

/// Largest `n` for which seminormal models of `S_n` are built.
pub const SEMINORMAL_LIMIT: usize = 7;

/// Checks `T_i² = (q-1) T_i + q` and the braid relations of length
/// `coxeter(i, j)` for all pairs of generators.
pub fn check_relations<R: Ring>(
    gens: &[Matrix<R>],
    q: &R,
    coxeter: impl Fn(usize, usize) -> u32,
) -> Result<()> {
    let Some(first) = gens.first() else {
        return Ok(());
    };
    let n = first.dim();
    let id = Matrix::identity(n);
    let q_minus_one = q.clone() - R::one();
    for (i, t) in gens.iter().enumerate() {
        let lhs = t.mul(t);
        let rhs = t.scale(&q_minus_one).add(&id.scale(q));
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "quadratic relation fails for T{}",
                i + 1
            )));
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let m = coxeter(i + 1, j + 1) as usize;
            let alt = |a: &Matrix<R>, b: &Matrix<R>| {
                Matrix::product(n, (0..m).map(|k| if k % 2 == 0 { a } else { b }))
            };
            if alt(&gens[i], &gens[j]) != alt(&gens[j], &gens[i]) {
                return Err(Error::Consistency(format!(
                    "braid relation of length {m} fails for T{} and T{}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Module of the type A Hecke algebra attached to a partition, in Young's
/// seminormal form (basis: standard tableaux).
#[derive(Clone, Debug)]
pub struct HeckeModuleModel {
    datum: CoxeterDatum,
    label: IrrLabel,
    generators: Vec<Matrix<QFraction>>,
}

fn q() -> QFraction {
    QFraction::q_pow(1)
}

/// Diagonal entry for axial distance `d`: `(q-1) q^d / (q^d - 1)`; this is
/// `q` for `d = 1` and `-1` for `d = -1`.
fn diagonal_entry(d: i64) -> QFraction {
    let e = d.unsigned_abs() as usize;
    let q_minus_one = q() - QFraction::one();
    if d > 0 {
        q_minus_one * QFraction::q_pow(e) * QFraction::recip_q_pow_minus_one(e)
    } else {
        // (q-1) q^-e / (q^-e - 1) = -(q-1) / (q^e - 1)
        -(q_minus_one * QFraction::recip_q_pow_minus_one(e))
    }
}

impl HeckeModuleModel {
    pub fn datum(&self) -> &CoxeterDatum {
        &self.datum
    }

    pub fn label(&self) -> &IrrLabel {
        &self.label
    }

    pub fn dimension(&self) -> usize {
        self.generators.first().map_or(1, Matrix::dim)
    }

    pub fn generators(&self) -> &[Matrix<QFraction>] {
        &self.generators
    }

    pub fn verify_relations(&self) -> Result<()> {
        check_relations(&self.generators, &q(), |i, j| {
            self.datum.coxeter_matrix_entry(i, j)
        })
    }

    /// `T_y` for the element with the given word.
    pub fn word_matrix(&self, word: &[usize]) -> Matrix<QFraction> {
        Matrix::product(
            self.dimension(),
            word.iter().map(|&i| &self.generators[i - 1]),
        )
    }
}

/// Seminormal model of the `S_n`-module `lambda`; both defining relations
/// are verified before the model is returned.
pub fn seminormal_model(n: usize, lambda: &Partition) -> Result<HeckeModuleModel> {
    if n > SEMINORMAL_LIMIT {
        return Err(Error::Capability(format!(
            "seminormal models are limited to n <= {SEMINORMAL_LIMIT}"
        )));
    }
    if n < 2 || lambda.size() != n {
        return Err(Error::InvalidInput(format!(
            "{lambda} is not a partition of n = {n} >= 2"
        )));
    }
    let tableaux = standard_tableaux(lambda);
    let index = |t: &StandardTableau| tableaux.iter().position(|s| s == t).unwrap();
    let dim = tableaux.len();
    let mut generators = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut m = Matrix::zero(dim);
        for (col, t) in tableaux.iter().enumerate() {
            let d = t.content(i + 1) - t.content(i);
            m.set(col, col, diagonal_entry(d));
            if let Some(s) = t.swap(i) {
                let row = index(&s);
                // the two off-diagonal entries of the 2x2 block multiply to
                // q + a(d) a(-d); the factor 1 sits on the side with d > 0
                let entry = if d > 0 {
                    QFraction::one()
                } else {
                    q() + diagonal_entry(d) * diagonal_entry(-d)
                };
                m.set(row, col, entry);
            }
        }
        generators.push(m);
    }
    let model = HeckeModuleModel {
        datum: CoxeterDatum::a(n - 1),
        label: IrrLabel::A(lambda.clone()),
        generators,
    };
    model.verify_relations()?;
    Ok(model)
}

/// Trace of `T_w` on one module, with the exponent data it must satisfy.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeTraceRecord {
    pub label: String,
    pub trace_poly: Laurent<Cyclotomic>,
    pub m: Option<i64>,
    pub trace_at_1: Cyclotomic,
}

impl HeckeTraceRecord {
    pub fn to_json(&self) -> Value {
        let mut poly = Map::new();
        for (e, c) in self.trace_poly.terms() {
            poly.insert(e.to_string(), cyclotomic_json(c));
        }
        json!({
            "label": self.label,
            "trace_poly": Value::Object(poly),
            "m": self.m,
            "trace_at_1": cyclotomic_json(&self.trace_at_1),
        })
    }

    fn from_laurent(label: String, trace_poly: Laurent<Cyclotomic>) -> Result<Self> {
        let (coeff, exp) = trace_poly
            .as_monomial()
            .ok_or_else(|| Error::Verification(format!("trace on {label} is not a monomial")))?;
        let trace_at_1 = trace_poly.eval_at_one();
        debug_assert!(exp.is_none() || coeff == trace_at_1);
        Ok(HeckeTraceRecord {
            label,
            trace_poly,
            m: exp,
            trace_at_1,
        })
    }
}

fn cyclotomic_json(c: &Cyclotomic) -> Value {
    match c.to_integer() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

fn rational_laurent_to_cyclotomic(p: &Laurent<Rational>) -> Laurent<Cyclotomic> {
    p.map(|c| Cyclotomic::from_rational(c.clone()))
}

/// Trace of `T_w` for the Coxeter element with the given word. Checks the
/// monomial law, the specialization `v = 1` against the character engine,
/// and both exponent formulas when the trace is nonzero.
pub fn hecke_coxeter_trace(model: &HeckeModuleModel, word: &[usize]) -> Result<HeckeTraceRecord> {
    let datum = model.datum();
    let w = datum.coxeter_element(word)?;
    let tr = model.word_matrix(word).trace();
    let poly = tr
        .to_poly()
        .map(|p| Laurent::from_poly(&p, 2))
        .ok_or_else(|| {
            Error::Verification(format!(
                "trace {tr:?} on {} is not a polynomial",
                model.label()
            ))
        })?;
    let rec = HeckeTraceRecord::from_laurent(
        model.label().to_string(),
        rational_laurent_to_cyclotomic(&poly),
    )?;
    let ordinary = character_of_element(datum, model.label(), &w)?;
    if rec.trace_at_1 != Cyclotomic::from_int(ordinary) {
        return Err(Error::Verification(format!(
            "trace at v = 1 is {}, ordinary trace is {ordinary} on {}",
            rec.trace_at_1,
            model.label()
        )));
    }
    if let Some(m) = rec.m {
        let (nu, h) = (datum.nu() as i64, datum.coxeter_number() as i64);
        let twice =
            2 * (nu - a_value_of(model.label())? as i64 + twisted_a_value(model.label())? as i64);
        if twice != h * m {
            return Err(Error::Verification(format!(
                "m = {m} but 2(ν - a + a!) = {twice} with h = {h} on {}",
                model.label()
            )));
        }
        let IrrLabel::A(lambda) = model.label() else {
            unreachable!()
        };
        if !lambda.is_hook() {
            return Err(Error::Verification(format!(
                "nonzero Hecke trace on the non-hook {lambda}"
            )));
        }
        let i = lambda.len() as i64 - 1;
        if m != 2 * datum.rank() as i64 - 2 * i {
            return Err(Error::Verification(format!(
                "m = {m} differs from 2r - 2i = {} on {lambda}",
                2 * datum.rank() as i64 - 2 * i
            )));
        }
    }
    Ok(rec)
}

/// `T_w^h = T_{w0}²` for the bipartite Coxeter element, and `T_{w0}²` is
/// the scalar `v^{2(ν - a_E + a_{E!})}`.
pub fn power_identity_check(model: &HeckeModuleModel) -> Result<bool> {
    let datum = model.datum();
    let bw = datum.balanced_coxeter_word()?;
    let tw = model.word_matrix(bw.word.letters());
    let w0 = datum.longest_element()?;
    let w0_word = datum.reduced_word(&w0)?;
    let t0 = model.word_matrix(w0_word.letters());
    let t0_sq = t0.mul(&t0);
    if tw.pow(bw.h) != t0_sq {
        return Ok(false);
    }
    let e = datum.nu() as i64 - a_value_of(model.label())? as i64
        + twisted_a_value(model.label())? as i64;
    if e < 0 {
        return Err(Error::Consistency(format!(
            "negative exponent {e} on {}",
            model.label()
        )));
    }
    // v^{2e} = q^e
    let scalar = QFraction::q_pow(e as usize);
    Ok(t0_sq == Matrix::scalar(model.dimension(), scalar))
}

/// Two-dimensional (or one-dimensional) module of the Hecke algebra of
/// `I2(m)` with entries in `Q(ζ_m)[q]`.
#[derive(Clone, Debug)]
pub struct DihedralHeckeModel {
    m: u32,
    label: DihedralLabel,
    generators: [Matrix<Poly<Cyclotomic>>; 2],
}

impl DihedralHeckeModel {
    pub fn label(&self) -> &DihedralLabel {
        &self.label
    }

    pub fn generators(&self) -> &[Matrix<Poly<Cyclotomic>>; 2] {
        &self.generators
    }

    pub fn verify_relations(&self) -> Result<()> {
        let m = self.m;
        check_relations(&self.generators, &Poly::x(), |_, _| m)
    }
}

/// `T_1 = [[-1, 0], [1, q]]`, `T_2 = [[q, y], [0, -1]]` with
/// `y = q (2 + ζ^j + ζ^{-j})`, so that `tr(T_1 T_2) = (ζ^j + ζ^{-j}) q`.
pub fn dihedral_model(m: u32, label: &DihedralLabel) -> Result<DihedralHeckeModel> {
    label.validate(m)?;
    let c = |x: Cyclotomic| Poly::constant(x);
    let one = || c(Cyclotomic::from_int(1));
    let q = Poly::<Cyclotomic>::x();
    let generators = match *label {
        DihedralLabel::Two(j) => {
            let s = Cyclotomic::zeta_pow(m, j as i64) + Cyclotomic::zeta_pow(m, -(j as i64));
            let y = &q * &c(Cyclotomic::from_int(2) + s);
            [
                Matrix::from_rows(vec![vec![-one(), Poly::zero()], vec![one(), q.clone()]]),
                Matrix::from_rows(vec![vec![q.clone(), y], vec![Poly::zero(), -one()]]),
            ]
        }
        DihedralLabel::One { b, prime } => {
            let (t1, t2) = if b == 0 {
                (q.clone(), q.clone())
            } else if b == m {
                (-one(), -one())
            } else if !prime {
                (q.clone(), -one())
            } else {
                (-one(), q.clone())
            };
            [
                Matrix::from_rows(vec![vec![t1]]),
                Matrix::from_rows(vec![vec![t2]]),
            ]
        }
    };
    let model = DihedralHeckeModel {
        m,
        label: label.clone(),
        generators,
    };
    model.verify_relations()?;
    Ok(model)
}

/// Trace of `T_{s1} T_{s2}` on a dihedral module: a monomial whose
/// coefficient is the ordinary trace.
pub fn dihedral_module_trace(m: u32, label: &DihedralLabel) -> Result<HeckeTraceRecord> {
    let model = dihedral_model(m, label)?;
    let [t1, t2] = &model.generators;
    let tr = t1.mul(t2).trace();
    let poly = Laurent::from_poly(&tr, 2);
    let rec = HeckeTraceRecord::from_laurent(label.to_string(), poly)?;
    let ordinary = crate::noncrystal::dihedral_coxeter_trace(m, label)?;
    if rec.trace_at_1 != ordinary {
        return Err(Error::Verification(format!(
            "dihedral {label}: trace at v = 1 is {}, ordinary trace is {ordinary}",
            rec.trace_at_1
        )));
    }
    if let Some(e) = rec.m {
        let want = 2 * 2 - 2 * label.cell_index(m) as i64;
        if e != want {
            return Err(Error::Verification(format!(
                "dihedral {label}: m = {e}, expected {want}"
            )));
        }
    }
    Ok(rec)
}

/// The two-dimensional module `2_j` of `I2(m)`.
pub fn dihedral_hecke_trace(m: u32, j: u32) -> Result<HeckeTraceRecord> {
    dihedral_module_trace(m, &DihedralLabel::Two(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign_models() {
        let t = seminormal_model(3, &p(&[3])).unwrap();
        assert_eq!(t.dimension(), 1);
        assert_eq!(*t.generators()[0].get(0, 0), q());
        let s = seminormal_model(3, &p(&[1, 1, 1])).unwrap();
        assert_eq!(*s.generators()[1].get(0, 0), QFraction::from_int(-1));
    }

    #[test]
    fn two_one_model() {
        let m = seminormal_model(3, &p(&[2, 1])).unwrap();
        assert_eq!(m.dimension(), 2);
        let rec = hecke_coxeter_trace(&m, &[1, 2]).unwrap();
        assert_eq!(
            rec.trace_poly,
            Laurent::monomial(Cyclotomic::from_int(-1), 2)
        );
        assert_eq!(rec.m, Some(2));
        assert!(power_identity_check(&m).unwrap());
    }

    #[test]
    fn all_models_up_to_five() {
        for n in 2..=5 {
            for lam in Partition::all(n) {
                let model = seminormal_model(n, &lam).unwrap();
                let order: Vec<usize> = (1..n).collect();
                let rec = hecke_coxeter_trace(&model, &order).unwrap();
                assert_eq!(rec.m.is_some(), lam.is_hook());
                assert!(power_identity_check(&model).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn trivial_module_trace_is_top_power() {
        let model = seminormal_model(4, &p(&[4])).unwrap();
        let rec = hecke_coxeter_trace(&model, &[2, 1, 3]).unwrap();
        assert_eq!(
            rec.trace_poly,
            Laurent::monomial(Cyclotomic::from_int(1), 6)
        );
        let sign = seminormal_model(4, &p(&[1, 1, 1, 1])).unwrap();
        let rec = hecke_coxeter_trace(&sign, &[2, 1, 3]).unwrap();
        assert_eq!(
            rec.trace_poly,
            Laurent::monomial(Cyclotomic::from_int(-1), 0)
        );
    }

    #[test]
    fn dihedral_two_dimensional() {
        let rec = dihedral_hecke_trace(5, 1).unwrap();
        let c = Cyclotomic::zeta_pow(5, 1) + Cyclotomic::zeta_pow(5, 4);
        assert_eq!(rec.trace_poly, Laurent::monomial(c, 2));
        let rec = dihedral_hecke_trace(8, 2).unwrap();
        assert!(rec.trace_poly.is_zero());
        let rec = dihedral_module_trace(7, &DihedralLabel::one(0)).unwrap();
        assert_eq!(
            rec.trace_poly,
            Laurent::monomial(Cyclotomic::from_int(1), 4)
        );
    }

    #[test]
    fn broken_model_is_detected() {
        let mut model = seminormal_model(3, &p(&[2, 1])).unwrap();
        let one = QFraction::one();
        let g = &mut model.generators[0];
        for (i, j) in [(0, 1), (1, 0)] {
            if !g.get(i, j).is_zero() {
                g.set(i, j, one.clone());
            }
        }
        let g = &mut model.generators[1];
        g.set(0, 1, one.clone());
        g.set(1, 0, one);
        assert!(model.verify_relations().is_err());
    }
}
