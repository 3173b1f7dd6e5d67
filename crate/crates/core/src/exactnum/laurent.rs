use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Ring};

/// Finitely supported Laurent polynomial in `v`; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<R> {
    terms: BTreeMap<i64, R>,
}

impl<R: Ring> Laurent<R> {
    pub fn monomial(c: R, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: R) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn v() -> Self {
        Laurent::monomial(R::one(), 1)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, R)>) -> Self {
        let mut out = Laurent::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    /// Reads a polynomial in `q = v^step` as a Laurent polynomial in `v`.
    pub fn from_poly(p: &Poly<R>, step: i64) -> Self {
        Laurent::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 * step, c.clone())),
        )
    }

    fn add_term(&mut self, e: i64, c: R) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Value at `v = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> R {
        self.terms.values().cloned().fold(R::zero(), |a, b| a + b)
    }

    /// The single term `(coefficient, exponent)` when the support has at
    /// most one element. The zero polynomial yields `Some((0, None))`.
    pub fn as_monomial(&self) -> Option<(R, Option<i64>)> {
        match self.terms.len() {
            0 => Some((R::zero(), None)),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                Some((c.clone(), Some(*e)))
            }
            _ => None,
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }
}

impl<R: Ring> Zero for Laurent<R> {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for Laurent<R> {
    fn one() -> Self {
        Laurent::constant(R::one())
    }
}

impl<R: Ring> Add<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<R: Ring> Sub<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<R: Ring> Mul<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Ring> Neg for &Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Ring> Add for Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Ring> Sub for Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Ring> Mul for Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Ring> Neg for Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Self {
        -&self
    }
}

/// Joins `(exponent, coefficient)` pairs, already in display order.
pub(crate) fn render_terms<R: fmt::Display>(terms: &[(i64, &R)], var: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let text = c.to_string();
        let compound = text.trim_start_matches('-').contains(' ');
        let (negative, magnitude) = if !compound && text.starts_with('-') {
            (true, text[1..].to_string())
        } else {
            (false, text)
        };
        let power = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let coeff = if power.is_empty() {
            magnitude
        } else if magnitude == "1" {
            String::new()
        } else if compound {
            format!("({magnitude})")
        } else {
            magnitude
        };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&coeff);
        out.push_str(&power);
    }
    out
}

impl<R: Ring + fmt::Display> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &R)> = self.terms.iter().rev().map(|(e, c)| (*e, c)).collect();
        f.write_str(&render_terms(&terms, "v"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    fn mono(c: i64, e: i64) -> Laurent<Rational> {
        Laurent::monomial(int(c), e)
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(mono(-1, 2).eval_at_one(), int(-1));
        assert_eq!(mono(1, 8).eval_at_one(), int(1));
        assert_eq!((&mono(3, -2) + &mono(4, 5)).eval_at_one(), int(7));
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(
            Laurent::<Rational>::zero().as_monomial(),
            Some((int(0), None))
        );
        assert_eq!(mono(-1, 4).as_monomial(), Some((int(-1), Some(4))));
        assert_eq!((&mono(1, 2) + &mono(1, 0)).as_monomial(), None);
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = &mono(2, 3) - &mono(2, 3);
        assert!(f.is_zero());
        assert_eq!(f.support_len(), 0);
    }

    #[test]
    fn renders_descending() {
        assert_eq!(mono(-1, 2).to_string(), "-v^2");
        let f = &(&mono(2, 2) + &mono(-1, 0)) + &mono(1, -1);
        assert_eq!(f.to_string(), "2v^2 - 1 + v^-1");
    }
}
