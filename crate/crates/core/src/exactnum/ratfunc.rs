use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Laurent, Poly, Rational};

/// Quotient of two polynomials over the rationals, kept in lowest terms
/// with a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl RationalFunction {
    /// Panics if `den` is zero.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFunction { num, den }.normalized()
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        RationalFunction::from_poly(Poly::x())
    }

    pub fn numerator(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<Rational> {
        &self.den
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RationalFunction::zero();
        }
        let g = self.num.gcd(&self.den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (self.num, self.den)
        } else {
            (self.num.div_rem(&g).0, self.den.div_rem(&g).0)
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.inverse();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    /// Re-normalises; the result always equals `self`.
    pub fn normalize(&self) -> Self {
        self.clone().normalized()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The value as a Laurent polynomial, when the denominator is a
    /// monomial. `step` maps the internal variable `x` to `v^step`.
    pub fn to_laurent(&self, step: i64) -> Option<Laurent<Rational>> {
        let d = self.den.degree()?;
        if self.den.valuation() != Some(d) {
            return None;
        }
        // den is x^d (monic)
        let shift = -(d as i64) * step;
        Some(Laurent::from_terms(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 * step + shift, c.clone())),
        ))
    }

    pub fn recip(&self) -> Self {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .normalized();
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .normalized()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            let c = self.den.coeff(0) * rhs.den.coeff(0);
            return RationalFunction {
                num: (&self.num * &rhs.num).scale(&c.recip()),
                den: Poly::one(),
            };
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = rhs.den.div_rem(&g1).0;
        let n2 = rhs.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        RationalFunction {
            num: &n1 * &n2,
            den: &d1 * &d2,
        }
        .normalized()
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip()
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);
forward_by_value!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Field for RationalFunction {
    fn inverse(&self) -> Self {
        self.recip()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.display_in("v"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_in("v"),
                self.den.display_in("v")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&k| int(k)).collect())
    }

    #[test]
    fn lowest_terms_and_monic_denominator() {
        // (2x^2 - 2) / (2x - 2) = x + 1
        let f = RationalFunction::new(p(&[-2, 0, 2]), p(&[-2, 2]));
        assert_eq!(f, RationalFunction::from_poly(p(&[1, 1])));
        let g = RationalFunction::new(p(&[3]), p(&[0, 6]));
        assert_eq!(g.denominator(), &p(&[0, 1]));
        assert_eq!(
            g.numerator(),
            &Poly::constant(crate::exactnum::rational(1, 2))
        );
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = RationalFunction::new(p(&[1, 1]), p(&[-1, 1]));
        let b = RationalFunction::new(p(&[0, 1]), p(&[1, 0, 1]));
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
    }

    #[test]
    fn laurent_conversion() {
        let f = RationalFunction::new(p(&[-1, 0, 1]), p(&[0, 1]));
        let l = f.to_laurent(1).unwrap();
        assert_eq!(l.to_string(), "v - v^-1");
        assert!(RationalFunction::new(p(&[1]), p(&[1, 1]))
            .to_laurent(1)
            .is_none());
    }
}
