//! Rational functions in `q` whose denominators are products of cyclotomic
//! polynomials `Φ_k(q)`. Every entry of a seminormal model lives here, and
//! since each `Φ_k` is irreducible, reducing a fraction needs only exact
//! division by `Φ_k` instead of a polynomial gcd.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{cyclotomic_polynomial, Poly, Rational, RationalFunction};

#[derive(Clone, PartialEq, Eq)]
pub struct QFraction {
    /// Integer numerator, low degree first, no trailing zeros.
    num: Vec<BigInt>,
    /// `den[k - 1]` is the exponent of `Φ_k`; no trailing zeros.
    den: Vec<u32>,
}

fn trim<T: PartialEq>(v: &mut Vec<T>, zero: &T) {
    while v.last() == Some(zero) {
        v.pop();
    }
}

fn phi(k: usize) -> Vec<BigInt> {
    cyclotomic_polynomial(k as u32)
        .iter()
        .map(|&c| BigInt::from(c))
        .collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `num / monic` when the division is exact.
fn div_exact_monic(num: &[BigInt], monic: &[BigInt]) -> Option<Vec<BigInt>> {
    let d = monic.len() - 1;
    if num.len() <= d {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - d];
    for k in (d..num.len()).rev() {
        let c = std::mem::take(&mut rem[k]);
        if c.is_zero() {
            continue;
        }
        for (j, m) in monic.iter().enumerate().take(d) {
            rem[k - d + j] -= &c * m;
        }
        quot[k - d] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

impl QFraction {
    fn new(mut num: Vec<BigInt>, mut den: Vec<u32>) -> Self {
        trim(&mut num, &BigInt::zero());
        if num.is_empty() {
            return QFraction::zero();
        }
        for k in 1..=den.len() {
            if den[k - 1] == 0 {
                continue;
            }
            let p = phi(k);
            while den[k - 1] > 0 {
                match div_exact_monic(&num, &p) {
                    Some(q) => {
                        num = q;
                        den[k - 1] -= 1;
                    }
                    None => break,
                }
            }
        }
        trim(&mut den, &0);
        QFraction { num, den }
    }

    pub fn from_int(c: i64) -> Self {
        QFraction::new(vec![BigInt::from(c)], Vec::new())
    }

    /// `q^k`, `k >= 0`.
    pub fn q_pow(k: usize) -> Self {
        let mut num = vec![BigInt::zero(); k + 1];
        num[k] = BigInt::one();
        QFraction::new(num, Vec::new())
    }

    /// `1 / (q^d - 1)` for `d >= 1`.
    pub fn recip_q_pow_minus_one(d: usize) -> Self {
        let mut den = vec![0; d];
        for k in (1..=d).filter(|k| d % k == 0) {
            den[k - 1] = 1;
        }
        QFraction::new(vec![BigInt::one()], den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// The numerator as a polynomial when the denominator is trivial.
    pub fn to_poly(&self) -> Option<Poly<Rational>> {
        self.is_polynomial().then(|| {
            Poly::new(
                self.num
                    .iter()
                    .map(|c| Rational::from_integer(c.clone()))
                    .collect(),
            )
        })
    }

    fn expand_to(&self, den: &[u32]) -> Vec<BigInt> {
        let mut num = self.num.clone();
        for (k, &e) in den.iter().enumerate() {
            let have = self.den.get(k).copied().unwrap_or(0);
            if e > have {
                let p = phi(k + 1);
                for _ in have..e {
                    num = poly_mul(&num, &p);
                }
            }
        }
        num
    }

    pub fn to_rational_function(&self) -> RationalFunction {
        let num = Poly::new(
            self.num
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let mut den = Poly::<Rational>::one();
        for (k, &e) in self.den.iter().enumerate() {
            let p = Poly::new(phi(k + 1).into_iter().map(Rational::from_integer).collect());
            for _ in 0..e {
                den = den * p.clone();
            }
        }
        RationalFunction::new(num, den)
    }
}

impl Zero for QFraction {
    fn zero() -> Self {
        QFraction {
            num: Vec::new(),
            den: Vec::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl One for QFraction {
    fn one() -> Self {
        QFraction::from_int(1)
    }
}

impl Add for QFraction {
    type Output = QFraction;
    fn add(self, rhs: QFraction) -> QFraction {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            let mut num = self.num;
            if num.len() < rhs.num.len() {
                num.resize(rhs.num.len(), BigInt::zero());
            }
            for (a, b) in num.iter_mut().zip(rhs.num) {
                *a += b;
            }
            return QFraction::new(num, self.den);
        }
        let len = self.den.len().max(rhs.den.len());
        let den: Vec<u32> = (0..len)
            .map(|k| {
                let a = self.den.get(k).copied().unwrap_or(0);
                let b = rhs.den.get(k).copied().unwrap_or(0);
                a.max(b)
            })
            .collect();
        let mut num = self.expand_to(&den);
        let other = rhs.expand_to(&den);
        if num.len() < other.len() {
            num.resize(other.len(), BigInt::zero());
        }
        for (a, b) in num.iter_mut().zip(other) {
            *a += b;
        }
        QFraction::new(num, den)
    }
}

impl Neg for QFraction {
    type Output = QFraction;
    fn neg(self) -> QFraction {
        QFraction {
            num: self.num.into_iter().map(|c| -c).collect(),
            den: self.den,
        }
    }
}

impl Sub for QFraction {
    type Output = QFraction;
    fn sub(self, rhs: QFraction) -> QFraction {
        self + (-rhs)
    }
}

impl Mul for QFraction {
    type Output = QFraction;
    fn mul(self, rhs: QFraction) -> QFraction {
        if self.is_zero() || rhs.is_zero() {
            return QFraction::zero();
        }
        let len = self.den.len().max(rhs.den.len());
        let den = (0..len)
            .map(|k| self.den.get(k).copied().unwrap_or(0) + rhs.den.get(k).copied().unwrap_or(0))
            .collect();
        QFraction::new(poly_mul(&self.num, &rhs.num), den)
    }
}

impl fmt::Debug for QFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational_function())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QFraction {
        QFraction::q_pow(1)
    }

    #[test]
    fn agrees_with_generic_rational_functions() {
        // (q-1) q^2/(q^2-1) + 1/(q^3-1), then times (q^2 - 1)
        let one = QFraction::one();
        let a = (q() - one.clone()) * QFraction::q_pow(2) * QFraction::recip_q_pow_minus_one(2);
        let b = QFraction::recip_q_pow_minus_one(3);
        let s = a.clone() + b.clone();
        let generic = a.to_rational_function() + b.to_rational_function();
        assert_eq!(s.to_rational_function(), generic);
        let cleared = s * (QFraction::q_pow(2) - one);
        assert_eq!(
            cleared.to_rational_function(),
            generic
                * RationalFunction::new(
                    Poly::new(vec![
                        crate::exactnum::int(-1),
                        Rational::zero(),
                        crate::exactnum::int(1)
                    ]),
                    Poly::one(),
                )
        );
    }

    #[test]
    fn cancellation_is_complete() {
        // (q^2 - 1) / (q - 1) = q + 1
        let x = (QFraction::q_pow(2) - QFraction::one()) * QFraction::recip_q_pow_minus_one(1);
        assert!(x.is_polynomial());
        assert_eq!(x, q() + QFraction::one());
        let y = QFraction::recip_q_pow_minus_one(4) * (QFraction::q_pow(4) - QFraction::one());
        assert_eq!(y, QFraction::one());
    }
}
