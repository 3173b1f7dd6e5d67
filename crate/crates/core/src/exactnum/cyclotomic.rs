use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Field, Poly, Rational};
use crate::error::Error;

/// Element of the cyclotomic field `Q(z_m)`, stored in the power basis
/// `1, z, ..., z^(phi(m)-1)` reduced modulo the `m`-th cyclotomic
/// polynomial. Elements of different conductors are compared and combined
/// after lifting both to the least common multiple.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer coefficients of the `m`-th cyclotomic polynomial, low degree
/// first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    // x^m - 1 divided by every Phi_d with d | m, d < m
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    cyclotomic_cache()
        .lock()
        .unwrap()
        .insert(m, Arc::clone(&arc));
    arc
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let d = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - d];
    for k in (d..num.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[k - d + j] -= c * dc;
        }
        quot[k - d] = c;
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

pub fn euler_phi(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Reduces a coefficient vector (index = power of `z_m`) modulo `Phi_m`.
fn reduce(conductor: u32, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(conductor);
    let d = phi.len() - 1;
    if v.len() > d {
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[k], Rational::zero());
            for (j, pc) in phi.iter().enumerate().take(d) {
                if *pc != 0 {
                    let idx = k - d + j;
                    v[idx] = &v[idx] - &c * Rational::from_integer(BigInt::from(*pc));
                }
            }
        }
    }
    v.resize(d, Rational::zero());
    v
}

impl Cyclotomic {
    pub fn from_rational(c: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![c],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `z_m^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        assert!(m >= 1);
        let e = k.rem_euclid(m as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Cyclotomic::from_power_coeffs(m, v)
    }

    pub fn zeta(m: u32) -> Self {
        Cyclotomic::zeta_pow(m, 1)
    }

    /// Builds `sum c_k z_m^k` from coefficients of arbitrary length.
    pub fn from_power_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        let mut full = vec![Rational::zero(); m as usize];
        for (k, c) in coeffs.into_iter().enumerate() {
            let idx = k % m as usize;
            full[idx] = &full[idx] + c;
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce(m, full),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients in the reduced power basis.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-expresses the element over `Q(z_big)`; `big` must be a multiple
    /// of the current conductor.
    pub fn lift(&self, big: u32) -> Self {
        assert!(big % self.conductor == 0, "lift target must be a multiple");
        if big == self.conductor {
            return self.clone();
        }
        let step = (big / self.conductor) as usize;
        let mut v = vec![Rational::zero(); big as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * step] = c.clone();
        }
        Cyclotomic {
            conductor: big,
            coeffs: reduce(big, v),
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }

    /// Complex conjugation, `z -> z^-1`.
    pub fn conjugate(&self) -> Self {
        let m = self.conductor as usize;
        let mut v = vec![Rational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[(m - k) % m] = c.clone();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, v),
        }
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Image under the embedding `z_m -> exp(2 pi i / m)`; diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let angle = 2.0 * std::f64::consts::PI * k as f64 / m;
                (re + c * angle.cos(), im + c * angle.sin())
            })
    }

    fn as_poly(&self) -> Poly<Rational> {
        Poly::new(self.coeffs.clone())
    }

    pub fn inverse_checked(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid against Phi_m over Q
        let phi = Poly::new(
            cyclotomic_polynomial(self.conductor)
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        );
        let (mut r0, mut r1) = (phi, self.as_poly());
        let (mut t0, mut t1) = (Poly::<Rational>::zero(), Poly::<Rational>::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r0 is a nonzero constant since Phi_m is irreducible
        let c = r0.coeff(0).recip();
        let inv = t0.scale(&c);
        Some(Cyclotomic::from_power_coeffs(
            self.conductor,
            inv.coeffs().to_vec(),
        ))
    }

    /// Sparse representation over `z^0 .. z^(m-1)` used for printing.
    fn sparse_terms(&self) -> Vec<(usize, Rational)> {
        let m = self.conductor as usize;
        let mut full = vec![Rational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            full[k] = c.clone();
        }
        let mut relations: Vec<Vec<usize>> = Vec::new();
        for p in prime_divisors(m) {
            let stride = m / p;
            for a in 0..stride {
                relations.push((0..p).map(|j| a + j * stride).collect());
            }
        }
        let support = |v: &[Rational]| v.iter().filter(|c| !c.is_zero()).count();
        loop {
            let current = support(&full);
            let mut best: Option<(usize, Vec<Rational>)> = None;
            for rel in &relations {
                for &idx in rel {
                    if full[idx].is_zero() {
                        continue;
                    }
                    let t = -full[idx].clone();
                    let mut cand = full.clone();
                    for &j in rel {
                        cand[j] = &cand[j] + &t;
                    }
                    let s = support(&cand);
                    if s < current && best.as_ref().is_none_or(|(bs, _)| s < *bs) {
                        best = Some((s, cand));
                    }
                }
            }
            match best {
                Some((_, cand)) => full = cand,
                None => break,
            }
        }
        full.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

fn prime_divisors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }
}

impl From<Rational> for Cyclotomic {
    fn from(c: Rational) -> Self {
        Cyclotomic::from_rational(c)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl Add<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == 1 {
            return Cyclotomic {
                conductor: rhs.conductor,
                coeffs: rhs.coeffs.iter().map(|c| c * &self.coeffs[0]).collect(),
            };
        }
        if rhs.conductor == 1 {
            return rhs * self;
        }
        let (a, b) = self.common(rhs);
        let mut v = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] = &v[i + j] + x * y;
                }
            }
        }
        Cyclotomic {
            conductor: a.conductor,
            coeffs: reduce(a.conductor, v),
        }
    }
}

impl Div<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inverse_checked().expect("division by zero cyclotomic")
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);
forward_by_value!(Div, div);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Field for Cyclotomic {
    fn inverse(&self) -> Self {
        self.inverse_checked().expect("division by zero cyclotomic")
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return f.write_str(&fmt_rational(&r));
        }
        let m = self.conductor;
        let mut out = String::new();
        for (idx, (k, c)) in self.sparse_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            let base = match k {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{k}"),
            };
            let term = if base.is_empty() {
                fmt_rational(&mag)
            } else if mag.is_one() {
                base
            } else {
                format!("{}*{}", fmt_rational(&mag), base)
            };
            match (idx, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&term);
        }
        f.write_str(&out)
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    /// Parses the printed form, e.g. `z5 + z5^4`, `-z5^2 - z5^3`,
    /// `1/2*z8^3`, `-1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into()));
        }
        let bad = || Error::Parse(format!("malformed cyclotomic literal `{s}`"));
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'*'
            {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut acc = Cyclotomic::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            let (coeff_text, zeta_text) = match body.find('z') {
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    (c, Some(&body[pos + 1..]))
                }
                None => (body, None),
            };
            let coeff = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text).ok_or_else(bad)?
            };
            let value = match zeta_text {
                None => Cyclotomic::from_rational(coeff),
                Some(z) => {
                    let (m, k) = match z.split_once('^') {
                        Some((m, k)) => (m, k.parse::<i64>().map_err(|_| bad())?),
                        None => (z, 1),
                    };
                    let m: u32 = m.parse().map_err(|_| bad())?;
                    if m == 0 {
                        return Err(bad());
                    }
                    &Cyclotomic::zeta_pow(m, k) * &Cyclotomic::from_rational(coeff)
                }
            };
            acc = if sign < 0 {
                &acc - &value
            } else {
                &acc + &value
            };
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(m, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn golden_ratio_conjugate_minimal_polynomial() {
        let g = &z(5, 1) + &z(5, 4);
        let lhs = &(&(&g * &g) + &g) - &Cyclotomic::one();
        assert!(lhs.is_zero());
    }

    #[test]
    fn vanishing_coefficient_for_even_half() {
        for p in [2i64, 4, 6, 8] {
            let m = (2 * p) as u32;
            let c = &z(m, p / 2) + &z(m, 3 * p / 2);
            assert!(c.is_zero(), "p = {p}");
        }
    }

    #[test]
    fn rational_embedding() {
        let three = Cyclotomic::from_int(3);
        let prod = &three * &z(3, 1);
        assert_eq!(prod.to_string(), "3*z3");
        assert_eq!(prod, &(&z(3, 1) + &z(3, 1)) + &z(3, 1));
    }

    #[test]
    fn mixed_conductors_agree_after_lifting() {
        // z4 = z8^2 and z3 * z4 = z12^7
        assert_eq!(z(4, 1), z(8, 2));
        assert_eq!(&z(3, 1) * &z(4, 1), z(12, 7));
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
    }

    #[test]
    fn conjugation_and_reality() {
        assert_eq!(z(7, 2).conjugate(), z(7, 5));
        assert!((&z(9, 2) + &z(9, 7)).is_real());
        assert!(!z(9, 2).is_real());
    }

    #[test]
    fn inverse() {
        let x = &z(7, 1) + &Cyclotomic::from_int(2);
        let y = x.inverse_checked().unwrap();
        assert!((&x * &y).is_one());
        assert!(Cyclotomic::zero().inverse_checked().is_none());
    }

    #[test]
    fn printing_is_sparse() {
        assert_eq!((&z(5, 1) + &z(5, 4)).to_string(), "z5 + z5^4");
        assert_eq!((-&(&z(5, 2) + &z(5, 3))).to_string(), "-z5^2 - z5^3");
        assert_eq!(Cyclotomic::from_int(-1).to_string(), "-1");
        assert_eq!(z(7, 6).to_string(), "z7^6");
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "z5 + z5^4",
            "-z5^2 - z5^3",
            "1",
            "-1",
            "1/2*z8^3",
            "z7 - 2*z7^3",
        ] {
            let x: Cyclotomic = text.parse().unwrap();
            let y: Cyclotomic = x.to_string().parse().unwrap();
            assert_eq!(x, y, "{text}");
        }
        let a: Cyclotomic = "z5+z5^4".parse().unwrap();
        assert_eq!(a, &z(5, 1) + &z(5, 4));
        assert!("z0".parse::<Cyclotomic>().is_err());
        assert!("".parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn complex_embedding_matches() {
        let g = &z(5, 1) + &z(5, 4);
        let (re, im) = g.to_complex();
        assert!((re - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }
}
