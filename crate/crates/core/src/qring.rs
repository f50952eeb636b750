//! Exact arithmetic in `Z[q]` and in the coefficient ring `R = Z[q, 1/q]`.
//!
//! [`IntPoly`] is a dense univariate integer polynomial. [`QCoef`] is an
//! element of `R`, stored as `q^shift * numerator` with the numerator's
//! constant term nonzero, which makes the representation canonical.
//!
//! The units of `R` are exactly `±q^k`. GCDs and contents are reported in
//! normalized form: numerator in `Z[q]` with nonzero constant term, positive
//! leading integer coefficient and `shift == 0`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `Z[q]`; `coeffs[i]` is the coefficient of `q^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of trailing zero coefficients, i.e. the largest `k` with `q^k | self`.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the lowest `k` coefficients (division by `q^k`, assumed exact).
    fn shift_down(mut self, k: usize) -> Self {
        self.coeffs.drain(..k.min(self.coeffs.len()));
        self
    }

    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// GCD of the integer coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Exact quotient `self / d` over `Z`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let lc = d.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &qk * dc;
            }
            quot[k] = qk;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let lc = d.leading_coeff().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.pop().unwrap();
            let shift = r.len() - dd;
            for c in r.iter_mut() {
                *c *= lc;
            }
            if !top.is_zero() {
                for (j, dc) in d.coeffs.iter().take(dd).enumerate() {
                    r[shift + j] -= &top * dc;
                }
            }
        }
        IntPoly::new(r)
    }

    /// GCD over `Z[q]` by the subresultant remainder sequence, with positive
    /// leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let d = self.content().gcd(&other.content());
        let (mut u, mut v) = (self.primitive_part(), other.primitive_part());
        if u.degree() < v.degree() {
            std::mem::swap(&mut u, &mut v);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = u.degree().unwrap() - v.degree().unwrap();
            let r = u.pseudo_rem(&v);
            if r.is_zero() {
                return v.primitive_part().scale(&d);
            }
            if r.degree() == Some(0) {
                return IntPoly::constant(d);
            }
            let divisor = &g * num_traits::pow(h.clone(), delta);
            u = v;
            v = r.div_scalar_exact(&divisor);
            g = u.leading_coeff().unwrap().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
            };
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// An element `q^shift * numerator` of `Z[q, 1/q]` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QCoef {
    numerator: IntPoly,
    shift: i64,
}

impl QCoef {
    /// Builds the canonical form of `q^shift * numerator`.
    pub fn new(numerator: IntPoly, shift: i64) -> Self {
        if numerator.is_zero() {
            return QCoef::zero();
        }
        let v = numerator.valuation();
        QCoef {
            numerator: numerator.shift_down(v),
            shift: shift + v as i64,
        }
    }

    pub fn zero() -> Self {
        QCoef {
            numerator: IntPoly::zero(),
            shift: 0,
        }
    }

    pub fn one() -> Self {
        QCoef::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QCoef::new(IntPoly::constant(c.into()), 0)
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QCoef::new(IntPoly::constant(c), 0)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        QCoef::new(IntPoly::constant(BigInt::one()), k)
    }

    /// Builds `sum c * q^e` from `(e, c)` pairs; exponents may repeat or be negative.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return QCoef::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        QCoef::new(IntPoly::new(coeffs), lo)
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.numerator.coeffs.len() == 1 && self.numerator.coeffs[0].is_one()
    }

    /// True for the units `±q^k` of `R`.
    pub fn is_unit(&self) -> bool {
        self.numerator.coeffs.len() == 1 && self.numerator.coeffs[0].abs().is_one()
    }

    /// Lowest and highest `q`-exponent with a nonzero coefficient.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let d = self.numerator.degree()?;
        Some((self.shift, self.shift + d as i64))
    }

    /// Nonzero terms as `(q-exponent, coefficient)`, ascending in the exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        let shift = self.shift;
        self.numerator
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (shift + i as i64, c))
    }

    /// Constant integer value, if the element lies in `Z`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.numerator.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 if self.shift == 0 => Some(self.numerator.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Leading integer coefficient (of the highest power of `q`).
    pub fn leading_integer(&self) -> Option<&BigInt> {
        self.numerator.leading_coeff()
    }

    /// Splits `self = unit * normalized` with `unit = ±q^k` and `normalized`
    /// having `shift == 0` and a positive leading integer coefficient.
    pub fn split_unit(&self) -> (QCoef, QCoef) {
        if self.is_zero() {
            return (QCoef::one(), QCoef::zero());
        }
        let negative = self.leading_integer().is_some_and(Signed::is_negative);
        let sign = if negative {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let unit = QCoef::new(IntPoly::constant(sign.clone()), self.shift);
        let normalized = QCoef {
            numerator: self.numerator.scale(&sign),
            shift: 0,
        };
        (unit, normalized)
    }

    pub fn normalized(&self) -> QCoef {
        self.split_unit().1
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero()
            || (self.shift == 0 && self.leading_integer().is_some_and(Signed::is_positive))
    }

    /// Inverse of a unit `±q^k`.
    pub fn unit_inverse(&self) -> Option<QCoef> {
        if !self.is_unit() {
            return None;
        }
        Some(QCoef {
            numerator: self.numerator.clone(),
            shift: -self.shift,
        })
    }

    pub fn pow(&self, e: u32) -> QCoef {
        let mut acc = QCoef::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in `R`.
    pub fn div_exact(&self, d: &QCoef) -> Result<QCoef> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QCoef::zero());
        }
        // Numerators have nonzero constant terms, so divisibility in R is
        // divisibility of numerators in Z[q].
        let quot = self
            .numerator
            .div_exact(&d.numerator)
            .ok_or(Error::NotDivisible)?;
        Ok(QCoef::new(quot, self.shift - d.shift))
    }

    /// Normalized GCD in `R`; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QCoef) -> QCoef {
        let g = self.numerator.gcd(&other.numerator);
        QCoef::new(g, 0).normalized()
    }

    fn add_impl(&self, rhs: &QCoef, negate: bool) -> QCoef {
        if rhs.is_zero() {
            return self.clone();
        }
        let r = if negate { -rhs } else { rhs.clone() };
        if self.is_zero() {
            return r;
        }
        let lo = self.shift.min(r.shift);
        let a = pad_low(&self.numerator, (self.shift - lo) as usize);
        let b = pad_low(&r.numerator, (r.shift - lo) as usize);
        QCoef::new(&a + &b, lo)
    }
}

fn pad_low(p: &IntPoly, k: usize) -> IntPoly {
    if k == 0 {
        return p.clone();
    }
    let mut coeffs = vec![BigInt::zero(); k];
    coeffs.extend(p.coeffs.iter().cloned());
    IntPoly { coeffs }
}

impl Add for &QCoef {
    type Output = QCoef;
    fn add(self, rhs: &QCoef) -> QCoef {
        self.add_impl(rhs, false)
    }
}

impl Sub for &QCoef {
    type Output = QCoef;
    fn sub(self, rhs: &QCoef) -> QCoef {
        self.add_impl(rhs, true)
    }
}

impl Neg for &QCoef {
    type Output = QCoef;
    fn neg(self) -> QCoef {
        QCoef {
            numerator: -&self.numerator,
            shift: self.shift,
        }
    }
}

impl Mul for &QCoef {
    type Output = QCoef;
    fn mul(self, rhs: &QCoef) -> QCoef {
        if self.is_zero() || rhs.is_zero() {
            return QCoef::zero();
        }
        // Product of polynomials with nonzero constant terms keeps a nonzero constant term.
        QCoef {
            numerator: &self.numerator * &rhs.numerator,
            shift: self.shift + rhs.shift,
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(IntPoly, Add add, Sub sub, Mul mul);
forward_owned!(QCoef, Add add, Sub sub, Mul mul);

impl From<i64> for QCoef {
    fn from(c: i64) -> Self {
        QCoef::from_int(c)
    }
}

impl PartialOrd for QCoef {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order (used only to make output deterministic).
impl Ord for QCoef {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shift
            .cmp(&other.shift)
            .then_with(|| self.numerator.coeffs.cmp(&other.numerator.coeffs))
    }
}

/// Writes one signed term `c * q^e * <tail>` in the text grammar. `first`
/// suppresses the leading `+`. `tail` is a pre-rendered product of variables
/// (possibly empty).
pub(crate) fn write_term(out: &mut String, c: &BigInt, q_exp: i64, tail: &str, first: bool) {
    let neg = c.is_negative();
    if neg {
        out.push('-');
    } else if !first {
        out.push('+');
    }
    let mag = c.abs();
    let mut factors: Vec<String> = Vec::new();
    if q_exp == 1 {
        factors.push("q".to_string());
    } else if q_exp != 0 {
        factors.push(format!("q^{q_exp}"));
    }
    if !tail.is_empty() {
        factors.push(tail.to_string());
    }
    if factors.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(&factors.join("*"));
    }
}

/// Prints highest power of `q` first, e.g. `3*q^2+7-q^-1`.
impl fmt::Display for QCoef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            write_term(&mut out, c, e, "", i == 0);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qc(terms: &[(i64, i64)]) -> QCoef {
        QCoef::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn add_with_negative_powers() {
        let a = qc(&[(1, 1), (0, 1)]);
        let b = qc(&[(-1, 1)]);
        let s = &a + &b;
        assert_eq!(s.shift(), -1);
        assert_eq!(s.numerator(), &IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(&a + &QCoef::zero(), a);
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let a = qc(&[(1, 1), (0, -1)]);
        let b = qc(&[(0, 1), (1, -1)]);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.shift(), 0);
        assert_eq!(s, QCoef::zero());
    }

    #[test]
    fn multiplication() {
        assert!((&QCoef::q_pow(1) * &QCoef::q_pow(-1)).is_one());
        let p = &qc(&[(1, 1), (0, 1)]) * &qc(&[(1, 1), (0, -1)]);
        assert_eq!(p, qc(&[(2, 1), (0, -1)]));
        assert!((&QCoef::zero() * &p).is_zero());
    }

    #[test]
    fn gcd_examples() {
        let g = qc(&[(2, 1), (0, -1)]).gcd(&qc(&[(3, 1), (0, -1)]));
        assert_eq!(g, qc(&[(1, 1), (0, -1)]));
        let f = qc(&[(3, -2), (1, 4)]);
        assert_eq!(QCoef::zero().gcd(&f), f.normalized());
        assert!(QCoef::zero().gcd(&QCoef::zero()).is_zero());
        // 6q^2+6q = 6q(q+1), 4q^3+4q^2 = 4q^2(q+1); q is a unit of R.
        let g = qc(&[(2, 6), (1, 6)]).gcd(&qc(&[(3, 4), (2, 4)]));
        assert_eq!(g, qc(&[(1, 2), (0, 2)]));
        let twice = qc(&[(2, 2), (1, 2)]);
        assert_eq!(twice.div_exact(&g).unwrap(), QCoef::q_pow(1));
    }

    #[test]
    fn exact_division() {
        let a = qc(&[(2, 1), (0, -1)]);
        assert_eq!(
            a.div_exact(&qc(&[(1, 1), (0, -1)])).unwrap(),
            qc(&[(1, 1), (0, 1)])
        );
        let b = qc(&[(1, 1), (0, 1)]);
        assert_eq!(
            b.div_exact(&QCoef::q_pow(1)).unwrap(),
            qc(&[(0, 1), (-1, 1)])
        );
        assert_eq!(
            b.div_exact(&qc(&[(1, 1), (0, -1)])),
            Err(Error::NotDivisible)
        );
        assert_eq!(b.div_exact(&QCoef::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn subresultant_gcd_with_content() {
        // (2q+2)(q^2+3) and (6q+6)(q-5)
        let a = &IntPoly::from_i64s(&[2, 2]) * &IntPoly::from_i64s(&[3, 0, 1]);
        let b = &IntPoly::from_i64s(&[6, 6]) * &IntPoly::from_i64s(&[-5, 1]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64s(&[2, 2]));
        // Degree gap > 1 exercises the h-update branch.
        let c = &IntPoly::from_i64s(&[1, 0, 0, 0, 3, 1]) * &IntPoly::from_i64s(&[7, 1]);
        let d = &IntPoly::from_i64s(&[2, 1]) * &IntPoly::from_i64s(&[7, 1]);
        assert_eq!(c.gcd(&d), IntPoly::from_i64s(&[7, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(qc(&[(2, 3), (-1, -1), (0, 7)]).to_string(), "3*q^2+7-q^-1");
        assert_eq!(qc(&[(1, -1)]).to_string(), "-q");
        assert_eq!(QCoef::zero().to_string(), "0");
    }
}
