//! Exact coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Two fields are
//! provided: the rationals ([`Rational`], arbitrary precision) and prime
//! fields with a runtime modulus ([`Fp`]). [`FieldElement`] is a tagged union
//! of both with checked arithmetic, for callers that only learn the field at
//! run time.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{NumOps, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// A commutative field with exact arithmetic.
///
/// Elements do not know how to build constants on their own; a field
/// descriptor (`Ctx`) supplies zero, one and integer images. For the
/// rationals the descriptor is `()`.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + NumOps
    + Neg<Output = Self>
{
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_integer(ctx: &Self::Ctx, n: &BigInt) -> Self;
    fn characteristic(ctx: &Self::Ctx) -> u64;
    /// Short name used in input and output documents, e.g. `QQ` or `GF(7)`.
    fn field_name(ctx: &Self::Ctx) -> String;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn inv(&self) -> Option<Self>;

    /// Whether the canonical printed form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_integer(ctx, &BigInt::from(n))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    /// A nonzero scalar `s` such that `s * c` is an integer for every `c` in
    /// `coeffs`, the integers share no common factor, and the first of them
    /// is positive. Fields without an integer structure return one.
    fn integral_scale(ctx: &Self::Ctx, coeffs: &[&Self]) -> Self;

    /// Like [`Field::integral_scale`] for fields of fractions, where
    /// Gröbner computations keep integral primitive vectors. `None` means
    /// vectors are kept monic instead.
    fn content_scale(coeffs: &[&Self]) -> Option<Self> {
        let _ = coeffs;
        None
    }

    /// Roots in the field of the univariate polynomial with the given
    /// coefficients (constant term first). May return a subset when a
    /// complete search is too expensive.
    fn roots(ctx: &Self::Ctx, coeffs: &[Self]) -> Vec<Self>;
}

impl Field for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_integer(_: &(), n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }

    fn characteristic(_: &()) -> u64 {
        0
    }

    fn field_name(_: &()) -> String {
        "QQ".to_string()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn integral_scale(_: &(), coeffs: &[&Self]) -> Self {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in coeffs.iter().filter(|c| !Zero::is_zero(**c)) {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        if num.is_zero() {
            return One::one();
        }
        let mut scale = Rational::new(den, num);
        if let Some(first) = coeffs.iter().find(|c| !Zero::is_zero(**c)) {
            if Signed::is_negative(*first) {
                scale = -scale;
            }
        }
        scale
    }

    fn content_scale(coeffs: &[&Self]) -> Option<Self> {
        Some(Self::integral_scale(&(), coeffs))
    }

    fn roots(_: &(), coeffs: &[Self]) -> Vec<Self> {
        rational_roots(coeffs)
    }
}

// Trial division bound for the rational root search.
const ROOT_SEARCH_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > ROOT_SEARCH_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn rational_roots(coeffs: &[Rational]) -> Vec<Rational> {
    let refs: Vec<&Rational> = coeffs.iter().collect();
    let scale = <Rational as Field>::integral_scale(&(), &refs);
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &scale).to_integer()).collect();
    while ints.last().is_some_and(|c| c.is_zero()) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() < 2 {
        return roots;
    }
    if ints[0].is_zero() {
        roots.push(<Rational as Zero>::zero());
        let skip = ints.iter().take_while(|c| c.is_zero()).count();
        ints.drain(..skip);
    }
    if ints.len() < 2 {
        return roots;
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let eval = |x: &Rational| -> bool {
        let mut acc = <Rational as Zero>::zero();
        for c in ints.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        Zero::is_zero(&acc)
    };
    let mut found: Vec<Rational> = Vec::new();
    for p in &ps {
        for q in &qs {
            if p.gcd(q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                if !found.contains(&cand) && eval(&cand) {
                    found.push(cand);
                }
            }
        }
    }
    found.sort();
    roots.extend(found);
    roots
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(PrimeModulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// An element of GF(p). The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    residue: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        let p = modulus.0 as i64;
        Fp {
            residue: value.rem_euclid(p) as u64,
            modulus: modulus.0,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn with(&self, residue: u64) -> Self {
        Fp {
            residue,
            modulus: self.modulus,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.modulus, other.modulus, "GF(p) modulus mismatch");
    }

    fn pow(&self, mut e: u64) -> Self {
        let p = self.modulus as u128;
        let mut base = self.residue as u128;
        let mut acc = 1u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        self.with(acc as u64)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.residue as u128 + rhs.residue as u128) % self.modulus as u128;
        self.with(s as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.residue as u128 + self.modulus as u128 - rhs.residue as u128)
            % self.modulus as u128;
        self.with(s as u64)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.residue as u128 * rhs.residue as u128) % self.modulus as u128;
        self.with(s as u64)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in GF(p)")
    }
}

impl Rem for Fp {
    type Output = Fp;
    // Every nonzero element divides every other; the remainder is zero.
    fn rem(self, rhs: Fp) -> Fp {
        assert!(rhs.residue != 0, "division by zero in GF(p)");
        self.with(0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with((self.modulus - self.residue) % self.modulus)
    }
}

// Exhaustive root search is only attempted for small moduli.
const FP_ROOT_SEARCH_LIMIT: u64 = 1 << 16;

impl Field for Fp {
    type Ctx = PrimeModulus;

    fn zero(ctx: &PrimeModulus) -> Self {
        Fp::new(0, *ctx)
    }

    fn one(ctx: &PrimeModulus) -> Self {
        Fp::new(1, *ctx)
    }

    fn from_integer(ctx: &PrimeModulus, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(ctx.0));
        Fp {
            residue: r.to_u64().expect("residue fits"),
            modulus: ctx.0,
        }
    }

    fn characteristic(ctx: &PrimeModulus) -> u64 {
        ctx.0
    }

    fn field_name(ctx: &PrimeModulus) -> String {
        format!("GF({})", ctx.0)
    }

    fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn is_one(&self) -> bool {
        self.residue == 1
    }

    fn inv(&self) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }

    fn integral_scale(ctx: &PrimeModulus, _coeffs: &[&Self]) -> Self {
        Self::one(ctx)
    }

    fn roots(ctx: &PrimeModulus, coeffs: &[Self]) -> Vec<Self> {
        if ctx.0 > FP_ROOT_SEARCH_LIMIT || coeffs.iter().all(|c| c.is_zero()) {
            return Vec::new();
        }
        (0..ctx.0)
            .map(|r| Fp::new(r as i64, *ctx))
            .filter(|x| {
                let mut acc = Fp::zero(ctx);
                for c in coeffs.iter().rev() {
                    acc = acc * *x + *c;
                }
                acc.is_zero()
            })
            .collect()
    }
}

/// Coefficient whose field is only known at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rational(Rational),
    PrimeField(Fp),
}

impl FieldElement {
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement::Rational(Rational::new(
            num.into(),
            den.into(),
        )))
    }

    pub fn prime(value: i64, p: u64) -> Result<Self> {
        Ok(FieldElement::PrimeField(Fp::new(
            value,
            PrimeModulus::new(p)?,
        )))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => Field::is_zero(r),
            FieldElement::PrimeField(x) => x.is_zero(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::PrimeField(x) => write!(f, "{x}"),
        }
    }
}

fn same_field<'a>(a: &'a FieldElement, b: &'a FieldElement) -> Result<()> {
    match (a, b) {
        (FieldElement::Rational(_), FieldElement::Rational(_)) => Ok(()),
        (FieldElement::PrimeField(x), FieldElement::PrimeField(y)) if x.modulus == y.modulus => {
            Ok(())
        }
        _ => Err(Error::FieldMismatch),
    }
}

pub fn field_add(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    same_field(a, b)?;
    Ok(match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x + y),
        (FieldElement::PrimeField(x), FieldElement::PrimeField(y)) => {
            FieldElement::PrimeField(*x + *y)
        }
        _ => unreachable!(),
    })
}

pub fn field_mul(a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    same_field(a, b)?;
    Ok(match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x * y),
        (FieldElement::PrimeField(x), FieldElement::PrimeField(y)) => {
            FieldElement::PrimeField(*x * *y)
        }
        _ => unreachable!(),
    })
}

pub fn field_inv(a: &FieldElement) -> Result<FieldElement> {
    match a {
        FieldElement::Rational(x) => Field::inv(x).map(FieldElement::Rational),
        FieldElement::PrimeField(x) => x.inv().map(FieldElement::PrimeField),
    }
    .ok_or(Error::DivisionByZero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::rational(n, d).unwrap()
    }

    fn gf(v: i64, p: u64) -> FieldElement {
        FieldElement::prime(v, p).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(field_add(&q(1, 2), &q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(field_add(&q(3, 4), &q(0, 1)).unwrap(), q(3, 4));
        assert_eq!(field_mul(&q(2, 3), &q(3, 4)).unwrap(), q(1, 2));
        assert_eq!(field_mul(&q(-5, 9), &q(1, 1)).unwrap(), q(-5, 9));
        assert_eq!(field_inv(&q(3, 7)).unwrap(), q(7, 3));
        assert_eq!(field_inv(&q(1, 1)).unwrap(), q(1, 1));
    }

    #[test]
    fn prime_field_examples() {
        assert_eq!(field_add(&gf(5, 7), &gf(4, 7)).unwrap(), gf(2, 7));
        assert_eq!(field_mul(&gf(3, 5), &gf(4, 5)).unwrap(), gf(2, 5));
        assert_eq!(field_inv(&gf(3, 7)).unwrap(), gf(5, 7));
    }

    #[test]
    fn errors() {
        assert_eq!(field_add(&q(1, 2), &gf(1, 7)), Err(Error::FieldMismatch));
        assert_eq!(field_mul(&gf(1, 5), &gf(1, 7)), Err(Error::FieldMismatch));
        assert_eq!(field_inv(&q(0, 1)), Err(Error::DivisionByZero));
        assert_eq!(field_inv(&gf(0, 3)), Err(Error::DivisionByZero));
        assert_eq!(FieldElement::prime(1, 8), Err(Error::NonPrimeModulus(8)));
        assert_eq!(FieldElement::prime(1, 1), Err(Error::NonPrimeModulus(1)));
    }

    #[test]
    fn zero_is_canonical() {
        let z = q(0, 5);
        match z {
            FieldElement::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::zero());
                assert_eq!(r.denom(), &BigInt::one());
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn integral_scale_clears_and_orients() {
        let cs = [
            Rational::new((-3).into(), 2.into()),
            Rational::new(9.into(), 4.into()),
        ];
        let refs: Vec<&Rational> = cs.iter().collect();
        let s = <Rational as Field>::integral_scale(&(), &refs);
        let scaled: Vec<Rational> = cs.iter().map(|c| c * &s).collect();
        assert_eq!(
            scaled,
            vec![
                Rational::from_integer(2.into()),
                Rational::from_integer((-3).into())
            ]
        );
    }

    #[test]
    fn rational_root_search() {
        // (x - 1)(x + 1)(2x - 3) = 2x^3 - 3x^2 - 2x + 3
        let cs: Vec<Rational> = [3, -2, -3, 2]
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        let roots = <Rational as Field>::roots(&(), &cs);
        assert_eq!(
            roots,
            vec![
                Rational::from_integer((-1).into()),
                Rational::from_integer(1.into()),
                Rational::new(3.into(), 2.into())
            ]
        );
        // x^2 + 1 has no rational roots; x^2 has the root 0
        let sq: Vec<Rational> = [1, 0, 1]
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        assert!(<Rational as Field>::roots(&(), &sq).is_empty());
        let x2: Vec<Rational> = [0, 0, 1]
            .iter()
            .map(|&c| Rational::from_integer(c.into()))
            .collect();
        assert_eq!(
            <Rational as Field>::roots(&(), &x2),
            vec![<Rational as Zero>::zero()]
        );
    }

    #[test]
    fn fp_roots() {
        let p = PrimeModulus::new(7).unwrap();
        // x^2 - 1
        let cs = vec![Fp::new(-1, p), Fp::new(0, p), Fp::new(1, p)];
        assert_eq!(Fp::roots(&p, &cs), vec![Fp::new(1, p), Fp::new(6, p)]);
    }
}
