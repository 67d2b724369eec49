//! Exact ground fields.
//!
//! A [`Field`] is a context object: elements are plain values and every
//! arithmetic operation goes through the field, so the prime of `F_p` can be
//! chosen at runtime.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, n: i64) -> Self::Elem;
    /// Image of the fraction `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, AlgebraError>;
    fn format(&self, a: &Self::Elem) -> String;
    /// Short descriptor, `"rational"` or `"prime:p"`.
    fn descriptor(&self) -> String;

    /// Scalar `c` such that `c * v` is the canonical representative of the
    /// line through `v`. `None` when `v` is zero or already canonical.
    fn normalizer<'a, I>(&self, v: I) -> Option<Self::Elem>
    where
        I: Iterator<Item = &'a Self::Elem>,
        Self::Elem: 'a;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn sign(&self, odd: bool) -> Self::Elem {
        if odd {
            self.from_int(-1)
        } else {
            self.one()
        }
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn parse(&self, s: &str) -> Result<Self::Elem, AlgebraError> {
        let (num, den) = parse_ratio(s)?;
        self.from_ratio(&num, &den)
    }
}

/// Parses `"a"` or `"a/b"` with an optional sign (ASCII `-` or U+2212).
pub fn parse_ratio(s: &str) -> Result<(BigInt, BigInt), AlgebraError> {
    let bad = || AlgebraError::Parse(format!("malformed coefficient {s:?}"));
    let t = s.trim().replace('\u{2212}', "-");
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim().to_string(), d.trim().to_string()),
        None => (t.clone(), "1".to_string()),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok((num, den))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn descriptor(&self) -> String {
        "rational".into()
    }

    /// Primitive integer vector with positive leading entry.
    fn normalizer<'a, I>(&self, v: I) -> Option<BigRational>
    where
        I: Iterator<Item = &'a BigRational>,
    {
        let mut lead_negative = None;
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for x in v {
            if x.is_zero() {
                continue;
            }
            if lead_negative.is_none() {
                lead_negative = Some(x.is_negative());
            }
            den_lcm = den_lcm.lcm(x.denom());
            num_gcd = num_gcd.gcd(x.numer());
        }
        let neg = lead_negative?;
        let mut c = BigRational::new(den_lcm, num_gcd);
        if neg {
            c = -c;
        }
        (!c.is_one()).then_some(c)
    }
}

/// The prime field `F_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if !(2..1 << 32).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::Field(format!("{p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, AlgebraError> {
        let d = self.reduce_big(den);
        let inv = self.inv(&d).ok_or_else(|| {
            AlgebraError::Field(format!("denominator {den} vanishes modulo {}", self.p))
        })?;
        Ok(self.mul(&self.reduce_big(num), &inv))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> String {
        format!("prime:{}", self.p)
    }

    /// Monic: leading entry becomes 1.
    fn normalizer<'a, I>(&self, mut v: I) -> Option<u64>
    where
        I: Iterator<Item = &'a u64>,
    {
        let lead = v.find(|x| **x != 0)?;
        (*lead != 1).then(|| self.inv(lead).unwrap())
    }
}
