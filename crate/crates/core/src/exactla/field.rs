use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::Error;

/// Arithmetic context for an exact field.
///
/// Elements do not carry their field; every operation goes through the
/// (cheap, `Copy`) field value so that prime-field residues stay plain `u64`s.
pub trait Field: Copy + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn render(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem, Error>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc -= c * b`
    fn mul_sub_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(c, b));
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The field ℚ.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv()
    }
    fn render(&self, a: &Rational) -> String {
        format!("{}/{}", a.numer(), a.denom())
    }
    fn parse(&self, s: &str) -> Result<Rational, Error> {
        s.parse()
            .map_err(|_| Error::Parse(format!("bad rational entry {s:?}")))
    }
}

/// The prime field F_p, residues stored in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Largest modulus accepted, so that products of residues fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(Error::InvalidField(format!(
                "modulus {p} is not a prime below 2^31"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64, Error> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
        Ok(self.from_i64(v))
    }
    fn mul_sub_assign(&self, acc: &mut u64, c: &u64, b: &u64) {
        let prod = c * b % self.p;
        *acc = self.sub(acc, &prod);
    }
}

/// Which field a computation runs over. Parsed from `q` or `fp:P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidField(format!("expected `q` or `fp:P`, got {s:?}")))?;
        PrimeField::new(p)?;
        Ok(FieldSpec::Prime(p))
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// Runs `$body` with `$f` bound to the concrete field named by a [`FieldSpec`].
///
/// The body is monomorphized once per field kind.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            $crate::exactla::FieldSpec::Rationals => {
                let $f = $crate::exactla::Rationals;
                $body
            }
            $crate::exactla::FieldSpec::Prime(p) => {
                let $f = $crate::exactla::PrimeField::new(p)
                    .expect("FieldSpec::Prime holds a validated prime");
                $body
            }
        }
    };
}
