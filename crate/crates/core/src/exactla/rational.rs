use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// An exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// anything larger is promoted to a `BigRational`. The representation is
/// canonical, so derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

fn from_i128(num: i128, den: i128) -> Rational {
    debug_assert!(den != 0);
    let g = num.gcd(&den);
    let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
    if d < 0 {
        n = -n;
        d = -d;
    }
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n), Ok(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
        _ => Rational::from_big(BigRational::new(BigInt::from(n), BigInt::from(d))),
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(v: i64) -> Self {
        if v == i64::MIN {
            return Self::from_big(BigRational::from_integer(BigInt::from(v)));
        }
        Rational(Repr::Small(v, 1))
    }

    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduces; demote when it fits.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(r))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if b == d {
                    from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    from_i128(
                        *a as i128 * *d as i128 + *c as i128 * *b as i128,
                        *b as i128 * *d as i128,
                    )
                }
            }
            _ => Self::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => Self::from_big(-r.clone()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => from_i128(*d as i128, *n as i128),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Residue modulo a prime `p`, when the denominator is invertible there.
    pub fn reduce_mod(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let n = self.numer().mod_floor(&pb).to_u64()?;
        let d = self.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(n * super::field::pow_mod(d, p - 2, p) % p)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"a"` or `"a/b"` with arbitrary-size integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}
