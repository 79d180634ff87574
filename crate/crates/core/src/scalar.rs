//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Field {
    /// Exact rationals.
    Rational,
    /// Integers modulo a prime `p` with `p < 2^32`.
    Prime(u64),
}

/// Default prime for modular runs: a standard large CAS test prime.
pub const DEFAULT_PRIME: u64 = 32003;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 32 {
            return Err(Error::Invalid(format!("prime {p} too large (need p < 2^32)")));
        }
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q` or `Fp:<p>`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad field spec `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Invalid(format!("bad field spec `{s}` (expected Q or Fp:<p>)")))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { v: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Mod { v: m, p: *p }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let m = v.mod_floor(&BigInt::from(*p));
                let (_, digits) = m.to_u64_digits();
                let v = digits.first().copied().unwrap_or(0);
                Scalar::Mod { v, p: *p }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

use num::Integer;

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator (enforced by `BigRational`); prime-field values are
/// reduced representatives `0 <= v < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { v: u64, p: u64 },
}

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^32, so the product fits in u64.
    (a * b) % p
}

/// Modular inverse via extended Euclid; panics on 0.
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F_{p}");
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert!(r0 == 1);
    s0.rem_euclid(p as i128) as u64
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    pub fn is_minus_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => (-r).is_one(),
            Scalar::Mod { v, p } => *p != 1 && *v == p - 1,
        }
    }

    /// Sign for display purposes; prime-field values are never "negative".
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    fn binop(
        &self,
        rhs: &Scalar,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        fp: impl Fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Mod { v: fp(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a + b, addm)
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a - b, subm)
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a * b, mulm)
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, |a, b| a / b, |a, b, p| mulm(a, invm(b, p), p))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { v, p } => Scalar::Mod { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "division by zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Mod { v, p } => Scalar::Mod { v: invm(*v, *p), p: *p },
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// The rational value as a reduced numerator/denominator pair.
    pub fn as_rational(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            Scalar::Rat(r) => Some((r.numer(), r.denom())),
            Scalar::Mod { .. } => None,
        }
    }

    /// The prime-field representative in `0..p`.
    pub fn as_mod(&self) -> Option<u64> {
        match self {
            Scalar::Mod { v, .. } => Some(*v),
            Scalar::Rat(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}
