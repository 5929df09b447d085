//! Exact field elements: arbitrary-precision rationals and residues mod an
//! odd prime. No floating point appears anywhere in this crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

/// Default coefficient field for prime-field trial runs: 2^31 - 1 (Mersenne).
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// The two coefficient fields supported everywhere: the rationals, or F_p for
/// an odd prime p >= 2^20 (large enough that random rank computations mod p
/// agree with the rational rank in practice).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Validates the prime-field constraints (odd prime, p >= 2^20).
    pub fn validate(self) -> crate::Result<Self> {
        if let FieldSpec::Prime(p) = self {
            if p < (1 << 20) {
                return Err(crate::Error::InvalidInput(format!(
                    "prime modulus {p} is below the 2^20 minimum"
                )));
            }
            if p % 2 == 0 || !is_prime_u64(p) {
                return Err(crate::Error::InvalidInput(format!(
                    "{p} is not an odd prime"
                )));
            }
        }
        Ok(self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

/// Deterministic trial-division primality check; the moduli in scope are
/// far below the range where this becomes slow.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: a rational in lowest terms with positive
/// denominator, or a residue modulo a prime carried with its modulus.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rat(BigRational),
    Mod { val: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod { val: 0, p },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Mod { val: 1, p },
        }
    }

    /// Embeds a signed integer into the chosen field.
    pub fn from_int(v: i64, field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let m = v.rem_euclid(p as i64) as u64;
                Scalar::Mod { val: m, p }
            }
        }
    }

    /// Exact rational from numerator and denominator (reduced on construction).
    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { val, .. } => *val == 1,
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Mod { val, p } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Mod {
                    val: inv_mod(*val, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The underlying rational; panics when the element lives in F_p.
    pub fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Mod { .. } => panic!("expected a rational scalar"),
        }
    }

    /// True when the rational is a (positive or negative) integer.
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_integer(),
            Scalar::Mod { .. } => true,
        }
    }
}

fn check_same_prime(a: u64, b: u64) -> u64 {
    assert!(a == b, "mixed-field scalar arithmetic: F_{a} vs F_{b}");
    a
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime and a nonzero mod p
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert!(r0 == 1, "element not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Mod { val: a, p: pa }, Scalar::Mod { val: b, p: pb }) => {
                pa == pb && a == b
            }
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { val: a, p: pa }, Scalar::Mod { val: b, p: pb }) => {
                let p = check_same_prime(*pa, *pb);
                Scalar::Mod { val: (a + b) % p, p }
            }
            _ => panic!("mixed-field scalar arithmetic: rational vs prime"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { val: a, p: pa }, Scalar::Mod { val: b, p: pb }) => {
                let p = check_same_prime(*pa, *pb);
                Scalar::Mod { val: (a + p - b) % p, p }
            }
            _ => panic!("mixed-field scalar arithmetic: rational vs prime"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { val: a, p: pa }, Scalar::Mod { val: b, p: pb }) => {
                let p = check_same_prime(*pa, *pb);
                Scalar::Mod { val: mul_mod(*a, *b, p), p }
            }
            _ => panic!("mixed-field scalar arithmetic: rational vs prime"),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { val, p } => Scalar::Mod {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { val, .. } => write!(f, "{val}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
