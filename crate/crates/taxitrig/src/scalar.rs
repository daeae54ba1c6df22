//! Dual-backend scalar numbers.
//!
//! Every angle and function value in this crate is a [`Scalar`]: either an
//! arbitrary-precision rational (the exact backend) or an `f64` (the float
//! backend). All breakpoints and branch coefficients of the taxicab trig
//! functions are rational, so the exact backend evaluates everything with
//! zero rounding error; the float backend exists for oracle comparisons and
//! plotting.
//!
//! The two backends never mix: arithmetic between an exact scalar and a
//! float scalar is a caller bug and panics. Convert explicitly with
//! [`Scalar::to_f64`] when a float view of an exact value is needed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive, Zero};

/// Numeric backend selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Arbitrary-precision rational arithmetic; always stores reduced
    /// fractions with a positive denominator.
    Exact,
    /// IEEE-754 double precision.
    Float,
}

impl Backend {
    /// An integer constant in this backend.
    pub fn int(self, n: i64) -> Scalar {
        match self {
            Backend::Exact => Scalar::Exact(BigRational::from_integer(BigInt::from(n))),
            Backend::Float => Scalar::Float(n as f64),
        }
    }

    /// The fraction `n/d` in this backend. Panics if `d == 0`.
    pub fn ratio(self, n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        match self {
            Backend::Exact => Scalar::Exact(BigRational::new(BigInt::from(n), BigInt::from(d))),
            Backend::Float => Scalar::Float(n as f64 / d as f64),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => write!(f, "exact"),
            Backend::Float => write!(f, "float"),
        }
    }
}

/// Errors from scalar construction and angle reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumericError {
    /// A float-backend angle was not finite.
    NonFiniteAngle,
    /// A string did not parse as a number for the requested backend.
    Parse { input: String, reason: String },
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::NonFiniteAngle => write!(f, "angle must be finite"),
            NumericError::Parse { input, reason } => {
                write!(f, "cannot parse {input:?} as a number: {reason}")
            }
        }
    }
}

impl std::error::Error for NumericError {}

/// A number in one of the two backends.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    /// An integer constant in the same backend as `self`.
    pub fn int_like(&self, n: i64) -> Scalar {
        self.backend().int(n)
    }

    /// The fraction `n/d` in the same backend as `self`.
    pub fn ratio_like(&self, n: i64, d: i64) -> Scalar {
        self.backend().ratio(n, d)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_negative(),
            Scalar::Float(v) => *v < 0.0,
        }
    }

    /// Exact comparison against the integer `n` (no coercion between
    /// backends; in float mode this is bit-exact equality with `n as f64`).
    pub fn eq_int(&self, n: i64) -> bool {
        match self {
            Scalar::Exact(r) => r.is_integer() && r.numer() == &BigInt::from(n),
            Scalar::Float(v) => *v == n as f64,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    /// Lossy float view of either backend.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(v) => *v,
        }
    }

    /// Floor as an `i64`. Values in this crate stay well inside `i64` range
    /// once angles are reduced; out-of-range exact values panic.
    pub fn floor_i64(&self) -> i64 {
        match self {
            Scalar::Exact(r) => r.floor().to_integer().to_i64().expect("floor out of i64 range"),
            Scalar::Float(v) => v.floor() as i64,
        }
    }

    /// Parse a number for the given backend.
    ///
    /// The exact backend accepts integers (`-3`), fractions (`9/2`) and
    /// terminating decimals (`3.5`), all read with zero rounding. The float
    /// backend additionally accepts anything `f64::from_str` accepts, and
    /// reads `p/q` as a float division.
    pub fn parse(input: &str, backend: Backend) -> Result<Scalar, NumericError> {
        let s = input.trim();
        if s.is_empty() {
            return Err(NumericError::Parse {
                input: input.to_string(),
                reason: "empty string".to_string(),
            });
        }
        match backend {
            Backend::Exact => parse_exact(s).map(Scalar::Exact).ok_or_else(|| NumericError::Parse {
                input: input.to_string(),
                reason: "expected an integer, p/q fraction, or terminating decimal".to_string(),
            }),
            Backend::Float => parse_float(s).map(Scalar::Float).ok_or_else(|| NumericError::Parse {
                input: input.to_string(),
                reason: "expected a decimal or p/q fraction".to_string(),
            }),
        }
    }
}

fn parse_exact(s: &str) -> Option<BigRational> {
    if let Some((n, d)) = s.split_once('/') {
        let numer: BigInt = n.trim().parse().ok()?;
        let denom: BigInt = d.trim().parse().ok()?;
        if denom.is_zero() {
            return None;
        }
        return Some(BigRational::new(numer, denom));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let frac: BigInt = frac_part.parse().ok()?;
        let numer = int_part.abs() * &scale + frac;
        let numer = if negative { -numer } else { numer };
        return Some(BigRational::new(numer, scale));
    }
    let n: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(n))
}

fn parse_float(s: &str) -> Option<f64> {
    if let Some((n, d)) = s.split_once('/') {
        let numer: f64 = n.trim().parse().ok()?;
        let denom: f64 = d.trim().parse().ok()?;
        if denom == 0.0 {
            return None;
        }
        return Some(numer / denom);
    }
    let v: f64 = s.parse().ok()?;
    if v.is_nan() {
        return None;
    }
    Some(v)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(v) => write!(f, "{v}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $opname:literal) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.$method(b)),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a.$method(b)),
                    _ => panic!(
                        "backend mismatch in scalar {}: exact and float operands never mix",
                        $opname
                    ),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, "addition");
scalar_binop!(Sub, sub, "subtraction");
scalar_binop!(Mul, mul, "multiplication");
scalar_binop!(Div, div, "division");

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            (Scalar::Float(a), Scalar::Float(b)) => a == b,
            // Different backends are never equal; equality must not coerce.
            _ => false,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.partial_cmp(b),
            (Scalar::Float(a), Scalar::Float(b)) => a.partial_cmp(b),
            _ => None,
        }
    }
}
