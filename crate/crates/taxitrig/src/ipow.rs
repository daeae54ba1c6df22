//! Integer powers of the imaginary unit.
//!
//! The closed-form expressions for taxicab sine and cosine use `i^(k-1)` and
//! `i^(k-2)` as sign generators. Only four values ever occur; this module is
//! the cyclic lookup, valid for any integer exponent of either sign.

use crate::complex::ComplexScalar;
use crate::scalar::Backend;

/// `i` raised to an integer exponent: one of `1`, `i`, `-1`, `-i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImaginaryUnitPower {
    exponent: i64,
    re: i8,
    im: i8,
}

/// Cyclic lookup of `i^exponent` by `exponent mod 4` (mathematical modulus,
/// so negative exponents work: `i^-2 = -1`).
pub fn i_pow(exponent: i64) -> ImaginaryUnitPower {
    let (re, im) = match exponent.rem_euclid(4) {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        3 => (0, -1),
        _ => unreachable!(),
    };
    ImaginaryUnitPower { exponent, re, im }
}

impl ImaginaryUnitPower {
    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// Real component, in `{-1, 0, 1}`.
    pub fn re(&self) -> i8 {
        self.re
    }

    /// Imaginary component, in `{-1, 0, 1}`.
    pub fn im(&self) -> i8 {
        self.im
    }

    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    /// The value as `+1` or `-1` for even exponents.
    ///
    /// Panics for odd exponents; the parity-split expressions only ever
    /// reach powers of `i` with even exponent.
    pub fn real_sign(&self) -> i64 {
        assert!(self.is_real(), "i^{} is imaginary, not a real sign", self.exponent);
        self.re as i64
    }

    pub fn mul(&self, rhs: &ImaginaryUnitPower) -> ImaginaryUnitPower {
        i_pow(self.exponent + rhs.exponent)
    }

    pub fn to_complex(&self, backend: Backend) -> ComplexScalar {
        ComplexScalar::new(backend.int(self.re as i64), backend.int(self.im as i64))
    }
}
