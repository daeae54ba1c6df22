//! Angles in t-radians with canonical reduction.
//!
//! Every evaluation in this crate starts from an [`Angle`]: the raw input
//! reduced into `[0, 8)` together with its branch index. The branch index
//! `k` selects the 2-t-radian interval `[2(k-1), 2k)` containing the
//! reduced angle, so `k` runs 1..=4 and coincides with the quadrant.
//!
//! Breakpoint membership is half-open on the left: an angle exactly at a
//! breakpoint belongs to the branch that begins there. In float mode a
//! value infinitesimally below a breakpoint stays in the lower branch; no
//! epsilon snapping is performed.

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::scalar::{NumericError, Scalar};

/// A t-radian angle with its canonical reduction and branch index.
#[derive(Clone, Debug)]
pub struct Angle {
    raw: Scalar,
    reduced: Scalar,
    branch_k: u8,
}

/// Reduce a t-radian value into `[0, 8)` and classify its branch.
///
/// Exact-backend reduction subtracts an exact integer multiple of 8. The
/// float backend uses the IEEE remainder, which is exact whenever the
/// reduced value is representable.
pub fn reduce_angle(theta: Scalar) -> Result<Angle, NumericError> {
    Angle::reduce(theta)
}

impl Angle {
    pub fn reduce(theta: Scalar) -> Result<Angle, NumericError> {
        let reduced = match &theta {
            Scalar::Exact(r) => {
                let period = BigRational::from_integer(BigInt::from(8));
                let turns = (r / &period).floor();
                Scalar::Exact(r - period * turns)
            }
            Scalar::Float(v) => {
                if !v.is_finite() {
                    return Err(NumericError::NonFiniteAngle);
                }
                let mut r = v.rem_euclid(8.0);
                // rem_euclid can round up to the modulus for tiny negatives
                if r >= 8.0 {
                    r -= 8.0;
                }
                Scalar::Float(r)
            }
        };
        let branch_k = (reduced.floor_i64() / 2 + 1).clamp(1, 4) as u8;
        Ok(Angle {
            raw: theta,
            reduced,
            branch_k,
        })
    }

    /// Convenience constructor for float angles.
    pub fn from_f64(theta: f64) -> Result<Angle, NumericError> {
        Angle::reduce(Scalar::Float(theta))
    }

    /// The angle as originally given.
    pub fn raw(&self) -> &Scalar {
        &self.raw
    }

    /// The canonical representative in `[0, 8)`.
    pub fn reduced(&self) -> &Scalar {
        &self.reduced
    }

    /// Branch index `k` in 1..=4 with `reduced` in `[2(k-1), 2k)`.
    pub fn branch_k(&self) -> u8 {
        self.branch_k
    }

    /// Quadrant 1..=4; the 2-t-radian quadrant bins coincide with the
    /// branch bins.
    pub fn quadrant(&self) -> u8 {
        self.branch_k
    }

    pub fn backend(&self) -> crate::scalar::Backend {
        self.reduced.backend()
    }

    /// True when the reduced angle is exactly the integer `n`.
    pub fn reduced_is(&self, n: i64) -> bool {
        self.reduced.eq_int(n)
    }

    /// True at the branch breakpoints 0, 2, 4, 6.
    pub fn at_breakpoint(&self) -> bool {
        [0, 2, 4, 6].iter().any(|&n| self.reduced_is(n))
    }
}
