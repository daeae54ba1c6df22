//! t-radian constants.
//!
//! The unit taxicab circle has circumference 8, so a full turn is 8
//! t-radians and the taxicab value of pi is 4.

use crate::scalar::{Backend, Scalar};

/// The period structure of taxicab angle measure, in a chosen backend.
#[derive(Clone, Debug)]
pub struct TaxicabConstants {
    /// Taxicab pi: 4 t-radians (half the unit-circle circumference).
    pub pi_t: Scalar,
    /// Full turn: 8 t-radians.
    pub period: Scalar,
    /// Quarter turn: 2 t-radians, the width of one branch interval.
    pub quarter_period: Scalar,
}

impl TaxicabConstants {
    pub fn new(backend: Backend) -> TaxicabConstants {
        TaxicabConstants {
            pi_t: backend.int(4),
            period: backend.int(8),
            quarter_period: backend.int(2),
        }
    }
}
