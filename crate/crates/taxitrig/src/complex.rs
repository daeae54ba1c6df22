//! Minimal complex pairs over [`Scalar`].
//!
//! The literal closed forms of taxicab sine and cosine are written with
//! powers of the imaginary unit as coefficients. Evaluating them as stated
//! requires genuine (real, imaginary) pair arithmetic so that the final
//! "imaginary part is exactly zero" claim is something we can check, not
//! something we simplified away beforehand.

use crate::scalar::Scalar;

/// A complex number with both components in the same scalar backend.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexScalar {
    pub fn new(re: Scalar, im: Scalar) -> ComplexScalar {
        assert_eq!(re.backend(), im.backend(), "complex components must share a backend");
        ComplexScalar { re, im }
    }

    pub fn from_real(re: Scalar) -> ComplexScalar {
        let im = re.int_like(0);
        ComplexScalar { re, im }
    }

    pub fn add(&self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    pub fn mul(&self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }

    /// Multiply both components by a real scalar.
    pub fn scale(&self, factor: &Scalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re * factor,
            im: &self.im * factor,
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}
