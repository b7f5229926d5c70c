//! Points of the extended complex plane.
//!
//! The point at infinity is an explicit variant, never a large float. The
//! usual conventions apply: `z + inf = inf`, `1/0 = inf`, `1/inf = 0`. The
//! undefined combinations (`inf + inf` in a difference sense, `0 * inf`) are
//! avoided by the operations defined here.

use crate::error::{Result, SrgError};

/// A point of the extended complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum XComplex {
    Finite { re: f64, im: f64 },
    Infinity,
}

impl XComplex {
    pub const INFINITY: XComplex = XComplex::Infinity;
    pub const ZERO: XComplex = XComplex::Finite { re: 0.0, im: 0.0 };
    pub const ONE: XComplex = XComplex::Finite { re: 1.0, im: 0.0 };

    /// Finite point; rejects NaN components.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_nan() || im.is_nan() {
            return Err(SrgError::InvalidParameter(
                "NaN component in complex point".into(),
            ));
        }
        Ok(XComplex::Finite { re, im })
    }

    /// Finite point from components known to be non-NaN.
    pub fn finite(re: f64, im: f64) -> Self {
        debug_assert!(!re.is_nan() && !im.is_nan());
        XComplex::Finite { re, im }
    }

    pub fn from_polar(r: f64, phi: f64) -> Self {
        XComplex::finite(r * phi.cos(), r * phi.sin())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, XComplex::Finite { .. })
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, XComplex::Infinity)
    }

    /// Real part of a finite point; `None` at infinity.
    pub fn re(&self) -> Option<f64> {
        match self {
            XComplex::Finite { re, .. } => Some(*re),
            XComplex::Infinity => None,
        }
    }

    pub fn im(&self) -> Option<f64> {
        match self {
            XComplex::Finite { im, .. } => Some(*im),
            XComplex::Infinity => None,
        }
    }

    pub fn modulus(&self) -> f64 {
        match self {
            XComplex::Finite { re, im } => re.hypot(*im),
            XComplex::Infinity => f64::INFINITY,
        }
    }

    /// Principal argument in (-pi, pi]; 0 at the origin, `None` at infinity.
    pub fn arg(&self) -> Option<f64> {
        match self {
            XComplex::Finite { re, im } => {
                if *re == 0.0 && *im == 0.0 {
                    Some(0.0)
                } else {
                    Some(im.atan2(*re))
                }
            }
            XComplex::Infinity => None,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            XComplex::Finite { re, im } => XComplex::finite(*re, -im),
            XComplex::Infinity => XComplex::Infinity,
        }
    }

    /// The inversion map `z -> conj(z)^{-1}` with `0 <-> inf`.
    ///
    /// In polar form `r e^{i phi} -> (1/r) e^{i phi}`: the angle is kept and
    /// the magnitude is inverted.
    pub fn invert(&self) -> Self {
        match self {
            XComplex::Infinity => XComplex::ZERO,
            XComplex::Finite { re, im } => {
                let n2 = re * re + im * im;
                if n2 == 0.0 {
                    XComplex::Infinity
                } else {
                    // conj(z)^{-1} = z / |z|^2
                    XComplex::finite(re / n2, im / n2)
                }
            }
        }
    }

    /// `alpha * z + beta` with real coefficients; infinity maps to infinity.
    pub fn affine(&self, alpha: f64, beta: f64) -> Self {
        match self {
            XComplex::Finite { re, im } => XComplex::finite(alpha * re + beta, alpha * im),
            XComplex::Infinity => XComplex::Infinity,
        }
    }

    /// Product on the extended plane; `None` for the undefined `0 * inf`.
    pub fn mul(&self, other: &XComplex) -> Option<XComplex> {
        match (self, other) {
            (XComplex::Finite { re: a, im: b }, XComplex::Finite { re: c, im: d }) => {
                Some(XComplex::finite(a * c - b * d, a * d + b * c))
            }
            (XComplex::Infinity, z) | (z, XComplex::Infinity) => {
                if z.is_finite() && z.modulus() == 0.0 {
                    None
                } else {
                    Some(XComplex::Infinity)
                }
            }
        }
    }

    /// Sum on the extended plane (`z + inf = inf`).
    pub fn add(&self, other: &XComplex) -> XComplex {
        match (self, other) {
            (XComplex::Finite { re: a, im: b }, XComplex::Finite { re: c, im: d }) => {
                XComplex::finite(a + c, b + d)
            }
            _ => XComplex::Infinity,
        }
    }

    /// Euclidean distance between finite points; infinite when exactly one
    /// operand is the point at infinity, zero when both are.
    pub fn dist(&self, other: &XComplex) -> f64 {
        match (self, other) {
            (XComplex::Finite { re: a, im: b }, XComplex::Finite { re: c, im: d }) => {
                (a - c).hypot(b - d)
            }
            (XComplex::Infinity, XComplex::Infinity) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_rejected() {
        assert!(XComplex::new(f64::NAN, 0.0).is_err());
        assert!(XComplex::new(0.0, f64::NAN).is_err());
    }

    #[test]
    fn inversion_swaps_zero_and_infinity() {
        assert_eq!(XComplex::ZERO.invert(), XComplex::Infinity);
        assert_eq!(XComplex::Infinity.invert(), XComplex::ZERO);
    }

    #[test]
    fn inversion_keeps_angle_inverts_magnitude() {
        let z = XComplex::from_polar(2.0, 0.7);
        let w = z.invert();
        assert!((w.modulus() - 0.5).abs() < 1e-15);
        assert!((w.arg().unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn zero_times_infinity_is_undefined() {
        assert!(XComplex::ZERO.mul(&XComplex::Infinity).is_none());
        assert!(XComplex::Infinity.mul(&XComplex::ZERO).is_none());
        assert_eq!(
            XComplex::ONE.mul(&XComplex::Infinity),
            Some(XComplex::Infinity)
        );
    }
}
