//! Pauli matrices and field directions.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::scalar::Scalar;

/// 2x2 identity.
pub fn identity2<T: Scalar>() -> ComplexMatrix<T> {
    ComplexMatrix::identity(2)
}

pub fn sigma_x<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = T::one().into_complex();
    m[(1, 0)] = T::one().into_complex();
    m
}

pub fn sigma_y<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = Complex::new(T::zero(), -T::one());
    m[(1, 0)] = Complex::new(T::zero(), T::one());
    m
}

pub fn sigma_z<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = T::one().into_complex();
    m[(1, 1)] = (-T::one()).into_complex();
    m
}

/// The Pauli vector `(sigma_x, sigma_y, sigma_z)`.
pub fn pauli_vector<T: Scalar>() -> [ComplexMatrix<T>; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// Unit vector in R^3 defining the dephasing axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldDirection<T> {
    n: [T; 3],
}

impl<T: Scalar> FieldDirection<T> {
    /// Construct from components that must already be normalized to
    /// [`Scalar::EPS_UNIT`].
    pub fn new(n: [T; 3]) -> Result<Self> {
        let norm = Self::norm_of(n);
        if !norm.is_finite() || (norm - T::one()).abs() > T::EPS_UNIT {
            return Err(Error::NotUnitVector { norm: norm.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(Self { n })
    }

    /// Normalize an arbitrary nonzero vector.
    pub fn normalized(v: [T; 3]) -> Result<Self> {
        let norm = Self::norm_of(v);
        if !norm.is_finite() || norm <= T::zero() {
            return Err(Error::NotUnitVector { norm: norm.to_f64().unwrap_or(f64::NAN) });
        }
        Self::new([v[0] / norm, v[1] / norm, v[2] / norm])
    }

    /// Direction at polar angle `theta` from the z-axis in the x-z plane.
    pub fn from_polar_xz(theta: T) -> Self {
        Self { n: [theta.sin(), T::zero(), theta.cos()] }
    }

    pub fn components(&self) -> [T; 3] {
        self.n
    }

    /// The antipodal direction.
    pub fn flipped(&self) -> Self {
        Self { n: [-self.n[0], -self.n[1], -self.n[2]] }
    }

    fn norm_of(v: [T; 3]) -> T {
        (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
    }
}

/// `n . sigma`: Hermitian, traceless, eigenvalues +/-1.
pub fn pauli_dot<T: Scalar>(n: &FieldDirection<T>) -> ComplexMatrix<T> {
    let [nx, ny, nz] = n.components();
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = nz.into_complex();
    m[(1, 1)] = (-nz).into_complex();
    m[(0, 1)] = Complex::new(nx, -ny);
    m[(1, 0)] = Complex::new(nx, ny);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn z_direction_gives_sigma_z() {
        let n = FieldDirection::new([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(pauli_dot(&n), sigma_z::<f64>());
    }

    #[test]
    fn x_direction_gives_sigma_x() {
        let n = FieldDirection::new([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(pauli_dot(&n), sigma_x::<f64>());
    }

    #[test]
    fn diagonal_direction_squares_to_identity() {
        let s = 1.0 / 3.0f64.sqrt();
        let n = FieldDirection::new([s, s, s]).unwrap();
        let m = pauli_dot(&n);
        let sq = m.matmul(&m);
        assert!(sq.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        // traceless and Hermitian, so eigenvalues are -1 and 1
        assert!(m.trace().norm() < 1e-15);
        assert_eq!(m.hermitian_asymmetry(), 0.0);
    }

    #[test]
    fn non_unit_vector_is_rejected() {
        assert!(FieldDirection::new([1.0, 1.0, 0.0]).is_err());
        assert!(FieldDirection::normalized([0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn normalized_accepts_any_nonzero_vector() {
        let n = FieldDirection::normalized([2.0, 1.0, 1.0]).unwrap();
        let [x, y, z] = n.components();
        assert!((x * x + y * y + z * z - 1.0).abs() < 1e-15);
    }

    proptest! {
        // (n . sigma)^2 = I for unit n
        #[test]
        fn pauli_dot_squares_to_identity(seed in prop::array::uniform3(-1.0f64..1.0)) {
            prop_assume!(seed.iter().map(|x| x * x).sum::<f64>() > 1e-4);
            let n = FieldDirection::normalized(seed).unwrap();
            let m = pauli_dot(&n);
            let sq = m.matmul(&m);
            prop_assert!(sq.max_abs_diff(&ComplexMatrix::identity(2)) < 1e-12);
        }
    }
}
