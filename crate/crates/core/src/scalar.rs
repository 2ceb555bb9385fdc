//! Floating-point scalar abstraction.
//!
//! All numerics in this crate are generic over the real scalar type through
//! [`Scalar`]; complex entries are `num_complex::Complex<T>`. Validation
//! tolerances travel with the scalar type, since a meaningful residual bound
//! for `f64` is unattainable in `f32`.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar type underlying all matrices and spectral models.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance for quantities that are exact up to a handful of rounding
    /// steps: unit-vector norms, projector algebra, conjugation symmetry.
    const EPS_UNIT: Self;

    /// Tolerance for accumulated dense-linear-algebra residuals: Hermiticity,
    /// unit trace, eigendecomposition reconstruction, orthonormality.
    const EPS_STRICT: Self;

    /// Eigenvalues of positive-semidefinite matrices may round below zero by
    /// this much; values in `[-EPS_PSD, 0)` are clamped, anything lower is an
    /// error.
    const EPS_PSD: Self;

    /// Tolerance for derived quantities one noise amplification away from the
    /// strict tier (e.g. off-diagonal residue of a nominally diagonal beta
    /// matrix).
    const EPS_DIAG: Self;

    /// Lossy conversion from an `f64` literal.
    fn cast(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 literal converts to every Scalar")
    }

    /// Promote to a complex number with zero imaginary part.
    fn into_complex(self) -> Complex<Self> {
        Complex::new(self, Self::zero())
    }
}

impl Scalar for f64 {
    const EPS_UNIT: Self = 1e-12;
    const EPS_STRICT: Self = 1e-10;
    const EPS_PSD: Self = 1e-9;
    const EPS_DIAG: Self = 1e-8;
}

impl Scalar for f32 {
    const EPS_UNIT: Self = 1e-6;
    const EPS_STRICT: Self = 1e-4;
    const EPS_PSD: Self = 1e-3;
    const EPS_DIAG: Self = 1e-2;
}
