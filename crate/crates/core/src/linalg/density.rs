//! Density matrices and the trace distance.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::eigen::eigvals_hermitian;
use crate::linalg::matrix::ComplexMatrix;
use crate::scalar::Scalar;

/// Hard cap on the register size; dense `2^N x 2^N` storage beyond this is
/// not sensible on one machine.
pub const MAX_QUBITS: usize = 12;

/// Hermitian, unit-trace, positive-semidefinite matrix of dimension `2^N`.
///
/// All three properties are validated on construction, against
/// [`Scalar::EPS_STRICT`] for Hermiticity and trace and [`Scalar::EPS_PSD`]
/// for the smallest eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix<T> {
    n_qubits: usize,
    mat: ComplexMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validate and wrap a candidate state.
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self> {
        mat.ensure_square()?;
        mat.ensure_finite()?;
        let dim = mat.rows();
        let n_qubits = qubit_count(dim)?;
        mat.ensure_hermitian(T::EPS_STRICT)?;
        let trace_dev = (mat.trace() - T::one().into_complex()).norm();
        if trace_dev > T::EPS_STRICT {
            return Err(Error::TraceNotOne { deviation: trace_dev.to_f64().unwrap_or(f64::NAN) });
        }
        let min_eig = eigvals_hermitian(&mat)?[0];
        if min_eig < -T::EPS_PSD {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min_eig.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { n_qubits, mat })
    }

    /// Pure-state projector `|psi><psi|`; the amplitude vector is normalized.
    pub fn from_pure(psi: &[Complex<T>]) -> Result<Self> {
        let norm2 = psi.iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b);
        if norm2 <= T::zero() {
            return Err(Error::NotUnitVector { norm: 0.0 });
        }
        let norm = norm2.sqrt();
        let scaled: Vec<Complex<T>> = psi.iter().map(|z| z.unscale(norm)).collect();
        Self::new(ComplexMatrix::outer(&scaled))
    }

    /// `I / 2^N`.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount { n: n_qubits, max: MAX_QUBITS });
        }
        let dim = 1usize << n_qubits;
        let w = T::one() / T::cast(dim as f64);
        Ok(Self { n_qubits, mat: ComplexMatrix::identity(dim).scale_re(w) })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.mat
    }

    /// `tr rho^2`, equal to one exactly for pure states.
    pub fn purity(&self) -> T {
        // tr(rho rho) = sum_ij rho_ij conj(rho_ij) for Hermitian rho
        self.mat.entries().iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, b| a + b)
    }

    /// Reduced state of qubit `k` (1-based, most significant first), tracing
    /// out all others.
    pub fn single_qubit_marginal(&self, k: usize) -> Result<ComplexMatrix<T>> {
        if k == 0 || k > self.n_qubits {
            return Err(Error::UnsupportedQubitCount { n: k, max: self.n_qubits });
        }
        let shift = self.n_qubits - k; // bit position of qubit k in the index
        let dim = self.dim();
        let mut out = ComplexMatrix::zeros(2, 2);
        for a in 0..dim {
            let abit = (a >> shift) & 1;
            let rest = a & !(1 << shift);
            for bbit in 0..2usize {
                let b = rest | (bbit << shift);
                out[(abit, bbit)] += self.mat[(a, b)];
            }
        }
        Ok(out)
    }
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim < 2 || !dim.is_power_of_two() {
        return Err(Error::NotQubitDimension { dim });
    }
    let n = dim.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::UnsupportedQubitCount { n, max: MAX_QUBITS });
    }
    Ok(n)
}

/// Trace distance `||rho - sigma||_1 / 2`, in `[0, 1]`.
pub fn trace_distance<T: Scalar>(rho: &DensityMatrix<T>, sigma: &DensityMatrix<T>) -> Result<T> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), got: sigma.dim() });
    }
    let diff = rho.matrix() - sigma.matrix();
    let vals = eigvals_hermitian(&diff)?;
    let half = T::cast(0.5);
    let sum_abs = vals.iter().fold(T::zero(), |s, v| s + v.abs());
    Ok((half * sum_abs).min(T::one()))
}
