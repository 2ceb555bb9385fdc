//! Exact collective-dephasing dynamics for registers of noninteracting
//! qubits in a fluctuating homogeneous field.
//!
//! A register of `N` identical qubits coupled to the same noisy field of
//! orientation `n` dephases collectively: the ensemble-averaged state is an
//! exact Kraus map fully determined by the characteristic function of the
//! noise spectrum. This crate implements
//!
//! * [`linalg`] — dense complex matrices, Hermitian eigendecomposition,
//!   Pauli algebra, density matrices and the trace distance;
//! * [`spectra`] — noise spectral models and their characteristic functions;
//! * [`channel`] — the dephasing channel itself: projector families, the
//!   Toeplitz coefficient matrix, Kraus operators, exact time evolution and
//!   the asymptotic state;
//! * [`states`] — Bell, Bell-diagonal, W, phased-W and multipartite Werner
//!   states, plus the beta-matrix geometry of two-qubit states;
//! * [`entanglement`] — concurrence, the k-separability bound and the
//!   critical field angles for W states;
//! * [`sampling`] — seeded random fixtures for the randomized invariant
//!   suites.
//!
//! All numerics are generic over the real scalar through
//! [`scalar::Scalar`]; the `*64` aliases below fix `f64`, which is what the
//! validation tolerances are calibrated for.

pub mod channel;
pub mod entanglement;
pub mod error;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod spectra;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Complex double-precision scalar.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex matrix over `f64`.
pub type Matrix64 = linalg::ComplexMatrix<f64>;
/// Density matrix over `f64`.
pub type Density64 = linalg::DensityMatrix<f64>;
/// Field direction over `f64`.
pub type Direction64 = linalg::FieldDirection<f64>;
/// Spectral model over `f64`.
pub type Spectrum64 = spectra::SpectralModel<f64>;
