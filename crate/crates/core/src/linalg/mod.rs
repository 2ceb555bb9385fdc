//! Dense complex linear algebra shared by every other module: Kronecker
//! products, Hermitian eigendecomposition, Pauli algebra, density matrices,
//! trace distance.

mod density;
mod eigen;
mod matrix;
mod pauli;

pub use density::{trace_distance, DensityMatrix, MAX_QUBITS};
pub use eigen::{eig_hermitian, eigvals_hermitian, HermitianEigen};
pub use matrix::{kron, kron_all, ComplexMatrix};
pub use pauli::{identity2, pauli_dot, pauli_vector, sigma_x, sigma_y, sigma_z, FieldDirection};
