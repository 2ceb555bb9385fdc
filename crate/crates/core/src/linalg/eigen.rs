//! Hermitian eigendecomposition.
//!
//! Complex Householder reduction to real symmetric tridiagonal form, followed
//! by implicit-shift QL with optional accumulation of the (complex) transform.
//! This is the classic EISPACK `htridi`/`tql2`/`htribk` pipeline in one pass.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::matrix::ComplexMatrix;
use crate::scalar::Scalar;

/// Result of [`eig_hermitian`]: `m = V diag(eigenvalues) V^dagger`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<T>,
    /// Orthonormal eigenvectors as matrix columns, ordered like the values.
    pub eigenvectors: ComplexMatrix<T>,
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// Rejects inputs whose Hermitian asymmetry exceeds [`Scalar::EPS_STRICT`],
/// reporting the largest offending residual.
pub fn eig_hermitian<T: Scalar>(m: &ComplexMatrix<T>) -> Result<HermitianEigen<T>> {
    let (values, vectors) = decompose(m, true)?;
    Ok(HermitianEigen { eigenvalues: values, eigenvectors: vectors.expect("vectors requested") })
}

/// Eigenvalues only, in ascending order. Cheaper than [`eig_hermitian`] since
/// no transform is accumulated.
pub fn eigvals_hermitian<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>> {
    decompose(m, false).map(|(values, _)| values)
}

fn decompose<T: Scalar>(
    m: &ComplexMatrix<T>,
    want_vectors: bool,
) -> Result<(Vec<T>, Option<ComplexMatrix<T>>)> {
    m.ensure_square()?;
    m.ensure_finite()?;
    m.ensure_hermitian(T::EPS_STRICT)?;
    let n = m.rows();

    if n == 1 {
        let vectors = want_vectors.then(|| ComplexMatrix::identity(1));
        return Ok((vec![m[(0, 0)].re], vectors));
    }

    // Work on the exactly Hermitian part; the input may carry asymmetry up to
    // the validation tolerance.
    let mut a = ComplexMatrix::from_fn(n, n, |r, c| {
        (m[(r, c)] + m[(c, r)].conj()).unscale(T::cast(2.0))
    });

    // --- Householder reduction to Hermitian tridiagonal form -------------
    // After the loop, a holds diagonal d and complex subdiagonal e; the
    // reflectors (v, g) with H_k = I - g v v^dagger are kept for accumulation.
    let mut reflectors: Vec<(usize, Vec<Complex<T>>, T)> = Vec::new();
    for k in 0..n.saturating_sub(2) {
        let col_norm2 = (k + 1..n).fold(T::zero(), |s, i| s + a[(i, k)].norm_sqr());
        let alpha = col_norm2.sqrt();
        if alpha.is_zero() {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let x0_abs = x0.norm();
        let phase =
            if x0_abs > T::zero() { x0.unscale(x0_abs) } else { T::one().into_complex() };
        let beta = -phase.scale(alpha);

        // v = x - beta e1, ||v||^2 = 2 alpha (alpha + |x0|) > 0
        let vnorm2 = T::cast(2.0) * alpha * (alpha + x0_abs);
        let g = T::cast(2.0) / vnorm2;
        let mut v = vec![Complex::zero(); n];
        v[k + 1] = x0 - beta;
        for (i, vi) in v.iter_mut().enumerate().take(n).skip(k + 2) {
            *vi = a[(i, k)];
        }

        // p = g A v, K = (g/2) v^dagger p, w = p - K v,
        // A <- A - v w^dagger - w v^dagger  (trailing block only)
        let mut p = vec![Complex::zero(); n];
        for i in k + 1..n {
            let mut acc = Complex::zero();
            for j in k + 1..n {
                acc += a[(i, j)] * v[j];
            }
            p[i] = acc.scale(g);
        }
        let vhp = (k + 1..n).fold(Complex::zero(), |s, i| s + v[i].conj() * p[i]);
        let kk = vhp.re * g / T::cast(2.0); // v^dagger A v is real for Hermitian A
        let mut w = p;
        for i in k + 1..n {
            w[i] -= v[i].scale(kk);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let delta = v[i] * w[j].conj() + w[i] * v[j].conj();
                a[(i, j)] -= delta;
            }
        }

        a[(k + 1, k)] = beta;
        a[(k, k + 1)] = beta.conj();
        for i in k + 2..n {
            a[(i, k)] = Complex::zero();
            a[(k, i)] = Complex::zero();
        }
        reflectors.push((k, v, g));
    }

    let mut d: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    let e_complex: Vec<Complex<T>> = (0..n - 1).map(|i| a[(i + 1, i)]).collect();

    // --- Strip subdiagonal phases to reach a real tridiagonal ------------
    let mut phases = vec![T::one().into_complex(); n];
    let mut e: Vec<T> = vec![T::zero(); n];
    for i in 0..n - 1 {
        let abs = e_complex[i].norm();
        e[i] = abs;
        phases[i + 1] =
            if abs > T::zero() { phases[i] * e_complex[i].unscale(abs) } else { phases[i] };
    }

    // --- Accumulate Q = H_0 H_1 ... D (only when vectors are wanted) ------
    let mut q = want_vectors.then(|| {
        let mut q = ComplexMatrix::identity(n);
        for (k, v, g) in reflectors.iter().rev() {
            // Q <- (I - g v v^dagger) Q; rows and columns <= k are untouched.
            for j in k + 1..n {
                let mut s = Complex::zero();
                for i in k + 1..n {
                    s += v[i].conj() * q[(i, j)];
                }
                s = s.scale(*g);
                for i in k + 1..n {
                    let upd = v[i] * s;
                    q[(i, j)] -= upd;
                }
            }
        }
        for j in 0..n {
            let ph = phases[j];
            for i in 0..n {
                let scaled = q[(i, j)] * ph;
                q[(i, j)] = scaled;
            }
        }
        q
    });

    // --- Implicit-shift QL on (d, e), rotating Q's columns ---------------
    ql_implicit(&mut d, &mut e, q.as_mut())?;

    // --- Sort ascending, permuting columns alongside ----------------------
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("finite eigenvalues"));
    let values: Vec<T> = order.iter().map(|&i| d[i]).collect();
    let vectors = q.map(|q| ComplexMatrix::from_fn(n, n, |r, c| q[(r, order[c])]));
    Ok((values, vectors))
}

const MAX_QL_SWEEPS: usize = 60;

fn ql_implicit<T: Scalar>(
    d: &mut [T],
    e: &mut [T],
    mut q: Option<&mut ComplexMatrix<T>>,
) -> Result<()> {
    let n = d.len();
    e[n - 1] = T::zero();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                // float-add test: e[m] negligible relative to its neighbors
                if e[m].abs() + dd == dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::EigenConvergence { iterations: MAX_QL_SWEEPS });
            }

            let mut g = (d[l + 1] - d[l]) / (T::cast(2.0) * e[l]);
            let mut r = g.hypot(T::one());
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = T::one();
            let mut c = T::one();
            let mut p = T::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r.is_zero() {
                    d[i + 1] = d[i + 1] - p;
                    e[m] = T::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + T::cast(2.0) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(q) = q.as_deref_mut() {
                    for row in 0..q.rows() {
                        let fz = q[(row, i + 1)];
                        let qz = q[(row, i)];
                        q[(row, i + 1)] = qz.scale(s) + fz.scale(c);
                        q[(row, i)] = qz.scale(c) - fz.scale(s);
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] = d[l] - p;
            e[l] = g;
            e[m] = T::zero();
        }
    }
    Ok(())
}
