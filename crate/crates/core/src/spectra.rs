//! Noise spectral models and their characteristic functions.
//!
//! The dephasing channel consumes nothing from the noise distribution
//! `p(omega)` beyond its characteristic function `phi(t) = integral of
//! p(omega) exp(i omega t)`. Times and frequencies are in natural units
//! (hbar = 1); the paper-scale scenarios use parameters of order one.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Noise distribution over the qubit level splitting.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralModel<T> {
    /// Cauchy-Lorentz line `gamma / (pi ((omega - omega0)^2 + gamma^2))`.
    Lorentzian { omega0: T, gamma: T },
    /// Normal distribution with mean `omega0` and standard deviation `sigma`.
    Gaussian { omega0: T, sigma: T },
    /// Uniform distribution on `[0, omega0]`.
    Box { omega0: T },
    /// Arbitrary density tabulated on an ascending grid of `(omega, p)`.
    ///
    /// Treated as absolutely continuous: the asymptotic-state machinery
    /// assumes `phi(t) -> 0`, which a finite table cannot certify.
    Tabulated { samples: Vec<(T, T)> },
}

impl<T: Scalar> SpectralModel<T> {
    pub fn lorentzian(omega0: T, gamma: T) -> Result<Self> {
        if !(gamma > T::zero()) || !gamma.is_finite() || !omega0.is_finite() {
            return Err(Error::InvalidSpectralModel(format!(
                "Lorentzian needs finite omega0 and gamma > 0, got ({omega0}, {gamma})"
            )));
        }
        Ok(Self::Lorentzian { omega0, gamma })
    }

    pub fn gaussian(omega0: T, sigma: T) -> Result<Self> {
        if !(sigma > T::zero()) || !sigma.is_finite() || !omega0.is_finite() {
            return Err(Error::InvalidSpectralModel(format!(
                "Gaussian needs finite omega0 and sigma > 0, got ({omega0}, {sigma})"
            )));
        }
        Ok(Self::Gaussian { omega0, sigma })
    }

    pub fn box_dist(omega0: T) -> Result<Self> {
        if !(omega0 > T::zero()) || !omega0.is_finite() {
            return Err(Error::InvalidSpectralModel(format!(
                "box distribution needs omega0 > 0, got {omega0}"
            )));
        }
        Ok(Self::Box { omega0 })
    }

    /// Validate a tabulated density: ascending grid, nonnegative values,
    /// unit normalization within 1e-6 (trapezoidal).
    pub fn tabulated(samples: Vec<(T, T)>) -> Result<Self> {
        ensure_grid(&samples)?;
        if let Some((omega, p)) = samples.iter().find(|(_, p)| *p < T::zero()) {
            return Err(Error::InvalidSpectralModel(format!(
                "tabulated density is negative at omega = {omega}: {p}"
            )));
        }
        let total = trapezoid(&samples, |(_, p)| p.into_complex()).re;
        let tol = T::cast(1e-6).max(T::EPS_STRICT);
        if (total - T::one()).abs() > tol {
            return Err(Error::InvalidSpectralModel(format!(
                "tabulated density integrates to {total}, expected 1"
            )));
        }
        Ok(Self::Tabulated { samples })
    }

    /// Characteristic function `phi(t)`; `phi(0) = 1` for every model and
    /// `|phi| <= 1` up to quadrature error for tabulated densities.
    pub fn characteristic_function(&self, t: T) -> Complex<T> {
        match self {
            Self::Lorentzian { omega0, gamma } => {
                phase(*omega0 * t).scale((-*gamma * t.abs()).exp())
            }
            Self::Gaussian { omega0, sigma } => {
                let half = T::cast(0.5);
                phase(*omega0 * t).scale((-half * *sigma * *sigma * t * t).exp())
            }
            Self::Box { omega0 } => box_cf(*omega0 * t),
            Self::Tabulated { samples } => {
                quadrature_cf(samples, t).expect("samples validated on construction")
            }
        }
    }

    /// Probability density at `omega`.
    pub fn pdf(&self, omega: T) -> T {
        match self {
            Self::Lorentzian { omega0, gamma } => {
                let d = omega - *omega0;
                *gamma / (T::PI() * (d * d + *gamma * *gamma))
            }
            Self::Gaussian { omega0, sigma } => {
                let z = (omega - *omega0) / *sigma;
                let half = T::cast(0.5);
                (-half * z * z).exp() / (*sigma * (T::cast(2.0) * T::PI()).sqrt())
            }
            // Heaviside edges: interior value on [0, omega0), zero outside.
            Self::Box { omega0 } => {
                if omega >= T::zero() && omega < *omega0 {
                    T::one() / *omega0
                } else {
                    T::zero()
                }
            }
            Self::Tabulated { samples } => {
                if omega < samples[0].0 || omega > samples[samples.len() - 1].0 {
                    return T::zero();
                }
                // linear interpolation on the grid
                let idx = samples.partition_point(|(w, _)| *w <= omega);
                if idx == 0 {
                    return samples[0].1;
                }
                if idx == samples.len() {
                    return samples[idx - 1].1;
                }
                let (w0, p0) = samples[idx - 1];
                let (w1, p1) = samples[idx];
                p0 + (p1 - p0) * (omega - w0) / (w1 - w0)
            }
        }
    }
}

/// `exp(i x)`.
fn phase<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x.cos(), x.sin())
}

/// `(exp(i x) - 1) / (i x)` with a series branch near zero; continuous with
/// value 1 at `x = 0`.
fn box_cf<T: Scalar>(x: T) -> Complex<T> {
    if x.abs() < T::cast(1e-6) {
        // 1 + ix/2 - x^2/6 - i x^3/24, truncation below 1e-25
        let x2 = x * x;
        Complex::new(
            T::one() - x2 / T::cast(6.0),
            x / T::cast(2.0) - x2 * x / T::cast(24.0),
        )
    } else {
        (phase(x) - T::one().into_complex()) / Complex::new(T::zero(), x)
    }
}

fn ensure_grid<T: Scalar>(samples: &[(T, T)]) -> Result<()> {
    if samples.len() < 2 {
        return Err(Error::InvalidSpectralGrid);
    }
    if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(Error::InvalidSpectralGrid);
    }
    if samples.iter().any(|(w, p)| !w.is_finite() || !p.is_finite()) {
        return Err(Error::InvalidSpectralGrid);
    }
    Ok(())
}

fn trapezoid<T: Scalar>(samples: &[(T, T)], f: impl Fn((T, T)) -> Complex<T>) -> Complex<T> {
    let half = T::cast(0.5);
    samples
        .windows(2)
        .map(|w| (f(w[0]) + f(w[1])).scale(half * (w[1].0 - w[0].0)))
        .fold(Complex::zero(), |a, b| a + b)
}

/// Trapezoidal quadrature of `integral p(omega) exp(i omega t) domega` on a
/// tabulated grid. The grid must hold at least two strictly ascending points.
pub fn quadrature_cf<T: Scalar>(samples: &[(T, T)], t: T) -> Result<Complex<T>> {
    ensure_grid(samples)?;
    Ok(trapezoid(samples, |(omega, p)| phase(omega * t).scale(p)))
}

/// Parse a two-column `(omega, p)` table; `#` starts a comment, blank lines
/// are skipped. Errors carry the 1-based line number.
pub fn parse_spectral_table<T: Scalar>(text: &str) -> Result<Vec<(T, T)>> {
    let mut samples = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut fields = content.split_whitespace();
        let omega = fields.next().ok_or_else(|| Error::TableParse {
            line,
            message: "missing omega column".into(),
        })?;
        let p = fields.next().ok_or_else(|| Error::TableParse {
            line,
            message: "missing density column".into(),
        })?;
        if fields.next().is_some() {
            return Err(Error::TableParse { line, message: "more than two columns".into() });
        }
        let omega: f64 = omega.parse().map_err(|e| Error::TableParse {
            line,
            message: format!("bad omega value {omega:?}: {e}"),
        })?;
        let p: f64 = p.parse().map_err(|e| Error::TableParse {
            line,
            message: format!("bad density value {p:?}: {e}"),
        })?;
        samples.push((T::cast(omega), T::cast(p)));
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    type S = SpectralModel<f64>;

    fn all_models() -> Vec<S> {
        let grid: Vec<(f64, f64)> = (0..=4000)
            .map(|i| {
                let w = -8.0 + 16.0 * i as f64 / 4000.0;
                (w, (-0.5 * w * w).exp() / (2.0 * PI).sqrt())
            })
            .collect();
        vec![
            S::lorentzian(0.0, 1.0).unwrap(),
            S::lorentzian(2.0, 0.5).unwrap(),
            S::gaussian(0.0, 1.0).unwrap(),
            S::gaussian(-1.0, 2.0).unwrap(),
            S::box_dist(1.0).unwrap(),
            S::box_dist(3.5).unwrap(),
            S::tabulated(grid).unwrap(),
        ]
    }

    #[test]
    fn cf_at_zero_is_one() {
        for m in all_models() {
            let phi = m.characteristic_function(0.0);
            let tol = if matches!(m, S::Tabulated { .. }) { 1e-6 } else { 0.0 };
            assert!((phi.re - 1.0).abs() <= tol, "{m:?}");
            assert!(phi.im.abs() <= tol, "{m:?}");
        }
    }

    #[test]
    fn lorentzian_cf_matches_closed_form() {
        let m = S::lorentzian(0.0, 1.0).unwrap();
        let phi = m.characteristic_function(1.0);
        assert!((phi.re - (-1.0f64).exp()).abs() < 1e-15);
        assert!(phi.im.abs() < 1e-15);
    }

    #[test]
    fn box_cf_vanishes_at_full_period() {
        let m = S::box_dist(1.0).unwrap();
        let phi = m.characteristic_function(2.0 * PI);
        assert!(phi.norm() < 1e-15, "|phi| = {}", phi.norm());
    }

    #[test]
    fn box_cf_series_branch_is_continuous() {
        let m = S::box_dist(1.0).unwrap();
        let below = m.characteristic_function(9.9e-7);
        let above = m.characteristic_function(1.01e-6);
        assert!((below - above).norm() < 1e-12);
        assert_eq!(m.characteristic_function(0.0), num_complex::Complex::new(1.0, 0.0));
    }

    #[test]
    fn pdf_peak_values() {
        assert!((S::box_dist(2.0).unwrap().pdf(1.0) - 0.5).abs() < 1e-15);
        assert!((S::lorentzian(0.0, 1.0).unwrap().pdf(0.0) - 1.0 / PI).abs() < 1e-15);
        assert!(
            (S::gaussian(0.0, 1.0).unwrap().pdf(0.0) - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-15
        );
        // box edges: interior value at 0, zero at and beyond omega0
        let b = S::box_dist(2.0).unwrap();
        assert_eq!(b.pdf(0.0), 0.5);
        assert_eq!(b.pdf(2.0), 0.0);
        assert_eq!(b.pdf(-0.1), 0.0);
    }

    #[test]
    fn modulus_bounded_and_conjugate_symmetric() {
        for m in all_models() {
            for i in 0..=200 {
                let t = 50.0 * i as f64 / 200.0;
                let phi = m.characteristic_function(t);
                assert!(phi.norm() <= 1.0 + 1e-12, "{m:?} at t={t}");
                let mirrored = m.characteristic_function(-t);
                assert!((mirrored - phi.conj()).norm() <= 1e-12, "{m:?} at t={t}");
            }
        }
    }

    #[test]
    fn quadrature_recovers_point_mass() {
        // delta-like narrow bin at omega0 = 2
        let eps = 1e-7;
        let samples = vec![(2.0 - eps, 0.0), (2.0, 1.0 / eps), (2.0 + eps, 0.0)];
        let phi = quadrature_cf(&samples, 1.5).unwrap();
        let expect = num_complex::Complex::new(0.0, 2.0 * 1.5).exp();
        assert!((phi - expect).norm() < 1e-5);
    }

    #[test]
    fn quadrature_matches_box_closed_form() {
        let n = 10_000;
        let samples: Vec<(f64, f64)> = (0..=n).map(|i| (i as f64 / n as f64, 1.0)).collect();
        let m = S::box_dist(1.0).unwrap();
        for t in [0.5, 1.0, 5.0, 20.0, 50.0] {
            let q = quadrature_cf(&samples, t).unwrap();
            let c = m.characteristic_function(t);
            assert!((q - c).norm() < 1e-6, "t={t}: {:?} vs {:?}", q, c);
        }
    }

    #[test]
    fn quadrature_matches_gaussian_closed_form() {
        let n = 40_000;
        let samples: Vec<(f64, f64)> = (0..=n)
            .map(|i| {
                let w = -8.0 + 16.0 * i as f64 / n as f64;
                (w, (-0.5 * w * w).exp() / (2.0 * PI).sqrt())
            })
            .collect();
        let m = S::gaussian(0.0, 1.0).unwrap();
        for t in [0.3, 1.0, 2.5, 10.0, 50.0] {
            let q = quadrature_cf(&samples, t).unwrap();
            let c = m.characteristic_function(t);
            assert!((q - c).norm() < 1e-6, "t={t}");
        }
    }

    #[test]
    fn rejects_bad_grids_and_parameters() {
        assert!(quadrature_cf::<f64>(&[], 1.0).is_err());
        assert!(quadrature_cf(&[(0.0, 1.0)], 1.0).is_err());
        assert!(quadrature_cf(&[(1.0, 0.5), (0.0, 0.5)], 1.0).is_err());
        assert!(S::lorentzian(0.0, 0.0).is_err());
        assert!(S::gaussian(0.0, -1.0).is_err());
        assert!(S::box_dist(0.0).is_err());
        assert!(S::tabulated(vec![(0.0, -0.1), (1.0, 2.1)]).is_err());
        // normalization off by more than 1e-6
        assert!(S::tabulated(vec![(0.0, 1.1), (1.0, 1.1)]).is_err());
    }

    #[test]
    fn parses_two_column_tables_with_comments() {
        let text = "# spectral table\n0.0 1.0\n0.5\t1.0  # midpoint\n\n1.0 1.0\n";
        let samples = parse_spectral_table::<f64>(text).unwrap();
        assert_eq!(samples, vec![(0.0, 1.0), (0.5, 1.0), (1.0, 1.0)]);

        let bad = "0.0 1.0\noops 2.0\n";
        match parse_spectral_table::<f64>(bad) {
            Err(Error::TableParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected TableParse, got {other:?}"),
        }
        let three = "0.0 1.0 9.0\n";
        assert!(matches!(
            parse_spectral_table::<f64>(three),
            Err(Error::TableParse { line: 1, .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn cf_bound_and_symmetry_hold_generically(
            t in -40.0f64..40.0,
            omega0 in -3.0f64..3.0,
            width in 0.05f64..4.0,
        ) {
            for m in [
                S::lorentzian(omega0, width).unwrap(),
                S::gaussian(omega0, width).unwrap(),
                S::box_dist(width).unwrap(),
            ] {
                let phi = m.characteristic_function(t);
                prop_assert!(phi.norm() <= 1.0 + 1e-12);
                prop_assert!((m.characteristic_function(-t) - phi.conj()).norm() <= 1e-12);
            }
        }
    }
}
