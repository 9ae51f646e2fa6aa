use serde::Serialize;

use crate::charpoly::MatrixParabola;
use crate::construction::ManifoldData;
use crate::error::{Error, Result};
use crate::symmat::{self, congruence, is_pd, pd_inv_sqrt, Matrix, SymMatrix};

/// Spectrum of the pencil `(B, C)` modulo orientation-preserving affine
/// maps `μ ↦ (μ + β)/α`, `α > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineSpectrum {
    /// Canonical values, ascending, in `[0, 1]`.
    pub values: Vec<f64>,
    pub degenerate: bool,
    /// Eigenvalues of `C^{-1/2}BC^{-1/2}` before normalization.
    #[serde(skip)]
    pub raw: Vec<f64>,
}

impl AffineSpectrum {
    /// Canonical values agree within `tol`. With `allow_reflection`
    /// orientation-reversing maps are also allowed.
    pub fn matches(&self, other: &Self, tol: f64, allow_reflection: bool) -> bool {
        if self.values.len() != other.values.len() || self.degenerate != other.degenerate {
            return false;
        }
        let close = |a: &[f64], b: &[f64]| a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol);
        if close(&self.values, &other.values) {
            return true;
        }
        let reflected: Vec<f64> = other.values.iter().rev().map(|v| 1.0 - v).collect();
        allow_reflection && close(&self.values, &reflected)
    }

    pub fn min(&self) -> f64 {
        self.raw[0]
    }

    pub fn max(&self) -> f64 {
        self.raw[self.raw.len() - 1]
    }
}

pub fn affine_spectrum(parabola: &MatrixParabola, tol: f64) -> Result<AffineSpectrum> {
    if !is_pd(parabola.c(), tol) {
        return Err(Error::CSingular);
    }
    let s = pd_inv_sqrt(parabola.c(), tol).map_err(|_| Error::CSingular)?;
    let raw = symmat::sym_eig(&congruence(parabola.b(), &s.to_matrix())?)?.values;
    let (lo, hi) = (raw[0], raw[raw.len() - 1]);
    let spread = 1.0 + raw.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let degenerate = hi - lo <= tol * spread;
    let values = if degenerate {
        vec![0.0; raw.len()]
    } else {
        raw.iter().map(|v| ((v - lo) / (hi - lo)).clamp(0.0, 1.0)).collect()
    };
    Ok(AffineSpectrum {
        values,
        degenerate,
        raw,
    })
}

/// Spectrum of `a′` together with the Gram matrix of the `a″`-images of
/// its unit eigenvectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimpleSpectrumForm {
    pub eigenvalues: Vec<f64>,
    pub gram: SymMatrix,
    /// Sign-adjusted eigenvectors, as columns.
    #[serde(skip)]
    pub frame: Matrix,
}

pub fn simple_spectrum_form(data: &ManifoldData, tol: f64) -> Result<SimpleSpectrumForm> {
    spectrum_form(data.a_prime(), &gram_source(data.a_dblprime()), tol)
}

fn gram_source(a_dblprime: &Matrix) -> SymMatrix {
    SymMatrix::symmetrized(&(&a_dblprime.transpose() * a_dblprime))
}

/// Form built from `a′` and `G = a″ᵀa″` directly.
pub(crate) fn spectrum_form(a_prime: &SymMatrix, g: &SymMatrix, tol: f64) -> Result<SimpleSpectrumForm> {
    let m = a_prime.dim();
    let eig = symmat::sym_eig(a_prime)?;
    let cut = tol * a_prime.scale();
    if eig.values.windows(2).any(|w| w[1] - w[0] <= cut) {
        return Err(Error::NotSimpleSpectrum);
    }
    let mut frame = eig.vectors.clone();
    let mut gram = congruence(g, &frame)?.to_matrix();
    let gcut = tol * (1.0 + gram.max_abs());
    for i in 1..m {
        if let Some(j) = (0..i).find(|&j| gram[(i, j)].abs() > gcut) {
            if gram[(i, j)] < 0.0 {
                for k in 0..m {
                    gram[(i, k)] = -gram[(i, k)];
                    gram[(k, i)] = -gram[(k, i)];
                    frame[(k, i)] = -frame[(k, i)];
                }
            }
        }
    }
    Ok(SimpleSpectrumForm {
        eigenvalues: eig.values,
        gram: SymMatrix::symmetrized(&gram),
        frame,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_polynomial;
    use crate::construction::{example_4d, example_5d};

    #[test]
    fn scalar_spectrum_is_degenerate() {
        let q = char_polynomial(&example_4d());
        let sp = affine_spectrum(&q, 1e-9).unwrap();
        assert!(sp.degenerate);
        assert_eq!(sp.values, vec![0.0]);
    }

    #[test]
    fn dim5_spectrum() {
        let sp = affine_spectrum(&char_polynomial(&example_5d(1.0, 1.0).unwrap()), 1e-9).unwrap();
        assert!(!sp.degenerate);
        assert_eq!(sp.values.len(), 2);
        assert!(sp.values[0].abs() < 1e-12 && (sp.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn singular_c() {
        let p = MatrixParabola::new(SymMatrix::identity(2), SymMatrix::zeros(2), SymMatrix::from_diag(&[1.0, 0.0])).unwrap();
        assert!(matches!(affine_spectrum(&p, 1e-9), Err(Error::CSingular)));
    }

    #[test]
    fn reflection_flag() {
        let a = AffineSpectrum { values: vec![0.0, 0.25, 1.0], degenerate: false, raw: vec![] };
        let b = AffineSpectrum { values: vec![0.0, 0.75, 1.0], degenerate: false, raw: vec![] };
        assert!(!a.matches(&b, 1e-9, false));
        assert!(a.matches(&b, 1e-9, true));
    }

    #[test]
    fn simple_forms() {
        let f = simple_spectrum_form(&example_5d(1.0, 1.0).unwrap(), 1e-9).unwrap();
        assert_eq!(f.eigenvalues, vec![0.0, 1.0]);
        assert!(f.gram.max_abs_diff(&SymMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap()) < 1e-12);

        let f = simple_spectrum_form(&example_4d(), 1e-9).unwrap();
        assert_eq!(f.gram, SymMatrix::from_diag(&[1.0]));

        let f = simple_spectrum_form(&example_5d(1.0, -1.0).unwrap(), 1e-9).unwrap();
        assert!(f.gram[(0, 1)] > 0.0);
    }

    #[test]
    fn repeated_eigenvalue() {
        let d = ManifoldData::build(
            6,
            &Matrix::from_diag(&[1.0, 1.0]),
            &Matrix::identity(2),
            &Matrix::identity(2),
        )
        .unwrap();
        assert!(matches!(simple_spectrum_form(&d, 1e-9), Err(Error::NotSimpleSpectrum)));
    }
}
