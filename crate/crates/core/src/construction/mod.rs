//! Manifold data in the canonical frame and its validation.
//!
//! A unipotent manifold is fixed by an `ℓ`-symmetric map `a = a′ + a″`
//! from `T` to `N` together with a lattice in `T`. In the canonical frame
//! `−ℓ` restricted to `T` is the identity, so `ℓ`-symmetry of `a` is plain
//! symmetry of the `m×m` matrix `a′`, and `a″` is an `r×m` matrix whose
//! rows are coordinates in an orthonormal basis of `R = a″T`.

mod action;
mod examples;

use serde::{Deserialize, Serialize};

pub use action::{gamma_apply, lambda_of, recover_a_from_holonomy, tau_of};
pub use examples::{example_4d, example_5d};

use crate::error::{Error, Result};
use crate::minkowski::{LorentzFrame, Vector};
use crate::symmat::{self, Matrix, SymMatrix, DEFAULT_TOL};

/// Relative tolerance used to cluster eigenvalues of `a′` and to decide
/// whether `a″` is injective on a cluster.
pub const FREENESS_TOL: f64 = 1e-8;

/// The 4-tuple `(n, m, r, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub k: usize,
}

impl Signature {
    /// `m + r + 2 ≤ n` and `r + k ≤ m`.
    pub fn is_consistent(&self) -> bool {
        self.m + self.r + 2 <= self.n && self.r + self.k <= self.m
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ManifoldData {
    frame: LorentzFrame,
    a_prime: SymMatrix,
    a_dblprime: Matrix,
    lattice: Matrix,
}

impl ManifoldData {
    /// Validated construction: structural checks plus the freeness
    /// condition.
    pub fn build(n: usize, a_prime: &Matrix, a_dblprime: &Matrix, lattice: &Matrix) -> Result<Self> {
        let data = Self::from_parts(n, a_prime, a_dblprime, lattice)?;
        if let Some((eigenvalue, eigenvector)) = data.freeness_violation() {
            return Err(Error::FreenessViolated {
                eigenvalue,
                eigenvector,
            });
        }
        Ok(data)
    }

    /// Structural checks only (shapes, symmetry of `a′`, `rank a″ = r`, an
    /// invertible lattice, the signature inequalities). The result may
    /// violate freeness; see [`check_free`].
    pub fn from_parts(n: usize, a_prime: &Matrix, a_dblprime: &Matrix, lattice: &Matrix) -> Result<Self> {
        let a_prime = SymMatrix::try_from_matrix(a_prime, DEFAULT_TOL)?;
        let m = a_prime.dim();
        // An empty a'' arrives as 0x0; it means r = 0.
        let a_dblprime = if a_dblprime.rows() == 0 {
            Matrix::zeros(0, m)
        } else {
            a_dblprime.clone()
        };
        if a_dblprime.cols() != m {
            return Err(Error::dims(format!(
                "a'' has {} columns, a' is {m}x{m}",
                a_dblprime.cols()
            )));
        }
        if lattice.rows() != m || lattice.cols() != m {
            return Err(Error::dims(format!(
                "lattice is {}x{}, expected {m}x{m}",
                lattice.rows(),
                lattice.cols()
            )));
        }
        if !a_dblprime.is_finite() || !lattice.is_finite() {
            return Err(Error::InvalidInput("non-finite matrix entry".into()));
        }
        let r = a_dblprime.rows();
        let frame = LorentzFrame::new(n, m, r)?;
        let rank = symmat::matrix_rank(&a_dblprime, DEFAULT_TOL);
        if rank < r {
            return Err(Error::RankDeficientR { rank, expected: r });
        }
        if symmat::matrix_rank(lattice, DEFAULT_TOL) < m {
            return Err(Error::SingularLattice);
        }
        let data = Self {
            frame,
            a_prime,
            a_dblprime,
            lattice: lattice.clone(),
        };
        let sig = data.signature();
        if !sig.is_consistent() {
            return Err(Error::SignatureInconsistent(format!("{sig:?}")));
        }
        Ok(data)
    }

    pub fn frame(&self) -> LorentzFrame {
        self.frame
    }

    pub fn n(&self) -> usize {
        self.frame.n()
    }

    pub fn m(&self) -> usize {
        self.frame.m()
    }

    pub fn r(&self) -> usize {
        self.frame.r()
    }

    pub fn a_prime(&self) -> &SymMatrix {
        &self.a_prime
    }

    pub fn a_dblprime(&self) -> &Matrix {
        &self.a_dblprime
    }

    pub fn lattice(&self) -> &Matrix {
        &self.lattice
    }

    /// `a = 0`: the group acts by pure translations.
    pub fn is_elliptic(&self) -> bool {
        self.r() == 0 && self.a_prime.is_zero(DEFAULT_TOL)
    }

    /// `a x` for `x` in `T`-coordinates, as a vector of `N ⊂ V`.
    pub fn apply_a(&self, x: &[f64]) -> Result<Vector> {
        if x.len() != self.m() {
            return Err(Error::dims(format!(
                "T-vector of length {}, expected {}",
                x.len(),
                self.m()
            )));
        }
        let t = self.a_prime.to_matrix().mul_vec(x);
        let r = self.a_dblprime.mul_vec(x);
        self.frame.embed_tr(&t, &r)
    }

    /// Lattice generator `gᵢ = ι eᵢ` in `T`-coordinates.
    pub fn generator(&self, i: usize) -> Vec<f64> {
        self.lattice.column(i)
    }

    /// First eigenpair of `a′` with nonzero eigenvalue on whose eigenspace
    /// `a″` fails to be injective.
    pub fn freeness_violation(&self) -> Option<(f64, Vec<f64>)> {
        let scale = 1.0 + self.a_prime.max_abs().max(self.a_dblprime.max_abs());
        let cut = FREENESS_TOL * scale;
        let eig = symmat::sym_eig(&self.a_prime).ok()?;
        let m = self.m();

        let mut start = 0;
        while start < m {
            let mut end = start + 1;
            while end < m && eig.values[end] - eig.values[end - 1] <= cut {
                end += 1;
            }
            let cluster = &eig.values[start..end];
            let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
            if mean.abs() > cut {
                let basis = eig.vectors.columns(start..end);
                let image = &self.a_dblprime * &basis;
                let gram = SymMatrix::symmetrized(&(&image.transpose() * &image));
                let sigma_min = symmat::singular_values(&image)
                    .last()
                    .copied()
                    .filter(|_| image.rows() >= basis.cols())
                    .unwrap_or(0.0);
                if sigma_min <= cut {
                    let y = symmat::sym_eig(&gram)
                        .map(|e| e.vector(0))
                        .unwrap_or_else(|_| {
                            let mut y = vec![0.0; basis.cols()];
                            y[0] = 1.0;
                            y
                        });
                    return Some((mean, basis.mul_vec(&y)));
                }
            }
            start = end;
        }
        None
    }

    /// `(n, m, r, k)` with `k = dim(ker a′ ∩ ker a″)`.
    pub fn signature(&self) -> Signature {
        let stacked = self.a_prime.to_matrix().vstack(&self.a_dblprime);
        let k = self.m() - symmat::matrix_rank(&stacked, DEFAULT_TOL);
        Signature {
            n: self.n(),
            m: self.m(),
            r: self.r(),
            k,
        }
    }
}

/// Freeness of the action: `a″` is injective on every eigenspace of `a′`
/// with a nonzero eigenvalue.
pub fn check_free(data: &ManifoldData) -> bool {
    data.freeness_violation().is_none()
}

pub fn signature_of(data: &ManifoldData) -> Signature {
    data.signature()
}

/// Dimension of the flat Euclidean factor, `n − m − r − 2`.
pub fn euclidean_factor_dim(data: &ManifoldData) -> usize {
    data.frame.e_dim()
}
