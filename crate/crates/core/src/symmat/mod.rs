//! Small dense symmetric linear algebra.
//!
//! Everything here is sized for matrices of order at most a dozen or so:
//! eigenpairs come from cyclic Jacobi rotations, which are slow for large
//! problems but unconditionally stable and accurate in the small eigenvalues,
//! which is what the positivity and rank predicates depend on.
//!
//! All predicates take an explicit tolerance `tol` that is interpreted
//! relative to the scale `1 + max|S_ij|`.

mod dense;
mod poly;

use std::fmt;
use std::ops::Index;

pub use dense::Matrix;
pub use poly::{det_poly, real_root_count, real_roots, sturm_chain, ScalarPoly};

use crate::error::{Error, Result};

/// Default relative tolerance used throughout the crate.
pub const DEFAULT_TOL: f64 = 1e-9;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_THRESHOLD: f64 = 1e-13;

/// Real symmetric matrix. Symmetry is exact: entries are averaged with their
/// transposes on construction.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diag(&vec![1.0; dim])
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        Self::symmetrized(&Matrix::from_diag(diag))
    }

    /// Symmetrizes `(M + Mᵀ)/2`. Panics on a non-square input.
    pub fn symmetrized(m: &Matrix) -> Self {
        assert!(m.is_square(), "symmetrized: non-square matrix");
        let dim = m.rows();
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                data[i * dim + j] = 0.5 * (m[(i, j)] + m[(j, i)]);
            }
        }
        Self { dim, data }
    }

    /// Builds from rows, symmetrizing silently.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = Matrix::from_rows(rows)?;
        Self::try_from_matrix(&m, f64::INFINITY)
    }

    /// Builds from a square matrix, rejecting asymmetry above
    /// `tol * (1 + max|M_ij|)` and non-finite entries.
    pub fn try_from_matrix(m: &Matrix, tol: f64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::dims(format!(
                "expected a square matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_finite() {
            return Err(Error::InvalidInput("non-finite matrix entry".into()));
        }
        let asymmetry = m.max_abs_diff(&m.transpose());
        if asymmetry > tol * (1.0 + m.max_abs()) {
            return Err(Error::NotSymmetric { asymmetry });
        }
        Ok(Self::symmetrized(m))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self[(i, j)])
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.to_matrix().to_rows()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `1 + max|S_ij|`, the scale every relative tolerance is measured against.
    pub fn scale(&self) -> f64 {
        1.0 + self.max_abs()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(-1.0))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Principal submatrix on the given index set.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::symmetrized(&Matrix::from_fn(idx.len(), idx.len(), |i, j| {
            self[(idx[i], idx[j])]
        }))
    }

    pub fn eig(&self) -> Result<EigenDecomposition> {
        sym_eig(self)
    }
}

impl Index<(usize, usize)> for SymMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.dim + j]
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix{:?}", self.to_rows())
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as the
/// columns of `vectors`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

impl EigenDecomposition {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i)
    }

    /// `V diag(f(λ)) Vᵀ`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> SymMatrix {
        let n = self.values.len();
        let mapped: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let m = Matrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * mapped[k] * self.vectors[(j, k)])
                .sum()
        });
        SymMatrix::symmetrized(&m)
    }

    pub fn reconstruct(&self) -> SymMatrix {
        self.reconstruct_with(|l| l)
    }
}

/// Cyclic Jacobi. Returns the decomposition and whether the off-diagonal
/// threshold was reached within the sweep cap.
fn jacobi(s: &SymMatrix) -> (EigenDecomposition, bool) {
    let n = s.dim;
    let mut a = s.to_matrix();
    let mut v = Matrix::identity(n);
    let threshold = JACOBI_REL_THRESHOLD * s.frobenius();
    let off = |a: &Matrix| {
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum += a[(i, j)] * a[(i, j)];
                }
            }
        }
        sum.sqrt()
    };

    let mut converged = false;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - sn * akq;
                    a[(k, q)] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - sn * aqk;
                    a[(q, k)] = sn * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - sn * vkq;
                    v[(k, q)] = sn * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        converged = off(&a) <= threshold;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Matrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    (EigenDecomposition { values, vectors }, converged)
}

/// Full symmetric eigendecomposition, eigenvalues ascending.
pub fn sym_eig(s: &SymMatrix) -> Result<EigenDecomposition> {
    match jacobi(s) {
        (eig, true) => Ok(eig),
        (_, false) => Err(Error::ConvergenceFailure {
            sweeps: JACOBI_MAX_SWEEPS,
        }),
    }
}

/// Eigenvalues ascending. A non-converged run still returns the diagonal it
/// reached, which is what the boolean predicates below fall back on.
fn eigenvalues(s: &SymMatrix) -> Vec<f64> {
    jacobi(s).0.values
}

pub fn min_eigenvalue(s: &SymMatrix) -> f64 {
    eigenvalues(s).first().copied().unwrap_or(f64::INFINITY)
}

/// Strict positivity: `λ_min > tol·(1 + max|S_ij|)`. Boundary cases are
/// reported as not positive definite.
pub fn is_pd(s: &SymMatrix, tol: f64) -> bool {
    min_eigenvalue(s) > tol * s.scale()
}

pub fn is_psd(s: &SymMatrix, tol: f64) -> bool {
    min_eigenvalue(s) >= -tol * s.scale()
}

/// Number of eigenvalues with `|λ| > tol·(1 + max|S_ij|)`.
pub fn rank_tol(s: &SymMatrix, tol: f64) -> usize {
    let cut = tol * s.scale();
    eigenvalues(s).iter().filter(|l| l.abs() > cut).count()
}

/// Nonnegative square root of a PSD matrix; eigenvalues that are negative
/// within tolerance are clamped to zero.
pub fn psd_sqrt(s: &SymMatrix) -> Result<SymMatrix> {
    psd_sqrt_tol(s, DEFAULT_TOL)
}

pub fn psd_sqrt_tol(s: &SymMatrix, tol: f64) -> Result<SymMatrix> {
    let eig = sym_eig(s)?;
    let min = eig.values.first().copied().unwrap_or(0.0);
    if min < -tol * s.scale() {
        return Err(Error::NotPsd {
            min_eigenvalue: min,
        });
    }
    Ok(eig.reconstruct_with(|l| l.max(0.0).sqrt()))
}

/// `S^{-1/2}` for positive definite `S`.
pub fn pd_inv_sqrt(s: &SymMatrix, tol: f64) -> Result<SymMatrix> {
    let eig = sym_eig(s)?;
    let min = eig.values.first().copied().unwrap_or(1.0);
    if min <= tol * s.scale() {
        return Err(Error::NotPositiveDefinite(format!(
            "minimum eigenvalue {min:e}"
        )));
    }
    Ok(eig.reconstruct_with(|l| 1.0 / l.sqrt()))
}

/// `XᵀSX`, re-symmetrized. `X` may be rectangular with `dim S` rows.
pub fn congruence(s: &SymMatrix, x: &Matrix) -> Result<SymMatrix> {
    if x.rows() != s.dim {
        return Err(Error::dims(format!(
            "congruence of a {0}x{0} matrix by a {1}x{2} matrix",
            s.dim,
            x.rows(),
            x.cols()
        )));
    }
    let sx = s.to_matrix().try_mul(x)?;
    Ok(SymMatrix::symmetrized(&(&x.transpose() * &sx)))
}

/// Singular values of an arbitrary matrix in descending order, read off the
/// eigenvalues of the symmetric embedding `[[0, M], [Mᵀ, 0]]`. This keeps
/// small singular values accurate to `eps·‖M‖` rather than `sqrt(eps)·‖M‖`.
pub fn singular_values(m: &Matrix) -> Vec<f64> {
    let (r, c) = (m.rows(), m.cols());
    let p = r.min(c);
    if p == 0 {
        return Vec::new();
    }
    let h = Matrix::from_fn(r + c, r + c, |i, j| match (i < r, j < r) {
        (true, false) => m[(i, j - r)],
        (false, true) => m[(j, i - r)],
        _ => 0.0,
    });
    let mut vals = eigenvalues(&SymMatrix::symmetrized(&h));
    vals.reverse();
    vals.truncate(p);
    vals.iter().map(|v| v.max(0.0)).collect()
}

/// Numerical rank of an arbitrary matrix: singular values above
/// `tol·(1 + max|M_ij|)`.
pub fn matrix_rank(m: &Matrix, tol: f64) -> usize {
    let cut = tol * (1.0 + m.max_abs());
    singular_values(m).iter().filter(|&&s| s > cut).count()
}

/// Orthonormal basis (as columns) of the null space of `M`, from the
/// eigenvectors of `MᵀM` with the smallest eigenvalues, `M.cols() - rank`
/// of them.
pub fn null_space(m: &Matrix, tol: f64) -> Result<Matrix> {
    let rank = matrix_rank(m, tol);
    let gram = SymMatrix::symmetrized(&(&m.transpose() * m));
    let eig = sym_eig(&gram)?;
    Ok(eig.vectors.columns(0..m.cols() - rank))
}

/// Serialized as an array of row arrays.
impl serde::Serialize for SymMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}
