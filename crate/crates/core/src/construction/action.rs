//! The affine action `x ↦ γ_x` of `T` on `V`:
//!
//! ```text
//! λ(x)v = v + l₀(v)·ax − (ℓ(ax, v) + ½ l₀(v) ℓ(ax, ax))·v₀
//! τ(x)  = x − ½ ℓ(ax, x)·v₀
//! γ_x(v) = λ(x)v + τ(x)
//! ```

use super::ManifoldData;
use crate::error::{Error, Result};
use crate::minkowski::{ell, l0, proj_n, LorentzFrame, Vector};
use crate::symmat::{Matrix, SymMatrix};

fn lambda_apply(data: &ManifoldData, ax: &Vector, ax_sq: f64, v: &Vector) -> Result<Vector> {
    let s = l0(v);
    let shift = ell(ax, v)? + 0.5 * s * ax_sq;
    Ok(v.axpy(s, ax).axpy(-shift, &data.frame().v0()))
}

/// Matrix of the linear part `λ(x)` for `x` in `T`-coordinates.
pub fn lambda_of(data: &ManifoldData, x: &[f64]) -> Result<Matrix> {
    let frame = data.frame();
    let n = frame.n();
    let ax = data.apply_a(x)?;
    let ax_sq = ell(&ax, &ax)?;
    let columns = (0..n)
        .map(|j| lambda_apply(data, &ax, ax_sq, &frame.basis(j)).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(n, &columns))
}

/// Translation part `τ(x)`.
pub fn tau_of(data: &ManifoldData, x: &[f64]) -> Result<Vector> {
    let ax = data.apply_a(x)?;
    let xv = data.frame().embed_t(x)?;
    let c = -0.5 * ell(&ax, &xv)?;
    Ok(xv.axpy(c, &data.frame().v0()))
}

/// `γ_x(v) = λ(x)v + τ(x)`.
pub fn gamma_apply(data: &ManifoldData, x: &[f64], v: &Vector) -> Result<Vector> {
    if v.dim() != data.n() {
        return Err(Error::dims(format!(
            "vector of length {} in dimension {}",
            v.dim(),
            data.n()
        )));
    }
    let ax = data.apply_a(x)?;
    let ax_sq = ell(&ax, &ax)?;
    let linear = lambda_apply(data, &ax, ax_sq, v)?;
    Ok(&linear + &tau_of(data, x)?)
}

/// Recovers `(a′, a″)` from the holonomy matrices `λ(eᵢ)` of the standard
/// basis of `T`: column `i` of `a` is `π_N λ(eᵢ) v₁`.
pub fn recover_a_from_holonomy(
    frame: &LorentzFrame,
    lambdas: &[Matrix],
    tol: f64,
) -> Result<(SymMatrix, Matrix)> {
    let (n, m, r) = (frame.n(), frame.m(), frame.r());
    if lambdas.len() != m {
        return Err(Error::dims(format!(
            "{} holonomy matrices for a T of dimension {m}",
            lambdas.len()
        )));
    }
    let v0 = frame.v0();
    let v1 = frame.v1();
    let mut a_prime = Matrix::zeros(m, m);
    let mut a_dblprime = Matrix::zeros(r, m);
    for (i, lambda) in lambdas.iter().enumerate() {
        if lambda.rows() != n || lambda.cols() != n {
            return Err(Error::dims(format!(
                "holonomy matrix {i} is {}x{}, expected {n}x{n}",
                lambda.rows(),
                lambda.cols()
            )));
        }
        let scale = tol * (1.0 + lambda.max_abs());
        let fixed = Vector(lambda.mul_vec(v0.coords()));
        if (&fixed - &v0).max_abs() > scale {
            return Err(Error::InconsistentHolonomy(format!(
                "generator {i} does not fix v0"
            )));
        }
        let col = proj_n(&Vector(lambda.mul_vec(v1.coords())));
        if frame.e_part(&col).iter().any(|c| c.abs() > scale) {
            return Err(Error::InconsistentHolonomy(format!(
                "generator {i} moves v1 into the Euclidean factor"
            )));
        }
        for (row, &c) in frame.t_part(&col).iter().enumerate() {
            a_prime[(row, i)] = c;
        }
        for (row, &c) in frame.r_part(&col).iter().enumerate() {
            a_dblprime[(row, i)] = c;
        }
    }
    let a_prime = SymMatrix::try_from_matrix(&a_prime, tol).map_err(|_| {
        Error::InconsistentHolonomy("recovered a' is not l-symmetric".into())
    })?;
    Ok((a_prime, a_dblprime))
}
