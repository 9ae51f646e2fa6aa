use crate::charpoly::{is_characteristic, MatrixParabola};
use crate::construction::ManifoldData;
use crate::error::{Error, Result};
use crate::symmat::{self, congruence, pd_inv_sqrt, psd_sqrt, Matrix, SymMatrix};

/// Manifold data whose characteristic parabola is `parabola`.
///
/// With `B̃ = A^{-1/2}BA^{-1/2}` and `C̃ = A^{-1/2}CA^{-1/2}` this takes
/// `a′ = B̃`, `a″` with `a″ᵀa″ = C̃ − B̃²` and lattice `ι = A^{1/2}`, so that
/// `Q(s) = A^{1/2}((I + sB̃)² + s²(C̃ − B̃²))A^{1/2}`.
pub fn realize(parabola: &MatrixParabola, n: usize, tol: f64) -> Result<ManifoldData> {
    let verdict = is_characteristic(parabola, n, tol)?;
    if !verdict.characteristic {
        return Err(Error::NotCharacteristic(
            verdict.reason.unwrap_or_else(|| "parabola is not characteristic".into()),
        ));
    }
    let m = parabola.dim();
    let iota = psd_sqrt(parabola.a())?.to_matrix();
    if parabola.is_elliptic(tol) {
        return ManifoldData::build(n, &Matrix::zeros(m, m), &Matrix::zeros(0, m), &iota);
    }
    if verdict.signature.k > 0 {
        return Err(Error::DegenerateK {
            k: verdict.signature.k,
        });
    }
    let (b_tilde, g) = normalized(parabola, tol)?;
    let r = verdict.signature.r;
    let eig = symmat::sym_eig(&g)?;
    let a_dblprime = Matrix::from_fn(r, m, |i, j| {
        let idx = m - 1 - i;
        eig.values[idx].max(0.0).sqrt() * eig.vectors[(j, idx)]
    });
    ManifoldData::build(n, &b_tilde.to_matrix(), &a_dblprime, &iota)
}

/// `(B̃, C̃ − B̃²)` for a parabola with `A ≻ 0`.
pub(crate) fn normalized(parabola: &MatrixParabola, tol: f64) -> Result<(SymMatrix, SymMatrix)> {
    let s = pd_inv_sqrt(parabola.a(), tol)?.to_matrix();
    let b_tilde = congruence(parabola.b(), &s)?;
    let c_tilde = congruence(parabola.c(), &s)?;
    let bm = b_tilde.to_matrix();
    let g = c_tilde.sub(&SymMatrix::symmetrized(&(&bm * &bm)));
    Ok((b_tilde, g))
}
