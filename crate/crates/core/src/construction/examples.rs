use super::ManifoldData;
use crate::error::{Error, Result};
use crate::symmat::Matrix;

/// The four-dimensional nonelliptic manifold: `a′ = 0`, `a″ = 1`, `ι = 1`.
///
/// In the classical basis `e₀..e₃` with `ℓ = 2v₀v₃ − v₁² − v₂²` the
/// generator reads `λe₂ = e₂ + e₀`, `λe₃ = e₃ + e₂ + ½e₀`, `τ = e₁`; here it
/// is transported to canonical coordinates by `(e₁, e₂, e₀, e₃) ↦ (e₁, e₂, e₃, e₄)`.
pub fn example_4d() -> ManifoldData {
    ManifoldData::build(
        4,
        &Matrix::from_diag(&[0.0]),
        &Matrix::from_diag(&[1.0]),
        &Matrix::identity(1),
    )
    .expect("the four-dimensional example is valid")
}

/// Signature `(5, 2, 1, 0)` family: `ae₁ = t·e₃`, `ae₂ = e₂ + r·e₃`, with
/// the lattice spanned by `e₁, e₂`.
pub fn example_5d(t: f64, r: f64) -> Result<ManifoldData> {
    if t == 0.0 {
        return Err(Error::ZeroParameter("t"));
    }
    if r == 0.0 {
        return Err(Error::ZeroParameter("r"));
    }
    ManifoldData::build(
        5,
        &Matrix::from_diag(&[0.0, 1.0]),
        &Matrix::from_rows(&[vec![t, r]])?,
        &Matrix::identity(2),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::Signature;

    #[test]
    fn signatures() {
        assert_eq!(example_4d().signature(), Signature { n: 4, m: 1, r: 1, k: 0 });
        assert_eq!(
            example_5d(1.0, 1.0).unwrap().signature(),
            Signature { n: 5, m: 2, r: 1, k: 0 }
        );
        assert_eq!(example_5d(1.0, 0.0), Err(Error::ZeroParameter("r")));
        assert_eq!(example_5d(0.0, 1.0), Err(Error::ZeroParameter("t")));
    }
}
