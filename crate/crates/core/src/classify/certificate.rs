use crate::charpoly::{is_characteristic, MatrixParabola};
use crate::error::{Error, Result};
use crate::symmat::Matrix;

/// A triple `(X, α, β)` acting by `Q(s) ↦ XᵀQ(αs + β)X`.
///
/// `integral` certificates carry a unimodular integer `X`; the others only
/// need `X` invertible.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceCertificate {
    pub x: Matrix,
    pub alpha: f64,
    pub beta: f64,
    pub integral: bool,
}

impl EquivalenceCertificate {
    pub fn new(x: Matrix, alpha: f64, beta: f64, integral: bool) -> Result<Self> {
        let cert = Self {
            x,
            alpha,
            beta,
            integral,
        };
        cert.validate()?;
        Ok(cert)
    }

    pub fn identity(m: usize) -> Self {
        Self {
            x: Matrix::identity(m),
            alpha: 1.0,
            beta: 0.0,
            integral: true,
        }
    }

    /// Reparametrization `s ↦ αs + β` alone.
    pub fn affine(m: usize, alpha: f64, beta: f64) -> Self {
        Self {
            alpha,
            beta,
            integral: false,
            ..Self::identity(m)
        }
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn validate(&self) -> Result<()> {
        if !self.x.is_square() {
            return Err(Error::BadCertificate(format!(
                "X is {}x{}",
                self.x.rows(),
                self.x.cols()
            )));
        }
        if !(self.alpha.is_finite() && self.beta.is_finite() && self.x.is_finite()) {
            return Err(Error::BadCertificate("non-finite entries".into()));
        }
        if self.alpha <= 0.0 {
            return Err(Error::BadCertificate(format!("alpha = {} is not positive", self.alpha)));
        }
        let det = self.x.det();
        if self.integral {
            if self.x.to_rows().iter().flatten().any(|v| v.fract() != 0.0) {
                return Err(Error::BadCertificate("X has non-integer entries".into()));
            }
            if (det.abs() - 1.0).abs() > 1e-9 {
                return Err(Error::BadCertificate(format!("|det X| = {} is not 1", det.abs())));
            }
        } else if det == 0.0 || det.abs() <= 1e-14 * (1.0 + self.x.max_abs()).powi(self.dim() as i32) {
            return Err(Error::BadCertificate("X is singular".into()));
        }
        Ok(())
    }
}

/// `XᵀQ(αs + β)X`, i.e. `A′ = XᵀQ(β)X`, `B′ = αXᵀ(B + βC)X`,
/// `C′ = α²XᵀCX`.
pub fn apply_certificate(parabola: &MatrixParabola, cert: &EquivalenceCertificate) -> Result<MatrixParabola> {
    if cert.dim() != parabola.dim() || !cert.x.is_square() {
        return Err(Error::dims(format!(
            "certificate of size {}x{} for a parabola of size {}",
            cert.x.rows(),
            cert.x.cols(),
            parabola.dim()
        )));
    }
    cert.validate()?;
    let (alpha, beta) = (cert.alpha, cert.beta);
    let shifted = MatrixParabola::new(
        parabola.at(beta),
        parabola.b().add(&parabola.c().scaled(beta)).scaled(alpha),
        parabola.c().scaled(alpha * alpha),
    )?;
    shifted.congruence(&cert.x)
}

/// `apply_certificate(p1, cert)` reproduces `p2` within `tol·scale`, and
/// both parabolas have the same signature at dimension `n`.
pub fn verify_equivalence(
    p1: &MatrixParabola,
    p2: &MatrixParabola,
    cert: &EquivalenceCertificate,
    n: usize,
    tol: f64,
) -> Result<bool> {
    cert.validate()?;
    if p1.dim() != p2.dim() || cert.dim() != p1.dim() {
        return Ok(false);
    }
    let v1 = is_characteristic(p1, n, tol)?;
    let v2 = is_characteristic(p2, n, tol)?;
    if v1.signature != v2.signature || v1.characteristic != v2.characteristic {
        return Ok(false);
    }
    Ok(certifies(p1, p2, cert, tol))
}

pub(crate) fn certifies(p1: &MatrixParabola, p2: &MatrixParabola, cert: &EquivalenceCertificate, tol: f64) -> bool {
    match apply_certificate(p1, cert) {
        Ok(image) => image.max_abs_diff(p2) <= tol * p2.scale().max(image.scale()),
        Err(_) => false,
    }
}

/// Largest supported entry bound for [`search_certificate`].
pub const MAX_ENTRY_BOUND: u32 = 5;

/// Integer values `0, 1, −1, 2, −2, …` up to `bound`.
fn entry_values(bound: i64) -> Vec<f64> {
    let mut values = vec![0.0];
    for v in 1..=bound {
        values.push(v as f64);
        values.push(-(v as f64));
    }
    values
}

/// Exhaustive search for an integral certificate with entries bounded by
/// `bound`, taking `p1` to `p2`. For each unimodular `X` the scalars follow
/// from traces: `α² = tr C₂ / tr XᵀC₁X` and `β` from the `B` coefficients.
pub fn search_certificate(
    p1: &MatrixParabola,
    p2: &MatrixParabola,
    bound: u32,
    tol: f64,
) -> Result<Option<EquivalenceCertificate>> {
    let m = p1.dim();
    if p2.dim() != m {
        return Err(Error::dims(format!("parabolas of sizes {m} and {}", p2.dim())));
    }
    if m > 2 {
        return Err(Error::UnsupportedDimension(format!(
            "certificate search supports m <= 2, got {m}"
        )));
    }
    if bound > MAX_ENTRY_BOUND {
        return Err(Error::InvalidInput(format!(
            "entry bound {bound} exceeds {MAX_ENTRY_BOUND}"
        )));
    }
    let values = entry_values(bound as i64);
    let cells = m * m;
    let mut digits = vec![0usize; cells];
    loop {
        let x = Matrix::from_fn(m, m, |i, j| values[digits[i * m + j]]);
        if x.det().abs() == 1.0 {
            if let Some(cert) = solve_scalars(p1, p2, x, tol) {
                return Ok(Some(cert));
            }
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < values.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn solve_scalars(p1: &MatrixParabola, p2: &MatrixParabola, x: Matrix, tol: f64) -> Option<EquivalenceCertificate> {
    let c1 = p1.c().to_matrix();
    let b1 = p1.b().to_matrix();
    let xt = x.transpose();
    let tr_c1 = (&(&xt * &c1) * &x).trace();
    let tr_b1 = (&(&xt * &b1) * &x).trace();
    let (tr_b2, tr_c2) = (p2.b().trace(), p2.c().trace());
    let cut = tol * p1.scale().max(p2.scale());
    let (alpha, beta) = if tr_c1.abs() <= cut {
        (1.0, 0.0)
    } else {
        let alpha_sq = tr_c2 / tr_c1;
        if alpha_sq <= 0.0 {
            return None;
        }
        let alpha = alpha_sq.sqrt();
        (alpha, (tr_b2 / alpha - tr_b1) / tr_c1)
    };
    let cert = EquivalenceCertificate {
        x,
        alpha,
        beta,
        integral: true,
    };
    certifies(p1, p2, &cert, tol).then_some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_polynomial;
    use crate::construction::example_5d;
    use crate::symmat::SymMatrix;

    fn scalar(a: f64, b: f64, c: f64) -> MatrixParabola {
        MatrixParabola::new(
            SymMatrix::from_diag(&[a]),
            SymMatrix::from_diag(&[b]),
            SymMatrix::from_diag(&[c]),
        )
        .unwrap()
    }

    fn cert1(x: f64, alpha: f64, beta: f64) -> EquivalenceCertificate {
        EquivalenceCertificate::new(Matrix::from_diag(&[x]), alpha, beta, true).unwrap()
    }

    #[test]
    fn applying_certificates() {
        let q = scalar(1.0, 0.0, 1.0);
        assert_eq!(apply_certificate(&q, &EquivalenceCertificate::identity(1)).unwrap(), q);
        assert_eq!(apply_certificate(&q, &cert1(1.0, 1.0, 1.0)).unwrap(), scalar(2.0, 1.0, 1.0));
        assert_eq!(apply_certificate(&q, &cert1(-1.0, 2.0, 0.0)).unwrap(), scalar(1.0, 0.0, 4.0));
        assert!(apply_certificate(&q, &EquivalenceCertificate::identity(2)).is_err());
    }

    #[test]
    fn certificate_validation() {
        assert!(EquivalenceCertificate::new(Matrix::from_diag(&[2.0]), 1.0, 0.0, true).is_err());
        assert!(EquivalenceCertificate::new(Matrix::from_diag(&[0.5]), 1.0, 0.0, true).is_err());
        assert!(EquivalenceCertificate::new(Matrix::from_diag(&[0.5]), 1.0, 0.0, false).is_ok());
        assert!(matches!(
            EquivalenceCertificate::new(Matrix::from_diag(&[1.0]), 0.0, 0.0, true),
            Err(Error::BadCertificate(_))
        ));
    }

    #[test]
    fn verification() {
        let q = scalar(1.0, 0.0, 1.0);
        let id = EquivalenceCertificate::identity(1);
        assert!(verify_equivalence(&q, &q, &id, 4, 1e-9).unwrap());
        assert!(verify_equivalence(&q, &scalar(2.0, 1.0, 1.0), &cert1(1.0, 1.0, 1.0), 4, 1e-9).unwrap());
        for x in [1.0, -1.0] {
            for alpha in [0.5, 1.0, 2.0] {
                for beta in [-1.0, 0.0, 1.0] {
                    let c = cert1(x, alpha, beta);
                    assert!(!verify_equivalence(&q, &scalar(2.0, 0.0, 1.0), &c, 4, 1e-9).unwrap());
                }
            }
        }
    }

    #[test]
    fn search_scalar() {
        let q = scalar(1.0, 0.0, 1.0);
        let found = search_certificate(&q, &scalar(2.0, 1.0, 1.0), 3, 1e-9).unwrap().unwrap();
        assert_eq!(found, cert1(1.0, 1.0, 1.0));
        assert_eq!(search_certificate(&q, &scalar(3.0, 0.0, 1.0), 5, 1e-9).unwrap(), None);
    }

    #[test]
    fn search_planted_swap() {
        let p = char_polynomial(&example_5d(1.0, 2.0).unwrap());
        let swap = EquivalenceCertificate::new(
            Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap(),
            1.0,
            0.0,
            true,
        )
        .unwrap();
        let target = apply_certificate(&p, &swap).unwrap();
        let found = search_certificate(&p, &target, 1, 1e-9).unwrap().unwrap();
        assert!(certifies(&p, &target, &found, 1e-9));
    }

    #[test]
    fn search_limits() {
        let p = MatrixParabola::new(SymMatrix::identity(3), SymMatrix::zeros(3), SymMatrix::zeros(3)).unwrap();
        assert!(matches!(search_certificate(&p, &p, 1, 1e-9), Err(Error::UnsupportedDimension(_))));
        let q = scalar(1.0, 0.0, 1.0);
        assert!(matches!(search_certificate(&q, &q, 6, 1e-9), Err(Error::InvalidInput(_))));
    }
}
