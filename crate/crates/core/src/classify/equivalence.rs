use serde::Serialize;

use super::certificate::{apply_certificate, certifies, EquivalenceCertificate};
use super::invariants::{affine_spectrum, spectrum_form};
use super::realize::normalized;
use crate::charpoly::{is_characteristic, reduce_degenerate, CharacteristicVerdict, MatrixParabola};
use crate::error::{Error, Result};
use crate::symmat::{self, pd_inv_sqrt, psd_sqrt, Matrix, SymMatrix};

/// Floor for comparing spectra and Gram matrices, which carry more
/// rounding than the coefficients they come from.
pub const INVARIANT_TOL: f64 = 1e-7;

/// Sign patterns are searched exhaustively up to this size.
const MAX_SIGN_SEARCH: usize = 20;

/// Outcome of [`almost_equivalent`]. A `Yes` witness satisfies
/// `apply_certificate(p1, witness) ≈ p2` with real `X`.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Yes(EquivalenceCertificate),
    No(String),
    Unknown(String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "Yes",
            Verdict::No(_) => "No",
            Verdict::Unknown(_) => "Unknown",
        }
    }
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none")]
    x: Option<&'a Matrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = match self {
            Verdict::Yes(c) => VerdictJson {
                verdict: "Yes",
                reason: None,
                x: Some(&c.x),
                alpha: Some(c.alpha),
                beta: Some(c.beta),
            },
            Verdict::No(r) | Verdict::Unknown(r) => VerdictJson {
                verdict: self.label(),
                reason: Some(r),
                x: None,
                alpha: None,
                beta: None,
            },
        };
        json.serialize(serializer)
    }
}

fn require_characteristic(p: &MatrixParabola, n: usize, tol: f64) -> Result<CharacteristicVerdict> {
    let v = is_characteristic(p, n, tol)?;
    if !v.characteristic {
        return Err(Error::NotCharacteristic(
            v.reason.unwrap_or_else(|| "parabola is not characteristic".into()),
        ));
    }
    Ok(v)
}

/// Decides whether some real `X`, `α > 0`, `β` give
/// `p2(s) = Xᵀp1(αs + β)X`.
pub fn almost_equivalent(p1: &MatrixParabola, p2: &MatrixParabola, n: usize, tol: f64) -> Result<Verdict> {
    let v1 = require_characteristic(p1, n, tol)?;
    let v2 = require_characteristic(p2, n, tol)?;
    if v1.signature != v2.signature {
        return Ok(Verdict::No(format!(
            "signatures differ: {:?} vs {:?}",
            v1.signature, v2.signature
        )));
    }
    let verdict = decide(p1, p2, n, tol)?;
    if let Verdict::Yes(cert) = &verdict {
        let check = tol.max(INVARIANT_TOL);
        if !certifies(p1, p2, cert, check) {
            return Ok(Verdict::Unknown("constructed witness failed verification".into()));
        }
    }
    Ok(verdict)
}

fn decide(p1: &MatrixParabola, p2: &MatrixParabola, n: usize, tol: f64) -> Result<Verdict> {
    let m = p1.dim();
    if p1.is_elliptic(tol) && p2.is_elliptic(tol) {
        let x = &pd_inv_sqrt(p1.a(), tol)?.to_matrix() * &psd_sqrt(p2.a())?.to_matrix();
        return Ok(Verdict::Yes(real_cert(x, 1.0, 0.0)));
    }
    let k = m - symmat::rank_tol(p1.c(), tol);
    if k > 0 {
        return decide_reduced(p1, p2, n, k, tol);
    }

    let sp1 = affine_spectrum(p1, tol)?;
    let sp2 = affine_spectrum(p2, tol)?;
    let check = tol.max(INVARIANT_TOL);
    if !sp1.matches(&sp2, check, false) {
        return Ok(Verdict::No("affine spectra differ".into()));
    }
    if sp1.degenerate {
        return decide_degenerate(p1, p2, sp1.raw[0], sp2.raw[0], tol);
    }

    // Pencil eigenvalues move as μ ↦ (μ + β)/α.
    let alpha = (sp1.max() - sp1.min()) / (sp2.max() - sp2.min());
    let beta = alpha * sp2.min() - sp1.min();
    let shifted = apply_certificate(p1, &EquivalenceCertificate::affine(m, alpha, beta))?;

    let (b1, g1) = normalized(&shifted, tol)?;
    let (b2, g2) = normalized(p2, tol)?;
    let e1 = symmat::sym_eig(&b1)?.values;
    let e2 = symmat::sym_eig(&b2)?.values;
    let escale = 1.0 + b1.max_abs().max(b2.max_abs());
    if e1.iter().zip(&e2).any(|(a, b)| (a - b).abs() > check * escale) {
        return Ok(Verdict::No("spectra of the normalized linear coefficients differ".into()));
    }
    let (f1, f2) = match (spectrum_form(&b1, &g1, tol), spectrum_form(&b2, &g2, tol)) {
        (Ok(f1), Ok(f2)) => (f1, f2),
        (Err(Error::NotSimpleSpectrum), _) | (_, Err(Error::NotSimpleSpectrum)) => {
            return Ok(Verdict::Unknown("repeated eigenvalues".into()))
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    if m > MAX_SIGN_SEARCH {
        return Ok(Verdict::Unknown("too many eigenvalues for the sign search".into()));
    }
    let gscale = 1.0 + f1.gram.max_abs().max(f2.gram.max_abs());
    let Some(signs) = matching_signs(&f1.gram, &f2.gram, check * gscale) else {
        return Ok(Verdict::No("Gram matrices are not sign-congruent".into()));
    };

    // O = W₁ D W₂ᵀ is orthogonal, and X = Ã₁^{-1/2} O A₂^{1/2} with Ã₁ the
    // constant coefficient of the reparametrized p1.
    let d = Matrix::from_diag(&signs);
    let o = &(&f1.frame * &d) * &f2.frame.transpose();
    let x = &(&pd_inv_sqrt(shifted.a(), tol)?.to_matrix() * &o) * &psd_sqrt(p2.a())?.to_matrix();
    Ok(Verdict::Yes(real_cert(x, alpha, beta)))
}

fn real_cert(x: Matrix, alpha: f64, beta: f64) -> EquivalenceCertificate {
    EquivalenceCertificate {
        x,
        alpha,
        beta,
        integral: false,
    }
}

/// `D ∈ {±1}^m` with `D Γ₁ D = Γ₂`, first sign fixed to `+1`.
fn matching_signs(g1: &SymMatrix, g2: &SymMatrix, tol: f64) -> Option<Vec<f64>> {
    let m = g1.dim();
    let patterns = 1u64 << m.saturating_sub(1);
    (0..patterns).find_map(|mask| {
        let signs: Vec<f64> = (0..m)
            .map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { -1.0 } else { 1.0 })
            .collect();
        let ok = (0..m).all(|i| (0..m).all(|j| (signs[i] * signs[j] * g1[(i, j)] - g2[(i, j)]).abs() <= tol));
        ok.then_some(signs)
    })
}

/// `B = μC`: `Q(s) = (A − μ²C) + (s + μ)²C`. The pair `(A − μ²C, C)` is
/// classified by its generalized eigenvalues up to the factor `α²`.
fn decide_degenerate(p1: &MatrixParabola, p2: &MatrixParabola, mu1: f64, mu2: f64, tol: f64) -> Result<Verdict> {
    let frame = |p: &MatrixParabola, mu: f64| -> Result<(Vec<f64>, Matrix, Matrix)> {
        let a0 = p.a().sub(&p.c().scaled(mu * mu));
        let s = pd_inv_sqrt(&a0, tol)?;
        let eig = symmat::congruence(p.c(), &s.to_matrix())?.eig()?;
        let f = &s.to_matrix() * &eig.vectors;
        let f_inv = &eig.vectors.transpose() * &psd_sqrt(&a0)?.to_matrix();
        Ok((eig.values, f, f_inv))
    };
    let (nu1, f1, _) = frame(p1, mu1)?;
    let (nu2, _, f2_inv) = frame(p2, mu2)?;
    let ratios: Vec<f64> = nu2.iter().zip(&nu1).map(|(a, b)| a / b).collect();
    let alpha_sq = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let check = tol.max(INVARIANT_TOL);
    if ratios.iter().any(|r| (r - alpha_sq).abs() > check * alpha_sq) {
        return Ok(Verdict::No("generalized spectra differ beyond a common scale".into()));
    }
    let alpha = alpha_sq.sqrt();
    Ok(Verdict::Yes(real_cert(&f1 * &f2_inv, alpha, alpha * mu2 - mu1)))
}

/// Splits off the constant blocks, compares them and recurses on the
/// reduced parabolas.
fn decide_reduced(p1: &MatrixParabola, p2: &MatrixParabola, n: usize, k: usize, tol: f64) -> Result<Verdict> {
    let r1 = reduce_degenerate(p1, tol)?;
    let r2 = reduce_degenerate(p2, tol)?;
    if r1.k != k || r2.k != k {
        return Ok(Verdict::No("kernels of C have different dimensions".into()));
    }
    let inner = match decide(&r1.reduced, &r2.reduced, n - k, tol)? {
        Verdict::Yes(c) => c,
        other => return Ok(other),
    };
    let z = &pd_inv_sqrt(&r1.constant_block, tol)?.to_matrix() * &psd_sqrt(&r2.constant_block)?.to_matrix();
    let w = z.block_diag(&inner.x);
    let Some(x2_inv) = r2.x.inverse() else {
        return Ok(Verdict::Unknown("reduction basis is singular".into()));
    };
    let x = &(&r1.x * &w) * &x2_inv;
    Ok(Verdict::Yes(real_cert(x, inner.alpha, inner.beta)))
}
