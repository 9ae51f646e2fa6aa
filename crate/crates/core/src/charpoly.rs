//! Characteristic parabolas `Q(s) = A + 2sB + s²C` and the criteria that
//! single out the ones coming from a manifold.

use serde::Serialize;

use crate::construction::{gamma_apply, ManifoldData, Signature};
use crate::error::{Error, Result};
use crate::minkowski::{ell, l0, Vector};
use crate::symmat::{
    self, congruence, det_poly, is_pd, is_psd, pd_inv_sqrt, rank_tol, real_root_count, real_roots, Matrix,
    SymMatrix,
};

/// Sample parameters at which reductions are double-checked.
const CHECK_POINTS: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

/// The curve `s ↦ A + 2sB + s²C` of symmetric `m×m` matrices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixParabola {
    #[serde(rename = "A")]
    a: SymMatrix,
    #[serde(rename = "B")]
    b: SymMatrix,
    #[serde(rename = "C")]
    c: SymMatrix,
}

impl MatrixParabola {
    pub fn new(a: SymMatrix, b: SymMatrix, c: SymMatrix) -> Result<Self> {
        if a.dim() != b.dim() || a.dim() != c.dim() {
            return Err(Error::dims(format!(
                "parabola coefficients of sizes {}, {}, {}",
                a.dim(),
                b.dim(),
                c.dim()
            )));
        }
        if a.dim() == 0 {
            return Err(Error::dims("empty parabola"));
        }
        Ok(Self { a, b, c })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn a(&self) -> &SymMatrix {
        &self.a
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    pub fn c(&self) -> &SymMatrix {
        &self.c
    }

    pub fn at(&self, s: f64) -> SymMatrix {
        self.a.add(&self.b.scaled(2.0 * s)).add(&self.c.scaled(s * s))
    }

    /// `zᵀ Q(s) z`.
    pub fn quadratic_form(&self, s: f64, z: &[f64]) -> f64 {
        let q = self.at(s).to_matrix();
        z.iter().zip(q.mul_vec(z)).map(|(a, b)| a * b).sum()
    }

    /// `1 + max` over all coefficient entries.
    pub fn scale(&self) -> f64 {
        1.0 + self.a.max_abs().max(self.b.max_abs()).max(self.c.max_abs())
    }

    /// `B = C = 0` within `tol·scale`.
    pub fn is_elliptic(&self, tol: f64) -> bool {
        let cut = tol * self.scale();
        self.b.max_abs() <= cut && self.c.max_abs() <= cut
    }

    /// Coefficient-wise `XᵀQ(s)X`.
    pub fn congruence(&self, x: &Matrix) -> Result<Self> {
        Self::new(
            congruence(&self.a, x)?,
            congruence(&self.b, x)?,
            congruence(&self.c, x)?,
        )
    }

    /// Largest coefficient-wise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.a
            .max_abs_diff(&other.a)
            .max(self.b.max_abs_diff(&other.b))
            .max(self.c.max_abs_diff(&other.c))
    }
}

/// `A_ij = −ℓ(gᵢ, gⱼ)`, `B_ij = −ℓ(a gᵢ, gⱼ)`, `C_ij = −ℓ(a gᵢ, a gⱼ)` over the
/// lattice generators `gᵢ = ι eᵢ`.
pub fn char_polynomial(data: &ManifoldData) -> MatrixParabola {
    let m = data.m();
    let frame = data.frame();
    let gens: Vec<Vector> = (0..m)
        .map(|i| frame.embed_t(&data.generator(i)).expect("generator shape"))
        .collect();
    let images: Vec<Vector> = (0..m)
        .map(|i| data.apply_a(&data.generator(i)).expect("generator shape"))
        .collect();
    let gram = |u: &[Vector], v: &[Vector]| {
        SymMatrix::symmetrized(&Matrix::from_fn(m, m, |i, j| {
            -ell(&u[i], &v[j]).expect("same frame")
        }))
    };
    MatrixParabola::new(gram(&gens, &gens), gram(&images, &gens), gram(&images, &images))
        .expect("coefficients share a dimension")
}

/// Squared length `−ℓ(γ_x(v) − v, γ_x(v) − v)` of the loop `x = ι z`.
pub fn q_direct(data: &ManifoldData, z: &[i64], v: &Vector) -> Result<f64> {
    if z.len() != data.m() {
        return Err(Error::dims(format!(
            "lattice point of length {}, expected {}",
            z.len(),
            data.m()
        )));
    }
    let zf: Vec<f64> = z.iter().map(|&c| c as f64).collect();
    let x = data.lattice().mul_vec(&zf);
    let d = &gamma_apply(data, &x, v)? - v;
    Ok(-ell(&d, &d)?)
}

/// `⟨Q(l₀(v)) z, z⟩`, the value `q_direct` must reproduce.
pub fn q_from_parabola(parabola: &MatrixParabola, z: &[i64], v: &Vector) -> f64 {
    let zf: Vec<f64> = z.iter().map(|&c| c as f64).collect();
    parabola.quadratic_form(l0(v), &zf)
}

/// `Q(s) ≻ 0` for every real `s`: `A ≻ 0` and `det Q(s)` has no real root.
/// Eigenvalues move continuously in `s`, so none can cross zero unless the
/// determinant vanishes somewhere.
///
/// The test runs on the congruent, reparametrized curve
/// `I + 2tσB̃ + t²σ²C̃`, scaled so that its roots sit near the interpolation
/// nodes. A double root of the determinant can split into a complex pair
/// under rounding; it is caught by evaluating `Q` directly at the critical
/// points of the determinant.
pub fn check_positive_all_s(parabola: &MatrixParabola, tol: f64) -> bool {
    if !is_pd(parabola.a(), tol) {
        return false;
    }
    let Ok(curve) = unit_curve(parabola, tol) else {
        return false;
    };
    let Ok(det) = det_poly(&curve) else {
        return false;
    };
    if real_root_count(&det).map_or(true, |count| count > 0) {
        return false;
    }
    let slope = det.derivative();
    if slope.degree().map_or(true, |d| d == 0) {
        return true;
    }
    match real_roots(&slope, 1e-12) {
        Ok(critical) => critical.into_iter().all(|s| {
            let q = curve.at(s);
            symmat::min_eigenvalue(&q) > tol * q.scale()
        }),
        Err(_) => false,
    }
}

/// `I + 2tσB̃ + t²σ²C̃` with `σ = min(1/|B̃|, 1/√|C̃|)`.
fn unit_curve(parabola: &MatrixParabola, tol: f64) -> Result<MatrixParabola> {
    let s = pd_inv_sqrt(parabola.a(), tol)?.to_matrix();
    let b = congruence(parabola.b(), &s)?;
    let c = congruence(parabola.c(), &s)?;
    let inv = |x: f64| if x > 0.0 { 1.0 / x } else { f64::INFINITY };
    let sigma = match inv(b.max_abs()).min(inv(c.max_abs().sqrt())) {
        s if s.is_finite() => s,
        _ => 1.0,
    };
    MatrixParabola::new(SymMatrix::identity(parabola.dim()), b.scaled(sigma), c.scaled(sigma * sigma))
}

#[derive(Debug, Clone)]
pub struct SchurCondition {
    /// `C − BA⁻¹B`.
    pub matrix: SymMatrix,
    pub psd: bool,
    pub rank: usize,
}

fn require_invertible_a(parabola: &MatrixParabola, tol: f64) -> Result<SymMatrix> {
    let a = parabola.a();
    if rank_tol(a, tol) < a.dim() {
        return Err(Error::SingularA);
    }
    pd_inv_sqrt(a, tol)
}

/// `D = C − BA⁻¹B`, computed as `C − (A^{-1/2}B)ᵀ(A^{-1/2}B)` so that it
/// stays exactly symmetric.
pub fn schur_condition(parabola: &MatrixParabola, tol: f64) -> Result<SchurCondition> {
    let inv_sqrt = require_invertible_a(parabola, tol)?;
    let half = &inv_sqrt.to_matrix() * &parabola.b().to_matrix();
    let correction = SymMatrix::symmetrized(&(&half.transpose() * &half));
    let matrix = parabola.c().sub(&correction);
    // Judge D against the scale of the terms it was formed from.
    let reference = SymMatrix::symmetrized(&Matrix::from_fn(1, 1, |_, _| {
        parabola.c().max_abs().max(correction.max_abs())
    }));
    let cut = tol * reference.scale();
    let eig = symmat::sym_eig(&matrix)?;
    let psd = eig.values.first().map_or(true, |&l| l >= -cut);
    let rank = eig.values.iter().filter(|l| l.abs() > cut).count();
    debug_assert!(psd == is_psd(&matrix, tol) || reference.scale() > matrix.scale());
    Ok(SchurCondition { matrix, psd, rank })
}

/// Outcome of [`is_characteristic`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacteristicVerdict {
    pub characteristic: bool,
    pub signature: Signature,
    /// `Q(s) ≻ 0` for all real `s`.
    pub poabc: bool,
    /// `C − BA⁻¹B ⪰ 0`.
    pub schur_psd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Decides whether `parabola` is the characteristic parabola of a manifold
/// of dimension `n`, and if so with which signature.
pub fn is_characteristic(parabola: &MatrixParabola, n: usize, tol: f64) -> Result<CharacteristicVerdict> {
    let m = parabola.dim();
    require_invertible_a(parabola, tol).or_else(|e| match e {
        Error::NotPositiveDefinite(_) => Ok(SymMatrix::zeros(0)),
        other => Err(other),
    })?;

    if parabola.is_elliptic(tol) {
        let poabc = is_pd(parabola.a(), tol);
        let fits = m + 2 <= n;
        return Ok(CharacteristicVerdict {
            characteristic: poabc && fits,
            signature: Signature { n, m, r: 0, k: m },
            poabc,
            schur_psd: true,
            reason: match (poabc, fits) {
                (false, _) => Some("A is not positive definite".into()),
                (true, false) => Some(format!("m + 2 = {} exceeds n = {n}", m + 2)),
                _ => None,
            },
        });
    }

    let poabc = check_positive_all_s(parabola, tol);
    if !is_pd(parabola.a(), tol) {
        return Ok(CharacteristicVerdict {
            characteristic: false,
            signature: Signature { n, m, r: 0, k: 0 },
            poabc,
            schur_psd: false,
            reason: Some("A is not positive definite".into()),
        });
    }
    let schur = schur_condition(parabola, tol)?;
    let rank_c = rank_tol(parabola.c(), tol);

    if rank_c < m {
        let k = m - rank_c;
        let signature = Signature { n, m, r: schur.rank, k };
        let reduction = match reduce_degenerate(parabola, tol) {
            Ok(red) => red,
            Err(Error::InvalidCharacteristic(why)) => {
                return Ok(CharacteristicVerdict {
                    characteristic: false,
                    signature,
                    poabc,
                    schur_psd: schur.psd,
                    reason: Some(why),
                })
            }
            Err(e) => return Err(e),
        };
        let inner = is_characteristic(&reduction.reduced, n.saturating_sub(k), tol)?;
        let constant_ok = is_pd(&reduction.constant_block, tol);
        let characteristic = inner.characteristic && constant_ok && poabc;
        let reason = if characteristic {
            None
        } else if !constant_ok {
            Some("constant block is not positive definite".into())
        } else if !poabc && inner.reason.is_none() {
            Some("Q(s) is degenerate for some real s".into())
        } else {
            inner.reason.map(|r| format!("reduced block: {r}"))
        };
        return Ok(CharacteristicVerdict {
            characteristic,
            signature: Signature {
                n,
                m,
                r: inner.signature.r,
                k,
            },
            poabc,
            schur_psd: schur.psd,
            reason,
        });
    }

    let r = schur.rank;
    // With r = m, A ≻ 0 alone already forces positivity along the curve.
    let positive = if r == m { is_pd(parabola.a(), tol) } else { poabc };
    let fits = m + r + 2 <= n;
    let characteristic = positive && schur.psd && fits && r >= 1;
    let reason = if characteristic {
        None
    } else if !positive {
        Some("Q(s) is degenerate for some real s".into())
    } else if !schur.psd {
        Some("C - B A^-1 B is not positive semidefinite".into())
    } else if r == 0 {
        Some("C - B A^-1 B vanishes".into())
    } else {
        Some(format!("m + r + 2 = {} exceeds n = {n}", m + r + 2))
    };
    Ok(CharacteristicVerdict {
        characteristic,
        signature: Signature { n, m, r, k: 0 },
        poabc,
        schur_psd: schur.psd,
        reason,
    })
}

/// Result of splitting off the `s`-independent block of a parabola with
/// singular `C`.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    /// `X = [U | V]`: `U` spans `ker C`, `V` its `A`-orthogonal complement.
    pub x: Matrix,
    pub k: usize,
    pub constant_block: SymMatrix,
    pub reduced: MatrixParabola,
}

/// Congruence to `diag(K, Q̃(s))` with `K` constant: `K = UᵀAU` on
/// `U = ker C` and `Q̃ = VᵀQV` on the `A`-orthogonal complement of `U`.
pub fn reduce_degenerate(parabola: &MatrixParabola, tol: f64) -> Result<ReductionResult> {
    let m = parabola.dim();
    let eig_c = symmat::sym_eig(parabola.c())?;
    let cut = tol * parabola.c().scale();
    let kernel_idx: Vec<usize> = (0..m).filter(|&i| eig_c.values[i].abs() <= cut).collect();
    let k = kernel_idx.len();
    if k == 0 {
        return Err(Error::NotDegenerate);
    }
    let u = Matrix::from_columns(m, &kernel_idx.iter().map(|&i| eig_c.vector(i)).collect::<Vec<_>>());

    let bu = &parabola.b().to_matrix() * &u;
    let b_cut = tol * (1.0 + parabola.b().max_abs().max(parabola.c().max_abs()));
    if bu.max_abs() > b_cut {
        return Err(Error::InvalidCharacteristic(format!(
            "B does not vanish on ker C (|BU| = {:e})",
            bu.max_abs()
        )));
    }

    let au = &parabola.a().to_matrix() * &u;
    let outer = SymMatrix::symmetrized(&(&au * &au.transpose()));
    let v = symmat::sym_eig(&outer)?.vectors.columns(0..m - k);
    let x = u.hstack(&v);

    let constant_block = congruence(parabola.a(), &u)?;
    let reduced = parabola.congruence(&v)?;

    for s in CHECK_POINTS {
        let full = congruence(&parabola.at(s), &x)?;
        let check_tol = tol.max(1e-9) * full.scale();
        let kk: Vec<usize> = (0..k).collect();
        let rest: Vec<usize> = (k..m).collect();
        let off = (0..k)
            .flat_map(|i| (k..m).map(move |j| (i, j)))
            .fold(0.0f64, |acc, (i, j)| acc.max(full[(i, j)].abs()));
        if off > check_tol
            || full.submatrix(&kk).max_abs_diff(&constant_block) > check_tol
            || full.submatrix(&rest).max_abs_diff(&reduced.at(s)) > check_tol
        {
            return Err(Error::InvalidCharacteristic(format!(
                "block structure fails at s = {s}"
            )));
        }
    }

    Ok(ReductionResult {
        x,
        k,
        constant_block,
        reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{example_4d, example_5d};

    fn sym(rows: &[&[f64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn parabola(a: SymMatrix, b: SymMatrix, c: SymMatrix) -> MatrixParabola {
        MatrixParabola::new(a, b, c).unwrap()
    }

    fn scalar(a: f64, b: f64, c: f64) -> MatrixParabola {
        parabola(SymMatrix::from_diag(&[a]), SymMatrix::from_diag(&[b]), SymMatrix::from_diag(&[c]))
    }

    /// Positivity cross-check by sampling the minimum eigenvalue on a grid.
    fn min_eig_on_grid(p: &MatrixParabola, half_width: f64, points: usize) -> f64 {
        (0..points)
            .map(|i| -half_width + 2.0 * half_width * i as f64 / (points - 1) as f64)
            .map(|s| symmat::min_eigenvalue(&p.at(s)))
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn dim4_parabola() {
        assert_eq!(char_polynomial(&example_4d()), scalar(1.0, 0.0, 1.0));
    }

    #[test]
    fn dim5_parabola() {
        for (t, r) in [(1.0, 1.0), (2.0, -1.0), (0.5, 3.0)] {
            let p = char_polynomial(&example_5d(t, r).unwrap());
            assert_eq!(p.a(), &SymMatrix::identity(2));
            assert_eq!(p.b(), &SymMatrix::from_diag(&[0.0, 1.0]));
            assert!(p.c().max_abs_diff(&sym(&[&[t * t, t * r], &[t * r, 1.0 + r * r]])) < 1e-14);
        }
    }

    #[test]
    fn elliptic_parabola() {
        let lattice = Matrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        let d = ManifoldData::build(4, &Matrix::zeros(2, 2), &Matrix::zeros(0, 0), &lattice).unwrap();
        let p = char_polynomial(&d);
        assert!(p.b().is_zero(0.0) && p.c().is_zero(0.0));
        assert_eq!(p.a(), &sym(&[&[1.0, 2.0], &[2.0, 5.0]]));
    }

    #[test]
    fn q_direct_values() {
        let d = example_4d();
        let f = d.frame();
        assert_eq!(q_direct(&d, &[1], &f.zero()).unwrap(), 1.0);
        let v = f.vector(vec![0.2, -0.4, 1.5, 2.0]).unwrap();
        assert!((q_direct(&d, &[1], &v).unwrap() - 5.0).abs() < 1e-14);
        assert_eq!(q_direct(&d, &[0], &v).unwrap(), 0.0);
        assert!(q_direct(&d, &[1, 2], &v).is_err());
    }

    #[test]
    fn positivity_cases() {
        let i2 = SymMatrix::identity(2);
        let good = parabola(i2.clone(), i2.scaled(0.5), sym(&[&[1.0, 0.5], &[0.5, 1.0]]));
        assert!(check_positive_all_s(&good, 1e-9));
        assert!(min_eig_on_grid(&good, 10.0, 1001) > 0.0);
        // Q(-1) = C - I is indefinite for every 0 < eps < 1.
        let coupled = parabola(i2.clone(), i2.clone(), sym(&[&[1.0, 0.5], &[0.5, 1.0]]));
        assert!(!check_positive_all_s(&coupled, 1e-9));
        assert!(symmat::min_eigenvalue(&coupled.at(-1.0)) < -0.4);
        let bad = parabola(i2.clone(), SymMatrix::from_diag(&[1.0, 0.0]), i2);
        assert!(!check_positive_all_s(&bad, 1e-9));
        assert!(min_eig_on_grid(&bad, 10.0, 1001) < 1e-12);
        assert!(check_positive_all_s(&scalar(1.0, 0.0, 1.0), 1e-9));
    }

    #[test]
    fn schur_cases() {
        let i2 = SymMatrix::identity(2);
        let p = parabola(i2.clone(), i2.clone(), sym(&[&[1.0, 0.5], &[0.5, 1.0]]));
        let s = schur_condition(&p, 1e-9).unwrap();
        assert!(s.matrix.max_abs_diff(&sym(&[&[0.0, 0.5], &[0.5, 0.0]])) < 1e-14);
        assert!(!s.psd);

        let p = parabola(i2.clone(), SymMatrix::from_diag(&[1.0, 0.0]), i2.clone());
        let s = schur_condition(&p, 1e-9).unwrap();
        assert!(s.matrix.max_abs_diff(&SymMatrix::from_diag(&[0.0, 1.0])) < 1e-14);
        assert!(s.psd);
        assert_eq!(s.rank, 1);

        let p = char_polynomial(&example_5d(1.0, 1.0).unwrap());
        let s = schur_condition(&p, 1e-9).unwrap();
        assert!(s.matrix.max_abs_diff(&sym(&[&[1.0, 1.0], &[1.0, 1.0]])) < 1e-14);
        assert!(s.psd);
        assert_eq!(s.rank, 1);

        let singular = parabola(SymMatrix::from_diag(&[1.0, 0.0]), i2.clone(), i2);
        assert!(matches!(schur_condition(&singular, 1e-9), Err(Error::SingularA)));
    }

    #[test]
    fn characteristic_cases() {
        let v = is_characteristic(&scalar(1.0, 0.0, 1.0), 4, 1e-9).unwrap();
        assert!(v.characteristic);
        assert_eq!(v.signature, Signature { n: 4, m: 1, r: 1, k: 0 });

        let i2 = SymMatrix::identity(2);
        let p = parabola(i2.clone(), i2.clone(), sym(&[&[1.0, 0.5], &[0.5, 1.0]]));
        let v = is_characteristic(&p, 6, 1e-9).unwrap();
        assert!(!v.characteristic && !v.poabc && !v.schur_psd);

        let p = char_polynomial(&example_5d(1.0, 1.0).unwrap());
        let v = is_characteristic(&p, 5, 1e-9).unwrap();
        assert!(v.characteristic);
        assert_eq!(v.signature, Signature { n: 5, m: 2, r: 1, k: 0 });
        assert!(!is_characteristic(&p, 4, 1e-9).unwrap().characteristic);
    }

    #[test]
    fn full_rank_schur_takes_weaker_route() {
        // r = m: A ≻ 0 suffices, and the determinant route must agree.
        let p = parabola(
            SymMatrix::identity(2),
            sym(&[&[0.3, 0.1], &[0.1, -0.2]]),
            sym(&[&[2.0, 0.4], &[0.4, 1.5]]),
        );
        let v = is_characteristic(&p, 6, 1e-9).unwrap();
        assert!(v.characteristic && v.poabc);
        assert_eq!(v.signature.r, 2);
    }

    #[test]
    fn elliptic_characteristic() {
        let p = parabola(SymMatrix::from_diag(&[2.0, 3.0]), SymMatrix::zeros(2), SymMatrix::zeros(2));
        let v = is_characteristic(&p, 4, 1e-9).unwrap();
        assert!(v.characteristic);
        assert_eq!(v.signature, Signature { n: 4, m: 2, r: 0, k: 2 });
        assert!(!is_characteristic(&p, 3, 1e-9).unwrap().characteristic);
    }

    #[test]
    fn reduction_of_block_parabola() {
        let p = parabola(
            SymMatrix::from_diag(&[2.0, 1.0]),
            SymMatrix::from_diag(&[0.0, 0.0]),
            SymMatrix::from_diag(&[0.0, 1.0]),
        );
        let red = reduce_degenerate(&p, 1e-9).unwrap();
        assert_eq!(red.k, 1);
        assert!(red.constant_block.max_abs_diff(&SymMatrix::from_diag(&[2.0])) < 1e-14);
        assert!(red.reduced.max_abs_diff(&scalar(1.0, 0.0, 1.0)) < 1e-14);

        let v = is_characteristic(&p, 5, 1e-9).unwrap();
        assert!(v.characteristic);
        assert_eq!(v.signature, Signature { n: 5, m: 2, r: 1, k: 1 });
    }

    #[test]
    fn reduction_is_purely_linear_algebraic() {
        let p = parabola(
            SymMatrix::identity(2),
            SymMatrix::from_diag(&[1.0, 0.0]),
            SymMatrix::from_diag(&[1.0, 0.0]),
        );
        let red = reduce_degenerate(&p, 1e-9).unwrap();
        assert_eq!(red.k, 1);
        assert!(red.reduced.max_abs_diff(&scalar(1.0, 1.0, 1.0)) < 1e-14);
        assert!(!check_positive_all_s(&red.reduced, 1e-9));
        assert!(!is_characteristic(&p, 6, 1e-9).unwrap().characteristic);
    }

    #[test]
    fn reduction_errors() {
        assert!(matches!(
            reduce_degenerate(&scalar(1.0, 0.0, 1.0), 1e-9),
            Err(Error::NotDegenerate)
        ));
        let p = parabola(SymMatrix::identity(2), SymMatrix::from_diag(&[0.0, 1.0]), SymMatrix::from_diag(&[1.0, 0.0]));
        assert!(matches!(reduce_degenerate(&p, 1e-9), Err(Error::InvalidCharacteristic(_))));
    }
}
