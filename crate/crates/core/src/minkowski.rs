//! The canonical Minkowski frame.
//!
//! Coordinates are `z₁..zₙ` with
//! `ℓ(z, z) = 2 zₙ zₙ₋₁ − z₁² − … − zₙ₋₂²`, null vectors `v₀ = eₙ₋₁`,
//! `v₁ = eₙ` (so `ℓ(v₀, v₁) = 1`), and the splitting
//! `V = T ⊕ R ⊕ E ⊕ ℝv₁ ⊕ L` with `T = span(e₁..e_m)`,
//! `R = span(e_{m+1}..e_{m+r})`, `E` the rest of `N = span(e₁..eₙ₋₂)`,
//! `L = ℝv₀` and `W = {zₙ = 0} = N ⊕ L`.
//!
//! Indices in code are zero-based, so `v₀` sits at index `n-2` and `v₁` at
//! `n-1`.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// Frame dimensions: ambient `n`, `m = dim T`, `r = dim R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LorentzFrame {
    n: usize,
    m: usize,
    r: usize,
}

impl LorentzFrame {
    pub fn new(n: usize, m: usize, r: usize) -> Result<Self> {
        if m + r + 2 > n {
            return Err(Error::SignatureInconsistent(format!(
                "m + r + 2 = {} exceeds n = {n}",
                m + r + 2
            )));
        }
        if m == 0 {
            return Err(Error::SignatureInconsistent("m must be at least 1".into()));
        }
        Ok(Self { n, m, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `dim E = n − m − r − 2`.
    pub fn e_dim(&self) -> usize {
        self.n - self.m - self.r - 2
    }

    pub fn zero(&self) -> Vector {
        Vector(vec![0.0; self.n])
    }

    /// Standard basis vector `e_{i+1}` (zero-based `i`).
    pub fn basis(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v.0[i] = 1.0;
        v
    }

    pub fn v0(&self) -> Vector {
        self.basis(self.n - 2)
    }

    pub fn v1(&self) -> Vector {
        self.basis(self.n - 1)
    }

    pub fn vector(&self, coords: Vec<f64>) -> Result<Vector> {
        if coords.len() != self.n {
            return Err(Error::dims(format!(
                "vector of length {} in a frame of dimension {}",
                coords.len(),
                self.n
            )));
        }
        Ok(Vector(coords))
    }

    /// Embeds `T`-coordinates and `R`-coordinates into `N ⊂ V`.
    pub fn embed_tr(&self, t: &[f64], r: &[f64]) -> Result<Vector> {
        if t.len() != self.m || r.len() != self.r {
            return Err(Error::dims(format!(
                "expected {} T- and {} R-coordinates, got {} and {}",
                self.m,
                self.r,
                t.len(),
                r.len()
            )));
        }
        let mut v = self.zero();
        v.0[..self.m].copy_from_slice(t);
        v.0[self.m..self.m + self.r].copy_from_slice(r);
        Ok(v)
    }

    pub fn embed_t(&self, t: &[f64]) -> Result<Vector> {
        self.embed_tr(t, &vec![0.0; self.r])
    }

    pub fn t_part<'a>(&self, v: &'a Vector) -> &'a [f64] {
        &v.0[..self.m]
    }

    pub fn r_part<'a>(&self, v: &'a Vector) -> &'a [f64] {
        &v.0[self.m..self.m + self.r]
    }

    pub fn e_part<'a>(&self, v: &'a Vector) -> &'a [f64] {
        &v.0[self.m + self.r..self.n - 2]
    }
}

/// A vector of `V` in canonical coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(pub(crate) Vec<f64>);

impl Vector {
    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn axpy(&self, a: f64, other: &Self) -> Self {
        Vector(self.0.iter().zip(&other.0).map(|(x, y)| x + a * y).collect())
    }
}

impl From<Vec<f64>> for Vector {
    fn from(coords: Vec<f64>) -> Self {
        Vector(coords)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        self.axpy(1.0, rhs)
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        self.axpy(-1.0, rhs)
    }
}

/// The Lorentzian form `ℓ(u, v) = uₙvₙ₋₁ + uₙ₋₁vₙ − Σ_{i≤n−2} uᵢvᵢ`.
pub fn ell(u: &Vector, v: &Vector) -> Result<f64> {
    let n = u.dim();
    if v.dim() != n || n < 2 {
        return Err(Error::dims(format!(
            "ell of vectors of length {} and {}",
            n,
            v.dim()
        )));
    }
    let space: f64 = u.0[..n - 2].iter().zip(&v.0[..n - 2]).map(|(a, b)| a * b).sum();
    Ok(u.0[n - 1] * v.0[n - 2] + u.0[n - 2] * v.0[n - 1] - space)
}

/// `l₀(v) = ℓ(v₀, v)`, i.e. the last coordinate.
pub fn l0(v: &Vector) -> f64 {
    v.0[v.dim() - 1]
}

/// Membership in the closed future cone: `ℓ(v, v) ≥ −tol` and
/// `zₙ₋₁ + zₙ ≥ 0`, the nappe containing `v₀` and `v₁`.
pub fn in_cone(v: &Vector, tol: f64) -> bool {
    let n = v.dim();
    let q = ell(v, v).unwrap_or(f64::NEG_INFINITY);
    q >= -tol && v.0[n - 2] + v.0[n - 1] >= -tol
}

/// `ℓ`-orthogonal projection onto `N`: drops the `v₀` and `v₁` coordinates.
pub fn proj_n(v: &Vector) -> Vector {
    let n = v.dim();
    let mut out = v.clone();
    out.0[n - 2] = 0.0;
    out.0[n - 1] = 0.0;
    out
}
