//! Random generators shared by the integration tests.
#![allow(dead_code)]

use flatcausal::charpoly::char_polynomial;
use flatcausal::construction::ManifoldData;
use flatcausal::symmat::{singular_values, sym_eig, Matrix, SymMatrix};
use flatcausal::MatrixParabola;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| rng.gen_range(-1.0..1.0))
}

pub fn random_sym(rng: &mut ChaCha8Rng, m: usize, scale: f64) -> SymMatrix {
    SymMatrix::symmetrized(&gaussian_matrix(rng, m, m).scale(scale))
}

/// Orthogonal matrix by Gram-Schmidt on random columns.
pub fn random_orthogonal(rng: &mut ChaCha8Rng, m: usize) -> Matrix {
    loop {
        let g = gaussian_matrix(rng, m, m);
        let mut cols: Vec<Vec<f64>> = Vec::new();
        for j in 0..m {
            let mut v = g.column(j);
            for c in &cols {
                let d: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
                v.iter_mut().zip(c).for_each(|(a, b)| *a -= d * b);
            }
            let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if norm < 1e-3 {
                break;
            }
            cols.push(v.iter().map(|a| a / norm).collect());
        }
        if cols.len() == m {
            return Matrix::from_columns(m, &cols);
        }
    }
}

/// `U diag(σ) Vᵀ` with singular values in `[1, cond]`.
pub fn conditioned(rng: &mut ChaCha8Rng, m: usize, cond: f64) -> Matrix {
    let u = random_orthogonal(rng, m);
    let v = random_orthogonal(rng, m);
    let sigma: Vec<f64> = (0..m).map(|_| cond.powf(rng.gen_range(0.0..1.0))).collect();
    &(&u * &Matrix::from_diag(&sigma)) * &v.transpose()
}

pub struct RandomData {
    pub n: usize,
    pub a_prime: Matrix,
    pub a_dblprime: Matrix,
    pub lattice: Matrix,
}

impl RandomData {
    pub fn build(&self) -> ManifoldData {
        ManifoldData::build(self.n, &self.a_prime, &self.a_dblprime, &self.lattice).expect("valid random data")
    }

    pub fn parts(&self) -> ManifoldData {
        ManifoldData::from_parts(self.n, &self.a_prime, &self.a_dblprime, &self.lattice).expect("structurally valid")
    }
}

/// Symmetric `a′` whose eigenvalues are separated and bounded away from 0.
fn spread_sym(rng: &mut ChaCha8Rng, m: usize) -> Matrix {
    let q = random_orthogonal(rng, m);
    let mut values: Vec<f64> = Vec::new();
    while values.len() < m {
        let v: f64 = rng.gen_range(-2.0..2.0);
        if v.abs() > 0.2 && values.iter().all(|w| (w - v).abs() > 0.2) {
            values.push(v);
        }
    }
    &(&q * &Matrix::from_diag(&values)) * &q.transpose()
}

fn well_conditioned_rows(m: &Matrix, r: usize) -> bool {
    singular_values(m).get(r - 1).is_some_and(|&s| s >= 0.2)
}

/// Valid data with `k = 0`: `m ≤ 3`, `1 ≤ r ≤ 2`, lattice condition
/// number at most `cond`.
pub fn random_data(rng: &mut ChaCha8Rng, max_m: usize, cond: f64) -> RandomData {
    let m = rng.gen_range(1..=max_m);
    let r = rng.gen_range(1..=m.min(2));
    let n = m + r + 2 + rng.gen_range(0..=1);
    let a_prime = spread_sym(rng, m);
    let eig = sym_eig(&SymMatrix::symmetrized(&a_prime)).unwrap();
    let a_dblprime = loop {
        let candidate = gaussian_matrix(rng, r, m);
        let margin = (0..m)
            .map(|i| candidate.mul_vec(&eig.vector(i)).iter().map(|c| c * c).sum::<f64>().sqrt())
            .fold(f64::INFINITY, f64::min);
        if well_conditioned_rows(&candidate, r) && margin >= 0.2 {
            break candidate;
        }
    };
    RandomData {
        n,
        a_prime,
        a_dblprime,
        lattice: conditioned(rng, m, cond),
    }
}

/// Data violating freeness: `a″` annihilates an eigenvector of `a′` with a
/// nonzero eigenvalue. Requires room for `r ≤ m − 1`.
pub fn random_violator(rng: &mut ChaCha8Rng, cond: f64) -> RandomData {
    let m = rng.gen_range(2..=3);
    let r = rng.gen_range(1..=(m - 1).min(2));
    let n = m + r + 2;
    let a_prime = spread_sym(rng, m);
    let eig = sym_eig(&SymMatrix::symmetrized(&a_prime)).unwrap();
    let w = eig.vector(rng.gen_range(0..m));
    let projector = Matrix::from_fn(m, m, |i, j| if i == j { 1.0 } else { 0.0 } - w[i] * w[j]);
    let a_dblprime = loop {
        let candidate = &gaussian_matrix(rng, r, m) * &projector;
        if well_conditioned_rows(&candidate, r) {
            break candidate;
        }
    };
    RandomData {
        n,
        a_prime,
        a_dblprime,
        lattice: conditioned(rng, m, cond),
    }
}

/// Gram oracle: `A = ιᵀι`, `B = ιᵀa′ι`, `C = ιᵀ(a′² + a″ᵀa″)ι`.
pub fn gram_oracle(d: &RandomData) -> MatrixParabola {
    let iota = &d.lattice;
    let it = iota.transpose();
    let sq = (&d.a_prime * &d.a_prime).add(&(&d.a_dblprime.transpose() * &d.a_dblprime));
    MatrixParabola::new(
        SymMatrix::symmetrized(&(&it * iota)),
        SymMatrix::symmetrized(&(&(&it * &d.a_prime) * iota)),
        SymMatrix::symmetrized(&(&(&it * &sq) * iota)),
    )
    .unwrap()
}

pub fn random_parabola(rng: &mut ChaCha8Rng, max_m: usize, cond: f64) -> (MatrixParabola, usize) {
    let d = random_data(rng, max_m, cond);
    (char_polynomial(&d.build()), d.n)
}

/// Random real matrix with singular values in `[0.5, 2]`.
pub fn random_invertible(rng: &mut ChaCha8Rng, m: usize) -> Matrix {
    conditioned(rng, m, 4.0).scale(0.5)
}

/// Random unimodular integer matrix as a product of elementary shears and
/// sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, m: usize) -> Matrix {
    let mut x = Matrix::identity(m);
    for _ in 0..3 {
        let mut e = Matrix::identity(m);
        if m > 1 {
            let i = rng.gen_range(0..m);
            let j = (i + rng.gen_range(1..m)) % m;
            e[(i, j)] = rng.gen_range(-2..=2) as f64;
        }
        let flip = rng.gen_range(0..m);
        if rng.gen_bool(0.5) {
            e[(flip, flip)] = -1.0;
        }
        x = &x * &e;
    }
    x
}
