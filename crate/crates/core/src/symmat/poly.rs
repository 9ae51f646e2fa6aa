use crate::charpoly::MatrixParabola;
use crate::error::{Error, Result};

/// Coefficient pruning inside Sturm remainders, relative to the (normalized)
/// dividend.
const STURM_PRUNE: f64 = 1e-12;
/// Trimming applied to interpolated determinant coefficients.
const DET_POLY_TRIM: f64 = 1e-10;
const MAX_BISECTIONS: usize = 4000;

/// Real polynomial, coefficients in ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPoly {
    coeffs: Vec<f64>,
}

impl ScalarPoly {
    /// Strips exactly-zero trailing coefficients.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let mut p = Self { coeffs };
        p.strip();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn strip(&mut self) {
        while self.coeffs.last() == Some(&0.0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| i as f64 * c)
                .collect(),
        )
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Zeroes every coefficient with `|c| <= rel * reference` and strips the
    /// resulting trailing zeros.
    pub fn pruned(&self, rel: f64, reference: f64) -> Self {
        let cut = rel * reference;
        Self::new(
            self.coeffs
                .iter()
                .map(|&c| if c.abs() <= cut { 0.0 } else { c })
                .collect(),
        )
    }

    /// Trimmed at `rel·max|coeff|`.
    pub fn trimmed(&self, rel: f64) -> Self {
        self.pruned(rel, self.max_abs())
    }

    /// Divides by `max|coeff|` (a positive factor, so signs are kept).
    fn normalized(&self) -> Self {
        let m = self.max_abs();
        if m == 0.0 {
            self.clone()
        } else {
            self.scaled(1.0 / m)
        }
    }

    /// Euclidean division `self = q·d + r`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let lead = d.leading();
        let mut quot = vec![0.0; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let f = rem[k + dd] / lead;
            quot[k] = f;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= f * dc;
            }
            rem[k + dd] = 0.0;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    fn sign_at_pos_inf(&self) -> f64 {
        self.leading().signum()
    }

    fn sign_at_neg_inf(&self) -> f64 {
        match self.degree() {
            Some(d) if d % 2 == 1 => -self.leading().signum(),
            _ => self.leading().signum(),
        }
    }

    /// Cauchy bound: every real root lies in `(-b, b)`.
    fn root_bound(&self) -> f64 {
        let lead = self.leading().abs();
        let n = self.coeffs.len() - 1;
        1.0 + self.coeffs[..n]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs() / lead))
    }
}

/// Sturm sequence `p, p', -rem(p, p'), …` with every element normalized to
/// unit max-coefficient and remainders pruned at `1e-12` relative to their
/// dividend. The last element is (numerically) `gcd(p, p')`.
pub fn sturm_chain(p: &ScalarPoly) -> Result<Vec<ScalarPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.normalized()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d.normalized());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        let r = r.pruned(STURM_PRUNE, chain[n - 2].max_abs());
        if r.is_zero() {
            break;
        }
        chain.push(r.scaled(-1.0).normalized());
    }
    Ok(chain)
}

fn variations(signs: impl Iterator<Item = f64>) -> usize {
    let mut count = 0;
    let mut last = 0.0;
    for s in signs.filter(|s| *s != 0.0) {
        if last != 0.0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[ScalarPoly], x: f64) -> usize {
    variations(chain.iter().map(|q| q.eval(x).signum()))
}

/// Number of distinct real roots, via a Sturm sequence.
pub fn real_root_count(p: &ScalarPoly) -> Result<usize> {
    let chain = sturm_chain(p)?;
    let at_neg = variations(chain.iter().map(ScalarPoly::sign_at_neg_inf));
    let at_pos = variations(chain.iter().map(ScalarPoly::sign_at_pos_inf));
    Ok(at_neg.saturating_sub(at_pos))
}

/// Isolates every distinct real root to an interval narrower than `width`
/// and returns the midpoints, ascending.
///
/// Bisection runs on the square-free part `p / gcd(p, p')`, whose roots are
/// simple, so sign evaluations near a multiple root of `p` stay reliable.
pub fn real_roots(p: &ScalarPoly, width: f64) -> Result<Vec<f64>> {
    let chain = sturm_chain(p)?;
    let gcd = chain.last().unwrap();
    let squarefree = if gcd.degree().unwrap_or(0) > 0 {
        chain[0].div_rem(gcd).0
    } else {
        chain[0].clone()
    };
    if squarefree.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let chain = sturm_chain(&squarefree)?;
    let bound = squarefree.root_bound();
    let count = |a: f64, b: f64| variations_at(&chain, a).saturating_sub(variations_at(&chain, b));

    let mut roots = Vec::new();
    let mut stack = vec![(-bound, bound)];
    let mut steps = 0;
    while let Some((a, b)) = stack.pop() {
        let n = count(a, b);
        if n == 0 {
            continue;
        }
        let mid = 0.5 * (a + b);
        steps += 1;
        if (n == 1 && b - a < width) || mid <= a || mid >= b || steps > MAX_BISECTIONS {
            roots.push(mid);
            continue;
        }
        stack.push((mid, b));
        stack.push((a, mid));
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Coefficients of `det(A + 2sB + s²C)`, interpolated from determinants at
/// the `2m + 1` integer nodes `-m, …, m` with Newton divided differences.
pub fn det_poly(parabola: &MatrixParabola) -> Result<ScalarPoly> {
    let m = parabola.dim();
    let (b, c) = (parabola.b(), parabola.c());
    if b.dim() != m || c.dim() != m {
        return Err(Error::dims("parabola coefficients differ in size"));
    }
    let nodes: Vec<f64> = (0..=2 * m).map(|i| i as f64 - m as f64).collect();
    let mut dd: Vec<f64> = nodes
        .iter()
        .map(|&s| parabola.at(s).to_matrix().det())
        .collect();
    let n = nodes.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
        }
    }
    // Horner in the Newton basis: p = dd0 + (s-x0)(dd1 + (s-x1)(dd2 + …)).
    let mut coeffs = vec![dd[n - 1]];
    for k in (0..n - 1).rev() {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (j, &c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= nodes[k] * c;
        }
        next[0] += dd[k];
        coeffs = next;
    }
    Ok(ScalarPoly::new(coeffs).trimmed(DET_POLY_TRIM))
}
