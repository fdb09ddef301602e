//! Banded LU with partial pivoting for `M − σI`.

use crate::error::{Error, Result};
use crate::operator::HermitianMatrix;
use crate::Complex64;

/// Ordering `[0, N−1, 1, N−2, …]`, which folds a cyclic nearest-neighbour
/// matrix into bandwidth 2.
pub fn interleave_permutation(n: usize) -> Vec<usize> {
    let mut perm = Vec::with_capacity(n);
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        perm.push(lo);
        lo += 1;
        if lo < hi {
            hi -= 1;
            perm.push(hi);
        }
    }
    perm
}

/// `P (M − σI) Pᵀ = L U` in band storage, with `perm[new] = old`.
#[derive(Debug, Clone)]
pub struct BandLu {
    n: usize,
    p: usize,
    width: usize,
    data: Vec<Complex64>,
    pivots: Vec<usize>,
    perm: Vec<usize>,
}

impl BandLu {
    /// Factor `M − σI`. Matrices with wrap corners are reordered first.
    pub fn new(m: &HermitianMatrix, shift: f64) -> Result<Self> {
        let n = m.dim();
        let perm = if m.corners().is_empty() {
            (0..n).collect()
        } else {
            interleave_permutation(n)
        };
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut p = 0;
        for (r, c, _) in m.lower_entries() {
            p = p.max(inv[r].abs_diff(inv[c]));
        }
        // L has p sub-diagonals, U up to 2p super-diagonals after pivoting
        let width = 3 * p + 1;
        let mut lu = Self {
            n,
            p,
            width,
            data: vec![Complex64::new(0.0, 0.0); n * width],
            pivots: vec![0; n],
            perm,
        };
        for i in 0..n {
            let k = inv[i];
            *lu.at(k, k) = Complex64::new(m.diagonal()[i] - shift, 0.0);
        }
        for (r, c, v) in m.lower_entries() {
            let (a, b) = (inv[r], inv[c]);
            *lu.at(a, b) += v;
            *lu.at(b, a) += v.conj();
        }
        let scale = m.max_abs().max(shift.abs()).max(f64::MIN_POSITIVE);
        lu.factor(scale)?;
        Ok(lu)
    }

    fn at(&mut self, row: usize, col: usize) -> &mut Complex64 {
        &mut self.data[row * self.width + (col + self.p - row)]
    }

    fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.width + (col + self.p - row)]
    }

    fn factor(&mut self, scale: f64) -> Result<()> {
        let (n, p) = (self.n, self.p);
        for k in 0..n {
            let last = (k + p).min(n - 1);
            let right = (k + 2 * p).min(n - 1);
            let mut piv = k;
            let mut best = self.get(k, k).norm();
            for r in k + 1..=last {
                let v = self.get(r, k).norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            self.pivots[k] = piv;
            if piv != k {
                for c in k..=right {
                    let a = self.get(k, c);
                    let b = self.get(piv, c);
                    *self.at(k, c) = b;
                    *self.at(piv, c) = a;
                }
            }
            if best == 0.0 {
                // exact shift onto an eigenvalue: perturb at rounding level
                *self.at(k, k) = Complex64::new(f64::EPSILON * scale, 0.0);
            } else if !best.is_finite() {
                return Err(Error::NonConvergence(k));
            }
            let pivot = self.get(k, k);
            for i in k + 1..=last {
                let l = self.get(i, k) / pivot;
                *self.at(i, k) = l;
                if l != Complex64::new(0.0, 0.0) {
                    for c in k + 1..=right {
                        let u = self.get(k, c);
                        *self.at(i, c) -= l * u;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Half-bandwidth after reordering.
    pub fn bandwidth(&self) -> usize {
        self.p
    }

    /// Solve `(M − σI) x = b`.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let (n, p) = (self.n, self.p);
        assert_eq!(b.len(), n);
        let mut y: Vec<Complex64> = self.perm.iter().map(|&old| b[old]).collect();
        for k in 0..n {
            y.swap(k, self.pivots[k]);
            let yk = y[k];
            for i in k + 1..=(k + p).min(n - 1) {
                y[i] -= self.get(i, k) * yk;
            }
        }
        for k in (0..n).rev() {
            let mut s = y[k];
            for c in k + 1..=(k + 2 * p).min(n - 1) {
                s -= self.get(k, c) * y[c];
            }
            y[k] = s / self.get(k, k);
        }
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for (new, &old) in self.perm.iter().enumerate() {
            x[old] = y[new];
        }
        x
    }
}
