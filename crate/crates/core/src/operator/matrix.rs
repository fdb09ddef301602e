use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported half-bandwidth of the banded part.
pub const MAX_BANDWIDTH: usize = 2;

/// Banded Hermitian matrix with optional far-off-diagonal "corner" couplings.
///
/// Only the diagonal (real) and the strictly lower entries are stored; every
/// upper entry is the conjugate of its mirror, so `M = M†` holds exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    diag: Vec<f64>,
    /// `bands[k - 1][j] = M[j + k][j]`.
    bands: Vec<Vec<Complex64>>,
    /// `(row, col, M[row][col])` with `row > col + MAX_BANDWIDTH`.
    corners: Vec<(usize, usize, Complex64)>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            diag: vec![0.0; n],
            bands: (1..=MAX_BANDWIDTH)
                .map(|k| vec![Complex64::new(0.0, 0.0); n.saturating_sub(k)])
                .collect(),
            corners: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diag
    }

    pub fn corners(&self) -> &[(usize, usize, Complex64)] {
        &self.corners
    }

    /// Half-bandwidth of the banded part (corners not counted).
    pub fn bandwidth(&self) -> usize {
        (1..=MAX_BANDWIDTH)
            .rev()
            .find(|&k| self.bands[k - 1].iter().any(|z| *z != Complex64::new(0.0, 0.0)))
            .unwrap_or(0)
    }

    pub fn set_diag(&mut self, i: usize, value: f64) {
        self.diag[i] = value;
    }

    /// Sets `M[row][col] = value` and, implicitly, `M[col][row] = conj(value)`.
    pub fn set_lower(&mut self, row: usize, col: usize, value: Complex64) {
        assert!(row > col && row < self.dim(), "set_lower needs row > col");
        let k = row - col;
        if k <= MAX_BANDWIDTH {
            self.bands[k - 1][col] = value;
        } else if let Some(c) = self.corners.iter_mut().find(|c| c.0 == row && c.1 == col) {
            c.2 = value;
        } else {
            self.corners.push((row, col, value));
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Complex64::new(self.diag[i], 0.0),
            Greater => self.lower(i, j),
            Less => self.lower(j, i).conj(),
        }
    }

    fn lower(&self, row: usize, col: usize) -> Complex64 {
        let k = row - col;
        if k <= MAX_BANDWIDTH {
            self.bands[k - 1][col]
        } else {
            self.corners
                .iter()
                .find(|c| c.0 == row && c.1 == col)
                .map_or(Complex64::new(0.0, 0.0), |c| c.2)
        }
    }

    /// Nonzero strictly-lower entries `(row, col, value)`.
    pub fn lower_entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        let banded = self.bands.iter().enumerate().flat_map(|(b, band)| {
            band.iter()
                .enumerate()
                .map(move |(col, &v)| (col + b + 1, col, v))
        });
        banded
            .chain(self.corners.iter().copied())
            .filter(|e| e.2 != Complex64::new(0.0, 0.0))
    }

    /// `M·x`.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim());
        let mut y: Vec<Complex64> = self.diag.iter().zip(x).map(|(d, v)| v * *d).collect();
        for (row, col, v) in self.lower_entries() {
            y[row] += v * x[col];
            y[col] += v.conj() * x[row];
        }
        y
    }

    /// `|M|·|x|`, used for componentwise backward errors.
    pub fn apply_abs(&self, x: &[Complex64]) -> Vec<f64> {
        let mut y: Vec<f64> = self.diag.iter().zip(x).map(|(d, v)| d.abs() * v.norm()).collect();
        for (row, col, v) in self.lower_entries() {
            y[row] += v.norm() * x[col].norm();
            y[col] += v.norm() * x[row].norm();
        }
        y
    }

    /// `xᴴ M y`, evaluated in link (graph-Laplacian) form
    ///
    /// `Σ_i d'_i x̄_i y_i + Σ_{links} |M_ij| conj(x_i − u_ij x_j)(y_i − u_ij y_j)`,
    /// `u_ij = −M_ij/|M_ij|`, `d'_i = M_ii − Σ_j |M_ij|`.
    ///
    /// For Laplacian-like matrices, this avoids cancelling the `O(1/h²)` entries
    /// against each other.
    pub fn sesquilinear(&self, x: &[Complex64], y: &[Complex64]) -> Complex64 {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let mut residual_diag = self.diag.clone();
        let mut links = Complex64::new(0.0, 0.0);
        for (i, j, v) in self.lower_entries() {
            let a = v.norm();
            let u = -v / a;
            residual_diag[i] -= a;
            residual_diag[j] -= a;
            links += (x[i] - u * x[j]).conj() * (y[i] - u * y[j]) * a;
        }
        let onsite: Complex64 = residual_diag
            .iter()
            .zip(x.iter().zip(y))
            .map(|(d, (a, b))| a.conj() * b * *d)
            .sum();
        onsite + links
    }

    /// `xᴴ M x`, real by Hermiticity.
    pub fn quadratic_form(&self, x: &[Complex64]) -> f64 {
        self.sesquilinear(x, x).re
    }

    /// `self + alpha·other`.
    pub fn scaled_add(&self, alpha: f64, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let mut out = self.clone();
        for (d, o) in out.diag.iter_mut().zip(&other.diag) {
            *d += alpha * o;
        }
        for (band, ob) in out.bands.iter_mut().zip(&other.bands) {
            for (z, o) in band.iter_mut().zip(ob) {
                *z += o * alpha;
            }
        }
        for &(r, c, v) in &other.corners {
            let cur = out.lower(r, c);
            out.set_lower(r, c, cur + v * alpha);
        }
        Ok(out)
    }

    pub fn scale(&self, alpha: f64) -> Self {
        Self::zeros(self.dim())
            .scaled_add(alpha, self)
            .expect("same dimension")
    }

    pub fn max_abs(&self) -> f64 {
        self.diag
            .iter()
            .map(|d| d.abs())
            .chain(self.lower_entries().map(|e| e.2.norm()))
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.max_abs() == 0.0
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<Complex64>> {
        let n = self.dim();
        let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            m[i][i] = Complex64::new(self.diag[i], 0.0);
        }
        for (r, c, v) in self.lower_entries() {
            m[r][c] = v;
            m[c][r] = v.conj();
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sample() -> HermitianMatrix {
        let mut m = HermitianMatrix::zeros(9);
        for i in 0..9 {
            m.set_diag(i, 1.0 + i as f64);
        }
        for i in 1..9 {
            m.set_lower(i, i - 1, c(-0.5, 0.1 * i as f64));
        }
        m.set_lower(8, 0, c(0.3, -0.7));
        m.set_lower(4, 2, c(0.0, 2.0));
        m
    }

    #[test]
    fn dense_copy_is_exactly_hermitian() {
        let d = sample().to_dense();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(d[i][j], d[j][i].conj());
            }
        }
        assert_eq!(d[0][8], c(0.3, 0.7));
    }

    #[test]
    fn apply_matches_dense_product() {
        let m = sample();
        let d = m.to_dense();
        let x: Vec<Complex64> = (0..9).map(|k| c((k as f64).sin(), (k as f64 * 0.3).cos())).collect();
        let y = m.apply(&x);
        for i in 0..9 {
            let yi: Complex64 = (0..9).map(|j| d[i][j] * x[j]).sum();
            assert!((yi - y[i]).norm() < 1e-13);
        }
    }

    #[test]
    fn link_form_equals_plain_sesquilinear_form() {
        let m = sample();
        let x: Vec<Complex64> = (0..9).map(|k| c(k as f64 * 0.1, 1.0 - k as f64 * 0.05)).collect();
        let y: Vec<Complex64> = (0..9).map(|k| c((k as f64).cos(), -(k as f64).sin())).collect();
        let my = m.apply(&y);
        let plain: Complex64 = x.iter().zip(&my).map(|(a, b)| a.conj() * b).sum();
        assert!((plain - m.sesquilinear(&x, &y)).norm() < 1e-12);
    }

    #[test]
    fn bandwidth_ignores_corners() {
        let m = sample();
        assert_eq!(m.bandwidth(), 2);
        assert_eq!(m.corners().len(), 1);
        let mut t = HermitianMatrix::zeros(9);
        t.set_lower(1, 0, c(1.0, 0.0));
        assert_eq!(t.bandwidth(), 1);
    }

    #[test]
    fn scaled_add_merges_corner_patterns() {
        let a = sample();
        let mut b = HermitianMatrix::zeros(9);
        b.set_lower(7, 1, c(1.0, 1.0));
        b.set_lower(8, 0, c(1.0, 0.0));
        let s = a.scaled_add(2.0, &b).unwrap();
        assert_eq!(s.get(7, 1), c(2.0, 2.0));
        assert_eq!(s.get(8, 0), c(2.3, -0.7));
        assert!(a.scaled_add(1.0, &HermitianMatrix::zeros(3)).is_err());
        assert!(a.scaled_add(-1.0, &a).unwrap().is_zero());
    }
}
