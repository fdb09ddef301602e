use faer::{Mat, Side};

use super::EigenPair;
use crate::error::{Error, Result};
use crate::operator::HermitianMatrix;
use crate::Complex64;

/// All eigenpairs of `M`, energies ascending, `mode` = ascending index.
///
/// Each energy is the link-form Rayleigh quotient of its eigenvector
/// ([`HermitianMatrix::quadratic_form`]). The decomposition itself is only
/// accurate to `~u‖M‖` absolute; the quotient is second order in the vector
/// error and free of the cancellation between large stencil entries, so low
/// levels of Laplacian-like matrices come out to `~u` relative.
pub fn eigh(m: &HermitianMatrix) -> Result<Vec<EigenPair>> {
    let n = m.dim();
    let mut a = Mat::<Complex64>::zeros(n, n);
    for i in 0..n {
        a[(i, i)] = Complex64::new(m.diagonal()[i], 0.0);
    }
    for (r, c, v) in m.lower_entries() {
        a[(r, c)] = v;
        a[(c, r)] = v.conj();
    }
    let evd = a
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::DenseSolver(format!("{e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let mut pairs: Vec<EigenPair> = (0..n)
        .map(|k| {
            let vector: Vec<Complex64> = (0..n).map(|i| u[(i, k)]).collect();
            let refined = m.quadratic_form(&vector);
            EigenPair {
                mode: 0,
                energy: if refined.is_finite() { refined } else { s[k].re },
                vector,
                lambda: None,
            }
        })
        .collect();
    pairs.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    for (k, p) in pairs.iter_mut().enumerate() {
        p.mode = k as i64;
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let mut m = HermitianMatrix::zeros(2);
        m.set_diag(0, 1.0);
        m.set_diag(1, 2.0);
        let p = eigh(&m).unwrap();
        assert_eq!(p.len(), 2);
        assert!((p[0].energy - 1.0).abs() < 1e-15);
        assert!((p[1].energy - 2.0).abs() < 1e-15);
        assert!((p[0].vector[0].norm() - 1.0).abs() < 1e-15);
        assert!(p[0].vector[1].norm() < 1e-15);
        assert!((p[1].vector[1].norm() - 1.0).abs() < 1e-15);
    }
}
