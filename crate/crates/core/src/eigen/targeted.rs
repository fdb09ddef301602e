//! Eigenpairs near a shift, without a dense factorization.

use faer::{Mat, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::band::BandLu;
use super::{backward_error, dot, normalize, EigenPair};
use crate::error::{Error, Result};
use crate::operator::HermitianMatrix;
use crate::Complex64;

const MAX_ITERATIONS: usize = 300;
const CONVERGED: f64 = 1e-13;
const ACCEPTABLE: f64 = 1e-10;
const STALL_LIMIT: usize = 5;
const SEED: u64 = 0x5eed_0f4f;

/// Number of eigenvalues of a tridiagonal Hermitian `M` below `x`
/// (LDLᴴ inertia count).
pub fn sturm_count(m: &HermitianMatrix, x: f64) -> Result<usize> {
    if m.bandwidth() > 1 || !m.corners().is_empty() {
        return Err(Error::Unsupported("Sturm count needs a tridiagonal matrix"));
    }
    let n = m.dim();
    let a = m.diagonal();
    let mut count = 0;
    let mut d = a[0] - x;
    for i in 0..n {
        if i > 0 {
            let b = m.get(i, i - 1).norm_sqr();
            d = a[i] - x - b / d;
        }
        if d == 0.0 {
            d = -f64::EPSILON * (a[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
        }
        if d < 0.0 {
            count += 1;
        }
    }
    Ok(count)
}

/// The `k`-th lowest eigenvalue (0-based) of a tridiagonal Hermitian matrix.
pub fn eigenvalue_by_bisection(m: &HermitianMatrix, k: usize) -> Result<f64> {
    if k >= m.dim() {
        return Err(Error::Precondition(format!("index {k} beyond dimension {}", m.dim())));
    }
    // Gershgorin bounds
    let n = m.dim();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += m.get(i, i - 1).norm();
        }
        if i + 1 < n {
            r += m.get(i + 1, i).norm();
        }
        lo = lo.min(m.diagonal()[i] - r);
        hi = hi.max(m.diagonal()[i] + r);
    }
    for _ in 0..400 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(m, mid)? > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The `count` eigenpairs of `M` closest to `shift`, by shift-invert block
/// subspace iteration with Rayleigh–Ritz (plain inverse iteration for `count = 1`). `start` vectors, if given, seed the
/// block; the rest is filled deterministically at random.
///
/// Returned pairs are ordered by distance from the shift and carry
/// `mode = -1`; callers attach labels.
pub fn nearest_eigenpairs(
    m: &HermitianMatrix,
    shift: f64,
    count: usize,
    start: &[Vec<Complex64>],
) -> Result<Vec<EigenPair>> {
    let n = m.dim();
    // Guard vectors speed up separation of clustered levels. A single level
    // is found by plain inverse iteration: mixing guard vectors back in through
    // Rayleigh–Ritz pollutes the small components of strongly graded problems.
    let block = if count == 1 { 1 } else { (count + 2).min(n) };
    if count == 0 || count > block {
        return Err(Error::Precondition(format!("cannot extract {count} pairs from dimension {n}")));
    }
    let lu = BandLu::new(m, shift)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut basis: Vec<Vec<Complex64>> = start.iter().take(block).cloned().collect();
    while basis.len() < block {
        basis.push(
            (0..n)
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect(),
        );
    }
    orthonormalize(&mut basis);

    let mut best: Option<(f64, Vec<EigenPair>)> = None;
    let mut extra = 0;
    let mut stalled = 0;
    for _ in 0..MAX_ITERATIONS {
        basis = basis.iter().map(|v| lu.solve(v)).collect();
        orthonormalize(&mut basis);
        let ritz = rayleigh_ritz(m, &basis)?;
        let mut order: Vec<usize> = (0..ritz.len()).collect();
        order.sort_by(|&a, &b| {
            (ritz[a].energy - shift)
                .abs()
                .total_cmp(&(ritz[b].energy - shift).abs())
        });
        basis = order.iter().map(|&i| ritz[i].vector.clone()).collect();
        let wanted: Vec<EigenPair> = order[..count].iter().map(|&i| ritz[i].clone()).collect();
        let err = wanted
            .iter()
            .map(|p| backward_error(m, p.energy, &p.vector))
            .fold(0.0, f64::max);
        match &best {
            Some((e, _)) if err > 0.5 * *e => stalled += 1,
            _ => stalled = 0,
        }
        if best.as_ref().is_none_or(|(e, _)| err <= *e) {
            best = Some((err, wanted));
        }
        if err <= CONVERGED {
            extra += 1;
            if extra > 2 {
                break;
            }
        }
        // rounding floor reached
        if stalled >= STALL_LIMIT && best.as_ref().is_some_and(|(e, _)| *e <= ACCEPTABLE) {
            break;
        }
    }
    match best {
        Some((err, pairs)) if err <= ACCEPTABLE => Ok(pairs),
        _ => Err(Error::NonConvergence(MAX_ITERATIONS)),
    }
}

fn orthonormalize(basis: &mut [Vec<Complex64>]) {
    for i in 0..basis.len() {
        for _ in 0..2 {
            for j in 0..i {
                let (head, tail) = basis.split_at_mut(i);
                let c = dot(&head[j], &tail[0]);
                for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                    *x -= y * c;
                }
            }
        }
        normalize(&mut basis[i]);
    }
}

fn rayleigh_ritz(m: &HermitianMatrix, basis: &[Vec<Complex64>]) -> Result<Vec<EigenPair>> {
    let b = basis.len();
    let mut h = Mat::<Complex64>::zeros(b, b);
    for i in 0..b {
        h[(i, i)] = Complex64::new(m.quadratic_form(&basis[i]), 0.0);
        for j in 0..i {
            let v = m.sesquilinear(&basis[i], &basis[j]);
            h[(i, j)] = v;
            h[(j, i)] = v.conj();
        }
    }
    let evd = h
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::DenseSolver(format!("{e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let n = m.dim();
    Ok((0..b)
        .map(|k| {
            let mut v = vec![Complex64::new(0.0, 0.0); n];
            for (i, bi) in basis.iter().enumerate() {
                let c = u[(i, k)];
                for (x, y) in v.iter_mut().zip(bi) {
                    *x += y * c;
                }
            }
            normalize(&mut v);
            EigenPair { mode: -1, energy: s[k].re, vector: v, lambda: None }
        })
        .collect())
}
