//! Dense complex linear algebra helpers on top of nalgebra: Hermitian
//! eigendecomposition, general eigenvalues (Schur), least squares, null
//! vectors, equality-constrained real least squares and the scaling-and-
//! squaring matrix exponential.

use crate::{C64, CMatrix, CVector};
use nalgebra::{DMatrix, DVector};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum LinalgError {
    #[error("eigenvalue iteration failed to converge")]
    EigenNotConverged,
    #[error("singular system in {0}")]
    Singular(&'static str),
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
///
/// Columns of the returned matrix are orthonormal eigenvectors in the same
/// order as the eigenvalues.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let se = m.clone().symmetric_eigen();
    let n = se.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].partial_cmp(&se.eigenvalues[j]).unwrap());
    let vals: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vecs = CMatrix::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vecs.set_column(col, &se.eigenvectors.column(i));
    }
    (vals, vecs)
}

/// Eigenvalues of a general complex matrix via Schur decomposition.
pub fn eigenvalues(m: &CMatrix) -> Result<Vec<C64>, LinalgError> {
    if m.nrows() == 0 {
        return Ok(Vec::new());
    }
    if m.nrows() == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let schur = m.clone().try_schur(1e-14, 1_000_000).ok_or(LinalgError::EigenNotConverged)?;
    let vals = schur.eigenvalues().ok_or(LinalgError::EigenNotConverged)?;
    Ok(vals.iter().copied().collect())
}

/// Minimum-norm least-squares solution of `A x = b` via SVD.
pub fn lstsq(a: &CMatrix, b: &CVector, rcond: f64) -> Result<CVector, LinalgError> {
    let svd = a.clone().svd(true, true);
    let cutoff = svd.singular_values.max() * rcond;
    svd.solve(&b.clone(), cutoff).map_err(|_| LinalgError::Singular("lstsq"))
}

/// Right singular vector for the smallest singular value of `A`.
pub fn smallest_singular_vector(a: &CMatrix) -> CVector {
    let svd = a.clone().svd(false, true);
    let vt = svd.v_t.as_ref().expect("svd requested v_t");
    let k = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    vt.row(k).adjoint()
}

/// Numerical rank at relative threshold `rcond`.
pub fn rank(a: &CMatrix, rcond: f64) -> usize {
    let sv = a.clone().singular_values();
    let cutoff = sv.max() * rcond;
    sv.iter().filter(|&&s| s > cutoff).count()
}

/// Least squares with linear equality constraints, all real:
/// minimize ‖A x − b‖₂ subject to C x = d, via the null-space method.
pub fn constrained_lstsq(
    a: &DMatrix<f64>,
    b: &DVector<f64>,
    c: &DMatrix<f64>,
    d: &DVector<f64>,
) -> Result<DVector<f64>, LinalgError> {
    let n = a.ncols();
    assert_eq!(c.ncols(), n);
    let svd = c.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let cutoff = smax * 1e-13;
    let r = svd.singular_values.iter().filter(|&&s| s > cutoff).count();
    if r == 0 {
        return Err(LinalgError::Singular("constrained_lstsq: zero constraint matrix"));
    }
    // particular solution x0 = pinv(C) d
    let x0 = svd.solve(d, cutoff).map_err(|_| LinalgError::Singular("constrained_lstsq"))?;
    if r >= n {
        return Ok(x0);
    }
    // null-space basis: rows r.. of V^T
    let vt = svd.v_t.as_ref().unwrap();
    let null_basis = vt.rows(r, n - r).transpose(); // n x (n-r)
    let rhs = b - a * &x0;
    let an = a * &null_basis;
    let z = an
        .svd(true, true)
        .solve(&rhs, 1e-13)
        .map_err(|_| LinalgError::Singular("constrained_lstsq inner"))?;
    Ok(x0 + null_basis * z)
}

/// Matrix exponential by Padé(13) with scaling and squaring (Higham 2005).
pub fn expm(a: &CMatrix) -> CMatrix {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    if n == 0 {
        return a.clone();
    }

    let norm = one_norm(a);
    const THETA13: f64 = 5.371_920_351_148_152;
    let s = if norm > THETA13 { (norm / THETA13).log2().ceil().max(0.0) as u32 } else { 0 };
    let a_scaled = a * C64::new(0.5_f64.powi(s as i32), 0.0);

    const B: [f64; 14] = [
        64_764_752_532_480_000.0,
        32_382_376_266_240_000.0,
        7_771_770_303_897_600.0,
        1_187_353_796_428_800.0,
        129_060_195_264_000.0,
        10_559_470_521_600.0,
        670_442_572_800.0,
        33_522_128_640.0,
        1_323_241_920.0,
        40_840_800.0,
        960_960.0,
        16_380.0,
        182.0,
        1.0,
    ];
    let b = |k: usize| C64::new(B[k], 0.0);

    let id = CMatrix::identity(n, n);
    let a2 = &a_scaled * &a_scaled;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &a6 * (&a6 * b(13) + &a4 * b(11) + &a2 * b(9))
        + &a6 * b(7)
        + &a4 * b(5)
        + &a2 * b(3)
        + &id * b(1);
    let u = &a_scaled * u_inner;
    let v = &a6 * (&a6 * b(12) + &a4 * b(10) + &a2 * b(8))
        + &a6 * b(6)
        + &a4 * b(4)
        + &a2 * b(2)
        + &id * b(0);

    let num = &v + &u;
    let den = &v - &u;
    let mut r = den.lu().solve(&num).expect("expm: Padé denominator singular");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

fn one_norm(a: &CMatrix) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|x| x.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Column-stacking vectorization: `vec(ρ)[i + d*j] = ρ[i][j]`.
pub fn vectorize(rho: &CMatrix) -> CVector {
    let d = rho.nrows();
    CVector::from_fn(d * d, |k, _| rho[(k % d, k / d)])
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &CVector, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |i, j| v[i + d * j])
}
