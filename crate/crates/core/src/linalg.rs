//! Thin layer over nalgebra: Hermitian eigenvalues, unitarity checks, and the
//! Pfaffian sign needed by the even orthogonal chamber.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// Eigenvalues of a Hermitian matrix, sorted in decreasing order.
///
/// The input is symmetrised first so that eigensolver input is exactly
/// Hermitian; a diagnostic residual is checked afterwards.
pub fn hermitian_eigenvalues_desc(m: &CMatrix) -> Result<Vec<f64>> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::ShapeMismatch("matrix is not square".into()));
    }
    let herm = (m + m.adjoint()).scale(0.5);
    let eig = herm.clone().symmetric_eigen();
    // Residual ||Hv - lambda v|| over the reconstructed matrix.
    let recon = &eig.eigenvectors
        * DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x, 0.0)))
        * eig.eigenvectors.adjoint();
    let scale = herm.norm().max(1.0);
    let residual = (&recon - &herm).norm() / scale;
    if !residual.is_finite() || residual > 1e-9 {
        return Err(Error::EigenFailure { residual });
    }
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(vals)
}

/// Max-norm distance from unitarity, ||U U* - I||_max.
pub fn unitarity_defect(u: &CMatrix) -> f64 {
    let n = u.nrows();
    let prod = u * u.adjoint();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((prod[(i, j)] - target).norm());
        }
    }
    worst
}

/// Max-norm Hermiticity defect, ||M - M*||_max.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Pfaffian of a real antisymmetric matrix of even order, by expansion along
/// the first remaining row. Exponential in n, fine for the small orders used
/// by the even chamber (sign only is needed there).
pub fn pfaffian(x: &DMatrix<f64>) -> f64 {
    let n = x.nrows();
    assert_eq!(n, x.ncols());
    if n % 2 != 0 {
        return 0.0;
    }
    let idx: Vec<usize> = (0..n).collect();
    pf_rec(x, &idx)
}

fn pf_rec(x: &DMatrix<f64>, idx: &[usize]) -> f64 {
    let m = idx.len();
    if m == 0 {
        return 1.0;
    }
    let i0 = idx[0];
    let mut total = 0.0;
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let a = x[(i0, j)];
        if a == 0.0 {
            continue;
        }
        let rest: Vec<usize> =
            idx.iter().enumerate().filter(|&(p, _)| p != 0 && p != pos).map(|(_, &v)| v).collect();
        let sign = if pos % 2 == 1 { 1.0 } else { -1.0 };
        total += sign * a * pf_rec(x, &rest);
    }
    total
}

/// Real determinant via LU, used by small indicator matrices.
pub fn det_real(m: &DMatrix<f64>) -> f64 {
    m.clone().lu().determinant()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(-2.0, 0.0),
        ]));
        let vals = hermitian_eigenvalues_desc(&m).unwrap();
        assert_eq!(vals, vec![3.0, 1.0, -2.0]);
    }

    #[test]
    fn pfaffian_block_diagonal() {
        // Two blocks [[0, a], [-a, 0]]: pf = a1 * a2.
        let mut x = DMatrix::<f64>::zeros(4, 4);
        x[(0, 1)] = 2.0;
        x[(1, 0)] = -2.0;
        x[(2, 3)] = -1.5;
        x[(3, 2)] = 1.5;
        assert!((pfaffian(&x) - (2.0 * -1.5)).abs() < 1e-12);
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let mut x = DMatrix::<f64>::zeros(4, 4);
        let entries = [(0, 1, 0.7), (0, 2, -1.2), (0, 3, 0.4), (1, 2, 2.1), (1, 3, -0.3), (2, 3, 1.9)];
        for &(i, j, v) in &entries {
            x[(i, j)] = v;
            x[(j, i)] = -v;
        }
        let pf = pfaffian(&x);
        let det = det_real(&x);
        assert!((pf * pf - det).abs() < 1e-9, "pf^2={} det={}", pf * pf, det);
    }
}
