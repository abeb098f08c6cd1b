//! Quaternions as 2x2 complex blocks ((a, b), (-conj b, conj a)), and the
//! embedding of quaternionic matrices into complex ones.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub a: Complex64,
    pub b: Complex64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { a: Complex64::new(0.0, 0.0), b: Complex64::new(0.0, 0.0) };

    pub fn new(a: Complex64, b: Complex64) -> Self {
        Quaternion { a, b }
    }

    pub fn from_real(x: f64) -> Self {
        Quaternion::new(Complex64::new(x, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Conjugate, i.e. the adjoint of the 2x2 complex block.
    pub fn conj(self) -> Self {
        Quaternion::new(self.a.conj(), -self.b)
    }

    pub fn norm_sqr(self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn scale(self, t: f64) -> Self {
        Quaternion::new(self.a * t, self.b * t)
    }
}

impl std::ops::Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl std::ops::Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Self) -> Self {
        // Block product of ((a,b),(-b*,a*)) matrices.
        Quaternion::new(
            self.a * rhs.a - self.b * rhs.b.conj(),
            self.a * rhs.b + self.b * rhs.a.conj(),
        )
    }
}

/// Embed an n x m quaternionic matrix as a 2n x 2m complex matrix.
pub fn embed(q: &[Vec<Quaternion>]) -> CMatrix {
    let n = q.len();
    let m = if n == 0 { 0 } else { q[0].len() };
    let mut out = DMatrix::zeros(2 * n, 2 * m);
    for i in 0..n {
        for j in 0..m {
            let e = q[i][j];
            out[(2 * i, 2 * j)] = e.a;
            out[(2 * i, 2 * j + 1)] = e.b;
            out[(2 * i + 1, 2 * j)] = -e.b.conj();
            out[(2 * i + 1, 2 * j + 1)] = e.a.conj();
        }
    }
    out
}

/// Largest deviation of a complex matrix from the quaternionic block form.
pub fn structure_defect(m: &CMatrix) -> f64 {
    let n = m.nrows() / 2;
    let k = m.ncols() / 2;
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..k {
            let a = m[(2 * i, 2 * j)];
            let b = m[(2 * i, 2 * j + 1)];
            worst = worst.max((m[(2 * i + 1, 2 * j)] + b.conj()).norm());
            worst = worst.max((m[(2 * i + 1, 2 * j + 1)] - a.conj()).norm());
        }
    }
    worst
}
