//! Small dense linear algebra: Householder least squares and 3×3 matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("least-squares system is under-determined ({rows} rows, {cols} unknowns)")]
    Underdetermined { rows: usize, cols: usize },
    #[error("least-squares system is rank deficient (reciprocal condition estimate {rcond:e})")]
    RankDeficient { rcond: f64 },
    #[error("matrix data length {len} does not match {rows}x{cols}")]
    Shape { len: usize, rows: usize, cols: usize },
}

/// Solution of an overdetermined system `A x ≈ b`.
#[derive(Debug, Clone, PartialEq)]
pub struct LeastSquares {
    pub x: Vec<f64>,
    /// Euclidean norm of the residual `A x − b`.
    pub residual_norm: f64,
    /// `min |R_ii| / max |R_ii|` of the triangular factor; a cheap reciprocal
    /// condition estimate.
    pub rcond: f64,
}

/// Reciprocal condition estimates below this are treated as rank deficient.
pub const RCOND_LIMIT: f64 = 1e-13;

/// Solves `min ||A x − b||₂` by Householder QR. `a` is row-major with
/// `rows × cols` entries.
pub fn lstsq(a: &[f64], rows: usize, cols: usize, b: &[f64]) -> Result<LeastSquares, LinalgError> {
    if a.len() != rows * cols || b.len() != rows {
        return Err(LinalgError::Shape { len: a.len(), rows, cols });
    }
    if rows < cols || cols == 0 {
        return Err(LinalgError::Underdetermined { rows, cols });
    }
    let mut r = a.to_vec();
    let mut qtb = b.to_vec();
    let mut v = vec![0.0; rows];

    for k in 0..cols {
        let mut norm = 0.0;
        for i in k..rows {
            norm += r[i * cols + k] * r[i * cols + k];
        }
        let norm = libm::sqrt(norm);
        if norm == 0.0 {
            continue;
        }
        let alpha = if r[k * cols + k] > 0.0 { -norm } else { norm };
        for i in k..rows {
            v[i] = r[i * cols + k];
        }
        v[k] -= alpha;
        let vnorm2: f64 = (k..rows).map(|i| v[i] * v[i]).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..cols {
            let dot: f64 = (k..rows).map(|i| v[i] * r[i * cols + j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..rows {
                r[i * cols + j] -= f * v[i];
            }
        }
        let dot: f64 = (k..rows).map(|i| v[i] * qtb[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in k..rows {
            qtb[i] -= f * v[i];
        }
    }

    let diag = (0..cols).map(|k| r[k * cols + k].abs());
    let (dmin, dmax) = diag.fold((f64::INFINITY, 0.0f64), |(lo, hi), d| (lo.min(d), hi.max(d)));
    let rcond = if dmax > 0.0 { dmin / dmax } else { 0.0 };
    if !(rcond > RCOND_LIMIT) {
        return Err(LinalgError::RankDeficient { rcond });
    }

    let mut x = vec![0.0; cols];
    for k in (0..cols).rev() {
        let mut s = qtb[k];
        for j in k + 1..cols {
            s -= r[k * cols + j] * x[j];
        }
        x[k] = s / r[k * cols + k];
    }
    let residual_norm = libm::sqrt(qtb[cols..].iter().map(|q| q * q).sum::<f64>());
    Ok(LeastSquares { x, residual_norm, rcond })
}

pub type Vec3 = [f64; 3];

pub fn dot3(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm3(a: Vec3) -> f64 {
    libm::sqrt(dot3(a, a))
}

/// Row-major 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3(pub [[f64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    /// Rotation by `angle` about x̂.
    pub fn rot_x(angle: f64) -> Self {
        let (s, c) = (libm::sin(angle), libm::cos(angle));
        Mat3([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
    }

    /// Rotation by `angle` about ŷ. Maps x̂ to −ẑ at +π/2.
    pub fn rot_y(angle: f64) -> Self {
        let (s, c) = (libm::sin(angle), libm::cos(angle));
        Mat3([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])
    }

    /// Rotation by `angle` about ẑ.
    pub fn rot_z(angle: f64) -> Self {
        let (s, c) = (libm::sin(angle), libm::cos(angle));
        Mat3([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3([[m[0][0], m[1][0], m[2][0]], [m[0][1], m[1][1], m[2][1]], [m[0][2], m[1][2], m[2][2]]])
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn apply(&self, v: Vec3) -> Vec3 {
        let m = &self.0;
        [dot3(m[0], v), dot3(m[1], v), dot3(m[2], v)]
    }
}

impl Mul for Mat3 {
    type Output = Mat3;

    fn mul(self, rhs: Mat3) -> Mat3 {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Mat3(out)
    }
}
