//! Power-sum identity for real 2x2 matrices of determinant 1:
//! the sum A + A^2 + ... + A^9 equals (tr(A) + 1)(tr(A^3) + 1) A^5.
//!
//! Both sides are computed independently: the left by direct accumulation of
//! powers, the right through the factored scalar. A generic scalar type
//! allows an exact rational path for rational inputs next to the float path
//! used for randomized property checks.

use num::rational::BigRational;
use num::BigInt;
use num_traits::Num;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("matrix entries must be finite")]
    NonFiniteEntry,
    #[error("identity requires det(A) = 1, got det = {0}")]
    DeterminantNotOne(f64),
    #[error("matrix power requires exponent >= 1")]
    ZeroExponent,
}

/// Real (or rational) 2x2 matrix, row-major entries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mat2<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: Clone + Num> Mat2<T> {
    pub fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.a11.clone() * other.a11.clone() + self.a12.clone() * other.a21.clone(),
            self.a11.clone() * other.a12.clone() + self.a12.clone() * other.a22.clone(),
            self.a21.clone() * other.a11.clone() + self.a22.clone() * other.a21.clone(),
            self.a21.clone() * other.a12.clone() + self.a22.clone() * other.a22.clone(),
        )
    }

    /// A^k by repeated multiplication; k stays tiny here (at most 9).
    pub fn pow(&self, k: u32) -> Result<Self, MatrixError> {
        if k == 0 {
            return Err(MatrixError::ZeroExponent);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    pub fn trace(&self) -> T {
        self.a11.clone() + self.a22.clone()
    }

    pub fn det(&self) -> T {
        self.a11.clone() * self.a22.clone() - self.a12.clone() * self.a21.clone()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.a11.clone() + other.a11.clone(),
            self.a12.clone() + other.a12.clone(),
            self.a21.clone() + other.a21.clone(),
            self.a22.clone() + other.a22.clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            s.clone() * self.a11.clone(),
            s.clone() * self.a12.clone(),
            s.clone() * self.a21.clone(),
            s.clone() * self.a22.clone(),
        )
    }

    /// Direct accumulation of A + A^2 + ... + A^9; the oracle side.
    pub fn power_sum(&self) -> Self {
        let mut power = self.clone();
        let mut sum = self.clone();
        for _ in 2..=9 {
            power = power.mul(self);
            sum = sum.add(&power);
        }
        sum
    }

    /// The factored side: (tr(A) + 1)(tr(A^3) + 1) A^5.
    pub fn rhs_factored(&self) -> Self {
        let tr1 = self.trace() + T::one();
        let tr3 = self.pow(3).expect("k >= 1").trace() + T::one();
        let scalar = tr1 * tr3;
        self.pow(5).expect("k >= 1").scale(&scalar)
    }
}

impl Mat2<f64> {
    pub fn entries(&self) -> [f64; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|e| e.is_finite())
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The unipotent example matrix [[1,1],[0,1]], on the exact rational path.
pub fn example_unipotent() -> Mat2<BigRational> {
    Mat2::new(ratio(1, 1), ratio(1, 1), ratio(0, 1), ratio(1, 1))
}

/// The diagonal example matrix [[2,0],[0,1/2]], on the exact rational path.
pub fn example_diagonal() -> Mat2<BigRational> {
    Mat2::new(ratio(2, 1), ratio(0, 1), ratio(0, 1), ratio(1, 2))
}

/// Comparison of the direct power sum against the factored form.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub lhs: Mat2<f64>,
    pub rhs: Mat2<f64>,
    pub max_abs_error: f64,
    pub max_rel_error: f64,
    pub det_input: f64,
    pub tol_rel: f64,
    pub pass: bool,
}

/// Checks the identity on one det-1 matrix.
///
/// Entries of magnitude below 1 are compared absolutely, the rest
/// relatively; the report passes when the combined error is within
/// `tol_rel`. The det(A) = 1 hypothesis is enforced up to 1e-9.
pub fn verify_identity(a: &Mat2<f64>, tol_rel: f64) -> Result<IdentityReport, MatrixError> {
    if !a.is_finite() {
        return Err(MatrixError::NonFiniteEntry);
    }
    let det = a.det();
    if (det - 1.0).abs() > 1e-9 {
        return Err(MatrixError::DeterminantNotOne(det));
    }
    let lhs = a.power_sum();
    let rhs = a.rhs_factored();
    let mut max_abs_error = 0.0f64;
    let mut max_rel_error = 0.0f64;
    let mut worst = 0.0f64;
    for (l, r) in lhs.entries().into_iter().zip(rhs.entries()) {
        let abs = (l - r).abs();
        let scale = l.abs().max(r.abs());
        let rel = if scale > 0.0 { abs / scale } else { 0.0 };
        max_abs_error = max_abs_error.max(abs);
        max_rel_error = max_rel_error.max(rel);
        // small entries compared absolutely
        worst = worst.max(if scale < 1.0 { abs } else { rel });
    }
    Ok(IdentityReport {
        lhs,
        rhs,
        max_abs_error,
        max_rel_error,
        det_input: det,
        tol_rel,
        pass: worst <= tol_rel,
    })
}

/// Deterministic pseudorandom det-1 matrices: a in [-3,3] with |a| >= 1e-3,
/// b, c in [-3,3], d = (1 + bc)/a.
pub fn random_sl2(seed: u64, count: usize) -> Vec<Mat2<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: f64 = rng.gen_range(-3.0..=3.0);
        if a.abs() < 1e-3 {
            continue;
        }
        let b: f64 = rng.gen_range(-3.0..=3.0);
        let c: f64 = rng.gen_range(-3.0..=3.0);
        let d = (1.0 + b * c) / a;
        out.push(Mat2::new(a, b, c, d));
    }
    out
}
