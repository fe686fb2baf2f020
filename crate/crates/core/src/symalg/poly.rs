//! Dense univariate polynomials with complex coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A univariate polynomial stored as ascending coefficients
/// `c[0] + c[1]·z + … + c[d]·z^d` with a nonzero leading coefficient
/// (the zero polynomial stores a single zero coefficient).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniPoly {
    coeffs: Vec<Complex64>,
}

impl UniPoly {
    /// Builds a polynomial from ascending coefficients, trimming exact
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        UniPoly { coeffs }
    }

    /// Builds a polynomial from ascending real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Polynomial degree; 0 for constants including the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading coefficient.
    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    /// True when every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// Largest coefficient modulus.
    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Simultaneous Horner evaluation of the polynomial and its
    /// derivative at `z`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// The derivative polynomial.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() == 1 {
            return UniPoly::new(vec![Complex64::new(0.0, 0.0)]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        UniPoly::new(coeffs)
    }

    /// Coefficients of `P(center + w)` as a polynomial in `w`
    /// (a Taylor shift, computed by repeated synthetic division).
    pub fn taylor_shift(&self, center: Complex64) -> UniPoly {
        let mut b = self.coeffs.clone();
        let d = b.len();
        for i in 0..d {
            for j in (i..d - 1).rev() {
                let (lo, hi) = b.split_at_mut(j + 1);
                lo[j] += center * hi[0];
            }
        }
        UniPoly { coeffs: b }
    }

    /// The polynomial divided by its largest coefficient modulus;
    /// returns the original for the zero polynomial.
    pub fn normalized(&self) -> UniPoly {
        let scale = self.max_coeff_modulus();
        if scale == 0.0 {
            return self.clone();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|&c| c / scale).collect(),
        }
    }

    /// Whether every coefficient is real to within `tol` relative to the
    /// largest coefficient modulus.
    pub fn is_real(&self, tol: f64) -> bool {
        let scale = self.max_coeff_modulus().max(1.0);
        self.coeffs.iter().all(|c| c.im.abs() <= tol * scale)
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, &c) in other.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![Complex64::new(0.0, 0.0)]);
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    /// Scalar multiple.
    pub fn scale(&self, factor: Complex64) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }
}
