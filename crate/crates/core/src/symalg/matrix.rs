//! Word matrices over SL(2, ℂ) with polynomial entries, and the trace
//! polynomials they produce.
//!
//! The generator pair is normalized as
//!
//! ```text
//! X = [ e^{iπ/p}  1         ]      Y = [ e^{iπ/q}  0         ]
//!     [ 0         e^{−iπ/p} ]          [ μ         e^{−iπ/q} ]
//! ```
//!
//! with the parabolic limit replacing `e^{iπ/p}` by 1. Inverses are the
//! adjugates (both matrices have determinant 1). A Farey word maps to the
//! left-to-right product of its letter matrices; the associated trace
//! polynomial is `tr W + 2`, a degree-`s` polynomial in `μ` for a word
//! labelled by `r/s`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::farey::{FareyFraction, Generator};
use crate::order::Order;
use crate::roots::dd::{self, Dd, DdComplex};
use crate::symalg::poly::UniPoly;

/// Incremental 2×2 polynomial-matrix product specialized to the two
/// letter shapes (upper-triangular `X` powers, lower-triangular-plus-μ
/// `Y` powers). Coefficients are ascending; `scratch` avoids reallocating
/// in the μ-shift.
struct WordProduct {
    m00: Vec<Complex64>,
    m01: Vec<Complex64>,
    m10: Vec<Complex64>,
    m11: Vec<Complex64>,
    scratch: Vec<Complex64>,
}

impl WordProduct {
    fn identity(capacity: usize) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let mut m00 = Vec::with_capacity(capacity);
        let mut m01 = Vec::with_capacity(capacity);
        let mut m10 = Vec::with_capacity(capacity);
        let mut m11 = Vec::with_capacity(capacity);
        m00.push(one);
        m01.push(zero);
        m10.push(zero);
        m11.push(one);
        WordProduct {
            m00,
            m01,
            m10,
            m11,
            scratch: Vec::with_capacity(capacity),
        }
    }

    /// Right-multiplies by `X^±1`: new columns are
    /// `col0 ← a^±1·col0`, `col1 ← ±col0_old + a^∓1·col1`.
    fn push_x(&mut self, a: Complex64, exponent: i8) {
        let (diag0, diag1, off) = if exponent == 1 {
            (a, a.inv(), Complex64::new(1.0, 0.0))
        } else {
            (a.inv(), a, Complex64::new(-1.0, 0.0))
        };
        axpy(&mut self.m01, diag1, &self.m00, off);
        axpy(&mut self.m11, diag1, &self.m10, off);
        scale(&mut self.m00, diag0);
        scale(&mut self.m10, diag0);
    }

    /// Right-multiplies by `Y^±1`: new columns are
    /// `col0 ← b^±1·col0 ± μ·col1`, `col1 ← b^∓1·col1`.
    fn push_y(&mut self, b: Complex64, exponent: i8) {
        let (diag0, diag1, mu_sign) = if exponent == 1 {
            (b, b.inv(), 1.0)
        } else {
            (b.inv(), b, -1.0)
        };
        mu_axpy(&mut self.m00, diag0, &self.m01, mu_sign, &mut self.scratch);
        mu_axpy(&mut self.m10, diag0, &self.m11, mu_sign, &mut self.scratch);
        scale(&mut self.m01, diag1);
        scale(&mut self.m11, diag1);
    }

    fn trace_plus_two(&self) -> UniPoly {
        let n = self.m00.len().max(self.m11.len());
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        for (k, &c) in self.m00.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, &c) in self.m11.iter().enumerate() {
            coeffs[k] += c;
        }
        coeffs[0] += 2.0;
        UniPoly::new(coeffs)
    }
}

fn scale(v: &mut [Complex64], factor: Complex64) {
    for c in v {
        *c *= factor;
    }
}

/// `dst ← other_factor·other + diag·dst`, extending `dst` as needed.
fn axpy(dst: &mut Vec<Complex64>, diag: Complex64, other: &[Complex64], other_factor: Complex64) {
    if dst.len() < other.len() {
        dst.resize(other.len(), Complex64::new(0.0, 0.0));
    }
    for (d, &o) in dst.iter_mut().zip(other.iter()) {
        *d = *d * diag + o * other_factor;
    }
    for d in dst.iter_mut().skip(other.len()) {
        *d *= diag;
    }
}

/// `dst ← diag·dst + sign·μ·other`, where μ·other shifts coefficients up
/// one degree.
fn mu_axpy(
    dst: &mut Vec<Complex64>,
    diag: Complex64,
    other: &[Complex64],
    sign: f64,
    scratch: &mut Vec<Complex64>,
) {
    scratch.clear();
    scratch.push(Complex64::new(0.0, 0.0));
    scratch.extend(other.iter().map(|&c| c * sign));
    if dst.len() < scratch.len() {
        dst.resize(scratch.len(), Complex64::new(0.0, 0.0));
    }
    for (d, &s) in dst.iter_mut().zip(scratch.iter()) {
        *d = *d * diag + s;
    }
    for d in dst.iter_mut().skip(scratch.len()) {
        *d *= diag;
    }
}

fn generator_scalar(order: Order) -> Complex64 {
    Complex64::from_polar(1.0, order.half_angle())
}

/// The 2×2 polynomial matrix of the Farey word for `fraction` at
/// generator orders `(p, q)`, entries indexed `[row][column]`.
pub fn word_matrix(fraction: FareyFraction, p: Order, q: Order) -> [[UniPoly; 2]; 2] {
    let a = generator_scalar(p);
    let b = generator_scalar(q);
    let capacity = fraction.den() as usize + 2;
    let mut product = WordProduct::identity(capacity);
    for &(generator, exponent) in fraction.word().letters() {
        match generator {
            Generator::X => product.push_x(a, exponent),
            Generator::Y => product.push_y(b, exponent),
        }
    }
    [
        [UniPoly::new(product.m00), UniPoly::new(product.m01)],
        [UniPoly::new(product.m10), UniPoly::new(product.m11)],
    ]
}

/// The trace polynomial `P_{r/s}(μ) = tr W_{r/s} + 2` at generator orders
/// `(p, q)`; degree equals the fraction's denominator.
pub fn trace_polynomial(fraction: FareyFraction, p: Order, q: Order) -> UniPoly {
    let a = generator_scalar(p);
    let b = generator_scalar(q);
    let capacity = fraction.den() as usize + 2;
    let mut product = WordProduct::identity(capacity);
    for &(generator, exponent) in fraction.word().letters() {
        match generator {
            Generator::X => product.push_x(a, exponent),
            Generator::Y => product.push_y(b, exponent),
        }
    }
    product.trace_plus_two()
}

/// The trace polynomial built in double-double precision, for fractions
/// whose double-precision coefficients land outside the root error the
/// caller can tolerate.
///
/// The coefficients of every trace polynomial are real, but building
/// them through complex phases leaves imaginary residue at the working
/// precision; near-Chebyshev fractions amplify even a relative 1e−15
/// coefficient disturbance into order-one root motion, so the residue is
/// dropped rather than carried. The returned coefficients are accurate
/// to roughly 1e−29 relative.
pub(crate) fn trace_polynomial_dd(fraction: FareyFraction, p: Order, q: Order) -> Vec<DdComplex> {
    let a = dd::phase(p);
    let b = dd::phase(q);
    let capacity = fraction.den() as usize + 2;
    let mut product = DdWordProduct::identity(capacity);
    for &(generator, exponent) in fraction.word().letters() {
        match generator {
            Generator::X => product.push_x(a, exponent),
            Generator::Y => product.push_y(b, exponent),
        }
    }
    let mut coeffs = product.trace_plus_two();
    for c in &mut coeffs {
        c.im = Dd::ZERO;
    }
    coeffs
}

/// Double-double mirror of [`WordProduct`]. Phase scalars are unimodular,
/// so the inverse diagonal entries are conjugates rather than divisions.
struct DdWordProduct {
    m00: Vec<DdComplex>,
    m01: Vec<DdComplex>,
    m10: Vec<DdComplex>,
    m11: Vec<DdComplex>,
}

impl DdWordProduct {
    fn identity(capacity: usize) -> Self {
        let mut m00 = Vec::with_capacity(capacity);
        let mut m01 = Vec::with_capacity(capacity);
        let mut m10 = Vec::with_capacity(capacity);
        let mut m11 = Vec::with_capacity(capacity);
        m00.push(DdComplex::ONE);
        m01.push(DdComplex::ZERO);
        m10.push(DdComplex::ZERO);
        m11.push(DdComplex::ONE);
        DdWordProduct { m00, m01, m10, m11 }
    }

    fn push_x(&mut self, a: DdComplex, exponent: i8) {
        let (diag0, diag1, off) = if exponent == 1 {
            (a, a.conj(), 1.0)
        } else {
            (a.conj(), a, -1.0)
        };
        dd_axpy(&mut self.m01, diag1, &self.m00, off);
        dd_axpy(&mut self.m11, diag1, &self.m10, off);
        dd_scale(&mut self.m00, diag0);
        dd_scale(&mut self.m10, diag0);
    }

    fn push_y(&mut self, b: DdComplex, exponent: i8) {
        let (diag0, diag1, mu_sign) = if exponent == 1 {
            (b, b.conj(), 1.0)
        } else {
            (b.conj(), b, -1.0)
        };
        dd_mu_axpy(&mut self.m00, diag0, &self.m01, mu_sign);
        dd_mu_axpy(&mut self.m10, diag0, &self.m11, mu_sign);
        dd_scale(&mut self.m01, diag1);
        dd_scale(&mut self.m11, diag1);
    }

    fn trace_plus_two(&self) -> Vec<DdComplex> {
        let n = self.m00.len().max(self.m11.len());
        let mut coeffs = vec![DdComplex::ZERO; n];
        for (k, &c) in self.m00.iter().enumerate() {
            coeffs[k] = coeffs[k].add(c);
        }
        for (k, &c) in self.m11.iter().enumerate() {
            coeffs[k] = coeffs[k].add(c);
        }
        coeffs[0] = coeffs[0].add(DdComplex::from_c64(Complex64::new(2.0, 0.0)));
        coeffs
    }
}

fn dd_scale(v: &mut [DdComplex], factor: DdComplex) {
    for c in v {
        *c = c.mul(factor);
    }
}

fn dd_axpy(dst: &mut Vec<DdComplex>, diag: DdComplex, other: &[DdComplex], sign: f64) {
    if dst.len() < other.len() {
        dst.resize(other.len(), DdComplex::ZERO);
    }
    for (d, &o) in dst.iter_mut().zip(other.iter()) {
        let scaled = DdComplex::new(o.re.mul_f64(sign), o.im.mul_f64(sign));
        *d = d.mul(diag).add(scaled);
    }
    for d in dst.iter_mut().skip(other.len()) {
        *d = d.mul(diag);
    }
}

fn dd_mu_axpy(dst: &mut Vec<DdComplex>, diag: DdComplex, other: &[DdComplex], sign: f64) {
    if dst.len() < other.len() + 1 {
        dst.resize(other.len() + 1, DdComplex::ZERO);
    }
    for (k, d) in dst.iter_mut().enumerate() {
        let shifted = if k >= 1 && k - 1 < other.len() {
            let o = other[k - 1];
            DdComplex::new(o.re.mul_f64(sign), o.im.mul_f64(sign))
        } else {
            DdComplex::ZERO
        };
        *d = d.mul(diag).add(shifted);
    }
}

/// Exact integer coefficients of the trace polynomial when both
/// generators are parabolic.
///
/// Errors with [`Error::Overflow`] if a coefficient exceeds the `i128`
/// range (which happens only far beyond the denominators this crate
/// searches exactly).
pub fn parabolic_integer_polynomial(fraction: FareyFraction) -> Result<Vec<i128>> {
    let n = fraction.den() as usize + 2;
    let mut m00: Vec<i128> = Vec::with_capacity(n);
    let mut m01: Vec<i128> = Vec::with_capacity(n);
    let mut m10: Vec<i128> = Vec::with_capacity(n);
    let mut m11: Vec<i128> = Vec::with_capacity(n);
    m00.push(1);
    m01.push(0);
    m10.push(0);
    m11.push(1);

    let int_axpy = |dst: &mut Vec<i128>, other: &[i128], sign: i128| -> Result<()> {
        if dst.len() < other.len() {
            dst.resize(other.len(), 0);
        }
        for (d, &o) in dst.iter_mut().zip(other.iter()) {
            *d = o
                .checked_mul(sign)
                .and_then(|t| d.checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    };
    let int_mu_axpy = |dst: &mut Vec<i128>, other: &[i128], sign: i128| -> Result<()> {
        if dst.len() < other.len() + 1 {
            dst.resize(other.len() + 1, 0);
        }
        for (k, &o) in other.iter().enumerate() {
            dst[k + 1] = o
                .checked_mul(sign)
                .and_then(|t| dst[k + 1].checked_add(t))
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    };

    for &(generator, exponent) in fraction.word().letters() {
        let sign = i128::from(exponent);
        match generator {
            // X^±1 = [[1, ±1], [0, 1]]: col1 += ±col0.
            Generator::X => {
                let col0 = m00.clone();
                int_axpy(&mut m01, &col0, sign)?;
                let col0 = m10.clone();
                int_axpy(&mut m11, &col0, sign)?;
            }
            // Y^±1 = [[1, 0], [±μ, 1]]: col0 += ±μ·col1.
            Generator::Y => {
                let col1 = m01.clone();
                int_mu_axpy(&mut m00, &col1, sign)?;
                let col1 = m11.clone();
                int_mu_axpy(&mut m10, &col1, sign)?;
            }
        }
    }

    let mut coeffs = vec![0i128; m00.len().max(m11.len())];
    for (k, &c) in m00.iter().enumerate() {
        coeffs[k] = coeffs[k].checked_add(c).ok_or(Error::Overflow)?;
    }
    for (k, &c) in m11.iter().enumerate() {
        coeffs[k] = coeffs[k].checked_add(c).ok_or(Error::Overflow)?;
    }
    coeffs[0] = coeffs[0].checked_add(2).ok_or(Error::Overflow)?;
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(s: &str) -> FareyFraction {
        s.parse().unwrap()
    }

    #[test]
    fn parabolic_half_is_mu_squared_plus_four() {
        let p = parabolic_integer_polynomial(frac("1/2")).unwrap();
        assert_eq!(p, vec![4, 0, 1]);
    }

    #[test]
    fn parabolic_two_thirds_matches_display() {
        // μ³ − 2μ² + μ + 4
        let p = parabolic_integer_polynomial(frac("2/3")).unwrap();
        assert_eq!(p, vec![4, 1, -2, 1]);
    }

    #[test]
    fn parabolic_matches_complex_build() {
        for name in ["2/3", "10/17", "5/8", "23/29"] {
            let f = frac(name);
            let exact = parabolic_integer_polynomial(f).unwrap();
            let complex = trace_polynomial(f, Order::Infinite, Order::Infinite);
            assert_eq!(complex.degree(), exact.len() - 1);
            for (k, &c) in exact.iter().enumerate() {
                let got = complex.coeffs()[k];
                assert!((got.re - c as f64).abs() < 1e-9, "coeff {k}: {got} vs {c}");
                assert!(got.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn degree_equals_denominator() {
        for f in crate::farey::enumerate_fractions(40) {
            let poly = trace_polynomial(f, Order::Finite(3), Order::Finite(7));
            assert_eq!(poly.degree(), f.den() as usize);
            let para = trace_polynomial(f, Order::Infinite, Order::Finite(2));
            assert_eq!(para.degree(), f.den() as usize);
        }
    }

    #[test]
    fn coefficients_are_real() {
        for f in crate::farey::enumerate_fractions(30) {
            for (p, q) in [
                (Order::Finite(3), Order::Finite(7)),
                (Order::Finite(2), Order::Finite(5)),
                (Order::Infinite, Order::Finite(4)),
            ] {
                let poly = trace_polynomial(f, p, q);
                assert!(poly.is_real(1e-12), "{f} at ({p}, {q})");
            }
        }
    }

    #[test]
    fn word_matrix_has_unit_determinant() {
        for name in ["1/2", "2/3", "3/5", "7/10"] {
            let f = frac(name);
            for (p, q) in [
                (Order::Finite(4), Order::Finite(9)),
                (Order::Infinite, Order::Infinite),
            ] {
                let m = word_matrix(f, p, q);
                let det = m[0][0].mul(&m[1][1]).add(&m[0][1].mul(&m[1][0]).scale(
                    Complex64::new(-1.0, 0.0),
                ));
                for step in 0..5 {
                    let z = Complex64::new(0.5 * step as f64 - 1.0, 0.3 * step as f64);
                    let dev = (det.eval(z) - Complex64::new(1.0, 0.0)).norm();
                    assert!(dev < 1e-8, "{name} at ({p}, {q}), z = {z}: {dev:e}");
                }
            }
        }
    }

    #[test]
    fn trace_matches_word_matrix() {
        let f = frac("4/7");
        let (p, q) = (Order::Finite(5), Order::Finite(6));
        let m = word_matrix(f, p, q);
        let mut tr = m[0][0].add(&m[1][1]);
        tr = tr.add(&UniPoly::from_real(&[2.0]));
        assert_eq!(tr, trace_polynomial(f, p, q));
    }

    #[test]
    fn mirror_fraction_reflects_through_gamma_axis() {
        // P_{(s−r)/s}(μ) = P_{r/s}(4 sin(π/p) sin(π/q) − μ)
        for (p, q) in [
            (Order::Finite(3), Order::Finite(7)),
            (Order::Finite(10), Order::Finite(10)),
            (Order::Infinite, Order::Finite(2)),
            (Order::Infinite, Order::Infinite),
        ] {
            let k = 4.0 * p.sin_pi_over() * q.sin_pi_over();
            for name in ["2/5", "7/17", "3/8"] {
                let f = frac(name);
                let direct = trace_polynomial(f.mirror(), p, q);
                let reflected = trace_polynomial(f, p, q);
                for step in 0..6 {
                    let mu = Complex64::new(0.3 * step as f64 - 0.7, 0.4 - 0.1 * step as f64);
                    let lhs = direct.eval(mu);
                    let rhs = reflected.eval(Complex64::new(k, 0.0) - mu);
                    assert!(
                        (lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0),
                        "{name} at ({p}, {q})"
                    );
                }
            }
        }
    }

    #[test]
    fn double_double_build_matches_integer_polynomial() {
        for name in ["2/3", "10/17", "23/29"] {
            let f = frac(name);
            let exact = parabolic_integer_polynomial(f).unwrap();
            let built = trace_polynomial_dd(f, Order::Infinite, Order::Infinite);
            assert_eq!(built.len(), exact.len());
            for (k, &c) in exact.iter().enumerate() {
                let got = built[k];
                assert!(
                    (got.re.value() - c as f64).abs() < 1e-20,
                    "{name} coeff {k}: {} vs {c}",
                    got.re.value()
                );
                assert_eq!(got.im.value(), 0.0);
            }
        }
    }

    #[test]
    fn double_double_build_keeps_integer_coefficients_at_order_three() {
        // At p = q = 3 both generator phases are sixth roots of unity, so
        // every trace coefficient is an integer. The double build loses
        // these integers to rounding once they pass 2^52; the
        // double-double build must pin them to far better than unit
        // distance even at scale 1e15.
        let built = trace_polynomial_dd(frac("24/41"), Order::Finite(3), Order::Finite(3));
        let scale = built
            .iter()
            .map(|c| c.re.value().abs())
            .fold(0.0f64, f64::max);
        assert!(scale > 1e12, "expected steep coefficients, got {scale}");
        for (k, c) in built.iter().enumerate() {
            let hi = c.re.hi;
            let nearest = hi.round();
            let distance = ((hi - nearest) + c.re.lo).abs();
            assert!(
                distance <= 1e-25 * scale,
                "coeff {k} sits {distance} from an integer"
            );
        }
    }
}
