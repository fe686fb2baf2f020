//! Double-double arithmetic for the high-precision root path.
//!
//! Each value is an unevaluated sum `hi + lo` of two doubles, giving
//! roughly 32 significant digits. The solver needs only evaluation-grade
//! operations: add, subtract, multiply, divide, and the phase constants
//! `e^{±iπ/n}`, whose sine and cosine are summed from their Taylor
//! series entirely in double-double terms.

use num_complex::Complex64;

use crate::order::Order;

/// π as an unevaluated double-double sum.
const PI_HI: f64 = 3.141592653589793;
const PI_LO: f64 = 1.2246467991473532e-16;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Dd {
    pub(crate) hi: f64,
    pub(crate) lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let t = s - a;
    (s, (a - (s - t)) + (b - t))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub(crate) fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub(crate) fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let (hi, lo) = quick_two_sum(s, e + self.lo + other.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub(crate) fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub(crate) fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub(crate) fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    /// Long division: two quotient terms plus a correction, accurate to
    /// about one unit in the last double-double place.
    #[inline]
    pub(crate) fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub(crate) fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p, e + self.lo * x);
        Dd { hi, lo }
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct DdComplex {
    pub(crate) re: Dd,
    pub(crate) im: Dd,
}

impl DdComplex {
    pub(crate) const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    pub(crate) const ONE: DdComplex = DdComplex {
        re: Dd { hi: 1.0, lo: 0.0 },
        im: Dd::ZERO,
    };

    #[inline]
    pub(crate) fn new(re: Dd, im: Dd) -> Self {
        DdComplex { re, im }
    }

    #[inline]
    pub(crate) fn from_c64(z: Complex64) -> Self {
        DdComplex {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub(crate) fn value(self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub(crate) fn neg(self) -> Self {
        Self {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub(crate) fn conj(self) -> Self {
        DdComplex {
            re: self.re,
            im: self.im.neg(),
        }
    }

    #[inline]
    pub(crate) fn add(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(other.re),
            im: self.im.add(other.im),
        }
    }

    #[inline]
    pub(crate) fn sub(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.sub(other.re),
            im: self.im.sub(other.im),
        }
    }

    #[inline]
    pub(crate) fn mul(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(other.re).sub(self.im.mul(other.im)),
            im: self.re.mul(other.im).add(self.im.mul(other.re)),
        }
    }

    #[inline]
    pub(crate) fn div(self, other: DdComplex) -> DdComplex {
        let denom = other.re.mul(other.re).add(other.im.mul(other.im));
        let numer = self.mul(other.conj());
        DdComplex {
            re: numer.re.div(denom),
            im: numer.im.div(denom),
        }
    }
}

/// `sin(π/n)` and `cos(π/n)` summed from their Taylor series in
/// double-double terms; the argument `π/n` itself carries ~32 digits.
pub(crate) fn sin_cos_pi_over(n: u32) -> (Dd, Dd) {
    let x = Dd {
        hi: PI_HI,
        lo: PI_LO,
    }
    .div(Dd::from_f64(n as f64));
    // The factorial divisors are applied by exact long division; rounding
    // them to single doubles first would cap the sum at ~17 digits.
    let xx = x.mul(x).neg();
    let mut sin = x;
    let mut term = x;
    let mut k = 1.0f64;
    loop {
        term = term.mul(xx).div(Dd::from_f64((k + 1.0) * (k + 2.0)));
        sin = sin.add(term);
        k += 2.0;
        if term.hi.abs() < 1e-35 {
            break;
        }
    }
    let mut cos = Dd::from_f64(1.0);
    let mut term = Dd::from_f64(1.0);
    let mut k = 0.0f64;
    loop {
        term = term.mul(xx).div(Dd::from_f64((k + 1.0) * (k + 2.0)));
        cos = cos.add(term);
        k += 2.0;
        if term.hi.abs() < 1e-35 {
            break;
        }
    }
    (sin, cos)
}

/// `e^{iπ/p}` as a double-double complex scalar; the parabolic limit is 1.
pub(crate) fn phase(order: Order) -> DdComplex {
    match order {
        Order::Infinite => DdComplex::ONE,
        Order::Finite(n) => {
            let (sin, cos) = sin_cos_pi_over(n);
            DdComplex::new(cos, sin)
        }
    }
}

/// Evaluates a polynomial (ascending coefficients) at `z` by Horner in
/// double-double precision, collapsing the result to a double.
pub(crate) fn eval_dd(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let Some((&last, rest)) = coeffs.split_last() else {
        return Complex64::new(0.0, 0.0);
    };
    let zd = DdComplex::from_c64(z);
    let mut value = DdComplex::from_c64(last);
    for &c in rest.iter().rev() {
        value = value.mul(zd).add(DdComplex::from_c64(c));
    }
    value.value()
}

/// Value and derivative of a double-double polynomial at a double-double
/// point, collapsed to doubles. The collapse keeps the leading 53 bits of
/// the accurately accumulated values, which is all a Newton step needs.
pub(crate) fn horner_pair(coeffs: &[DdComplex], z: DdComplex) -> (Complex64, Complex64) {
    let (value, derivative, _) = horner_with_error(coeffs, z);
    (value, derivative)
}

/// Evaluates value and derivative by Horner's rule and carries a running
/// bound on the rounding noise of the value, built from the magnitudes
/// the recurrence actually visits. The static bound Σ|aₖ||z|ᵏ overstates
/// the noise by orders of magnitude whenever the intermediate tail sums
/// stay far below it, and a settling test needs the tighter figure.
pub(crate) fn horner_with_error(
    coeffs: &[DdComplex],
    z: DdComplex,
) -> (Complex64, Complex64, f64) {
    // Unit roundoff of a double-double multiply-add, with slack for the
    // two roundings per step.
    const STEP_EPS: f64 = 2.0 * 4.930380657631324e-32;
    let r = z.value().norm();
    let mut value = *coeffs.last().unwrap();
    let mut derivative = DdComplex::ZERO;
    let mut noise = 0.0f64;
    for c in coeffs.iter().rev().skip(1) {
        derivative = derivative.mul(z).add(value);
        value = value.mul(z).add(*c);
        noise = noise * r + STEP_EPS * value.value().norm();
    }
    (value.value(), derivative.value(), noise)
}

/// Refines a root estimate with Newton steps whose polynomial values are
/// evaluated in double-double precision, removing the cancellation error
/// that plain Horner accumulates near a root.
pub(crate) fn newton_polish(coeffs: &[Complex64], start: Complex64, iterations: usize) -> Complex64 {
    if coeffs.len() < 2 {
        return start;
    }
    let dd_coeffs: Vec<DdComplex> = coeffs.iter().map(|&c| DdComplex::from_c64(c)).collect();
    let mut z = start;
    for _ in 0..iterations {
        let (p, dp) = horner_pair(&dd_coeffs, DdComplex::from_c64(z));
        if dp == Complex64::new(0.0, 0.0) {
            break;
        }
        let step = p / dp;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-17 * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polish_recovers_cancellation_digits() {
        // (μ − 1)(μ − (1 + 2⁻²³)) has close roots and exactly
        // representable coefficients; a perturbed estimate should come
        // back to the exact root even though plain double-precision
        // Newton stalls three orders of magnitude away.
        let r = 1.0 + (2.0f64).powi(-23);
        let coeffs = [
            Complex64::new(r, 0.0),
            Complex64::new(-1.0 - r, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let polished = newton_polish(&coeffs, Complex64::new(1.0 + 3e-9, 2e-9), 4);
        let err = (polished - Complex64::new(1.0, 0.0)).norm();
        assert!(err < 1e-13, "polished error {err:e}");
    }

    #[test]
    fn polish_is_stationary_at_exact_roots() {
        let coeffs = [
            Complex64::new(4.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let z = Complex64::new(0.0, 2.0);
        let polished = newton_polish(&coeffs, z, 3);
        assert!((polished - z).norm() < 1e-15);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let back = a.mul_f64(3.0);
        assert!((back.value() - 1.0).abs() < 1e-31);
        assert!((a.hi - 1.0 / 3.0).abs() < 1e-17);
        assert!(a.lo.abs() > 0.0 && a.lo.abs() < 1e-16);
    }

    #[test]
    fn phase_constants_reach_double_double_accuracy() {
        // sin(π/3) = √3/2 and cos(π/3) = 1/2; the latter is exact, the
        // former is checked against its first 32 digits split into a
        // double-double pair.
        let (sin3, cos3) = sin_cos_pi_over(3);
        assert_eq!(cos3.hi, 0.5);
        assert!(cos3.lo.abs() < 1e-31);
        let sqrt3_half_hi = 0.8660254037844386;
        let sqrt3_half_lo = 5.0175421109034514e-17;
        assert!((sin3.hi - sqrt3_half_hi).abs() < 1e-18);
        assert!((sin3.lo - sqrt3_half_lo).abs() < 1e-30);
        for n in [2u32, 4, 5, 7, 9, 100, 1000] {
            let (s, c) = sin_cos_pi_over(n);
            let unit = s.mul(s).add(c.mul(c)).sub(Dd::from_f64(1.0));
            assert!(unit.value().abs() < 1e-30, "n = {n}: {}", unit.value());
            assert!((s.hi - (std::f64::consts::PI / n as f64).sin()).abs() < 1e-15);
        }
        assert!((phase(Order::Infinite).value() - Complex64::new(1.0, 0.0)).norm() == 0.0);
    }

    #[test]
    fn complex_division_matches_f64_on_tame_values() {
        let a = DdComplex::from_c64(Complex64::new(3.25, -1.5));
        let b = DdComplex::from_c64(Complex64::new(-0.75, 2.0));
        let q = a.div(b).value();
        let want = Complex64::new(3.25, -1.5) / Complex64::new(-0.75, 2.0);
        assert!((q - want).norm() < 1e-15);
    }
}

