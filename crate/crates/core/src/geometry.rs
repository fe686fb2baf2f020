//! Closed-form hyperbolic geometry of axis pairs.
//!
//! Everything here is scalar: the commutator parameters β and γ, the
//! complex distance δ + iθ between axes, the attained first point δ1 of
//! the distance spectrum, triangle-group axis distances, their Fuchsian
//! counterparts, and the closed form for the largest spectral gap.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::Order;

/// Complex distance between two axes: hyperbolic length `delta` and
/// rotation angle `theta` of the common perpendicular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexDistance {
    pub delta: f64,
    pub theta: f64,
}

/// The scalar data of an axis pair: both betas, the commutator gamma,
/// and the complex distance they determine.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxialGeometry {
    pub beta_f: Complex64,
    pub beta_g: Complex64,
    pub gamma: Complex64,
    pub distance: ComplexDistance,
}

/// Builds the full geometry of an axis pair, checking the defining
/// identity `4γ = β_f β_g sinh²(δ + iθ)` to 1e−10.
pub fn axial_geometry(
    gamma: Complex64,
    beta_f: Complex64,
    beta_g: Complex64,
) -> Result<AxialGeometry> {
    let distance = complex_distance(gamma, beta_f, beta_g)?;
    let z = Complex64::new(distance.delta, distance.theta);
    let residual = (4.0 * gamma - beta_f * beta_g * z.sinh().powu(2)).norm();
    if residual > 1e-10 * (1.0 + 4.0 * gamma.norm()) {
        return Err(Error::Certification(format!(
            "complex distance does not reproduce gamma, residual {residual:.3e}"
        )));
    }
    Ok(AxialGeometry {
        beta_f,
        beta_g,
        gamma,
        distance,
    })
}

/// `β` of a primitive elliptic of the given order: `−4 sin²(π/p)`,
/// degenerating to 0 for a parabolic.
pub fn beta_of_order(p: Order) -> Complex64 {
    Complex64::new(p.beta(), 0.0)
}

/// `γ(μ) = μ(μ − 4 sin(π/p) sin(π/q))`, the commutator parameter of the
/// normalized generator pair at trace parameter `μ`.
pub fn gamma_from_mu(mu: Complex64, p: Order, q: Order) -> Complex64 {
    mu * (mu - 4.0 * p.sin_pi_over() * q.sin_pi_over())
}

fn beta_product(beta_f: Complex64, beta_g: Complex64) -> Result<Complex64> {
    let product = beta_f * beta_g;
    if product.norm() == 0.0 {
        if beta_f.norm() == 0.0 && beta_g.norm() == 0.0 {
            return Err(Error::BothParabolic);
        }
        return Err(Error::UnsupportedPair(
            "cosh(2δ) is undefined when one generator is parabolic".into(),
        ));
    }
    Ok(product)
}

/// `cosh(2δ) = |4γ/(β_f β_g) + 1| + |4γ/(β_f β_g)|` for loxodromic or
/// elliptic pairs with nonzero betas.
pub fn cosh_two_delta(gamma: Complex64, beta_f: Complex64, beta_g: Complex64) -> Result<f64> {
    let w = 4.0 * gamma / beta_product(beta_f, beta_g)?;
    Ok((w + 1.0).norm() + w.norm())
}

/// Solves `sinh²(δ + iθ) = 4γ/(β_f β_g)` on the branch `δ ≥ 0`,
/// `θ ∈ (−π/2, π/2] ⊂ (−π, π]`.
pub fn complex_distance(
    gamma: Complex64,
    beta_f: Complex64,
    beta_g: Complex64,
) -> Result<ComplexDistance> {
    let w = 4.0 * gamma / beta_product(beta_f, beta_g)?;
    // sinh²(z) = w  ⟺  cosh(2z) = 1 + 2w; acosh picks Re ≥ 0.
    let z = (Complex64::new(1.0, 0.0) + 2.0 * w).acosh() / 2.0;
    Ok(ComplexDistance {
        delta: z.re.max(0.0),
        theta: z.im,
    })
}

/// The paper-verbatim values of `2 sin(π/p) sin(π/q) cosh δ1(p, q)` for
/// `2 ≤ p ≤ q ≤ 6`; everything larger follows a closed form.
const DELTA_ONE_TABLE: [((u32, u32), f64); 14] = [
    ((2, 3), 1.765),
    ((2, 4), 1.538),
    ((2, 5), 1.300),
    ((2, 6), 1.224),
    ((3, 3), 1.618),
    ((3, 4), std::f64::consts::SQRT_2),
    ((3, 5), 1.401),
    ((3, 6), 1.0),
    ((4, 4), 1.366),
    ((4, 5), 1.0),
    ((4, 6), 1.0),
    ((5, 5), 1.0),
    ((5, 6), 1.0),
    ((6, 6), 1.0),
];

/// The constant `2 sin(π/p) sin(π/q) cosh δ1(p, q)`: stored for
/// `2 ≤ p ≤ q ≤ 6`, closed-form when `max(p, q) ≥ 7`.
pub fn delta_one_constant(p: Order, q: Order) -> Result<f64> {
    let (Order::Finite(a), Order::Finite(b)) = (p, q) else {
        return Err(Error::UnsupportedPair(
            "δ1 requires both generators elliptic of finite order".into(),
        ));
    };
    let (lo, hi) = (a.min(b), a.max(b));
    if (lo, hi) == (2, 2) {
        return Err(Error::UnsupportedPair(
            "the infimum is not attained for two half-turns".into(),
        ));
    }
    if hi <= 6 {
        return DELTA_ONE_TABLE
            .iter()
            .find(|(k, _)| *k == (lo, hi))
            .map(|&(_, v)| v)
            .ok_or_else(|| Error::UnsupportedPair(format!("no stored δ1 entry for ({lo},{hi})")));
    }
    let angle = std::f64::consts::PI / hi as f64;
    Ok(if lo == 3 {
        angle.cos()
    } else if lo == hi {
        (2.0 * angle).cos()
    } else {
        1.0
    })
}

/// The first point `δ1(p, q)` of the axial distance spectrum.
pub fn delta_one(p: Order, q: Order) -> Result<f64> {
    let c = delta_one_constant(p, q)?;
    Ok((c / (2.0 * p.sin_pi_over() * q.sin_pi_over())).acosh())
}

fn cos_pi_over(r: Order) -> f64 {
    match r {
        Order::Finite(n) => (std::f64::consts::PI / f64::from(n)).cos(),
        Order::Infinite => 1.0,
    }
}

/// Exact test of `1/r < 1 − 1/p − 1/q`, cleared of denominators so the
/// boundary cases like (2, 3, 6) are decided without rounding.
fn is_hyperbolic(p: u32, q: u32, r: Order) -> bool {
    let (p, q) = (u128::from(p), u128::from(q));
    match r {
        Order::Finite(r) => {
            let r = u128::from(r);
            p * q + r * q + r * p < p * q * r
        }
        Order::Infinite => p + q < p * q,
    }
}

/// Distance between the order-`p` and order-`q` vertex axes of the
/// hyperbolic `(p, q, r)` triangle group; `r = ∞` gives the free-product
/// bound.
pub fn triangle_axis_distance(p: Order, q: Order, r: Order) -> Result<f64> {
    let (Order::Finite(a), Order::Finite(b)) = (p, q) else {
        return Err(Error::UnsupportedPair(
            "triangle vertex orders must be finite".into(),
        ));
    };
    if !is_hyperbolic(a, b, r) {
        return Err(Error::NotHyperbolic(
            p.to_string(),
            q.to_string(),
            r.to_string(),
        ));
    }
    let value =
        (cos_pi_over(r) + cos_pi_over(p) * cos_pi_over(q)) / (p.sin_pi_over() * q.sin_pi_over());
    Ok(value.acosh())
}

/// The Fuchsian spectrum endpoints for orders `(p, q)`: the attained
/// first point `Δ1` with its minimizing triangle order, and the
/// free-generation threshold `Δ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuchsianDeltas {
    pub delta_one: f64,
    pub minimizing_r: u32,
    pub delta_infinity: f64,
}

/// Computes `Δ1(p, q) = min_r` of the triangle distance over admissible
/// integer `r` (attained at the smallest, since the distance increases
/// with `r`) together with `Δ∞(p, q)`, the `r = ∞` value.
pub fn fuchsian_deltas(p: Order, q: Order) -> Result<FuchsianDeltas> {
    let (Order::Finite(a), Order::Finite(b)) = (p, q) else {
        return Err(Error::UnsupportedPair(
            "Fuchsian spectrum endpoints require finite orders".into(),
        ));
    };
    let product = u64::from(a) * u64::from(b);
    let sum = u64::from(a) + u64::from(b);
    if product <= sum {
        return Err(Error::NotHyperbolic(
            p.to_string(),
            q.to_string(),
            "any finite order".into(),
        ));
    }
    // 1/r < 1 − 1/p − 1/q  ⟺  r > pq/(pq − p − q).
    let minimizing_r = u32::try_from(product / (product - sum) + 1).map_err(|_| Error::Overflow)?;
    Ok(FuchsianDeltas {
        delta_one: triangle_axis_distance(p, q, Order::Finite(minimizing_r))?,
        minimizing_r,
        delta_infinity: triangle_axis_distance(p, q, Order::Infinite)?,
    })
}

/// The largest gap in the Fuchsian spectrum, `Δ∞(3,7) − Δ1(3,7)`,
/// evaluated from its trigonometric closed form as `arccosh Δ`.
pub fn gap_closed_form() -> f64 {
    let t = std::f64::consts::PI / 7.0;
    let cot = t.cos() / t.sin();
    let csc = 1.0 / t.sin();
    let delta = (cot * cot + 2.0 * cot * csc
        - ((2.0 * (3.0 * std::f64::consts::PI / 14.0).sin() - 1.0).sqrt()
            * (1.0 + 2.0 * t.cos())
            * csc
            * csc))
        / 3.0;
    delta.acosh()
}
