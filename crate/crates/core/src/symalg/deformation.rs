//! Exact two-parameter deformation expansions of trace polynomials.
//!
//! The word matrices over ℤ[μ, ζ^{±1}, ξ^{±1}] specialize to the
//! parabolic generators at ζ = ξ = 1 and to orders (p, q) at
//! ζ = e^{iπ/p}, ξ = e^{iπ/q}. Multiplying the trace-plus-two by the
//! minimal monomial ζ^{N_ζ} ξ^{N_ξ} clears negative exponents, and the
//! substitution ζ = 1 + u, ξ = 1 + v organizes the result as
//!
//! ```text
//! Σ_{i,j} a_{ij}(μ) · u^i v^j
//! ```
//!
//! with integer-coefficient `a_{ij}`. The constant part `a_00` is exactly
//! the parabolic trace polynomial, and the remaining terms quantify how
//! far a finite-order pair can move each root: the certification module
//! bounds their total size on circles around the parabolic roots.

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::farey::{FareyFraction, Generator};
use crate::order::Order;

type LaurentKey = (i32, i32, u32);
type Laurent = HashMap<LaurentKey, i128>;

/// A trace polynomial expanded in the deformation variables
/// `u = ζ − 1`, `v = ξ − 1` after minimal clearing of negative powers.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationPoly {
    terms: BTreeMap<(u32, u32), Vec<i128>>,
    n_zeta: u32,
    n_xi: u32,
}

impl DeformationPoly {
    /// The map `(i, j) → a_{ij}` of ascending integer μ-polynomials.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), Vec<i128>> {
        &self.terms
    }

    /// The constant part `a_00`, equal to the parabolic trace polynomial.
    pub fn constant_part(&self) -> &[i128] {
        self.terms
            .get(&(0, 0))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// The minimal clearing exponents `(N_ζ, N_ξ)`.
    pub fn clearing_exponents(&self) -> (u32, u32) {
        (self.n_zeta, self.n_xi)
    }

    /// Largest μ-degree over all `a_{ij}`.
    pub fn mu_degree(&self) -> usize {
        self.terms
            .values()
            .map(|poly| poly.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Largest total deformation degree `i + j`.
    pub fn max_total_uv_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    /// Evaluates `Σ a_{ij}(μ) u^i v^j`.
    pub fn eval(&self, mu: Complex64, u: Complex64, v: Complex64) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (&(i, j), poly) in &self.terms {
            let mut a = Complex64::new(0.0, 0.0);
            for &c in poly.iter().rev() {
                a = a * mu + c as f64;
            }
            total += a * u.powu(i) * v.powu(j);
        }
        total
    }

    /// Evaluates the cleared polynomial at generator orders `(p, q)`,
    /// i.e. at `u = e^{iπ/p} − 1`, `v = e^{iπ/q} − 1`.
    ///
    /// This equals `e^{iπN_ζ/p} e^{iπN_ξ/q} · P^{p,q}(μ)`, the direct
    /// trace polynomial times the clearing phase.
    pub fn eval_at_orders(&self, mu: Complex64, p: Order, q: Order) -> Complex64 {
        let u = Complex64::from_polar(1.0, p.half_angle()) - 1.0;
        let v = Complex64::from_polar(1.0, q.half_angle()) - 1.0;
        self.eval(mu, u, v)
    }
}

fn checked_add_term(map: &mut Laurent, key: LaurentKey, value: i128) -> Result<()> {
    let entry = map.entry(key).or_insert(0);
    *entry = entry.checked_add(value).ok_or(Error::Overflow)?;
    if *entry == 0 {
        map.remove(&key);
    }
    Ok(())
}

fn laurent_mul(a: &Laurent, b: &Laurent) -> Result<Laurent> {
    let mut out = Laurent::with_capacity(a.len().max(b.len()) * 2);
    for (&(za, xa, ma), &ca) in a {
        for (&(zb, xb, mb), &cb) in b {
            let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
            checked_add_term(&mut out, (za + zb, xa + xb, ma + mb), c)?;
        }
    }
    Ok(out)
}

fn laurent_add(a: &Laurent, b: &Laurent) -> Result<Laurent> {
    let mut out = a.clone();
    for (&key, &c) in b {
        checked_add_term(&mut out, key, c)?;
    }
    Ok(out)
}

type LaurentMat = [[Laurent; 2]; 2];

fn mat_mul(a: &LaurentMat, b: &LaurentMat) -> Result<LaurentMat> {
    let entry = |r: usize, c: usize| -> Result<Laurent> {
        laurent_add(
            &laurent_mul(&a[r][0], &b[0][c])?,
            &laurent_mul(&a[r][1], &b[1][c])?,
        )
    };
    Ok([[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]])
}

fn single(key: LaurentKey, value: i128) -> Laurent {
    let mut m = Laurent::new();
    m.insert(key, value);
    m
}

fn letter_matrix(generator: Generator, exponent: i8) -> LaurentMat {
    match (generator, exponent) {
        (Generator::X, 1) => [
            [single((1, 0, 0), 1), single((0, 0, 0), 1)],
            [Laurent::new(), single((-1, 0, 0), 1)],
        ],
        (Generator::X, _) => [
            [single((-1, 0, 0), 1), single((0, 0, 0), -1)],
            [Laurent::new(), single((1, 0, 0), 1)],
        ],
        (Generator::Y, 1) => [
            [single((0, 1, 0), 1), Laurent::new()],
            [single((0, 0, 1), 1), single((0, -1, 0), 1)],
        ],
        (Generator::Y, _) => [
            [single((0, -1, 0), 1), Laurent::new()],
            [single((0, 0, 1), -1), single((0, 1, 0), 1)],
        ],
    }
}

fn binomial_row(n: u32) -> Result<Vec<i128>> {
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1].checked_add(row[k]).ok_or(Error::Overflow)?;
        }
        row = next;
    }
    Ok(row)
}

/// Expands the trace polynomial of `fraction` in the deformation
/// variables, with minimal clearing of negative generator powers.
pub fn deformation_expansion(fraction: FareyFraction) -> Result<DeformationPoly> {
    let identity: LaurentMat = [
        [single((0, 0, 0), 1), Laurent::new()],
        [Laurent::new(), single((0, 0, 0), 1)],
    ];
    let mut product = identity;
    for &(generator, exponent) in fraction.word().letters() {
        let letter = letter_matrix(generator, exponent);
        product = mat_mul(&product, &letter)?;
    }

    let mut trace = laurent_add(&product[0][0], &product[1][1])?;
    checked_add_term(&mut trace, (0, 0, 0), 2)?;

    let n_zeta = trace.keys().map(|&(z, _, _)| -z).max().unwrap_or(0).max(0) as u32;
    let n_xi = trace.keys().map(|&(_, x, _)| -x).max().unwrap_or(0).max(0) as u32;

    // Substitute ζ = 1 + u, ξ = 1 + v in ζ^{N_ζ} ξ^{N_ξ} · trace.
    let mut binomials: HashMap<u32, Vec<i128>> = HashMap::new();
    let mut terms: BTreeMap<(u32, u32), Vec<i128>> = BTreeMap::new();
    for (&(z, x, m), &c) in &trace {
        let za = (z + n_zeta as i32) as u32;
        let xa = (x + n_xi as i32) as u32;
        for exp in [za, xa] {
            if !binomials.contains_key(&exp) {
                binomials.insert(exp, binomial_row(exp)?);
            }
        }
        let zb = &binomials[&za];
        let xb = &binomials[&xa];
        for (i, &bi) in zb.iter().enumerate() {
            let ci = c.checked_mul(bi).ok_or(Error::Overflow)?;
            for (j, &bj) in xb.iter().enumerate() {
                let cij = ci.checked_mul(bj).ok_or(Error::Overflow)?;
                let poly = terms.entry((i as u32, j as u32)).or_default();
                if poly.len() <= m as usize {
                    poly.resize(m as usize + 1, 0);
                }
                poly[m as usize] = poly[m as usize].checked_add(cij).ok_or(Error::Overflow)?;
            }
        }
    }
    terms.retain(|_, poly| {
        while poly.len() > 1 && *poly.last().unwrap() == 0 {
            poly.pop();
        }
        poly.iter().any(|&c| c != 0)
    });

    Ok(DeformationPoly {
        terms,
        n_zeta,
        n_xi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::matrix::{parabolic_integer_polynomial, trace_polynomial};

    fn frac(s: &str) -> FareyFraction {
        s.parse().unwrap()
    }

    #[test]
    fn half_expansion_structure() {
        let d = deformation_expansion(frac("1/2")).unwrap();
        assert_eq!(d.clearing_exponents(), (1, 1));
        assert_eq!(d.constant_part(), &[4, 0, 1]);
        assert_eq!(d.terms().len(), 7);
        assert_eq!(d.max_total_uv_degree(), 4);
    }

    #[test]
    fn two_thirds_expansion_structure() {
        let d = deformation_expansion(frac("2/3")).unwrap();
        assert_eq!(d.clearing_exponents(), (2, 2));
        assert_eq!(d.constant_part(), &[4, 1, -2, 1]);
        assert_eq!(d.terms().len(), 20);
        assert_eq!(d.max_total_uv_degree(), 6);
    }

    #[test]
    fn constant_part_is_parabolic_polynomial() {
        for name in ["1/2", "2/3", "3/5", "5/8", "7/12"] {
            let f = frac(name);
            let d = deformation_expansion(f).unwrap();
            assert_eq!(
                d.constant_part(),
                parabolic_integer_polynomial(f).unwrap().as_slice(),
                "{name}"
            );
        }
    }

    #[test]
    fn cleared_evaluation_matches_direct_trace() {
        let f = frac("10/17");
        let d = deformation_expansion(f).unwrap();
        let (p, q) = (Order::Finite(7), Order::Finite(9));
        let (nz, nx) = d.clearing_exponents();
        let direct = trace_polynomial(f, p, q);
        let phase = Complex64::from_polar(1.0, p.half_angle() * nz as f64)
            * Complex64::from_polar(1.0, q.half_angle() * nx as f64);
        for step in 0..5 {
            let mu = Complex64::new(0.4 * step as f64 - 0.8, 0.5 - 0.25 * step as f64);
            let expanded = d.eval_at_orders(mu, p, q);
            let reference = phase * direct.eval(mu);
            assert!(
                (expanded - reference).norm() <= 1e-10 * reference.norm().max(1.0),
                "mismatch at {mu}"
            );
        }
    }

    #[test]
    fn deformation_size_limits() {
        let d = deformation_expansion(frac("10/17")).unwrap();
        assert_eq!(d.clearing_exponents(), (10, 10));
        assert_eq!(d.terms().len(), 364);
        assert_eq!(d.mu_degree(), 17);
        assert_eq!(d.max_total_uv_degree(), 34);
    }
}
