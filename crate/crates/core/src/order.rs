//! Elliptic generator orders, including the parabolic limit.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The order of a generating elliptic element, or the parabolic limit
/// reached as the order grows without bound.
///
/// Finite orders are at least 2. The parabolic case corresponds to a
/// generator with trace ±2 and rotation angle zero; trigonometric data
/// degenerate accordingly (`sin_pi_over` and `beta` are both zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    /// Elliptic of the given finite order `p >= 2`, rotation angle `2π/p`.
    Finite(u32),
    /// Parabolic limit (`p → ∞`).
    Infinite,
}

impl Order {
    /// Validates and wraps a finite order.
    pub fn finite(p: u32) -> Result<Self, Error> {
        if p < 2 {
            return Err(Error::OrderTooSmall(p));
        }
        Ok(Order::Finite(p))
    }

    /// Returns `true` for the parabolic limit.
    pub fn is_infinite(self) -> bool {
        matches!(self, Order::Infinite)
    }

    /// `sin(π/p)`, continuously extended to 0 at the parabolic limit.
    pub fn sin_pi_over(self) -> f64 {
        match self {
            Order::Finite(p) => (std::f64::consts::PI / f64::from(p)).sin(),
            Order::Infinite => 0.0,
        }
    }

    /// Half rotation angle `π/p`, extended to 0 at the parabolic limit.
    pub fn half_angle(self) -> f64 {
        match self {
            Order::Finite(p) => std::f64::consts::PI / f64::from(p),
            Order::Infinite => 0.0,
        }
    }

    /// `β = tr² − 4 = −4 sin²(π/p)` for an elliptic of this order;
    /// 0 in the parabolic case.
    pub fn beta(self) -> f64 {
        let s = self.sin_pi_over();
        -4.0 * s * s
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(p) => write!(f, "{p}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" | "∞" => Ok(Order::Infinite),
            other => {
                let p: u32 = other
                    .parse()
                    .map_err(|_| Error::UnsupportedPair(format!("unparseable order {other:?}")))?;
                Order::finite(p)
            }
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}
