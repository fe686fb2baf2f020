//! Farey fractions, their sign sequences, and the alternating words they
//! label.
//!
//! A reduced fraction `r/s` in (0, 1) encodes a word of length `2s` that
//! alternates between the two group generators `X` and `Y`, with exponent
//! signs read off the sequence `e_k = (−1)^⌊k·r/s⌋` for `k = 0, …, 2s−1`.
//! The trace polynomial of that word has degree `s`, and its roots
//! parametrize boundary groups of the relevant parameter space.
//!
//! Complementary fractions `r/s` and `(s−r)/s` yield words whose trace
//! polynomials are related by the substitution `μ ↦ 4 sin(π/p) sin(π/q) − μ`,
//! which leaves the commutator parameter `γ = μ(μ − 4 sin(π/p) sin(π/q))`
//! invariant. Searches over commutator data therefore only need one
//! representative per complementary pair; `canonical` picks the one in
//! `[1/2, 1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A reduced fraction `r/s` with `0 < r < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FareyFraction {
    num: u32,
    den: u32,
}

impl FareyFraction {
    /// Builds a fraction, rejecting values outside (0, 1) and non-reduced
    /// numerator/denominator pairs.
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || num >= den {
            return Err(Error::InvalidFraction(format!(
                "{num}/{den} is not in the open interval (0, 1)"
            )));
        }
        if num.gcd(&den) != 1 {
            return Err(Error::InvalidFraction(format!("{num}/{den} is not reduced")));
        }
        Ok(FareyFraction { num, den })
    }

    /// Numerator `r`.
    pub fn num(self) -> u32 {
        self.num
    }

    /// Denominator `s`; also the degree of the trace polynomial and half
    /// the word length.
    pub fn den(self) -> u32 {
        self.den
    }

    /// The complementary fraction `(s−r)/s`.
    pub fn mirror(self) -> Self {
        FareyFraction {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// Whether this is the representative in `[1/2, 1)` of its
    /// complementary pair.
    pub fn is_canonical(self) -> bool {
        2 * self.num >= self.den
    }

    /// The representative in `[1/2, 1)` of the complementary pair
    /// `{r/s, (s−r)/s}`.
    pub fn canonical(self) -> Self {
        if self.is_canonical() {
            self
        } else {
            self.mirror()
        }
    }

    /// The sign sequence `e_k = (−1)^⌊k·r/s⌋` for `k = 0, …, 2s−1`.
    pub fn sign_sequence(self) -> Vec<i8> {
        let r = u64::from(self.num);
        let s = u64::from(self.den);
        (0..2 * s)
            .map(|k| if (k * r / s) % 2 == 0 { 1 } else { -1 })
            .collect()
    }

    /// The alternating word labelled by this fraction.
    pub fn word(self) -> FareyWord {
        let signs = self.sign_sequence();
        let letters = signs
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let generator = if i % 2 == 0 { Generator::X } else { Generator::Y };
                (generator, e)
            })
            .collect();
        FareyWord { letters }
    }
}

impl fmt::Display for FareyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for FareyFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidFraction(format!("{s:?} is not of the form r/s")))?;
        let num: u32 = num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidFraction(format!("bad numerator in {s:?}")))?;
        let den: u32 = den
            .trim()
            .parse()
            .map_err(|_| Error::InvalidFraction(format!("bad denominator in {s:?}")))?;
        FareyFraction::new(num, den)
    }
}

impl PartialOrd for FareyFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by (denominator, numerator), the enumeration order of the
/// search pipeline.
impl Ord for FareyFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.den, self.num).cmp(&(other.den, other.num))
    }
}

impl Serialize for FareyFraction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FareyFraction {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

/// One of the two group generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X => write!(f, "X"),
            Generator::Y => write!(f, "Y"),
        }
    }
}

/// An alternating word in the generators, starting with `X`, with
/// exponents ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyWord {
    letters: Vec<(Generator, i8)>,
}

impl FareyWord {
    /// The letters with their exponents, in left-to-right order.
    pub fn letters(&self) -> &[(Generator, i8)] {
        &self.letters
    }

    /// Word length (twice the fraction's denominator).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True only for the empty word, which no fraction produces.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for FareyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (generator, exponent)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *exponent == 1 {
                write!(f, "{generator}")?;
            } else {
                write!(f, "{generator}^-1")?;
            }
        }
        Ok(())
    }
}

/// The first `count` reduced fractions in (0, 1), ordered by
/// (denominator, numerator).
///
/// The listing starts `1/2, 1/3, 2/3, 1/4, 3/4, …` and any prefix of a
/// longer listing equals the shorter listing.
pub fn enumerate_fractions(count: usize) -> Vec<FareyFraction> {
    let mut out = Vec::with_capacity(count);
    let mut den = 2u32;
    while out.len() < count {
        for num in 1..den {
            if num.gcd(&den) == 1 {
                out.push(FareyFraction { num, den });
                if out.len() == count {
                    return out;
                }
            }
        }
        den += 1;
    }
    out
}

/// All reduced fractions in (0, 1) with denominator at most `order`,
/// ordered by (denominator, numerator).
pub fn fractions_up_to_order(order: u32) -> Vec<FareyFraction> {
    let mut out = Vec::new();
    for den in 2..=order {
        for num in 1..den {
            if num.gcd(&den) == 1 {
                out.push(FareyFraction { num, den });
            }
        }
    }
    out
}

/// The fractions of [`fractions_up_to_order`] restricted to one
/// representative per complementary pair, the one in `[1/2, 1)`.
pub fn canonical_fractions_up_to_order(order: u32) -> Vec<FareyFraction> {
    fractions_up_to_order(order)
        .into_iter()
        .filter(|f| f.is_canonical())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unreduced_and_out_of_range() {
        assert!(FareyFraction::new(2, 4).is_err());
        assert!(FareyFraction::new(0, 5).is_err());
        assert!(FareyFraction::new(5, 5).is_err());
        assert!(FareyFraction::new(7, 5).is_err());
        assert!(FareyFraction::new(2, 5).is_ok());
    }

    #[test]
    fn sign_sequence_matches_known_short_case() {
        let f = FareyFraction::new(2, 3).unwrap();
        assert_eq!(f.sign_sequence(), vec![1, 1, -1, 1, 1, -1]);
    }

    #[test]
    fn sign_sequence_matches_known_long_case() {
        let f = FareyFraction::new(10, 17).unwrap();
        let expected: Vec<i8> = vec![
            1, 1, -1, -1, 1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1, 1, 1, -1, -1, 1, 1, -1, 1,
            1, -1, -1, 1, -1, -1, 1, 1, -1,
        ];
        assert_eq!(f.sign_sequence(), expected);
    }

    #[test]
    fn word_renders_with_exponents() {
        let f = FareyFraction::new(2, 3).unwrap();
        assert_eq!(f.word().to_string(), "X Y X^-1 Y X Y^-1");
    }

    #[test]
    fn word_alternates_and_has_even_length() {
        for f in enumerate_fractions(50) {
            let word = f.word();
            assert_eq!(word.len(), 2 * f.den() as usize);
            for (i, (generator, exponent)) in word.letters().iter().enumerate() {
                let expected = if i % 2 == 0 { Generator::X } else { Generator::Y };
                assert_eq!(*generator, expected);
                assert!(*exponent == 1 || *exponent == -1);
            }
        }
    }

    #[test]
    fn enumeration_prefixes_and_examples() {
        let one = enumerate_fractions(1);
        assert_eq!(one, vec![FareyFraction::new(1, 2).unwrap()]);

        let five = enumerate_fractions(5);
        let expected: Vec<FareyFraction> = ["1/2", "1/3", "2/3", "1/4", "3/4"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(five, expected);

        let big = enumerate_fractions(257);
        assert_eq!(big[..5], five[..]);
        assert!(big.last().unwrap().den() >= 23);
        assert_eq!(*big.last().unwrap(), FareyFraction::new(16, 29).unwrap());
    }

    #[test]
    fn order_listing_has_totient_counts() {
        let fractions = fractions_up_to_order(10);
        // Σ φ(s) for s = 2..10 is 1+2+2+4+2+6+4+6+4 = 31.
        assert_eq!(fractions.len(), 31);
        assert!(fractions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_listing_halves_up_to_self_mirror() {
        let all = fractions_up_to_order(29);
        let canonical = canonical_fractions_up_to_order(29);
        // 1/2 is its own mirror; every other pair contributes one entry.
        assert_eq!(canonical.len(), (all.len() - 1) / 2 + 1);
        for f in &all {
            assert!(canonical.contains(&f.canonical()));
        }
    }

    #[test]
    fn mirror_round_trips() {
        for f in enumerate_fractions(100) {
            assert_eq!(f.mirror().mirror(), f);
            assert_eq!(f.canonical(), f.mirror().canonical());
            assert!(f.canonical().is_canonical());
        }
    }

    #[test]
    fn parses_and_displays() {
        let f: FareyFraction = "23/29".parse().unwrap();
        assert_eq!(f.to_string(), "23/29");
        assert!("3".parse::<FareyFraction>().is_err());
        assert!("4/6".parse::<FareyFraction>().is_err());
    }
}
