//! Foundation types shared by every other module: bundle indices, exact
//! rationals mod 1, two-adic factorizations, and equivalence levels.
//!
//! All arithmetic is exact integer arithmetic; nothing in this crate touches
//! floating point.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

/// Errors produced by constructors and enumeration entry points.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    /// The Euler number `n` must be a positive integer.
    #[error("n must be >= 1 (got {0})")]
    EulerOutOfRange(i64),
    /// Denominators of rationals must be positive.
    #[error("denominator must be >= 1 (got {0})")]
    NonPositiveDenominator(i64),
    /// Moduli for residue counting must be positive.
    #[error("modulus must be >= 1 (got {0})")]
    NonPositiveModulus(i64),
    /// A pair of sphere-bundle indices `(k, l)` only names a bundle in this
    /// family when `k + l >= 1`.
    #[error("k + l must be >= 1 (got k = {k}, l = {l})")]
    MilnorPairOutOfRange { k: i64, l: i64 },
    /// Enumeration windows must be positive multiples of `lcm(56, n)` so that
    /// every invariant involved is periodic over the window.
    #[error("window must be a positive multiple of lcm(56, n) = {required} (got {given})")]
    WindowNotAligned { given: i64, required: i64 },
    /// Class enumeration needs a nontrivial equivalence level.
    #[error("class enumeration level must be homotopy, homeomorphism, or diffeomorphism")]
    TrivialLevel,
}

/// Index `(m, n)` of a sphere bundle: `n` is the Euler number of the bundle
/// (equivalently the order of the fourth cohomology of the total space) and
/// must be at least 1; `m` selects the twisting and may be any integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BundleIndex {
    m: i64,
    n: i64,
}

impl BundleIndex {
    /// Builds an index, rejecting `n <= 0`.
    pub fn new(m: i64, n: i64) -> Result<Self, DomainError> {
        if n < 1 {
            return Err(DomainError::EulerOutOfRange(n));
        }
        Ok(Self { m, n })
    }

    pub fn m(self) -> i64 {
        self.m
    }

    pub fn n(self) -> i64 {
        self.n
    }

    /// Factorization `n = 2^r * a` with `a` odd.
    pub fn two_factorization(self) -> TwoFactorization {
        factor_two(self.n).expect("n >= 1 by construction")
    }
}

impl fmt::Display for BundleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}, {})", self.m, self.n)
    }
}

/// `n = 2^exponent * odd_part` with `odd_part` odd and positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoFactorization {
    /// Exponent of the largest power of two dividing `n`.
    pub exponent: u32,
    /// The odd cofactor `a`.
    pub odd_part: i64,
}

impl TwoFactorization {
    /// Multiplies the factorization back together.
    pub fn reconstruct(self) -> i64 {
        (1i64 << self.exponent) * self.odd_part
    }
}

/// Splits a positive integer into its two-adic part and odd part.
pub fn factor_two(n: i64) -> Result<TwoFactorization, DomainError> {
    if n < 1 {
        return Err(DomainError::EulerOutOfRange(n));
    }
    let exponent = n.trailing_zeros();
    Ok(TwoFactorization {
        exponent,
        odd_part: n >> exponent,
    })
}

/// A rational number reduced mod 1, stored canonically: `0 <= num < den`,
/// `gcd(num, den) = 1`, `den >= 1`. Zero is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModOneRational {
    num: u64,
    den: u64,
}

impl ModOneRational {
    pub const ZERO: Self = Self { num: 0, den: 1 };

    /// Reduces `num/den` mod 1 into canonical form; rejects `den <= 0`.
    pub fn new(num: i64, den: i64) -> Result<Self, DomainError> {
        if den < 1 {
            return Err(DomainError::NonPositiveDenominator(den));
        }
        Ok(Self::from_ratio(num as i128, den as i128))
    }

    /// Canonical form of `num/den` mod 1 for an already-validated positive
    /// denominator. Internal: callers guarantee `den >= 1`.
    pub(crate) fn from_ratio(num: i128, den: i128) -> Self {
        debug_assert!(den >= 1);
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        // gcd(0, den) = den, so zero collapses to 0/1.
        Self {
            num: u64::try_from(num / g).expect("reduced numerator fits u64"),
            den: u64::try_from(den / g).expect("reduced denominator fits u64"),
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    /// Exact difference mod 1.
    pub fn sub(self, rhs: Self) -> Self {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::from_ratio(a * d - c * b, b * d)
    }

    /// Exact sum mod 1.
    pub fn add(self, rhs: Self) -> Self {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::from_ratio(a * d + c * b, b * d)
    }
}

impl Ord for ModOneRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Compare as fractions in [0, 1) by cross-multiplication.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ModOneRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModOneRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Reduces `numerator/denominator` mod 1; the free-function spelling of
/// [`ModOneRational::new`].
pub fn mod_one(numerator: i64, denominator: i64) -> Result<ModOneRational, DomainError> {
    ModOneRational::new(numerator, denominator)
}

/// How strongly two total spaces are identified. The order is meaningful:
/// each level implies every level below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquivalenceLevel {
    Distinct,
    HomotopyEquivalent,
    Homeomorphic,
    Diffeomorphic,
}

impl fmt::Display for EquivalenceLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Distinct => "distinct",
            Self::HomotopyEquivalent => "homotopy_equivalent",
            Self::Homeomorphic => "homeomorphic",
            Self::Diffeomorphic => "diffeomorphic",
        };
        f.write_str(name)
    }
}
