//! Cantor-set digit arithmetic, the Cantor-Lebesgue function and Lebesgue's
//! space-filling curve.
//!
//! Every operation works on a finite [`TernaryExpansion`] of its argument.
//! Inputs are read exactly: an `f64` is the dyadic rational it stores and a
//! [`Ratio`] is taken at face value, so terminating expansions such as
//! `1/3 = 0.1₃` are recognised and rewritten to their Cantor form `0.0222…₃`.

use alloc::vec::Vec;

use num_rational::Ratio;

use crate::dyadic::{check_unit, UnitPoint};
use crate::error::{Error, Result};

/// Default number of binary output digits.
pub const DEFAULT_PRECISION: u32 = 32;

/// Largest supported precision. Curve points consume two ternary digits per
/// binary digit, and gap endpoints `n / 3^m` must fit in a `u64`.
pub const MAX_PRECISION: u32 = 40;

/// What follows the stored digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tail {
    /// The expansion terminates.
    Zeros,
    /// Every further digit is 2.
    Twos,
    /// The expansion continues but was not extracted.
    Truncated,
}

/// The leading ternary digits of a number in `[0, 1]`, most significant
/// first, in canonical form: a terminating expansion whose last nonzero
/// digit is its only 1 is rewritten to end in repeated 2s instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryExpansion {
    digits: Vec<u8>,
    tail: Tail,
}

impl TernaryExpansion {
    /// Builds an expansion from explicit digits. Digits must be 0, 1 or 2.
    pub fn from_digits(digits: Vec<u8>, tail: Tail) -> Self {
        debug_assert!(digits.iter().all(|&d| d < 3));
        Self { digits, tail }
    }

    /// Extracts `count` digits of `num / den`, where `num <= den` and
    /// `3 * den` fits a `u128`.
    fn of_fraction(mut num: u128, den: u128, count: usize) -> Self {
        debug_assert!(num <= den && den > 0);
        if num == den {
            return Self { digits: alloc::vec![2; count], tail: Tail::Twos };
        }
        let mut digits = Vec::with_capacity(count);
        while digits.len() < count && num != 0 {
            num *= 3;
            digits.push((num / den) as u8);
            num %= den;
        }
        if num != 0 {
            return Self { digits, tail: Tail::Truncated };
        }
        let mut expansion = Self { digits, tail: Tail::Zeros };
        expansion.canonicalize(count);
        expansion.digits.resize(count, if expansion.tail == Tail::Twos { 2 } else { 0 });
        expansion
    }

    /// `…d1000…` becomes `…d0222…` when that removes the only 1.
    fn canonicalize(&mut self, count: usize) {
        let Some(last) = self.digits.iter().rposition(|&d| d != 0) else {
            return;
        };
        if self.digits[last] == 1 && !self.digits[..last].contains(&1) {
            self.digits[last] = 0;
            self.digits.resize(count.max(last + 1), 2);
            self.tail = Tail::Twos;
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The first `count` digits, with the tail recomputed from the rest.
    pub fn truncated(&self, count: usize) -> Self {
        if count >= self.digits.len() {
            return self.clone();
        }
        let rest = &self.digits[count..];
        let tail = match self.tail {
            Tail::Zeros if rest.iter().all(|&d| d == 0) => Tail::Zeros,
            Tail::Twos if rest.iter().all(|&d| d == 2) => Tail::Twos,
            _ => Tail::Truncated,
        };
        Self { digits: self.digits[..count].to_vec(), tail }
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    /// One-based position of the first digit 1, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.digits.iter().position(|&d| d == 1).map(|p| p + 1)
    }

    /// Cantor-admissible at the stored precision: no digit is 1.
    pub fn is_cantor(&self) -> bool {
        self.first_one().is_none()
    }

    /// `Σ (d_j / 2) 2^-j` over the stored digits, plus the exact tail value.
    /// Only meaningful for Cantor-admissible digits.
    fn halved_binary(digits: impl Iterator<Item = u8>, tail: Tail) -> f64 {
        let mut value = 0.0;
        let mut weight = 0.5;
        for d in digits {
            if d == 2 {
                value += weight;
            }
            weight *= 0.5;
        }
        if tail == Tail::Twos {
            // 0.0…0111…₂ with the ones starting after the last stored digit.
            value += 2.0 * weight;
        }
        value
    }
}

/// A number in `[0, 1]` whose ternary digits can be read exactly.
pub trait UnitReal: Copy {
    fn ternary(self, count: usize) -> Result<TernaryExpansion>;

    fn to_f64(self) -> f64;
}

impl UnitReal for f64 {
    fn ternary(self, count: usize) -> Result<TernaryExpansion> {
        check_unit("x", self)?;
        if self == 1.0 {
            return Ok(TernaryExpansion::of_fraction(1, 1, count));
        }
        if self == 0.0 {
            return Ok(TernaryExpansion::of_fraction(0, 1, count));
        }
        // self = mantissa * 2^-shift exactly.
        let bits = self.to_bits();
        let exponent = ((bits >> 52) & 0x7ff) as i32;
        let (mantissa, shift) = if exponent == 0 {
            (bits & ((1 << 52) - 1), 1074)
        } else {
            ((bits & ((1 << 52) - 1)) | (1 << 52), 1075 - exponent)
        };
        let (mut num, mut shift) = (u128::from(mantissa), shift as u32);
        let trailing = num.trailing_zeros().min(shift);
        num >>= trailing;
        shift -= trailing;
        // Keep 3 * den inside a u128. Values this small (< 2^-70) lose only
        // digits far below any supported precision.
        const MAX_SHIFT: u32 = 124;
        if shift > MAX_SHIFT {
            num >>= shift - MAX_SHIFT;
            shift = MAX_SHIFT;
        }
        Ok(TernaryExpansion::of_fraction(num, 1u128 << shift, count))
    }

    fn to_f64(self) -> f64 {
        self
    }
}

impl UnitReal for Ratio<u64> {
    fn ternary(self, count: usize) -> Result<TernaryExpansion> {
        if *self.denom() == 0 || self.numer() > self.denom() {
            return Err(Error::OutsideUnitInterval { name: "x", value: self.to_f64() });
        }
        Ok(TernaryExpansion::of_fraction(
            u128::from(*self.numer()),
            u128::from(*self.denom()),
            count,
        ))
    }

    fn to_f64(self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

fn check_precision(precision: u32) -> Result<()> {
    if precision > MAX_PRECISION {
        return Err(Error::PrecisionTooLarge { precision, max: MAX_PRECISION });
    }
    Ok(())
}

#[inline]
fn pow3(exp: u32) -> u64 {
    3u64.pow(exp)
}

/// A removed middle-third interval `(a, b)` of the Cantor set, with
/// `a = lower / 3^depth` and `b = (lower + 1) / 3^depth`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CantorGap {
    lower: u64,
    depth: u32,
}

impl CantorGap {
    /// Gap whose endpoints share the Cantor-admissible `prefix` and differ in
    /// the next digit (`…1` against `…2`).
    fn after_prefix(prefix: &[u8]) -> Self {
        let lower = prefix.iter().fold(0u64, |acc, &d| acc * 3 + u64::from(d)) * 3 + 1;
        Self { lower, depth: prefix.len() as u32 + 1 }
    }

    /// Number of ternary digits fixed by the gap (its width is `3^-depth`).
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn lower(&self) -> Ratio<u64> {
        Ratio::new(self.lower, pow3(self.depth))
    }

    pub fn upper(&self) -> Ratio<u64> {
        Ratio::new(self.lower + 1, pow3(self.depth))
    }

    pub fn width(&self) -> Ratio<u64> {
        Ratio::new(1, pow3(self.depth))
    }

    /// Ternary digits shared by both endpoints.
    fn prefix(&self) -> Vec<u8> {
        let mut digits = Vec::with_capacity(self.depth as usize);
        let mut rest = self.lower / 3;
        for _ in 1..self.depth {
            digits.push((rest % 3) as u8);
            rest /= 3;
        }
        digits.reverse();
        digits
    }

    /// Canonical expansion of `a`: prefix, 0, then 2s.
    pub fn lower_expansion(&self, count: usize) -> TernaryExpansion {
        let mut digits = self.prefix();
        digits.push(0);
        digits.resize(count.max(digits.len()), 2);
        TernaryExpansion::from_digits(digits, Tail::Twos)
    }

    /// Expansion of `b`: prefix, 2, then 0s.
    pub fn upper_expansion(&self, count: usize) -> TernaryExpansion {
        let mut digits = self.prefix();
        digits.push(2);
        digits.resize(count.max(digits.len()), 0);
        TernaryExpansion::from_digits(digits, Tail::Zeros)
    }

    pub fn contains(&self, x: f64) -> bool {
        let scale = pow3(self.depth) as f64;
        x * scale > self.lower as f64 && x * scale < (self.lower + 1) as f64
    }
}

fn gap_in(expansion: &TernaryExpansion) -> Option<CantorGap> {
    let position = expansion.first_one()?;
    Some(CantorGap::after_prefix(&expansion.digits()[..position - 1]))
}

/// Number of ternary digits scanned by [`gap_of`]; `3^40` still fits a `u64`.
pub const GAP_SCAN_DIGITS: usize = 40;

/// The removed middle third containing `x`, or `None` if `x` lies in the
/// Cantor set to [`GAP_SCAN_DIGITS`] digits.
pub fn gap_of<X: UnitReal>(x: X) -> Result<Option<CantorGap>> {
    Ok(gap_in(&x.ternary(GAP_SCAN_DIGITS)?))
}

/// The Cantor-Lebesgue function, accurate to `2^-precision`.
///
/// On the Cantor set the ternary digits are halved into binary digits; on a
/// removed gap the function is constant and equals its value at either
/// endpoint.
pub fn cantor_lebesgue<X: UnitReal>(x: X, precision: u32) -> Result<f64> {
    check_precision(precision)?;
    let count = precision as usize;
    let expansion = x.ternary(count)?;
    let expansion = match gap_in(&expansion) {
        Some(gap) => gap.lower_expansion(count),
        None => expansion,
    };
    Ok(TernaryExpansion::halved_binary(
        expansion.digits.iter().copied(),
        expansion.tail,
    ))
}

fn split_point(expansion: &TernaryExpansion) -> UnitPoint {
    let digits = expansion.digits();
    let x = TernaryExpansion::halved_binary(digits.iter().step_by(2).copied(), expansion.tail);
    let y = TernaryExpansion::halved_binary(
        digits.iter().skip(1).step_by(2).copied(),
        expansion.tail,
    );
    UnitPoint { x, y }
}

/// Lebesgue's curve on the Cantor set: halved ternary digits at odd
/// positions form the first coordinate, those at even positions the second.
/// Each coordinate is accurate to `2^-precision`.
pub fn lebesgue_point<X: UnitReal>(x: X, precision: u32) -> Result<UnitPoint> {
    check_precision(precision)?;
    let expansion = x.ternary(2 * precision as usize)?;
    if let Some(position) = expansion.first_one() {
        return Err(Error::NotInCantorSet { position });
    }
    Ok(split_point(&expansion))
}

/// Extra digits read past the gap position to place a point inside it.
const GAP_FRACTION_DIGITS: usize = 36;

/// Lebesgue's curve extended to all of `[0, 1]` by joining the images of
/// each gap's endpoints with a straight segment.
pub fn lebesgue_extended<X: UnitReal>(t: X, precision: u32) -> Result<UnitPoint> {
    check_precision(precision)?;
    let count = 2 * precision as usize;
    let expansion = t.ternary(count + GAP_FRACTION_DIGITS)?;
    let head = expansion.truncated(count);
    let Some(gap) = gap_in(&head) else {
        return Ok(split_point(&head));
    };
    let start = split_point(&gap.lower_expansion(count));
    let end = split_point(&gap.upper_expansion(count));
    // Relative position inside the gap: the digits after the first 1.
    let tail_value = if expansion.tail == Tail::Twos { 1.0 } else { 0.0 };
    let lambda = expansion.digits[gap.depth() as usize..]
        .iter()
        .rev()
        .fold(tail_value, |acc, &d| (acc + f64::from(d)) / 3.0);
    Ok(UnitPoint {
        x: start.x + lambda * (end.x - start.x),
        y: start.y + lambda * (end.y - start.y),
    })
}
