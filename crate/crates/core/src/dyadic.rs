//! Quartic intervals and dyadic squares.
//!
//! A generation-`k` quartic interval is `[i/4^k, (i+1)/4^k]`; a generation-`k`
//! dyadic square is a closed cell of the `2^k x 2^k` grid on the unit square,
//! with `y` counted upward from the bottom edge. Both are handled purely as
//! integer `(generation, index)` pairs; real endpoints are derived on demand.

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Deepest generation representable: `4^31 = 2^62` still fits a `u64`.
pub const MAX_GENERATION: u32 = 31;

fn check_generation(generation: u32) -> Result<()> {
    if generation > MAX_GENERATION {
        return Err(Error::GenerationTooLarge { generation, max: MAX_GENERATION });
    }
    Ok(())
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutsideUnitInterval { name, value })
    }
}

/// `4^generation`, the number of cells in a generation.
#[inline]
pub const fn cell_count(generation: u32) -> u64 {
    1u64 << (2 * generation)
}

/// A closed interval `[index/4^generation, (index+1)/4^generation]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuarticInterval {
    generation: u32,
    index: u64,
}

impl QuarticInterval {
    /// The whole of `[0, 1]`.
    pub const ROOT: Self = Self { generation: 0, index: 0 };

    pub fn new(generation: u32, index: u64) -> Result<Self> {
        check_generation(generation)?;
        if index >= cell_count(generation) {
            return Err(Error::IndexOutOfRange { generation, index });
        }
        Ok(Self { generation, index })
    }

    /// Returns the generation-`generation` interval containing `t`.
    ///
    /// Interior boundary points `i/4^k` belong to the interval they start
    /// (index `i`); `t = 1` belongs to the last interval. Taken over all
    /// generations these choices form a single chain for every `t`.
    pub fn containing(t: f64, generation: u32) -> Result<Self> {
        check_unit("t", t)?;
        check_generation(generation)?;
        let count = cell_count(generation);
        // Scaling by a power of two is exact, so floor() is the true index.
        let index = libm::floor(t * count as f64) as u64;
        Ok(Self { generation, index: index.min(count - 1) })
    }

    #[inline]
    pub fn generation(&self) -> u32 {
        self.generation
    }

    #[inline]
    pub fn index(&self) -> u64 {
        self.index
    }

    /// The generation-`k-1` interval containing this one.
    pub fn parent(&self) -> Result<Self> {
        if self.generation == 0 {
            return Err(Error::NoParent);
        }
        Ok(Self { generation: self.generation - 1, index: self.index >> 2 })
    }

    /// The four generation-`k+1` intervals, left to right.
    pub fn children(&self) -> Result<[Self; 4]> {
        if self.generation >= MAX_GENERATION {
            return Err(Error::NoChildren { max: MAX_GENERATION });
        }
        let generation = self.generation + 1;
        let base = self.index << 2;
        Ok([0, 1, 2, 3].map(|d| Self { generation, index: base + d }))
    }

    /// Base-4 digits of the index, most significant first. These are the
    /// fixed leading digits shared by every point of the interval.
    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.generation)
            .rev()
            .map(move |level| ((self.index >> (2 * level)) & 3) as u8)
    }

    /// True if `other` is a (non-strict) subinterval of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.generation >= self.generation
            && other.index >> (2 * (other.generation - self.generation)) == self.index
    }

    pub fn left(&self) -> Ratio<u64> {
        Ratio::new(self.index, cell_count(self.generation))
    }

    pub fn right(&self) -> Ratio<u64> {
        Ratio::new(self.index + 1, cell_count(self.generation))
    }

    pub fn length(&self) -> Ratio<u64> {
        Ratio::new(1, cell_count(self.generation))
    }

    /// Midpoint as a float; exact for every generation.
    pub fn midpoint(&self) -> f64 {
        (self.index as f64 + 0.5) / cell_count(self.generation) as f64
    }
}

/// A closed grid cell `[x/2^k, (x+1)/2^k] x [y/2^k, (y+1)/2^k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyadicSquare {
    generation: u32,
    x: u32,
    y: u32,
}

impl DyadicSquare {
    pub const ROOT: Self = Self { generation: 0, x: 0, y: 0 };

    pub fn new(generation: u32, x: u32, y: u32) -> Result<Self> {
        check_generation(generation)?;
        let side = 1u64 << generation;
        if u64::from(x) >= side || u64::from(y) >= side {
            let index = u64::from(x.max(y));
            return Err(Error::IndexOutOfRange { generation, index });
        }
        Ok(Self { generation, x, y })
    }

    /// Caller guarantees `x, y < 2^generation <= 2^31`.
    #[inline]
    pub(crate) const fn new_unchecked(generation: u32, x: u32, y: u32) -> Self {
        Self { generation, x, y }
    }

    #[inline]
    pub fn generation(&self) -> u32 {
        self.generation
    }

    #[inline]
    pub fn x(&self) -> u32 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> u32 {
        self.y
    }

    /// Number of squares along one side of the grid.
    #[inline]
    pub fn side(&self) -> u64 {
        1u64 << self.generation
    }

    pub fn parent(&self) -> Result<Self> {
        if self.generation == 0 {
            return Err(Error::NoParent);
        }
        Ok(Self { generation: self.generation - 1, x: self.x >> 1, y: self.y >> 1 })
    }

    pub fn contains(&self, other: &Self) -> bool {
        if other.generation < self.generation {
            return false;
        }
        let shift = other.generation - self.generation;
        other.x >> shift == self.x && other.y >> shift == self.y
    }

    /// Edge adjacency: the squares share a full side. Squares meeting only at
    /// a corner are not adjacent, and no square is adjacent to itself.
    pub fn is_adjacent(&self, other: &Self) -> Result<bool> {
        if self.generation != other.generation {
            return Err(Error::GenerationMismatch(self.generation, other.generation));
        }
        Ok(self.x.abs_diff(other.x) + self.y.abs_diff(other.y) == 1)
    }

    pub fn center(&self) -> UnitPoint {
        let side = self.side() as f64;
        UnitPoint {
            x: (f64::from(self.x) + 0.5) / side,
            y: (f64::from(self.y) + 0.5) / side,
        }
    }

    /// Lower-left and upper-right corners.
    pub fn bounds(&self) -> (UnitPoint, UnitPoint) {
        let side = self.side() as f64;
        let lo = UnitPoint { x: f64::from(self.x) / side, y: f64::from(self.y) / side };
        let hi = UnitPoint {
            x: (f64::from(self.x) + 1.0) / side,
            y: (f64::from(self.y) + 1.0) / side,
        };
        (lo, hi)
    }

    pub fn area(&self) -> Ratio<u64> {
        Ratio::new(1, cell_count(self.generation))
    }
}

/// A point of the closed unit square.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct UnitPoint {
    pub x: f64,
    pub y: f64,
}

impl UnitPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(Self { x, y })
    }

    pub fn distance(&self, other: &Self) -> f64 {
        libm::hypot(self.x - other.x, self.y - other.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(generation: u32, index: u64) -> QuarticInterval {
        QuarticInterval::new(generation, index).unwrap()
    }

    fn sq(generation: u32, x: u32, y: u32) -> DyadicSquare {
        DyadicSquare::new(generation, x, y).unwrap()
    }

    #[test]
    fn containing_examples() {
        assert_eq!(QuarticInterval::containing(0.0, 3).unwrap().index(), 0);
        assert_eq!(QuarticInterval::containing(1.0, 2).unwrap().index(), 15);
        let i = QuarticInterval::containing(0.3, 2).unwrap();
        assert_eq!(i.index(), 4);
        assert_eq!(i.left(), Ratio::new(4, 16));
        assert_eq!(i.right(), Ratio::new(5, 16));
    }

    #[test]
    fn containing_breaks_ties_to_the_right_interval() {
        assert_eq!(QuarticInterval::containing(0.25, 1).unwrap().index(), 1);
        assert_eq!(QuarticInterval::containing(0.5, 2).unwrap().index(), 8);
        assert_eq!(QuarticInterval::containing(1.0, 0).unwrap(), QuarticInterval::ROOT);
        let last = QuarticInterval::containing(1.0, MAX_GENERATION).unwrap();
        assert_eq!(last.index(), cell_count(MAX_GENERATION) - 1);
    }

    #[test]
    fn containing_rejects_bad_input() {
        assert!(matches!(
            QuarticInterval::containing(-0.1, 2),
            Err(Error::OutsideUnitInterval { .. })
        ));
        assert!(QuarticInterval::containing(1.5, 2).is_err());
        assert!(QuarticInterval::containing(f64::NAN, 2).is_err());
        assert!(matches!(
            QuarticInterval::containing(0.5, 32),
            Err(Error::GenerationTooLarge { .. })
        ));
    }

    #[test]
    fn interval_parent_examples() {
        assert_eq!(iv(1, 3).parent().unwrap(), QuarticInterval::ROOT);
        assert_eq!(iv(2, 13).parent().unwrap(), iv(1, 3));
        assert_eq!(iv(3, 0).parent().unwrap(), iv(2, 0));
        assert_eq!(QuarticInterval::ROOT.parent(), Err(Error::NoParent));
    }

    #[test]
    fn square_parent_examples() {
        assert_eq!(sq(1, 1, 0).parent().unwrap(), DyadicSquare::ROOT);
        assert_eq!(sq(3, 5, 6).parent().unwrap(), sq(2, 2, 3));
        assert_eq!(sq(2, 0, 3).parent().unwrap(), sq(1, 0, 1));
        assert_eq!(DyadicSquare::ROOT.parent(), Err(Error::NoParent));
    }

    #[test]
    fn adjacency_examples() {
        assert!(sq(1, 0, 0).is_adjacent(&sq(1, 0, 1)).unwrap());
        assert!(!sq(1, 0, 0).is_adjacent(&sq(1, 1, 1)).unwrap());
        assert!(!sq(2, 1, 2).is_adjacent(&sq(2, 3, 2)).unwrap());
        assert!(!sq(2, 1, 2).is_adjacent(&sq(2, 1, 2)).unwrap());
        assert_eq!(
            sq(1, 0, 0).is_adjacent(&sq(2, 0, 1)),
            Err(Error::GenerationMismatch(1, 2))
        );
    }

    #[test]
    fn center_examples() {
        assert_eq!(DyadicSquare::ROOT.center(), UnitPoint { x: 0.5, y: 0.5 });
        assert_eq!(sq(1, 1, 0).center(), UnitPoint { x: 0.75, y: 0.25 });
        assert_eq!(sq(2, 0, 3).center(), UnitPoint { x: 0.125, y: 0.875 });
    }

    #[test]
    fn constructors_validate_ranges() {
        assert!(QuarticInterval::new(2, 16).is_err());
        assert!(QuarticInterval::new(32, 0).is_err());
        assert!(DyadicSquare::new(2, 4, 0).is_err());
        assert!(DyadicSquare::new(2, 0, 4).is_err());
        assert!(DyadicSquare::new(31, (1 << 31) - 1, 0).is_ok());
        assert!(UnitPoint::new(0.5, 1.01).is_err());
    }

    #[test]
    fn every_child_reports_its_parent() {
        for generation in 0..=8 {
            for index in 0..cell_count(generation) {
                let parent = iv(generation, index);
                for child in parent.children().unwrap() {
                    assert_eq!(child.parent().unwrap(), parent);
                    assert!(parent.contains(&child));
                }
            }
        }
    }

    #[test]
    fn digits_spell_the_index_in_base_four() {
        let i = iv(3, 0b10_01_11);
        assert_eq!(i.digits().collect::<alloc::vec::Vec<_>>(), [2, 1, 3]);
        assert_eq!(QuarticInterval::ROOT.digits().count(), 0);
    }

    #[test]
    fn length_matches_square_area() {
        for generation in 0..=MAX_GENERATION {
            assert_eq!(iv(generation, 0).length(), DyadicSquare::new(generation, 0, 0).unwrap().area());
            assert_eq!(
                iv(generation, 0).length() * Ratio::from_integer(cell_count(generation)),
                Ratio::from_integer(1)
            );
        }
    }
}
