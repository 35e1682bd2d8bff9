//! The Hilbert correspondence between quartic intervals and dyadic squares.
//!
//! Generation-`k` interval `i` is sent to a generation-`k` square by reading
//! the base-4 digits of `i` from the top and descending a four-state machine.
//! Each [`Orientation`] fixes the order in which the four quadrants of the
//! current square are visited and the orientation used inside each of them.
//!
//! The resulting map is the unique correspondence where consecutive
//! intervals land on edge-adjacent squares, the first interval lands on the
//! bottom-left square and the last one on the bottom-right square, and
//! containment is preserved between generations.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_rational::Ratio;
use rand::Rng;

use crate::dyadic::{cell_count, DyadicSquare, QuarticInterval, UnitPoint};
use crate::error::{Error, Result};

/// Largest generation accepted by [`trace`] and [`holder_sup`].
pub const MAX_TRACE_GENERATION: u32 = 16;

/// Largest generation accepted by [`measure_of_image`].
pub const MAX_MEASURE_GENERATION: u32 = 12;

/// Above this generation [`holder_sup`] samples consecutive pairs instead of
/// walking all of them.
const EXHAUSTIVE_CONSECUTIVE_GENERATION: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    BottomLeft,
    TopLeft,
    TopRight,
    BottomRight,
}

impl Quadrant {
    /// `(dx, dy)` of the quadrant inside its parent square.
    #[inline]
    pub const fn offset(self) -> (u32, u32) {
        match self {
            Quadrant::BottomLeft => (0, 0),
            Quadrant::TopLeft => (0, 1),
            Quadrant::TopRight => (1, 1),
            Quadrant::BottomRight => (1, 0),
        }
    }

    #[inline]
    const fn from_offset(dx: u32, dy: u32) -> Self {
        match (dx, dy) {
            (0, 0) => Quadrant::BottomLeft,
            (0, _) => Quadrant::TopLeft,
            (_, 0) => Quadrant::BottomRight,
            _ => Quadrant::TopRight,
        }
    }
}

/// One of the four symmetry states of the correspondence.
///
/// `A` enters bottom-left and leaves bottom-right; `B` is its transpose,
/// `C` its half-turn and `D` its reflection in the anti-diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    A,
    B,
    C,
    D,
}

use Orientation::{A, B, C, D};
use Quadrant::{BottomLeft as BL, BottomRight as BR, TopLeft as TL, TopRight as TR};

struct Row {
    visit: [Quadrant; 4],
    next: [Orientation; 4],
}

const TABLE: [Row; 4] = [
    Row { visit: [BL, TL, TR, BR], next: [B, A, A, D] },
    Row { visit: [BL, BR, TR, TL], next: [A, B, B, C] },
    Row { visit: [TR, BR, BL, TL], next: [D, C, C, B] },
    Row { visit: [TR, TL, BL, BR], next: [C, D, D, A] },
];

impl Orientation {
    pub const ROOT: Self = A;

    pub const ALL: [Self; 4] = [A, B, C, D];

    #[inline]
    const fn row(self) -> &'static Row {
        &TABLE[self as usize]
    }

    pub fn visit_order(self) -> [Quadrant; 4] {
        self.row().visit
    }

    pub fn child_states(self) -> [Orientation; 4] {
        self.row().next
    }

    /// Position of `quadrant` in this state's visit order.
    #[inline]
    fn rank_of(self, quadrant: Quadrant) -> u64 {
        let visit = &self.row().visit;
        let mut rank = 0;
        while visit[rank] != quadrant {
            rank += 1;
        }
        rank as u64
    }
}

/// Maps a quartic interval to its dyadic square.
pub fn phi(interval: QuarticInterval) -> DyadicSquare {
    let generation = interval.generation();
    let (mut x, mut y) = (0u32, 0u32);
    let mut state = Orientation::ROOT;
    for digit in interval.digits() {
        let row = state.row();
        let (dx, dy) = row.visit[digit as usize].offset();
        x = (x << 1) | dx;
        y = (y << 1) | dy;
        state = row.next[digit as usize];
    }
    DyadicSquare::new_unchecked(generation, x, y)
}

/// Inverse of [`phi`].
pub fn phi_inverse(square: DyadicSquare) -> QuarticInterval {
    let generation = square.generation();
    let mut index = 0u64;
    let mut state = Orientation::ROOT;
    for level in (0..generation).rev() {
        let quadrant = Quadrant::from_offset((square.x() >> level) & 1, (square.y() >> level) & 1);
        let rank = state.rank_of(quadrant);
        index = (index << 2) | rank;
        state = state.row().next[rank as usize];
    }
    // index < 4^generation by construction.
    QuarticInterval::new(generation, index).expect("index within generation")
}

/// Generation-`k` approximation of the Hilbert curve at `t`: the center of
/// the square assigned to the interval containing `t`.
///
/// Successive approximations differ by at most `sqrt(2) * 2^-k`, so they
/// converge to the limit curve.
pub fn point_at(t: f64, generation: u32) -> Result<UnitPoint> {
    let interval = QuarticInterval::containing(t, generation)?;
    Ok(phi(interval).center())
}

/// Square centers of generation `k` in curve order, lazily.
#[derive(Debug, Clone)]
pub struct Trace {
    generation: u32,
    next: u64,
    end: u64,
}

impl Iterator for Trace {
    type Item = UnitPoint;

    fn next(&mut self) -> Option<UnitPoint> {
        if self.next == self.end {
            return None;
        }
        let interval = QuarticInterval::new(self.generation, self.next).ok()?;
        self.next += 1;
        Some(phi(interval).center())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = (self.end - self.next) as usize;
        (remaining, Some(remaining))
    }
}

impl ExactSizeIterator for Trace {}

pub fn trace_iter(generation: u32) -> Result<Trace> {
    if generation > MAX_TRACE_GENERATION {
        return Err(Error::GenerationTooLarge { generation, max: MAX_TRACE_GENERATION });
    }
    Ok(Trace { generation, next: 0, end: cell_count(generation) })
}

/// All `4^k` square centers of generation `k` in curve order.
pub fn trace(generation: u32) -> Result<Vec<UnitPoint>> {
    Ok(trace_iter(generation)?.collect())
}

fn holder_ratio(generation: u32, i: u64, j: u64) -> Result<f64> {
    let count = cell_count(generation) as f64;
    let s = (i as f64 + 0.5) / count;
    let t = (j as f64 + 0.5) / count;
    let gap = libm::fabs(t - s);
    Ok(point_at(t, generation)?.distance(&point_at(s, generation)?) / libm::sqrt(gap))
}

/// Largest observed `|P_k(t) - P_k(s)| / |t - s|^(1/2)`.
///
/// Parameters are taken at interval midpoints: every pair of consecutive
/// intervals plus `pairs` uniformly random index pairs. Evaluating `P_k` at
/// arbitrary reals would let pairs straddling a cell boundary drive the
/// ratio to infinity, which says nothing about the limit curve. Above
/// generation 12 the consecutive pairs are sampled (`pairs` of them) rather
/// than enumerated.
pub fn holder_sup<R: Rng + ?Sized>(generation: u32, pairs: usize, rng: &mut R) -> Result<f64> {
    if generation > MAX_TRACE_GENERATION {
        return Err(Error::GenerationTooLarge { generation, max: MAX_TRACE_GENERATION });
    }
    let count = cell_count(generation);
    if count == 1 {
        return Ok(0.0);
    }
    let mut sup = 0.0f64;
    if generation <= EXHAUSTIVE_CONSECUTIVE_GENERATION {
        for i in 0..count - 1 {
            sup = sup.max(holder_ratio(generation, i, i + 1)?);
        }
    } else {
        for _ in 0..pairs {
            let i = rng.random_range(0..count - 1);
            sup = sup.max(holder_ratio(generation, i, i + 1)?);
        }
    }
    for _ in 0..pairs {
        let i = rng.random_range(0..count);
        let j = rng.random_range(0..count);
        if i != j {
            sup = sup.max(holder_ratio(generation, i, j)?);
        }
    }
    Ok(sup)
}

fn aligned_index(endpoint: Ratio<u64>, generation: u32) -> Result<u64> {
    let count = cell_count(generation);
    if !count.is_multiple_of(*endpoint.denom()) {
        return Err(Error::Unaligned { generation });
    }
    Ok(endpoint.numer() * (count / endpoint.denom()))
}

/// Area of the union of the squares assigned to the generation-`k`
/// intervals inside `[a, b]`.
///
/// Both endpoints must be multiples of `4^-k`; the result is then exactly
/// `b - a`.
pub fn measure_of_image(a: Ratio<u64>, b: Ratio<u64>, generation: u32) -> Result<Ratio<u64>> {
    if generation > MAX_MEASURE_GENERATION {
        return Err(Error::GenerationTooLarge { generation, max: MAX_MEASURE_GENERATION });
    }
    if a >= b || b > Ratio::from_integer(1) {
        return Err(Error::EmptyInterval);
    }
    let first = aligned_index(a, generation)?;
    let end = aligned_index(b, generation)?;
    let squares: BTreeSet<DyadicSquare> = (first..end)
        .map(|index| phi(QuarticInterval::new(generation, index).expect("aligned index in range")))
        .collect();
    Ok(Ratio::new(squares.len() as u64, cell_count(generation)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn square_of(generation: u32, index: u64) -> (u32, u32) {
        let s = phi(QuarticInterval::new(generation, index).unwrap());
        (s.x(), s.y())
    }

    const GENERATION_TWO: [(u32, u32); 16] = [
        (0, 0), (1, 0), (1, 1), (0, 1),
        (0, 2), (0, 3), (1, 3), (1, 2),
        (2, 2), (2, 3), (3, 3), (3, 2),
        (3, 1), (2, 1), (2, 0), (3, 0),
    ];

    #[test]
    fn first_generation_order() {
        let got: Vec<_> = (0..4).map(|i| square_of(1, i)).collect();
        assert_eq!(got, [(0, 0), (0, 1), (1, 1), (1, 0)]);
        assert_eq!(square_of(0, 0), (0, 0));
    }

    #[test]
    fn second_generation_order() {
        let got: Vec<_> = (0..16).map(|i| square_of(2, i)).collect();
        assert_eq!(got, GENERATION_TWO);
    }

    #[test]
    fn inverse_examples() {
        let inv = |g, x, y| phi_inverse(DyadicSquare::new(g, x, y).unwrap()).index();
        assert_eq!(inv(1, 0, 1), 1);
        assert_eq!(inv(0, 0, 0), 0);
        assert_eq!(inv(2, 3, 0), 15);
    }

    #[test]
    fn table_rows_are_permutations() {
        for state in Orientation::ALL {
            let order = state.visit_order();
            for q in [BL, TL, TR, BR] {
                assert_eq!(order.iter().filter(|&&o| o == q).count(), 1);
            }
        }
        assert_eq!(A.visit_order(), [BL, TL, TR, BR]);
        assert_eq!(A.child_states(), [B, A, A, D]);
    }

    #[test]
    fn point_at_endpoints() {
        for k in 0..=12 {
            let half = 0.5 / (1u64 << k) as f64;
            assert_eq!(point_at(0.0, k).unwrap(), UnitPoint { x: half, y: half });
            assert_eq!(point_at(1.0, k).unwrap(), UnitPoint { x: 1.0 - half, y: half });
        }
        assert_eq!(point_at(0.5, 2).unwrap(), UnitPoint { x: 0.625, y: 0.625 });
        assert!(point_at(1.25, 2).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace(0).unwrap(), [UnitPoint { x: 0.5, y: 0.5 }]);
        let one: Vec<_> = trace(1).unwrap().iter().map(|p| (p.x, p.y)).collect();
        assert_eq!(one, [(0.25, 0.25), (0.25, 0.75), (0.75, 0.75), (0.75, 0.25)]);
        let two: Vec<_> = trace(2).unwrap();
        for (p, &(x, y)) in two.iter().zip(GENERATION_TWO.iter()) {
            assert_eq!(*p, DyadicSquare::new(2, x, y).unwrap().center());
        }
        assert!(trace_iter(17).is_err());
        assert_eq!(trace_iter(5).unwrap().len(), 1024);
    }

    #[test]
    fn trace_steps_are_one_cell_long() {
        for k in 1..=6u32 {
            let step = 1.0 / (1u64 << k) as f64;
            let points = trace(k).unwrap();
            for w in points.windows(2) {
                let linf = libm::fabs(w[0].x - w[1].x).max(libm::fabs(w[0].y - w[1].y));
                assert_eq!(linf, step);
            }
        }
    }

    #[test]
    fn holder_small_generations() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(holder_sup(0, 100, &mut rng).unwrap(), 0.0);
        // Brute force over all six pairs of generation-1 midpoints: adjacent
        // pairs give 0.5 / sqrt(1/4) = 1, the diagonal pair gives
        // (sqrt(2)/2) / sqrt(1/2) = 1, the end-to-end pair 0.5 / sqrt(3/4).
        let mut brute = 0.0f64;
        for i in 0..4u64 {
            for j in i + 1..4 {
                let (s, t) = ((i as f64 + 0.5) / 4.0, (j as f64 + 0.5) / 4.0);
                let d = point_at(s, 1).unwrap().distance(&point_at(t, 1).unwrap());
                brute = brute.max(d / libm::sqrt(t - s));
            }
        }
        assert!((brute - 1.0).abs() < 1e-12);
        let got = holder_sup(1, 1000, &mut rng).unwrap();
        assert!((got - brute).abs() < 1e-12);
        assert!(holder_sup(17, 1, &mut rng).is_err());
    }

    #[test]
    fn measure_examples() {
        let r = Ratio::new;
        assert_eq!(measure_of_image(r(0, 1), r(1, 1), 3).unwrap(), r(1, 1));
        assert_eq!(measure_of_image(r(1, 4), r(1, 2), 2).unwrap(), r(1, 4));
        assert_eq!(measure_of_image(r(3, 16), r(9, 16), 2).unwrap(), r(6, 16));
    }

    #[test]
    fn measure_rejects_bad_intervals() {
        let r = Ratio::new;
        assert_eq!(measure_of_image(r(1, 3), r(1, 2), 2), Err(Error::Unaligned { generation: 2 }));
        assert_eq!(measure_of_image(r(1, 32), r(1, 2), 2), Err(Error::Unaligned { generation: 2 }));
        assert_eq!(measure_of_image(r(1, 2), r(1, 2), 2), Err(Error::EmptyInterval));
        assert_eq!(measure_of_image(r(1, 2), r(3, 2), 2), Err(Error::EmptyInterval));
        assert!(measure_of_image(r(0, 1), r(1, 1), 13).is_err());
    }
}
