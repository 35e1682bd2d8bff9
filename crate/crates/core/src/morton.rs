//! Z-order (Morton) codes: bit interleaving of `n` integer coordinates.
//!
//! Within each group of `n` bits, coordinate 0 holds the most significant
//! bit, so for two dimensions the code reads `x_{b-1} y_{b-1} … x_0 y_0`.
//! A 2-D Morton index is the discrete Lebesgue curve: doubling its binary
//! digits gives the ternary digits of the matching Cantor point.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Codes are limited to 63 bits.
pub const MAX_CODE_BITS: u32 = 63;

fn check_layout(dims: usize, bits: u32) -> Result<u32> {
    let width = (dims as u64).saturating_mul(u64::from(bits));
    if dims == 0 || width > u64::from(MAX_CODE_BITS) {
        return Err(Error::MortonLayout { dims, bits });
    }
    Ok(width as u32)
}

/// Interleaves `coords`, each of which must fit in `bits` bits.
pub fn encode(coords: &[u64], bits: u32) -> Result<u64> {
    check_layout(coords.len(), bits)?;
    if let Some(&value) = coords.iter().find(|&&c| bits < 64 && c >> bits != 0) {
        return Err(Error::CoordinateOutOfRange { value, bits });
    }
    let mut code = 0u64;
    for level in (0..bits).rev() {
        for &c in coords {
            code = (code << 1) | ((c >> level) & 1);
        }
    }
    Ok(code)
}

/// Splits `code` back into `dims` coordinates of `bits` bits.
pub fn decode(code: u64, dims: usize, bits: u32) -> Result<Vec<u64>> {
    let width = check_layout(dims, bits)?;
    if code >> width != 0 {
        return Err(Error::CodeOutOfRange { code, width });
    }
    let mut coords = alloc::vec![0u64; dims];
    let mut shift = width;
    for _ in 0..bits {
        for c in coords.iter_mut() {
            shift -= 1;
            *c = (*c << 1) | ((code >> shift) & 1);
        }
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&[0, 0], 4).unwrap(), 0);
        assert_eq!(encode(&[1, 0], 1).unwrap(), 2);
        assert_eq!(encode(&[3, 5], 3).unwrap(), 0b01_10_11);
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(0, 2, 8).unwrap(), [0, 0]);
        assert_eq!(decode(27, 2, 3).unwrap(), [3, 5]);
        for bits in 1..=31 {
            let all = (1u64 << (2 * bits)) - 1;
            assert_eq!(decode(all, 2, bits).unwrap(), [(1 << bits) - 1, (1 << bits) - 1]);
        }
    }

    #[test]
    fn invalid_layouts() {
        assert_eq!(encode(&[], 3), Err(Error::MortonLayout { dims: 0, bits: 3 }));
        assert_eq!(encode(&[0, 0], 32), Err(Error::MortonLayout { dims: 2, bits: 32 }));
        assert!(decode(0, 64, 1).is_err());
        assert_eq!(encode(&[8, 0], 3), Err(Error::CoordinateOutOfRange { value: 8, bits: 3 }));
        assert_eq!(decode(64, 2, 3), Err(Error::CodeOutOfRange { code: 64, width: 6 }));
        assert_eq!(encode(&[u64::MAX >> 1], 63).unwrap(), u64::MAX >> 1);
        assert_eq!(encode(&[0], 0).unwrap(), 0);
    }
}
