use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside [0, 1]")]
    OutsideUnitInterval { name: &'static str, value: f64 },
    #[error("generation {generation} exceeds the supported maximum {max}")]
    GenerationTooLarge { generation: u32, max: u32 },
    #[error("index {index} is out of range for generation {generation}")]
    IndexOutOfRange { generation: u32, index: u64 },
    #[error("generation 0 has no parent")]
    NoParent,
    #[error("generation {max} cells have no children")]
    NoChildren { max: u32 },
    #[error("generations differ ({0} vs {1})")]
    GenerationMismatch(u32, u32),
    #[error("interval endpoints must satisfy 0 <= a < b <= 1")]
    EmptyInterval,
    #[error("endpoint is not a multiple of 4^-{generation}")]
    Unaligned { generation: u32 },
    #[error("precision {precision} exceeds the supported maximum {max}")]
    PrecisionTooLarge { precision: u32, max: u32 },
    #[error("ternary digit {position} is 1; the point is not in the Cantor set")]
    NotInCantorSet { position: usize },
    #[error("{dims} coordinates of {bits} bits do not fit a 63-bit code")]
    MortonLayout { dims: usize, bits: u32 },
    #[error("coordinate {value} does not fit in {bits} bits")]
    CoordinateOutOfRange { value: u64, bits: u32 },
    #[error("code {code} does not fit in {width} bits")]
    CodeOutOfRange { code: u64, width: u32 },
    #[error("latitude {0} is outside [-90, 90]")]
    LatitudeOutOfRange(f64),
    #[error("longitude {0} is outside [-180, 180]")]
    LongitudeOutOfRange(f64),
    #[error("vector has no direction")]
    DegenerateVector,
    #[error("face {0} is not in 0..6")]
    InvalidFace(u8),
    #[error("level {level} exceeds the maximum {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error("{0:#018x} is not a valid cell id")]
    InvalidCellId(u64),
    #[error("cell id text must be 16 hexadecimal digits")]
    MalformedCellText,
}
