use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Micro-units per degree.
const SCALE: f64 = 1_000_000.0;

/// Largest magnitude accepted from the outside, in degrees.
pub const MAX_DEGREES: f64 = 1.0e9;

/// A signed rotation in fixed-point micro-degrees.
///
/// Wheel input is accumulated in integer units so that detent quantization
/// conserves rotation exactly, with no float drift across long scripts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(i64);

impl Angle {
    pub const ZERO: Angle = Angle(0);

    /// Rounds to the nearest micro-degree. Callers are expected to have
    /// checked [`Angle::is_representable`].
    pub fn from_degrees(degrees: f64) -> Self {
        Angle((degrees * SCALE).round() as i64)
    }

    pub fn is_representable(degrees: f64) -> bool {
        degrees.is_finite() && degrees.abs() <= MAX_DEGREES
    }

    pub const fn from_micros(micros: i64) -> Self {
        Angle(micros)
    }

    pub fn micros(self) -> i64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0 as f64 / SCALE
    }

    pub fn abs(self) -> Self {
        Angle(self.0.abs())
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Whole multiples of `unit`, truncated toward zero, and the remainder
    /// (which carries the sign of `self`).
    pub fn div_rem(self, unit: Angle) -> (i64, Angle) {
        (self.0 / unit.0, Angle(self.0 % unit.0))
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle(self.0 + rhs.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle(self.0 - rhs.0)
    }
}

impl Mul<i64> for Angle {
    type Output = Angle;
    fn mul(self, rhs: i64) -> Angle {
        Angle(self.0 * rhs)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}
