//! Sign-tracked logarithmic arithmetic.
//!
//! Forbidden-region basis functions grow like exp(2m(U-E))^(1/2) x / hbar and
//! the sweeps push Airy arguments to xi/hbar^(2/3) ~ 1e6, far past f64 range.
//! Every basis product in the crate is therefore combined in log space with an
//! explicit sign, and only final ratios are exponentiated.

use std::cmp::Ordering;

/// A real number stored as `sign * exp(log_magnitude)`.
///
/// `sign == 0` encodes exact zero and `log_magnitude` is then meaningless.
#[derive(Clone, Copy, Debug)]
pub struct ScaledValue {
    /// Natural log of the absolute value.
    pub log_magnitude: f64,
    /// -1, 0 or +1.
    pub sign: i8,
}

impl ScaledValue {
    pub const ZERO: ScaledValue = ScaledValue {
        log_magnitude: f64::NEG_INFINITY,
        sign: 0,
    };

    pub const ONE: ScaledValue = ScaledValue {
        log_magnitude: 0.0,
        sign: 1,
    };

    /// Builds from the log of the absolute value and a sign.
    pub fn from_parts(log_magnitude: f64, sign: i8) -> Self {
        debug_assert!(matches!(sign, -1 | 0 | 1));
        if sign == 0 {
            Self::ZERO
        } else {
            ScaledValue {
                log_magnitude,
                sign,
            }
        }
    }

    /// Converts a finite f64. Panics on NaN or infinity: those never arise
    /// from in-range physics inputs and indicate a caller bug.
    pub fn from_f64(value: f64) -> Self {
        assert!(value.is_finite(), "ScaledValue::from_f64({value})");
        if value == 0.0 {
            Self::ZERO
        } else {
            ScaledValue {
                log_magnitude: value.abs().ln(),
                sign: if value > 0.0 { 1 } else { -1 },
            }
        }
    }

    /// Exponentiates back to f64. Overflows to +/-inf and underflows to 0,
    /// matching IEEE exp(); callers that must not overflow check
    /// `is_f64_representable` first.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_magnitude.exp(),
        }
    }

    /// True when `to_f64` produces a finite value.
    pub fn is_f64_representable(self) -> bool {
        self.sign == 0 || self.log_magnitude < 709.7827128933840
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn neg(self) -> Self {
        ScaledValue {
            log_magnitude: self.log_magnitude,
            sign: -self.sign,
        }
    }

    pub fn abs(self) -> Self {
        ScaledValue {
            log_magnitude: self.log_magnitude,
            sign: self.sign.abs(),
        }
    }

    pub fn mul(self, other: Self) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        ScaledValue {
            log_magnitude: self.log_magnitude + other.log_magnitude,
            sign: self.sign * other.sign,
        }
    }

    pub fn div(self, other: Self) -> Self {
        assert!(other.sign != 0, "ScaledValue division by zero");
        if self.sign == 0 {
            return Self::ZERO;
        }
        ScaledValue {
            log_magnitude: self.log_magnitude - other.log_magnitude,
            sign: self.sign * other.sign,
        }
    }

    pub fn recip(self) -> Self {
        Self::ONE.div(self)
    }

    pub fn square(self) -> Self {
        self.mul(self)
    }

    /// Square root; requires a non-negative value.
    pub fn sqrt(self) -> Self {
        assert!(self.sign >= 0, "ScaledValue::sqrt of a negative value");
        if self.sign == 0 {
            return Self::ZERO;
        }
        ScaledValue {
            log_magnitude: 0.5 * self.log_magnitude,
            sign: 1,
        }
    }

    /// Multiplies by a plain f64 factor.
    pub fn scale(self, factor: f64) -> Self {
        self.mul(Self::from_f64(factor))
    }

    /// Exact signed log-sum-exp of two terms.
    ///
    /// Opposite signs with equal magnitudes cancel to exact zero; otherwise
    /// the result keeps full relative precision through ln_1p/exp_m1.
    pub fn add(self, other: Self) -> Self {
        match (self.sign, other.sign) {
            (0, _) => return other,
            (_, 0) => return self,
            _ => {}
        }
        let (big, small) = if self.log_magnitude >= other.log_magnitude {
            (self, other)
        } else {
            (other, self)
        };
        let d = small.log_magnitude - big.log_magnitude; // <= 0
        if big.sign == small.sign {
            ScaledValue {
                log_magnitude: big.log_magnitude + d.exp().ln_1p(),
                sign: big.sign,
            }
        } else if d == 0.0 {
            Self::ZERO
        } else {
            // |big| - |small| = |big| * (1 - e^d), computed as -expm1(d).
            ScaledValue {
                log_magnitude: big.log_magnitude + (-d.exp_m1()).ln(),
                sign: big.sign,
            }
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    /// Sums a slice of terms.
    pub fn sum(terms: &[ScaledValue]) -> Self {
        terms.iter().fold(Self::ZERO, |acc, t| acc.add(*t))
    }

    /// Orders by the represented real value.
    pub fn cmp_value(self, other: Self) -> Ordering {
        match (self.sign, other.sign) {
            (a, b) if a != b => a.cmp(&b),
            (0, 0) => Ordering::Equal,
            (1, 1) => self
                .log_magnitude
                .partial_cmp(&other.log_magnitude)
                .unwrap_or(Ordering::Equal),
            _ => other
                .log_magnitude
                .partial_cmp(&self.log_magnitude)
                .unwrap_or(Ordering::Equal),
        }
    }

    pub fn max_value(self, other: Self) -> Self {
        if self.cmp_value(other) == Ordering::Less {
            other
        } else {
            self
        }
    }

    pub fn min_value(self, other: Self) -> Self {
        if self.cmp_value(other) == Ordering::Greater {
            other
        } else {
            self
        }
    }
}
