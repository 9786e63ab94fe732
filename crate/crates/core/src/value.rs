//! Report values: exact rationals or reals.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::Rational;

/// Tolerance for comparisons involving a real operand.
pub const REAL_TOLERANCE: f64 = 1e-9;

/// Significant digits used when writing reals.
pub const REAL_DIGITS: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(f64),
}

impl Value {
    pub fn int(v: i64) -> Self {
        Value::Exact(Rational::from_integer(v.into()))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Value::Real(x) => *x,
        }
    }

    /// Exact when both operands are exact.
    pub fn sub(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            _ => Value::Real(self.to_f64() - other.to_f64()),
        }
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(-a.clone()),
            Value::Real(x) => Value::Real(-x),
        }
    }

    pub fn abs(&self) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(a.abs()),
            Value::Real(x) => Value::Real(x.abs()),
        }
    }

    pub fn tolerance(&self) -> f64 {
        if self.is_exact() {
            0.0
        } else {
            REAL_TOLERANCE
        }
    }

    /// `self >= -tolerance`.
    pub fn is_nonnegative(&self) -> bool {
        match self {
            Value::Exact(a) => !a.is_negative(),
            Value::Real(x) => *x >= -REAL_TOLERANCE,
        }
    }

    /// `|self| <= tolerance`.
    pub fn is_zero(&self) -> bool {
        match self {
            Value::Exact(a) => a.is_zero(),
            Value::Real(x) => x.abs() <= REAL_TOLERANCE,
        }
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Exact(r)
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

/// Always `p/q`, including integers.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Decimal with [`REAL_DIGITS`] significant digits, trailing zeros trimmed.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return "0".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (REAL_DIGITS as i32 - 1 - exponent).max(0) as usize;
    let scale = 10f64.powi(exponent - (REAL_DIGITS as i32 - 1));
    let rounded = if decimals == 0 {
        (x / scale).round() * scale
    } else {
        x
    };
    let mut s = format!("{rounded:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => f.write_str(&format_rational(r)),
            Value::Real(x) => f.write_str(&format_real(*x)),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => serializer.serialize_str(&format_rational(r)),
            Value::Real(x) => match format_real(*x).parse::<f64>() {
                Ok(v) if v.is_finite() => serializer.serialize_f64(v),
                _ => serializer.serialize_str(&format_real(*x)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_twelve_significant_digits() {
        assert_eq!(format_real(2.0 * 2f64.sqrt() / 1.5), "1.88561808316");
        assert_eq!(format_real(4.0), "4");
        assert_eq!(format_real(-0.000123456789012345), "-0.000123456789012");
        assert_eq!(format_real(0.0), "0");
    }

    #[test]
    fn rationals_are_p_over_q() {
        assert_eq!(format_rational(&Rational::new(4.into(), 3.into())), "4/3");
        assert_eq!(Value::int(16).to_string(), "16/1");
    }

    #[test]
    fn mixed_subtraction_falls_back_to_real() {
        let d = Value::int(3).sub(&Value::Real(2.5));
        assert_eq!(d, Value::Real(0.5));
        assert!(Value::int(-1).abs().is_nonnegative());
        assert!(Value::Real(-1e-12).is_nonnegative());
    }
}
