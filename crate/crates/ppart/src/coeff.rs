//! Exact rational coefficients shared by every module.
//!
//! All coefficient arithmetic in this crate is exact: `Coeff` is a
//! `BigRational` (arbitrary-precision integers underneath), so no expansion
//! can silently overflow or round.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Coeff = BigRational;

/// Coefficient from a machine integer.
pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduced fraction `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_biguint(n: BigUint) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Ratio of two arbitrary-precision positive integers.
pub fn biguint_ratio(num: BigUint, den: BigUint) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_nonnegative_integer(c: &Coeff) -> bool {
    c.is_integer() && !c.is_negative()
}

/// Renders `2`, `-2` or `-2/3` (always in reduced form, denominator omitted
/// when it is 1).
pub fn render(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// JSON encoding `{"num": 2, "den": 1}`.
///
/// Numerator and denominator are emitted as JSON numbers; coefficients at
/// desk scale stay far below the `i64` range (the degree caps guarantee it).
pub fn to_json(c: &Coeff) -> serde_json::Value {
    let num = c
        .numer()
        .to_i64()
        .expect("coefficient numerator exceeds the JSON integer range");
    let den = c
        .denom()
        .to_i64()
        .expect("coefficient denominator exceeds the JSON integer range");
    serde_json::json!({ "num": num, "den": den })
}

pub fn is_zero(c: &Coeff) -> bool {
    c.is_zero()
}
