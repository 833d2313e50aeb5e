//! Exact rational scalars: parsing/formatting in `p/q` form and integer root
//! extraction helpers shared by the series and polynomial layers.

use num::bigint::{BigInt, Sign};
use num::{BigRational, One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type QRat = BigRational;

/// Build a rational from machine integers.
pub fn rat(p: i64, q: i64) -> QRat {
    QRat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> QRat {
    QRat::from_integer(BigInt::from(p))
}

/// Parse a decimal-free rational: `p`, `-p`, or `p/q`.
pub fn parse_rat(s: &str) -> Result<QRat, String> {
    QRat::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Render without precision loss: `p` when the denominator is one, `p/q`
/// otherwise. This is the wire format used in all JSON reports.
pub fn fmt_rat(x: &QRat) -> String {
    x.to_string()
}

/// Exact integer n-th root when it exists.
pub fn bigint_nth_root_exact(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    if x.sign() == Sign::Minus {
        if n.is_multiple_of(2) {
            return None;
        }
        return bigint_nth_root_exact(&(-x), n).map(|r| -r);
    }
    let r = x.nth_root(n);
    if num::pow::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact rational n-th root when numerator and denominator are both perfect
/// n-th powers (after reduction to lowest terms).
pub fn nth_root_exact(x: &QRat, n: u32) -> Option<QRat> {
    let p = bigint_nth_root_exact(x.numer(), n)?;
    let q = bigint_nth_root_exact(x.denom(), n)?;
    Some(QRat::new(p, q))
}

pub fn sqrt_exact(x: &QRat) -> Option<QRat> {
    if x.is_negative() {
        return None;
    }
    nth_root_exact(x, 2)
}

pub fn is_integer(x: &QRat) -> bool {
    x.denom().is_one()
}

/// True when `x` lies in (1/2)*Z.
pub fn is_half_integral(x: &QRat) -> bool {
    (x * rat_int(2)).denom().is_one()
}

/// Fractional part in [0, 1).
pub fn frac_part(x: &QRat) -> QRat {
    x - x.floor()
}

pub fn to_f64(x: &QRat) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // fall back through a scaled integer division for huge operands
        let num = x.numer().to_f64().unwrap_or(f64::NAN);
        let den = x.denom().to_f64().unwrap_or(f64::NAN);
        num / den
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/12", "5", "0", "-3"] {
            let x = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&x), s);
        }
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("a/b").is_err());
    }

    #[test]
    fn exact_roots() {
        assert_eq!(sqrt_exact(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-1, 4)), None);
        assert_eq!(nth_root_exact(&rat(-27, 8), 3), Some(rat(-3, 2)));
        assert_eq!(nth_root_exact(&rat(16, 81), 4), Some(rat(2, 3)));
        assert_eq!(nth_root_exact(&rat(16, 80), 4), None);
    }

    #[test]
    fn fraction_helpers() {
        assert!(is_half_integral(&rat(7, 2)));
        assert!(!is_half_integral(&rat(1, 3)));
        assert_eq!(frac_part(&rat(-1, 4)), rat(3, 4));
    }
}
