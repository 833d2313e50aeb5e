//! The weight `-2` combination `F = y_-^2 + c y_+^2` for the potential
//! `Q/pi^2 = -(n/2)^2 E_4` with odd `n`, and its closed form
//! `F = (E_4/Delta^{1/2}) P((E_4^3/Delta))` with `P` a rational polynomial of
//! degree `(n-1)/2`.
//!
//! The constant `c` and the polynomial are solved from an overdetermined
//! exact linear system on q-coefficients: writing `G_± = y_±^2 Delta^{1/2}/E_4`,
//! the requirement is `G_- + c G_+ = sum_k p_k j^k` as series. Surplus rows
//! are checked to vanish, which certifies the truncation was sufficient.

use crate::cusp::{self, SignChoice};
use crate::qseries::{self, QSeries};
use crate::rational::{self, QRat};
use num::complex::Complex64;
use num::{BigInt, Integer, One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WeightError {
    #[error("n = {0} must be a positive odd integer")]
    BadN(u32),
    #[error("truncation order too small: need at least {needed}")]
    TruncationTooSmall { needed: usize },
    #[error("linear system inconsistent: truncation order too small")]
    Inconsistent,
    #[error("linear system singular: truncation order too small")]
    Singular,
    #[error("evaluation failed: {0}")]
    Evaluation(String),
}

impl WeightError {
    /// Failures that signal an insufficient working order rather than bad
    /// input.
    pub fn is_truncation_shortage(&self) -> bool {
        matches!(
            self,
            WeightError::TruncationTooSmall { .. }
                | WeightError::Inconsistent
                | WeightError::Singular
        )
    }
}

/// Solved closed form for one odd `n`.
#[derive(Debug, Clone)]
pub struct WeightNeg2Form {
    pub n: u32,
    /// `c` in the monic normalization `F = y_-^2 + c y_+^2`.
    pub c: QRat,
    /// Monic polynomial (ascending) with `F Delta^{1/2}/E_4 = poly(j)`.
    pub poly: Vec<QRat>,
    /// Least common denominator of the monic polynomial.
    pub scale: BigInt,
    /// `scale * c`: the constant for the integer-normalized polynomial.
    pub scaled_c: QRat,
    /// `scale * poly`: primitive integer coefficients (ascending).
    pub scaled_poly: Vec<BigInt>,
    /// `F = y_-^2 + c y_+^2` as a series (exponents in `1/2 + Z`).
    pub f_series: QSeries,
    /// Surplus q-rows that vanished beyond the solved system.
    pub verified_extra_orders: usize,
}

/// Exact Gauss elimination on an overdetermined system; returns the unique
/// solution and the number of surplus consistent rows.
fn solve_overdetermined(
    mut rows: Vec<(Vec<QRat>, QRat)>,
    nunk: usize,
) -> Result<(Vec<QRat>, usize), WeightError> {
    let mut pivot_row = 0usize;
    for col in 0..nunk {
        let sel = (pivot_row..rows.len())
            .find(|&r| !rows[r].0[col].is_zero())
            .ok_or(WeightError::Singular)?;
        rows.swap(pivot_row, sel);
        let inv = QRat::one() / &rows[pivot_row].0[col];
        for x in &mut rows[pivot_row].0 {
            *x *= &inv;
        }
        rows[pivot_row].1 *= &inv;
        let (pivot, rest) = {
            let (a, b) = rows.split_at_mut(pivot_row + 1);
            (&a[pivot_row], b)
        };
        for row in rest.iter_mut() {
            let f = row.0[col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, p) in row.0.iter_mut().zip(&pivot.0) {
                *x -= &f * p;
            }
            row.1 -= &f * &pivot.1;
        }
        pivot_row += 1;
    }
    // back substitution on the triangular top block
    let mut sol = vec![QRat::zero(); nunk];
    for col in (0..nunk).rev() {
        let mut v = rows[col].1.clone();
        for (k, s) in sol.iter().enumerate().skip(col + 1) {
            v -= &rows[col].0[k] * s;
        }
        sol[col] = v;
    }
    // surplus rows must be identically zero
    let mut extra = 0usize;
    for (coeffs, rhs) in rows.iter().skip(nunk) {
        let mut v = -rhs.clone();
        for (k, s) in sol.iter().enumerate() {
            v += &coeffs[k] * s;
        }
        if !v.is_zero() {
            return Err(WeightError::Inconsistent);
        }
        extra += 1;
    }
    Ok((sol, extra))
}

/// Solve for `(c, P)` of the odd-`n` family at the given truncation order.
pub fn compute_f(n: u32, order: usize) -> Result<WeightNeg2Form, WeightError> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(WeightError::BadN(n));
    }
    let deg = (n as usize - 1) / 2;
    let needed = n as usize + 2 * deg + 12;
    if order < needed {
        return Err(WeightError::TruncationTooSmall { needed });
    }
    let work = order;
    let potential = qseries::eisenstein(4, work)
        .unwrap()
        .scale(&-rational::rat(n as i64 * n as i64, 4));
    let ode = cusp::make_cusp_ode(&potential).expect("odd-n family is exact");
    let ym = cusp::solve_frobenius(&ode, SignChoice::Minus, work)
        .expect("no crossing for odd n")
        .to_series();
    let yp = cusp::solve_frobenius(&ode, SignChoice::Plus, work)
        .expect("plus branch never crosses")
        .to_series();
    let (delta, j) = qseries::delta_and_j(work);
    let sqrt_delta = delta.sqrt().expect("leading term q");
    let e4 = qseries::eisenstein(4, work).unwrap();
    let shared = sqrt_delta.div(&e4).unwrap();
    let gm = ym.mul(&ym).mul(&shared);
    let gp = yp.mul(&yp).mul(&shared);
    let mut jpow = Vec::with_capacity(deg + 1);
    jpow.push(QSeries::one(work as i64));
    for k in 1..=deg {
        jpow.push(jpow[k - 1].mul(&j));
    }

    // rows: coefficient of q^e in  c*G_+ - sum p_k j^k = -G_-
    let nunk = deg + 2;
    let lo = -(deg as i64);
    let hi = gm
        .reliable_exponent()
        .min(gp.reliable_exponent())
        .floor()
        .to_integer()
        .to_i64()
        .unwrap();
    let mut rows = Vec::new();
    for e in lo..=hi {
        let ex = rational::rat_int(e);
        let mut coeffs = Vec::with_capacity(nunk);
        coeffs.push(gp.coeff_at(&ex).unwrap_or_default());
        for jp in &jpow {
            coeffs.push(-jp.coeff_at(&ex).unwrap_or_default());
        }
        let rhs = -gm.coeff_at(&ex).unwrap_or_default();
        rows.push((coeffs, rhs));
    }
    let (sol, extra) = solve_overdetermined(rows, nunk)?;
    if extra < 5 {
        return Err(WeightError::Inconsistent);
    }
    let c = sol[0].clone();
    let poly: Vec<QRat> = sol[1..].to_vec();

    // integer normalization: clear the least common denominator
    let mut scale = BigInt::one();
    for p in &poly {
        scale = scale.lcm(p.denom());
    }
    let scaled_poly: Vec<BigInt> = poly
        .iter()
        .map(|p| (p * QRat::from_integer(scale.clone())).to_integer())
        .collect();
    let scaled_c = &c * QRat::from_integer(scale.clone());
    let f_series = ym.mul(&ym).add(&yp.mul(&yp).scale(&c));
    Ok(WeightNeg2Form {
        n,
        c,
        poly,
        scale,
        scaled_c,
        scaled_poly,
        f_series,
        verified_extra_orders: extra,
    })
}

/// Exact translation antisymmetry: substituting `q^{1/2} -> -q^{1/2}`
/// negates the series exactly iff every exponent lies in `1/2 + Z`.
pub fn verify_t_antisymmetry(f: &QSeries) -> bool {
    if f.is_zero() {
        return false;
    }
    f.terms().all(|(e, _)| {
        let doubled = &e * rational::rat_int(2);
        rational::is_integer(&doubled) && !rational::is_integer(&e)
    })
}

/// Max residual of `|z^2 F(-1/z) + F(z)|` over the samples (the inversion
/// antisymmetry in weight `-2`).
pub fn verify_s_antisymmetry_numeric(
    f: &QSeries,
    samples: &[Complex64],
) -> Result<f64, WeightError> {
    let mut max = 0.0f64;
    for &z in samples {
        let fz = f
            .evaluate(z)
            .map_err(|e| WeightError::Evaluation(e.to_string()))?;
        let w = -1.0 / z;
        let fw = f
            .evaluate(w)
            .map_err(|e| WeightError::Evaluation(e.to_string()))?;
        let resid = (z * z * fw.value + fz.value).norm();
        max = max.max(resid);
    }
    Ok(max)
}
