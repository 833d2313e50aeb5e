//! Power-series expansions of modular forms at the elliptic points in the
//! disk coordinate `w = (z - z0)/(z - conj(z0))`, and the apparentness
//! obstruction polynomials in the free accessory parameter.
//!
//! A weight-`k` form expands as `f = (1-w)^k sum (b_n/n!) w^n` with
//! `b_n = (D^n f)(z0) (-4 pi Im z0)^n`, where `D` is the weight-raising
//! derivative tower of [`crate::nearly`]. On `SL(2,Z)` the coefficients obey
//! the vanishing pattern `b_n = 0` unless `n + k/2 = 0 mod e` with `e = 3`
//! at `rho` and `e = 2` at `i`; the expansions here enforce that pattern and
//! record the largest violation seen.
//!
//! The obstruction polynomials run the local Frobenius recursion with
//! polynomial-valued coefficients. At `rho` (`s = (1-4 kappa^2)/9`):
//! `n(n - 2 kappa) c_n = -3 sum_{j<=n-2} c_j (r a_{n-j-2} + s b_{n-j-2})`,
//! and at `i` (`t = (1-4 kappa^2)/4`) the same with factor `-4` and `t`.
//! The right side at the crossing index `n = 2 kappa` is the obstruction.

use crate::nearly::NearlyHolo;
use crate::qseries::{self, QSeries};
use crate::rational::{self, QRat};
use num::complex::Complex64;
use num::{Signed, ToPrimitive, Zero};
use thiserror::Error;

const PI: f64 = std::f64::consts::PI;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EllipticError {
    #[error("numeric tail bound failed at the requested precision")]
    TailBound,
    #[error("leading coefficient {got} differs from {expected} beyond tolerance")]
    LeadingMismatch { expected: f64, got: String },
    #[error("obstruction polynomial degree {got} differs from expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("vanishing pattern violated: |c_{index}| = {size:.3e} should be zero")]
    VanishingViolation { index: usize, size: f64 },
    #[error("kappa = {0} is not a positive half-integer")]
    BadKappa(String),
}

/// Numeric working profile for the expansion pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Standard,
    Extended,
}

impl Precision {
    /// q-truncation order used for evaluations at the elliptic points. The
    /// points in play have `|q| <= e^{-pi sqrt 3}`, so the truncation tail,
    /// not the binary64 mantissa, is the working error term.
    pub fn q_order(self) -> usize {
        match self {
            Precision::Standard => 60,
            Precision::Extended => 100,
        }
    }

    pub fn zero_tol(self) -> f64 {
        1e-8
    }
}

/// Expansion point: `i` or `rho = (1 + sqrt(-3))/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticPoint {
    I,
    Rho,
}

impl EllipticPoint {
    pub fn z(self) -> Complex64 {
        match self {
            EllipticPoint::I => Complex64::new(0.0, 1.0),
            EllipticPoint::Rho => Complex64::new(0.5, 3f64.sqrt() / 2.0),
        }
    }

    /// Order of the vanishing pattern: 2 at `i`, 3 at `rho`.
    pub fn vanish_mod(self) -> i64 {
        match self {
            EllipticPoint::I => 2,
            EllipticPoint::Rho => 3,
        }
    }

    /// `(z0 - conj(z0))^2`, the denominator entering the local second
    /// derivative: `-4` at `i`, `-3` at `rho`.
    pub fn dz_sq(self) -> f64 {
        match self {
            EllipticPoint::I => -4.0,
            EllipticPoint::Rho => -3.0,
        }
    }
}

/// Disk coordinate `w_{z0}(z) = (z - z0)/(z - conj(z0))`.
pub fn w_of(z0: Complex64, z: Complex64) -> Complex64 {
    (z - z0) / (z - z0.conj())
}

/// Truncated expansion `(1-w)^k sum coeffs[n] w^{leading_index + n}` with the
/// coefficients stored in the factorial-normalized convention `b_n/n!`.
#[derive(Debug, Clone)]
pub struct EllipticExpansion {
    pub point: EllipticPoint,
    pub weight: i64,
    pub leading_index: i64,
    pub coeffs: Vec<Complex64>,
    pub vanish_mod: i64,
    /// Largest relative size among coefficients forced to zero.
    pub max_violation: f64,
}

impl EllipticExpansion {
    pub fn coeff(&self, n: i64) -> Complex64 {
        if n < self.leading_index {
            return Complex64::zero();
        }
        self.coeffs
            .get((n - self.leading_index) as usize)
            .copied()
            .unwrap_or_else(Complex64::zero)
    }

    pub fn top_index(&self) -> i64 {
        self.leading_index + self.coeffs.len() as i64 - 1
    }

    fn enforce_vanishing(&mut self) {
        let scale = self
            .coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let e = self.vanish_mod;
        for (m, c) in self.coeffs.iter_mut().enumerate() {
            let n = self.leading_index + m as i64;
            if (n + self.weight / 2).rem_euclid(e) != 0 {
                let rel = c.norm() / scale;
                if rel > self.max_violation {
                    self.max_violation = rel;
                }
                *c = Complex64::zero();
            }
        }
    }

    fn trim_leading(&mut self, tol: f64) {
        let scale = self
            .coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300);
        while let Some(first) = self.coeffs.first() {
            if first.norm() <= tol * scale {
                self.coeffs.remove(0);
                self.leading_index += 1;
            } else {
                break;
            }
        }
    }
}

/// Weight-raising derivative tower `f, Df, ..., D^{n_max} f`.
pub fn maass_tower(f: &NearlyHolo, n_max: usize) -> Vec<NearlyHolo> {
    f.tower(n_max)
}

/// Expand a holomorphic form (given by its exact q-series and weight) at an
/// elliptic point through `w^order`.
pub fn expand_at(
    f: &QSeries,
    weight: i64,
    point: EllipticPoint,
    order: usize,
    prec: Precision,
) -> Result<EllipticExpansion, EllipticError> {
    let z0 = point.z();
    let y = -1.0 / (4.0 * PI * z0.im);
    let tower = NearlyHolo::holomorphic(weight, f.clone()).tower(order);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut errors = Vec::with_capacity(order + 1);
    let mut fact = 1.0f64;
    for (n, g) in tower.iter().enumerate() {
        if n > 0 {
            fact *= n as f64;
        }
        let ev = g.evaluate(z0).map_err(|_| EllipticError::TailBound)?;
        let scale = fact * y.powi(n as i32);
        coeffs.push(ev.value / scale);
        errors.push(ev.error_bound / scale.abs());
    }
    // error bounds are compared at the coefficient normalization, where the
    // factorial scaling keeps them commensurable
    let coeff_scale = coeffs.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    if errors.iter().any(|e| *e > 1e-6 * coeff_scale) {
        return Err(EllipticError::TailBound);
    }
    let mut exp = EllipticExpansion {
        point,
        weight,
        leading_index: 0,
        coeffs,
        vanish_mod: point.vanish_mod(),
        max_violation: 0.0,
    };
    exp.enforce_vanishing();
    exp.trim_leading(prec.zero_tol());
    Ok(exp)
}

/// Which pole quotient to expand: `pi^2 E_6^2/E_4^2` at `rho` or
/// `pi^2 E_4^4/E_6^2` at `i`. Both have a double pole with rational leading
/// coefficient (`3/4` resp. `1/4`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    RhoE6SqOverE4Sq,
    IE4FourthOverE6Sq,
}

impl QuotientKind {
    pub fn point(self) -> EllipticPoint {
        match self {
            QuotientKind::RhoE6SqOverE4Sq => EllipticPoint::Rho,
            QuotientKind::IE4FourthOverE6Sq => EllipticPoint::I,
        }
    }

    pub fn expected_leading(self) -> f64 {
        match self {
            QuotientKind::RhoE6SqOverE4Sq => 0.75,
            QuotientKind::IE4FourthOverE6Sq => 0.25,
        }
    }
}

/// Laurent-type expansion of the pole quotient through `w^order`, starting
/// at `w^{-2}`, scaled by `pi^2`.
pub fn quotient_expansion(
    kind: QuotientKind,
    order: usize,
    prec: Precision,
) -> Result<EllipticExpansion, EllipticError> {
    let qord = prec.q_order();
    let point = kind.point();
    let e4 = qseries::eisenstein(4, qord).unwrap();
    let e6 = qseries::eisenstein(6, qord).unwrap();
    let (num, num_w, den, den_w) = match kind {
        QuotientKind::RhoE6SqOverE4Sq => (e6.pow_int(2).unwrap(), 12, e4.pow_int(2).unwrap(), 8),
        QuotientKind::IE4FourthOverE6Sq => (e4.pow_int(4).unwrap(), 16, e6.pow_int(2).unwrap(), 12),
    };
    let num_exp = expand_at(&num, num_w, point, order + 4, prec)?;
    let den_exp = expand_at(&den, den_w, point, order + 4, prec)?;
    // the denominator has a double zero; its expansion must start at w^2
    if den_exp.leading_index != 2 {
        return Err(EllipticError::LeadingMismatch {
            expected: 2.0,
            got: format!("leading index {}", den_exp.leading_index),
        });
    }
    let d0 = den_exp.coeff(2);
    let mut out: Vec<Complex64> = Vec::new(); // index m stores w^{m-2}
    for m in 0..=(order + 2) {
        let n = m as i64 - 2;
        let mut acc = num_exp.coeff(n + 2);
        for (mm, prev) in out.iter().enumerate() {
            let k = (m - mm) as i64;
            acc -= prev * den_exp.coeff(k + 2);
        }
        out.push(acc / d0);
    }
    let pi2 = PI * PI;
    for c in &mut out {
        *c *= pi2;
    }
    let lead = out[0];
    let expected = kind.expected_leading();
    if (lead - expected).norm() > 1e-6 {
        return Err(EllipticError::LeadingMismatch {
            expected,
            got: format!("{lead}"),
        });
    }
    let mut exp = EllipticExpansion {
        point,
        weight: 4,
        leading_index: -2,
        coeffs: out,
        vanish_mod: point.vanish_mod(),
        max_violation: 0.0,
    };
    exp.enforce_vanishing();
    Ok(exp)
}

/// Indicial roots at an elliptic point: the local exponents are the roots of
/// `x^2 - x + 9s/4` at `rho` and `x^2 - x + t` at `i`, i.e. `1/2 +- kappa`.
#[derive(Debug, Clone, PartialEq)]
pub enum IndicialRoots {
    Exact(QRat, QRat),
    Numeric(f64, f64),
}

pub fn indicial_at(point: EllipticPoint, s_or_t: &QRat) -> IndicialRoots {
    let c = match point {
        EllipticPoint::Rho => s_or_t * rational::rat(9, 4),
        EllipticPoint::I => s_or_t.clone(),
    };
    let disc = rational::rat_int(1) - c.clone() * rational::rat_int(4);
    match rational::sqrt_exact(&disc) {
        Some(root) => {
            let half = rational::rat(1, 2);
            let kappa = root * rational::rat(1, 2);
            IndicialRoots::Exact(&half - &kappa, &half + &kappa)
        }
        None => {
            let d = rational::to_f64(&disc);
            if d >= 0.0 {
                let k = d.sqrt() / 2.0;
                IndicialRoots::Numeric(0.5 - k, 0.5 + k)
            } else {
                // complex pair; report real part with the imaginary defect
                IndicialRoots::Numeric(f64::NAN, f64::NAN)
            }
        }
    }
}

/// Polynomial in the accessory parameter `r` with numeric coefficients,
/// lowest degree first.
#[derive(Debug, Clone)]
pub struct ParamPoly {
    pub coeffs: Vec<Complex64>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        ParamPoly {
            coeffs: vec![Complex64::new(1.0, 0.0)],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, r: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    pub fn coeff_scale(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max)
            .max(1e-300)
    }

    fn add_assign_scaled(&mut self, other: &ParamPoly, scale: Complex64) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Complex64::zero());
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[k] += c * scale;
        }
    }

    /// `self += c_j * (a r + b)` contribution.
    fn add_linear_multiple(&mut self, cj: &ParamPoly, a: Complex64, b: Complex64) {
        if a.norm() > 0.0 {
            let shifted = ParamPoly {
                coeffs: std::iter::once(Complex64::zero())
                    .chain(cj.coeffs.iter().copied())
                    .collect(),
            };
            self.add_assign_scaled(&shifted, a);
        }
        if b.norm() > 0.0 {
            self.add_assign_scaled(cj, b);
        }
    }

    fn scale(&mut self, s: Complex64) {
        for c in &mut self.coeffs {
            *c *= s;
        }
    }

    /// Trim numerically-zero leading coefficients and normalize monic.
    pub fn normalized_monic(mut self, tol: f64) -> ParamPoly {
        let scale = self.coeff_scale();
        while let Some(last) = self.coeffs.last() {
            if last.norm() <= tol * scale {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if let Some(lead) = self.coeffs.last().copied() {
            for c in &mut self.coeffs {
                *c /= lead;
            }
        }
        self
    }

    fn max_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// The two one-parameter families with a single elliptic singularity:
/// `Q_1 = pi^2 (r E_4 + s E_6^2/E_4^2)` (pole at `rho`) and
/// `Q_2 = pi^2 (r E_4 + t E_4^4/E_6^2)` (pole at `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionFamily {
    Q1AtRho,
    Q2AtI,
}

impl ObstructionFamily {
    pub fn point(self) -> EllipticPoint {
        match self {
            ObstructionFamily::Q1AtRho => EllipticPoint::Rho,
            ObstructionFamily::Q2AtI => EllipticPoint::I,
        }
    }

    /// `s_kappa = (1-4 kappa^2)/9` resp. `t_kappa = (1-4 kappa^2)/4`.
    pub fn companion_parameter(self, kappa: &QRat) -> QRat {
        let one_minus = rational::rat_int(1) - kappa * kappa * rational::rat_int(4);
        match self {
            ObstructionFamily::Q1AtRho => one_minus / rational::rat_int(9),
            ObstructionFamily::Q2AtI => one_minus / rational::rat_int(4),
        }
    }

    /// Expected obstruction degree: `2 kappa/3` at `rho`, `kappa` at `i`.
    /// `None` when no obstruction exists (the family is apparent for all r).
    pub fn expected_degree(self, kappa: &QRat) -> Option<usize> {
        let two_k = kappa * rational::rat_int(2);
        if !rational::is_integer(&two_k) || two_k.is_zero() || kappa.is_negative() {
            return None;
        }
        let two_k = two_k.to_integer().to_i64()?;
        match self {
            ObstructionFamily::Q1AtRho => {
                if two_k % 3 == 0 {
                    Some((two_k / 3) as usize)
                } else {
                    None
                }
            }
            ObstructionFamily::Q2AtI => {
                if two_k % 2 == 0 {
                    Some((two_k / 2) as usize)
                } else {
                    None
                }
            }
        }
    }
}

/// Obstruction polynomial `P(r)`, normalized monic. Families without an
/// obstruction return the unit polynomial. The optional `lambda` rescales the
/// disk coordinate `w -> lambda w`; by invariance the normalized polynomial
/// must not depend on it.
pub fn apparentness_polynomial_rescaled(
    family: ObstructionFamily,
    kappa: &QRat,
    prec: Precision,
    lambda: Option<Complex64>,
) -> Result<ParamPoly, EllipticError> {
    if kappa.is_negative() || !rational::is_half_integral(kappa) || kappa.is_zero() {
        return Err(EllipticError::BadKappa(rational::fmt_rat(kappa)));
    }
    let two_k = match family.expected_degree(kappa) {
        None => return Ok(ParamPoly::one()),
        Some(_) => (kappa * rational::rat_int(2)).to_integer().to_i64().unwrap() as usize,
    };
    let expected_degree = family.expected_degree(kappa).unwrap();
    let point = family.point();
    let prefactor = match family {
        ObstructionFamily::Q1AtRho => -3.0,
        ObstructionFamily::Q2AtI => -4.0,
    };
    let s = rational::to_f64(&family.companion_parameter(kappa));
    let qord = prec.q_order();
    let e4 = qseries::eisenstein(4, qord).unwrap();
    let aexp = expand_at(&e4, 4, point, two_k + 2, prec)?;
    let kind = match family {
        ObstructionFamily::Q1AtRho => QuotientKind::RhoE6SqOverE4Sq,
        ObstructionFamily::Q2AtI => QuotientKind::IE4FourthOverE6Sq,
    };
    let bexp = quotient_expansion(kind, two_k + 2, prec)?;
    let pi2 = PI * PI;
    let lam = lambda.unwrap_or(Complex64::new(1.0, 0.0));
    // a_n and b_n carry the rescale factor lambda^{n+2}
    let a = |n: i64| -> Complex64 { aexp.coeff(n) * pi2 * lam.powi(n as i32 + 2) };
    let b = |n: i64| -> Complex64 { bexp.coeff(n) * lam.powi(n as i32 + 2) };

    let mut c: Vec<ParamPoly> = vec![ParamPoly::one()];
    let tol = prec.zero_tol();
    for n in 1..=two_k {
        let mut rhs = ParamPoly::zero();
        for (j, cj) in c.iter().enumerate().take(n.saturating_sub(1)) {
            if cj.coeffs.is_empty() {
                continue;
            }
            let m = (n - j) as i64 - 2;
            rhs.add_linear_multiple(cj, a(m), b(m) * s);
        }
        rhs.scale(Complex64::new(prefactor, 0.0));
        if n == two_k {
            let p = rhs.normalized_monic(tol);
            if p.degree() != expected_degree {
                return Err(EllipticError::DegreeMismatch {
                    expected: expected_degree,
                    got: p.degree(),
                });
            }
            return Ok(p);
        }
        let factor = 1.0 / (n as f64 * (n as f64 - two_k as f64));
        rhs.scale(Complex64::new(factor, 0.0));
        // vanishing pattern: only indices divisible by the pattern modulus
        // may carry nonzero coefficients
        let e = point.vanish_mod();
        if (n as i64).rem_euclid(e) != 0 {
            let size = rhs.max_norm();
            let scale = c.iter().map(|p| p.max_norm()).fold(1.0, f64::max);
            if size > 1e-6 * scale {
                return Err(EllipticError::VanishingViolation { index: n, size });
            }
            rhs = ParamPoly::zero();
        }
        c.push(rhs);
    }
    unreachable!("loop returns at n = 2 kappa")
}

pub fn apparentness_polynomial(
    family: ObstructionFamily,
    kappa: &QRat,
    prec: Precision,
) -> Result<ParamPoly, EllipticError> {
    apparentness_polynomial_rescaled(family, kappa, prec, None)
}

/// Closed-form root list for the obstruction polynomial:
/// `r = -(l + 1/2)^2 - s_kappa` at `rho` (`l = 0..2 kappa/3 - 1`) and
/// `r = -(l +- 1/3)^2 - t_kappa` at `i` (`l` of parity opposite to `kappa`,
/// `l <= kappa - 1`).
pub fn predicted_roots(family: ObstructionFamily, kappa: &QRat) -> Vec<QRat> {
    let Some(degree) = family.expected_degree(kappa) else {
        return Vec::new();
    };
    let companion = family.companion_parameter(kappa);
    let mut out = Vec::new();
    match family {
        ObstructionFamily::Q1AtRho => {
            for l in 0..degree as i64 {
                let half = rational::rat(2 * l + 1, 2);
                out.push(-(&half * &half) - &companion);
            }
        }
        ObstructionFamily::Q2AtI => {
            let k = kappa.to_integer().to_i64().unwrap();
            let start = if k % 2 == 1 { 0 } else { 1 };
            let mut l = start;
            while l < k {
                for sgn in [1i64, -1] {
                    let v = rational::rat(3 * l + sgn, 3);
                    let root = -(&v * &v) - &companion;
                    if !out.contains(&root) {
                        out.push(root);
                    }
                }
                l += 2;
            }
        }
    }
    out.sort();
    out
}

/// Residuals of the disk-coordinate symmetries at numeric sample points:
/// `w_i(-1/z) = -w_i(z)`, `1 - w_i(-1/z) = -i z (1 - w_i(z))`, and
/// `w_rho(g z) = e^{2 pi i/3} w_rho(z)` for `g: z -> -1/(z-1)`.
#[derive(Debug, Clone)]
pub struct WIdentitiesReport {
    pub max_residual: f64,
    pub residuals: Vec<(String, f64)>,
}

pub fn w_coordinate_identities(samples: &[Complex64]) -> WIdentitiesReport {
    let i_pt = EllipticPoint::I.z();
    let rho_pt = EllipticPoint::Rho.z();
    let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
    let mut residuals = Vec::new();
    for &z in samples {
        let s_z = -1.0 / z;
        let r1 = (w_of(i_pt, s_z) + w_of(i_pt, z)).norm();
        residuals.push((format!("w_i(-1/z) = -w_i(z) at {z}"), r1));
        let lhs = Complex64::new(1.0, 0.0) - w_of(i_pt, s_z);
        let rhs = -Complex64::i() * z * (Complex64::new(1.0, 0.0) - w_of(i_pt, z));
        residuals.push((format!("1-w_i(-1/z) = -iz(1-w_i(z)) at {z}"), (lhs - rhs).norm()));
        let g_z = -1.0 / (z - 1.0);
        let r3 = (w_of(rho_pt, g_z) - omega * w_of(rho_pt, z)).norm();
        residuals.push((format!("w_rho(gz) = e^(2 pi i/3) w_rho(z) at {z}"), r3));
    }
    let max_residual = residuals.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    WIdentitiesReport {
        max_residual,
        residuals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eisenstein;
    use crate::rational::{rat, rat_int};

    #[test]
    fn tower_shape() {
        let e4 = crate::nearly::NearlyHolo::holomorphic(4, eisenstein(4, 10).unwrap());
        let t = maass_tower(&e4, 3);
        assert_eq!(t.len(), 4);
        assert_eq!(t.last().unwrap().weight(), 10);
    }

    #[test]
    fn e4_expansion_at_rho_has_simple_zero_pattern() {
        let e4 = eisenstein(4, 60).unwrap();
        let exp = expand_at(&e4, 4, EllipticPoint::Rho, 10, Precision::Standard).unwrap();
        assert_eq!(exp.leading_index, 1);
        assert!(exp.coeff(1).norm() > 1.0);
        for n in 0..=10i64 {
            if (n + 2) % 3 != 0 {
                assert_eq!(exp.coeff(n), Complex64::zero());
            }
        }
        assert!(exp.max_violation < 1e-10);
    }

    #[test]
    fn e6_expansion_at_i_vanishes_at_zero() {
        let e6 = eisenstein(6, 60).unwrap();
        let exp = expand_at(&e6, 6, EllipticPoint::I, 6, Precision::Standard).unwrap();
        assert_eq!(exp.leading_index, 1);
        assert!(exp.coeff(1).norm() > 1.0);
        // weight-0 constant stays a constant
        let c = QSeries::constant(rat(5, 2), 40);
        let cexp = expand_at(&c, 0, EllipticPoint::I, 4, Precision::Standard).unwrap();
        assert_eq!(cexp.leading_index, 0);
        assert!((cexp.coeff(0) - Complex64::new(2.5, 0.0)).norm() < 1e-12);
        assert!(cexp.coeff(2).norm() < 1e-10);
    }

    #[test]
    fn quotient_leading_terms() {
        let qr = quotient_expansion(QuotientKind::RhoE6SqOverE4Sq, 8, Precision::Standard).unwrap();
        assert!((qr.coeff(-2) - Complex64::new(0.75, 0.0)).norm() < 1e-9);
        for n in -2..=8i64 {
            if (n + 2) % 3 != 0 {
                assert_eq!(qr.coeff(n), Complex64::zero());
            }
        }
        // nonzero entries sit at n = 1 mod 3
        assert!(qr.coeff(1).norm() > 1.0);

        let qi = quotient_expansion(QuotientKind::IE4FourthOverE6Sq, 8, Precision::Standard).unwrap();
        assert!((qi.coeff(-2) - Complex64::new(0.25, 0.0)).norm() < 1e-9);
        assert!(qi.coeff(0).norm() > 1.0);
    }

    #[test]
    fn indicial_roots() {
        assert_eq!(
            indicial_at(EllipticPoint::Rho, &rat(-8, 9)),
            IndicialRoots::Exact(rat_int(-1), rat_int(2))
        );
        assert_eq!(
            indicial_at(EllipticPoint::I, &rat(-3, 4)),
            IndicialRoots::Exact(rat(-1, 2), rat(3, 2))
        );
        // boundary: discriminant zero gives the repeated root 1/2
        assert_eq!(
            indicial_at(EllipticPoint::Rho, &rat(1, 9)),
            IndicialRoots::Exact(rat(1, 2), rat(1, 2))
        );
        // roots sum to 1, multiply to 9s/4
        if let IndicialRoots::Exact(x, y) = indicial_at(EllipticPoint::Rho, &rat(-35, 9)) {
            assert_eq!(&x + &y, rat_int(1));
            assert_eq!(&x * &y, rat(-35, 4));
        } else {
            panic!("expected exact roots");
        }
    }

    #[test]
    fn obstruction_polynomial_small_cases() {
        // kappa_rho = 3/2: degree 1 with root 23/36
        let p = apparentness_polynomial(ObstructionFamily::Q1AtRho, &rat(3, 2), Precision::Standard)
            .unwrap();
        assert_eq!(p.degree(), 1);
        let root = p.eval(Complex64::new(23.0 / 36.0, 0.0)).norm();
        assert!(root < 1e-9, "residual {root}");

        // kappa_i = 1: degree 1 with root 23/36
        let p = apparentness_polynomial(ObstructionFamily::Q2AtI, &rat_int(1), Precision::Standard)
            .unwrap();
        assert_eq!(p.degree(), 1);
        assert!(p.eval(Complex64::new(23.0 / 36.0, 0.0)).norm() < 1e-9);

        // families without obstruction: unit polynomial
        let p = apparentness_polynomial(ObstructionFamily::Q1AtRho, &rat_int(1), Precision::Standard)
            .unwrap();
        assert_eq!(p.degree(), 0);
        let p = apparentness_polynomial(ObstructionFamily::Q2AtI, &rat(3, 2), Precision::Standard)
            .unwrap();
        assert_eq!(p.degree(), 0);

        assert!(apparentness_polynomial(
            ObstructionFamily::Q1AtRho,
            &rat(1, 3),
            Precision::Standard
        )
        .is_err());
    }

    #[test]
    fn predicted_root_lists() {
        assert_eq!(
            predicted_roots(ObstructionFamily::Q1AtRho, &rat(3, 2)),
            vec![rat(23, 36)]
        );
        assert_eq!(
            predicted_roots(ObstructionFamily::Q1AtRho, &rat_int(3)),
            vec![rat(59, 36), rat(131, 36)]
        );
        assert_eq!(
            predicted_roots(ObstructionFamily::Q2AtI, &rat_int(1)),
            vec![rat(23, 36)]
        );
        assert_eq!(
            predicted_roots(ObstructionFamily::Q2AtI, &rat_int(2)),
            vec![rat(71, 36), rat(119, 36)]
        );
        assert!(predicted_roots(ObstructionFamily::Q1AtRho, &rat_int(1)).is_empty());
    }

    #[test]
    fn w_identities_at_samples() {
        let samples = vec![
            Complex64::new(0.0, 2.0),
            Complex64::new(0.3, 1.4),
            Complex64::new(0.0, 1.0),
            EllipticPoint::Rho.z(),
        ];
        let rep = w_coordinate_identities(&samples);
        assert!(rep.max_residual < 1e-12, "max residual {}", rep.max_residual);
        // fixed points: w_i(i) = 0 and w_rho stays 0 under g
        assert_eq!(w_of(EllipticPoint::I.z(), EllipticPoint::I.z()), Complex64::zero());
    }
}
