//! Frobenius analysis at the cusp in the variable `q`.
//!
//! The equation `y'' = Q(z) y` becomes `(q d/dq)^2 y = B(q) y` with
//! `B = -(Q/pi^2)/4`, whose indicial exponents at the cusp are
//! `+-kappa` with `kappa^2 = B(0)`. With `y = q^{+-kappa}(1 + sum c_j q^j)`
//! the coefficients satisfy
//! `((+-kappa + j)^2 - kappa^2) c_j = sum_{k>=1} B_k c_{j-k}`.
//! When the exponent difference `2 kappa` is a positive integer, the left
//! factor of the minus branch vanishes at `j = 2 kappa` and the right side at
//! that index is the single obstruction deciding whether the cusp is
//! apparent.

use crate::qseries::QSeries;
use crate::rational::{self, QRat};
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CuspError {
    #[error("potential is not Fuchsian at the cusp (leading exponent {0} < 0)")]
    NotFuchsian(String),
    #[error("potential must live on the integer exponent lattice")]
    FractionalLattice,
    #[error("indicial value B(0) = {0} is negative: oscillatory exponents are rejected")]
    OscillatoryExponents(String),
    #[error("degenerate indicial equation: B(0) = 0 gives the repeated exponent 0")]
    DegenerateIndicial,
    #[error("B(0) = {0} is not the square of a rational; exact mode unavailable")]
    IrrationalExponent(String),
    #[error("nonzero obstruction {value} at index {index}")]
    ObstructionNonzero { index: usize, value: String },
    #[error("exponent {0} lies in (1/2)Z, no interior value in (0, 1/2)")]
    HalfIntegralExponent(String),
    #[error("zero potential rejected: the cusp equation degenerates")]
    ZeroPotential,
}

/// `(q d/dq)^2 y = B(q) y` at the cusp, with `B = -(Q/pi^2)/4`.
#[derive(Debug, Clone)]
pub struct CuspOde {
    b: QSeries,
    kappa: QRat,
}

/// Build the cusp equation from the rational q-expansion of `Q/pi^2`.
/// Requires a potential that is holomorphic at the cusp with
/// `B(0) = -Q(infinity)/(4 pi^2)` a positive square of a rational.
pub fn make_cusp_ode(q_over_pi2: &QSeries) -> Result<CuspOde, CuspError> {
    if q_over_pi2.is_zero() {
        return Err(CuspError::ZeroPotential);
    }
    let lead = q_over_pi2.leading_exponent().unwrap();
    if lead.is_negative() {
        return Err(CuspError::NotFuchsian(rational::fmt_rat(&lead)));
    }
    let b = q_over_pi2.scale(&rational::rat(-1, 4)).reduced();
    if b.denom() != 1 {
        return Err(CuspError::FractionalLattice);
    }
    let b0 = b.coeff_at(&QRat::zero()).ok_or(CuspError::ZeroPotential)?;
    if b0.is_negative() {
        return Err(CuspError::OscillatoryExponents(rational::fmt_rat(&b0)));
    }
    if b0.is_zero() {
        return Err(CuspError::DegenerateIndicial);
    }
    let kappa = rational::sqrt_exact(&b0)
        .ok_or_else(|| CuspError::IrrationalExponent(rational::fmt_rat(&b0)))?;
    Ok(CuspOde { b, kappa })
}

impl CuspOde {
    /// Indicial exponent `kappa >= 0` (the exponents at the cusp are `+-kappa`).
    pub fn kappa_inf(&self) -> &QRat {
        &self.kappa
    }

    pub fn potential(&self) -> &QSeries {
        &self.b
    }

    /// Integer coefficient `B_k` of `q^k`.
    fn b_at(&self, k: i64) -> QRat {
        self.b.coeff_at(&rational::rat_int(k)).unwrap_or_default()
    }

    /// Highest integer index of `B` that is known.
    fn b_order(&self) -> i64 {
        self.b
            .reliable_exponent()
            .floor()
            .to_integer()
            .to_i64()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChoice {
    Plus,
    Minus,
}

/// One Frobenius solution `q^{exponent} (1 + sum c_j q^j)`.
#[derive(Debug, Clone)]
pub struct FrobeniusSolution {
    pub exponent: QRat,
    /// `c_0 = 1, c_1, ..., c_M`.
    pub coeffs: Vec<QRat>,
    /// Index where the left factor vanished and the free coefficient was set
    /// to zero (minus branch with integral exponent difference only).
    pub free_index: Option<usize>,
}

impl FrobeniusSolution {
    /// Render as a q-series on the lattice generated by the exponent.
    pub fn to_series(&self) -> QSeries {
        let denom = self.exponent.denom().to_u32().expect("small denominator");
        let lead = self.exponent.numer().to_i64().expect("small exponent");
        let step = denom as usize;
        let mut coeffs = vec![QRat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * step] = c.clone();
        }
        let reliable = lead + (coeffs.len() as i64 - 1);
        QSeries::assemble(denom, lead, coeffs, reliable)
    }
}

/// Solve for the Frobenius solution with exponent `sign * kappa` through
/// `order` integer steps. On the minus branch with `2 kappa` a positive
/// integer, a nonzero obstruction is reported as an error; when the
/// obstruction vanishes the free coefficient is set to zero.
pub fn solve_frobenius(
    ode: &CuspOde,
    sign: SignChoice,
    order: usize,
) -> Result<FrobeniusSolution, CuspError> {
    let kappa = match sign {
        SignChoice::Plus => ode.kappa.clone(),
        SignChoice::Minus => -ode.kappa.clone(),
    };
    let order = order.min(ode.b_order().max(0) as usize);
    let mut coeffs = vec![QRat::one()];
    let mut free_index = None;
    for j in 1..=order {
        let jr = rational::rat_int(j as i64);
        // (kappa + j)^2 - kappa^2 = j (j + 2 kappa)
        let lhs = &jr * (&jr + &kappa * rational::rat_int(2));
        let mut rhs = QRat::zero();
        for k in 1..=j {
            let bk = ode.b_at(k as i64);
            if !bk.is_zero() {
                rhs += bk * &coeffs[j - k];
            }
        }
        if lhs.is_zero() {
            if !rhs.is_zero() {
                return Err(CuspError::ObstructionNonzero {
                    index: j,
                    value: rational::fmt_rat(&rhs),
                });
            }
            free_index = Some(j);
            coeffs.push(QRat::zero());
        } else {
            coeffs.push(rhs / lhs);
        }
    }
    Ok(FrobeniusSolution {
        exponent: kappa,
        coeffs,
        free_index,
    })
}

/// Outcome of the single-index apparentness test at the cusp.
#[derive(Debug, Clone, PartialEq)]
pub enum Obstruction {
    /// `2 kappa` is not a positive integer: no obstruction index exists and
    /// the cusp is automatically free of logarithms.
    NotApplicable,
    /// The exact right-hand side at the crossing index.
    Value(QRat),
}

impl Obstruction {
    pub fn is_apparent(&self) -> bool {
        match self {
            Obstruction::NotApplicable => true,
            Obstruction::Value(v) => v.is_zero(),
        }
    }
}

/// The obstruction `sum_{k=1}^{2 kappa} B_k c_{2 kappa - k}` of the minus
/// branch, computed before any free-coefficient choice.
pub fn cusp_obstruction(ode: &CuspOde) -> Obstruction {
    let two_kappa = ode.kappa_inf() * rational::rat_int(2);
    if !rational::is_integer(&two_kappa) || two_kappa.is_zero() {
        return Obstruction::NotApplicable;
    }
    let n = two_kappa.to_integer().to_i64().expect("small index") as usize;
    assert!(
        ode.b_order() >= n as i64,
        "potential window ends before the obstruction index {n}"
    );
    let kappa = -ode.kappa.clone();
    let mut coeffs = vec![QRat::one()];
    for j in 1..=n {
        let jr = rational::rat_int(j as i64);
        let lhs = &jr * (&jr + &kappa * rational::rat_int(2));
        let mut rhs = QRat::zero();
        for k in 1..=j {
            let bk = ode.b_at(k as i64);
            if !bk.is_zero() {
                rhs += bk * &coeffs[j - k];
            }
        }
        if j == n {
            return Obstruction::Value(rhs);
        }
        coeffs.push(rhs / lhs);
    }
    unreachable!("loop returns at j = n")
}

/// Wronskian `y_1 D_q y_2 - y_2 D_q y_1` of two solutions given as series.
pub fn wronskian(y1: &QSeries, y2: &QSeries) -> QSeries {
    y1.mul(&y2.d_q()).sub(&y2.mul(&y1.d_q()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// The interior residue `r in (0, 1/2)` with `kappa = +-r mod 1`, and the
/// branch that matched. Rejects half-integral `kappa`.
pub fn r_inf_of(kappa: &QRat) -> Result<(QRat, Branch), CuspError> {
    if rational::is_half_integral(kappa) {
        return Err(CuspError::HalfIntegralExponent(rational::fmt_rat(kappa)));
    }
    let f = rational::frac_part(kappa);
    if f < rational::rat(1, 2) {
        Ok((f, Branch::Plus))
    } else {
        Ok((QRat::one() - f, Branch::Minus))
    }
}

/// Floating-point variant of [`r_inf_of`] for numeric exponents.
pub fn r_inf_of_f64(kappa: f64) -> Result<(f64, Branch), CuspError> {
    let f = kappa.rem_euclid(1.0);
    if (f - 0.5).abs() < 1e-12 || f.abs() < 1e-12 {
        return Err(CuspError::HalfIntegralExponent(format!("{kappa}")));
    }
    if f < 0.5 {
        Ok((f, Branch::Plus))
    } else {
        Ok((1.0 - f, Branch::Minus))
    }
}

/// `Q_3/pi^2 = r E_4 + s E_6^2/E_4^2 + t E_4^4/E_6^2`, the two-parameter
/// potential with singularities only at the two elliptic points.
pub fn q3_potential(r: &QRat, s: &QRat, t: &QRat, order: usize) -> QSeries {
    let e4 = crate::qseries::eisenstein(4, order + 2).unwrap();
    let e6 = crate::qseries::eisenstein(6, order + 2).unwrap();
    let quot_rho = e6.pow_int(2).unwrap().div(&e4.pow_int(2).unwrap()).unwrap();
    let quot_i = e4.pow_int(4).unwrap().div(&e6.pow_int(2).unwrap()).unwrap();
    e4.scale(r).add(&quot_rho.scale(s)).add(&quot_i.scale(t))
}
