//! Exact Fuchsian operators `y'' = Q(z) y` on the sphere with movable
//! singular points, and the one-movable-pole modular family built on the
//! exact q-series engine.
//!
//! The sphere potential is a partial-fraction sum
//! `Q = sum_p [ d_p/(z-p)^2 + res_p/(z-p) ]` over `{0, 1, p_1..p_m}` with
//! double-pole coefficients `(a/2)(a/2+1)` at `0, 1` and `(n_j/2)(n_j/2+1)`
//! at `p_j`. Requiring the prescribed behavior at infinity pins two linear
//! relations on the residues; apparentness at each `p_j` is one polynomial
//! condition obtained from the local Frobenius recursion
//! `k(k - 2 kappa_j) d_k = sum_{i+l=k-2, i<k} d_i A_l` at the crossing index
//! `k = n_j + 1`.

use crate::algebra::gaussian::GaussRat;
use crate::algebra::mpoly::MPoly;
use crate::algebra::unipoly::{self, UniPoly};
use crate::qseries::{self, QSeries};
use crate::rational::{self, QRat};
use num::complex::Complex64;
use num::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SphereError {
    #[error("angle parameter {0} must not be an integer")]
    IntegerAlpha(String),
    #[error("singular points must be distinct and avoid 0 and 1")]
    BadPoints,
    #[error("pole orders must be positive")]
    BadOrders,
    #[error("desk-scale cap exceeded: m <= 2 and n_j <= 4")]
    CapExceeded,
    #[error("solver needs m = 1 with rational data")]
    NeedRationalData,
    #[error("eliminated polynomial degenerates")]
    Degenerate,
    #[error("movable point sits at an elliptic value (t = {0})")]
    EllipticCollision(String),
    #[error("numeric indicial value is not approximately a nonnegative real: {0}")]
    BadIndicial(String),
}

/// `(a/2)(a/2 + 1)`: the double-pole coefficient attached to the angle
/// parameter `a`.
pub fn double_pole_coeff(a: &QRat) -> QRat {
    let half = a * rational::rat(1, 2);
    &half * (&half + rational::rat_int(1))
}

/// Sphere operator data: angle parameters at `0, 1, infinity`, movable
/// points with positive integer orders `n_j`.
#[derive(Debug, Clone)]
pub struct SphereOde {
    pub alphas: [QRat; 3],
    pub points: Vec<GaussRat>,
    pub orders: Vec<u32>,
}

impl SphereOde {
    pub fn new(
        alphas: [QRat; 3],
        points: Vec<GaussRat>,
        orders: Vec<u32>,
    ) -> Result<Self, SphereError> {
        for a in &alphas {
            if rational::is_integer(a) {
                return Err(SphereError::IntegerAlpha(rational::fmt_rat(a)));
            }
        }
        if points.len() != orders.len() {
            return Err(SphereError::BadOrders);
        }
        if orders.contains(&0) {
            return Err(SphereError::BadOrders);
        }
        for (i, p) in points.iter().enumerate() {
            if p.is_zero() || *p == GaussRat::one() {
                return Err(SphereError::BadPoints);
            }
            if points[..i].contains(p) {
                return Err(SphereError::BadPoints);
            }
        }
        Ok(SphereOde {
            alphas,
            points,
            orders,
        })
    }

    /// Number of residue parameters `(r_1, r_2, s_1..s_m)`.
    pub fn nvars(&self) -> usize {
        2 + self.points.len()
    }

    /// Pole locations `0, 1, p_1..p_m` with their double-pole coefficients;
    /// the residue at slot `k` is parameter `k`.
    pub fn poles(&self) -> Vec<(GaussRat, QRat)> {
        let mut out = vec![
            (GaussRat::zero(), double_pole_coeff(&self.alphas[0])),
            (GaussRat::one(), double_pole_coeff(&self.alphas[1])),
        ];
        for (p, &n) in self.points.iter().zip(&self.orders) {
            out.push((p.clone(), double_pole_coeff(&rational::rat_int(n as i64))));
        }
        out
    }

    /// Local indicial parameter at `p_j`: `kappa_j = (n_j + 1)/2`, so the
    /// local exponents are `{-n_j/2, 1 + n_j/2} = 1/2 +- kappa_j`.
    pub fn kappa_at(&self, j: usize) -> QRat {
        rational::rat(self.orders[j] as i64 + 1, 2)
    }
}

/// Partial-fraction data of the sphere potential: one row per pole with its
/// fixed double-pole coefficient and the index of its residue parameter.
#[derive(Debug, Clone)]
pub struct PartialFractions {
    pub rows: Vec<PoleRow>,
}

#[derive(Debug, Clone)]
pub struct PoleRow {
    pub location: GaussRat,
    pub double_coeff: QRat,
    pub residue_param: usize,
}

impl PartialFractions {
    /// Evaluate `Q(z)` at concrete residue parameters.
    pub fn eval(&self, params: &[GaussRat], z: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for row in &self.rows {
            let dz = z - &row.location;
            let inv = dz.inv();
            let inv2 = &inv * &inv;
            acc = &acc + &(&inv2 * &GaussRat::from_rat(row.double_coeff.clone()));
            acc = &acc + &(&inv * &params[row.residue_param]);
        }
        acc
    }

    /// Exact expansion of `Q` at infinity in `u = 1/z`: coefficients of
    /// `u^1 .. u^korder`. From `1/(z-p) = u sum (pu)^k` and
    /// `1/(z-p)^2 = u^2 sum (k+1)(pu)^k`, the `u^1` coefficient is the
    /// residue sum and the `u^2` coefficient must equal the double-pole
    /// value prescribed at infinity.
    pub fn infinity_expansion(&self, params: &[GaussRat], korder: usize) -> Vec<GaussRat> {
        let mut out = vec![GaussRat::zero(); korder];
        for row in &self.rows {
            let p = &row.location;
            let res = &params[row.residue_param];
            let d = GaussRat::from_rat(row.double_coeff.clone());
            let mut ppow = GaussRat::one();
            for k in 0..korder {
                // residue part contributes to u^{k+1}
                out[k] = &out[k] + &(res * &ppow);
                // double-pole part contributes (k+1) p^k to u^{k+2}
                if k + 1 < korder {
                    out[k + 1] =
                        &out[k + 1] + &(&(&d * &GaussRat::from_int(k as i64 + 1)) * &ppow);
                }
                ppow = &ppow * p;
            }
        }
        out
    }
}

impl std::fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = ["r1", "r2", "s1", "s2", "s3", "s4"];
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let name = names.get(row.residue_param).copied().unwrap_or("s?");
            write!(
                f,
                "({})/(z - ({}))^2 + {}/(z - ({}))",
                rational::fmt_rat(&row.double_coeff),
                row.location,
                name,
                row.location
            )?;
        }
        Ok(())
    }
}

/// Assemble the partial-fraction form of the potential.
pub fn build_sphere_q(ode: &SphereOde) -> PartialFractions {
    let rows = ode
        .poles()
        .into_iter()
        .enumerate()
        .map(|(k, (location, double_coeff))| PoleRow {
            location,
            double_coeff,
            residue_param: k,
        })
        .collect();
    PartialFractions { rows }
}

/// Affine relation `sum coeffs[k] * param_k + constant = 0`.
#[derive(Debug, Clone)]
pub struct LinearRelation {
    pub coeffs: Vec<GaussRat>,
    pub constant: GaussRat,
}

impl LinearRelation {
    pub fn eval(&self, params: &[GaussRat]) -> GaussRat {
        let mut acc = self.constant.clone();
        for (c, p) in self.coeffs.iter().zip(params) {
            acc = &acc + &(c * p);
        }
        acc
    }
}

/// The two relations forced by the prescribed exponents at infinity:
/// vanishing residue sum, and the `1/z^2` coefficient matching
/// `(a_3/2)(a_3/2+1)`. The second sums `residue * position` over all poles,
/// so the residue at `z = 1` enters with coefficient one.
pub fn fuchs_relations(ode: &SphereOde) -> [LinearRelation; 2] {
    let n = ode.nvars();
    let rel1 = LinearRelation {
        coeffs: vec![GaussRat::one(); n],
        constant: GaussRat::zero(),
    };
    let mut coeffs = vec![GaussRat::zero(), GaussRat::one()];
    for p in &ode.points {
        coeffs.push(p.clone());
    }
    let mut constant = GaussRat::zero();
    for (_, d) in ode.poles() {
        constant = &constant + &GaussRat::from_rat(d);
    }
    constant = &constant - &GaussRat::from_rat(double_pole_coeff(&ode.alphas[2]));
    [rel1, LinearRelation { coeffs, constant }]
}

/// Taylor data of `Q` at the movable pole `p_j`: returns
/// `A_{-1}, A_0, ..., A_{nmax}` as polynomials in the residue parameters
/// (`A_{-2}` is the known double-pole coefficient and is consumed by the
/// indicial normalization).
pub fn local_coefficients(ode: &SphereOde, j: usize, nmax: usize) -> Vec<MPoly> {
    let nv = ode.nvars();
    let pj = &ode.points[j];
    let mut out = vec![MPoly::zero(nv); nmax + 2];
    // A_{-1} = s_j
    out[0] = MPoly::var(nv, 2 + j);
    for (slot, (p, d)) in ode.poles().into_iter().enumerate() {
        if slot == 2 + j {
            continue;
        }
        let c = pj - &p; // expansion center offset
        let cinv = c.inv();
        // 1/(z-p)^2 = sum (-1)^l (l+1) (z-p_j)^l / c^{l+2}
        // 1/(z-p)   = sum (-1)^l (z-p_j)^l / c^{l+1}
        let mut cpow = &cinv * &cinv;
        for l in 0..=nmax {
            let sign = if l % 2 == 0 {
                GaussRat::one()
            } else {
                -&GaussRat::one()
            };
            let dbl = &(&sign * &GaussRat::from_int(l as i64 + 1)) * &cpow;
            out[l + 1] = out[l + 1].add(&MPoly::constant(nv, &dbl * &GaussRat::from_rat(d.clone())));
            let res_coeff = &(&sign * &cpow) * &c; // (-1)^l / c^{l+1}
            out[l + 1] = out[l + 1].add(&MPoly::var(nv, slot).scale(&res_coeff));
            cpow = &cpow * &cinv;
        }
    }
    out
}

/// The apparentness obstruction at `p_j`: the right side of the local
/// recursion at the crossing index `n_j + 1`, a polynomial of total degree
/// `n_j + 1` in the residue parameters.
pub fn sphere_apparentness_polynomial(ode: &SphereOde, j: usize) -> Result<MPoly, SphereError> {
    if ode.points.len() > 2 || ode.orders.iter().any(|&n| n > 4) {
        return Err(SphereError::CapExceeded);
    }
    let nv = ode.nvars();
    let two_kappa = ode.orders[j] as usize + 1;
    let a = local_coefficients(ode, j, two_kappa);
    let mut d: Vec<MPoly> = vec![MPoly::constant(nv, GaussRat::one())];
    for k in 1..=two_kappa {
        // rhs = sum_{i=0}^{k-1} d_i A_{k-2-i}
        let mut rhs = MPoly::zero(nv);
        for (i, di) in d.iter().enumerate() {
            let l = k as i64 - 2 - i as i64; // >= -1
            rhs = rhs.add(&di.mul(&a[(l + 1) as usize]));
        }
        if k == two_kappa {
            return Ok(rhs);
        }
        let denom = rational::rat_int(k as i64) * (rational::rat_int(k as i64) - rational::rat_int(two_kappa as i64));
        rhs = rhs.scale(&GaussRat::from_rat(rational::rat_int(1) / denom));
        d.push(rhs);
    }
    unreachable!("loop returns at the crossing index")
}

/// Run the local recursion with concrete parameters. Returns the obstruction
/// value at the crossing index and whether the recursion stayed clean for
/// `extra_depth` further indices (no later index has a vanishing left factor,
/// so apparentness is decided at the crossing alone).
pub fn local_obstruction_concrete(
    ode: &SphereOde,
    params: &[GaussRat],
    j: usize,
    extra_depth: usize,
) -> (GaussRat, bool) {
    let two_kappa = ode.orders[j] as usize + 1;
    let nmax = two_kappa + extra_depth;
    let a: Vec<GaussRat> = local_coefficients(ode, j, nmax)
        .iter()
        .map(|p| p.eval(params))
        .collect();
    let mut d = vec![GaussRat::one()];
    let mut obstruction = GaussRat::zero();
    let mut clean = true;
    for k in 1..=nmax {
        let mut rhs = GaussRat::zero();
        for (i, di) in d.iter().enumerate() {
            let l = k as i64 - 2 - i as i64;
            rhs = &rhs + &(di * &a[(l + 1) as usize]);
        }
        if k == two_kappa {
            obstruction = rhs.clone();
            if !obstruction.is_zero() {
                clean = false;
                break;
            }
            d.push(GaussRat::zero());
        } else {
            let denom = rational::rat_int(k as i64)
                * (rational::rat_int(k as i64) - rational::rat_int(two_kappa as i64));
            debug_assert!(!denom.is_zero());
            d.push(&rhs * &GaussRat::from_rat(rational::rat_int(1) / denom));
        }
    }
    (obstruction, clean)
}

#[derive(Debug, Clone)]
pub struct ApparentSolve {
    /// Eliminated univariate polynomial in the movable-pole residue `s_1`.
    pub eliminated: UniPoly,
    /// Exact rational parameter solutions `(r_1, r_2, s_1)`.
    pub solutions: Vec<[QRat; 3]>,
    /// Number of distinct real roots of the eliminated polynomial.
    pub real_roots: usize,
    /// Complex count with multiplicity (the eliminated degree).
    pub count_with_multiplicity: usize,
    /// Product bound `prod (n_j + 1)`.
    pub bezout_bound: usize,
}

/// Eliminate the two affine relations and solve the single apparentness
/// condition for `m = 1` with rational data.
pub fn solve_apparent_system(ode: &SphereOde) -> Result<ApparentSolve, SphereError> {
    if ode.points.len() != 1 {
        return Err(SphereError::NeedRationalData);
    }
    let p1 = &ode.points[0];
    if !p1.is_real() {
        return Err(SphereError::NeedRationalData);
    }
    let p1r = p1.re.clone();
    let poly = sphere_apparentness_polynomial(ode, 0)?;
    // r2 = b - p1 s1, r1 = -b + (p1 - 1) s1 with
    // b = A3 - A1 - A2 - D1 (from the second relation)
    let rels = fuchs_relations(ode);
    let b = -rels[1].constant.re.clone();
    let s1 = UniPoly::new(vec![QRat::zero(), rational::rat_int(1)]);
    let r2 = UniPoly::new(vec![b.clone(), -p1r.clone()]);
    let r1 = UniPoly::new(vec![-b, &p1r - &rational::rat_int(1)]);
    let eliminated = poly
        .substitute_univariate(&[r1.clone(), r2.clone(), s1])
        .ok_or(SphereError::NeedRationalData)?;
    let degree = eliminated.degree().ok_or(SphereError::Degenerate)?;
    let bezout_bound = ode.orders.iter().map(|&n| n as usize + 1).product();
    let roots = unipoly::real_roots(&eliminated);
    let mut solutions = Vec::new();
    for (root, _mult) in &roots.rational {
        let r1v = r1.eval(root);
        let r2v = r2.eval(root);
        solutions.push([r1v, r2v, root.clone()]);
    }
    Ok(ApparentSolve {
        eliminated,
        solutions,
        real_roots: roots.count_distinct(),
        count_with_multiplicity: degree,
        bezout_bound,
    })
}

// ---------------------------------------------------------------------------
// Numeric q-series with complex coefficients, for the modular family with
// movable singular points in the upper half-plane.
// ---------------------------------------------------------------------------

/// Power series in `q` with complex coefficients on the integer lattice.
#[derive(Debug, Clone)]
pub struct CSeries {
    pub lead: i64,
    pub coeffs: Vec<Complex64>,
}

impl CSeries {
    pub fn from_qseries(s: &QSeries) -> CSeries {
        let reduced = s.reduced();
        assert_eq!(reduced.denom(), 1, "integer lattice expected");
        let lead = reduced
            .leading_exponent()
            .map(|e| e.to_integer().to_i64().unwrap())
            .unwrap_or(0);
        let top = reduced
            .reliable_exponent()
            .floor()
            .to_integer()
            .to_i64()
            .unwrap();
        let coeffs = (lead..=top)
            .map(|e| {
                Complex64::new(
                    rational::to_f64(&reduced.coeff_at(&rational::rat_int(e)).unwrap()),
                    0.0,
                )
            })
            .collect();
        CSeries { lead, coeffs }
    }

    pub fn coeff(&self, e: i64) -> Complex64 {
        if e < self.lead {
            return Complex64::zero();
        }
        self.coeffs
            .get((e - self.lead) as usize)
            .copied()
            .unwrap_or_else(Complex64::zero)
    }

    pub fn top(&self) -> i64 {
        self.lead + self.coeffs.len() as i64 - 1
    }

    pub fn scale(&self, c: Complex64) -> CSeries {
        CSeries {
            lead: self.lead,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &CSeries) -> CSeries {
        let lead = self.lead.min(other.lead);
        let top = self.top().min(other.top());
        let coeffs = (lead..=top).map(|e| self.coeff(e) + other.coeff(e)).collect();
        CSeries { lead, coeffs }
    }

    pub fn mul(&self, other: &CSeries) -> CSeries {
        let lead = self.lead + other.lead;
        let top = (self.top() + other.lead).min(other.top() + self.lead);
        let mut coeffs = vec![Complex64::zero(); (top - lead + 1).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let p = i + j;
                if p < coeffs.len() {
                    coeffs[p] += a * b;
                }
            }
        }
        CSeries { lead, coeffs }
    }

    pub fn inv(&self) -> CSeries {
        let c0 = self.coeffs[0];
        let span = self.coeffs.len();
        let mut out = vec![Complex64::zero(); span];
        out[0] = 1.0 / c0;
        for m in 1..span {
            let mut acc = Complex64::zero();
            #[allow(clippy::needless_range_loop)]
            for j in 0..m {
                acc -= out[j] * self.coeffs[m - j];
            }
            out[m] = acc / c0;
        }
        CSeries {
            lead: -self.lead,
            coeffs: out,
        }
    }

    pub fn div(&self, other: &CSeries) -> CSeries {
        self.mul(&other.inv())
    }

    /// Evaluate at a point of the upper half-plane (caller is responsible
    /// for staying in the convergence region above all poles).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp();
        let mut acc = Complex64::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            acc += c * q.powi((self.lead + m as i64) as i32);
        }
        acc
    }
}

/// Modular family data: prescribed half-integer exponents at the elliptic
/// points and at movable points `z_j` in the upper half-plane.
#[derive(Debug, Clone)]
pub struct ModularFamily {
    pub kappa_rho: QRat,
    pub kappa_i: QRat,
    pub kappas: Vec<QRat>,
    pub points: Vec<Complex64>,
}

/// Assembled numeric potential `Q/pi^2` for concrete parameters.
#[derive(Debug, Clone)]
pub struct ModularQ {
    pub series: CSeries,
    /// `t_j = E_6(z_j)^2/E_4(z_j)^3`.
    pub t_values: Vec<Complex64>,
    /// Forced residue companions `r_2^{(j)} = t_j (t_j-1)^2 (1-4 kappa_j^2)`,
    /// the unique value making the local exponents at `z_j` equal
    /// `1/2 +- kappa_j` (since `F_j'(z_j) = 2 pi i (t_j-1) E_4^2 E_6`).
    pub r2_values: Vec<Complex64>,
    pub s: QRat,
    pub t: QRat,
}

fn s_of(kappa: &QRat) -> QRat {
    (rational::rat_int(1) - kappa * kappa * rational::rat_int(4)) / rational::rat_int(9)
}

fn t_of(kappa: &QRat) -> QRat {
    (rational::rat_int(1) - kappa * kappa * rational::rat_int(4)) / rational::rat_int(4)
}

/// `Q/pi^2 = r E_4 + s E_6^2/E_4^2 + t E_4^4/E_6^2
///          + sum_j (r_1^{(j)} E_4^4 F_j + r_2^{(j)} E_4^7)/F_j^2`
/// with `F_j = E_6^2 - t_j E_4^3`.
pub fn build_modular_q(
    fam: &ModularFamily,
    r: Complex64,
    r1: &[Complex64],
    order: usize,
) -> Result<ModularQ, SphereError> {
    assert_eq!(r1.len(), fam.points.len());
    let e4x = qseries::eisenstein(4, order + 4).unwrap();
    let e6x = qseries::eisenstein(6, order + 4).unwrap();
    let e4 = CSeries::from_qseries(&e4x);
    let e6 = CSeries::from_qseries(&e6x);
    let e4_3 = e4.mul(&e4).mul(&e4);
    let e4_4 = e4_3.mul(&e4);
    let e4_7 = e4_4.mul(&e4_3);
    let e6_2 = e6.mul(&e6);
    let s = s_of(&fam.kappa_rho);
    let t = t_of(&fam.kappa_i);
    let mut total = e4
        .scale(r)
        .add(&e6_2.div(&e4.mul(&e4)).scale(Complex64::new(rational::to_f64(&s), 0.0)))
        .add(&e4_4.div(&e6_2).scale(Complex64::new(rational::to_f64(&t), 0.0)));
    let mut t_values = Vec::new();
    let mut r2_values = Vec::new();
    for ((zj, kj), &r1j) in fam.points.iter().zip(&fam.kappas).zip(r1) {
        let e4v = e4x.evaluate(*zj).map_err(|_| SphereError::Degenerate)?.value;
        let e6v = e6x.evaluate(*zj).map_err(|_| SphereError::Degenerate)?.value;
        if e4v.norm() < 1e-8 || e6v.norm() < 1e-8 {
            return Err(SphereError::EllipticCollision(format!(
                "E_4 or E_6 vanishes at {zj}"
            )));
        }
        let tj = e6v * e6v / (e4v * e4v * e4v);
        let one = Complex64::new(1.0, 0.0);
        let kjf = rational::to_f64(kj);
        let r2j = tj * (tj - one) * (tj - one) * (1.0 - 4.0 * kjf * kjf);
        let fj = e6_2.add(&e4_3.scale(-tj));
        let num = e4_4.mul(&fj).scale(r1j).add(&e4_7.scale(r2j));
        total = total.add(&num.div(&fj.mul(&fj)));
        t_values.push(tj);
        r2_values.push(r2j);
    }
    Ok(ModularQ {
        series: total,
        t_values,
        r2_values,
        s,
        t,
    })
}

/// Affine law tying the accessory parameters to the exponent at the cusp:
/// the constant term of `Q/pi^2` equals
/// `r + sum_j r_1^{(j)}/(1 - t_j) + e0` with
/// `e0 = s + t + sum_j r_2^{(j)}/(1-t_j)^2`; prescribing exponents
/// `+-kappa_inf` demands this equal `-(2 kappa_inf)^2`.
pub struct KappaLaw {
    pub r1_coeffs: Vec<Complex64>,
    pub e0: Complex64,
}

pub fn kappa_relation(fam: &ModularFamily, order: usize) -> Result<KappaLaw, SphereError> {
    let probe = build_modular_q(fam, Complex64::zero(), &vec![Complex64::zero(); fam.points.len()], order)?;
    let one = Complex64::new(1.0, 0.0);
    let mut e0 = Complex64::new(
        rational::to_f64(&probe.s) + rational::to_f64(&probe.t),
        0.0,
    );
    let mut r1_coeffs = Vec::new();
    for (tj, r2j) in probe.t_values.iter().zip(&probe.r2_values) {
        let d = one - tj;
        r1_coeffs.push(one / d);
        e0 += r2j / (d * d);
    }
    Ok(KappaLaw { r1_coeffs, e0 })
}

/// Numeric cusp data of a complex-coefficient potential: the indicial
/// exponent and, when the exponent difference is close to an integer, the
/// obstruction value with a roundoff scale.
pub fn numeric_cusp_obstruction(q: &CSeries) -> Result<(f64, Option<(Complex64, f64)>), SphereError> {
    let b0 = -q.coeff(0) / 4.0;
    if b0.im.abs() > 1e-9 * b0.norm().max(1.0) || b0.re < 0.0 {
        return Err(SphereError::BadIndicial(format!("{b0}")));
    }
    let kappa = b0.re.sqrt();
    let two_k = 2.0 * kappa;
    let n = two_k.round();
    if (two_k - n).abs() > 1e-9 || n < 1.0 {
        return Ok((kappa, None));
    }
    let n = n as usize;
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    let mut scale = 1.0f64;
    for jj in 1..=n {
        let mut rhs = Complex64::zero();
        for k in 1..=jj {
            rhs -= q.coeff(k as i64) / 4.0 * coeffs[jj - k];
            scale = scale.max(rhs.norm());
        }
        if jj == n {
            return Ok((kappa, Some((rhs, scale * 1e-12))));
        }
        let lhs = jj as f64 * (jj as f64 - two_k);
        coeffs.push(rhs / lhs);
    }
    unreachable!()
}

/// Probe the local exponents at a movable point: Richardson-extrapolated
/// limit of `(z - z_j)^2 pi^2 (Q/pi^2)(z)` along the vertical approach from
/// above, which converges to `kappa_j^2 - 1/4`. Three-point extrapolation
/// cancels the first- and second-order approach terms.
pub fn local_exponent_probe(q: &CSeries, zj: Complex64, h: f64) -> Complex64 {
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let probe = |hh: f64| -> Complex64 {
        let z = zj + Complex64::new(0.0, hh);
        let w = Complex64::new(0.0, hh); // z - z_j
        w * w * pi2 * q.eval(z)
    };
    let r1 = 2.0 * probe(h / 2.0) - probe(h);
    let r2 = 2.0 * probe(h / 4.0) - probe(h / 2.0);
    (4.0 * r2 - r1) / 3.0
}
