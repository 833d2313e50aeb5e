//! Nearly holomorphic forms: finite sums `sum_d g_d(z) * Y^d` with q-series
//! coefficients, where `Y = 1/(2 pi i (z - zbar)) = -1/(4 pi Im z)`.
//!
//! In this normalization the weight-raising derivative
//! `D_k g = (1/2 pi i)(g' + k g/(z - zbar))` acts with exact rational
//! coefficients: the part of degree `d` receives `D_q g_d` plus
//! `(k - d + 1) g_{d-1}`. The completed weight-2 series is `E_2 + 12 Y`,
//! which vanishes at both elliptic points.

use crate::qseries::{Evaluation, QSeries, SeriesError};
use crate::rational::{self, QRat};
use num::complex::Complex64;
use num::Zero;
use std::collections::BTreeMap;

/// A nearly holomorphic form of a fixed weight.
#[derive(Debug, Clone)]
pub struct NearlyHolo {
    weight: i64,
    /// degree in Y -> q-series coefficient; zero parts are dropped.
    parts: BTreeMap<u32, QSeries>,
}

impl NearlyHolo {
    pub fn holomorphic(weight: i64, f: QSeries) -> Self {
        let mut parts = BTreeMap::new();
        if !f.is_zero() {
            parts.insert(0, f);
        }
        NearlyHolo { weight, parts }
    }

    /// The completed weight-2 series `E_2 + 12 Y`.
    pub fn e2_completed(order: usize) -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(0, crate::qseries::eisenstein(2, order).unwrap());
        parts.insert(1, QSeries::constant(rational::rat_int(12), order as i64));
        NearlyHolo { weight: 2, parts }
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, &QSeries)> + '_ {
        self.parts.iter().map(|(d, s)| (*d, s))
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, d: u32) -> Option<&QSeries> {
        self.parts.get(&d)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn insert_add(parts: &mut BTreeMap<u32, QSeries>, d: u32, s: QSeries) {
        match parts.remove(&d) {
            Some(prev) => {
                let sum = prev.add(&s);
                if !sum.is_zero() {
                    parts.insert(d, sum);
                }
            }
            None => {
                if !s.is_zero() {
                    parts.insert(d, s);
                }
            }
        }
    }

    /// Weight-raising derivative; raises the weight by 2 and the maximal
    /// Y-degree by at most 1.
    pub fn raise(&self) -> NearlyHolo {
        let k = self.weight;
        let mut parts = BTreeMap::new();
        for (&d, g) in &self.parts {
            Self::insert_add(&mut parts, d, g.d_q());
            let c = rational::rat_int(k - d as i64);
            Self::insert_add(&mut parts, d + 1, g.scale(&c));
        }
        NearlyHolo {
            weight: k + 2,
            parts,
        }
    }

    /// The tower `f, Df, D^2 f, ..., D^{n_max} f` (length `n_max + 1`).
    pub fn tower(&self, n_max: usize) -> Vec<NearlyHolo> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(self.clone());
        for _ in 0..n_max {
            out.push(out.last().unwrap().raise());
        }
        out
    }

    pub fn add(&self, other: &NearlyHolo) -> NearlyHolo {
        debug_assert_eq!(self.weight, other.weight);
        let mut parts = self.parts.clone();
        for (&d, g) in &other.parts {
            Self::insert_add(&mut parts, d, g.clone());
        }
        NearlyHolo {
            weight: self.weight,
            parts,
        }
    }

    pub fn scale(&self, c: &QRat) -> NearlyHolo {
        if c.is_zero() {
            return NearlyHolo {
                weight: self.weight,
                parts: BTreeMap::new(),
            };
        }
        NearlyHolo {
            weight: self.weight,
            parts: self.parts.iter().map(|(d, g)| (*d, g.scale(c))).collect(),
        }
    }

    pub fn mul(&self, other: &NearlyHolo) -> NearlyHolo {
        let mut parts = BTreeMap::new();
        for (&d1, g1) in &self.parts {
            for (&d2, g2) in &other.parts {
                Self::insert_add(&mut parts, d1 + d2, g1.mul(g2));
            }
        }
        NearlyHolo {
            weight: self.weight + other.weight,
            parts,
        }
    }

    /// Exact part-wise equality through the common reliable windows.
    pub fn eq_through_window(&self, other: &NearlyHolo) -> bool {
        if self.weight != other.weight {
            return false;
        }
        let ds: std::collections::BTreeSet<u32> = self
            .parts
            .keys()
            .chain(other.parts.keys())
            .cloned()
            .collect();
        for d in ds {
            let zero = QSeries::zero(1, 0);
            let a = self.parts.get(&d).unwrap_or(&zero);
            let b = other.parts.get(&d).unwrap_or(&zero);
            if !a.eq_through_window(b) {
                return false;
            }
        }
        true
    }

    /// Numeric value at `z`, summing `g_d(z) Y(z)^d`.
    pub fn evaluate(&self, z: Complex64) -> Result<Evaluation, SeriesError> {
        let y = -1.0 / (4.0 * std::f64::consts::PI * z.im);
        let mut value = Complex64::zero();
        let mut bound = 0.0;
        for (&d, g) in &self.parts {
            let ev = g.evaluate(z)?;
            let w = y.powi(d as i32);
            value += ev.value * w;
            bound += ev.error_bound * w.abs();
        }
        Ok(Evaluation {
            value,
            error_bound: bound + 1e-300,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eisenstein;
    use crate::rational::rat;

    #[test]
    fn derivative_of_constant_weight0_vanishes() {
        let c = NearlyHolo::holomorphic(0, QSeries::one(8));
        let d = c.raise();
        assert!(d.is_zero());
        assert_eq!(d.weight(), 2);
    }

    #[test]
    fn tower_weights_and_length() {
        let e4 = NearlyHolo::holomorphic(4, eisenstein(4, 10).unwrap());
        let t = e4.tower(3);
        assert_eq!(t.len(), 4);
        let w: Vec<i64> = t.iter().map(|f| f.weight()).collect();
        assert_eq!(w, vec![4, 6, 8, 10]);
    }

    #[test]
    fn raised_e4_matches_its_completed_identity() {
        // D E_4 = (E~_2 E_4 - E_6)/3 with E~_2 = E_2 + 12 Y, exactly part-wise
        let order = 20;
        let e4 = NearlyHolo::holomorphic(4, eisenstein(4, order).unwrap());
        let lhs = e4.raise();
        let e2c = NearlyHolo::e2_completed(order);
        let e6 = NearlyHolo::holomorphic(6, eisenstein(6, order).unwrap());
        let rhs = e2c.mul(&e4).add(&e6.scale(&rat(-1, 1))).scale(&rat(1, 3));
        assert!(lhs.eq_through_window(&rhs));
    }

    #[test]
    fn completed_weight2_vanishes_at_elliptic_points() {
        let e2c = NearlyHolo::e2_completed(40);
        let i = Complex64::new(0.0, 1.0);
        let rho = Complex64::new(0.5, 3f64.sqrt() / 2.0);
        for z in [i, rho] {
            let v = e2c.evaluate(z).unwrap();
            assert!(
                v.value.norm() < 1e-12,
                "completed E_2 should vanish, got {}",
                v.value
            );
        }
    }

    #[test]
    fn numeric_cross_check_of_raised_e4_at_i() {
        let order = 40;
        let e4 = NearlyHolo::holomorphic(4, eisenstein(4, order).unwrap());
        let lhs = e4.raise().evaluate(Complex64::new(0.0, 1.0)).unwrap();
        // at i the completed weight-2 value is 0, so (E~_2 E_4 - E_6)/3 = -E_6(i)/3
        let e6 = eisenstein(6, order).unwrap();
        let rhs = e6.evaluate(Complex64::new(0.0, 1.0)).unwrap();
        assert!((lhs.value + rhs.value / 3.0).norm() < 1e-10);
    }
}
