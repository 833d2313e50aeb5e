//! Sparse multivariate polynomials over the gaussian rationals, sized for
//! small elimination problems (a handful of variables, low total degree).

use super::gaussian::GaussRat;
use super::unipoly::UniPoly;
use crate::rational::QRat;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector keyed map; the number of variables is fixed at creation.
#[derive(Debug, Clone, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, GaussRat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussRat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars);
        let mut e = vec![0u16; nvars];
        e[k] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, GaussRat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &GaussRat)> + '_ {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    /// Sum of the terms of maximal total degree.
    pub fn top_part(&self) -> MPoly {
        let d = self.total_degree();
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as usize).sum::<usize>() == d {
                p.terms.insert(e.clone(), c.clone());
            }
        }
        p
    }

    fn insert_add(&mut self, e: Vec<u16>, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(prev) => {
                let s = &prev + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &GaussRat) -> MPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_add(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, xs: &[GaussRat]) -> GaussRat {
        debug_assert_eq!(xs.len(), self.nvars);
        let mut acc = GaussRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t = &t * &xs[k];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitute each variable by a univariate polynomial over Q in a single
    /// new indeterminate (used to eliminate through linear relations). Fails
    /// (returns `None`) if any coefficient is not real.
    pub fn substitute_univariate(&self, subs: &[UniPoly]) -> Option<UniPoly> {
        debug_assert_eq!(subs.len(), self.nvars);
        let mut acc = UniPoly::zero();
        for (e, c) in &self.terms {
            if !c.is_real() {
                return None;
            }
            let mut t = UniPoly::constant(c.re.clone());
            for (k, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t = t.mul(&subs[k]);
                }
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["r1", "r2", "s1", "s2", "s3", "s4"];
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    let name = names.get(k).copied().unwrap_or("x");
                    if p == 1 {
                        write!(f, "*{name}")?;
                    } else {
                        write!(f, "*{name}^{p}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Convenience: real constant.
pub fn mconst(nvars: usize, c: QRat) -> MPoly {
    MPoly::constant(nvars, GaussRat::from_rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn ring_operations() {
        // (r1 + s1)^2 = r1^2 + 2 r1 s1 + s1^2 in vars (r1, r2, s1)
        let r1 = MPoly::var(3, 0);
        let s1 = MPoly::var(3, 2);
        let sum = r1.add(&s1);
        let sq = sum.mul(&sum);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.total_degree(), 2);
        let v = sq.eval(&[
            GaussRat::from_int(2),
            GaussRat::from_int(0),
            GaussRat::from_int(3),
        ]);
        assert_eq!(v, GaussRat::from_int(25));
    }

    #[test]
    fn substitution_eliminates_to_univariate() {
        // p = r1 + r2*s1 with r1 = 1 - x, r2 = 2x, s1 = x
        let p = MPoly::var(3, 0).add(&MPoly::var(3, 1).mul(&MPoly::var(3, 2)));
        let x = UniPoly::new(vec![rat_int(0), rat_int(1)]);
        let one_minus_x = UniPoly::new(vec![rat_int(1), rat_int(-1)]);
        let two_x = x.scale(&rat_int(2));
        let u = p
            .substitute_univariate(&[one_minus_x, two_x, x])
            .unwrap();
        // 1 - x + 2x^2
        assert_eq!(
            u,
            UniPoly::new(vec![rat_int(1), rat_int(-1), rat_int(2)])
        );
        assert_eq!(u.eval(&rat(1, 2)), rat_int(1));
    }

    #[test]
    fn gaussian_coefficients_block_real_substitution() {
        let p = MPoly::constant(1, GaussRat::i());
        assert!(p
            .substitute_univariate(&[UniPoly::constant(rat_int(1))])
            .is_none());
    }
}
