//! Dense univariate polynomials over the rationals, with exact real-root
//! isolation by Sturm chains and sign-change bisection, and rational-root
//! extraction by verified continued-fraction reconstruction.

use crate::rational::{self, QRat};
use num::{BigInt, Integer, One, Signed, Zero};

/// Coefficients ascending; trailing zeros trimmed; zero polynomial = empty.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly {
    pub coeffs: Vec<QRat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: QRat) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &QRat) -> Self {
        Self::new(vec![-r.clone(), QRat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&QRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::rat_int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![QRat::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &QRat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-QRat::one()))
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![QRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::new(out)
    }

    /// Exact euclidean division over the rationals.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![QRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &lead;
            if !f.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    let v = &f * c;
                    rem[k + j] -= v;
                }
                quo[k] = f;
            }
            rem.pop();
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => self.scale(&(QRat::one() / l)),
        }
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest squarefree divisor.
    pub fn squarefree(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    fn sign_at(&self, x: &QRat) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Cauchy bound: all real roots lie in `[-b, b]`.
    pub fn root_bound(&self) -> QRat {
        let lead = match self.leading() {
            None => return QRat::one(),
            Some(l) => l,
        };
        let mut m = QRat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = (c / lead).abs();
            if r > m {
                m = r;
            }
        }
        m + QRat::one()
    }
}

/// Sturm chain of the (squarefree) polynomial.
pub struct SturmChain {
    chain: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(r.scale(&-QRat::one()));
        }
        chain.pop();
        SturmChain { chain }
    }

    fn variations_at(&self, x: &QRat) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &QRat, b: &QRat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// All real roots of `p`, split into exact rational roots (with
/// multiplicities in `p`) and isolating open intervals for the rest.
#[derive(Debug, Clone)]
pub struct RealRoots {
    pub rational: Vec<(QRat, usize)>,
    pub irrational_intervals: Vec<(QRat, QRat)>,
}

impl RealRoots {
    pub fn count_distinct(&self) -> usize {
        self.rational.len() + self.irrational_intervals.len()
    }
}

fn multiplicity(p: &UniPoly, r: &QRat) -> usize {
    let lin = UniPoly::linear_root(r);
    let mut m = 0;
    let mut cur = p.clone();
    loop {
        let (q, rem) = cur.div_rem(&lin);
        if rem.is_zero() {
            m += 1;
            cur = q;
            if cur.is_zero() {
                break;
            }
        } else {
            break;
        }
    }
    m
}

/// Continued-fraction convergents of a rational number.
fn convergents(x: &QRat) -> Vec<QRat> {
    let mut out = Vec::new();
    let mut p = x.numer().clone();
    let mut q = x.denom().clone();
    let (mut h0, mut h1) = (BigInt::one(), BigInt::zero());
    let (mut k0, mut k1) = (BigInt::zero(), BigInt::one());
    while !q.is_zero() && out.len() < 64 {
        let a = p.div_floor(&q);
        let h = &a * &h0 + &h1;
        let k = &a * &k0 + &k1;
        out.push(QRat::new(h.clone(), k.clone()));
        let r = p - &a * &q;
        p = q;
        q = r;
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
    }
    out
}

/// Isolate and classify all real roots.
pub fn real_roots(p: &UniPoly) -> RealRoots {
    let mut rational: Vec<QRat> = Vec::new();
    let mut irrational = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return RealRoots {
            rational: Vec::new(),
            irrational_intervals: irrational,
        };
    }
    let ps = p.squarefree();
    let chain = SturmChain::new(&ps);
    let bound = ps.root_bound() + QRat::one();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let half = rational::rat(1, 2);
    while let Some((a, b)) = stack.pop() {
        let n = chain.count_roots(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            if ps.eval(&b).is_zero() {
                rational.push(b.clone());
            } else {
                // move the left endpoint off any root of ps without jumping
                // over the single root inside (a, b]
                let mut lo = a.clone();
                if ps.eval(&lo).is_zero() {
                    let mut step = (&b - &lo) * &half;
                    loop {
                        let cand = &lo + &step;
                        if !ps.eval(&cand).is_zero() && chain.count_roots(&cand, &b) == 1 {
                            lo = cand;
                            break;
                        }
                        step *= &half;
                    }
                }
                match refine_and_reconstruct(&ps, lo, b) {
                    Ok(r) => rational.push(r),
                    Err(iv) => irrational.push(iv),
                }
            }
            continue;
        }
        let mid = (&a + &b) * &half;
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    rational.sort();
    rational.dedup();
    let rational = rational
        .into_iter()
        .map(|r| {
            let m = multiplicity(p, &r);
            (r, m)
        })
        .collect();
    RealRoots {
        rational,
        irrational_intervals: irrational,
    }
}

/// Bisect a single-root bracket down to width `2^-64`, then test
/// continued-fraction convergents of the midpoint for an exact root.
#[allow(clippy::result_large_err)] // the Err payload is the isolating interval
fn refine_and_reconstruct(
    ps: &UniPoly,
    mut lo: QRat,
    mut hi: QRat,
) -> Result<QRat, (QRat, QRat)> {
    let half = rational::rat(1, 2);
    let target = QRat::new(BigInt::one(), BigInt::from(2u8).pow(64));
    let mut slo = ps.sign_at(&lo);
    if slo == 0 {
        return Ok(lo);
    }
    let shi = ps.sign_at(&hi);
    debug_assert!(slo * shi < 0, "bracket must change sign");
    while &hi - &lo > target {
        let mid = (&lo + &hi) * &half;
        let sm = ps.sign_at(&mid);
        if sm == 0 {
            return Ok(mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    let mid = (&lo + &hi) * &half;
    for c in convergents(&mid) {
        if c > lo && c < hi && ps.eval(&c).is_zero() {
            return Ok(c);
        }
    }
    Err((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(cs: &[(i64, i64)]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn arithmetic_and_division() {
        // (x - 1/2)(x - 3) = x^2 - 7/2 x + 3/2
        let p = UniPoly::linear_root(&rat(1, 2)).mul(&UniPoly::linear_root(&rat_int(3)));
        assert_eq!(p, poly(&[(3, 2), (-7, 2), (1, 1)]));
        let (q, r) = p.div_rem(&UniPoly::linear_root(&rat_int(3)));
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::linear_root(&rat(1, 2)));
        assert_eq!(p.eval(&rat(1, 2)), rat_int(0));
        assert_eq!(p.eval(&rat_int(0)), rat(3, 2));
    }

    #[test]
    fn sturm_counting() {
        // (x^2 - 2)(x - 1): roots -sqrt2, 1, sqrt2
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]).mul(&UniPoly::linear_root(&rat_int(1)));
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(3)), 3);
        assert_eq!(chain.count_roots(&rat_int(0), &rat_int(3)), 2);
        assert_eq!(chain.count_roots(&rat_int(-3), &rat_int(0)), 1);
    }

    #[test]
    fn root_isolation_mixed() {
        // (x - 1/3)^2 (x^2 - 2): rational double root and two irrational roots
        let lin = UniPoly::linear_root(&rat(1, 3));
        let p = lin.mul(&lin).mul(&poly(&[(-2, 1), (0, 1), (1, 1)]));
        let roots = real_roots(&p);
        assert_eq!(roots.rational, vec![(rat(1, 3), 2)]);
        assert_eq!(roots.irrational_intervals.len(), 2);
        for (lo, hi) in &roots.irrational_intervals {
            // each bracket contains +-sqrt(2)
            let v = rational::to_f64(lo);
            let w = rational::to_f64(hi);
            assert!((v.abs() - 2f64.sqrt()).abs() < 1e-9 || (w.abs() - 2f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn reconstructs_awkward_rationals() {
        // roots 22/7 and -355/113
        let p = UniPoly::linear_root(&rat(22, 7)).mul(&UniPoly::linear_root(&rat(-355, 113)));
        let roots = real_roots(&p);
        let rs: Vec<QRat> = roots.rational.iter().map(|(r, _)| r.clone()).collect();
        assert!(rs.contains(&rat(22, 7)));
        assert!(rs.contains(&rat(-355, 113)));
        assert!(roots.irrational_intervals.is_empty());
    }

    #[test]
    fn no_real_roots() {
        let p = poly(&[(1, 1), (0, 1), (1, 1)]); // x^2 + 1
        let roots = real_roots(&p);
        assert_eq!(roots.count_distinct(), 0);
    }
}
