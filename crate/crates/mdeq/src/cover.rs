//! Permutation certificates for the branched coverings behind the existence
//! arguments: explicit cycle constructions, their products, cycle types,
//! transitivity, and the Riemann-Hurwitz genus count.
//!
//! Points are labelled `1..d`. Cycles are written left-to-right but act
//! right-to-left: `compose(a, b)` is the permutation "apply `b`, then `a`".

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("cycle label {0} outside 1..={1}")]
    LabelOutOfRange(usize, usize),
    #[error("repeated label {0} in cycle data")]
    RepeatedLabel(usize),
    #[error("parameters out of range: {0}")]
    BadParameters(String),
    #[error("branch data does not partition the degree")]
    BadPartition,
    #[error("non-integer genus: the covering data is impossible")]
    NonIntegerGenus,
}

/// A permutation of `{1..d}` stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(d: usize) -> Perm {
        Perm {
            images: (0..d).collect(),
        }
    }

    /// Build from disjoint cycles over 1-based labels.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Perm, CoverError> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut seen = vec![false; d];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > d {
                    return Err(CoverError::LabelOutOfRange(x, d));
                }
                if seen[x - 1] {
                    return Err(CoverError::RepeatedLabel(x));
                }
                seen[x - 1] = true;
                let y = cycle[(k + 1) % cycle.len()];
                if y == 0 || y > d {
                    return Err(CoverError::LabelOutOfRange(y, d));
                }
                images[x - 1] = y - 1;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based application.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            images: (0..self.degree())
                .map(|x| self.images[other.images[x]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    /// Disjoint-cycle lengths, sorted descending (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Disjoint cycles over 1-based labels, nontrivial ones only.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Orbit count of the group generated by the given permutations; transitive
/// means a single orbit.
pub fn is_transitive(perms: &[Perm]) -> bool {
    if perms.is_empty() {
        return false;
    }
    let d = perms[0].degree();
    if d == 0 {
        return false;
    }
    let mut seen = vec![false; d];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for p in perms {
            for y in [p.images[x], p.inverse().images[x]] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
    }
    count == d
}

/// Riemann-Hurwitz genus of a degree-`d` covering of the sphere with the
/// given branch cycle types: `g = 1 - d + (1/2) sum (length - 1)`.
pub fn riemann_hurwitz(degree: usize, branch_types: &[Vec<usize>]) -> Result<i64, CoverError> {
    let mut total = 0i64;
    for t in branch_types {
        if t.iter().sum::<usize>() != degree {
            return Err(CoverError::BadPartition);
        }
        total += t.iter().map(|&l| l as i64 - 1).sum::<i64>();
    }
    if total % 2 != 0 {
        return Err(CoverError::NonIntegerGenus);
    }
    Ok(1 - degree as i64 + total / 2)
}

/// A verified covering certificate: the constructed permutations, their
/// product, the cycle type the construction promises for the product, and
/// the derived checks.
#[derive(Debug, Clone)]
pub struct CoverCertificate {
    pub degree: usize,
    pub perms: Vec<Perm>,
    pub product: Perm,
    pub product_type: Vec<usize>,
    pub expected_type: Vec<usize>,
    pub transitive: bool,
    pub genus: i64,
    pub ok: bool,
}

fn certify(degree: usize, perms: Vec<Perm>, expected_type: Vec<usize>) -> Result<CoverCertificate, CoverError> {
    let mut product = Perm::identity(degree);
    // left-to-right listed generators compose with the first applied first
    for p in &perms {
        product = p.compose(&product);
    }
    let product_type = product.cycle_type();
    let transitive = is_transitive(&perms);
    // the implied closing permutation is the product inverse, giving a
    // three-point covering with branch data (perms..., product^{-1})
    let mut branch_types: Vec<Vec<usize>> = perms.iter().map(|p| p.cycle_type()).collect();
    branch_types.push(product.inverse().cycle_type());
    let genus = riemann_hurwitz(degree, &branch_types)?;
    let mut expected_sorted = expected_type.clone();
    expected_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let ok = product_type == expected_sorted && transitive && genus == 0;
    Ok(CoverCertificate {
        degree,
        perms,
        product,
        product_type,
        expected_type: expected_sorted,
        transitive,
        genus,
        ok,
    })
}

/// Covering data for the single-elliptic-pole family at `rho`: two
/// `l0`-cycles in `S_{l0+l}` whose product is a `(2l+1)`-cycle.
pub fn rho_family_cover(l0: usize, l: usize) -> Result<CoverCertificate, CoverError> {
    if l0 == 0 || l >= l0 {
        return Err(CoverError::BadParameters(format!(
            "need 0 <= l < l0, got l0 = {l0}, l = {l}"
        )));
    }
    let d = l0 + l;
    let sigma1 = Perm::from_cycles(d, &[(1..=l0).collect::<Vec<_>>()])?;
    let sigma2 = Perm::from_cycles(d, &[(l + 1..=l0 + l).rev().collect::<Vec<_>>()])?;
    // expected: a (2l+1)-cycle, the rest fixed
    let mut expected = vec![2 * l + 1];
    expected.extend(std::iter::repeat_n(1, d - (2 * l + 1)));
    certify(d, vec![sigma1, sigma2], expected)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchSign {
    Plus,
    Minus,
}

/// Covering data for the single-elliptic-pole family at `i` with integral
/// local parameter `kappa` and offset `l` of opposite parity. The plus
/// branch has degree `(3 kappa + 3l - 1)/2` and product type
/// `{3l+1, 3^{m'}}`; the minus branch has degree `(3/2)(kappa + l - 1)` and
/// product type `{3l-1, 3^{m'}}`, with `m = (kappa+l-1)/2`,
/// `m' = (kappa-l-1)/2`.
pub fn i_family_cover(kappa: usize, l: usize, sign: BranchSign) -> Result<CoverCertificate, CoverError> {
    if kappa == 0 || (kappa + l).is_multiple_of(2) || l > kappa - 1 {
        return Err(CoverError::BadParameters(format!(
            "need kappa >= 1 and l <= kappa - 1 of opposite parity, got kappa = {kappa}, l = {l}"
        )));
    }
    if sign == BranchSign::Minus && l == 0 {
        return Err(CoverError::BadParameters(
            "minus branch needs l >= 1".into(),
        ));
    }
    let m = (kappa + l - 1) / 2;
    let mp = (kappa - l - 1) / 2;
    match sign {
        BranchSign::Plus => {
            let d = (3 * kappa + 3 * l - 1) / 2; // = 3m + 3mp + ... sanity below
            debug_assert_eq!(d, 3 * m + 1 + (d - 3 * m - 1));
            // sigma_inf = (2,3,4)(5,6,7)...(3m-1, 3m, 3m+1)
            let cyc_inf: Vec<Vec<usize>> =
                (0..m).map(|k| vec![3 * k + 2, 3 * k + 3, 3 * k + 4]).collect();
            let sigma_inf = Perm::from_cycles(d, &cyc_inf)?;
            // sigma_1 = (1, 2, 5, 8, ..., 3m-1, 3m'+1, 3m'-2, ..., 7, 4)
            let mut c = vec![1];
            for k in 0..m {
                c.push(3 * k + 2);
            }
            let mut down = 3 * mp + 1;
            while down >= 4 {
                c.push(down);
                down -= 3;
            }
            let sigma1 = Perm::from_cycles(d, &[c])?;
            let mut expected = vec![3 * l + 1];
            expected.extend(std::iter::repeat_n(3, mp));
            expected.extend(std::iter::repeat_n(1, d - (3 * l + 1) - 3 * mp));
            certify(d, vec![sigma_inf, sigma1], expected)
        }
        BranchSign::Minus => {
            let d = 3 * (kappa + l - 1) / 2; // = 3m
            // sigma_inf = (1,2,3)(4,5,6)...(3m-2, 3m-1, 3m)
            let cyc_inf: Vec<Vec<usize>> =
                (0..m).map(|k| vec![3 * k + 1, 3 * k + 2, 3 * k + 3]).collect();
            let sigma_inf = Perm::from_cycles(d, &cyc_inf)?;
            // sigma_1 = (1, 4, 7, ..., 3m-2, 3m, 3m-3, ..., 3l)
            let mut c = Vec::new();
            for k in 0..m {
                c.push(3 * k + 1);
            }
            let mut down = 3 * m;
            while down >= 3 * l {
                c.push(down);
                down -= 3;
            }
            let sigma1 = Perm::from_cycles(d, &[c])?;
            let mut expected = vec![3 * l - 1];
            expected.extend(std::iter::repeat_n(3, mp));
            expected.extend(std::iter::repeat_n(1, d - (3 * l - 1) - 3 * mp));
            certify(d, vec![sigma_inf, sigma1], expected)
        }
    }
}

/// Covering data for the two-elliptic-pole triple `(n_i, n_rho, n_inf)`
/// with odd sum and strict triangle: degree `d = (n_i + n_rho + n_inf - 1)/2`
/// with an `n_i`-cycle and an `n_rho`-cycle whose product is an
/// `n_inf`-cycle.
pub fn triple_cover(n_i: usize, n_rho: usize, n_inf: usize) -> Result<CoverCertificate, CoverError> {
    let (ok, _) = crate::monodromy::triple_condition(n_i as u32, n_rho as u32, n_inf as u32);
    if !ok {
        return Err(CoverError::BadParameters(format!(
            "triple ({n_i}, {n_rho}, {n_inf}) fails the odd-sum/triangle condition"
        )));
    }
    let d = (n_i + n_rho + n_inf - 1) / 2;
    let sigma1 = Perm::from_cycles(d, &[(1..=n_i).collect::<Vec<_>>()])?;
    let sigma2 = Perm::from_cycles(d, &[(d - n_rho + 1..=d).rev().collect::<Vec<_>>()])?;
    let mut expected = vec![n_inf];
    expected.extend(std::iter::repeat_n(1, d - n_inf));
    certify(d, vec![sigma1, sigma2], expected)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let p = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), vec![2, 2]);
        assert!(!is_transitive(std::slice::from_ref(&p)));
        let q = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(q.cycle_type(), vec![3]);
        assert!(is_transitive(std::slice::from_ref(&q)));
        assert_eq!(q.compose(&q.inverse()), Perm::identity(3));

        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn composition_direction() {
        // (3,2)(1,2) = (1,3,2): apply (1,2) first
        let s1 = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let s2 = Perm::from_cycles(3, &[vec![3, 2]]).unwrap();
        let prod = s2.compose(&s1);
        assert_eq!(prod.apply(1), 3);
        assert_eq!(prod.apply(3), 2);
        assert_eq!(prod.apply(2), 1);
        assert_eq!(prod.cycle_type(), vec![3]);
    }

    #[test]
    fn rho_family_certificates() {
        // l0 = 2, l = 0: product of the two 2-cycles is the identity
        let c = rho_family_cover(2, 0).unwrap();
        assert_eq!(c.product, Perm::identity(2));
        assert_eq!(c.product_type, vec![1, 1]);
        assert!(c.ok);

        // l0 = 2, l = 1: product is a 3-cycle
        let c = rho_family_cover(2, 1).unwrap();
        assert_eq!(c.product_type, vec![3]);
        assert!(c.ok);

        // exhaustive check for all 0 <= l < l0 <= 8
        for l0 in 1..=8 {
            for l in 0..l0 {
                let c = rho_family_cover(l0, l).unwrap();
                assert!(c.ok, "l0 = {l0}, l = {l}: {c:?}");
                assert_eq!(c.genus, 0);
            }
        }

        assert!(rho_family_cover(2, 2).is_err());
    }

    #[test]
    fn i_family_certificates() {
        // kappa = 2, l = 1, plus branch: degree 4, product a 4-cycle
        let c = i_family_cover(2, 1, BranchSign::Plus).unwrap();
        assert_eq!(c.degree, 4);
        assert_eq!(c.product_type, vec![4]);
        assert!(c.ok);

        // kappa = 1, l = 0, plus branch: everything trivial in degree 1
        let c = i_family_cover(1, 0, BranchSign::Plus).unwrap();
        assert_eq!(c.degree, 1);
        assert_eq!(c.product_type, vec![1]);
        assert!(c.ok);

        // kappa = 3, l = 2, minus branch: degree 6, 5-cycle and a fixed point
        let c = i_family_cover(3, 2, BranchSign::Minus).unwrap();
        assert_eq!(c.degree, 6);
        assert_eq!(c.product_type, vec![5, 1]);
        assert!(c.ok);

        // parity violations and bad offsets
        assert!(i_family_cover(2, 0, BranchSign::Plus).is_err());
        assert!(i_family_cover(3, 0, BranchSign::Minus).is_err());
        assert!(i_family_cover(2, 3, BranchSign::Plus).is_err());
    }

    #[test]
    fn triple_certificates() {
        let c = triple_cover(2, 2, 3).unwrap();
        assert_eq!(c.degree, 3);
        assert_eq!(c.product_type, vec![3]);
        assert!(c.ok);

        let c = triple_cover(1, 1, 1).unwrap();
        assert_eq!(c.degree, 1);
        assert!(c.ok);

        // (1, n, n): trivial first cycle, n-cycle second, n-cycle product
        for n in 2..=6 {
            let c = triple_cover(1, n, n).unwrap();
            assert_eq!(c.degree, n);
            assert_eq!(c.product_type[0], n);
            assert!(c.ok);
        }

        assert!(triple_cover(1, 1, 3).is_err());
        assert!(triple_cover(2, 2, 2).is_err());
    }

    #[test]
    fn genus_counts() {
        // unbranched degree-1 cover of the sphere
        assert_eq!(riemann_hurwitz(1, &[vec![1], vec![1]]).unwrap(), 0);
        // rho-family data: two l0-cycles and a (2l+1)-cycle
        let (l0, l) = (4usize, 2usize);
        let d = l0 + l;
        let types = vec![
            {
                let mut t = vec![l0];
                t.extend(std::iter::repeat_n(1, d - l0));
                t
            },
            {
                let mut t = vec![l0];
                t.extend(std::iter::repeat_n(1, d - l0));
                t
            },
            {
                let mut t = vec![2 * l + 1];
                t.extend(std::iter::repeat_n(1, d - 2 * l - 1));
                t
            },
        ];
        assert_eq!(riemann_hurwitz(d, &types).unwrap(), 0);
        // torus-style data: two 2-cycles and... a mismatched partition
        assert!(riemann_hurwitz(3, &[vec![2]]).is_err());
        // odd total ramification cannot close up
        assert!(riemann_hurwitz(2, &[vec![2]]).is_err());
    }
}
