//! Closed-form cross counts used by the spectral formulas, with brute-force
//! enumerators for checking them.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypercore::WeightTable;
use crate::rational::{self, binomial, binomial_q, Rational};
use crate::subsets::for_each_combination;

/// Cap on `Σ sizes` for the enumerating oracles.
pub const ORACLE_MAX_VERTICES: usize = 20;

/// Coefficient of `x^total` in `Π_t Σ_{l >= min_t} C(top_t, l) x^l`.
fn composition_sum(factors: &[(i64, usize)], total: usize) -> BigInt {
    let mut acc = vec![BigInt::one()];
    for &(top, min) in factors {
        let top_len = top.max(0) as usize;
        let mut next = vec![BigInt::zero(); (acc.len() + top_len).min(total + 1)];
        for (a, ca) in acc.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for l in min..=top_len {
                if a + l > total {
                    break;
                }
                next[a + l] += ca * binomial(top, l as i64);
            }
        }
        acc = next;
    }
    acc.get(total).cloned().unwrap_or_default()
}

fn check_pair(sizes: &[usize], i: usize, j: usize) -> Result<()> {
    let k = sizes.len();
    if i < 1 || j < 1 || i > k || j > k {
        return Err(Error::InvalidParameter(format!("class indices ({i}, {j}) outside 1..={k}")));
    }
    if i == j && sizes[i - 1] < 2 {
        return Err(Error::InvalidParameter(format!("class {i} has fewer than two vertices")));
    }
    Ok(())
}

/// Number of `c`-subsets that contain fixed `p ∈ V_i`, `q ∈ V_j` (`p != q`) and
/// meet every class. Indices are 1-based.
pub fn n_cross(sizes: &[usize], i: usize, j: usize, c: usize) -> Result<BigInt> {
    check_pair(sizes, i, j)?;
    if c < 2 {
        return Ok(BigInt::zero());
    }
    let factors: Vec<(i64, usize)> = sizes
        .iter()
        .enumerate()
        .map(|(t, &n)| {
            let t = t + 1;
            let fixed = usize::from(t == i) + usize::from(t == j);
            let min = usize::from(t != i && t != j);
            (n as i64 - fixed as i64, min)
        })
        .collect();
    Ok(composition_sum(&factors, c - 2))
}

fn union_classes(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(t, &n)| std::iter::repeat_n(t, n)).collect()
}

fn fixed_pair(sizes: &[usize], i: usize, j: usize) -> (usize, usize) {
    let start: usize = sizes[..i - 1].iter().sum();
    let p = start;
    let q = if i == j { start + 1 } else { sizes[..j - 1].iter().sum() };
    (p, q)
}

/// Enumerates the `c`-subsets counted by [`n_cross`]. Limited to
/// [`ORACLE_MAX_VERTICES`] vertices.
pub fn n_cross_oracle(sizes: &[usize], i: usize, j: usize, c: usize) -> Result<BigInt> {
    check_pair(sizes, i, j)?;
    let total: usize = sizes.iter().sum();
    if total > ORACLE_MAX_VERTICES {
        return Err(Error::EnumerationTooLarge(format!("{total} vertices, oracle limit {ORACLE_MAX_VERTICES}")));
    }
    if c < 2 || c > total {
        return Ok(BigInt::zero());
    }
    let class_of = union_classes(sizes);
    let (p, q) = fixed_pair(sizes, i, j);
    let rest: Vec<usize> = (0..total).filter(|&v| v != p && v != q).collect();
    let mut count = 0u64;
    for_each_combination(&rest, c - 2, |s| {
        let mut hit = vec![false; sizes.len()];
        for &v in s.iter().chain([&p, &q]) {
            hit[class_of[v]] = true;
        }
        if hit.iter().all(|&b| b) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Number of `c`-subsets containing fixed `p ∈ V_i`, `q ∈ V_j` with at most one
/// vertex per class: the elementary symmetric sum of degree `c - 2` of the
/// other class sizes. Zero when `i == j` or `c < 2`.
pub fn q_cross(sizes: &[usize], i: usize, j: usize, c: usize) -> Result<BigInt> {
    let k = sizes.len();
    if i < 1 || j < 1 || i > k || j > k {
        return Err(Error::InvalidParameter(format!("class indices ({i}, {j}) outside 1..={k}")));
    }
    if i == j || c < 2 {
        return Ok(BigInt::zero());
    }
    let mut e = vec![BigInt::one()];
    for (t, &n) in sizes.iter().enumerate() {
        if t + 1 == i || t + 1 == j {
            continue;
        }
        e.push(BigInt::zero());
        for d in (1..e.len()).rev() {
            let prev = e[d - 1].clone();
            e[d] += prev * n;
        }
    }
    Ok(e.get(c - 2).cloned().unwrap_or_default())
}

fn check_nl(n: usize, l: usize) -> Result<()> {
    if n < 2 || l < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2 and l >= 2, got n = {n}, l = {l}")));
    }
    Ok(())
}

/// `c`-subsets of `l` copies of an `n`-set that contain two fixed vertices of copy
/// 1 and meet some other copy.
pub fn p1(n: usize, l: usize, c: usize) -> Result<BigInt> {
    check_nl(n, l)?;
    if c <= 2 {
        return Ok(BigInt::zero());
    }
    let t = (c - 2) as i64;
    // all compositions, by Vandermonde, minus those staying inside copy 1
    Ok(binomial((l * n) as i64 - 2, t) - binomial(n as i64 - 2, t))
}

/// `c`-subsets of `l` copies of an `n`-set containing a fixed vertex of copy 1
/// and a fixed vertex of copy 2.
pub fn p2(n: usize, l: usize, c: usize) -> Result<BigInt> {
    check_nl(n, l)?;
    if c < 2 {
        return Ok(BigInt::zero());
    }
    Ok(binomial((l * n) as i64 - 2, (c - 2) as i64))
}

/// `x1 = C(n-1, r-1)/(2r-1)`, `x2 = C(n-2, r-2)/(2r-1)` (0 when `r = 1`).
pub fn x1x2(n: usize, r: usize) -> Result<(Rational, Rational)> {
    if r < 1 || r > n {
        return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
    }
    let d = rational::int(2 * r as i64 - 1);
    let x1 = binomial_q(n as i64 - 1, r as i64 - 1) / &d;
    let x2 = if r == 1 { rational::int(0) } else { binomial_q(n as i64 - 2, r as i64 - 2) / &d };
    Ok((x1, x2))
}

/// Constants of the `k`-copy operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KCopyConstants {
    pub p1p: Rational,
    pub p2p: Rational,
    pub p12: Rational,
    pub p21: Rational,
    pub p22: Rational,
}

pub fn k_copy_constants(k: usize, l: usize, n: usize, r: usize, w: &WeightTable) -> Result<KCopyConstants> {
    if l < 2 || l > k {
        return Err(Error::InvalidParameter(format!("need 2 <= l <= k, got l = {l}, k = {k}")));
    }
    if r < 1 || r > n {
        return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
    }
    check_nl(n, l)?;
    let (k, l, ni, ri) = (k as i64, l as i64, n as i64, r as i64);
    let b = binomial_q;
    let mut s1 = rational::int(0);
    let mut s2 = rational::int(0);
    for c in 2..=(l * ni) as usize {
        let share = w.get(c) / rational::int(c as i64 - 1);
        s1 += &share * rational::from_big(&p1(n, l as usize, c)?);
        s2 += &share * rational::from_big(&p2(n, l as usize, c)?);
    }
    let lr = (l * ri) as usize;
    let wl = w.get(lr) / rational::int(lr as i64 - 1);
    let zero = rational::int(0);
    Ok(KCopyConstants {
        p1p: b(k - 1, l - 1) * s1,
        p2p: b(k - 2, l - 2) * s2,
        p12: if r == 1 { zero.clone() } else { &wl * b(k - 1, l - 1) * b(ni - 2, ri - 2) },
        p21: &wl * b(k - 2, l - 2) * b(ni - 1, ri - 1),
        p22: if r == 1 { zero } else { &wl * b(k - 2, l - 2) * b(ni - 2, ri - 2) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn n_cross_examples() {
        for f in [n_cross, n_cross_oracle] {
            assert_eq!(f(&[2, 2], 1, 2, 2).unwrap(), big(1));
            assert_eq!(f(&[3, 3], 1, 1, 3).unwrap(), big(3));
            assert_eq!(f(&[3, 3], 1, 2, 3).unwrap(), big(4));
        }
        assert!(n_cross(&[2, 2], 1, 3, 2).is_err());
        assert!(n_cross(&[1, 2], 1, 1, 2).is_err());
        assert!(n_cross_oracle(&[11, 11], 1, 2, 2).is_err());
    }

    #[test]
    fn q_cross_examples() {
        assert_eq!(q_cross(&[2, 2, 2], 1, 2, 3).unwrap(), big(2));
        assert_eq!(q_cross(&[2, 2, 2], 2, 2, 3).unwrap(), big(0));
        assert_eq!(q_cross(&[2, 3, 4], 1, 3, 4).unwrap(), big(0));
        assert_eq!(q_cross(&[2, 3, 4, 5], 1, 3, 4).unwrap(), big(15));
        assert_eq!(q_cross(&[2, 3], 1, 2, 2).unwrap(), big(1));
    }

    #[test]
    fn p_examples() {
        assert_eq!(p1(3, 2, 3).unwrap(), big(3));
        assert_eq!(p1(5, 4, 2).unwrap(), big(0));
        assert_eq!(p2(2, 2, 2).unwrap(), big(1));
        assert!(p1(1, 2, 3).is_err());
    }

    #[test]
    fn x_examples() {
        assert_eq!(x1x2(3, 2).unwrap(), (ratio(2, 3), ratio(1, 3)));
        assert_eq!(x1x2(7, 1).unwrap(), (int(1), int(0)));
        assert_eq!(x1x2(2, 2).unwrap(), (ratio(1, 3), ratio(1, 3)));
        assert!(x1x2(2, 3).is_err());
    }

    #[test]
    fn k_copy_examples() {
        let c = k_copy_constants(2, 2, 2, 1, &WeightTable::ones()).unwrap();
        assert_eq!((c.p21, c.p22, c.p12), (int(1), int(0), int(0)));
        let w = WeightTable::zeros().with(4, int(1)).unwrap();
        let c = k_copy_constants(3, 2, 2, 2, &w).unwrap();
        assert_eq!(c.p12, ratio(2, 3));
        assert!(k_copy_constants(2, 3, 2, 1, &w).is_err());
    }
}
