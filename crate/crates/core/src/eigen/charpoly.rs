use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::RationalPoly;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{self, Rational};

/// Monic `det(xI - M)` by the Faddeev-LeVerrier recurrence.
///
/// The matrix is first scaled to an integer matrix `B = dM`, the recurrence runs
/// over big integers (every division by `k` is exact there), and coefficient `k`
/// is divided by `d^k` at the end. Works for non-symmetric input too.
pub fn charpoly_exact(m: &RatMatrix) -> Result<RationalPoly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("charpoly of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let d = rational::common_denominator(m.entries());
    let b: Vec<BigInt> = m.entries().iter().map(|v| (v * Rational::from_integer(d.clone())).to_integer()).collect();

    // c[k] is the coefficient of x^(n-k) for B.
    let mut c = vec![BigInt::one()];
    let mut mk = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        // M_k = B * M_{k-1} + c_{k-1} I, with M_0 = 0.
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let bil = &b[i * n + l];
                if bil.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &mk[l * n + j];
                    if !v.is_zero() {
                        next[i * n + j] += bil * v;
                    }
                }
            }
        }
        for i in 0..n {
            next[i * n + i] += &c[k - 1];
        }
        mk = next;
        // c_k = -tr(B M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &b[i * n + l] * &mk[l * n + i];
            }
        }
        c.push(-tr / BigInt::from(k));
    }

    let dq = Rational::from_integer(d);
    let mut scale = Rational::one();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, ck) in c.into_iter().enumerate() {
        coeffs[n - k] = Rational::from_integer(ck) / &scale;
        scale *= &dq;
    }
    Ok(RationalPoly::new(coeffs))
}
