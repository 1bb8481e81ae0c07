use super::jacobi::eig_sym;
use crate::error::{Error, Result};
use crate::linalg::{FMatrix, RatMatrix};

/// Tolerance deciding whether two eigenvalues belong to one eigenspace.
pub const MEMBERSHIP_TOL: f64 = 1e-8;

/// A common orthonormal eigenbasis of commuting symmetric matrices.
#[derive(Debug, Clone)]
pub struct CoEigenSystem {
    /// Basis vectors.
    pub vectors: Vec<Vec<f64>>,
    /// `values[t][i]` is the eigenvalue of matrix `i` on vector `t`.
    pub values: Vec<Vec<f64>>,
}

/// Simultaneously diagonalizes `ms`: eigendecompose the first matrix, then split each
/// eigenspace by the next matrix restricted to it, and so on.
pub fn co_eigen(ms: &[RatMatrix], tol: f64) -> Result<CoEigenSystem> {
    let Some(first) = ms.first() else {
        return Ok(CoEigenSystem { vectors: Vec::new(), values: Vec::new() });
    };
    let n = first.rows();
    for (i, m) in ms.iter().enumerate() {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!("matrix {i} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
        }
        if let Some((a, b)) = m.asymmetry() {
            return Err(Error::NotSymmetric(a, b));
        }
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if &ms[i] * &ms[j] != &ms[j] * &ms[i] {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }

    let floats: Vec<FMatrix> = ms.iter().map(RatMatrix::to_f64).collect();
    // Each subspace is a list of orthonormal columns.
    let mut spaces: Vec<Vec<Vec<f64>>> = vec![(0..n).map(|i| unit(n, i)).collect()];
    for m in &floats {
        let mut refined = Vec::new();
        for q in spaces {
            let d = q.len();
            let mq: Vec<Vec<f64>> = q.iter().map(|x| m.matvec(x)).collect();
            let restricted = FMatrix::from_fn(d, d, |a, b| dot(&q[a], &mq[b]));
            let restricted = FMatrix::from_fn(d, d, |a, b| 0.5 * (restricted[(a, b)] + restricted[(b, a)]));
            let eig = eig_sym(&restricted, tol)?;
            let rotated: Vec<Vec<f64>> = (0..d)
                .map(|col| {
                    let mut v = vec![0.0; n];
                    for (a, qa) in q.iter().enumerate() {
                        let c = eig.vectors[(a, col)];
                        for (vi, x) in v.iter_mut().zip(qa) {
                            *vi += c * x;
                        }
                    }
                    v
                })
                .collect();
            let mut start = 0;
            for end in 1..=d {
                if end == d || eig.values[end] - eig.values[end - 1] > MEMBERSHIP_TOL * eig.values[end].abs().max(1.0) {
                    refined.push(rotated[start..end].to_vec());
                    start = end;
                }
            }
        }
        spaces = refined;
    }

    let vectors: Vec<Vec<f64>> = spaces.into_iter().flatten().collect();
    let values = vectors.iter().map(|x| floats.iter().map(|m| dot(x, &m.matvec(x))).collect()).collect();
    Ok(CoEigenSystem { vectors, values })
}

fn unit(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::jacobi::DEFAULT_TOL;

    #[test]
    fn cycle_and_ones() {
        let c4 = RatMatrix::from_i64(&[&[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0]]);
        let sys = co_eigen(&[c4, RatMatrix::ones(4)], DEFAULT_TOL).unwrap();
        let mut tuples: Vec<(i64, i64)> =
            sys.values.iter().map(|t| (t[0].round() as i64, t[1].round() as i64)).collect();
        tuples.sort();
        assert_eq!(tuples, vec![(-2, 0), (0, 0), (0, 0), (2, 4)]);
    }

    #[test]
    fn identity_pair() {
        let sys = co_eigen(&[RatMatrix::identity(3), RatMatrix::identity(3)], DEFAULT_TOL).unwrap();
        assert!(sys.values.iter().all(|t| (t[0] - 1.0).abs() < 1e-12 && (t[1] - 1.0).abs() < 1e-12));
    }

    #[test]
    fn path_does_not_commute_with_ones() {
        let p3 = RatMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(co_eigen(&[p3, RatMatrix::ones(3)], DEFAULT_TOL).unwrap_err(), Error::NotCommuting(0, 1));
    }
}
