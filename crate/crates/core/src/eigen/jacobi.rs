use crate::error::{Error, Result};
use crate::linalg::FMatrix;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors (columns).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: FMatrix,
}

/// Cyclic Jacobi eigensolver for a dense symmetric matrix.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `tol * max(1, ||M||_F)`.
pub fn eig_sym(m: &FMatrix, tol: f64) -> Result<EigenDecomposition> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::DimensionMismatch(format!("eigensolve of a {}x{} matrix", n, m.cols())));
    }
    let scale = m.frobenius().max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 * scale {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut a = FMatrix::from_fn(n, n, |i, j| 0.5 * (m[(i, j)] + m[(j, i)]));
    let mut v = FMatrix::identity(n);
    let threshold = tol * scale;

    let off = |a: &FMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[(i, j)] * a[(i, j)];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    while off(&a) >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = FMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-10)
    }

    #[test]
    fn identity_and_ones() {
        assert!(close(&eig_sym(&FMatrix::identity(3), DEFAULT_TOL).unwrap().values, &[1.0; 3]));
        let j = FMatrix::from_fn(3, 3, |_, _| 1.0);
        assert!(close(&eig_sym(&j, DEFAULT_TOL).unwrap().values, &[0.0, 0.0, 3.0]));
    }

    #[test]
    fn complete_graph_k6() {
        let a = FMatrix::from_fn(6, 6, |i, j| if i == j { 0.0 } else { 1.0 });
        let e = eig_sym(&a, DEFAULT_TOL).unwrap();
        assert!(close(&e.values, &[-1.0, -1.0, -1.0, -1.0, -1.0, 5.0]));
        let vt_v = e.vectors.transpose().matmul(&e.vectors);
        assert!(vt_v.sub(&FMatrix::identity(6)).frobenius() < 1e-10);
    }

    #[test]
    fn rejects_nonsymmetric() {
        let m = FMatrix::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert_eq!(eig_sym(&m, DEFAULT_TOL).unwrap_err(), Error::NotSymmetric(0, 1));
    }
}
