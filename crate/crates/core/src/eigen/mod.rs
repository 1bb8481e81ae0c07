//! Symmetric eigensolver, exact characteristic polynomials, simultaneous
//! diagonalization, and spectrum comparison.

mod charpoly;
mod coeigen;
mod jacobi;
mod poly;
mod roots;

pub use charpoly::charpoly_exact;
pub use coeigen::{co_eigen, CoEigenSystem, MEMBERSHIP_TOL};
pub use jacobi::{eig_sym, EigenDecomposition, DEFAULT_TOL, MAX_SWEEPS};
pub use poly::RationalPoly;
pub use roots::{real_roots, square_free};

use crate::error::{Error, Result};

/// Sorted eigenvalues with multiplicity.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest absolute entrywise difference against `other`.
    pub fn max_deviation(&self, other: &Spectrum) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!("spectra of sizes {} and {}", self.len(), other.len())));
        }
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
    }
}

impl From<Vec<f64>> for Spectrum {
    fn from(values: Vec<f64>) -> Self {
        Spectrum::new(values)
    }
}

/// Entrywise comparison of sorted spectra.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<bool> {
    Ok(a.max_deviation(b)? <= tol)
}

/// Exact coefficient equality.
pub fn polys_equal(p: &RationalPoly, q: &RationalPoly) -> Result<bool> {
    if p.degree() != q.degree() {
        return Err(Error::DimensionMismatch(format!("polynomials of degree {} and {}", p.degree(), q.degree())));
    }
    Ok(p == q)
}

/// Eigenvalues of the symmetric float view of `m`.
pub fn spectrum_of(m: &crate::linalg::FMatrix, tol: f64) -> Result<Spectrum> {
    Ok(Spectrum::new(eig_sym(m, tol)?.values))
}
