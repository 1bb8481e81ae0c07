//! Closed-form characteristic polynomials of joins, two-copy and k-copy
//! operations, lexicographic products and partite hypergraphs.

mod copies;
mod join;

pub use copies::{
    k_copy_charpoly, k_copy_table, two_copy_charpoly, two_copy_equal_charpoly, two_copy_spectrum, two_copy_table,
    two_copy_valencies, CopyTable, TwoCopyTable,
};
pub use join::{
    backbone_join_charpoly, backbone_spec, catalog_charpoly, join_charpoly, lexicographic_charpoly,
    lexicographic_uniform_charpoly, strong_partite_charpoly, uniform_join_charpoly, CatalogRow, ConstituentSummary,
    JoinSpec, TableValues,
};

use std::fmt;

use num_traits::Zero;

use crate::eigen::{self, RationalPoly, Spectrum};
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rational::{self, Rational};

/// Characteristic polynomial kept as rational roots, other monic factors, and an
/// optional quotient matrix whose characteristic polynomial is a further factor.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CharPolyFactored {
    roots: Vec<(Rational, usize)>,
    factors: Vec<(RationalPoly, usize)>,
    quotient: Option<RatMatrix>,
}

impl CharPolyFactored {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_root(&mut self, root: Rational, mult: usize) {
        if mult == 0 {
            return;
        }
        match self.roots.iter_mut().find(|(r, _)| *r == root) {
            Some((_, m)) => *m += mult,
            None => {
                self.roots.push((root, mult));
                self.roots.sort_by(|a, b| a.0.cmp(&b.0));
            }
        }
    }

    /// Adds `p^mult` for a monic (or monic-able) polynomial `p`.
    pub fn push(&mut self, p: RationalPoly, mult: usize) {
        let p = p.monic();
        if mult == 0 || p.degree() == 0 {
            return;
        }
        if let Some((r, d)) = p.as_linear_power() {
            self.push_root(r, d * mult);
        } else if let Some((_, m)) = self.factors.iter_mut().find(|(q, _)| *q == p) {
            *m += mult;
        } else {
            self.factors.push((p, mult));
        }
    }

    pub fn set_quotient(&mut self, r: RatMatrix) {
        self.quotient = Some(r);
    }

    pub fn roots(&self) -> &[(Rational, usize)] {
        &self.roots
    }

    pub fn factors(&self) -> &[(RationalPoly, usize)] {
        &self.factors
    }

    pub fn quotient(&self) -> Option<&RatMatrix> {
        self.quotient.as_ref()
    }

    pub fn degree(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum::<usize>()
            + self.factors.iter().map(|(p, m)| p.degree() * m).sum::<usize>()
            + self.quotient.as_ref().map_or(0, RatMatrix::rows)
    }

    /// Product of every factor, including the quotient's characteristic polynomial.
    pub fn expand(&self) -> Result<RationalPoly> {
        let mut acc = RationalPoly::one();
        for (r, m) in &self.roots {
            acc = &acc * &RationalPoly::linear(r).pow(*m);
        }
        for (p, m) in &self.factors {
            acc = &acc * &p.pow(*m);
        }
        if let Some(q) = &self.quotient {
            acc = &acc * &eigen::charpoly_exact(q)?;
        }
        Ok(acc)
    }

    /// Real roots of every factor, with multiplicity.
    pub fn float_roots(&self) -> Result<Spectrum> {
        let mut out = Vec::with_capacity(self.degree());
        for (r, m) in &self.roots {
            out.extend(std::iter::repeat_n(rational::to_f64(r), *m));
        }
        for (p, m) in &self.factors {
            let rs = eigen::real_roots(p);
            if rs.len() != p.degree() {
                return Err(Error::InvalidParameter(format!("factor {p} has non-real roots")));
            }
            for _ in 0..*m {
                out.extend_from_slice(&rs);
            }
        }
        if let Some(q) = &self.quotient {
            let p = eigen::charpoly_exact(q)?;
            let rs = eigen::real_roots(&p);
            if rs.len() != p.degree() {
                return Err(Error::InvalidParameter("quotient has non-real eigenvalues".into()));
            }
            out.extend(rs);
        }
        Ok(Spectrum::new(out))
    }

    /// Multiplies in every factor of `other`.
    pub fn absorb(&mut self, other: CharPolyFactored) -> Result<()> {
        for (r, m) in other.roots {
            self.push_root(r, m);
        }
        for (p, m) in other.factors {
            self.push(p, m);
        }
        if let Some(q) = other.quotient {
            self.push(eigen::charpoly_exact(&q)?, 1);
        }
        Ok(())
    }
}

impl fmt::Display for CharPolyFactored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (r, m) in &self.roots {
            let base = RationalPoly::linear(r);
            parts.push(if *m == 1 { format!("({base})") } else { format!("({base})^{m}") });
        }
        for (p, m) in &self.factors {
            parts.push(if *m == 1 { format!("({p})") } else { format!("({p})^{m}") });
        }
        if let Some(q) = &self.quotient {
            parts.push(format!("det(xI - R), R of order {}", q.rows()));
        }
        if parts.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&parts.join(" "))
    }
}

/// Spectrum of a block matrix whose block `(i, j)` has constant row sum
/// `rho[i][j] * n_j` off the diagonal and designated row sum `a_i` on it.
///
/// `blocks[i] = (charpoly of the diagonal block, a_i, n_i)`. One copy of `a_i`
/// is removed from each block and replaced by the quotient with diagonal `a_i`
/// and off-diagonal `rho[i][j] * n_j`.
pub fn block_spectrum(blocks: &[(RationalPoly, Rational, usize)], rho: &RatMatrix) -> Result<CharPolyFactored> {
    let k = blocks.len();
    if rho.rows() != k || rho.cols() != k {
        return Err(Error::DimensionMismatch(format!("rho is {}x{}, expected {k}x{k}", rho.rows(), rho.cols())));
    }
    let mut out = CharPolyFactored::new();
    for (i, (p, a, n)) in blocks.iter().enumerate() {
        if p.degree() != *n {
            return Err(Error::DimensionMismatch(format!(
                "block {i}: polynomial of degree {} for size {n}",
                p.degree()
            )));
        }
        let (rest, rem) = p.div_rem(&RationalPoly::linear(a));
        if !rem.is_zero() || *n == 0 {
            return Err(Error::MissingRowSum(format!("{} in block {i}", rational::format(a))));
        }
        out.push(rest, 1);
    }
    let r = RatMatrix::from_fn(k, k, |i, j| {
        if i == j {
            blocks[i].1.clone()
        } else {
            &rho[(i, j)] * rational::int(blocks[j].2 as i64)
        }
    });
    out.set_quotient(r);
    Ok(out)
}

/// Companion matrix of a monic polynomial.
pub(crate) fn companion(p: &RationalPoly) -> RatMatrix {
    let p = p.monic();
    let d = p.degree();
    RatMatrix::from_fn(d, d, |i, j| {
        if j == d - 1 {
            -p.coeff(i)
        } else if i == j + 1 {
            rational::int(1)
        } else {
            Rational::zero()
        }
    })
}
