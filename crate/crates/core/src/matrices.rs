//! Adjacency, Laplacian and normalized Laplacian of a weighted hypergraph.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::eigen::{self, RationalPoly, Spectrum};
use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::linalg::{FMatrix, RatMatrix};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian];

    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adj",
            MatrixKind::Laplacian => "lap",
            MatrixKind::NormalizedLaplacian => "nlap",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adj" | "adjacency" | "A" => Ok(MatrixKind::Adjacency),
            "lap" | "laplacian" | "L" => Ok(MatrixKind::Laplacian),
            "nlap" | "normalized" | "normalized-laplacian" => Ok(MatrixKind::NormalizedLaplacian),
            other => Err(Error::InvalidParameter(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Symmetric matrix with an exact view (when the entries are rational) and a
/// floating view derived on first use.
#[derive(Debug, Clone)]
pub struct SymMatrix {
    exact: Option<RatMatrix>,
    float: OnceLock<FMatrix>,
}

impl SymMatrix {
    pub fn from_exact(m: RatMatrix) -> Result<Self> {
        if let Some((i, j)) = m.asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(SymMatrix { exact: Some(m), float: OnceLock::new() })
    }

    pub fn from_float(m: FMatrix) -> Self {
        let float = OnceLock::new();
        let _ = float.set(m);
        SymMatrix { exact: None, float }
    }

    pub fn order(&self) -> usize {
        self.float().rows()
    }

    pub fn exact(&self) -> Option<&RatMatrix> {
        self.exact.as_ref()
    }

    pub fn float(&self) -> &FMatrix {
        self.float.get_or_init(|| self.exact.as_ref().map(RatMatrix::to_f64).unwrap_or_else(|| FMatrix::zeros(0, 0)))
    }

    pub fn spectrum(&self, tol: f64) -> Result<Spectrum> {
        eigen::spectrum_of(self.float(), tol)
    }
}

fn check_loops(h: &Hypergraph) -> Result<()> {
    match h.edges().iter().find(|e| e.len() < 2) {
        Some(e) => Err(Error::LoopEdge(e.vertices.clone())),
        None => Ok(()),
    }
}

fn adjacency_exact(h: &Hypergraph) -> Result<RatMatrix> {
    check_loops(h)?;
    let n = h.n();
    let mut a = RatMatrix::zeros(n, n);
    for e in h.edges() {
        let share = &e.weight / rational::int(e.len() as i64 - 1);
        for (x, &u) in e.vertices.iter().enumerate() {
            for &v in &e.vertices[x + 1..] {
                a[(u - 1, v - 1)] += &share;
                a[(v - 1, u - 1)] += &share;
            }
        }
    }
    Ok(a)
}

fn laplacian_exact(h: &Hypergraph) -> Result<RatMatrix> {
    let a = adjacency_exact(h)?;
    let mut l = &RatMatrix::zeros(h.n(), h.n()) - &a;
    for (i, d) in h.valencies().into_iter().enumerate() {
        l[(i, i)] = d;
    }
    Ok(l)
}

fn positive_valencies(h: &Hypergraph) -> Result<Vec<Rational>> {
    let d = h.valencies();
    match d.iter().position(Zero::is_zero) {
        Some(i) => Err(Error::IsolatedVertex(i + 1)),
        None => Ok(d),
    }
}

pub fn adjacency(h: &Hypergraph) -> Result<SymMatrix> {
    SymMatrix::from_exact(adjacency_exact(h)?)
}

pub fn laplacian(h: &Hypergraph) -> Result<SymMatrix> {
    SymMatrix::from_exact(laplacian_exact(h)?)
}

/// `D^{-1/2} L D^{-1/2}` in floating point.
pub fn normalized_laplacian(h: &Hypergraph) -> Result<SymMatrix> {
    let l = laplacian_exact(h)?;
    let d = positive_valencies(h)?;
    let s: Vec<f64> = d.iter().map(|v| rational::to_f64(v).sqrt()).collect();
    let n = h.n();
    let mut m = FMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = rational::to_f64(&(&l[(i, i)] / &d[i]));
        for j in i + 1..n {
            let v = rational::to_f64(&l[(i, j)]) / (s[i] * s[j]);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    Ok(SymMatrix::from_float(m))
}

/// `D^{-1} L`: exact, similar to the normalized Laplacian, generally not symmetric.
pub fn similar_rational(h: &Hypergraph) -> Result<RatMatrix> {
    let l = laplacian_exact(h)?;
    let d = positive_valencies(h)?;
    Ok(RatMatrix::from_fn(h.n(), h.n(), |i, j| &l[(i, j)] / &d[i]))
}

pub fn matrix(h: &Hypergraph, kind: MatrixKind) -> Result<SymMatrix> {
    match kind {
        MatrixKind::Adjacency => adjacency(h),
        MatrixKind::Laplacian => laplacian(h),
        MatrixKind::NormalizedLaplacian => normalized_laplacian(h),
    }
}

/// The exact rational matrix whose characteristic polynomial certifies `kind`.
pub fn exact_matrix(h: &Hypergraph, kind: MatrixKind) -> Result<RatMatrix> {
    match kind {
        MatrixKind::Adjacency => adjacency_exact(h),
        MatrixKind::Laplacian => laplacian_exact(h),
        MatrixKind::NormalizedLaplacian => similar_rational(h),
    }
}

pub fn exact_charpoly(h: &Hypergraph, kind: MatrixKind) -> Result<RationalPoly> {
    eigen::charpoly_exact(&exact_matrix(h, kind)?)
}

pub fn direct_spectrum(h: &Hypergraph, kind: MatrixKind, tol: f64) -> Result<Spectrum> {
    matrix(h, kind)?.spectrum(tol)
}
