use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{block_spectrum, CharPolyFactored};
use crate::counting;
use crate::eigen::RationalPoly;
use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, WeightTable};
use crate::linalg::{FMatrix, RatMatrix};
use crate::matrices::{self, MatrixKind};
use crate::rational::{self, Rational};
use crate::tensorjoin::{ClassSequence, ConstantCounts, EdgeFamily};

/// Order, common valency and adjacency characteristic polynomial of a regular
/// constituent.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstituentSummary {
    pub n: usize,
    pub r: Rational,
    pub charpoly: RationalPoly,
}

impl ConstituentSummary {
    pub fn of(g: &Hypergraph) -> Result<Self> {
        let r = g.is_regular().ok_or(Error::NotRegular)?;
        let charpoly = matrices::exact_charpoly(g, MatrixKind::Adjacency)?;
        Ok(ConstituentSummary { n: g.n(), r, charpoly })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        ConstituentSummary { n, r: Rational::zero(), charpoly: RationalPoly::linear(&Rational::zero()).pow(n) }
    }

    /// The adjacency characteristic polynomial with one factor `x - r` removed.
    pub fn non_perron(&self) -> Result<RationalPoly> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("empty constituent".into()));
        }
        let (q, rem) = self.charpoly.div_rem(&RationalPoly::linear(&self.r));
        if !rem.is_zero() {
            return Err(Error::InvalidParameter(format!(
                "{} is not an adjacency eigenvalue",
                rational::format(&self.r)
            )));
        }
        Ok(q)
    }
}

/// Everything the join formula consumes.
#[derive(Debug, Clone)]
pub struct JoinSpec {
    pub constituents: Vec<ConstituentSummary>,
    /// Cross counts `n_ij^(c)` keyed by 0-based classes.
    pub counts: ConstantCounts,
    pub weights: WeightTable,
    pub kind: MatrixKind,
}

impl JoinSpec {
    pub fn new(
        constituents: Vec<ConstituentSummary>,
        counts: ConstantCounts,
        weights: WeightTable,
        kind: MatrixKind,
    ) -> Result<Self> {
        if counts.k != constituents.len() {
            return Err(Error::DimensionMismatch(format!(
                "counts over {} classes, {} constituents",
                counts.k,
                constituents.len()
            )));
        }
        if let Some(&(i, j, c)) = counts.counts.keys().find(|&&(i, j, c)| j >= counts.k || i > j || c < 2) {
            return Err(Error::InvalidParameter(format!("bad count key ({i}, {j}, {c})")));
        }
        Ok(JoinSpec { constituents, counts, weights, kind })
    }

    /// Summaries of `gs` and the constant counts of `f`.
    pub fn from_join(gs: &[Hypergraph], f: &EdgeFamily, w: &WeightTable, kind: MatrixKind) -> Result<Self> {
        let sizes: Vec<usize> = gs.iter().map(Hypergraph::n).collect();
        if sizes != f.classes().sizes() {
            return Err(Error::DimensionMismatch(format!(
                "constituent sizes {sizes:?} differ from class sizes {:?}",
                f.classes().sizes()
            )));
        }
        let constituents = gs.iter().map(ConstituentSummary::of).collect::<Result<Vec<_>>>()?;
        JoinSpec::new(constituents, f.cross_counts().constant()?, w.clone(), kind)
    }

    pub fn k(&self) -> usize {
        self.constituents.len()
    }

    /// `Σ_c w_c n_ij^(c) / (c - 1)`.
    pub fn s(&self, i: usize, j: usize) -> Rational {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.counts
            .counts
            .iter()
            .filter(|(&(x, y, _), _)| (x, y) == (a, b))
            .map(|(&(_, _, c), &v)| self.weights.get(c) * rational::int(v as i64) / rational::int(c as i64 - 1))
            .sum()
    }

    /// Valency of every vertex of class `i` in the join.
    pub fn z(&self) -> Vec<Rational> {
        (0..self.k())
            .map(|i| {
                let ci = &self.constituents[i];
                let mut z = ci.r.clone() + rational::int(ci.n as i64 - 1) * self.s(i, i);
                for (j, cj) in self.constituents.iter().enumerate() {
                    if j != i {
                        z += rational::int(cj.n as i64) * self.s(i, j);
                    }
                }
                z
            })
            .collect()
    }
}

/// `α_i, β_i, γ_i` and the valencies `z_i` for one matrix kind.
#[derive(Debug, Clone, PartialEq)]
pub struct TableValues {
    pub kind: MatrixKind,
    pub z: Vec<Rational>,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub gamma: Vec<Rational>,
}

impl TableValues {
    pub fn compute(spec: &JoinSpec) -> Result<Self> {
        let z = spec.z();
        let k = spec.k();
        let (mut alpha, mut beta, mut gamma) = (Vec::with_capacity(k), Vec::with_capacity(k), Vec::with_capacity(k));
        for i in 0..k {
            let sii = spec.s(i, i);
            let (a, g, b) = match spec.kind {
                MatrixKind::Adjacency => (Rational::one(), sii.clone(), -sii),
                MatrixKind::Laplacian => (-Rational::one(), -sii.clone(), &z[i] + &sii),
                MatrixKind::NormalizedLaplacian => {
                    if !z[i].is_positive() {
                        let first: usize = spec.constituents[..i].iter().map(|c| c.n).sum::<usize>() + 1;
                        return Err(Error::IsolatedVertex(first));
                    }
                    let a = -z[i].recip();
                    let g = &a * &sii;
                    (a, g.clone(), Rational::one() - g)
                }
            };
            alpha.push(a);
            gamma.push(g);
            beta.push(b);
        }
        Ok(TableValues { kind: spec.kind, z, alpha, beta, gamma })
    }

    /// Off-diagonal factor used by the exact quotient; for the normalized kind this
    /// is the row scaling `-1/z_i` of the similar matrix `D^{-1} L`.
    pub fn delta_exact(&self, i: usize, _j: usize) -> Rational {
        match self.kind {
            MatrixKind::Adjacency => Rational::one(),
            MatrixKind::Laplacian => -Rational::one(),
            MatrixKind::NormalizedLaplacian => -self.z[i].recip(),
        }
    }

    /// `δ_ij` of the symmetric matrices.
    pub fn delta(&self, i: usize, j: usize) -> f64 {
        match self.kind {
            MatrixKind::Adjacency => 1.0,
            MatrixKind::Laplacian => -1.0,
            MatrixKind::NormalizedLaplacian => {
                -1.0 / (rational::to_f64(&self.z[i]) * rational::to_f64(&self.z[j])).sqrt()
            }
        }
    }

    /// Diagonal entry `r_i α_i + β_i + n_i γ_i` of the quotient.
    pub fn perron(&self, spec: &JoinSpec, i: usize) -> Rational {
        let c = &spec.constituents[i];
        &c.r * &self.alpha[i] + &self.beta[i] + rational::int(c.n as i64) * &self.gamma[i]
    }

    /// Exact quotient matrix; similar to [`TableValues::quotient_float`].
    pub fn quotient(&self, spec: &JoinSpec) -> RatMatrix {
        let k = spec.k();
        RatMatrix::from_fn(k, k, |i, j| {
            if i == j {
                self.perron(spec, i)
            } else {
                rational::int(spec.constituents[j].n as i64) * self.delta_exact(i, j) * spec.s(i, j)
            }
        })
    }

    /// Quotient with the symmetric `δ_ij`.
    pub fn quotient_float(&self, spec: &JoinSpec) -> FMatrix {
        let k = spec.k();
        FMatrix::from_fn(k, k, |i, j| {
            if i == j {
                rational::to_f64(&self.perron(spec, i))
            } else {
                spec.constituents[j].n as f64 * self.delta(i, j) * rational::to_f64(&spec.s(i, j))
            }
        })
    }
}

/// Factors `x - α_i λ - β_i` over the non-perron adjacency eigenvalues `λ` of
/// every constituent, times the characteristic polynomial of the quotient.
pub fn join_charpoly(spec: &JoinSpec) -> Result<CharPolyFactored> {
    let tv = TableValues::compute(spec)?;
    let k = spec.k();
    let mut blocks = Vec::with_capacity(k);
    for (i, c) in spec.constituents.iter().enumerate() {
        let a = tv.perron(spec, i);
        let rest = c.non_perron()?.affine_image(&tv.alpha[i], &tv.beta[i]);
        blocks.push((&rest * &RationalPoly::linear(&a), a, c.n));
    }
    let rho =
        RatMatrix::from_fn(k, k, |i, j| if i == j { Rational::zero() } else { tv.delta_exact(i, j) * spec.s(i, j) });
    block_spectrum(&blocks, &rho)
}

/// [`join_charpoly`] for families of a single cardinality.
pub fn uniform_join_charpoly(spec: &JoinSpec) -> Result<CharPolyFactored> {
    let cards = spec.counts.cardinalities();
    if cards.len() > 1 {
        return Err(Error::InvalidParameter(format!("counts use several cardinalities {cards:?}")));
    }
    join_charpoly(spec)
}

/// Sums per-edge counts of a backbone join: `per_edge[x]` is over the classes of
/// `h.edges()[x]` in order.
pub fn backbone_join_charpoly(
    h: &Hypergraph,
    constituents: Vec<ConstituentSummary>,
    per_edge: &[ConstantCounts],
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let counts = aggregate(h, constituents.len(), per_edge)?;
    join_charpoly(&JoinSpec::new(constituents, counts, w.clone(), kind)?)
}

fn aggregate(h: &Hypergraph, k: usize, per_edge: &[ConstantCounts]) -> Result<ConstantCounts> {
    if h.n() != k {
        return Err(Error::DimensionMismatch(format!("backbone on {} vertices, {k} constituents", h.n())));
    }
    if per_edge.len() != h.edge_count() {
        return Err(Error::DimensionMismatch(format!("{} count tables for {} edges", per_edge.len(), h.edge_count())));
    }
    let mut total = ConstantCounts::new(k);
    for (e, counts) in h.edges().iter().zip(per_edge) {
        if counts.k != e.len() {
            return Err(Error::DimensionMismatch(format!(
                "counts over {} classes for edge {:?}",
                counts.k, e.vertices
            )));
        }
        for (&(a, b, c), &v) in &counts.counts {
            total.add(e.vertices[a] - 1, e.vertices[b] - 1, c, v);
        }
    }
    Ok(total)
}

/// Spec of a backbone join from its per-edge families.
pub fn backbone_spec(
    h: &Hypergraph,
    gs: &[Hypergraph],
    families: &[EdgeFamily],
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<JoinSpec> {
    let per_edge = families.iter().map(|f| f.cross_counts().constant()).collect::<Result<Vec<_>>>()?;
    let constituents = gs.iter().map(ConstituentSummary::of).collect::<Result<Vec<_>>>()?;
    for (e, f) in h.edges().iter().zip(families) {
        let want: Vec<usize> = e.vertices.iter().map(|&i| gs.get(i - 1).map_or(0, Hypergraph::n)).collect();
        if f.classes().sizes() != want {
            return Err(Error::DimensionMismatch(format!(
                "family sizes {:?} for edge {:?}",
                f.classes().sizes(),
                e.vertices
            )));
        }
    }
    let counts = aggregate(h, gs.len(), &per_edge)?;
    JoinSpec::new(constituents, counts, w.clone(), kind)
}

/// `h[h2]` through the backbone formula with counts `m^{|e|-2}`.
pub fn lexicographic_charpoly(
    h: &Hypergraph,
    h2: &Hypergraph,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let summary = ConstituentSummary::of(h2)?;
    let m = h2.n() as u64;
    let per_edge: Vec<ConstantCounts> = h
        .edges()
        .iter()
        .map(|e| {
            let size = e.len();
            let mut counts = ConstantCounts::new(size);
            if size >= 2 {
                for a in 0..size {
                    for b in a + 1..size {
                        counts.set(a, b, size, m.pow(size as u32 - 2));
                    }
                }
            }
            counts
        })
        .collect();
    backbone_join_charpoly(h, vec![summary; h.n()], &per_edge, w, kind)
}

/// Adjacency of `h[h2]` for a `u`-uniform `h`: `Π_λ (x - λ)^n · Π_μ (x - r - μ m^{u-1} w_u)`
/// with `λ` the non-perron adjacency eigenvalues of `h2` and `μ` those of `h`
/// with unit edge weights.
pub fn lexicographic_uniform_charpoly(h: &Hypergraph, h2: &Hypergraph, w: &WeightTable) -> Result<CharPolyFactored> {
    let u = h.is_uniform().ok_or_else(|| Error::InvalidParameter("backbone is not uniform".into()))?;
    let summary = ConstituentSummary::of(h2)?;
    let unit = h.reweighted(&WeightTable::ones());
    let mu = matrices::exact_charpoly(&unit, MatrixKind::Adjacency)?;
    let scale = w.get(u) * rational::int(h2.n() as i64).pow(u as i32 - 1);
    let mut out = CharPolyFactored::new();
    out.push(summary.non_perron()?, h.n());
    out.push(mu.affine_image(&scale, &summary.r), 1);
    Ok(out)
}

/// Complete strong partite hypergraph: edgeless constituents and counts
/// `q_ij^(c)` for `c = m`, or every `c` in `2..=k` when `m` is `None`.
pub fn strong_partite_charpoly(
    sizes: &[usize],
    m: Option<usize>,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let k = sizes.len();
    let cards: Vec<usize> = match m {
        Some(m) if m < 2 || m > k => return Err(Error::InvalidParameter(format!("m = {m} outside 2..={k}"))),
        Some(m) => vec![m],
        None => (2..=k).collect(),
    };
    let mut counts = ConstantCounts::new(k);
    for i in 0..k {
        for j in i + 1..k {
            for &c in &cards {
                counts.set(i, j, c, to_u64(counting::q_cross(sizes, i + 1, j + 1, c)?)?);
            }
        }
    }
    let constituents = sizes.iter().map(|&n| ConstituentSummary::edgeless(n)).collect();
    join_charpoly(&JoinSpec::new(constituents, counts, w.clone(), kind)?)
}

fn to_u64(v: num_bigint::BigInt) -> Result<u64> {
    u64::try_from(v).map_err(|e| Error::InvalidParameter(format!("count too large: {e}")))
}

/// Named joins of edgeless or regular constituents through spanning families.
#[derive(Debug, Clone, PartialEq)]
pub enum CatalogRow {
    /// Complete `m`-uniform `m`-partite hypergraph, `m = sizes.len()`.
    CompletePartite { sizes: Vec<usize> },
    /// Complete `m`-uniform weak `k`-partite hypergraph, `k = sizes.len() <= m`.
    WeakUniformPartite { sizes: Vec<usize>, m: usize },
    /// Complete weak `k`-partite hypergraph: every subset meeting all classes.
    WeakPartite { sizes: Vec<usize> },
    /// Join of regular hypergraphs over the spanning family with cardinalities `b`.
    Join { constituents: Vec<Hypergraph>, b: BTreeSet<usize> },
    /// Join of regular hypergraphs over the spanning `m`-subsets.
    UniformJoin { constituents: Vec<Hypergraph>, m: usize },
}

impl CatalogRow {
    fn sizes(&self) -> Vec<usize> {
        match self {
            CatalogRow::CompletePartite { sizes }
            | CatalogRow::WeakUniformPartite { sizes, .. }
            | CatalogRow::WeakPartite { sizes } => sizes.clone(),
            CatalogRow::Join { constituents, .. } | CatalogRow::UniformJoin { constituents, .. } => {
                constituents.iter().map(Hypergraph::n).collect()
            }
        }
    }

    fn cardinalities(&self) -> Result<BTreeSet<usize>> {
        let sizes = self.sizes();
        let (k, total) = (sizes.len(), sizes.iter().sum::<usize>());
        let b: BTreeSet<usize> = match self {
            CatalogRow::CompletePartite { .. } => [k].into(),
            CatalogRow::WeakUniformPartite { m, .. } | CatalogRow::UniformJoin { m, .. } => [*m].into(),
            CatalogRow::WeakPartite { .. } => (k.max(2)..=total).collect(),
            CatalogRow::Join { b, .. } => b.clone(),
        };
        if k < 2 {
            return Err(Error::InvalidParameter("need at least two classes".into()));
        }
        if let Some(c) = b.iter().find(|&&c| c < k || c > total) {
            return Err(Error::InvalidParameter(format!("cardinality {c} outside {k}..={total}")));
        }
        Ok(b)
    }

    fn constituents(&self) -> Vec<Hypergraph> {
        match self {
            CatalogRow::Join { constituents, .. } | CatalogRow::UniformJoin { constituents, .. } => {
                constituents.clone()
            }
            _ => self.sizes().into_iter().map(Hypergraph::edgeless).collect(),
        }
    }

    /// The hypergraph itself.
    pub fn build(&self, w: &WeightTable) -> Result<Hypergraph> {
        let b = self.cardinalities()?;
        let f = EdgeFamily::b_spanning(ClassSequence::consecutive(&self.sizes()), &b)?;
        crate::tensorjoin::tensor_join(&self.constituents(), &f, w)
    }

    /// Join spec with the row's closed-form counts.
    pub fn spec(&self, w: &WeightTable, kind: MatrixKind) -> Result<JoinSpec> {
        let b = self.cardinalities()?;
        let sizes = self.sizes();
        let k = sizes.len();
        let mut counts = ConstantCounts::new(k);
        for i in 0..k {
            for j in i..k {
                for &c in &b {
                    let v = match self {
                        CatalogRow::CompletePartite { .. } if i == j => num_bigint::BigInt::zero(),
                        CatalogRow::CompletePartite { .. } => sizes
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != i && p != j)
                            .map(|(_, &n)| n)
                            .product::<usize>()
                            .into(),
                        _ if i == j && sizes[i] < 2 => num_bigint::BigInt::zero(),
                        _ => counting::n_cross(&sizes, i + 1, j + 1, c)?,
                    };
                    counts.set(i, j, c, to_u64(v)?);
                }
            }
        }
        let constituents = match self {
            CatalogRow::Join { constituents, .. } | CatalogRow::UniformJoin { constituents, .. } => {
                constituents.iter().map(ConstituentSummary::of).collect::<Result<Vec<_>>>()?
            }
            _ => sizes.iter().map(|&n| ConstituentSummary::edgeless(n)).collect(),
        };
        JoinSpec::new(constituents, counts, w.clone(), kind)
    }
}

pub fn catalog_charpoly(row: &CatalogRow, w: &WeightTable, kind: MatrixKind) -> Result<CharPolyFactored> {
    join_charpoly(&row.spec(w, kind)?)
}
