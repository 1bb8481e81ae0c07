//! Named constructions: two-copy joins, k-copy operations, lexicographic
//! products and strong partite hypergraphs.

use std::collections::BTreeSet;

use super::{backbone_join, tensor_join, ClassSequence, EdgeFamily};
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, WeightTable};
use crate::rational;
use crate::subsets::combinations;

/// Constituent derived from a base hypergraph `h` for a two-copy join. Every
/// edge of the derived hypergraph carries `w_|e|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CopyKind {
    /// `h` itself.
    Base,
    /// Complement within the cardinalities used by `h`.
    Complement,
    /// `K_n`, every subset of size at least 2.
    Complete,
    /// `K_n` complement: no edges.
    Empty,
    /// Total complement: subsets of size at least 2 missing from `h`.
    TotalComplement,
}

impl CopyKind {
    pub const ALL: [CopyKind; 5] =
        [CopyKind::Base, CopyKind::Complement, CopyKind::Complete, CopyKind::Empty, CopyKind::TotalComplement];

    pub fn build(self, h: &Hypergraph, w: &WeightTable) -> Result<Hypergraph> {
        h.ensure_simple()?;
        match self {
            CopyKind::Base => Ok(h.reweighted(w)),
            CopyKind::Complement => h.s_complement(w),
            CopyKind::Complete => Hypergraph::complete(h.n(), w),
            CopyKind::Empty => Ok(Hypergraph::edgeless(h.n())),
            CopyKind::TotalComplement => h.total_complement(w),
        }
    }
}

/// Family joining two copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwoCopyFamily {
    Aligned(usize),
    Identity,
    Full,
    FullMinusAligned(usize),
    FullMinusIdentity,
}

impl TwoCopyFamily {
    pub fn build(self, classes: ClassSequence) -> Result<EdgeFamily> {
        match self {
            TwoCopyFamily::Aligned(r) => EdgeFamily::aligned(classes, r),
            TwoCopyFamily::Identity => EdgeFamily::identity(classes),
            TwoCopyFamily::Full => EdgeFamily::full(classes),
            TwoCopyFamily::FullMinusAligned(r) => {
                EdgeFamily::full(classes.clone())?.minus(&EdgeFamily::aligned(classes, r)?)
            }
            TwoCopyFamily::FullMinusIdentity => {
                EdgeFamily::full(classes.clone())?.minus(&EdgeFamily::identity(classes)?)
            }
        }
    }
}

/// `G1 v_T G2` with `G1 = g1(h)`, `G2 = g2(h)`.
pub fn two_copy_join(
    h: &Hypergraph,
    g1: CopyKind,
    g2: CopyKind,
    t: TwoCopyFamily,
    w: &WeightTable,
) -> Result<Hypergraph> {
    let n = h.n();
    let gs = [g1.build(h, w)?, g2.build(h, w)?];
    let f = t.build(ClassSequence::consecutive(&[n, n]))?;
    tensor_join(&gs, &f, w)
}

/// Operation applied to `k` copies of a hypergraph: for every set `S` of `l`
/// copies a family over those copies is added (families of different `S` are
/// combined as a multiset).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KCopyOp {
    /// Aligned `r`-subsets across the `l` copies.
    Mirror { l: usize, r: usize },
    /// All cross subsets of the `l` copies.
    JoinNeighbourhood { l: usize },
    /// All cross subsets except the aligned `r`-subsets.
    VcNeighbourhood { l: usize, r: usize },
}

impl KCopyOp {
    pub fn l(self) -> usize {
        match self {
            KCopyOp::Mirror { l, .. } | KCopyOp::JoinNeighbourhood { l } | KCopyOp::VcNeighbourhood { l, .. } => l,
        }
    }

    fn family(self, classes: ClassSequence) -> Result<EdgeFamily> {
        match self {
            KCopyOp::Mirror { r, .. } => EdgeFamily::aligned(classes, r),
            KCopyOp::JoinNeighbourhood { .. } => EdgeFamily::full(classes),
            KCopyOp::VcNeighbourhood { r, .. } => {
                EdgeFamily::full(classes.clone())?.minus(&EdgeFamily::aligned(classes, r)?)
            }
        }
    }
}

pub fn k_copy_join(h: &Hypergraph, k: usize, op: KCopyOp, w: &WeightTable) -> Result<Hypergraph> {
    let n = h.n();
    let l = op.l();
    if k < 2 || l < 2 || l > k {
        return Err(Error::InvalidParameter(format!("need 2 <= l <= k, got l = {l}, k = {k}")));
    }
    if let KCopyOp::Mirror { r, .. } | KCopyOp::VcNeighbourhood { r, .. } = op {
        if r < 1 || r > n {
            return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
        }
    }
    let copies = vec![h.clone(); k];
    let (union, offsets) = Hypergraph::disjoint_union(&copies);
    let mut extra = Vec::new();
    let idx: Vec<usize> = (0..k).collect();
    for s in combinations(&idx, l) {
        let classes = ClassSequence::new(s.iter().map(|&i| (offsets[i] + 1..=offsets[i] + n).collect()).collect())?;
        let f = op.family(classes)?;
        extra.extend(f.members().map(|m| Edge { vertices: m.clone(), weight: w.get(m.len()).clone() }));
    }
    Ok(union.with_edges(extra))
}

/// `H[H']`: backbone `h`, every vertex replaced by a copy of `h2`, and for every
/// edge `e` of `h` each choice of one vertex per copy in `e` becomes an edge.
pub fn lexicographic_product(h: &Hypergraph, h2: &Hypergraph, w: &WeightTable) -> Result<Hypergraph> {
    let (gs, families) = lexicographic_parts(h, h2)?;
    backbone_join(h, &gs, &families, w)
}

pub(crate) fn lexicographic_parts(h: &Hypergraph, h2: &Hypergraph) -> Result<(Vec<Hypergraph>, Vec<EdgeFamily>)> {
    let m = h2.n();
    let gs = vec![h2.clone(); h.n()];
    let families = h
        .edges()
        .iter()
        .map(|e| {
            let b: BTreeSet<usize> = [e.len()].into();
            EdgeFamily::b_spanning(ClassSequence::consecutive(&vec![m; e.len()]), &b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((gs, families))
}

/// Complete strong partite hypergraph on classes of the given sizes: with
/// `m = Some(m)` every choice of one vertex from each of `m` distinct classes is an
/// edge; with `None` every choice over at least two classes is.
pub fn strong_partite(sizes: &[usize], m: Option<usize>, w: &WeightTable) -> Result<Hypergraph> {
    let (backbone, gs, families) = strong_partite_parts(sizes, m)?;
    backbone_join(&backbone, &gs, &families, w)
}

pub(crate) fn strong_partite_parts(
    sizes: &[usize],
    m: Option<usize>,
) -> Result<(Hypergraph, Vec<Hypergraph>, Vec<EdgeFamily>)> {
    let k = sizes.len();
    let backbone = match m {
        Some(m) => {
            if m < 2 || m > k {
                return Err(Error::InvalidParameter(format!("m = {m} outside 2..={k}")));
            }
            Hypergraph::complete_uniform(k, m, rational::int(1))?
        }
        None => Hypergraph::complete(k, &WeightTable::ones())?,
    };
    let gs: Vec<Hypergraph> = sizes.iter().map(|&n| Hypergraph::edgeless(n)).collect();
    let families = backbone
        .edges()
        .iter()
        .map(|e| {
            let part: Vec<usize> = e.vertices.iter().map(|&i| sizes[i - 1]).collect();
            EdgeFamily::b_spanning(ClassSequence::consecutive(&part), &[e.len()].into())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((backbone, gs, families))
}
