use std::collections::BTreeMap;

use super::{ClassSequence, EdgeFamily};
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, WeightTable};
use crate::rational::{self, Rational};

/// Vertex `class(i)[l]` of `f` becomes `offsets[i] + l + 1`.
fn global_id(f: &EdgeFamily, offsets: &[usize], v: usize) -> usize {
    let (i, l) = f.classes().locate(v).expect("validated member");
    offsets[i] + l + 1
}

fn check_sizes(gs: &[Hypergraph], classes: &ClassSequence) -> Result<()> {
    let sizes: Vec<usize> = gs.iter().map(Hypergraph::n).collect();
    if sizes != classes.sizes() {
        return Err(Error::DimensionMismatch(format!(
            "constituent sizes {sizes:?} differ from class sizes {:?}",
            classes.sizes()
        )));
    }
    Ok(())
}

/// Disjoint union of `gs` plus one edge of weight `w_|S|` per member `S` of `f`.
///
/// Class `i` of `f` is matched to `gs[i]` position by position.
pub fn tensor_join(gs: &[Hypergraph], f: &EdgeFamily, w: &WeightTable) -> Result<Hypergraph> {
    check_sizes(gs, f.classes())?;
    let (union, offsets) = Hypergraph::disjoint_union(gs);
    let extra = f.members().map(|m| {
        let mut vs: Vec<usize> = m.iter().map(|&v| global_id(f, &offsets, v)).collect();
        vs.sort_unstable();
        Edge { vertices: vs, weight: w.get(m.len()).clone() }
    });
    Ok(union.with_edges(extra))
}

/// Per-edge join over a backbone `h` on `[k]`: `families[x]` belongs to
/// `h.edges()[x]`, and its class `t` is matched to constituent `e[t]`.
pub fn backbone_join(
    h: &Hypergraph,
    gs: &[Hypergraph],
    families: &[EdgeFamily],
    w: &WeightTable,
) -> Result<Hypergraph> {
    check_backbone(h, gs, families)?;
    let (union, offsets) = Hypergraph::disjoint_union(gs);
    let mut extra = Vec::new();
    for (e, f) in h.edges().iter().zip(families) {
        let local: Vec<usize> = e.vertices.iter().map(|&i| offsets[i - 1]).collect();
        for m in f.members() {
            if f.touched(m).len() != e.len() {
                return Err(Error::MemberMissesClass(m.clone()));
            }
            let mut vs: Vec<usize> = m.iter().map(|&v| global_id(f, &local, v)).collect();
            vs.sort_unstable();
            extra.push(Edge { vertices: vs, weight: w.get(m.len()).clone() });
        }
    }
    Ok(union.with_edges(extra))
}

fn check_backbone(h: &Hypergraph, gs: &[Hypergraph], families: &[EdgeFamily]) -> Result<()> {
    if h.n() != gs.len() {
        return Err(Error::DimensionMismatch(format!("backbone on {} vertices, {} constituents", h.n(), gs.len())));
    }
    if families.len() != h.edge_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} families for {} backbone edges",
            families.len(),
            h.edge_count()
        )));
    }
    for (e, f) in h.edges().iter().zip(families) {
        let want: Vec<usize> = e.vertices.iter().map(|&i| gs[i - 1].n()).collect();
        if f.classes().sizes() != want {
            return Err(Error::DimensionMismatch(format!(
                "family for backbone edge {:?} has class sizes {:?}, expected {want:?}",
                e.vertices,
                f.classes().sizes()
            )));
        }
    }
    Ok(())
}

/// Merges the per-edge families of a backbone join into one family over
/// `ClassSequence::consecutive(sizes)`.
pub fn flatten(h: &Hypergraph, sizes: &[usize], families: &[EdgeFamily]) -> Result<EdgeFamily> {
    let gs: Vec<Hypergraph> = sizes.iter().map(|&n| Hypergraph::edgeless(n)).collect();
    check_backbone(h, &gs, families)?;
    let classes = ClassSequence::consecutive(sizes);
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        offsets.push(acc);
        acc += s;
    }
    let mut members = Vec::new();
    for (e, f) in h.edges().iter().zip(families) {
        let local: Vec<usize> = e.vertices.iter().map(|&i| offsets[i - 1]).collect();
        for m in f.members() {
            if f.touched(m).len() != e.len() {
                return Err(Error::MemberMissesClass(m.clone()));
            }
            members.push(m.iter().map(|&v| global_id(f, &local, v)).collect());
        }
    }
    EdgeFamily::explicit(classes.allow_huge(), members)
}

/// Splits a family by the set of classes (0-based, sorted) each member touches.
/// Each part keeps the full class sequence.
pub fn subset_families(f: &EdgeFamily) -> BTreeMap<Vec<usize>, EdgeFamily> {
    let mut parts: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for m in f.members() {
        parts.entry(f.touched(m)).or_default().push(m.clone());
    }
    parts
        .into_iter()
        .map(|(s, ms)| (s, EdgeFamily::explicit(f.classes().clone(), ms).expect("subfamily of a valid family")))
        .collect()
}

/// Backbone on `[k]` with one edge per touched class set, and the matching
/// per-edge families over the touched classes only.
pub fn split_by_touched(f: &EdgeFamily) -> Result<(Hypergraph, Vec<EdgeFamily>)> {
    let k = f.classes().k();
    let parts = subset_families(f);
    let h = Hypergraph::new(k, parts.keys().map(|s| (s.iter().map(|i| i + 1).collect(), rational::int(1))))?;
    let mut families = Vec::new();
    for (s, part) in parts {
        let local = ClassSequence::new(s.iter().map(|&i| f.classes().class(i).to_vec()).collect())?
            .with_limit(f.classes().member_limit());
        families.push(EdgeFamily::explicit(local, part.members().cloned())?);
    }
    Ok((h, families))
}

/// Result of viewing a hypergraph as a tensor join over a vertex partition.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// Induced constituents; vertex `t + 1` of constituent `i` is `partition[i][t]`.
    pub constituents: Vec<Hypergraph>,
    /// Cross edges, over the partition as class sequence (original vertex ids).
    pub family: EdgeFamily,
    /// Weights of the cross edges per cardinality (0 elsewhere).
    pub weights: WeightTable,
    partition: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    /// Joins the parts back together and restores the original vertex ids.
    pub fn reassemble(&self) -> Result<Hypergraph> {
        let joined = tensor_join(&self.constituents, &self.family, &self.weights)?;
        let mut perm = vec![0; joined.n()];
        let mut next = 0;
        for part in &self.partition {
            for &v in part {
                perm[next] = v - 1;
                next += 1;
            }
        }
        Ok(joined.permuted(&perm))
    }
}

/// Splits `h` into the subhypergraphs induced by `partition` plus the family of
/// cross edges. Cross edges of one cardinality must share one weight.
pub fn decompose(h: &Hypergraph, partition: &[Vec<usize>]) -> Result<Decomposition> {
    let classes = ClassSequence::new(partition.to_vec())?;
    let n = h.n();
    let covered: usize = partition.iter().map(Vec::len).sum();
    if let Some(v) = classes.vertices().find(|&v| v > n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if covered != n {
        return Err(Error::InvalidParameter(format!("partition covers {covered} of {n} vertices")));
    }
    let constituents = partition.iter().map(|part| h.induced(part)).collect::<Result<Vec<_>>>()?;
    let mut weights: BTreeMap<usize, Rational> = BTreeMap::new();
    let mut members = Vec::new();
    for e in h.edges() {
        let first = classes.locate(e.vertices[0]).map(|(i, _)| i);
        if e.vertices.iter().all(|&v| classes.locate(v).map(|(i, _)| i) == first) {
            continue;
        }
        match weights.get(&e.len()) {
            Some(w) if *w != e.weight => return Err(Error::UnrepresentableWeights(e.len())),
            Some(_) => {}
            None => {
                weights.insert(e.len(), e.weight.clone());
            }
        }
        members.push(e.vertices.clone());
    }
    let count = members.len();
    let family = EdgeFamily::explicit(classes.allow_huge(), members)?;
    if family.len() != count {
        let dup = h
            .edges()
            .windows(2)
            .find(|p| p[0].vertices == p[1].vertices)
            .map(|p| p[0].vertices.clone())
            .unwrap_or_default();
        return Err(Error::DuplicateEdge(dup));
    }
    let mut table = WeightTable::zeros();
    for (c, w) in weights {
        table = table.with(c, w)?;
    }
    Ok(Decomposition { constituents, family, weights: table, partition: partition.to_vec() })
}

/// Cross-pair family from 0-1 matrices: `matrices[&(i, j)]` (0-based, `i < j`) has
/// `n_i` rows and `n_j` columns; entry `(r, t)` set puts `{u_{i,r}, u_{j,t}}` in the family.
pub fn mjoin_convert(sizes: &[usize], matrices: &BTreeMap<(usize, usize), Vec<Vec<bool>>>) -> Result<EdgeFamily> {
    let classes = ClassSequence::consecutive(sizes);
    let mut members = Vec::new();
    for (&(i, j), m) in matrices {
        if i >= j || j >= sizes.len() {
            return Err(Error::InvalidParameter(format!("matrix index ({i}, {j}) must satisfy i < j < k")));
        }
        if m.len() != sizes[i] || m.iter().any(|row| row.len() != sizes[j]) {
            return Err(Error::DimensionMismatch(format!("matrix ({i}, {j}) must be {}x{}", sizes[i], sizes[j])));
        }
        for (r, row) in m.iter().enumerate() {
            for (t, &set) in row.iter().enumerate() {
                if set {
                    members.push(vec![classes.class(i)[r], classes.class(j)[t]]);
                }
            }
        }
    }
    EdgeFamily::explicit(classes, members)
}

/// Inverse of [`mjoin_convert`]; every pair `i < j` gets a matrix.
pub fn family_to_mjoin(f: &EdgeFamily) -> Result<BTreeMap<(usize, usize), Vec<Vec<bool>>>> {
    let sizes = f.classes().sizes();
    let k = sizes.len();
    let mut out = BTreeMap::new();
    for i in 0..k {
        for j in i + 1..k {
            out.insert((i, j), vec![vec![false; sizes[j]]; sizes[i]]);
        }
    }
    for m in f.members() {
        if m.len() != 2 {
            return Err(Error::InvalidParameter(format!("member {m:?} has cardinality {}, expected 2", m.len())));
        }
        let (a, b) = (f.classes().locate(m[0]).unwrap(), f.classes().locate(m[1]).unwrap());
        let ((i, r), (j, t)) = if a.0 < b.0 { (a, b) } else { (b, a) };
        out.get_mut(&(i, j)).unwrap()[r][t] = true;
    }
    Ok(out)
}
